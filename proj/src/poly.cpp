#include "catff/poly.hpp"

#include <algorithm>
#include <cctype>

#include "catff/kernels.hpp"

namespace catff {

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::from_coeffs(const Fp& field, std::vector<u32> coeffs) {
  Poly r(field);
  for (auto& c : coeffs) c %= field.p();
  r.coeffs_ = std::move(coeffs);
  r.normalize();
  return r;
}

Poly Poly::constant(const Fp& field, u32 c) {
  return from_coeffs(field, {c});
}

Poly Poly::variable(const Fp& field) { return from_coeffs(field, {0, 1}); }

Poly Poly::monomial(const Fp& field, u32 coeff, std::size_t exp) {
  std::vector<u32> cs(exp + 1, 0);
  cs[exp] = coeff;
  return from_coeffs(field, std::move(cs));
}

Poly Poly::monic() const {
  if (is_zero() || lead() == 1) return *this;
  Poly r(field_);
  r.coeffs_.resize(coeffs_.size());
  kernels::scale_mod(r.coeffs_.data(), coeffs_.data(), coeffs_.size(),
                     field_.inv(lead()), field_.p());
  r.normalize();
  return r;
}

Poly operator+(const Poly& a, const Poly& b) {
  a.field_.require_same(b.field_);
  const Poly& lo = a.coeffs_.size() <= b.coeffs_.size() ? a : b;
  const Poly& hi = a.coeffs_.size() <= b.coeffs_.size() ? b : a;
  Poly r(a.field_);
  r.coeffs_ = hi.coeffs_;
  kernels::add_mod(r.coeffs_.data(), r.coeffs_.data(), lo.coeffs_.data(),
                   lo.coeffs_.size(), a.field_.p());
  r.normalize();
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  a.field_.require_same(b.field_);
  Poly r(a.field_);
  std::size_t n = std::max(a.coeffs_.size(), b.coeffs_.size());
  std::size_t common = std::min(a.coeffs_.size(), b.coeffs_.size());
  r.coeffs_.resize(n);
  kernels::sub_mod(r.coeffs_.data(), a.coeffs_.data(), b.coeffs_.data(),
                   common, a.field_.p());
  if (a.coeffs_.size() > common) {
    std::copy(a.coeffs_.begin() + common, a.coeffs_.end(),
              r.coeffs_.begin() + common);
  } else if (b.coeffs_.size() > common) {
    kernels::neg_mod(r.coeffs_.data() + common, b.coeffs_.data() + common,
                     b.coeffs_.size() - common, a.field_.p());
  }
  r.normalize();
  return r;
}

Poly operator-(const Poly& a) {
  Poly r(a.field_);
  r.coeffs_.resize(a.coeffs_.size());
  kernels::neg_mod(r.coeffs_.data(), a.coeffs_.data(), a.coeffs_.size(),
                   a.field_.p());
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.field_.require_same(b.field_);
  if (a.is_zero() || b.is_zero()) return Poly(a.field_);
  Poly r(a.field_);
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    kernels::axpy_mod(r.coeffs_.data() + i, b.coeffs_.data(),
                      b.coeffs_.size(), a.coeffs_[i], a.field_.p());
  }
  r.normalize();
  return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& a, const Poly& b) {
  a.field_.require_same(b.field_);
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.coeffs_.size() < b.coeffs_.size()) return {Poly(a.field_), a};

  const Fp& fp = a.field_;
  u32 lead_inv = fp.inv(b.lead());
  std::vector<u32> rem = a.coeffs_;
  std::size_t qlen = a.coeffs_.size() - b.coeffs_.size() + 1;
  std::vector<u32> quot(qlen, 0);
  std::size_t db = b.coeffs_.size() - 1;  // deg b

  for (std::size_t k = qlen; k-- > 0;) {
    u32 q = fp.mul(rem[k + db], lead_inv);
    if (q == 0) continue;
    quot[k] = q;
    // subtract q * b * z^k; db coefficients plus the leading one it zeroes
    kernels::submul_mod(rem.data() + k, b.coeffs_.data(), db, q, fp.p());
    rem[k + db] = 0;
  }

  Poly qp(fp), rp(fp);
  qp.coeffs_ = std::move(quot);
  qp.normalize();
  rem.resize(db);
  rp.coeffs_ = std::move(rem);
  rp.normalize();
  return {std::move(qp), std::move(rp)};
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
  a.field_.require_same(b.field_);
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

Poly Poly::pow(u64 e) const {
  Poly result = Poly::constant(field_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    if (e >>= 1) base = base * base;
  }
  return result;
}

Poly Poly::derivative() const {
  if (coeffs_.size() <= 1) return Poly(field_);
  std::vector<u32> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = field_.mul(coeffs_[i], field_.reduce(i));
  }
  return from_coeffs(field_, std::move(out));
}

u32 Poly::eval(u32 x) const {
  u32 acc = 0;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    acc = field_.add(field_.mul(acc, x), coeffs_[i]);
  }
  return acc;
}

std::optional<Poly> Poly::pth_root() const {
  const u32 p = field_.p();
  if (is_zero()) return Poly(field_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] != 0 && i % p != 0) return std::nullopt;
  }
  std::vector<u32> out((coeffs_.size() - 1) / p + 1);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = coeffs_[i * p];  // c^(1/p) = c in F_p
  }
  return from_coeffs(field_, std::move(out));
}

int Poly::compare(const Poly& a, const Poly& b) {
  if (a.coeffs_.size() != b.coeffs_.size()) {
    return a.coeffs_.size() < b.coeffs_.size() ? -1 : 1;
  }
  for (std::size_t i = a.coeffs_.size(); i-- > 0;) {
    if (a.coeffs_[i] != b.coeffs_[i]) return a.coeffs_[i] < b.coeffs_[i] ? -1 : 1;
  }
  return 0;
}

Poly powmod(const Poly& base, u64 e, const Poly& m) {
  if (m.is_constant()) throw DomainError("powmod modulus must be nonconstant");
  Poly result = Poly::constant(base.field(), 1);
  Poly b = base % m;
  while (e > 0) {
    if (e & 1) result = result * b % m;
    if (e >>= 1) b = b * b % m;
  }
  return result;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw DomainError("radical of the zero polynomial");
  Poly g = f.monic();
  if (g.is_constant()) return Poly::constant(f.field(), 1);

  Poly d = g.derivative();
  if (d.is_zero()) {
    // g is in F_p[z^p], hence a perfect p-th power
    return squarefree_part(*g.pth_root());
  }
  Poly common = Poly::gcd(g, d);
  Poly w = g / common;  // distinct factors with multiplicity prime to p
  // strip every w-factor out of the cofactor; what survives is a p-th power
  Poly rest = common;
  for (;;) {
    Poly shared = Poly::gcd(rest, w);
    if (shared.is_constant()) break;
    rest = rest / shared;
  }
  if (rest.is_constant()) return w;
  return w * squarefree_part(*rest.pth_root());
}

namespace {

struct PolyParser {
  const Fp& fp;
  std::string_view text;
  std::size_t pos = 0;

  static constexpr std::size_t kMaxExponent = 1u << 20;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool peek_is(char c) {
    skip_ws();
    return pos < text.size() && text[pos] == c;
  }

  bool consume(char c) {
    if (peek_is(c)) {
      ++pos;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw DomainError("polynomial parse error at position " +
                      std::to_string(pos) + ": " + what);
  }

  u64 parse_unsigned(u64 modulus) {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    u64 value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<u64>(text[pos] - '0');
      if (modulus > 0) value %= modulus;
      if (modulus == 0 && value > kMaxExponent) fail("exponent too large");
      ++pos;
    }
    return value;
  }

  // one term: c*z^e | c*z | z^e | z | c
  std::pair<u32, std::size_t> parse_term() {
    skip_ws();
    if (pos >= text.size()) fail("expected a term");
    u32 coeff = 1;
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = static_cast<u32>(parse_unsigned(fp.p()));
      saw_coeff = true;
      if (!consume('*')) return {coeff, 0};
    }
    skip_ws();
    if (pos >= text.size() || text[pos] != 'z') {
      if (saw_coeff) fail("expected z after '*'");
      fail("expected a coefficient or z");
    }
    ++pos;
    std::size_t exp = 1;
    if (consume('^')) exp = static_cast<std::size_t>(parse_unsigned(0));
    return {coeff, exp};
  }

  Poly parse() {
    skip_ws();
    if (pos >= text.size()) fail("empty input");
    std::vector<u32> coeffs;
    bool negate = consume('-');
    for (;;) {
      auto [c, e] = parse_term();
      if (coeffs.size() <= e) coeffs.resize(e + 1, 0);
      u32 val = negate ? fp.neg(c) : c;
      coeffs[e] = fp.add(coeffs[e], val);
      skip_ws();
      if (consume('+')) {
        negate = false;
      } else if (consume('-')) {
        negate = true;
      } else {
        break;
      }
    }
    skip_ws();
    if (pos < text.size()) fail("unexpected trailing input");
    return Poly::from_coeffs(fp, std::move(coeffs));
  }
};

}  // namespace

Poly Poly::parse(const Fp& field, std::string_view text) {
  PolyParser parser{field, text};
  Poly result = parser.parse();
  parser.skip_ws();
  if (parser.pos != text.size()) parser.fail("trailing input");
  return result;
}

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    u32 c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c);
    } else {
      if (c != 1) {
        out += std::to_string(c);
        out += "*";
      }
      out += "z";
      if (i != 1) {
        out += "^";
        out += std::to_string(i);
      }
    }
  }
  return out;
}

}  // namespace catff
