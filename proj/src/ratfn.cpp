#include "catff/ratfn.hpp"

#include <cctype>
#include <utility>

namespace catff {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  num_.field().require_same(den_.field());
  if (den_.is_zero()) throw DomainError("zero denominator");
  if (num_.is_zero()) {
    den_ = Poly::constant(field(), 1);
    return;
  }
  Poly g = Poly::gcd(num_, den_);
  if (g.degree() > 0) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
  u32 lead = den_.lead();
  if (lead != 1) {
    Poly scale = Poly::constant(field(), field().inv(lead));
    num_ = num_ * scale;
    den_ = den_ * scale;
  }
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a) {
  return RatFn(-a.num_, a.den_, RatFn::reduced_tag{});
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) { return a * b.inverse(); }

RatFn RatFn::inverse() const {
  if (is_zero()) throw DomainError("division by zero");
  u32 lead = num_.lead();
  if (lead == 1) return RatFn(den_, num_, reduced_tag{});
  Poly scale = Poly::constant(field(), field().inv(lead));
  return RatFn(den_ * scale, num_ * scale, reduced_tag{});
}

RatFn RatFn::pow(i64 e) const {
  if (e < 0) {
    if (is_zero()) throw DomainError("zero to a negative power");
    return inverse().pow(-e);
  }
  if (e == 0) return RatFn::constant(field(), 1);
  if (is_zero()) return *this;
  // num and den are coprime, so their powers are already reduced
  return RatFn(num_.pow(static_cast<u64>(e)), den_.pow(static_cast<u64>(e)),
               reduced_tag{});
}

RatFn RatFn::derivative() const {
  return RatFn(num_.derivative() * den_ - num_ * den_.derivative(),
               den_ * den_);
}

int RatFn::compare(const RatFn& a, const RatFn& b) {
  int ha = a.height(), hb = b.height();
  if (ha != hb) return ha < hb ? -1 : 1;
  if (int c = Poly::compare(a.num_, b.num_); c != 0) return c;
  return Poly::compare(a.den_, b.den_);
}

std::string RatFn::to_string() const {
  if (den_.is_one()) return num_.to_string();
  return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
    s.remove_prefix(1);
  }
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
    s.remove_suffix(1);
  }
  return s;
}

// strips outer parentheses as long as they enclose the whole string
std::string_view strip_parens(std::string_view s) {
  for (;;) {
    s = trim(s);
    if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
    int depth = 0;
    for (std::size_t i = 0; i + 1 < s.size(); ++i) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')' && --depth == 0) return s;  // closes before the end
    }
    s = s.substr(1, s.size() - 2);
  }
}

}  // namespace

RatFn RatFn::parse(const Fp& field, std::string_view text) {
  int depth = 0;
  std::size_t slash = std::string_view::npos;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    if (text[i] == ')' && --depth < 0) {
      throw DomainError("rational function parse error: unbalanced ')'");
    }
    if (text[i] == '/' && depth == 0) {
      slash = i;
      break;
    }
  }
  if (depth != 0 && slash == std::string_view::npos) {
    throw DomainError("rational function parse error: unbalanced '('");
  }
  if (slash == std::string_view::npos) {
    return RatFn(Poly::parse(field, strip_parens(text)));
  }
  Poly num = Poly::parse(field, strip_parens(text.substr(0, slash)));
  Poly den = Poly::parse(field, strip_parens(text.substr(slash + 1)));
  return RatFn(std::move(num), std::move(den));
}

int projective_height(const RatFn& f, const RatFn& g) {
  if (f.is_zero() && g.is_zero()) {
    throw DomainError("projective point with both coordinates zero");
  }
  if (f.is_zero() || g.is_zero()) return 0;
  return (g / f).height();
}

}  // namespace catff
