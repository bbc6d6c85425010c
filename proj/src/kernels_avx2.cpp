/*
 * AVX2 backend. 8 lanes of u32 residues.
 *
 * Unsigned lane compares are built from max_epu32 (AVX2 has no unsigned
 * cmpgt). Products use Shoup's precomputed-quotient trick: with
 * w = floor(2^32 * s / p) and q = mulhi32(w, a), the value s*a - q*p lies
 * in [0, 2p), so one conditional subtract finishes the reduction. All of
 * it stays exact because p <= 2^31.
 */
#include <immintrin.h>

#include <cstdint>

#include "catff/kernels.hpp"

namespace catff::kernels::detail {

namespace {

// mask of lanes where x >= bound (unsigned)
inline __m256i ge_epu32(__m256i x, __m256i bound) {
  return _mm256_cmpeq_epi32(_mm256_max_epu32(x, bound), x);
}

// lane-wise reduction of x in [0, 2p) to [0, p)
inline __m256i reduce_once(__m256i x, __m256i vp) {
  return _mm256_sub_epi32(x, _mm256_and_si256(ge_epu32(x, vp), vp));
}

// high 32 bits of w * a, per u32 lane
inline __m256i mulhi_epu32(__m256i a, __m256i w) {
  __m256i prod_even = _mm256_mul_epu32(a, w);
  __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), w);
  __m256i hi_even = _mm256_srli_epi64(prod_even, 32);
  __m256i hi_odd = _mm256_slli_epi64(_mm256_srli_epi64(prod_odd, 32), 32);
  return _mm256_or_si256(hi_even, hi_odd);
}

// (s * a) mod p per lane, given the Shoup constant vw for s
inline __m256i mulmod_shoup(__m256i a, __m256i vs, __m256i vw, __m256i vp) {
  __m256i q = mulhi_epu32(a, vw);
  __m256i lo_sa = _mm256_mullo_epi32(a, vs);
  __m256i lo_qp = _mm256_mullo_epi32(q, vp);
  return reduce_once(_mm256_sub_epi32(lo_sa, lo_qp), vp);
}

inline std::uint32_t shoup_constant(std::uint32_t s, std::uint32_t p) {
  return static_cast<std::uint32_t>((static_cast<std::uint64_t>(s) << 32) / p);
}

}  // namespace

void add_mod_avx2(std::uint32_t* dst, const std::uint32_t* a,
                  const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i t = reduce_once(_mm256_add_epi32(va, vb), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  for (; i < n; ++i) {
    std::uint32_t t = a[i] + b[i];
    dst[i] = t >= p ? t - p : t;
  }
}

void sub_mod_avx2(std::uint32_t* dst, const std::uint32_t* a,
                  const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
    __m256i d = _mm256_sub_epi32(va, vb);
    __m256i fix = _mm256_andnot_si256(ge_epu32(va, vb), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_add_epi32(d, fix));
  }
  for (; i < n; ++i) {
    dst[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  }
}

void neg_mod_avx2(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                  std::uint32_t p) {
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i zero = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i t = _mm256_sub_epi32(vp, va);
    t = _mm256_andnot_si256(_mm256_cmpeq_epi32(va, zero), t);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  for (; i < n; ++i) {
    dst[i] = a[i] == 0 ? 0 : p - a[i];
  }
}

void scale_mod_avx2(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                    std::uint32_t s, std::uint32_t p) {
  const std::uint32_t w = shoup_constant(s, p);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        mulmod_shoup(va, vs, vw, vp));
  }
  for (; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(s) * a[i]) % p);
  }
}

void axpy_mod_avx2(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                   std::uint32_t s, std::uint32_t p) {
  const std::uint32_t w = shoup_constant(s, p);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i sa = mulmod_shoup(va, vs, vw, vp);
    __m256i t = reduce_once(_mm256_add_epi32(vd, sa), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
  }
  for (; i < n; ++i) {
    std::uint64_t t = dst[i] + static_cast<std::uint64_t>(s) * a[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void submul_mod_avx2(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                     std::uint32_t s, std::uint32_t p) {
  const std::uint32_t w = shoup_constant(s, p);
  const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
  const __m256i vs = _mm256_set1_epi32(static_cast<int>(s));
  const __m256i vw = _mm256_set1_epi32(static_cast<int>(w));
  std::size_t i = 0;
  for (; i + 8 <= n; i += 8) {
    __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
    __m256i vd = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
    __m256i sa = mulmod_shoup(va, vs, vw, vp);
    __m256i d = _mm256_sub_epi32(vd, sa);
    __m256i fix = _mm256_andnot_si256(ge_epu32(vd, sa), vp);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i),
                        _mm256_add_epi32(d, fix));
  }
  for (; i < n; ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(s) * a[i] % p;
    dst[i] = dst[i] >= t ? dst[i] - static_cast<std::uint32_t>(t)
                         : dst[i] + (p - static_cast<std::uint32_t>(t));
  }
}

}  // namespace catff::kernels::detail
