/*
 * Coefficient-array kernels mod p.
 *
 * Every dense inner loop of the polynomial layer (add, sub, scale,
 * multiply-accumulate) funnels through these entry points. Two backends:
 * a plain scalar reference and an AVX2 variant selected at runtime; both
 * must produce bit-identical results (equivalence-tested).
 *
 * Contract for all kernels: inputs are residues in [0, p), p <= 2^31,
 * so a + b never wraps u32 and s * a fits u64. dst may alias a or b
 * exactly (same pointer); partial overlap is not allowed.
 */
#ifndef CATFF_KERNELS_HPP
#define CATFF_KERNELS_HPP

#include <cstddef>
#include <cstdint>

namespace catff::kernels {

enum class Backend { scalar, avx2 };

// Backend selected for subsequent calls. Defaults to the best one the
// CPU supports. set_backend throws DomainError if unavailable.
Backend active_backend();
void set_backend(Backend b);
bool backend_available(Backend b);
const char* backend_name(Backend b);

// dst[i] = (a[i] + b[i]) mod p
void add_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
             std::size_t n, std::uint32_t p);

// dst[i] = (a[i] - b[i]) mod p
void sub_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
             std::size_t n, std::uint32_t p);

// dst[i] = (p - a[i]) mod p
void neg_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
             std::uint32_t p);

// dst[i] = (s * a[i]) mod p
void scale_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
               std::uint32_t s, std::uint32_t p);

// dst[i] = (dst[i] + s * a[i]) mod p  -- the schoolbook-multiply inner loop
void axpy_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
              std::uint32_t s, std::uint32_t p);

// dst[i] = (dst[i] - s * a[i]) mod p  -- the long-division inner loop
void submul_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                std::uint32_t s, std::uint32_t p);

namespace detail {
// Scalar reference implementations, always available; the oracle the
// SIMD variants are tested against.
void add_mod_scalar(std::uint32_t*, const std::uint32_t*, const std::uint32_t*,
                    std::size_t, std::uint32_t);
void sub_mod_scalar(std::uint32_t*, const std::uint32_t*, const std::uint32_t*,
                    std::size_t, std::uint32_t);
void neg_mod_scalar(std::uint32_t*, const std::uint32_t*, std::size_t,
                    std::uint32_t);
void scale_mod_scalar(std::uint32_t*, const std::uint32_t*, std::size_t,
                      std::uint32_t, std::uint32_t);
void axpy_mod_scalar(std::uint32_t*, const std::uint32_t*, std::size_t,
                     std::uint32_t, std::uint32_t);
void submul_mod_scalar(std::uint32_t*, const std::uint32_t*, std::size_t,
                       std::uint32_t, std::uint32_t);

#if defined(CATFF_HAVE_AVX2)
void add_mod_avx2(std::uint32_t*, const std::uint32_t*, const std::uint32_t*,
                  std::size_t, std::uint32_t);
void sub_mod_avx2(std::uint32_t*, const std::uint32_t*, const std::uint32_t*,
                  std::size_t, std::uint32_t);
void neg_mod_avx2(std::uint32_t*, const std::uint32_t*, std::size_t,
                  std::uint32_t);
void scale_mod_avx2(std::uint32_t*, const std::uint32_t*, std::size_t,
                    std::uint32_t, std::uint32_t);
void axpy_mod_avx2(std::uint32_t*, const std::uint32_t*, std::size_t,
                   std::uint32_t, std::uint32_t);
void submul_mod_avx2(std::uint32_t*, const std::uint32_t*, std::size_t,
                     std::uint32_t, std::uint32_t);
#endif
}  // namespace detail

}  // namespace catff::kernels

#endif
