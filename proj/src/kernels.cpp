#include "catff/kernels.hpp"

#include <atomic>

#include "catff/errors.hpp"

namespace catff::kernels {

namespace detail {

void add_mod_scalar(std::uint32_t* dst, const std::uint32_t* a,
                    const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint32_t t = a[i] + b[i];  // < 2^32 since both < p <= 2^31
    dst[i] = t >= p ? t - p : t;
  }
}

void sub_mod_scalar(std::uint32_t* dst, const std::uint32_t* a,
                    const std::uint32_t* b, std::size_t n, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = a[i] >= b[i] ? a[i] - b[i] : a[i] + p - b[i];
  }
}

void neg_mod_scalar(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                    std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = a[i] == 0 ? 0 : p - a[i];
  }
}

void scale_mod_scalar(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                      std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    dst[i] = static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(s) * a[i]) % p);
  }
}

void axpy_mod_scalar(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                     std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = dst[i] + static_cast<std::uint64_t>(s) * a[i];
    dst[i] = static_cast<std::uint32_t>(t % p);
  }
}

void submul_mod_scalar(std::uint32_t* dst, const std::uint32_t* a,
                       std::size_t n, std::uint32_t s, std::uint32_t p) {
  for (std::size_t i = 0; i < n; ++i) {
    std::uint64_t t = static_cast<std::uint64_t>(s) * a[i] % p;
    dst[i] = dst[i] >= t ? dst[i] - static_cast<std::uint32_t>(t)
                         : dst[i] + (p - static_cast<std::uint32_t>(t));
  }
}

}  // namespace detail

namespace {

Backend detect_backend() {
#if defined(CATFF_HAVE_AVX2)
  if (__builtin_cpu_supports("avx2")) return Backend::avx2;
#endif
  return Backend::scalar;
}

std::atomic<Backend> g_backend{detect_backend()};

}  // namespace

bool backend_available(Backend b) {
  switch (b) {
    case Backend::scalar:
      return true;
    case Backend::avx2:
#if defined(CATFF_HAVE_AVX2)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

const char* backend_name(Backend b) {
  return b == Backend::avx2 ? "avx2" : "scalar";
}

Backend active_backend() { return g_backend.load(std::memory_order_relaxed); }

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw DomainError(std::string("kernel backend not available: ") +
                      backend_name(b));
  }
  g_backend.store(b, std::memory_order_relaxed);
}

#if defined(CATFF_HAVE_AVX2)
#define CATFF_DISPATCH(fn, ...)                 \
  do {                                          \
    if (active_backend() == Backend::avx2) {    \
      detail::fn##_avx2(__VA_ARGS__);           \
    } else {                                    \
      detail::fn##_scalar(__VA_ARGS__);         \
    }                                           \
  } while (0)
#else
#define CATFF_DISPATCH(fn, ...) detail::fn##_scalar(__VA_ARGS__)
#endif

void add_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
             std::size_t n, std::uint32_t p) {
  CATFF_DISPATCH(add_mod, dst, a, b, n, p);
}

void sub_mod(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
             std::size_t n, std::uint32_t p) {
  CATFF_DISPATCH(sub_mod, dst, a, b, n, p);
}

void neg_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
             std::uint32_t p) {
  CATFF_DISPATCH(neg_mod, dst, a, n, p);
}

void scale_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
               std::uint32_t s, std::uint32_t p) {
  CATFF_DISPATCH(scale_mod, dst, a, n, s, p);
}

void axpy_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
              std::uint32_t s, std::uint32_t p) {
  CATFF_DISPATCH(axpy_mod, dst, a, n, s, p);
}

void submul_mod(std::uint32_t* dst, const std::uint32_t* a, std::size_t n,
                std::uint32_t s, std::uint32_t p) {
  CATFF_DISPATCH(submul_mod, dst, a, n, s, p);
}

#undef CATFF_DISPATCH

}  // namespace catff::kernels
