#pragma once

#include <cstddef>
#include <string_view>

// Data-parallel inner loops used by all matrix code. Each kernel has a
// scalar reference implementation plus SIMD variants (AVX2 on x86-64,
// NEON on aarch64) selected once at startup based on what the CPU
// supports. The active backend can be forced with set_backend() or the
// SKETCHREG_KERNELS environment variable ("scalar", "avx2", "neon").
//
// Results are deterministic for a fixed backend; SIMD variants may
// differ from scalar in the last few ulps (different summation order,
// FMA contraction).
namespace sketchreg::kernels {

enum class Backend { Scalar, Avx2, Neon };

struct Ops {
    double (*dot)(const double*, const double*, std::size_t);
    double (*sumsq)(const double*, std::size_t);
    // y += alpha * x
    void (*axpy)(double alpha, const double* x, double* y, std::size_t);
    void (*scal)(double alpha, double* x, std::size_t);
    // plane rotation: x' = c*x - s*y, y' = s*x + c*y
    void (*rot)(double* x, double* y, double c, double s, std::size_t);
};

const Ops& ops();

Backend active_backend();
std::string_view backend_name(Backend b);

// Returns false (and leaves the backend unchanged) if the requested
// backend is not supported on this CPU.
bool set_backend(Backend b);

inline double dot(const double* a, const double* b, std::size_t n) { return ops().dot(a, b, n); }
inline double sumsq(const double* a, std::size_t n) { return ops().sumsq(a, n); }
inline void axpy(double alpha, const double* x, double* y, std::size_t n) { ops().axpy(alpha, x, y, n); }
inline void scal(double alpha, double* x, std::size_t n) { ops().scal(alpha, x, n); }
inline void rot(double* x, double* y, double c, double s, std::size_t n) { ops().rot(x, y, c, s, n); }

namespace detail {
extern const Ops scalar_ops;
#if defined(__x86_64__) || defined(_M_X64)
extern const Ops avx2_ops;
#endif
#if defined(__aarch64__)
extern const Ops neon_ops;
#endif
}  // namespace detail

}  // namespace sketchreg::kernels
