#pragma once

#include <cstddef>

// Dense double-precision kernels used by the linear-algebra layer.
//
// Every routine exists in a scalar reference version and, on x86-64, an AVX2
// version. A function table is selected once at startup based on what the CPU
// supports; the environment variable CSG_KERNELS=scalar|avx2 overrides the
// choice (useful for the equivalence tests).

namespace csg::kernels {

struct Ops {
    const char* name;
    // sum_i x[i]*y[i]
    double (*dot)(const double* x, const double* y, std::size_t n);
    // y[i] += a*x[i]
    void (*axpy)(double a, const double* x, double* y, std::size_t n);
    // x[i] *= a
    void (*scale)(double* x, std::size_t n, double a);
    // plane rotation [[c,-s],[s,c]]: (x[i], y[i]) <- (c*x[i]-s*y[i], s*x[i]+c*y[i])
    void (*rot)(double* x, double* y, std::size_t n, double c, double s);
};

const Ops& scalar_ops();

#if defined(__x86_64__)
const Ops& avx2_ops();
bool avx2_supported();
#endif

// The table chosen for this process.
const Ops& active();

}  // namespace csg::kernels
