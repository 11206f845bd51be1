#include "csg/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace csg::kernels {

namespace {

double dot_scalar(const double* x, const double* y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double* x, double* y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) y[i] += a * x[i];
}

void scale_scalar(double* x, std::size_t n, double a) {
    for (std::size_t i = 0; i < n; ++i) x[i] *= a;
}

void rot_scalar(double* x, double* y, std::size_t n, double c, double s) {
    for (std::size_t i = 0; i < n; ++i) {
        const double xi = x[i];
        const double yi = y[i];
        x[i] = c * xi - s * yi;
        y[i] = s * xi + c * yi;
    }
}

const Ops& pick() {
    if (const char* env = std::getenv("CSG_KERNELS")) {
        if (std::strcmp(env, "scalar") == 0) return scalar_ops();
#if defined(__x86_64__)
        if (std::strcmp(env, "avx2") == 0 && avx2_supported()) return avx2_ops();
#endif
    }
#if defined(__x86_64__)
    if (avx2_supported()) return avx2_ops();
#endif
    return scalar_ops();
}

}  // namespace

const Ops& scalar_ops() {
    static const Ops ops{"scalar", dot_scalar, axpy_scalar, scale_scalar, rot_scalar};
    return ops;
}

const Ops& active() {
    static const Ops& chosen = pick();
    return chosen;
}

}  // namespace csg::kernels
