#include "csg/test_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace csg {

namespace {

// Separable f(y) = sum_i phi(y_i). For these, ||hess f(x) - hess f(z)|| is at
// most sup|phi'''| over the ball, taken coordinate-wise.
TestFunction separable(std::string name, int n, double (*phi)(double), double (*dphi)(double),
                       double (*d2phi)(double),
                       std::function<double(const Vector&, double)> lip3, Vector ref) {
    TestFunction f;
    f.name = std::move(name);
    f.dim = n;
    f.value = [phi](const Vector& y) {
        double s = 0.0;
        for (int i = 0; i < y.dim(); ++i) s += phi(y[i]);
        return s;
    };
    f.gradient = [dphi](const Vector& y) {
        std::vector<double> g(static_cast<std::size_t>(y.dim()));
        for (int i = 0; i < y.dim(); ++i) g[static_cast<std::size_t>(i)] = dphi(y[i]);
        return Vector(std::move(g));
    };
    f.hessian = [d2phi](const Vector& y) {
        std::vector<double> e(static_cast<std::size_t>(y.dim()) * y.dim(), 0.0);
        for (int i = 0; i < y.dim(); ++i) {
            e[static_cast<std::size_t>(i) * y.dim() + i] = d2phi(y[i]);
        }
        return Matrix(y.dim(), y.dim(), std::move(e));
    };
    f.hessian_lipschitz = std::move(lip3);
    f.ref_point = std::move(ref);
    return f;
}

double max_coord(const Vector& c) {
    double m = c[0];
    for (int i = 1; i < c.dim(); ++i) m = std::max(m, c[i]);
    return m;
}

double max_abs_coord(const Vector& c) {
    double m = std::abs(c[0]);
    for (int i = 1; i < c.dim(); ++i) m = std::max(m, std::abs(c[i]));
    return m;
}

std::vector<TestFunction> build_registry() {
    std::vector<TestFunction> r;

    // y^4 in one dimension; third derivative 24y.
    {
        TestFunction f;
        f.name = "quartic1d";
        f.dim = 1;
        f.value = [](const Vector& y) { return y[0] * y[0] * y[0] * y[0]; };
        f.gradient = [](const Vector& y) { return Vector{4.0 * y[0] * y[0] * y[0]}; };
        f.hessian = [](const Vector& y) { return Matrix{{12.0 * y[0] * y[0]}}; };
        f.hessian_lipschitz = [](const Vector& c, double rad) {
            return 24.0 * (std::abs(c[0]) + rad);
        };
        f.gradient_lipschitz = [](const Vector& c, double rad) {
            const double b = std::abs(c[0]) + rad;
            return 4.0 * b * b * b;
        };
        f.ref_point = Vector{0.8};
        r.push_back(std::move(f));
    }

    // Fixed linear form in three variables.
    {
        const Vector c{1.5, -2.0, 0.5};
        TestFunction f;
        f.name = "linear3";
        f.dim = 3;
        f.value = [c](const Vector& y) { return dot(c, y); };
        f.gradient = [c](const Vector&) { return c; };
        f.hessian = [](const Vector& y) { return Matrix::zero(y.dim(), y.dim()); };
        f.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        f.gradient_lipschitz = [c](const Vector&, double) { return c.norm(); };
        f.ref_point = Vector{0.5, 0.5, 0.5};
        r.push_back(std::move(f));
    }

    // Fixed quadratic y^T A y + b^T y in two variables.
    {
        const Matrix a{{2.0, 0.5}, {0.5, 1.0}};
        const Vector b{1.0, -1.0};
        TestFunction f;
        f.name = "quad2";
        f.dim = 2;
        f.value = [a, b](const Vector& y) { return dot(y, a * y) + dot(b, y); };
        f.gradient = [a, b](const Vector& y) { return 2.0 * (a * y) + b; };
        f.hessian = [a](const Vector&) { return 2.0 * a; };
        f.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        f.gradient_lipschitz = [a, b](const Vector& c, double rad) {
            return (2.0 * (a * c) + b).norm() + 2.0 * spectral_norm(a) * rad;
        };
        f.ref_point = Vector{0.3, -0.2};
        r.push_back(std::move(f));
    }

    // y1^2 + y2^2.
    {
        TestFunction f;
        f.name = "paperexp";
        f.dim = 2;
        f.value = [](const Vector& y) { return y[0] * y[0] + y[1] * y[1]; };
        f.gradient = [](const Vector& y) { return Vector{2.0 * y[0], 2.0 * y[1]}; };
        f.hessian = [](const Vector&) { return Matrix{{2.0, 0.0}, {0.0, 2.0}}; };
        f.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        f.gradient_lipschitz = [](const Vector& c, double rad) {
            return 2.0 * (c.norm() + rad);
        };
        f.ref_point = Vector{1.0, 1.0};
        r.push_back(std::move(f));
    }

    // y1^2 + 2 y2^2 - 3.
    {
        TestFunction f;
        f.name = "paperlog";
        f.dim = 2;
        f.value = [](const Vector& y) { return y[0] * y[0] + 2.0 * y[1] * y[1] - 3.0; };
        f.gradient = [](const Vector& y) { return Vector{2.0 * y[0], 4.0 * y[1]}; };
        f.hessian = [](const Vector&) { return Matrix{{2.0, 0.0}, {0.0, 4.0}}; };
        f.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        f.ref_point = Vector{2.0, 2.0};
        r.push_back(std::move(f));
    }

    // y^2 and y^2 + 1 in one dimension (composition pieces).
    {
        TestFunction f;
        f.name = "papersq1d";
        f.dim = 1;
        f.value = [](const Vector& y) { return y[0] * y[0]; };
        f.gradient = [](const Vector& y) { return Vector{2.0 * y[0]}; };
        f.hessian = [](const Vector&) { return Matrix{{2.0}}; };
        f.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        f.gradient_lipschitz = [](const Vector& c, double rad) {
            return 2.0 * (std::abs(c[0]) + rad);
        };
        f.ref_point = Vector{2.0};
        r.push_back(std::move(f));
    }
    {
        TestFunction f;
        f.name = "papershift1d";
        f.dim = 1;
        f.value = [](const Vector& y) { return y[0] * y[0] + 1.0; };
        f.gradient = [](const Vector& y) { return Vector{2.0 * y[0]}; };
        f.hessian = [](const Vector&) { return Matrix{{2.0}}; };
        f.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        f.gradient_lipschitz = [](const Vector& c, double rad) {
            return 2.0 * (std::abs(c[0]) + rad);
        };
        f.ref_point = Vector{2.0};
        r.push_back(std::move(f));
    }

    // ||y||^2 in three variables.
    {
        TestFunction f;
        f.name = "sqnorm3";
        f.dim = 3;
        f.value = [](const Vector& y) { return dot(y, y); };
        f.gradient = [](const Vector& y) { return 2.0 * y; };
        f.hessian = [](const Vector& y) { return 2.0 * Matrix::identity(y.dim()); };
        f.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        f.gradient_lipschitz = [](const Vector& c, double rad) {
            return 2.0 * (c.norm() + rad);
        };
        f.ref_point = Vector{0.0, 3.0, 4.0};
        r.push_back(std::move(f));
    }

    auto exp_lip = [](const Vector& c, double rad) { return std::exp(max_coord(c) + rad); };
    r.push_back(separable("expsum2", 2, [](double t) { return std::exp(t); },
                          [](double t) { return std::exp(t); },
                          [](double t) { return std::exp(t); }, exp_lip, Vector{0.1, 0.2}));
    r.push_back(separable("expsum3", 3, [](double t) { return std::exp(t); },
                          [](double t) { return std::exp(t); },
                          [](double t) { return std::exp(t); }, exp_lip,
                          Vector{0.1, 0.2, 0.3}));

    auto sin_lip = [](const Vector&, double) { return 1.0; };
    r.push_back(separable("sinsum2", 2, [](double t) { return std::sin(t); },
                          [](double t) { return std::cos(t); },
                          [](double t) { return -std::sin(t); }, sin_lip, Vector{0.6, 0.7}));
    r.push_back(separable("sinsum3", 3, [](double t) { return std::sin(t); },
                          [](double t) { return std::cos(t); },
                          [](double t) { return -std::sin(t); }, sin_lip,
                          Vector{0.6, 0.7, 0.8}));

    auto quartic_lip = [](const Vector& c, double rad) {
        return 24.0 * (max_abs_coord(c) + rad);
    };
    r.push_back(separable("quarticsum3", 3, [](double t) { return t * t * t * t; },
                          [](double t) { return 4.0 * t * t * t; },
                          [](double t) { return 12.0 * t * t; }, quartic_lip,
                          Vector{0.5, -0.4, 0.7}));

    return r;
}

std::vector<VectorTestFunction> build_vector_registry() {
    std::vector<VectorTestFunction> r;

    // (y2 - 2 y1, y1 + y2, y1 y2 + y2) on the plane.
    {
        VectorTestFunction g;
        g.name = "paperchain_g";
        g.dim_in = 2;
        g.dim_out = 3;
        g.ref_point = Vector{1.0, 2.0};

        TestFunction g1;
        g1.name = "paperchain_g1";
        g1.dim = 2;
        g1.value = [](const Vector& y) { return y[1] - 2.0 * y[0]; };
        g1.gradient = [](const Vector&) { return Vector{-2.0, 1.0}; };
        g1.hessian = [](const Vector&) { return Matrix::zero(2, 2); };
        g1.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        g1.gradient_lipschitz = [](const Vector&, double) { return std::sqrt(5.0); };
        g1.ref_point = g.ref_point;

        TestFunction g2;
        g2.name = "paperchain_g2";
        g2.dim = 2;
        g2.value = [](const Vector& y) { return y[0] + y[1]; };
        g2.gradient = [](const Vector&) { return Vector{1.0, 1.0}; };
        g2.hessian = [](const Vector&) { return Matrix::zero(2, 2); };
        g2.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        g2.gradient_lipschitz = [](const Vector&, double) { return std::sqrt(2.0); };
        g2.ref_point = g.ref_point;

        TestFunction g3;
        g3.name = "paperchain_g3";
        g3.dim = 2;
        g3.value = [](const Vector& y) { return y[0] * y[1] + y[1]; };
        g3.gradient = [](const Vector& y) { return Vector{y[1], y[0] + 1.0}; };
        g3.hessian = [](const Vector&) { return Matrix{{0.0, 1.0}, {1.0, 0.0}}; };
        g3.hessian_lipschitz = [](const Vector&, double) { return 0.0; };
        g3.gradient_lipschitz = [](const Vector& c, double rad) {
            const double a = std::abs(c[1]) + rad;
            const double b = std::abs(c[0] + 1.0) + rad;
            return std::sqrt(a * a + b * b);
        };
        g3.ref_point = g.ref_point;

        g.components = {std::move(g1), std::move(g2), std::move(g3)};
        r.push_back(std::move(g));
    }

    // One-component wrapper around y^2 + 1 for scalar-in/scalar-out chains.
    {
        VectorTestFunction g;
        g.name = "papershift1d_v";
        g.dim_in = 1;
        g.dim_out = 1;
        g.ref_point = Vector{2.0};
        g.components = {lookup("papershift1d")};
        r.push_back(std::move(g));
    }

    return r;
}

}  // namespace

Vector VectorTestFunction::value(const Vector& x) const {
    std::vector<double> out(static_cast<std::size_t>(dim_out));
    for (int i = 0; i < dim_out; ++i) {
        out[static_cast<std::size_t>(i)] = components[static_cast<std::size_t>(i)].value(x);
    }
    return Vector(std::move(out));
}

const std::vector<TestFunction>& registry() {
    static const std::vector<TestFunction> r = build_registry();
    return r;
}

const TestFunction& lookup(std::string_view name) {
    for (const auto& f : registry()) {
        if (f.name == name) return f;
    }
    throw std::invalid_argument("unknown function '" + std::string(name) + "'");
}

const std::vector<VectorTestFunction>& vector_registry() {
    static const std::vector<VectorTestFunction> r = build_vector_registry();
    return r;
}

const VectorTestFunction* find_vector(std::string_view name) {
    for (const auto& g : vector_registry()) {
        if (g.name == name) return &g;
    }
    return nullptr;
}

Vector finite_difference_gradient(const std::function<double(const Vector&)>& f, const Vector& x,
                                  double h) {
    if (!(h > 0.0)) throw std::invalid_argument("finite_difference_gradient: h must be positive");
    std::vector<double> g(static_cast<std::size_t>(x.dim()));
    for (int i = 0; i < x.dim(); ++i) {
        std::vector<double> plus = x.entries();
        std::vector<double> minus = x.entries();
        plus[static_cast<std::size_t>(i)] += h;
        minus[static_cast<std::size_t>(i)] -= h;
        g[static_cast<std::size_t>(i)] =
            (f(Vector(std::move(plus))) - f(Vector(std::move(minus)))) / (2.0 * h);
    }
    return Vector(std::move(g));
}

}  // namespace csg
