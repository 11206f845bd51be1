#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "csg/linalg.hpp"

// Analytic test functions with gradients, Hessians and sup-based
// Hessian-Lipschitz constants on balls, plus an independent finite-difference
// oracle. Names are stable identifiers addressable from the CLI.

namespace csg {

struct TestFunction {
    std::string name;
    int dim;
    std::function<double(const Vector&)> value;
    std::function<Vector(const Vector&)> gradient;
    std::function<Matrix(const Vector&)> hessian;  // may be empty
    // Lipschitz constant of the Hessian on the closed ball B(center, radius);
    // coarse upper bounds are fine. May be empty.
    std::function<double(const Vector&, double)> hessian_lipschitz;
    // Lipschitz constant of the function itself (sup of the gradient norm on
    // the ball); used by the composition bound. May be empty.
    std::function<double(const Vector&, double)> gradient_lipschitz;
    // Canonical reference point for generated geometries and sweeps.
    Vector ref_point;
};

struct VectorTestFunction {
    std::string name;
    int dim_in;
    int dim_out;
    std::vector<TestFunction> components;
    Vector ref_point;

    Vector value(const Vector& x) const;
};

const std::vector<TestFunction>& registry();
const TestFunction& lookup(std::string_view name);

const std::vector<VectorTestFunction>& vector_registry();
const VectorTestFunction* find_vector(std::string_view name);

// Central differences, coordinate by coordinate.
Vector finite_difference_gradient(const std::function<double(const Vector&)>& f, const Vector& x,
                                  double h);

}  // namespace csg
