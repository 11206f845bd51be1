#pragma once

#include <string>
#include <vector>

#include "csg/linalg.hpp"
#include "csg/sample_set.hpp"

// Simplex-gradient estimators over arbitrary-size sample sets. The one-sided
// form regresses on forward differences; the centred form uses symmetric
// differences over X and its reflection X^- and is second-order accurate.
// Both are defined for any rank of S through the minimum-norm pseudoinverse
// solution.

namespace csg {

struct GradientEstimate {
    Vector value;
    std::string method;
    int m;            // point-pair count
    double delta;     // sample-set radius
    int eval_count;   // function evaluations the estimator consumes
};

struct CentredJacobian {
    Matrix matrix;  // p x n, row i is the centred gradient of component i
};

// Orthogonal projector onto span S; idempotent and symmetric.
struct Projector {
    Matrix matrix;  // n x n
};

// value = pinv(S^T) * delta_s; consumes m+1 evaluations.
GradientEstimate gsg(const SampleSet& xs, const EvaluationTable& tab);

// value = pinv(S^T) * delta_c; consumes 2m evaluations (f(x0) is not needed).
GradientEstimate gcsg(const SampleSet& xs, const EvaluationTable& tab);

// Average of the two one-sided gradients over X and X^-; algebraically equal
// to gcsg but consumes 2m+1 evaluations (f(x0) shared by both sides).
GradientEstimate gcsg_via_average(const SampleSet& xs, const EvaluationTable& tab);

// Row i is the centred gradient of component i; tables follow component order.
CentredJacobian centred_jacobian(const SampleSet& xs, const std::vector<EvaluationTable>& tabs);

// pinv(S^T) * S^T, the orthogonal projector onto span S (any rank).
Projector projector_onto_span(const Matrix& s);

// Projection of a (true) gradient onto span S.
Vector u_gradient(const Projector& p, const Vector& grad);

// Directions (d^1,...,d^m,-d^1,...,-d^m); rejects reflected-point collisions.
SampleSet augmented_set(const SampleSet& xs);

// Forward-difference table for the augmented set, built from a reflected
// table over X.
EvaluationTable augmented_table(const EvaluationTable& tab);

}  // namespace csg
