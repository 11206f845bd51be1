#include "csg/gradients.hpp"

#include <stdexcept>
#include <utility>

namespace csg {

namespace {

void check_table(const SampleSet& xs, const EvaluationTable& tab) {
    validate_table(tab, xs.count());
}

}  // namespace

GradientEstimate gsg(const SampleSet& xs, const EvaluationTable& tab) {
    check_table(xs, tab);
    Vector value = solve_least_squares(direction_matrix(xs).transpose(), delta_s(tab));
    return GradientEstimate{std::move(value), "gsg", xs.count(), radius(xs), xs.count() + 1};
}

GradientEstimate gcsg(const SampleSet& xs, const EvaluationTable& tab) {
    check_table(xs, tab);
    Vector value = solve_least_squares(direction_matrix(xs).transpose(), delta_c(tab));
    return GradientEstimate{std::move(value), "gcsg", xs.count(), radius(xs), 2 * xs.count()};
}

GradientEstimate gcsg_via_average(const SampleSet& xs, const EvaluationTable& tab) {
    check_table(xs, tab);
    if (!tab.f_minus) {
        throw std::invalid_argument("gcsg_via_average: reflected values missing");
    }
    const GradientEstimate plus = gsg(xs, tab);
    const GradientEstimate minus = gsg(reflect(xs), reflect_table(tab));
    Vector value = 0.5 * (plus.value + minus.value);
    return GradientEstimate{std::move(value), "gcsg_via_average", xs.count(), radius(xs),
                            2 * xs.count() + 1};
}

CentredJacobian centred_jacobian(const SampleSet& xs, const std::vector<EvaluationTable>& tabs) {
    if (tabs.empty()) {
        throw std::invalid_argument("centred_jacobian: needs at least one component table");
    }
    std::vector<double> rows;
    rows.reserve(tabs.size() * static_cast<std::size_t>(xs.dimension()));
    for (const auto& tab : tabs) {
        const GradientEstimate g = gcsg(xs, tab);
        rows.insert(rows.end(), g.value.entries().begin(), g.value.entries().end());
    }
    return CentredJacobian{
        Matrix(static_cast<int>(tabs.size()), xs.dimension(), std::move(rows))};
}

Projector projector_onto_span(const Matrix& s) {
    const Matrix st = s.transpose();
    return Projector{pseudoinverse(st) * st};
}

Vector u_gradient(const Projector& p, const Vector& grad) {
    return p.matrix * grad;
}

SampleSet augmented_set(const SampleSet& xs) {
    std::vector<Vector> dirs = xs.directions();
    dirs.reserve(dirs.size() * 2);
    for (const auto& d : xs.directions()) dirs.push_back(-1.0 * d);
    try {
        return SampleSet(xs.x0(), std::move(dirs));
    } catch (const std::invalid_argument&) {
        throw std::invalid_argument("augmented_set: reflected points collide with originals");
    }
}

EvaluationTable augmented_table(const EvaluationTable& tab) {
    if (!tab.f_minus) {
        throw std::invalid_argument("augmented_table: reflected values missing");
    }
    std::vector<double> plus = tab.f_plus;
    plus.insert(plus.end(), tab.f_minus->begin(), tab.f_minus->end());
    return EvaluationTable{tab.f_x0, std::move(plus), std::nullopt};
}

}  // namespace csg
