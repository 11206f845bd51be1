#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "csg/calculus.hpp"
#include "csg/linalg.hpp"
#include "csg/sample_set.hpp"

// Theoretical error-bound calculators. All bounds share the geometry factor
// ||pinv(Shat^T)|| Delta^2 with Shat = S/Delta, carry the Hessian-Lipschitz
// constants supplied by the caller, and are stated against the full-space
// gradient when S has full row rank and against the projection onto span S
// otherwise. Sets whose direction matrix is rank deficient get no bound
// (applicable = false).

namespace csg {

struct LipschitzData {
    double hessian_lipschitz = 0.0;                 // L of the Hessian on the ball
    std::optional<Vector> gradient_at_ref;          // gradient at the reference point
    std::optional<std::vector<double>> component_lipschitz;          // L_{g_i}
    std::optional<std::vector<double>> component_hessian_lipschitz;  // L_{hess g_i}
};

enum class ComparisonSpace { FullSpace, SubspaceU };

std::string to_string(ComparisonSpace s);

struct BoundReport {
    std::optional<double> bound;  // absent when not applicable
    bool applicable = false;
    ComparisonSpace comparison_space = ComparisonSpace::FullSpace;
    int m = 0;
    double delta = 0.0;
    double pinv_norm = 0.0;  // ||pinv(Shat^T)||
    std::vector<std::pair<std::string, double>> constants;
};

// (L/3) * ||d||^3, the centred second-order Taylor residual bound.
double taylor_centred_residual_bound(double d_norm, double hessian_lipschitz);

// (L sqrt(m) / 6) ||pinv(Shat^T)|| Delta^2 for the centred simplex gradient.
BoundReport gcsg_bound(const SampleSet& xs, const LipschitzData& lip);

// Rule-specific bounds for the error-free calculus approximations.
BoundReport gcscg_product_bound(const SampleSet& xs, double lip_f, double lip_g, double f_x0,
                                double g_x0);
BoundReport gcscg_product_k_bound(const SampleSet& xs, const std::vector<double>& lips,
                                  const std::vector<double>& values_at_ref);
BoundReport gcscg_power_bound(const SampleSet& xs, double lip_f, double f_x0, double k);
BoundReport gcscg_quotient_bound(const SampleSet& xs, double lip_f, double lip_g, double f_x0,
                                 double g_x0);
BoundReport gcscg_exp_bound(const SampleSet& xs, double lip_f, double f_x0, double base);
BoundReport gcscg_log_bound(const SampleSet& xs, double lip_f, double f_x0, double base);

// Composition bound; needs the Hessian-Lipschitz constant of f, per-component
// gradient and Hessian Lipschitz constants of g, and ||grad f(g(x0))||.
BoundReport gcscg_chain_bound(const ChainContext& ctx, double lip_hess_f,
                              const std::vector<double>& lip_g,
                              const std::vector<double>& lip_hess_g,
                              double grad_f_at_gx0_norm);

// Crude sampled estimate of the Hessian-Lipschitz constant on a ball. Not
// certified: bounds computed from it are indicative only; tests use analytic
// constants.
double sampled_hessian_lipschitz(const std::function<double(const Vector&)>& f,
                                 const Vector& center, double ball_radius, int samples,
                                 unsigned long long seed);

}  // namespace csg
