#include "csg/bounds.hpp"

#include <cmath>
#include <random>
#include <stdexcept>

namespace csg {

namespace {

struct Geometry {
    bool applicable;
    ComparisonSpace space;
    int m;
    double delta;
    double pinv_norm;
};

Geometry analyze(const SampleSet& xs) {
    const Classification cls = classify(xs);
    Geometry g;
    g.m = xs.count();
    g.delta = radius(xs);
    g.applicable = cls != Classification::Undetermined;
    g.space = (cls == Classification::Underdetermined) ? ComparisonSpace::SubspaceU
                                                       : ComparisonSpace::FullSpace;
    g.pinv_norm =
        g.applicable ? spectral_norm(pseudoinverse(scaled_matrix(xs).transpose())) : 0.0;
    return g;
}

BoundReport report(const Geometry& g, double scale,
                   std::vector<std::pair<std::string, double>> constants) {
    BoundReport r;
    r.applicable = g.applicable;
    r.comparison_space = g.space;
    r.m = g.m;
    r.delta = g.delta;
    r.pinv_norm = g.pinv_norm;
    r.constants = std::move(constants);
    if (g.applicable) {
        r.bound = scale * g.pinv_norm * g.delta * g.delta;
    }
    return r;
}

void require_nonneg(double v, const char* msg) {
    if (!(v >= 0.0)) throw std::invalid_argument(msg);
}

}  // namespace

std::string to_string(ComparisonSpace s) {
    return s == ComparisonSpace::FullSpace ? "full-space" : "subspace-U";
}

double taylor_centred_residual_bound(double d_norm, double hessian_lipschitz) {
    require_nonneg(d_norm, "taylor_centred_residual_bound: norm must be nonnegative");
    require_nonneg(hessian_lipschitz,
                   "taylor_centred_residual_bound: constant must be nonnegative");
    return hessian_lipschitz * d_norm * d_norm * d_norm / 3.0;
}

BoundReport gcsg_bound(const SampleSet& xs, const LipschitzData& lip) {
    require_nonneg(lip.hessian_lipschitz, "gcsg_bound: Lipschitz constant must be nonnegative");
    const Geometry g = analyze(xs);
    const double scale = lip.hessian_lipschitz * std::sqrt(static_cast<double>(g.m)) / 6.0;
    return report(g, scale, {{"L", lip.hessian_lipschitz}});
}

BoundReport gcscg_product_bound(const SampleSet& xs, double lip_f, double lip_g, double f_x0,
                                double g_x0) {
    require_nonneg(lip_f, "gcscg_product_bound: Lipschitz constant must be nonnegative");
    require_nonneg(lip_g, "gcscg_product_bound: Lipschitz constant must be nonnegative");
    const Geometry g = analyze(xs);
    const double scale = std::sqrt(static_cast<double>(g.m)) / 6.0 *
                         (lip_g * std::abs(f_x0) + lip_f * std::abs(g_x0));
    return report(g, scale,
                  {{"L_f", lip_f}, {"L_g", lip_g}, {"f_x0", f_x0}, {"g_x0", g_x0}});
}

BoundReport gcscg_product_k_bound(const SampleSet& xs, const std::vector<double>& lips,
                                  const std::vector<double>& values_at_ref) {
    if (lips.size() != values_at_ref.size() || lips.size() < 2) {
        throw std::invalid_argument(
            "gcscg_product_k_bound: needs matching constants for k >= 2 factors");
    }
    for (double l : lips) {
        require_nonneg(l, "gcscg_product_k_bound: Lipschitz constants must be nonnegative");
    }
    const Geometry g = analyze(xs);
    double sum = 0.0;
    for (std::size_t i = 0; i < lips.size(); ++i) {
        double coeff = 1.0;
        for (std::size_t j = 0; j < values_at_ref.size(); ++j) {
            if (j != i) coeff *= std::abs(values_at_ref[j]);
        }
        sum += coeff * lips[i];
    }
    const double scale = std::sqrt(static_cast<double>(g.m)) / 6.0 * sum;
    return report(g, scale, {{"sum_term", sum}});
}

BoundReport gcscg_power_bound(const SampleSet& xs, double lip_f, double f_x0, double k) {
    require_nonneg(lip_f, "gcscg_power_bound: Lipschitz constant must be nonnegative");
    if (k - 1.0 < 0.0 && f_x0 == 0.0) {
        throw std::domain_error("gcscg_power_bound: f(x0) must be nonzero when k-1 < 0");
    }
    const Geometry g = analyze(xs);
    const double scale = lip_f * std::sqrt(static_cast<double>(g.m)) / 6.0 * std::abs(k) *
                         std::pow(std::abs(f_x0), k - 1.0);
    return report(g, scale, {{"L", lip_f}, {"f_x0", f_x0}, {"k", k}});
}

BoundReport gcscg_quotient_bound(const SampleSet& xs, double lip_f, double lip_g, double f_x0,
                                 double g_x0) {
    require_nonneg(lip_f, "gcscg_quotient_bound: Lipschitz constant must be nonnegative");
    require_nonneg(lip_g, "gcscg_quotient_bound: Lipschitz constant must be nonnegative");
    if (g_x0 == 0.0) throw std::domain_error("gcscg_quotient_bound: g(x0) must be nonzero");
    const Geometry g = analyze(xs);
    const double scale =
        std::sqrt(static_cast<double>(g.m)) / 6.0 *
        (lip_f * std::abs(1.0 / g_x0) + lip_g * std::abs(f_x0 / (g_x0 * g_x0)));
    return report(g, scale,
                  {{"L_f", lip_f}, {"L_g", lip_g}, {"f_x0", f_x0}, {"g_x0", g_x0}});
}

BoundReport gcscg_exp_bound(const SampleSet& xs, double lip_f, double f_x0, double base) {
    require_nonneg(lip_f, "gcscg_exp_bound: Lipschitz constant must be nonnegative");
    if (!(base > 0.0)) throw std::domain_error("gcscg_exp_bound: base must be positive");
    const Geometry g = analyze(xs);
    const double scale = std::abs(std::pow(base, f_x0) * std::log(base)) * lip_f *
                         std::sqrt(static_cast<double>(g.m)) / 6.0;
    return report(g, scale, {{"L", lip_f}, {"f_x0", f_x0}, {"a", base}});
}

BoundReport gcscg_log_bound(const SampleSet& xs, double lip_f, double f_x0, double base) {
    require_nonneg(lip_f, "gcscg_log_bound: Lipschitz constant must be nonnegative");
    if (!(base > 0.0) || base == 1.0) {
        throw std::domain_error("gcscg_log_bound: base must be positive and not 1");
    }
    if (f_x0 == 0.0) throw std::domain_error("gcscg_log_bound: f(x0) must be nonzero");
    const Geometry g = analyze(xs);
    const double scale = std::abs(1.0 / (f_x0 * std::log(base))) * lip_f *
                         std::sqrt(static_cast<double>(g.m)) / 6.0;
    return report(g, scale, {{"L", lip_f}, {"f_x0", f_x0}, {"a", base}});
}

BoundReport gcscg_chain_bound(const ChainContext& ctx, double lip_hess_f,
                              const std::vector<double>& lip_g,
                              const std::vector<double>& lip_hess_g,
                              double grad_f_at_gx0_norm) {
    const std::size_t p = ctx.g_tables.size();
    if (lip_g.size() != p || lip_hess_g.size() != p) {
        throw std::invalid_argument(
            "gcscg_chain_bound: needs one gradient and one Hessian constant per component");
    }
    require_nonneg(lip_hess_f, "gcscg_chain_bound: Lipschitz constants must be nonnegative");
    require_nonneg(grad_f_at_gx0_norm, "gcscg_chain_bound: gradient norm must be nonnegative");
    for (double l : lip_g) {
        require_nonneg(l, "gcscg_chain_bound: Lipschitz constants must be nonnegative");
    }
    for (double l : lip_hess_g) {
        require_nonneg(l, "gcscg_chain_bound: Lipschitz constants must be nonnegative");
    }

    const Geometry inner = analyze(ctx.inner);
    const Geometry image = analyze(ctx.image);
    BoundReport r;
    r.comparison_space = inner.space;
    r.m = inner.m;
    r.delta = ctx.delta_star;
    r.pinv_norm = inner.pinv_norm;
    r.applicable = inner.applicable && image.applicable;

    double lip_g_star = 0.0;
    double lip_hess_g_star = 0.0;
    for (double l : lip_g) lip_g_star = std::max(lip_g_star, l);
    for (double l : lip_hess_g) lip_hess_g_star = std::max(lip_hess_g_star, l);
    r.constants = {{"L_hess_f", lip_hess_f},
                   {"L_g_star", lip_g_star},
                   {"L_hess_g_star", lip_hess_g_star},
                   {"grad_f_norm", grad_f_at_gx0_norm},
                   {"pinv_norm_image", image.pinv_norm}};
    if (r.applicable) {
        const double sqrt_m = std::sqrt(static_cast<double>(inner.m));
        const double pd = static_cast<double>(p);
        r.bound = sqrt_m * pd / 6.0 *
                  (sqrt_m * lip_g_star * lip_hess_f * image.pinv_norm +
                   grad_f_at_gx0_norm * lip_hess_g_star) *
                  inner.pinv_norm * ctx.delta_star * ctx.delta_star;
    }
    return r;
}

double sampled_hessian_lipschitz(const std::function<double(const Vector&)>& f,
                                 const Vector& center, double ball_radius, int samples,
                                 unsigned long long seed) {
    if (!(ball_radius > 0.0)) {
        throw std::invalid_argument("sampled_hessian_lipschitz: radius must be positive");
    }
    if (samples < 2) {
        throw std::invalid_argument("sampled_hessian_lipschitz: needs at least two samples");
    }
    const int n = center.dim();
    const double h = std::max(1e-5, 1e-5 * ball_radius);
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);

    auto random_point = [&] {
        std::vector<double> p(static_cast<std::size_t>(n));
        for (int i = 0; i < n; ++i) {
            p[static_cast<std::size_t>(i)] = center[i] + ball_radius * unif(rng);
        }
        return Vector(std::move(p));
    };
    auto hessian_at = [&](const Vector& x) {
        std::vector<double> e(static_cast<std::size_t>(n) * n);
        for (int i = 0; i < n; ++i) {
            for (int j = 0; j < n; ++j) {
                auto shift = [&](double si, double sj) {
                    std::vector<double> p = x.entries();
                    p[static_cast<std::size_t>(i)] += si * h;
                    p[static_cast<std::size_t>(j)] += sj * h;
                    return Vector(std::move(p));
                };
                e[static_cast<std::size_t>(i) * n + j] =
                    (f(shift(1, 1)) - f(shift(1, -1)) - f(shift(-1, 1)) + f(shift(-1, -1))) /
                    (4.0 * h * h);
            }
        }
        return Matrix(n, n, std::move(e));
    };

    double best = 0.0;
    Vector prev = random_point();
    Matrix prev_h = hessian_at(prev);
    for (int s = 1; s < samples; ++s) {
        Vector cur = random_point();
        const double dist = (cur - prev).norm();
        if (dist > 1e-8) {
            const Matrix cur_h = hessian_at(cur);
            best = std::max(best, spectral_norm(cur_h - prev_h) / dist);
            prev = std::move(cur);
            prev_h = cur_h;
        }
    }
    return best;
}

}  // namespace csg
