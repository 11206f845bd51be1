#include "csg/calculus.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace csg {

namespace {

Vector apply_pinv_st(const SampleSet& xs, const Vector& rhs) {
    return solve_least_squares(direction_matrix(xs).transpose(), rhs);
}

void require_reflected(const EvaluationTable& tab, const char* who) {
    if (!tab.f_minus) {
        throw std::invalid_argument(std::string(who) + ": reflected values missing");
    }
}

void require_nonzero(double v, const char* msg) {
    if (v == 0.0) throw std::domain_error(msg);
}

void require_all_nonzero(const EvaluationTable& tab, const char* msg) {
    require_nonzero(tab.f_x0, msg);
    for (double v : tab.f_plus) require_nonzero(v, msg);
    if (tab.f_minus) {
        for (double v : *tab.f_minus) require_nonzero(v, msg);
    }
}

// Average of a one-sided error term over X and X^-.
template <typename ErrFn>
Vector centred_error(const SampleSet& xs, ErrFn&& one_sided) {
    const SampleSet neg = reflect(xs);
    return 0.5 * (one_sided(xs, false) + one_sided(neg, true));
}

GradientEstimate tag(Vector value, const char* method, const SampleSet& xs, int eval_count) {
    return GradientEstimate{std::move(value), method, xs.count(), radius(xs), eval_count};
}

}  // namespace

Vector product_difference(const EvaluationTable& tf, const EvaluationTable& tg) {
    if (tf.f_plus.size() != tg.f_plus.size()) {
        throw std::invalid_argument("product_difference: table size mismatch");
    }
    std::vector<double> d(tf.f_plus.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        d[i] = (tf.f_plus[i] - tf.f_x0) * (tg.f_plus[i] - tg.f_x0);
    }
    return Vector(std::move(d));
}

Vector gsg_error_product(const SampleSet& xs, const EvaluationTable& tf,
                         const EvaluationTable& tg) {
    validate_table(tf, xs.count());
    validate_table(tg, xs.count());
    return apply_pinv_st(xs, product_difference(tf, tg));
}

Vector gsg_error_product_k(const SampleSet& xs, const std::vector<EvaluationTable>& tabs) {
    if (tabs.size() < 2) {
        throw std::invalid_argument("gsg_error_product_k: needs k >= 2 factors");
    }
    const int m = xs.count();
    for (const auto& t : tabs) validate_table(t, m);
    std::vector<double> rhs(static_cast<std::size_t>(m));
    double prod_x0 = 1.0;
    for (const auto& t : tabs) prod_x0 *= t.f_x0;
    for (int i = 0; i < m; ++i) {
        double prod_plus = 1.0;
        for (const auto& t : tabs) prod_plus *= t.f_plus[static_cast<std::size_t>(i)];
        double correction = 0.0;
        for (std::size_t a = 0; a < tabs.size(); ++a) {
            double coeff = 1.0;
            for (std::size_t b = 0; b < tabs.size(); ++b) {
                if (b != a) coeff *= tabs[b].f_x0;
            }
            correction += coeff * (tabs[a].f_plus[static_cast<std::size_t>(i)] - tabs[a].f_x0);
        }
        rhs[static_cast<std::size_t>(i)] = prod_plus - prod_x0 - correction;
    }
    return apply_pinv_st(xs, Vector(std::move(rhs)));
}

Vector gsg_error_power(const SampleSet& xs, const EvaluationTable& tf, int k) {
    if (k < 1) throw std::invalid_argument("gsg_error_power: exponent must be >= 1");
    validate_table(tf, xs.count());
    const int m = xs.count();
    std::vector<double> rhs(static_cast<std::size_t>(m), 0.0);
    for (int i = 1; i <= k - 1; ++i) {
        const double coeff = std::pow(tf.f_x0, k - 1 - i);
        for (int j = 0; j < m; ++j) {
            const double fj = tf.f_plus[static_cast<std::size_t>(j)];
            rhs[static_cast<std::size_t>(j)] +=
                coeff * (fj - tf.f_x0) * (std::pow(fj, i) - std::pow(tf.f_x0, i));
        }
    }
    return apply_pinv_st(xs, Vector(std::move(rhs)));
}

Vector gsg_error_negative_power(const SampleSet& xs, const EvaluationTable& tf, int k) {
    if (k < 1) throw std::invalid_argument("gsg_error_negative_power: exponent must be >= 1");
    validate_table(tf, xs.count());
    require_all_nonzero(tf, "gsg_error_negative_power: f must be nonzero at every point");
    const int m = xs.count();
    const double f0 = tf.f_x0;
    std::vector<double> rhs(static_cast<std::size_t>(m), 0.0);
    for (int j = 0; j < m; ++j) {
        const double fj = tf.f_plus[static_cast<std::size_t>(j)];
        double acc = k * (1.0 / fj - 1.0 / f0) * (fj - f0);
        for (int i = 1; i <= k - 1; ++i) {
            acc -= std::pow(f0, 1 + i) * (1.0 / fj - 1.0 / f0) *
                   (std::pow(fj, -i) - std::pow(f0, -i));
        }
        rhs[static_cast<std::size_t>(j)] = acc / std::pow(f0, k);
    }
    return apply_pinv_st(xs, Vector(std::move(rhs)));
}

Vector gsg_error_quotient(const SampleSet& xs, const EvaluationTable& tf,
                          const EvaluationTable& tg) {
    validate_table(tf, xs.count());
    validate_table(tg, xs.count());
    require_nonzero(tg.f_x0, "gsg_error_quotient: g(x0) must be nonzero");
    const int m = xs.count();
    std::vector<double> rhs(static_cast<std::size_t>(m));
    for (int j = 0; j < m; ++j) {
        const double gj = tg.f_plus[static_cast<std::size_t>(j)];
        require_nonzero(gj, "gsg_error_quotient: g must be nonzero at every point");
        const double fj = tf.f_plus[static_cast<std::size_t>(j)];
        rhs[static_cast<std::size_t>(j)] =
            (fj / gj - tf.f_x0 / tg.f_x0) * (gj - tg.f_x0) / tg.f_x0;
    }
    return apply_pinv_st(xs, Vector(std::move(rhs)));
}

CalculusDecomposition gcsg_product(const SampleSet& xs, const EvaluationTable& tf,
                                   const EvaluationTable& tg) {
    require_reflected(tf, "gcsg_product");
    require_reflected(tg, "gcsg_product");
    const Vector grad_f = gcsg(xs, tf).value;
    const Vector grad_g = gcsg(xs, tg).value;
    Vector rule = tf.f_x0 * grad_g + tg.f_x0 * grad_f;
    Vector err = centred_error(xs, [&](const SampleSet& set, bool reflected) {
        return reflected ? gsg_error_product(set, reflect_table(tf), reflect_table(tg))
                         : gsg_error_product(set, tf, tg);
    });
    Vector total = rule + err;
    return CalculusDecomposition{std::move(rule), std::move(err), std::move(total)};
}

CalculusDecomposition gcsg_product_k(const SampleSet& xs,
                                     const std::vector<EvaluationTable>& tabs) {
    if (tabs.size() < 2) {
        throw std::invalid_argument("gcsg_product_k: needs k >= 2 factors");
    }
    for (const auto& t : tabs) require_reflected(t, "gcsg_product_k");
    Vector rule = Vector::zero(xs.dimension());
    for (std::size_t a = 0; a < tabs.size(); ++a) {
        double coeff = 1.0;
        for (std::size_t b = 0; b < tabs.size(); ++b) {
            if (b != a) coeff *= tabs[b].f_x0;
        }
        rule = rule + coeff * gcsg(xs, tabs[a]).value;
    }
    Vector err = centred_error(xs, [&](const SampleSet& set, bool reflected) {
        if (!reflected) return gsg_error_product_k(set, tabs);
        std::vector<EvaluationTable> rt;
        rt.reserve(tabs.size());
        for (const auto& t : tabs) rt.push_back(reflect_table(t));
        return gsg_error_product_k(set, rt);
    });
    Vector total = rule + err;
    return CalculusDecomposition{std::move(rule), std::move(err), std::move(total)};
}

CalculusDecomposition gcsg_power(const SampleSet& xs, const EvaluationTable& tf, int k) {
    if (k == 0) throw std::invalid_argument("gcsg_power: exponent must be nonzero");
    require_reflected(tf, "gcsg_power");
    if (k < 0) {
        require_all_nonzero(tf, "gcsg_power: f must be nonzero at every point for negative exponents");
    }
    const Vector grad_f = gcsg(xs, tf).value;
    Vector rule = (k * std::pow(tf.f_x0, k - 1)) * grad_f;
    const int kk = std::abs(k);
    Vector err = centred_error(xs, [&](const SampleSet& set, bool reflected) {
        const EvaluationTable t = reflected ? reflect_table(tf) : tf;
        return k > 0 ? gsg_error_power(set, t, kk) : gsg_error_negative_power(set, t, kk);
    });
    Vector total = k > 0 ? rule + err : rule - err;
    return CalculusDecomposition{std::move(rule), std::move(err), std::move(total)};
}

CalculusDecomposition gcsg_quotient(const SampleSet& xs, const EvaluationTable& tf,
                                    const EvaluationTable& tg) {
    require_reflected(tf, "gcsg_quotient");
    require_reflected(tg, "gcsg_quotient");
    require_all_nonzero(tg, "gcsg_quotient: g must be nonzero at every point");
    const Vector grad_f = gcsg(xs, tf).value;
    const Vector grad_g = gcsg(xs, tg).value;
    const double g0 = tg.f_x0;
    Vector rule = (1.0 / (g0 * g0)) * (g0 * grad_f - tf.f_x0 * grad_g);
    Vector err = centred_error(xs, [&](const SampleSet& set, bool reflected) {
        return reflected ? gsg_error_quotient(set, reflect_table(tf), reflect_table(tg))
                         : gsg_error_quotient(set, tf, tg);
    });
    Vector total = rule - err;
    return CalculusDecomposition{std::move(rule), std::move(err), std::move(total)};
}

ChainContext make_chain_context(const SampleSet& xs, std::vector<EvaluationTable> g_tables,
                                EvaluationTable f_image) {
    if (g_tables.empty()) {
        throw std::invalid_argument("chain rule: needs at least one component table for g");
    }
    const int m = xs.count();
    for (const auto& t : g_tables) {
        validate_table(t, m);
        require_reflected(t, "chain rule (g component)");
    }
    validate_table(f_image, m);
    require_reflected(f_image, "chain rule (f over image set)");

    const int p = static_cast<int>(g_tables.size());
    std::vector<double> x0(static_cast<std::size_t>(p));
    for (int j = 0; j < p; ++j) x0[static_cast<std::size_t>(j)] = g_tables[static_cast<std::size_t>(j)].f_x0;
    std::vector<Vector> hs;
    hs.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        std::vector<double> h(static_cast<std::size_t>(p));
        for (int j = 0; j < p; ++j) {
            const auto& t = g_tables[static_cast<std::size_t>(j)];
            h[static_cast<std::size_t>(j)] = t.f_plus[static_cast<std::size_t>(i)] - t.f_x0;
        }
        hs.emplace_back(std::move(h));
    }
    SampleSet image = [&] {
        try {
            return SampleSet(Vector(std::move(x0)), std::move(hs));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument(std::string("chain rule: degenerate image set (") +
                                        e.what() + ")");
        }
    }();
    const double d = radius(xs);
    const double dg = radius(image);
    return ChainContext{xs,
                        std::move(image),
                        std::move(g_tables),
                        std::move(f_image),
                        d,
                        dg,
                        std::max(d, dg)};
}

Matrix centred_difference_matrix(const ChainContext& ctx) {
    const int m = ctx.inner.count();
    const int p = static_cast<int>(ctx.g_tables.size());
    std::vector<double> e(static_cast<std::size_t>(m) * p);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < p; ++j) {
            const auto& t = ctx.g_tables[static_cast<std::size_t>(j)];
            e[static_cast<std::size_t>(i) * p + j] =
                0.5 * (t.f_plus[static_cast<std::size_t>(i)] -
                       (*t.f_minus)[static_cast<std::size_t>(i)]);
        }
    }
    return Matrix(m, p, std::move(e));
}

CalculusDecomposition gcsg_chain(const ChainContext& ctx, const EvaluationTable& fog_tab) {
    validate_table(fog_tab, ctx.inner.count());
    require_reflected(fog_tab, "gcsg_chain (f o g over X)");

    const Matrix dg = centred_difference_matrix(ctx);                    // m x p
    const Matrix pinv_sgt = pseudoinverse(direction_matrix(ctx.image).transpose());  // p x m
    const Vector dc_f_image = delta_c(ctx.f_image);                      // m
    const Vector dc_fog = delta_c(fog_tab);                              // m

    const Vector grad_f_image = pinv_sgt * dc_f_image;                   // p
    Vector rule = apply_pinv_st(ctx.inner, dg * grad_f_image);           // J^c_g^T grad

    const Vector e_tilde = dc_f_image - dc_fog;                          // m
    const Matrix e_hat = dg * pinv_sgt - Matrix::identity(ctx.inner.count());  // m x m
    const Vector inner_sum =
        dg * (pinv_sgt * e_tilde) + e_hat * dc_f_image - e_hat * e_tilde;
    Vector err = apply_pinv_st(ctx.inner, inner_sum);

    Vector total = rule - err;
    return CalculusDecomposition{std::move(rule), std::move(err), std::move(total)};
}

GradientEstimate gcscg_product(const SampleSet& xs, const EvaluationTable& tf,
                               const EvaluationTable& tg) {
    require_reflected(tf, "gcscg_product");
    require_reflected(tg, "gcscg_product");
    Vector value = tf.f_x0 * gcsg(xs, tg).value + tg.f_x0 * gcsg(xs, tf).value;
    return tag(std::move(value), "gcscg:product", xs, 4 * xs.count() + 2);
}

GradientEstimate gcscg_product_k(const SampleSet& xs, const std::vector<EvaluationTable>& tabs) {
    if (tabs.size() < 2) {
        throw std::invalid_argument("gcscg_product_k: needs k >= 2 factors");
    }
    for (const auto& t : tabs) require_reflected(t, "gcscg_product_k");
    Vector value = Vector::zero(xs.dimension());
    for (std::size_t a = 0; a < tabs.size(); ++a) {
        double coeff = 1.0;
        for (std::size_t b = 0; b < tabs.size(); ++b) {
            if (b != a) coeff *= tabs[b].f_x0;
        }
        value = value + coeff * gcsg(xs, tabs[a]).value;
    }
    return tag(std::move(value), "gcscg:product_k", xs,
               static_cast<int>(tabs.size()) * (2 * xs.count() + 1));
}

GradientEstimate gcscg_power(const SampleSet& xs, const EvaluationTable& tf, double k) {
    require_reflected(tf, "gcscg_power");
    if (k - 1.0 < 0.0 && tf.f_x0 == 0.0) {
        throw std::domain_error("gcscg_power: f(x0) must be nonzero when k-1 < 0");
    }
    Vector value = (k * std::pow(tf.f_x0, k - 1.0)) * gcsg(xs, tf).value;
    return tag(std::move(value), "gcscg:power", xs, 2 * xs.count() + 1);
}

GradientEstimate gcscg_quotient(const SampleSet& xs, const EvaluationTable& tf,
                                const EvaluationTable& tg) {
    require_reflected(tf, "gcscg_quotient");
    require_reflected(tg, "gcscg_quotient");
    require_nonzero(tg.f_x0, "gcscg_quotient: g(x0) must be nonzero");
    const double g0 = tg.f_x0;
    Vector value = (1.0 / (g0 * g0)) * (g0 * gcsg(xs, tf).value - tf.f_x0 * gcsg(xs, tg).value);
    return tag(std::move(value), "gcscg:quotient", xs, 4 * xs.count() + 2);
}

GradientEstimate gcscg_exp(const SampleSet& xs, const EvaluationTable& tf, double a) {
    require_reflected(tf, "gcscg_exp");
    if (!(a > 0.0)) throw std::domain_error("gcscg_exp: base must be positive");
    Vector value = (std::pow(a, tf.f_x0) * std::log(a)) * gcsg(xs, tf).value;
    return tag(std::move(value), "gcscg:exp", xs, 2 * xs.count() + 1);
}

GradientEstimate gcscg_log(const SampleSet& xs, const EvaluationTable& tf, double a) {
    require_reflected(tf, "gcscg_log");
    if (!(a > 0.0) || a == 1.0) {
        throw std::domain_error("gcscg_log: base must be positive and not 1");
    }
    require_nonzero(tf.f_x0, "gcscg_log: f(x0) must be nonzero");
    Vector value = (1.0 / (tf.f_x0 * std::log(a))) * gcsg(xs, tf).value;
    return tag(std::move(value), "gcscg:log", xs, 2 * xs.count() + 1);
}

GradientEstimate gcscg_chain(const ChainContext& ctx) {
    const CentredJacobian jac = centred_jacobian(ctx.inner, ctx.g_tables);
    const Vector grad_f_image = gcsg(ctx.image, ctx.f_image).value;
    Vector value = jac.matrix.transpose() * grad_f_image;
    const int m = ctx.inner.count();
    const int p = static_cast<int>(ctx.g_tables.size());
    return GradientEstimate{std::move(value), "gcscg:chain", m, radius(ctx.inner),
                            p * (2 * m + 1) + 2 * m};
}

}  // namespace csg
