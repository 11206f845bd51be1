#pragma once

#include <vector>

#include "csg/gradients.hpp"
#include "csg/linalg.hpp"
#include "csg/sample_set.hpp"

// Calculus rules for centred simplex gradients. Each rule comes in two forms:
//
//  * an exact decomposition (rule value + error term E^c, combined with the
//    rule's sign into a total that reproduces the directly computed centred
//    gradient of the compound function), and
//  * the error-free approximation that simply drops E^c.
//
// The E^s building blocks are one-sided and evaluated over whichever set they
// are given; the centred error terms average E^s over X and X^-. Note that
// over X^- the pseudoinverse factor uses the reflected direction matrix -S.

namespace csg {

struct CalculusDecomposition {
    Vector rule_value;  // the calculus-formula part
    Vector error_term;  // E^c (or E for the chain rule)
    Vector total;       // signed combination, equals the direct centred gradient
};

// delta^s_{f|g}: componentwise products of the one-sided increments.
Vector product_difference(const EvaluationTable& tf, const EvaluationTable& tg);

// One-sided error terms over the given set (pass the reflected set and
// reflected tables to evaluate over X^-).
Vector gsg_error_product(const SampleSet& xs, const EvaluationTable& tf,
                         const EvaluationTable& tg);
Vector gsg_error_product_k(const SampleSet& xs, const std::vector<EvaluationTable>& tabs);
Vector gsg_error_power(const SampleSet& xs, const EvaluationTable& tf, int k);
Vector gsg_error_negative_power(const SampleSet& xs, const EvaluationTable& tf, int k);
Vector gsg_error_quotient(const SampleSet& xs, const EvaluationTable& tf,
                          const EvaluationTable& tg);

// Exact centred-gradient rules (total = direct centred gradient of the
// compound function).
CalculusDecomposition gcsg_product(const SampleSet& xs, const EvaluationTable& tf,
                                   const EvaluationTable& tg);
CalculusDecomposition gcsg_product_k(const SampleSet& xs,
                                     const std::vector<EvaluationTable>& tabs);
// k any nonzero integer; the negative-exponent form requires every f value
// nonzero.
CalculusDecomposition gcsg_power(const SampleSet& xs, const EvaluationTable& tf, int k);
CalculusDecomposition gcsg_quotient(const SampleSet& xs, const EvaluationTable& tf,
                                    const EvaluationTable& tg);

// Composition setup: the image set g(X) with directions h^i = g(x0+d^i)-g(x0),
// component tables for g over X, and the table of f over the image set.
struct ChainContext {
    SampleSet inner;
    SampleSet image;
    std::vector<EvaluationTable> g_tables;  // p tables, reflected values present
    EvaluationTable f_image;                // f at g(x0) +- h^i, reflected present
    double delta;       // radius of X
    double delta_g;     // radius of g(X)
    double delta_star;  // max of the two
};

ChainContext make_chain_context(const SampleSet& xs, std::vector<EvaluationTable> g_tables,
                                EvaluationTable f_image);

// m x p matrix of centred component differences of g over X.
Matrix centred_difference_matrix(const ChainContext& ctx);

CalculusDecomposition gcsg_chain(const ChainContext& ctx, const EvaluationTable& fog_tab);

// Error-free approximations (Table-2 forms).
GradientEstimate gcscg_product(const SampleSet& xs, const EvaluationTable& tf,
                               const EvaluationTable& tg);
GradientEstimate gcscg_product_k(const SampleSet& xs, const std::vector<EvaluationTable>& tabs);
GradientEstimate gcscg_power(const SampleSet& xs, const EvaluationTable& tf, double k);
GradientEstimate gcscg_quotient(const SampleSet& xs, const EvaluationTable& tf,
                                const EvaluationTable& tg);
GradientEstimate gcscg_exp(const SampleSet& xs, const EvaluationTable& tf, double a);
GradientEstimate gcscg_log(const SampleSet& xs, const EvaluationTable& tf, double a);
GradientEstimate gcscg_chain(const ChainContext& ctx);

}  // namespace csg
