#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "csg/linalg.hpp"

// Ordered sample sets: a reference point x0 plus m nonzero direction vectors
// d^i, so the implied points are x0, x0+d^1, ..., x0+d^m. Distinctness of the
// implied points is checked exactly (componentwise ==), never by tolerance.

namespace csg {

enum class Classification { Overdetermined, Determined, Underdetermined, Undetermined };

std::string to_string(Classification c);

class SampleSet {
public:
    SampleSet(Vector x0, std::vector<Vector> directions);

    const Vector& x0() const { return x0_; }
    const std::vector<Vector>& directions() const { return dirs_; }
    int dimension() const { return x0_.dim(); }   // n
    int count() const { return static_cast<int>(dirs_.size()); }  // m
    Vector point(int i) const;  // x0 + d^i, 1-based over directions via i in [0, m)

private:
    Vector x0_;
    std::vector<Vector> dirs_;
};

// S = [d^1 ... d^m], n x m, column order preserved.
Matrix direction_matrix(const SampleSet& xs);

// Delta = max_i ||d^i||.
double radius(const SampleSet& xs);

// Same x0, directions negated, order preserved. An involution.
SampleSet reflect(const SampleSet& xs);

// Case split on m vs n and the numerical rank of S.
Classification classify(const SampleSet& xs, double rank_tol = 0.0);

// S / Delta; every column has norm <= 1 and at least one column has norm 1.
Matrix scaled_matrix(const SampleSet& xs);

// Directions multiplied by a positive factor (geometry templates scaled to a
// target radius).
SampleSet scale_directions(const SampleSet& xs, double factor);

// Function values over a sample set. f_minus holds values at the reflected
// points x0 - d^i when present.
struct EvaluationTable {
    double f_x0;
    std::vector<double> f_plus;
    std::optional<std::vector<double>> f_minus;
};

void validate_table(const EvaluationTable& tab, int m);

// Table for the reflected set X^-: the plus/minus roles swap.
EvaluationTable reflect_table(const EvaluationTable& tab);

// delta^s: component i is f(x0+d^i) - f(x0).
Vector delta_s(const EvaluationTable& tab);

// delta^c: component i is (f(x0+d^i) - f(x0-d^i)) / 2. Requires f_minus.
Vector delta_c(const EvaluationTable& tab);

// Evaluates a callable over the set (and its reflection when requested).
EvaluationTable tabulate(const std::function<double(const Vector&)>& f, const SampleSet& xs,
                         bool with_reflection);

// JSON sample-set format: {"x0": [reals], "directions": [[reals], ...]}.
SampleSet load_sample_set(const std::string& path);
SampleSet parse_sample_set(const std::string& json_text);

}  // namespace csg
