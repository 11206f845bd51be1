#include "csg/sample_set.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <utility>

#include <json.hpp>

namespace csg {

namespace {

bool same_point(const Vector& a, const Vector& b) {
    for (int i = 0; i < a.dim(); ++i) {
        if (a[i] != b[i]) return false;
    }
    return true;
}

bool is_zero(const Vector& v) {
    for (int i = 0; i < v.dim(); ++i) {
        if (v[i] != 0.0) return false;
    }
    return true;
}

}  // namespace

std::string to_string(Classification c) {
    switch (c) {
        case Classification::Overdetermined: return "overdetermined";
        case Classification::Determined: return "determined";
        case Classification::Underdetermined: return "underdetermined";
        case Classification::Undetermined: return "undetermined";
    }
    return "?";
}

SampleSet::SampleSet(Vector x0, std::vector<Vector> directions)
    : x0_(std::move(x0)), dirs_(std::move(directions)) {
    if (dirs_.empty()) {
        throw std::invalid_argument("sample set: needs at least one direction");
    }
    for (const auto& d : dirs_) {
        if (d.dim() != x0_.dim()) {
            throw std::invalid_argument("sample set: direction dimension mismatch");
        }
        if (is_zero(d)) {
            throw std::invalid_argument("sample set: directions must be nonzero");
        }
    }
    std::vector<Vector> pts;
    pts.reserve(dirs_.size() + 1);
    pts.push_back(x0_);
    for (const auto& d : dirs_) pts.push_back(x0_ + d);
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            if (same_point(pts[i], pts[j])) {
                throw std::invalid_argument("sample set: points must be pairwise distinct");
            }
        }
    }
}

Vector SampleSet::point(int i) const { return x0_ + dirs_[static_cast<std::size_t>(i)]; }

Matrix direction_matrix(const SampleSet& xs) { return Matrix::from_columns(xs.directions()); }

double radius(const SampleSet& xs) {
    double r = 0.0;
    for (const auto& d : xs.directions()) r = std::max(r, d.norm());
    return r;
}

SampleSet reflect(const SampleSet& xs) {
    std::vector<Vector> neg;
    neg.reserve(xs.directions().size());
    for (const auto& d : xs.directions()) neg.push_back(-1.0 * d);
    return SampleSet(xs.x0(), std::move(neg));
}

Classification classify(const SampleSet& xs, double rank_tol) {
    const Matrix s = direction_matrix(xs);
    const int n = s.rows();
    const int m = s.cols();
    const int rank = numerical_rank(s, rank_tol);
    if (m > n && rank == n) return Classification::Overdetermined;
    if (m == n && rank == n) return Classification::Determined;
    if (m < n && rank == m) return Classification::Underdetermined;
    return Classification::Undetermined;
}

Matrix scaled_matrix(const SampleSet& xs) {
    return (1.0 / radius(xs)) * direction_matrix(xs);
}

SampleSet scale_directions(const SampleSet& xs, double factor) {
    if (!(factor > 0.0)) {
        throw std::invalid_argument("scale_directions: factor must be positive");
    }
    std::vector<Vector> scaled;
    scaled.reserve(xs.directions().size());
    for (const auto& d : xs.directions()) scaled.push_back(factor * d);
    return SampleSet(xs.x0(), std::move(scaled));
}

void validate_table(const EvaluationTable& tab, int m) {
    if (!std::isfinite(tab.f_x0)) {
        throw std::invalid_argument("evaluation table: entries must be finite");
    }
    if (static_cast<int>(tab.f_plus.size()) != m) {
        throw std::invalid_argument("evaluation table: f_plus length must equal m");
    }
    for (double v : tab.f_plus) {
        if (!std::isfinite(v)) {
            throw std::invalid_argument("evaluation table: entries must be finite");
        }
    }
    if (tab.f_minus) {
        if (static_cast<int>(tab.f_minus->size()) != m) {
            throw std::invalid_argument("evaluation table: f_minus length must equal m");
        }
        for (double v : *tab.f_minus) {
            if (!std::isfinite(v)) {
                throw std::invalid_argument("evaluation table: entries must be finite");
            }
        }
    }
}

EvaluationTable reflect_table(const EvaluationTable& tab) {
    if (!tab.f_minus) {
        throw std::invalid_argument("reflect_table: reflected values missing");
    }
    return EvaluationTable{tab.f_x0, *tab.f_minus, tab.f_plus};
}

Vector delta_s(const EvaluationTable& tab) {
    std::vector<double> d(tab.f_plus.size());
    for (std::size_t i = 0; i < tab.f_plus.size(); ++i) d[i] = tab.f_plus[i] - tab.f_x0;
    return Vector(std::move(d));
}

Vector delta_c(const EvaluationTable& tab) {
    if (!tab.f_minus) {
        throw std::invalid_argument("delta_c: reflected values missing");
    }
    std::vector<double> d(tab.f_plus.size());
    for (std::size_t i = 0; i < tab.f_plus.size(); ++i) {
        d[i] = 0.5 * (tab.f_plus[i] - (*tab.f_minus)[i]);
    }
    return Vector(std::move(d));
}

EvaluationTable tabulate(const std::function<double(const Vector&)>& f, const SampleSet& xs,
                         bool with_reflection) {
    EvaluationTable tab;
    tab.f_x0 = f(xs.x0());
    tab.f_plus.reserve(xs.directions().size());
    for (const auto& d : xs.directions()) tab.f_plus.push_back(f(xs.x0() + d));
    if (with_reflection) {
        std::vector<double> minus;
        minus.reserve(xs.directions().size());
        for (const auto& d : xs.directions()) minus.push_back(f(xs.x0() - d));
        tab.f_minus = std::move(minus);
    }
    validate_table(tab, xs.count());
    return tab;
}

namespace {

SampleSet from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("x0") || !j.contains("directions")) {
        throw std::invalid_argument(
            "sample-set file: expected an object with \"x0\" and \"directions\"");
    }
    std::vector<double> x0 = j.at("x0").get<std::vector<double>>();
    std::vector<std::vector<double>> dirs =
        j.at("directions").get<std::vector<std::vector<double>>>();
    if (x0.empty()) throw std::invalid_argument("sample-set file: x0 must be nonempty");
    if (dirs.empty()) {
        throw std::invalid_argument("sample-set file: needs at least one direction");
    }
    std::vector<Vector> dv;
    dv.reserve(dirs.size());
    for (auto& d : dirs) dv.emplace_back(std::move(d));
    return SampleSet(Vector(std::move(x0)), std::move(dv));
}

}  // namespace

SampleSet parse_sample_set(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("sample-set file: invalid JSON: ") + e.what());
    }
    return from_json(j);
}

SampleSet load_sample_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("sample-set file: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_sample_set(ss.str());
}

}  // namespace csg
