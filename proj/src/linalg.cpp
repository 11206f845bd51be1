#include "csg/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>
#include <utility>

#include "csg/kernels.hpp"

namespace csg {

namespace {

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

void require_finite(const std::vector<double>& e, const char* what) {
    for (double x : e) {
        if (!std::isfinite(x)) {
            throw std::invalid_argument(std::string(what) + ": entries must be finite");
        }
    }
}

}  // namespace

Vector::Vector(std::vector<double> entries) : e_(std::move(entries)) {
    require(!e_.empty(), "Vector: dimension must be positive");
    require_finite(e_, "Vector");
}

Vector::Vector(std::initializer_list<double> entries)
    : Vector(std::vector<double>(entries)) {}

Vector Vector::zero(int dim) {
    require(dim > 0, "Vector: dimension must be positive");
    return Vector(std::vector<double>(static_cast<std::size_t>(dim), 0.0));
}

double Vector::norm() const {
    return std::sqrt(kernels::active().dot(e_.data(), e_.data(), e_.size()));
}

Vector operator+(const Vector& a, const Vector& b) {
    require(a.dim() == b.dim(), "Vector +: dimension mismatch");
    std::vector<double> r = a.e_;
    kernels::active().axpy(1.0, b.e_.data(), r.data(), r.size());
    return Vector(std::move(r));
}

Vector operator-(const Vector& a, const Vector& b) {
    require(a.dim() == b.dim(), "Vector -: dimension mismatch");
    std::vector<double> r = a.e_;
    kernels::active().axpy(-1.0, b.e_.data(), r.data(), r.size());
    return Vector(std::move(r));
}

Vector operator*(double s, const Vector& v) {
    std::vector<double> r = v.e_;
    kernels::active().scale(r.data(), r.size(), s);
    return Vector(std::move(r));
}

double dot(const Vector& a, const Vector& b) {
    require(a.dim() == b.dim(), "dot: dimension mismatch");
    return kernels::active().dot(a.data(), b.data(), a.entries().size());
}

Matrix::Matrix(int rows, int cols) : rows_(rows), cols_(cols) {
    e_.assign(static_cast<std::size_t>(rows) * cols, 0.0);
}

Matrix::Matrix(int rows, int cols, std::vector<double> row_major)
    : rows_(rows), cols_(cols), e_(std::move(row_major)) {
    require(rows > 0 && cols > 0, "Matrix: shape must be positive");
    require(e_.size() == static_cast<std::size_t>(rows) * cols,
            "Matrix: entry count must equal rows*cols");
    require_finite(e_, "Matrix");
}

Matrix::Matrix(std::initializer_list<std::initializer_list<double>> rows)
    : rows_(static_cast<int>(rows.size())), cols_(0) {
    require(rows_ > 0, "Matrix: shape must be positive");
    cols_ = static_cast<int>(rows.begin()->size());
    require(cols_ > 0, "Matrix: shape must be positive");
    e_.reserve(static_cast<std::size_t>(rows_) * cols_);
    for (const auto& r : rows) {
        require(static_cast<int>(r.size()) == cols_, "Matrix: ragged rows");
        e_.insert(e_.end(), r.begin(), r.end());
    }
    require_finite(e_, "Matrix");
}

Matrix Matrix::zero(int rows, int cols) {
    require(rows > 0 && cols > 0, "Matrix: shape must be positive");
    return Matrix(rows, cols);
}

Matrix Matrix::identity(int n) {
    Matrix m = zero(n, n);
    for (int i = 0; i < n; ++i) m.e_[static_cast<std::size_t>(i) * n + i] = 1.0;
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols) {
    require(!cols.empty(), "Matrix: shape must be positive");
    const int n = cols.front().dim();
    for (const auto& c : cols) require(c.dim() == n, "Matrix: ragged columns");
    Matrix m(static_cast<int>(n), static_cast<int>(cols.size()));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
            m.e_[static_cast<std::size_t>(i) * m.cols_ + j] = cols[static_cast<std::size_t>(j)][i];
        }
    }
    return m;
}

Matrix Matrix::transpose() const {
    Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            t.e_[static_cast<std::size_t>(j) * rows_ + i] = (*this)(i, j);
        }
    }
    return t;
}

Vector Matrix::column(int j) const {
    std::vector<double> c(static_cast<std::size_t>(rows_));
    for (int i = 0; i < rows_; ++i) c[static_cast<std::size_t>(i)] = (*this)(i, j);
    return Vector(std::move(c));
}

double Matrix::frobenius_norm() const {
    return std::sqrt(kernels::active().dot(e_.data(), e_.data(), e_.size()));
}

double Matrix::max_abs() const {
    double m = 0.0;
    for (double x : e_) m = std::max(m, std::abs(x));
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "Matrix +: shape mismatch");
    Matrix r = a;
    kernels::active().axpy(1.0, b.e_.data(), r.e_.data(), r.e_.size());
    return r;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
    require(a.rows_ == b.rows_ && a.cols_ == b.cols_, "Matrix -: shape mismatch");
    Matrix r = a;
    kernels::active().axpy(-1.0, b.e_.data(), r.e_.data(), r.e_.size());
    return r;
}

Matrix operator*(double s, const Matrix& a) {
    Matrix r = a;
    kernels::active().scale(r.e_.data(), r.e_.size(), s);
    return r;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
    require(a.cols_ == b.rows_, "Matrix *: inner dimension mismatch");
    const auto& ops = kernels::active();
    Matrix c(a.rows_, b.cols_);
    for (int i = 0; i < a.rows_; ++i) {
        double* ci = c.row_ptr(i);
        for (int t = 0; t < a.cols_; ++t) {
            ops.axpy(a(i, t), b.row_ptr(t), ci, static_cast<std::size_t>(b.cols_));
        }
    }
    return c;
}

Vector operator*(const Matrix& a, const Vector& x) {
    require(a.cols_ == x.dim(), "Matrix * Vector: dimension mismatch");
    const auto& ops = kernels::active();
    std::vector<double> y(static_cast<std::size_t>(a.rows_));
    for (int i = 0; i < a.rows_; ++i) {
        y[static_cast<std::size_t>(i)] =
            ops.dot(a.row_ptr(i), x.data(), static_cast<std::size_t>(a.cols_));
    }
    return Vector(std::move(y));
}

namespace {

// One-sided Jacobi on the columns of a (rows >= cols). Works on transposed
// storage so each column is a contiguous row and the kernels apply.
struct JacobiState {
    int r, c;
    std::vector<double> wt;  // c x r, row j = column j of the working matrix
    std::vector<double> vt;  // c x c, row j = column j of V

    double* w(int j) { return wt.data() + static_cast<std::size_t>(j) * r; }
    double* v(int j) { return vt.data() + static_cast<std::size_t>(j) * c; }
};

SvdResult svd_tall(const Matrix& a) {
    const auto& ops = kernels::active();
    const int r = a.rows();
    const int c = a.cols();
    JacobiState st{r, c, {}, {}};
    st.wt.assign(static_cast<std::size_t>(c) * r, 0.0);
    st.vt.assign(static_cast<std::size_t>(c) * c, 0.0);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < c; ++j) st.w(j)[i] = a(i, j);
    }
    for (int j = 0; j < c; ++j) st.v(j)[j] = 1.0;

    constexpr int kMaxSweeps = 64;
    constexpr double kOrthTol = 1e-15;
    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
        bool rotated = false;
        for (int p = 0; p < c - 1; ++p) {
            for (int q = p + 1; q < c; ++q) {
                const double alpha = ops.dot(st.w(p), st.w(p), static_cast<std::size_t>(r));
                const double beta = ops.dot(st.w(q), st.w(q), static_cast<std::size_t>(r));
                const double gamma = ops.dot(st.w(p), st.w(q), static_cast<std::size_t>(r));
                if (gamma == 0.0) continue;
                if (std::abs(gamma) <= kOrthTol * std::sqrt(alpha) * std::sqrt(beta)) continue;
                const double zeta = (beta - alpha) / (2.0 * gamma);
                const double t =
                    (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double cs = 1.0 / std::sqrt(1.0 + t * t);
                const double sn = cs * t;
                ops.rot(st.w(p), st.w(q), static_cast<std::size_t>(r), cs, sn);
                ops.rot(st.v(p), st.v(q), static_cast<std::size_t>(c), cs, sn);
                rotated = true;
            }
        }
        if (!rotated) break;
    }

    std::vector<double> sigma(static_cast<std::size_t>(c));
    for (int j = 0; j < c; ++j) {
        sigma[static_cast<std::size_t>(j)] =
            std::sqrt(ops.dot(st.w(j), st.w(j), static_cast<std::size_t>(r)));
    }

    // Sort singular values descending, permuting columns alongside.
    std::vector<int> order(static_cast<std::size_t>(c));
    for (int j = 0; j < c; ++j) order[static_cast<std::size_t>(j)] = j;
    std::stable_sort(order.begin(), order.end(), [&](int i, int j) {
        return sigma[static_cast<std::size_t>(i)] > sigma[static_cast<std::size_t>(j)];
    });

    std::vector<double> sorted(static_cast<std::size_t>(c));
    std::vector<double> ue(static_cast<std::size_t>(r) * c, 0.0);
    std::vector<double> ve(static_cast<std::size_t>(c) * c, 0.0);
    for (int jj = 0; jj < c; ++jj) {
        const int j = order[static_cast<std::size_t>(jj)];
        const double s = sigma[static_cast<std::size_t>(j)];
        sorted[static_cast<std::size_t>(jj)] = s;
        if (s > 0.0) {
            for (int i = 0; i < r; ++i) {
                ue[static_cast<std::size_t>(i) * c + jj] = st.w(j)[i] / s;
            }
        }
        for (int i = 0; i < c; ++i) {
            ve[static_cast<std::size_t>(i) * c + jj] = st.v(j)[i];
        }
    }
    return SvdResult{Matrix(r, c, std::move(ue)), std::move(sorted), Matrix(c, c, std::move(ve))};
}

}  // namespace

SvdResult svd(const Matrix& a) {
    if (a.rows() >= a.cols()) return svd_tall(a);
    SvdResult s = svd_tall(a.transpose());
    return SvdResult{std::move(s.v), std::move(s.sigma), std::move(s.u)};
}

double default_rank_tol(int rows, int cols) {
    return std::max(rows, cols) * std::numeric_limits<double>::epsilon();
}

int numerical_rank(const Matrix& a, double rank_tol) {
    require(rank_tol >= 0.0, "numerical_rank: rank_tol must be nonnegative");
    if (rank_tol == 0.0) rank_tol = default_rank_tol(a.rows(), a.cols());
    const SvdResult s = svd(a);
    const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
    int rank = 0;
    for (double x : s.sigma) {
        if (x > rank_tol * smax) ++rank;
    }
    return rank;
}

Matrix pseudoinverse(const Matrix& a, double rank_tol) {
    require(rank_tol >= 0.0, "pseudoinverse: rank_tol must be nonnegative");
    if (rank_tol == 0.0) rank_tol = default_rank_tol(a.rows(), a.cols());
    const SvdResult s = svd(a);
    const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
    const int k = static_cast<int>(s.sigma.size());
    // pinv = v * diag(1/sigma) * u^T, dropping singular values at or below tol.
    std::vector<double> scaled(static_cast<std::size_t>(s.v.rows()) * k);
    for (int i = 0; i < s.v.rows(); ++i) {
        for (int j = 0; j < k; ++j) {
            const double sj = s.sigma[static_cast<std::size_t>(j)];
            const double inv = (sj > rank_tol * smax) ? 1.0 / sj : 0.0;
            scaled[static_cast<std::size_t>(i) * k + j] = s.v(i, j) * inv;
        }
    }
    return Matrix(s.v.rows(), k, std::move(scaled)) * s.u.transpose();
}

double spectral_norm(const Matrix& a) {
    const SvdResult s = svd(a);
    return s.sigma.empty() ? 0.0 : s.sigma.front();
}

Vector solve_least_squares(const Matrix& a, const Vector& b, double rank_tol) {
    require(a.rows() == b.dim(), "solve_least_squares: a.rows must equal b.dim");
    require(rank_tol >= 0.0, "solve_least_squares: rank_tol must be nonnegative");
    if (rank_tol == 0.0) rank_tol = default_rank_tol(a.rows(), a.cols());
    const SvdResult s = svd(a);
    const double smax = s.sigma.empty() ? 0.0 : s.sigma.front();
    const int k = static_cast<int>(s.sigma.size());
    std::vector<double> z(static_cast<std::size_t>(k), 0.0);
    for (int j = 0; j < k; ++j) {
        const double sj = s.sigma[static_cast<std::size_t>(j)];
        if (sj > rank_tol * smax) {
            z[static_cast<std::size_t>(j)] = dot(s.u.column(j), b) / sj;
        }
    }
    return s.v * Vector(std::move(z));
}

std::string to_string(const Vector& v) {
    std::string out = "[";
    char buf[64];
    for (int i = 0; i < v.dim(); ++i) {
        std::snprintf(buf, sizeof buf, "%.17g", v[i]);
        if (i) out += ", ";
        out += buf;
    }
    out += "]";
    return out;
}

std::string to_string(const Matrix& a) {
    std::string out = "[";
    char buf[64];
    for (int i = 0; i < a.rows(); ++i) {
        if (i) out += "; ";
        for (int j = 0; j < a.cols(); ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", a(i, j));
            if (j) out += ", ";
            out += buf;
        }
    }
    out += "]";
    return out;
}

}  // namespace csg
