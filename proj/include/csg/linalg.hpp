#pragma once

#include <initializer_list>
#include <string>
#include <vector>

// Dense real matrices/vectors plus the SVD-based Moore-Penrose pseudoinverse
// and the spectral norm. Values are immutable once built: every operation
// returns a new value, so instances are freely shareable across threads.
//
// Construction rejects non-finite entries and empty shapes with
// std::invalid_argument.

namespace csg {

class Vector {
public:
    explicit Vector(std::vector<double> entries);
    Vector(std::initializer_list<double> entries);
    static Vector zero(int dim);

    int dim() const { return static_cast<int>(e_.size()); }
    double operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
    const std::vector<double>& entries() const { return e_; }
    const double* data() const { return e_.data(); }

    double norm() const;

    friend Vector operator+(const Vector& a, const Vector& b);
    friend Vector operator-(const Vector& a, const Vector& b);
    friend Vector operator*(double s, const Vector& v);

private:
    std::vector<double> e_;
};

double dot(const Vector& a, const Vector& b);

class Matrix {
public:
    Matrix(int rows, int cols, std::vector<double> row_major);
    Matrix(std::initializer_list<std::initializer_list<double>> rows);
    static Matrix zero(int rows, int cols);
    static Matrix identity(int n);
    static Matrix from_columns(const std::vector<Vector>& cols);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double operator()(int i, int j) const {
        return e_[static_cast<std::size_t>(i) * cols_ + j];
    }
    const std::vector<double>& entries() const { return e_; }

    Matrix transpose() const;
    Vector column(int j) const;
    double frobenius_norm() const;
    double max_abs() const;

    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(double s, const Matrix& a);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Vector operator*(const Matrix& a, const Vector& x);

private:
    Matrix(int rows, int cols);  // uninitialized except zeroed storage

    int rows_;
    int cols_;
    std::vector<double> e_;

    double* row_ptr(int i) { return e_.data() + static_cast<std::size_t>(i) * cols_; }
    const double* row_ptr(int i) const {
        return e_.data() + static_cast<std::size_t>(i) * cols_;
    }
};

// Thin SVD: a == u * diag(sigma) * v^T with u (rows x k), v (cols x k),
// k = min(rows, cols), sigma sorted descending.
struct SvdResult {
    Matrix u;
    std::vector<double> sigma;
    Matrix v;
};

SvdResult svd(const Matrix& a);

// Numerical rank: singular values strictly above rank_tol * sigma_max count.
// rank_tol = 0 selects the default max(rows, cols) * machine-epsilon.
int numerical_rank(const Matrix& a, double rank_tol = 0.0);
double default_rank_tol(int rows, int cols);

Matrix pseudoinverse(const Matrix& a, double rank_tol = 0.0);

// Largest singular value.
double spectral_norm(const Matrix& a);

// Minimum-norm least-squares solution pinv(a)*b, computed from the SVD
// without materializing the pseudoinverse.
Vector solve_least_squares(const Matrix& a, const Vector& b, double rank_tol = 0.0);

std::string to_string(const Vector& v);
std::string to_string(const Matrix& a);

}  // namespace csg
