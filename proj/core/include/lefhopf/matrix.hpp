// Dense exact-rational linear algebra: the kernel under all homology and
// fixed-point computations.
//
// Elimination uses the first nonzero entry in each column as the pivot, so
// ranks, kernel/image bases and solutions are deterministic across runs;
// reproducible homology bases depend on this.

#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "lefhopf/rational.hpp"

namespace lefhopf {

using Vector = std::vector<Rational>;

class Matrix {
public:
    Matrix() : rows_(0), cols_(0) {}
    Matrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), data_(rows * cols) {}

    static Matrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    Vector column(std::size_t j) const;
    Vector row(std::size_t i) const;

    Matrix transpose() const;
    Rational trace() const;  // square only
    bool is_zero() const;
    bool is_identity() const;

    /// Matrix-vector product.
    Vector apply(const Vector& v) const;

    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend bool operator==(const Matrix& a, const Matrix& b);

private:
    std::size_t rows_, cols_;
    std::vector<Rational> data_;
};

/// Builds the matrix whose columns are the given vectors (all of equal
/// dimension; an empty list with explicit dimension is allowed).
Matrix matrix_from_columns(std::size_t dim, const std::vector<Vector>& columns);

struct RrefResult {
    std::size_t rank = 0;
    std::vector<std::size_t> pivot_cols;
    std::vector<Vector> kernel_basis;  // spans the null space exactly
    std::vector<Vector> image_basis;   // original columns at the pivot indices
};

/// Reduced row echelon decomposition. Empty matrices are fine: rank 0,
/// kernel basis = one unit vector per column.
RrefResult rref_decompose(const Matrix& m);

std::size_t rank_of(const Matrix& m);

/// Exact solve of A x = b; returns the first solution under the pivot order,
/// or nullopt when inconsistent.
std::optional<Vector> solve(const Matrix& a, const Vector& b);

/// Expresses v as sum c_i B_i modulo span(Q): returns c, or nullopt when
/// v is not in span(B) + span(Q). c is unique when B is independent modulo
/// span(Q).
std::optional<Vector> solve_modulo(const Vector& v, const std::vector<Vector>& basis,
                                   const std::vector<Vector>& modulo);

/// Exact determinant; the 0x0 determinant is 1. Non-square input throws
/// std::invalid_argument.
Rational det(const Matrix& m);

}  // namespace lefhopf
