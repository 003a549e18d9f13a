#pragma once

#include "liesym/poly.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace liesym {

using Vector = std::vector<Scalar>;

/// Dense row-major rational matrix.
class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    Vector row(std::size_t r) const;
    Vector column(std::size_t c) const;
    Matrix transpose() const;
    bool is_zero() const;

    Matrix operator*(const Matrix& other) const;
    Vector operator*(const Vector& v) const;
    Matrix operator+(const Matrix& other) const;
    Matrix operator-(const Matrix& other) const;
    Matrix operator*(const Scalar& s) const;
    bool operator==(const Matrix&) const = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Scalar> data_;
};

struct Echelon {
    Matrix reduced;                    // reduced row-echelon form, zero rows dropped
    std::vector<std::size_t> pivots;   // pivot column of each row
};

/// Reduced row-echelon form over Q.
Echelon rref(const Matrix& m);

/// Rank by fraction-free (Bareiss) elimination on an integer rescaling of the rows.
std::size_t rank(const Matrix& m);
/// Determinant by fraction-free elimination; the matrix must be square.
Scalar determinant(const Matrix& m);

/// Basis of {x : m x = 0}, one vector per free column.
std::vector<Vector> nullspace(const Matrix& m);
/// Some solution of m x = b, if the system is consistent.
std::optional<Vector> solve(const Matrix& m, const Vector& b);
std::optional<Matrix> inverse(const Matrix& m);

struct Inertia {
    int positive = 0;
    int negative = 0;
    int zero = 0;
    bool operator==(const Inertia&) const = default;
};

/// Sylvester inertia of a symmetric matrix via exact congruence diagonalization.
Inertia inertia(const Matrix& symmetric);

Scalar dot(const Vector& a, const Vector& b);
bool is_zero(const Vector& v);

/// Linear subspace of Q^n kept as the nonzero rows of a reduced echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}
    static Subspace span(std::size_t ambient, const std::vector<Vector>& vectors);

    std::size_t ambient_dim() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis() const { return basis_; }
    std::vector<Vector> basis_vectors() const;

    bool contains(const Vector& v) const;
    bool operator==(const Subspace&) const = default;

private:
    std::size_t ambient_;
    Matrix basis_;
    std::vector<std::size_t> pivots_;
};

}  // namespace liesym
