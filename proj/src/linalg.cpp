#include "liesym/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace liesym {

Matrix Matrix::identity(std::size_t n)
{
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols)
{
    Matrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("matrix row has wrong length");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

Vector Matrix::row(std::size_t r) const
{
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
}

Vector Matrix::column(std::size_t c) const
{
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        v[r] = (*this)(r, c);
    return v;
}

Matrix Matrix::transpose() const
{
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

bool Matrix::is_zero() const
{
    for (const auto& x : data_)
        if (x != 0)
            return false;
    return true;
}

Matrix Matrix::operator*(const Matrix& other) const
{
    if (cols_ != other.rows_)
        throw std::invalid_argument("matrix product shape mismatch");
    Matrix p(rows_, other.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k) {
            const Scalar& a = (*this)(i, k);
            if (a == 0)
                continue;
            for (std::size_t j = 0; j < other.cols_; ++j)
                p(i, j) += a * other(k, j);
        }
    return p;
}

Vector Matrix::operator*(const Vector& v) const
{
    if (cols_ != v.size())
        throw std::invalid_argument("matrix-vector shape mismatch");
    Vector r(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t k = 0; k < cols_; ++k)
            r[i] += (*this)(i, k) * v[k];
    return r;
}

Matrix Matrix::operator+(const Matrix& other) const
{
    if (rows_ != other.rows_ || cols_ != other.cols_)
        throw std::invalid_argument("matrix sum shape mismatch");
    Matrix s = *this;
    for (std::size_t i = 0; i < data_.size(); ++i)
        s.data_[i] += other.data_[i];
    return s;
}

Matrix Matrix::operator-(const Matrix& other) const
{
    return *this + other * Scalar(-1);
}

Matrix Matrix::operator*(const Scalar& s) const
{
    Matrix m = *this;
    for (auto& x : m.data_)
        x *= s;
    return m;
}

Echelon rref(const Matrix& m)
{
    Matrix a = m;
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        std::size_t p = row;
        while (p < a.rows() && a(p, col) == 0)
            ++p;
        if (p == a.rows())
            continue;
        if (p != row)
            for (std::size_t c = 0; c < a.cols(); ++c)
                std::swap(a(p, c), a(row, c));
        Scalar inv = 1 / a(row, col);
        for (std::size_t c = col; c < a.cols(); ++c)
            a(row, c) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == row || a(r, col) == 0)
                continue;
            Scalar f = a(r, col);
            for (std::size_t c = col; c < a.cols(); ++c)
                a(r, c) -= f * a(row, c);
        }
        pivots.push_back(col);
        ++row;
    }
    Matrix reduced(row, a.cols());
    for (std::size_t r = 0; r < row; ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            reduced(r, c) = a(r, c);
    return {std::move(reduced), std::move(pivots)};
}

namespace {

// Rows scaled by the lcm of their denominators, so entries are integers.
std::vector<std::vector<mpz_class>> integer_rows(const Matrix& m)
{
    std::vector<std::vector<mpz_class>> out(m.rows(), std::vector<mpz_class>(m.cols()));
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        for (std::size_t c = 0; c < m.cols(); ++c)
            out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
    }
    return out;
}

// Bareiss elimination; returns the rank and, for square input, the determinant.
std::pair<std::size_t, mpz_class> bareiss(std::vector<std::vector<mpz_class>> a, std::size_t cols)
{
    const std::size_t rows = a.size();
    mpz_class prev = 1;
    int sign = 1;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && rank < rows; ++col) {
        std::size_t p = rank;
        while (p < rows && a[p][col] == 0)
            ++p;
        if (p == rows)
            continue;
        if (p != rank) {
            std::swap(a[p], a[rank]);
            sign = -sign;
        }
        for (std::size_t r = rank + 1; r < rows; ++r) {
            for (std::size_t c = col + 1; c < cols; ++c) {
                a[r][c] = a[rank][col] * a[r][c] - a[r][col] * a[rank][c];
                mpz_divexact(a[r][c].get_mpz_t(), a[r][c].get_mpz_t(), prev.get_mpz_t());
            }
            a[r][col] = 0;
        }
        prev = a[rank][col];
        ++rank;
    }
    mpz_class det = 0;
    if (rows == cols && rank == rows)
        det = sign * prev;
    return {rank, det};
}

}  // namespace

std::size_t rank(const Matrix& m)
{
    if (m.rows() == 0 || m.cols() == 0)
        return 0;
    return bareiss(integer_rows(m), m.cols()).first;
}

Scalar determinant(const Matrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("determinant of a non-square matrix");
    if (m.rows() == 0)
        return 1;
    mpz_class scale = 1;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        mpz_class l = 1;
        for (std::size_t c = 0; c < m.cols(); ++c)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).get_den_mpz_t());
        scale *= l;
    }
    Scalar d(bareiss(integer_rows(m), m.cols()).second);
    d /= Scalar(scale);
    return d;
}

std::vector<Vector> nullspace(const Matrix& m)
{
    Echelon e = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : e.pivots)
        is_pivot[p] = true;
    std::vector<Vector> basis;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free])
            continue;
        Vector v(m.cols());
        v[free] = 1;
        for (std::size_t r = 0; r < e.pivots.size(); ++r)
            v[e.pivots[r]] = -e.reduced(r, free);
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Vector> solve(const Matrix& m, const Vector& b)
{
    if (b.size() != m.rows())
        throw std::invalid_argument("right-hand side has wrong length");
    Matrix aug(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            aug(r, c) = m(r, c);
        aug(r, m.cols()) = b[r];
    }
    Echelon e = rref(aug);
    if (!e.pivots.empty() && e.pivots.back() == m.cols())
        return std::nullopt;
    Vector x(m.cols());
    for (std::size_t r = 0; r < e.pivots.size(); ++r)
        x[e.pivots[r]] = e.reduced(r, m.cols());
    return x;
}

std::optional<Matrix> inverse(const Matrix& m)
{
    const std::size_t n = m.rows();
    if (m.cols() != n)
        throw std::invalid_argument("inverse of a non-square matrix");
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    Echelon e = rref(aug);
    if (e.pivots.size() < n || e.pivots[n - 1] != n - 1)
        return std::nullopt;
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = e.reduced(r, n + c);
    return inv;
}

Inertia inertia(const Matrix& symmetric)
{
    const std::size_t n = symmetric.rows();
    if (symmetric.cols() != n || !(symmetric == symmetric.transpose()))
        throw std::invalid_argument("inertia requires a symmetric matrix");
    Matrix a = symmetric;
    Inertia result;
    std::size_t done = 0;
    // Congruence a -> P^T a P applied to the trailing block [done, n).
    auto add_row_col = [&](std::size_t dst, std::size_t src, const Scalar& f) {
        for (std::size_t c = 0; c < n; ++c)
            a(dst, c) += f * a(src, c);
        for (std::size_t r = 0; r < n; ++r)
            a(r, dst) += f * a(r, src);
    };
    auto swap_row_col = [&](std::size_t i, std::size_t j) {
        for (std::size_t c = 0; c < n; ++c)
            std::swap(a(i, c), a(j, c));
        for (std::size_t r = 0; r < n; ++r)
            std::swap(a(r, i), a(r, j));
    };
    while (done < n) {
        std::size_t p = done;
        while (p < n && a(p, p) == 0)
            ++p;
        if (p == n) {
            // All remaining diagonal entries vanish; find an off-diagonal one.
            bool found = false;
            for (std::size_t i = done; i < n && !found; ++i)
                for (std::size_t j = i + 1; j < n && !found; ++j)
                    if (a(i, j) != 0) {
                        // a(i,i) becomes 2 a(i,j) != 0.
                        add_row_col(i, j, 1);
                        p = i;
                        found = true;
                    }
            if (!found) {
                result.zero += static_cast<int>(n - done);
                break;
            }
        }
        swap_row_col(done, p);
        const Scalar pivot = a(done, done);
        for (std::size_t r = done + 1; r < n; ++r) {
            if (a(r, done) == 0)
                continue;
            Scalar f = -a(r, done) / pivot;
            add_row_col(r, done, f);
        }
        (pivot > 0 ? result.positive : result.negative) += 1;
        ++done;
    }
    return result;
}

Scalar dot(const Vector& a, const Vector& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("dot product length mismatch");
    Scalar s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

bool is_zero(const Vector& v)
{
    for (const auto& x : v)
        if (x != 0)
            return false;
    return true;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<Vector>& vectors)
{
    Subspace s(ambient);
    if (vectors.empty())
        return s;
    Echelon e = rref(Matrix::from_rows(vectors, ambient));
    s.basis_ = std::move(e.reduced);
    s.pivots_ = std::move(e.pivots);
    return s;
}

std::vector<Vector> Subspace::basis_vectors() const
{
    std::vector<Vector> out;
    for (std::size_t r = 0; r < basis_.rows(); ++r)
        out.push_back(basis_.row(r));
    return out;
}

bool Subspace::contains(const Vector& v) const
{
    if (v.size() != ambient_)
        throw std::invalid_argument("vector length does not match subspace ambient dimension");
    Vector rest = v;
    for (std::size_t r = 0; r < basis_.rows(); ++r) {
        Scalar f = rest[pivots_[r]];
        if (f == 0)
            continue;
        for (std::size_t c = 0; c < ambient_; ++c)
            rest[c] -= f * basis_(r, c);
    }
    return is_zero(rest);
}

}  // namespace liesym
