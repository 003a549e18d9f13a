#include "liesym/lie_algebra.hpp"

#include <algorithm>
#include <string>

namespace liesym {

StructureConstants::StructureConstants(int dim) : dim_(dim)
{
    if (dim < 0 || dim > dimension_cap())
        throw DimensionError("algebra dimension " + std::to_string(dim) + " outside [0, " +
                             std::to_string(dimension_cap()) + "]");
    c_.resize(static_cast<std::size_t>(dim) * dim * dim);
}

std::size_t StructureConstants::offset(int i, int j, int k) const
{
    if (i < 0 || j < 0 || k < 0 || i >= dim_ || j >= dim_ || k >= dim_)
        throw DimensionError("structure constant index out of range");
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
}

void StructureConstants::set(int i, int j, int k, const Poly& value)
{
    if (i == j) {
        if (!value.is_zero())
            throw std::invalid_argument("[e_i, e_i] must vanish");
        return;
    }
    c_[offset(i, j, k)] = value;
    c_[offset(j, i, k)] = -value;
}

void StructureConstants::add(int i, int j, int k, const Poly& value)
{
    set(i, j, k, get(i, j, k) + value);
}

LieAlgebra::LieAlgebra(StructureConstants constants, std::vector<std::string> params, Validation validation)
    : constants_(std::move(constants)), params_(std::move(params))
{
    if (validation == Validation::enforce_jacobi) {
        JacobiReport r = jacobi_check(*this);
        if (!r.passed) {
            const auto& w = *r.witness;
            throw JacobiViolation("Jacobi identity fails on (e" + std::to_string(w[0] + 1) + ", e" +
                                  std::to_string(w[1] + 1) + ", e" + std::to_string(w[2] + 1) + ")");
        }
    }
}

LieAlgebra LieAlgebra::abelian(int dim)
{
    return LieAlgebra(StructureConstants(dim));
}

bool LieAlgebra::is_numeric() const
{
    const int n = dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (!c(i, j, k).is_constant())
                    return false;
    return true;
}

void LieAlgebra::require_numeric(const char* operation) const
{
    if (!is_numeric())
        throw UnsubstitutedParameters(std::string(operation) +
                                      " needs numeric structure constants; substitute parameters first");
}

LieAlgebra LieAlgebra::substitute(const std::map<std::string, Scalar>& values, Validation validation) const
{
    const int n = dim();
    StructureConstants s(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s.set(i, j, k, c(i, j, k).substitute(values));
    std::vector<std::string> remaining;
    for (const auto& p : params_)
        if (!values.contains(p))
            remaining.push_back(p);
    return LieAlgebra(std::move(s), std::move(remaining), validation);
}

Matrix LieAlgebra::ad(int i) const
{
    require_numeric("ad");
    const int n = dim();
    Matrix m(n, n);
    for (int j = 0; j < n; ++j)
        for (int k = 0; k < n; ++k)
            m(k, j) = c(i, j, k).constant_term();
    return m;
}

Matrix LieAlgebra::ad(const Vector& x) const
{
    const int n = dim();
    if (static_cast<int>(x.size()) != n)
        throw DimensionError("vector length does not match algebra dimension");
    Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        if (x[i] != 0)
            m = m + ad(i) * x[i];
    return m;
}

PolyVector bracket(const LieAlgebra& g, const PolyVector& x, const PolyVector& y)
{
    const int n = g.dim();
    if (static_cast<int>(x.size()) != n || static_cast<int>(y.size()) != n)
        throw DimensionError("bracket arguments must have length " + std::to_string(n));
    PolyVector r(n);
    for (int i = 0; i < n; ++i) {
        if (x[i].is_zero())
            continue;
        for (int j = 0; j < n; ++j) {
            if (i == j || y[j].is_zero())
                continue;
            Poly xy = x[i] * y[j];
            for (int k = 0; k < n; ++k)
                if (!g.c(i, j, k).is_zero())
                    r[k] += xy * g.c(i, j, k);
        }
    }
    return r;
}

Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y)
{
    PolyVector px(x.begin(), x.end());
    PolyVector py(y.begin(), y.end());
    PolyVector r = bracket(g, px, py);
    Vector out(r.size());
    for (std::size_t i = 0; i < r.size(); ++i)
        out[i] = r[i].constant_value();
    return out;
}

KForm basis_differential(const LieAlgebra& g, int k)
{
    const int n = g.dim();
    KForm d(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.c(i, j, k).is_zero())
                d.add_term((IndexSet{1} << i) | (IndexSet{1} << j), -g.c(i, j, k));
    return d;
}

KForm ce_differential(const LieAlgebra& g, const KForm& form)
{
    const int n = g.dim();
    if (form.dim() != n)
        throw DimensionError("form dimension " + std::to_string(form.dim()) + " does not match algebra dimension " +
                             std::to_string(n));
    KForm result(n, form.degree() + 1);
    if (form.degree() + 1 > n)
        return result;
    std::vector<KForm> dk;
    dk.reserve(n);
    for (int k = 0; k < n; ++k)
        dk.push_back(basis_differential(g, k));
    for (const auto& [idx, coeff] : form.terms()) {
        auto ind = indices_of(idx);
        for (std::size_t r = 0; r < ind.size(); ++r) {
            // e_left ^ d(e_{ind[r]}) ^ e_right with sign (-1)^r.
            IndexSet left = 0;
            IndexSet right = 0;
            for (std::size_t s = 0; s < ind.size(); ++s) {
                if (s < r)
                    left |= IndexSet{1} << ind[s];
                else if (s > r)
                    right |= IndexSet{1} << ind[s];
            }
            for (const auto& [pq, c] : dk[ind[r]].terms()) {
                int s1 = wedge_sign(left, pq);
                if (s1 == 0)
                    continue;
                int s2 = wedge_sign(left | pq, right);
                if (s2 == 0)
                    continue;
                int sign = s1 * s2 * ((r & 1) ? -1 : 1);
                Poly t = coeff * c;
                if (sign < 0)
                    t = -t;
                result.add_term(left | pq | right, t);
            }
        }
    }
    return result;
}

PolyVector jacobiator(const LieAlgebra& g, int i, int j, int k)
{
    const int n = g.dim();
    auto e = [n](int a) {
        PolyVector v(n);
        v[a] = Poly(1);
        return v;
    };
    PolyVector r = bracket(g, bracket(g, e(i), e(j)), e(k));
    PolyVector s = bracket(g, bracket(g, e(j), e(k)), e(i));
    PolyVector t = bracket(g, bracket(g, e(k), e(i)), e(j));
    for (int a = 0; a < n; ++a)
        r[a] += s[a] + t[a];
    return r;
}

namespace {

bool all_zero(const PolyVector& v)
{
    return std::all_of(v.begin(), v.end(), [](const Poly& p) { return p.is_zero(); });
}

}  // namespace

JacobiReport jacobi_check(const LieAlgebra& g)
{
    JacobiReport report;
    const int n = g.dim();
    for (int k = 0; k < n; ++k) {
        KForm dd = ce_differential(g, basis_differential(g, k));
        if (dd.is_zero())
            continue;
        auto ind = indices_of(dd.terms().begin()->first);
        report.passed = false;
        report.witness = std::array<int, 3>{ind[0], ind[1], ind[2]};
        report.residual = jacobiator(g, ind[0], ind[1], ind[2]);
        return report;
    }
    return report;
}

JacobiReport jacobi_check_by_brackets(const LieAlgebra& g)
{
    JacobiReport report;
    const int n = g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                PolyVector r = jacobiator(g, i, j, k);
                if (!all_zero(r)) {
                    report.passed = false;
                    report.witness = std::array<int, 3>{i, j, k};
                    report.residual = std::move(r);
                    return report;
                }
            }
    return report;
}

std::vector<IndexSet> exterior_basis(int dim, int k)
{
    std::vector<IndexSet> out;
    if (k < 0 || k > dim)
        return out;
    std::vector<int> idx(k);
    for (int i = 0; i < k; ++i)
        idx[i] = i;
    while (true) {
        out.push_back(index_set(idx));
        int p = k - 1;
        while (p >= 0 && idx[p] == dim - k + p)
            --p;
        if (p < 0)
            break;
        ++idx[p];
        for (int q = p + 1; q < k; ++q)
            idx[q] = idx[q - 1] + 1;
    }
    return out;
}

Matrix differential_matrix(const LieAlgebra& g, int k)
{
    g.require_numeric("differential_matrix");
    const int n = g.dim();
    auto src = exterior_basis(n, k);
    auto dst = exterior_basis(n, k + 1);
    Matrix m(dst.size(), src.size());
    if (dst.empty() || src.empty())
        return m;
    std::map<IndexSet, std::size_t> row_of;
    for (std::size_t r = 0; r < dst.size(); ++r)
        row_of[dst[r]] = r;
    for (std::size_t c = 0; c < src.size(); ++c) {
        KForm b(n, k);
        b.add_term(src[c], Poly(1));
        KForm db = ce_differential(g, b);
        for (const auto& [idx, v] : db.terms())
            m(row_of.at(idx), c) = v.constant_value();
    }
    return m;
}

int cohomology_dim(const LieAlgebra& g, int k)
{
    g.require_numeric("cohomology_dim");
    const int n = g.dim();
    if (k < 0 || k > n)
        return 0;
    int chains = static_cast<int>(exterior_basis(n, k).size());
    int rank_out = k < n ? static_cast<int>(rank(differential_matrix(g, k))) : 0;
    int rank_in = k > 0 ? static_cast<int>(rank(differential_matrix(g, k - 1))) : 0;
    return chains - rank_out - rank_in;
}

UnimodularReport is_unimodular(const LieAlgebra& g)
{
    UnimodularReport report;
    const int n = g.dim();
    for (int i = 0; i < n; ++i) {
        Poly tr;
        for (int j = 0; j < n; ++j)
            tr += g.c(i, j, j);
        if (!tr.is_zero())
            report.passed = false;
        report.traces.push_back(std::move(tr));
    }
    return report;
}

KillingForm killing_form(const LieAlgebra& g)
{
    g.require_numeric("killing_form");
    const int n = g.dim();
    std::vector<Matrix> ads;
    for (int i = 0; i < n; ++i)
        ads.push_back(g.ad(i));
    Matrix k(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            Matrix p = ads[a] * ads[b];
            Scalar tr = 0;
            for (int i = 0; i < n; ++i)
                tr += p(i, i);
            k(a, b) = tr;
            k(b, a) = tr;
        }
    Inertia sig = inertia(k);
    return {std::move(k), sig};
}

int coadjoint_tangent_dim(const LieAlgebra& g, const Vector& covector)
{
    g.require_numeric("coadjoint_tangent_dim");
    const int n = g.dim();
    if (static_cast<int>(covector.size()) != n)
        throw DimensionError("covector length does not match algebra dimension");
    // Row a is f o ad_{e_a}: entries f([e_a, e_b]).
    Matrix m(n, n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int k = 0; k < n; ++k)
                m(a, b) += covector[k] * g.c(a, b, k).constant_term();
    return static_cast<int>(rank(m));
}

Subspace derived_algebra(const LieAlgebra& g)
{
    g.require_numeric("derived_algebra");
    const int n = g.dim();
    std::vector<Vector> brackets;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            Vector v(n);
            for (int k = 0; k < n; ++k)
                v[k] = g.c(i, j, k).constant_term();
            if (!is_zero(v))
                brackets.push_back(std::move(v));
        }
    return Subspace::span(n, brackets);
}

int derived_dim(const LieAlgebra& g)
{
    return static_cast<int>(derived_algebra(g).dim());
}

bool is_perfect(const LieAlgebra& g)
{
    return derived_dim(g) == g.dim();
}

std::optional<int> nilpotency_class(const LieAlgebra& g)
{
    g.require_numeric("nilpotency_class");
    const int n = g.dim();
    if (n == 0)
        return 0;
    std::vector<Vector> current;
    for (int i = 0; i < n; ++i) {
        Vector e(n);
        e[i] = 1;
        current.push_back(std::move(e));
    }
    std::size_t dim = n;
    int cls = 0;
    while (dim > 0) {
        std::vector<Vector> next;
        for (int i = 0; i < n; ++i) {
            Vector e(n);
            e[i] = 1;
            for (const auto& v : current) {
                Vector b = bracket(g, e, v);
                if (!is_zero(b))
                    next.push_back(std::move(b));
            }
        }
        Subspace s = Subspace::span(n, next);
        ++cls;
        if (s.dim() == dim)
            return std::nullopt;
        dim = s.dim();
        current = s.basis_vectors();
    }
    return cls;
}

LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p)
{
    const int n = g.dim();
    if (static_cast<int>(p.rows()) != n || static_cast<int>(p.cols()) != n)
        throw DimensionError("change of basis matrix has wrong shape");
    auto q = inverse(p);
    if (!q)
        throw std::invalid_argument("change of basis matrix is singular");
    StructureConstants s(n);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            // [f_a, f_b] in e-coordinates.
            PolyVector v(n);
            for (int i = 0; i < n; ++i) {
                if (p(i, a) == 0)
                    continue;
                for (int j = 0; j < n; ++j) {
                    if (p(j, b) == 0 || i == j)
                        continue;
                    Scalar f = p(i, a) * p(j, b);
                    for (int k = 0; k < n; ++k)
                        if (!g.c(i, j, k).is_zero())
                            v[k] += g.c(i, j, k) * f;
                }
            }
            for (int m = 0; m < n; ++m) {
                Poly coeff;
                for (int k = 0; k < n; ++k)
                    if ((*q)(m, k) != 0)
                        coeff += v[k] * (*q)(m, k);
                s.set(a, b, m, coeff);
            }
        }
    return LieAlgebra(std::move(s), g.params(), Validation::defer);
}

LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h)
{
    const int n = g.dim();
    const int m = h.dim();
    StructureConstants s(n + m);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s.set(i, j, k, g.c(i, j, k));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = 0; k < m; ++k)
                s.set(n + i, n + j, n + k, h.c(i, j, k));
    std::vector<std::string> params = g.params();
    for (const auto& p : h.params())
        if (std::find(params.begin(), params.end(), p) == params.end())
            params.push_back(p);
    return LieAlgebra(std::move(s), std::move(params), Validation::defer);
}

}  // namespace liesym
