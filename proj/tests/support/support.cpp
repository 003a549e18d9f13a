#include "support.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liesym::testing {

Scalar random_scalar(Rng& rng, int bound, bool allow_fractions)
{
    std::uniform_int_distribution<int> num(-bound, bound);
    std::uniform_int_distribution<int> den(1, allow_fractions ? 3 : 1);
    Scalar s(num(rng), den(rng));
    s.canonicalize();
    return s;
}

Vector random_vector(Rng& rng, int n, int bound)
{
    Vector v(n);
    for (auto& x : v)
        x = random_scalar(rng, bound);
    return v;
}

KForm random_form(Rng& rng, int dim, int degree, double density)
{
    std::bernoulli_distribution keep(density);
    KForm f(dim, degree);
    for (IndexSet s : exterior_basis(dim, degree))
        if (keep(rng))
            f.add_term(s, Poly(random_scalar(rng)));
    return f;
}

Matrix random_basis_change(Rng& rng, int n)
{
    Matrix p = Matrix::identity(n);
    if (n < 2)
        return p;
    std::uniform_int_distribution<int> idx(0, n - 1), mult(-2, 2);
    std::bernoulli_distribution flip(0.3);
    for (int step = 0; step < 2 * n; ++step) {
        int r = idx(rng), c = idx(rng), k = mult(rng);
        if (r == c || k == 0)
            continue;
        for (int j = 0; j < n; ++j)
            p(r, j) += k * p(c, j);
    }
    for (int r = 0; r < n; ++r)
        if (flip(rng))
            for (int j = 0; j < n; ++j)
                p(r, j) = -p(r, j);
    return p;
}

LieAlgebra algebra_from_text(const std::string& text, const Assignment& values)
{
    AlgebraFile f = parse_algebra(text, "<test>");
    return to_algebra(f, Validation::defer).substitute(values, Validation::defer);
}

LieAlgebra brackets(int dim, const std::vector<std::tuple<int, int, std::vector<std::pair<int, Scalar>>>>& rules)
{
    StructureConstants c(dim);
    for (const auto& [i, j, terms] : rules)
        for (const auto& [k, v] : terms)
            c.add(i, j, k, Poly(v));
    return LieAlgebra(c, {}, Validation::defer);
}

namespace {

std::vector<std::pair<std::string, LieAlgebra>> samples_with_prefix(const std::string& prefix, bool valid_only)
{
    std::vector<std::pair<std::string, LieAlgebra>> out;
    for (const auto& [name, text] : bundled_corpus()) {
        if (name.rfind(prefix, 0) != 0)
            continue;
        AlgebraFile f = parse_algebra(text, name);
        LieAlgebra g = to_algebra(f, Validation::defer);
        std::vector<Assignment> samples = f.samples;
        if (samples.empty())
            samples.push_back({});
        for (const auto& s : samples) {
            LieAlgebra h = g.substitute(s, Validation::defer);
            if (valid_only && !jacobi_check(h).passed)
                continue;
            out.emplace_back(f.name + (s.empty() ? "" : " [" + format_assignment(s) + "]"), h);
        }
    }
    return out;
}

int rank_oracle(std::vector<Vector> rows)
{
    int rank = 0;
    std::size_t cols = rows.empty() ? 0 : rows[0].size();
    for (std::size_t c = 0; c < cols && rank < static_cast<int>(rows.size()); ++c) {
        auto pivot = std::find_if(rows.begin() + rank, rows.end(), [&](const Vector& r) { return r[c] != 0; });
        if (pivot == rows.end())
            continue;
        std::iter_swap(rows.begin() + rank, pivot);
        for (std::size_t r = rank + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            Scalar f = rows[r][c] / rows[rank][c];
            for (std::size_t j = c; j < cols; ++j)
                rows[r][j] -= f * rows[rank][j];
        }
        ++rank;
    }
    return rank;
}

}  // namespace

std::vector<std::pair<std::string, LieAlgebra>> bianchi_samples()
{
    return samples_with_prefix("T2-", false);
}

std::vector<std::pair<std::string, LieAlgebra>> corpus_samples(bool jacobi_valid_only)
{
    return samples_with_prefix("T3-", jacobi_valid_only);
}

std::vector<Matrix> triangular_derivations(const LieAlgebra& h)
{
    const int n = h.dim();
    DerivationSpace ds = derivation_space(h);
    std::vector<Vector> rows;
    for (int r = 0; r < n; ++r)
        for (int c = 0; c <= r; ++c) {
            Vector row;
            for (const auto& d : ds.derivations)
                row.push_back(d(r, c));
            rows.push_back(row);
        }
    std::vector<Matrix> out;
    if (ds.derivations.empty())
        return out;
    for (const Vector& t : nullspace(Matrix::from_rows(rows, ds.derivations.size()))) {
        Matrix a(n, n);
        for (std::size_t i = 0; i < t.size(); ++i)
            a = a + ds.derivations[i] * t[i];
        out.push_back(a);
    }
    return out;
}

LieAlgebra random_nilpotent(Rng& rng, int dim, int max_class, bool change)
{
    std::uniform_int_distribution<int> coef(-2, 2);
    for (int attempt = 0; attempt < 100; ++attempt) {
        LieAlgebra h = LieAlgebra::abelian(std::min(dim, 1 + static_cast<int>(rng() % 2)));
        while (h.dim() < dim) {
            auto tri = triangular_derivations(h);
            Matrix a(h.dim(), h.dim());
            for (int tries = 0; tries < 4 && a.is_zero() && !tri.empty(); ++tries)
                for (const auto& t : tri)
                    a = a + t * Scalar(coef(rng));
            h = suspend(h, Derivation(h, a));
        }
        auto cls = nilpotency_class(h);
        if (!cls || *cls > max_class)
            continue;
        return change ? change_basis(h, random_basis_change(rng, dim)) : h;
    }
    throw std::runtime_error("random_nilpotent: no algebra within the class bound");
}

LieAlgebra random_dim4(Rng& rng)
{
    static const auto bianchi = bianchi_samples();
    const LieAlgebra& b = bianchi[rng() % bianchi.size()].second;
    DerivationSpace ds = derivation_space(b);
    std::uniform_int_distribution<int> coef(-2, 2);
    Matrix a(3, 3);
    for (const auto& d : ds.derivations)
        a = a + d * Scalar(coef(rng));
    LieAlgebra g = suspend(b, Derivation(b, a));
    return change_basis(g, random_basis_change(rng, 4));
}

int permutation_sign(std::vector<int> seq)
{
    int sign = 1;
    for (std::size_t i = 0; i < seq.size(); ++i)
        for (std::size_t j = 0; j + 1 < seq.size() - i; ++j) {
            if (seq[j] == seq[j + 1])
                return 0;
            if (seq[j] > seq[j + 1]) {
                std::swap(seq[j], seq[j + 1]);
                sign = -sign;
            }
        }
    for (std::size_t j = 0; j + 1 < seq.size(); ++j)
        if (seq[j] == seq[j + 1])
            return 0;
    return sign;
}

KForm wedge_oracle(const KForm& a, const KForm& b)
{
    KForm out(a.dim(), a.degree() + b.degree());
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            std::vector<int> seq = indices_of(ia);
            for (int k : indices_of(ib))
                seq.push_back(k);
            int s = permutation_sign(seq);
            if (s != 0)
                out.add_term(ia | ib, ca * cb * Scalar(s));
        }
    return out;
}

Scalar determinant_oracle(const Matrix& m)
{
    const int n = static_cast<int>(m.rows());
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    Scalar det = 0;
    do {
        Scalar term = permutation_sign(perm);
        for (int i = 0; i < n; ++i)
            term *= m(i, perm[i]);
        det += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return det;
}

Scalar pfaffian_oracle(const Matrix& a)
{
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    if (n % 2 == 1)
        return 0;
    Scalar pf = 0;
    for (std::size_t j = 1; j < n; ++j) {
        if (a(0, j) == 0)
            continue;
        Matrix minor(n - 2, n - 2);
        std::vector<std::size_t> keep;
        for (std::size_t k = 1; k < n; ++k)
            if (k != j)
                keep.push_back(k);
        for (std::size_t r = 0; r < keep.size(); ++r)
            for (std::size_t c = 0; c < keep.size(); ++c)
                minor(r, c) = a(keep[r], keep[c]);
        Scalar term = a(0, j) * pfaffian_oracle(minor);
        pf += (j % 2 == 1) ? term : -term;
    }
    return pf;
}

KForm ce_oracle(const LieAlgebra& g, const KForm& phi)
{
    const int n = g.dim(), k = phi.degree();
    KForm out(n, k + 1);
    // phi on basis vectors given as an index list (any order, repeats allowed)
    auto phi_at = [&](const std::vector<int>& idx) {
        std::vector<int> sorted = idx;
        std::sort(sorted.begin(), sorted.end());
        int s = permutation_sign(idx);
        if (s == 0)
            return Poly();
        IndexSet set = 0;
        for (int i : sorted)
            set |= IndexSet{1} << i;
        return phi.coefficient(set) * Scalar(s);
    };
    for (IndexSet target : exterior_basis(n, k + 1)) {
        std::vector<int> x = indices_of(target);
        Poly value;
        for (int i = 0; i <= k; ++i)
            for (int j = i + 1; j <= k; ++j) {
                std::vector<int> rest;
                for (int m = 0; m <= k; ++m)
                    if (m != i && m != j)
                        rest.push_back(x[m]);
                Poly term;
                for (int m = 0; m < n; ++m) {
                    const Poly& c = g.c(x[i], x[j], m);
                    if (c.is_zero())
                        continue;
                    std::vector<int> args{m};
                    args.insert(args.end(), rest.begin(), rest.end());
                    term += c * phi_at(args);
                }
                value += ((i + j) % 2 == 0) ? term : -term;
            }
        if (!value.is_zero())
            out.add_term(target, value);
    }
    return out;
}

int derivation_dim_oracle(const LieAlgebra& h)
{
    const int n = h.dim();
    auto var = [n](int r, int c) { return r * n + c; };
    std::vector<Vector> rows;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k) {
                Vector row(n * n);
                for (int m = 0; m < n; ++m) {
                    row[var(k, m)] += h.c(i, j, m).constant_value();
                    row[var(m, i)] -= h.c(m, j, k).constant_value();
                    row[var(m, j)] -= h.c(i, m, k).constant_value();
                }
                rows.push_back(row);
            }
    return n * n - rank_oracle(rows);
}

bool jacobi_oracle(const LieAlgebra& g)
{
    const int n = g.dim();
    auto br = [&](const Vector& x, const Vector& y) {
        Vector z(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (x[i] != 0 && y[j] != 0)
                    for (int k = 0; k < n; ++k)
                        z[k] += x[i] * y[j] * g.c(i, j, k).constant_value();
        return z;
    };
    auto unit = [n](int i) {
        Vector v(n);
        v[i] = 1;
        return v;
    };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k) {
                Vector a = br(br(unit(i), unit(j)), unit(k));
                Vector b = br(br(unit(j), unit(k)), unit(i));
                Vector c = br(br(unit(k), unit(i)), unit(j));
                for (int m = 0; m < n; ++m)
                    if (a[m] + b[m] + c[m] != 0)
                        return false;
            }
    return true;
}

Matrix numeric_matrix(const std::vector<std::vector<Poly>>& m)
{
    Matrix out(m.size(), m.size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m.size(); ++c)
            out(r, c) = m[r][c].constant_value();
    return out;
}

}  // namespace liesym::testing
