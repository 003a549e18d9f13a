#include "liesym/kform.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <numeric>

namespace liesym {

namespace {

std::atomic<int> g_dimension_cap{8};

void check_dim(int dim)
{
    if (dim < 0 || dim > dimension_cap())
        throw DimensionError("dimension " + std::to_string(dim) + " outside [0, " +
                             std::to_string(dimension_cap()) + "]");
}

void check_same_dim(const KForm& a, const KForm& b)
{
    if (a.dim() != b.dim())
        throw DimensionError("forms live in different dimensions (" + std::to_string(a.dim()) +
                             " vs " + std::to_string(b.dim()) + ")");
}

}  // namespace

int dimension_cap()
{
    return g_dimension_cap.load(std::memory_order_relaxed);
}

void set_dimension_cap(int cap)
{
    if (cap < 1 || cap > kHardDimensionLimit)
        throw DimensionError("dimension cap must lie in [1, " + std::to_string(kHardDimensionLimit) + "]");
    g_dimension_cap.store(cap, std::memory_order_relaxed);
}

std::vector<int> indices_of(IndexSet s)
{
    std::vector<int> out;
    while (s) {
        out.push_back(std::countr_zero(s));
        s &= s - 1;
    }
    return out;
}

IndexSet index_set(std::span<const int> indices)
{
    IndexSet s = 0;
    for (int i : indices)
        s |= IndexSet{1} << i;
    return s;
}

int popcount(IndexSet s)
{
    return std::popcount(s);
}

int wedge_sign(IndexSet a, IndexSet b)
{
    if (a & b)
        return 0;
    // Each pair (i in a, j in b) with i > j costs one transposition.
    int inversions = 0;
    for (IndexSet rest = b; rest; rest &= rest - 1) {
        int j = std::countr_zero(rest);
        IndexSet above = (j >= 31) ? 0 : (a >> (j + 1));
        inversions += std::popcount(above);
    }
    return (inversions & 1) ? -1 : 1;
}

KForm::KForm(int dim, int degree) : dim_(dim), degree_(degree)
{
    check_dim(dim);
    if (degree < 0)
        throw DimensionError("negative form degree");
}

KForm KForm::basis(int dim, std::initializer_list<int> indices)
{
    return basis(dim, std::span<const int>(indices.begin(), indices.size()));
}

KForm KForm::basis(int dim, std::span<const int> indices)
{
    KForm f(dim, static_cast<int>(indices.size()));
    std::vector<int> idx(indices.begin(), indices.end());
    for (int i : idx)
        if (i < 0 || i >= dim)
            throw DimensionError("basis index " + std::to_string(i + 1) + " out of range 1.." +
                                 std::to_string(dim));
    // Bubble sort counting transpositions; repeated index gives zero.
    int sign = 1;
    for (std::size_t a = 0; a < idx.size(); ++a)
        for (std::size_t b = 0; b + 1 < idx.size() - a; ++b) {
            if (idx[b] == idx[b + 1])
                return f;
            if (idx[b] > idx[b + 1]) {
                std::swap(idx[b], idx[b + 1]);
                sign = -sign;
            }
        }
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        return f;
    f.add_term(index_set(idx), Poly(sign));
    return f;
}

KForm KForm::covector(int dim, std::span<const Poly> coeffs)
{
    if (static_cast<int>(coeffs.size()) != dim)
        throw DimensionError("covector has " + std::to_string(coeffs.size()) + " entries, expected " +
                             std::to_string(dim));
    KForm f(dim, 1);
    for (int i = 0; i < dim; ++i)
        f.add_term(IndexSet{1} << i, coeffs[i]);
    return f;
}

KForm KForm::covector(int dim, std::span<const Scalar> coeffs)
{
    std::vector<Poly> p(coeffs.begin(), coeffs.end());
    return covector(dim, p);
}

KForm KForm::constant(int dim, const Poly& value)
{
    KForm f(dim, 0);
    f.add_term(0, value);
    return f;
}

KForm KForm::volume(int dim)
{
    KForm f(dim, dim);
    f.add_term(dim == 0 ? 0 : ((IndexSet{1} << dim) - 1), Poly(1));
    return f;
}

Poly KForm::coefficient(IndexSet idx) const
{
    auto it = terms_.find(idx);
    return it == terms_.end() ? Poly() : it->second;
}

Poly KForm::top_coefficient() const
{
    if (degree_ != dim_)
        throw DimensionError("top coefficient requested from a form of degree " + std::to_string(degree_) +
                             " in dimension " + std::to_string(dim_));
    return coefficient(dim_ == 0 ? 0 : ((IndexSet{1} << dim_) - 1));
}

void KForm::add_term(IndexSet idx, const Poly& c)
{
    if (popcount(idx) != degree_)
        throw DimensionError("term degree does not match form degree");
    if (dim_ < 32 && (idx >> dim_) != 0)
        throw DimensionError("term index outside the form's dimension");
    if (c.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(idx, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
}

bool KForm::is_numeric() const
{
    for (const auto& t : terms_)
        if (!t.second.is_constant())
            return false;
    return true;
}

KForm& KForm::operator+=(const KForm& other)
{
    check_same_dim(*this, other);
    if (other.is_zero())
        return *this;
    if (is_zero() && degree_ != other.degree_)
        degree_ = other.degree_;
    if (degree_ != other.degree_)
        throw DimensionError("adding forms of different degrees");
    for (const auto& [idx, c] : other.terms_)
        add_term(idx, c);
    return *this;
}

KForm& KForm::operator-=(const KForm& other)
{
    return *this += -other;
}

KForm& KForm::operator*=(const Poly& c)
{
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    std::map<IndexSet, Poly> scaled;
    for (const auto& [idx, v] : terms_) {
        Poly p = v * c;
        if (!p.is_zero())
            scaled.emplace(idx, std::move(p));
    }
    terms_ = std::move(scaled);
    return *this;
}

KForm KForm::operator-() const
{
    KForm r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

KForm KForm::substitute(const std::map<std::string, Scalar>& values) const
{
    KForm r(dim_, degree_);
    for (const auto& [idx, c] : terms_)
        r.add_term(idx, c.substitute(values));
    return r;
}

KForm KForm::substitute(const std::map<std::string, Poly>& values) const
{
    KForm r(dim_, degree_);
    for (const auto& [idx, c] : terms_)
        r.add_term(idx, c.substitute(values));
    return r;
}

std::string KForm::to_string(const std::vector<std::string>& symbols) const
{
    if (static_cast<int>(symbols.size()) != dim_)
        throw DimensionError("symbol list does not match form dimension");
    std::vector<std::pair<std::vector<int>, Poly>> ordered;
    for (const auto& [idx, c] : terms_)
        ordered.emplace_back(indices_of(idx), c);
    std::sort(ordered.begin(), ordered.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Poly, std::string>> parts;
    for (const auto& [ind, c] : ordered) {
        std::string sym;
        for (int i : ind) {
            if (!sym.empty())
                sym += '^';
            sym += symbols[i];
        }
        if (sym.empty()) {
            // Degree 0: the coefficient itself.
            parts.emplace_back(c, "");
            continue;
        }
        parts.emplace_back(c, sym);
    }
    if (degree_ == 0)
        return terms_.empty() ? "0" : terms_.begin()->second.to_string();
    return format_combination(parts);
}

std::string KForm::to_string() const
{
    return to_string(default_symbols(dim_, true));
}

KForm wedge(const KForm& a, const KForm& b)
{
    check_same_dim(a, b);
    KForm r(a.dim(), a.degree() + b.degree());
    if (r.degree() > r.dim())
        return r;
    for (const auto& [ia, ca] : a.terms())
        for (const auto& [ib, cb] : b.terms()) {
            int s = wedge_sign(ia, ib);
            if (s == 0)
                continue;
            Poly c = ca * cb;
            if (s < 0)
                c = -c;
            r.add_term(ia | ib, c);
        }
    return r;
}

KForm wedge_power(const KForm& a, int m)
{
    KForm r = KForm::constant(a.dim(), Poly(1));
    for (int i = 0; i < m; ++i)
        r = wedge(r, a);
    return r;
}

KForm interior(std::span<const Poly> v, const KForm& form)
{
    if (static_cast<int>(v.size()) != form.dim())
        throw DimensionError("vector length does not match form dimension");
    if (form.degree() == 0)
        throw DimensionError("interior product of a 0-form");
    KForm r(form.dim(), form.degree() - 1);
    for (const auto& [idx, c] : form.terms()) {
        int position = 0;
        for (int i : indices_of(idx)) {
            if (!v[i].is_zero()) {
                Poly t = v[i] * c;
                if (position & 1)
                    t = -t;
                r.add_term(idx & ~(IndexSet{1} << i), t);
            }
            ++position;
        }
    }
    return r;
}

KForm interior(std::span<const Scalar> v, const KForm& form)
{
    std::vector<Poly> p(v.begin(), v.end());
    return interior(p, form);
}

Poly pfaffian(const KForm& omega, const KForm& volume)
{
    check_same_dim(omega, volume);
    if (omega.degree() != 2)
        throw DimensionError("Pfaffian needs a 2-form");
    if (omega.dim() % 2 != 0)
        throw DimensionError("Pfaffian needs an even dimension, got " + std::to_string(omega.dim()));
    if (volume.degree() != volume.dim())
        throw DimensionError("volume form must have top degree");
    Poly v = volume.top_coefficient();
    if (v.is_zero())
        throw DimensionError("zero volume form");
    if (!v.is_constant())
        throw DimensionError("volume form must have a constant coefficient");
    const int m = omega.dim() / 2;
    Poly top = wedge_power(omega, m).top_coefficient();
    Scalar factorial = 1;
    for (int i = 2; i <= m; ++i)
        factorial *= i;
    return top / (factorial * v.constant_value());
}

std::vector<std::vector<Poly>> coefficient_matrix(const KForm& two_form)
{
    if (two_form.degree() != 2)
        throw DimensionError("coefficient matrix needs a 2-form");
    const int n = two_form.dim();
    std::vector<std::vector<Poly>> m(n, std::vector<Poly>(n));
    for (const auto& [idx, c] : two_form.terms()) {
        auto ij = indices_of(idx);
        m[ij[0]][ij[1]] = c;
        m[ij[1]][ij[0]] = -c;
    }
    return m;
}

Poly evaluate(const KForm& form, const std::vector<std::vector<Poly>>& vectors)
{
    if (static_cast<int>(vectors.size()) != form.degree())
        throw DimensionError("form of degree " + std::to_string(form.degree()) + " evaluated on " +
                             std::to_string(vectors.size()) + " vectors");
    for (const auto& v : vectors)
        if (static_cast<int>(v.size()) != form.dim())
            throw DimensionError("vector length does not match form dimension");
    const int k = form.degree();
    Poly total;
    for (const auto& [idx, c] : form.terms()) {
        auto ind = indices_of(idx);
        // Leibniz expansion of det(vectors[r][ind[s]]).
        std::vector<int> perm(k);
        std::iota(perm.begin(), perm.end(), 0);
        Poly det;
        do {
            int inv = 0;
            for (int a = 0; a < k; ++a)
                for (int b = a + 1; b < k; ++b)
                    if (perm[a] > perm[b])
                        ++inv;
            Poly prod(inv & 1 ? -1 : 1);
            for (int r = 0; r < k && !prod.is_zero(); ++r)
                prod *= vectors[r][ind[perm[r]]];
            det += prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        total += c * det;
    }
    return total;
}

std::vector<std::string> default_symbols(int dim, bool dual)
{
    std::vector<std::string> s;
    for (int i = 1; i <= dim; ++i)
        s.push_back("e" + std::to_string(i) + (dual ? "*" : ""));
    return s;
}

}  // namespace liesym
