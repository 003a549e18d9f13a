#include "liesym/suspension.hpp"

#include "liesym/structures.hpp"

#include <stdexcept>

namespace liesym {

namespace {

// Matrix of the Leibniz system in the unknowns a_{pq} (index p*n + q).
Matrix leibniz_system(const LieAlgebra& h)
{
    h.require_numeric("derivation_space");
    const int n = h.dim();
    const int pairs = n * (n - 1) / 2;
    Matrix m(static_cast<std::size_t>(pairs) * n, static_cast<std::size_t>(n) * n);
    std::size_t row = 0;
    auto c = [&h](int i, int j, int k) { return h.c(i, j, k).constant_term(); };
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k, ++row) {
                for (int q = 0; q < n; ++q)
                    m(row, k * n + q) += c(i, j, q);  // (A[e_i,e_j])_k
                for (int p = 0; p < n; ++p) {
                    m(row, p * n + i) -= c(p, j, k);  // ([A e_i, e_j])_k
                    m(row, p * n + j) -= c(i, p, k);  // ([e_i, A e_j])_k
                }
            }
    return m;
}

Vector flatten(const Matrix& a)
{
    Vector v;
    v.reserve(a.rows() * a.cols());
    for (std::size_t r = 0; r < a.rows(); ++r)
        for (std::size_t c = 0; c < a.cols(); ++c)
            v.push_back(a(r, c));
    return v;
}

Matrix unflatten(const Vector& v, std::size_t n)
{
    Matrix a(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            a(r, c) = v[r * n + c];
    return a;
}

Vector coefficients(const KForm& covector)
{
    Vector a(covector.dim());
    for (const auto& [idx, c] : covector.terms())
        a[indices_of(idx)[0]] = c.constant_value();
    return a;
}

Matrix form_matrix(const KForm& two_form)
{
    auto m = coefficient_matrix(two_form);
    Matrix out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out(i, j) = m[i][j].constant_value();
    return out;
}

KForm form_from_matrix(const Matrix& m)
{
    const int n = static_cast<int>(m.rows());
    KForm f(n, 2);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            f.add_term((IndexSet{1} << i) | (IndexSet{1} << j), Poly(m(i, j)));
    return f;
}

void require_numeric_form(const KForm& f, int dim, int degree, const char* what)
{
    if (f.dim() != dim || f.degree() != degree)
        throw DimensionError(std::string(what) + " has the wrong dimension or degree");
    if (!f.is_numeric())
        throw std::invalid_argument(std::string(what) + " must have rational coefficients");
}

Subspace kernel_of_covector(const Vector& a)
{
    return Subspace::span(a.size(), nullspace(Matrix::from_rows({a}, a.size())));
}

Scalar top_value(const KForm& f)
{
    return f.top_coefficient().constant_term();
}

}  // namespace

bool satisfies_leibniz(const LieAlgebra& h, const Matrix& a)
{
    const std::size_t n = h.dim();
    if (a.rows() != n || a.cols() != n)
        throw DimensionError("derivation matrix has wrong shape");
    return is_zero(leibniz_system(h) * flatten(a));
}

Derivation::Derivation(const LieAlgebra& h, Matrix a) : a_(std::move(a))
{
    if (!satisfies_leibniz(h, a_))
        throw LeibnizViolation("matrix is not a derivation of the algebra");
}

Derivation Derivation::inner(const LieAlgebra& h, const Vector& w)
{
    return Derivation(h, h.ad(w));
}

DerivationSpace derivation_space(const LieAlgebra& h)
{
    const std::size_t n = h.dim();
    DerivationSpace space;
    Matrix system = leibniz_system(h);
    std::vector<Vector> kernel;
    if (system.rows() == 0) {
        for (std::size_t i = 0; i < n * n; ++i) {
            Vector v(n * n);
            v[i] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = nullspace(system);
    }
    for (const auto& v : kernel)
        space.derivations.push_back(unflatten(v, n));

    std::vector<Vector> inner_flat;
    for (std::size_t i = 0; i < n; ++i) {
        Matrix ad = h.ad(static_cast<int>(i));
        if (!ad.is_zero())
            inner_flat.push_back(flatten(ad));
    }
    Subspace inner = Subspace::span(n * n, inner_flat);
    for (const auto& v : inner.basis_vectors())
        space.inner.push_back(unflatten(v, n));

    // Extend the inner basis greedily by echelonized derivations.
    Subspace derived_span = Subspace::span(n * n, kernel);
    std::vector<Vector> accumulated = inner.basis_vectors();
    for (const auto& v : derived_span.basis_vectors()) {
        if (Subspace::span(n * n, accumulated).contains(v))
            continue;
        accumulated.push_back(v);
        space.outer.push_back(unflatten(v, n));
    }
    space.h1_dim = static_cast<int>(space.derivations.size() - space.inner.size());
    return space;
}

LieAlgebra suspend(const LieAlgebra& h, const Derivation& a)
{
    const int n = h.dim();
    StructureConstants s(n + 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = 0; k < n; ++k)
                s.set(i, j, k, h.c(i, j, k));
    const Matrix& m = a.matrix();
    if (static_cast<int>(m.rows()) != n)
        throw DimensionError("derivation does not match the algebra");
    for (int j = 0; j < n; ++j)
        for (int p = 0; p < n; ++p)
            if (m(p, j) != 0)
                s.set(n, j, p, Poly(m(p, j)));
    return LieAlgebra(std::move(s), h.params());
}

KForm lift_form(const KForm& form)
{
    KForm lifted(form.dim() + 1, form.degree());
    for (const auto& [idx, c] : form.terms())
        lifted.add_term(idx, c);
    return lifted;
}

KForm derivation_action(const Matrix& a, const KForm& omega)
{
    if (omega.degree() != 2)
        throw DimensionError("derivation action is implemented on 2-forms");
    Matrix w = form_matrix(omega);
    return form_from_matrix((a.transpose() * w + w * a) * Scalar(-1));
}

SuspensionResult contactize(const LieAlgebra& h, const KForm& alpha, const std::optional<Derivation>& a)
{
    h.require_numeric("contactize");
    const int n = h.dim();
    if (n % 2 != 0)
        throw DimensionError("contactization needs an even-dimensional algebra");
    require_numeric_form(alpha, n, 1, "potential");
    const KForm dalpha = ce_differential(h, alpha);
    if (pfaffian(dalpha, KForm::volume(n)).is_zero())
        throw std::invalid_argument("d alpha is degenerate");

    SuspensionResult result;
    const Vector av = coefficients(alpha);
    Subspace pi = kernel_of_covector(av);
    auto pi_basis = pi.basis_vectors();
    const Matrix omega = form_matrix(dalpha);
    Matrix gram(pi_basis.size(), pi_basis.size());
    for (std::size_t r = 0; r < pi_basis.size(); ++r)
        for (std::size_t s = 0; s < pi_basis.size(); ++s)
            gram(r, s) = dot(pi_basis[r], omega * pi_basis[s]);
    auto ker = nullspace(gram);
    if (ker.size() != 1)
        throw std::invalid_argument("kernel of d alpha on Ker alpha is not a line");
    Vector w(n);
    for (std::size_t r = 0; r < pi_basis.size(); ++r)
        for (int i = 0; i < n; ++i)
            w[i] += ker[0][r] * pi_basis[r][i];

    std::optional<Derivation> der = a;
    if (!der) {
        int u = 0;
        while (av[u] == 0)
            ++u;
        Vector uv(n);
        uv[u] = 1;
        der = Derivation::inner(h, uv);
        result.detail = "derivation ad_e" + std::to_string(u + 1);
    }
    result.w = w;
    result.pi = pi;
    result.derivation = der->matrix();
    result.criterion = dot(av, der->apply(w));
    result.exists = result.criterion != 0;

    LieAlgebra g = suspend(h, *der);
    KForm plus = lift_form(alpha);
    const int m = n / 2;
    result.certificate = top_value(wedge(plus, wedge_power(ce_differential(g, plus), m)));
    if ((result.certificate != 0) != result.exists)
        throw std::logic_error("contactization criterion disagrees with alpha_+ ^ (d alpha_+)^m");
    result.algebra = std::move(g);
    result.form = std::move(plus);
    return result;
}

SuspensionResult symplectize_contact(const LieAlgebra& h, const KForm& alpha, const std::optional<Derivation>& a)
{
    h.require_numeric("symplectize_contact");
    const int n = h.dim();
    if (n % 2 != 1)
        throw DimensionError("symplectization needs an odd-dimensional algebra");
    require_numeric_form(alpha, n, 1, "contact form");
    const KForm dalpha = ce_differential(h, alpha);
    if (wedge(alpha, wedge_power(dalpha, (n - 1) / 2)).is_zero())
        throw std::invalid_argument("alpha is not a contact form");

    SuspensionResult result;
    const Vector av = coefficients(alpha);
    result.pi = kernel_of_covector(av);
    auto ker = nullspace(form_matrix(dalpha));
    if (ker.size() != 1)
        throw std::logic_error("kernel of d alpha of a contact form is not a line");
    result.w = ker[0];

    std::optional<Matrix> chosen;
    if (a) {
        chosen = a->matrix();
    } else {
        DerivationSpace space = derivation_space(h);
        std::vector<std::string> vars;
        Poly criterion;
        for (std::size_t r = 0; r < space.outer.size(); ++r) {
            vars.push_back("t" + std::to_string(r + 1));
            criterion += Poly::variable(vars.back()) * dot(av, space.outer[r] * result.w);
        }
        if (auto t = grid_search_nonzero(criterion, vars)) {
            Matrix sum(n, n);
            for (std::size_t r = 0; r < space.outer.size(); ++r)
                sum = sum + space.outer[r] * (*t)[r];
            chosen = sum;
            result.detail = "H^1 representative found among " + std::to_string(space.outer.size()) + " classes";
        } else {
            // The zero class, represented by A = 0, is all that is left.
            chosen = Matrix(n, n);
            result.detail = "no H^1 class satisfies Aw not in Pi (dim H^1 = " + std::to_string(space.h1_dim) + ")";
        }
    }
    Derivation der(h, *chosen);
    result.derivation = der.matrix();
    result.criterion = dot(av, der.apply(result.w));
    result.exists = result.criterion != 0;

    LieAlgebra g = suspend(h, der);
    KForm omega = ce_differential(g, lift_form(alpha));
    result.certificate = pfaffian(omega, KForm::volume(n + 1)).constant_term();
    if ((result.certificate != 0) != result.exists)
        throw std::logic_error("symplectization criterion disagrees with Pf(d alpha_+)");
    result.algebra = std::move(g);
    result.form = std::move(omega);
    return result;
}

SuspensionResult symplectize_2form(const LieAlgebra& h, const KForm& omega)
{
    h.require_numeric("symplectize_2form");
    const int n = h.dim();
    if (n % 2 != 1)
        throw DimensionError("symplectization needs an odd-dimensional algebra");
    require_numeric_form(omega, n, 2, "2-form");
    if (!ce_differential(h, omega).is_zero())
        throw std::invalid_argument("2-form is not closed");
    const Matrix om = form_matrix(omega);
    if (static_cast<int>(rank(om)) != n - 1)
        throw std::invalid_argument("2-form must have rank " + std::to_string(n - 1));

    SuspensionResult result;
    result.w = nullspace(om)[0];
    DerivationSpace space = derivation_space(h);
    const std::size_t s = space.derivations.size();
    auto basis2 = exterior_basis(n, 2);
    // Columns: D_r . omega for each derivation, then -d e_i* for each covector.
    Matrix system(basis2.size(), s + n);
    for (std::size_t r = 0; r < s; ++r) {
        KForm f = derivation_action(space.derivations[r], omega);
        for (std::size_t b = 0; b < basis2.size(); ++b)
            system(b, r) = f.coefficient(basis2[b]).constant_term();
    }
    for (int i = 0; i < n; ++i) {
        KForm f = basis_differential(h, i);
        for (std::size_t b = 0; b < basis2.size(); ++b)
            system(b, s + i) = -f.coefficient(basis2[b]).constant_term();
    }
    std::vector<Vector> solutions = nullspace(system);
    std::vector<std::string> vars;
    Poly criterion;
    for (std::size_t k = 0; k < solutions.size(); ++k) {
        vars.push_back("t" + std::to_string(k + 1));
        Scalar aw = 0;
        for (int i = 0; i < n; ++i)
            aw += solutions[k][s + i] * result.w[i];
        criterion += Poly::variable(vars.back()) * aw;
    }
    auto t = grid_search_nonzero(criterion, vars);
    if (!t) {
        result.detail = "no (A, alpha) with A.omega = d alpha and alpha(w) != 0 (" +
                        std::to_string(solutions.size()) + "-dimensional solution space)";
        return result;
    }
    Vector combined(s + n);
    for (std::size_t k = 0; k < solutions.size(); ++k)
        for (std::size_t c = 0; c < s + n; ++c)
            combined[c] += (*t)[k] * solutions[k][c];
    Matrix a(n, n);
    for (std::size_t r = 0; r < s; ++r)
        a = a + space.derivations[r] * combined[r];
    Vector alpha(combined.begin() + static_cast<std::ptrdiff_t>(s), combined.end());

    Derivation der(h, a);
    LieAlgebra g = suspend(h, der);
    KForm v_star = KForm::basis(n + 1, {n});
    KForm extended = lift_form(omega) + wedge(v_star, lift_form(KForm::covector(n, alpha)));
    if (!ce_differential(g, extended).is_zero())
        throw std::logic_error("extended 2-form is not closed on the suspension");
    result.exists = true;
    result.criterion = dot(alpha, result.w);
    result.certificate = pfaffian(extended, KForm::volume(n + 1)).constant_term();
    if (result.certificate == 0)
        throw std::logic_error("extended 2-form is degenerate although alpha(w) != 0");
    result.pi = kernel_of_covector(alpha);
    result.derivation = a;
    result.algebra = std::move(g);
    result.form = std::move(extended);
    result.detail = "alpha = " + KForm::covector(n, alpha).to_string();
    return result;
}

}  // namespace liesym
