#include "liesym/monge.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace liesym {

namespace {

using PolyMatrix = std::vector<std::vector<Poly>>;

PolyMatrix poly_identity(int n)
{
    PolyMatrix m(n, std::vector<Poly>(n));
    for (int i = 0; i < n; ++i)
        m[i][i] = Poly(1);
    return m;
}

PolyMatrix multiply(const PolyMatrix& a, const PolyMatrix& b)
{
    const std::size_t n = a.size();
    PolyMatrix out(n, std::vector<Poly>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero())
                continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero())
                    out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

bool is_zero(const PolyMatrix& m)
{
    for (const auto& row : m)
        for (const auto& p : row)
            if (!p.is_zero())
                return false;
    return true;
}

Vector unit(int n, int i)
{
    Vector v(n);
    v[i] = 1;
    return v;
}

Matrix numeric_matrix(const KForm& two_form)
{
    auto m = coefficient_matrix(two_form);
    Matrix out(m.size(), m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j)
            out(i, j) = m[i][j].constant_value();
    return out;
}

void require_dim4_two_form(const KForm& f, const char* what)
{
    if (f.dim() != 4 || f.degree() != 2)
        throw DimensionError(std::string(what) + " must be a 2-form in dimension 4");
    if (!f.is_numeric())
        throw std::invalid_argument(std::string(what) + " must have rational coefficients");
}

std::vector<std::string> differential_symbols(const std::vector<std::string>& vars)
{
    std::vector<std::string> out;
    out.reserve(vars.size());
    for (const auto& v : vars)
        out.push_back("d" + v);
    return out;
}

void require_variables_within(const Poly& p, const std::vector<std::string>& vars, const char* what)
{
    for (const auto& v : p.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw std::invalid_argument(std::string(what) + " depends on '" + v + "' outside the chart");
}

// Pullback with explicitly supplied differentials of the substituted variables.
PolyForm pullback_with(const PolyForm& form, const std::vector<std::string>& new_vars,
                       const std::vector<Poly>& phi, const std::vector<PolyForm>& dphi)
{
    std::map<std::string, Poly> subst;
    for (std::size_t i = 0; i < form.vars.size(); ++i)
        subst.emplace(form.vars[i], phi[i]);
    const int m = static_cast<int>(new_vars.size());
    KForm out(m, form.form.degree());
    for (const auto& [idx, c] : form.form.terms()) {
        KForm term = KForm::constant(m, c.substitute(subst));
        for (int i : indices_of(idx))
            term = wedge(term, dphi[i].form);
        out += term;
    }
    return PolyForm(new_vars, std::move(out));
}

const std::vector<std::string> kJetOrder = {"u11", "u12", "u22", "u1", "u2", "q1", "q2"};

std::vector<unsigned> jet_key(const Monomial& m)
{
    std::vector<unsigned> key;
    for (const auto& v : kJetOrder)
        key.push_back(m.exponent(v));
    return key;
}

}  // namespace

// ---------------------------------------------------------------------------

EStructure::EStructure(LieAlgebra g, std::array<int, 4> frame) : g_(std::move(g)), frame_(frame)
{
    if (g_.dim() != 4)
        throw DimensionError("an {e}-structure needs a 4-dimensional algebra");
    auto sorted = frame_;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::array<int, 4>{0, 1, 2, 3})
        throw std::invalid_argument("frame labels must be a permutation of the basis");
}

KForm EStructure::omega() const
{
    const auto& f = frame_;
    return KForm::basis(4, {f[0], f[2]}) + KForm::basis(4, {f[1], f[3]});
}

KForm EStructure::theta() const
{
    const auto& f = frame_;
    return KForm::basis(4, {f[0], f[3]}) - KForm::basis(4, {f[1], f[2]});
}

Matrix EStructure::j() const
{
    const auto& f = frame_;
    Matrix m(4, 4);
    m(f[1], f[0]) = 1;
    m(f[0], f[1]) = -1;
    m(f[3], f[2]) = -1;
    m(f[2], f[3]) = 1;
    return m;
}

VectorTensor EStructure::canonical_nijenhuis() const
{
    const auto& f = frame_;
    VectorTensor n(4, std::vector<Vector>(4, Vector(4)));
    auto put = [&](int a, int b, int target, int sign) {
        n[f[a]][f[b]][f[target]] = sign;
        n[f[b]][f[a]][f[target]] = -sign;
    };
    put(0, 2, 1, -1);  // N(P1,Q1) = -P2
    put(0, 3, 0, 1);   // N(P1,Q2) = P1
    put(1, 2, 0, -1);  // N(P2,Q1) = -P1
    put(1, 3, 1, -1);  // N(P2,Q2) = -P2
    return n;
}

Scalar pfaffian_pairing(const KForm& a, const KForm& b, const KForm& omega)
{
    require_dim4_two_form(a, "first argument");
    require_dim4_two_form(b, "second argument");
    require_dim4_two_form(omega, "omega");
    Scalar vol = wedge(omega, omega).top_coefficient().constant_term();
    if (vol == 0)
        throw std::invalid_argument("omega is degenerate");
    return wedge(a, b).top_coefficient().constant_term() / vol;
}

Matrix j_from_theta(const KForm& omega, const KForm& theta)
{
    require_dim4_two_form(omega, "omega");
    require_dim4_two_form(theta, "theta");
    if (!wedge(theta, omega).is_zero())
        throw std::invalid_argument("theta ^ omega != 0");
    Scalar norm = pfaffian_pairing(theta, theta, omega);
    if (norm != 1)
        throw std::invalid_argument("<theta, theta> = " + scalar_to_string(norm) + ", expected 1");
    return *inverse(numeric_matrix(omega)) * numeric_matrix(theta);
}

VectorTensor nijenhuis(const LieAlgebra& g, const Matrix& j)
{
    g.require_numeric("nijenhuis");
    const int n = g.dim();
    if (static_cast<int>(j.rows()) != n || static_cast<int>(j.cols()) != n)
        throw DimensionError("endomorphism does not match the algebra");
    VectorTensor out(n, std::vector<Vector>(n, Vector(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            Vector x = unit(n, a), y = unit(n, b);
            Vector jx = j * x, jy = j * y;
            Vector r = bracket(g, jx, jy);
            Vector t1 = j * bracket(g, jx, y);
            Vector t2 = j * bracket(g, x, jy);
            Vector t3 = bracket(g, x, y);
            for (int k = 0; k < n; ++k)
                r[k] -= t1[k] + t2[k] + t3[k];
            out[a][b] = std::move(r);
        }
    return out;
}

PairingSignature pairing_signature(const KForm& omega)
{
    require_dim4_two_form(omega, "omega");
    auto basis = exterior_basis(4, 2);
    const std::size_t b = basis.size();
    PairingSignature result;
    result.gram = Matrix(b, b);
    std::vector<KForm> forms;
    for (IndexSet idx : basis) {
        KForm f(4, 2);
        f.add_term(idx, Poly(1));
        forms.push_back(std::move(f));
    }
    for (std::size_t r = 0; r < b; ++r)
        for (std::size_t s = 0; s < b; ++s)
            result.gram(r, s) = pfaffian_pairing(forms[r], forms[s], omega);
    result.full = inertia(result.gram);

    Vector w(b);
    for (std::size_t r = 0; r < b; ++r)
        w[r] = omega.coefficient(basis[r]).constant_term();
    Vector functional = result.gram * w;
    auto comp = nullspace(Matrix::from_rows({functional}, b));
    Matrix restricted(comp.size(), comp.size());
    for (std::size_t r = 0; r < comp.size(); ++r)
        for (std::size_t s = 0; s < comp.size(); ++s)
            restricted(r, s) = dot(comp[r], result.gram * comp[s]);
    result.complement = inertia(restricted);
    return result;
}

EStructureReport verify_e_structure(const EStructure& es)
{
    const LieAlgebra& g = es.algebra();
    g.require_numeric("verify_e_structure");
    const auto& f = es.frame();
    auto c = [&](int k, int i, int j) { return g.c(f[i - 1], f[j - 1], f[k - 1]).constant_term(); };

    struct Relation {
        const char* name;
        Scalar value;
        std::array<int, 3> triple;
        int sign;  // value = sign * d omega(triple)
    };
    const Relation relations[] = {
        {"c1_12 - c3_23 + c4_13", c(1, 1, 2) - c(3, 2, 3) + c(4, 1, 3), {1, 2, 3}, -1},
        {"c2_12 - c3_24 + c4_14", c(2, 1, 2) - c(3, 2, 4) + c(4, 1, 4), {1, 2, 4}, -1},
        {"c1_14 - c2_13 + c3_34", c(1, 1, 4) - c(2, 1, 3) + c(3, 3, 4), {1, 3, 4}, 1},
        {"c1_24 - c2_23 + c4_34", c(1, 2, 4) - c(2, 2, 3) + c(4, 3, 4), {2, 3, 4}, 1},
    };
    const KForm domega = ce_differential(g, es.omega());

    EStructureReport report;
    for (const auto& rel : relations) {
        std::vector<std::vector<Poly>> vectors;
        for (int t : rel.triple) {
            std::vector<Poly> v(4);
            v[f[t - 1]] = Poly(1);
            vectors.push_back(std::move(v));
        }
        Scalar dvalue = evaluate(domega, vectors).constant_term();
        if (rel.value != rel.sign * dvalue)
            throw std::logic_error(std::string("closedness relation ") + rel.name + " disagrees with d omega");
        report.relations.push_back({rel.name, rel.value, dvalue});
        if (rel.value != 0)
            report.closed = false;
    }
    if (report.closed != domega.is_zero())
        throw std::logic_error("closedness relations disagree with d omega");

    VectorTensor computed = nijenhuis(g, es.j());
    VectorTensor expected = es.canonical_nijenhuis();
    for (int a = 0; a < 4; ++a)
        for (int b = a + 1; b < 4; ++b)
            if (computed[a][b] != expected[a][b]) {
                report.nijenhuis_matches = false;
                report.mismatches.push_back({a, b, computed[a][b], expected[a][b]});
            }
    return report;
}

// ---------------------------------------------------------------------------

PolyForm::PolyForm(std::vector<std::string> v, KForm f) : vars(std::move(v)), form(std::move(f))
{
    if (static_cast<int>(vars.size()) != form.dim())
        throw DimensionError("chart variables do not match form dimension");
}

PolyForm PolyForm::differential(const std::vector<std::string>& vars, const Poly& f)
{
    const int n = static_cast<int>(vars.size());
    KForm out(n, 1);
    for (int i = 0; i < n; ++i)
        out.add_term(IndexSet{1} << i, f.derivative(vars[i]));
    return PolyForm(vars, std::move(out));
}

std::string PolyForm::to_string() const
{
    return form.to_string(differential_symbols(vars));
}

PolyForm exterior_derivative(const PolyForm& f)
{
    const int n = static_cast<int>(f.vars.size());
    KForm out(n, f.form.degree() + 1);
    if (out.degree() > n)
        return PolyForm(f.vars, std::move(out));
    for (const auto& [idx, c] : f.form.terms())
        for (int k = 0; k < n; ++k) {
            IndexSet bit = IndexSet{1} << k;
            if (idx & bit)
                continue;
            Poly dc = c.derivative(f.vars[k]);
            if (dc.is_zero())
                continue;
            out.add_term(idx | bit, dc * Scalar(wedge_sign(bit, idx)));
        }
    return PolyForm(f.vars, std::move(out));
}

PolyForm wedge(const PolyForm& a, const PolyForm& b)
{
    if (a.vars != b.vars)
        throw DimensionError("forms live on different charts");
    return PolyForm(a.vars, wedge(a.form, b.form));
}

std::string VectorField::to_string(const std::vector<std::string>& vars) const
{
    std::vector<std::pair<Poly, std::string>> parts;
    for (std::size_t i = 0; i < components.size(); ++i)
        parts.emplace_back(components[i], "d/d" + vars[i]);
    return format_combination(parts);
}

std::vector<std::string> exponential_coordinates(int n)
{
    std::vector<std::string> out;
    for (int i = 1; i <= n; ++i)
        out.push_back("x" + std::to_string(i));
    return out;
}

std::vector<Scalar> left_translation_series(int order)
{
    // Bernoulli numbers with B1 = +1/2, divided by k!.
    std::vector<Scalar> bern(order + 1);
    bern[0] = 1;
    for (int m = 1; m <= order; ++m) {
        Scalar sum = 0;
        mpz_class binom = 1;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            sum += Scalar(binom) * bern[j];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        bern[m] = -sum / (m + 1);
    }
    if (order >= 1)
        bern[1] = -bern[1];
    std::vector<Scalar> out(order + 1);
    mpz_class fact = 1;
    for (int k = 0; k <= order; ++k) {
        if (k > 0)
            fact *= k;
        out[k] = bern[k] / Scalar(fact);
    }
    return out;
}

std::vector<VectorField> left_invariant_frame(const LieAlgebra& g, int class_cap)
{
    g.require_numeric("left_invariant_frame");
    auto cls = nilpotency_class(g);
    if (!cls)
        throw std::invalid_argument("left_invariant_frame needs a nilpotent algebra");
    if (*cls > class_cap)
        throw std::invalid_argument("nilpotency class " + std::to_string(*cls) + " exceeds the cap " +
                                    std::to_string(class_cap));
    const int n = g.dim();
    auto vars = exponential_coordinates(n);
    PolyMatrix adx(n, std::vector<Poly>(n));
    for (int k = 0; k < n; ++k)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i < n; ++i)
                if (!g.c(i, j, k).is_zero())
                    adx[k][j] += Poly::variable(vars[i]) * g.c(i, j, k);

    auto b = left_translation_series(*cls);
    PolyMatrix total = poly_identity(n);
    PolyMatrix power = poly_identity(n);
    for (int k = 1; k <= *cls; ++k) {
        power = multiply(adx, power);
        if (is_zero(power))
            break;
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                if (!power[r][c].is_zero())
                    total[r][c] += power[r][c] * b[k];
    }
    std::vector<VectorField> frame(n);
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i)
            frame[j].components.push_back(total[i][j]);
    return frame;
}

std::vector<PolyForm> dual_coframe(const std::vector<std::string>& vars, const std::vector<VectorField>& frame)
{
    const int n = static_cast<int>(vars.size());
    if (static_cast<int>(frame.size()) != n)
        throw DimensionError("frame size does not match the chart");
    PolyMatrix nil(n, std::vector<Poly>(n));
    for (int j = 0; j < n; ++j) {
        if (static_cast<int>(frame[j].components.size()) != n)
            throw DimensionError("vector field has the wrong number of components");
        for (int i = 0; i < n; ++i)
            nil[i][j] = frame[j].components[i] - Poly(i == j ? 1 : 0);
    }
    // (I + N)^{-1} = sum (-N)^k, finite when N is nilpotent.
    PolyMatrix inv = poly_identity(n);
    PolyMatrix power = poly_identity(n);
    PolyMatrix minus_nil = nil;
    for (auto& row : minus_nil)
        for (auto& p : row)
            p = -p;
    for (int k = 1; k <= n; ++k) {
        power = multiply(minus_nil, power);
        if (is_zero(power))
            break;
        if (k == n)
            throw std::invalid_argument("frame matrix is not unipotent");
        for (int r = 0; r < n; ++r)
            for (int c = 0; c < n; ++c)
                inv[r][c] += power[r][c];
    }
    PolyMatrix f = nil;
    for (int i = 0; i < n; ++i)
        f[i][i] += Poly(1);
    if (multiply(inv, f) != poly_identity(n))
        throw std::invalid_argument("frame matrix is not unipotent");

    std::vector<PolyForm> out;
    for (int i = 0; i < n; ++i) {
        KForm form(n, 1);
        for (int k = 0; k < n; ++k)
            form.add_term(IndexSet{1} << k, inv[i][k]);
        out.emplace_back(vars, std::move(form));
    }
    return out;
}

std::optional<StructureConstants> maurer_cartan_constants(const std::vector<VectorField>& frame,
                                                          const std::vector<PolyForm>& coframe)
{
    const int n = static_cast<int>(frame.size());
    StructureConstants s(n);
    for (int k = 0; k < n; ++k) {
        PolyForm d = exterior_derivative(coframe[k]);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                Poly v = evaluate(d.form, {frame[i].components, frame[j].components});
                if (!v.is_constant() && !v.is_zero())
                    return std::nullopt;
                if (!v.is_zero())
                    s.set(i, j, k, -v);
            }
    }
    return s;
}

CoordinateForms coordinate_forms(const EStructure& es, const std::vector<PolyForm>& coframe)
{
    if (coframe.size() != 4)
        throw DimensionError("coordinate_forms needs a coframe of four 1-forms");
    const auto& f = es.frame();
    const auto& p1 = coframe[f[0]];
    const auto& p2 = coframe[f[1]];
    const auto& q1 = coframe[f[2]];
    const auto& q2 = coframe[f[3]];
    PolyForm omega(p1.vars, wedge(p1, q1).form + wedge(p2, q2).form);
    PolyForm theta(p1.vars, wedge(p1, q2).form - wedge(p2, q1).form);
    if (!exterior_derivative(omega).form.is_zero())
        throw std::invalid_argument("coordinate omega is not closed: d omega = " +
                                    exterior_derivative(omega).to_string());
    return {std::move(omega), std::move(theta)};
}

void verify_chart(const Chart& chart)
{
    const std::size_t n = chart.source.size();
    if (chart.target.size() != n || chart.forward.size() != n || chart.inverse.size() != n)
        throw ChartError("chart needs as many target variables, forward and inverse maps as source variables");
    std::map<std::string, Poly> to_target, to_source;
    for (std::size_t i = 0; i < n; ++i) {
        require_variables_within(chart.forward[i], chart.source, "forward map");
        require_variables_within(chart.inverse[i], chart.target, "inverse map");
        to_target.emplace(chart.source[i], chart.inverse[i]);
        to_source.emplace(chart.target[i], chart.forward[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        Poly y = chart.forward[i].substitute(to_target);
        if (y != Poly::variable(chart.target[i]))
            throw ChartError("forward(inverse(y)) gives " + chart.target[i] + " = " + y.to_string());
        Poly x = chart.inverse[i].substitute(to_source);
        if (x != Poly::variable(chart.source[i]))
            throw ChartError("inverse(forward(x)) gives " + chart.source[i] + " = " + x.to_string());
    }
}

PolyForm pullback(const PolyForm& form, const std::vector<std::string>& new_vars, const std::vector<Poly>& phi)
{
    if (phi.size() != form.vars.size())
        throw DimensionError("substitution does not cover the chart");
    std::vector<PolyForm> dphi;
    for (const auto& p : phi)
        dphi.push_back(PolyForm::differential(new_vars, p));
    return pullback_with(form, new_vars, phi, dphi);
}

std::vector<PolyForm> apply_chart(const std::vector<PolyForm>& forms, const Chart& chart)
{
    verify_chart(chart);
    std::vector<PolyForm> out;
    for (const auto& f : forms) {
        if (f.vars != chart.source)
            throw ChartError("form is not written in the chart's source coordinates");
        for (const auto& [idx, c] : f.form.terms())
            require_variables_within(c, chart.source, "form coefficient");
        PolyForm g = pullback(f, chart.target, chart.inverse);
        bool closed_before = exterior_derivative(f).form.is_zero();
        bool closed_after = exterior_derivative(g).form.is_zero();
        if (closed_before != closed_after)
            throw std::logic_error("change of coordinates did not preserve closedness");
        out.push_back(std::move(g));
    }
    return out;
}

// ---------------------------------------------------------------------------

std::vector<std::pair<Monomial, Scalar>> JetPolynomial::ordered_terms() const
{
    std::vector<std::pair<Monomial, Scalar>> out(poly.terms().begin(), poly.terms().end());
    std::stable_sort(out.begin(), out.end(),
                     [](const auto& a, const auto& b) { return jet_key(a.first) > jet_key(b.first); });
    return out;
}

std::string JetPolynomial::to_string() const
{
    std::string out;
    for (const auto& [m, c] : ordered_terms()) {
        bool negative = c < 0;
        Scalar mag = negative ? Scalar(-c) : c;
        std::string body;
        if (m.is_one())
            body = scalar_to_string(mag);
        else if (mag == 1)
            body = m.to_string();
        else
            body = scalar_to_string(mag) + " " + m.to_string();
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return (out.empty() ? "0" : out) + " = 0";
}

std::optional<MongeAmpereCoefficients> monge_ampere_coefficients(const JetPolynomial& p)
{
    MongeAmpereCoefficients r;
    Poly u12sq;
    for (const auto& [m, c] : p.poly.terms()) {
        unsigned e11 = m.exponent("u11"), e12 = m.exponent("u12"), e22 = m.exponent("u22");
        Monomial rest;
        for (const auto& [v, e] : m.factors())
            if (v != "u11" && v != "u12" && v != "u22")
                rest = rest * Monomial(v, e);
        Poly t = Poly::term(c, rest);
        if (e11 == 1 && e12 == 0 && e22 == 1)
            r.a += t;
        else if (e11 == 0 && e12 == 2 && e22 == 0)
            u12sq += t;
        else if (e11 == 1 && e12 == 0 && e22 == 0)
            r.b += t;
        else if (e11 == 0 && e12 == 1 && e22 == 0)
            r.c += t;
        else if (e11 == 0 && e12 == 0 && e22 == 1)
            r.d += t;
        else if (e11 == 0 && e12 == 0 && e22 == 0)
            r.e += t;
        else
            return std::nullopt;
    }
    if (u12sq != -r.a)
        return std::nullopt;
    return r;
}

JetPolynomial emit_pde(const PolyForm& theta)
{
    if (theta.form.degree() != 2)
        throw DimensionError("emit_pde expects a 2-form");
    std::vector<std::string> sorted = theta.vars;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<std::string>{"p1", "p2", "q1", "q2"})
        throw std::invalid_argument("emit_pde expects the chart variables p1, p2, q1, q2");
    for (const auto& [idx, c] : theta.form.terms())
        require_variables_within(c, theta.vars, "theta coefficient");

    const std::vector<std::string> q = {"q1", "q2"};
    auto dq = [&](const Poly& a, const Poly& b) {
        KForm f(2, 1);
        f.add_term(1, a);
        f.add_term(2, b);
        return PolyForm(q, std::move(f));
    };
    auto u = [](const char* name) { return Poly::variable(name); };
    std::vector<Poly> phi;
    std::vector<PolyForm> dphi;
    for (const auto& v : theta.vars) {
        if (v == "p1") {
            phi.push_back(u("u1"));
            dphi.push_back(dq(u("u11"), u("u12")));
        } else if (v == "p2") {
            phi.push_back(u("u2"));
            dphi.push_back(dq(u("u12"), u("u22")));
        } else if (v == "q1") {
            phi.push_back(u("q1"));
            dphi.push_back(dq(1, 0));
        } else {
            phi.push_back(u("q2"));
            dphi.push_back(dq(0, 1));
        }
    }
    Poly coeff = pullback_with(theta, q, phi, dphi).form.coefficient(3);

    JetPolynomial out{coeff};
    if (coeff.is_zero())
        return out;
    mpz_class den = 1, content = 0;
    for (const auto& [m, c] : coeff.terms())
        den = lcm(den, mpz_class(c.get_den()));
    for (const auto& [m, c] : coeff.terms())
        content = gcd(content, mpz_class(c * Scalar(den)));
    out.poly *= Scalar(den) / Scalar(content);
    if (out.ordered_terms().front().second < 0)
        out.poly = -out.poly;
    return out;
}

}  // namespace liesym
