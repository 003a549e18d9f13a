#include "liesym/structures.hpp"

#include <algorithm>

namespace liesym {

std::string to_string(StructureKind kind)
{
    switch (kind) {
    case StructureKind::contact:
        return "contact";
    case StructureKind::symplectic:
        return "symplectic";
    case StructureKind::exact_symplectic:
        return "exact-symplectic";
    }
    return "?";
}

namespace {

std::vector<std::string> numbered(const std::string& prefix, int count)
{
    std::vector<std::string> v;
    for (int i = 1; i <= count; ++i)
        v.push_back(prefix + std::to_string(i));
    return v;
}

std::vector<Poly> variable_vector(const std::vector<std::string>& names)
{
    std::vector<Poly> v;
    for (const auto& n : names)
        v.push_back(Poly::variable(n));
    return v;
}

Assignment bind_values(const std::vector<std::string>& vars, const Vector& values)
{
    Assignment a;
    for (std::size_t i = 0; i < vars.size(); ++i)
        a[vars[i]] = values[i];
    return a;
}

}  // namespace

std::optional<Vector> grid_search_nonzero(const Poly& p, const std::vector<std::string>& vars)
{
    if (p.is_zero())
        return std::nullopt;
    for (const auto& v : p.variables())
        if (std::find(vars.begin(), vars.end(), v) == vars.end())
            throw std::invalid_argument("grid search: polynomial depends on unlisted variable " + v);
    const std::size_t k = vars.size();
    const long bound = static_cast<long>(p.total_degree()) + 1;

    // Flatten to exponent vectors for fast evaluation at integer points.
    std::vector<std::pair<mpz_class, std::vector<unsigned>>> terms;
    mpz_class denom_lcm = 1;
    for (const auto& [m, c] : p.terms())
        mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), c.get_den_mpz_t());
    for (const auto& [m, c] : p.terms()) {
        std::vector<unsigned> e(k, 0);
        for (const auto& [var, ex] : m.factors())
            e[std::find(vars.begin(), vars.end(), var) - vars.begin()] = ex;
        terms.emplace_back(c.get_num() * (denom_lcm / c.get_den()), std::move(e));
    }
    std::vector<long> point(k, -bound);
    mpz_class value, power;
    while (true) {
        value = 0;
        for (const auto& [c, e] : terms) {
            mpz_class t = c;
            for (std::size_t i = 0; i < k && t != 0; ++i) {
                if (e[i] == 0)
                    continue;
                mpz_pow_ui(power.get_mpz_t(), mpz_class(point[i]).get_mpz_t(), e[i]);
                t *= power;
            }
            value += t;
        }
        if (value != 0) {
            Vector out(k);
            for (std::size_t i = 0; i < k; ++i)
                out[i] = point[i];
            return out;
        }
        std::size_t pos = k;
        while (pos > 0 && point[pos - 1] == bound) {
            point[pos - 1] = -bound;
            --pos;
        }
        if (pos == 0)
            return std::nullopt;  // unreachable for nonzero p
        ++point[pos - 1];
    }
}

int genre(const LieAlgebra& g, const KForm& alpha)
{
    g.require_numeric("genre");
    if (alpha.degree() != 1 || alpha.dim() != g.dim())
        throw DimensionError("genre needs a 1-form on the algebra");
    if (alpha.is_zero())
        throw std::invalid_argument("genre of the zero form is undefined");
    const KForm da = ce_differential(g, alpha);
    int best = 1;
    KForm power = KForm::constant(g.dim(), Poly(1));
    for (int k = 1; 2 * k <= g.dim(); ++k) {
        power = wedge(power, da);
        if (!power.is_zero())
            best = std::max(best, 2 * k);
        if (2 * k + 1 <= g.dim() && !wedge(alpha, power).is_zero())
            best = std::max(best, 2 * k + 1);
    }
    return best;
}

ContactResult is_contact(const LieAlgebra& g)
{
    g.require_numeric("is_contact");
    const int n = g.dim();
    if (n % 2 == 0)
        throw DimensionError("contact structures need odd dimension, got " + std::to_string(n));
    const int m = (n - 1) / 2;
    ContactResult result;
    result.variables = numbered("a", n);
    const KForm alpha = KForm::covector(n, variable_vector(result.variables));
    const KForm top = wedge(alpha, wedge_power(ce_differential(g, alpha), m));
    result.certificate_polynomial = top.top_coefficient();
    result.contact = !result.certificate_polynomial.is_zero();
    if (result.contact) {
        Vector a = *grid_search_nonzero(result.certificate_polynomial, result.variables);
        KForm witness = KForm::covector(n, a);
        Scalar value = result.certificate_polynomial.evaluate(bind_values(result.variables, a));
        result.witness = StructureWitness{StructureKind::contact, witness, a, value};
    }
    return result;
}

int contact_sign(const LieAlgebra& g, const KForm& alpha, const KForm& orientation)
{
    g.require_numeric("contact_sign");
    const int n = g.dim();
    if (n % 2 == 0)
        throw DimensionError("contact sign needs odd dimension");
    if (orientation.degree() != n || orientation.dim() != n || orientation.top_coefficient().is_zero())
        throw std::invalid_argument("orientation must be a nonzero top-degree form");
    const int m = (n - 1) / 2;
    Poly value = wedge(alpha, wedge_power(ce_differential(g, alpha), m)).top_coefficient();
    if (value.is_zero())
        throw std::invalid_argument("form is not contact");
    Scalar ratio = value.constant_value() / orientation.top_coefficient().constant_value();
    return sgn(ratio);
}

std::vector<KForm> closed_two_forms(const LieAlgebra& g)
{
    g.require_numeric("closed_two_forms");
    const int n = g.dim();
    auto basis = exterior_basis(n, 2);
    std::vector<KForm> out;
    if (basis.empty())
        return out;
    Matrix d = differential_matrix(g, 2);
    std::vector<Vector> kernel;
    if (d.rows() == 0) {
        for (std::size_t i = 0; i < basis.size(); ++i) {
            Vector v(basis.size());
            v[i] = 1;
            kernel.push_back(std::move(v));
        }
    } else {
        kernel = nullspace(d);
    }
    for (const auto& v : kernel) {
        KForm f(n, 2);
        for (std::size_t i = 0; i < basis.size(); ++i)
            f.add_term(basis[i], Poly(v[i]));
        out.push_back(std::move(f));
    }
    return out;
}

SymplecticResult has_symplectic(const LieAlgebra& g)
{
    g.require_numeric("has_symplectic");
    const int n = g.dim();
    if (n % 2 != 0)
        throw DimensionError("symplectic structures need even dimension, got " + std::to_string(n));
    SymplecticResult result;
    auto z2 = closed_two_forms(g);
    result.variables = numbered("s", static_cast<int>(z2.size()));
    KForm generic(n, 2);
    for (std::size_t i = 0; i < z2.size(); ++i)
        generic += z2[i] * Poly::variable(result.variables[i]);
    result.pfaffian_polynomial = pfaffian(generic, KForm::volume(n));
    result.exists = !result.pfaffian_polynomial.is_zero();
    if (result.exists) {
        Vector s = *grid_search_nonzero(result.pfaffian_polynomial, result.variables);
        KForm omega(n, 2);
        for (std::size_t i = 0; i < z2.size(); ++i)
            omega += z2[i] * Poly(s[i]);
        Scalar value = result.pfaffian_polynomial.evaluate(bind_values(result.variables, s));
        result.witness = StructureWitness{StructureKind::symplectic, omega, std::nullopt, value};
    }
    return result;
}

SymplecticResult has_exact_symplectic(const LieAlgebra& g)
{
    g.require_numeric("has_exact_symplectic");
    const int n = g.dim();
    if (n % 2 != 0)
        throw DimensionError("symplectic structures need even dimension, got " + std::to_string(n));
    SymplecticResult result;
    result.variables = numbered("a", n);
    const KForm f = KForm::covector(n, variable_vector(result.variables));
    result.pfaffian_polynomial = pfaffian(ce_differential(g, f), KForm::volume(n));
    result.exists = !result.pfaffian_polynomial.is_zero();
    if (result.exists) {
        Vector a = *grid_search_nonzero(result.pfaffian_polynomial, result.variables);
        KForm omega = ce_differential(g, KForm::covector(n, a));
        Scalar value = result.pfaffian_polynomial.evaluate(bind_values(result.variables, a));
        result.witness = StructureWitness{StructureKind::exact_symplectic, omega, a, value};
    }
    return result;
}

bool is_exact(const LieAlgebra& g, const KForm& omega)
{
    g.require_numeric("is_exact");
    const int n = g.dim();
    if (omega.degree() != 2 || omega.dim() != n)
        throw DimensionError("is_exact needs a 2-form on the algebra");
    if (!omega.is_numeric())
        throw std::invalid_argument("is_exact needs a numeric 2-form");
    if (!ce_differential(g, omega).is_zero())
        throw std::invalid_argument("form is not closed");
    auto basis = exterior_basis(n, 2);
    Vector rhs(basis.size());
    for (std::size_t i = 0; i < basis.size(); ++i)
        rhs[i] = omega.coefficient(basis[i]).constant_term();
    return solve(differential_matrix(g, 1), rhs).has_value();
}

std::string format_assignment(const Assignment& a)
{
    std::string s;
    for (const auto& [k, v] : a) {
        if (!s.empty())
            s += ", ";
        s += k + "=" + scalar_to_string(v);
    }
    return s;
}

EntryReport verify_corpus_entry(const CorpusEntry& entry, const Assignment& params)
{
    for (const auto& decl : entry.params) {
        auto it = params.find(decl.name);
        if (it == params.end())
            throw ParameterExclusion(entry.id + ": no value for parameter " + decl.name);
        for (const auto& bad : decl.excluded)
            if (it->second == bad)
                throw ParameterExclusion(entry.id + ": parameter " + decl.name + " = " +
                                         scalar_to_string(bad) + " is excluded");
    }

    EntryReport report;
    report.id = entry.id;
    report.assignment = params;
    auto record = [&report](std::string check, bool passed, std::string detail) {
        report.passed = report.passed && passed;
        report.checks.push_back({std::move(check), passed, std::move(detail)});
    };
    auto yes_no = [](bool b) { return std::string(b ? "yes" : "no"); };
    auto triple = [](const std::array<int, 3>& w) {
        return "(e" + std::to_string(w[0] + 1) + ", e" + std::to_string(w[1] + 1) + ", e" +
               std::to_string(w[2] + 1) + ")";
    };

    JacobiReport symbolic = jacobi_check(entry.algebra);
    if (!entry.algebra.params().empty() || !symbolic.passed)
        record("jacobi_symbolic", symbolic.passed,
               symbolic.passed ? "d^2 = 0 in all parameters" : "fails on " + triple(*symbolic.witness));

    const LieAlgebra g = entry.algebra.substitute(params, Validation::defer);
    report.algebra = g;
    g.require_numeric(("corpus entry " + entry.id).c_str());
    JacobiReport jac = jacobi_check(g);
    if (!jac.passed) {
        std::string residual;
        for (std::size_t k = 0; k < jac.residual.size(); ++k)
            if (!jac.residual[k].is_zero())
                residual += (residual.empty() ? "" : ", ") + std::string("e") + std::to_string(k + 1) + ": " +
                            jac.residual[k].to_string();
        record("jacobi", false, "Jacobiator on " + triple(*jac.witness) + " = {" + residual + "}");
        return report;
    }
    record("jacobi", true, "d^2 = 0");

    const auto& claims = entry.claims;
    if (claims.derived_dim) {
        int d = derived_dim(g);
        record("derived_dim", d == *claims.derived_dim,
               "dim g' = " + std::to_string(d) + ", claimed " + std::to_string(*claims.derived_dim));
    }
    if (claims.omega) {
        KForm omega = claims.omega->substitute(params);
        bool closed = ce_differential(g, omega).is_zero();
        record("omega_closed", closed, "omega = " + omega.to_string());
        bool nondeg = g.dim() % 2 == 0 && !pfaffian(omega, KForm::volume(g.dim())).is_zero();
        record("omega_nondegenerate", nondeg,
               g.dim() % 2 == 0 ? "Pf(omega) = " + pfaffian(omega, KForm::volume(g.dim())).to_string()
                                : "odd dimension");
        if (claims.omega_exact && closed) {
            bool ex = is_exact(g, omega);
            record("omega_exact", ex == *claims.omega_exact,
                   "omega exact: " + yes_no(ex) + ", claimed " + yes_no(*claims.omega_exact));
        }
    }
    if (claims.symplectic) {
        bool has = g.dim() % 2 == 0 && has_symplectic(g).exists;
        record("symplectic", has == *claims.symplectic,
               "symplectic: " + yes_no(has) + ", claimed " + yes_no(*claims.symplectic));
    }
    if (claims.exact_symplectic) {
        SymplecticResult ex = has_exact_symplectic(g);
        std::string detail = "exact symplectic: " + yes_no(ex.exists) + ", claimed " + yes_no(*claims.exact_symplectic);
        if (ex.witness) {
            report.exact_potential = ex.witness->potential;
            detail += "; potential " + KForm::covector(g.dim(), *ex.witness->potential).to_string();
        }
        record("exact_symplectic", ex.exists == *claims.exact_symplectic, detail);
        if (ex.witness) {
            int t = coadjoint_tangent_dim(g, *ex.witness->potential);
            record("coadjoint_orbit_open", t == g.dim(),
                   "dim of the coadjoint orbit through the potential = " + std::to_string(t));
        }
    }
    for (const auto& [k, dim] : claims.cohomology) {
        int h = cohomology_dim(g, k);
        record("cohomology_H" + std::to_string(k), h == dim,
               "dim H^" + std::to_string(k) + " = " + std::to_string(h) + ", claimed " + std::to_string(dim));
    }
    if (claims.contact) {
        bool c = g.dim() % 2 == 1 && is_contact(g).contact;
        record("contact", c == *claims.contact, "contact: " + yes_no(c) + ", claimed " + yes_no(*claims.contact));
    }
    if (claims.unimodular) {
        bool u = is_unimodular(g).passed;
        record("unimodular", u == *claims.unimodular,
               "unimodular: " + yes_no(u) + ", claimed " + yes_no(*claims.unimodular));
    }
    return report;
}

}  // namespace liesym
