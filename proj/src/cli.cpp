#include "liesym/cli.hpp"

#include "liesym/suspension.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

namespace liesym {

namespace {

using Clock = std::chrono::steady_clock;

// Runs `body` and stamps its elapsed time on the records it added.
template <class F>
void timed(RunReport& report, F&& body)
{
    std::size_t before = report.records.size();
    auto start = Clock::now();
    body();
    double ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
    for (std::size_t i = before; i < report.records.size(); ++i)
        report.records[i].millis = ms;
}

std::string e(int i)
{
    return "e" + std::to_string(i + 1);
}

std::string vector_string(const Vector& v)
{
    std::vector<std::pair<Poly, std::string>> parts;
    for (std::size_t i = 0; i < v.size(); ++i)
        parts.emplace_back(Poly(v[i]), e(static_cast<int>(i)));
    return format_combination(parts);
}

std::string covector_string(const Vector& v)
{
    return KForm::covector(static_cast<int>(v.size()), v).to_string();
}

std::string matrix_string(const Matrix& m)
{
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        if (r)
            out += "; ";
        for (std::size_t c = 0; c < m.cols(); ++c)
            out += (c ? " " : "") + scalar_to_string(m(r, c));
    }
    return out;
}

std::string triple_string(const std::array<int, 3>& w)
{
    return "(" + e(w[0]) + ", " + e(w[1]) + ", " + e(w[2]) + ")";
}

std::string yes_no(bool b)
{
    return b ? "yes" : "no";
}

std::string algebra_text(const LieAlgebra& g, const std::string& name)
{
    AlgebraFile f;
    f.name = name;
    f.dim = g.dim();
    f.constants = g.constants();
    return print_algebra(f);
}

// Records Jacobi on a numeric algebra; false if it fails.
bool record_jacobi(RunReport& report, const LieAlgebra& g)
{
    JacobiReport j = jacobi_check(g);
    if (j.passed) {
        report.add("jacobi", true, "d^2 = 0");
        return true;
    }
    auto& r = report.add("jacobi", false, "Jacobi identity fails on " + triple_string(*j.witness));
    r.data.emplace_back("witness", triple_string(*j.witness));
    std::vector<std::pair<Poly, std::string>> parts;
    for (std::size_t k = 0; k < j.residual.size(); ++k)
        parts.emplace_back(j.residual[k], e(static_cast<int>(k)));
    r.data.emplace_back("jacobiator", format_combination(parts));
    return false;
}

LieAlgebra checked_algebra(const AlgebraFile& file, const Assignment& values)
{
    return numeric_algebra(file, values);
}

std::array<int, 4> frame_of(const AlgebraFile& file)
{
    return file.labels.value_or(std::array<int, 4>{0, 1, 2, 3});
}

const char* const kFrameNames[4] = {"P1", "P2", "Q1", "Q2"};

}  // namespace

// ---------------------------------------------------------------------------

std::vector<NamedText> read_corpus_dir(const std::string& dir)
{
    namespace fs = std::filesystem;
    std::vector<NamedText> out;
    std::error_code ec;
    fs::directory_iterator it(dir, ec);
    if (ec)
        throw InputError("cannot read corpus directory '" + dir + "': " + ec.message());
    for (const auto& entry : it)
        if (entry.is_regular_file() && entry.path().extension() == ".alg")
            out.emplace_back(entry.path().filename().string(), read_file(entry.path().string()));
    std::sort(out.begin(), out.end());
    return out;
}

Assignment parse_assignments(const std::vector<std::string>& items)
{
    Assignment a;
    for (const auto& item : items) {
        auto eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw InputError("expected name=value, got '" + item + "'");
        std::string name = item.substr(0, eq);
        Poly v;
        try {
            v = parse_polynomial(item.substr(eq + 1), {});
        } catch (const ParseError& err) {
            throw InputError("bad value in '" + item + "': " + err.message());
        }
        if (!v.is_zero() && !v.is_constant())
            throw InputError("value of '" + name + "' must be rational");
        a[name] = v.constant_term();
    }
    return a;
}

LieAlgebra numeric_algebra(const AlgebraFile& file, const Assignment& values)
{
    for (const auto& [name, v] : values)
        if (std::none_of(file.params.begin(), file.params.end(), [&](const auto& p) { return p.name == name; }))
            throw InputError("unknown parameter '" + name + "'");
    for (const auto& p : file.params) {
        auto it = values.find(p.name);
        if (it == values.end())
            throw InputError("parameter '" + p.name + "' needs a value (--set " + p.name + "=...)");
        for (const auto& bad : p.excluded)
            if (it->second == bad)
                throw InputError("parameter " + p.name + " = " + scalar_to_string(bad) + " is excluded");
    }
    return to_algebra(file, Validation::defer).substitute(values, Validation::defer);
}

RunReport run_check(const AlgebraFile& file, const Assignment& values)
{
    RunReport report;
    report.command = "check";
    report.input = file.name;
    LieAlgebra g = checked_algebra(file, values);
    const int n = g.dim();

    bool jacobi_ok = true;
    timed(report, [&] {
        if (!file.params.empty()) {
            JacobiReport sym = jacobi_check(to_algebra(file, Validation::defer));
            report.add("jacobi_symbolic", sym.passed,
                       sym.passed ? "d^2 = 0 in all parameters" : "fails on " + triple_string(*sym.witness));
        }
        jacobi_ok = record_jacobi(report, g);
    });
    if (!jacobi_ok)
        return report;

    timed(report, [&] {
        UnimodularReport u = is_unimodular(g);
        auto& r = report.add("unimodular", true, yes_no(u.passed));
        std::vector<std::pair<Poly, std::string>> traces;
        for (int i = 0; i < n; ++i)
            traces.emplace_back(u.traces[i], e(i) + "*");
        r.data.emplace_back("trace ad", format_combination(traces));
    });
    timed(report, [&] {
        report.add("derived_dim", true, std::to_string(derived_dim(g)));
        auto cls = nilpotency_class(g);
        report.add("nilpotent", true, cls ? "yes, class " + std::to_string(*cls) : "no");
        KillingForm k = killing_form(g);
        auto& r = report.add("killing_signature", true,
                             "(" + std::to_string(k.signature.positive) + ", " + std::to_string(k.signature.negative) +
                                 "), zero " + std::to_string(k.signature.zero));
        r.data.emplace_back("matrix", matrix_string(k.matrix));
    });
    timed(report, [&] {
        std::string betti;
        for (int k = 0; k <= n; ++k)
            betti += (k ? ", " : "") + std::to_string(cohomology_dim(g, k));
        report.add("cohomology", true, "dim H^0..H^" + std::to_string(n) + " = " + betti);
    });
    timed(report, [&] {
        if (n % 2 == 1) {
            ContactResult c = is_contact(g);
            auto& r = report.add("contact", true, yes_no(c.contact));
            r.data.emplace_back("certificate polynomial", c.certificate_polynomial.to_string());
            if (c.witness) {
                r.data.emplace_back("alpha", c.witness->form.to_string());
                r.data.emplace_back("alpha ^ (d alpha)^m", scalar_to_string(c.witness->certificate));
            }
        } else {
            SymplecticResult s = has_symplectic(g);
            auto& r = report.add("symplectic", true, yes_no(s.exists));
            if (s.witness) {
                r.data.emplace_back("omega", s.witness->form.to_string());
                r.data.emplace_back("Pf(omega)", scalar_to_string(s.witness->certificate));
            }
            SymplecticResult x = has_exact_symplectic(g);
            auto& rx = report.add("exact_symplectic", true, yes_no(x.exists));
            rx.data.emplace_back("Pf(d f)", x.pfaffian_polynomial.to_string());
            if (x.witness) {
                rx.data.emplace_back("f", covector_string(*x.witness->potential));
                rx.data.emplace_back("d f", x.witness->form.to_string());
            }
        }
    });

    bool has_claims = file.claims.derived_dim || file.claims.omega || file.claims.omega_exact ||
                      file.claims.exact_symplectic || file.claims.symplectic || file.claims.contact ||
                      file.claims.unimodular || !file.claims.cohomology.empty();
    if (has_claims) {
        timed(report, [&] {
            EntryReport er = verify_corpus_entry(to_corpus_entry(file), values);
            for (const auto& c : er.checks)
                if (c.check != "jacobi" && c.check != "jacobi_symbolic")
                    report.add("claim " + c.check, c.passed, c.detail);
        });
    }
    return report;
}

RunReport run_corpus(const std::vector<NamedText>& files, unsigned jobs)
{
    RunReport report;
    report.command = "corpus";
    report.input = std::to_string(files.size()) + " entries";

    std::vector<CorpusEntry> entries;
    std::set<std::string> ids;
    for (const auto& [name, text] : files) {
        AlgebraFile f = parse_algebra(text, name);
        if (f.name.empty())
            throw InputError(name + ": corpus entries need a 'name' line");
        if (!ids.insert(f.name).second)
            throw InputError(name + ": duplicate corpus id '" + f.name + "'");
        entries.push_back(to_corpus_entry(f));
    }

    struct Task {
        std::size_t entry;
        Assignment sample;
    };
    std::vector<Task> tasks;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (entries[i].samples.empty())
            tasks.push_back({i, {}});
        for (const auto& s : entries[i].samples)
            tasks.push_back({i, s});
    }
    struct Outcome {
        std::optional<EntryReport> report;
        std::string error;
        double ms = 0;
    };
    std::vector<Outcome> outcomes(tasks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t t; (t = next.fetch_add(1)) < tasks.size();) {
            auto start = Clock::now();
            try {
                outcomes[t].report = verify_corpus_entry(entries[tasks[t].entry], tasks[t].sample);
            } catch (const std::exception& ex) {
                outcomes[t].error = ex.what();
            }
            outcomes[t].ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
        }
    };
    if (jobs == 0)
        jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(1, tasks.size())));
    std::vector<std::thread> pool;
    for (unsigned j = 1; j < jobs; ++j)
        pool.emplace_back(worker);
    worker();
    for (auto& th : pool)
        th.join();

    std::vector<std::size_t> order(entries.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](auto a, auto b) { return entries[a].id < entries[b].id; });
    for (std::size_t i : order) {
        ReportRecord rec;
        rec.check = entries[i].id;
        int samples = 0, checks = 0;
        double ms = 0;
        std::vector<std::string> failures;
        for (std::size_t t = 0; t < tasks.size(); ++t) {
            if (tasks[t].entry != i)
                continue;
            ++samples;
            ms += outcomes[t].ms;
            std::string prefix = tasks[t].sample.empty() ? "" : "[" + format_assignment(tasks[t].sample) + "] ";
            if (!outcomes[t].report) {
                rec.passed = false;
                failures.push_back(prefix + "error: " + outcomes[t].error);
                rec.data.emplace_back(prefix + "error", outcomes[t].error);
                continue;
            }
            for (const auto& c : outcomes[t].report->checks) {
                ++checks;
                rec.data.emplace_back(prefix + c.check, std::string(c.passed ? "pass  " : "FAIL  ") + c.detail);
                if (!c.passed) {
                    rec.passed = false;
                    failures.push_back(prefix + c.check + ": " + c.detail);
                }
            }
        }
        rec.detail = std::to_string(samples) + (samples == 1 ? " sample, " : " samples, ") + std::to_string(checks) +
                     " checks";
        for (const auto& f : failures)
            rec.detail += "; " + f;
        rec.millis = ms;
        report.records.push_back(std::move(rec));
    }
    return report;
}

RunReport run_suspend(const AlgebraFile& file, const SuspendOptions& options, const Assignment& values)
{
    RunReport report;
    report.command = "suspend";
    report.input = file.name;
    LieAlgebra h = checked_algebra(file, values);
    const int n = h.dim();
    bool ok = true;
    timed(report, [&] { ok = record_jacobi(report, h); });
    if (!ok)
        return report;

    auto form_option = [&](const std::optional<std::string>& text, int degree, const char* flag) {
        if (!text)
            throw InputError(std::string("this variant needs ") + flag);
        KForm f = parse_form(*text, n);
        if (f.degree() != degree && !f.is_zero())
            throw InputError(std::string(flag) + " must have degree " + std::to_string(degree));
        if (f.is_zero())
            f = KForm(n, degree);
        return f;
    };
    std::optional<Derivation> der;
    if (options.derivation) {
        try {
            der = Derivation(h, parse_matrix(*options.derivation, n));
        } catch (const LeibnizViolation& ex) {
            throw InputError(std::string("--derivation: ") + ex.what());
        } catch (const std::invalid_argument& ex) {
            throw InputError(std::string("--derivation: ") + ex.what());
        }
    }

    SuspensionResult res;
    std::string kind;
    timed(report, [&] {
        try {
            switch (options.variant) {
            case SuspendVariant::contact:
                kind = "contactization";
                res = contactize(h, form_option(options.alpha, 1, "--alpha"), der);
                break;
            case SuspendVariant::symplectic: {
                kind = "symplectization";
                KForm alpha(n, 1);
                if (options.alpha) {
                    alpha = form_option(options.alpha, 1, "--alpha");
                } else {
                    ContactResult c = n % 2 == 1 ? is_contact(h) : ContactResult{};
                    if (!c.witness)
                        throw InputError("algebra has no contact form to symplectize");
                    alpha = c.witness->form;
                }
                report.add("contact_form", true, alpha.to_string());
                res = symplectize_contact(h, alpha, der);
                break;
            }
            case SuspendVariant::two_form:
                kind = "symplectization (2-form)";
                if (der)
                    throw InputError("--derivation is not used by the 2-form variant");
                res = symplectize_2form(h, form_option(options.omega, 2, "--omega"));
                break;
            }
        } catch (const InputError&) {
            throw;
        } catch (const DimensionError& ex) {
            throw InputError(ex.what());
        } catch (const std::invalid_argument& ex) {
            throw InputError(ex.what());
        }
    });

    auto& r = report.add("suspension", res.exists, kind + (res.exists ? " exists" : " does not exist"));
    if (!res.detail.empty())
        r.data.emplace_back("detail", res.detail);
    r.data.emplace_back("w", vector_string(res.w));
    if (res.derivation)
        r.data.emplace_back("A", matrix_string(*res.derivation));
    r.data.emplace_back("criterion", scalar_to_string(res.criterion));
    r.data.emplace_back("certificate", scalar_to_string(res.certificate));
    if (res.exists && res.algebra) {
        r.data.emplace_back("form", res.form->to_string());
        r.data.emplace_back("algebra", algebra_text(*res.algebra, file.name + "+v"));
        timed(report, [&] {
            bool jac = jacobi_check(*res.algebra).passed;
            report.add("suspension_jacobi", jac, jac ? "d^2 = 0 on the suspension" : "Jacobi fails on the suspension");
            const int m = res.algebra->dim();
            if (m % 2 == 1) {
                KForm a = *res.form;
                Scalar top = wedge(a, wedge_power(ce_differential(*res.algebra, a), (m - 1) / 2))
                                 .top_coefficient()
                                 .constant_term();
                report.add("suspension_contact", top != 0, "alpha ^ (d alpha)^m = " + scalar_to_string(top));
            } else {
                bool closed = ce_differential(*res.algebra, *res.form).is_zero();
                Scalar pf = pfaffian(*res.form, KForm::volume(m)).constant_term();
                report.add("suspension_symplectic", closed && pf != 0,
                           std::string(closed ? "closed" : "not closed") + ", Pf = " + scalar_to_string(pf));
            }
        });
    }
    return report;
}

RunReport run_estructure(const AlgebraFile& file, const Assignment& values)
{
    RunReport report;
    report.command = "estructure";
    report.input = file.name;
    LieAlgebra g = checked_algebra(file, values);
    if (g.dim() != 4)
        throw InputError("estructure needs a 4-dimensional algebra");
    bool ok = true;
    timed(report, [&] { ok = record_jacobi(report, g); });
    if (!ok)
        return report;
    EStructure es(g, frame_of(file));

    timed(report, [&] {
        auto& fr = report.add("frame", true);
        for (int i = 0; i < 4; ++i)
            fr.data.emplace_back(kFrameNames[i], e(es.frame()[i]));
        fr.data.emplace_back("omega", es.omega().to_string());
        fr.data.emplace_back("theta", es.theta().to_string());
        Matrix j = j_from_theta(es.omega(), es.theta());
        auto& rj = report.add("j_from_theta", j == es.j(), "omega(jX, Y) = theta(X, Y)");
        rj.data.emplace_back("j", matrix_string(j));
        Matrix id = Matrix::identity(4);
        report.add("j_squared", j * j == id * Scalar(-1), "j^2 = -1");
        auto cm = coefficient_matrix(es.omega());
        Matrix o(4, 4);
        for (int a = 0; a < 4; ++a)
            for (int b = 0; b < 4; ++b)
                o(a, b) = cm[a][b].constant_value();
        report.add("j_anti_symplectic", j.transpose() * o * j == o * Scalar(-1), "omega(jX, jY) = -omega(X, Y)");
        PairingSignature ps = pairing_signature(es.omega());
        report.add("pairing_signature", true,
                   "(" + std::to_string(ps.full.positive) + ", " + std::to_string(ps.full.negative) +
                       ") on 2-forms, (" + std::to_string(ps.complement.positive) + ", " +
                       std::to_string(ps.complement.negative) + ") on the complement of omega");
        report.add("theta_normalized", pfaffian_pairing(es.theta(), es.theta(), es.omega()) == 1 &&
                                           wedge(es.theta(), es.omega()).is_zero(),
                   "<theta, theta> = 1, theta ^ omega = 0");
    });
    timed(report, [&] {
        EStructureReport r = verify_e_structure(es);
        for (const auto& rel : r.relations) {
            auto& rr = report.add("closedness " + rel.name, rel.value == 0, "= " + scalar_to_string(rel.value));
            rr.data.emplace_back("d omega on the frame triple", scalar_to_string(rel.domega));
        }
        auto& rn = report.add("nijenhuis", r.nijenhuis_matches,
                              r.nijenhuis_matches ? "N_j equals the canonical tensor"
                                                  : std::to_string(r.mismatches.size()) + " frame pairs differ");
        for (const auto& m : r.mismatches)
            rn.data.emplace_back("N(" + e(m.a) + ", " + e(m.b) + ")",
                                 vector_string(m.computed) + ", expected " + vector_string(m.expected));
    });
    return report;
}

RunReport run_recover(const AlgebraFile& file, const Chart& chart_in, const Assignment& values)
{
    RunReport report = run_estructure(file, values);
    report.command = "recover";
    for (const auto& r : report.records)
        if (r.check == "jacobi" && !r.passed)
            return report;
    LieAlgebra g = checked_algebra(file, values);
    EStructure es(g, frame_of(file));
    const auto& f = es.frame();
    auto vars = exponential_coordinates(4);

    Chart chart = chart_in;
    {
        auto sorted = chart.source;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != vars)
            throw InputError("chart inverse must define exactly x1, x2, x3, x4");
        auto t = chart.target;
        std::sort(t.begin(), t.end());
        if (t != std::vector<std::string>{"p1", "p2", "q1", "q2"})
            throw InputError("chart must define exactly p1, p2, q1, q2");
        std::vector<Poly> inv(4);
        for (std::size_t i = 0; i < 4; ++i)
            inv[std::stoi(chart.source[i].substr(1)) - 1] = chart.inverse[i];
        chart.source = vars;
        chart.inverse = inv;
    }

    try {
        std::vector<VectorField> frame;
        std::vector<PolyForm> coframe;
        timed(report, [&] {
            try {
                frame = left_invariant_frame(g);
            } catch (const std::invalid_argument& ex) {
                throw InputError(std::string("recover: ") + ex.what());
            }
            auto& rf = report.add("frame_fields", true, "left-invariant fields in exponential coordinates");
            for (int i = 0; i < 4; ++i)
                rf.data.emplace_back(kFrameNames[i], frame[f[i]].to_string(vars));
            coframe = dual_coframe(vars, frame);
            auto& rc = report.add("coframe", true, "dual 1-forms");
            for (int i = 0; i < 4; ++i)
                rc.data.emplace_back(std::string(kFrameNames[i]) + "*", coframe[f[i]].to_string());
            auto mc = maurer_cartan_constants(frame, coframe);
            report.add("maurer_cartan", mc && *mc == g.constants(),
                       mc && *mc == g.constants() ? "d of the coframe reproduces the structure constants"
                                                  : "coframe does not satisfy the structure equations");
        });
        if (!ce_differential(g, es.omega()).is_zero()) {
            report.add("coordinate_forms", false, "omega is not closed; the frame admits no chart");
            return report;
        }
        CoordinateForms forms{PolyForm(vars, KForm(4, 2)), PolyForm(vars, KForm(4, 2))};
        timed(report, [&] {
            forms = coordinate_forms(es, coframe);
            auto& r = report.add("coordinate_forms", true, "d omega = 0 in exponential coordinates");
            r.data.emplace_back("omega", forms.omega.to_string());
            r.data.emplace_back("theta", forms.theta.to_string());
        });
        std::vector<PolyForm> pq;
        timed(report, [&] {
            pq = apply_chart({forms.omega, forms.theta}, chart);
            auto& r = report.add("chart", true, "both compositions are the identity; closedness preserved");
            r.data.emplace_back("omega", pq[0].to_string());
            r.data.emplace_back("theta", pq[1].to_string());
        });
        KForm canonical(4, 2);
        auto idx = [&](const char* v) {
            return static_cast<int>(std::find(chart.target.begin(), chart.target.end(), v) - chart.target.begin());
        };
        canonical = wedge(KForm::basis(4, {idx("p1")}), KForm::basis(4, {idx("q1")})) +
                    wedge(KForm::basis(4, {idx("p2")}), KForm::basis(4, {idx("q2")}));
        bool canon = pq[0].form == canonical;
        report.add("canonical_omega", canon, canon ? "omega = dp1^dq1 + dp2^dq2" : "omega is not canonical in this chart");
        if (!canon)
            return report;
        timed(report, [&] {
            JetPolynomial pde = emit_pde(pq[1]);
            auto& r = report.add("pde", true, pde.to_string());
            std::string terms;
            for (const auto& [m, c] : pde.ordered_terms())
                terms += (terms.empty() ? "" : ", ") + scalar_to_string(c) + (m.is_one() ? "" : " " + m.to_string());
            r.data.emplace_back("terms", terms);
            if (auto ma = monge_ampere_coefficients(pde)) {
                r.data.emplace_back("A (hessian)", ma->a.to_string());
                r.data.emplace_back("B (u11)", ma->b.to_string());
                r.data.emplace_back("C (u12)", ma->c.to_string());
                r.data.emplace_back("D (u22)", ma->d.to_string());
                r.data.emplace_back("E", ma->e.to_string());
            }
        });
    } catch (const ChartError& ex) {
        throw InputError(ex.what());
    } catch (const std::invalid_argument& ex) {
        report.add("pipeline", false, ex.what());
    }
    return report;
}

// ---------------------------------------------------------------------------

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact invariant structures on Lie algebras"};
    app.require_subcommand(1);
    bool json = false, timing = false;
    int dim_cap = 8;
    app.add_flag("--json", json, "Emit the report as JSON");
    app.add_flag("--timing", timing, "Include per-check timings");
    app.add_option("--dim-cap", dim_cap, "Largest accepted dimension")->check(CLI::Range(1, 31));

    std::string file, chart_file, corpus_dir, variant = "contact";
    std::vector<std::string> sets;
    unsigned jobs = 0;
    SuspendOptions sopt;
    std::string alpha, omega, derivation;

    auto* check = app.add_subcommand("check", "Jacobi, invariants and structure verdicts of one algebra");
    check->add_option("file", file, "Algebra file (.alg)")->required();
    check->add_option("--set", sets, "Parameter value name=p/q");

    auto* corpus = app.add_subcommand("corpus", "Verify the bundled classification corpus");
    corpus->add_option("--corpus-dir", corpus_dir, "Read *.alg entries from this directory instead");
    corpus->add_option("--jobs", jobs, "Worker threads (default: hardware concurrency)");

    auto* suspend = app.add_subcommand("suspend", "Contactize or symplectize by one-dimensional suspension");
    suspend->add_option("file", file, "Algebra file (.alg)")->required();
    suspend->add_option("--variant", variant, "contact | symplectic | 2form")
        ->check(CLI::IsMember({"contact", "symplectic", "2form"}));
    suspend->add_option("--alpha", alpha, "Potential or contact 1-form, e.g. \"-e1*\"");
    suspend->add_option("--omega", omega, "Closed 2-form of maximal rank (2form variant)");
    suspend->add_option("--derivation", derivation, "Derivation matrix, rows separated by ';'");
    suspend->add_option("--set", sets, "Parameter value name=p/q");

    auto* recover = app.add_subcommand("recover", "Recover the Monge-Ampere equation of an {e}-structure");
    recover->add_option("file", file, "Algebra file (.alg) with optional labels line")->required();
    recover->add_option("--chart", chart_file, "Chart file (.map)")->required();
    recover->add_option("--set", sets, "Parameter value name=p/q");

    auto* estructure = app.add_subcommand("estructure", "Verify the {e}-structure relations of a frame");
    estructure->add_option("file", file, "Algebra file (.alg) with optional labels line")->required();
    estructure->add_option("--set", sets, "Parameter value name=p/q");

    auto* print = app.add_subcommand("print", "Print an algebra file in canonical form");
    print->add_option("file", file, "Algebra file (.alg)")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    RunReport report;
    try {
        set_dimension_cap(dim_cap);
        Assignment values = parse_assignments(sets);
        auto load = [&](const std::string& path) { return parse_algebra(read_file(path), path); };
        if (*print) {
            out << print_algebra(load(file));
            return 0;
        }
        if (*check) {
            report.command = "check";
            report.input = file;
            report = run_check(load(file), values);
        } else if (*corpus) {
            report.command = "corpus";
            report = run_corpus(corpus_dir.empty() ? bundled_corpus() : read_corpus_dir(corpus_dir), jobs);
        } else if (*suspend) {
            report.command = "suspend";
            report.input = file;
            if (!alpha.empty())
                sopt.alpha = alpha;
            if (!omega.empty())
                sopt.omega = omega;
            if (!derivation.empty())
                sopt.derivation = derivation;
            sopt.variant = variant == "contact"      ? SuspendVariant::contact
                           : variant == "symplectic" ? SuspendVariant::symplectic
                                                     : SuspendVariant::two_form;
            report = run_suspend(load(file), sopt, values);
        } else if (*recover) {
            report.command = "recover";
            report.input = file;
            Chart chart = parse_chart(read_file(chart_file), chart_file);
            report = run_recover(load(file), chart, values);
        } else if (*estructure) {
            report.command = "estructure";
            report.input = file;
            report = run_estructure(load(file), values);
        }
        if (!report.input.empty() && !file.empty() && !*corpus)
            report.input = file;
    } catch (const ParseError& ex) {
        report.error = ex.what();
    } catch (const InputError& ex) {
        report.error = ex.what();
    } catch (const UnsubstitutedParameters& ex) {
        report.error = ex.what();
    } catch (const DimensionError& ex) {
        report.error = ex.what();
    } catch (const ChartError& ex) {
        report.error = ex.what();
    } catch (const std::invalid_argument& ex) {
        report.error = ex.what();
    } catch (const std::runtime_error& ex) {
        report.error = ex.what();
    }
    if (report.error)
        err << "error: " << *report.error << "\n";
    out << (json ? report.to_json(timing) : report.to_text(timing));
    return report.exit_code();
}

}  // namespace liesym
