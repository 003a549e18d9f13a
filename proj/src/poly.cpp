#include "liesym/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace liesym {

Monomial::Monomial(std::string var, unsigned exponent)
{
    if (exponent > 0)
        factors_.emplace_back(std::move(var), exponent);
}

unsigned Monomial::degree() const
{
    unsigned d = 0;
    for (const auto& f : factors_)
        d += f.second;
    return d;
}

unsigned Monomial::exponent(std::string_view var) const
{
    for (const auto& f : factors_)
        if (f.first == var)
            return f.second;
    return 0;
}

Monomial Monomial::without(std::string_view var) const
{
    Monomial r;
    for (const auto& f : factors_) {
        if (f.first != var)
            r.factors_.push_back(f);
        else if (f.second > 1)
            r.factors_.emplace_back(f.first, f.second - 1);
    }
    return r;
}

Monomial Monomial::operator*(const Monomial& other) const
{
    Monomial r;
    auto a = factors_.begin();
    auto b = other.factors_.begin();
    while (a != factors_.end() || b != other.factors_.end()) {
        if (b == other.factors_.end() || (a != factors_.end() && a->first < b->first)) {
            r.factors_.push_back(*a++);
        } else if (a == factors_.end() || b->first < a->first) {
            r.factors_.push_back(*b++);
        } else {
            r.factors_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    return r;
}

std::string Monomial::to_string() const
{
    std::string s;
    for (const auto& [var, e] : factors_) {
        if (!s.empty())
            s += ' ';
        s += var;
        if (e > 1)
            s += '^' + std::to_string(e);
    }
    return s.empty() ? "1" : s;
}

Poly::Poly(const Scalar& c)
{
    if (c != 0)
        terms_.emplace(Monomial{}, c);
}

Poly Poly::variable(std::string name)
{
    return term(1, Monomial(std::move(name)));
}

Poly Poly::term(const Scalar& c, Monomial m)
{
    Poly p;
    if (c != 0)
        p.terms_.emplace(std::move(m), c);
    return p;
}

bool Poly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Scalar Poly::constant_value() const
{
    if (!is_constant())
        throw std::domain_error("polynomial " + to_string() + " is not constant");
    return constant_term();
}

Scalar Poly::constant_term() const
{
    return coefficient(Monomial{});
}

Scalar Poly::coefficient(const Monomial& m) const
{
    auto it = terms_.find(m);
    return it == terms_.end() ? Scalar(0) : it->second;
}

unsigned Poly::total_degree() const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first.degree());
    return d;
}

unsigned Poly::degree_in(std::string_view var) const
{
    unsigned d = 0;
    for (const auto& t : terms_)
        d = std::max(d, t.first.exponent(var));
    return d;
}

std::set<std::string> Poly::variables() const
{
    std::set<std::string> vars;
    for (const auto& t : terms_)
        for (const auto& f : t.first.factors())
            vars.insert(f.first);
    return vars;
}

void Poly::add_term(const Scalar& c, const Monomial& m)
{
    if (c == 0)
        return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

Poly& Poly::operator+=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(c, m);
    return *this;
}

Poly& Poly::operator-=(const Poly& other)
{
    for (const auto& [m, c] : other.terms_)
        add_term(-c, m);
    return *this;
}

Poly operator*(const Poly& a, const Poly& b)
{
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_)
            r.add_term(ca * cb, ma * mb);
    return r;
}

Poly& Poly::operator*=(const Poly& other)
{
    *this = *this * other;
    return *this;
}

Poly& Poly::operator*=(const Scalar& c)
{
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= c;
    return *this;
}

Poly& Poly::operator/=(const Scalar& c)
{
    if (c == 0)
        throw std::domain_error("polynomial division by zero");
    for (auto& t : terms_)
        t.second /= c;
    return *this;
}

Poly Poly::operator-() const
{
    Poly r = *this;
    for (auto& t : r.terms_)
        t.second = -t.second;
    return r;
}

Poly Poly::pow(unsigned e) const
{
    Poly result(1);
    Poly base = *this;
    while (e) {
        if (e & 1u)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

Poly Poly::derivative(std::string_view var) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        unsigned e = m.exponent(var);
        if (e)
            r.add_term(c * e, m.without(var));
    }
    return r;
}

Poly Poly::substitute(const std::map<std::string, Poly>& values) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t(c);
        Monomial rest;
        for (const auto& [var, e] : m.factors()) {
            auto it = values.find(var);
            if (it == values.end())
                rest = rest * Monomial(var, e);
            else
                t *= it->second.pow(e);
        }
        r += t * Poly::term(1, rest);
    }
    return r;
}

Poly Poly::substitute(const std::map<std::string, Scalar>& values) const
{
    Poly r;
    for (const auto& [m, c] : terms_) {
        Scalar coeff = c;
        Monomial rest;
        for (const auto& [var, e] : m.factors()) {
            auto it = values.find(var);
            if (it == values.end()) {
                rest = rest * Monomial(var, e);
            } else {
                mpq_class p;
                mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
                mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
                coeff *= p;
            }
        }
        r.add_term(coeff, rest);
    }
    return r;
}

Scalar Poly::evaluate(const std::map<std::string, Scalar>& values) const
{
    Poly r = substitute(values);
    if (!r.is_constant())
        throw std::out_of_range("unbound variables in " + r.to_string());
    return r.constant_term();
}

namespace {

std::vector<std::pair<Monomial, Scalar>> display_order(const std::map<Monomial, Scalar>& terms)
{
    std::vector<std::pair<Monomial, Scalar>> v(terms.begin(), terms.end());
    std::stable_sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
        return a.first.degree() < b.first.degree();
    });
    return v;
}

}  // namespace

std::string scalar_to_string(const Scalar& s)
{
    return s.get_str();
}

std::string Poly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : display_order(terms_)) {
        Scalar mag = abs(c);
        if (first)
            out += c < 0 ? "-" : "";
        else
            out += c < 0 ? " - " : " + ";
        first = false;
        if (m.is_one())
            out += scalar_to_string(mag);
        else if (mag == 1)
            out += m.to_string();
        else
            out += scalar_to_string(mag) + " " + m.to_string();
    }
    return out;
}

std::string format_combination(const std::vector<std::pair<Poly, std::string>>& terms)
{
    std::string out;
    for (const auto& [coeff, symbol] : terms) {
        if (coeff.is_zero())
            continue;
        bool negative = false;
        std::string body;
        if (coeff.terms().size() == 1) {
            const auto& [m, c] = *coeff.terms().begin();
            negative = c < 0;
            Poly mag = negative ? -coeff : coeff;
            if (mag == Poly(1))
                body = symbol;
            else
                body = mag.to_string() + " " + symbol;
        } else {
            body = "(" + coeff.to_string() + ") " + symbol;
        }
        if (out.empty())
            out = negative ? "-" + body : body;
        else
            out += (negative ? " - " : " + ") + body;
    }
    return out.empty() ? "0" : out;
}

}  // namespace liesym
