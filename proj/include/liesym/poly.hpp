#pragma once

#include <gmpxx.h>

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace liesym {

/// Exact rational coefficient. GMP keeps every value in lowest terms with a
/// positive denominator.
using Scalar = mpq_class;

/// Power product of named indeterminates. Factors are sorted by name and
/// carry strictly positive exponents; the empty monomial is 1.
class Monomial {
public:
    Monomial() = default;
    explicit Monomial(std::string var, unsigned exponent = 1);

    const std::vector<std::pair<std::string, unsigned>>& factors() const { return factors_; }
    unsigned degree() const;
    unsigned exponent(std::string_view var) const;
    bool is_one() const { return factors_.empty(); }

    /// Lowers the exponent of `var` by one (no-op when absent).
    Monomial without(std::string_view var) const;

    Monomial operator*(const Monomial& other) const;
    auto operator<=>(const Monomial&) const = default;
    bool operator==(const Monomial&) const = default;

    std::string to_string() const;

private:
    std::vector<std::pair<std::string, unsigned>> factors_;
};

/// Sparse multivariate polynomial over the rationals. Zero coefficients are
/// never stored, so structural equality is polynomial equality.
class Poly {
public:
    Poly() = default;
    Poly(const Scalar& c);  // NOLINT: implicit lift of constants is intended
    Poly(int c) : Poly(Scalar(c)) {}  // NOLINT

    static Poly variable(std::string name);
    static Poly term(const Scalar& c, Monomial m);

    const std::map<Monomial, Scalar>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Constant value; throws std::domain_error when the polynomial has variables.
    Scalar constant_value() const;
    /// Coefficient of the monomial 1.
    Scalar constant_term() const;
    Scalar coefficient(const Monomial& m) const;

    unsigned total_degree() const;
    unsigned degree_in(std::string_view var) const;
    std::set<std::string> variables() const;

    Poly& operator+=(const Poly& other);
    Poly& operator-=(const Poly& other);
    Poly& operator*=(const Poly& other);
    Poly& operator*=(const Scalar& c);
    Poly& operator/=(const Scalar& c);
    /// Adds c*m in place.
    void add_term(const Scalar& c, const Monomial& m);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Scalar& c) { return a *= c; }
    friend Poly operator*(const Scalar& c, Poly a) { return a *= c; }
    friend Poly operator/(Poly a, const Scalar& c) { return a /= c; }
    Poly operator-() const;

    bool operator==(const Poly&) const = default;

    Poly pow(unsigned e) const;
    Poly derivative(std::string_view var) const;

    /// Replaces each listed variable by a polynomial; unlisted variables stay.
    Poly substitute(const std::map<std::string, Poly>& values) const;
    Poly substitute(const std::map<std::string, Scalar>& values) const;
    /// Evaluates with every variable bound; throws std::out_of_range otherwise.
    Scalar evaluate(const std::map<std::string, Scalar>& values) const;

    /// Human/parseable rendering, e.g. "1 - l" or "1/2 x3 x4". Terms appear in
    /// increasing total degree, then by monomial order.
    std::string to_string() const;

private:
    std::map<Monomial, Scalar> terms_;
};

std::string scalar_to_string(const Scalar& s);

/// Formats sum_i coeff_i * symbol_i, e.g. "e1 - 1/2 e2 + (1 - l) e3".
/// Zero coefficients are skipped; an empty sum renders as "0".
std::string format_combination(const std::vector<std::pair<Poly, std::string>>& terms);

}  // namespace liesym
