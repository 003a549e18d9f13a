#pragma once

#include "liesym/poly.hpp"

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace liesym {

/// Strictly increasing index tuple (0-based) stored as a bit set.
using IndexSet = std::uint32_t;

inline constexpr int kHardDimensionLimit = 31;

/// Largest dimension accepted by KForm; defaults to 8. Settable once at
/// startup (e.g. by the CLI); values above kHardDimensionLimit are rejected.
int dimension_cap();
void set_dimension_cap(int cap);

class DimensionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<int> indices_of(IndexSet s);
IndexSet index_set(std::span<const int> indices);
int popcount(IndexSet s);

/// Koszul sign of e_a ^ e_b relative to e_{a|b}; 0 when a and b overlap.
int wedge_sign(IndexSet a, IndexSet b);

/// Constant-coefficient exterior form on the dual of an n-dimensional space,
/// with polynomial coefficients (parameters or chart coordinates).
class KForm {
public:
    KForm(int dim, int degree);

    /// +/- e_{i1}* ^ ... ^ e_{ik}* for 0-based indices in any order.
    static KForm basis(int dim, std::initializer_list<int> indices);
    static KForm basis(int dim, std::span<const int> indices);
    static KForm covector(int dim, std::span<const Poly> coeffs);
    static KForm covector(int dim, std::span<const Scalar> coeffs);
    static KForm constant(int dim, const Poly& value);
    /// e_1* ^ ... ^ e_n*.
    static KForm volume(int dim);

    int dim() const { return dim_; }
    int degree() const { return degree_; }
    const std::map<IndexSet, Poly>& terms() const { return terms_; }
    Poly coefficient(IndexSet idx) const;
    /// Coefficient of the volume element; requires degree == dim.
    Poly top_coefficient() const;

    void add_term(IndexSet idx, const Poly& c);
    bool is_zero() const { return terms_.empty(); }
    bool is_numeric() const;

    KForm& operator+=(const KForm& other);
    KForm& operator-=(const KForm& other);
    KForm& operator*=(const Poly& c);
    friend KForm operator+(KForm a, const KForm& b) { return a += b; }
    friend KForm operator-(KForm a, const KForm& b) { return a -= b; }
    friend KForm operator*(KForm a, const Poly& c) { return a *= c; }
    friend KForm operator*(const Poly& c, KForm a) { return a *= c; }
    KForm operator-() const;
    bool operator==(const KForm&) const = default;

    KForm substitute(const std::map<std::string, Scalar>& values) const;
    KForm substitute(const std::map<std::string, Poly>& values) const;

    /// Renders with one symbol per basis covector, e.g. {"e1*", ...} gives
    /// "e1*^e3* - 1/2 e2*^e4*". Terms are listed in lexicographic tuple order.
    std::string to_string(const std::vector<std::string>& symbols) const;
    /// Uses the default symbols e1*, e2*, ...
    std::string to_string() const;

private:
    int dim_;
    int degree_;
    std::map<IndexSet, Poly> terms_;
};

KForm wedge(const KForm& a, const KForm& b);
/// a ^ a ^ ... (m factors); m = 0 gives the constant 1.
KForm wedge_power(const KForm& a, int m);

/// Contraction i_v with a vector of polynomial components.
KForm interior(std::span<const Poly> v, const KForm& form);
KForm interior(std::span<const Scalar> v, const KForm& form);

/// Pf(omega) defined by omega^m = m! Pf(omega) vol for n = 2m. The volume
/// form must be of top degree with a nonzero constant coefficient.
Poly pfaffian(const KForm& omega, const KForm& volume);

/// Antisymmetric coefficient matrix M(omega)_{ij} = omega(e_i, e_j) of a
/// numeric 2-form.
std::vector<std::vector<Poly>> coefficient_matrix(const KForm& two_form);

/// Evaluates a k-form on k vectors (determinant convention, e1*^e2*(e1,e2) = 1).
Poly evaluate(const KForm& form, const std::vector<std::vector<Poly>>& vectors);

/// Symbols e1, e2, ... or e1*, e2*, ...
std::vector<std::string> default_symbols(int dim, bool dual);

}  // namespace liesym
