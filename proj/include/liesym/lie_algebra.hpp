#pragma once

#include "liesym/kform.hpp"
#include "liesym/linalg.hpp"

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace liesym {

using PolyVector = std::vector<Poly>;

/// Raised when an operation needs numeric structure constants but the
/// algebra still carries free parameters.
class UnsubstitutedParameters : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

class JacobiViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Table of structure constants c^k_{ij} ([e_i, e_j] = c^k_{ij} e_k), kept
/// antisymmetric in (i, j). Indices are 0-based.
class StructureConstants {
public:
    explicit StructureConstants(int dim);

    int dim() const { return dim_; }
    const Poly& get(int i, int j, int k) const { return c_[offset(i, j, k)]; }
    /// Sets c^k_{ij} and c^k_{ji} = -c^k_{ij}; i == j is rejected unless value is 0.
    void set(int i, int j, int k, const Poly& value);
    void add(int i, int j, int k, const Poly& value);
    bool operator==(const StructureConstants&) const = default;

private:
    std::size_t offset(int i, int j, int k) const;
    int dim_;
    std::vector<Poly> c_;
};

enum class Validation { enforce_jacobi, defer };

class LieAlgebra {
public:
    /// Throws JacobiViolation unless `validation` is Validation::defer.
    LieAlgebra(StructureConstants constants, std::vector<std::string> params = {},
               Validation validation = Validation::enforce_jacobi);

    static LieAlgebra abelian(int dim);

    int dim() const { return constants_.dim(); }
    const Poly& c(int i, int j, int k) const { return constants_.get(i, j, k); }
    const StructureConstants& constants() const { return constants_; }
    const std::vector<std::string>& params() const { return params_; }

    /// True when every structure constant is a rational number.
    bool is_numeric() const;
    void require_numeric(const char* operation) const;

    LieAlgebra substitute(const std::map<std::string, Scalar>& values,
                          Validation validation = Validation::enforce_jacobi) const;

    /// ad_{e_i} as a numeric matrix: column j holds [e_i, e_j].
    Matrix ad(int i) const;
    Matrix ad(const Vector& x) const;

    bool operator==(const LieAlgebra& o) const { return constants_ == o.constants_; }

private:
    StructureConstants constants_;
    std::vector<std::string> params_;
};

PolyVector bracket(const LieAlgebra& g, const PolyVector& x, const PolyVector& y);
Vector bracket(const LieAlgebra& g, const Vector& x, const Vector& y);

/// d e_k* = -sum_{i<j} c^k_{ij} e_i* ^ e_j*.
KForm basis_differential(const LieAlgebra& g, int k);
/// Chevalley-Eilenberg differential, extended from covectors as an antiderivation.
KForm ce_differential(const LieAlgebra& g, const KForm& form);

/// [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j] by direct bracketing.
PolyVector jacobiator(const LieAlgebra& g, int i, int j, int k);

struct JacobiReport {
    bool passed = true;
    /// First offending (i, j, k), 0-based, and the Jacobiator there.
    std::optional<std::array<int, 3>> witness;
    PolyVector residual;
};

/// Passes iff d^2 e_k* = 0 for all k, symbolically in the parameters.
JacobiReport jacobi_check(const LieAlgebra& g);
/// Same verdict computed from brackets only; used to cross-check jacobi_check.
JacobiReport jacobi_check_by_brackets(const LieAlgebra& g);

/// Matrix of d : C^k -> C^{k+1} in the lexicographic bases of increasing
/// index tuples (see exterior_basis). Requires numeric constants.
Matrix differential_matrix(const LieAlgebra& g, int k);
/// Increasing index tuples of size k in lexicographic order.
std::vector<IndexSet> exterior_basis(int dim, int k);

int cohomology_dim(const LieAlgebra& g, int k);

struct UnimodularReport {
    bool passed = true;
    /// trace(ad_{e_i}) for each basis vector.
    PolyVector traces;
};
UnimodularReport is_unimodular(const LieAlgebra& g);

struct KillingForm {
    Matrix matrix;
    Inertia signature;
};
KillingForm killing_form(const LieAlgebra& g);

int coadjoint_tangent_dim(const LieAlgebra& g, const Vector& covector);

int derived_dim(const LieAlgebra& g);
bool is_perfect(const LieAlgebra& g);
Subspace derived_algebra(const LieAlgebra& g);

/// Length of the lower central series, or nullopt when it stabilizes above 0.
/// Abelian algebras have class 1; the zero algebra has class 0.
std::optional<int> nilpotency_class(const LieAlgebra& g);

/// Structure constants in the basis f_j = sum_i P(i, j) e_i. P must be invertible.
LieAlgebra change_basis(const LieAlgebra& g, const Matrix& p);

/// Direct sum g + h with h's basis placed after g's.
LieAlgebra direct_sum(const LieAlgebra& g, const LieAlgebra& h);

}  // namespace liesym
