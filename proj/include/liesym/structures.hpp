#pragma once

#include "liesym/lie_algebra.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace liesym {

enum class StructureKind { contact, symplectic, exact_symplectic };

std::string to_string(StructureKind kind);

/// A verified invariant structure: the form, the potential when exact, and
/// the nonzero top-degree value that certifies nondegeneracy.
struct StructureWitness {
    StructureKind kind;
    KForm form;
    std::optional<Vector> potential;
    Scalar certificate;
};

/// First integer point of [-D, D]^k (lexicographic, D = total degree + 1)
/// where the polynomial does not vanish. Variables are taken in the given order.
std::optional<Vector> grid_search_nonzero(const Poly& p, const std::vector<std::string>& vars);

/// Highest degree of a nonzero form in alpha, d alpha, alpha ^ d alpha, (d alpha)^2, ...
int genre(const LieAlgebra& g, const KForm& alpha);

struct ContactResult {
    bool contact = false;
    /// Top coefficient of alpha ^ (d alpha)^m for alpha = sum a_i e_i*.
    Poly certificate_polynomial;
    std::vector<std::string> variables;
    std::optional<StructureWitness> witness;
};
ContactResult is_contact(const LieAlgebra& g);

/// Sign of (alpha ^ (d alpha)^m) / orientation; throws when alpha is not contact.
int contact_sign(const LieAlgebra& g, const KForm& alpha, const KForm& orientation);

/// Rational basis of Z^2 = ker(d : C^2 -> C^3).
std::vector<KForm> closed_two_forms(const LieAlgebra& g);

struct SymplecticResult {
    bool exists = false;
    /// Pf of the generic element, as a polynomial in `variables` (coordinates
    /// on Z^2 for has_symplectic, on g* for has_exact_symplectic).
    Poly pfaffian_polynomial;
    std::vector<std::string> variables;
    std::optional<StructureWitness> witness;
};
SymplecticResult has_symplectic(const LieAlgebra& g);
SymplecticResult has_exact_symplectic(const LieAlgebra& g);

/// True iff omega lies in d(C^1). Throws std::invalid_argument if omega is not closed.
bool is_exact(const LieAlgebra& g, const KForm& omega);

// ---------------------------------------------------------------------------
// Classification corpus

struct ParameterDecl {
    std::string name;
    std::vector<Scalar> excluded;
};

/// What an entry's source asserts about the algebra. Absent fields are not checked.
struct CorpusClaims {
    std::optional<int> derived_dim;
    std::optional<KForm> omega;
    std::optional<bool> omega_exact;
    std::optional<bool> exact_symplectic;
    std::optional<bool> symplectic;
    std::optional<bool> contact;
    std::optional<bool> unimodular;
    std::map<int, int> cohomology;
};

using Assignment = std::map<std::string, Scalar>;

struct CorpusEntry {
    std::string id;
    LieAlgebra algebra;  // may be parametric; Jacobi deliberately not enforced
    std::vector<ParameterDecl> params;
    CorpusClaims claims;
    std::vector<Assignment> samples;
    std::string source;
};

class ParameterExclusion : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct CheckRecord {
    std::string check;
    bool passed = true;
    std::string detail;
};

struct EntryReport {
    std::string id;
    Assignment assignment;
    bool passed = true;
    std::vector<CheckRecord> checks;
    /// Potential f with df symplectic, when the entry claims exactness.
    std::optional<Vector> exact_potential;
    /// The numeric algebra the checks ran on (absent if substitution failed).
    std::optional<LieAlgebra> algebra;
};

/// Runs, in order: Jacobi (symbolic and at the sample), derived dimension,
/// closedness and nondegeneracy of the claimed omega, symplectic and exactness
/// claims, cohomology claims, contact and unimodularity claims. Stops after a
/// Jacobi failure. Throws ParameterExclusion for forbidden or missing values.
EntryReport verify_corpus_entry(const CorpusEntry& entry, const Assignment& params);

std::string format_assignment(const Assignment& a);

}  // namespace liesym
