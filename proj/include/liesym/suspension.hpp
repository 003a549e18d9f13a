#pragma once

#include "liesym/lie_algebra.hpp"

#include <optional>
#include <string>
#include <vector>

namespace liesym {

class LeibnizViolation : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checks A[x,y] = [Ax,y] + [x,Ay] on all basis pairs. Column j of A is A e_j.
bool satisfies_leibniz(const LieAlgebra& h, const Matrix& a);

/// A linear endomorphism of h verified to satisfy the Leibniz rule.
class Derivation {
public:
    /// Throws LeibnizViolation if `a` is not a derivation of `h`.
    Derivation(const LieAlgebra& h, Matrix a);
    static Derivation inner(const LieAlgebra& h, const Vector& w);

    const Matrix& matrix() const { return a_; }
    Vector apply(const Vector& x) const { return a_ * x; }

private:
    Matrix a_;
};

struct DerivationSpace {
    std::vector<Matrix> derivations;  // basis of Der(h)
    std::vector<Matrix> inner;        // basis of {ad_w}
    std::vector<Matrix> outer;        // representatives of a basis of H^1(h, h)
    int h1_dim = 0;
};

/// Der(h) as the rational kernel of the Leibniz system.
DerivationSpace derivation_space(const LieAlgebra& h);

/// g = h + R v with [v, x] = A x; v is the last basis vector.
LieAlgebra suspend(const LieAlgebra& h, const Derivation& a);

/// pi^* of a form on h into the suspension (zero on v).
KForm lift_form(const KForm& form);

/// (A . omega)(x, y) = -omega(Ax, y) - omega(x, Ay).
KForm derivation_action(const Matrix& a, const KForm& omega);

struct SuspensionResult {
    bool exists = false;
    std::optional<LieAlgebra> algebra;
    std::optional<Matrix> derivation;
    /// alpha_+ for contactizations, omega on the suspension for symplectizations.
    std::optional<KForm> form;
    Vector w;                 // kernel direction used in the criterion Aw not in Pi
    std::optional<Subspace> pi;
    Scalar criterion = 0;     // alpha(A w); nonzero exactly when the suspension is nondegenerate
    Scalar certificate = 0;   // top-degree value on the suspension
    std::string detail;
};

/// Contactization of (h, d alpha) with h of even dimension. When `a` is
/// absent the derivation ad_u, u transversal to Pi = Ker alpha, is used.
SuspensionResult contactize(const LieAlgebra& h, const KForm& alpha, const std::optional<Derivation>& a = std::nullopt);

/// Symplectization of a contact (h, alpha), h of odd dimension. When `a` is
/// absent, H^1(h,h) representatives and their small integer combinations are searched.
SuspensionResult symplectize_contact(const LieAlgebra& h, const KForm& alpha,
                                     const std::optional<Derivation>& a = std::nullopt);

/// Symplectization from a closed 2-form of maximal rank on odd-dimensional h:
/// solves A.omega = d alpha jointly over Der(h) x h* and requires alpha(w) != 0.
/// The result form is omega + v* ^ alpha on the suspension.
SuspensionResult symplectize_2form(const LieAlgebra& h, const KForm& omega);

}  // namespace liesym
