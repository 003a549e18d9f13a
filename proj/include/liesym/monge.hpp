#pragma once

#include "liesym/lie_algebra.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace liesym {

/// Nijenhuis tensor on basis pairs: tensor[a][b] = N_j(e_a, e_b).
using VectorTensor = std::vector<std::vector<Vector>>;

/// An {e}-structure on a 4-dimensional algebra. frame[0..3] are the basis
/// indices (0-based) of P1, P2, Q1, Q2.
class EStructure {
public:
    explicit EStructure(LieAlgebra g, std::array<int, 4> frame = {0, 1, 2, 3});

    const LieAlgebra& algebra() const { return g_; }
    const std::array<int, 4>& frame() const { return frame_; }

    /// P1* ^ Q1* + P2* ^ Q2*
    KForm omega() const;
    /// P1* ^ Q2* - P2* ^ Q1*
    KForm theta() const;
    /// P1 -> P2, P2 -> -P1, Q1 -> -Q2, Q2 -> Q1.
    Matrix j() const;
    /// N(P1,Q1) = -P2, N(P1,Q2) = P1, N(P2,Q1) = -P1, N(P2,Q2) = -P2, the rest zero.
    VectorTensor canonical_nijenhuis() const;

private:
    LieAlgebra g_;
    std::array<int, 4> frame_;
};

/// The endomorphism with omega(jX, Y) = theta(X, Y). Column j is j(e_j).
/// Requires dim 4, omega nondegenerate, theta ^ omega = 0 and <theta, theta> = 1.
Matrix j_from_theta(const KForm& omega, const KForm& theta);

VectorTensor nijenhuis(const LieAlgebra& g, const Matrix& j);

/// <a, b> = (a ^ b) / (omega ^ omega) in dimension 4.
Scalar pfaffian_pairing(const KForm& a, const KForm& b, const KForm& omega);

struct PairingSignature {
    Matrix gram;             // on the lexicographic basis of 2-forms
    Inertia full;            // on all 2-forms
    Inertia complement;      // on the 2-forms orthogonal to omega
};
PairingSignature pairing_signature(const KForm& omega);

struct RelationCheck {
    std::string name;   // e.g. "c1_12 - c3_23 + c4_13"
    Scalar value;
    Scalar domega;      // d omega on the matching frame triple
};

struct EStructureReport {
    bool closed = true;                  // all four relations vanish
    bool nijenhuis_matches = true;
    std::vector<RelationCheck> relations;
    /// (a, b, computed, expected) for frame pairs where N_j differs.
    struct Mismatch { int a, b; Vector computed, expected; };
    std::vector<Mismatch> mismatches;
    bool passed() const { return closed && nijenhuis_matches; }
};

/// Closedness relations on the structure constants (cross-checked against
/// d omega) and comparison of N_j with the canonical tensor.
EStructureReport verify_e_structure(const EStructure& es);

// ---------------------------------------------------------------------------
// Coordinate layer

/// A differential form on a chart with polynomial coefficients in `vars`.
struct PolyForm {
    std::vector<std::string> vars;
    KForm form;

    PolyForm(std::vector<std::string> vars, KForm form);
    static PolyForm differential(const std::vector<std::string>& vars, const Poly& f);

    /// Uses "d<var>" symbols, e.g. "dx1^dx3 + 1/2 x3 dx2^dx3".
    std::string to_string() const;
    bool operator==(const PolyForm&) const = default;
};

/// Coordinate exterior derivative.
PolyForm exterior_derivative(const PolyForm& f);
PolyForm wedge(const PolyForm& a, const PolyForm& b);

/// A vector field sum_i components[i] d/d vars[i].
struct VectorField {
    std::vector<Poly> components;
    std::string to_string(const std::vector<std::string>& vars) const;
};

/// Coordinates x1..xn of the exponential chart.
std::vector<std::string> exponential_coordinates(int n);

/// Coefficients of z / (1 - e^{-z}) up to z^order.
std::vector<Scalar> left_translation_series(int order);

/// Left-invariant fields of the basis e_1..e_n in exponential coordinates,
/// from the series above truncated at the nilpotency class.
/// Throws std::invalid_argument for non-nilpotent g or class above `class_cap`.
std::vector<VectorField> left_invariant_frame(const LieAlgebra& g, int class_cap = 8);

/// Dual 1-forms of a unipotent polynomial frame.
std::vector<PolyForm> dual_coframe(const std::vector<std::string>& vars, const std::vector<VectorField>& frame);

/// c^k_ij read back from d theta^k = -sum c^k_ij theta^i ^ theta^j; nullopt
/// if some coefficient is not constant.
std::optional<StructureConstants> maurer_cartan_constants(const std::vector<VectorField>& frame,
                                                          const std::vector<PolyForm>& coframe);

struct CoordinateForms {
    PolyForm omega;
    PolyForm theta;
};
/// omega and theta of the canonical frame in the coframe; throws if d omega != 0.
CoordinateForms coordinate_forms(const EStructure& es, const std::vector<PolyForm>& coframe);

/// A polynomial change of coordinates y = forward(x) with inverse x = inverse(y).
struct Chart {
    std::vector<std::string> source;  // x variables
    std::vector<std::string> target;  // y variables
    std::vector<Poly> forward;        // y_i in terms of x
    std::vector<Poly> inverse;        // x_i in terms of y
};

class ChartError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Checks both compositions are the identity; throws ChartError otherwise.
void verify_chart(const Chart& chart);

/// Pullback along x = phi(y).
PolyForm pullback(const PolyForm& form, const std::vector<std::string>& new_vars, const std::vector<Poly>& phi);

/// Expresses forms in the chart's target coordinates. Verifies the chart and
/// that closed forms stay closed.
std::vector<PolyForm> apply_chart(const std::vector<PolyForm>& forms, const Chart& chart);

struct JetPolynomial {
    Poly poly;  // in q1, q2, u1, u2, u11, u12, u22
    /// Terms, leading first, under u11 > u12 > u22 > u1 > u2 > q1 > q2.
    std::vector<std::pair<Monomial, Scalar>> ordered_terms() const;
    std::string to_string() const;  // "u11 + u22 - u2 = 0"
};

/// A (u11 u22 - u12^2) + B u11 + C u12 + D u22 + E.
struct MongeAmpereCoefficients {
    Poly a, b, c, d, e;
};
std::optional<MongeAmpereCoefficients> monge_ampere_coefficients(const JetPolynomial& p);

/// Substitutes p_i = u_i(q) into theta (variables p1, p2, q1, q2) and returns
/// the normalized dq1 ^ dq2 coefficient.
JetPolynomial emit_pde(const PolyForm& theta);

}  // namespace liesym
