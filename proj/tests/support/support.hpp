#pragma once

#include "liesym/cli.hpp"
#include "liesym/suspension.hpp"

#include <random>
#include <string>
#include <utility>
#include <vector>

namespace liesym::testing {

using Rng = std::mt19937_64;

Scalar random_scalar(Rng& rng, int bound = 3, bool allow_fractions = true);
Vector random_vector(Rng& rng, int n, int bound = 3);
/// Sparse random k-form with rational coefficients.
KForm random_form(Rng& rng, int dim, int degree, double density = 0.6);
/// Product of random integer elementary matrices (det +-1) and a sign diagonal.
Matrix random_basis_change(Rng& rng, int n);

LieAlgebra algebra_from_text(const std::string& text, const Assignment& values = {});
LieAlgebra brackets(int dim, const std::vector<std::tuple<int, int, std::vector<std::pair<int, Scalar>>>>& rules);

/// Every 3-dimensional corpus representative at every documented sample.
std::vector<std::pair<std::string, LieAlgebra>> bianchi_samples();
/// Every 4-dimensional corpus family at its samples (Jacobi-valid ones only if asked).
std::vector<std::pair<std::string, LieAlgebra>> corpus_samples(bool jacobi_valid_only);

/// Strictly upper triangular derivations of h (brackets lowering the index).
std::vector<Matrix> triangular_derivations(const LieAlgebra& h);
/// Nilpotent algebra of the given dimension from iterated suspensions by
/// random strictly triangular derivations, followed by a random basis change.
LieAlgebra random_nilpotent(Rng& rng, int dim, int max_class = 8, bool change = true);
/// Bianchi representative suspended by a random derivation, then a basis change.
LieAlgebra random_dim4(Rng& rng);

// Independent oracles

/// Sign of the permutation sorting `seq` (0 if an entry repeats), by bubble sort.
int permutation_sign(std::vector<int> seq);
/// Wedge product by expanding every pair of terms with permutation_sign.
KForm wedge_oracle(const KForm& a, const KForm& b);
/// Determinant by the Leibniz permutation sum.
Scalar determinant_oracle(const Matrix& m);
/// Pfaffian by expansion along the first row.
Scalar pfaffian_oracle(const Matrix& antisymmetric);
/// d phi evaluated on basis tuples with the Koszul formula over brackets.
KForm ce_oracle(const LieAlgebra& g, const KForm& phi);
/// Der(h) dimension from the Leibniz conditions built entry by entry.
int derivation_dim_oracle(const LieAlgebra& h);
/// Jacobi by triple brackets computed from ad matrices.
bool jacobi_oracle(const LieAlgebra& g);

Matrix numeric_matrix(const std::vector<std::vector<Poly>>& m);

}  // namespace liesym::testing
