#pragma once

#include <vector>

#include "qtoda/polynomial.hpp"
#include "qtoda/rational.hpp"
#include "qtoda/vartable.hpp"

namespace qtoda {

enum class Family { A, B };

const char* family_name(Family f);

// Root combinatorics for the two supported families, constructed on the dual
// side: family A is self dual, family B pairs with the symplectic C-family.
// All vectors are exact rationals in orthonormal epsilon coordinates (the
// normalization fixed so the lax module's matrix entries come out right).
struct RootSystem {
  Family family = Family::A;
  int rank = 0;
  std::vector<std::vector<Rat>> simple_roots;       // flag side
  std::vector<std::vector<Rat>> dual_simple_roots;  // dual side, same coordinates
  std::vector<std::vector<Rat>> gram;               // G_ij = (dual alpha_i, dual alpha_j)
  std::vector<Rat> c;                               // c_i = G_ii
  std::vector<int> degrees;                         // fundamental invariant degrees
  long weyl_order = 0;
  std::vector<Rat> rho;  // dual side half-sum of positive roots

  // Free diagonal variables x1..x_{rank+1} (A) or x1..x_rank (B), weight 1.
  // Classical q = 0 relations re-expressed over this table are the inputs to
  // weyl_action_q0.
  VarTableRef diagonal_table;
};

// Valid ranks: A needs rank >= 1, B needs rank >= 2; both are capped at 12.
// Invalid input raises std::invalid_argument naming the offending parameter.
RootSystem build_root_system(Family family, int rank);

// Product over i of (1 + t + ... + t^{d_i - 1}) in a one-variable table {t}.
// Evaluates to weyl_order at t = 1.
Polynomial poincare_polynomial_flag(const RootSystem& rs);

// Element of the reflection group acting on the diagonal variables: variable
// i maps to signs[i] * x_{perm[i]}. Family A allows only +1 signs.
struct SignedPermutation {
  std::vector<size_t> perm;
  std::vector<int> signs;
};

SignedPermutation adjacent_transposition(const RootSystem& rs, size_t i);
SignedPermutation sign_flip(const RootSystem& rs, size_t i);  // family B only

// Generating set: adjacent transpositions, plus every one-coordinate sign
// flip for family B. Invariance under these implies full invariance.
std::vector<SignedPermutation> weyl_generators(const RootSystem& rs);

// Applies the substitution x_i -> signs[i] * x_{perm[i]}. poly must live on
// rs.diagonal_table; anything else is rejected.
Polynomial weyl_action_q0(const RootSystem& rs, const SignedPermutation& g, const Polynomial& poly);

}  // namespace qtoda
