#pragma once

#include <string>
#include <vector>

#include "qtoda/groebner.hpp"
#include "qtoda/laxtoda.hpp"
#include "qtoda/rootdata.hpp"

namespace qtoda {

// Coordinate choice for the ring presentation. Family A is native in p;
// family B is native in the diagonal x and can be converted to p.
enum class Coords { Native, P };

// The quantum ring as a concrete quotient: rank relations J_1..J_rank over
// the momentum/q table, with eager Groebner caches for the full ring and the
// q = 0 specialization. Construction verifies that the quadratic form
// Sum G_ij p_i p_j - Sum c_i q_i lies in the relation ideal.
struct Presentation {
  RootSystem rs;
  Coords coords = Coords::Native;
  VarTableRef table;
  std::vector<Polynomial> relations;
  GroebnerBasis full_basis;
  VarTableRef classical_table;  // momentum variables only
  GroebnerBasis classical_basis;
};

Presentation build_presentation(const RootSystem& rs, Coords coords = Coords::Native);

// Normal form against the full basis; zero exactly on ideal members.
Polynomial reduce_class(const Presentation& pres, const Polynomial& f);

// Coset product: reduce_class(f * g).
Polynomial quotient_multiply(const Presentation& pres, const Polynomial& f, const Polynomial& g);

struct ClassicalReport {
  bool zero_dimensional = false;
  long dimension = 0;
  long expected_dimension = 0;
  Polynomial poincare;           // graded quotient dimensions as a polynomial in t
  Polynomial expected_poincare;  // product over degrees of 1 + t + ... + t^{d_i-1}
  bool poincare_matches = false;
  // Per relation: the q = 0 part re-expressed in the free diagonal variables
  // reproduces the relation (family A through the e_{v+1} identity, family B
  // through (-1)^v e_v of the squares), and that expression is fixed by every
  // reflection group generator.
  std::vector<bool> diagonal_expression_ok;
  std::vector<bool> weyl_invariant;
  bool all_pass() const;
};

// q = 0 structure of the quotient: dimension, graded counts, and reflection
// group invariance of the specialized relations. Failures are reported as
// verdicts, not exceptions.
ClassicalReport classical_limit_report(const Presentation& pres);

struct RankProbeReport {
  long expected = 0;  // reflection group order
  // One row per specialization; row 0 is q = 0, later rows use seeded random
  // nonzero rationals recorded in sample_points.
  std::vector<std::vector<Rat>> sample_points;
  std::vector<long> dimensions;
  bool all_match() const;
};

// Specializes q to sample_count random nonzero rational points (plus q = 0)
// and checks the quotient dimension each time. Deterministic under the seed.
RankProbeReport free_rank_probe(const Presentation& pres, int sample_count, std::uint64_t seed);

// JSON description: family, rank, variables, relations in canonical text,
// reflection group order, flag Poincare polynomial. Field order is fixed.
std::string presentation_json(const Presentation& pres);

}  // namespace qtoda
