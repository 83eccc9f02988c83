#pragma once

#include <string>
#include <vector>

#include "qtoda/laxtoda.hpp"
#include "qtoda/polynomial.hpp"
#include "qtoda/rootdata.hpp"

namespace qtoda {

// Equivariant extension for family A at desk scale: the variable table gains
// torus parameters u_1..u_l of weight 1, and each conserved quantity turns
// into the relation J_v(p, q) - J_v(u, 0). Setting u = 0 recovers the plain
// quantum relations; setting q = 0 gives the classical equivariant ring.
struct EquivariantPresentation {
  RootSystem rs;
  VarTableRef table;  // p_1..p_l, q_1..q_l, u_1..u_l
  std::vector<Polynomial> relations;
};

// Family A only, rank at most 4.
EquivariantPresentation build_equivariant(const RootSystem& rs);

// Rank-1 worked example: the single relation is q1 - p1^2 + u1^2, and its
// negation factors as (p1 + u1)(p1 - u1) - q1, the product of the fixed-point
// classes minus q.
struct P1ExampleReport {
  bool relation_matches = false;
  bool factorization_matches = false;
  bool q_zero_ok = false;  // classical limit: u1^2 - p1^2
  bool u_zero_ok = false;  // plain quantum relation: q1 - p1^2
  bool all_pass() const {
    return relation_matches && factorization_matches && q_zero_ok && u_zero_ok;
  }
};

P1ExampleReport p1_example_check();

// Plain presentation JSON for the same root system, extended with
// "equivariant_variables" and "equivariant_relations".
std::string equivariant_json(const EquivariantPresentation& ep);

}  // namespace qtoda
