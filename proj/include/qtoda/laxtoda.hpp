#pragma once

#include <vector>

#include "qtoda/polynomial.hpp"
#include "qtoda/rootdata.hpp"

namespace qtoda {

// Lax matrix of the open Toda chain on the dual side. Family A_n gives an
// (n+1) x (n+1) traceless matrix over p1..pn, q1..qn; family B_n gives a
// 2n x 2n symplectic matrix over the diagonal coordinates x1..xn, q1..qn.
struct LaxMatrix {
  Family family = Family::A;
  int rank = 0;
  VarTableRef table;
  std::vector<std::vector<Polynomial>> entries;
};

// Coefficients J_1..J_rank of det(t + X): J_v multiplies t^{rank-v} for
// family A and t^{2(rank-v)} for family B. J_v is weighted-homogeneous of
// degree v+1 (A) resp. 2v (B) with momenta weighing 1 and q weighing 2.
struct ConservedSet {
  Family family = Family::A;
  int rank = 0;
  std::vector<Polynomial> J;
};

LaxMatrix build_lax(const RootSystem& rs);

ConservedSet conserved_quantities(const LaxMatrix& m);

// Sum_ij G_ij p_i p_j - Sum_i c_i q_i over the p/q table. Reduces to zero in
// the quotient by the conserved quantities; in fact it is a fixed rational
// multiple of -J_1 after the coordinate change below.
Polynomial quadratic_relation(const RootSystem& rs);

// Re-expression in fundamental-weight coordinates p. Family B inverts
// p_j = x_1+...+x_j (j < n), p_n = (x_1+...+x_n)/2 on the x/q table, q
// passing through. Family A maps its free diagonal table x1..x_{n+1} through
// the Lax diagonal entries: x_i -> p_i - p_{i-1}, x_{n+1} -> -p_n.
Polynomial to_p_coordinates(const RootSystem& rs, const Polynomial& poly);

}  // namespace qtoda
