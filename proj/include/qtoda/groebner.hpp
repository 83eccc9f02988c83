#pragma once

#include <map>
#include <vector>

#include "qtoda/polynomial.hpp"

namespace qtoda {

// Reduced Groebner basis of an ideal together with the order it was computed
// under. Generators are monic, pairwise reduced, and sorted by ascending
// leading monomial, which makes the object canonical for (ideal, order):
// permuting the input generators cannot change it.
struct GroebnerBasis {
  VarTableRef table;
  MonomialOrder order;
  std::vector<Polynomial> generators;
  // generators re-sorted under `order` (leading term first); kept alongside so
  // reduction never re-sorts
  std::vector<std::vector<Term>> sorted_generators;

  // Full remainder of the division algorithm: no term of the result is
  // divisible by any generator's leading monomial. Linear over coefficients.
  Polynomial normal_form(const Polynomial& f) const;
  bool contains(const Polynomial& f) const { return normal_form(f).is_zero(); }

  // A quotient is finite-dimensional iff every variable appears as a pure
  // power among the leading monomials.
  bool is_zero_dimensional() const;

  // All monomials outside the leading-term ideal, sorted ascending in the
  // canonical order. Throws std::domain_error when the quotient is not
  // finite-dimensional (unless a degree bound is supplied).
  std::vector<Monomial> standard_monomials(long degree_bound = -1) const;

  // weighted degree -> number of standard monomials of that degree
  std::map<long, long> graded_dimensions() const;
};

GroebnerBasis groebner_basis(std::vector<Polynomial> gens, const MonomialOrder& order);

}  // namespace qtoda
