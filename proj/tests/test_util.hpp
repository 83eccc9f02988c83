#pragma once

// Shared oracles for the test binaries. Everything here is deliberately
// naive: permutation-expansion determinants, dense rational Gauss, brute
// monomial enumeration. The library must agree with these on small inputs.

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "qtoda/polynomial.hpp"
#include "qtoda/rational.hpp"

namespace testutil {

using qtoda::Monomial;
using qtoda::Polynomial;
using qtoda::Rat;
using qtoda::Term;
using qtoda::VarTableRef;

// Determinant by summing over all permutations. Exponential; fine to n = 6.
inline Polynomial leibniz_det(const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  std::vector<size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Polynomial acc = Polynomial::zero(m.at(0).at(0).table());
  do {
    int sign = 1;
    for (size_t i = 0; i < n; ++i)
      for (size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Polynomial prod = Polynomial::constant(acc.table(), Rat(sign));
    for (size_t i = 0; i < n; ++i) prod *= m[i][perm[i]];
    acc += prod;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return acc;
}

// Rank and feasibility of A x = b by plain rational Gauss elimination.
struct GaussFacts {
  bool feasible = true;
  size_t rank = 0;
};

inline GaussFacts gauss_facts(std::vector<std::vector<Rat>> A, std::vector<Rat> b) {
  const size_t rows = A.size();
  const size_t cols = rows == 0 ? 0 : A[0].size();
  GaussFacts facts;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t pivot = row;
    while (pivot < rows && A[pivot][col] == 0) ++pivot;
    if (pivot == rows) continue;
    std::swap(A[pivot], A[row]);
    std::swap(b[pivot], b[row]);
    for (size_t r = 0; r < rows; ++r) {
      if (r == row || A[r][col] == 0) continue;
      const Rat f = A[r][col] / A[row][col];
      for (size_t c = col; c < cols; ++c) A[r][c] -= f * A[row][c];
      b[r] -= f * b[row];
    }
    ++row;
  }
  facts.rank = row;
  for (size_t r = row; r < rows; ++r) {
    if (b[r] != 0) {
      bool all_zero = true;
      for (size_t c = 0; c < cols; ++c) all_zero = all_zero && A[r][c] == 0;
      if (all_zero) facts.feasible = false;
    }
  }
  return facts;
}

inline Rat random_rat(std::mt19937_64& rng, long span = 9, long den_span = 6) {
  const long num = static_cast<long>(rng() % (2 * span + 1)) - span;
  const long den = static_cast<long>(rng() % den_span) + 1;
  return qtoda::rat(num, den);
}

inline Polynomial random_poly(std::mt19937_64& rng, const VarTableRef& table, int max_terms,
                              std::uint32_t max_exp) {
  std::vector<Term> terms;
  const int count = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_terms));
  for (int t = 0; t < count; ++t) {
    Monomial m(table->size(), 0);
    for (size_t v = 0; v < table->size(); ++v) m[v] = static_cast<std::uint32_t>(rng() % (max_exp + 1));
    terms.push_back(Term{m, random_rat(rng)});
  }
  return Polynomial::from_terms(table, terms);
}

// All monomials over `table` with weighted degree exactly d that no leading
// monomial in `leads` divides. Brute force for cross-checking basis counts.
inline long brute_standard_count(const VarTableRef& table, const std::vector<Monomial>& leads,
                                 long degree) {
  const size_t nv = table->size();
  long count = 0;
  Monomial m(nv, 0);
  auto weight = [&](const Monomial& mm) {
    long w = 0;
    for (size_t i = 0; i < nv; ++i) w += static_cast<long>(mm[i]) * table->weight(i);
    return w;
  };
  // Odometer over exponent vectors bounded by the degree.
  while (true) {
    if (weight(m) == degree) {
      bool standard = true;
      for (const Monomial& lead : leads) {
        if (qtoda::monomial_divides(lead, m)) {
          standard = false;
          break;
        }
      }
      if (standard) ++count;
    }
    size_t i = 0;
    while (i < nv) {
      ++m[i];
      if (weight(m) <= degree) break;
      m[i] = 0;
      ++i;
    }
    if (i == nv) break;
  }
  return count;
}

}  // namespace testutil
