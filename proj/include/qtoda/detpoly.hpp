#pragma once

#include <vector>

#include "qtoda/polynomial.hpp"

namespace qtoda {

// Determinant of a square matrix of polynomials sharing one variable table.
// Subset dynamic programming: for each column set S the determinant of the
// leading |S| rows restricted to columns S, built level by level (|S| = k
// from |S| = k-1) by cofactor expansion along row k-1. 2^n table entries,
// so the dimension is capped at 12. The parallel variant splits each level
// across threads; both produce identical polynomials.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m);
Polynomial poly_det_serial(const std::vector<std::vector<Polynomial>>& m);

// Coefficients of det(t*I + m) indexed by the power of t: result[k] is the
// coefficient of t^k over the entries' own table, result.size() == n + 1.
// The entries' table must not already contain a variable named "t".
std::vector<Polynomial> char_poly_det(const std::vector<std::vector<Polynomial>>& m);
std::vector<Polynomial> char_poly_det_serial(const std::vector<std::vector<Polynomial>>& m);

}  // namespace qtoda
