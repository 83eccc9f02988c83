#include "qtoda/linalg.hpp"

#include <stdexcept>

namespace qtoda {

namespace {

LinearSolution solve_impl(const RatMatrix& A, const std::vector<Rat>& b, bool parallel) {
  const size_t rows = A.size();
  const size_t cols = rows == 0 ? 0 : A.front().size();
  for (const auto& r : A)
    if (r.size() != cols) throw std::invalid_argument("ragged coefficient matrix");
  if (b.size() != rows) throw std::invalid_argument("right-hand side length does not match rows");

  // integral augmented matrix, scaled per row
  std::vector<std::vector<Int>> M(rows, std::vector<Int>(cols + 1));
  for (size_t r = 0; r < rows; ++r) {
    Int scale = 1;
    for (size_t c = 0; c < cols; ++c) scale = lcm(scale, A[r][c].get_den());
    scale = lcm(scale, b[r].get_den());
    for (size_t c = 0; c < cols; ++c) {
      Rat v = A[r][c] * Rat(scale);
      M[r][c] = v.get_num();
    }
    Rat v = b[r] * Rat(scale);
    M[r][cols] = v.get_num();
  }

  // fraction-free forward elimination
  std::vector<size_t> pivot_col;  // pivot column of echelon row i
  Int prev = 1;
  size_t row = 0;
  for (size_t col = 0; col < cols && row < rows; ++col) {
    size_t sel = row;
    while (sel < rows && sgn(M[sel][col]) == 0) ++sel;
    if (sel == rows) continue;
    if (sel != row) std::swap(M[sel], M[row]);
    const Int piv = M[row][col];
    const long lo = static_cast<long>(row) + 1;
    const long hi = static_cast<long>(rows);
#pragma omp parallel for schedule(static) if (parallel)
    for (long r = lo; r < hi; ++r) {
      const Int factor = M[r][col];
      for (size_t c = col; c <= cols; ++c) {
        Int t = M[r][c] * piv - factor * M[row][c];
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        M[r][c] = std::move(t);
      }
    }
    prev = piv;
    pivot_col.push_back(col);
    ++row;
  }

  LinearSolution out;
  for (size_t r = row; r < rows; ++r)
    if (sgn(M[r][cols]) != 0) return out;  // 0 = nonzero: infeasible
  out.feasible = true;

  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivot_col) is_pivot[c] = true;
  std::vector<size_t> free_cols;
  for (size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);

  // rational back-substitution; solves for the pivot variables given an
  // assignment of the free ones
  auto back_substitute = [&](const std::vector<Rat>& free_vals) {
    std::vector<Rat> x(cols, Rat(0));
    for (size_t k = 0; k < free_cols.size(); ++k) x[free_cols[k]] = free_vals[k];
    for (size_t i = pivot_col.size(); i-- > 0;) {
      size_t pc = pivot_col[i];
      Rat acc(M[i][cols]);
      for (size_t c = pc + 1; c < cols; ++c) {
        if (sgn(M[i][c]) != 0) acc -= Rat(M[i][c]) * x[c];
      }
      x[pc] = acc / Rat(M[i][pc]);
    }
    return x;
  };

  out.particular = back_substitute(std::vector<Rat>(free_cols.size(), Rat(0)));
  for (size_t k = 0; k < free_cols.size(); ++k) {
    std::vector<Rat> e(free_cols.size(), Rat(0));
    e[k] = 1;
    std::vector<Rat> v = back_substitute(e);
    // homogeneous direction: subtract the particular offset
    for (size_t c = 0; c < cols; ++c) v[c] -= out.particular[c];
    out.nullspace.push_back(std::move(v));
  }
  return out;
}

}  // namespace

LinearSolution linear_solve(const RatMatrix& A, const std::vector<Rat>& b) {
  return solve_impl(A, b, true);
}

LinearSolution linear_solve_serial(const RatMatrix& A, const std::vector<Rat>& b) {
  return solve_impl(A, b, false);
}

}  // namespace qtoda
