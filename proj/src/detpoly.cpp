#include "qtoda/detpoly.hpp"

#include <cstdint>
#include <stdexcept>

namespace qtoda {

namespace {

void validate(const std::vector<std::vector<Polynomial>>& m) {
  const size_t n = m.size();
  if (n == 0) throw std::invalid_argument("empty matrix");
  if (n > 12) throw std::invalid_argument("matrix dimension exceeds 12");
  const VarTableRef& table = m.front().front().table();
  for (const auto& row : m) {
    if (row.size() != n) throw std::invalid_argument("matrix is not square");
    for (const auto& e : row)
      if (!e.table()->same_as(*table)) throw std::invalid_argument("mixed variable tables in matrix");
  }
}

Polynomial det_impl(const std::vector<std::vector<Polynomial>>& m, bool parallel) {
  validate(m);
  const int n = static_cast<int>(m.size());
  const VarTableRef table = m.front().front().table();

  std::vector<std::vector<std::uint32_t>> levels(n + 1);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask)
    levels[__builtin_popcount(mask)].push_back(mask);

  // minor[S] = det of rows 0..|S|-1, columns S
  std::vector<Polynomial> minor(std::size_t{1} << n);
  minor[0] = Polynomial::constant(table, 1);

  for (int k = 1; k <= n; ++k) {
    const auto& masks = levels[k];
    const long count = static_cast<long>(masks.size());
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (long idx = 0; idx < count; ++idx) {
      const std::uint32_t mask = masks[idx];
      Polynomial acc(table);
      int pos = 0;  // position of column c inside S, ascending
      for (int c = 0; c < n; ++c) {
        if (!(mask >> c & 1u)) continue;
        const Polynomial& entry = m[k - 1][c];
        if (!entry.is_zero()) {
          Polynomial contrib = entry * minor[mask ^ (1u << c)];
          if ((k - 1 + pos) % 2 == 0)
            acc += contrib;
          else
            acc -= contrib;
        }
        ++pos;
      }
      minor[mask] = std::move(acc);
    }
  }
  return minor[(std::size_t{1} << n) - 1];
}

std::vector<Polynomial> char_poly_impl(const std::vector<std::vector<Polynomial>>& m, bool parallel) {
  validate(m);
  const size_t n = m.size();
  const VarTableRef table = m.front().front().table();
  if (table->index_of("t") >= 0)
    throw std::invalid_argument("entry table already contains a variable named t");

  std::vector<Var> vars = table->vars();
  vars.push_back(Var{"t", 1});
  const VarTableRef ext = VarTable::make(vars);
  const size_t t_index = static_cast<size_t>(ext->index_of("t"));
  const Polynomial t = Polynomial::variable(ext, t_index);

  std::vector<std::vector<Polynomial>> shifted(n, std::vector<Polynomial>(n));
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      shifted[r][c] = m[r][c].transplant(ext);
      if (r == c) shifted[r][c] += t;
    }

  const Polynomial det = det_impl(shifted, parallel);
  std::vector<Polynomial> coeffs(n + 1, Polynomial::zero(table));
  for (const auto& [exp, part] : det.collect(t_index)) {
    if (exp > n) throw std::logic_error("t-degree above matrix dimension");
    coeffs[exp] = part.transplant(table);
  }
  return coeffs;
}

}  // namespace

Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) { return det_impl(m, true); }

Polynomial poly_det_serial(const std::vector<std::vector<Polynomial>>& m) {
  return det_impl(m, false);
}

std::vector<Polynomial> char_poly_det(const std::vector<std::vector<Polynomial>>& m) {
  return char_poly_impl(m, true);
}

std::vector<Polynomial> char_poly_det_serial(const std::vector<std::vector<Polynomial>>& m) {
  return char_poly_impl(m, false);
}

}  // namespace qtoda
