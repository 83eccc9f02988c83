#include "qtoda/laxtoda.hpp"

#include <stdexcept>

#include "qtoda/detpoly.hpp"

namespace qtoda {

namespace {

Polynomial pvar(const VarTableRef& t, const std::string& name) {
  int i = t->index_of(name);
  if (i < 0) throw std::logic_error("missing variable " + name);
  return Polynomial::variable(t, static_cast<size_t>(i));
}

}  // namespace

LaxMatrix build_lax(const RootSystem& rs) {
  LaxMatrix m;
  m.family = rs.family;
  m.rank = rs.rank;
  const size_t n = static_cast<size_t>(rs.rank);

  if (rs.family == Family::A) {
    m.table = momentum_q_table("p", rs.rank);
    const size_t N = n + 1;
    m.entries.assign(N, std::vector<Polynomial>(N, Polynomial::zero(m.table)));
    auto p = [&](size_t i) {  // p_0 = p_{n+1} = 0
      return (i == 0 || i > n) ? Polynomial::zero(m.table) : pvar(m.table, "p" + std::to_string(i));
    };
    for (size_t i = 1; i <= N; ++i) m.entries[i - 1][i - 1] = p(i) - p(i - 1);
    for (size_t i = 1; i < N; ++i) {
      m.entries[i - 1][i] = Polynomial::constant(m.table, -1);
      m.entries[i][i - 1] = pvar(m.table, "q" + std::to_string(i));
    }
    return m;
  }

  // family B: 2n x 2n blocks [[A, B], [C, -A^T]] in sp(2n)
  m.table = momentum_q_table("x", rs.rank);
  const size_t N = 2 * n;
  m.entries.assign(N, std::vector<Polynomial>(N, Polynomial::zero(m.table)));
  std::vector<std::vector<Polynomial>> blockA(n, std::vector<Polynomial>(n, Polynomial::zero(m.table)));
  for (size_t i = 0; i < n; ++i) blockA[i][i] = pvar(m.table, "x" + std::to_string(i + 1));
  for (size_t i = 0; i + 1 < n; ++i) {
    blockA[i + 1][i] = pvar(m.table, "q" + std::to_string(i + 1));
    blockA[i][i + 1] = Polynomial::constant(m.table, -1);
  }
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) {
      m.entries[r][c] = blockA[r][c];
      m.entries[n + r][n + c] = -blockA[c][r];
    }
  m.entries[n - 1][2 * n - 1] = Polynomial::constant(m.table, -2);
  m.entries[2 * n - 1][n - 1] = pvar(m.table, "q" + std::to_string(n)).scaled(Rat(2));
  return m;
}

ConservedSet conserved_quantities(const LaxMatrix& m) {
  const auto coeffs = char_poly_det(m.entries);
  const size_t n = static_cast<size_t>(m.rank);
  const size_t N = m.entries.size();

  if (coeffs[N] != Polynomial::constant(m.table, 1))
    throw std::logic_error("leading coefficient of det(t + X) is not 1");

  ConservedSet cs;
  cs.family = m.family;
  cs.rank = m.rank;
  if (m.family == Family::A) {
    if (!coeffs[N - 1].is_zero()) throw std::logic_error("trace of the A-family Lax matrix is nonzero");
    for (size_t v = 1; v <= n; ++v) cs.J.push_back(coeffs[n - v]);
  } else {
    for (size_t k = 1; k < N; k += 2)
      if (!coeffs[k].is_zero()) throw std::logic_error("odd characteristic coefficient is nonzero for family B");
    for (size_t v = 1; v <= n; ++v) cs.J.push_back(coeffs[2 * (n - v)]);
  }
  return cs;
}

Polynomial quadratic_relation(const RootSystem& rs) {
  const VarTableRef table = momentum_q_table("p", rs.rank);
  const size_t n = static_cast<size_t>(rs.rank);
  Polynomial result(table);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (rat_is_zero(rs.gram[i][j])) continue;
      result += (pvar(table, "p" + std::to_string(i + 1)) * pvar(table, "p" + std::to_string(j + 1)))
                    .scaled(rs.gram[i][j]);
    }
  for (size_t i = 0; i < n; ++i)
    result -= pvar(table, "q" + std::to_string(i + 1)).scaled(rs.c[i]);
  return result;
}

Polynomial to_p_coordinates(const RootSystem& rs, const Polynomial& poly) {
  const size_t n = static_cast<size_t>(rs.rank);
  const VarTableRef target = momentum_q_table("p", rs.rank);
  auto p = [&](size_t i) {
    return (i == 0) ? Polynomial::zero(target) : pvar(target, "p" + std::to_string(i));
  };

  if (rs.family == Family::B) {
    const VarTableRef expected = momentum_q_table("x", rs.rank);
    if (!poly.table() || !poly.table()->same_as(*expected))
      throw std::invalid_argument("family B expects a polynomial over the x/q table");
    std::map<size_t, Polynomial> images;
    for (size_t j = 1; j < n; ++j) images[j - 1] = p(j) - p(j - 1);
    images[n - 1] = p(n).scaled(Rat(2)) - p(n - 1);
    for (size_t j = 1; j <= n; ++j) images[n + j - 1] = pvar(target, "q" + std::to_string(j));
    return poly.substitute(target, images);
  }

  const VarTableRef& expected = rs.diagonal_table;
  if (!poly.table() || !poly.table()->same_as(*expected))
    throw std::invalid_argument("family A expects a polynomial over the diagonal x table");
  std::map<size_t, Polynomial> images;
  for (size_t i = 1; i <= n; ++i) images[i - 1] = p(i) - p(i - 1);
  images[n] = -p(n);
  return poly.substitute(target, images);
}

}  // namespace qtoda
