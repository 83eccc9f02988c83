#include "qtoda/rootdata.hpp"

#include <stdexcept>
#include <string>

namespace qtoda {

namespace {

Rat dot(const std::vector<Rat>& a, const std::vector<Rat>& b) {
  Rat s(0);
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<Rat> basis_vec(size_t dim, size_t i, const Rat& value) {
  std::vector<Rat> v(dim, Rat(0));
  v[i] = value;
  return v;
}

}  // namespace

const char* family_name(Family f) { return f == Family::A ? "A" : "B"; }

RootSystem build_root_system(Family family, int rank) {
  if (family == Family::A && rank < 1)
    throw std::invalid_argument("family A requires rank >= 1, got rank = " + std::to_string(rank));
  if (family == Family::B && rank < 2)
    throw std::invalid_argument("family B requires rank >= 2, got rank = " + std::to_string(rank));
  if (rank > 12)
    throw std::invalid_argument("rank above 12 is not supported, got rank = " + std::to_string(rank));

  RootSystem rs;
  rs.family = family;
  rs.rank = rank;
  const size_t n = static_cast<size_t>(rank);

  if (family == Family::A) {
    const size_t dim = n + 1;
    for (size_t i = 0; i < n; ++i) {
      auto root = basis_vec(dim, i, Rat(1));
      root[i + 1] = Rat(-1);
      rs.simple_roots.push_back(root);
    }
    rs.dual_simple_roots = rs.simple_roots;  // self dual
    for (int d = 2; d <= rank + 1; ++d) rs.degrees.push_back(d);
    for (size_t k = 1; k <= dim; ++k) {
      Rat entry(static_cast<long>(n) + 2 - 2 * static_cast<long>(k), 2);
      entry.canonicalize();  // mpq_class(num, den) stores the raw pair
      rs.rho.push_back(entry);
    }
    rs.diagonal_table = make_vars({{"x", dim}});
  } else {
    const size_t dim = n;
    for (size_t i = 0; i + 1 < n; ++i) {
      auto root = basis_vec(dim, i, Rat(1));
      root[i + 1] = Rat(-1);
      rs.simple_roots.push_back(root);
      rs.dual_simple_roots.push_back(root);
    }
    rs.simple_roots.push_back(basis_vec(dim, n - 1, Rat(1)));       // short root
    rs.dual_simple_roots.push_back(basis_vec(dim, n - 1, Rat(2)));  // long dual root
    for (size_t i = 1; i <= n; ++i) rs.degrees.push_back(static_cast<int>(2 * i));
    for (size_t k = 1; k <= n; ++k) rs.rho.push_back(Rat(static_cast<long>(n - k) + 1));
    rs.diagonal_table = make_vars({{"x", dim}});
  }

  const size_t l = rs.dual_simple_roots.size();
  rs.gram.assign(l, std::vector<Rat>(l));
  for (size_t i = 0; i < l; ++i)
    for (size_t j = 0; j < l; ++j) rs.gram[i][j] = dot(rs.dual_simple_roots[i], rs.dual_simple_roots[j]);
  for (size_t i = 0; i < l; ++i) rs.c.push_back(rs.gram[i][i]);

  long order = 1;
  if (family == Family::A) {
    for (long k = 2; k <= rank + 1; ++k) order *= k;
  } else {
    for (long k = 1; k <= rank; ++k) order *= 2 * k;
  }
  rs.weyl_order = order;

  long degree_product = 1;
  for (int d : rs.degrees) degree_product *= d;
  if (degree_product != rs.weyl_order)
    throw std::logic_error("degree product does not match reflection group order");

  return rs;
}

Polynomial poincare_polynomial_flag(const RootSystem& rs) {
  const VarTableRef table = make_vars({{"t", 0}});
  const Polynomial t = Polynomial::variable(table, 0);
  Polynomial result = Polynomial::constant(table, 1);
  for (int d : rs.degrees) {
    Polynomial factor(table);
    for (int e = 0; e < d; ++e) factor += t.pow(static_cast<std::uint32_t>(e));
    result *= factor;
  }
  return result;
}

SignedPermutation adjacent_transposition(const RootSystem& rs, size_t i) {
  const size_t m = rs.diagonal_table->size();
  if (i + 1 >= m) throw std::invalid_argument("transposition index out of range");
  SignedPermutation g;
  g.signs.assign(m, 1);
  for (size_t k = 0; k < m; ++k) g.perm.push_back(k);
  std::swap(g.perm[i], g.perm[i + 1]);
  return g;
}

SignedPermutation sign_flip(const RootSystem& rs, size_t i) {
  if (rs.family != Family::B) throw std::invalid_argument("sign flips exist only for family B");
  const size_t m = rs.diagonal_table->size();
  if (i >= m) throw std::invalid_argument("sign flip index out of range");
  SignedPermutation g;
  g.signs.assign(m, 1);
  g.signs[i] = -1;
  for (size_t k = 0; k < m; ++k) g.perm.push_back(k);
  return g;
}

std::vector<SignedPermutation> weyl_generators(const RootSystem& rs) {
  std::vector<SignedPermutation> gens;
  const size_t m = rs.diagonal_table->size();
  for (size_t i = 0; i + 1 < m; ++i) gens.push_back(adjacent_transposition(rs, i));
  if (rs.family == Family::B)
    for (size_t i = 0; i < m; ++i) gens.push_back(sign_flip(rs, i));
  return gens;
}

Polynomial weyl_action_q0(const RootSystem& rs, const SignedPermutation& g, const Polynomial& poly) {
  const VarTableRef& table = rs.diagonal_table;
  if (!poly.table() || !poly.table()->same_as(*table))
    throw std::invalid_argument("polynomial must live on the diagonal variable table");
  const size_t m = table->size();
  if (g.perm.size() != m || g.signs.size() != m)
    throw std::invalid_argument("group element size does not match the diagonal variable count");
  std::vector<bool> seen(m, false);
  for (size_t i = 0; i < m; ++i) {
    if (g.perm[i] >= m || seen[g.perm[i]]) throw std::invalid_argument("perm is not a permutation");
    seen[g.perm[i]] = true;
    if (g.signs[i] != 1 && g.signs[i] != -1) throw std::invalid_argument("signs must be +1 or -1");
    if (rs.family == Family::A && g.signs[i] != 1)
      throw std::invalid_argument("family A admits no sign flips");
  }
  std::map<size_t, Polynomial> images;
  for (size_t i = 0; i < m; ++i)
    images[i] = Polynomial::variable(table, g.perm[i]).scaled(Rat(g.signs[i]));
  return poly.substitute(table, images);
}

}  // namespace qtoda
