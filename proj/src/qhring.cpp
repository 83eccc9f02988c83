#include "qtoda/qhring.hpp"

#include <random>
#include <stdexcept>

#include "json.hpp"

namespace qtoda {

namespace {

std::string momentum_prefix(const Presentation& pres) {
  return (pres.rs.family == Family::B && pres.coords == Coords::Native) ? "x" : "p";
}

// q = 0 image of a relation, landed on the momentum-only table.
Polynomial classical_part(const Polynomial& f, const VarTableRef& classical_table, int rank) {
  std::map<size_t, Polynomial> img;
  for (int i = 0; i < rank; ++i) {
    img[static_cast<size_t>(i)] = Polynomial::variable(classical_table, static_cast<size_t>(i));
    img[static_cast<size_t>(rank + i)] = Polynomial::zero(classical_table);
  }
  return f.substitute(classical_table, img);
}

// Quadratic relation re-expressed over the x/q table: p_j = x_1+...+x_j for
// j < n and p_n = (x_1+...+x_n)/2.
Polynomial quad_in_x(const RootSystem& rs, const VarTableRef& xq) {
  const size_t n = static_cast<size_t>(rs.rank);
  std::map<size_t, Polynomial> img;
  Polynomial partial(xq);
  for (size_t j = 0; j < n; ++j) {
    partial += Polynomial::variable(xq, j);
    img[j] = (j + 1 < n) ? partial : partial.scaled(rat(1, 2));
  }
  for (size_t j = 0; j < n; ++j) img[n + j] = Polynomial::variable(xq, n + j);
  return quadratic_relation(rs).substitute(xq, img);
}

}  // namespace

Presentation build_presentation(const RootSystem& rs, Coords coords) {
  Presentation pres;
  pres.rs = rs;
  pres.coords = coords;

  const ConservedSet cs = conserved_quantities(build_lax(rs));
  if (rs.family == Family::B && coords == Coords::P) {
    for (const auto& j : cs.J) pres.relations.push_back(to_p_coordinates(rs, j));
  } else {
    pres.relations = cs.J;
  }
  pres.table = pres.relations.front().table();

  for (const auto& r : pres.relations)
    if (!r.is_homogeneous()) throw std::logic_error("relation is not weighted-homogeneous");

  pres.full_basis = groebner_basis(pres.relations, MonomialOrder::wdegrevlex(pres.table));

  const Polynomial quad = (rs.family == Family::B && coords == Coords::Native)
                              ? quad_in_x(rs, pres.table)
                              : quadratic_relation(rs);
  if (!pres.full_basis.normal_form(quad).is_zero())
    throw std::logic_error("quadratic relation does not reduce to zero in the relation ideal");

  pres.classical_table = momentum_table(momentum_prefix(pres), rs.rank);
  std::vector<Polynomial> classical;
  for (const auto& r : pres.relations)
    classical.push_back(classical_part(r, pres.classical_table, rs.rank));
  pres.classical_basis = groebner_basis(classical, MonomialOrder::wdegrevlex(pres.classical_table));
  return pres;
}

Polynomial reduce_class(const Presentation& pres, const Polynomial& f) {
  return pres.full_basis.normal_form(f);
}

Polynomial quotient_multiply(const Presentation& pres, const Polynomial& f, const Polynomial& g) {
  return reduce_class(pres, f * g);
}

bool ClassicalReport::all_pass() const {
  if (!zero_dimensional || dimension != expected_dimension || !poincare_matches) return false;
  for (bool b : diagonal_expression_ok)
    if (!b) return false;
  for (bool b : weyl_invariant)
    if (!b) return false;
  return true;
}

ClassicalReport classical_limit_report(const Presentation& pres) {
  const RootSystem& rs = pres.rs;
  const size_t n = static_cast<size_t>(rs.rank);
  ClassicalReport rep;
  rep.expected_dimension = rs.weyl_order;
  rep.expected_poincare = poincare_polynomial_flag(rs);

  rep.zero_dimensional = pres.classical_basis.is_zero_dimensional();
  const VarTableRef t_table = rep.expected_poincare.table();
  rep.poincare = Polynomial::zero(t_table);
  if (rep.zero_dimensional) {
    for (const auto& [deg, count] : pres.classical_basis.graded_dimensions()) {
      rep.dimension += count;
      rep.poincare += Polynomial::variable(t_table, 0, static_cast<std::uint32_t>(deg)).scaled(Rat(count));
    }
    rep.poincare_matches = rep.poincare == rep.expected_poincare;
  }

  // Invariance runs on the native conserved set: each q = 0 relation is
  // re-expressed over the free diagonal variables, where the reflection
  // group acts by (signed) permutation.
  const ConservedSet cs = conserved_quantities(build_lax(rs));
  const VarTableRef& diag = rs.diagonal_table;
  const auto gens = weyl_generators(rs);
  for (size_t v = 1; v <= n; ++v) {
    Polynomial diag_expr(diag);
    bool expression_ok = false;
    if (rs.family == Family::A) {
      std::vector<Polynomial> xs;
      for (size_t i = 0; i <= n; ++i) xs.push_back(Polynomial::variable(diag, i));
      diag_expr = elementary_symmetric(xs, v + 1);
      // the diagonal entries of the Lax matrix realize x_i; the identity
      // J_v(p, 0) = e_{v+1}(diagonal) certifies the re-expression
      const VarTableRef pq = momentum_q_table("p", rs.rank);
      std::map<size_t, Polynomial> q0;
      for (size_t i = 0; i < n; ++i) {
        q0[i] = Polynomial::variable(pq, i);
        q0[n + i] = Polynomial::zero(pq);
      }
      expression_ok = to_p_coordinates(rs, diag_expr) == cs.J[v - 1].substitute(pq, q0);
    } else {
      const VarTableRef x_only = momentum_table("x", rs.rank);
      diag_expr = classical_part(cs.J[v - 1], x_only, rs.rank).transplant(diag);
      std::vector<Polynomial> squares;
      for (size_t i = 0; i < n; ++i) squares.push_back(Polynomial::variable(diag, i, 2));
      Polynomial expected = elementary_symmetric(squares, v);
      if (v % 2 == 1) expected = -expected;
      expression_ok = diag_expr == expected;
    }
    rep.diagonal_expression_ok.push_back(expression_ok);

    bool invariant = true;
    for (const auto& g : gens)
      if (weyl_action_q0(rs, g, diag_expr) != diag_expr) {
        invariant = false;
        break;
      }
    rep.weyl_invariant.push_back(invariant);
  }
  return rep;
}

bool RankProbeReport::all_match() const {
  if (dimensions.empty()) return false;
  for (long d : dimensions)
    if (d != expected) return false;
  return true;
}

RankProbeReport free_rank_probe(const Presentation& pres, int sample_count, std::uint64_t seed) {
  if (sample_count < 0) throw std::invalid_argument("sample_count must be nonnegative");
  const size_t n = static_cast<size_t>(pres.rs.rank);
  RankProbeReport rep;
  rep.expected = pres.rs.weyl_order;

  std::mt19937_64 rng(seed);
  auto nonzero_rational = [&rng]() {
    long num = 0;
    while (num == 0) num = static_cast<long>(rng() % 19) - 9;  // [-9, 9] \ {0}
    long den = static_cast<long>(rng() % 9) + 1;               // [1, 9]
    return rat(num, den);
  };

  std::vector<std::vector<Rat>> points;
  points.emplace_back(n, Rat(0));
  for (int s = 0; s < sample_count; ++s) {
    std::vector<Rat> q;
    for (size_t i = 0; i < n; ++i) q.push_back(nonzero_rational());
    points.push_back(std::move(q));
  }

  for (const auto& point : points) {
    std::map<size_t, Polynomial> img;
    for (size_t i = 0; i < n; ++i) {
      img[i] = Polynomial::variable(pres.classical_table, i);
      img[n + i] = Polynomial::constant(pres.classical_table, point[i]);
    }
    std::vector<Polynomial> gens;
    for (const auto& r : pres.relations) gens.push_back(r.substitute(pres.classical_table, img));
    GroebnerBasis gb = groebner_basis(gens, MonomialOrder::wdegrevlex(pres.classical_table));
    long dim = -1;
    if (gb.is_zero_dimensional()) dim = static_cast<long>(gb.standard_monomials().size());
    rep.sample_points.push_back(point);
    rep.dimensions.push_back(dim);
  }
  return rep;
}

std::string presentation_json(const Presentation& pres) {
  nlohmann::ordered_json j;
  j["family"] = family_name(pres.rs.family);
  j["rank"] = pres.rs.rank;
  j["variables"] = nlohmann::ordered_json::array();
  for (const auto& v : pres.table->vars())
    j["variables"].push_back(nlohmann::ordered_json{{"name", v.name}, {"weight", v.weight}});
  j["relations"] = nlohmann::ordered_json::array();
  for (const auto& r : pres.relations) j["relations"].push_back(r.to_string());
  j["weyl_order"] = pres.rs.weyl_order;
  j["poincare"] = poincare_polynomial_flag(pres.rs).to_string();
  return j.dump(2);
}

}  // namespace qtoda
