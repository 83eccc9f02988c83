#include "qtoda/equivariant.hpp"

#include <map>
#include <stdexcept>

#include "json.hpp"

#include "qtoda/qhring.hpp"

namespace qtoda {

EquivariantPresentation build_equivariant(const RootSystem& rs) {
  if (rs.family != Family::A) {
    throw std::invalid_argument("equivariant presentations are implemented for family A only");
  }
  if (rs.rank > 4) {
    throw std::invalid_argument("equivariant presentations are desk scale; rank must be at most 4");
  }
  const size_t l = static_cast<size_t>(rs.rank);

  EquivariantPresentation ep;
  ep.rs = rs;
  ep.table = make_vars({{"p", rs.rank}, {"q", rs.rank}, {"u", rs.rank}});

  const ConservedSet cs = conserved_quantities(build_lax(rs));
  std::map<size_t, Polynomial> to_u;
  for (size_t i = 0; i < l; ++i) {
    to_u[i] = Polynomial::variable(ep.table, 2 * l + i);
    to_u[l + i] = Polynomial::zero(ep.table);
  }
  std::map<size_t, Polynomial> kill_u;
  for (size_t i = 0; i < l; ++i) {
    kill_u[i] = Polynomial::variable(ep.table, i);
    kill_u[l + i] = Polynomial::variable(ep.table, l + i);
    kill_u[2 * l + i] = Polynomial::zero(ep.table);
  }

  for (const Polynomial& J : cs.J) {
    Polynomial quantum = J.transplant(ep.table);
    Polynomial shift = J.substitute(ep.table, to_u);
    Polynomial rel = quantum - shift;
    if (!rel.is_homogeneous()) throw std::logic_error("equivariant relation lost homogeneity");
    // The torus part is at least quadratic in u, so u = 0 must give back the
    // plain relation.
    if (rel.substitute(ep.table, kill_u) != quantum.substitute(ep.table, kill_u)) {
      throw std::logic_error("u = 0 does not recover the plain relation");
    }
    ep.relations.push_back(rel);
  }
  return ep;
}

P1ExampleReport p1_example_check() {
  const RootSystem rs = build_root_system(Family::A, 1);
  const EquivariantPresentation ep = build_equivariant(rs);
  const Polynomial& rel = ep.relations.at(0);

  P1ExampleReport report;
  report.relation_matches = rel == Polynomial::parse(ep.table, "q1 - p1^2 + u1^2");

  const Polynomial fixed0 = Polynomial::parse(ep.table, "p1 + u1");
  const Polynomial fixedinf = Polynomial::parse(ep.table, "p1 - u1");
  const Polynomial q1 = Polynomial::variable(ep.table, 1);
  report.factorization_matches = (-rel) == fixed0 * fixedinf - q1;

  std::map<size_t, Polynomial> q_zero = {
      {0, Polynomial::variable(ep.table, 0)},
      {1, Polynomial::zero(ep.table)},
      {2, Polynomial::variable(ep.table, 2)},
  };
  report.q_zero_ok = rel.substitute(ep.table, q_zero) == Polynomial::parse(ep.table, "u1^2 - p1^2");

  std::map<size_t, Polynomial> u_zero = {
      {0, Polynomial::variable(ep.table, 0)},
      {1, Polynomial::variable(ep.table, 1)},
      {2, Polynomial::zero(ep.table)},
  };
  report.u_zero_ok = rel.substitute(ep.table, u_zero) == Polynomial::parse(ep.table, "q1 - p1^2");
  return report;
}

std::string equivariant_json(const EquivariantPresentation& ep) {
  const Presentation pres = build_presentation(ep.rs, Coords::Native);
  nlohmann::ordered_json j = nlohmann::ordered_json::parse(presentation_json(pres));
  j["equivariant_variables"] = nlohmann::ordered_json::array();
  for (const auto& v : ep.table->vars()) {
    if (v.name.front() == 'u') {
      j["equivariant_variables"].push_back(
          nlohmann::ordered_json{{"name", v.name}, {"weight", v.weight}});
    }
  }
  j["equivariant_relations"] = nlohmann::ordered_json::array();
  for (const auto& r : ep.relations) j["equivariant_relations"].push_back(r.to_string());
  return j.dump(2);
}

}  // namespace qtoda
