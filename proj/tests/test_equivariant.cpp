#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "json.hpp"
#include "qtoda/equivariant.hpp"
#include "qtoda/qhring.hpp"

using namespace qtoda;

TEST_CASE("rank 1 and rank 2 shifted relations") {
  EquivariantPresentation e1 = build_equivariant(build_root_system(Family::A, 1));
  REQUIRE(e1.relations.size() == 1);
  CHECK(e1.relations[0] == Polynomial::parse(e1.table, "q1 - p1^2 + u1^2"));

  EquivariantPresentation e2 = build_equivariant(build_root_system(Family::A, 2));
  REQUIRE(e2.relations.size() == 2);
  CHECK(e2.relations[0] ==
        Polynomial::parse(e2.table, "-p1^2 + p1*p2 - p2^2 + q1 + q2 + u1^2 - u1*u2 + u2^2"));
  CHECK(e2.relations[1] ==
        Polynomial::parse(e2.table, "p1^2*p2 - p1*p2^2 - p2*q1 + p1*q2 - u1^2*u2 + u1*u2^2"));
  for (const auto& r : e2.relations) CHECK(r.is_homogeneous());
}

TEST_CASE("setting the torus parameters to zero recovers the quantum relations") {
  for (int rank : {1, 2, 3}) {
    RootSystem rs = build_root_system(Family::A, rank);
    EquivariantPresentation ep = build_equivariant(rs);
    Presentation pres = build_presentation(rs);
    REQUIRE(ep.relations.size() == pres.relations.size());
    std::map<size_t, Polynomial> kill_u;
    for (int i = 0; i < 2 * rank; ++i)
      kill_u[static_cast<size_t>(i)] = Polynomial::variable(ep.table, static_cast<size_t>(i));
    for (int i = 0; i < rank; ++i)
      kill_u[static_cast<size_t>(2 * rank + i)] = Polynomial::zero(ep.table);
    for (size_t v = 0; v < ep.relations.size(); ++v) {
      Polynomial dropped = ep.relations[v].substitute(ep.table, kill_u);
      // Land both on the p/q table by name to compare.
      CHECK(dropped.transplant(pres.table) == pres.relations[v]);
    }
  }
}

TEST_CASE("classical equivariant fibers all have the reflection group size") {
  // At q = 0 the quotient is free over the torus parameters, so every
  // specialization of u, generic or not, has the same dimension.
  std::mt19937_64 rng(53);
  std::uniform_int_distribution<long> num(-5, 5);
  for (int rank : {1, 2}) {
    RootSystem rs = build_root_system(Family::A, rank);
    EquivariantPresentation ep = build_equivariant(rs);
    VarTableRef ptab = momentum_table("p", rank);
    for (int trial = 0; trial < 3; ++trial) {
      std::map<size_t, Polynomial> img;
      for (int i = 0; i < rank; ++i) {
        img[static_cast<size_t>(i)] = Polynomial::variable(ptab, static_cast<size_t>(i));
        img[static_cast<size_t>(rank + i)] = Polynomial::zero(ptab);  // q = 0
        img[static_cast<size_t>(2 * rank + i)] =
            Polynomial::constant(ptab, trial == 0 ? Rat(0) : Rat(num(rng)));
      }
      std::vector<Polynomial> fiber;
      for (const auto& r : ep.relations) fiber.push_back(r.substitute(ptab, img));
      GroebnerBasis gb = groebner_basis(fiber, MonomialOrder::wdegrevlex(ptab));
      REQUIRE(gb.is_zero_dimensional());
      CHECK(gb.standard_monomials(-1).size() == static_cast<size_t>(rs.weyl_order));
    }
  }
}

TEST_CASE("projective line identity") {
  P1ExampleReport rep = p1_example_check();
  CHECK(rep.relation_matches);
  CHECK(rep.factorization_matches);
  CHECK(rep.q_zero_ok);
  CHECK(rep.u_zero_ok);
  CHECK(rep.all_pass());
}

TEST_CASE("unsupported inputs are rejected") {
  CHECK_THROWS_WITH_AS(build_equivariant(build_root_system(Family::B, 2)),
                       "equivariant presentations are implemented for family A only",
                       std::invalid_argument);
  CHECK_THROWS_AS(build_equivariant(build_root_system(Family::A, 5)), std::invalid_argument);
}

TEST_CASE("json carries the torus extension next to the plain presentation") {
  RootSystem rs = build_root_system(Family::A, 2);
  EquivariantPresentation ep = build_equivariant(rs);
  nlohmann::json j = nlohmann::json::parse(equivariant_json(ep));
  CHECK(j["family"] == "A");
  CHECK(j["rank"] == 2);
  CHECK(j["weyl_order"] == 6);
  REQUIRE(j["equivariant_variables"].size() == 2);
  CHECK(j["equivariant_variables"][0]["name"] == "u1");
  CHECK(j["equivariant_variables"][0]["weight"] == 1);
  REQUIRE(j["equivariant_relations"].size() == 2);
  for (size_t v = 0; v < 2; ++v) {
    Polynomial back =
        Polynomial::parse(ep.table, j["equivariant_relations"][v].get<std::string>());
    CHECK(back == ep.relations[v]);
  }
  // The plain relations are still the quantum ones.
  Presentation pres = build_presentation(rs);
  for (size_t v = 0; v < 2; ++v)
    CHECK(j["relations"][v].get<std::string>() == pres.relations[v].to_string());
}
