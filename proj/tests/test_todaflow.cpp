#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "json.hpp"
#include "qtoda/todaflow.hpp"
#include "test_util.hpp"

using namespace qtoda;

namespace {

Polynomial var(const VarTableRef& t, size_t i) { return Polynomial::variable(t, i); }

double max_abs_diff(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::fabs(a[i] - b[i]));
  return worst;
}

}  // namespace

TEST_CASE("bracket coefficients per family") {
  BracketTable a2 = bracket_table(build_root_system(Family::A, 2));
  CHECK(a2.kappa == std::vector<std::vector<Rat>>{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}});

  BracketTable b2 = bracket_table(build_root_system(Family::B, 2));
  CHECK(b2.kappa == std::vector<std::vector<Rat>>{{Rat(1), Rat(0)}, {Rat(-1), Rat(2)}});

  BracketTable b3 = bracket_table(build_root_system(Family::B, 3));
  CHECK(b3.kappa == std::vector<std::vector<Rat>>{{Rat(1), Rat(0), Rat(0)},
                                                  {Rat(-1), Rat(1), Rat(0)},
                                                  {Rat(0), Rat(-1), Rat(2)}});
}

TEST_CASE("brackets of coordinates") {
  RootSystem a2 = build_root_system(Family::A, 2);
  VarTableRef pq = momentum_q_table("p", 2);
  CHECK(poisson_bracket(a2, var(pq, 0), var(pq, 2)) == var(pq, 2));  // {p1, q1} = q1
  CHECK(poisson_bracket(a2, var(pq, 0), var(pq, 3)).is_zero());      // {p1, q2} = 0
  CHECK(poisson_bracket(a2, var(pq, 2), var(pq, 3)).is_zero());      // {q1, q2} = 0
  CHECK(poisson_bracket(a2, var(pq, 0), var(pq, 1)).is_zero());      // {p1, p2} = 0

  RootSystem b2 = build_root_system(Family::B, 2);
  VarTableRef xq = momentum_q_table("x", 2);
  CHECK(poisson_bracket(b2, var(xq, 0), var(xq, 2)) == var(xq, 2));             // {x1, q1} = q1
  CHECK(poisson_bracket(b2, var(xq, 1), var(xq, 2)) == var(xq, 2).scaled(Rat(-1)));
  CHECK(poisson_bracket(b2, var(xq, 1), var(xq, 3)) == var(xq, 3).scaled(Rat(2)));
  CHECK(poisson_bracket(b2, var(xq, 0), var(xq, 3)).is_zero());
}

TEST_CASE("bracket is an antisymmetric biderivation satisfying Jacobi") {
  std::mt19937_64 rng(41);
  for (Family fam : {Family::A, Family::B}) {
    RootSystem rs = build_root_system(fam, 2);
    VarTableRef t = momentum_q_table(fam == Family::B ? "x" : "p", 2);
    for (int it = 0; it < 8; ++it) {
      Polynomial f = testutil::random_poly(rng, t, 4, 2);
      Polynomial g = testutil::random_poly(rng, t, 4, 2);
      Polynomial h = testutil::random_poly(rng, t, 4, 2);
      CHECK(poisson_bracket(rs, f, g) == poisson_bracket(rs, g, f).scaled(Rat(-1)));
      CHECK(poisson_bracket(rs, f * g, h) ==
            f * poisson_bracket(rs, g, h) + poisson_bracket(rs, f, h) * g);
      Polynomial jac = poisson_bracket(rs, f, poisson_bracket(rs, g, h)) +
                       poisson_bracket(rs, g, poisson_bracket(rs, h, f)) +
                       poisson_bracket(rs, h, poisson_bracket(rs, f, g));
      CHECK(jac.is_zero());
    }
  }
}

TEST_CASE("conserved quantities commute pairwise") {
  for (auto [fam, rk] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                         {Family::B, 3}}) {
    IntegrabilityVerdict v = conservation_selfcheck(build_root_system(fam, rk));
    CHECK(v.all_zero);
    CHECK(v.witness.is_zero());
  }
  CHECK_THROWS_AS(conservation_selfcheck(build_root_system(Family::A, 5)),
                  std::invalid_argument);
}

TEST_CASE("a coordinate is visibly not conserved") {
  RootSystem a2 = build_root_system(Family::A, 2);
  VarTableRef pq = momentum_q_table("p", 2);
  ConservedSet cs = conserved_quantities(build_lax(a2));
  CHECK_FALSE(poisson_bracket(a2, cs.J[0], var(pq, 2)).is_zero());
}

TEST_CASE("mismatched tables are rejected") {
  RootSystem a2 = build_root_system(Family::A, 2);
  VarTableRef xq = momentum_q_table("x", 2);
  CHECK_THROWS_AS(poisson_bracket(a2, var(xq, 0), var(xq, 1)), std::invalid_argument);
}

TEST_CASE("drift benchmark on the rank 2 lattice") {
  RootSystem a2 = build_root_system(Family::A, 2);
  FlowState init{{0.3, -0.2}, {0.0, 0.0}, 0.0};

  DriftReport fine = hamiltonian_flow(a2, init, 1e-3, 10.0, Integrator::RK4);
  REQUIRE(fine.initial_values.size() == 2);
  CHECK(fine.initial_values[0] == doctest::Approx(-2.19).epsilon(1e-12));
  CHECK(fine.initial_values[1] == doctest::Approx(-0.53).epsilon(1e-12));
  for (double d : fine.max_rel_drift) CHECK(d <= 1e-8);

  // Fourth order integrator: halving dt divides the drift by about 16.
  DriftReport coarse = hamiltonian_flow(a2, init, 1e-2, 10.0, Integrator::RK4);
  DriftReport halved = hamiltonian_flow(a2, init, 5e-3, 10.0, Integrator::RK4);
  for (size_t v = 0; v < 2; ++v) {
    const double ratio = coarse.max_rel_drift[v] / halved.max_rel_drift[v];
    CHECK(ratio >= 12.0);
    CHECK(ratio <= 20.0);
  }

  // Momentum flip runs the flow backwards.
  DriftReport fwd = hamiltonian_flow(a2, init, 1e-3, 10.0, Integrator::RK4);
  FlowState turned{{-fwd.final_state.m[0], -fwd.final_state.m[1]}, fwd.final_state.y, 0.0};
  DriftReport back = hamiltonian_flow(a2, turned, 1e-3, 10.0, Integrator::RK4);
  std::vector<double> recovered = {-back.final_state.m[0], -back.final_state.m[1]};
  CHECK(max_abs_diff(recovered, init.m) <= 1e-6);
  CHECK(max_abs_diff(back.final_state.y, init.y) <= 1e-6);
}

TEST_CASE("splitting integrator conserves and reverses") {
  RootSystem a2 = build_root_system(Family::A, 2);
  FlowState init{{0.3, -0.2}, {0.0, 0.0}, 0.0};
  DriftReport rep = hamiltonian_flow(a2, init, 1e-3, 10.0, Integrator::Leapfrog);
  for (double d : rep.max_rel_drift) CHECK(d <= 1e-5);

  // Kick-drift-kick is symmetric, so the reversed run retraces to roundoff.
  FlowState turned{{-rep.final_state.m[0], -rep.final_state.m[1]}, rep.final_state.y, 0.0};
  DriftReport back = hamiltonian_flow(a2, turned, 1e-3, 10.0, Integrator::Leapfrog);
  std::vector<double> recovered = {-back.final_state.m[0], -back.final_state.m[1]};
  CHECK(max_abs_diff(recovered, init.m) <= 1e-9);
  CHECK(max_abs_diff(back.final_state.y, init.y) <= 1e-9);
}

TEST_CASE("flow on the doubled family holds its invariants") {
  RootSystem b2 = build_root_system(Family::B, 2);
  FlowState init{{0.25, -0.15}, {0.1, -0.3}, 0.0};
  DriftReport rep = hamiltonian_flow(b2, init, 1e-3, 5.0, Integrator::RK4);
  for (double d : rep.max_rel_drift) CHECK(d <= 1e-8);
}

TEST_CASE("zero horizon leaves the state alone") {
  RootSystem a2 = build_root_system(Family::A, 2);
  FlowState init{{0.3, -0.2}, {0.0, 0.0}, 0.0};
  DriftReport rep = hamiltonian_flow(a2, init, 1e-3, 0.0, Integrator::RK4, 3);
  CHECK(rep.final_state.m == init.m);
  CHECK(rep.final_state.y == init.y);
  for (double d : rep.max_rel_drift) CHECK(d == 0.0);
  CHECK(rep.samples.size() == 1);  // only the initial sample
}

TEST_CASE("sampling stride covers the whole run") {
  RootSystem a2 = build_root_system(Family::A, 2);
  FlowState init{{0.3, -0.2}, {0.0, 0.0}, 0.0};
  DriftReport rep = hamiltonian_flow(a2, init, 0.1, 1.0, Integrator::RK4, 5);
  REQUIRE(rep.samples.size() == 6);
  CHECK(rep.samples.front().t == 0.0);
  CHECK(rep.samples.back().t == doctest::Approx(1.0));
  for (size_t i = 1; i < rep.samples.size(); ++i)
    CHECK(rep.samples[i].t > rep.samples[i - 1].t);
}

TEST_CASE("bad flow inputs are rejected before stepping") {
  RootSystem a2 = build_root_system(Family::A, 2);
  FlowState init{{0.3, -0.2}, {0.0, 0.0}, 0.0};
  CHECK_THROWS_AS(hamiltonian_flow(a2, init, 0.0, 1.0, Integrator::RK4), std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian_flow(a2, init, -1e-3, 1.0, Integrator::RK4),
                  std::invalid_argument);
  CHECK_THROWS_AS(hamiltonian_flow(a2, init, 1e-3, -1.0, Integrator::RK4),
                  std::invalid_argument);
  FlowState bad_size{{0.3}, {0.0, 0.0}, 0.0};
  CHECK_THROWS_AS(hamiltonian_flow(a2, bad_size, 1e-3, 1.0, Integrator::RK4),
                  std::invalid_argument);
  FlowState bad_value{{0.3, std::nan("")}, {0.0, 0.0}, 0.0};
  CHECK_THROWS_AS(hamiltonian_flow(a2, bad_value, 1e-3, 1.0, Integrator::RK4),
                  std::invalid_argument);
}

TEST_CASE("divergent steps abort with the step index") {
  RootSystem a2 = build_root_system(Family::A, 2);
  FlowState init{{5.0, -5.0}, {5.0, 5.0}, 0.0};
  CHECK_THROWS_AS(hamiltonian_flow(a2, init, 50.0, 5000.0, Integrator::RK4),
                  std::runtime_error);
}

TEST_CASE("drift report serializes deterministically") {
  RootSystem a2 = build_root_system(Family::A, 2);
  FlowState init{{0.3, -0.2}, {0.0, 0.0}, 0.0};
  DriftReport rep = hamiltonian_flow(a2, init, 0.1, 1.0, Integrator::RK4, 2);
  const std::string text = drift_json(rep);
  DriftReport again = hamiltonian_flow(a2, init, 0.1, 1.0, Integrator::RK4, 2);
  CHECK(drift_json(again) == text);

  nlohmann::json j = nlohmann::json::parse(text);
  CHECK(j["family"] == "A");
  CHECK(j["rank"] == 2);
  CHECK(j["integrator"] == "rk4");
  CHECK(j["dt"] == 0.1);
  CHECK(j["t_end"] == 1.0);
  CHECK(j["initial"]["m"] == nlohmann::json::array({0.3, -0.2}));
  REQUIRE(j["max_rel_drift"].size() == 2);
  CHECK(j["samples"].size() == 3);
  CHECK(text.back() == '\n');
}
