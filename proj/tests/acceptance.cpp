// Acceptance gate: every release-blocking check in one binary, one verdict
// line per criterion, nonzero exit when anything fails. Tolerances and time
// budgets are part of the verdict.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"
#include "qtoda/cli.hpp"
#include "qtoda/detpoly.hpp"
#include "qtoda/equivariant.hpp"
#include "qtoda/qdmodule.hpp"
#include "qtoda/qhring.hpp"
#include "qtoda/todaflow.hpp"
#include "qtoda/weylquant.hpp"

using namespace qtoda;

namespace {

int failures = 0;

void criterion(int index, const std::string& label, double budget_seconds,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  const auto start = std::chrono::steady_clock::now();
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
    ok = false;
  }
  const double elapsed =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (elapsed > budget_seconds) {
    ok = false;
    detail += (detail.empty() ? "" : "; ") + std::string("over time budget of ") +
              std::to_string(budget_seconds) + "s";
  }
  if (!ok) ++failures;
  std::printf("criterion %2d: %s (%.3fs) %s%s%s\n", index, ok ? "PASS" : "FAIL", elapsed,
              label.c_str(), detail.empty() ? "" : " -- ", detail.c_str());
  std::fflush(stdout);
}

bool mutual_ideal_equality(const std::vector<Polynomial>& ours,
                           const std::vector<Polynomial>& frozen, const VarTableRef& table) {
  GroebnerBasis gb_ours = groebner_basis(ours, MonomialOrder::wdegrevlex(table));
  GroebnerBasis gb_frozen = groebner_basis(frozen, MonomialOrder::wdegrevlex(table));
  for (const auto& f : frozen) {
    if (!gb_ours.normal_form(f).is_zero()) return false;
  }
  for (const auto& f : ours) {
    if (!gb_frozen.normal_form(f).is_zero()) return false;
  }
  return true;
}

}  // namespace

int main() {
  std::printf("acceptance checks\n");

  criterion(1, "rank 2 presentation equals the frozen relation pair", 1.0, [](std::string& d) {
    auto r = cli::run({"present", "--family", "A", "--rank", "2", "--format", "json"});
    if (r.exit_code != 0) {
      d = "cli exit " + std::to_string(r.exit_code);
      return false;
    }
    nlohmann::json doc = nlohmann::json::parse(r.out);
    VarTableRef table = momentum_q_table("p", 2);
    std::vector<Polynomial> ours;
    for (const auto& rel : doc["relations"])
      ours.push_back(Polynomial::parse(table, rel.get<std::string>()));
    const std::vector<Polynomial> frozen = {
        Polynomial::parse(table, "-p1^2 - p2^2 + p1*p2 + q1 + q2"),
        Polynomial::parse(table, "p1^2*p2 - p1*p2^2 + p1*q2 - p2*q1"),
    };
    if (ours.size() != 2) {
      d = "expected two relations";
      return false;
    }
    return mutual_ideal_equality(ours, frozen, table);
  });

  criterion(2, "quadratic form lies in both relation ideals", 2.0, [](std::string& d) {
    Presentation a2 = build_presentation(build_root_system(Family::A, 2));
    Polynomial fa =
        Polynomial::parse(a2.table, "2*p1^2 + 2*p2^2 - 2*p1*p2 - 2*q1 - 2*q2");
    if (!reduce_class(a2, fa).is_zero()) {
      d = "rank 2 image " + reduce_class(a2, fa).to_string();
      return false;
    }
    Presentation b2 = build_presentation(build_root_system(Family::B, 2), Coords::P);
    Polynomial fb =
        Polynomial::parse(b2.table, "2*p1^2 + 4*p2^2 - 4*p1*p2 - 2*q1 - 4*q2");
    if (!reduce_class(b2, fb).is_zero()) {
      d = "doubled rank 2 image " + reduce_class(b2, fb).to_string();
      return false;
    }
    return true;
  });

  criterion(3, "q = 0 dimensions and Poincare polynomials", 180.0, [](std::string& d) {
    const std::vector<std::tuple<Family, int, long>> cases = {
        {Family::A, 1, 2},  {Family::A, 2, 6},  {Family::A, 3, 24},
        {Family::A, 4, 120}, {Family::B, 2, 8},  {Family::B, 3, 48},
    };
    for (const auto& [fam, rk, order] : cases) {
      const auto t0 = std::chrono::steady_clock::now();
      Presentation pres = build_presentation(build_root_system(fam, rk));
      ClassicalReport rep = classical_limit_report(pres);
      const double dt =
          std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      if (!rep.all_pass() || rep.dimension != order) {
        d = std::string(family_name(fam)) + std::to_string(rk) + " dimension " +
            std::to_string(rep.dimension) + " expected " + std::to_string(order);
        return false;
      }
      if (dt > 30.0) {
        d = std::string(family_name(fam)) + std::to_string(rk) + " took " +
            std::to_string(dt) + "s, budget 30s per case";
        return false;
      }
    }
    return true;
  });

  criterion(4, "free rank at three random parameter points per case", 60.0,
            [](std::string& d) {
    for (auto [fam, rk] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2}}) {
      Presentation pres = build_presentation(build_root_system(fam, rk));
      RankProbeReport rep = free_rank_probe(pres, 3, 2026);
      if (!rep.all_match()) {
        d = std::string(family_name(fam)) + std::to_string(rk) + " dimension mismatch";
        return false;
      }
    }
    return true;
  });

  criterion(5, "series annihilation and the frozen rank 1 sector", 30.0, [](std::string& d) {
    RootSystem a1 = build_root_system(Family::A, 1);
    SeriesSolution s = solve_series(a1, 4);
    const std::string got = s.sectors.at({1}).to_string();
    if (got != "h^-2 - 2*p1*h^-3") {
      d = "sector 1 is " + got;
      return false;
    }
    auto v1 = check_annihilation(a1, {build_hamiltonian(a1)}, 4);
    if (!v1[0].annihilates) {
      d = "rank 1 residual " + v1[0].first_residual;
      return false;
    }
    RootSystem a2 = build_root_system(Family::A, 2);
    auto v2 = check_annihilation(a2, {build_hamiltonian(a2)}, 3);
    if (!v2[0].annihilates) {
      d = "rank 2 residual " + v2[0].first_residual;
      return false;
    }
    return true;
  });

  criterion(6, "cubic quantization with exact side conditions", 60.0, [](std::string& d) {
    RootSystem a2 = build_root_system(Family::A, 2);
    WeylOp H = build_hamiltonian(a2);
    const Polynomial cubic = conserved_quantities(build_lax(a2)).J[1];
    QuantizeReport rep = quantize_integral(a2, cubic);
    if (rep.representative.is_zero()) {
      d = "empty representative";
      return false;
    }
    if (!commutator(rep.representative, H).is_zero()) {
      d = "does not commute";
      return false;
    }
    if (symbol(rep.representative) != cubic) {
      d = "symbol mismatch";
      return false;
    }
    Polynomial mq = mod_q(rep.representative);
    for (size_t i = 0; i < mq.table()->size(); ++i) {
      if (mq.table()->vars()[i].name == "h" && !mq.derivative(i).is_zero()) {
        d = "Q-free part carries h";
        return false;
      }
    }
    auto verdicts = check_annihilation(a2, {rep.representative}, 3);
    if (!verdicts[0].annihilates) {
      d = "fails on the series at sector residual " + verdicts[0].first_residual;
      return false;
    }
    QuantizeReport quad = quantize_integral(a2, symbol(H));
    if (quad.representative != H) {
      d = "quadratic did not return the distinguished operator";
      return false;
    }
    return true;
  });

  criterion(7, "pairwise vanishing brackets of the conserved quantities", 60.0,
            [](std::string& d) {
    for (auto [fam, rk] : {std::pair{Family::A, 2}, {Family::A, 3}, {Family::B, 2},
                           {Family::B, 3}}) {
      IntegrabilityVerdict v = conservation_selfcheck(build_root_system(fam, rk));
      if (!v.all_zero) {
        d = std::string(family_name(fam)) + std::to_string(rk) + " pair (" +
            std::to_string(v.first_u) + "," + std::to_string(v.first_v) + ")";
        return false;
      }
    }
    return true;
  });

  criterion(8, "numeric conservation benchmark", 10.0, [](std::string& d) {
    RootSystem a2 = build_root_system(Family::A, 2);
    FlowState init{{0.3, -0.2}, {0.0, 0.0}, 0.0};
    DriftReport fine = hamiltonian_flow(a2, init, 1e-3, 10.0, Integrator::RK4);
    for (double drift : fine.max_rel_drift) {
      if (!(drift <= 1e-8)) {
        d = "drift " + std::to_string(drift) + " above 1e-8";
        return false;
      }
    }
    DriftReport coarse = hamiltonian_flow(a2, init, 1e-2, 10.0, Integrator::RK4);
    DriftReport halved = hamiltonian_flow(a2, init, 5e-3, 10.0, Integrator::RK4);
    for (size_t v = 0; v < coarse.max_rel_drift.size(); ++v) {
      const double ratio = coarse.max_rel_drift[v] / halved.max_rel_drift[v];
      if (!(ratio >= 12.0 && ratio <= 20.0)) {
        d = "halving ratio " + std::to_string(ratio) + " outside [12, 20]";
        return false;
      }
    }
    FlowState turned{{-fine.final_state.m[0], -fine.final_state.m[1]}, fine.final_state.y,
                     0.0};
    DriftReport back = hamiltonian_flow(a2, turned, 1e-3, 10.0, Integrator::RK4);
    const double dm0 = std::fabs(-back.final_state.m[0] - init.m[0]);
    const double dm1 = std::fabs(-back.final_state.m[1] - init.m[1]);
    const double dy0 = std::fabs(back.final_state.y[0] - init.y[0]);
    const double dy1 = std::fabs(back.final_state.y[1] - init.y[1]);
    const double worst = std::max(std::max(dm0, dm1), std::max(dy0, dy1));
    if (!(worst <= 1e-6)) {
      d = "round trip error " + std::to_string(worst);
      return false;
    }
    return true;
  });

  criterion(9, "rank 1 equivariant worked example", 1.0, [](std::string& d) {
    P1ExampleReport rep = p1_example_check();
    if (!rep.relation_matches) d = "relation mismatch";
    if (!rep.factorization_matches) d = "factorization mismatch";
    if (!rep.q_zero_ok) d = "q = 0 specialization failed";
    if (!rep.u_zero_ok) d = "u = 0 specialization failed";
    return rep.all_pass();
  });

  criterion(10, "performance floor on the large cases", 65.0, [](std::string& d) {
    const auto t0 = std::chrono::steady_clock::now();
    LaxMatrix b4 = build_lax(build_root_system(Family::B, 4));
    std::vector<Polynomial> coeffs = char_poly_det(b4.entries);
    const double det_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (coeffs.size() != 9) {
      d = "unexpected characteristic polynomial size";
      return false;
    }
    if (det_time > 5.0) {
      d = "8x8 characteristic polynomial took " + std::to_string(det_time) + "s, budget 5s";
      return false;
    }
    const auto t1 = std::chrono::steady_clock::now();
    Presentation b3 = build_presentation(build_root_system(Family::B, 3));
    ClassicalReport rep = classical_limit_report(b3);
    const double b3_time =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t1).count();
    if (!rep.all_pass()) {
      d = "rank 3 doubled family classical check failed";
      return false;
    }
    if (b3_time > 60.0) {
      d = "rank 3 presentation and check took " + std::to_string(b3_time) + "s, budget 60s";
      return false;
    }
    return true;
  });

  if (failures == 0) {
    std::printf("all criteria passed\n");
    return 0;
  }
  std::printf("%d criterion(s) failed\n", failures);
  return 1;
}
