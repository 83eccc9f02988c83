#pragma once

#include <string>
#include <vector>

#include "qtoda/laxtoda.hpp"
#include "qtoda/polynomial.hpp"
#include "qtoda/rootdata.hpp"

namespace qtoda {

// Poisson structure on the native Lax variables: {mom_i, q_j} = kappa_ij q_j
// with all momentum-momentum and q-q brackets zero. Family A has kappa = I;
// family B's diagonal coordinates give kappa_ij = (dual alpha_j, eps_i),
// the Jacobian of x with respect to the canonical momenta.
struct BracketTable {
  std::vector<std::vector<Rat>> kappa;
};

BracketTable bracket_table(const RootSystem& rs);

// Exact bracket of two polynomials over the native momentum/q table,
// extended from BracketTable by the Leibniz rule.
Polynomial poisson_bracket(const RootSystem& rs, const Polynomial& f, const Polynomial& g);

struct IntegrabilityVerdict {
  bool all_zero = true;
  size_t first_u = 0;  // 1-based indices of the first failing pair
  size_t first_v = 0;
  Polynomial witness;
};

// Symbolically checks {J_u, J_v} = 0 for every pair (the Hamiltonian -J_1
// included). Rank is capped at 4.
IntegrabilityVerdict conservation_selfcheck(const RootSystem& rs);

// Phase-space point in canonical coordinates: m_i conjugate to y_i. The Lax
// q-variables ride along as q_j = -exp(y_j); that slice keeps the potential
// repulsive so trajectories exist globally, and every J_v is conserved on it
// because the brackets are polynomial identities.
struct FlowState {
  std::vector<double> m;
  std::vector<double> y;
  double time = 0.0;
};

enum class Integrator { RK4, Leapfrog };

const char* integrator_name(Integrator i);

struct FlowSample {
  double t = 0.0;
  std::vector<double> m;
  std::vector<double> y;
};

struct DriftReport {
  Family family = Family::A;
  int rank = 0;
  Integrator integrator = Integrator::RK4;
  double dt = 0.0;
  double t_end = 0.0;
  FlowState initial;
  FlowState final_state;
  std::vector<double> initial_values;   // J_v at t = 0
  std::vector<double> max_rel_drift;    // max_t |J_v(t)-J_v(0)| / max(1, |J_v(0)|)
  std::vector<FlowSample> samples;      // empty unless sampling was requested
};

// Integrates dy/dt = dH/dm, dm/dt = -dH/dy with H = -J_1 composed with the
// native coordinates (family B maps m to x linearly). Conservation drift is
// tracked every step for every J_v. steps = llround(t_end / dt); t_end = 0
// runs zero steps. A nonfinite state aborts with the offending step index.
// sample_count > 0 additionally records about that many evenly spaced states.
DriftReport hamiltonian_flow(const RootSystem& rs, const FlowState& initial, double dt,
                             double t_end, Integrator integrator, int sample_count = 0);

// {"family","rank","integrator","dt","t_end","initial","max_rel_drift"[,"samples"]}
// with every double printed via %.17g.
std::string drift_json(const DriftReport& report);

}  // namespace qtoda
