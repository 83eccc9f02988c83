#include "qtoda/todaflow.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoda {

namespace {

VarTableRef native_table(const RootSystem& rs) {
  const char* prefix = rs.family == Family::B ? "x" : "p";
  return momentum_q_table(prefix, rs.rank);
}

}  // namespace

BracketTable bracket_table(const RootSystem& rs) {
  const size_t n = static_cast<size_t>(rs.rank);
  BracketTable bt;
  bt.kappa.assign(n, std::vector<Rat>(n, Rat(0)));
  if (rs.family == Family::A) {
    for (size_t i = 0; i < n; ++i) bt.kappa[i][i] = Rat(1);
    return bt;
  }
  // Family B: column j is the dual simple root in the epsilon basis, which
  // is also d(native x)/d(canonical m).
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < n; ++i) bt.kappa[i][j] = rs.dual_simple_roots[j][i];
  }
  return bt;
}

Polynomial poisson_bracket(const RootSystem& rs, const Polynomial& f, const Polynomial& g) {
  const VarTableRef table = native_table(rs);
  if (!f.table()->same_as(*table) || !g.table()->same_as(*table)) {
    throw std::invalid_argument("poisson_bracket expects both arguments over the native momentum/q table");
  }
  const size_t n = static_cast<size_t>(rs.rank);
  const BracketTable bt = bracket_table(rs);
  Polynomial acc = Polynomial::zero(table);
  for (size_t i = 0; i < n; ++i) {
    const Polynomial fm = f.derivative(i);
    const Polynomial gm = g.derivative(i);
    if (fm.is_zero() && gm.is_zero()) continue;
    for (size_t j = 0; j < n; ++j) {
      if (bt.kappa[i][j] == 0) continue;
      const Polynomial fq = f.derivative(n + j);
      const Polynomial gq = g.derivative(n + j);
      Polynomial piece = fm * gq - fq * gm;
      if (piece.is_zero()) continue;
      acc += (piece * Polynomial::variable(table, n + j)).scaled(bt.kappa[i][j]);
    }
  }
  return acc;
}

IntegrabilityVerdict conservation_selfcheck(const RootSystem& rs) {
  if (rs.rank > 4) {
    throw std::invalid_argument("conservation self-check is desk scale; rank must be at most 4");
  }
  const ConservedSet cs = conserved_quantities(build_lax(rs));
  IntegrabilityVerdict verdict;
  verdict.witness = Polynomial::zero(native_table(rs));
  for (size_t u = 0; u < cs.J.size(); ++u) {
    for (size_t v = u + 1; v < cs.J.size(); ++v) {
      Polynomial w = poisson_bracket(rs, cs.J[u], cs.J[v]);
      if (!w.is_zero()) {
        verdict.all_zero = false;
        verdict.first_u = u + 1;
        verdict.first_v = v + 1;
        verdict.witness = w;
        return verdict;
      }
    }
  }
  return verdict;
}

const char* integrator_name(Integrator i) {
  return i == Integrator::RK4 ? "rk4" : "leapfrog";
}

namespace {

// Numeric view of the flow: canonical (m, y), native momenta x = kappa * m,
// Lax coordinates q_j = -exp(y_j).
struct FlowContext {
  size_t n = 0;
  std::vector<std::vector<double>> kappa;
  std::vector<Polynomial> conserved;  // J_v over the native table
  std::vector<Polynomial> ham_mom;    // d(-J_1)/d(native momentum k)
  std::vector<double> ham_q;          // d(-J_1)/dq_j, constant for J_1

  explicit FlowContext(const RootSystem& rs) {
    n = static_cast<size_t>(rs.rank);
    const BracketTable bt = bracket_table(rs);
    kappa.assign(n, std::vector<double>(n, 0.0));
    for (size_t i = 0; i < n; ++i) {
      for (size_t j = 0; j < n; ++j) kappa[i][j] = mpq_get_d(bt.kappa[i][j].get_mpq_t());
    }
    conserved = conserved_quantities(build_lax(rs)).J;
    const Polynomial ham = -conserved[0];
    const std::vector<double> origin(2 * n, 0.0);
    for (size_t k = 0; k < n; ++k) ham_mom.push_back(ham.derivative(k));
    for (size_t j = 0; j < n; ++j) ham_q.push_back(ham.derivative(n + j).eval_double(origin));
  }

  std::vector<double> lax_point(const std::vector<double>& m, const std::vector<double>& y) const {
    std::vector<double> point(2 * n, 0.0);
    for (size_t k = 0; k < n; ++k) {
      double xk = 0.0;
      for (size_t j = 0; j < n; ++j) xk += kappa[k][j] * m[j];
      point[k] = xk;
    }
    for (size_t j = 0; j < n; ++j) point[n + j] = -std::exp(y[j]);
    return point;
  }

  // dm/dt = -dH/dy_j = -ham_q[j] * q_j; depends on y only.
  void mdot(const std::vector<double>& y, std::vector<double>& out) const {
    for (size_t j = 0; j < n; ++j) out[j] = ham_q[j] * std::exp(y[j]);
  }

  // dy/dt = dH/dm_i = sum_k dH/dx_k * kappa_ki; depends on m only.
  void ydot(const std::vector<double>& m, std::vector<double>& out) const {
    std::vector<double> point(2 * n, 0.0);
    for (size_t k = 0; k < n; ++k) {
      double xk = 0.0;
      for (size_t j = 0; j < n; ++j) xk += kappa[k][j] * m[j];
      point[k] = xk;
    }
    std::vector<double> hm(n, 0.0);
    for (size_t k = 0; k < n; ++k) hm[k] = ham_mom[k].eval_double(point);
    for (size_t i = 0; i < n; ++i) {
      double s = 0.0;
      for (size_t k = 0; k < n; ++k) s += hm[k] * kappa[k][i];
      out[i] = s;
    }
  }

  std::vector<double> values(const std::vector<double>& m, const std::vector<double>& y) const {
    const std::vector<double> point = lax_point(m, y);
    std::vector<double> vals;
    vals.reserve(conserved.size());
    for (const Polynomial& J : conserved) vals.push_back(J.eval_double(point));
    return vals;
  }
};

void rk4_step(const FlowContext& ctx, std::vector<double>& m, std::vector<double>& y, double dt) {
  const size_t n = ctx.n;
  std::vector<double> km1(n), ky1(n), km2(n), ky2(n), km3(n), ky3(n), km4(n), ky4(n);
  std::vector<double> mt(n), yt(n);
  ctx.mdot(y, km1);
  ctx.ydot(m, ky1);
  for (size_t i = 0; i < n; ++i) {
    mt[i] = m[i] + 0.5 * dt * km1[i];
    yt[i] = y[i] + 0.5 * dt * ky1[i];
  }
  ctx.mdot(yt, km2);
  ctx.ydot(mt, ky2);
  for (size_t i = 0; i < n; ++i) {
    mt[i] = m[i] + 0.5 * dt * km2[i];
    yt[i] = y[i] + 0.5 * dt * ky2[i];
  }
  ctx.mdot(yt, km3);
  ctx.ydot(mt, ky3);
  for (size_t i = 0; i < n; ++i) {
    mt[i] = m[i] + dt * km3[i];
    yt[i] = y[i] + dt * ky3[i];
  }
  ctx.mdot(yt, km4);
  ctx.ydot(mt, ky4);
  for (size_t i = 0; i < n; ++i) {
    m[i] += dt / 6.0 * (km1[i] + 2.0 * km2[i] + 2.0 * km3[i] + km4[i]);
    y[i] += dt / 6.0 * (ky1[i] + 2.0 * ky2[i] + 2.0 * ky3[i] + ky4[i]);
  }
}

// Kick-drift-kick; valid because H = T(m) + V(y) splits exactly.
void leapfrog_step(const FlowContext& ctx, std::vector<double>& m, std::vector<double>& y, double dt) {
  const size_t n = ctx.n;
  std::vector<double> km(n), ky(n);
  ctx.mdot(y, km);
  for (size_t i = 0; i < n; ++i) m[i] += 0.5 * dt * km[i];
  ctx.ydot(m, ky);
  for (size_t i = 0; i < n; ++i) y[i] += dt * ky[i];
  ctx.mdot(y, km);
  for (size_t i = 0; i < n; ++i) m[i] += 0.5 * dt * km[i];
}

bool all_finite(const std::vector<double>& v) {
  for (double x : v) {
    if (!std::isfinite(x)) return false;
  }
  return true;
}

std::string fmt_double(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string fmt_array(const std::vector<double>& v) {
  std::string out = "[";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += fmt_double(v[i]);
  }
  out += "]";
  return out;
}

}  // namespace

DriftReport hamiltonian_flow(const RootSystem& rs, const FlowState& initial, double dt,
                             double t_end, Integrator integrator, int sample_count) {
  const size_t n = static_cast<size_t>(rs.rank);
  if (!(dt > 0.0) || !std::isfinite(dt)) throw std::invalid_argument("dt must be positive and finite");
  if (!(t_end >= 0.0) || !std::isfinite(t_end)) throw std::invalid_argument("t_end must be nonnegative and finite");
  if (initial.m.size() != n || initial.y.size() != n) {
    throw std::invalid_argument("initial state must carry rank momenta and rank positions");
  }
  if (!all_finite(initial.m) || !all_finite(initial.y)) {
    throw std::invalid_argument("initial state must be finite");
  }

  const FlowContext ctx(rs);
  const long long steps = std::llround(t_end / dt);

  DriftReport report;
  report.family = rs.family;
  report.rank = rs.rank;
  report.integrator = integrator;
  report.dt = dt;
  report.t_end = t_end;
  report.initial = initial;
  report.initial.time = 0.0;
  report.initial_values = ctx.values(initial.m, initial.y);
  report.max_rel_drift.assign(ctx.conserved.size(), 0.0);

  long long stride = 0;
  if (sample_count > 0) {
    stride = steps / sample_count;
    if (stride < 1) stride = 1;
    report.samples.push_back({0.0, initial.m, initial.y});
  }

  std::vector<double> m = initial.m;
  std::vector<double> y = initial.y;
  for (long long step = 0; step < steps; ++step) {
    if (integrator == Integrator::RK4) {
      rk4_step(ctx, m, y, dt);
    } else {
      leapfrog_step(ctx, m, y, dt);
    }
    if (!all_finite(m) || !all_finite(y)) {
      throw std::runtime_error("nonfinite state at step " + std::to_string(step + 1));
    }
    const std::vector<double> vals = ctx.values(m, y);
    for (size_t v = 0; v < vals.size(); ++v) {
      const double ref = std::max(1.0, std::fabs(report.initial_values[v]));
      const double rel = std::fabs(vals[v] - report.initial_values[v]) / ref;
      if (rel > report.max_rel_drift[v]) report.max_rel_drift[v] = rel;
    }
    if (stride > 0 && ((step + 1) % stride == 0 || step + 1 == steps)) {
      report.samples.push_back({static_cast<double>(step + 1) * dt, m, y});
    }
  }

  report.final_state.m = m;
  report.final_state.y = y;
  report.final_state.time = static_cast<double>(steps) * dt;
  return report;
}

std::string drift_json(const DriftReport& report) {
  std::string out = "{\n";
  out += "  \"family\": \"" + std::string(family_name(report.family)) + "\",\n";
  out += "  \"rank\": " + std::to_string(report.rank) + ",\n";
  out += "  \"integrator\": \"" + std::string(integrator_name(report.integrator)) + "\",\n";
  out += "  \"dt\": " + fmt_double(report.dt) + ",\n";
  out += "  \"t_end\": " + fmt_double(report.t_end) + ",\n";
  out += "  \"initial\": {\n";
  out += "    \"m\": " + fmt_array(report.initial.m) + ",\n";
  out += "    \"y\": " + fmt_array(report.initial.y) + "\n";
  out += "  },\n";
  out += "  \"max_rel_drift\": " + fmt_array(report.max_rel_drift);
  if (!report.samples.empty()) {
    out += ",\n  \"samples\": [\n";
    for (size_t i = 0; i < report.samples.size(); ++i) {
      const FlowSample& s = report.samples[i];
      out += "    {\"t\": " + fmt_double(s.t) + ", \"m\": " + fmt_array(s.m) +
             ", \"y\": " + fmt_array(s.y) + "}";
      if (i + 1 < report.samples.size()) out += ",";
      out += "\n";
    }
    out += "  ]";
  }
  out += "\n}\n";
  return out;
}

}  // namespace qtoda
