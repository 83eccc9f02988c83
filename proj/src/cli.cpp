#include "qtoda/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "qtoda/equivariant.hpp"
#include "qtoda/qdmodule.hpp"
#include "qtoda/qhring.hpp"
#include "qtoda/todaflow.hpp"
#include "qtoda/weylquant.hpp"

namespace qtoda::cli {

namespace {

using nlohmann::ordered_json;

std::string fmt17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

Family parse_family(const std::string& s) { return s == "B" ? Family::B : Family::A; }

Coords parse_coords(const std::string& s) { return s == "p" ? Coords::P : Coords::Native; }

std::vector<double> parse_double_list(const std::string& flag, const std::string& text) {
  std::vector<double> out;
  size_t start = 0;
  while (start <= text.size()) {
    size_t comma = text.find(',', start);
    const std::string tok = text.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
    size_t used = 0;
    double v = 0;
    try {
      v = std::stod(tok, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument(flag + ": cannot parse '" + tok + "' as a number");
    }
    if (used != tok.size()) {
      throw std::invalid_argument(flag + ": cannot parse '" + tok + "' as a number");
    }
    out.push_back(v);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string monomial_text(const VarTableRef& table, const Monomial& m) {
  return Polynomial::from_terms(table, {Term{m, Rat(1)}}).to_string();
}

std::string coords_label(Coords c) { return c == Coords::P ? "p coordinates" : "native coordinates"; }

std::string header_line(const RootSystem& rs) {
  return std::string("family ") + family_name(rs.family) + " rank " + std::to_string(rs.rank);
}

// Conserved quantity of the requested weighted degree, in p coordinates.
Polynomial integral_of_degree(const RootSystem& rs, int degree) {
  const ConservedSet cs = conserved_quantities(build_lax(rs));
  std::string available;
  for (const Polynomial& J : cs.J) {
    const Polynomial cand = rs.family == Family::B ? to_p_coordinates(rs, J) : J;
    if (cand.weighted_degree() == degree) return cand;
    if (!available.empty()) available += ", ";
    available += std::to_string(cand.weighted_degree());
  }
  throw std::invalid_argument("--degree: no conserved quantity of weighted degree " +
                              std::to_string(degree) + " (available: " + available + ")");
}

struct Payload {
  std::string text;
  bool pass = true;
};

struct CommonOpts {
  std::string family = "A";
  int rank = 1;
  std::string format = "text";
  std::string coords = "native";
};

Payload do_present(const CommonOpts& c) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const Presentation pres = build_presentation(rs, parse_coords(c.coords));
  Payload p;
  if (c.format == "json") {
    p.text = presentation_json(pres);
    return p;
  }
  std::string t = header_line(rs) + ", " + coords_label(pres.coords) + "\n";
  t += "variables:";
  for (const auto& v : pres.table->vars()) t += " " + v.name;
  t += "\nrelations:\n";
  for (const auto& r : pres.relations) t += "  " + r.to_string() + "\n";
  t += "reflection group order: " + std::to_string(rs.weyl_order) + "\n";
  t += "poincare: " + poincare_polynomial_flag(rs).to_string() + "\n";
  p.text = t;
  return p;
}

Payload do_reduce(const CommonOpts& c, const std::string& expr) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const Presentation pres = build_presentation(rs, parse_coords(c.coords));
  const Polynomial f = Polynomial::parse(pres.table, expr);
  const Polynomial nf = reduce_class(pres, f);
  Payload p;
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["coords"] = c.coords;
    j["input"] = expr;
    j["reduced"] = nf.to_string();
    p.text = j.dump(2);
  } else {
    p.text = nf.to_string() + "\n";
  }
  return p;
}

Payload do_multiply(const CommonOpts& c, const std::vector<std::string>& exprs) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const Presentation pres = build_presentation(rs, parse_coords(c.coords));
  Polynomial acc = Polynomial::constant(pres.table, Rat(1));
  for (const std::string& e : exprs) acc = quotient_multiply(pres, acc, Polynomial::parse(pres.table, e));
  Payload p;
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["coords"] = c.coords;
    j["inputs"] = exprs;
    j["product"] = acc.to_string();
    p.text = j.dump(2);
  } else {
    p.text = acc.to_string() + "\n";
  }
  return p;
}

Payload do_basis(const CommonOpts& c, long degree_bound) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const Presentation pres = build_presentation(rs, parse_coords(c.coords));
  const bool classical = degree_bound < 0;
  const GroebnerBasis& gb = classical ? pres.classical_basis : pres.full_basis;
  const VarTableRef& table = classical ? pres.classical_table : pres.table;
  const std::vector<Monomial> monos = gb.standard_monomials(degree_bound);
  Payload p;
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["coords"] = c.coords;
    j["mode"] = classical ? "classical" : "truncated";
    if (!classical) j["degree_bound"] = degree_bound;
    j["count"] = monos.size();
    j["monomials"] = ordered_json::array();
    for (const auto& m : monos) j["monomials"].push_back(monomial_text(table, m));
    p.text = j.dump(2);
    return p;
  }
  std::string t = header_line(rs) + ", " + coords_label(pres.coords);
  t += classical ? std::string(", q = 0 quotient") : (", weighted degree <= " + std::to_string(degree_bound));
  t += "\ncount: " + std::to_string(monos.size()) + "\n";
  for (const auto& m : monos) t += monomial_text(table, m) + "\n";
  p.text = t;
  return p;
}

Payload do_classical_check(const CommonOpts& c) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const Presentation pres = build_presentation(rs, parse_coords(c.coords));
  const ClassicalReport rep = classical_limit_report(pres);
  Payload p;
  p.pass = rep.all_pass();
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["coords"] = c.coords;
    j["zero_dimensional"] = rep.zero_dimensional;
    j["dimension"] = rep.dimension;
    j["expected_dimension"] = rep.expected_dimension;
    j["poincare"] = rep.poincare.to_string();
    j["expected_poincare"] = rep.expected_poincare.to_string();
    j["poincare_matches"] = rep.poincare_matches;
    j["diagonal_expression_ok"] = rep.diagonal_expression_ok;
    j["weyl_invariant"] = rep.weyl_invariant;
    j["pass"] = p.pass;
    p.text = j.dump(2);
    return p;
  }
  std::string t = header_line(rs) + ", " + coords_label(pres.coords) + "\n";
  t += "zero dimensional: " + yes_no(rep.zero_dimensional) + "\n";
  t += "dimension: " + std::to_string(rep.dimension) + ", expected " +
       std::to_string(rep.expected_dimension) + "\n";
  t += "poincare: " + rep.poincare.to_string() + "\n";
  t += "expected poincare: " + rep.expected_poincare.to_string() + "\n";
  t += "poincare match: " + yes_no(rep.poincare_matches) + "\n";
  t += "diagonal expressions:";
  for (bool b : rep.diagonal_expression_ok) t += " " + yes_no(b);
  t += "\nreflection invariance:";
  for (bool b : rep.weyl_invariant) t += " " + yes_no(b);
  t += "\n" + std::string(p.pass ? "PASS" : "FAIL") + "\n";
  p.text = t;
  return p;
}

Payload do_rank_probe(const CommonOpts& c, int samples, std::uint64_t seed) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const Presentation pres = build_presentation(rs, parse_coords(c.coords));
  const RankProbeReport rep = free_rank_probe(pres, samples, seed);
  Payload p;
  p.pass = rep.all_match();
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["coords"] = c.coords;
    j["seed"] = seed;
    j["samples"] = samples;
    j["expected"] = rep.expected;
    j["sample_points"] = ordered_json::array();
    for (const auto& row : rep.sample_points) {
      ordered_json pt = ordered_json::array();
      for (const auto& v : row) pt.push_back(rat_to_string(v));
      j["sample_points"].push_back(pt);
    }
    j["dimensions"] = rep.dimensions;
    j["pass"] = p.pass;
    p.text = j.dump(2);
    return p;
  }
  std::string t = header_line(rs) + ", " + coords_label(pres.coords) + ", seed " +
                  std::to_string(seed) + ", samples " + std::to_string(samples) + "\n";
  t += "expected dimension: " + std::to_string(rep.expected) + "\n";
  for (size_t i = 0; i < rep.sample_points.size(); ++i) {
    t += "q = (";
    for (size_t k = 0; k < rep.sample_points[i].size(); ++k) {
      if (k) t += ", ";
      t += rat_to_string(rep.sample_points[i][k]);
    }
    t += ") -> " + std::to_string(rep.dimensions[i]) + "\n";
  }
  t += std::string(p.pass ? "PASS" : "FAIL") + "\n";
  p.text = t;
  return p;
}

Payload do_dsolve(const CommonOpts& c, int cutoff) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const SeriesSolution s = solve_series(rs, cutoff);
  Payload p;
  if (c.format == "json") {
    p.text = series_json(s);
    return p;
  }
  std::vector<std::vector<int>> keys;
  for (const auto& [d, v] : s.sectors) keys.push_back(d);
  std::sort(keys.begin(), keys.end(), [](const std::vector<int>& a, const std::vector<int>& b) {
    int sa = 0, sb = 0;
    for (int x : a) sa += x;
    for (int x : b) sb += x;
    if (sa != sb) return sa < sb;
    return a < b;
  });
  std::string t = header_line(rs) + ", cutoff " + std::to_string(cutoff) + "\n";
  for (const auto& d : keys) {
    t += "s(";
    for (size_t i = 0; i < d.size(); ++i) {
      if (i) t += ",";
      t += std::to_string(d[i]);
    }
    t += ") = " + s.sectors.at(d).to_string() + "\n";
  }
  p.text = t;
  return p;
}

Payload do_quantize(const CommonOpts& c, int degree, const std::string& expr) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  Polynomial input = expr.empty()
                         ? integral_of_degree(rs, degree)
                         : Polynomial::parse(momentum_q_table("p", rs.rank), expr);
  const QuantizeReport rep = quantize_integral(rs, input);
  Payload p;
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["input"] = input.to_string();
    j["representative"] = rep.representative.to_string();
    j["ansatz_size"] = rep.ansatz_size;
    j["nullspace"] = ordered_json::array();
    for (const auto& op : rep.nullspace) j["nullspace"].push_back(op.to_string());
    p.text = j.dump(2);
    return p;
  }
  std::string t = header_line(rs) + "\n";
  t += "input: " + input.to_string() + "\n";
  t += "representative: " + rep.representative.to_string() + "\n";
  t += "ansatz size: " + std::to_string(rep.ansatz_size) + "\n";
  t += "nullspace dimension: " + std::to_string(rep.nullspace.size()) + "\n";
  for (const auto& op : rep.nullspace) t += "  " + op.to_string() + "\n";
  p.text = t;
  return p;
}

Payload do_annihilate(const CommonOpts& c, int cutoff, int degree) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  std::vector<WeylOp> ops = {build_hamiltonian(rs)};
  std::vector<std::string> names = {"hamiltonian"};
  if (degree > 0) {
    ops.push_back(quantize_integral(rs, integral_of_degree(rs, degree)).representative);
    names.push_back("quantized degree " + std::to_string(degree));
  }
  const std::vector<AnnihilationVerdict> verdicts = check_annihilation(rs, ops, cutoff);
  Payload p;
  for (const auto& v : verdicts) p.pass = p.pass && v.annihilates;
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["cutoff"] = cutoff;
    j["checks"] = ordered_json::array();
    for (size_t i = 0; i < verdicts.size(); ++i) {
      ordered_json v;
      v["operator"] = names[i];
      v["annihilates"] = verdicts[i].annihilates;
      if (!verdicts[i].annihilates) {
        v["first_sector"] = verdicts[i].first_sector;
        v["first_residual"] = verdicts[i].first_residual;
      }
      j["checks"].push_back(v);
    }
    j["pass"] = p.pass;
    p.text = j.dump(2);
    return p;
  }
  std::string t = header_line(rs) + ", cutoff " + std::to_string(cutoff) + "\n";
  for (size_t i = 0; i < verdicts.size(); ++i) {
    if (verdicts[i].annihilates) {
      t += names[i] + ": annihilates\n";
    } else {
      t += names[i] + ": fails at sector (";
      for (size_t k = 0; k < verdicts[i].first_sector.size(); ++k) {
        if (k) t += ",";
        t += std::to_string(verdicts[i].first_sector[k]);
      }
      t += ") with residual " + verdicts[i].first_residual + "\n";
    }
  }
  t += std::string(p.pass ? "PASS" : "FAIL") + "\n";
  p.text = t;
  return p;
}

Payload do_flow(const CommonOpts& c, const std::string& m_text, const std::string& y_text,
                double dt, double t_end, const std::string& integrator, int samples) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  FlowState init;
  init.m = parse_double_list("--m", m_text);
  init.y = parse_double_list("--y", y_text);
  const Integrator integ = integrator == "leapfrog" ? Integrator::Leapfrog : Integrator::RK4;
  const DriftReport rep = hamiltonian_flow(rs, init, dt, t_end, integ, samples);
  Payload p;
  if (c.format == "json") {
    p.text = drift_json(rep);
    return p;
  }
  std::string t = header_line(rs) + ", " + integrator_name(rep.integrator) + ", dt " +
                  fmt17(rep.dt) + ", t_end " + fmt17(rep.t_end) + "\n";
  auto line = [](const char* label, const std::vector<double>& v) {
    std::string s = label;
    for (double x : v) s += " " + fmt17(x);
    return s + "\n";
  };
  t += line("initial m:", rep.initial.m);
  t += line("initial y:", rep.initial.y);
  t += "steps: " + std::to_string(std::llround(t_end / dt)) + "\n";
  t += line("final m:", rep.final_state.m);
  t += line("final y:", rep.final_state.y);
  t += line("max relative drift:", rep.max_rel_drift);
  p.text = t;
  return p;
}

Payload do_poisson_check(const CommonOpts& c) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const IntegrabilityVerdict v = conservation_selfcheck(rs);
  const long pairs = static_cast<long>(rs.rank) * (rs.rank - 1) / 2;
  Payload p;
  p.pass = v.all_zero;
  if (c.format == "json") {
    ordered_json j;
    j["family"] = family_name(rs.family);
    j["rank"] = rs.rank;
    j["pairs"] = pairs;
    j["all_zero"] = v.all_zero;
    if (!v.all_zero) {
      j["first_pair"] = {v.first_u, v.first_v};
      j["witness"] = v.witness.to_string();
    }
    j["pass"] = p.pass;
    p.text = j.dump(2);
    return p;
  }
  std::string t = header_line(rs) + "\n";
  t += "pairs checked: " + std::to_string(pairs) + "\n";
  t += "all brackets vanish: " + yes_no(v.all_zero) + "\n";
  if (!v.all_zero) {
    t += "first failing pair: (" + std::to_string(v.first_u) + ", " + std::to_string(v.first_v) +
         ") with bracket " + v.witness.to_string() + "\n";
  }
  t += std::string(p.pass ? "PASS" : "FAIL") + "\n";
  p.text = t;
  return p;
}

Payload do_equivariant(const CommonOpts& c) {
  const RootSystem rs = build_root_system(parse_family(c.family), c.rank);
  const EquivariantPresentation ep = build_equivariant(rs);
  Payload p;
  if (c.format == "json") {
    p.text = equivariant_json(ep);
    return p;
  }
  std::string t = header_line(rs) + ", equivariant parameters";
  for (const auto& v : ep.table->vars()) {
    if (v.name.front() == 'u') t += " " + v.name;
  }
  t += "\nrelations:\n";
  for (const auto& r : ep.relations) t += "  " + r.to_string() + "\n";
  p.text = t;
  return p;
}

Payload do_p1_example(const std::string& format) {
  const P1ExampleReport rep = p1_example_check();
  Payload p;
  p.pass = rep.all_pass();
  if (format == "json") {
    ordered_json j;
    j["relation_matches"] = rep.relation_matches;
    j["factorization_matches"] = rep.factorization_matches;
    j["q_zero_ok"] = rep.q_zero_ok;
    j["u_zero_ok"] = rep.u_zero_ok;
    j["pass"] = p.pass;
    p.text = j.dump(2);
    return p;
  }
  std::string t;
  t += "relation matches: " + yes_no(rep.relation_matches) + "\n";
  t += "factorization matches: " + yes_no(rep.factorization_matches) + "\n";
  t += "q = 0 specialization: " + yes_no(rep.q_zero_ok) + "\n";
  t += "u = 0 specialization: " + yes_no(rep.u_zero_ok) + "\n";
  t += std::string(p.pass ? "PASS" : "FAIL") + "\n";
  p.text = t;
  return p;
}

}  // namespace

RunResult run(const std::vector<std::string>& args) {
  RunResult result;

  CLI::App app{"quantum cohomology of flag manifolds from the Toda lattice"};
  app.require_subcommand(1);

  CommonOpts common;
  std::string out_path;
  long degree_bound = -1;
  int cutoff = 0;
  int degree = 0;
  std::string expr;
  std::vector<std::string> exprs;
  int samples = 3;
  std::uint64_t seed = 1;
  double dt = 0;
  double t_end = 0;
  std::string integrator = "rk4";
  std::string m_text, y_text;
  int flow_samples = 0;

  auto add_common = [&](CLI::App* sub, bool with_coords) {
    sub->add_option("--family", common.family, "root system family")
        ->required()
        ->check(CLI::IsMember({"A", "B"}));
    sub->add_option("--rank", common.rank, "root system rank")
        ->required()
        ->check(CLI::PositiveNumber);
    sub->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--out", out_path, "write the payload to this path");
    if (with_coords) {
      sub->add_option("--coords", common.coords, "coordinate choice")
          ->check(CLI::IsMember({"native", "p"}));
    }
  };

  CLI::App* c_present = app.add_subcommand("present", "print the ring presentation");
  add_common(c_present, true);

  CLI::App* c_reduce = app.add_subcommand("reduce", "normal form of an expression in the quotient");
  add_common(c_reduce, true);
  c_reduce->add_option("--expr", expr, "polynomial to reduce")->required();

  CLI::App* c_multiply = app.add_subcommand("multiply", "product of expressions in the quotient");
  add_common(c_multiply, true);
  c_multiply->add_option("--expr", exprs, "polynomial factor (repeatable)")->required();

  CLI::App* c_basis = app.add_subcommand("basis", "standard monomial basis");
  add_common(c_basis, true);
  c_basis->add_option("--degree", degree_bound, "bound for the full ring; omit for the q = 0 basis");

  CLI::App* c_classical = app.add_subcommand("classical-check", "q = 0 dimension and invariance checks");
  add_common(c_classical, true);

  CLI::App* c_probe = app.add_subcommand("rank-probe", "quotient dimension at random q points");
  add_common(c_probe, true);
  c_probe->add_option("--samples", samples, "number of random specializations")->check(CLI::NonNegativeNumber);
  c_probe->add_option("--seed", seed, "random seed");

  CLI::App* c_dsolve = app.add_subcommand("dsolve", "solve the differential recursion");
  add_common(c_dsolve, false);
  c_dsolve->add_option("--cutoff", cutoff, "largest total sector degree")->required()->check(CLI::NonNegativeNumber);

  CLI::App* c_quantize = app.add_subcommand("quantize", "quantize a classical integral");
  add_common(c_quantize, false);
  c_quantize->add_option("--degree", degree, "weighted degree of the conserved quantity");
  c_quantize->add_option("--expr", expr, "explicit integral in p coordinates");

  CLI::App* c_annihilate = app.add_subcommand("annihilate", "check operators against the series");
  add_common(c_annihilate, false);
  c_annihilate->add_option("--cutoff", cutoff, "largest total sector degree")->required()->check(CLI::NonNegativeNumber);
  c_annihilate->add_option("--degree", degree, "also check the quantized integral of this degree");

  CLI::App* c_flow = app.add_subcommand("flow", "integrate the flow and report conservation drift");
  add_common(c_flow, false);
  c_flow->add_option("--m", m_text, "initial momenta, comma separated")->required();
  c_flow->add_option("--y", y_text, "initial positions, comma separated")->required();
  c_flow->add_option("--dt", dt, "step size")->required();
  c_flow->add_option("--t-end", t_end, "integration time")->required();
  c_flow->add_option("--integrator", integrator, "integration scheme")->check(CLI::IsMember({"rk4", "leapfrog"}));
  c_flow->add_option("--samples", flow_samples, "downsampled trajectory length")->check(CLI::NonNegativeNumber);

  CLI::App* c_poisson = app.add_subcommand("poisson-check", "pairwise bracket vanishing");
  add_common(c_poisson, false);

  CLI::App* c_equivariant = app.add_subcommand("equivariant", "equivariant presentation");
  add_common(c_equivariant, false);

  CLI::App* c_p1 = app.add_subcommand("p1-example", "rank-1 equivariant worked example");
  c_p1->add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
  c_p1->add_option("--out", out_path, "write the payload to this path");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    result.out = app.help();
    return result;
  } catch (const CLI::CallForAllHelp&) {
    result.out = app.help("", CLI::AppFormatMode::All);
    return result;
  } catch (const CLI::ParseError& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  }

  Payload payload;
  try {
    if (c_present->parsed()) {
      payload = do_present(common);
    } else if (c_reduce->parsed()) {
      payload = do_reduce(common, expr);
    } else if (c_multiply->parsed()) {
      payload = do_multiply(common, exprs);
    } else if (c_basis->parsed()) {
      payload = do_basis(common, degree_bound);
    } else if (c_classical->parsed()) {
      payload = do_classical_check(common);
    } else if (c_probe->parsed()) {
      payload = do_rank_probe(common, samples, seed);
    } else if (c_dsolve->parsed()) {
      payload = do_dsolve(common, cutoff);
    } else if (c_quantize->parsed()) {
      if (degree <= 0 && expr.empty()) {
        throw std::invalid_argument("quantize needs --degree or --expr");
      }
      if (degree > 0 && !expr.empty()) {
        throw std::invalid_argument("quantize takes --degree or --expr, not both");
      }
      payload = do_quantize(common, degree, expr);
    } else if (c_annihilate->parsed()) {
      payload = do_annihilate(common, cutoff, degree);
    } else if (c_flow->parsed()) {
      payload = do_flow(common, m_text, y_text, dt, t_end, integrator, flow_samples);
    } else if (c_poisson->parsed()) {
      payload = do_poisson_check(common);
    } else if (c_equivariant->parsed()) {
      payload = do_equivariant(common);
    } else {
      payload = do_p1_example(common.format);
    }
  } catch (const std::invalid_argument& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 2;
    return result;
  } catch (const std::exception& e) {
    result.err = std::string(e.what()) + "\n";
    result.exit_code = 1;
    return result;
  }

  if (!payload.text.empty() && payload.text.back() != '\n') payload.text += "\n";
  result.out = payload.text;
  result.exit_code = payload.pass ? 0 : 1;

  if (!out_path.empty()) {
    std::ofstream f(out_path, std::ios::binary);
    f << payload.text;
    if (!f) {
      result.err = "cannot write " + out_path + "\n";
      result.exit_code = 1;
      return result;
    }
    result.out_path = out_path;
  }
  return result;
}

}  // namespace qtoda::cli
