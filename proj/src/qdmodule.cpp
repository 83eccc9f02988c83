#include "qtoda/qdmodule.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "json.hpp"

namespace qtoda {

namespace {

bool sector_before(const std::vector<int>& a, const std::vector<int>& b) {
  long sa = 0, sb = 0;
  for (int v : a) sa += v;
  for (int v : b) sb += v;
  if (sa != sb) return sa < sb;
  return a < b;
}

}  // namespace

LaurentClass LaurentClass::from_part(long h_exp, Polynomial nf) {
  LaurentClass c(nf.table());
  if (!nf.is_zero()) c.parts_.emplace(h_exp, std::move(nf));
  return c;
}

void LaurentClass::add_part(long e, const Polynomial& p) {
  if (p.is_zero()) return;
  auto [it, fresh] = parts_.try_emplace(e, p);
  if (!fresh) {
    it->second += p;
    if (it->second.is_zero()) parts_.erase(it);
  }
}

LaurentClass LaurentClass::operator+(const LaurentClass& o) const {
  LaurentClass r = *this;
  if (!r.table_ && o.table_) r.table_ = o.table_;
  for (const auto& [e, p] : o.parts_) r.add_part(e, p);
  return r;
}

LaurentClass LaurentClass::operator-(const LaurentClass& o) const {
  return *this + o.scaled(Rat(-1));
}

LaurentClass LaurentClass::scaled(const Rat& c) const {
  LaurentClass r(table_);
  if (rat_is_zero(c)) return r;
  for (const auto& [e, p] : parts_) r.parts_.emplace(e, p.scaled(c));
  return r;
}

LaurentClass LaurentClass::shifted(long dh) const {
  LaurentClass r(table_);
  for (const auto& [e, p] : parts_) r.parts_.emplace(e + dh, p);
  return r;
}

LaurentClass LaurentClass::times_classical(const Polynomial& f, const GroebnerBasis& gb) const {
  LaurentClass r(table_);
  for (const auto& [e, p] : parts_) r.add_part(e, gb.normal_form(p * f));
  return r;
}

long LaurentClass::min_h_exponent() const {
  if (parts_.empty()) throw std::logic_error("zero class has no h exponents");
  return parts_.begin()->first;
}

long LaurentClass::max_h_exponent() const {
  if (parts_.empty()) throw std::logic_error("zero class has no h exponents");
  return parts_.rbegin()->first;
}

std::string LaurentClass::to_string() const {
  if (parts_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) {
    const long e = it->first;
    for (const auto& term : it->second.terms()) {
      const bool negative = sgn(term.coeff) < 0;
      Rat mag = negative ? Rat(-term.coeff) : term.coeff;
      if (first) {
        if (negative) out += "-";
        first = false;
      } else {
        out += negative ? " - " : " + ";
      }
      std::vector<std::string> factors;
      for (size_t v = 0; v < term.mono.size(); ++v)
        if (term.mono[v] > 0) {
          std::string f = table_->name(v);
          if (term.mono[v] > 1) f += "^" + std::to_string(term.mono[v]);
          factors.push_back(std::move(f));
        }
      if (e != 0) {
        std::string f = "h";
        if (e != 1) f += "^" + std::to_string(e);
        factors.push_back(std::move(f));
      }
      std::string body;
      if (mag != 1 || factors.empty()) body = rat_to_string(mag);
      for (const auto& f : factors) {
        if (!body.empty()) body += "*";
        body += f;
      }
      out += body;
    }
  }
  return out;
}

SeriesSolution solve_series(const RootSystem& rs, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("cutoff must be nonnegative");
  const size_t n = static_cast<size_t>(rs.rank);
  const Presentation pres =
      build_presentation(rs, rs.family == Family::B ? Coords::P : Coords::Native);

  SeriesSolution s;
  s.family = rs.family;
  s.rank = rs.rank;
  s.cutoff = cutoff;
  s.classical_table = pres.classical_table;
  s.classical_basis = pres.classical_basis;

  const VarTableRef& table = s.classical_table;
  s.sectors[std::vector<int>(n, 0)] =
      LaurentClass::from_part(0, Polynomial::constant(table, 1));

  std::vector<Polynomial> p_vars;
  for (size_t i = 0; i < n; ++i) p_vars.push_back(Polynomial::variable(table, i));

  for (int shell = 1; shell <= cutoff; ++shell) {
    std::vector<std::vector<int>> ds;
    std::vector<int> d(n, 0);
    std::function<void(size_t, int)> enumerate = [&](size_t i, int left) {
      if (i + 1 == n) {
        d[i] = left;
        ds.push_back(d);
        d[i] = 0;
        return;
      }
      for (int e = 0; e <= left; ++e) {
        d[i] = e;
        enumerate(i + 1, left - e);
      }
      d[i] = 0;
    };
    enumerate(0, shell);

    std::vector<LaurentClass> values(ds.size());
#pragma omp parallel for schedule(dynamic)
    for (long idx = 0; idx < static_cast<long>(ds.size()); ++idx) {
      const std::vector<int>& deg = ds[static_cast<size_t>(idx)];
      Rat a(0);
      Polynomial ell(table);
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
          if (deg[i] == 0 || rat_is_zero(rs.gram[i][j])) continue;
          a += rs.gram[i][j] * Rat(deg[i]) * Rat(deg[j]);
          ell += p_vars[j].scaled(rs.gram[i][j] * Rat(2 * deg[i]));
        }
      ell = s.classical_basis.normal_form(ell);

      LaurentClass rhs(table);
      for (size_t i = 0; i < n; ++i) {
        if (deg[i] == 0) continue;
        std::vector<int> prev = deg;
        --prev[i];
        rhs = rhs + s.sectors.at(prev).scaled(rs.c[i]);
      }

      // (a h + L)^{-1} h^{-1} rhs = sum_j (-1)^j a^{-(j+1)} h^{-(j+2)} L^j rhs
      LaurentClass acc(table);
      LaurentClass cur = rhs;
      Rat apow = a;
      long j = 0;
      while (!cur.is_zero()) {
        Rat coef = Rat(1) / apow;
        if (j % 2 == 1) coef = -coef;
        acc = acc + cur.scaled(coef).shifted(-(j + 2));
        cur = cur.times_classical(ell, s.classical_basis);
        apow *= a;
        ++j;
      }
      values[static_cast<size_t>(idx)] = std::move(acc);
    }
    for (size_t idx = 0; idx < ds.size(); ++idx) s.sectors[ds[idx]] = std::move(values[idx]);
  }
  return s;
}

std::vector<SectorResidual> apply_operator(const SeriesSolution& s, const WeylOp& D) {
  if (D.rank() != s.rank) throw std::invalid_argument("operator rank does not match the series");
  if (!D.is_homogeneous()) throw std::invalid_argument("operator must be homogeneous");
  const size_t n = static_cast<size_t>(s.rank);

  long max_shift = 0;
  for (const auto& [key, c] : D.terms()) {
    long sa = 0;
    for (auto e : key.a) sa += e;
    max_shift = std::max(max_shift, sa);
  }
  if (s.cutoff < max_shift)
    throw std::invalid_argument("cutoff too small to evaluate any sector of this operator");

  const VarTableRef& table = s.classical_table;
  std::vector<Polynomial> p_vars;
  for (size_t i = 0; i < n; ++i) p_vars.push_back(Polynomial::variable(table, i));

  std::vector<std::vector<int>> outputs;
  for (const auto& [d, val] : s.sectors) {
    long sum = 0;
    for (int v : d) sum += v;
    if (sum <= s.cutoff - max_shift) outputs.push_back(d);
  }
  std::sort(outputs.begin(), outputs.end(), sector_before);

  std::vector<SectorResidual> residuals(outputs.size());
#pragma omp parallel for schedule(dynamic)
  for (long oi = 0; oi < static_cast<long>(outputs.size()); ++oi) {
    const std::vector<int>& e = outputs[static_cast<size_t>(oi)];
    LaurentClass acc(table);
    for (const auto& [key, c] : D.terms()) {
      std::vector<int> src(n);
      bool ok = true;
      for (size_t i = 0; i < n; ++i) {
        src[i] = e[i] - static_cast<int>(key.a[i]);
        if (src[i] < 0) ok = false;
      }
      if (!ok) continue;
      LaurentClass v = s.sectors.at(src);
      for (size_t i = 0; i < n && !v.is_zero(); ++i)
        for (std::uint32_t rep = 0; rep < key.m[i]; ++rep)
          v = v.times_classical(p_vars[i], s.classical_basis) + v.shifted(1).scaled(Rat(src[i]));
      acc = acc + v.shifted(key.b).scaled(c);
    }
    residuals[static_cast<size_t>(oi)] = SectorResidual{e, std::move(acc)};
  }
  return residuals;
}

std::vector<AnnihilationVerdict> check_annihilation(const RootSystem& rs,
                                                    const std::vector<WeylOp>& ops, int cutoff) {
  const SeriesSolution s = solve_series(rs, cutoff);
  std::vector<AnnihilationVerdict> verdicts;
  for (const auto& op : ops) {
    AnnihilationVerdict v;
    for (const auto& r : apply_operator(s, op)) {
      if (!r.value.is_zero()) {
        v.annihilates = false;
        v.first_sector = r.sector;
        v.first_residual = r.value.to_string();
        break;
      }
    }
    verdicts.push_back(std::move(v));
  }
  return verdicts;
}

std::string series_json(const SeriesSolution& s) {
  nlohmann::ordered_json j;
  j["family"] = family_name(s.family);
  j["rank"] = s.rank;
  j["cutoff"] = s.cutoff;
  j["sectors"] = nlohmann::ordered_json::array();
  std::vector<std::vector<int>> order;
  for (const auto& [d, val] : s.sectors) order.push_back(d);
  std::sort(order.begin(), order.end(), sector_before);
  for (const auto& d : order)
    j["sectors"].push_back(nlohmann::ordered_json{{"d", d}, {"value", s.sectors.at(d).to_string()}});
  return j.dump(2);
}

}  // namespace qtoda
