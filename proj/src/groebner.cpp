#include "qtoda/groebner.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace qtoda {

namespace {

// Working representation: terms sorted strictly descending under the active
// order, leading term first.
using TermVec = std::vector<Term>;

TermVec to_sorted(const Polynomial& p, const MonomialOrder& order) {
  TermVec v = p.terms();
  std::sort(v.begin(), v.end(),
            [&](const Term& a, const Term& b) { return order.cmp(a.mono, b.mono) > 0; });
  return v;
}

Polynomial to_poly(const VarTableRef& table, TermVec v) {
  return Polynomial::from_terms(table, std::move(v));
}

// r = a - c * x^m * b, all inputs sorted descending under `order`.
TermVec sub_mul(const TermVec& a, const Rat& c, const Monomial& m, const TermVec& b,
                const MonomialOrder& order) {
  TermVec r;
  r.reserve(a.size() + b.size());
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Monomial bm = monomial_mul(b[j].mono, m);
    int cmp = order.cmp(a[i].mono, bm);
    if (cmp > 0) {
      r.push_back(a[i++]);
    } else if (cmp < 0) {
      r.push_back({std::move(bm), -c * b[j].coeff});
      ++j;
    } else {
      Rat s = a[i].coeff - c * b[j].coeff;
      if (!rat_is_zero(s)) r.push_back({a[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < a.size(); ++i) r.push_back(a[i]);
  for (; j < b.size(); ++j) r.push_back({monomial_mul(b[j].mono, m), -c * b[j].coeff});
  return r;
}

void make_monic(TermVec& v) {
  if (v.empty()) return;
  Rat lc = v.front().coeff;
  if (lc == 1) return;
  for (auto& t : v) t.coeff /= lc;
}

struct Generator {
  TermVec terms;  // monic
  long sugar = 0;
};

// Full reduction of `f` by the generators: divides out every reducible term,
// not just the leading one.
TermVec reduce_full_ptrs(TermVec f, const std::vector<const TermVec*>& gens,
                         const MonomialOrder& order) {
  TermVec rem;
  while (!f.empty()) {
    bool reduced = false;
    for (const TermVec* g : gens) {
      if (g->empty()) continue;
      if (monomial_divides(g->front().mono, f.front().mono)) {
        Monomial q = monomial_div(f.front().mono, g->front().mono);
        f = sub_mul(f, f.front().coeff, q, *g, order);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem.push_back(std::move(f.front()));
      f.erase(f.begin());
    }
  }
  return rem;
}

TermVec reduce_full(TermVec f, const std::vector<Generator>& gens, const MonomialOrder& order) {
  std::vector<const TermVec*> ptrs;
  ptrs.reserve(gens.size());
  for (const auto& g : gens) ptrs.push_back(&g.terms);
  return reduce_full_ptrs(std::move(f), ptrs, order);
}

struct Pair {
  size_t i, j;
  Monomial lcm;
  long sugar;
  size_t serial;
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

}  // namespace

GroebnerBasis groebner_basis(std::vector<Polynomial> input, const MonomialOrder& order) {
  if (input.empty()) throw std::invalid_argument("groebner_basis needs at least one generator");
  VarTableRef table = input.front().table();
  for (const auto& g : input) {
    if (!g.table()->same_as(*table))
      throw std::invalid_argument("generators live over different variable tables");
  }
  if (order.weights.size() != table->size())
    throw std::invalid_argument("order weight vector does not match the variable table");

  std::vector<Generator> G;
  for (const auto& p : input) {
    if (p.is_zero()) continue;
    Generator g{to_sorted(p, order), 0};
    g.sugar = weighted_degree(g.terms.front().mono, order.weights);
    for (const auto& t : g.terms)
      g.sugar = std::max(g.sugar, weighted_degree(t.mono, order.weights));
    make_monic(g.terms);
    G.push_back(std::move(g));
  }
  if (G.empty()) throw std::invalid_argument("all generators are zero");

  auto lt = [&](size_t i) -> const Monomial& { return G[i].terms.front().mono; };

  std::vector<Pair> pending;
  std::set<std::pair<size_t, size_t>> handled;  // popped or pruned pairs
  size_t serial = 0;
  auto push_pairs_for = [&](size_t j) {
    for (size_t i = 0; i < j; ++i) {
      Pair p;
      p.i = i;
      p.j = j;
      p.lcm = monomial_lcm(lt(i), lt(j));
      long extra_i = G[i].sugar + weighted_degree(monomial_div(p.lcm, lt(i)), order.weights);
      long extra_j = G[j].sugar + weighted_degree(monomial_div(p.lcm, lt(j)), order.weights);
      p.sugar = std::max(extra_i, extra_j);
      p.serial = serial++;
      pending.push_back(std::move(p));
    }
  };
  for (size_t j = 1; j < G.size(); ++j) push_pairs_for(j);

  while (!pending.empty()) {
    // sugar strategy: lowest sugar first, ties by creation order
    size_t best = 0;
    for (size_t k = 1; k < pending.size(); ++k) {
      if (pending[k].sugar < pending[best].sugar ||
          (pending[k].sugar == pending[best].sugar && pending[k].serial < pending[best].serial))
        best = k;
    }
    Pair pr = std::move(pending[best]);
    pending.erase(pending.begin() + static_cast<long>(best));
    handled.insert({pr.i, pr.j});

    if (coprime(lt(pr.i), lt(pr.j))) continue;  // product criterion

    // chain criterion: some k with LT(k) | lcm(i,j) and both (i,k), (j,k) done
    bool chained = false;
    for (size_t k = 0; k < G.size() && !chained; ++k) {
      if (k == pr.i || k == pr.j) continue;
      if (!monomial_divides(lt(k), pr.lcm)) continue;
      auto key = [&](size_t a, size_t b) { return std::make_pair(std::min(a, b), std::max(a, b)); };
      if (handled.count(key(pr.i, k)) && handled.count(key(pr.j, k))) chained = true;
    }
    if (chained) continue;

    // s-polynomial
    Monomial qi = monomial_div(pr.lcm, lt(pr.i));
    Monomial qj = monomial_div(pr.lcm, lt(pr.j));
    TermVec s;
    {
      TermVec left;
      left.reserve(G[pr.i].terms.size());
      for (const auto& t : G[pr.i].terms) left.push_back({monomial_mul(t.mono, qi), t.coeff});
      s = sub_mul(left, Rat(1), qj, G[pr.j].terms, order);
    }
    TermVec red = reduce_full(std::move(s), G, order);
    if (red.empty()) continue;
    make_monic(red);
    Generator ng{std::move(red), pr.sugar};
    for (const auto& t : ng.terms)
      ng.sugar = std::max(ng.sugar, weighted_degree(t.mono, order.weights));
    G.push_back(std::move(ng));
    push_pairs_for(G.size() - 1);
  }

  // inter-reduce to the unique reduced basis
  bool changed = true;
  while (changed) {
    changed = false;
    // drop generators whose leading monomial another one divides
    for (size_t i = 0; i < G.size();) {
      bool redundant = false;
      for (size_t j = 0; j < G.size() && !redundant; ++j)
        if (i != j && monomial_divides(lt(j), lt(i))) redundant = true;
      if (redundant) {
        G.erase(G.begin() + static_cast<long>(i));
        changed = true;
      } else {
        ++i;
      }
    }
    for (size_t i = 0; i < G.size(); ++i) {
      std::vector<Generator> others;
      others.reserve(G.size() - 1);
      for (size_t j = 0; j < G.size(); ++j)
        if (j != i) others.push_back(G[j]);
      TermVec red = reduce_full(G[i].terms, others, order);
      make_monic(red);
      if (red != G[i].terms) {
        if (red.empty()) {
          G.erase(G.begin() + static_cast<long>(i));
          --i;
        } else {
          G[i].terms = std::move(red);
        }
        changed = true;
      }
    }
  }

  std::sort(G.begin(), G.end(), [&](const Generator& a, const Generator& b) {
    return order.cmp(a.terms.front().mono, b.terms.front().mono) < 0;
  });

  GroebnerBasis out;
  out.table = table;
  out.order = order;
  for (auto& g : G) {
    out.sorted_generators.push_back(g.terms);
    out.generators.push_back(to_poly(table, std::move(g.terms)));
  }
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& f) const {
  if (!f.table()->same_as(*table))
    throw std::invalid_argument("normal_form input over a different variable table");
  std::vector<const TermVec*> gens;
  gens.reserve(sorted_generators.size());
  for (const auto& g : sorted_generators) gens.push_back(&g);
  TermVec red = reduce_full_ptrs(to_sorted(f, order), gens, order);
  return to_poly(table, std::move(red));
}

bool GroebnerBasis::is_zero_dimensional() const {
  size_t n = table->size();
  std::vector<bool> covered(n, false);
  for (const auto& g : sorted_generators) {
    if (g.empty()) continue;
    const Monomial& m = g.front().mono;
    int support = -1;
    bool pure = true;
    for (size_t i = 0; i < n; ++i) {
      if (m[i] > 0) {
        if (support >= 0) {
          pure = false;
          break;
        }
        support = static_cast<int>(i);
      }
    }
    if (pure && support >= 0) covered[static_cast<size_t>(support)] = true;
    if (pure && support < 0) return true;  // 1 in the ideal: zero ring
  }
  for (bool c : covered)
    if (!c) return false;
  return true;
}

std::vector<Monomial> GroebnerBasis::standard_monomials(long degree_bound) const {
  if (degree_bound < 0 && !is_zero_dimensional())
    throw std::domain_error(
        "quotient is not finite-dimensional; supply a degree bound to enumerate");
  std::vector<Monomial> lts;
  for (const auto& g : sorted_generators)
    if (!g.empty()) lts.push_back(g.front().mono);
  const size_t n = table->size();
  const auto w = table->weights();
  auto reducible = [&](const Monomial& m) {
    for (const auto& l : lts)
      if (monomial_divides(l, m)) return true;
    return false;
  };
  std::set<Monomial> seen;
  std::deque<Monomial> queue;
  std::vector<Monomial> out;
  Monomial one(n, 0);
  if (!reducible(one)) {
    queue.push_back(one);
    seen.insert(one);
  }
  const size_t hard_cap = 2'000'000;
  while (!queue.empty()) {
    Monomial m = std::move(queue.front());
    queue.pop_front();
    out.push_back(m);
    if (out.size() > hard_cap) throw std::domain_error("standard monomial enumeration overflow");
    for (size_t i = 0; i < n; ++i) {
      Monomial next = m;
      next[i] += 1;
      if (degree_bound >= 0 && weighted_degree(next, w) > degree_bound) continue;
      if (seen.count(next) || reducible(next)) continue;
      seen.insert(next);
      queue.push_back(next);
    }
  }
  std::sort(out.begin(), out.end(),
            [&](const Monomial& a, const Monomial& b) { return cmp_wdegrevlex(a, b, w) < 0; });
  return out;
}

std::map<long, long> GroebnerBasis::graded_dimensions() const {
  std::map<long, long> dims;
  const auto w = table->weights();
  for (const auto& m : standard_monomials()) dims[weighted_degree(m, w)] += 1;
  return dims;
}

}  // namespace qtoda
