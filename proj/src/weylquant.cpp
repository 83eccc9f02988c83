#include "qtoda/weylquant.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "qtoda/linalg.hpp"

namespace qtoda {

namespace {

long vec_sum(const std::vector<std::uint32_t>& v) {
  long s = 0;
  for (auto e : v) s += e;
  return s;
}

Rat binom(std::uint32_t n, std::uint32_t k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rat(r);
}

Rat int_pow(std::uint32_t base, std::uint32_t e) {
  Int r;
  mpz_ui_pow_ui(r.get_mpz_t(), base, e);
  return Rat(r);
}

void check_rank(const WeylOp& A, const WeylOp& B) {
  if (A.rank() != B.rank()) throw std::invalid_argument("rank mismatch between operators");
}

}  // namespace

long WeylKey::degree() const { return 2 * vec_sum(a) + b + vec_sum(m); }

void WeylOp::add_term(WeylKey key, const Rat& c) {
  if (rat_is_zero(c)) return;
  auto [it, fresh] = terms_.try_emplace(std::move(key), c);
  if (!fresh) {
    it->second += c;
    if (rat_is_zero(it->second)) terms_.erase(it);
  }
}

WeylOp WeylOp::constant(int rank, const Rat& c) {
  return term(rank, WeylKey{std::vector<std::uint32_t>(rank, 0), 0, std::vector<std::uint32_t>(rank, 0)}, c);
}

WeylOp WeylOp::Q(int rank, size_t j) {
  WeylKey k{std::vector<std::uint32_t>(rank, 0), 0, std::vector<std::uint32_t>(rank, 0)};
  k.a.at(j) = 1;
  return term(rank, std::move(k), Rat(1));
}

WeylOp WeylOp::P(int rank, size_t i) {
  WeylKey k{std::vector<std::uint32_t>(rank, 0), 0, std::vector<std::uint32_t>(rank, 0)};
  k.m.at(i) = 1;
  return term(rank, std::move(k), Rat(1));
}

WeylOp WeylOp::hbar(int rank) {
  return term(rank, WeylKey{std::vector<std::uint32_t>(rank, 0), 1, std::vector<std::uint32_t>(rank, 0)}, Rat(1));
}

WeylOp WeylOp::term(int rank, WeylKey key, const Rat& c) {
  if (key.a.size() != static_cast<size_t>(rank) || key.m.size() != static_cast<size_t>(rank))
    throw std::invalid_argument("key length does not match rank");
  WeylOp op(rank);
  op.add_term(std::move(key), c);
  return op;
}

WeylOp WeylOp::operator-() const { return scaled(Rat(-1)); }

WeylOp WeylOp::operator+(const WeylOp& o) const {
  check_rank(*this, o);
  WeylOp r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, c);
  return r;
}

WeylOp WeylOp::operator-(const WeylOp& o) const {
  check_rank(*this, o);
  WeylOp r = *this;
  for (const auto& [k, c] : o.terms_) r.add_term(k, -c);
  return r;
}

WeylOp WeylOp::operator*(const WeylOp& o) const { return op_mul(*this, o); }

WeylOp WeylOp::scaled(const Rat& c) const {
  WeylOp r(rank_);
  if (rat_is_zero(c)) return r;
  for (const auto& [k, v] : terms_) r.terms_.emplace(k, v * c);
  return r;
}

long WeylOp::degree() const {
  long d = 0;
  for (const auto& [k, c] : terms_) d = std::max(d, k.degree());
  return d;
}

bool WeylOp::is_homogeneous() const {
  if (terms_.empty()) return true;
  const long d = terms_.begin()->first.degree();
  for (const auto& [k, c] : terms_)
    if (k.degree() != d) return false;
  return true;
}

std::string WeylOp::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [key, coeff] : terms_) {
    const bool negative = sgn(coeff) < 0;
    Rat mag = negative ? Rat(-coeff) : coeff;
    if (first) {
      if (negative) out += "-";
      first = false;
    } else {
      out += negative ? " - " : " + ";
    }
    std::vector<std::string> factors;
    for (size_t j = 0; j < key.a.size(); ++j)
      if (key.a[j] > 0) {
        std::string f = "q" + std::to_string(j + 1);
        if (key.a[j] > 1) f += "^" + std::to_string(key.a[j]);
        factors.push_back(std::move(f));
      }
    if (key.b > 0) {
      std::string f = "h";
      if (key.b > 1) f += "^" + std::to_string(key.b);
      factors.push_back(std::move(f));
    }
    for (size_t i = 0; i < key.m.size(); ++i)
      if (key.m[i] > 0) {
        std::string f = "P" + std::to_string(i + 1);
        if (key.m[i] > 1) f += "^" + std::to_string(key.m[i]);
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
  return out;
}

WeylOp op_mul(const WeylOp& A, const WeylOp& B) {
  check_rank(A, B);
  const size_t n = static_cast<size_t>(A.rank());
  WeylOp r(A.rank());
  for (const auto& [ka, ca] : A.terms_) {
    for (const auto& [kb, cb] : B.terms_) {
      // P^m Q^{a'} = Q^{a'} prod_i (P_i + a'_i h)^{m_i}; binomial expansion
      // over the indices where both m_i and a'_i are positive
      std::vector<size_t> active;
      for (size_t i = 0; i < n; ++i)
        if (ka.m[i] > 0 && kb.a[i] > 0) active.push_back(i);

      std::vector<std::uint32_t> k(active.size(), 0);  // h-count per active index
      for (;;) {
        WeylKey key;
        key.a.resize(n);
        key.m.resize(n);
        Rat c = ca * cb;
        std::uint32_t hshift = 0;
        for (size_t t = 0; t < active.size(); ++t) {
          const size_t i = active[t];
          c *= binom(ka.m[i], k[t]) * int_pow(kb.a[i], k[t]);
          hshift += k[t];
        }
        for (size_t i = 0; i < n; ++i) {
          key.a[i] = ka.a[i] + kb.a[i];
          key.m[i] = ka.m[i] + kb.m[i];
        }
        for (size_t t = 0; t < active.size(); ++t) key.m[active[t]] -= k[t];
        key.b = ka.b + kb.b + hshift;
        r.add_term(std::move(key), c);

        size_t pos = 0;
        while (pos < k.size()) {
          if (k[pos] < ka.m[active[pos]]) {
            ++k[pos];
            break;
          }
          k[pos] = 0;
          ++pos;
        }
        if (pos == k.size()) break;
      }
    }
  }
  return r;
}

WeylOp commutator(const WeylOp& A, const WeylOp& B) { return op_mul(A, B) - op_mul(B, A); }

WeylOp build_hamiltonian(const RootSystem& rs) {
  const int rank = rs.rank;
  const size_t n = static_cast<size_t>(rank);
  WeylOp H(rank);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) {
      if (rat_is_zero(rs.gram[i][j])) continue;
      H = H + (WeylOp::P(rank, i) * WeylOp::P(rank, j)).scaled(rs.gram[i][j]);
    }
  for (size_t i = 0; i < n; ++i) H = H - WeylOp::Q(rank, i).scaled(rs.c[i]);
  return H;
}

Polynomial symbol(const WeylOp& A) {
  const int rank = A.rank();
  const VarTableRef table = momentum_q_table("p", rank);
  std::vector<Term> terms;
  for (const auto& [key, c] : A.terms()) {
    if (key.b != 0) continue;
    Monomial mono(2 * rank, 0);
    for (int i = 0; i < rank; ++i) {
      mono[i] = key.m[i];
      mono[rank + i] = key.a[i];
    }
    terms.push_back({std::move(mono), c});
  }
  return Polynomial::from_terms(table, std::move(terms));
}

Polynomial mod_q(const WeylOp& A) {
  const int rank = A.rank();
  const VarTableRef table = make_vars({{"p", rank}, {"h", 0}});
  std::vector<Term> terms;
  for (const auto& [key, c] : A.terms()) {
    if (vec_sum(key.a) != 0) continue;
    Monomial mono(rank + 1, 0);
    for (int i = 0; i < rank; ++i) mono[i] = key.m[i];
    mono[rank] = key.b;
    terms.push_back({std::move(mono), c});
  }
  return Polynomial::from_terms(table, std::move(terms));
}

namespace {

// All keys of the given total degree, ascending in the WeylKey order.
std::vector<WeylKey> degree_basis(int rank, long degree) {
  const size_t n = static_cast<size_t>(rank);
  std::vector<WeylKey> keys;
  std::vector<std::uint32_t> a(n, 0), m(n, 0);
  std::function<void(size_t, long)> fill_m = [&](size_t i, long left) {
    if (i + 1 == n) {
      m[i] = static_cast<std::uint32_t>(left);
      keys.push_back(WeylKey{a, 0, m});
      m[i] = 0;
      return;
    }
    for (long e = 0; e <= left; ++e) {
      m[i] = static_cast<std::uint32_t>(e);
      fill_m(i + 1, left - e);
    }
    m[i] = 0;
  };
  std::function<void(size_t, long)> fill_a = [&](size_t i, long left) {
    if (i == n) {
      for (long b = 0; b <= left; ++b) {
        const size_t before = keys.size();
        fill_m(0, left - b);
        for (size_t t = before; t < keys.size(); ++t) keys[t].b = static_cast<std::uint32_t>(b);
      }
      return;
    }
    for (long e = 0; 2 * e <= left; ++e) {
      a[i] = static_cast<std::uint32_t>(e);
      fill_a(i + 1, left - 2 * e);
    }
    a[i] = 0;
  };
  fill_a(0, degree);
  std::sort(keys.begin(), keys.end());
  return keys;
}

}  // namespace

QuantizeReport quantize_integral(const RootSystem& rs, const Polynomial& u_classical) {
  const int rank = rs.rank;
  const size_t n = static_cast<size_t>(rank);
  const VarTableRef pq = momentum_q_table("p", rank);
  if (!u_classical.table() || !u_classical.table()->same_as(*pq))
    throw std::invalid_argument("classical integral must live on the p/q table");
  if (u_classical.is_zero()) throw std::invalid_argument("classical integral must be nonzero");
  if (!u_classical.is_homogeneous())
    throw std::invalid_argument("classical integral must be weighted-homogeneous");
  const long k = u_classical.weighted_degree();

  const std::vector<WeylKey> basis = degree_basis(rank, k);
  const size_t N = basis.size();
  std::map<WeylKey, size_t> basis_index;
  for (size_t e = 0; e < N; ++e) basis_index[basis[e]] = e;

  const WeylOp H = build_hamiltonian(rs);

  // commutator of each ansatz word with H, assembled in parallel
  std::vector<WeylOp> columns(N);
#pragma omp parallel for schedule(dynamic)
  for (long e = 0; e < static_cast<long>(N); ++e)
    columns[static_cast<size_t>(e)] =
        commutator(WeylOp::term(rank, basis[static_cast<size_t>(e)], Rat(1)), H);

  std::map<WeylKey, size_t> row_of_key;
  for (const auto& col : columns)
    for (const auto& [key, c] : col.terms())
      row_of_key.try_emplace(key, row_of_key.size());

  const size_t symbol_rows = N;  // one per basis key: pin, zero, or skip
  const size_t rows = symbol_rows + row_of_key.size();
  RatMatrix A(rows, std::vector<Rat>(N, Rat(0)));
  std::vector<Rat> rhs(rows, Rat(0));

  for (size_t e = 0; e < N; ++e) {
    const WeylKey& key = basis[e];
    if (key.b == 0) {
      // symbol constraint: coefficient equals the classical one
      Monomial mono(2 * n, 0);
      for (size_t i = 0; i < n; ++i) {
        mono[i] = key.m[i];
        mono[n + i] = key.a[i];
      }
      A[e][e] = 1;
      rhs[e] = u_classical.coeff(mono);
    } else if (vec_sum(key.a) == 0) {
      // Q-free part must carry no h
      A[e][e] = 1;
    }
  }
  for (size_t e = 0; e < N; ++e)
    for (const auto& [key, c] : columns[e].terms()) A[symbol_rows + row_of_key.at(key)][e] = c;

  const LinearSolution sol = linear_solve(A, rhs);
  if (!sol.feasible)
    throw std::logic_error("commutant system is infeasible; the quantization must exist");

  QuantizeReport rep;
  rep.ansatz_size = N;
  WeylOp D(rank);
  for (size_t e = 0; e < N; ++e)
    if (!rat_is_zero(sol.particular[e])) D = D + WeylOp::term(rank, basis[e], sol.particular[e]);
  rep.representative = D;
  for (const auto& dir : sol.nullspace) {
    WeylOp Z(rank);
    for (size_t e = 0; e < N; ++e)
      if (!rat_is_zero(dir[e])) Z = Z + WeylOp::term(rank, basis[e], dir[e]);
    rep.nullspace.push_back(Z);
  }
  return rep;
}

CommuteVerdict pairwise_commute_check(const std::vector<WeylOp>& ops) {
  CommuteVerdict v;
  for (size_t i = 0; i < ops.size(); ++i)
    for (size_t j = i + 1; j < ops.size(); ++j) {
      WeylOp c = commutator(ops[i], ops[j]);
      if (!c.is_zero()) {
        v.commute = false;
        v.first_i = i;
        v.first_j = j;
        v.witness = std::move(c);
        return v;
      }
    }
  return v;
}

}  // namespace qtoda
