#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtoda/polynomial.hpp"
#include "qtoda/rootdata.hpp"

namespace qtoda {

// Index of one normal-ordered word Q^a h^b P^m: a are the exponents of the
// multiplication operators exp t_j, b the power of h, m the exponents of the
// momenta P_i = h d/dt_i. Ordering is lexicographic on (a, b, m).
struct WeylKey {
  std::vector<std::uint32_t> a;
  std::uint32_t b = 0;
  std::vector<std::uint32_t> m;

  bool operator==(const WeylKey& o) const { return a == o.a && b == o.b && m == o.m; }
  bool operator<(const WeylKey& o) const {
    if (a != o.a) return a < o.a;
    if (b != o.b) return b < o.b;
    return m < o.m;
  }
  long degree() const;  // 2|a| + b + |m|
};

// Element of the noncommutative algebra generated by Q_j, P_i, h subject to
// P_i Q_j = Q_j P_i + delta_ij h Q_j, kept in normal order (Q left of P).
class WeylOp {
 public:
  WeylOp() = default;
  explicit WeylOp(int rank) : rank_(rank) {}

  static WeylOp constant(int rank, const Rat& c);
  static WeylOp Q(int rank, size_t j);
  static WeylOp P(int rank, size_t i);
  static WeylOp hbar(int rank);
  static WeylOp term(int rank, WeylKey key, const Rat& c);

  int rank() const { return rank_; }
  const std::map<WeylKey, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  bool operator==(const WeylOp& o) const { return rank_ == o.rank_ && terms_ == o.terms_; }
  bool operator!=(const WeylOp& o) const { return !(*this == o); }

  WeylOp operator-() const;
  WeylOp operator+(const WeylOp& o) const;
  WeylOp operator-(const WeylOp& o) const;
  WeylOp operator*(const WeylOp& o) const;  // normal-ordering product
  WeylOp scaled(const Rat& c) const;

  long degree() const;  // max term degree, 0 when zero
  bool is_homogeneous() const;

  std::string to_string() const;

 private:
  void add_term(WeylKey key, const Rat& c);
  int rank_ = 0;
  std::map<WeylKey, Rat> terms_;
  friend WeylOp op_mul(const WeylOp&, const WeylOp&);
};

WeylOp op_mul(const WeylOp& A, const WeylOp& B);
WeylOp commutator(const WeylOp& A, const WeylOp& B);

// Sum_ij G_ij P_i P_j - Sum_i c_i Q_i; homogeneous of degree 2.
WeylOp build_hamiltonian(const RootSystem& rs);

// h = 0 part as a commutative polynomial: Q^a P^m -> q^a p^m on the p/q table.
Polynomial symbol(const WeylOp& A);

// Q-free part: h^b P^m -> h^b p^m on the p/h table.
Polynomial mod_q(const WeylOp& A);

struct QuantizeReport {
  WeylOp representative;
  std::vector<WeylOp> nullspace;  // degree-k directions commuting with H and
                                  // invisible to both symbol and mod_q
  size_t ansatz_size = 0;
};

// Solves for a degree-k operator D with symbol(D) = u, [D, H] = 0, and
// mod_q(D) free of h, over the full normal-ordered ansatz in degree k.
// The representative sets every free coordinate of the affine solution set
// to zero; existence is asserted (infeasibility throws).
QuantizeReport quantize_integral(const RootSystem& rs, const Polynomial& u_classical);

struct CommuteVerdict {
  bool commute = true;
  size_t first_i = 0;
  size_t first_j = 0;
  WeylOp witness;  // first nonzero pairwise commutator
};

CommuteVerdict pairwise_commute_check(const std::vector<WeylOp>& ops);

}  // namespace qtoda
