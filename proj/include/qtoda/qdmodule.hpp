#pragma once

#include <map>
#include <string>
#include <vector>

#include "qtoda/groebner.hpp"
#include "qtoda/qhring.hpp"
#include "qtoda/weylquant.hpp"

namespace qtoda {

// Finite Laurent polynomial in h whose coefficients are classes of the
// classical quotient ring, stored as q = 0 normal forms over the p-only
// table. Arithmetic keeps parts reduced; no h truncation exists because
// every operation used on these values terminates by nilpotency.
class LaurentClass {
 public:
  LaurentClass() = default;
  explicit LaurentClass(VarTableRef table) : table_(std::move(table)) {}

  static LaurentClass from_part(long h_exp, Polynomial nf);

  const VarTableRef& table() const { return table_; }
  const std::map<long, Polynomial>& parts() const { return parts_; }
  bool is_zero() const { return parts_.empty(); }

  bool operator==(const LaurentClass& o) const { return parts_ == o.parts_; }
  bool operator!=(const LaurentClass& o) const { return !(*this == o); }

  LaurentClass operator+(const LaurentClass& o) const;
  LaurentClass operator-(const LaurentClass& o) const;
  LaurentClass scaled(const Rat& c) const;
  LaurentClass shifted(long dh) const;  // multiply by h^dh

  // Multiply every part by f and reduce against the classical basis.
  LaurentClass times_classical(const Polynomial& f, const GroebnerBasis& gb) const;

  long min_h_exponent() const;  // requires nonzero
  long max_h_exponent() const;  // requires nonzero

  // Canonical text, highest h power first; h^-k extends the polynomial
  // grammar for the negative exponents.
  std::string to_string() const;

 private:
  void add_part(long e, const Polynomial& p);
  VarTableRef table_;
  std::map<long, Polynomial> parts_;
};

// Solution of the quantum differential recursion up to |d| <= cutoff: sector
// d holds s^(d), with s^(0) = 1. Coefficients live in the q = 0 quotient of
// the p-coordinate presentation.
struct SeriesSolution {
  Family family = Family::A;
  int rank = 0;
  int cutoff = 0;
  VarTableRef classical_table;
  GroebnerBasis classical_basis;
  std::map<std::vector<int>, LaurentClass> sectors;
};

// Builds s^(d) shell by shell: for d != 0, h(a h + L) s^(d) = sum over
// i with d_i > 0 of c_i s^(d - e_i), where a = sum d_i d_j G_ij > 0 and L is
// multiplication by 2 sum d_i G_ij p_j; the inverse is the finite geometric
// series in L / (a h). Exact throughout.
SeriesSolution solve_series(const RootSystem& rs, int cutoff);

struct SectorResidual {
  std::vector<int> sector;
  LaurentClass value;
};

// Applies a homogeneous normal-ordered operator to the series: on the source
// sector d, P_i multiplies by (p_i + h d_i), then Q^a shifts d to d + a and
// h^b scales. Returns one residual per output sector with |d| <= cutoff
// minus the largest Q-shift of D, sorted by (|d|, lexicographic d).
std::vector<SectorResidual> apply_operator(const SeriesSolution& s, const WeylOp& D);

struct AnnihilationVerdict {
  bool annihilates = true;
  std::vector<int> first_sector;   // set when annihilates is false
  std::string first_residual;
};

// One verdict per operator: true iff every checkable residual vanishes.
std::vector<AnnihilationVerdict> check_annihilation(const RootSystem& rs,
                                                    const std::vector<WeylOp>& ops, int cutoff);

// {"family","rank","cutoff","sectors":[{"d","value"}]} sorted by (|d|, lex d).
std::string series_json(const SeriesSolution& s);

}  // namespace qtoda
