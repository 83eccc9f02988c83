#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qtoda/rational.hpp"
#include "qtoda/vartable.hpp"

namespace qtoda {

// Exponent vector over a VarTable; index i matches table position i.
using Monomial = std::vector<std::uint32_t>;

long weighted_degree(const Monomial& m, const std::vector<int>& weights);
bool monomial_divides(const Monomial& a, const Monomial& b);  // a | b
Monomial monomial_mul(const Monomial& a, const Monomial& b);
Monomial monomial_div(const Monomial& a, const Monomial& b);  // requires b | a
Monomial monomial_lcm(const Monomial& a, const Monomial& b);

// Weighted-degree reverse lexicographic comparison: higher weighted degree
// wins; on ties the monomial whose last differing exponent is smaller wins.
// Returns <0, 0, >0 like strcmp. Earlier table positions are the "larger"
// variables (p1 > p2 > ... > q1 > ...).
int cmp_wdegrevlex(const Monomial& a, const Monomial& b, const std::vector<int>& weights);

// Term order for Groebner bases. WDegRevLex is the default everywhere; Block
// compares the leading block (table positions [0, block_split)) first, each
// block internally by WDegRevLex. Block orders make the leading block's
// variables eliminable with the trailing ones acting as parameters.
struct MonomialOrder {
  enum class Kind { WDegRevLex, Block };
  Kind kind = Kind::WDegRevLex;
  std::vector<int> weights;
  size_t block_split = 0;

  static MonomialOrder wdegrevlex(const VarTableRef& t) { return {Kind::WDegRevLex, t->weights(), 0}; }
  static MonomialOrder block(const VarTableRef& t, size_t split) { return {Kind::Block, t->weights(), split}; }

  int cmp(const Monomial& a, const Monomial& b) const;
};

struct Term {
  Monomial mono;
  Rat coeff;
  bool operator==(const Term& o) const { return mono == o.mono && coeff == o.coeff; }
};

// Sparse multivariate polynomial with exact rational coefficients. Terms are
// kept sorted in strictly descending canonical (wdegrevlex) order with no
// zero coefficients; every public constructor and operation restores that form.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(VarTableRef table) : table_(std::move(table)) {}

  static Polynomial zero(VarTableRef table) { return Polynomial(std::move(table)); }
  static Polynomial constant(VarTableRef table, const Rat& c);
  static Polynomial variable(VarTableRef table, size_t index, std::uint32_t exp = 1);
  static Polynomial from_terms(VarTableRef table, std::vector<Term> terms);

  const VarTableRef& table() const { return table_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  size_t term_count() const { return terms_.size(); }

  bool operator==(const Polynomial& o) const;
  bool operator!=(const Polynomial& o) const { return !(*this == o); }

  Polynomial operator-() const;
  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial& operator+=(const Polynomial& o) { return *this = *this + o; }
  Polynomial& operator-=(const Polynomial& o) { return *this = *this - o; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial scaled(const Rat& c) const;
  Polynomial pow(std::uint32_t e) const;
  Polynomial mul_term(const Monomial& m, const Rat& c) const;

  Polynomial derivative(size_t var) const;

  // Image under variable -> polynomial over the target table. Every variable
  // with a nonzero exponent anywhere in *this must be mapped.
  Polynomial substitute(const VarTableRef& target,
                        const std::map<size_t, Polynomial>& images) const;

  // Convenience: re-express over `target`, matching variables by name.
  Polynomial transplant(const VarTableRef& target) const;

  Rat coeff(const Monomial& m) const;
  Rat constant_term() const;

  // Splits by the exponent of one variable: exponent -> polynomial with that
  // variable struck out (still over the same table).
  std::map<std::uint32_t, Polynomial> collect(size_t var) const;

  long weighted_degree() const;  // max over terms; 0 for the zero polynomial
  bool is_homogeneous() const;
  bool uses_var(size_t var) const;

  double eval_double(const std::vector<double>& point) const;
  Rat eval_rat(const std::vector<Rat>& point) const;

  // Canonical text: descending wdegrevlex terms, explicit '*', "a/b" rationals,
  // unit coefficients elided. Parsing accepts exactly the same grammar.
  std::string to_string() const;
  static Polynomial parse(const VarTableRef& table, const std::string& text);

 private:
  void normalize();
  VarTableRef table_;
  std::vector<Term> terms_;
};

void require_same_table(const Polynomial& a, const Polynomial& b);

// e_k of the given polynomials (e_0 = 1), by the one-pass Newton-style
// recurrence; all items must share a table.
Polynomial elementary_symmetric(const std::vector<Polynomial>& items, size_t k);

}  // namespace qtoda
