#include "qtoda/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace qtoda {

long weighted_degree(const Monomial& m, const std::vector<int>& weights) {
  long d = 0;
  for (size_t i = 0; i < m.size(); ++i) d += static_cast<long>(m[i]) * weights[i];
  return d;
}

bool monomial_divides(const Monomial& a, const Monomial& b) {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i] > b[i]) return false;
  return true;
}

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Monomial monomial_div(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (b[i] > a[i]) throw std::invalid_argument("monomial division with remainder");
    r[i] = a[i] - b[i];
  }
  return r;
}

Monomial monomial_lcm(const Monomial& a, const Monomial& b) {
  Monomial r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
  return r;
}

int cmp_wdegrevlex(const Monomial& a, const Monomial& b, const std::vector<int>& weights) {
  long da = weighted_degree(a, weights), db = weighted_degree(b, weights);
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;  // smaller trailing exponent wins
  }
  return 0;
}

namespace {
int cmp_range(const Monomial& a, const Monomial& b, size_t lo, size_t hi,
              const std::vector<int>& weights) {
  long da = 0, db = 0;
  for (size_t i = lo; i < hi; ++i) {
    da += static_cast<long>(a[i]) * weights[i];
    db += static_cast<long>(b[i]) * weights[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}
}  // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
  if (kind == Kind::WDegRevLex) return cmp_wdegrevlex(a, b, weights);
  int c = cmp_range(a, b, 0, block_split, weights);
  if (c != 0) return c;
  return cmp_range(a, b, block_split, a.size(), weights);
}

void require_same_table(const Polynomial& a, const Polynomial& b) {
  if (!a.table() || !b.table() || !a.table()->same_as(*b.table()))
    throw std::invalid_argument("polynomials live over different variable tables");
}

Polynomial Polynomial::constant(VarTableRef table, const Rat& c) {
  Polynomial p(std::move(table));
  if (!rat_is_zero(c)) p.terms_.push_back({Monomial(p.table_->size(), 0), c});
  return p;
}

Polynomial Polynomial::variable(VarTableRef table, size_t index, std::uint32_t exp) {
  if (index >= table->size()) throw std::invalid_argument("variable index out of range");
  Polynomial p(std::move(table));
  Monomial m(p.table_->size(), 0);
  m[index] = exp;
  if (exp == 0) return constant(p.table_, 1);
  p.terms_.push_back({std::move(m), Rat(1)});
  return p;
}

Polynomial Polynomial::from_terms(VarTableRef table, std::vector<Term> terms) {
  Polynomial p(std::move(table));
  for (auto& t : terms)
    if (t.mono.size() != p.table_->size())
      throw std::invalid_argument("term exponent vector has wrong length");
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void Polynomial::normalize() {
  const auto w = table_->weights();
  std::sort(terms_.begin(), terms_.end(), [&](const Term& x, const Term& y) {
    return cmp_wdegrevlex(x.mono, y.mono, w) > 0;
  });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coeff += t.coeff;
    else
      out.push_back(std::move(t));
    if (!out.empty() && rat_is_zero(out.back().coeff)) out.pop_back();
  }
  terms_ = std::move(out);
}

bool Polynomial::operator==(const Polynomial& o) const {
  if (!table_ || !o.table_) return terms_.empty() && o.terms_.empty();
  if (!table_->same_as(*o.table_)) return false;
  if (terms_.size() != o.terms_.size()) return false;
  for (size_t i = 0; i < terms_.size(); ++i)
    if (terms_[i].mono != o.terms_[i].mono || terms_[i].coeff != o.terms_[i].coeff) return false;
  return true;
}

Polynomial Polynomial::operator-() const { return scaled(Rat(-1)); }

Polynomial Polynomial::operator+(const Polynomial& o) const {
  require_same_table(*this, o);
  const auto w = table_->weights();
  Polynomial r(table_);
  r.terms_.reserve(terms_.size() + o.terms_.size());
  size_t i = 0, j = 0;
  while (i < terms_.size() && j < o.terms_.size()) {
    int c = cmp_wdegrevlex(terms_[i].mono, o.terms_[j].mono, w);
    if (c > 0) {
      r.terms_.push_back(terms_[i++]);
    } else if (c < 0) {
      r.terms_.push_back(o.terms_[j++]);
    } else {
      Rat s = terms_[i].coeff + o.terms_[j].coeff;
      if (!rat_is_zero(s)) r.terms_.push_back({terms_[i].mono, std::move(s)});
      ++i, ++j;
    }
  }
  for (; i < terms_.size(); ++i) r.terms_.push_back(terms_[i]);
  for (; j < o.terms_.size(); ++j) r.terms_.push_back(o.terms_[j]);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
  require_same_table(*this, o);
  const auto w = table_->weights();
  auto less = [&](const Monomial& a, const Monomial& b) { return cmp_wdegrevlex(a, b, w) < 0; };
  std::map<Monomial, Rat, decltype(less)> acc(less);
  for (const auto& s : terms_)
    for (const auto& t : o.terms_) {
      Monomial m = monomial_mul(s.mono, t.mono);
      auto [it, fresh] = acc.try_emplace(std::move(m), Rat(0));
      it->second += s.coeff * t.coeff;
      if (rat_is_zero(it->second)) acc.erase(it);
    }
  Polynomial r(table_);
  r.terms_.reserve(acc.size());
  for (auto it = acc.rbegin(); it != acc.rend(); ++it) r.terms_.push_back({it->first, it->second});
  return r;
}

Polynomial Polynomial::scaled(const Rat& c) const {
  Polynomial r(table_);
  if (rat_is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({t.mono, t.coeff * c});
  return r;
}

Polynomial Polynomial::pow(std::uint32_t e) const {
  Polynomial r = constant(table_, 1);
  Polynomial base = *this;
  while (e > 0) {
    if (e & 1u) r = r * base;
    e >>= 1u;
    if (e > 0) base = base * base;
  }
  return r;
}

Polynomial Polynomial::mul_term(const Monomial& m, const Rat& c) const {
  Polynomial r(table_);
  if (rat_is_zero(c)) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({monomial_mul(t.mono, m), t.coeff * c});
  // multiplying by a fixed monomial preserves wdegrevlex order
  return r;
}

Polynomial Polynomial::derivative(size_t var) const {
  if (var >= table_->size()) throw std::invalid_argument("derivative variable out of range");
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.mono[var] == 0) continue;
    Term d{t.mono, t.coeff * Rat(static_cast<long>(t.mono[var]))};
    d.mono[var] -= 1;
    out.push_back(std::move(d));
  }
  return from_terms(table_, std::move(out));
}

Polynomial Polynomial::substitute(const VarTableRef& target,
                                  const std::map<size_t, Polynomial>& images) const {
  for (const auto& [i, img] : images) {
    if (i >= table_->size()) throw std::invalid_argument("substitution index out of range");
    if (!img.table()->same_as(*target))
      throw std::invalid_argument("substitution image over wrong variable table");
  }
  Polynomial result = Polynomial::zero(target);
  // cache powers of each image
  std::map<size_t, std::vector<Polynomial>> powers;
  for (const auto& t : terms_) {
    Polynomial term = Polynomial::constant(target, t.coeff);
    for (size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      auto img = images.find(i);
      if (img == images.end())
        throw std::invalid_argument("no substitution image for variable " + table_->name(i));
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(Polynomial::constant(target, 1));
      while (pw.size() <= t.mono[i]) pw.push_back(pw.back() * img->second);
      term = term * pw[t.mono[i]];
    }
    result += term;
  }
  return result;
}

Polynomial Polynomial::transplant(const VarTableRef& target) const {
  std::map<size_t, Polynomial> images;
  for (size_t i = 0; i < table_->size(); ++i) {
    if (!uses_var(i)) continue;
    int j = target->index_of(table_->name(i));
    if (j < 0)
      throw std::invalid_argument("target table lacks variable " + table_->name(i));
    images.emplace(i, Polynomial::variable(target, static_cast<size_t>(j)));
  }
  return substitute(target, images);
}

Rat Polynomial::coeff(const Monomial& m) const {
  for (const auto& t : terms_)
    if (t.mono == m) return t.coeff;
  return Rat(0);
}

Rat Polynomial::constant_term() const { return coeff(Monomial(table_->size(), 0)); }

std::map<std::uint32_t, Polynomial> Polynomial::collect(size_t var) const {
  if (var >= table_->size()) throw std::invalid_argument("collect variable out of range");
  std::map<std::uint32_t, std::vector<Term>> buckets;
  for (const auto& t : terms_) {
    Term s = t;
    std::uint32_t e = s.mono[var];
    s.mono[var] = 0;
    buckets[e].push_back(std::move(s));
  }
  std::map<std::uint32_t, Polynomial> out;
  for (auto& [e, ts] : buckets) out.emplace(e, from_terms(table_, std::move(ts)));
  return out;
}

long Polynomial::weighted_degree() const {
  const auto w = table_->weights();
  long d = 0;
  for (const auto& t : terms_) d = std::max(d, qtoda::weighted_degree(t.mono, w));
  return d;
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const auto w = table_->weights();
  long d = qtoda::weighted_degree(terms_.front().mono, w);
  for (const auto& t : terms_)
    if (qtoda::weighted_degree(t.mono, w) != d) return false;
  return true;
}

bool Polynomial::uses_var(size_t var) const {
  for (const auto& t : terms_)
    if (t.mono[var] != 0) return true;
  return false;
}

double Polynomial::eval_double(const std::vector<double>& point) const {
  if (point.size() != table_->size()) throw std::invalid_argument("evaluation point has wrong length");
  double acc = 0.0;
  for (const auto& t : terms_) {
    double v = t.coeff.get_d();
    for (size_t i = 0; i < point.size(); ++i)
      for (std::uint32_t k = 0; k < t.mono[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

Rat Polynomial::eval_rat(const std::vector<Rat>& point) const {
  if (point.size() != table_->size()) throw std::invalid_argument("evaluation point has wrong length");
  Rat acc(0);
  for (const auto& t : terms_) {
    Rat v = t.coeff;
    for (size_t i = 0; i < point.size(); ++i)
      for (std::uint32_t k = 0; k < t.mono[i]; ++k) v *= point[i];
    acc += v;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    Rat mag = abs(t.coeff);
    if (first) {
      if (sgn(t.coeff) < 0) os << '-';
      first = false;
    } else {
      os << (sgn(t.coeff) < 0 ? " - " : " + ");
    }
    bool has_vars = false;
    std::ostringstream vars;
    for (size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (has_vars) vars << '*';
      vars << table_->name(i);
      if (t.mono[i] > 1) vars << '^' << t.mono[i];
      has_vars = true;
    }
    if (!has_vars) {
      os << rat_to_string(mag);
    } else if (mag == 1) {
      os << vars.str();
    } else {
      os << rat_to_string(mag) << '*' << vars.str();
    }
  }
  return os.str();
}

namespace {

struct Parser {
  const VarTableRef& table;
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at position " + std::to_string(pos) + ": " + what);
  }

  Int parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected integer");
    return Int(s.substr(start, pos - start));
  }

  // var := identifier from the table
  std::optional<size_t> try_var() {
    skip_ws();
    size_t start = pos;
    if (pos >= s.size() || !std::isalpha(static_cast<unsigned char>(s[pos]))) return std::nullopt;
    ++pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    std::string name = s.substr(start, pos - start);
    int idx = table->index_of(name);
    if (idx < 0) fail("unknown variable " + name);
    return static_cast<size_t>(idx);
  }

  // factor := var ('^' uint)?
  void parse_factor(Monomial& mono) {
    auto v = try_var();
    if (!v) fail("expected variable");
    std::uint32_t e = 1;
    if (eat('^')) {
      Int ue = parse_uint();
      if (!ue.fits_ulong_p()) fail("exponent too large");
      e = static_cast<std::uint32_t>(ue.get_ui());
    }
    mono[*v] += e;
  }

  // term := rational ('*' factor)* | factor ('*' factor)*
  Term parse_term(bool negative) {
    skip_ws();
    Term t{Monomial(table->size(), 0), Rat(1)};
    bool saw_coeff = false;
    if (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])))) {
      Int num = parse_uint();
      Int den = 1;
      if (eat('/')) den = parse_uint();
      if (sgn(den) == 0) fail("zero denominator");
      t.coeff = Rat(num, den);
      t.coeff.canonicalize();
      saw_coeff = true;
    } else {
      parse_factor(t.mono);
    }
    while (true) {
      size_t save = pos;
      if (!eat('*')) break;
      skip_ws();
      if (pos < s.size() && std::isalpha(static_cast<unsigned char>(s[pos]))) {
        parse_factor(t.mono);
      } else {
        pos = save;
        break;
      }
    }
    (void)saw_coeff;
    if (negative) t.coeff = -t.coeff;
    return t;
  }

  Polynomial parse() {
    std::vector<Term> terms;
    bool neg = eat('-');
    terms.push_back(parse_term(neg));
    while (true) {
      skip_ws();
      if (pos >= s.size()) break;
      if (eat('+'))
        terms.push_back(parse_term(false));
      else if (eat('-'))
        terms.push_back(parse_term(true));
      else
        fail(std::string("unexpected character '") + s[pos] + "'");
    }
    return Polynomial::from_terms(table, std::move(terms));
  }
};

}  // namespace

Polynomial Polynomial::parse(const VarTableRef& table, const std::string& text) {
  Parser p{table, text};
  return p.parse();
}

Polynomial elementary_symmetric(const std::vector<Polynomial>& items, size_t k) {
  if (items.empty()) throw std::invalid_argument("elementary_symmetric needs at least one item");
  const VarTableRef& table = items.front().table();
  if (k > items.size()) return Polynomial::zero(table);
  std::vector<Polynomial> e(k + 1, Polynomial::zero(table));
  e[0] = Polynomial::constant(table, 1);
  for (const auto& item : items) {
    require_same_table(items.front(), item);
    for (size_t j = k; j >= 1; --j) e[j] += e[j - 1] * item;
  }
  return e[k];
}

}  // namespace qtoda
