#pragma once

#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace qtoda {

struct Var {
  std::string name;
  int weight = 1;
  bool operator==(const Var& o) const { return name == o.name && weight == o.weight; }
};

// Immutable, shared variable universe of a polynomial ring. Grading weights
// ride along with the names; by convention p/x/u/h/t variables weigh 1 and
// q variables weigh 2.
class VarTable {
 public:
  static std::shared_ptr<const VarTable> make(std::vector<Var> vars) {
    for (size_t i = 0; i < vars.size(); ++i)
      for (size_t j = i + 1; j < vars.size(); ++j)
        if (vars[i].name == vars[j].name)
          throw std::invalid_argument("duplicate variable name: " + vars[i].name);
    return std::shared_ptr<const VarTable>(new VarTable(std::move(vars)));
  }

  size_t size() const { return vars_.size(); }
  const std::string& name(size_t i) const { return vars_.at(i).name; }
  int weight(size_t i) const { return vars_.at(i).weight; }
  const std::vector<Var>& vars() const { return vars_; }

  // -1 when absent.
  int index_of(const std::string& n) const {
    for (size_t i = 0; i < vars_.size(); ++i)
      if (vars_[i].name == n) return static_cast<int>(i);
    return -1;
  }

  bool same_as(const VarTable& o) const { return vars_ == o.vars_; }

  std::vector<int> weights() const {
    std::vector<int> w(vars_.size());
    for (size_t i = 0; i < vars_.size(); ++i) w[i] = vars_[i].weight;
    return w;
  }

 private:
  explicit VarTable(std::vector<Var> vars) : vars_(std::move(vars)) {}
  std::vector<Var> vars_;
};

using VarTableRef = std::shared_ptr<const VarTable>;

// Ring builders used across the engine. `mom` is "p" for weight-coordinate
// momenta and "x" for the diagonal (family B native) ones.
inline VarTableRef make_vars(const std::vector<std::pair<std::string, int>>& groups) {
  // groups: (prefix, count); count 0 means a bare variable of that exact name.
  std::vector<Var> vs;
  for (const auto& [prefix, count] : groups) {
    int w = (prefix[0] == 'q') ? 2 : 1;
    if (count == 0) {
      vs.push_back({prefix, w});
    } else {
      for (int i = 1; i <= count; ++i) vs.push_back({prefix + std::to_string(i), w});
    }
  }
  return VarTable::make(std::move(vs));
}

inline VarTableRef momentum_q_table(const std::string& mom, int rank) {
  return make_vars({{mom, rank}, {"q", rank}});
}

inline VarTableRef momentum_table(const std::string& mom, int rank) {
  return make_vars({{mom, rank}});
}

}  // namespace qtoda
