#pragma once

#include <algorithm>
#include <initializer_list>
#include <vector>

#include "bhw/formula.hpp"

namespace bhw::fml {

// A finite set of formulas, kept in canonical alpha-renamed form and sorted,
// so membership is independent of bound-variable names and order.
class Sequent {
 public:
  Sequent() = default;
  Sequent(std::initializer_list<Formula> fs) {
    for (const Formula& f : fs) insert(f);
  }

  static Sequent of(const std::vector<Formula>& fs) {
    Sequent s;
    for (const Formula& f : fs) s.insert(f);
    return s;
  }

  Sequent plus(const Formula& f) const {
    Sequent s = *this;
    s.insert(f);
    return s;
  }

  Sequent plus_all(const Sequent& o) const {
    Sequent s = *this;
    for (const Formula& f : o.fs_) s.insert_canonical(f);
    return s;
  }

  Sequent minus(const Formula& f) const {
    Formula c = canon(f);
    Sequent s;
    for (const Formula& g : fs_)
      if (compare_raw(g, c) != ord::Cmp::Equal) s.fs_.push_back(g);
    return s;
  }

  bool contains(const Formula& f) const {
    Formula c = canon(f);
    return std::binary_search(fs_.begin(), fs_.end(), c, FormulaLess{});
  }

  bool subset_of(const Sequent& o) const {
    for (const Formula& f : fs_)
      if (!std::binary_search(o.fs_.begin(), o.fs_.end(), f, FormulaLess{}))
        return false;
    return true;
  }

  bool operator==(const Sequent& o) const {
    if (fs_.size() != o.fs_.size()) return false;
    for (std::size_t i = 0; i < fs_.size(); ++i)
      if (compare_raw(fs_[i], o.fs_[i]) != ord::Cmp::Equal) return false;
    return true;
  }

  const std::vector<Formula>& formulas() const { return fs_; }
  bool empty() const { return fs_.empty(); }
  std::size_t size() const { return fs_.size(); }

  ParamSet params() const {
    ParamSet out;
    for (const Formula& f : fs_) params_into(f, out);
    return out;
  }

  int max_len() const {
    int m = 0;
    for (const Formula& f : fs_) m = std::max(m, length(f));
    return m;
  }

  std::set<std::string> free_variables() const {
    std::set<std::string> out;
    for (const Formula& f : fs_) {
      auto fv = free_vars(f);
      out.insert(fv.begin(), fv.end());
    }
    return out;
  }

 private:
  static void params_into(const Formula& f, ParamSet& out) {
    ParamSet p = bhw::fml::params(f);
    out.insert(p.begin(), p.end());
  }

  void insert(const Formula& f) { insert_canonical(canon(f)); }

  void insert_canonical(const Formula& c) {
    auto it = std::lower_bound(fs_.begin(), fs_.end(), c, FormulaLess{});
    if (it != fs_.end() && compare_raw(*it, c) == ord::Cmp::Equal) return;
    fs_.insert(it, c);
  }

  std::vector<Formula> fs_;
};

}  // namespace bhw::fml
