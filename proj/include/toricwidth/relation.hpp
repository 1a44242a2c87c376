#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "toricwidth/numbers.hpp"

namespace toric {

/// Integer vector a indexed by rays with sum a_rho * eta_rho = 0; a curve class.
class Relation {
 public:
  Relation() = default;
  explicit Relation(IntVector a) : a_(std::move(a)) {
    const bool no_negative = std::none_of(a_.begin(), a_.end(), [](const Integer& x) { return x < 0; });
    const bool some_positive = std::any_of(a_.begin(), a_.end(), [](const Integer& x) { return x > 0; });
    nonneg_ = no_negative && some_positive;
  }

  const IntVector& coefficients() const { return a_; }
  std::size_t size() const { return a_.size(); }
  const Integer& operator[](std::size_t i) const { return a_[i]; }
  /// All entries >= 0 and not all zero.
  bool nonneg() const { return nonneg_; }

  Integer total_degree() const {
    Integer s = 0;
    for (const auto& x : a_) s += x;
    return s;
  }

  bool operator==(const Relation& other) const { return a_ == other.a_; }
  bool operator<(const Relation& other) const { return a_ < other.a_; }

 private:
  IntVector a_;
  bool nonneg_ = false;
};

}  // namespace toric
