#pragma once

#include <cassert>
#include <vector>

#include "netpot/rational.hpp"

namespace netpot {

/// Dense square matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  explicit RationalMatrix(int order) : order_(order), entries_(static_cast<size_t>(order) * order) {}

  int order() const { return order_; }

  Rational& operator()(int i, int j) { return entries_[static_cast<size_t>(i) * order_ + j]; }
  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<size_t>(i) * order_ + j];
  }

  bool operator==(const RationalMatrix& other) const = default;

  bool is_symmetric() const {
    for (int i = 0; i < order_; ++i)
      for (int j = i + 1; j < order_; ++j)
        if ((*this)(i, j) != (*this)(j, i)) return false;
    return true;
  }

  Rational row_sum(int i) const {
    Rational s = 0;
    for (int j = 0; j < order_; ++j) s += (*this)(i, j);
    return s;
  }

  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
    assert(a.order_ == b.order_);
    RationalMatrix out(a.order_);
    for (int i = 0; i < a.order_; ++i)
      for (int k = 0; k < a.order_; ++k) {
        if (a(i, k) == 0) continue;
        for (int j = 0; j < a.order_; ++j) out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

 private:
  int order_ = 0;
  std::vector<Rational> entries_;
};

}  // namespace netpot
