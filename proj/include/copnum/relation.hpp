#pragma once

#include <compare>
#include <string>

namespace copnum {

// Integer identity  n_coef*n = k_coef*k + constant  between GP parameters.
// n_coef == 0 encodes a fixed k (k_coef*k + constant == 0), k_coef == 0 a fixed n.
struct LinearRelation {
  int n_coef = 1;
  int k_coef = 0;
  int constant = 0;

  bool holds(int n, int k) const { return n_coef * n == k_coef * k + constant; }

  // Divides out the common factor and fixes the sign so the leading coefficient is positive.
  LinearRelation normalized() const;

  // Appendix-style text: "k=5", "n=6", "n=3k+3", "2n=5k-1", "n=7k/3".
  std::string format() const;

  static LinearRelation fixed_k(int k) { return {0, 1, -k}; }
  static LinearRelation fixed_n(int n) { return {1, 0, n}; }

  auto operator<=>(const LinearRelation&) const = default;
};

}  // namespace copnum
