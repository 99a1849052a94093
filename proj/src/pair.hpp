#pragma once

#include <cmath>
#include <string>

#include "errors.hpp"

namespace capcone {

// Dimension pair (n,k) for a rotationally invariant cone profile over t in [0,1).
// k = n-1 is rejected: the profile equation degenerates there (the exact cone
// height sqrt(k/(n-k-1)) blows up) and none of the constructions below apply.
struct ConePair {
  int n = 0;
  int k = 0;

  static ConePair create(int n, int k) {
    if (n < 3) fail(errc::invalid_input, "need n >= 3, got n=" + std::to_string(n));
    if (k < 1 || k > n - 2)
      fail(errc::invalid_input,
           "need 1 <= k <= n-2, got k=" + std::to_string(k) + " at n=" + std::to_string(n));
    return ConePair{n, k};
  }

  double alpha() const { return double(k - 1) / double(n - 2); }

  // First order coefficient A(t) = t - alpha/t, singular at t = 0.
  double A(double t) const { return t - alpha() / t; }

  // Height of the exact minimal cone over the Clifford-type link.
  double lawson_height() const { return std::sqrt(double(k) / double(n - k - 1)); }

  // Root of the exact cone profile.
  double lawson_root() const { return std::sqrt(double(k) / double(n - 1)); }
};

}  // namespace capcone
