#pragma once

#include <cstdint>
#include <vector>

#include "tvdw/common.hpp"

namespace tvdw::dyadic {

// Distance from a^n * x to the nearest integer, computed exactly on the
// binary representation of x (x = M / 2^q with integer M), so the result
// is correctly rounded no matter how large a^n is. A naive evaluation of
// frac(a^n * x) in doubles carries an absolute error of order a^n * eps,
// which is fatal once the series weights b^n amplify it; this routine
// keeps the error relative to the lattice spacing instead.
// Requires an integer base 2 <= a < 2^63.
double lattice_frac_dist(double x, std::uint64_t a, int n);

// Streams d(a^n x, Z) for n = start, start+1, ... by keeping the exact
// residue a^n M mod 2^q and multiplying it by a at each step.
class FracStream {
 public:
  FracStream(double x, std::uint64_t a, int start = 0);
  // Current d(a^n x, Z) in [0, 1/2].
  double dist() const;
  void advance();
  int n() const { return n_; }

 private:
  std::uint64_t a_;
  int n_;
  int q_ = 0;                        // x = m / 2^q; q <= 0 means x integral
  std::vector<std::uint64_t> res_;  // a^n * M mod 2^q
};

}  // namespace tvdw::dyadic
