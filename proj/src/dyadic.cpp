#include "tvdw/dyadic.hpp"

#include <cmath>

#include "tvdw/common.hpp"

namespace tvdw::dyadic {

namespace {

using Limbs = std::vector<std::uint64_t>;

struct Decomp {
  std::uint64_t m = 0;  // 53-bit significand
  int q = 0;            // |x| = m / 2^q
  bool zero = true;
};

Decomp decompose(double x) {
  Decomp d;
  x = std::abs(x);
  if (x == 0.0) return d;
  if (!std::isfinite(x)) throw domain_error("lattice_frac_dist: non-finite input");
  int e = 0;
  double mant = std::frexp(x, &e);             // x = mant * 2^e, mant in [0.5, 1)
  d.m = static_cast<std::uint64_t>(std::ldexp(mant, 53));
  d.q = 53 - e;
  d.zero = false;
  return d;
}

// v <- (v * f) mod 2^(64*L)
void mul_u64(Limbs& v, std::uint64_t f) {
  unsigned __int128 carry = 0;
  for (auto& limb : v) {
    unsigned __int128 p = static_cast<unsigned __int128>(limb) * f + carry;
    limb = static_cast<std::uint64_t>(p);
    carry = p >> 64;
  }
}

void mask_to_bits(Limbs& v, int q) {
  const int top = q % 64;
  if (top != 0) v.back() &= (std::uint64_t{1} << top) - 1;
}

bool is_zero(const Limbs& v) {
  for (auto limb : v)
    if (limb) return false;
  return true;
}

// c <- 2^q - v (assumes v != 0, v < 2^q)
Limbs complement(const Limbs& v, int q) {
  Limbs c(v.size());
  unsigned __int128 borrow = 1;  // ~v + 1
  for (std::size_t i = 0; i < v.size(); ++i) {
    unsigned __int128 s = static_cast<unsigned __int128>(~v[i]) + borrow;
    c[i] = static_cast<std::uint64_t>(s);
    borrow = s >> 64;
  }
  mask_to_bits(c, q);
  return c;
}

bool less(const Limbs& a, const Limbs& b) {
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

int highest_bit(const Limbs& v) {
  for (std::size_t i = v.size(); i-- > 0;) {
    if (v[i]) return static_cast<int>(i) * 64 + (63 - __builtin_clzll(v[i]));
  }
  return -1;
}

bool get_bit(const Limbs& v, int i) {
  if (i < 0) return false;
  return (v[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u;
}

bool any_bit_below(const Limbs& v, int i) {
  if (i <= 0) return false;
  const int full = i / 64;
  for (int limb = 0; limb < full; ++limb)
    if (v[static_cast<std::size_t>(limb)]) return true;
  const int rem = i % 64;
  if (rem > 0 && (v[static_cast<std::size_t>(full)] & ((std::uint64_t{1} << rem) - 1)))
    return true;
  return false;
}

// Correctly rounded v / 2^q as a double.
double to_double_scaled(const Limbs& v, int q) {
  const int h = highest_bit(v);
  if (h < 0) return 0.0;
  if (h <= 52) return std::ldexp(static_cast<double>(v[0]), -q);
  const int s = h - 52;  // keep bits [s, h]
  std::uint64_t top = 0;
  for (int b = h; b >= s; --b) top = (top << 1) | (get_bit(v, b) ? 1u : 0u);
  const bool round = get_bit(v, s - 1);
  const bool sticky = any_bit_below(v, s - 1);
  if (round && (sticky || (top & 1u))) ++top;
  return std::ldexp(static_cast<double>(top), s - q);
}

void check_base(std::uint64_t a) {
  if (a < 2 || a >= (std::uint64_t{1} << 63))
    throw domain_error("lattice base must be an integer in [2, 2^63)");
}

double dist_from_residue(const Limbs& res, int q) {
  if (is_zero(res)) return 0.0;
  Limbs comp = complement(res, q);
  const Limbs& smaller = less(res, comp) ? res : comp;
  return to_double_scaled(smaller, q);
}

}  // namespace

double lattice_frac_dist(double x, std::uint64_t a, int n) {
  check_base(a);
  if (n < 0) throw domain_error("lattice_frac_dist: negative exponent");
  if (n > 100000) throw resource_error("lattice_frac_dist: exponent too large");
  const Decomp d = decompose(x);
  if (d.zero || d.q <= 0) return 0.0;  // x * a^n is an integer
  const int q = d.q;
  Limbs acc(static_cast<std::size_t>((q + 63) / 64), 0);
  acc[0] = 1;
  for (int i = 0; i < n; ++i) {
    mul_u64(acc, a);
    mask_to_bits(acc, q);
  }
  mul_u64(acc, d.m);
  mask_to_bits(acc, q);
  return dist_from_residue(acc, q);
}

FracStream::FracStream(double x, std::uint64_t a, int start) : a_(a), n_(start) {
  check_base(a);
  if (start < 0) throw domain_error("FracStream: negative start");
  const Decomp d = decompose(x);
  if (d.zero || d.q <= 0) {
    q_ = 0;
    return;
  }
  q_ = d.q;
  res_.assign(static_cast<std::size_t>((q_ + 63) / 64), 0);
  res_[0] = d.m;  // m < 2^53 fits the low limb
  mask_to_bits(res_, q_);
  for (int i = 0; i < start; ++i) advance();
}

double FracStream::dist() const {
  if (q_ <= 0) return 0.0;
  return dist_from_residue(res_, q_);
}

void FracStream::advance() {
  ++n_;
  if (q_ <= 0) return;
  mul_u64(res_, a_);
  mask_to_bits(res_, q_);
}

}  // namespace tvdw::dyadic
