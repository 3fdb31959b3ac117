#pragma once

#include <array>
#include <compare>
#include <string>
#include <utility>
#include <vector>

namespace expkit {

/**
 * Hurwitz integer stored by doubled coordinates: the value is
 * (u0 + u1 i + u2 j + u3 k) / 2 with all u of the same parity.
 */
class HurwitzInt {
 public:
  HurwitzInt() = default;
  /// Throws ContractError when the parities differ.
  static HurwitzInt from_doubled(long long u0, long long u1, long long u2, long long u3);
  static HurwitzInt integral(long long a0, long long a1, long long a2, long long a3);
  static HurwitzInt scalar(long long n) { return integral(n, 0, 0, 0); }
  /// f = (1 + i + j + k) / 2
  static HurwitzInt f() { return from_doubled(1, 1, 1, 1); }

  long long doubled(int i) const { return u_.at(i); }
  const std::array<long long, 4>& doubled() const noexcept { return u_; }
  bool is_integral() const noexcept { return u_[0] % 2 == 0; }
  bool is_zero() const noexcept { return u_ == std::array<long long, 4>{}; }
  /// Integral coordinate a_i; only valid for integral elements.
  long long coord(int i) const;

  long long norm() const;
  HurwitzInt conj() const;

  friend HurwitzInt operator*(const HurwitzInt& a, const HurwitzInt& b);
  friend HurwitzInt operator+(const HurwitzInt& a, const HurwitzInt& b);
  friend HurwitzInt operator-(const HurwitzInt& a, const HurwitzInt& b);
  HurwitzInt operator-() const;
  friend bool operator==(const HurwitzInt&, const HurwitzInt&) = default;
  friend auto operator<=>(const HurwitzInt& a, const HurwitzInt& b) { return a.u_ <=> b.u_; }

  /// True when every coordinate of this / n lies in the Hurwitz order.
  bool divisible_by(long long n) const;
  /// Exact division by a positive integer; requires divisible_by(n).
  HurwitzInt divided_by(long long n) const;

 private:
  std::array<long long, 4> u_{};
};

std::string to_string(const HurwitzInt& q);

/// The 24 elements of norm 1, sorted.
std::vector<HurwitzInt> units();

/// alpha = gamma * beta + delta with N(delta) < N(beta). Midpoint ties round to even.
std::pair<HurwitzInt, HurwitzInt> left_divmod(const HurwitzInt& alpha, const HurwitzInt& beta);

/// Generator of the left ideal H alpha + H beta.
HurwitzInt left_gcd(HurwitzInt alpha, HurwitzInt beta);

/// True when x = y * d for some Hurwitz y.
bool right_divides(const HurwitzInt& d, const HurwitzInt& x);

enum class QuaternionRing { integral, hurwitz };

/// All elements of the ring with the given norm, sorted. N <= 10^4.
std::vector<HurwitzInt> enumerate_norm(long long n, QuaternionRing ring);

/// Integral norm-p elements with odd positive real part; p = 1 (mod 4).
std::vector<HurwitzInt> representatives_S(long long p);

/// Representative of the left unit class of alpha: the greatest integral element
/// among u * alpha for the 24 units u.
HurwitzInt canonical_associate(const HurwitzInt& alpha);

/// alpha = beta * pi with N(pi) = p and pi canonical; p odd prime dividing N(alpha), p not dividing alpha.
std::pair<HurwitzInt, HurwitzInt> factor_out_norm_p(const HurwitzInt& alpha, long long p);

struct NormPFactorization {
  HurwitzInt unit;
  int p_power = 0;
  /// alpha = unit * p^p_power * word[0] * ... * word[m-1].
  std::vector<HurwitzInt> word;
};

NormPFactorization factor_norm_power(const HurwitzInt& alpha, long long p);

struct M2Census {
  long long singular_nonzero = 0;
  long long ideals = 0;
  /// Size of every GL_2 orbit of nonzero singular matrices under left multiplication.
  long long orbit_size = 0;
  bool orbits_uniform = true;
};

/// Exhaustive census of the singular matrices of M_2(F_p), p odd prime <= 13.
M2Census m2fp_ideal_census(long long p);

/// 2x2 matrix over F_p, row-major.
using Mat2 = std::array<long long, 4>;

struct QuaternionToM2 {
  long long p = 0;
  /// x with x^2 = -1 (mod p)
  long long root = 0;
  /// Images of 1, i, j, k.
  std::array<Mat2, 4> basis{};

  Mat2 operator()(long long a0, long long a1, long long a2, long long a3) const;
};

/// Embedding H(F_p) -> M_2(F_p) for p = 1 (mod 4).
QuaternionToM2 hfp_to_m2(long long p);

Mat2 mat2_mul(const Mat2& a, const Mat2& b, long long p);

}  // namespace expkit
