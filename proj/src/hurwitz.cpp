#include "expkit/hurwitz.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>
#include <stdexcept>

#include "expkit/graph.hpp"

namespace expkit {

namespace {

std::array<long long, 4> hamilton(const std::array<long long, 4>& a, const std::array<long long, 4>& b) {
  return {a[0] * b[0] - a[1] * b[1] - a[2] * b[2] - a[3] * b[3],
          a[0] * b[1] + a[1] * b[0] + a[2] * b[3] - a[3] * b[2],
          a[0] * b[2] - a[1] * b[3] + a[2] * b[0] + a[3] * b[1],
          a[0] * b[3] + a[1] * b[2] - a[2] * b[1] + a[3] * b[0]};
}

long long floor_div(long long a, long long b) {
  long long q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

// Nearest integer to a / b (b > 0), ties to even.
long long round_half_even(long long a, long long b) {
  long long q = floor_div(a, b);
  long long twice_rem = 2 * (a - q * b);
  if (twice_rem > b || (twice_rem == b && q % 2 != 0)) ++q;
  return q;
}

long long mod(long long a, long long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

bool is_prime(long long p) {
  if (p < 2) return false;
  for (long long d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// alpha = gamma * n + delta for a positive integer n, by the f-basis rounding.
std::pair<HurwitzInt, HurwitzInt> scalar_divmod(const HurwitzInt& alpha, long long n) {
  // In the basis f, i, j, k: a0 = u0 and a0 + 2 a_t = u_t.
  const long long a0 = alpha.doubled(0);
  const long long x0 = round_half_even(a0, n);
  std::array<long long, 4> g{x0, 0, 0, 0};
  for (int t = 1; t < 4; ++t) {
    long long xt = round_half_even(alpha.doubled(t) - n * x0, 2 * n);
    g[t] = x0 + 2 * xt;
  }
  HurwitzInt gamma = HurwitzInt::from_doubled(g[0], g[1], g[2], g[3]);
  return {gamma, alpha - gamma * HurwitzInt::scalar(n)};
}

}  // namespace

HurwitzInt HurwitzInt::from_doubled(long long u0, long long u1, long long u2, long long u3) {
  auto odd = [](long long x) { return (x % 2 + 2) % 2; };
  if (odd(u0) != odd(u1) || odd(u0) != odd(u2) || odd(u0) != odd(u3))
    throw ContractError("Hurwitz coordinates must be all integers or all half-odd");
  HurwitzInt q;
  q.u_ = {u0, u1, u2, u3};
  return q;
}

HurwitzInt HurwitzInt::integral(long long a0, long long a1, long long a2, long long a3) {
  return from_doubled(2 * a0, 2 * a1, 2 * a2, 2 * a3);
}

long long HurwitzInt::coord(int i) const {
  if (!is_integral()) throw ContractError("element is not integral");
  return u_.at(i) / 2;
}

long long HurwitzInt::norm() const {
  return (u_[0] * u_[0] + u_[1] * u_[1] + u_[2] * u_[2] + u_[3] * u_[3]) / 4;
}

HurwitzInt HurwitzInt::conj() const { return from_doubled(u_[0], -u_[1], -u_[2], -u_[3]); }

HurwitzInt operator*(const HurwitzInt& a, const HurwitzInt& b) {
  auto p = hamilton(a.u_, b.u_);
  for (auto& x : p) {
    if (x % 2 != 0) throw std::logic_error("Hurwitz product left the order");
    x /= 2;
  }
  return HurwitzInt::from_doubled(p[0], p[1], p[2], p[3]);
}

HurwitzInt operator+(const HurwitzInt& a, const HurwitzInt& b) {
  return HurwitzInt::from_doubled(a.u_[0] + b.u_[0], a.u_[1] + b.u_[1], a.u_[2] + b.u_[2], a.u_[3] + b.u_[3]);
}

HurwitzInt operator-(const HurwitzInt& a, const HurwitzInt& b) { return a + (-b); }

HurwitzInt HurwitzInt::operator-() const { return from_doubled(-u_[0], -u_[1], -u_[2], -u_[3]); }

bool HurwitzInt::divisible_by(long long n) const {
  if (n <= 0) throw ContractError("divisor must be positive");
  for (long long x : u_)
    if (x % n != 0) return false;
  auto odd = [](long long x) { return (x % 2 + 2) % 2; };
  long long par = odd(u_[0] / n);
  for (long long x : u_)
    if (odd(x / n) != par) return false;
  return true;
}

HurwitzInt HurwitzInt::divided_by(long long n) const {
  if (!divisible_by(n)) throw ContractError("element is not divisible by " + std::to_string(n));
  return from_doubled(u_[0] / n, u_[1] / n, u_[2] / n, u_[3] / n);
}

std::string to_string(const HurwitzInt& q) {
  auto part = [&](int i) {
    long long u = q.doubled(i);
    return u % 2 == 0 ? std::to_string(u / 2) : std::to_string(u) + "/2";
  };
  return "(" + part(0) + ", " + part(1) + ", " + part(2) + ", " + part(3) + ")";
}

std::vector<HurwitzInt> units() { return enumerate_norm(1, QuaternionRing::hurwitz); }

std::pair<HurwitzInt, HurwitzInt> left_divmod(const HurwitzInt& alpha, const HurwitzInt& beta) {
  if (beta.is_zero()) throw ContractError("division by zero");
  const long long n = beta.norm();
  auto [gamma, rest] = scalar_divmod(alpha * beta.conj(), n);
  return {gamma, alpha - gamma * beta};
}

HurwitzInt left_gcd(HurwitzInt alpha, HurwitzInt beta) {
  if (alpha.is_zero() && beta.is_zero()) throw ContractError("gcd of two zeros");
  while (!beta.is_zero()) {
    auto delta = left_divmod(alpha, beta).second;
    alpha = beta;
    beta = delta;
  }
  return alpha;
}

bool right_divides(const HurwitzInt& d, const HurwitzInt& x) {
  if (d.is_zero()) return x.is_zero();
  return left_divmod(x, d).second.is_zero();
}

std::vector<HurwitzInt> enumerate_norm(long long n, QuaternionRing ring) {
  if (n < 0 || n > 10000) throw ContractError("norm must lie in [0, 10^4]");
  // Doubled coordinates satisfy sum u^2 = 4n.
  const long long target = 4 * n;
  const long long bound = static_cast<long long>(std::sqrt(double(target))) + 1;
  std::vector<HurwitzInt> out;
  for (int parity = 0; parity < 2; ++parity) {
    if (parity == 1 && ring == QuaternionRing::integral) continue;
    auto start = [&](long long lo) { return ((lo % 2 + 2) % 2 == parity) ? lo : lo + 1; };
    for (long long u0 = start(-bound); u0 <= bound; u0 += 2) {
      long long r0 = target - u0 * u0;
      if (r0 < 0) continue;
      for (long long u1 = start(-bound); u1 <= bound; u1 += 2) {
        long long r1 = r0 - u1 * u1;
        if (r1 < 0) continue;
        for (long long u2 = start(-bound); u2 <= bound; u2 += 2) {
          long long r2 = r1 - u2 * u2;
          if (r2 < 0) continue;
          long long u3 = static_cast<long long>(std::llround(std::sqrt(double(r2))));
          if (u3 * u3 != r2 || (u3 % 2) != parity) continue;
          out.push_back(HurwitzInt::from_doubled(u0, u1, u2, u3));
          if (u3 != 0) out.push_back(HurwitzInt::from_doubled(u0, u1, u2, -u3));
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<HurwitzInt> representatives_S(long long p) {
  if (!is_prime(p) || p % 4 != 1) throw ContractError("representatives_S needs a prime p = 1 (mod 4)");
  std::vector<HurwitzInt> out;
  for (const auto& q : enumerate_norm(p, QuaternionRing::integral)) {
    long long a0 = q.coord(0);
    if (a0 > 0 && a0 % 2 == 1) out.push_back(q);
  }
  return out;
}

HurwitzInt canonical_associate(const HurwitzInt& alpha) {
  static const std::vector<HurwitzInt> all_units = units();
  std::optional<HurwitzInt> best_integral;
  HurwitzInt best_any = all_units.front() * alpha;
  for (const auto& u : all_units) {
    HurwitzInt c = u * alpha;
    best_any = std::max(best_any, c);
    if (c.is_integral() && (!best_integral || *best_integral < c)) best_integral = c;
  }
  return best_integral ? *best_integral : best_any;
}

std::pair<HurwitzInt, HurwitzInt> factor_out_norm_p(const HurwitzInt& alpha, long long p) {
  if (!is_prime(p) || p == 2) throw ContractError("p must be an odd prime");
  if (alpha.is_zero() || alpha.norm() % p != 0) throw ContractError("p does not divide N(alpha)");
  if (alpha.divisible_by(p)) throw ContractError("alpha is divisible by p; divide it out first");
  HurwitzInt pi = canonical_associate(left_gcd(alpha, HurwitzInt::scalar(p)));
  if (pi.norm() != p) throw std::logic_error("left gcd with p does not have norm p");
  HurwitzInt beta = (alpha * pi.conj()).divided_by(p);
  return {beta, pi};
}

NormPFactorization factor_norm_power(const HurwitzInt& alpha, long long p) {
  if (alpha.is_zero()) throw ContractError("cannot factor zero");
  NormPFactorization out;
  HurwitzInt rest = alpha;
  while (rest.divisible_by(p)) {
    rest = rest.divided_by(p);
    ++out.p_power;
  }
  while (rest.norm() % p == 0) {
    auto [beta, pi] = factor_out_norm_p(rest, p);
    out.word.insert(out.word.begin(), pi);
    rest = beta;
  }
  out.unit = rest;
  return out;
}

Mat2 mat2_mul(const Mat2& a, const Mat2& b, long long p) {
  return {mod(a[0] * b[0] + a[1] * b[2], p), mod(a[0] * b[1] + a[1] * b[3], p),
          mod(a[2] * b[0] + a[3] * b[2], p), mod(a[2] * b[1] + a[3] * b[3], p)};
}

M2Census m2fp_ideal_census(long long p) {
  if (!is_prime(p) || p == 2 || p > 13) throw ContractError("census needs an odd prime p <= 13");
  auto det = [p](const Mat2& m) { return mod(m[0] * m[3] - m[1] * m[2], p); };
  auto encode = [p](const Mat2& m) { return ((m[0] * p + m[1]) * p + m[2]) * p + m[3]; };
  std::vector<Mat2> all, gl, singular;
  for (long long a = 0; a < p; ++a)
    for (long long b = 0; b < p; ++b)
      for (long long c = 0; c < p; ++c)
        for (long long d = 0; d < p; ++d) all.push_back({a, b, c, d});
  for (const auto& m : all) {
    if (det(m) != 0)
      gl.push_back(m);
    else if (m != Mat2{0, 0, 0, 0})
      singular.push_back(m);
  }
  M2Census out;
  out.singular_nonzero = static_cast<long long>(singular.size());

  // The left ideal of a rank-one matrix is fixed by its row space, a line in F_p^2.
  std::set<std::pair<long long, long long>> lines;
  for (const auto& m : singular) {
    long long r0 = m[0], r1 = m[1];
    if (r0 == 0 && r1 == 0) {
      r0 = m[2];
      r1 = m[3];
    }
    // Scale the row so its first nonzero entry is 1.
    long long lead = r0 != 0 ? r0 : r1;
    long long inv = 1;
    for (long long x = 1; x < p; ++x)
      if (mod(lead * x, p) == 1) inv = x;
    lines.emplace(mod(r0 * inv, p), mod(r1 * inv, p));
  }
  out.ideals = static_cast<long long>(lines.size());

  std::vector<char> seen(static_cast<std::size_t>(p * p * p * p), 0);
  for (const auto& m : singular) {
    if (seen[encode(m)]) continue;
    long long size = 0;
    for (const auto& g : gl) {
      auto x = mat2_mul(g, m, p);
      if (!seen[encode(x)]) {
        seen[encode(x)] = 1;
        ++size;
      }
    }
    if (out.orbit_size == 0)
      out.orbit_size = size;
    else if (out.orbit_size != size)
      out.orbits_uniform = false;
  }
  return out;
}

Mat2 QuaternionToM2::operator()(long long a0, long long a1, long long a2, long long a3) const {
  const long long a[4] = {a0, a1, a2, a3};
  Mat2 out{0, 0, 0, 0};
  for (int t = 0; t < 4; ++t)
    for (int e = 0; e < 4; ++e) out[e] = mod(out[e] + a[t] * basis[t][e], p);
  return out;
}

QuaternionToM2 hfp_to_m2(long long p) {
  if (!is_prime(p) || p % 4 != 1) throw ContractError("embedding implemented only for primes p = 1 (mod 4)");
  QuaternionToM2 m;
  m.p = p;
  for (long long x = 1; x < p; ++x)
    if (mod(x * x + 1, p) == 0) {
      m.root = x;
      break;
    }
  m.basis[0] = {1, 0, 0, 1};
  m.basis[1] = {m.root, 0, 0, mod(-m.root, p)};
  m.basis[2] = {0, 1, mod(-1, p), 0};
  m.basis[3] = mat2_mul(m.basis[1], m.basis[2], p);
  return m;
}

}  // namespace expkit
