#include "core/factorize.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "core/error.hpp"

namespace syt {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr std::uint32_t kSmallBound = 1000;
// Rho steps tried before switching to elliptic curves.
constexpr std::uint64_t kQuickRho = 1 << 16;
constexpr int kEcmCurves = 200;

u64 mul_mod(u64 a, u64 b, u64 n) { return static_cast<u64>(static_cast<u128>(a) * b % n); }

u64 pow_mod(u64 base, u64 exp, u64 n) {
  u64 result = 1 % n;
  base %= n;
  while (exp) {
    if (exp & 1) result = mul_mod(result, base, n);
    base = mul_mod(base, base, n);
    exp >>= 1;
  }
  return result;
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  static constexpr u64 kBases[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kBases) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : kBases) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int r = 1; r < s; ++r) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

bool fits_u64(const BigInt& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 64; }

u64 to_u64(const BigInt& n) {
  u64 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

BigInt from_u64(u64 v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

// Montgomery multiplication modulo an odd n, for n < 2^64 and n < 2^126.
// Values stay in Montgomery form throughout the rho iteration; the map
// y -> y*y/R + c is as good a pseudo-random map as y*y + c, and gcds with n
// ignore the unit factor R.
struct Mont64 {
  using T = u64;
  u64 n;
  u64 inv;
  explicit Mont64(u64 modulus) : n(modulus), inv(modulus) {
    for (int i = 0; i < 6; ++i) inv *= 2 - n * inv;
  }
  u64 mul(u64 a, u64 b) const {
    const u128 t = static_cast<u128>(a) * b;
    const u64 q = static_cast<u64>(t) * inv;
    const u64 h = static_cast<u64>((static_cast<u128>(q) * n) >> 64);
    const u64 hi = static_cast<u64>(t >> 64);
    return hi >= h ? hi - h : hi + (n - h);
  }
  static u64 gcd(u64 a, u64 b) { return std::gcd(a, b); }
};

struct Mont128 {
  using T = u128;
  u128 n;
  u128 inv;
  explicit Mont128(u128 modulus) : n(modulus), inv(modulus) {
    for (int i = 0; i < 7; ++i) inv *= 2 - n * inv;
  }
  static void wide_mul(u128 a, u128 b, u128& hi, u128& lo) {
    const u64 a0 = static_cast<u64>(a), a1 = static_cast<u64>(a >> 64);
    const u64 b0 = static_cast<u64>(b), b1 = static_cast<u64>(b >> 64);
    const u128 p00 = static_cast<u128>(a0) * b0;
    const u128 p01 = static_cast<u128>(a0) * b1;
    const u128 p10 = static_cast<u128>(a1) * b0;
    const u128 p11 = static_cast<u128>(a1) * b1;
    const u128 mid = (p00 >> 64) + static_cast<u64>(p01) + static_cast<u64>(p10);
    hi = p11 + (p01 >> 64) + (p10 >> 64) + (mid >> 64);
    lo = (mid << 64) | static_cast<u64>(p00);
  }
  u128 mul(u128 a, u128 b) const {
    u128 hi, lo, h, unused;
    wide_mul(a, b, hi, lo);
    wide_mul(lo * inv, n, h, unused);
    return hi >= h ? hi - h : hi + (n - h);
  }
  static u128 gcd(u128 a, u128 b) {
    if (a == 0) return b;
    if (b == 0) return a;
    int twos = 0;
    while (((a | b) & 1) == 0) {
      a >>= 1;
      b >>= 1;
      ++twos;
    }
    while ((a & 1) == 0) a >>= 1;
    while (b != 0) {
      while ((b & 1) == 0) b >>= 1;
      if (a > b) std::swap(a, b);
      b -= a;
    }
    return a << twos;
  }
};

// Brent's variant of Pollard's rho for an odd composite n. Returns a
// nontrivial divisor, or 0 when the budget ran out.
template <class Mont>
typename Mont::T brent(typename Mont::T n, u64& budget) {
  using T = typename Mont::T;
  const Mont mont(n);
  for (T c = 1; budget > 0; ++c) {
    auto f = [&](T v) {
      T w = mont.mul(v, v) + c;
      return w >= n ? w - n : w;
    };
    T y = (2 + c) % n, x = y, ys = y, q = 1, g = 1;
    u64 r = 1;
    constexpr u64 m = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r; ++i) y = f(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        const u64 steps = std::min(m, r - k);
        for (u64 i = 0; i < steps; ++i) {
          y = f(y);
          q = mont.mul(q, x > y ? x - y : y - x);
        }
        g = Mont::gcd(q, n);
        budget = budget > steps ? budget - steps : 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        ys = f(ys);
        g = Mont::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

u64 brent_u64(u64 n, u64& budget) {
  if (n % 2 == 0) return 2;
  return brent<Mont64>(n, budget);
}

bool fits_u126(const BigInt& n) { return mpz_sizeinbase(n.get_mpz_t(), 2) <= 126; }

u128 to_u128(const BigInt& n) {
  u128 out = 0;
  mpz_export(&out, nullptr, -1, sizeof(out), 0, 0, n.get_mpz_t());
  return out;
}

BigInt from_u128(u128 v) {
  BigInt out;
  mpz_import(out.get_mpz_t(), 1, -1, sizeof(v), 0, 0, &v);
  return out;
}

BigInt brent_big(const BigInt& n, u64& budget) {
  if (mpz_even_p(n.get_mpz_t())) return 2;
  BigInt x, y, ys, q, g, diff;
  for (unsigned long c = 1; budget > 0; ++c) {
    auto f = [&](BigInt& v) {
      mpz_mul(v.get_mpz_t(), v.get_mpz_t(), v.get_mpz_t());
      mpz_add_ui(v.get_mpz_t(), v.get_mpz_t(), c);
      mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
    };
    y = 2 + c;
    x = y;
    ys = y;
    q = 1;
    g = 1;
    u64 r = 1;
    constexpr u64 m = 128;
    while (g == 1 && budget > 0) {
      x = y;
      for (u64 i = 0; i < r; ++i) f(y);
      for (u64 k = 0; k < r && g == 1; k += m) {
        ys = y;
        const u64 steps = std::min(m, r - k);
        for (u64 i = 0; i < steps; ++i) {
          f(y);
          mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t());
          mpz_mul(q.get_mpz_t(), q.get_mpz_t(), diff.get_mpz_t());
          mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        }
        mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
        budget = budget > steps ? budget - steps : 0;
      }
      r *= 2;
    }
    if (g == n) {
      do {
        f(ys);
        mpz_sub(diff.get_mpz_t(), x.get_mpz_t(), ys.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
      } while (g == 1);
    }
    if (g != 1 && g != n) return g;
  }
  return 0;
}

// Elliptic curve method on Montgomery curves By^2 = x^3 + Ax^2 + x in
// x/z coordinates, all arithmetic in Montgomery form modulo an odd n < 2^126.
class Ecm {
 public:
  explicit Ecm(u128 n) : mont_(n), big_n_(from_u128(n)) {}

  // Nontrivial divisor of n, or 0 when every curve failed.
  u128 run(int curves, u64& budget) {
    for (int c = 0; c < curves && budget > 0; ++c) {
      const u64 b1 = c < 40 ? 2000 : c < 120 ? 11000 : 50000;
      const u128 g = curve(6 + static_cast<unsigned>(c), b1, 100 * b1);
      // one curve costs roughly as much as b1 rho steps
      budget = budget > 20 * b1 ? budget - 20 * b1 : 0;
      if (g != 0) return g;
    }
    return 0;
  }

 private:
  struct Point {
    u128 x;
    u128 z;
  };

  u128 add(u128 a, u128 b) const {
    const u128 s = a + b;
    return s >= mont_.n ? s - mont_.n : s;
  }
  u128 sub(u128 a, u128 b) const { return a >= b ? a - b : a + (mont_.n - b); }
  u128 mul(u128 a, u128 b) const { return mont_.mul(a, b); }

  Point dbl(Point p) const {
    const u128 s = add(p.x, p.z);
    const u128 d = sub(p.x, p.z);
    const u128 ss = mul(s, s);
    const u128 dd = mul(d, d);
    const u128 t = sub(ss, dd);
    return {mul(ss, dd), mul(t, add(dd, mul(a24_, t)))};
  }

  // p + q given p - q.
  Point dadd(Point p, Point q, Point diff) const {
    const u128 u = mul(sub(p.x, p.z), add(q.x, q.z));
    const u128 v = mul(add(p.x, p.z), sub(q.x, q.z));
    const u128 s = add(u, v);
    const u128 d = sub(u, v);
    return {mul(diff.z, mul(s, s)), mul(diff.x, mul(d, d))};
  }

  Point ladder(Point p, u64 k) const {
    if (k == 1) return p;
    Point r0 = p, r1 = dbl(p);
    for (int bit = 62 - std::countl_zero(k); bit >= 0; --bit) {
      if ((k >> bit) & 1) {
        r0 = dadd(r1, r0, p);
        r1 = dbl(r1);
      } else {
        r1 = dadd(r1, r0, p);
        r0 = dbl(r0);
      }
    }
    return r0;
  }

  u128 to_mont(const BigInt& v) const {
    BigInt t = v;
    mpz_mul_2exp(t.get_mpz_t(), t.get_mpz_t(), 128);
    mpz_mod(t.get_mpz_t(), t.get_mpz_t(), big_n_.get_mpz_t());
    return to_u128(t);
  }

  u128 divisor(u128 v) const {
    const u128 g = Mont128::gcd(v, mont_.n);
    return g != 1 && g != mont_.n ? g : 0;
  }

  // Suyama's parametrization; the group order has a factor 12.
  u128 curve(unsigned sigma, u64 b1, u64 b2) {
    const BigInt& n = big_n_;
    const BigInt u = (BigInt(sigma) * sigma - 5) % n;
    const BigInt v = BigInt(4 * sigma) % n;
    const BigInt x0 = (u * u * u) % n;
    const BigInt z0 = (v * v * v) % n;
    const BigInt vu = ((v - u) % n + n) % n;
    const BigInt num = (vu * vu % n) * vu % n * ((3 * u + v) % n) % n;
    BigInt den = (16 * x0 % n) * v % n;
    BigInt g;
    mpz_gcd(g.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    if (g == n) return 0;
    if (g != 1) return to_u128(g);
    mpz_invert(den.get_mpz_t(), den.get_mpz_t(), n.get_mpz_t());
    a24_ = to_mont(num * den % n);

    Point q{to_mont(x0), to_mont(z0)};
    for (std::uint32_t p : tables().primes) {
      if (p > b1) break;
      u64 pk = p;
      while (pk * p <= b1) pk *= p;
      q = ladder(q, pk);
    }
    if (const u128 d = divisor(q.z)) return d;
    if (q.z == 0) return 0;

    // Stage 2: a prime s in (b1, b2] with [s]Q = 0 gives k*G = +-j and
    // x_{kG} z_j - x_j z_{kG} = 0 mod p.
    std::vector<Point> baby(kGiant / 2 + 1);
    baby[1] = q;
    const Point q2 = dbl(q);
    if (kGiant / 2 >= 3) baby[3] = dadd(q2, q, q);
    for (u64 j = 5; j <= kGiant / 2; j += 2) baby[j] = dadd(baby[j - 2], q2, baby[j - 4]);
    const Point step = ladder(q, kGiant);
    u64 k = std::max<u64>(1, b1 / kGiant);
    Point prev = k == 1 ? q : ladder(q, (k - 1) * kGiant);
    Point cur = ladder(q, k * kGiant);
    const std::vector<bool>& prime_flags = tables().is_prime;
    u128 acc = to_mont(1);
    for (; (k - 1) * kGiant <= b2; ++k) {
      for (u64 j = 1; j <= kGiant / 2; j += 2) {
        const u64 hi = k * kGiant + j;
        const u64 lo = k * kGiant - j;
        const bool hit = (hi > b1 && hi <= b2 && prime_flags[hi]) || (lo > b1 && lo <= b2 && prime_flags[lo]);
        if (!hit) continue;
        acc = mul(acc, sub(mul(cur.x, baby[j].z), mul(baby[j].x, cur.z)));
      }
      // [k-1]G is the difference of [k]G and G, except the first step where
      // prev may coincide with Q.
      const Point next = (k == 1) ? dbl(cur) : dadd(cur, step, prev);
      prev = cur;
      cur = next;
    }
    return divisor(acc);
  }

  struct Tables {
    std::vector<std::uint32_t> primes;
    std::vector<bool> is_prime;
  };

  // Built once for the largest stage-2 bound; static init is thread-safe.
  static const Tables& tables() {
    static const Tables t = [] {
      Tables out;
      out.primes = primes_up_to(static_cast<std::uint32_t>(kMaxB2 + 2 * kGiant));
      out.is_prime.assign(kMaxB2 + 2 * kGiant + 1, false);
      for (std::uint32_t p : out.primes) out.is_prime[p] = true;
      return out;
    }();
    return t;
  }

  static constexpr u64 kGiant = 2 * 3 * 5 * 7 * 2;
  static constexpr u64 kMaxB2 = 100 * 50000;

  Mont128 mont_;
  BigInt big_n_;
  u128 a24_ = 0;
};

// Product of the primes in [kSmallBound, kTrialBound); a single gcd with it
// replaces some 78000 trial divisions.
const BigInt& medium_prime_product() {
  static const BigInt product = [] {
    std::vector<BigInt> level;
    for (std::uint32_t p : primes_up_to(kTrialBound - 1)) {
      if (p >= kSmallBound) level.emplace_back(p);
    }
    while (level.size() > 1) {
      std::vector<BigInt> next;
      for (std::size_t i = 0; i + 1 < level.size(); i += 2) next.push_back(level[i] * level[i + 1]);
      if (level.size() % 2) next.push_back(level.back());
      level = std::move(next);
    }
    return level.empty() ? BigInt(1) : level.front();
  }();
  return product;
}

const std::vector<std::uint32_t>& small_primes() {
  static const std::vector<std::uint32_t> primes = primes_up_to(kSmallBound - 1);
  return primes;
}

struct Splitter {
  std::map<BigInt, unsigned> found;
  std::vector<BigInt> stuck;
  u64 budget;
  bool probabilistic = false;

  void split(const BigInt& n) {
    if (n == 1) return;
    if (is_prime(n)) {
      if (!fits_u64(n)) probabilistic = true;
      ++found[n];
      return;
    }
    BigInt d;
    if (fits_u64(n)) {
      const u64 f = brent_u64(to_u64(n), budget);
      if (f != 0) d = from_u64(f);
    } else if (fits_u126(n)) {
      if (mpz_even_p(n.get_mpz_t())) {
        d = 2;
      } else {
        const u128 m = to_u128(n);
        u64 quick = std::min<u64>(budget, kQuickRho);
        const u64 before = quick;
        u128 f = brent<Mont128>(m, quick);
        budget -= before - quick;
        if (f == 0) f = Ecm(m).run(kEcmCurves, budget);
        if (f == 0) f = brent<Mont128>(m, budget);
        if (f != 0) d = from_u128(f);
      }
    } else {
      d = brent_big(n, budget);
    }
    if (d == 0) {
      stuck.push_back(n);
      return;
    }
    split(d);
    split(BigInt(n / d));
  }
};

}  // namespace

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (fits_u64(n)) return is_prime_u64(to_u64(n));
  return mpz_probab_prime_p(n.get_mpz_t(), 30) > 0;
}

BigInt Factorization::value() const {
  BigInt out = unfactored;
  BigInt power;
  for (const auto& t : terms) {
    mpz_pow_ui(power.get_mpz_t(), t.prime.get_mpz_t(), t.exponent);
    out *= power;
  }
  return out;
}

std::string Factorization::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (i) out << " * ";
    out << terms[i].prime.get_str();
    if (terms[i].exponent != 1) out << '^' << terms[i].exponent;
  }
  if (!complete) out << (terms.empty() ? "" : " * ") << "(" << unfactored.get_str() << ")";
  if (terms.empty() && complete) out << '1';
  return out.str();
}

Factorization factorize(const BigInt& value, const FactorOptions& options) {
  if (value < 1) fail(Errc::invalid_argument, "factorize needs a positive integer");
  Splitter splitter{.found = {}, .stuck = {}, .budget = options.rho_budget};
  BigInt rest = value;
  for (std::uint32_t p : small_primes()) {
    while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) {
      mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
      ++splitter.found[BigInt(p)];
    }
  }
  if (rest > 1) {
    BigInt g;
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), medium_prime_product().get_mpz_t());
    if (g > 1) {
      // Every prime of g is below kTrialBound, so rho splits it quickly.
      Splitter medium{.found = {}, .stuck = {}, .budget = ~u64{0}};
      medium.split(g);
      for (const auto& [p, _] : medium.found) {
        while (mpz_divisible_p(rest.get_mpz_t(), p.get_mpz_t())) {
          mpz_divexact(rest.get_mpz_t(), rest.get_mpz_t(), p.get_mpz_t());
          ++splitter.found[p];
        }
      }
    }
  }
  splitter.split(rest);

  Factorization out;
  for (const auto& [p, e] : splitter.found) out.terms.push_back({p, e});
  if (!out.terms.empty()) out.largest_prime = out.terms.back().prime;
  out.probabilistic = splitter.probabilistic;
  for (const auto& n : splitter.stuck) {
    out.complete = false;
    out.unfactored *= n;
  }
  return out;
}

bool is_smooth(const BigInt& value, std::uint64_t bound) {
  if (value < 1) fail(Errc::invalid_argument, "smoothness needs a positive integer");
  if (bound <= 100'000'000) {
    BigInt rest = value;
    for (std::uint32_t p : primes_up_to(static_cast<std::uint32_t>(std::min<std::uint64_t>(bound, 100'000'000)))) {
      if (rest == 1) break;
      while (mpz_divisible_ui_p(rest.get_mpz_t(), p)) mpz_divexact_ui(rest.get_mpz_t(), rest.get_mpz_t(), p);
    }
    return rest == 1;
  }
  const Factorization f = factorize(value);
  if (!f.complete) fail(Errc::range_too_large, "factorization incomplete; smoothness undecided");
  return f.largest_prime <= BigInt(std::to_string(bound));
}

}  // namespace syt
