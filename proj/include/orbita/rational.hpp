#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <random>
#include <string>

namespace orbita {

/// Exact rational numbers, always kept canonical.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Rational square root when it exists; nullopt otherwise.
inline std::optional<Rational> rational_sqrt(const Rational& q) {
  if (sgn(q) < 0) return std::nullopt;
  if (sgn(q) == 0) return Rational(0);
  const mpz_class& num = q.get_num();
  const mpz_class& den = q.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Rational r(rn, rd);
  r.canonicalize();
  return r;
}

inline bool is_rational_square(const Rational& q) { return rational_sqrt(q).has_value(); }

/// Seed-deterministic generator; independent streams are split off by index.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix(seed)) {}

  /// Child stream for `index`, independent of how many draws the parent made.
  static Rng split(std::uint64_t seed, std::uint64_t index) {
    return Rng(mix(seed) ^ mix(index + 0x9e3779b97f4a7c15ULL));
  }

  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine_);
  }

  /// Small-height rational: numerator in [-9, 9], denominator in [1, 6].
  Rational small_rational(bool nonzero = false) {
    std::int64_t num = 0;
    do {
      num = uniform_int(-9, 9);
    } while (nonzero && num == 0);
    return make_rational(static_cast<long>(num), static_cast<long>(uniform_int(1, 6)));
  }

  /// Numerator in [-max_num, max_num], denominator in [1, max_den].
  Rational wide_rational(long max_num, long max_den) {
    return make_rational(static_cast<long>(uniform_int(-max_num, max_num)), static_cast<long>(uniform_int(1, max_den)));
  }

  std::mt19937_64& engine() { return engine_; }

 private:
  static std::uint64_t mix(std::uint64_t x) {
    // splitmix64 finalizer
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

  std::mt19937_64 engine_;
};

}  // namespace orbita
