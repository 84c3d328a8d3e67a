#pragma once

#include <Eigen/Dense>
#include <gmpxx.h>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace Eigen {

// Exact rational scalar for Eigen, per the custom-scalar recipe.
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
};

}  // namespace Eigen

namespace bsfold {

using Rational = mpq_class;

using QMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using QVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// Integer lattice types (root coordinates, Weyl matrices).
using LMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;
using LVector = Eigen::Matrix<std::int64_t, Eigen::Dynamic, 1>;

inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw std::invalid_argument("bad rational literal: '" + text + "'");
  q.canonicalize();
  return q;
}

inline std::string format_rational(const Rational& q) { return q.get_str(); }

// True iff the denominator is a power of two (coefficient lies in Z[1/2]).
inline bool is_dyadic(const Rational& q) {
  mpz_class den = q.get_den();
  while (den % 2 == 0) den /= 2;
  return den == 1;
}

// Deterministic helpers on top of std::mt19937_64; distributions from
// <random> are implementation-defined, so tests draw through these.
inline std::int64_t rand_int(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random rational with |numerator| <= bound, 1 <= denominator <= bound.
inline Rational rand_rational(std::mt19937_64& rng, std::int64_t bound = 100) {
  Rational q(rand_int(rng, -bound, bound), rand_int(rng, 1, bound));
  q.canonicalize();
  return q;
}

inline Rational rand_nonzero_rational(std::mt19937_64& rng, std::int64_t bound = 100) {
  for (;;) {
    Rational q = rand_rational(rng, bound);
    if (q != 0) return q;
  }
}

}  // namespace bsfold
