#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bsfold/rootsys.hpp"

namespace bsfold {

// Exponent vector of a monomial in the simple-root variables a1..a_rank.
using Monomial = std::vector<int>;

// Exact multivariate polynomial over Q. Terms with zero coefficient are
// never stored; the term map is ordered, so iteration is deterministic.
class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  Poly(int nvars, const Rational& constant);

  static Poly variable(int nvars, int i, int power = 1);  // a_i^power, 1-based
  static Poly linear_form(const Root& r);                  // sum c_i a_i

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  Rational constant_value() const;  // valid when is_constant()
  int degree() const;               // total degree; -1 for the zero polynomial
  bool is_homogeneous(int d) const;

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  Rational coeff(const Monomial& m) const;
  void set_coeff(const Monomial& m, const Rational& c);
  void add_term(const Monomial& m, const Rational& c);

  // All coefficients in Z[1/2] (denominators are powers of two).
  bool is_dyadic() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& other);
  Poly& operator-=(const Poly& other);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rational& c, Poly p);
  bool operator==(const Poly& other) const;
  bool operator!=(const Poly& other) const { return !(*this == other); }

  Poly pow(int e) const;
  Rational eval(const std::vector<Rational>& point) const;

  // Substitute each variable by a polynomial (ring homomorphism).
  Poly substitute(const std::vector<Poly>& images) const;

  std::string to_string() const;

 private:
  int nvars_ = 0;
  std::map<Monomial, Rational> terms_;
};

// Action of a Weyl element: a_i -> w(alpha_i), extended multiplicatively.
Poly weyl_act(const WeylElt& w, const Poly& f);

// Exact division of f by an arbitrary g via leading-term cancellation in
// graded-lex order; nullopt when g does not divide f.
std::optional<Poly> divide_exact(const Poly& f, const Poly& g);

// Quotient/remainder of f by the linear form alpha with respect to its
// pivot variable (the lowest-index variable with nonzero coefficient):
// f = q * alpha + r with r free of the pivot variable.
struct LinearDivision {
  Poly quotient;
  Poly remainder;
};
LinearDivision divide_by_linear(const Poly& f, const Root& alpha);

// alpha^m | f, decided by m successive pivot divisions.
bool divisible(const Poly& f, const Root& alpha, int m);
// The exact g with f = alpha^m g; throws when not divisible.
Poly quotient_by_linear_power(const Poly& f, const Root& alpha, int m);

Poly parse_poly(int nvars, const std::string& text);

// Element of the fraction field of the polynomial ring. The denominator is
// kept as-is; equality goes through cross-multiplication, so no gcd is
// needed. reduced() clears the denominator when it divides the numerator.
class RatFunc {
 public:
  RatFunc() = default;
  explicit RatFunc(Poly p) : num_(std::move(p)), den_(Poly(num_.nvars(), 1)) {}
  RatFunc(Poly num, Poly den);

  static RatFunc zero(int nvars) { return RatFunc(Poly(nvars)); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }
  int nvars() const { return num_.nvars(); }
  bool is_zero() const { return num_.is_zero(); }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  bool operator==(const RatFunc& other) const;
  bool operator!=(const RatFunc& other) const { return !(*this == other); }

  bool is_polynomial() const;   // denominator divides numerator
  Poly to_poly() const;         // valid when is_polynomial()
  RatFunc reduced() const;

  std::string to_string() const;

 private:
  Poly num_;
  Poly den_;
};

RatFunc weyl_act(const WeylElt& w, const RatFunc& f);

}  // namespace bsfold
