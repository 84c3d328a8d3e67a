#pragma once

#include <map>
#include <optional>
#include <vector>

#include "bsfold/foldcat.hpp"
#include "bsfold/poly.hpp"

namespace bsfold {

// A tuple of polynomials on the fixed points, indexed by enumeration order.
struct GkmClass {
  SimpleSeq seq;
  std::vector<Poly> values;  // size 2^r
  std::optional<int> degree;  // set when homogeneous by construction

  const Poly& at(const Gallery& gamma) const {
    return values[static_cast<size_t>(gamma.order_index())];
  }
  Poly& at(const Gallery& gamma) { return values[static_cast<size_t>(gamma.order_index())]; }
};

GkmClass constant_class(const SimpleSeq& s, const Rational& c);

struct MembershipViolation {
  Root alpha;
  Gallery gallery;
  Poly remainder;  // first nonzero division remainder of the congruence sum
};

struct MembershipVerdict {
  bool member = false;
  std::optional<MembershipViolation> violation;
};

// Wall-congruence membership test: for every positive root alpha and every
// gallery gamma, the signed sum of the class over {delta ~ gamma at +-alpha
// walls, J(delta) inside J(gamma)} must be divisible by alpha^|J(gamma)|.
// With strict_dyadic set, all values must also have coefficients in Z[1/2].
MembershipVerdict membership(const GkmClass& f, bool strict_dyadic = false);

// Q-basis of the homogeneous degree-d solutions of all congruences,
// extracted as the nullspace of the linear constraint system. Deterministic;
// basis vectors are scaled to primitive integer coefficient vectors.
std::vector<GkmClass> gkm_basis(const SimpleSeq& s, int degree);

// Expected dimension sum_j C(r, j) * dim S_{degree - j}.
long long gkm_expected_dimension(const SimpleSeq& s, int degree);

// Pullback along a morphism: gamma -> w^{-1}(g(phi(gamma))). Membership of g
// implies membership of the result.
GkmClass restrict_class(const FoldMorphism& m, const GkmClass& g);

// A tuple of rational functions on the fixed points (dual-side classes).
struct DualClass {
  SimpleSeq seq;
  std::vector<RatFunc> values;

  const RatFunc& at(const Gallery& gamma) const {
    return values[static_cast<size_t>(gamma.order_index())];
  }
  RatFunc& at(const Gallery& gamma) { return values[static_cast<size_t>(gamma.order_index())]; }
};

// Pushforward: phi(gamma) -> w(f(gamma)), zero off the image.
DualClass dual_push(const FoldMorphism& m, const DualClass& f);

// (f, g) = sum over galleries of f(gamma) g(gamma).
RatFunc pairing(const DualClass& f, const GkmClass& g);

struct LocalizationSum {
  RatFunc value;
  bool in_ring = false;  // the reduced sum has unit denominator
};

// Rank-one localization sum over the 2^ell galleries mu in {e, s}^ell:
// the mu with mu^i = k(i) on K and mu_i = l(i) on L contribute
// f(mu) / prod_{i not in K u L} mu^i(-alpha). In the maps, true stands for
// the letter s. Tuples are indexed like gallery enumeration order.
LocalizationSum localization_sum(const RootSystem& rs, const Root& alpha, int ell,
                                 const std::map<int, bool>& k_map,
                                 const std::map<int, bool>& l_map,
                                 const std::vector<Poly>& f);

}  // namespace bsfold
