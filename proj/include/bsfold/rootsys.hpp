#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bsfold/rational.hpp"

namespace bsfold {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

Family family_from_char(char c);
char family_to_char(Family f);

struct Component {
  Family family;
  int rank;
};

// A vector of the root lattice in simple-root coordinates.
struct Root {
  LVector coeffs;

  Root() = default;
  explicit Root(LVector c) : coeffs(std::move(c)) {}

  bool operator==(const Root& other) const { return coeffs == other.coeffs; }
  bool operator!=(const Root& other) const { return !(*this == other); }
  Root operator-() const { return Root(LVector(-coeffs)); }

  // Nonzero coordinates all > 0. Meaningful for actual roots only.
  bool is_positive() const;
  bool is_zero() const { return coeffs.isZero(); }
};

// Lattice automorphism induced by a Weyl group element, in the simple-root
// basis. Equality of elements is equality of matrices.
struct WeylElt {
  LMatrix action;

  bool operator==(const WeylElt& other) const { return action == other.action; }
  bool operator!=(const WeylElt& other) const { return !(*this == other); }
  bool is_identity() const { return action.isIdentity(); }
};

class RootSystem {
 public:
  // Single irreducible component.
  static RootSystem build(Family family, int rank);
  // Product of components as a block-diagonal Cartan matrix.
  static RootSystem build(const std::vector<Component>& components);

  const std::vector<Component>& components() const { return components_; }
  int rank() const { return rank_; }
  // cartan()(i, j) = <alpha_j, alpha_i> = 2 (alpha_j, alpha_i) / (alpha_i, alpha_i).
  const LMatrix& cartan() const { return cartan_; }
  const std::vector<Root>& positive_roots() const { return positive_; }

  Root simple_root(int i) const;            // 1-based
  bool is_root(const Root& r) const;        // member of +-positive_roots
  bool is_positive_root(const Root& r) const;

  // <beta, alpha_i> read off the Cartan pairing. 1-based index.
  std::int64_t pairing_with_simple(const Root& beta, int i) const;
  // 2 (beta, alpha) / (alpha, alpha) for an arbitrary root alpha.
  std::int64_t pairing(const Root& beta, const Root& alpha) const;

  // W-invariant symmetric form, normalized so short roots have square 2.
  std::int64_t bilinear(const Root& a, const Root& b) const;

  bool is_simply_laced() const;

  std::string format_root(const Root& r) const;  // "a1+2*a2" style

 private:
  std::vector<Component> components_;
  int rank_ = 0;
  LMatrix cartan_;
  LVector half_norms_;  // d_i = (alpha_i, alpha_i) / 2
  std::vector<Root> positive_;
};

// beta - <beta, alpha_i> alpha_i, for any lattice vector beta. 1-based index.
Root reflect(const RootSystem& rs, int i, const Root& beta);

// Matrix of the simple reflection s_i on the root lattice.
WeylElt simple_reflection(const RootSystem& rs, int i);

// Reflection in an arbitrary root, via the invariant form.
WeylElt root_reflection(const RootSystem& rs, const Root& alpha);

WeylElt weyl_identity(const RootSystem& rs);
// Product s_{w_1} s_{w_2} ... acting by function composition: the last
// letter acts first on a vector.
WeylElt weyl_from_word(const RootSystem& rs, const std::vector<int>& word);
Root weyl_apply(const WeylElt& w, const Root& beta);
WeylElt weyl_mul(const WeylElt& a, const WeylElt& b);
WeylElt weyl_inv(const WeylElt& w);

}  // namespace bsfold
