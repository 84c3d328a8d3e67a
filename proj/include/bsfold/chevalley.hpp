#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsfold/curves.hpp"
#include "bsfold/gallery.hpp"

namespace bsfold {

// Special linear group element over exact rationals, for a type A system of
// rank n realized as SL_{n+1}.
struct GrpElt {
  QMatrix m;

  bool operator==(const GrpElt& other) const { return m == other.m; }
  bool operator!=(const GrpElt& other) const { return !(*this == other); }
};

GrpElt grp_identity(int n);
GrpElt grp_mul(const GrpElt& a, const GrpElt& b);
GrpElt grp_inv(const GrpElt& a);
bool is_upper_triangular(const GrpElt& a);

// Requires every component of type A. Returns the matrix size n+1 for A_n.
int matrix_size_for_type_a(const RootSystem& rs);

// Decomposition of a type A root as e_i - e_j (1-based i, j).
std::pair<int, int> root_coordinates_a(const RootSystem& rs, const Root& alpha);

GrpElt root_element(const RootSystem& rs, const Root& alpha, const Rational& c);
// s_alpha(c) = x_alpha(c) x_{-alpha}(-1/c) x_alpha(c); c must be nonzero.
GrpElt s_element(const RootSystem& rs, const Root& alpha, const Rational& c);
// h_alpha(c) = s_alpha(c) s_alpha(1)^{-1}; c must be nonzero.
GrpElt h_element(const RootSystem& rs, const Root& alpha, const Rational& c);

// The unit sigma_{alpha,beta} in s_alpha x_beta(t) s_alpha^{-1}
// = x_{s_alpha beta}(sigma t), extracted by one conjugation.
int sigma(const RootSystem& rs, const Root& alpha, const Root& beta);

// Product of sigma factors accumulated by the letters of gamma before
// position i, evaluated at the root beta.
int sigma_gallery(const Gallery& gamma, int i, const Root& beta);

// Weyl element of a type A system from a permutation of [1, n+1] given in
// cycle notation (each cycle maps entry k to entry k+1).
WeylElt weyl_from_cycles(const RootSystem& rs, const std::vector<std::vector<int>>& cycles);

// A point of the chart indexed by gamma, with exact rational coordinates.
struct BSPoint {
  SimpleSeq seq;
  Gallery chart;
  std::vector<Rational> coords;
};

BSPoint bs_point(const SimpleSeq& s, const Gallery& gamma, std::vector<Rational> coords);

// Product of the first i chart factors x_{gamma_k(-alpha_k)}(c_k) gamma_k.
GrpElt prefix_product(const BSPoint& point, int i);

struct TransitionStep {
  int position;    // i
  Rational coord;  // d_i
  GrpElt borel;    // b_i
};

struct ChartCoords {
  std::vector<Rational> coords;
  std::vector<TransitionStep> steps;
};

// Re-expresses the point in the chart of delta by the inductive pivoting
// algorithm; nullopt exactly when the point lies outside that chart.
std::optional<ChartCoords> chart_coords(const BSPoint& point, const Gallery& delta);

// Chart-level map attached to a morphism of identical rotation, positive
// sign that is weakly curve preserving: coordinates move to the p-positions
// scaled by the sigma factors of source and target charts, zero elsewhere.
BSPoint psi_map(const FoldMorphism& m, const BSPoint& point);

struct RelationCheck {
  std::string name;
  int trials = 0;
  int failures = 0;
};

struct RelationReport {
  int rank = 0;
  unsigned long long seed = 0;
  std::vector<RelationCheck> checks;
  bool all_passed() const {
    for (const auto& c : checks)
      if (c.failures > 0) return false;
    return true;
  }
};

// Defining relations of the group at random rational parameters, plus the
// rank one commutation identities and the simply laced commutator form.
RelationReport verify_relations(int rank, int trials, unsigned long long seed);

}  // namespace bsfold
