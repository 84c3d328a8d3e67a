#pragma once

#include <string>
#include <vector>

#include "bsfold/foldcat.hpp"

namespace bsfold {

// A one-dimensional orbit closure joins gamma and fold(gamma, i) exactly
// when no later wall carries the opposite root.
bool t_curve_exists(const Gallery& gamma, int i);

struct MomentGraphEdge {
  std::uint64_t from_index;  // enumeration index, bit i cleared
  std::uint64_t to_index;    // = from with bit i set
  int position;              // the fold position i
  Root label;                // positive representative of +-beta_i
};

struct MomentGraph {
  SimpleSeq seq;
  std::vector<Gallery> vertices;  // enumeration order
  std::vector<MomentGraphEdge> edges;
};

MomentGraph moment_graph(const SimpleSeq& s);

// Deterministic DOT rendering; vertices in enumeration order, edges by
// (from, position).
std::string to_dot(const MomentGraph& g, const std::string& name = "bs");

struct CurveWitness {
  Gallery gamma;  // endpoint with the e letter at the fold position
  Gallery delta;  // = fold(gamma, position)
  int position;
};

struct WeakPreservationVerdict {
  bool preserving = false;
  std::vector<CurveWitness> witnesses;  // fold pairs whose image pair has no curve
};

WeakPreservationVerdict is_weakly_curve_preserving(const FoldMorphism& m);

enum class Topological { yes, no, unknown };

struct TopologicalVerdict {
  Topological value = Topological::unknown;
  std::string reason;
  WeakPreservationVerdict weak;  // populated when the sign test passes
};

// yes / no is decided by: (p, e, phi) must be a morphism of positive sign,
// and the morphism must be weakly curve preserving. Both conditions are
// necessary for any root system; they are sufficient only in the simply
// laced case, so elsewhere a passing morphism is reported as unknown.
TopologicalVerdict is_topological(const FoldMorphism& m);

}  // namespace bsfold
