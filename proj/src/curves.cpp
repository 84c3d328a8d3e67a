#include "bsfold/curves.hpp"

#include <stdexcept>

namespace bsfold {

bool t_curve_exists(const Gallery& gamma, int i) {
  if (i < 1 || i > gamma.length()) throw std::out_of_range("t_curve_exists: index out of range");
  std::vector<Root> betas = all_betas(gamma);
  const Root target = -betas[static_cast<size_t>(i - 1)];
  for (int j = i + 1; j <= gamma.length(); ++j)
    if (betas[static_cast<size_t>(j - 1)] == target) return false;
  return true;
}

MomentGraph moment_graph(const SimpleSeq& s) {
  if (s.length() > 20) throw std::invalid_argument("moment_graph: word too long");
  MomentGraph g{s, enumerate_galleries(s), {}};
  for (const Gallery& gamma : g.vertices) {
    for (int i = 1; i <= s.length(); ++i) {
      if (gamma.reflected(i)) continue;  // one endpoint per unordered pair
      if (!t_curve_exists(gamma, i)) continue;
      Root b = beta(gamma, i);
      if (!b.is_positive()) b = -b;
      g.edges.push_back({gamma.order_index(), fold(gamma, i).order_index(), i, b});
    }
  }
  return g;
}

std::string to_dot(const MomentGraph& g, const std::string& name) {
  std::string out = "graph " + name + " {\n";
  for (const Gallery& v : g.vertices) out += "  \"" + v.to_string() + "\";\n";
  for (const MomentGraphEdge& e : g.edges) {
    out += "  \"" + g.vertices[e.from_index].to_string() + "\" -- \"" +
           g.vertices[e.to_index].to_string() + "\" [label=\"" +
           g.seq.rs().format_root(e.label) + "\"];\n";
  }
  out += "}\n";
  return out;
}

WeakPreservationVerdict is_weakly_curve_preserving(const FoldMorphism& m) {
  WeakPreservationVerdict out;
  out.preserving = true;
  for (const Gallery& gamma : enumerate_galleries(m.source())) {
    for (int i = 1; i <= m.source().length(); ++i) {
      if (gamma.reflected(i)) continue;  // each unordered pair once
      if (!t_curve_exists(gamma, i)) continue;
      // phi(fold_i gamma) = fold_{p(i)} phi(gamma) and phi is injective, so
      // the images never coincide; the image pair needs its own curve.
      if (!t_curve_exists(m.apply(gamma), m.p().apply(i))) {
        out.preserving = false;
        out.witnesses.push_back({gamma, fold(gamma, i), i});
      }
    }
  }
  return out;
}

TopologicalVerdict is_topological(const FoldMorphism& m) {
  TopologicalVerdict out;
  // Replace the rotation by e: the seed must still match walls exactly and
  // with positive sign.
  std::vector<Root> betas_gamma = all_betas(m.seed_source());
  std::vector<Root> betas_delta = all_betas(m.seed_target());
  for (int i = 1; i <= m.source().length(); ++i) {
    if (betas_delta[static_cast<size_t>(m.p().apply(i) - 1)] !=
        betas_gamma[static_cast<size_t>(i - 1)]) {
      out.value = Topological::no;
      out.reason = "dropping the rotation does not leave a morphism of positive sign";
      return out;
    }
  }
  out.weak = is_weakly_curve_preserving(m);
  if (!out.weak.preserving) {
    out.value = Topological::no;
    out.reason = "not weakly curve preserving";
    return out;
  }
  if (m.source().rs().is_simply_laced()) {
    out.value = Topological::yes;
    out.reason = "weakly curve preserving with positive sign, simply laced";
  } else {
    out.value = Topological::unknown;
    out.reason = "necessary conditions hold; no sufficiency outside the simply laced case";
  }
  return out;
}

}  // namespace bsfold
