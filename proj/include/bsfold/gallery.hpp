#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "bsfold/rootsys.hpp"

namespace bsfold {

// A word in simple reflections over a fixed root system.
class SimpleSeq {
 public:
  SimpleSeq() = default;
  SimpleSeq(std::shared_ptr<const RootSystem> rs, std::vector<int> indices);

  const RootSystem& rs() const { return *rs_; }
  std::shared_ptr<const RootSystem> rs_ptr() const { return rs_; }
  const std::vector<int>& indices() const { return indices_; }
  int length() const { return static_cast<int>(indices_.size()); }
  int letter(int i) const { return indices_[static_cast<size_t>(i - 1)]; }  // 1-based

  bool operator==(const SimpleSeq& other) const;
  bool operator!=(const SimpleSeq& other) const { return !(*this == other); }

 private:
  std::shared_ptr<const RootSystem> rs_;
  std::vector<int> indices_;
};

// A combinatorial gallery over a word: one choice gamma_i in {e, s_i} per
// letter, stored as a bit mask (bit set <=> the reflection was taken).
class Gallery {
 public:
  Gallery() = default;
  Gallery(SimpleSeq seq, std::uint64_t mask);

  const SimpleSeq& seq() const { return seq_; }
  int length() const { return seq_.length(); }
  bool reflected(int i) const { return (mask_ >> (i - 1)) & 1; }  // 1-based
  std::uint64_t mask() const { return mask_; }

  // Position in the enumeration order of enumerate_galleries.
  std::uint64_t order_index() const;

  bool operator==(const Gallery& other) const;
  bool operator!=(const Gallery& other) const { return !(*this == other); }
  bool same_shape(const Gallery& other) const { return seq_ == other.seq_; }

  std::string to_string() const;  // "(e,s2,s1)"

 private:
  SimpleSeq seq_;
  std::uint64_t mask_ = 0;
};

// All 2^r galleries. The order is lexicographic in the letter vector, the
// first letter most significant and e before s: (e,e),(e,s2),(s1,e),(s1,s2).
std::vector<Gallery> enumerate_galleries(const SimpleSeq& s);
Gallery gallery_from_order_index(const SimpleSeq& s, std::uint64_t index);
Gallery parse_gallery(const SimpleSeq& s, const std::string& text);

// gamma^i = gamma_1 ... gamma_i as a Weyl element; i = 0 gives the identity.
WeylElt prefix(const Gallery& gamma, int i);

// Wall root beta_i(gamma) = gamma^i(-alpha_i).
Root beta(const Gallery& gamma, int i);
std::vector<Root> all_betas(const Gallery& gamma);

// Toggles the i-th letter.
Gallery fold(const Gallery& gamma, int i);

// M = { i : beta_i = +-alpha },  J = { i : beta_i = alpha }.
std::vector<int> m_set(const Gallery& gamma, const Root& alpha);
std::vector<int> j_set(const Gallery& gamma, const Root& alpha);

// gamma ~_alpha^X delta: the letters may differ only at wall positions of
// +-alpha that lie in X. Omitting X means X = [1, r].
bool equivalent(const Gallery& gamma, const Gallery& delta, const Root& alpha,
                const std::vector<int>& x);
bool equivalent(const Gallery& gamma, const Gallery& delta, const Root& alpha);

// Same relation decided by chasing folds from gamma to delta, largest
// differing position first. Used as an independent route in tests.
bool equivalent_by_fold_path(const Gallery& gamma, const Gallery& delta,
                             const Root& alpha, const std::vector<int>& x);

}  // namespace bsfold
