#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bsfold/gallery.hpp"

namespace bsfold {

// Strictly increasing map [1, source_len] -> [1, target_len].
struct MonotoneEmbedding {
  int source_len = 0;
  int target_len = 0;
  std::vector<int> images;  // 1-based targets, length source_len

  MonotoneEmbedding() = default;
  MonotoneEmbedding(int source_len, int target_len, std::vector<int> images);

  static MonotoneEmbedding identity(int len);

  int apply(int i) const { return images[static_cast<size_t>(i - 1)]; }
  bool in_image(int j) const;
  int preimage(int j) const;  // throws when j is not hit

  // this o inner
  MonotoneEmbedding after(const MonotoneEmbedding& inner) const;

  bool operator==(const MonotoneEmbedding& other) const;
};

// beta_{p(i)}(delta) = +- w(beta_i(gamma)) for every i.
bool is_pw_pair(const Gallery& gamma, const Gallery& delta,
                const MonotoneEmbedding& p, const WeylElt& w);

enum class ValidationMode { exhaustive, sampled };

// A morphism of the folding category, stored by its seed pair: the image of
// any gallery is read off by toggling the p-positions where it differs from
// the seed. The sign vector is derived at construction and is constant over
// all galleries.
class FoldMorphism {
 public:
  FoldMorphism(SimpleSeq source, SimpleSeq target, MonotoneEmbedding p, WeylElt w,
               Gallery gamma0, Gallery delta0);

  const SimpleSeq& source() const { return source_; }
  const SimpleSeq& target() const { return target_; }
  const MonotoneEmbedding& p() const { return p_; }
  const WeylElt& rotation() const { return w_; }
  const Gallery& seed_source() const { return gamma0_; }
  const Gallery& seed_target() const { return delta0_; }
  const std::vector<int>& sign() const { return sign_; }
  bool positive_sign() const;
  ValidationMode validation_mode() const { return validated_; }

  Gallery apply(const Gallery& gamma) const;

  // Preimage under the embedding phi, when delta agrees with the image
  // outside im p.
  std::optional<Gallery> preimage(const Gallery& delta) const;

  bool operator==(const FoldMorphism& other) const;

 private:
  SimpleSeq source_, target_;
  MonotoneEmbedding p_;
  WeylElt w_;
  Gallery gamma0_, delta0_;
  std::vector<int> sign_;
  ValidationMode validated_ = ValidationMode::exhaustive;
};

// Unique morphism with phi(gamma0) = delta0; throws when the seed is not a
// (p,w)-pair.
FoldMorphism extend_morphism(const SimpleSeq& s, const SimpleSeq& s_prime,
                             const MonotoneEmbedding& p, const WeylElt& w,
                             const Gallery& gamma0, const Gallery& delta0);

FoldMorphism identity_morphism(const SimpleSeq& s);

// outer o inner.
FoldMorphism compose(const FoldMorphism& outer, const FoldMorphism& inner);

std::pair<std::vector<int>, WeylElt> sign_rotation(const FoldMorphism& m);

// The subword embedding: requires matching letters, inserts e elsewhere.
FoldMorphism canonical_from_seq(const SimpleSeq& s, const SimpleSeq& s_prime,
                                const MonotoneEmbedding& p);

struct StabilizationResult {
  bool hypothesis_holds = false;
  std::optional<FoldMorphism> isomorphism;  // set when the hypothesis holds
};

// Checks gamma^i s_i (gamma^i)^{-1} = rho^i t_i (rho^i)^{-1} for all i; on
// success the words must be equal and the connecting isomorphism
// (id, e, psi) with psi(gamma) = rho is returned.
StabilizationResult stabilization_check(const SimpleSeq& s, const SimpleSeq& t,
                                        const Gallery& gamma, const Gallery& rho);

}  // namespace bsfold
