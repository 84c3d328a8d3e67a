#include "bsfold/foldcat.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsfold {

MonotoneEmbedding::MonotoneEmbedding(int source_len_in, int target_len_in,
                                     std::vector<int> images_in)
    : source_len(source_len_in), target_len(target_len_in), images(std::move(images_in)) {
  if (static_cast<int>(images.size()) != source_len)
    throw std::invalid_argument("embedding image list has wrong length");
  for (size_t k = 0; k < images.size(); ++k) {
    if (images[k] < 1 || images[k] > target_len)
      throw std::out_of_range("embedding image out of range");
    if (k > 0 && images[k] <= images[k - 1])
      throw std::invalid_argument("embedding images must be strictly increasing");
  }
}

MonotoneEmbedding MonotoneEmbedding::identity(int len) {
  std::vector<int> im(static_cast<size_t>(len));
  for (int i = 0; i < len; ++i) im[static_cast<size_t>(i)] = i + 1;
  return MonotoneEmbedding(len, len, std::move(im));
}

bool MonotoneEmbedding::in_image(int j) const {
  return std::binary_search(images.begin(), images.end(), j);
}

int MonotoneEmbedding::preimage(int j) const {
  auto it = std::lower_bound(images.begin(), images.end(), j);
  if (it == images.end() || *it != j) throw std::out_of_range("not in the embedding image");
  return static_cast<int>(it - images.begin()) + 1;
}

MonotoneEmbedding MonotoneEmbedding::after(const MonotoneEmbedding& inner) const {
  if (inner.target_len != source_len)
    throw std::invalid_argument("embedding composition length mismatch");
  std::vector<int> im(inner.images.size());
  for (size_t k = 0; k < im.size(); ++k) im[k] = apply(inner.images[k]);
  return MonotoneEmbedding(inner.source_len, target_len, std::move(im));
}

bool MonotoneEmbedding::operator==(const MonotoneEmbedding& other) const {
  return source_len == other.source_len && target_len == other.target_len &&
         images == other.images;
}

bool is_pw_pair(const Gallery& gamma, const Gallery& delta,
                const MonotoneEmbedding& p, const WeylElt& w) {
  if (gamma.length() != p.source_len || delta.length() != p.target_len)
    throw std::invalid_argument("is_pw_pair: length mismatch");
  std::vector<Root> betas_delta = all_betas(delta);
  std::vector<Root> betas_gamma = all_betas(gamma);
  for (int i = 1; i <= gamma.length(); ++i) {
    Root lhs = betas_delta[static_cast<size_t>(p.apply(i) - 1)];
    Root rhs = weyl_apply(w, betas_gamma[static_cast<size_t>(i - 1)]);
    if (lhs != rhs && lhs != -rhs) return false;
  }
  return true;
}

namespace {

// Sign vector at one pair; throws when some wall fails to match up to sign.
std::vector<int> sign_at(const Gallery& gamma, const Gallery& delta,
                         const MonotoneEmbedding& p, const WeylElt& w) {
  std::vector<Root> betas_delta = all_betas(delta);
  std::vector<Root> betas_gamma = all_betas(gamma);
  std::vector<int> sign(static_cast<size_t>(gamma.length()));
  for (int i = 1; i <= gamma.length(); ++i) {
    Root lhs = betas_delta[static_cast<size_t>(p.apply(i) - 1)];
    Root rhs = weyl_apply(w, betas_gamma[static_cast<size_t>(i - 1)]);
    if (lhs == rhs)
      sign[static_cast<size_t>(i - 1)] = 1;
    else if (lhs == -rhs)
      sign[static_cast<size_t>(i - 1)] = -1;
    else
      throw std::invalid_argument("seed is not a (p,w)-pair");
  }
  return sign;
}

}  // namespace

FoldMorphism::FoldMorphism(SimpleSeq source, SimpleSeq target, MonotoneEmbedding p,
                           WeylElt w, Gallery gamma0, Gallery delta0)
    : source_(std::move(source)),
      target_(std::move(target)),
      p_(std::move(p)),
      w_(std::move(w)),
      gamma0_(std::move(gamma0)),
      delta0_(std::move(delta0)) {
  if (source_.rs().cartan() != target_.rs().cartan())
    throw std::invalid_argument("morphism endpoints live over different root systems");
  if (p_.source_len != source_.length() || p_.target_len != target_.length())
    throw std::invalid_argument("embedding lengths do not match the words");
  if (gamma0_.length() != source_.length() || delta0_.length() != target_.length())
    throw std::invalid_argument("seed lengths do not match the words");
  sign_ = sign_at(gamma0_, delta0_, p_, w_);

  // The sign is gallery-independent once the seed matches; re-derive it at
  // every gallery (all of them for short words, a fixed pseudorandom sample
  // otherwise) and fail loudly on any disagreement.
  const int r = source_.length();
  auto check_at = [&](std::uint64_t mask) {
    Gallery g(source_, mask);
    if (sign_at(g, apply(g), p_, w_) != sign_)
      throw std::logic_error("sign varies across galleries; invalid morphism data");
  };
  if (r <= 12) {
    validated_ = ValidationMode::exhaustive;
    for (std::uint64_t mask = 0; mask < (static_cast<std::uint64_t>(1) << r); ++mask)
      check_at(mask);
  } else {
    validated_ = ValidationMode::sampled;
    std::uint64_t state = 0x9e3779b97f4a7c15ull;
    for (int t = 0; t < 2048; ++t) {
      state = state * 6364136223846793005ull + 1442695040888963407ull;
      check_at(state >> (64 - r));
    }
  }
}

bool FoldMorphism::positive_sign() const {
  return std::all_of(sign_.begin(), sign_.end(), [](int e) { return e == 1; });
}

Gallery FoldMorphism::apply(const Gallery& gamma) const {
  if (!(gamma.seq() == source_)) throw std::invalid_argument("gallery is not over the source");
  std::uint64_t mask = delta0_.mask();
  for (int i = 1; i <= source_.length(); ++i)
    if (gamma.reflected(i) != gamma0_.reflected(i))
      mask ^= (static_cast<std::uint64_t>(1) << (p_.apply(i) - 1));
  return Gallery(target_, mask);
}

std::optional<Gallery> FoldMorphism::preimage(const Gallery& delta) const {
  if (!(delta.seq() == target_)) throw std::invalid_argument("gallery is not over the target");
  for (int j = 1; j <= target_.length(); ++j)
    if (!p_.in_image(j) && delta.reflected(j) != delta0_.reflected(j)) return std::nullopt;
  std::uint64_t mask = gamma0_.mask();
  for (int i = 1; i <= source_.length(); ++i)
    if (delta.reflected(p_.apply(i)) != delta0_.reflected(p_.apply(i)))
      mask ^= (static_cast<std::uint64_t>(1) << (i - 1));
  return Gallery(source_, mask);
}

bool FoldMorphism::operator==(const FoldMorphism& other) const {
  if (!(source_ == other.source_) || !(target_ == other.target_)) return false;
  if (!(p_ == other.p_) || w_ != other.w_) return false;
  // Same data iff the seeds agree after re-basing onto this seed.
  return other.apply(gamma0_) == delta0_;
}

FoldMorphism extend_morphism(const SimpleSeq& s, const SimpleSeq& s_prime,
                             const MonotoneEmbedding& p, const WeylElt& w,
                             const Gallery& gamma0, const Gallery& delta0) {
  return FoldMorphism(s, s_prime, p, w, gamma0, delta0);
}

FoldMorphism identity_morphism(const SimpleSeq& s) {
  Gallery trivial(s, 0);
  return FoldMorphism(s, s, MonotoneEmbedding::identity(s.length()),
                      weyl_identity(s.rs()), trivial, trivial);
}

FoldMorphism compose(const FoldMorphism& outer, const FoldMorphism& inner) {
  if (!(inner.target() == outer.source()))
    throw std::invalid_argument("compose: target/source mismatch");
  FoldMorphism out(inner.source(), outer.target(), outer.p().after(inner.p()),
                   weyl_mul(outer.rotation(), inner.rotation()), inner.seed_source(),
                   outer.apply(inner.apply(inner.seed_source())));
  // Composition law for the sign.
  for (int i = 1; i <= inner.source().length(); ++i) {
    int expected = outer.sign()[static_cast<size_t>(inner.p().apply(i) - 1)] *
                   inner.sign()[static_cast<size_t>(i - 1)];
    if (out.sign()[static_cast<size_t>(i - 1)] != expected)
      throw std::logic_error("composition sign law violated");
  }
  return out;
}

std::pair<std::vector<int>, WeylElt> sign_rotation(const FoldMorphism& m) {
  return {m.sign(), m.rotation()};
}

FoldMorphism canonical_from_seq(const SimpleSeq& s, const SimpleSeq& s_prime,
                                const MonotoneEmbedding& p) {
  if (p.source_len != s.length() || p.target_len != s_prime.length())
    throw std::invalid_argument("embedding lengths do not match the words");
  for (int i = 1; i <= s.length(); ++i)
    if (s_prime.letter(p.apply(i)) != s.letter(i))
      throw std::invalid_argument("letter mismatch: not a subword embedding");
  FoldMorphism m(s, s_prime, p, weyl_identity(s.rs()), Gallery(s, 0), Gallery(s_prime, 0));
  if (!m.positive_sign() || !m.rotation().is_identity())
    throw std::logic_error("subword embedding must have positive sign and identical rotation");
  return m;
}

StabilizationResult stabilization_check(const SimpleSeq& s, const SimpleSeq& t,
                                        const Gallery& gamma, const Gallery& rho) {
  if (s.length() != t.length()) throw std::invalid_argument("stabilization: length mismatch");
  if (!(gamma.seq() == s) || !(rho.seq() == t))
    throw std::invalid_argument("stabilization: galleries do not match the words");
  const RootSystem& rs = s.rs();
  WeylElt g = weyl_identity(rs), h = weyl_identity(rs);
  for (int i = 1; i <= s.length(); ++i) {
    WeylElt si = simple_reflection(rs, s.letter(i));
    WeylElt ti = simple_reflection(rs, t.letter(i));
    if (gamma.reflected(i)) g = weyl_mul(g, si);
    if (rho.reflected(i)) h = weyl_mul(h, ti);
    WeylElt left = weyl_mul(weyl_mul(g, si), weyl_inv(g));
    WeylElt right = weyl_mul(weyl_mul(h, ti), weyl_inv(h));
    if (left != right) return {};
  }
  if (!(s == t))
    throw std::logic_error("matching wall reflections on distinct words; this cannot happen");
  StabilizationResult out;
  out.hypothesis_holds = true;
  out.isomorphism = FoldMorphism(s, s, MonotoneEmbedding::identity(s.length()),
                                 weyl_identity(rs), gamma, rho);
  return out;
}

}  // namespace bsfold
