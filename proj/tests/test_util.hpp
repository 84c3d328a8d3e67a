#pragma once

#include <cstdlib>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "bsfold/foldcat.hpp"

namespace bsfold::testutil {

inline unsigned long long env_seed(unsigned long long fallback) {
  if (const char* s = std::getenv("FOLDCAT_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

inline std::shared_ptr<const RootSystem> shared_system(Family f, int rank) {
  return std::make_shared<RootSystem>(RootSystem::build(f, rank));
}

inline std::vector<int> random_word(std::mt19937_64& rng,
                                    const std::shared_ptr<const RootSystem>& rs, int len) {
  std::vector<int> out(static_cast<size_t>(len));
  for (int& x : out) x = static_cast<int>(rand_int(rng, 1, rs->rank()));
  return out;
}

inline Gallery random_gallery(std::mt19937_64& rng, const SimpleSeq& s) {
  std::uint64_t mask = s.length() == 0
                           ? 0
                           : rng() & ((static_cast<std::uint64_t>(1) << s.length()) - 1);
  return Gallery(s, mask);
}

// Random morphism out of a fixed source word. Half of the draws are subword
// embeddings into a padded word; the rest come from a brute-force seed scan
// with a random rotation, retried until a (p,w)-pair exists.
inline FoldMorphism random_morphism_from(std::mt19937_64& rng, const SimpleSeq& source,
                                         int max_extra_letters) {
  auto rs = source.rs_ptr();
  const int r = source.length();
  for (;;) {
    const int extra = static_cast<int>(rand_int(rng, 0, max_extra_letters));
    const int rp = r + extra;
    // Positions taken by the source letters.
    std::vector<int> positions;
    {
      std::vector<int> all(static_cast<size_t>(rp));
      for (int i = 0; i < rp; ++i) all[static_cast<size_t>(i)] = i + 1;
      for (int i = 0; i < r; ++i) {
        size_t k = static_cast<size_t>(rand_int(rng, i, rp - 1));
        std::swap(all[static_cast<size_t>(i)], all[k]);
      }
      positions.assign(all.begin(), all.begin() + r);
      std::sort(positions.begin(), positions.end());
    }
    MonotoneEmbedding p(r, rp, positions);

    if (rand_int(rng, 0, 1) == 0) {
      // Subword embedding: target letters agree with the source on im p.
      std::vector<int> letters = random_word(rng, rs, rp);
      for (int i = 1; i <= r; ++i)
        letters[static_cast<size_t>(p.apply(i) - 1)] = source.letter(i);
      return canonical_from_seq(source, SimpleSeq(rs, letters), p);
    }

    SimpleSeq target(rs, random_word(rng, rs, rp));
    WeylElt w = weyl_from_word(
        *rs, random_word(rng, rs, static_cast<int>(rand_int(rng, 0, 4))));
    std::vector<std::pair<std::uint64_t, std::uint64_t>> seeds;
    for (std::uint64_t a = 0; a < (static_cast<std::uint64_t>(1) << r); ++a)
      for (std::uint64_t b = 0; b < (static_cast<std::uint64_t>(1) << rp); ++b)
        if (is_pw_pair(Gallery(source, a), Gallery(target, b), p, w)) seeds.push_back({a, b});
    if (seeds.empty()) continue;
    auto [a, b] = seeds[static_cast<size_t>(rand_int(rng, 0, static_cast<std::int64_t>(seeds.size()) - 1))];
    return extend_morphism(source, target, p, w, Gallery(source, a), Gallery(target, b));
  }
}

inline FoldMorphism random_morphism(std::mt19937_64& rng,
                                    const std::shared_ptr<const RootSystem>& rs,
                                    int max_source_len, int max_extra_letters) {
  const int r = static_cast<int>(rand_int(rng, 0, max_source_len));
  SimpleSeq source(rs, random_word(rng, rs, r));
  return random_morphism_from(rng, source, max_extra_letters);
}

}  // namespace bsfold::testutil
