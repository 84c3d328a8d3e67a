// Acceptance suite: each criterion prints one PASS/FAIL line with its
// runtime and must stay within the stated budget. Exit code 0 iff all pass.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "bsfold/appendix.hpp"
#include "bsfold/chevalley.hpp"
#include "bsfold/gkm.hpp"
#include "bsfold/linalg.hpp"
#include "test_util.hpp"

using namespace bsfold;

namespace {

struct Criterion {
  int number;
  std::string title;
  double budget_seconds;
  std::function<bool(std::string&)> body;
};

std::vector<SimpleSeq> all_words(const std::shared_ptr<const RootSystem>& rs, int max_len) {
  std::vector<SimpleSeq> out;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<int> idx(static_cast<size_t>(len), 1);
    for (;;) {
      out.emplace_back(rs, idx);
      int k = len - 1;
      while (k >= 0 && idx[static_cast<size_t>(k)] == rs->rank()) {
        idx[static_cast<size_t>(k)] = 1;
        --k;
      }
      if (k < 0) break;
      ++idx[static_cast<size_t>(k)];
    }
  }
  return out;
}

// --- criterion 1 -----------------------------------------------------------

bool golden_signs(std::string& detail) {
  struct Expect {
    int id;
    std::vector<int> sign;
  };
  const std::vector<Expect> expected = {
      {3, {-1, 1}}, {4, {1, -1}}, {5, {-1, 1, 1}}, {6, {-1, 1, -1}}};
  for (const Expect& e : expected) {
    FoldMorphism m = appendix_morphism(e.id);
    if (m.sign() != e.sign) {
      detail = "case " + std::to_string(e.id) + ": unexpected sign";
      return false;
    }
    WeylElt want_rotation =
        e.id == 4   ? weyl_from_word(m.source().rs(), {1, 2, 1})
        : e.id == 6 ? weyl_from_cycles(m.source().rs(), {{1, 5}, {2, 3, 4}})
                    : weyl_identity(m.source().rs());
    if (!(m.rotation() == want_rotation)) {
      detail = "case " + std::to_string(e.id) + ": unexpected rotation";
      return false;
    }
  }
  FoldMorphism three = appendix_morphism(3);
  const std::map<std::string, std::string> table = {{"(e,e)", "(s1,s2,e)"},
                                                    {"(s1,e)", "(e,s2,e)"},
                                                    {"(e,s2)", "(s1,s2,s1)"},
                                                    {"(s1,s2)", "(e,s2,s1)"}};
  for (const auto& [from, to] : table)
    if (three.apply(parse_gallery(three.source(), from)).to_string() != to) {
      detail = "image table mismatch at " + from;
      return false;
    }
  detail = "4 fixtures, full image table";
  return true;
}

// --- criterion 2 -----------------------------------------------------------

bool curve_fixtures(std::string& detail) {
  FoldMorphism seven = appendix_morphism(7);
  std::vector<std::pair<std::string, std::string>> missing;
  for (const Gallery& g : enumerate_galleries(seven.source()))
    for (int i = 1; i <= seven.source().length(); ++i) {
      if (g.reflected(i)) continue;
      if (!t_curve_exists(g, i)) missing.push_back({g.to_string(), fold(g, i).to_string()});
    }
  const std::vector<std::pair<std::string, std::string>> expected7 = {
      {"(e,e,s3)", "(e,s3,s3)"}, {"(s4,e,s3)", "(s4,s3,s3)"}};
  if (missing != expected7) {
    detail = "unexpected missing-curve pairs";
    return false;
  }
  if (is_topological(seven).value != Topological::yes) {
    detail = "topological fixture not recognized";
    return false;
  }

  FoldMorphism eight = appendix_morphism(8);
  WeakPreservationVerdict weak = is_weakly_curve_preserving(eight);
  std::vector<std::pair<std::string, std::string>> got;
  for (const CurveWitness& w : weak.witnesses)
    got.push_back({w.gamma.to_string(), w.delta.to_string()});
  std::sort(got.begin(), got.end());
  const std::vector<std::pair<std::string, std::string>> expected8 = {
      {"(e,e,e)", "(e,s4,e)"},     {"(e,e,e)", "(s1,e,e)"},   {"(e,e,s3)", "(s1,e,s3)"},
      {"(e,s4,e)", "(s1,s4,e)"},   {"(e,s4,s3)", "(s1,s4,s3)"},
      {"(s1,e,e)", "(s1,s4,e)"}};
  if (weak.preserving || got != expected8) {
    detail = "unexpected preservation witnesses";
    return false;
  }
  if (is_topological(eight).value != Topological::no) {
    detail = "non-topological fixture not rejected";
    return false;
  }
  detail = "2 exceptions, 6 witnesses, verdicts yes/no";
  return true;
}

// --- criterion 3 -----------------------------------------------------------

bool fold_identities(std::string& detail) {
  long long checks = 0;
  for (Family fam : {Family::A, Family::B}) {
    auto rs = testutil::shared_system(fam, fam == Family::A ? 3 : 2);
    for (const SimpleSeq& s : all_words(rs, 5)) {
      for (const Gallery& g : enumerate_galleries(s)) {
        std::vector<WeylElt> prefixes(static_cast<size_t>(s.length()) + 1);
        prefixes[0] = weyl_identity(*rs);
        for (int k = 1; k <= s.length(); ++k) prefixes[static_cast<size_t>(k)] = prefix(g, k);
        for (int i = 1; i <= s.length(); ++i) {
          WeylElt refl = root_reflection(*rs, beta(g, i));
          Gallery folded = fold(g, i);
          for (int k = 0; k <= s.length(); ++k) {
            WeylElt expected =
                i <= k ? weyl_mul(refl, prefixes[static_cast<size_t>(k)])
                       : prefixes[static_cast<size_t>(k)];
            if (!(prefix(folded, k) == expected)) {
              detail = "prefix identity fails";
              return false;
            }
            if (k >= 1) {
              Root wall = weyl_apply(prefixes[static_cast<size_t>(k)],
                                     -rs->simple_root(s.letter(k)));
              Root expected_wall = i <= k ? weyl_apply(refl, wall) : wall;
              if (!(beta(folded, k) == expected_wall)) {
                detail = "wall identity fails";
                return false;
              }
              ++checks;
            }
            ++checks;
          }
        }
      }
    }
  }
  detail = std::to_string(checks) + " identities, A3 and B2, r <= 5";
  return true;
}

// --- criterion 4 -----------------------------------------------------------

struct BasisCache {
  std::map<std::string, std::vector<GkmClass>> store;
  const std::vector<GkmClass>& get(const SimpleSeq& s, int degree) {
    std::ostringstream key;
    key << s.rs().rank() << ':';
    for (int i : s.indices()) key << i << ',';
    key << '#' << degree;
    auto [it, inserted] = store.emplace(key.str(), std::vector<GkmClass>{});
    if (inserted) it->second = gkm_basis(s, degree);
    return it->second;
  }
};

bool membership_suite(std::string& detail) {
  BasisCache cache;
  long long dim_checks = 0;
  for (auto [fam_rank, max_len] : std::vector<std::pair<int, int>>{{2, 3}, {3, 2}}) {
    auto rs = testutil::shared_system(Family::A, fam_rank);
    for (const SimpleSeq& s : all_words(rs, max_len))
      for (int d = 0; d <= 3; ++d) {
        if (static_cast<long long>(cache.get(s, d).size()) != gkm_expected_dimension(s, d)) {
          detail = "basis dimension mismatch";
          return false;
        }
        ++dim_checks;
      }
  }

  std::mt19937_64 rng(testutil::env_seed(1004));
  auto a2 = testutil::shared_system(Family::A, 2);
  auto a3 = testutil::shared_system(Family::A, 3);
  int pairs = 0;
  while (pairs < 60) {
    const bool small = pairs % 2 == 0;
    FoldMorphism m = testutil::random_morphism(rng, small ? a2 : a3, 2, small ? 2 : 1);
    int d = static_cast<int>(rand_int(rng, 0, 3));
    const auto& basis = cache.get(m.target(), d);
    if (basis.empty()) continue;
    GkmClass g{m.target(),
               std::vector<Poly>(basis[0].values.size(), Poly(m.target().rs().rank())), d};
    for (const GkmClass& b : basis) {
      Rational c = rand_rational(rng, 4);
      for (size_t k = 0; k < g.values.size(); ++k) g.values[k] += c * b.values[k];
    }
    if (!membership(restrict_class(m, g)).member) {
      detail = "pullback left the module";
      return false;
    }
    ++pairs;
  }
  detail = std::to_string(dim_checks) + " dimension checks, 60 pullback pairs";
  return true;
}

// --- criterion 5 -----------------------------------------------------------

bool localization_suite(std::string& detail) {
  auto rs = testutil::shared_system(Family::A, 1);
  Root alpha = rs->simple_root(1);
  long long sums = 0;
  for (int ell = 0; ell <= 3; ++ell) {
    SimpleSeq s(rs, std::vector<int>(static_cast<size_t>(ell), 1));
    std::vector<GkmClass> members;
    for (int d = 0; d <= 3; ++d)
      for (const GkmClass& b : gkm_basis(s, d)) members.push_back(b);
    std::vector<int> state(static_cast<size_t>(ell), 0);
    for (;;) {
      std::map<int, bool> kmap, lmap;
      for (int i = 1; i <= ell; ++i) {
        switch (state[static_cast<size_t>(i - 1)]) {
          case 1: kmap[i] = false; break;
          case 2: kmap[i] = true; break;
          case 3: lmap[i] = false; break;
          case 4: lmap[i] = true; break;
          default: break;
        }
      }
      for (const GkmClass& mem : members) {
        if (!localization_sum(*rs, alpha, ell, kmap, lmap, mem.values).in_ring) {
          detail = "sum escaped the polynomial ring";
          return false;
        }
        ++sums;
      }
      int k = ell - 1;
      while (k >= 0 && state[static_cast<size_t>(k)] == 4) {
        state[static_cast<size_t>(k)] = 0;
        --k;
      }
      if (k < 0) break;
      ++state[static_cast<size_t>(k)];
    }
  }
  detail = std::to_string(sums) + " constrained sums, ell <= 3";
  return true;
}

// --- criterion 6 -----------------------------------------------------------

bool chevalley_suite(std::string& detail) {
  for (int rank : {2, 3}) {
    RelationReport report = verify_relations(rank, 100, testutil::env_seed(1006) + rank);
    if (!report.all_passed()) {
      detail = "relation failure at rank " + std::to_string(rank);
      return false;
    }
  }

  std::mt19937_64 rng(testutil::env_seed(1066));
  auto rs = testutil::shared_system(Family::A, 3);
  SimpleSeq s(rs, {1, 2, 1, 3});
  int round_trips = 0;
  while (round_trips < 100) {
    Gallery g = testutil::random_gallery(rng, s);
    Gallery d = testutil::random_gallery(rng, s);
    std::vector<Rational> c(4);
    for (Rational& x : c) x = rand_rational(rng, 9);
    BSPoint point = bs_point(s, g, c);
    auto to = chart_coords(point, d);
    if (!to) continue;
    auto back = chart_coords(bs_point(s, d, to->coords), g);
    if (!back || back->coords != c) {
      detail = "round trip lost the coordinates";
      return false;
    }
    ++round_trips;
  }

  int folds = 0;
  while (folds < 100) {
    Gallery g = testutil::random_gallery(rng, s);
    int i = static_cast<int>(rand_int(rng, 1, 4));
    std::vector<Rational> c(4);
    for (Rational& x : c) x = rand_rational(rng, 9);
    c[static_cast<size_t>(i - 1)] = rand_nonzero_rational(rng, 9);
    auto res = chart_coords(bs_point(s, g, c), fold(g, i));
    if (!res) continue;
    for (int k = 1; k < i; ++k)
      if (res->coords[static_cast<size_t>(k - 1)] != c[static_cast<size_t>(k - 1)]) {
        detail = "fold transition moved an early coordinate";
        return false;
      }
    if (res->coords[static_cast<size_t>(i - 1)] !=
        Rational(1) / c[static_cast<size_t>(i - 1)]) {
      detail = "fold transition missed the inverted pivot";
      return false;
    }
    ++folds;
  }

  FoldMorphism seven = appendix_morphism(7);
  const SimpleSeq& src = seven.source();
  int compat = 0;
  while (compat < 100) {
    Gallery g = testutil::random_gallery(rng, src);
    int i = static_cast<int>(rand_int(rng, 1, src.length()));
    std::vector<Rational> c(static_cast<size_t>(src.length()));
    for (Rational& x : c) x = rand_rational(rng, 9);
    c[static_cast<size_t>(i - 1)] = rand_nonzero_rational(rng, 9);
    BSPoint point = bs_point(src, g, c);
    auto other = chart_coords(point, fold(g, i));
    if (!other) continue;
    BSPoint by_gamma = psi_map(seven, point);
    BSPoint by_fold = psi_map(seven, bs_point(src, fold(g, i), other->coords));
    auto transported = chart_coords(by_gamma, by_fold.chart);
    if (!transported || transported->coords != by_fold.coords) {
      detail = "chart maps disagree on the overlap";
      return false;
    }
    ++compat;
  }
  detail = "800 relation trials per rank, 100 round trips, 100 folds, 100 overlaps";
  return true;
}

// --- criterion 7 -----------------------------------------------------------

struct StabilizationSweep {
  const RootSystem& rs;
  int max_depth;
  long long satisfied = 0;
  bool counterexample = false;

  void recurse(const LMatrix& g, const LMatrix& h, int depth) {
    if (depth == max_depth) return;
    for (int si = 1; si <= rs.rank(); ++si) {
      LMatrix smat = simple_reflection(rs, si).action;
      LMatrix conj_g = g * smat * lattice_inverse(g);
      for (int ti = 1; ti <= rs.rank(); ++ti) {
        LMatrix tmat = simple_reflection(rs, ti).action;
        LMatrix conj_h = h * tmat * lattice_inverse(h);
        if (conj_g != conj_h) continue;
        if (si != ti) {
          counterexample = true;
          return;
        }
        for (int gb = 0; gb < 2; ++gb)
          for (int rb = 0; rb < 2; ++rb) {
            ++satisfied;
            recurse(gb ? LMatrix(g * smat) : g, rb ? LMatrix(h * tmat) : h, depth + 1);
            if (counterexample) return;
          }
      }
    }
  }
};

bool stabilization_sweep(std::string& detail) {
  auto rs = testutil::shared_system(Family::A, 3);
  StabilizationSweep sweep{*rs, 5};
  LMatrix id = LMatrix::Identity(3, 3);
  sweep.recurse(id, id, 0);
  if (sweep.counterexample) {
    detail = "matching wall reflections on different words";
    return false;
  }
  detail = std::to_string(sweep.satisfied) + " hypothesis-satisfying prefixes, no mismatch";
  return true;
}

// --- criterion 8 -----------------------------------------------------------

bool functor_laws(std::string& detail) {
  std::mt19937_64 rng(testutil::env_seed(1008));
  auto rs = testutil::shared_system(Family::A, 2);
  BasisCache cache;
  int pairs = 0;
  while (pairs < 50) {
    FoldMorphism inner = testutil::random_morphism(rng, rs, 2, 1);
    FoldMorphism outer = testutil::random_morphism_from(rng, inner.target(), 1);
    FoldMorphism both = compose(outer, inner);

    if (!(compose(identity_morphism(inner.target()), inner) == inner) ||
        !(compose(inner, identity_morphism(inner.source())) == inner)) {
      detail = "identity law fails";
      return false;
    }
    for (int i = 1; i <= inner.source().length(); ++i)
      if (both.sign()[static_cast<size_t>(i - 1)] !=
          outer.sign()[static_cast<size_t>(inner.p().apply(i) - 1)] *
              inner.sign()[static_cast<size_t>(i - 1)]) {
        detail = "sign law fails";
        return false;
      }

    int d = static_cast<int>(rand_int(rng, 0, 1));
    const auto& basis = cache.get(outer.target(), d);
    if (basis.empty()) continue;
    const GkmClass& g = basis[static_cast<size_t>(
        rand_int(rng, 0, static_cast<std::int64_t>(basis.size()) - 1))];
    GkmClass two_step = restrict_class(inner, restrict_class(outer, g));
    GkmClass one_step = restrict_class(both, g);
    if (!(two_step.values == one_step.values)) {
      detail = "restriction is not functorial";
      return false;
    }
    ++pairs;
  }
  detail = "50 composable pairs";
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria = {
      {1, "golden fixtures 3-6: signs, rotations, image table", 1.0, golden_signs},
      {2, "curve fixtures 7-8: exceptions, witnesses, verdicts", 1.0, curve_fixtures},
      {3, "fold identities for prefixes and walls", 10.0, fold_identities},
      {4, "basis dimensions and pullback membership", 60.0, membership_suite},
      {5, "rank-one localization sums stay integral", 30.0, localization_suite},
      {6, "group relations, transitions and chart maps", 60.0, chevalley_suite},
      {7, "stabilization sweep over equal-length words", 60.0, stabilization_sweep},
      {8, "category and restriction functor laws", 30.0, functor_laws},
  };

  int failed = 0;
  for (Criterion& c : criteria) {
    std::string detail;
    auto start = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = c.body(detail);
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      ok = false;
      detail += " [over the " + std::to_string(c.budget_seconds) + "s budget]";
    }
    if (!ok) ++failed;
    std::printf("criterion %d %s  %-52s (%.2fs) %s\n", c.number, ok ? "PASS" : "FAIL",
                c.title.c_str(), seconds, detail.c_str());
  }
  if (failed > 0) std::printf("%d criterion(s) failed\n", failed);
  return failed == 0 ? 0 : 1;
}
