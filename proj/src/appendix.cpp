#include "bsfold/appendix.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "bsfold/chevalley.hpp"

namespace bsfold {

namespace {

std::shared_ptr<const RootSystem> type_a(int rank) {
  return std::make_shared<RootSystem>(RootSystem::build(Family::A, rank));
}

struct Checker {
  std::vector<std::string>* failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures->push_back(what);
  }
};

std::string sign_str(const std::vector<int>& sign) {
  std::string out = "(";
  for (size_t i = 0; i < sign.size(); ++i) {
    if (i) out += ",";
    out += sign[i] > 0 ? "1" : "-1";
  }
  return out + ")";
}

}  // namespace

FoldMorphism appendix_morphism(int id) {
  switch (id) {
    case 3: {
      auto rs = type_a(2);
      SimpleSeq s(rs, {1, 2}), s2(rs, {1, 2, 1});
      return extend_morphism(s, s2, MonotoneEmbedding(2, 3, {1, 3}), weyl_identity(*rs),
                             parse_gallery(s, "(e,e)"), parse_gallery(s2, "(s1,s2,e)"));
    }
    case 4: {
      auto rs = type_a(2);
      SimpleSeq s(rs, {2, 1}), s2(rs, {1, 2, 1});
      return extend_morphism(s, s2, MonotoneEmbedding(2, 3, {1, 3}),
                             weyl_from_word(*rs, {1, 2, 1}), parse_gallery(s, "(e,e)"),
                             parse_gallery(s2, "(s1,s2,e)"));
    }
    case 5: {
      auto rs = type_a(3);
      SimpleSeq s(rs, {1, 2, 3}), s2(rs, {1, 2, 1, 3, 2});
      return extend_morphism(s, s2, MonotoneEmbedding(3, 5, {1, 3, 5}), weyl_identity(*rs),
                             parse_gallery(s, "(e,e,e)"), parse_gallery(s2, "(s1,s2,e,s3,e)"));
    }
    case 6: {
      auto rs = type_a(4);
      SimpleSeq s(rs, {2, 3, 1}), s2(rs, {3, 4, 2, 4, 4});
      return extend_morphism(s, s2, MonotoneEmbedding(3, 5, {1, 3, 5}),
                             weyl_from_cycles(*rs, {{1, 5}, {2, 3, 4}}),
                             parse_gallery(s, "(e,e,e)"),
                             parse_gallery(s2, "(s3,s4,s2,s4,e)"));
    }
    case 7: {
      auto rs = type_a(4);
      SimpleSeq s(rs, {4, 3, 3}), s2(rs, {4, 3, 2, 3, 2, 1});
      return extend_morphism(s, s2, MonotoneEmbedding(3, 6, {1, 2, 5}), weyl_identity(*rs),
                             parse_gallery(s, "(e,e,e)"),
                             parse_gallery(s2, "(e,e,s2,s3,e,s1)"));
    }
    case 8: {
      auto rs = type_a(4);
      SimpleSeq s(rs, {1, 4, 3}), s2(rs, {1, 4, 4, 1, 3, 4});
      return extend_morphism(s, s2, MonotoneEmbedding(3, 6, {1, 3, 5}), weyl_identity(*rs),
                             parse_gallery(s, "(e,e,e)"),
                             parse_gallery(s2, "(e,e,e,s1,e,s4)"));
    }
    default:
      throw std::out_of_range("appendix case id must be 3..8");
  }
}

AppendixReport run_appendix() {
  AppendixReport report;

  auto run = [&](int id, const std::string& summary, auto&& body) {
    AppendixCase c{id, summary, {}};
    Checker check{&c.failures};
    try {
      body(check);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    report.cases.push_back(std::move(c));
  };

  run(3, "sign (-1,1), rotation e, full image table", [&](Checker& c) {
    FoldMorphism m = appendix_morphism(3);
    c.expect(m.sign() == std::vector<int>{-1, 1}, "sign is " + sign_str(m.sign()));
    c.expect(m.rotation().is_identity(), "rotation is not e");
    const std::map<std::string, std::string> table = {
        {"(e,e)", "(s1,s2,e)"},
        {"(s1,e)", "(e,s2,e)"},
        {"(e,s2)", "(s1,s2,s1)"},
        {"(s1,s2)", "(e,s2,s1)"},
    };
    for (const auto& [from, to] : table) {
      Gallery g = parse_gallery(m.source(), from);
      c.expect(m.apply(g).to_string() == to, "image of " + from + " is not " + to);
      c.expect(m.preimage(parse_gallery(m.target(), to)) == g,
               "preimage of " + to + " is not " + from);
    }
    // Positions outside the embedding image must carry the seed letter.
    c.expect(!m.preimage(parse_gallery(m.target(), "(e,e,e)")).has_value(),
             "(e,e,e) should be outside the image");
    c.expect(is_topological(m).value == Topological::no,
             "wrong sign must rule out a topological realization");
  });

  run(4, "sign (1,-1), rotation s1s2s1", [&](Checker& c) {
    FoldMorphism m = appendix_morphism(4);
    c.expect(m.sign() == std::vector<int>{1, -1}, "sign is " + sign_str(m.sign()));
    c.expect(m.rotation() == weyl_from_word(m.source().rs(), {1, 2, 1}),
             "rotation is not s1s2s1");
  });

  run(5, "sign (-1,1,1), rotation e", [&](Checker& c) {
    FoldMorphism m = appendix_morphism(5);
    c.expect(m.sign() == std::vector<int>{-1, 1, 1}, "sign is " + sign_str(m.sign()));
    c.expect(m.rotation().is_identity(), "rotation is not e");
  });

  run(6, "sign (-1,1,-1), rotation (1,5)(2,3,4)", [&](Checker& c) {
    FoldMorphism m = appendix_morphism(6);
    c.expect(m.sign() == std::vector<int>{-1, 1, -1}, "sign is " + sign_str(m.sign()));
    c.expect(m.rotation() == weyl_from_cycles(m.source().rs(), {{1, 5}, {2, 3, 4}}),
             "rotation is not (1,5)(2,3,4)");
  });

  run(7, "two missing curve pairs; topological", [&](Checker& c) {
    FoldMorphism m = appendix_morphism(7);
    std::vector<std::pair<std::string, std::string>> missing;
    for (const Gallery& gamma : enumerate_galleries(m.source()))
      for (int i = 1; i <= m.source().length(); ++i) {
        if (gamma.reflected(i)) continue;
        if (!t_curve_exists(gamma, i))
          missing.push_back({gamma.to_string(), fold(gamma, i).to_string()});
      }
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"(e,e,s3)", "(e,s3,s3)"},
        {"(s4,e,s3)", "(s4,s3,s3)"},
    };
    c.expect(missing == expected, "missing curve pairs differ from the expected two");
    c.expect(is_topological(m).value == Topological::yes, "verdict is not yes");
  });

  run(8, "six preservation witnesses; not topological", [&](Checker& c) {
    FoldMorphism m = appendix_morphism(8);
    c.expect(m.sign() == std::vector<int>{1, 1, 1}, "sign is " + sign_str(m.sign()));
    WeakPreservationVerdict weak = is_weakly_curve_preserving(m);
    c.expect(!weak.preserving, "verdict should be no");
    std::vector<std::pair<std::string, std::string>> got;
    for (const CurveWitness& w : weak.witnesses)
      got.push_back({w.gamma.to_string(), w.delta.to_string()});
    // Unordered pairs, smaller endpoint first in enumeration order.
    const std::vector<std::pair<std::string, std::string>> expected = {
        {"(e,e,e)", "(e,s4,e)"},     {"(e,e,e)", "(s1,e,e)"},
        {"(e,e,s3)", "(s1,e,s3)"},   {"(e,s4,e)", "(s1,s4,e)"},
        {"(e,s4,s3)", "(s1,s4,s3)"}, {"(s1,e,e)", "(s1,s4,e)"},
    };
    auto sorted = [](std::vector<std::pair<std::string, std::string>> v) {
      std::sort(v.begin(), v.end());
      return v;
    };
    c.expect(sorted(got) == sorted(expected), "witness list differs from the expected six");
    c.expect(is_topological(m).value == Topological::no, "verdict is not no");
  });

  return report;
}

}  // namespace bsfold
