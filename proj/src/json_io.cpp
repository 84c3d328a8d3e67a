#include "bsfold/json_io.hpp"

#include <algorithm>
#include <stdexcept>

namespace bsfold {

namespace {

Component component_from_json(const Json& j) {
  std::string fam = j.at("family").get<std::string>();
  if (fam.size() != 1) throw std::invalid_argument("family must be a single letter");
  return Component{family_from_char(fam[0]), j.at("rank").get<int>()};
}

std::shared_ptr<const RootSystem> parse_type_string(const std::string& text) {
  if (text.size() < 2) throw std::invalid_argument("type string must look like \"A3\"");
  return std::make_shared<RootSystem>(
      RootSystem::build(family_from_char(text[0]), std::stoi(text.substr(1))));
}

}  // namespace

std::shared_ptr<const RootSystem> root_system_from_json(const Json& j) {
  if (j.is_string()) return parse_type_string(j.get<std::string>());
  std::vector<Component> components;
  for (const Json& c : j.at("components")) components.push_back(component_from_json(c));
  return std::make_shared<RootSystem>(RootSystem::build(components));
}

Json root_system_to_json(const RootSystem& rs) {
  Json components = Json::array();
  for (const Component& c : rs.components())
    components.push_back({{"family", std::string(1, family_to_char(c.family))},
                          {"rank", c.rank}});
  return Json{{"components", components}};
}

Json root_to_json(const Root& r) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < r.coeffs.size(); ++i) out.push_back(r.coeffs[i]);
  return out;
}

SimpleSeq seq_from_json(const Json& j) {
  std::vector<int> indices;
  const Json& arr = j.is_array() ? j : j.at("seq");
  for (const Json& v : arr) indices.push_back(v.get<int>());
  std::shared_ptr<const RootSystem> rs;
  if (j.is_object() && j.contains("type")) {
    rs = root_system_from_json(j.at("type"));
  } else {
    int top = 1;
    for (int i : indices) top = std::max(top, i);
    rs = std::make_shared<RootSystem>(RootSystem::build(Family::A, top));
  }
  return SimpleSeq(rs, indices);
}

Json seq_to_json(const SimpleSeq& s) {
  Json out;
  out["seq"] = s.indices();
  out["type"] = root_system_to_json(s.rs());
  return out;
}

Gallery gallery_from_json(const SimpleSeq& s, const Json& j) {
  if (j.is_string()) return parse_gallery(s, j.get<std::string>());
  const Json& bits = j.is_array() ? j : j.at("bits");
  if (static_cast<int>(bits.size()) != s.length())
    throw std::invalid_argument("gallery bit vector has wrong length");
  std::uint64_t mask = 0;
  for (int i = 1; i <= s.length(); ++i)
    if (bits[static_cast<size_t>(i - 1)].get<int>() != 0)
      mask |= (static_cast<std::uint64_t>(1) << (i - 1));
  return Gallery(s, mask);
}

WeylElt weyl_from_json(const RootSystem& rs, const Json& j) {
  if (j.contains("word")) {
    std::vector<int> word;
    for (const Json& v : j.at("word")) word.push_back(v.get<int>());
    return weyl_from_word(rs, word);
  }
  if (j.contains("cycles")) {
    std::vector<std::vector<int>> cycles;
    for (const Json& c : j.at("cycles")) {
      std::vector<int> cycle;
      for (const Json& v : c) cycle.push_back(v.get<int>());
      cycles.push_back(cycle);
    }
    return weyl_from_cycles(rs, cycles);
  }
  if (j.contains("matrix")) {
    const Json& rows = j.at("matrix");
    if (static_cast<int>(rows.size()) != rs.rank())
      throw std::invalid_argument("Weyl matrix has wrong size");
    LMatrix m(rs.rank(), rs.rank());
    for (int r = 0; r < rs.rank(); ++r) {
      if (static_cast<int>(rows[static_cast<size_t>(r)].size()) != rs.rank())
        throw std::invalid_argument("Weyl matrix has wrong size");
      for (int c = 0; c < rs.rank(); ++c)
        m(r, c) = rows[static_cast<size_t>(r)][static_cast<size_t>(c)].get<std::int64_t>();
    }
    WeylElt w{m};
    for (const Root& alpha : rs.positive_roots())
      if (!rs.is_root(weyl_apply(w, alpha)))
        throw std::invalid_argument("matrix does not permute the roots");
    return w;
  }
  throw std::invalid_argument("Weyl element needs a word, cycles or matrix field");
}

Json weyl_to_json(const WeylElt& w) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < w.action.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < w.action.cols(); ++c) row.push_back(w.action(r, c));
    rows.push_back(row);
  }
  return Json{{"matrix", rows}};
}

FoldMorphism morphism_from_json(const Json& j) {
  std::shared_ptr<const RootSystem> rs;
  if (j.contains("type")) {
    rs = root_system_from_json(j.at("type"));
  } else {
    int top = 1;
    for (const char* key : {"s", "s2"})
      for (const Json& v : j.at(key)) top = std::max(top, v.get<int>());
    rs = std::make_shared<RootSystem>(RootSystem::build(Family::A, top));
  }
  auto read_seq = [&](const char* key) {
    std::vector<int> indices;
    for (const Json& v : j.at(key)) indices.push_back(v.get<int>());
    return SimpleSeq(rs, indices);
  };
  SimpleSeq s = read_seq("s");
  SimpleSeq s2 = read_seq("s2");
  std::vector<int> images;
  for (const Json& v : j.at("p")) images.push_back(v.get<int>());
  MonotoneEmbedding p(s.length(), s2.length(), images);
  WeylElt w = j.contains("w") ? weyl_from_json(*rs, j.at("w")) : weyl_identity(*rs);
  const Json& seed = j.at("seed");
  Gallery gamma0 = gallery_from_json(s, seed.at("gamma"));
  Gallery delta0 = gallery_from_json(s2, seed.at("delta"));
  return extend_morphism(s, s2, p, w, gamma0, delta0);
}

Json morphism_to_json(const FoldMorphism& m) {
  Json out;
  out["type"] = root_system_to_json(m.source().rs());
  out["s"] = m.source().indices();
  out["s2"] = m.target().indices();
  out["p"] = m.p().images;
  out["w"] = weyl_to_json(m.rotation());
  out["seed"] = Json{{"gamma", m.seed_source().to_string()},
                     {"delta", m.seed_target().to_string()}};
  out["sign"] = m.sign();
  out["validation"] =
      m.validation_mode() == ValidationMode::exhaustive ? "exhaustive" : "sampled";
  return out;
}

GkmClass gkm_class_from_json(const Json& j) {
  SimpleSeq s = seq_from_json(j);
  GkmClass out{s, std::vector<Poly>(static_cast<size_t>(1) << s.length(),
                                    Poly(s.rs().rank())),
               std::nullopt};
  const Json& values = j.at("values");
  size_t assigned = 0;
  for (auto it = values.begin(); it != values.end(); ++it) {
    Gallery g = parse_gallery(s, it.key());
    out.at(g) = parse_poly(s.rs().rank(), it.value().get<std::string>());
    ++assigned;
  }
  if (assigned != out.values.size())
    throw std::invalid_argument("class must assign a value to every gallery");
  return out;
}

Json gkm_class_to_json(const GkmClass& f) {
  Json values = Json::object();
  for (const Gallery& g : enumerate_galleries(f.seq))
    values[g.to_string()] = f.at(g).to_string();
  Json out = seq_to_json(f.seq);
  out["values"] = values;
  if (f.degree) out["degree"] = *f.degree;
  return out;
}

Json grp_to_json(const GrpElt& g) {
  Json rows = Json::array();
  for (Eigen::Index r = 0; r < g.m.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < g.m.cols(); ++c) row.push_back(format_rational(g.m(r, c)));
    rows.push_back(row);
  }
  return rows;
}

Json transition_to_json(const ChartCoords& t) {
  Json steps = Json::array();
  for (const TransitionStep& s : t.steps)
    steps.push_back(Json{{"i", s.position},
                         {"d", format_rational(s.coord)},
                         {"b", grp_to_json(s.borel)}});
  Json coords = Json::array();
  for (const Rational& c : t.coords) coords.push_back(format_rational(c));
  return Json{{"coords", coords}, {"steps", steps}};
}

Json moment_graph_to_json(const MomentGraph& g) {
  Json vertices = Json::array();
  for (const Gallery& v : g.vertices) vertices.push_back(v.to_string());
  Json edges = Json::array();
  for (const MomentGraphEdge& e : g.edges)
    edges.push_back(Json{{"from", g.vertices[e.from_index].to_string()},
                         {"to", g.vertices[e.to_index].to_string()},
                         {"position", e.position},
                         {"label", g.seq.rs().format_root(e.label)}});
  return Json{{"vertices", vertices}, {"edges", edges}};
}

}  // namespace bsfold
