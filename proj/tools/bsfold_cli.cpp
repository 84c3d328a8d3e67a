// Command line surface for the library: inspection of root systems and
// galleries, moment graphs, morphism checking, module membership and the
// bundled fixture suite.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "bsfold/appendix.hpp"
#include "bsfold/json_io.hpp"

using namespace bsfold;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitBadInput = 1;
constexpr int kExitVerification = 2;

struct Options {
  bool json = false;
  std::string out_path;
  int threads = 1;  // accepted for interface stability; paths are sequential
};

std::ostream& output(const Options& opt, std::ofstream& file) {
  if (opt.out_path.empty()) return std::cout;
  file.open(opt.out_path);
  if (!file) throw std::invalid_argument("cannot open output file " + opt.out_path);
  return file;
}

// Inline JSON, "-" for stdin, or a file path.
Json load_json_argument(const std::string& arg) {
  if (!arg.empty() && (arg.front() == '{' || arg.front() == '[')) return Json::parse(arg);
  if (arg == "-") {
    std::stringstream buffer;
    buffer << std::cin.rdbuf();
    return Json::parse(buffer.str());
  }
  std::ifstream in(arg);
  if (!in) throw std::invalid_argument("cannot read " + arg);
  Json j;
  in >> j;
  return j;
}

// Word argument: {"seq":[1,2,1]} or the bare "1,2,1"; --type overrides the
// ambient root system.
SimpleSeq load_seq_argument(const std::string& arg, const std::string& type) {
  Json j;
  if (!arg.empty() && arg.front() == '{') {
    j = Json::parse(arg);
  } else {
    Json seq = Json::array();
    std::stringstream ss(arg);
    std::string tok;
    while (std::getline(ss, tok, ','))
      if (!tok.empty()) seq.push_back(std::stoi(tok));
    j = Json{{"seq", seq}};
  }
  if (!type.empty()) j["type"] = type;
  return seq_from_json(j);
}

unsigned long long default_seed() {
  if (const char* s = std::getenv("FOLDCAT_SEED")) return std::strtoull(s, nullptr, 10);
  return 2024;
}

int cmd_roots(const Options& opt, const std::string& family, int rank) {
  auto rs = RootSystem::build(family_from_char(family.at(0)), rank);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (opt.json) {
    Json roots = Json::array();
    for (const Root& r : rs.positive_roots())
      roots.push_back(Json{{"coeffs", root_to_json(r)}, {"text", rs.format_root(r)}});
    os << Json{{"count", rs.positive_roots().size()}, {"positive_roots", roots}}.dump(2)
       << "\n";
  } else {
    for (const Root& r : rs.positive_roots()) os << rs.format_root(r) << "\n";
  }
  return kExitOk;
}

int cmd_galleries(const Options& opt, const SimpleSeq& s) {
  if (s.length() > 20) throw std::invalid_argument("gallery listing capped at 20 letters");
  std::ofstream file;
  std::ostream& os = output(opt, file);
  Json arr = Json::array();
  for (const Gallery& g : enumerate_galleries(s)) {
    if (opt.json)
      arr.push_back(g.to_string());
    else
      os << g.to_string() << "\n";
  }
  if (opt.json) os << Json{{"count", arr.size()}, {"galleries", arr}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_beta(const Options& opt, const SimpleSeq& s, const std::string& gallery_text) {
  Gallery g = parse_gallery(s, gallery_text);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  Json arr = Json::array();
  for (int i = 1; i <= s.length(); ++i) {
    Root b = beta(g, i);
    if (opt.json)
      arr.push_back(s.rs().format_root(b));
    else
      os << "beta_" << i << " = " << s.rs().format_root(b) << "\n";
  }
  if (opt.json) os << Json{{"gallery", g.to_string()}, {"betas", arr}}.dump(2) << "\n";
  return kExitOk;
}

int cmd_moment_graph(const Options& opt, const SimpleSeq& s, bool dot) {
  MomentGraph g = moment_graph(s);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (dot)
    os << to_dot(g);
  else if (opt.json)
    os << moment_graph_to_json(g).dump(2) << "\n";
  else
    os << g.vertices.size() << " vertices, " << g.edges.size() << " edges\n";
  return kExitOk;
}

int cmd_morphism(const Options& opt, const std::string& action, const Json& document) {
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (action == "compose") {
    FoldMorphism first = morphism_from_json(document.at("m1"));
    FoldMorphism second = morphism_from_json(document.at("m2"));
    FoldMorphism both = compose(second, first);
    os << morphism_to_json(both).dump(2) << "\n";
    return kExitOk;
  }
  std::optional<FoldMorphism> m;
  try {
    m = morphism_from_json(document);
  } catch (const std::exception& e) {
    if (action == "check") {
      if (opt.json)
        os << Json{{"valid", false}, {"error", e.what()}}.dump(2) << "\n";
      else
        os << "invalid: " << e.what() << "\n";
      return kExitVerification;
    }
    throw;
  }
  if (action == "check" || action == "sign") {
    Json out = Json{{"valid", true},
                    {"sign", m->sign()},
                    {"rotation", weyl_to_json(m->rotation())},
                    {"rotation_identity", m->rotation().is_identity()},
                    {"validation", m->validation_mode() == ValidationMode::exhaustive
                                       ? "exhaustive"
                                       : "sampled"}};
    if (opt.json) {
      os << out.dump(2) << "\n";
    } else {
      os << "valid morphism; sign (";
      for (size_t i = 0; i < m->sign().size(); ++i)
        os << (i ? "," : "") << m->sign()[i];
      os << "); rotation " << (m->rotation().is_identity() ? "e" : "nontrivial") << "\n";
    }
    return kExitOk;
  }
  if (action == "extend") {
    Json out = morphism_to_json(*m);
    if (m->source().length() <= 12) {
      Json table = Json::object();
      for (const Gallery& g : enumerate_galleries(m->source()))
        table[g.to_string()] = m->apply(g).to_string();
      out["table"] = table;
    }
    os << out.dump(2) << "\n";
    return kExitOk;
  }
  throw std::invalid_argument("unknown morphism action " + action);
}

int cmd_topological(const Options& opt, const Json& document) {
  FoldMorphism m = morphism_from_json(document);
  TopologicalVerdict v = is_topological(m);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  std::string verdict = v.value == Topological::yes  ? "yes"
                        : v.value == Topological::no ? "no"
                                                     : "unknown";
  Json witnesses = Json::array();
  for (const CurveWitness& w : v.weak.witnesses)
    witnesses.push_back(Json{{"gamma", w.gamma.to_string()},
                             {"delta", w.delta.to_string()},
                             {"position", w.position}});
  if (opt.json)
    os << Json{{"topological", verdict}, {"reason", v.reason}, {"witnesses", witnesses}}
              .dump(2)
       << "\n";
  else
    os << verdict << " (" << v.reason << ")\n";
  return kExitOk;
}

int cmd_gkm_member(const Options& opt, const Json& document, bool strict) {
  GkmClass f = gkm_class_from_json(document);
  MembershipVerdict v = membership(f, strict);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (v.member) {
    os << (opt.json ? Json{{"member", true}}.dump(2) : std::string("member")) << "\n";
    return kExitOk;
  }
  if (opt.json)
    os << Json{{"member", false},
               {"alpha", f.seq.rs().format_root(v.violation->alpha)},
               {"gallery", v.violation->gallery.to_string()},
               {"remainder", v.violation->remainder.to_string()}}
              .dump(2)
       << "\n";
  else
    os << "violation at alpha = " << f.seq.rs().format_root(v.violation->alpha)
       << ", gallery " << v.violation->gallery.to_string() << ", remainder "
       << v.violation->remainder.to_string() << "\n";
  return kExitVerification;
}

int cmd_gkm_basis(const Options& opt, const SimpleSeq& s, int degree) {
  std::vector<GkmClass> basis = gkm_basis(s, degree);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  Json classes = Json::array();
  for (const GkmClass& b : basis) classes.push_back(gkm_class_to_json(b));
  Json out = {{"degree", degree},
              {"dimension", basis.size()},
              {"expected_dimension", gkm_expected_dimension(s, degree)},
              {"classes", classes}};
  if (opt.json) {
    os << out.dump(2) << "\n";
  } else {
    os << "dimension " << basis.size() << " (expected "
       << gkm_expected_dimension(s, degree) << ")\n";
    for (size_t k = 0; k < basis.size(); ++k) {
      os << "basis[" << k << "]:\n";
      for (const Gallery& g : enumerate_galleries(s))
        os << "  " << g.to_string() << " -> " << basis[k].at(g).to_string() << "\n";
    }
  }
  return kExitOk;
}

int cmd_restrict(const Options& opt, const Json& morphism_doc, const Json& class_doc) {
  FoldMorphism m = morphism_from_json(morphism_doc);
  GkmClass g = gkm_class_from_json(class_doc);
  GkmClass pulled = restrict_class(m, g);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  os << gkm_class_to_json(pulled).dump(2) << "\n";
  return kExitOk;
}

int cmd_chevalley_verify(const Options& opt, int rank, int trials, unsigned long long seed) {
  RelationReport report = verify_relations(rank, trials, seed);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  Json checks = Json::array();
  for (const RelationCheck& c : report.checks) {
    checks.push_back(Json{{"name", c.name}, {"trials", c.trials}, {"failures", c.failures}});
    if (!opt.json)
      os << (c.failures == 0 ? "pass " : "FAIL ") << c.name << " (" << c.trials
         << " trials)\n";
  }
  if (opt.json)
    os << Json{{"rank", rank}, {"seed", seed}, {"all_passed", report.all_passed()},
               {"checks", checks}}
              .dump(2)
       << "\n";
  return report.all_passed() ? kExitOk : kExitVerification;
}

int cmd_chevalley_transition(const Options& opt, const Json& document) {
  SimpleSeq s = seq_from_json(document);
  Gallery gamma = gallery_from_json(s, document.at("gamma"));
  Gallery delta = gallery_from_json(s, document.at("delta"));
  std::vector<Rational> coords;
  for (const Json& c : document.at("coords"))
    coords.push_back(c.is_string() ? parse_rational(c.get<std::string>())
                                   : Rational(c.get<long>()));
  auto res = chart_coords(bs_point(s, gamma, coords), delta);
  std::ofstream file;
  std::ostream& os = output(opt, file);
  if (!res) {
    os << Json{{"in_chart", false}}.dump(2) << "\n";
    return kExitOk;
  }
  Json out = transition_to_json(*res);
  out["in_chart"] = true;
  os << out.dump(2) << "\n";
  return kExitOk;
}

int cmd_appendix(const Options& opt) {
  AppendixReport report = run_appendix();
  std::ofstream file;
  std::ostream& os = output(opt, file);
  Json cases = Json::array();
  for (const AppendixCase& c : report.cases) {
    cases.push_back(Json{{"id", c.id}, {"summary", c.summary}, {"failures", c.failures}});
    if (!opt.json) {
      os << "example " << c.id << " " << (c.passed() ? "PASS" : "FAIL") << "  " << c.summary
         << "\n";
      for (const std::string& f : c.failures) os << "    " << f << "\n";
    }
  }
  if (opt.json)
    os << Json{{"all_passed", report.all_passed()}, {"cases", cases}}.dump(2) << "\n";
  else
    os << (report.all_passed() ? "6/6 PASS" : "FAILURES PRESENT") << "\n";
  return report.all_passed() ? kExitOk : kExitVerification;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact toolkit for galleries, fold morphisms and fixed-point modules"};
  app.require_subcommand(1);
  Options opt;
  app.add_flag("--json", opt.json, "structured JSON output");
  app.add_option("--out", opt.out_path, "write output to a file instead of stdout");
  app.add_option("--threads", opt.threads, "reserved; all paths are sequential");

  std::string family, seq_arg, type_arg, gallery_arg, doc_arg, doc2_arg, action;
  int rank = 1, degree = 0, ch_rank = 3, ch_trials = 100;
  unsigned long long seed = default_seed();
  bool dot = false, strict = false;

  auto* roots = app.add_subcommand("roots", "positive roots of a family/rank pair");
  roots->add_option("family", family)->required();
  roots->add_option("rank", rank)->required();

  auto* galleries = app.add_subcommand("galleries", "list the galleries of a word");
  galleries->add_option("seq", seq_arg)->required();
  galleries->add_option("--type", type_arg, "root system, e.g. A3");

  auto* betas = app.add_subcommand("beta", "wall roots of a gallery");
  betas->add_option("seq", seq_arg)->required();
  betas->add_option("gallery", gallery_arg)->required();
  betas->add_option("--type", type_arg);

  auto* graph = app.add_subcommand("moment-graph", "fixed points and their connecting curves");
  graph->add_option("seq", seq_arg)->required();
  graph->add_option("--type", type_arg);
  graph->add_flag("--dot", dot, "emit DOT");

  auto* morphism = app.add_subcommand("morphism", "check | sign | compose | extend");
  morphism->add_option("action", action)->required()->check(
      CLI::IsMember({"check", "sign", "compose", "extend"}));
  morphism->add_option("json", doc_arg, "document, inline JSON, or '-'")->required();

  auto* topological = app.add_subcommand("topological", "decide topological realizability");
  topological->add_option("json", doc_arg)->required();

  auto* gkm = app.add_subcommand("gkm", "member | basis");
  gkm->add_option("action", action)->required()->check(CLI::IsMember({"member", "basis"}));
  gkm->add_option("arg", doc_arg, "class document (member) or word (basis)")->required();
  gkm->add_option("--degree", degree, "degree for basis extraction");
  gkm->add_option("--type", type_arg);
  gkm->add_flag("--strict-zprime", strict, "insist on coefficients in Z[1/2]");

  auto* restrict_cmd = app.add_subcommand("restrict", "pull a class back along a morphism");
  restrict_cmd->add_option("morphism", doc_arg)->required();
  restrict_cmd->add_option("class", doc2_arg)->required();

  auto* chevalley = app.add_subcommand("chevalley", "verify | transition");
  chevalley->add_option("action", action)->required()->check(
      CLI::IsMember({"verify", "transition"}));
  chevalley->add_option("arg", doc_arg, "transition document (transition)");
  chevalley->add_option("--rank", ch_rank, "rank for verify");
  chevalley->add_option("--trials", ch_trials);
  chevalley->add_option("--seed", seed);

  auto* appendix = app.add_subcommand("appendix", "run the bundled fixture suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitBadInput;
  }

  try {
    if (roots->parsed()) return cmd_roots(opt, family, rank);
    if (galleries->parsed()) return cmd_galleries(opt, load_seq_argument(seq_arg, type_arg));
    if (betas->parsed())
      return cmd_beta(opt, load_seq_argument(seq_arg, type_arg), gallery_arg);
    if (graph->parsed())
      return cmd_moment_graph(opt, load_seq_argument(seq_arg, type_arg), dot);
    if (morphism->parsed()) return cmd_morphism(opt, action, load_json_argument(doc_arg));
    if (topological->parsed()) return cmd_topological(opt, load_json_argument(doc_arg));
    if (gkm->parsed()) {
      if (action == "member")
        return cmd_gkm_member(opt, load_json_argument(doc_arg), strict);
      return cmd_gkm_basis(opt, load_seq_argument(doc_arg, type_arg), degree);
    }
    if (restrict_cmd->parsed())
      return cmd_restrict(opt, load_json_argument(doc_arg), load_json_argument(doc2_arg));
    if (chevalley->parsed()) {
      if (action == "verify") return cmd_chevalley_verify(opt, ch_rank, ch_trials, seed);
      if (doc_arg.empty()) throw std::invalid_argument("transition needs a document");
      return cmd_chevalley_transition(opt, load_json_argument(doc_arg));
    }
    if (appendix->parsed()) return cmd_appendix(opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadInput;
  }
  return kExitBadInput;
}
