// fcell: Milnor invariants, solid torus links and flexible cells from the
// command line. Exit status 0 on success, 1 when a computation is refused,
// 2 on bad input.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>

#include "acceptance.hpp"
#include "fcell/error.hpp"
#include "fcell/io.hpp"

using namespace fcell;

namespace {

struct Options {
  std::string format = "text";
  std::optional<unsigned> q;
  std::uint64_t seed = 1;
};

std::optional<unsigned> env_default_q() {
  char const* s = std::getenv("FCELL_DEFAULT_Q");
  if (!s || !*s) return std::nullopt;
  char* end = nullptr;
  long const v = std::strtol(s, &end, 10);
  if (*end != '\0' || v < 1 || v > 64) throw InputError("FCELL_DEFAULT_Q must be an integer in 1..64");
  return static_cast<unsigned>(v);
}

unsigned degree(Options const& o, unsigned fallback) {
  if (o.q) return *o.q;
  if (auto e = env_default_q()) return *e;
  return fallback;
}

bool json(Options const& o) { return o.format == "json"; }

void emit(Json const& j) { std::cout << j.dump(2) << '\n'; }

std::vector<std::size_t> parse_index(std::string const& text, std::size_t n) {
  std::vector<std::size_t> out;
  std::string item;
  std::istringstream in(text);
  bool const commas = text.find(',') != std::string::npos;
  auto push = [&](std::string const& tok) {
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("bad index '" + text + "'");
    std::size_t const v = std::stoul(tok);
    if (v < 1 || v > n) throw InputError("index entry " + tok + " outside 1.." + std::to_string(n));
    out.push_back(v - 1);
  };
  if (commas) {
    while (std::getline(in, item, ',')) push(item);
  } else {
    for (char c : text) push(std::string(1, c));
  }
  if (out.size() < 2) throw InputError("an index needs at least two entries");
  return out;
}

std::string name_monomial(FCellTree const& t, Monomial const& m) { return monomial_to_string(m, *t.alphabet()); }

int cmd_mu(Options const& o, std::string const& link_spec, std::string const& index_text) {
  auto const link = load_link(link_spec);
  auto const full = parse_index(index_text, link.components());
  unsigned const q = degree(o, static_cast<unsigned>(full.size()));
  Monomial prefix(full.begin(), full.end() - 1);
  auto const r = mu_bar(link, prefix, full.back(), q);
  if (json(o)) {
    Json j{{"format", 1}, {"type", "mu"}, {"index", format_index(full)}, {"value", to_json(r.value)},
           {"modulus", to_json(r.modulus)}, {"q", q}};
    emit(j);
  } else {
    std::cout << "mu_bar(" << format_index(full) << ") = " << r.to_string() << '\n';
  }
  return 0;
}

int cmd_trivial(Options const& o, std::string const& link_spec) {
  auto const link = load_link(link_spec);
  unsigned const q = degree(o, static_cast<unsigned>(link.components()) + 1);
  auto const r = is_homotopically_trivial(link, q);
  bool const almost = is_almost_trivial(link, q);
  if (json(o)) {
    Json j{{"format", 1}, {"type", "triviality"}, {"trivial", r.trivial}, {"almost_trivial", almost}};
    if (r.witness)
      j["witness"] = {{"index", format_index(r.witness->full())},
                      {"value", to_json(r.witness_value->value)},
                      {"modulus", to_json(r.witness_value->modulus)}};
    emit(j);
  } else {
    if (r.trivial)
      std::cout << "homotopically trivial\n";
    else
      std::cout << "essential: mu_bar(" << format_index(r.witness->full()) << ") = " << r.witness_value->to_string()
                << '\n';
    std::cout << "almost trivial: " << (almost ? "yes" : "no") << '\n';
  }
  return 0;
}

int cmd_admissible(Options const& o, std::string const& spec) {
  auto const link = load_solid_torus_link(spec);
  unsigned const q = degree(o, default_admissibility_degree(link));
  auto const r = is_admissible(link, q);
  std::optional<Integer> mu;
  try {
    mu = wedge_mu(link, std::max<unsigned>(q, static_cast<unsigned>(link.components())));
  } catch (ContractError const&) {
  }
  if (json(o)) {
    Json j{{"format", 1}, {"type", "admissibility"}, {"admissible", r.admissible}, {"essential", r.essential}};
    j["failed_deletions"] = Json::array();
    for (auto i : r.failed_deletions) j["failed_deletions"].push_back(i + 1);
    j["wedge_mu"] = mu ? to_json(*mu) : Json(nullptr);
    emit(j);
  } else {
    std::cout << r.summary() << '\n';
    std::cout << "wedge mu: " << (mu ? mu->get_str() : std::string("0 (preferred order invalid)")) << '\n';
  }
  return r.admissible ? 0 : 1;
}

int cmd_bing(Options const& o, unsigned depth) {
  auto const obj = builtin("bing(" + std::to_string(depth) + ")");
  auto const& link = std::get<SolidTorusLink>(obj);
  if (json(o)) {
    emit(to_json(link));
  } else {
    std::cout << "components: " << link.components() << '\n';
    std::cout << "wedge word: " << link.wedge_word.to_string() << '\n';
    std::cout << "wedge mu: " << wedge_mu(link) << '\n';
    for (std::size_t i = 0; i < link.lplus.components(); ++i)
      std::cout << "lplus l" << i + 1 << ": " << link.lplus.longitude(i).to_string() << '\n';
  }
  return 0;
}

int cmd_presentation(Options const& o, std::string const& link_spec) {
  auto const link = load_link(link_spec);
  auto const p = nilpotent_presentation(link, degree(o, static_cast<unsigned>(link.components()) + 1));
  if (json(o)) {
    Json j{{"format", 1}, {"type", "presentation"}, {"generators", p.generators}, {"class", p.nilpotency_class}};
    j["relators"] = Json::array();
    for (auto const& r : p.relators) j["relators"].push_back(r.to_string());
    emit(j);
  } else {
    std::cout << p.to_string() << '\n';
  }
  return 0;
}

int cmd_compose(Options const& o, std::string const& link_spec, std::string const& pattern_spec) {
  auto const out = compose(load_link(link_spec), load_solid_torus_link(pattern_spec));
  if (json(o)) {
    emit(to_json(out));
  } else {
    for (std::size_t i = 0; i < out.components(); ++i)
      std::cout << "l" << i + 1 << ": " << out.longitude(i).to_string() << '\n';
  }
  return 0;
}

int cmd_tree_basis(Options const& o, std::string const& tree_spec, std::string const& kind, std::size_t vertex) {
  auto const t = load_tree(tree_spec);
  if (vertex >= t.size()) throw InputError("vertex " + std::to_string(vertex) + " out of range");
  auto const b = kind == "q" ? q_basis(t, vertex) : rtilde_basis(t, vertex);
  if (json(o)) {
    Json j{{"format", 1}, {"type", "basis"}, {"kind", kind}, {"vertex", vertex}, {"height", height(t)}};
    j["monomials"] = Json::array();
    for (auto const& m : b.monomials) j["monomials"].push_back(name_monomial(t, m));
    emit(j);
  } else {
    for (auto const& m : b.monomials) std::cout << name_monomial(t, m) << '\n';
  }
  return 0;
}

int cmd_tree_phi(Options const& o, std::string const& tree_spec, std::optional<std::string> const& word_text,
                 std::size_t relators) {
  auto const t = load_tree(tree_spec);
  unsigned const q = degree(o, required_degree(t, t.root()));
  Word const w = word_text ? Word::parse(t.alphabet(), *word_text) : bottom_meridian_word(t);
  auto const phi = phi_functional(t);
  Integer const value = phi_of_word(t, w, q);
  Json j{{"format", 1}, {"type", "phi"}, {"word", w.to_string()}, {"q", q}, {"phi", to_json(value)}};
  j["table"] = Json::object();
  for (auto const& [m, v] : phi.table) j["table"][name_monomial(t, m)] = to_json(v);
  j["relators"] = Json::array();
  for (auto const& r : relator_samples(t, relators, o.seed)) {
    Json e{{"family", family_name(r.family)}, {"word", r.word.to_string()}, {"inner_stage", r.inner_stage}};
    e["phi_coordinates"] = to_json(phi_of_word_coordinates(t, w * r.word, q));
    try {
      e["phi"] = to_json(phi_of_word(t, w * r.word, q));
    } catch (RefusalError const&) {
      e["phi"] = nullptr;
    }
    j["relators"].push_back(e);
  }
  if (json(o)) {
    emit(j);
    return 0;
  }
  std::cout << "word: " << w.to_string() << '\n';
  for (auto const& [m, v] : phi.table) std::cout << "Phi(" << name_monomial(t, m) << ") = " << v << '\n';
  std::cout << "phi = " << value << '\n';
  for (auto const& e : j["relators"])
    std::cout << e["family"].get<std::string>() << (e["inner_stage"].get<bool>() ? " (inner stage) " : " ")<< e["word"].get<std::string>() << " -> "
              << (e["phi"].is_null() ? "outside S, coordinates " + e["phi_coordinates"].dump() : e["phi"].dump())
              << '\n';
  return 0;
}

int cmd_obstruct(Options const& o, std::string const& link_spec, std::vector<std::string> const& tree_specs,
                 std::string const& index_text) {
  auto const link = load_link(link_spec);
  std::size_t const n = link.components();
  std::vector<FCellTree> trees;
  for (auto const& s : tree_specs) trees.push_back(load_tree(s));
  if (trees.empty()) trees.push_back(handle_cell());
  if (trees.size() == 1) trees.resize(n, trees.front());
  std::vector<std::size_t> index;
  if (!index_text.empty()) index = parse_index(index_text, n);
  auto const cert = obstruct_bounding(link, trees, degree(o, static_cast<unsigned>(n) + 1), index);
  if (json(o)) {
    emit(to_json(cert));
  } else {
    std::cout << "verdict: " << verdict_name(cert.verdict) << '\n';
    if (!cert.sublink.empty()) std::cout << "mu_bar(" << format_index(cert.sublink) << ") = " << cert.mu_link.to_string() << '\n';
    std::cout << "phi = " << cert.phi_value << '\n';
    if (!cert.witness_monomial.empty()) std::cout << "witness monomial: " << cert.witness_monomial << '\n';
    if (!cert.note.empty()) std::cout << "note: " << cert.note << '\n';
  }
  return 0;
}

int cmd_selftest(Options const& o) {
  auto const results = acceptance::run_all();
  int failed = 0;
  Json j{{"format", 1}, {"type", "selftest"}, {"criteria", Json::array()}};
  for (auto const& r : results) {
    if (!r.pass) ++failed;
    j["criteria"].push_back({{"id", r.id}, {"pass", r.pass}, {"detail", r.detail}});
    if (!json(o)) std::cout << acceptance::format(r) << '\n';
  }
  if (json(o)) emit(j);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Milnor invariants and flexible cell obstructions"};
  app.require_subcommand(1);
  Options o;
  unsigned q_value = 0;
  app.add_option("--format", o.format, "text or json")->check(CLI::IsMember({"text", "json"}));
  auto* q_opt = app.add_option("--q", q_value, "truncation degree")->check(CLI::Range(1u, 64u));
  app.add_option("--seed", o.seed, "seed for sampled relators");

  std::string link, pattern, tree, index, kind = "q";
  std::vector<std::string> trees;
  std::optional<std::string> word;
  std::size_t vertex = 0, relators = 0;
  unsigned depth = 1;

  auto* mu = app.add_subcommand("mu", "mu-bar invariant of one index");
  mu->add_option("--link", link, "link file or builtin:NAME")->required();
  mu->add_option("--index", index, "one-based index, last entry is the longitude (123 or 1,2,3)")->required();
  auto* trivial = app.add_subcommand("trivial", "homotopy triviality with a witness");
  trivial->add_option("--link", link)->required();
  auto* admissible = app.add_subcommand("admissible", "admissibility of a solid torus link");
  admissible->add_option("--pattern", pattern, "solid torus link file or builtin:NAME")->required();
  auto* bing = app.add_subcommand("bing", "iterated Bing double of the core");
  bing->add_option("--depth", depth)->check(CLI::Range(0u, 3u));
  auto* presentation = app.add_subcommand("presentation", "nilpotent quotient presentation");
  presentation->add_option("--link", link)->required();
  auto* comp = app.add_subcommand("compose", "replace the last component by a pattern");
  comp->add_option("--link", link)->required();
  comp->add_option("--pattern", pattern)->required();
  auto* basis = app.add_subcommand("tree-basis", "R~ or Q basis of a cell");
  basis->add_option("--tree", tree)->required();
  basis->add_option("--kind", kind)->check(CLI::IsMember({"q", "rtilde"}));
  basis->add_option("--vertex", vertex, "vertex number, 0 is the root");
  auto* phi = app.add_subcommand("tree-phi", "Phi of a word in the handle meridians");
  phi->add_option("--tree", tree)->required();
  phi->add_option("--word", word, "defaults to the bottom meridian word");
  phi->add_option("--relators", relators, "also evaluate on this many sampled relators");
  auto* obstruct = app.add_subcommand("obstruct", "obstruction certificate for disjoint cells");
  obstruct->add_option("--link", link)->required();
  obstruct->add_option("--tree", trees, "one cell per component, or one for all; default a single handle");
  obstruct->add_option("--index", index, "full-length index to use instead of a minimal sublink");
  auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    int const code = app.exit(e);
    return code == 0 ? 0 : 2;
  }
  if (q_opt->count()) o.q = q_value;

  try {
    if (*mu) return cmd_mu(o, link, index);
    if (*trivial) return cmd_trivial(o, link);
    if (*admissible) return cmd_admissible(o, pattern);
    if (*bing) return cmd_bing(o, depth);
    if (*presentation) return cmd_presentation(o, link);
    if (*comp) return cmd_compose(o, link, pattern);
    if (*basis) return cmd_tree_basis(o, tree, kind, vertex);
    if (*phi) return cmd_tree_phi(o, tree, word, relators);
    if (*obstruct) return cmd_obstruct(o, link, trees, index);
    if (*selftest) return cmd_selftest(o);
  } catch (InputError const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (RefusalError const& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 1;
  } catch (ContractError const& e) {
    std::cerr << "refused: " << e.what() << '\n';
    return 1;
  }
  return 2;
}
