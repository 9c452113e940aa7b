#include "fcell/io.hpp"

#include <fstream>
#include <sstream>

#include "fcell/error.hpp"

namespace fcell {

namespace {

constexpr int kFormat = 1;

Json document(char const* type) {
  Json j;
  j["format"] = kFormat;
  j["type"] = type;
  return j;
}

[[noreturn]] void fail(std::string const& where, std::string const& what) {
  throw InputError((where.empty() ? std::string("/") : where) + ": " + what);
}

void check_header(Json const& j, std::string const& where, char const* type) {
  if (!j.is_object()) fail(where, "expected an object");
  // nested objects may omit the header
  if (j.contains("format") && j["format"] != kFormat) fail(where + "/format", "unsupported format, expected 1");
  if (j.contains("type") && j["type"] != type)
    fail(where + "/type", "expected type \"" + std::string(type) + "\"");
}

Json const& field(Json const& j, std::string const& where, char const* key) {
  if (!j.contains(key)) fail(where, std::string("missing field \"") + key + "\"");
  return j[key];
}

std::string string_at(Json const& j, std::string const& where) {
  if (!j.is_string()) fail(where, "expected a string");
  return j.get<std::string>();
}

std::vector<std::string> strings_at(Json const& j, std::string const& where) {
  if (!j.is_array()) fail(where, "expected an array of strings");
  std::vector<std::string> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(string_at(j[i], where + "/" + std::to_string(i)));
  return out;
}

Json longitudes_json(LinkPresentation const& link) {
  Json a = Json::array();
  for (auto const& w : link.longitudes()) a.push_back(w.to_string());
  return a;
}

LinkPresentation parse_longitudes(Json const& j, std::string const& where) {
  try {
    return LinkPresentation::parse(strings_at(j, where));
  } catch (InputError const& e) {
    fail(where, e.what());
  }
}

// Named links used inside cell files.
std::optional<SolidTorusLink> named_pattern(std::string const& name) {
  if (name == "core") return core_link();
  if (name.rfind("bing:", 0) == 0) {
    auto obj = builtin("bing(" + name.substr(5) + ")");
    return std::get<SolidTorusLink>(obj);
  }
  return std::nullopt;
}

std::string pattern_name(SolidTorusLink const& link) {
  static std::vector<std::pair<std::string, SolidTorusLink>> const known = {
      {"core", core_link()}, {"bing:1", iterated_bing(1)}, {"bing:2", iterated_bing(2)}};
  for (auto const& [name, l] : known)
    if (l == link) return name;
  return "";
}

Json node_json(CellNode const& node) {
  Json j;
  j["kind"] = kind_name(node.kind);
  if (node.kind == VertexKind::Handle) {
    j["var"] = node.var;
    return j;
  }
  if (node.kind == VertexKind::Link) {
    std::string const name = pattern_name(*node.link);
    if (!name.empty()) {
      j["link"] = name;
    } else {
      Json l = to_json(*node.link);
      l.erase("format");
      l.erase("type");
      j["link"] = l;
    }
  }
  j["children"] = Json::array();
  for (auto const& c : node.children) j["children"].push_back(node_json(c));
  return j;
}

CellNode node_from_json(Json const& j, std::string const& where) {
  if (!j.is_object()) fail(where, "expected an object");
  std::string const kind = string_at(field(j, where, "kind"), where + "/kind");
  CellNode node;
  if (kind == "handle") {
    node.kind = VertexKind::Handle;
    node.var = string_at(field(j, where, "var"), where + "/var");
    if (j.contains("children") && !j["children"].empty()) fail(where + "/children", "a handle has no children");
    return node;
  }
  if (kind == "surface") {
    node.kind = VertexKind::Surface;
  } else if (kind == "link") {
    node.kind = VertexKind::Link;
    Json const& l = field(j, where, "link");
    if (l.is_string()) {
      auto p = named_pattern(l.get<std::string>());
      if (!p) fail(where + "/link", "unknown link name \"" + l.get<std::string>() + "\"");
      node.link = std::make_shared<const SolidTorusLink>(std::move(*p));
    } else {
      node.link = std::make_shared<const SolidTorusLink>(solid_torus_link_from_json(l, where + "/link"));
    }
  } else {
    fail(where + "/kind", "unknown kind \"" + kind + "\"");
  }
  Json const& children = field(j, where, "children");
  if (!children.is_array()) fail(where + "/children", "expected an array");
  for (std::size_t i = 0; i < children.size(); ++i)
    node.children.push_back(node_from_json(children[i], where + "/children/" + std::to_string(i)));
  return node;
}

}  // namespace

Json to_json(Integer const& n) {
  if (n.fits_slong_p()) return Json(n.get_si());
  return Json(n.get_str());
}

Integer integer_from_json(Json const& j, std::string const& where) {
  if (j.is_number_integer()) return Integer(j.get<long>());
  if (j.is_string()) {
    Integer n;
    if (n.set_str(j.get<std::string>(), 10) == 0) return n;
  }
  fail(where, "expected an integer");
}

Json to_json(LinkPresentation const& link) {
  Json j = document("link");
  j["components"] = link.components();
  j["longitudes"] = longitudes_json(link);
  return j;
}

Json to_json(SolidTorusLink const& link) {
  Json j = document("solid-torus-link");
  j["wedge_word"] = link.wedge_word.to_string();
  j["lhat"] = longitudes_json(link.lhat);
  j["lplus"] = longitudes_json(link.lplus);
  j["preferred_order"] = Json::array();
  for (auto i : link.preferred_order) j["preferred_order"].push_back(i + 1);
  return j;
}

Json to_json(FCellTree const& tree) {
  Json j = document("cell");
  Json body = node_json(tree.bottom());
  for (auto& [k, v] : body.items()) j[k] = v;
  return j;
}

Json to_json(PhiCertificate const& cert) {
  Json j = document("certificate");
  j["mu"] = {{"value", to_json(cert.mu_link.value)}, {"modulus", to_json(cert.mu_link.modulus)}};
  j["phi"] = to_json(cert.phi_value);
  j["verdict"] = verdict_name(cert.verdict);
  j["witness_monomial"] = cert.witness_monomial;
  j["index"] = cert.sublink.empty() ? "" : format_index(cert.sublink);
  if (!cert.note.empty()) j["note"] = cert.note;
  return j;
}

LinkPresentation link_from_json(Json const& j, std::string const& where) {
  check_header(j, where, "link");
  auto link = parse_longitudes(field(j, where, "longitudes"), where + "/longitudes");
  if (j.contains("components") && (!j["components"].is_number_integer() || j["components"] != link.components()))
    fail(where + "/components", "does not match the number of longitudes");
  return link;
}

SolidTorusLink solid_torus_link_from_json(Json const& j, std::string const& where) {
  check_header(j, where, "solid-torus-link");
  SolidTorusLink link{
      Word(wedge_alphabet(1)),
      parse_longitudes(field(j, where, "lhat"), where + "/lhat"),
      parse_longitudes(field(j, where, "lplus"), where + "/lplus"),
      {},
  };
  Json const& order = field(j, where, "preferred_order");
  if (!order.is_array()) fail(where + "/preferred_order", "expected an array");
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (!order[i].is_number_integer() || order[i].get<long>() < 1)
      fail(where + "/preferred_order/" + std::to_string(i), "expected a positive integer");
    link.preferred_order.push_back(order[i].get<std::size_t>() - 1);
  }
  try {
    link.wedge_word = Word::parse(wedge_alphabet(link.components()),
                                  string_at(field(j, where, "wedge_word"), where + "/wedge_word"));
    link.check_shape();
  } catch (InputError const& e) {
    fail(where, e.what());
  }
  return link;
}

FCellTree tree_from_json(Json const& j, std::string const& where) {
  check_header(j, where, "cell");
  CellNode node = node_from_json(j, where);
  try {
    return FCellTree(node);
  } catch (InputError const& e) {
    fail(where, e.what());
  }
}

Json parse_json(std::string const& text, std::string const& source) {
  try {
    return Json::parse(text);
  } catch (Json::parse_error const& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::string read_file(std::string const& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

namespace {

template <class T>
std::optional<T> from_builtin(std::string const& spec) {
  if (spec.rfind("builtin:", 0) != 0) return std::nullopt;
  auto obj = builtin(spec.substr(8));
  if (auto p = std::get_if<T>(&obj)) return *p;
  throw InputError("builtin " + spec.substr(8) + " has the wrong type here");
}

template <class T, class F>
T load(std::string const& spec, F from_json) {
  if (auto b = from_builtin<T>(spec)) return *b;
  Json const j = parse_json(read_file(spec), spec);
  try {
    return from_json(j, "");
  } catch (InputError const& e) {
    throw InputError(spec + ": " + e.what());
  }
}

}  // namespace

LinkPresentation load_link(std::string const& spec) { return load<LinkPresentation>(spec, link_from_json); }
SolidTorusLink load_solid_torus_link(std::string const& spec) {
  return load<SolidTorusLink>(spec, solid_torus_link_from_json);
}
FCellTree load_tree(std::string const& spec) { return load<FCellTree>(spec, tree_from_json); }

}  // namespace fcell
