#include "fcell/builtins.hpp"

#include <cctype>

#include "fcell/error.hpp"

namespace fcell {

LinkPresentation unlink(std::size_t n) {
  if (n == 0) throw InputError("unlink needs at least one component");
  return LinkPresentation(std::vector<Word>(n, Word(numbered_alphabet("m", n))));
}

LinkPresentation hopf_link() { return LinkPresentation::parse({"m2", "m1"}); }

LinkPresentation borromean_rings() {
  return LinkPresentation::parse({"m2^-1 m3^-1 m2 m3", "m3^-1 m1^-1 m3 m1", "m1^-1 m2^-1 m1 m2"});
}

LinkPresentation whitehead_longitude_demo() {
  auto m = numbered_alphabet("m", 2);
  Word const m1 = Word::generator(m, 0), m2 = Word::generator(m, 1);
  return LinkPresentation({commutator(m2, conjugate(m2, m1)), commutator(m1, conjugate(m1, m2))});
}

FCellTree handle_cell(std::string const& var) { return FCellTree(CellNode::surface({CellNode::handle(var)})); }

FCellTree fig1_cell() {
  auto const bing = iterated_bing(1);
  return FCellTree(CellNode::surface({
      CellNode::marked(bing, {CellNode::handle("x1"), CellNode::handle("x2")}),
      CellNode::marked(bing, {CellNode::handle("x3"), CellNode::handle("x4")}),
  }));
}

FCellTree fig2_cell() {
  auto const bing = iterated_bing(1);
  auto pants = CellNode::surface({
      CellNode::marked(bing, {CellNode::handle("x1"), CellNode::handle("x2")}),
      CellNode::marked(bing, {CellNode::handle("x3"), CellNode::handle("x4")}),
  });
  return FCellTree(CellNode::surface({CellNode::marked(bing, {std::move(pants), CellNode::handle("x5")})}));
}

namespace {

// "name(k)" -> k
std::optional<unsigned> parameter(std::string const& name, std::string const& head) {
  if (name.size() < head.size() + 3 || name.compare(0, head.size() + 1, head + "(") != 0 || name.back() != ')')
    return std::nullopt;
  std::string const digits = name.substr(head.size() + 1, name.size() - head.size() - 2);
  if (digits.empty() || digits.size() > 3) throw InputError("bad parameter in builtin '" + name + "'");
  for (char c : digits)
    if (!std::isdigit(static_cast<unsigned char>(c))) throw InputError("bad parameter in builtin '" + name + "'");
  return static_cast<unsigned>(std::stoul(digits));
}

}  // namespace

BuiltinObject builtin(std::string const& name) {
  if (name == "hopf") return hopf_link();
  if (name == "borromean") return borromean_rings();
  if (name == "whitehead-longitude-demo") return whitehead_longitude_demo();
  if (name == "core") return core_link();
  if (name == "handle") return handle_cell();
  if (name == "fig1-cell") return fig1_cell();
  if (name == "fig2-cell") return fig2_cell();
  if (auto n = parameter(name, "unlink")) return unlink(*n);
  if (auto d = parameter(name, "bing")) {
    if (*d > 3) throw InputError("bing depth above 3 is not supported");
    return iterated_bing(*d);
  }
  throw InputError("unknown builtin '" + name + "'");
}

std::vector<std::string> builtin_link_names() {
  return {"unlink(1)", "unlink(2)", "unlink(3)", "unlink(4)", "hopf", "borromean", "whitehead-longitude-demo"};
}

std::vector<std::string> builtin_names() {
  auto names = builtin_link_names();
  for (char const* n : {"core", "bing(1)", "bing(2)", "handle", "fig1-cell", "fig2-cell"}) names.push_back(n);
  return names;
}

}  // namespace fcell
