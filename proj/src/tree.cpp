#include "fcell/tree.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "fcell/error.hpp"

namespace fcell {

std::string kind_name(VertexKind kind) {
  switch (kind) {
    case VertexKind::Root: return "root";
    case VertexKind::Surface: return "surface";
    case VertexKind::Link: return "link";
    case VertexKind::Handle: return "handle";
    case VertexKind::Join: return "join";
  }
  return "?";
}

bool is_marked(VertexKind kind) { return kind == VertexKind::Link || kind == VertexKind::Join; }

CellNode CellNode::handle(std::string var) {
  CellNode n;
  n.kind = VertexKind::Handle;
  n.var = std::move(var);
  return n;
}

CellNode CellNode::surface(std::vector<CellNode> children) {
  CellNode n;
  n.kind = VertexKind::Surface;
  n.children = std::move(children);
  return n;
}

CellNode CellNode::marked(SolidTorusLink link, std::vector<CellNode> children) {
  CellNode n;
  n.kind = VertexKind::Link;
  n.link = std::make_shared<const SolidTorusLink>(std::move(link));
  n.children = std::move(children);
  return n;
}

bool CellNode::operator==(CellNode const& other) const {
  if (kind != other.kind || var != other.var || children != other.children) return false;
  if (!link || !other.link) return !link && !other.link;
  return *link == *other.link;
}

std::size_t FCellTree::add(CellNode const& node, std::optional<std::size_t> parent,
                           std::vector<std::string>& names) {
  std::size_t const v = vertices_.size();
  vertices_.push_back(Vertex{node.kind, parent, {}, nullptr, 1, 0, 0});
  std::string const where = kind_name(node.kind) + " vertex " + std::to_string(v);

  auto allowed = [&](std::initializer_list<VertexKind> kinds) {
    for (auto const& c : node.children)
      if (std::find(kinds.begin(), kinds.end(), c.kind) == kinds.end())
        throw InputError(where + ": a " + kind_name(c.kind) + " cannot be a child here");
  };

  switch (node.kind) {
    case VertexKind::Handle:
      if (!node.children.empty()) throw InputError(where + ": a handle has no children");
      if (node.var.empty()) throw InputError(where + ": handle without a variable name");
      vertices_[v].var = static_cast<GeneratorIndex>(names.size());
      leaf_vertex_.push_back(v);
      names.push_back(node.var);
      break;
    case VertexKind::Surface:
      if (node.children.empty()) throw InputError(where + ": a surface needs at least one child");
      allowed({VertexKind::Link, VertexKind::Handle});
      break;
    case VertexKind::Link: {
      if (!node.link) throw InputError(where + ": missing solid torus link");
      node.link->check_shape();
      if (node.children.size() != node.link->components())
        throw InputError(where + ": " + std::to_string(node.children.size()) + " children for a " +
                         std::to_string(node.link->components()) + "-component link");
      allowed({VertexKind::Surface, VertexKind::Handle});
      auto report = is_admissible(*node.link, default_admissibility_degree(*node.link));
      if (!report.admissible) throw InputError(where + ": link is " + report.summary());
      try {
        vertices_[v].weight = wedge_mu(*node.link);
      } catch (ContractError const& e) {
        throw InputError(where + ": " + e.what());
      }
      vertices_[v].link = node.link;
      break;
    }
    case VertexKind::Root:
    case VertexKind::Join:
      throw InputError(where + ": not allowed in a cell description");
  }
  vertices_[v].marked_depth =
      (parent ? vertices_[*parent].marked_depth : 0) + (node.kind == VertexKind::Link ? 1 : 0);
  for (auto const& c : node.children) {
    std::size_t const child = add(c, v, names);
    vertices_[v].children.push_back(child);
  }
  return v;
}

void FCellTree::finish(std::vector<std::string> names) {
  alphabet_ = make_alphabet(std::move(names));
  std::size_t const n = leaf_vertex_.size();
  std::vector<std::vector<std::size_t>> paths(n);
  for (std::size_t i = 0; i < n; ++i) {
    std::optional<std::size_t> v = leaf_vertex_[i];
    while (v) {
      paths[i].push_back(*v);
      v = vertices_[*v].parent;
    }
    std::reverse(paths[i].begin(), paths[i].end());
  }
  ancestor_.assign(n, std::vector<std::size_t>(n, 0));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t k = 0;
      while (k + 1 < paths[a].size() && k + 1 < paths[b].size() && paths[a][k + 1] == paths[b][k + 1]) ++k;
      ancestor_[a][b] = paths[a][k];
    }
}

FCellTree::FCellTree(CellNode const& bottom) {
  if (bottom.kind != VertexKind::Surface)
    throw InputError("the bottom stage of a cell must be a surface, got " + kind_name(bottom.kind));
  vertices_.push_back(Vertex{VertexKind::Root, std::nullopt, {}, nullptr, 1, 0, 0});
  std::vector<std::string> names;
  std::size_t const child = add(bottom, 0, names);
  vertices_[0].children.push_back(child);
  finish(std::move(names));
}

namespace {

void rename_leaves(CellNode& node, std::size_t& counter) {
  if (node.kind == VertexKind::Handle) node.var = "x" + std::to_string(++counter);
  for (auto& c : node.children) rename_leaves(c, counter);
}

}  // namespace

FCellTree FCellTree::join(std::vector<FCellTree> const& cells) {
  if (cells.empty()) throw InputError("join of an empty collection");
  FCellTree out;
  out.vertices_.push_back(Vertex{VertexKind::Root, std::nullopt, {1}, nullptr, 1, 0, 0});
  out.vertices_.push_back(Vertex{VertexKind::Join, 0, {}, nullptr, 1, 0, 0});
  std::vector<std::string> names;
  std::size_t counter = 0;
  for (auto const& cell : cells) {
    CellNode node = cell.bottom();
    rename_leaves(node, counter);
    std::size_t const child = out.add(node, 1, names);
    out.vertices_[1].children.push_back(child);
  }
  out.finish(std::move(names));
  return out;
}

std::vector<GeneratorIndex> FCellTree::leaves_below(std::size_t v) const {
  std::vector<GeneratorIndex> out;
  std::vector<std::size_t> stack{v};
  while (!stack.empty()) {
    std::size_t u = stack.back();
    stack.pop_back();
    auto const& vx = vertices_.at(u);
    if (vx.kind == VertexKind::Handle) out.push_back(vx.var);
    for (auto it = vx.children.rbegin(); it != vx.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

CellNode FCellTree::node_at(std::size_t v) const {
  auto const& vx = vertices_[v];
  CellNode n;
  n.kind = vx.kind;
  n.link = vx.link;
  if (vx.kind == VertexKind::Handle) n.var = alphabet_->names()[vx.var];
  for (auto c : vx.children) n.children.push_back(node_at(c));
  return n;
}

CellNode FCellTree::bottom() const {
  auto const& child = vertices_[vertices_[0].children.at(0)];
  if (child.kind == VertexKind::Join) throw InputError("a joined collection has no single bottom stage");
  return node_at(vertices_[0].children[0]);
}

unsigned height(FCellTree const& tree) {
  unsigned h = 0;
  for (auto const& v : tree.vertices()) h = std::max(h, v.marked_depth);
  return h;
}

namespace {

CellNode pad_leaf(CellNode leaf, unsigned deficit, VertexKind parent,
                  std::shared_ptr<const SolidTorusLink> const& core) {
  if (deficit == 0) return leaf;
  if (parent == VertexKind::Link) return CellNode::surface({pad_leaf(std::move(leaf), deficit, VertexKind::Surface, core)});
  CellNode m;
  m.kind = VertexKind::Link;
  m.link = core;
  m.children.push_back(pad_leaf(std::move(leaf), deficit - 1, VertexKind::Link, core));
  return m;
}

CellNode pad(CellNode const& node, unsigned depth, unsigned target, VertexKind parent,
             std::shared_ptr<const SolidTorusLink> const& core) {
  if (node.kind == VertexKind::Handle) return pad_leaf(node, target - depth, parent, core);
  CellNode out = node;
  unsigned const here = depth + (node.kind == VertexKind::Link ? 1 : 0);
  for (auto& c : out.children) c = pad(c, here, target, node.kind, core);
  return out;
}

}  // namespace

FCellTree uniformize(FCellTree const& tree) {
  auto core = std::make_shared<const SolidTorusLink>(core_link());
  return FCellTree(pad(tree.bottom(), 0, height(tree), VertexKind::Root, core));
}

std::pair<std::size_t, bool> first_common_ancestor(FCellTree const& tree, GeneratorIndex a, GeneratorIndex b) {
  std::size_t const v = tree.ancestor_.at(a).at(b);
  return {v, is_marked(tree.vertex(v).kind)};
}

bool may_intersect(FCellTree const& tree, GeneratorIndex a, GeneratorIndex b) {
  return !first_common_ancestor(tree, a, b).second;
}

MonomialKiller rc_killer(FCellTree const& tree) {
  std::size_t const n = tree.leaf_count();
  auto dead = std::make_shared<std::vector<char>>(n * n, 0);
  for (GeneratorIndex a = 0; a < n; ++a)
    for (GeneratorIndex b = 0; b < n; ++b) (*dead)[a * n + b] = a == b || may_intersect(tree, a, b);
  return [dead, n](std::span<const GeneratorIndex> m) {
    for (std::size_t i = 0; i < m.size(); ++i)
      for (std::size_t j = i + 1; j < m.size(); ++j)
        if ((*dead)[m[i] * n + m[j]]) return true;
    return false;
  };
}

bool is_admissible_monomial(FCellTree const& tree, Monomial const& m) {
  for (auto g : m)
    if (g >= tree.leaf_count()) return false;
  return !rc_killer(tree)(m);
}

TruncatedSeries rc_project(TruncatedSeries const& s, FCellTree const& tree) {
  if (!same_alphabet(s.alphabet(), tree.alphabet()))
    throw InputError("series is not written in the leaf variables of the tree");
  return s.filtered(rc_killer(tree));
}

bool SubspaceBasis::contains(Monomial const& m) const {
  return std::binary_search(monomials.begin(), monomials.end(), m, LengthLex{});
}

namespace {

using MonomialSet = std::set<Monomial, LengthLex>;

// All concatenations m_1 m_2 ... with m_i drawn from parts[i].
void concatenations(std::vector<MonomialSet const*> const& parts, std::size_t i, Monomial& prefix,
                    MonomialSet& out) {
  if (i == parts.size()) {
    out.insert(prefix);
    return;
  }
  for (auto const& m : *parts[i]) {
    prefix.insert(prefix.end(), m.begin(), m.end());
    concatenations(parts, i + 1, prefix, out);
    prefix.resize(prefix.size() - m.size());
  }
}

MonomialSet basis_set(FCellTree const& tree, std::size_t v, bool all_orders) {
  auto const& vx = tree.vertex(v);
  MonomialSet out;
  if (vx.kind == VertexKind::Handle) {
    out.insert(Monomial{vx.var});
    return out;
  }
  std::vector<MonomialSet> child_sets;
  for (auto c : vx.children) child_sets.push_back(basis_set(tree, c, all_orders));
  if (!is_marked(vx.kind)) {
    for (auto const& s : child_sets) out.insert(s.begin(), s.end());
    return out;
  }
  std::vector<std::size_t> order(child_sets.size());
  std::iota(order.begin(), order.end(), 0);
  do {
    std::vector<MonomialSet const*> parts;
    for (auto i : order) parts.push_back(&child_sets[i]);
    Monomial prefix;
    concatenations(parts, 0, prefix, out);
  } while (all_orders && std::next_permutation(order.begin(), order.end()));
  return out;
}

SubspaceBasis make_basis(FCellTree const& tree, std::size_t v, BasisKind kind) {
  if (v >= tree.size()) throw InputError("vertex " + std::to_string(v) + " out of range");
  auto set = basis_set(tree, v, kind == BasisKind::Rtilde);
  return SubspaceBasis{v, kind, std::vector<Monomial>(set.begin(), set.end())};
}

}  // namespace

SubspaceBasis rtilde_basis(FCellTree const& tree, std::size_t v) { return make_basis(tree, v, BasisKind::Rtilde); }
SubspaceBasis q_basis(FCellTree const& tree, std::size_t v) { return make_basis(tree, v, BasisKind::Q); }

unsigned required_degree(FCellTree const& tree, std::size_t v) {
  auto const& vx = tree.vertex(v);
  if (vx.kind == VertexKind::Handle) return 1;
  unsigned d = 0;
  for (auto c : vx.children) {
    unsigned const dc = required_degree(tree, c);
    d = is_marked(vx.kind) ? d + dc : std::max(d, dc);
  }
  return d;
}

bool is_subsequence(Monomial const& small, Monomial const& big) {
  std::size_t i = 0;
  for (std::size_t j = 0; j < big.size() && i < small.size(); ++j)
    if (big[j] == small[i]) ++i;
  return i == small.size();
}

Membership s_membership(TruncatedSeries const& s, FCellTree const& tree, std::size_t v) {
  auto const projected = rc_project(s, tree);
  auto const basis = rtilde_basis(tree, v);
  if (projected.coefficient({}) != 1)
    return Membership{false, Monomial{}, "constant term is " + projected.coefficient({}).get_str() + ", not 1"};
  for (auto const& [m, c] : projected.terms()) {
    if (m.empty() || basis.contains(m)) continue;
    bool higher = false;
    for (auto const& b : basis.monomials)
      if (b.size() < m.size() && is_subsequence(b, m)) {
        higher = true;
        break;
      }
    if (!higher) return Membership{false, m, "term is neither a basis monomial nor of higher order"};
  }
  return Membership{true, std::nullopt, ""};
}

TruncatedSeries p1(TruncatedSeries const& s, FCellTree const& tree, std::size_t v) {
  auto const m = s_membership(s, tree, v);
  if (!m.member) throw ContractError("p1 applied to a series outside S: " + m.reason);
  auto const basis = rtilde_basis(tree, v);
  TruncatedSeries out(s.alphabet(), s.degree_bound());
  for (auto const& [mono, c] : s.terms())
    if (mono.empty() || basis.contains(mono)) out.add(mono, c);
  return out;
}

TruncatedSeries p2(TruncatedSeries const& s, FCellTree const& tree, std::size_t v) {
  auto const basis = q_basis(tree, v);
  TruncatedSeries out(s.alphabet(), s.degree_bound());
  for (auto const& [mono, c] : s.terms())
    if (mono.empty() || basis.contains(mono)) out.add(mono, c);
  return out;
}

}  // namespace fcell
