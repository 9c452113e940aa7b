#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fcell/magnus.hpp"
#include "fcell/solid_torus.hpp"

namespace fcell {

// Root and Surface are unmarked. Link and Join are marked; a Join groups the
// cells of a collection, which are pairwise disjoint, and carries no link.
enum class VertexKind { Root, Surface, Link, Handle, Join };

std::string kind_name(VertexKind kind);
bool is_marked(VertexKind kind);

/// Unvalidated description of a cell, as read from a file. The top node is the
/// bottom surface stage.
struct CellNode {
  VertexKind kind = VertexKind::Surface;
  std::vector<CellNode> children;
  std::shared_ptr<const SolidTorusLink> link;  // Link only
  std::string var;                             // Handle only

  static CellNode handle(std::string var);
  static CellNode surface(std::vector<CellNode> children);
  static CellNode marked(SolidTorusLink link, std::vector<CellNode> children);

  bool operator==(CellNode const& other) const;
};

class FCellTree {
 public:
  struct Vertex {
    VertexKind kind;
    std::optional<std::size_t> parent;
    std::vector<std::size_t> children;
    std::shared_ptr<const SolidTorusLink> link;
    Integer weight = 1;   // wedge coefficient of a Link, 1 otherwise
    GeneratorIndex var = 0;  // Handle only
    unsigned marked_depth = 0;  // Link vertices on the path from the root, inclusive
  };

  /// Validates arity, admissibility of every link, and distinct leaf names.
  /// Throws InputError.
  explicit FCellTree(CellNode const& bottom);

  /// One tree for a disjoint collection of cells. Leaves are renamed x1..xN
  /// in the order of the list.
  static FCellTree join(std::vector<FCellTree> const& cells);

  std::size_t root() const { return 0; }
  std::vector<Vertex> const& vertices() const { return vertices_; }
  Vertex const& vertex(std::size_t v) const { return vertices_.at(v); }
  std::size_t size() const { return vertices_.size(); }

  /// One variable per leaf, in depth-first order.
  AlphabetPtr const& alphabet() const { return alphabet_; }
  std::size_t leaf_count() const { return leaf_vertex_.size(); }
  std::size_t leaf_vertex(GeneratorIndex var) const { return leaf_vertex_.at(var); }
  std::vector<GeneratorIndex> leaves_below(std::size_t v) const;

  /// Inverse of the constructor; not available for joined trees.
  CellNode bottom() const;

  bool operator==(FCellTree const& other) const { return bottom() == other.bottom(); }

 private:
  FCellTree() = default;
  std::size_t add(CellNode const& node, std::optional<std::size_t> parent, std::vector<std::string>& names);
  void finish(std::vector<std::string> names);
  CellNode node_at(std::size_t v) const;

  std::vector<Vertex> vertices_;
  std::vector<std::size_t> leaf_vertex_;
  AlphabetPtr alphabet_;
  std::vector<std::vector<std::size_t>> ancestor_;  // [a][b] first common ancestor of leaves
  friend std::pair<std::size_t, bool> first_common_ancestor(FCellTree const&, GeneratorIndex, GeneratorIndex);
};

/// Maximum number of Link vertices on a root-leaf path.
unsigned height(FCellTree const& tree);
/// Pads short branches with (surface, core) stages until every leaf sees the
/// same number of links.
FCellTree uniformize(FCellTree const& tree);

/// Vertex and whether it is marked.
std::pair<std::size_t, bool> first_common_ancestor(FCellTree const& tree, GeneratorIndex a, GeneratorIndex b);
bool may_intersect(FCellTree const& tree, GeneratorIndex a, GeneratorIndex b);

/// Kills repeated variables and pairs of variables whose cells may intersect.
MonomialKiller rc_killer(FCellTree const& tree);
bool is_admissible_monomial(FCellTree const& tree, Monomial const& m);
TruncatedSeries rc_project(TruncatedSeries const& s, FCellTree const& tree);

enum class BasisKind { Rtilde, Q };

struct SubspaceBasis {
  std::size_t vertex = 0;
  BasisKind kind = BasisKind::Q;
  std::vector<Monomial> monomials;  // length-lex

  bool contains(Monomial const& m) const;
};

SubspaceBasis rtilde_basis(FCellTree const& tree, std::size_t v);
SubspaceBasis q_basis(FCellTree const& tree, std::size_t v);

/// Degree needed to see every basis monomial of v.
unsigned required_degree(FCellTree const& tree, std::size_t v);

struct Membership {
  bool member = false;
  std::optional<Monomial> offending;  // first failing term, length-lex
  std::string reason;
};

/// Tests whether rc_project(s) is 1 + (basis terms) + (higher order terms),
/// where a higher order term contains a basis monomial as a proper scattered
/// subsequence.
Membership s_membership(TruncatedSeries const& s, FCellTree const& tree, std::size_t v);

/// Keeps 1 and the R~ basis terms. Non-members raise ContractError.
TruncatedSeries p1(TruncatedSeries const& s, FCellTree const& tree, std::size_t v);
/// Keeps 1 and the Q basis terms.
TruncatedSeries p2(TruncatedSeries const& s, FCellTree const& tree, std::size_t v);

bool is_subsequence(Monomial const& small, Monomial const& big);

}  // namespace fcell
