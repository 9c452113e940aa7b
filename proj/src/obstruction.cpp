#include "fcell/obstruction.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <tuple>

#include "fcell/error.hpp"

namespace fcell {

using PhiTable = std::map<Monomial, Integer, LengthLex>;

Integer PhiFunctional::value(Monomial const& m) const {
  auto it = table.find(m);
  if (it == table.end()) throw InputError("monomial is not in the Q basis");
  return it->second;
}

Integer PhiFunctional::apply(TruncatedSeries const& s) const {
  Integer total = 0;
  for (auto const& [m, c] : s.terms()) {
    auto it = table.find(m);
    if (it != table.end()) total += c * it->second;
  }
  return total;
}

namespace {

PhiTable phi_table(FCellTree const& tree, std::size_t v) {
  auto const& vx = tree.vertex(v);
  PhiTable out;
  if (vx.kind == VertexKind::Handle) {
    out.emplace(Monomial{vx.var}, 1);
    return out;
  }
  std::vector<PhiTable> parts;
  for (auto c : vx.children) parts.push_back(phi_table(tree, c));

  if (is_marked(vx.kind)) {
    out.emplace(Monomial{}, 1);
    for (auto const& part : parts) {
      PhiTable next;
      for (auto const& [a, va] : out)
        for (auto const& [b, vb] : part) {
          Monomial m = a;
          m.insert(m.end(), b.begin(), b.end());
          next.emplace(std::move(m), va * vb);
        }
      out = std::move(next);
    }
    return out;
  }
  // unmarked: the value on a monomial of child i is weighted by the wedge
  // coefficients of all the other children
  for (std::size_t i = 0; i < parts.size(); ++i) {
    Integer others = 1;
    for (std::size_t l = 0; l < parts.size(); ++l)
      if (l != i) others *= tree.vertex(vx.children[l]).weight;
    for (auto const& [m, val] : parts[i]) out.emplace(m, others * val);
  }
  return out;
}

}  // namespace

PhiFunctional phi_functional(FCellTree const& tree) {
  return PhiFunctional{tree.alphabet(), phi_table(tree, tree.root())};
}

PhiFunctional collection_phi(std::vector<FCellTree> const& trees) {
  return phi_functional(FCellTree::join(trees));
}

Word vertex_word(FCellTree const& tree, std::size_t v) {
  auto const& vx = tree.vertex(v);
  switch (vx.kind) {
    case VertexKind::Handle:
      return Word::generator(tree.alphabet(), vx.var);
    case VertexKind::Root:
    case VertexKind::Surface:
      return vertex_word(tree, vx.children.at(0));
    case VertexKind::Join:
      throw InputError("a joined collection has no single meridian word");
    case VertexKind::Link: break;
  }
  auto const& link = *vx.link;
  std::size_t const n = link.components();
  std::vector<Word> images(n + 1, Word(tree.alphabet()));
  for (std::size_t k = 0; k < n; ++k) images[link.preferred_order[k]] = vertex_word(tree, vx.children[k]);
  return substitute(link.wedge_word, images, tree.alphabet());
}

namespace {

void require_tree_alphabet(FCellTree const& tree, Word const& w) {
  if (!same_alphabet(w.alphabet(), tree.alphabet()))
    throw InputError("word is not written in the handle meridians of the tree");
}

unsigned check_degree(FCellTree const& tree, unsigned q) {
  unsigned const need = required_degree(tree, tree.root());
  if (q < need) throw InputError("degree " + std::to_string(q) + " is below the " + std::to_string(need) +
                                 " needed by this tree");
  return q;
}

}  // namespace

Word bottom_meridian_word(FCellTree const& tree) {
  Word w = vertex_word(tree, tree.root());
  unsigned const q = required_degree(tree, tree.root());
  auto s = magnus_expand(w, q, rc_killer(tree));
  auto m = s_membership(s, tree, tree.root());
  if (!m.member) throw ContractError("bottom meridian word leaves S: " + m.reason);
  if (phi_functional(tree).apply(p2(p1(s, tree, tree.root()), tree, tree.root())) == 0)
    throw ContractError("bottom meridian word has vanishing Phi");
  return w;
}

Integer phi_of_word(FCellTree const& tree, Word const& w, unsigned q) {
  require_tree_alphabet(tree, w);
  check_degree(tree, q);
  auto s = magnus_expand(w, q, rc_killer(tree));
  auto m = s_membership(s, tree, tree.root());
  if (!m.member) {
    std::string where;
    if (m.offending) where = " (term " + monomial_to_string(*m.offending, *tree.alphabet()) + ")";
    throw RefusalError("expansion is not in S" + where + ": " + m.reason);
  }
  auto const root = tree.root();
  return phi_functional(tree).apply(p2(p1(s, tree, root), tree, root));
}

Integer phi_of_word_coordinates(FCellTree const& tree, Word const& w, unsigned q) {
  require_tree_alphabet(tree, w);
  check_degree(tree, q);
  return phi_functional(tree).apply(magnus_expand(w, q, rc_killer(tree)));
}

std::string family_name(RelatorFamily f) {
  switch (f) {
    case RelatorFamily::R1: return "R1";
    case RelatorFamily::R2: return "R2";
    case RelatorFamily::R4: return "R4";
  }
  return "?";
}

std::uint64_t WordSampler::below(std::uint64_t bound) {
  if (bound == 0) throw InputError("empty range");
  // rejection keeps the draw exactly uniform
  std::uint64_t const limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

Word WordSampler::word(AlphabetPtr const& alphabet, unsigned max_length) {
  std::size_t const n = alphabet->size();
  std::size_t const length = below(max_length + 1);
  std::vector<Letter> letters;
  for (std::size_t i = 0; i < length; ++i)
    letters.push_back(Letter{static_cast<GeneratorIndex>(below(n)), static_cast<std::int8_t>(below(2) ? 1 : -1)});
  return Word::reduce(alphabet, letters);
}

std::vector<RelatorSample> relator_samples(FCellTree const& tree, std::size_t count, std::uint64_t seed,
                                           unsigned max_conjugator) {
  auto const& alphabet = tree.alphabet();
  std::size_t const n = tree.leaf_count();
  std::vector<std::pair<GeneratorIndex, GeneratorIndex>> mixed;
  for (GeneratorIndex a = 0; a < n; ++a)
    for (GeneratorIndex b = 0; b < n; ++b)
      if (a != b && may_intersect(tree, a, b)) mixed.emplace_back(a, b);
  std::vector<std::pair<std::size_t, std::vector<std::size_t>>> surfaces;
  for (std::size_t v = 0; v < tree.size(); ++v) {
    if (tree.vertex(v).kind != VertexKind::Surface) continue;
    std::vector<std::size_t> links;
    for (auto c : tree.vertex(v).children)
      if (tree.vertex(c).kind == VertexKind::Link) links.push_back(c);
    if (links.size() >= 2) surfaces.emplace_back(v, std::move(links));
  }
  std::vector<RelatorFamily> families{RelatorFamily::R1};
  if (!mixed.empty()) families.push_back(RelatorFamily::R2);
  if (!surfaces.empty()) families.push_back(RelatorFamily::R4);

  WordSampler rng(seed);
  auto meridian = [&](GeneratorIndex g) { return Word::generator(alphabet, g); };
  std::vector<RelatorSample> out;
  for (std::size_t i = 0; i < count; ++i) {
    RelatorFamily const family = families[i % families.size()];
    RelatorSample s{family, Word(alphabet)};
    if (family == RelatorFamily::R1) {
      s.a = s.b = static_cast<GeneratorIndex>(rng.below(n));
      auto m = meridian(s.a);
      auto f = rng.word(alphabet, max_conjugator);
      auto g = rng.word(alphabet, max_conjugator);
      s.word = commutator(conjugate(m, f), conjugate(m, g));
    } else if (family == RelatorFamily::R2) {
      std::tie(s.a, s.b) = mixed[rng.below(mixed.size())];
      auto f = rng.word(alphabet, max_conjugator);
      auto g = rng.word(alphabet, max_conjugator);
      s.word = commutator(conjugate(meridian(s.a), f), conjugate(meridian(s.b), g));
    } else {
      auto const& [surface, links] = surfaces[rng.below(surfaces.size())];
      std::size_t const a = rng.below(links.size());
      std::size_t b = rng.below(links.size() - 1);
      if (b >= a) ++b;
      s.word = vertex_word(tree, links[a]) * inverse(vertex_word(tree, links[b]));
      s.surface = surface;
      s.inner_stage = tree.vertex(surface).parent != tree.root();
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string verdict_name(Verdict v) { return v == Verdict::Obstructed ? "Obstructed" : "Inconclusive"; }

namespace {

// Subsets of {0..n-1} of size k in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t const k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

PhiCertificate obstruct_bounding(LinkPresentation const& link, std::vector<FCellTree> const& trees, unsigned q,
                                 std::vector<std::size_t> const& index) {
  std::size_t const n = link.components();
  if (trees.size() != n)
    throw InputError("need one tree per component: " + std::to_string(n) + " components, " +
                     std::to_string(trees.size()) + " trees");
  if (q < n + 1) throw InputError("obstruct needs q >= " + std::to_string(n + 1));

  PhiCertificate cert{link, {}, make_residue(0, 0), 0, Verdict::Inconclusive, "", ""};
  std::vector<std::size_t> keep;   // components of the sublink, increasing
  std::vector<std::size_t> order;  // index in sublink numbering, longitude last

  if (index.empty()) {
    if (is_homotopically_trivial(link, q).trivial) {
      cert.note = "every non-repeating mu-bar vanishes";
      return cert;
    }
    for (std::size_t k = 2; k <= n && order.empty(); ++k) {
      std::vector<std::size_t> c(k);
      std::iota(c.begin(), c.end(), 0);
      do {
        auto report = is_homotopically_trivial(sublink(link, c), q);
        if (!report.trivial) {
          keep = c;
          order = report.witness->full();
          break;
        }
      } while (next_combination(c, n));
    }
    if (order.size() != keep.size()) throw ContractError("minimal essential sublink without a full-length witness");
  } else {
    std::vector<std::size_t> sorted = index;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
      if (sorted[i] != i || sorted.size() != n)
        throw InputError("index must list every component exactly once");
    keep = sorted;
    order = index;
  }

  LinkPresentation const sub = sublink(link, keep);
  std::size_t const k = keep.size();
  Monomial prefix(order.begin(), order.end() - 1);
  for (auto i : order) cert.sublink.push_back(keep[i]);
  cert.mu_link = mu_bar(sub, prefix, order.back(), q);
  if (cert.mu_link.modulus != 0)
    throw RefusalError("mu-bar(" + format_index(cert.sublink) + ") = " + cert.mu_link.to_string() +
                       " is only defined modulo a nonzero indeterminacy");

  std::vector<FCellTree> ordered;
  for (auto i : cert.sublink) ordered.push_back(trees[i]);
  FCellTree const joint = FCellTree::join(ordered);
  std::size_t const join_vertex = joint.vertex(joint.root()).children[0];
  std::vector<Word> images(k, Word(joint.alphabet()));
  for (std::size_t i = 0; i < k; ++i)
    images[order[i]] = vertex_word(joint, joint.vertex(join_vertex).children[i]);

  // the Milnor relation [m_j, l_j] of the last component, pushed into the cells
  std::size_t const j = order.back();
  Word const relation = commutator(sub.meridian(j), sub.longitude(j));
  Word const image = substitute(relation, images, joint.alphabet());
  unsigned const degree = required_degree(joint, joint.root());
  auto const s = magnus_expand(image, degree, rc_killer(joint));
  auto const phi = phi_functional(joint);
  cert.phi_value = phi.apply(s);
  for (auto const& [m, c] : s.terms())
    if (phi.table.count(m) && c != 0) {
      cert.witness_monomial = monomial_to_string(m, *joint.alphabet());
      break;
    }
  if (!cert.mu_link.is_zero() && cert.phi_value != 0) cert.verdict = Verdict::Obstructed;
  return cert;
}

}  // namespace fcell
