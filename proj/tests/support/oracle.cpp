#include "oracle.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

namespace {

// Ways to read m[k..] from letters[i..]. A positive letter contributes its
// variable at most once; a negative one r times with sign (-1)^r.
Integer count(std::vector<fcell::Letter> const& letters, Monomial const& m, std::size_t i, std::size_t k) {
  if (k == m.size()) return 1;
  if (i == letters.size()) return 0;
  Integer total = count(letters, m, i + 1, k);
  auto const l = letters[i];
  if (l.exp > 0) {
    if (m[k] == l.gen) total += count(letters, m, i + 1, k + 1);
  } else {
    int sign = -1;
    for (std::size_t r = 1; k + r <= m.size() && m[k + r - 1] == l.gen; ++r, sign = -sign)
      total += sign * count(letters, m, i + 1, k + r);
  }
  return total;
}

}  // namespace

Integer magnus_coefficient(fcell::Word const& w, Monomial const& m) { return count(w.letters(), m, 0, 0); }

Integer mu(fcell::LinkPresentation const& link, std::vector<std::size_t> const& full) {
  Monomial prefix;
  for (std::size_t i = 0; i + 1 < full.size(); ++i) prefix.push_back(static_cast<fcell::GeneratorIndex>(full[i]));
  return magnus_coefficient(link.longitude(full.back()), prefix);
}

Integer indeterminacy(fcell::LinkPresentation const& link, std::vector<std::size_t> const& full) {
  Integer g = 0;
  std::size_t const k = full.size();
  for (unsigned mask = 1; mask + 1 < (1u << k); ++mask) {
    std::vector<std::size_t> sub;
    for (std::size_t i = 0; i < k; ++i)
      if (mask & (1u << i)) sub.push_back(full[i]);
    if (sub.size() < 2) continue;
    for (std::size_t r = 0; r < sub.size(); ++r) {
      std::rotate(sub.begin(), sub.begin() + 1, sub.end());
      Integer v = mu(link, sub);
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  }
  return g;
}

std::size_t q_dimension(fcell::CellNode const& node) {
  switch (node.kind) {
    case fcell::VertexKind::Handle: return 1;
    case fcell::VertexKind::Link: {
      std::size_t p = 1;
      for (auto const& c : node.children) p *= q_dimension(c);
      return p;
    }
    default: {
      std::size_t s = 0;
      for (auto const& c : node.children) s += q_dimension(c);
      return s;
    }
  }
}

std::size_t leaf_count(fcell::CellNode const& node) {
  if (node.kind == fcell::VertexKind::Handle) return 1;
  std::size_t s = 0;
  for (auto const& c : node.children) s += leaf_count(c);
  return s;
}

fcell::Word Rng::word(fcell::AlphabetPtr const& a, std::size_t max_length) {
  std::size_t const len = below(max_length + 1);
  std::vector<fcell::Letter> letters;
  for (std::size_t i = 0; i < len; ++i)
    letters.push_back({static_cast<fcell::GeneratorIndex>(below(a->size())), static_cast<std::int8_t>(coin() ? 1 : -1)});
  return fcell::Word::reduce(a, letters);
}

namespace {

struct Patterns {
  std::shared_ptr<const fcell::SolidTorusLink> core, bing1, bing2;
};

Patterns const& patterns() {
  static Patterns const p{
      std::make_shared<const fcell::SolidTorusLink>(fcell::core_link()),
      std::make_shared<const fcell::SolidTorusLink>(fcell::iterated_bing(1)),
      std::make_shared<const fcell::SolidTorusLink>(fcell::iterated_bing(2)),
  };
  return p;
}

fcell::CellNode surface(Rng& rng, unsigned height_left, std::size_t& counter);

fcell::CellNode handle(std::size_t& counter) { return fcell::CellNode::handle("x" + std::to_string(++counter)); }

fcell::CellNode link(Rng& rng, unsigned height_left, std::size_t& counter) {
  fcell::CellNode n;
  n.kind = fcell::VertexKind::Link;
  switch (rng.below(4)) {
    case 0: n.link = patterns().core; break;
    case 3: n.link = patterns().bing2; break;
    default: n.link = patterns().bing1; break;
  }
  for (std::size_t i = 0; i < n.link->components(); ++i)
    n.children.push_back(height_left > 1 && rng.below(3) == 0 ? surface(rng, height_left - 1, counter)
                                                              : handle(counter));
  return n;
}

fcell::CellNode surface(Rng& rng, unsigned height_left, std::size_t& counter) {
  std::vector<fcell::CellNode> children;
  std::size_t const n = 1 + rng.below(3);
  for (std::size_t i = 0; i < n; ++i)
    children.push_back(height_left > 0 && rng.below(3) != 0 ? link(rng, height_left, counter) : handle(counter));
  return fcell::CellNode::surface(std::move(children));
}

}  // namespace

fcell::CellNode random_cell(Rng& rng, unsigned max_height, std::size_t max_leaves) {
  for (;;) {
    std::size_t counter = 0;
    auto node = surface(rng, max_height, counter);
    if (counter <= max_leaves) return node;
  }
}

fcell::SolidTorusLink clasp_pattern(int k) {
  auto z = fcell::wedge_alphabet(2);
  auto m3 = fcell::numbered_alphabet("m", 3);
  auto m4 = fcell::numbered_alphabet("m", 4);
  auto g = [](fcell::AlphabetPtr const& a, std::string const& s) { return fcell::Word::parse(a, s); };
  auto comm = [&](fcell::AlphabetPtr const& a, std::string const& x, std::string const& y) {
    return fcell::power(fcell::commutator(g(a, x), g(a, y)), k);
  };
  return fcell::SolidTorusLink{
      comm(z, "z1", "z2"),
      fcell::LinkPresentation({comm(m3, "m2", "m3"), comm(m3, "m3", "m1"), comm(m3, "m1", "m2")}),
      fcell::LinkPresentation(
          {comm(m4, "m2", "m3 m4"), comm(m4, "m3 m4", "m1"), comm(m4, "m1", "m2"), comm(m4, "m1", "m2")}),
      {0, 1},
  };
}

}  // namespace oracle
