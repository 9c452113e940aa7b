#include <doctest.h>

#include <set>

#include "fcell/builtins.hpp"
#include "fcell/error.hpp"
#include "fcell/tree.hpp"
#include "oracle.hpp"

using namespace fcell;

namespace {

std::vector<std::string> named(FCellTree const& t, std::vector<Monomial> const& ms) {
  std::vector<std::string> out;
  for (auto const& m : ms) out.push_back(monomial_to_string(m, *t.alphabet()));
  return out;
}

Monomial mono(FCellTree const& t, std::vector<std::string> const& vars) {
  Monomial m;
  for (auto const& v : vars) m.push_back(t.alphabet()->index_of(v));
  return m;
}

}  // namespace

TEST_CASE("heights") {
  CHECK(height(handle_cell()) == 0);
  CHECK(height(fig1_cell()) == 1);
  CHECK(height(fig2_cell()) == 2);
  auto const u = uniformize(fig2_cell());
  CHECK(height(u) == 2);
  for (GeneratorIndex g = 0; g < u.leaf_count(); ++g) CHECK(u.vertex(u.leaf_vertex(g)).marked_depth == 2);
  CHECK(named(u, q_basis(u, u.root()).monomials) == named(fig2_cell(), q_basis(fig2_cell(), 0).monomials));
}

TEST_CASE("fig2 golden facts") {
  auto const t = fig2_cell();
  CHECK(t.leaf_count() == 5);
  auto const rt = named(t, rtilde_basis(t, t.root()).monomials);
  CHECK(rt == std::vector<std::string>{"x1.x2.x5", "x2.x1.x5", "x3.x4.x5", "x4.x3.x5", "x5.x1.x2", "x5.x2.x1",
                                       "x5.x3.x4", "x5.x4.x3"});
  CHECK_FALSE(rtilde_basis(t, t.root()).contains(mono(t, {"x1", "x5", "x2"})));
  CHECK(named(t, q_basis(t, t.root()).monomials) == std::vector<std::string>{"x1.x2.x5", "x3.x4.x5"});
  CHECK_FALSE(may_intersect(t, 0, 1));
  CHECK(may_intersect(t, 0, 2));
  CHECK_FALSE(may_intersect(t, 0, 4));
  auto const [v, marked] = first_common_ancestor(t, 0, 2);
  CHECK_FALSE(marked);
  CHECK(t.vertex(v).kind == VertexKind::Surface);
  CHECK(required_degree(t, t.root()) == 3);
}

TEST_CASE("fig1 and single handle bases") {
  auto const f1 = fig1_cell();
  CHECK(named(f1, q_basis(f1, f1.root()).monomials) == std::vector<std::string>{"x1.x2", "x3.x4"});
  auto const h = handle_cell();
  CHECK(named(h, rtilde_basis(h, h.root()).monomials) == std::vector<std::string>{"x1"});
  CHECK(named(h, q_basis(h, h.leaf_vertex(0)).monomials) == std::vector<std::string>{"x1"});
}

TEST_CASE("rc projection") {
  auto const t = fig2_cell();
  auto const a = t.alphabet();
  Word const m1 = Word::generator(a, 0);
  Word const r = commutator(conjugate(m1, Word::parse(a, "x2 x5")), conjugate(m1, Word::parse(a, "x3^-1")));
  CHECK(rc_project(magnus_expand(r, 4), t).is_one());
  CHECK(rc_project(TruncatedSeries::term(a, 3, mono(t, {"x1", "x3"})), t).is_zero());
  CHECK(rc_project(TruncatedSeries::term(a, 3, mono(t, {"x1", "x2", "x5"})), t).coefficient(mono(t, {"x1", "x2", "x5"})) == 1);
  CHECK_THROWS_AS(rc_project(TruncatedSeries::one(numbered_alphabet("y", 5), 3), t), InputError);
}

TEST_CASE("S membership and projections") {
  auto const t = fig2_cell();
  auto const a = t.alphabet();
  auto const one = TruncatedSeries::one(a, 4);
  auto term = [&](std::vector<std::string> const& v, int c) { return TruncatedSeries::term(a, 4, mono(t, v), c); };
  CHECK(s_membership(one + term({"x1", "x2", "x5"}, 1), t, t.root()).member);
  auto const bad = s_membership(one + term({"x1"}, 1), t, t.root());
  CHECK_FALSE(bad.member);
  CHECK(*bad.offending == mono(t, {"x1"}));
  CHECK_FALSE(s_membership(term({"x1", "x2", "x5"}, 1), t, t.root()).member);
  // a strict scattered supersequence is a higher order term
  CHECK(s_membership(one + term({"x1", "x2", "x5"}, 1) + term({"x1", "x2", "x5", "x3"}, 4), t, t.root()).member);
  // x1 x3 x2 x4 is dropped by the projection before membership is judged
  CHECK(s_membership(one + term({"x1", "x3", "x2", "x4"}, 1), t, t.root()).member);

  auto const s = one + term({"x1", "x2", "x5"}, 3) + term({"x2", "x1", "x5"}, 2);
  CHECK(p2(p1(s, t, t.root()), t, t.root()) == one + term({"x1", "x2", "x5"}, 3));
  CHECK(p1(one, t, t.root()) == one);
  CHECK_THROWS_AS(p1(one + term({"x1"}, 1), t, t.root()), ContractError);
}

TEST_CASE("product law on 1 + R~") {
  auto const t = fig2_cell();
  auto const a = t.alphabet();
  auto const basis = rtilde_basis(t, t.root()).monomials;
  oracle::Rng rng(41);
  for (int i = 0; i < 20; ++i) {
    auto x = TruncatedSeries::one(a, 3), y = TruncatedSeries::one(a, 3);
    for (auto const& m : basis) {
      x.add(m, static_cast<long>(rng.below(7)) - 3);
      y.add(m, static_cast<long>(rng.below(7)) - 3);
    }
    auto const prod = p1(rc_project(x * y, t), t, t.root());
    CHECK(prod == p1(x + y - TruncatedSeries::one(a, 3), t, t.root()));
  }
}

TEST_CASE("invalid trees are rejected") {
  auto const bing = iterated_bing(1);
  CHECK_THROWS_AS(FCellTree(CellNode::handle("x1")), InputError);
  CHECK_THROWS_AS(FCellTree(CellNode::surface({})), InputError);
  CHECK_THROWS_AS(FCellTree(CellNode::surface({CellNode::marked(bing, {CellNode::handle("x1")})})), InputError);
  CHECK_THROWS_AS(FCellTree(CellNode::surface({CellNode::handle("x1"), CellNode::handle("x1")})), InputError);
  CHECK_THROWS_AS(FCellTree(CellNode::surface({CellNode::surface({CellNode::handle("x1")})})), InputError);
  SolidTorusLink const split{Word(wedge_alphabet(2)), unlink(3), unlink(4), {0, 1}};
  CHECK_THROWS_AS(FCellTree(CellNode::surface({CellNode::marked(split, {CellNode::handle("a"), CellNode::handle("b")})})),
                  InputError);
}

TEST_CASE("joined collections") {
  auto const j = FCellTree::join({fig1_cell(), handle_cell()});
  CHECK(j.leaf_count() == 5);
  CHECK(j.alphabet()->names() == std::vector<std::string>{"x1", "x2", "x3", "x4", "x5"});
  CHECK_FALSE(may_intersect(j, 0, 4));
  CHECK(named(j, q_basis(j, j.root()).monomials) == std::vector<std::string>{"x1.x2.x5", "x3.x4.x5"});
  CHECK_THROWS_AS(j.bottom(), InputError);
}

TEST_CASE("property: random trees") {
  oracle::Rng rng(42);
  for (int i = 0; i < 60; ++i) {
    auto const node = oracle::random_cell(rng, 3, 12);
    FCellTree const t(node);
    CHECK(t.leaf_count() == oracle::leaf_count(node));
    CHECK(t.bottom() == node);
    CHECK(height(uniformize(t)) == height(t));
    CHECK(q_basis(uniformize(t), 0).monomials == q_basis(t, 0).monomials);
    for (std::size_t v = 0; v < t.size(); ++v) {
      auto const rt = rtilde_basis(t, v);
      auto const q = q_basis(t, v);
      std::size_t outside = 0, inadmissible = 0;
      for (auto const& m : q.monomials) outside += !rt.contains(m);
      for (auto const& m : rt.monomials) inadmissible += !is_admissible_monomial(t, m);
      CHECK(outside == 0);
      CHECK(inadmissible == 0);
      if (v == t.root()) {
        CHECK(q.monomials.size() == oracle::q_dimension(node));
        std::size_t comparable = 0;
        for (auto const& a : rt.monomials)
          for (auto const& b : rt.monomials)
            if (a != b && is_subsequence(a, b)) ++comparable;
        CHECK(comparable == 0);
      }
    }
  }
}

TEST_CASE("property: rc projection is multiplicative") {
  oracle::Rng rng(43);
  for (int i = 0; i < 40; ++i) {
    FCellTree const t(oracle::random_cell(rng, 2, 8));
    auto const a = t.alphabet();
    unsigned const q = 4;
    auto const x = magnus_expand(rng.word(a, 8), q), y = magnus_expand(rng.word(a, 8), q);
    CHECK(rc_project(x * y, t) == rc_project(rc_project(x, t) * rc_project(y, t), t));
  }
}
