#include <doctest.h>

#include "fcell/error.hpp"
#include "fcell/magnus.hpp"
#include "oracle.hpp"

using namespace fcell;

namespace {

// Every monomial of degree 1..q over n variables.
std::vector<Monomial> all_monomials(std::size_t n, unsigned q) {
  std::vector<Monomial> out, layer{{}};
  for (unsigned d = 1; d <= q; ++d) {
    std::vector<Monomial> next;
    for (auto const& m : layer)
      for (GeneratorIndex g = 0; g < n; ++g) {
        auto e = m;
        e.push_back(g);
        next.push_back(e);
      }
    out.insert(out.end(), next.begin(), next.end());
    layer = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("series arithmetic") {
  auto a = numbered_alphabet("x", 2);
  auto x1 = TruncatedSeries::term(a, 2, {0});
  auto one = TruncatedSeries::one(a, 2);
  auto inv = one - x1 + TruncatedSeries::term(a, 2, {0, 0});
  CHECK(((one + x1) * inv).is_one());
  auto x2 = TruncatedSeries::term(a, 2, {1});
  CHECK((x1 * x2).coefficient({0, 1}) == 1);
  CHECK((x1 * x2).coefficient({1, 0}) == 0);
  CHECK(x1 * one == x1);
  CHECK(one.coefficient({}) == 1);
  CHECK((x1 - x1).is_zero());
  CHECK((x1 - x1).to_string() == "0");
  CHECK_THROWS_AS(x1 * TruncatedSeries::term(a, 3, {0}), InputError);
  CHECK_THROWS_AS(TruncatedSeries(a, 0), InputError);
}

TEST_CASE("magnus expansion examples") {
  auto a = numbered_alphabet("m", 2);
  CHECK(magnus_expand(Word(a), 3).is_one());
  auto c = magnus_expand(Word::parse(a, "m1^-1 m2^-1 m1 m2"), 2);
  CHECK(c.to_string() == "1 + 1 * m1.m2 + -1 * m2.m1");
  CHECK(magnus_expand(Word::parse(a, "m2"), 2).coefficient({1}) == 1);
  CHECK(magnus_expand(Word::parse(a, "m1^-1 m2^-1 m1 m2"), 4).coefficient({1, 0}) == -1);
  auto inv = magnus_expand(Word::parse(a, "m1^-1"), 4);
  CHECK(inv.coefficient({0, 0, 0}) == -1);
  CHECK(inv.coefficient({0, 0, 0, 0}) == 1);
  CHECK(default_degree(*a) == 3);
}

TEST_CASE("property: expansion agrees with the brute force oracle") {
  oracle::Rng rng(21);
  for (int i = 0; i < 120; ++i) {
    std::size_t const n = 1 + rng.below(3);
    auto a = numbered_alphabet("m", n);
    unsigned const q = 1 + static_cast<unsigned>(rng.below(4));
    Word const u = rng.word(a, 8);
    auto const s = magnus_expand(u, q);
    for (auto const& m : all_monomials(n, q)) CHECK(s.coefficient(m) == oracle::magnus_coefficient(u, m));
  }
}

TEST_CASE("property: homomorphism, inverse and killer compatibility") {
  oracle::Rng rng(22);
  for (int i = 0; i < 300; ++i) {
    auto a = numbered_alphabet("m", 1 + rng.below(4));
    unsigned const q = 1 + static_cast<unsigned>(rng.below(6));
    Word const u = rng.word(a, 12), v = rng.word(a, 12);
    auto const mu = magnus_expand(u, q), mv = magnus_expand(v, q);
    CHECK(magnus_expand(u * v, q) == mu * mv);
    CHECK((mu * magnus_expand(inverse(u), q)).is_one());
    auto const killed = magnus_expand(u * v, q, has_repeated_variable);
    CHECK(killed == (mu * mv).filtered(has_repeated_variable));
    CHECK(killed == series_mul(mu.filtered(has_repeated_variable), mv.filtered(has_repeated_variable),
                               has_repeated_variable));
  }
}

TEST_CASE("terms print in length-lex order") {
  auto a = numbered_alphabet("x", 2);
  TruncatedSeries s(a, 3);
  s.add({1, 0}, 2);
  s.add({0}, -1);
  s.add({0, 1}, 5);
  s.add({1, 1, 1, 1}, 7);  // above the bound
  CHECK(s.to_string() == "-1 * x1 + 5 * x1.x2 + 2 * x2.x1");
}
