#include <doctest.h>

#include "fcell/builtins.hpp"
#include "fcell/error.hpp"
#include "fcell/solid_torus.hpp"
#include "oracle.hpp"

using namespace fcell;

TEST_CASE("core of the solid torus") {
  auto const c = core_link();
  CHECK(c.components() == 1);
  CHECK(c.wedge_word.to_string() == "z1");
  CHECK(c.lhat == hopf_link());
  CHECK(is_admissible(c, 3).admissible);
  CHECK(wedge_mu(c) == 1);
}

TEST_CASE("bing doubles") {
  auto const b1 = bing_double(core_link());
  CHECK(b1.components() == 2);
  CHECK(b1.wedge_word.to_string() == "z1^-1 z2^-1 z1 z2");
  CHECK(is_admissible(b1, 4).admissible);
  CHECK(abs(wedge_mu(b1)) == 1);
  CHECK(b1 == iterated_bing(1));
  auto const b2 = iterated_bing(2);
  CHECK(b2.components() == 4);
  CHECK(is_admissible(b2, 6).admissible);
  CHECK(abs(wedge_mu(b2)) == 1);
  CHECK(iterated_bing(0) == core_link());
}

TEST_CASE("inadmissible links are reported") {
  SolidTorusLink const split{Word(wedge_alphabet(2)), unlink(3), unlink(4), {0, 1}};
  auto const r = is_admissible(split, 4);
  CHECK_FALSE(r.admissible);
  CHECK_FALSE(r.essential);
  CHECK(r.summary().find("(a)") != std::string::npos);
  CHECK_THROWS_AS(wedge_mu(split), ContractError);

  auto bad = core_link();
  bad.preferred_order = {1};
  CHECK_THROWS_AS(bad.check_shape(), InputError);
  auto short_plus = iterated_bing(1);
  short_plus.lplus = unlink(3);
  CHECK_THROWS_AS(is_admissible(short_plus, 4), InputError);
}

TEST_CASE("wedge words of admissible links have no partial y terms") {
  for (unsigned d = 0; d <= 2; ++d) {
    auto const l = iterated_bing(d);
    std::size_t const n = l.components();
    auto const s = magnus_expand(l.wedge_word, static_cast<unsigned>(n) + 1, has_repeated_variable);
    for (auto const& [m, c] : s.terms()) {
      bool has_y = false;
      std::size_t zs = 0;
      for (auto g : m) {
        if (g == n)
          has_y = true;
        else
          ++zs;
      }
      if (has_y) CHECK((zs == 0 || zs == n));
    }
  }
}

TEST_CASE("composition") {
  auto const h = hopf_link();
  CHECK(compose(h, core_link()) == h);
  auto const b = borromean_rings();
  CHECK(compose(b, core_link()) == b);
  auto const hb = compose(h, iterated_bing(1));
  CHECK(hb.components() == 3);
  CHECK(hb == borromean_rings());
  CHECK_FALSE(is_homotopically_trivial(hb, 4).trivial);
  auto const ub = compose(unlink(2), iterated_bing(1));
  CHECK(is_homotopically_trivial(ub, 4).trivial);
  auto const bb = compose(b, iterated_bing(1));
  CHECK(bb.components() == 4);
  CHECK_FALSE(is_homotopically_trivial(bb, 5).trivial);
  CHECK(is_almost_trivial(bb, 5));
}

TEST_CASE("clasp patterns have the expected wedge coefficient") {
  for (int k : {1, 2, 3, -2}) {
    auto const c = oracle::clasp_pattern(k);
    CHECK(is_admissible(c, 4).admissible);
    CHECK(wedge_mu(c) == k);
    CHECK(wedge_mu(c) == oracle::magnus_coefficient(c.wedge_word, {0, 1}));
  }
}
