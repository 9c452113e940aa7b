#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "fcell/error.hpp"
#include "fcell/io.hpp"

using namespace fcell;

TEST_CASE("round trips of builtins") {
  for (auto const& name : builtin_names()) {
    auto const obj = builtin(name);
    if (auto l = std::get_if<LinkPresentation>(&obj)) {
      CHECK(link_from_json(parse_json(to_json(*l).dump(), name)) == *l);
    } else if (auto s = std::get_if<SolidTorusLink>(&obj)) {
      CHECK(solid_torus_link_from_json(parse_json(to_json(*s).dump(), name)) == *s);
    } else {
      auto const& t = std::get<FCellTree>(obj);
      CHECK(tree_from_json(parse_json(to_json(t).dump(2), name)) == t);
    }
  }
}

TEST_CASE("documents are versioned") {
  auto j = to_json(hopf_link());
  CHECK(j["format"] == 1);
  CHECK(j["components"] == 2);
  j["format"] = 2;
  CHECK_THROWS_WITH_AS(link_from_json(j), doctest::Contains("/format"), InputError);
  auto const t = to_json(fig2_cell());
  CHECK(t["type"] == "cell");
  CHECK(t["kind"] == "surface");
  CHECK(t["children"][0]["link"] == "bing:1");
}

TEST_CASE("errors point at the problem") {
  CHECK_THROWS_WITH_AS(parse_json("{\n  \"format\": 1,\n  \"longitudes\": [\"m2\" \"m1\"]\n}", "hopf.json"),
                       doctest::Contains("line 3"), InputError);
  CHECK_THROWS_WITH_AS(link_from_json(parse_json(R"({"format":1,"longitudes":["m2","m3"]})", "x")),
                       doctest::Contains("/longitudes"), InputError);
  CHECK_THROWS_WITH_AS(
      tree_from_json(parse_json(R"({"format":1,"kind":"surface","children":[{"kind":"link","link":"bing:1","children":[{"kind":"handle","var":"x1"}]}]})", "x")),
      doctest::Contains("children"), InputError);
  CHECK_THROWS_WITH_AS(tree_from_json(parse_json(R"({"kind":"surface","children":[{"kind":"blob"}]})", "x")),
                       doctest::Contains("/children/0/kind"), InputError);
  CHECK_THROWS_AS(load_link("builtin:nonsense"), InputError);
  CHECK_THROWS_AS(load_link("builtin:fig1-cell"), InputError);
  CHECK_THROWS_AS(load_link("/nonexistent/file.json"), InputError);
}

TEST_CASE("loading from files and builtins") {
  CHECK(load_link("builtin:borromean") == borromean_rings());
  CHECK(load_tree("builtin:fig2-cell") == fig2_cell());
  CHECK(load_solid_torus_link("builtin:bing(2)") == iterated_bing(2));
  CHECK(std::get<LinkPresentation>(builtin("unlink(3)")) == unlink(3));
  std::string const path = "io_test_link.json";
  {
    std::ofstream out(path);
    out << to_json(borromean_rings()).dump(2);
  }
  CHECK(load_link(path) == borromean_rings());
  std::remove(path.c_str());
}

TEST_CASE("certificates") {
  PhiCertificate c{hopf_link(), {1, 0}, make_residue(1, 0), -1, Verdict::Obstructed, "x1.x2", ""};
  auto const j = to_json(c);
  CHECK(j["mu"]["value"] == 1);
  CHECK(j["mu"]["modulus"] == 0);
  CHECK(j["phi"] == -1);
  CHECK(j["verdict"] == "Obstructed");
  CHECK(j["witness_monomial"] == "x1.x2");
  CHECK(to_json(Integer("123456789012345678901234567890")) == "123456789012345678901234567890");
  CHECK(integer_from_json(Json("-42")) == -42);
}
