#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "tamari/cache.hpp"
#include "tamari/io.hpp"

using namespace tamari;

TEST_CASE("monomial keys are canonical") {
  CHECK(mono_key(Mono{}) == "1");
  Mono m;
  m.e[static_cast<int>(Var::x)] = 2;
  m.e[static_cast<int>(Var::y)] = 1;
  CHECK(mono_key(m) == "x^2*y");
  Mono l;
  l.e[static_cast<int>(Var::u)] = -1;
  CHECK(mono_key(l) == "u^-1");
}

TEST_CASE("polynomials round trip through json") {
  Poly p = Poly::term(Rat(3, 2), Var::x, 2) + Poly::variable(Var::y) -
           Poly::term(Rat(7), Var::u, -1);
  Json j = poly_to_json(p);
  CHECK(poly_from_json(j) == p);
  CHECK(j["x^2"] == "3/2");
  CHECK(j["u^-1"] == "-7");
}

TEST_CASE("paths and labellings round trip through json") {
  PathWord p = PathWord::ballot("NEENEE", 2);
  Json j = path_to_json(p);
  CHECK(j["m"] == 2);
  CHECK(j["n"] == 2);
  CHECK(j["form"] == "ballot");
  CHECK(path_from_json(j) == p);
  Labelling l{p, {1, 2}};
  CHECK(labelling_from_json(labelling_to_json(l)).labels == l.labels);
}

TEST_CASE("series dumps carry the variable and order") {
  TSeries F(2);
  F[0] = Poly::variable(Var::x);
  Json j = tseries_to_json(F);
  CHECK(j["var"] == "t");
  CHECK(j["order"] == 2);
  CHECK(j["coeffs"].size() == 3);
}

TEST_CASE("dot export parses back") {
  TamariPoset t = TamariPoset::build(1, 3);
  std::string dot = hasse_to_dot(t);
  DotGraph g;
  REQUIRE(parse_dot(dot, &g));
  CHECK(static_cast<int>(g.labels.size()) == t.size());
  std::size_t edges = 0;
  for (const auto& adj : t.hasse()) edges += adj.size();
  CHECK(g.edges.size() == edges);
  for (int i = 0; i < t.size(); ++i)
    CHECK(g.labels[static_cast<std::size_t>(i)] == t.vertex(i).to_string());
}

TEST_CASE("cache store and load") {
  std::filesystem::path dir =
      std::filesystem::temp_directory_path() / "tamari_cache_test";
  std::filesystem::remove_all(dir);
  CHECK_FALSE(cache_load(dir, "k1").payload.has_value());
  cache_store(dir, "k1", "{\"hello\": 1}");
  CacheLookup hit = cache_load(dir, "k1");
  REQUIRE(hit.payload.has_value());
  CHECK(*hit.payload == "{\"hello\": 1}");
  CHECK_FALSE(hit.corrupt);
  // Corrupt file is flagged, not served.
  {
    std::ofstream out(dir / "k2.json");
    out << "{not json";
  }
  CacheLookup bad = cache_load(dir, "k2");
  CHECK_FALSE(bad.payload.has_value());
  CHECK(bad.corrupt);
  // A stale code version is silently ignored.
  {
    std::ofstream out(dir / "k3.json");
    out << "{\"schema\":\"1\",\"code\":\"0\",\"key\":\"k3\",\"payload\":\"x\"}";
  }
  CacheLookup stale = cache_load(dir, "k3");
  CHECK_FALSE(stale.payload.has_value());
  CHECK_FALSE(stale.corrupt);
  std::filesystem::remove_all(dir);
}
