#include <doctest.h>

#include <random>
#include <string>

#include <json.hpp>

#include "ccg/error.hpp"
#include "ccg/graph_props.hpp"

using namespace ccg;

namespace {

SimpleGraph make(std::size_t n, std::initializer_list<std::pair<std::size_t, std::size_t>> es) {
  SimpleGraph g(n);
  for (auto [u, v] : es) g.add_edge(u, v);
  return g;
}

SimpleGraph path(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

SimpleGraph cycle(std::size_t n) {
  SimpleGraph g = path(n);
  g.add_edge(n - 1, 0);
  return g;
}

SimpleGraph complete(std::size_t n) {
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  SimpleGraph g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  return g;
}

struct Verdicts {
  bool cograph, chordal, split, threshold, claw;
};

Verdicts verdicts(const SimpleGraph& g) {
  return {is_cograph(g), is_chordal(g), is_split(g), is_threshold(g), is_claw_free(g)};
}

}  // namespace

TEST_CASE("small named graphs") {
  const auto p4 = path(4);
  CHECK_FALSE(is_cograph(p4));
  CHECK(is_chordal(p4));
  CHECK(is_split(p4));
  CHECK_FALSE(is_threshold(p4));
  CHECK(is_claw_free(p4));

  const auto c4 = cycle(4);
  CHECK(is_cograph(c4));
  CHECK_FALSE(is_chordal(c4));
  CHECK_FALSE(is_split(c4));
  CHECK_FALSE(is_threshold(c4));

  const auto c5 = cycle(5);
  CHECK_FALSE(is_cograph(c5));
  CHECK_FALSE(is_chordal(c5));
  CHECK_FALSE(is_split(c5));

  const auto two_k2 = make(4, {{0, 1}, {2, 3}});
  CHECK(is_cograph(two_k2));
  CHECK(is_chordal(two_k2));
  CHECK_FALSE(is_split(two_k2));
  CHECK_FALSE(is_threshold(two_k2));

  const auto claw = make(4, {{0, 1}, {0, 2}, {0, 3}});
  CHECK(is_threshold(claw));
  CHECK_FALSE(is_claw_free(claw));

  // paw: triangle plus a pendant
  const auto paw = make(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  CHECK(is_threshold(paw));
  CHECK(is_claw_free(paw));

  for (std::size_t n = 0; n <= 6; ++n) {
    const auto k = complete(n);
    CHECK(is_threshold(k));
    CHECK(is_chordal(k));
    CHECK(is_claw_free(k));
    const auto e = SimpleGraph(n);
    CHECK(is_threshold(e));
    CHECK(is_claw_free(e));
  }
}

TEST_CASE("witnesses are least and replay") {
  const auto p4 = path(4);
  const auto w = find_induced(p4, PatternKind::P4);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<std::size_t>{0, 1, 2, 3});
  CHECK(replay(p4, *w));
  CHECK_FALSE(find_induced(p4, PatternKind::C4));

  const auto c6 = cycle(6);
  CHECK_FALSE(find_induced(c6, PatternKind::C4));
  CHECK_FALSE(find_induced(c6, PatternKind::C5));
  const auto cn = find_induced(c6, PatternKind::Cn);
  REQUIRE(cn);
  CHECK(cn->vertices.size() == 6);
  CHECK(replay(c6, *cn));

  const auto claw = make(5, {{1, 0}, {1, 2}, {1, 4}});
  const auto cw = find_induced(claw, PatternKind::Claw);
  REQUIRE(cw);
  CHECK(cw->vertices.front() == 1);
  CHECK(replay(claw, *cw));

  const auto two_k2 = make(4, {{0, 1}, {2, 3}});
  CHECK_FALSE(replay(two_k2, Witness{PatternKind::P4, {0, 1, 2, 3}}));
  CHECK(replay(two_k2, Witness{PatternKind::TwoK2, {0, 1, 2, 3}}));
  CHECK_FALSE(replay(two_k2, Witness{PatternKind::TwoK2, {0, 2, 1, 3}}));
}

TEST_CASE("random graphs: both methods agree and witnesses replay") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::size_t> size(1, 12);
  std::uniform_real_distribution<double> density(0.1, 0.9);
  for (int t = 0; t < 500; ++t) {
    const auto g = random_graph(rng, size(rng), density(rng));
    const bool cograph = is_cograph(g);
    const bool chordal = is_chordal(g);
    const bool split = is_split(g);
    REQUIRE(cograph == is_cograph_by_cotree(g));
    REQUIRE(chordal == is_chordal_by_peo(g));
    REQUIRE(chordal == is_chordal_by_cycles(g));
    REQUIRE(split == is_split_by_degrees(g));
    REQUIRE(is_threshold(g) == (cograph && split));
    REQUIRE(is_claw_free(g) == !find_induced(g, PatternKind::Claw));

    for (auto k : {PatternKind::P4, PatternKind::C4, PatternKind::C5, PatternKind::Cn, PatternKind::TwoK2,
                   PatternKind::Claw}) {
      if (auto w = find_induced(g, k)) REQUIRE(replay(g, *w));
    }

    // complement closure
    const auto c = g.complement();
    REQUIRE(is_cograph(c) == cograph);
    REQUIRE(is_split(c) == split);
    REQUIRE(is_threshold(c) == is_threshold(g));
  }
}

TEST_CASE("hereditary: induced subgraphs keep every property") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const auto g = random_graph(rng, 9, 0.5);
    const auto v = verdicts(g);
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < g.size(); ++i)
      if (rng() & 1) keep.push_back(i);
    const auto s = verdicts(g.induced(keep));
    if (v.cograph) CHECK(s.cograph);
    if (v.chordal) CHECK(s.chordal);
    if (v.split) CHECK(s.split);
    if (v.threshold) CHECK(s.threshold);
    if (v.claw) CHECK(s.claw);
  }
}

TEST_CASE("shape expressions") {
  CHECK(ShapeExpr::parse("K4 + K2 + 2K1").sizes == std::vector<std::size_t>{4, 2, 1, 1});
  CHECK(ShapeExpr::parse("2K1+K3").to_string() == "K3 + 2K1");
  CHECK(ShapeExpr::parse("").sizes.empty());
  CHECK(ShapeExpr::parse("0").sizes.empty());
  CHECK_THROWS_AS(ShapeExpr::parse("K"), InputError);
  CHECK_THROWS_AS(ShapeExpr::parse("K2 +"), InputError);
  CHECK_THROWS_AS(ShapeExpr::parse("L3"), InputError);

  auto g = complete(3).induced({0, 1, 2});
  SimpleGraph h(6);
  h.add_edge(0, 1);
  h.add_edge(1, 2);
  h.add_edge(0, 2);
  h.add_edge(3, 4);
  CHECK(match_shape(h, "K3 + K2 + K1"));
  CHECK_FALSE(match_shape(h, "K3 + 3K1"));
  CHECK(clique_union_shape(h)->to_string() == "K3 + K2 + K1");
  CHECK_FALSE(clique_union_shape(path(3)));
  CHECK(match_shape(g, "K3"));
  CHECK(match_shape(SimpleGraph(0), ""));
}

TEST_CASE("distance") {
  SimpleGraph g(std::vector<std::string>{"a", "b", "c", "d"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  CHECK(distance(g, 0, 0) == 0u);
  CHECK(distance(g, "a", "c") == 2u);
  CHECK_FALSE(distance(g, "a", "d"));
  CHECK_THROWS_AS(distance(g, "a", "z"), InputError);
  CHECK_THROWS_AS(distance(g, 0, 9), InputError);
}

TEST_CASE("report json") {
  SimpleGraph g(std::vector<std::string>{"2A", "3A", "4A", "5A"});
  g.add_edge(0, 1);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  const auto r = classify(g, "demo");
  CHECK_FALSE(r.cograph);
  CHECK(r.chordal);
  CHECK(r.split);
  CHECK_FALSE(r.threshold);
  REQUIRE(r.witnesses.count("P4"));
  CHECK(r.witnesses.at("P4") == std::vector<std::string>{"2A", "3A", "4A", "5A"});

  const auto j = nlohmann::json::parse(to_json(r));
  CHECK(j["graph"] == "demo");
  CHECK(j["cograph"] == false);
  CHECK(to_json(r) == to_json(classify(g, "demo")));
}
