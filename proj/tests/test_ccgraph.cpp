#include <doctest.h>

#include <algorithm>
#include <array>
#include <string>

#include <json.hpp>

#include "ccg/ccgraph.hpp"
#include "ccg/error.hpp"
#include "ccg/families.hpp"
#include "ccg/verifier.hpp"

using namespace ccg;

namespace {

FiniteGroup make(Family f, std::vector<std::uint64_t> p) { return build(GroupSpec::of(f, std::move(p))); }

// Definition straight from the relation: try every pair of members.
bool brute_adjacent(const FiniteGroup& g, std::size_t x, std::size_t y, Relation rel) {
  for (ElemId a : g.classes()[x].members) {
    for (ElemId b : g.classes()[y].members) {
      const std::array<ElemId, 2> seeds{a, b};
      const auto h = subgroup_closure(g, seeds);
      bool ok = false;
      switch (rel) {
        case Relation::ccc: ok = is_abelian(g, h); break;
        case Relation::ncc: ok = all_sylows_normal(g, h); break;
        case Relation::scc: ok = is_solvable_by_derived_series(g, h); break;
        case Relation::invgen: ok = h.whole_group; break;
      }
      if (rel == Relation::invgen && !ok) return false;
      if (rel != Relation::invgen && ok) return true;
    }
  }
  return rel == Relation::invgen;
}

bool has_edge(const ClassGraph& cg, const std::string& u, const std::string& v) {
  return cg.graph.adjacent(cg.graph.index_of(u), cg.graph.index_of(v));
}

bool edges_subset(const ClassGraph& a, const ClassGraph& b) {
  for (auto [i, j] : a.graph.edges()) {
    if (!b.graph.adjacent(i, j)) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("small dihedral and dicyclic shapes") {
  CHECK(match_shape(build_graph(make(Family::dihedral, {5}), Relation::ccc).graph, "K2 + K1"));
  CHECK(match_shape(build_graph(make(Family::dihedral, {6}), Relation::ccc).graph, "K2 + K2"));
  CHECK(match_shape(build_graph(make(Family::dihedral, {8}), Relation::ccc).graph, "K3 + 2K1"));
  CHECK(match_shape(build_graph(make(Family::dicyclic, {2}), Relation::ccc).graph, "3K1"));
  CHECK(match_shape(build_graph(make(Family::dicyclic, {3}), Relation::ccc).graph, "K2 + K2"));
  CHECK(match_shape(build_graph(make(Family::dicyclic, {4}), Relation::ccc).graph, "K3 + 2K1"));
}

TEST_CASE("adjacency agrees with the brute-force definition") {
  std::vector<FiniteGroup> groups;
  groups.push_back(make(Family::dihedral, {6}));
  groups.push_back(make(Family::dicyclic, {3}));
  groups.push_back(make(Family::symmetric, {4}));
  groups.push_back(make(Family::alternating, {5}));
  groups.push_back(make(Family::pq, {7, 3}));
  for (const auto& g : groups) {
    CAPTURE(g.name());
    PairPredicates preds(g);
    for (Relation rel : {Relation::ccc, Relation::ncc, Relation::scc, Relation::invgen}) {
      const auto cg = build_graph(g, rel, preds);
      for (std::size_t i = 0; i < cg.classes.size(); ++i) {
        for (std::size_t j = 0; j < cg.classes.size(); ++j) {
          if (i == j) continue;
          const std::size_t x = cg.classes[i], y = cg.classes[j];
          CAPTURE(relation_name(rel));
          CAPTURE(cg.graph.label(i));
          CAPTURE(cg.graph.label(j));
          const bool adj = class_adjacent(g, x, y, rel, preds).adjacent;
          CHECK(adj == brute_adjacent(g, x, y, rel));
          CHECK(adj == cg.graph.adjacent(i, j));
          const auto w = class_adjacent(g, x, y, rel, preds, true);
          CHECK(w.adjacent == adj);
          if (w.adjacent) {
            REQUIRE(w.witness);
            CHECK(replay(g, *w.witness));
          }
        }
      }
    }
  }
}

TEST_CASE("orbit representatives cover the class") {
  const auto g = make(Family::symmetric, {5});
  for (std::size_t x = 1; x < g.classes().size(); ++x) {
    for (std::size_t y = 1; y < g.classes().size(); ++y) {
      const auto reps = centralizer_orbit_reps(g, x, y);
      REQUIRE_FALSE(reps.empty());
      CHECK(reps.front() == g.classes()[y].members.front());
      std::size_t covered = 0;
      const auto& cent = g.class_centralizer(x);
      for (ElemId r : reps) {
        std::vector<ElemId> orbit;
        for (ElemId c : cent) orbit.push_back(g.conj(r, c));
        std::sort(orbit.begin(), orbit.end());
        orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
        covered += orbit.size();
      }
      CHECK(covered == g.classes()[y].size);
    }
  }
}

TEST_CASE("relation chain and complete graphs") {
  std::vector<FiniteGroup> groups;
  groups.push_back(make(Family::symmetric, {5}));
  groups.push_back(make(Family::alternating, {6}));
  groups.push_back(make(Family::psl2, {7}));
  groups.push_back(make(Family::dicyclic, {6}));
  for (const auto& g : groups) {
    CAPTURE(g.name());
    const auto c = build_graph(g, Relation::ccc);
    const auto n = build_graph(g, Relation::ncc);
    const auto s = build_graph(g, Relation::scc);
    CHECK(edges_subset(c, n));
    CHECK(edges_subset(n, s));
  }

  // nilpotent: NCC and SCC complete; solvable: SCC complete
  for (auto spec : {GroupSpec::of(Family::dihedral, {8}), GroupSpec::of(Family::dicyclic, {4}),
                    GroupSpec::of(Family::heisenberg, {3})}) {
    const auto g = build(spec);
    const auto n = build_graph(g, Relation::ncc).graph;
    CHECK(n.edge_count() == n.size() * (n.size() - 1) / 2);
  }
  for (auto spec : {GroupSpec::of(Family::symmetric, {4}), GroupSpec::of(Family::dihedral, {9}),
                    GroupSpec::of(Family::pq, {11, 5})}) {
    const auto g = build(spec);
    const auto s = build_graph(g, Relation::scc).graph;
    CHECK(s.edge_count() == s.size() * (s.size() - 1) / 2);
  }
}

TEST_CASE("named edges of Sym(5)") {
  const auto g = make(Family::symmetric, {5});
  const auto c = build_graph(g, Relation::ccc);
  CHECK(has_edge(c, "2A", "3A"));   // (1,2) and (3,4,5)
  CHECK(has_edge(c, "2A", "2B"));
  CHECK_FALSE(has_edge(c, "5A", "2A"));
  CHECK(c.graph.degree(c.graph.index_of("5A")) == 0);
  const auto s = build_graph(g, Relation::scc);
  CHECK(has_edge(s, "5A", "4A"));  // inside the Frobenius group of order 20
}

TEST_CASE("p-elements in CCC are close") {
  const auto g = make(Family::symmetric, {6});
  const auto c = build_graph(g, Relation::ccc);
  for (std::size_t i = 0; i < c.graph.size(); ++i) {
    for (std::size_t j = 0; j < c.graph.size(); ++j) {
      if (c.orders[i] == 2 && c.orders[j] == 2) {
        const auto d = distance(c.graph, i, j);
        REQUIRE(d);
        CHECK(*d <= 2);
      }
    }
  }
}

TEST_CASE("adjacency rejects bad input") {
  const auto g = make(Family::dihedral, {4});
  const auto central = g.class_of(g.center().back());
  CHECK_THROWS_AS(class_adjacent(g, central, 1, Relation::ccc), InputError);
  CHECK_THROWS_AS(class_adjacent(g, 1, 1, Relation::ccc), InputError);
  CHECK_THROWS_AS(class_adjacent(g, 1, 99, Relation::ccc), InputError);
  CHECK_THROWS_AS(parse_relation("xyz"), InputError);
  CHECK(parse_relation("Lambda") == Relation::invgen);
}

TEST_CASE("dot and json output") {
  const auto cg = build_graph(make(Family::dihedral, {5}), Relation::ccc);
  CHECK(to_dot(cg) ==
        "graph \"D10_CCC\" {\n"
        "  v0 [label=\"2A\"];\n"
        "  v1 [label=\"5A\"];\n"
        "  v2 [label=\"5B\"];\n"
        "  v1 -- v2;\n"
        "}\n");
  const auto j = nlohmann::json::parse(to_json(cg));
  CHECK(j["group"] == "D10");
  CHECK(j["relation"] == "CCC");
  CHECK(j["vertices"].size() == 3);
  CHECK(j["vertices"][1]["order"] == 5);
  CHECK(j["vertices"][1]["size"] == 2);
  CHECK(j["edges"] == nlohmann::json::parse("[[1,2]]"));
}

TEST_CASE("verifier registry and runs") {
  const auto info = registered_checks();
  CHECK(info.size() >= 25);
  for (const auto& c : info) CHECK_FALSE(c.id.empty());

  CHECK_THROWS_AS(run_check("no-such-check"), InputError);
  CHECK(run_all({"no-such-check", Tier::standard, kDefaultCap}).empty());

  RunOptions opts{"dicyclic-ccc", Tier::standard, kDefaultCap};
  const auto a = run_all(opts);
  REQUIRE(a.size() == 2);
  CHECK(all_passed(a));
  CHECK(to_json(a) == to_json(run_all(opts)));
  CHECK(to_text(a) == to_text(run_all(opts)));
  const auto j = nlohmann::json::parse(to_json(a));
  CHECK(j["summary"]["pass"] == 2);

  // extended checks stay out of the default tier
  CHECK(run_all({"M22-scc", Tier::standard, kDefaultCap}).empty());
  const auto capped = run_check("M22-scc", 1000);
  CHECK(capped.status == CheckStatus::skipped);
  for (const auto& m : capped.members) CHECK(m.status == CheckStatus::skipped);

  CHECK(parse_tier("default") == Tier::standard);
  CHECK(parse_tier("extended") == Tier::extended);
  CHECK_THROWS_AS(parse_tier("fast"), InputError);
}

TEST_CASE("classification table") {
  const auto rows = classification_table(Family::dihedral, 3, 6, Relation::ccc);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].group == "D6");
  CHECK(rows[3].report.split == false);  // n = 6 is 2 mod 4
  const auto csv = to_csv(rows);
  CHECK(csv.rfind("group,relation,status,cograph,chordal,split,threshold,claw_free,witnesses\n", 0) == 0);
  CHECK_THROWS_AS(classification_table(Family::pq, 3, 5, Relation::ccc), InputError);
}
