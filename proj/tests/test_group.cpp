#include <doctest.h>

#include <array>
#include <random>
#include <set>

#include "ccg/error.hpp"
#include "ccg/families.hpp"
#include "ccg/group.hpp"

using namespace ccg;

namespace {

FiniteGroup sym(std::uint64_t n) { return build(GroupSpec::of(Family::symmetric, {n})); }

SubgroupHandle pair_closure(const FiniteGroup& g, ElemId a, ElemId b) {
  const std::array<ElemId, 2> s{a, b};
  return subgroup_closure(g, s);
}

// Small corpus used by the invariant tests.
std::vector<FiniteGroup> corpus() {
  std::vector<FiniteGroup> out;
  out.push_back(sym(4));
  out.push_back(build(GroupSpec::of(Family::dihedral, {6})));
  out.push_back(build(GroupSpec::of(Family::dicyclic, {3})));
  out.push_back(build(GroupSpec::of(Family::alternating, {5})));
  out.push_back(build(GroupSpec::of(Family::pq, {7, 3})));
  out.push_back(build(GroupSpec::of(Family::heisenberg, {3})));
  out.push_back(build(GroupSpec::of(Family::generalized_dihedral, {4, 2})));
  return out;
}

}  // namespace

TEST_CASE("enumerate_group basics") {
  const auto s4 = enumerate_group({Permutation::parse("(1,2)", 4), Permutation::parse("(1,2,3,4)", 4)});
  CHECK(s4.order() == 24);
  CHECK(s4.identity() == 0);
  CHECK(s4.element(0).is_identity());
  CHECK(s4.classes().size() == 5);
  for (ElemId e = 1; e < s4.order(); ++e) CHECK(s4.element(e - 1) < s4.element(e));

  const auto d8 = build(GroupSpec::of(Family::dihedral, {4}));
  CHECK(d8.order() == 8);
  CHECK(d8.classes().size() == 5);
  CHECK(d8.center().size() == 2);

  CHECK_THROWS_AS(enumerate_group({Permutation(3), Permutation(4)}), InputError);
  try {
    enumerate_group({Permutation::parse("(1,2)", 6), Permutation::parse("(1,2,3,4,5,6)", 6)}, 100);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(e.cap() == 100);
  }
}

TEST_CASE("group invariants: classes partition, sizes divide, labels") {
  for (const auto& g : corpus()) {
    std::size_t total = 0;
    std::set<std::string> labels;
    for (const auto& c : g.classes()) {
      total += c.size;
      CHECK(g.order() % c.size == 0);
      CHECK(c.members.front() == c.rep);
      CHECK((c.size == 1) == (std::find(g.center().begin(), g.center().end(), c.rep) != g.center().end()));
      for (ElemId m : c.members) {
        CHECK(g.elem_order(m) == c.elem_order);
        CHECK(g.classes()[g.class_of(m)].label == c.label);
      }
      labels.insert(c.label);
      CHECK(c.label.rfind(std::to_string(c.elem_order), 0) == 0);
    }
    CHECK(total == g.order());
    CHECK(labels.size() == g.classes().size());
    CHECK(g.order() % g.center().size() == 0);
  }
}

TEST_CASE("centralizer") {
  const auto s3 = sym(3);
  const auto c = centralizer(s3, Permutation::parse("(1,2)", 3));
  CHECK(c.size() == 2);
  CHECK(c[0] == s3.identity());
  const auto s4 = sym(4);
  CHECK(centralizer(s4, Permutation::parse("(1,2,3)", 4)).size() == 3);
  CHECK(centralizer(s4, Permutation(4)).size() == 24);
  CHECK_THROWS_AS(centralizer(s4, Permutation::parse("(1,2)", 5)), InputError);
  const auto a4 = build(GroupSpec::of(Family::alternating, {4}));
  CHECK_THROWS_AS(centralizer(a4, Permutation::parse("(1,2)", 4)), InputError);
}

TEST_CASE("subgroup closure") {
  const auto s3 = sym(3);
  const ElemId t = s3.id_of(Permutation::parse("(1,2)", 3));
  const ElemId c = s3.id_of(Permutation::parse("(1,2,3)", 3));
  const std::array<ElemId, 1> one{c};
  CHECK(subgroup_closure(s3, one).order == 3);
  const auto h = pair_closure(s3, t, c);
  CHECK(h.order == 6);
  CHECK(h.whole_group);

  const auto s6 = sym(6);
  const ElemId x = s6.id_of(Permutation::parse("(1,2,3,4,5,6)", 6));
  const std::array<ElemId, 1> sx{x};
  CHECK(subgroup_closure(s6, sx).order == 6);
  const auto over = subgroup_closure(s6, std::array<ElemId, 1>{x}, 3);
  CHECK_FALSE(over.complete);

  // D_20 in its regular representation.
  const auto d20 = make_generalized_dihedral({10});
  CHECK(d20.order() == 20);
  const auto& gens = d20.generator_ids();
  CHECK(subgroup_closure(d20, gens).order == 20);
}

TEST_CASE("predicate examples") {
  const auto s3 = sym(3);
  const auto s4 = sym(4);
  const auto a5 = build(GroupSpec::of(Family::alternating, {5}));
  const auto q8 = build(GroupSpec::of(Family::dicyclic, {2}));
  const auto c6 = build(GroupSpec::of(Family::cyclic, {6}));
  const auto d8 = build(GroupSpec::of(Family::dihedral, {4}));
  auto whole = [](const FiniteGroup& g) { return subgroup_closure(g, g.generator_ids()); };

  CHECK(is_abelian(c6, whole(c6)));
  CHECK_FALSE(is_abelian(s3, whole(s3)));
  CHECK_FALSE(is_abelian(q8, whole(q8)));
  CHECK(is_nilpotent(d8, whole(d8)));
  CHECK_FALSE(is_nilpotent(s3, whole(s3)));
  CHECK(is_nilpotent(c6, whole(c6)));
  CHECK(is_solvable(s4, whole(s4)));
  CHECK(is_solvable(s3, whole(s3)));
  CHECK_FALSE(is_solvable(a5, whole(a5)));
  CHECK(is_solvable_by_derived_series(s4, whole(s4)));
  CHECK_FALSE(is_solvable_by_derived_series(a5, whole(a5)));
  CHECK(s4.group_is_solvable());
  CHECK_FALSE(a5.group_is_solvable());
  CHECK_FALSE(s4.group_is_nilpotent());
  CHECK(q8.group_is_nilpotent());

  CHECK(is_eppo(a5));
  CHECK_FALSE(is_eppo(build(GroupSpec::of(Family::symmetric, {5}))));
  CHECK(is_eppo(q8));

  // The proper subgroup Alt(4) inside Sym(4): solvable, not nilpotent.
  const ElemId u = s4.id_of(Permutation::parse("(1,2,3)", 4));
  const ElemId v = s4.id_of(Permutation::parse("(2,3,4)", 4));
  const auto a4 = pair_closure(s4, u, v);
  CHECK(a4.order == 12);
  CHECK_FALSE(a4.whole_group);
  CHECK(is_solvable_by_derived_series(s4, a4));
  CHECK_FALSE(is_nilpotent(s4, a4));
}

TEST_CASE("subgroup predicates: chain, Lagrange, conjugation invariance, cross-checks") {
  std::mt19937 rng(5);
  for (const auto& g : corpus()) {
    PairPredicates preds(g);
    std::uniform_int_distribution<ElemId> pick(0, static_cast<ElemId>(g.order() - 1));
    for (int probe = 0; probe < 40; ++probe) {
      const ElemId a = pick(rng), b = pick(rng), c = pick(rng);
      const auto h = pair_closure(g, a, b);
      REQUIRE(h.complete);
      CHECK(g.order() % h.order == 0);
      const bool ab = is_abelian(g, h), nil = is_nilpotent(g, h), sol = is_solvable(g, h);
      CHECK((!ab || nil));
      CHECK((!nil || sol));
      CHECK(sol == is_solvable_by_derived_series(g, h));
      if (h.order <= 200) CHECK(nil == all_sylows_normal(g, h));

      const auto hc = pair_closure(g, g.conj(a, c), g.conj(b, c));
      CHECK(hc.order == h.order);
      CHECK(is_abelian(g, hc) == ab);
      CHECK(is_nilpotent(g, hc) == nil);
      CHECK(is_solvable(g, hc) == sol);

      CHECK(preds.nilpotent(a, b).has_value() == nil);
      if (nil) CHECK(*preds.nilpotent(a, b) == h.order);
      CHECK(preds.solvable(a, b).solvable == sol);
      CHECK(preds.solvable(b, a).order == h.order);
      if (proves_generation(g, a, b)) CHECK(h.whole_group);
    }
  }
}

TEST_CASE("generation certificate finds generating pairs") {
  const auto s6 = sym(6);
  const ElemId t = s6.id_of(Permutation::parse("(1,2)", 6));
  const ElemId c = s6.id_of(Permutation::parse("(1,2,3,4,5,6)", 6));
  CHECK(proves_generation(s6, t, c));
  const ElemId d = s6.id_of(Permutation::parse("(1,3,5)(2,4,6)", 6));
  CHECK_FALSE(proves_generation(s6, c, d));
}

TEST_CASE("Sylow witnesses") {
  auto check_witnesses = [](const FiniteGroup& g, std::uint64_t p) {
    const auto w = find_sylow_witnesses(g, p);
    REQUIRE(w.has_value());
    CHECK(w->size() == p + 1);
    for (std::size_t i = 0; i < w->size(); ++i) {
      for (std::size_t j = i + 1; j < w->size(); ++j) {
        CHECK_FALSE(g.commute((*w)[i], (*w)[j]));
        CHECK(g.class_of((*w)[i]) != g.class_of((*w)[j]));
      }
    }
  };
  check_witnesses(build(GroupSpec::of(Family::dihedral, {4})), 2);
  check_witnesses(build(GroupSpec::of(Family::dicyclic, {2})), 2);
  check_witnesses(build(GroupSpec::of(Family::heisenberg, {3})), 3);
  const auto s3 = sym(3);
  CHECK_FALSE(find_sylow_witnesses(s3, 3).has_value());
  CHECK_THROWS_AS(find_sylow_witnesses(s3, 5), InputError);
  CHECK(sylow_subgroup(sym(4), 2).size() == 8);
  CHECK(sylow_subgroup(build(GroupSpec::of(Family::alternating, {5})), 2).size() == 4);
}

TEST_CASE("factorization helpers") {
  CHECK(factorize(360) == std::map<std::uint64_t, unsigned>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(is_prime_power(8));
  CHECK(is_prime_power(7));
  CHECK_FALSE(is_prime_power(6));
  CHECK_FALSE(is_prime_power(1));
}
