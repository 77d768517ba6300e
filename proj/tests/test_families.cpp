#include <doctest.h>

#include <set>

#include "ccg/error.hpp"
#include "ccg/families.hpp"

using namespace ccg;

namespace {

std::size_t noncentral(const FiniteGroup& g) {
  std::size_t n = 0;
  for (const auto& c : g.classes()) n += c.size > 1;
  return n;
}

std::set<std::string> labels(const FiniteGroup& g) {
  std::set<std::string> s;
  for (const auto& c : g.classes()) s.insert(c.label);
  return s;
}

}  // namespace

TEST_CASE("presented families have the right orders") {
  const auto d10 = build(GroupSpec::of(Family::dihedral, {5}));
  CHECK(d10.order() == 10);
  CHECK(d10.classes().size() == 4);
  CHECK(d10.name() == "D10");
  for (std::uint64_t n = 3; n <= 12; ++n) CHECK(build(GroupSpec::of(Family::dihedral, {n})).order() == 2 * n);
  for (std::uint64_t n = 2; n <= 12; ++n) CHECK(build(GroupSpec::of(Family::dicyclic, {n})).order() == 4 * n);

  const auto q8 = build(GroupSpec::of(Family::dicyclic, {2}));
  CHECK(q8.order() == 8);
  CHECK(q8.center().size() == 2);
  std::size_t order4 = 0;
  for (ElemId e = 0; e < q8.order(); ++e) order4 += q8.elem_order(e) == 4;
  CHECK(order4 == 6);  // Q8, not D8

  CHECK(build(GroupSpec::of(Family::abelian, {2, 4})).order() == 8);
  CHECK(build(GroupSpec::of(Family::cyclic, {15})).order() == 15);
  CHECK(build(GroupSpec::of(Family::pq, {11, 5})).order() == 55);
  CHECK(build(GroupSpec::of(Family::heisenberg, {3})).order() == 27);
  CHECK_THROWS_AS(build(GroupSpec::of(Family::dihedral, {2})), InputError);
  CHECK_THROWS_AS(build(GroupSpec::of(Family::dicyclic, {1})), InputError);
  CHECK_THROWS_AS(build(GroupSpec::of(Family::pq, {7, 5})), InputError);
}

TEST_CASE("generalized dihedral groups") {
  const auto g3 = make_generalized_dihedral({3});
  CHECK(g3.order() == 6);
  CHECK(g3.classes().size() == 3);
  CHECK_FALSE(g3.group_is_abelian());
  CHECK(make_generalized_dihedral({3, 3}).order() == 18);
  const auto g42 = make_generalized_dihedral({4, 2});
  CHECK(g42.order() == 16);
  // The involution b inverts A: b a b = a^-1 for every a in A.
  const auto& gens = g42.generator_ids();
  const ElemId b = gens.back();
  for (std::size_t i = 0; i + 1 < gens.size(); ++i) CHECK(g42.conj(gens[i], b) == g42.inv(gens[i]));
  CHECK_THROWS_AS(make_generalized_dihedral({}), InputError);
  CHECK_THROWS_AS(make_generalized_dihedral({1}), InputError);
}

TEST_CASE("symmetric and alternating") {
  CHECK(build(GroupSpec::of(Family::symmetric, {5})).order() == 120);
  CHECK(build(GroupSpec::of(Family::alternating, {6})).order() == 360);
  CHECK(build(GroupSpec::of(Family::alternating, {2})).order() == 1);
}

TEST_CASE("PSL(2,q) and PSL(3,3)") {
  for (std::uint64_t q : {4, 5, 7, 8, 9, 13}) {
    const auto g = build(GroupSpec::of(Family::psl2, {q}));
    const std::uint64_t expect = q * (q * q - 1) / (q % 2 ? 2 : 1);
    CHECK(g.order() == expect);
    CHECK(g.degree() == q + 1);
  }
  const auto l24 = build(GroupSpec::of(Family::psl2, {4}));
  const auto a5 = build(GroupSpec::of(Family::alternating, {5}));
  std::multiset<std::pair<std::uint64_t, std::size_t>> s1, s2;
  for (const auto& c : l24.classes()) s1.insert({c.elem_order, c.size});
  for (const auto& c : a5.classes()) s2.insert({c.elem_order, c.size});
  CHECK(s1 == s2);
  CHECK_THROWS_AS(build(GroupSpec::of(Family::psl2, {11})), InputError);
  const auto l33 = build(GroupSpec::of(Family::psl3_3, {}));
  CHECK(l33.order() == 5616);
  CHECK(l33.degree() == 13);
}

TEST_CASE("Mathieu and Suzuki fixtures") {
  const auto m11 = load_fixture("M11");
  CHECK(m11.order() == 7920);
  CHECK(labels(m11) == std::set<std::string>{"1A", "2A", "3A", "4A", "5A", "6A", "8A", "8B", "11A", "11B"});
  CHECK(m11.elem_order(m11.id_of(Permutation::parse("(1,2,3,4,5,6,7,8,9,10,11)", 11))) == 11);

  const auto m12 = load_fixture("M12");
  CHECK(m12.order() == 95040);
  CHECK(noncentral(m12) == 14);

  const auto sz8 = load_fixture("Sz8");
  CHECK(sz8.order() == 29120);
  CHECK(noncentral(sz8) == 10);
  std::map<std::uint64_t, int> by_order;
  for (const auto& c : sz8.classes()) {
    if (c.size > 1) ++by_order[c.elem_order];
  }
  CHECK(by_order == std::map<std::uint64_t, int>{{2, 1}, {4, 2}, {5, 1}, {7, 3}, {13, 3}});
  for (const char* l : {"D1", "D2", "D3", "A1", "A2", "A3", "B1", "X1", "X2", "X3"}) {
    CHECK(sz8.class_index(l).has_value());
  }
}

TEST_CASE("M22 fixture") {
  const auto m22 = load_fixture("M22");
  CHECK(m22.order() == 443520);
  for (const char* l : {"7A", "7B", "11A", "11B"}) CHECK(m22.class_index(l).has_value());
}

TEST_CASE("fixture parsing and integrity errors") {
  const auto rec = parse_fixture("# c\nname S3\ndegree 3\norder 6\nclasses 3\ngen (1,2)\ngen (1,2,3) # x\n"
                                 "label (1,2) 2X\n");
  CHECK(rec.name == "S3");
  CHECK(rec.generators.size() == 2);
  const auto g = build_fixture(rec);
  CHECK(g.class_index("2X").has_value());

  CHECK_THROWS_AS(parse_fixture("name X\ndegree 3\n"), IntegrityError);
  CHECK_THROWS_AS(parse_fixture("name X\ndegree three\norder 6\ngen (1,2)\n"), IntegrityError);
  CHECK_THROWS_AS(parse_fixture("bogus 1\n"), IntegrityError);
  auto bad_order = rec;
  bad_order.order = 7;
  CHECK_THROWS_AS(build_fixture(bad_order), IntegrityError);
  auto bad_label = rec;
  bad_label.labels = {{"(1,2)", "3A"}};  // collides with the 3-cycle class
  CHECK_THROWS_AS(build_fixture(bad_label), IntegrityError);
  auto bad_gen = rec;
  bad_gen.generators = {"(1,4)"};
  CHECK_THROWS_AS(build_fixture(bad_gen), IntegrityError);
  CHECK_THROWS_AS(load_fixture("NoSuchGroup"), IntegrityError);
}
