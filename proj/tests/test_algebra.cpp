#include <doctest.h>

#include <set>

#include "ccg/error.hpp"
#include "ccg/field.hpp"
#include "ccg/group.hpp"
#include "ccg/permutation.hpp"
#include "ccg/projective.hpp"

using namespace ccg;

namespace {

Permutation cyc(std::size_t n, std::vector<std::vector<std::size_t>> c) { return Permutation::from_cycles(n, c); }

}  // namespace

TEST_CASE("compose follows the right-to-left convention") {
  const auto t = cyc(3, {{0, 1}});
  CHECK((t * t).is_identity());
  const auto c = cyc(3, {{0, 1, 2}});
  CHECK(c * c == cyc(3, {{0, 2, 1}}));

  // (0 1) o (1 2): apply (1 2) first, pointwise.
  const auto p = cyc(3, {{0, 1}});
  const auto q = cyc(3, {{1, 2}});
  const auto r = p * q;
  for (std::size_t i = 0; i < 3; ++i) CHECK(r(i) == p(q(i)));
  CHECK(r == cyc(3, {{0, 1, 2}}));

  CHECK_THROWS_AS(compose(Permutation(3), Permutation(4)), InputError);
}

TEST_CASE("permutation text form") {
  const auto p = Permutation::parse("(1,2)(3,4,5)", 5);
  CHECK(p.to_string() == "(1,2)(3,4,5)");
  CHECK(p.order() == 6);
  CHECK(Permutation(4).to_string() == "()");
  CHECK(Permutation::parse("()", 3).is_identity());
  CHECK(p.cycle_type() == std::vector<std::size_t>{3, 2});
  CHECK_THROWS_AS(Permutation::parse("(1,6)", 5), InputError);
  CHECK_THROWS_AS(Permutation::parse("(1,2,1)", 5), InputError);
  CHECK_THROWS_AS(Permutation(std::vector<Point>{0, 0}), InputError);
}

TEST_CASE("inverse, powers and conjugation") {
  const auto p = Permutation::parse("(1,3,5,7)(2,4)", 8);
  CHECK((p * p.inverse()).is_identity());
  CHECK(p.pow(4).is_identity());
  CHECK(p.pow(-1) == p.inverse());
  const auto g = Permutation::parse("(1,2)", 8);
  CHECK(p.conjugate_by(g) == g.inverse() * p * g);
  CHECK(element_order(Permutation(5)) == 1);
}

TEST_CASE("field arithmetic examples") {
  const auto f8 = GaloisField::of_order(8);
  const FieldElem x = f8.from_coefficients({0, 1});
  const FieldElem x2 = f8.from_coefficients({0, 0, 1});
  CHECK(f8.mul(x, x2) == f8.from_coefficients({1, 1}));

  const auto f9 = GaloisField::of_order(9);
  const FieldElem y = f9.from_coefficients({0, 1});
  CHECK(f9.mul(y, y) == f9.elem(2));

  const auto f13 = GaloisField::of_order(13);
  CHECK(f13.inv(f13.elem(2)) == f13.elem(7));
  CHECK_THROWS_AS(f13.inv(f13.zero()), InputError);
  CHECK_THROWS_AS(GaloisField::of_order(6), InputError);
}

TEST_CASE("field axioms on small fields") {
  for (unsigned q : {4u, 8u, 9u, 16u, 5u, 7u}) {
    const auto f = GaloisField::of_order(q);
    for (unsigned a = 0; a < q; ++a) {
      const FieldElem fa = f.elem(a);
      CHECK(f.add(fa, f.neg(fa)) == f.zero());
      if (a) CHECK(f.mul(fa, f.inv(fa)) == f.one());
      for (unsigned b = 0; b < q; ++b) {
        const FieldElem fb = f.elem(b);
        CHECK(f.mul(fa, fb) == f.mul(fb, fa));
        for (unsigned c = 0; c < q; c += 3) {
          const FieldElem fc = f.elem(c);
          CHECK(f.mul(fa, f.add(fb, fc)) == f.add(f.mul(fa, fb), f.mul(fa, fc)));
        }
      }
    }
    std::set<unsigned> powers;
    const FieldElem g = f.primitive();
    for (unsigned k = 0; k + 1 < q; ++k) powers.insert(f.pow(g, k).code);
    CHECK(powers.size() == q - 1);
  }
}

TEST_CASE("projective action") {
  const auto f5 = GaloisField::of_order(5);
  const ProjectiveSpace line(f5, 2);
  CHECK(line.size() == 6);
  const ProjPoint inf = normalize(f5, {f5.one(), f5.zero()});
  const auto m = make_matrix(f5, 2, {0, -1, 1, 0});
  CHECK(line.apply(m, inf) == normalize(f5, {f5.zero(), f5.one()}));
  const auto id = make_matrix(f5, 2, {1, 0, 0, 1});
  for (std::size_t i = 0; i < line.size(); ++i) CHECK(line.apply(id, line.point(i)) == line.point(i));
  CHECK_THROWS_AS(line.apply(make_matrix(f5, 2, {1, 2, 2, 4}), inf), InputError);

  // Scalar multiples induce the same permutation.
  for (unsigned s = 1; s < 5; ++s) {
    CHECK(line.induced_permutation(scale(f5, m, f5.elem(s))) == line.induced_permutation(m));
  }

  const auto f4 = GaloisField::of_order(4);
  const ProjectiveSpace l4(f4, 2);
  CHECK(l4.size() == 5);
  const auto g = enumerate_group({l4.induced_permutation(make_matrix(f4, 2, {1, 1, 0, 1})),
                                  l4.induced_permutation(make_matrix(f4, 2, {1, 2, 0, 1})),
                                  l4.induced_permutation(make_matrix(f4, 2, {0, 1, 1, 0}))});
  CHECK(g.order() == 60);

  const ProjectiveSpace plane(GaloisField::of_order(3), 3);
  CHECK(plane.size() == 13);
  for (std::size_t i = 1; i < plane.size(); ++i) CHECK(plane.point(i - 1) < plane.point(i));
}
