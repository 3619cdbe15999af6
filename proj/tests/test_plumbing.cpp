#include <doctest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "plumbkit/error.hpp"
#include "plumbkit/families.hpp"
#include "plumbkit/plumbing.hpp"

using namespace plumbkit;

namespace {

PlumbingGraph sigma_237() {
  return PlumbingGraph({{"x", -1}, {"p", -2}, {"q", -3}, {"r", -7}}, {{"x", "p"}, {"x", "q"}, {"x", "r"}});
}

PlumbingGraph sigma_2319() {
  return PlumbingGraph({{"x", -1}, {"p", -2}, {"q", -3}, {"r1", -7}, {"r2", -2}, {"r3", -2}},
                       {{"x", "p"}, {"x", "q"}, {"x", "r1"}, {"r1", "r2"}, {"r2", "r3"}});
}

PlumbingGraph single(long w) { return PlumbingGraph({{"v", w}}, {}); }

}  // namespace

TEST_CASE("graph validation") {
  CHECK_THROWS_AS(PlumbingGraph({{"a", -1}, {"a", -2}}, {}), InvalidInput);
  CHECK_THROWS_AS(PlumbingGraph({{"a", -1}}, {{"a", "b"}}), InvalidInput);
  CHECK_THROWS_AS(PlumbingGraph({{"a", -1}}, {{"a", "a"}}), InvalidInput);
  CHECK_THROWS_AS(PlumbingGraph({{"a", -1}, {"b", -2}}, {{"a", "b"}, {"b", "a"}}), InvalidInput);
  CHECK_THROWS_AS(PlumbingGraph({{"a", -1}, {"b", -2}}, {}), InvalidInput);
  CHECK(PlumbingGraph().size() == 0);
}

TEST_CASE("intersection matrix") {
  CHECK(intersection_matrix(single(-1)) == SymmetricIntMatrix{{-1}});
  PlumbingGraph chain({{"a", -2}, {"b", -1}, {"c", -2}}, {{"a", "b"}, {"b", "c"}});
  CHECK(intersection_matrix(chain) == SymmetricIntMatrix{{-2, 1, 0}, {1, -1, 1}, {0, 1, -2}});

  const auto m = intersection_matrix(family_plumbing({Family::A, 1}));
  std::vector<long> diagonal;
  for (std::size_t i = 0; i < m.dim(); ++i) diagonal.push_back(m(i, i).get_si());
  CHECK(diagonal == std::vector<long>{-1, -2, -4, -2, -3, -5});
  CHECK(m(0, 1) == 1);
  CHECK(m(0, 2) == 1);
  CHECK(m(0, 5) == 1);
  CHECK(m(2, 3) == 1);
  CHECK(m(3, 4) == 1);
  CHECK(m(1, 2) == 0);
}

TEST_CASE("homology sphere test") {
  CHECK(oracle::cofactor_det(intersection_matrix(sigma_237())) == 1);
  CHECK(is_homology_sphere(sigma_237()));
  CHECK_FALSE(is_homology_sphere(single(0)));
  const auto b2 = family_plumbing({Family::B, 2});
  CHECK(oracle::cofactor_det(intersection_matrix(b2)) == -1);
  CHECK(is_homology_sphere(b2));
}

TEST_CASE("Wu class, square, mu_bar, Rokhlin") {
  CHECK(wu_class(single(-1)) == BitVector{1});
  CHECK(wu_square(single(-1)) == -1);
  CHECK(mu_bar(single(-1)) == 0);
  CHECK(rokhlin(single(-1)) == 0);

  CHECK(wu_class(sigma_237()) == BitVector{0, 1, 1, 1});
  CHECK(wu_square(sigma_237()) == -12);
  CHECK(mu_bar(sigma_237()) == 8);
  CHECK(rokhlin(sigma_237()) == 1);

  // Enumeration: (0,1,1,1,0,1) is the only solution, with square -14.
  CHECK(wu_class(sigma_2319()) == BitVector{0, 1, 1, 1, 0, 1});
  CHECK(wu_square(sigma_2319()) == -14);
  CHECK(rokhlin(sigma_2319()) == 1);

  // Even weights with odd determinant give the zero class.
  PlumbingGraph even({{"a", -2}, {"b", -2}, {"c", -2}, {"d", -2}, {"e", -2}, {"f", -2}, {"g", -2}, {"h", -2}},
                     {{"a", "b"}, {"a", "c"}, {"c", "d"}, {"a", "e"}, {"e", "f"}, {"f", "g"}, {"g", "h"}});
  CHECK(determinant(intersection_matrix(even)) == 1);
  CHECK(wu_class(even) == BitVector(8, 0));
  CHECK(mu_bar(even) == -8);
  CHECK(rokhlin(even) == 1);

  for (int n : {1, 3, 5}) CHECK(wu_square(family_plumbing({Family::A, n})) == -13 - n);
  CHECK(mu_bar(family_plumbing({Family::A, 3})) == 8);
}

TEST_CASE("error paths") {
  CHECK_THROWS_AS(wu_class(single(2)), WuUndefined);
  CHECK_THROWS_AS(mu_bar(single(0)), WuUndefined);
  CHECK_THROWS_AS(rokhlin(single(-3)), InvalidInput);
  PlumbingGraph pair({{"a", -3}, {"b", -1}}, {{"a", "b"}});
  CHECK(determinant(intersection_matrix(pair)) == 2);
  CHECK_THROWS_AS(wu_class(pair), WuUndefined);
  // Unimodular forms always have mu_bar = 0 mod 8, so the divisibility error is
  // only reachable from the mu_bar -> Rokhlin step itself.
  PlumbingGraph odd({{"a", 1}, {"b", 2}}, {{"a", "b"}});
  CHECK(determinant(intersection_matrix(odd)) == 1);
  CHECK(mu_bar(odd) == 0);
  CHECK(rokhlin_from_mu_bar(16) == 0);
  CHECK(rokhlin_from_mu_bar(-8) == 1);
  CHECK_THROWS_AS(rokhlin_from_mu_bar(4), MuBarNotDivisible);
}

TEST_CASE("invariant report") {
  const auto r = report(sigma_237());
  CHECK(r.det == 1);
  CHECK(r.inertia == Inertia{0, 0, 4});
  REQUIRE(r.wu);
  CHECK(*r.wu == BitVector{0, 1, 1, 1});
  CHECK(r.wu_square == Integer(-12));
  CHECK(r.mu_bar == Integer(8));
  CHECK(r.rokhlin == 1);
  CHECK(*r.mu_bar == Integer(r.inertia.signature()) - *r.wu_square);

  const auto even = report(single(-2));
  CHECK(even.det == -2);
  CHECK_FALSE(even.wu.has_value());
  CHECK_FALSE(even.rokhlin.has_value());

  const auto lens = report(single(-3));
  CHECK(lens.mu_bar.has_value());
  CHECK_FALSE(lens.rokhlin.has_value());

  const auto b1 = report(family_plumbing({Family::B, 1}));
  CHECK(b1.inertia == Inertia{0, 0, 6});
  CHECK(b1.mu_bar == Integer(8));
  CHECK(b1.rokhlin == 1);
}

TEST_CASE("Rokhlin is invariant under vertex reordering") {
  std::mt19937_64 rng(3);
  for (const auto& g : {sigma_237(), sigma_2319(), family_plumbing({Family::A, 3}), family_plumbing({Family::B, 4})}) {
    const int expected = rokhlin(g);
    for (int trial = 0; trial < 20; ++trial) {
      auto vertices = g.vertices();
      std::shuffle(vertices.begin(), vertices.end(), rng);
      PlumbingGraph shuffled(vertices, g.edge_ids());
      REQUIRE(rokhlin(shuffled) == expected);
      REQUIRE(report(shuffled).mu_bar == report(g).mu_bar);
    }
  }
}

TEST_CASE("DOT export labels weights") {
  const auto dot = to_dot(sigma_237(), "s237");
  CHECK(dot.find("graph \"s237\"") != std::string::npos);
  CHECK(dot.find("\"r\" [xlabel=\"-7\"]") != std::string::npos);
  CHECK(dot.find("\"x\" -- \"q\"") != std::string::npos);
}
