#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "oracles.hpp"
#include "plumbkit/error.hpp"
#include "plumbkit/families.hpp"
#include "plumbkit/kirby.hpp"
#include "plumbkit/seifert.hpp"

using namespace plumbkit;

namespace {

FramedLinkMatrix link_of(SymmetricIntMatrix m) {
  std::vector<Component> components;
  for (std::size_t i = 0; i < m.dim(); ++i) components.push_back({"c" + std::to_string(i), Tag::Gray});
  return FramedLinkMatrix(std::move(components), std::move(m));
}

FramedLinkMatrix random_link(std::mt19937_64& rng, std::size_t max_dim) {
  std::uniform_int_distribution<std::size_t> dim(0, max_dim);
  return link_of(oracle::random_symmetric(rng, dim(rng), -9, 9));
}

std::vector<Integer> random_vector(std::mt19937_64& rng, std::size_t n, long range) {
  std::uniform_int_distribution<long> entry(-range, range);
  std::vector<Integer> v;
  for (std::size_t i = 0; i < n; ++i) v.emplace_back(entry(rng));
  return v;
}

std::vector<Integer> ints(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

}  // namespace

TEST_CASE("blow_down examples") {
  const auto single = link_of(SymmetricIntMatrix{{-1}});
  CHECK(blow_down(single, 0).empty());

  // Knot with framing 0 linked once with a -1 curve.
  FramedLinkMatrix knot_and_unit({{"K", Tag::Gray}, {"u", Tag::Black}}, SymmetricIntMatrix{{0, 1}, {1, -1}});
  const auto down = blow_down(knot_and_unit, 1);
  CHECK(down.matrix() == SymmetricIntMatrix{{1}});
  CHECK(down.component(0).id == "K");

  const auto chain = link_of(SymmetricIntMatrix{{-2, 1, 0}, {1, -1, 1}, {0, 1, -2}});
  CHECK(blow_down(chain, 1).matrix() == SymmetricIntMatrix{{-1, 1}, {1, -1}});

  CHECK_THROWS_AS(blow_down(chain, 0), FramingNotUnit);
  CHECK_THROWS_AS(blow_down(chain, 7), InvalidInput);
}

TEST_CASE("blow_up examples") {
  const auto up = blow_up(FramedLinkMatrix(), {}, +1);
  CHECK(up.matrix() == SymmetricIntMatrix{{-1}});
  CHECK(up.component(0).tag == Tag::Black);

  const auto l = link_of(SymmetricIntMatrix{{0, 2}, {2, 3}});
  const auto v = ints({1, -2});
  const auto plus = blow_up(l, v, +1);
  CHECK(plus.matrix() == SymmetricIntMatrix{{-1, 4, 1}, {4, -1, -2}, {1, -2, -1}});
  CHECK(determinant(plus.matrix()) == -determinant(l.matrix()));
  const auto minus = blow_up(l, v, -1);
  CHECK(determinant(minus.matrix()) == determinant(l.matrix()));
  CHECK_THROWS_AS(blow_up(l, ints({1}), +1), InvalidInput);
  CHECK_THROWS_AS(blow_up(l, v, 0), InvalidInput);
}

TEST_CASE("unlink_blowup") {
  // Black -1 curve linking a -2 gray vertex once.
  FramedLinkMatrix l({{"g", Tag::Gray}, {"k", Tag::Black}}, SymmetricIntMatrix{{-2, 1}, {1, -1}});
  const auto out = unlink_blowup(l, 0, 1);
  CHECK(out.framing(0) == -3);
  CHECK(out.framing(1) == -2);
  CHECK(out.framing(2) == -1);
  CHECK(out.linking(0, 1) == 0);
  CHECK(out.linking(0, 2) == 1);
  CHECK(out.linking(1, 2) == 1);
  CHECK(blow_down(out, 2) == l);
  CHECK(determinant(out.matrix()) == -determinant(l.matrix()));

  FramedLinkMatrix unlinked({{"g", Tag::Gray}, {"k", Tag::Black}}, SymmetricIntMatrix{{-2, 0}, {0, -1}});
  CHECK_THROWS_AS(unlink_blowup(unlinked, 0, 1), NotLinked);
  CHECK_THROWS_AS(unlink_blowup(l, 0, 0), InvalidInput);
}

TEST_CASE("blow moves are exact inverses (property)") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 1200; ++trial) {
    const auto l = random_link(rng, 8);
    const int sign = coin(rng) ? 1 : -1;
    const auto up = blow_up(l, random_vector(rng, l.size(), 3), sign);
    REQUIRE(blow_down(up, up.size() - 1) == l);
    REQUIRE(determinant(up.matrix()) == -sign * determinant(l.matrix()));

    auto smith = smith_invariants(l.matrix());
    smith.insert(smith.begin(), Integer(1));
    REQUIRE(smith_invariants(up.matrix()) == smith);
  }
  for (int trial = 0; trial < 1200; ++trial) {
    std::uniform_int_distribution<std::size_t> dim(2, 8);
    auto m = oracle::random_symmetric(rng, dim(rng), -9, 9);
    std::uniform_int_distribution<std::size_t> idx(0, m.dim() - 1);
    std::size_t i = idx(rng), j = idx(rng);
    while (j == i) j = idx(rng);
    m.set(i, j, std::uniform_int_distribution<long>(1, 9)(rng));
    const auto l = link_of(m);
    const auto out = unlink_blowup(l, i, j);
    REQUIRE(out.linking(i, j) == l.linking(i, j) - 1);
    REQUIRE(blow_down(out, out.size() - 1) == l);
    REQUIRE(determinant(out.matrix()) == -determinant(l.matrix()));
  }
}

TEST_CASE("blow_down changes det by eps and signature by -eps (property)") {
  std::mt19937_64 rng(1234);
  std::uniform_int_distribution<std::size_t> dim(1, 8);
  std::uniform_int_distribution<int> coin(0, 1);
  for (int trial = 0; trial < 1200; ++trial) {
    auto m = oracle::random_symmetric(rng, dim(rng), -9, 9);
    std::uniform_int_distribution<std::size_t> idx(0, m.dim() - 1);
    const std::size_t j = idx(rng);
    const long eps = coin(rng) ? 1 : -1;
    m.set(j, j, eps);
    const auto l = link_of(m);
    const auto down = blow_down(l, j);
    REQUIRE(determinant(down.matrix()) == eps * determinant(l.matrix()));
    REQUIRE(inertia(down.matrix()).signature() == inertia(l.matrix()).signature() - eps);
    auto smith = smith_invariants(down.matrix());
    smith.insert(smith.begin(), Integer(1));
    REQUIRE(smith_invariants(l.matrix()) == smith);
  }
}

TEST_CASE("reduce") {
  CHECK(reduce(link_of(SymmetricIntMatrix{{-1}})).result.empty());

  FramedLinkMatrix knot_and_unit({{"K", Tag::Gray}, {"u", Tag::Black}}, SymmetricIntMatrix{{0, 1}, {1, -1}});
  const auto r = reduce(knot_and_unit);
  REQUIRE(r.trace.size() == 2);
  CHECK(r.trace[0].component == "u");
  CHECK(r.trace[0].matrix == SymmetricIntMatrix{{1}});
  CHECK(r.trace[1].component == "K");
  CHECK(r.trace[1].matrix == SymmetricIntMatrix());
  CHECK(r.result.empty());

  // Lowest index first.
  const auto both = link_of(SymmetricIntMatrix{{-1, 2}, {2, 1}});
  CHECK(reduce(both).trace.front().component == "c0");
  CHECK(reduce(both, ReduceOrder::HighestIndexFirst).trace.front().component == "c1");

  const auto stuck = link_of(SymmetricIntMatrix{{2, 1}, {1, 3}});
  CHECK(reduce(stuck).result == stuck);
  CHECK_THROWS_AS(reduce(knot_and_unit, ReduceOrder::LowestIndexFirst, 1), IterationCap);

  const auto a1 = family_plumbing({Family::A, 1});
  const auto hit = reduce(augment(a1, ints({0, 0, 0, 1, 0, -1})));
  CHECK(is_zero_surgery_presentation(hit.result));
  CHECK(hit.result.matrix() == SymmetricIntMatrix{{0}});
}

TEST_CASE("reduce is confluent on the invariant level") {
  std::vector<FramedLinkMatrix> corpus;
  for (auto [p, q, r] : {std::array<std::int64_t, 3>{2, 3, 5}, {2, 3, 7}, {2, 3, 11}, {2, 3, 19}, {2, 5, 7}, {3, 4, 5},
                         {2, 5, 17}, {3, 4, 17}, {2, 7, 15}})
    corpus.push_back(FramedLinkMatrix::from_plumbing(canonical_plumbing(brieskorn_seifert(p, q, r))));
  for (int n = 1; n <= 5; ++n) {
    corpus.push_back(FramedLinkMatrix::from_plumbing(family_plumbing({Family::A, n})));
    corpus.push_back(FramedLinkMatrix::from_plumbing(family_plumbing({Family::B, n})));
  }
  for (auto f : {Family::A, Family::B})
    for (const auto& hit : surgery_search(family_plumbing({f, 1}), 2, 4))
      corpus.push_back(augment(family_plumbing({f, 1}), hit.links));

  for (const auto& l : corpus) {
    const auto forward = reduce(l).result.matrix();
    const auto backward = reduce(l, ReduceOrder::HighestIndexFirst).result.matrix();
    INFO("corpus entry of size " << l.size());
    CHECK(determinant(forward) == determinant(backward));
    CHECK(inertia(forward) == inertia(backward));
    CHECK(cokernel(forward) == cokernel(backward));
    CHECK(cokernel(forward) == cokernel(l.matrix()));
  }
}

TEST_CASE("surgery_search on the 3-sphere") {
  const PlumbingGraph s3({{"v", -1}}, {});
  const auto hits = surgery_search(s3, 3, 1);
  REQUIRE(hits.size() == 2);
  CHECK(hits[0].links == ints({-1}));
  CHECK(hits[1].links == ints({1}));
  CHECK_THROWS_AS(surgery_search(s3, 0, 1), InvalidInput);
}

TEST_CASE("surgery_search matches exhaustive enumeration of the cube") {
  const std::vector<PlumbingGraph> graphs{
      PlumbingGraph({{"v", -1}}, {}),
      PlumbingGraph({{"u", -2}, {"v", -1}}, {{"u", "v"}}),
      PlumbingGraph({{"u", -2}, {"v", -1}, {"w", -3}}, {{"u", "v"}, {"v", "w"}}),
      PlumbingGraph({{"u", -1}, {"v", -1}, {"w", -2}}, {{"u", "v"}, {"v", "w"}}),
  };
  const long range = 2;
  for (const auto& g : graphs) {
    const std::size_t n = g.size();
    const auto base = intersection_matrix(g);
    std::set<std::vector<Integer>> expected;
    std::vector<long> digits(n, -range);
    for (;;) {
      std::vector<Integer> v(digits.begin(), digits.end());
      if (std::any_of(v.begin(), v.end(), [](const Integer& x) { return x != 0; })) {
        const auto aug = base.bordered(v, -1);
        if (oracle::cofactor_det(aug) == 0) {
          const auto inv = oracle::determinantal_invariants(aug);
          const bool cyclic = std::count(inv.begin(), inv.end(), Integer(0)) == 1 &&
                              std::all_of(inv.begin(), inv.end(), [](const Integer& d) { return d <= 1; });
          if (cyclic && is_zero_surgery_presentation(reduce(augment(g, v)).result)) expected.insert(v);
        }
      }
      std::size_t k = 0;
      while (k < n && ++digits[k] > range) digits[k++] = -range;
      if (k == n) break;
    }
    const auto hits = surgery_search(g, static_cast<int>(range), static_cast<int>(n), 3);
    std::set<std::vector<Integer>> got;
    for (const auto& h : hits) got.insert(h.links);
    INFO("graph with " << n << " vertices");
    CHECK(got == expected);
    CHECK(std::is_sorted(hits.begin(), hits.end(),
                         [](const SearchHit& a, const SearchHit& b) { return a.links < b.links; }));
  }
}

TEST_CASE("surgery_search on the n = 1 family members") {
  for (auto f : {Family::A, Family::B}) {
    const auto g = family_plumbing({f, 1});
    const auto hits = surgery_search(g, 2, 4);
    CHECK_FALSE(hits.empty());
    for (const auto& h : hits) {
      const auto aug = augment(g, h.links);
      CHECK(determinant(aug.matrix()) == 0);
      CHECK(cokernel(aug.matrix()).is_infinite_cyclic());
      CHECK(is_zero_surgery_presentation(h.reduction.result));
      CHECK(std::count_if(h.links.begin(), h.links.end(), [](const Integer& x) { return x != 0; }) <= 4);
    }
    // The schedule does not change the result.
    const auto serial = surgery_search(g, 2, 4, 1);
    REQUIRE(serial.size() == hits.size());
    for (std::size_t i = 0; i < hits.size(); ++i) CHECK(serial[i].links == hits[i].links);
  }
}

TEST_CASE("family_step") {
  const auto a1 = family_plumbing({Family::A, 1});
  const auto start = augment(a1, ints({0, 0, 0, 1, 0, -1}));
  const auto next = family_step(start);
  CHECK(next.size() == start.size() + 1);
  CHECK(next.component(start.size() - 1).tag == Tag::Gray);
  CHECK(next.component(next.size() - 1).tag == Tag::Black);
  CHECK(next.framing(start.size() - 1) == -2);
  CHECK(next.framing(*next.index_of("am")) == -3);
  CHECK(plumbings_isomorphic(gray_plumbing(next), family_plumbing({Family::A, 2})));
  CHECK(determinant(next.matrix()) == 0);
  CHECK(determinant(next.matrix()) == -determinant(start.matrix()));

  auto undone = blow_down(next, next.size() - 1);
  undone.retag(start.size() - 1, Tag::Black);
  CHECK(undone == start);

  // After one step the default rule would pick the old black curve, not am.
  const auto am = *next.index_of("am");
  const auto default_target = family_step(next);
  CHECK_FALSE(plumbings_isomorphic(gray_plumbing(default_target), family_plumbing({Family::A, 3})));
  CHECK(plumbings_isomorphic(gray_plumbing(family_step(next, am)), family_plumbing({Family::A, 3})));

  // Curve linking two -2 gray components once (c1 and am in family A).
  CHECK_THROWS_AS(family_step(augment(a1, ints({0, 1, 0, 1, 0, 0}))), AmbiguousTarget);
  CHECK_THROWS_AS(family_step(augment(a1, ints({0, 0, 1, 0, 0, 0}))), NotLinked);
  CHECK_THROWS_AS(family_step(augment(a1, ints({0, 0, 1, 0, 0, 0})), *start.index_of("a2")), NotLinked);
  CHECK_THROWS_AS(family_step(FramedLinkMatrix::from_plumbing(a1)), InvalidInput);
}

TEST_CASE("gray_plumbing") {
  FramedLinkMatrix l({{"a", Tag::Gray}, {"b", Tag::Gray}, {"k", Tag::Black}},
                     SymmetricIntMatrix{{-2, -1, 3}, {-1, -3, 0}, {3, 0, -1}});
  const auto g = gray_plumbing(l);
  CHECK(g.size() == 2);
  CHECK(g.edges().size() == 1);
  FramedLinkMatrix bad({{"a", Tag::Gray}, {"b", Tag::Gray}}, SymmetricIntMatrix{{-2, 2}, {2, -3}});
  CHECK_THROWS_AS(gray_plumbing(bad), InvalidInput);
  FramedLinkMatrix loop({{"a", Tag::Gray}, {"b", Tag::Gray}, {"c", Tag::Gray}},
                        SymmetricIntMatrix{{-2, 1, 1}, {1, -2, 1}, {1, 1, -2}});
  CHECK_THROWS_AS(gray_plumbing(loop), InvalidInput);
}
