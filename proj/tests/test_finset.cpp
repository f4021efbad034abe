#include <doctest.h>

#include "fibpoly/finset.hpp"
#include "fibpoly/rng.hpp"
#include "oracles.hpp"

using namespace fibpoly;

TEST_CASE("FinSet validation") {
  CHECK_THROWS_AS(FinSet(-1), structure_error);
  CHECK_THROWS_AS(FinSet(2, {"a"}), structure_error);          // wrong count
  CHECK_THROWS_AS(FinSet(2, {"a", "a"}), structure_error);     // duplicate
  CHECK_NOTHROW(FinSet(2, {"a", "b"}));
  CHECK(FinSet(3) == FinSet(3));
  CHECK(FinSet(3) != FinSet(3, {"x", "y", "z"}));
}

TEST_CASE("FinMap validation and composition") {
  FinSet a(2), b(3);
  CHECK_THROWS_AS(FinMap(a, b, {0}), structure_error);         // wrong length
  CHECK_THROWS_AS(FinMap(a, b, {0, 3}), structure_error);      // out of range
  FinMap f{a, b, {2, 0}};
  FinMap g{b, a, {1, 1, 0}};
  CHECK(compose(g, f) == FinMap{a, a, {0, 1}});
  CHECK(compose(f, identity(a)) == f);
  CHECK(compose(identity(b), f) == f);
  CHECK_THROWS_AS(compose(f, f), structure_error);
}

TEST_CASE("mono/epi/iso") {
  FinSet two(2), three(3);
  FinMap inj{two, three, {2, 0}};
  CHECK(is_mono(inj));
  CHECK(!is_epi(inj));
  FinMap surj{three, two, {0, 1, 0}};
  CHECK(is_epi(surj));
  CHECK(!is_mono(surj));
  FinMap perm{three, three, {2, 0, 1}};
  CHECK(is_iso(perm));
  CHECK(compose(inverse(perm), perm) == identity(three));
  CHECK(compose(perm, inverse(perm)) == identity(three));
  CHECK_THROWS_AS(inverse(surj), structure_error);
}

TEST_CASE("product is first-factor-major and labels combine") {
  FinSet a(2, {"x", "y"}), b(2, {"0", "1"});
  Product p = product(a, b);
  CHECK(p.carrier.size == 4);
  REQUIRE(p.carrier.labels.has_value());
  CHECK((*p.carrier.labels)[p.index(1, 0)] == "(y,0)");
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(p.pr1(p.index(i, j)) == i);
      CHECK(p.pr2(p.index(i, j)) == j);
    }
}

TEST_CASE("pairing and product of maps commute with projections") {
  Rng rng(5);
  for (int n = 0; n < 20; ++n) {
    FinSet x(1 + rng.below(3)), a(1 + rng.below(3)), b(1 + rng.below(3));
    FinMap f = random_finmap(rng, x, a), g = random_finmap(rng, x, b);
    Product p = product(a, b);
    FinMap pair = pair_into_product(p, f, g);
    CHECK(compose(p.pr1, pair) == f);
    CHECK(compose(p.pr2, pair) == g);
    FinMap h = random_finmap(rng, a, x);
    FinMap k = random_finmap(rng, b, a);
    Product q = product(x, a);
    FinMap pm = product_map(h, k);
    CHECK(compose(q.pr1, pm) == compose(h, p.pr1));
    CHECK(compose(q.pr2, pm) == compose(k, p.pr2));
  }
}

TEST_CASE("pullback enumerates exactly the matching pairs, a-major") {
  Rng rng(9);
  for (int n = 0; n < 30; ++n) {
    FinSet c(1 + rng.below(3)), a(rng.below(4)), b(rng.below(4));
    FinMap f = random_finmap(rng, a, c), g = random_finmap(rng, b, c);
    Pullback pb = pullback(f, g);
    CHECK(oracles::is_pullback_brute(f, g, pb));
    for (int i = 1; i < pb.carrier.size; ++i)
      CHECK(pb.elems[i - 1] < pb.elems[i]);  // a-major lexicographic
    for (int i = 0; i < pb.carrier.size; ++i)
      CHECK(pb.index(pb.pr1(i), pb.pr2(i)) == i);
  }
}

TEST_CASE("all_maps has |B|^|A| entries, lexicographic") {
  CHECK(all_maps(FinSet(3), FinSet(2)).size() == 8);
  CHECK(all_maps(FinSet(0), FinSet(0)).size() == 1);
  CHECK(all_maps(FinSet(2), FinSet(0)).empty());
  auto ms = all_maps(FinSet(2), FinSet(2));
  CHECK(ms.front().table == std::vector<int>{0, 0});
  CHECK(ms.back().table == std::vector<int>{1, 1});
}

TEST_CASE("nondecreasing_tables: one representative per relabeling class") {
  auto ts = nondecreasing_tables(3, 2);  // multisets of size 3 from 2: 4 of them
  CHECK(ts.size() == 4);
  for (const auto& t : ts)
    for (size_t i = 1; i < t.size(); ++i) CHECK(t[i - 1] <= t[i]);
  CHECK(nondecreasing_tables(0, 0).size() == 1);
  CHECK(nondecreasing_tables(2, 0).empty());
  // C(4+3-1, 4) = 15 multisets of size 4 from 3 symbols
  CHECK(nondecreasing_tables(4, 3).size() == 15);
}

TEST_CASE("terminal and constants") {
  CHECK(terminal().size == 1);
  FinSet a(3);
  CHECK(unique_to_terminal(a) == constant_map(a, terminal(), 0));
  CHECK_THROWS_AS(constant_map(a, FinSet(2), 2), structure_error);
}
