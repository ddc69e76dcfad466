#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <vector>

#include "heaplab/generate.hpp"
#include "heaplab/heap.hpp"
#include "heaplab/measures.hpp"
#include "heaplab/text.hpp"

using namespace heaplab;

namespace {

std::vector<Strategy> all_strategies() {
  return {Strategy::skew(), Strategy::weight_biased(), Strategy::rank_biased(),
          Strategy::randomized(0.5, 42)};
}

}  // namespace

TEST_CASE("empty and single") {
  CHECK(is_empty(empty()));
  CHECK(empty().size() == 0);
  CHECK(empty().rank() == 0);
  CHECK(min_key(empty()).is_top());

  const Tree s = single(7);
  CHECK(!is_empty(s));
  CHECK(s.size() == 1);
  CHECK(s.rank() == 1);
  CHECK(min_key(s) == ExtendedKey(7));

  Strategy skew = Strategy::skew();
  CostMeter m;
  CHECK(is_empty(del_min(s, skew, m)));
  CHECK(m.comparisons == 0);  // rank () + rank ()
}

TEST_CASE("extended key ordering") {
  CHECK(ExtendedKey::top() == ExtendedKey::top());
  CHECK(ExtendedKey(3) < ExtendedKey::top());
  CHECK(ExtendedKey::top() > ExtendedKey(1'000'000));
  CHECK(ExtendedKey(1) <= ExtendedKey(1));
  CHECK(ExtendedKey(-5) < ExtendedKey(0));
  CHECK_THROWS_AS((void)ExtendedKey::top().key(), EmptyHeapError);
}

TEST_CASE("bal follows the strategy rule") {
  CostMeter m;
  SUBCASE("weight-biased swaps when left does not dominate") {
    Strategy wb = Strategy::weight_biased();
    const Tree r = bal(empty(), 1, single(2), wb, m);
    CHECK(to_text(r) == "((() 2 ()) 1 ())");
    CHECK(m.comparisons == 0);
    CHECK(m.structural == 1);
  }
  SUBCASE("rank tie swaps") {
    Strategy rb = Strategy::rank_biased();
    const Tree r = bal(single(2), 1, single(3), rb, m);
    CHECK(to_text(r) == "((() 3 ()) 1 (() 2 ()))");
  }
  SUBCASE("weight-biased keeps a dominant left") {
    Strategy wb = Strategy::weight_biased();
    const Tree two = Tree::node(single(5), 4, empty());
    const Tree r = bal(two, 1, single(9), wb, m);
    CHECK(r.left() == two);
    CHECK(r.right() == single(9));
  }
  SUBCASE("randomized p=1 always swaps, p=0 never") {
    Strategy p1 = Strategy::randomized(1.0, 7);
    Strategy p0 = Strategy::randomized(0.0, 7);
    for (int i = 0; i < 50; ++i) {
      const Tree t = single(2 * i + 2), u = single(2 * i + 3);
      CHECK(bal(t, 1, u, p1, m) == Tree::node(u, 1, t));
      CHECK(bal(t, 1, u, p0, m) == Tree::node(t, 1, u));
    }
    CHECK(p1.draws() == 50);
  }
}

TEST_CASE("meld examples") {
  Strategy skew = Strategy::skew();
  CostMeter m;

  CHECK(is_empty(meld(empty(), empty(), skew, m)));
  CHECK(m.comparisons == 0);

  m.reset();
  const Tree z = meld(single(1), single(2), skew, m);
  CHECK(to_text(z) == "((() 2 ()) 1 ())");
  CHECK(m.comparisons == 2);

  m.reset();
  const Tree d = del_min(z, skew, m);
  CHECK(d == single(2));
  CHECK(m.comparisons == 1);  // rank (2) + rank ()

  m.reset();
  CHECK(insert(5, empty(), skew, m) == single(5));
  CHECK(m.comparisons == 1);

  m.reset();
  CHECK(to_text(insert(1, single(2), skew, m)) == "((() 2 ()) 1 ())");
  CHECK(m.comparisons == 2);

  CHECK_THROWS_AS((void)del_min(empty(), skew, m), EmptyHeapError);
}

TEST_CASE("ties prefer the first argument's root") {
  Strategy skew = Strategy::skew();
  CostMeter m;
  const Tree x = Tree::node(empty(), 5, empty());
  const Tree y = Tree::node(single(9), 5, empty());
  const Tree z = meld(x, y, skew, m);
  // both roots are 5; x's node must win the first comparison, so the result
  // root carries x's (empty) left subtree on its right after the swap
  CHECK(z.key() == 5);
  CHECK(z.right().is_empty());
  CHECK(z.left() == Tree::node(empty(), 5, single(9)));
}

TEST_CASE("cost law: comparisons == rank x + rank y, spine oracle") {
  SplitMix64 rng(2024);
  for (auto& strat : all_strategies()) {
    Strategy s = strat;
    for (int i = 0; i < 1000; ++i) {
      const Tree x = random_heap(s.kind(), log_uniform_size(rng, 512), rng);
      const Tree y = random_heap(s.kind(), log_uniform_size(rng, 512), rng);
      const std::uint64_t rx = spine_rank(x), ry = spine_rank(y);
      CostMeter m;
      const Tree z = meld(x, y, s, m);
      REQUIRE(m.comparisons == rx + ry);
      REQUIRE(z.size() == x.size() + y.size());
      if (!z.is_empty()) {
        const std::uint64_t expect = spine_rank(z.left()) + spine_rank(z.right());
        m.reset();
        (void)del_min(z, s, m);
        REQUIRE(m.comparisons == expect);
      }
    }
  }
}

TEST_CASE("structural comparisons are metered separately") {
  SplitMix64 rng(5);
  const Tree x = random_heap(StrategyKind::WeightBiased, 100, rng);
  const Tree y = random_heap(StrategyKind::WeightBiased, 80, rng);
  CostMeter m;
  Strategy wb = Strategy::weight_biased();
  (void)meld(x, y, wb, m);
  CHECK(m.structural == m.comparisons);  // one bal per merge round

  m.reset();
  Strategy skew = Strategy::skew();
  (void)meld(x, y, skew, m);
  CHECK(m.structural == 0);
}

TEST_CASE("closure: operations preserve strategy validity") {
  SplitMix64 rng(99);
  for (auto& strat : all_strategies()) {
    Strategy s = strat;
    Tree h;
    CostMeter m;
    for (int i = 0; i < 300; ++i) {
      const auto roll = rng.next_below(10);
      if (roll < 6)
        h = insert(static_cast<Key>(rng.next_below(1000)), h, s, m);
      else if (roll < 8 && !h.is_empty())
        h = del_min(h, s, m);
      else
        h = meld(h, random_heap(s.kind(), rng.next_below(64), rng), s, m);
      REQUIRE(validate(h, s).empty());
    }
  }
}

TEST_CASE("multiset preservation: drain equals sorted input") {
  SplitMix64 rng(123);
  for (auto& strat : all_strategies()) {
    Strategy s = strat;
    std::vector<Key> keys;
    for (int i = 0; i < 500; ++i) keys.push_back(rng.next_in_range(-50, 50));
    Tree h;
    CostMeter m;
    for (Key k : keys) h = insert(k, h, s, m);
    std::vector<Key> drained;
    while (!h.is_empty()) {
      drained.push_back(h.key());
      h = del_min(h, s, m);
    }
    std::vector<Key> expect = keys;
    std::sort(expect.begin(), expect.end());
    REQUIRE(drained == expect);
  }
}

TEST_CASE("persistence: inputs survive the meld") {
  SplitMix64 rng(7);
  Strategy wb = Strategy::weight_biased();
  const Tree x = random_heap(StrategyKind::WeightBiased, 200, rng);
  const Tree y = random_heap(StrategyKind::WeightBiased, 150, rng);
  const std::string xs = to_text(x), ys = to_text(y);
  CostMeter m;
  const Tree z = meld(x, y, wb, m);
  CHECK(validate(x, wb).empty());
  CHECK(validate(y, wb).empty());
  CHECK(to_text(x) == xs);
  CHECK(to_text(y) == ys);
  CHECK(z.size() == x.size() + y.size());
}

TEST_CASE("randomized p=1 degenerates to skew, node for node") {
  SplitMix64 rng(31337);
  Strategy skew = Strategy::skew();
  Strategy p1 = Strategy::randomized(1.0, 55);
  Tree a, b;
  CostMeter ma, mb;
  for (int i = 0; i < 400; ++i) {
    const Key k = rng.next_in_range(0, 999);
    const auto roll = rng.next_below(4);
    if (roll == 0 && !a.is_empty()) {
      a = del_min(a, skew, ma);
      b = del_min(b, p1, mb);
    } else {
      a = insert(k, a, skew, ma);
      b = insert(k, b, p1, mb);
    }
    REQUIRE(a == b);
  }
  CHECK(ma.comparisons == mb.comparisons);
}

TEST_CASE("validate reports named violations") {
  Strategy wb = Strategy::weight_biased();
  Strategy rb = Strategy::rank_biased();
  CHECK(validate(empty(), wb).empty());

  const Tree bad_weight = Tree::node(empty(), 3, single(5));
  const auto v1 = validate(bad_weight, wb);
  REQUIRE(v1.size() == 1);
  CHECK(v1[0].what == "weight violation");
  CHECK(v1[0].path == "root");
  CHECK(v1[0].str() == "weight violation at root");
  // the same tree is also rank-broken but heap-valid
  CHECK(validate(bad_weight, rb).size() == 1);
  Strategy skew = Strategy::skew();
  CHECK(validate(bad_weight, skew).empty());

  const Tree bad_heap = Tree::node(single(1), 4, empty());
  const auto v2 = validate(bad_heap, skew);
  REQUIRE(v2.size() == 1);
  CHECK(v2[0].what == "heap violation (left child smaller)");
  CHECK(v2[0].path == "root");

  const Tree nested = Tree::node(Tree::node(empty(), 2, single(5)), 1, single(9));
  const auto v3 = validate(nested, wb);
  REQUIRE(v3.size() == 1);
  CHECK(v3[0].path == "L");
}

TEST_CASE("deep spines: meld and teardown stay iterative") {
  // A right chain of 10^6 nodes is a valid skew heap.
  constexpr int kN = 1'000'000;
  Tree chain;
  for (int k = kN; k >= 1; --k) chain = Tree::node(Tree(), k, chain);
  CHECK(chain.rank() == kN);
  Strategy skew = Strategy::skew();
  CostMeter m;
  const Tree flipped = meld(chain, empty(), skew, m);
  CHECK(m.comparisons == kN);
  CHECK(flipped.size() == kN);
  CHECK(flipped.rank() == 1);  // everything swapped onto the left
  // both trees go out of scope here; destruction must not recurse
}

TEST_CASE("text round trip and parser errors") {
  CHECK(to_text(empty()) == "()");
  CHECK(to_text(single(-7)) == "(() -7 ())");
  CHECK(tree_from_text("((() 2 ()) 1 ())") == Tree::node(single(2), 1, empty()));
  CHECK(tree_from_text("  (\t(() 2 ())   1 () )  ") == Tree::node(single(2), 1, empty()));
  CHECK(tree_from_text("(() -7 ())") == single(-7));

  SplitMix64 rng(4242);
  for (int i = 0; i < 200; ++i) {
    const Tree x = random_heap(StrategyKind::Skew, rng.next_below(200), rng, -999, 999);
    REQUIRE(tree_from_text(to_text(x)) == x);
  }

  CHECK_THROWS_AS((void)tree_from_text(""), TreeParseError);
  CHECK_THROWS_AS((void)tree_from_text("("), TreeParseError);
  CHECK_THROWS_AS((void)tree_from_text("(())"), TreeParseError);
  CHECK_THROWS_AS((void)tree_from_text("(1)"), TreeParseError);
  CHECK_THROWS_AS((void)tree_from_text("(() 1"), TreeParseError);
  CHECK_THROWS_AS((void)tree_from_text("(() 1 ()) x"), TreeParseError);
  CHECK_THROWS_AS((void)tree_from_text("hello"), TreeParseError);
  CHECK_THROWS_AS((void)tree_from_text("() ()"), TreeParseError);
}
