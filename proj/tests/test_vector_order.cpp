// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "oracles.hpp"

#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>
#include <orbitcalc/infchar.hpp>
#include <orbitcalc/vector_order.hpp>

#include <map>
#include <random>
#include <set>

using namespace orbitcalc;

namespace {

HalfIntVector V (std::initializer_list<Rational> xs) { return HalfIntVector(xs); }

Rational half (long long n) { return Rational(n, 2); }

HalfIntVector random_vector (std::mt19937_64 &rng, std::size_t len)
{
  std::uniform_int_distribution<int> d(-6, 12);
  HalfIntVector v;
  for (std::size_t i = 0; i < len; ++i)
    v.push_back(half(d(rng)));
  return v;
}

HalfIntVector entrywise_add (const HalfIntVector &a, const HalfIntVector &b)
{
  HalfIntVector out;
  for (std::size_t i = 0; i < a.size(); ++i)
    out.push_back(a[i] + b[i]);
  return out;
}

} // namespace

TEST_CASE("sequence orders")
{
  HalfIntVector a = V({3, 1, half(1)});
  CHECK(seq_preceq(a, a));
  CHECK_FALSE(seq_prec(a, a));
  CHECK(compare_sequences(a, a) == OrderResult::Equal);
  CHECK(seq_preceq(V({1, 1}), V({2, 0})));
  CHECK_FALSE(seq_preceq(V({2, 0}), V({1, 1})));
  CHECK(compare_sequences(V({1, 1}), V({2, 0})) == OrderResult::LessEq);
  CHECK(compare_sequences(V({0, 1}), V({2, 0})) == OrderResult::LessStrict);
  CHECK(compare_sequences(V({2, 0}), V({0, 1})) == OrderResult::GreaterStrict);
  CHECK(compare_sequences(V({2, -2}), V({1, 0})) == OrderResult::Incomparable);

  // DERIVED: the m = r = 3 instance of Lemma i2, by hand.
  HalfIntVector lhs = bar_sort(concat(segment(SegmentKind::SymplecticMinus, 3),
                                      segment(SegmentKind::OrthogonalPlus, 3)));
  CHECK(lhs == V({half(3), half(1), half(1)}));
  HalfIntVector rhs = scale(Rational(3, 6), segment(SegmentKind::SymplecticMinus, 6));
  CHECK(rhs == V({half(3), 1, half(1)}));
  CHECK(seq_preceq(lhs, rhs));
}

TEST_CASE("length mismatch needs explicit padding")
{
  CHECK_THROWS_AS(seq_preceq(V({1}), V({1, 1})), Error);
  CHECK_THROWS_AS(seq_prec(V({1}), V({1, 1})), Error);
  CHECK(seq_preceq(V({1}), V({1, 1}), Padding::ZeroPad));
  CHECK_FALSE(seq_prec(V({1}), V({1, 1}), Padding::ZeroPad));
}

TEST_CASE("orders agree with partial sums on random vectors")
{
  std::mt19937_64 rng(7);
  for (int it = 0; it < 5000; ++it)
  {
    std::size_t len = 1 + it % 8;
    HalfIntVector a = random_vector(rng, len), b = random_vector(rng, len);
    REQUIRE(seq_preceq(a, b) == oracle::partial_sums_leq(a, b, false));
    REQUIRE(seq_prec(a, b) == oracle::partial_sums_leq(a, b, true));
  }
}

TEST_CASE("bar_sort")
{
  CHECK(bar_sort(V({0, 2, 1})) == V({2, 1, 0}));
  CHECK(bar_sort(V({3, 2, 2})) == V({3, 2, 2}));
  // DERIVED: segments of the intro transpose (9,7,5,5,3,1), sorted.
  HalfIntVector I = infchar_segments(Partition({6, 5, 5, 4, 4, 2, 2, 1, 1}), Kind::Symplectic);
  CHECK(bar_sort(I) == oracle::sorted_desc(oracle::infchar({6, 5, 5, 4, 4, 2, 2, 1, 1},
                                                           Kind::Symplectic)));
  CHECK(sum(I) == sum(bar_sort(I)));
}

TEST_CASE("triviality lemma on sorted random vectors")
{
  std::mt19937_64 rng(11);
  int hits[4] = {0, 0, 0, 0};
  for (int it = 0; it < 20000; ++it)
  {
    std::size_t len = 1 + it % 8;
    HalfIntVector l = bar_sort(random_vector(rng, len)), m = bar_sort(random_vector(rng, len));
    HalfIntVector l2 = bar_sort(random_vector(rng, len)), m2 = bar_sort(random_vector(rng, len));
    if (seq_prec(l, m) && seq_preceq(l2, m2))
    {
      ++hits[0];
      REQUIRE(seq_prec(bar_sort(entrywise_add(l, l2)), bar_sort(entrywise_add(m, m2))));
    }
    if (seq_prec(l, m) && seq_prec(l2, m2))
    {
      ++hits[1];
      REQUIRE(seq_prec(bar_sort(concat(l, l2)), bar_sort(concat(m, m2))));
    }
    bool le = true, lt = true;
    for (std::size_t i = 0; i < len; ++i)
    {
      le = le && l[i] <= m[i];
      lt = lt && l[i] < m[i];
    }
    if (le)
    {
      ++hits[2];
      REQUIRE(seq_preceq(l, m));
    }
    if (lt)
    {
      ++hits[3];
      REQUIRE(seq_prec(l, m));
    }
  }
  for (int h: hits)
    CHECK(h > 50);
}

TEST_CASE("dominance examples")
{
  CHECK(dominance_leq(Partition({2, 2}), Partition({4})) == OrderResult::LessEq);
  CHECK(dominance_leq(Partition({4}), Partition({2, 2})) == OrderResult::GreaterEq);
  CHECK(dominance_leq(Partition({3, 3}), Partition({4, 1, 1})) == OrderResult::Incomparable);
  CHECK(dominance_leq(Partition({3, 1}), Partition({3, 1})) == OrderResult::Equal);
  CHECK_THROWS_AS(dominance_leq(Partition({2}), Partition({1})), Error);
  for (const auto &d: partitions_of(9))
  {
    OrderResult r = dominance_leq(Partition(std::vector<int>(9, 1)), d);
    CHECK((r == OrderResult::LessEq || r == OrderResult::Equal));
  }
}

TEST_CASE("dominance is a partial order and matches the transpose oracle")
{
  for (int n = 1; n <= 12; ++n)
  {
    auto ps = oracle::partitions(n);
    std::vector<std::vector<bool>> leq(ps.size(), std::vector<bool>(ps.size()));
    for (std::size_t i = 0; i < ps.size(); ++i)
      for (std::size_t j = 0; j < ps.size(); ++j)
      {
        OrderResult r = dominance_leq(Partition(ps[i]), Partition(ps[j]));
        bool l = r == OrderResult::LessEq || r == OrderResult::Equal;
        leq[i][j] = l;
        REQUIRE(l == oracle::closure_leq(ps[i], ps[j]));
        REQUIRE((r == OrderResult::Equal) == (i == j));
      }
    for (std::size_t i = 0; i < ps.size(); ++i)
    {
      REQUIRE(leq[i][i]);
      for (std::size_t j = 0; j < ps.size(); ++j)
      {
        if (i != j)
          REQUIRE_FALSE((leq[i][j] && leq[j][i]));
        if (n <= 9)
          for (std::size_t k = 0; k < ps.size(); ++k)
            if (leq[i][j] && leq[j][k])
              REQUIRE(leq[i][k]);
      }
    }
  }
}

TEST_CASE("dominance equals the transitive closure of single-box moves")
{
  // DERIVED: d1 lies below d2 iff d1 is reached from d2 by moving boxes to
  // lower rows one at a time. Compared on symplectic pairs up to size 8.
  for (int n = 1; n <= 8; ++n)
  {
    auto ps = oracle::partitions(n);
    std::map<std::vector<int>, std::set<std::vector<int>>> below;
    for (const auto &p: ps)
    {
      std::set<std::vector<int>> seen{p};
      std::vector<std::vector<int>> stack{p};
      while (!stack.empty())
      {
        auto cur = stack.back();
        stack.pop_back();
        for (std::size_t i = 0; i < cur.size(); ++i)
          for (std::size_t j = i + 1; j <= cur.size(); ++j)
          {
            auto nxt = cur;
            nxt[i] -= 1;
            if (j == cur.size())
              nxt.push_back(1);
            else
              nxt[j] += 1;
            if (!std::is_sorted(nxt.rbegin(), nxt.rend()))
              continue;
            std::erase(nxt, 0);
            if (seen.insert(nxt).second)
              stack.push_back(nxt);
          }
      }
      below[p] = seen;
    }
    for (const auto &a: ps)
      for (const auto &b: ps)
      {
        if (!oracle::kind_shape(Kind::Symplectic, a) || !oracle::kind_shape(Kind::Symplectic, b))
          continue;
        OrderResult r = dominance_leq(Partition(a), Partition(b));
        bool l = r == OrderResult::LessEq || r == OrderResult::Equal;
        REQUIRE(l == (below[b].count(a) == 1));
      }
  }
}

TEST_CASE("rational formatting")
{
  CHECK(to_string(half(3)) == "3/2");
  CHECK(to_string(Rational(2)) == "2");
  CHECK(parse_rational("-5/2") == Rational(-5, 2));
  CHECK(parse_rational("4") == Rational(4));
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK(to_string(V({half(3), 1})) == "(3/2,1)");
}
