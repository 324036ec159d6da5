// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "oracles.hpp"

#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>

#include <map>
#include <set>

using namespace orbitcalc;

TEST_CASE("partitions")
{
  for (int n = 0; n <= 16; ++n)
  {
    auto ps = partitions_of(n);
    auto want = oracle::partitions(n);
    REQUIRE(ps.size() == want.size());
    std::set<std::vector<int>> got;
    for (const auto &p: ps)
      got.insert(p.rows());
    REQUIRE(got == std::set<std::vector<int>>(want.begin(), want.end()));
    // Reverse lexicographic order.
    for (std::size_t i = 1; i < ps.size(); ++i)
      REQUIRE(ps[i].rows() < ps[i - 1].rows());
    for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    {
      std::size_t k = 0;
      for (const auto &d: want)
        k += oracle::kind_shape(kind, d) ? 1 : 0;
      REQUIRE(kind_partitions(n, kind).size() == k);
    }
  }
  // DERIVED: p(10) = 42.
  CHECK(partitions_of(10).size() == 42);
}

TEST_CASE("small signature classes")
{
  // DERIVED: YD_-(1,1) holds 2+, 2- and the pair of single boxes.
  CHECK(diagrams_of_signature(Kind::Symplectic, Signature{1, 1}).size() == 3);
  CHECK(diagrams_of_signature(Kind::Orthogonal, Signature{1, 0}).size() == 1);
  // A lone even row is not orthogonal, so only the two single boxes remain.
  CHECK(diagrams_of_signature(Kind::Orthogonal, Signature{1, 1}).size() == 1);
  CHECK(diagrams_of_signature(Kind::Symplectic, Signature{0, 0}).size() == 1);
  CHECK(diagrams_of_signature(Kind::Symplectic, Signature{2, 1}).empty());
  // PAPER: the two pictured members of YD_+(7,9) are listed.
  auto s79 = diagrams_of_signature(Kind::Orthogonal, Signature{7, 9});
  std::set<oracle::Rows> keys;
  for (const auto &D: s79)
    keys.insert(oracle::key(oracle::rows_of(D)));
  CHECK(keys.count(oracle::key({"+-+-+-", "-+-+-+", "-+-", "-"})) == 1);
  CHECK(keys.count(oracle::key({"-+-+-", "+-+-", "-+-+", "-+-"})) == 1);
}

TEST_CASE("enumeration matches brute force up to size 10")
{
  for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    for (int n = 0; n <= 10; ++n)
    {
      auto listed = diagrams_of_size(kind, n);
      std::set<oracle::Rows> got;
      for (const auto &D: listed)
      {
        REQUIRE(validate_signed(D).ok);
        REQUIRE(canonicalize(D) == D);
        got.insert(oracle::key(oracle::rows_of(D)));
      }
      REQUIRE(got.size() == listed.size());
      REQUIRE(got == oracle::all_diagrams(kind, n));

      std::vector<SignedDiagram> streamed;
      for_each_diagram(kind, n, [&](const SignedDiagram &D) { streamed.push_back(D); });
      REQUIRE(streamed == listed);

      std::map<Signature, long long> counts;
      for (const auto &r: got)
      {
        auto [p, q] = oracle::signature(r);
        ++counts[Signature{p, q}];
      }
      REQUIRE(brute_force_counts(kind, n) == counts);
    }
}

TEST_CASE("shape counts follow the multiplicity product")
{
  for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    for (int n = 1; n <= 12; ++n)
      for (const auto &d: kind_partitions(n, kind))
      {
        auto list = diagrams_of_shape(d, kind);
        long long f = shape_count_formula(d, kind);
        REQUIRE(static_cast<long long>(list.size()) == f);
        // Independent product: one factor per free length.
        std::map<int, int> mult;
        for (int x: d.rows())
          if (!oracle::constrained(kind, static_cast<std::size_t>(x)))
            ++mult[x];
        long long want = 1;
        for (auto [len, m]: mult)
          want *= m + 1;
        REQUIRE(f == want);
        for (const auto &D: list)
          REQUIRE(D.shape() == d);
      }
  CHECK(diagrams_of_shape(Partition({3}), Kind::Symplectic).empty());
}

TEST_CASE("diagrams_up_to concatenates sizes")
{
  std::size_t total = 0;
  for (int n = 0; n <= 8; ++n)
    total += diagrams_of_size(Kind::Orthogonal, n).size();
  CHECK(diagrams_up_to(Kind::Orthogonal, 8).size() == total);
  CHECK(diagrams_up_to(Kind::Symplectic, 0).size() == 1);
}
