// SPDX-License-Identifier: MIT
#include <doctest.h>

#include "fixtures.hpp"
#include "oracles.hpp"

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>

#include <random>

using namespace orbitcalc;

namespace {

Partition P (std::vector<int> v) { return Partition(std::move(v)); }

SignedRow R (int len, char s) { return {len, s == '+' ? Sign::Plus : Sign::Minus}; }

oracle::Rows canon_rows (const SignedDiagram &D) { return oracle::key(oracle::rows_of(D)); }

} // namespace

TEST_CASE("partition construction rejects bad rows")
{
  CHECK_THROWS_AS(P({1, 2}), Error);
  CHECK_THROWS_AS(P({2, 0}), Error);
  CHECK(Partition::from_unsorted({1, 0, 3, 2}) == P({3, 2, 1}));
  CHECK(P({}).size() == 0);
}

TEST_CASE("transpose")
{
  // PAPER: the pictured (7,3,1,1) has transpose (4,2,2,1,1,1,1).
  CHECK(transpose(P({7, 3, 1, 1})) == P({4, 2, 2, 1, 1, 1, 1}));
  CHECK(transpose(P({})) == P({}));
  // DERIVED: column heights counted by the oracle.
  CHECK(transpose(P({3, 3, 2, 1, 1})).rows() == oracle::transpose({3, 3, 2, 1, 1}));
  CHECK(transpose(P({3, 3, 2, 1, 1})) == P({5, 3, 2}));

  for (int n = 0; n <= 12; ++n)
    for (const auto &d: oracle::partitions(n))
    {
      Partition p(d);
      CHECK(transpose(p).rows() == oracle::transpose(d));
      CHECK(transpose(transpose(p)) == p);
    }
}

TEST_CASE("deleting columns of the worked symplectic example")
{
  // PAPER: d = [3^2, 2, 1^2] is symplectic, d-1 orthogonal, d-2 symplectic.
  Partition d = P({3, 3, 2, 1, 1});
  CHECK(validate_partition_kind(d, Kind::Symplectic));
  CHECK(delete_columns(d, 0) == d);
  CHECK(delete_columns(d, 1) == P({2, 2, 1}));
  CHECK(validate_partition_kind(delete_columns(d, 1), Kind::Orthogonal));
  CHECK(delete_columns(d, 2) == P({1, 1}));
  CHECK(validate_partition_kind(delete_columns(d, 2), Kind::Symplectic));
  CHECK(delete_columns(d, 3).empty());
  CHECK(delete_columns(d, 7).empty());
  CHECK_FALSE(validate_partition_kind(P({3}), Kind::Symplectic));
}

TEST_CASE("column deletion alternates symplectic and orthogonal shapes up to size 30")
{
  for (int n = 0; n <= 30; ++n)
    for (const auto &d: oracle::partitions(n))
    {
      Partition p(d);
      bool sp = oracle::kind_shape(Kind::Symplectic, d);
      bool o = oracle::kind_shape(Kind::Orthogonal, d);
      REQUIRE(validate_partition_kind(p, Kind::Symplectic) == sp);
      REQUIRE(validate_partition_kind(p, Kind::Orthogonal) == o);
      if (sp)
        REQUIRE(validate_partition_kind(delete_columns(p, 1), Kind::Orthogonal));
      if (o)
        REQUIRE(validate_partition_kind(delete_columns(p, 1), Kind::Symplectic));
    }
}

TEST_CASE("validity of pictured diagrams")
{
  // PAPER: the introduction diagram and both YD_+(7,9) pictures are valid.
  CHECK(validate_signed(fixtures::intro()).ok);
  CHECK(validate_signed(fixtures::o79_left()).ok);
  CHECK(validate_signed(fixtures::o79_right()).ok);
  CHECK(signature(fixtures::o79_left()) == Signature{7, 9});
  CHECK(signature(fixtures::o79_right()) == Signature{7, 9});
  CHECK(group_of(fixtures::o79_left()) == GroupLabel::o(7, 9));

  SignedDiagram bad(Kind::Symplectic, {R(1, '-'), R(1, '-')});
  auto v = validate_signed(bad);
  CHECK_FALSE(v.ok);
  CHECK_FALSE(v.violations.empty());

  SignedDiagram odd_count(Kind::Orthogonal, {R(2, '+')});
  CHECK_FALSE(validate_signed(odd_count).ok);
  SignedDiagram increasing(Kind::Orthogonal, {R(1, '+'), R(3, '+')});
  CHECK_FALSE(validate_signed(increasing).ok);
}

TEST_CASE("validate_signed agrees with the box-string rules")
{
  // DERIVED: every sign choice on every shape up to size 8 in printed order.
  for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    for (int n = 1; n <= 8; ++n)
      for (const auto &d: oracle::partitions(n))
        for (unsigned long mask = 0; mask < (1ul << d.size()); ++mask)
        {
          oracle::Rows rows;
          for (std::size_t i = 0; i < d.size(); ++i)
            rows.push_back(oracle::row_string(d[i], (mask >> i) & 1 ? '-' : '+'));
          REQUIRE(validate_signed(oracle::diagram_of(kind, rows)).ok == oracle::valid(kind, rows));
        }
}

TEST_CASE("introduction signature sequence")
{
  // PAPER: [(15,15), (10,11), (7,7), (5,4), (2,2), (1,0)].
  SignedDiagram D = fixtures::intro();
  CHECK(group_of(D) == GroupLabel::mp(30));
  auto want = fixtures::intro_signatures();
  for (std::size_t i = 0; i < want.size(); ++i)
  {
    CHECK(signature(D) == want[i]);
    if (i == 1)
      CHECK(group_of(D) == GroupLabel::o(10, 11));
    D = delete_column_signed(D);
  }
  CHECK(D.empty());
  CHECK(signature(SignedDiagram{}) == Signature{0, 0});
}

TEST_CASE("delete_column_signed matches the box-string oracle up to size 10")
{
  for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    for (int n = 0; n <= 10; ++n)
      for (const auto &D: diagrams_of_size(kind, n))
      {
        SignedDiagram E = delete_column_signed(D);
        REQUIRE(E.kind == opposite(kind));
        REQUIRE(validate_signed(E).ok);
        REQUIRE(E.shape() == delete_columns(D.shape(), 1));
        REQUIRE(canon_rows(E) == oracle::key(oracle::delete_first_column(kind, oracle::rows_of(D))));
        // Raw deletion keeps the same box strings before normalization.
        REQUIRE(oracle::key(oracle::normalize(opposite(kind), oracle::rows_of(delete_column_raw(D))))
                == canon_rows(E));
      }
  SignedDiagram box(Kind::Orthogonal, {R(1, '+')});
  CHECK(delete_column_signed(box).empty());
}

TEST_CASE("signature totals")
{
  for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    for (const auto &D: diagrams_up_to(kind, 9))
    {
      Signature s = signature(D);
      auto [p, q] = oracle::signature(oracle::rows_of(D));
      REQUIRE(s == Signature{p, q});
      REQUIRE(s.total() == D.shape().size());
      if (kind == Kind::Symplectic)
        REQUIRE(s.plus == s.minus);
    }
}

TEST_CASE("tau")
{
  // PAPER: the pictured example flips the rows of length 4 and 2 only.
  CHECK(equivalent(tau(fixtures::tau_before()), fixtures::tau_after()));
  CHECK(equivalent(tau(fixtures::tau_after()), fixtures::tau_before()));
  CHECK_THROWS_AS(tau(fixtures::o79_left()), Error);

  SignedDiagram odd_only(Kind::Symplectic, {R(3, '-'), R(3, '+'), R(1, '-'), R(1, '+')});
  CHECK(equivalent(tau(odd_only), odd_only));

  auto all = diagrams_up_to(Kind::Symplectic, 12);
  std::mt19937_64 rng(20261014);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int i = 0; i < 1000; ++i)
  {
    const SignedDiagram &D = all[pick(rng)];
    SignedDiagram T = tau(D);
    REQUIRE(validate_signed(T).ok);
    REQUIRE(equivalent(tau(T), D));
    oracle::Rows want;
    for (const auto &r: oracle::rows_of(D))
      want.push_back(r.size() % 2 == 0 ? oracle::row_string(static_cast<int>(r.size()),
                                                             r[0] == '+' ? '-' : '+')
                                       : r);
    REQUIRE(canon_rows(T) == oracle::key(want));
  }
}

TEST_CASE("negate follows the row-length rule")
{
  for (const auto &D: diagrams_up_to(Kind::Symplectic, 10))
    REQUIRE(equivalent(negate(D), tau(D)));
  for (const auto &D: diagrams_up_to(Kind::Orthogonal, 10))
    REQUIRE(equivalent(negate(D), D));
  CHECK(negate(SignedDiagram{}).empty());
}

TEST_CASE("canonical form")
{
  SignedDiagram a(Kind::Symplectic, {R(4, '+'), R(4, '-')});
  SignedDiagram b(Kind::Symplectic, {R(4, '-'), R(4, '+')});
  CHECK(equivalent(a, b));
  CHECK(canonicalize(b) == a);
  CHECK_FALSE(equivalent(a, SignedDiagram(Kind::Symplectic, {R(4, '+'), R(2, '+'), R(2, '+')})));

  // DERIVED: the printed intro diagram has 4- above 4+, so it is not in
  // canonical order; its canonical form swaps exactly those two rows.
  SignedDiagram printed = fixtures::intro();
  SignedDiagram c = canonicalize(printed);
  CHECK(c != printed);
  CHECK(c.rows[3] == R(4, '+'));
  CHECK(c.rows[4] == R(4, '-'));
  CHECK(c == intro_diagram());
  CHECK(canonicalize(c) == c);
  CHECK(normalize_constrained(printed) == c);
}
