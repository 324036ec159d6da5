// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/error.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

namespace orbitcalc {

Partition::Partition (std::vector<int> rows)
  : rows_(std::move(rows))
{
  for (std::size_t j = 0; j < rows_.size(); ++j)
  {
    if (rows_[j] <= 0)
      throw Error("partition rows must be positive");
    if (j > 0 && rows_[j] > rows_[j - 1])
      throw Error("partition rows must be weakly decreasing");
  }
}

Partition Partition::from_unsorted (std::vector<int> rows)
{
  std::erase_if(rows, [](int r) { return r <= 0; });
  std::sort(rows.begin(), rows.end(), std::greater<int>());
  return Partition(std::move(rows));
}

int Partition::size () const noexcept
{
  return std::accumulate(rows_.begin(), rows_.end(), 0);
}

int Partition::multiplicity (int length) const noexcept
{
  return static_cast<int>(std::count(rows_.begin(), rows_.end(), length));
}

std::string Partition::to_string () const
{
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < rows_.size(); ++j)
    os << (j ? "," : "") << rows_[j];
  os << ')';
  return os.str();
}

Kind opposite (Kind k) noexcept
{
  return k == Kind::Symplectic ? Kind::Orthogonal : Kind::Symplectic;
}

Sign opposite (Sign s) noexcept
{
  return s == Sign::Plus ? Sign::Minus : Sign::Plus;
}

char sign_char (Sign s) noexcept
{
  return s == Sign::Plus ? '+' : '-';
}

std::string kind_name (Kind k)
{
  return k == Kind::Symplectic ? "symplectic" : "orthogonal";
}

Sign SignedRow::box (int c) const noexcept
{
  return (c % 2 == 1) ? leading : opposite(leading);
}

GroupLabel GroupLabel::mp (int two_n)
{
  GroupLabel g;
  g.kind = Kind::Symplectic;
  g.n = two_n / 2;
  g.p = g.q = g.n;
  return g;
}

GroupLabel GroupLabel::o (int p, int q)
{
  GroupLabel g;
  g.kind = Kind::Orthogonal;
  g.p = p;
  g.q = q;
  g.n = 0;
  return g;
}

std::string GroupLabel::to_string () const
{
  if (kind == Kind::Symplectic)
    return "Mp(" + std::to_string(2 * n) + ")";
  return "O(" + std::to_string(p) + "," + std::to_string(q) + ")";
}

Partition SignedDiagram::shape () const
{
  std::vector<int> r;
  r.reserve(rows.size());
  for (const auto &row: rows)
    r.push_back(row.length);
  return Partition(std::move(r));
}

int SignedDiagram::size () const noexcept
{
  int s = 0;
  for (const auto &row: rows)
    s += row.length;
  return s;
}

Partition transpose (const Partition &d)
{
  std::vector<int> t(d.first_row(), 0);
  for (int r: d.rows())
    for (int k = 0; k < r; ++k)
      ++t[k];
  return Partition(std::move(t));
}

Partition delete_columns (const Partition &d, int i)
{
  if (i < 0)
    throw Error("column count must be nonnegative");
  std::vector<int> r;
  for (int len: d.rows())
    if (len > i)
      r.push_back(len - i);
  return Partition(std::move(r));
}

bool is_free_length (Kind kind, int length) noexcept
{
  bool even = length % 2 == 0;
  return kind == Kind::Symplectic ? even : !even;
}

Sign convention_start (Kind kind) noexcept
{
  return kind == Kind::Symplectic ? Sign::Minus : Sign::Plus;
}

bool validate_partition_kind (const Partition &d, Kind kind)
{
  const auto &r = d.rows();
  for (std::size_t j = 0; j < r.size();)
  {
    std::size_t e = j;
    while (e < r.size() && r[e] == r[j])
      ++e;
    if (!is_free_length(kind, r[j]) && (e - j) % 2 != 0)
      return false;
    j = e;
  }
  return true;
}

namespace {

bool all_parity (const Partition &d, int parity)
{
  for (int v: d.rows())
    if (v % 2 != parity)
      return false;
  return true;
}

} // namespace

bool very_even (const Partition &d)
{
  return all_parity(d, 0);
}

bool very_odd (const Partition &d)
{
  return all_parity(d, 1);
}

Validation validate_signed (const SignedDiagram &D)
{
  Validation v;
  auto fail = [&v](std::string msg) {
    v.ok = false;
    v.violations.push_back(std::move(msg));
  };

  const auto &rows = D.rows;
  for (std::size_t j = 0; j < rows.size(); ++j)
  {
    if (rows[j].length < 1)
      fail("row " + std::to_string(j + 1) + " has nonpositive length");
    if (j > 0 && rows[j].length > rows[j - 1].length)
      fail("row " + std::to_string(j + 1) + " is longer than the row above");
  }
  if (!v.ok)
    return v;

  for (std::size_t j = 0; j < rows.size();)
  {
    std::size_t e = j;
    while (e < rows.size() && rows[e].length == rows[j].length)
      ++e;
    int len = rows[j].length;
    if (!is_free_length(D.kind, len))
    {
      if ((e - j) % 2 != 0)
        fail("rows of length " + std::to_string(len)
             + " must occur with even multiplicity");
      Sign expect = convention_start(D.kind);
      for (std::size_t k = j; k < e; ++k)
      {
        if (rows[k].leading != expect)
        {
          fail("row " + std::to_string(k + 1) + " of length "
               + std::to_string(len) + " must start with "
               + sign_char(expect));
        }
        expect = opposite(expect);
      }
    }
    j = e;
  }
  return v;
}

Signature signature (const SignedDiagram &D)
{
  Signature s;
  for (const auto &row: D.rows)
  {
    int major = (row.length + 1) / 2;
    int minor = row.length / 2;
    if (row.leading == Sign::Plus)
    {
      s.plus += major;
      s.minus += minor;
    }
    else
    {
      s.plus += minor;
      s.minus += major;
    }
  }
  return s;
}

GroupLabel group_of (const SignedDiagram &D)
{
  Signature s = signature(D);
  if (D.kind == Kind::Symplectic)
  {
    if (s.plus != s.minus)
      throw Error("symplectic diagram with unbalanced signature");
    return GroupLabel::mp(s.total());
  }
  return GroupLabel::o(s.plus, s.minus);
}

SignedDiagram canonicalize (const SignedDiagram &D)
{
  SignedDiagram out = D;
  std::stable_sort(out.rows.begin(), out.rows.end(),
    [](const SignedRow &a, const SignedRow &b) { return a.length > b.length; });
  for (std::size_t j = 0; j < out.rows.size();)
  {
    std::size_t e = j;
    while (e < out.rows.size() && out.rows[e].length == out.rows[j].length)
      ++e;
    if (is_free_length(out.kind, out.rows[j].length))
    {
      std::stable_partition(out.rows.begin() + j, out.rows.begin() + e,
        [](const SignedRow &r) { return r.leading == Sign::Plus; });
    }
    j = e;
  }
  return out;
}

bool equivalent (const SignedDiagram &D1, const SignedDiagram &D2)
{
  return canonicalize(D1) == canonicalize(D2);
}

SignedDiagram normalize_constrained (const SignedDiagram &D)
{
  SignedDiagram out = canonicalize(D);
  for (std::size_t j = 0; j < out.rows.size();)
  {
    std::size_t e = j;
    while (e < out.rows.size() && out.rows[e].length == out.rows[j].length)
      ++e;
    if (!is_free_length(out.kind, out.rows[j].length))
    {
      Sign s = convention_start(out.kind);
      for (std::size_t k = j; k < e; ++k)
      {
        out.rows[k].leading = s;
        s = opposite(s);
      }
    }
    j = e;
  }
  return out;
}

SignedDiagram delete_column_raw (const SignedDiagram &D)
{
  SignedDiagram out;
  out.kind = opposite(D.kind);
  for (const auto &row: D.rows)
    if (row.length > 1)
      out.rows.push_back({row.length - 1, opposite(row.leading)});
  return out;
}

SignedDiagram delete_column_signed (const SignedDiagram &D)
{
  return normalize_constrained(delete_column_raw(D));
}

SignedDiagram delete_columns_signed (const SignedDiagram &D, int i)
{
  if (i < 0)
    throw Error("column count must be nonnegative");
  SignedDiagram out = D;
  for (int k = 0; k < i; ++k)
    out = delete_column_signed(out);
  return out;
}

SignedDiagram tau (const SignedDiagram &D)
{
  if (D.kind != Kind::Symplectic)
    throw Error("tau defined only on symplectic diagrams");
  SignedDiagram out = D;
  for (auto &row: out.rows)
    if (row.length % 2 == 0)
      row.leading = opposite(row.leading);
  return canonicalize(out);
}

SignedDiagram negate (const SignedDiagram &D)
{
  SignedDiagram out = D;
  for (auto &row: out.rows)
    if (row.length % 2 == 0)
      row.leading = opposite(row.leading);
  // Even rows are constrained for orthogonal diagrams, so the flip above
  // is undone by the fixed convention.
  return normalize_constrained(out);
}

SignedDiagram intro_diagram ()
{
  using S = Sign;
  return canonicalize(SignedDiagram(Kind::Symplectic, {
    {6, S::Minus}, {5, S::Minus}, {5, S::Plus}, {4, S::Minus}, {4, S::Plus},
    {2, S::Plus}, {2, S::Plus}, {1, S::Minus}, {1, S::Plus},
  }));
}

} // namespace orbitcalc
