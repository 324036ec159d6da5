// SPDX-License-Identifier: MIT
// Independent reference computations used by the tests. Everything here
// works on explicit box strings ("-+-+") and plain loops, and shares no
// code with the library beyond its value types.

#pragma once

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/vector_order.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

namespace oracle {

using orbitcalc::Kind;
using orbitcalc::Rational;
using Rows = std::vector<std::string>;

inline std::string row_string (int length, char lead)
{
  std::string s;
  char c = lead;
  for (int i = 0; i < length; ++i)
  {
    s.push_back(c);
    c = c == '+' ? '-' : '+';
  }
  return s;
}

inline Rows rows_of (const orbitcalc::SignedDiagram &D)
{
  Rows out;
  for (const auto &r: D.rows)
    out.push_back(row_string(r.length, r.leading == orbitcalc::Sign::Plus ? '+' : '-'));
  return out;
}

inline orbitcalc::SignedDiagram diagram_of (Kind kind, const Rows &rows)
{
  orbitcalc::SignedDiagram D;
  D.kind = kind;
  for (const auto &r: rows)
    D.rows.push_back({static_cast<int>(r.size()),
                      r[0] == '+' ? orbitcalc::Sign::Plus : orbitcalc::Sign::Minus});
  return D;
}

/// Rows whose sign is fixed by the convention: odd rows for symplectic,
/// even rows for orthogonal.
inline bool constrained (Kind kind, std::size_t length)
{
  return kind == Kind::Symplectic ? length % 2 == 1 : length % 2 == 0;
}

inline char first_constrained_sign (Kind kind) { return kind == Kind::Symplectic ? '-' : '+'; }

/// Row lengths weakly decreasing, constrained classes of even size whose
/// leading signs alternate from the conventional first sign, top to bottom.
inline bool valid (Kind kind, const Rows &rows)
{
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (rows[i].size() > rows[i - 1].size())
      return false;
  std::map<std::size_t, std::vector<char>> leads;
  for (const auto &r: rows)
  {
    if (r.empty())
      return false;
    if (constrained(kind, r.size()))
      leads[r.size()].push_back(r[0]);
  }
  for (const auto &[len, v]: leads)
  {
    if (v.size() % 2 != 0)
      return false;
    for (std::size_t i = 0; i < v.size(); ++i)
    {
      char want = i % 2 == 0 ? first_constrained_sign(kind)
                             : (first_constrained_sign(kind) == '+' ? '-' : '+');
      if (v[i] != want)
        return false;
    }
  }
  return true;
}

inline std::pair<int, int> signature (const Rows &rows)
{
  int p = 0, q = 0;
  for (const auto &r: rows)
    for (char c: r)
      (c == '+' ? p : q) += 1;
  return {p, q};
}

/// Equivalence class key: the multiset of row strings. Constrained classes
/// always hold equally many rows of each leading sign, so their order does
/// not matter for the key.
inline Rows key (const Rows &rows)
{
  Rows k = rows;
  std::sort(k.begin(), k.end(), [](const std::string &a, const std::string &b) {
    return a.size() != b.size() ? a.size() > b.size() : a < b;
  });
  return k;
}

/// Puts constrained classes back into the conventional order, keeping the
/// row multiset.
inline Rows normalize (Kind kind, Rows rows)
{
  std::stable_sort(rows.begin(), rows.end(),
                   [](const std::string &a, const std::string &b) { return a.size() > b.size(); });
  std::map<std::size_t, int> seen;
  for (auto &r: rows)
    if (constrained(kind, r.size()))
    {
      int i = seen[r.size()]++;
      char first = first_constrained_sign(kind);
      char lead = i % 2 == 0 ? first : (first == '+' ? '-' : '+');
      r = row_string(static_cast<int>(r.size()), lead);
    }
  return rows;
}

/// Removes the leftmost box of each row; the result has the other kind.
inline Rows delete_first_column (Kind kind, const Rows &rows)
{
  Rows out;
  for (const auto &r: rows)
    if (r.size() > 1)
      out.push_back(r.substr(1));
  Kind other = kind == Kind::Symplectic ? Kind::Orthogonal : Kind::Symplectic;
  return normalize(other, out);
}

// --- partitions ------------------------------------------------------------

inline void partitions_rec (int remaining, int cap, std::vector<int> &cur,
                            std::vector<std::vector<int>> &out)
{
  if (remaining == 0)
  {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(remaining, cap); part >= 1; --part)
  {
    cur.push_back(part);
    partitions_rec(remaining - part, part, cur, out);
    cur.pop_back();
  }
}

inline std::vector<std::vector<int>> partitions (int n)
{
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  partitions_rec(n, n, cur, out);
  return out;
}

inline std::vector<int> transpose (const std::vector<int> &d)
{
  std::vector<int> t;
  for (int c = 1; !d.empty() && c <= d.front(); ++c)
  {
    int h = 0;
    for (int x: d)
      if (x >= c)
        ++h;
    t.push_back(h);
  }
  return t;
}

inline bool kind_shape (Kind kind, const std::vector<int> &d)
{
  std::map<int, int> mult;
  for (int x: d)
    ++mult[x];
  for (auto [len, m]: mult)
    if (constrained(kind, static_cast<std::size_t>(len)) && m % 2 != 0)
      return false;
  return true;
}

/// Every sign choice on every row, filtered by validity, deduplicated by key.
inline std::set<Rows> all_diagrams (Kind kind, int size)
{
  std::set<Rows> out;
  for (const auto &d: partitions(size))
  {
    std::size_t r = d.size();
    for (unsigned long mask = 0; mask < (1ul << r); ++mask)
    {
      Rows rows;
      for (std::size_t i = 0; i < r; ++i)
        rows.push_back(row_string(d[i], (mask >> i) & 1 ? '-' : '+'));
      rows = normalize(kind, rows);
      if (valid(kind, rows))
        out.insert(key(rows));
    }
  }
  return out;
}

// --- half-integer vectors --------------------------------------------------

inline std::vector<Rational> segment_minus (int m)
{
  std::vector<Rational> v;
  for (int i = 0; i < (m + 1) / 2; ++i)
    v.push_back(Rational(m, 2) - i);
  return v;
}

inline std::vector<Rational> segment_plus (int m)
{
  std::vector<Rational> v;
  for (int i = 0; i < m / 2; ++i)
    v.push_back(Rational(m, 2) - 1 - i);
  return v;
}

/// Alternating segments over the transpose; symplectic starts with I_-.
inline std::vector<Rational> infchar (const std::vector<int> &d, Kind kind)
{
  std::vector<Rational> out;
  bool minus = kind == Kind::Symplectic;
  for (int m: transpose(d))
  {
    auto s = minus ? segment_minus(m) : segment_plus(m);
    out.insert(out.end(), s.begin(), s.end());
    minus = !minus;
  }
  return out;
}

inline std::vector<Rational> sorted_desc (std::vector<Rational> v)
{
  std::sort(v.begin(), v.end(), [](const Rational &a, const Rational &b) { return a > b; });
  return v;
}

/// Partial sums of a never exceed those of b (strict when asked). Shorter
/// vectors are padded with zeros.
inline bool partial_sums_leq (std::vector<Rational> a, std::vector<Rational> b, bool strict)
{
  std::size_t n = std::max(a.size(), b.size());
  a.resize(n, Rational(0));
  b.resize(n, Rational(0));
  Rational sa = 0, sb = 0;
  for (std::size_t i = 0; i < n; ++i)
  {
    sa += a[i];
    sb += b[i];
    if (strict ? !(sa < sb) : sa > sb)
      return false;
  }
  return true;
}

/// d1 lies below d2 in the closure order: transposes compared by partial sums
/// in the reverse direction.
inline bool closure_leq (const std::vector<int> &d1, const std::vector<int> &d2)
{
  std::vector<int> t1 = transpose(d1), t2 = transpose(d2);
  std::size_t n = std::max(t1.size(), t2.size());
  t1.resize(n, 0);
  t2.resize(n, 0);
  int s1 = 0, s2 = 0;
  for (std::size_t i = 0; i < n; ++i)
  {
    s1 += t1[i];
    s2 += t2[i];
    if (s1 < s2)
      return false;
  }
  return true;
}

} // namespace oracle
