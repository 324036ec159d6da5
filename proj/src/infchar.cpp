// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/infchar.hpp>
#include <orbitcalc/error.hpp>

#include <algorithm>

namespace orbitcalc {

HalfIntVector segment (SegmentKind kind, int m)
{
  if (m < 0)
    throw Error("segment length must be nonnegative");
  HalfIntVector out;
  Rational start = Rational(m, 2);
  int count = m / 2;
  if (kind == SegmentKind::SymplecticMinus)
    count = (m + 1) / 2;
  else
    start -= 1;
  for (int i = 0; i < count; ++i)
    out.push_back(start - i);
  return out;
}

HalfIntVector infchar_from_columns (const std::vector<int> &columns, Kind kind)
{
  HalfIntVector out;
  bool minus = kind == Kind::Symplectic;
  for (int m: columns)
  {
    HalfIntVector s = segment(minus ? SegmentKind::SymplecticMinus
                                    : SegmentKind::OrthogonalPlus, m);
    out.insert(out.end(), s.begin(), s.end());
    minus = !minus;
  }
  return out;
}

HalfIntVector infchar_segments (const Partition &d, Kind kind)
{
  return infchar_from_columns(transpose(d).rows(), kind);
}

DominoCover domino_cover (const Partition &d, Kind kind)
{
  Partition t = transpose(d);
  bool odd = very_odd(t);
  if (!odd && !very_even(t))
    throw Error("domino algorithm requires very even or very odd transpose");

  DominoCover cover;
  const auto &cols = t.rows();

  // Row 1 is tiled from the right when the transpose is very odd.
  std::vector<bool> row_one_horizontal(cols.size() + 1, false);
  if (odd && !cols.empty())
  {
    int c = d.first_row();
    while (c >= 2)
    {
      Domino h;
      h.shape = Domino::Shape::Horizontal;
      h.column = c - 1;
      h.top_row = 1;
      h.label = Rational(1, 2);
      cover.dominoes.push_back(h);
      row_one_horizontal[c] = row_one_horizontal[c - 1] = true;
      c -= 2;
    }
    if (c == 1)
    {
      Domino o;
      o.shape = Domino::Shape::Open;
      o.column = 1;
      o.top_row = 1;
      cover.dominoes.push_back(o);
      row_one_horizontal[1] = true;
    }
  }

  for (std::size_t k = 1; k <= cols.size(); ++k)
  {
    int height = cols[k - 1];
    int first = odd ? 2 : 1;
    // Pair rows from the bottom; with the first row removed the remaining
    // height is even, so the pairs start at row `first`.
    for (int top = first; top + 1 <= height; top += 2)
    {
      Domino v;
      v.shape = Domino::Shape::Vertical;
      v.column = static_cast<int>(k);
      v.top_row = top;
      Rational above((top - first) / 2);
      if (row_one_horizontal[k])
        above += Rational(1, 2);
      bool even_col = k % 2 == 0;
      Rational shift(0);
      if (kind == Kind::Orthogonal)
        shift = even_col ? 1 : 0;
      else
        shift = even_col ? 0 : 1;
      v.label = above + shift;
      cover.dominoes.push_back(v);
    }
  }
  return cover;
}

HalfIntVector infchar_domino (const Partition &d, Kind kind)
{
  HalfIntVector out;
  for (const auto &dom: domino_cover(d, kind).dominoes)
    if (dom.label)
      out.push_back(*dom.label);
  return bar_sort(out);
}

HalfIntVector rho (const GroupLabel &g)
{
  HalfIntVector out;
  if (g.kind == Kind::Symplectic)
  {
    for (int i = g.n; i >= 1; --i)
      out.push_back(Rational(i));
    return out;
  }
  int len = std::min(g.p, g.q);
  int N = g.p + g.q;
  for (int i = 1; i <= len; ++i)
    out.push_back(Rational(N - 2 * i, 2));
  return out;
}

BoundReport check_bound (const Partition &d, Kind kind)
{
  BoundReport rep;
  int N = d.size();
  int m1 = d.row_count();
  if (N == 0)
  {
    rep.applicable = false;
    rep.note = "empty diagram";
    return rep;
  }

  HalfIntVector ref;
  Rational denom;
  if (kind == Kind::Symplectic)
  {
    ref = rho(GroupLabel::mp(N));
    denom = Rational(N);
  }
  else
  {
    if (N <= 2)
    {
      rep.applicable = false;
      rep.note = "orthogonal bound needs p+q >= 3";
      return rep;
    }
    for (int i = 1; i <= N / 2; ++i)
      ref.push_back(Rational(N, 2) - i);
    denom = Rational(N - 2);
  }

  rep.lhs = bar_sort(infchar_segments(d, kind));
  rep.weak_rhs = scale(Rational(m1) / denom, ref);
  rep.strict_rhs = scale(Rational(m1 + 2) / denom, ref);
  if (rep.lhs.size() != ref.size())
    throw Error("bound vectors differ in length for " + d.to_string()
                + "; the shape is outside the theorem's hypothesis");
  rep.holds_weak = seq_preceq(rep.lhs, rep.weak_rhs);
  rep.holds_strict = seq_prec(rep.lhs, rep.strict_rhs);
  return rep;
}

bool reversal_check (const Partition &d1, const Partition &d2, Kind kind)
{
  Partition t1 = transpose(d1), t2 = transpose(d2);
  bool same = (very_even(t1) && very_even(t2)) || (very_odd(t1) && very_odd(t2));
  if (!same)
    throw Error("reversal requires both transposes very even or both very odd");
  OrderResult r = dominance_leq(d1, d2);
  if (r != OrderResult::LessEq && r != OrderResult::Equal)
    return true;
  HalfIntVector a = bar_sort(infchar_segments(d1, kind));
  HalfIntVector b = bar_sort(infchar_segments(d2, kind));
  return seq_preceq(b, a);
}

bool segment_sum_identity (int m)
{
  if (m % 2 == 0)
    throw Error("segment sum identity is stated for odd m");
  Rational minus = sum(segment(SegmentKind::SymplecticMinus, m));
  Rational plus = sum(segment(SegmentKind::OrthogonalPlus, m));
  return minus == Rational((long long)(m + 1) * (m + 1), 8)
      && plus == Rational((long long)(m - 1) * (m - 1), 8);
}

bool lemma_i2 (int m, int r)
{
  if (r > m || r < 0 || (m - r) % 2 != 0 || m + r == 0)
    throw Error("lemma i2 needs 0 <= r <= m, m ≡ r mod 2, m + r > 0");
  HalfIntVector lhs = bar_sort(concat(segment(SegmentKind::SymplecticMinus, m),
                                      segment(SegmentKind::OrthogonalPlus, r)));
  HalfIntVector rhs = scale(Rational(m, m + r),
                            segment(SegmentKind::SymplecticMinus, m + r));
  return seq_preceq(lhs, rhs);
}

std::vector<int> lemma_i3_columns (int m, int j, int m0, int r)
{
  std::vector<int> cols;
  for (int i = 0; i < j; ++i)
  {
    cols.push_back(m - 2 * i);
    cols.push_back(m - 2 * i);
  }
  if (m0 > 0)
    cols.push_back(m0);
  if (r > 0)
    cols.push_back(r);
  return cols;
}

bool lemma_i3 (int m, int j, int m0, int r)
{
  if (j < 0 || r < 0 || m0 < r || m - 2 * j < m0
      || (m - m0) % 2 != 0 || (m0 - r) % 2 != 0)
    throw Error("lemma i3 parameters outside m-2j >= m0 >= r >= 0 with equal parity");
  std::vector<int> cols = lemma_i3_columns(m, j, m0, r);
  int two_n = 0;
  for (int c: cols)
    two_n += c;
  if (two_n == 0)
    return true;
  HalfIntVector lhs = bar_sort(infchar_from_columns(cols, Kind::Symplectic));
  int first = cols.front();
  HalfIntVector rhs = scale(Rational(first, two_n),
                            segment(SegmentKind::SymplecticMinus, two_n));
  return seq_preceq(lhs, rhs);
}

} // namespace orbitcalc
