// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/vector_order.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orbitcalc {

enum class SegmentKind { OrthogonalPlus, SymplecticMinus };

/// I_-(m): floor((m+1)/2) entries m/2, m/2-1, ...
/// I_+(m): floor(m/2) entries m/2-1, m/2-2, ...
/// Both decrease in steps of 1.
HalfIntVector segment (SegmentKind kind, int m);

/// Segments alternating over the given column lengths. A symplectic
/// diagram starts with I_-, an orthogonal one with I_+.
HalfIntVector infchar_from_columns (const std::vector<int> &columns, Kind kind);

/// Segment concatenation over dᵗ.
HalfIntVector infchar_segments (const Partition &d, Kind kind);

struct Domino
{
  enum class Shape { Vertical, Horizontal, Open };

  Shape shape = Shape::Vertical;
  /// 1-based column. For horizontal dominoes this is the left column.
  int column = 1;
  /// 1-based top row.
  int top_row = 1;
  /// Empty for the open domino.
  std::optional<Rational> label;
};

struct DominoCover
{
  std::vector<Domino> dominoes;
};

/// Tiles d and fills in the labels. Requires dᵗ very even or very odd.
DominoCover domino_cover (const Partition &d, Kind kind);

/// Multiset of domino labels, sorted weakly decreasing.
HalfIntVector infchar_domino (const Partition &d, Kind kind);

/// rho(Mp(2n)) = (n, ..., 1); rho(O(p,q)) has min(p,q) entries
/// (p+q-2)/2, (p+q-4)/2, ...
HalfIntVector rho (const GroupLabel &g);

struct BoundReport
{
  bool applicable = true;
  std::string note;
  HalfIntVector lhs;
  HalfIntVector weak_rhs;
  HalfIntVector strict_rhs;
  bool holds_weak = false;
  bool holds_strict = false;
};

/// The bound bar(I(d)) ⪯ (m1/N)·rho and the strict (m1+2) variant, with the
/// orthogonal reference vector ((N/2)-1, ..., (N/2)-floor(N/2)) and
/// denominator N-2. Not applicable for the empty diagram and for
/// orthogonal sizes N <= 2, where the denominator vanishes or is negative.
BoundReport check_bound (const Partition &d, Kind kind);

/// Whether d1 ⪯ d2 implies bar(I(d1)) ⪰ bar(I(d2)) for this pair.
/// Throws unless both transposes are very even or both very odd.
bool reversal_check (const Partition &d1, const Partition &d2, Kind kind);

// --- appendix identities ---------------------------------------------------

/// sum I_-(m) = (m+1)^2/8 and sum I_+(m) = (m-1)^2/8, for odd m.
bool segment_sum_identity (int m);

/// bar(I_-(m), I_+(r)) ⪯ (m/(m+r)) I_-(m+r) for r <= m, m ≡ r mod 2.
bool lemma_i2 (int m, int r);

/// Column lengths (m,m,m-2,m-2,...,m-2j+2,m-2j+2,m0,r) with zeros dropped.
std::vector<int> lemma_i3_columns (int m, int j, int m0, int r);

/// bar(I_-(d)) ⪯ (m/2n) I_-(2n) for the lemma_i3_columns shape.
bool lemma_i3 (int m, int j, int m0, int r);

} // namespace orbitcalc
