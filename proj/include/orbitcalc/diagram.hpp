// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <compare>
#include <string>
#include <vector>

namespace orbitcalc {

/// Unsigned Young diagram: weakly decreasing positive row lengths.
class Partition
{
public:
  Partition () = default;

  /// Throws Error unless rows are positive and weakly decreasing.
  explicit Partition (std::vector<int> rows);

  /// Sorts descending and drops zeros before constructing.
  static Partition from_unsorted (std::vector<int> rows);

  const std::vector<int> &rows () const noexcept { return rows_; }
  int row_count () const noexcept { return static_cast<int>(rows_.size()); }
  int first_row () const noexcept { return rows_.empty() ? 0 : rows_.front(); }
  bool empty () const noexcept { return rows_.empty(); }
  int size () const noexcept;

  /// Number of rows of the given length.
  int multiplicity (int length) const noexcept;

  std::string to_string () const;

  auto operator<=> (const Partition &) const = default;

private:
  std::vector<int> rows_;
};

enum class Kind { Symplectic, Orthogonal };
enum class Sign { Plus, Minus };

Kind opposite (Kind k) noexcept;
Sign opposite (Sign s) noexcept;
char sign_char (Sign s) noexcept;
std::string kind_name (Kind k);

/// A row is determined by its length and the sign of its leftmost box.
struct SignedRow
{
  int length = 1;
  Sign leading = Sign::Plus;

  /// Sign of the box in 1-based column c.
  Sign box (int c) const noexcept;

  auto operator<=> (const SignedRow &) const = default;
};

struct Signature
{
  int plus = 0;
  int minus = 0;

  int total () const noexcept { return plus + minus; }
  auto operator<=> (const Signature &) const = default;
};

/// Group read off a diagram: Mp(2n) for symplectic, O(p,q) for orthogonal.
struct GroupLabel
{
  Kind kind = Kind::Symplectic;
  int n = 0;
  int p = 0;
  int q = 0;

  static GroupLabel mp (int two_n);
  static GroupLabel o (int p, int q);

  std::string to_string () const;
  auto operator<=> (const GroupLabel &) const = default;
};

struct SignedDiagram
{
  Kind kind = Kind::Symplectic;
  std::vector<SignedRow> rows;

  SignedDiagram () = default;
  SignedDiagram (Kind k, std::vector<SignedRow> r)
    : kind(k)
    , rows(std::move(r))
  {}

  Partition shape () const;
  int size () const noexcept;
  bool empty () const noexcept { return rows.empty(); }

  auto operator<=> (const SignedDiagram &) const = default;
};

struct Validation
{
  bool ok = true;
  std::vector<std::string> violations;
};

// --- partitions ------------------------------------------------------------

Partition transpose (const Partition &d);
Partition delete_columns (const Partition &d, int i);
bool validate_partition_kind (const Partition &d, Kind kind);

/// True iff every entry is even (resp. odd). The empty partition is both.
bool very_even (const Partition &d);
bool very_odd (const Partition &d);

// --- signed diagrams -------------------------------------------------------

/// Rows of this parity carry a free sign; the others follow the fixed
/// convention (-,+,-,... for symplectic odd rows, +,-,+,... for orthogonal
/// even rows).
bool is_free_length (Kind kind, int length) noexcept;
Sign convention_start (Kind kind) noexcept;

/// Checks lengths and the constrained-row rules. Free rows may appear in
/// any order, since validity is a property of the equivalence class.
Validation validate_signed (const SignedDiagram &D);
Signature signature (const SignedDiagram &D);
GroupLabel group_of (const SignedDiagram &D);

/// Rows sorted by length; Plus before Minus in each free class; constrained
/// rows left in place.
SignedDiagram canonicalize (const SignedDiagram &D);
bool equivalent (const SignedDiagram &D1, const SignedDiagram &D2);

/// Rewrites the leading signs of constrained rows to the fixed convention,
/// then canonicalizes.
SignedDiagram normalize_constrained (const SignedDiagram &D);

/// Drops the leftmost box of each row without any normalization.
SignedDiagram delete_column_raw (const SignedDiagram &D);

/// D - 1: drop the first column, flip kind, normalize.
SignedDiagram delete_column_signed (const SignedDiagram &D);

/// D - i for i >= 0.
SignedDiagram delete_columns_signed (const SignedDiagram &D, int i);

/// Flip the leading sign of every even row. Symplectic only.
SignedDiagram tau (const SignedDiagram &D);

/// The orbit of -X: a row of length l changes sign by (-1)^(l-1).
SignedDiagram negate (const SignedDiagram &D);

/// The Mp(30) diagram of the introduction, in canonical form.
SignedDiagram intro_diagram ();

} // namespace orbitcalc
