// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/serialize.hpp>

#include <gmpxx.h>

#include <random>
#include <string>
#include <vector>

namespace orbitcalc {

using BigRational = mpq_class;
using RationalVector = std::vector<BigRational>;

/// Dense exact matrix, row major.
class RationalMatrix
{
public:
  RationalMatrix () = default;
  RationalMatrix (int rows, int cols);

  static RationalMatrix identity (int n);

  int rows () const noexcept { return rows_; }
  int cols () const noexcept { return cols_; }

  BigRational &operator() (int i, int j) { return data_[index(i, j)]; }
  const BigRational &operator() (int i, int j) const { return data_[index(i, j)]; }

  RationalMatrix transpose () const;
  RationalMatrix pow (int k) const;
  bool is_zero () const;

  RationalVector apply (const RationalVector &v) const;
  RationalVector column (int j) const;

  friend RationalMatrix operator+ (const RationalMatrix &a, const RationalMatrix &b);
  friend RationalMatrix operator- (const RationalMatrix &a, const RationalMatrix &b);
  friend RationalMatrix operator- (const RationalMatrix &a);
  friend RationalMatrix operator* (const RationalMatrix &a, const RationalMatrix &b);
  friend RationalMatrix operator* (const BigRational &c, const RationalMatrix &a);
  friend bool operator== (const RationalMatrix &a, const RationalMatrix &b);

private:
  std::size_t index (int i, int j) const
  {
    return static_cast<std::size_t>(i) * static_cast<std::size_t>(cols_)
         + static_cast<std::size_t>(j);
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<BigRational> data_;
};

int rank (const RationalMatrix &m);
std::vector<RationalVector> kernel_basis (const RationalMatrix &m);
RationalMatrix inverse (const RationalMatrix &m);

/// Positive and negative index of inertia of a symmetric matrix.
Signature symmetric_signature (const RationalMatrix &g);

/// Symplectic W_n = [[0, I], [-I, 0]] or orthogonal I_{p,q}.
struct FormSpec
{
  enum class Type { Symplectic, Orthogonal };

  Type type = Type::Symplectic;
  int n = 0;
  int p = 0;
  int q = 0;

  static FormSpec sp (int n);
  static FormSpec o (int p, int q);

  /// "sp:2n" or "o:p,q".
  static FormSpec parse (const std::string &s);

  int dim () const noexcept { return type == Type::Symplectic ? 2 * n : p + q; }
  RationalMatrix matrix () const;
  std::string to_string () const;
};

/// Form of the group the diagram lives in.
FormSpec form_of (const SignedDiagram &D);

/// m1(x) = I_{p,q} x W_n xᵗ for x of size (p+q) x 2n.
RationalMatrix moment_m1 (const RationalMatrix &x, int p, int q);
/// m2(x) = W_n xᵗ I_{p,q} x.
RationalMatrix moment_m2 (const RationalMatrix &x, int p, int q);

/// Xᵗ J + J X = 0.
bool in_lie_algebra (const RationalMatrix &X, const FormSpec &form);

bool is_nilpotent (const RationalMatrix &X);

/// Jordan type from the rank sequence of powers of X.
Partition jordan_partition (const RationalMatrix &X);

/// Signed diagram of a nilpotent X in the Lie algebra of the form. The sign
/// count for length k comes from the form b_k(u,v) = B(X^{k-1}u, v) on
/// ker X^k / (ker X^{k-1} + X ker X^{k+1}). Symplectic rows take the sign of
/// b_k directly; orthogonal rows take it twisted by (-1)^((k-1)/2) so that
/// box counts match the signature of the form.
SignedDiagram classify_signed (const RationalMatrix &X, const FormSpec &form);

struct Realization
{
  FormSpec form;
  RationalMatrix X;
  /// chains[i] is the Jordan chain g, Xg, X^2 g, ... of row i of the diagram.
  std::vector<std::vector<RationalVector>> chains;
};

/// A normal-form nilpotent element whose orbit is D.
Realization realize (const SignedDiagram &D);

struct WitnessParts
{
  RationalMatrix levi;        // Y_S embedded in sp(2m)
  RationalMatrix nilradical;  // u in the nilradical of the parabolic
  RationalMatrix X;           // levi + nilradical
};

/// Element of Y_S + n in sp(2n) whose orbit is the j-th induced diagram.
/// Coordinates: e_1..e_{n-m} span V0, e_{n+1}..e_{2n-m} span its dual, and
/// the rest carry R^{2m} with its standard form.
WitnessParts build_witness_parts (const SignedDiagram &S, int n, int j);
RationalMatrix build_witness (const SignedDiagram &S, int n, int j);

/// u maps V0 to 0, V0-perp into V0, and everything into V0-perp.
bool in_nilradical (const RationalMatrix &u, int n, int k);

struct Conjugator
{
  RationalMatrix g;
  RationalMatrix g_inv;
};

/// Product of random transvections (symplectic) or reflections (orthogonal).
Conjugator random_form_preserving (const FormSpec &form, std::mt19937_64 &rng,
                                   int steps = 3);

bool preserves_form (const RationalMatrix &g, const FormSpec &form);

/// Row-major array of rows; entries are rational strings such as "-3/2".
json to_json (const RationalMatrix &m);
/// Accepts integer or rational-string entries. Rows must have equal length.
RationalMatrix matrix_from_json (const json &j);

} // namespace orbitcalc
