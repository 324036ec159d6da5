// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>

#include <optional>
#include <vector>

namespace orbitcalc {

/// Components of an orbit induced from GL(n-m) x Sp(2m) to Sp(2n).
struct InducedOrbitSet
{
  /// diagrams[j] has j new length-2 rows of the form -+.
  std::vector<SignedDiagram> diagrams;
  int column_length = 0;  // n - m
  int rows = 0;           // r, the row count of S
  int count = 0;          // n - m - r + 1
};

/// Row-wise sum, zero padded.
Partition merge (const Partition &s, const Partition &t);

/// (s_1+2, ..., s_r+2, 2, ..., 2) with k - r twos.
Partition add_two_columns (const Partition &s, int k);

/// Induction from {0} x O_S: even rows take the opposite sign of S.
InducedOrbitSet induce_real (const SignedDiagram &S, int n);

/// Induction from tau(O_S) x {0}: even rows keep the sign of S.
InducedOrbitSet induce_real_tau (const SignedDiagram &S, int n);

/// [2^n]^(i): i rows (2,+) over n-i rows (2,-). Returns nullopt for the
/// empty-set sentinels i = -1 and i = n+1.
std::optional<SignedDiagram> two_n_signed (int n, int i);

/// Components of WF(theta(p,q;2n)(trivial)) with n = p + q - 1.
std::vector<SignedDiagram> wf_theta_trivial (int p, int q);

/// Union over p + q = n + 1 with p - q ≡ alpha (mod 4), deduplicated.
std::vector<SignedDiagram> wf_Ialpha (int n, int alpha);

} // namespace orbitcalc
