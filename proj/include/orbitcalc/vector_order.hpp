// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>

#include <boost/rational.hpp>

#include <string>
#include <vector>

namespace orbitcalc {

/// Exact rational scalar. Infinitesimal characters only need halves, but the
/// scaled bound vectors need general denominators.
using Rational = boost::rational<long long>;

/// Exact vector of rationals (half-integers for characters and rho).
using HalfIntVector = std::vector<Rational>;

enum class OrderResult { LessStrict, LessEq, GreaterEq, GreaterStrict, Equal, Incomparable };

/// Whether sequences of different length may be compared.
enum class Padding { Reject, ZeroPad };

std::string to_string (const Rational &r);
std::string to_string (const HalfIntVector &v);
std::string to_string (OrderResult r);

/// Parses "p/q" or "p".
Rational parse_rational (const std::string &s);

/// a ⪯ b: every partial sum of a is at most the matching partial sum of b.
bool seq_preceq (const HalfIntVector &a, const HalfIntVector &b,
                 Padding pad = Padding::Reject);

/// a ≺ b: strict inequality of partial sums at every index.
bool seq_prec (const HalfIntVector &a, const HalfIntVector &b,
               Padding pad = Padding::Reject);

/// Full comparison of two sequences under ⪯ and ≺.
OrderResult compare_sequences (const HalfIntVector &a, const HalfIntVector &b,
                               Padding pad = Padding::Reject);

/// Weakly decreasing reordering.
HalfIntVector bar_sort (HalfIntVector a);

HalfIntVector scale (const Rational &c, const HalfIntVector &v);
HalfIntVector concat (const HalfIntVector &a, const HalfIntVector &b);
HalfIntVector add (const HalfIntVector &a, const HalfIntVector &b);
Rational sum (const HalfIntVector &v);

/// Closure order on partitions of one size: d1 ⪯ d2 iff d1ᵗ ⪰ d2ᵗ.
/// Returns LessEq when d1 lies in the closure of d2, GreaterEq for the
/// converse, Equal or Incomparable otherwise.
OrderResult dominance_leq (const Partition &d1, const Partition &d2);

} // namespace orbitcalc
