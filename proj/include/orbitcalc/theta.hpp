// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>

#include <vector>

namespace orbitcalc {

struct ChainEntry
{
  SignedDiagram diagram;
  GroupLabel group;
};

/// D, D-1, ..., D-(d1-1), each with its group. Length d1.
using ThetaChain = std::vector<ChainEntry>;

/// Prepends a first column of length N - |d|. Kind is the kind of d; the
/// result has the opposite kind.
Partition theta_lift_complex (const Partition &d, Kind kind, int N);

/// The unique valid D' with D' - 1 = D and signature(D') = target.
/// Throws when there is no such lift or more than one.
SignedDiagram theta_lift_real (const SignedDiagram &D, Signature target);

/// All valid lifts, canonical and sorted.
std::vector<SignedDiagram> theta_lift_candidates (const SignedDiagram &D,
                                                  Signature target);

/// Lemma on the image of m2 for (O(p,q), Sp(2n)): requires p+q <= 2n and
/// tests signature(D-1) = (r,s) with r <= p and s <= q.
bool in_moment_image (const SignedDiagram &D, int p, int q);

ThetaChain chain (const SignedDiagram &D);

} // namespace orbitcalc
