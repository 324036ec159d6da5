// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>

#include <functional>
#include <map>
#include <vector>

namespace orbitcalc {

/// All partitions of N in reverse lexicographic order.
std::vector<Partition> partitions_of (int N);

/// Partitions of N satisfying the multiplicity rule for kind.
std::vector<Partition> kind_partitions (int N, Kind kind);

/// Canonical diagrams of one shape, generated in order without dedup:
/// each free class chooses its Plus count from high to low.
std::vector<SignedDiagram> diagrams_of_shape (const Partition &d, Kind kind);

/// Product over free length classes of (multiplicity + 1).
long long shape_count_formula (const Partition &d, Kind kind);

/// Streams every valid canonical diagram of the given size exactly once.
void for_each_diagram (Kind kind, int size,
                       const std::function<void (const SignedDiagram &)> &fn);

/// All valid canonical diagrams of the given size.
std::vector<SignedDiagram> diagrams_of_size (Kind kind, int size);

/// All valid canonical diagrams of sizes 0..max_size.
std::vector<SignedDiagram> diagrams_up_to (Kind kind, int max_size);

/// YD_-(n,n) for symplectic; YD_+(p,q) for orthogonal.
std::vector<SignedDiagram> diagrams_of_signature (Kind kind, Signature s);

/// Independent count: tries every sign choice on every row of every
/// partition, keeps valid ones, and deduplicates through canonical forms.
std::map<Signature, long long> brute_force_counts (Kind kind, int size);

} // namespace orbitcalc
