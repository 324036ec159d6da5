// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace orbitcalc {

/// Worker count: OpenMP's default, capped by ORBITCALC_THREADS when set.
/// Always 1 in builds without OpenMP.
int thread_count ();

struct CheckFailure
{
  std::size_t index = 0;
  std::string message;
};

/// A check returns nullopt on success and a counterexample text otherwise.
/// Exceptions thrown by the check are reported as failures.
using IndexedCheck = std::function<std::optional<std::string> (std::size_t)>;

/// Runs check(0..n-1) in index order on the calling thread.
std::vector<CheckFailure> check_all_serial (std::size_t n, const IndexedCheck &check);

/// Same result as check_all_serial, with indices spread over thread_count()
/// workers and failures merged back in index order.
std::vector<CheckFailure> check_all_parallel (std::size_t n, const IndexedCheck &check);

std::vector<CheckFailure> check_all (std::size_t n, const IndexedCheck &check,
                                     bool parallel);

} // namespace orbitcalc
