// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/parallel.hpp>
#include <orbitcalc/serialize.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orbitcalc {

struct SuiteReport
{
  std::string name;
  int max = 0;
  std::size_t checked = 0;
  std::vector<CheckFailure> failures;

  bool passed () const noexcept { return failures.empty(); }
};

/// reasonss, lemma-pm, reversal, bounds, domino-oracle, twocom,
/// induce-oracle, non3, appendix.
const std::vector<std::string> &suite_names ();

int default_max (const std::string &suite);

/// Runs one suite up to the size bound. Serial and parallel runs produce the
/// same report. Throws Error for an unknown suite or a negative bound.
SuiteReport run_suite (const std::string &name, std::optional<int> max = std::nullopt,
                       bool parallel = true);

json to_json (const SuiteReport &r);

/// One summary line, then up to max_listed counterexamples.
std::string render_report (const SuiteReport &r, std::size_t max_listed = 20);

} // namespace orbitcalc
