// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>

#include <json.hpp>

#include <optional>
#include <string>

namespace orbitcalc {

using json = nlohmann::ordered_json;

json to_json (const SignedDiagram &D);
json to_json (const Partition &d);
json to_json (const Signature &s);
json to_json (const GroupLabel &g);

/// Reads {"kind": ..., "rows": [{"len": n, "sign": "+"|"-"}, ...]}.
/// Rejects constrained rows that break the fixed convention; returns the
/// canonical form.
SignedDiagram diagram_from_json (const json &j);

/// Reads a JSON array of row lengths.
Partition partition_from_json (const json &j);

/// One line per row of '+' and '-' characters, terminated by newlines.
std::string render_ascii (const SignedDiagram &D);

/// Inverse of render_ascii. When kind is not given it is inferred, and an
/// error is raised if both kinds would accept the text.
SignedDiagram parse_ascii (const std::string &text,
                           std::optional<Kind> kind = std::nullopt);

/// Dispatches on the first non-blank character: '{' is JSON, anything else
/// is ASCII.
SignedDiagram parse_diagram (const std::string &text,
                             std::optional<Kind> kind = std::nullopt);

Kind parse_kind (const std::string &name);

} // namespace orbitcalc
