// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/serialize.hpp>
#include <orbitcalc/theta.hpp>
#include <orbitcalc/vector_order.hpp>

#include <optional>
#include <string>
#include <vector>

namespace orbitcalc {

/// dᵗ multiplicity free.
bool pre_rigid (const Partition &d);

/// Every odd entry of dᵗ occurs with even multiplicity. The same criterion
/// is used for both kinds.
bool special (const Partition &d, Kind kind);

struct ClassUReport
{
  bool member = false;
  bool valid = false;
  bool very_even_or_odd = false;
  bool interlacing_ok = false;
  bool excluded_pattern = false;
  std::vector<std::string> reasons;
};

/// Last two columns have the same length L >= 1 and the top L rows read
/// -+ in those columns, or all read +-.
bool excluded_pattern (const SignedDiagram &D);

ClassUReport class_u (const SignedDiagram &D);

/// Members of class U of the given kind with size 1..max_size, canonical,
/// in enumeration order. Shapes are screened before signs are enumerated.
std::vector<SignedDiagram> class_u_members (Kind kind, int max_size);

struct NamedCheck
{
  int k = 0;
  std::string name;
  bool ok = false;
  std::string detail;
};

/// D(1), ..., D(d1) with D(d1) = D. Index 0 of the result is D(1).
ThetaChain tower_sequence (const SignedDiagram &D);

/// The five clauses for every k in [1, d1-1]; D(0) is empty.
std::vector<NamedCheck> check_lemma_pm (const SignedDiagram &D);

/// Base clauses at k = 1 and the middle-step inequalities for 2 <= k <= d1-1.
std::vector<NamedCheck> check_range (const SignedDiagram &D);

struct Non3Record
{
  int k = 0;
  int p0 = 0, q0 = 0;
  int n1 = 0;
  int p = 0, q = 0;
  int m1 = 0, m2 = 0;
  int n2 = 0;
  int candidates = 0;   // number of D0 examined
  int j_star = 0;        // p - p0 - m2
  int j_used = 0;        // the component actually checked
  bool mirrored = false; // j* = m1 - m2, target (p-1, q) at j = m1 - m2 - 1
  /// signature(S^(j) - 1) for j = 0 .. m1-m2-1, from the first D0.
  std::vector<Signature> s_signatures;
  std::vector<NamedCheck> checks;
  bool ok = false;
};

/// Verifies the nonvanishing step at the metaplectic level k, where
/// 2 <= k <= d1-1 and D(k) is symplectic. Every D0 with shape d(k) and
/// signature(D0 - 1) = signature(D(k-1)) is tried. Throws when k is not such
/// a step or when no D0 exists.
Non3Record check_non3 (const SignedDiagram &D, int k);

/// Levels k at which check_non3 applies.
std::vector<int> non3_levels (const SignedDiagram &D);

struct TowerStep
{
  int k = 0;
  SignedDiagram diagram;
  GroupLabel group;
  Signature signature;
  std::vector<NamedCheck> lemma_pm;
  std::vector<NamedCheck> range;
  std::optional<Non3Record> non3;
};

struct TowerCertificate
{
  SignedDiagram diagram;
  ClassUReport class_u;
  std::vector<TowerStep> steps;
  HalfIntVector infchar;
  Partition associated_variety;
  std::vector<std::string> annotations;
  bool valid = false;
};

/// Throws Error carrying the ClassUReport reasons for non-members.
TowerCertificate certificate (const SignedDiagram &D);

json to_json (const ClassUReport &r);
json to_json (const NamedCheck &c);
json to_json (const Non3Record &r);
json to_json (const TowerCertificate &c);

/// Human-readable report.
std::string render_certificate (const TowerCertificate &c);

} // namespace orbitcalc
