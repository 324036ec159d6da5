// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/verify.hpp>
#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>
#include <orbitcalc/induction.hpp>
#include <orbitcalc/infchar.hpp>
#include <orbitcalc/oracle.hpp>
#include <orbitcalc/tower.hpp>

#include <algorithm>
#include <random>
#include <set>
#include <sstream>
#include <tuple>

namespace orbitcalc {

namespace {

using Outcome = std::optional<std::string>;

std::string dj (const SignedDiagram &D)
{
  return to_json(D).dump();
}

std::string sig_str (Signature s)
{
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

std::vector<SignedDiagram> both_kinds_up_to (int max)
{
  std::vector<SignedDiagram> out;
  for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    for (int s = 1; s <= max; ++s)
      for_each_diagram(kind, s, [&out](const SignedDiagram &D) { out.push_back(D); });
  return out;
}

std::vector<SignedDiagram> class_u_both (int max)
{
  auto out = class_u_members(Kind::Symplectic, max);
  auto o = class_u_members(Kind::Orthogonal, max);
  out.insert(out.end(), o.begin(), o.end());
  return out;
}

SuiteReport finish (std::string name, int max, std::size_t n, const IndexedCheck &check,
                    bool parallel)
{
  SuiteReport r;
  r.name = std::move(name);
  r.max = max;
  r.checked = n;
  r.failures = check_all(n, check, parallel);
  return r;
}

// --- reasonss --------------------------------------------------------------

SuiteReport suite_reasonss (int max, bool parallel)
{
  auto items = both_kinds_up_to(max);
  return finish("reasonss", max, items.size(), [&](std::size_t i) -> Outcome {
    const SignedDiagram &D = items[i];
    SignedDiagram raw = delete_column_raw(D);
    SignedDiagram E = delete_column_signed(D);
    if (raw.kind != opposite(D.kind))
      return dj(D) + ": deletion keeps the kind";
    auto v = validate_signed(raw);
    if (!v.ok)
      return dj(D) + ": raw deletion invalid: " + v.violations.front();
    if (canonicalize(raw) != E)
      return dj(D) + ": raw deletion differs from normalized " + dj(E);
    Signature s = signature(D);
    Signature t = signature(E);
    if (D.kind == Kind::Orthogonal)
    {
      if (t.plus != t.minus || t.plus > std::min(s.plus, s.minus))
        return dj(D) + ": D-1 signature " + sig_str(t) + " outside YD-(n,n), n <= min"
             + sig_str(s);
    }
    else if (std::max(t.plus, t.minus) > s.plus)
      return dj(D) + ": D-1 signature " + sig_str(t) + " has max(p,q) > n = "
           + std::to_string(s.plus);
    return std::nullopt;
  }, parallel);
}

// --- lemma-pm --------------------------------------------------------------

std::optional<std::string> failed_checks (const SignedDiagram &D,
                                          const std::vector<NamedCheck> &checks)
{
  std::string msg;
  for (const auto &c: checks)
    if (!c.ok)
      msg += " [k=" + std::to_string(c.k) + " " + c.name + ": " + c.detail + "]";
  if (msg.empty())
    return std::nullopt;
  return dj(D) + ":" + msg;
}

SuiteReport suite_lemma_pm (int max, bool parallel)
{
  auto items = class_u_both(max);
  return finish("lemma-pm", max, items.size(), [&](std::size_t i) -> Outcome {
    auto checks = check_lemma_pm(items[i]);
    auto range = check_range(items[i]);
    checks.insert(checks.end(), range.begin(), range.end());
    return failed_checks(items[i], checks);
  }, parallel);
}

// --- reversal --------------------------------------------------------------

SuiteReport suite_reversal (int max, bool parallel)
{
  struct Pair
  {
    Partition a, b;
    Kind kind;
  };
  std::vector<Pair> items;
  for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
    for (int N = 1; N <= max; ++N)
    {
      std::vector<Partition> ev, od;
      for (const auto &d: kind_partitions(N, kind))
      {
        Partition t = transpose(d);
        if (very_even(t))
          ev.push_back(d);
        else if (very_odd(t))
          od.push_back(d);
      }
      for (const auto *group: {&ev, &od})
        for (const auto &a: *group)
          for (const auto &b: *group)
            if (a != b)
              items.push_back({a, b, kind});
    }
  return finish("reversal", max, items.size(), [&](std::size_t i) -> Outcome {
    const Pair &p = items[i];
    if (reversal_check(p.a, p.b, p.kind))
      return std::nullopt;
    return kind_name(p.kind) + " " + p.a.to_string() + " <= " + p.b.to_string()
         + " but infinitesimal characters are not reversed";
  }, parallel);
}

// --- bounds ----------------------------------------------------------------

SuiteReport suite_bounds (int max, bool parallel)
{
  std::set<std::pair<int, Partition>> shapes;
  for (const auto &D: class_u_both(max))
    shapes.insert({static_cast<int>(D.kind), D.shape()});
  std::vector<std::pair<Kind, Partition>> items;
  for (const auto &[k, d]: shapes)
    items.push_back({static_cast<Kind>(k), d});
  return finish("bounds", max, items.size(), [&](std::size_t i) -> Outcome {
    const auto &[kind, d] = items[i];
    BoundReport b = check_bound(d, kind);
    if (!b.applicable)
      return std::nullopt;
    if (b.holds_weak && b.holds_strict)
      return std::nullopt;
    std::string msg = kind_name(kind) + " " + d.to_string() + ": lhs " + to_string(b.lhs);
    if (!b.holds_weak)
      msg += " not <= weak bound " + to_string(b.weak_rhs);
    if (!b.holds_strict)
      msg += " not < strict bound " + to_string(b.strict_rhs);
    return msg;
  }, parallel);
}

// --- domino-oracle ---------------------------------------------------------

SuiteReport suite_domino (int max, bool parallel)
{
  std::vector<std::pair<Kind, Partition>> items;
  for (int N = 1; N <= max; ++N)
    for (Kind kind: {Kind::Symplectic, Kind::Orthogonal})
      for (const auto &d: kind_partitions(N, kind))
      {
        Partition t = transpose(d);
        if (very_even(t) || very_odd(t))
          items.push_back({kind, d});
      }
  return finish("domino-oracle", max, items.size(), [&](std::size_t i) -> Outcome {
    const auto &[kind, d] = items[i];
    HalfIntVector seg = bar_sort(infchar_segments(d, kind));
    HalfIntVector dom = infchar_domino(d, kind);
    if (seg == dom)
      return std::nullopt;
    return kind_name(kind) + " " + d.to_string() + ": segments " + to_string(seg)
         + " dominoes " + to_string(dom);
  }, parallel);
}

// --- twocom ----------------------------------------------------------------

SuiteReport suite_twocom (int max, bool parallel)
{
  std::vector<std::pair<int, int>> items;
  for (int n = 0; n <= max; ++n)
  {
    int base = (n + 1) % 2;
    items.push_back({n, base});
    items.push_back({n, base + 2});
  }
  return finish("twocom", max, items.size(), [&](std::size_t i) -> Outcome {
    auto [n, alpha] = items[i];
    std::vector<SignedDiagram> want;
    for (int j = 0; j <= n; ++j)
      want.push_back(*two_n_signed(n, j));
    std::sort(want.begin(), want.end());
    auto got = wf_Ialpha(n, alpha);
    if (got == want)
      return std::nullopt;
    return "n=" + std::to_string(n) + " alpha=" + std::to_string(alpha) + ": "
         + std::to_string(got.size()) + " components, expected " + std::to_string(n + 1);
  }, parallel);
}

// --- induce-oracle ---------------------------------------------------------

SuiteReport suite_induce_oracle (int max, bool parallel)
{
  enum class Job { Anchor, Realize, Witness };
  struct Item
  {
    Job job;
    SignedDiagram S;
    int n = 0;
    int j = 0;
  };
  std::vector<Item> items;
  items.push_back({Job::Anchor, {}, 0, 0});
  int realize_cap = std::min(max, 8);
  for (const auto &D: both_kinds_up_to(realize_cap))
    items.push_back({Job::Realize, D, 0, 0});
  for (int n = 1; 2 * n <= max; ++n)
    for (int m = 0; m <= n; ++m)
      for (const auto &S: diagrams_of_size(Kind::Symplectic, 2 * m))
      {
        int r = S.shape().row_count();
        for (int j = 0; j <= n - m - r; ++j)
          items.push_back({Job::Witness, S, n, j});
      }

  return finish("induce-oracle", max, items.size(), [&](std::size_t i) -> Outcome {
    const Item &it = items[i];
    std::mt19937_64 rng(0x5eed0000ULL + i);
    if (it.job == Job::Anchor)
    {
      FormSpec f = FormSpec::sp(1);
      RationalMatrix x(2, 2);
      x(0, 1) = 1;
      SignedDiagram plus(Kind::Symplectic, {{2, Sign::Plus}});
      SignedDiagram minus(Kind::Symplectic, {{2, Sign::Minus}});
      if (classify_signed(x, f) != plus)
        return std::string("sl2 anchor: x does not classify to 2+");
      if (classify_signed(-x, f) != minus)
        return std::string("sl2 anchor: -x does not classify to 2-");
      return std::nullopt;
    }
    SignedDiagram want;
    RationalMatrix X;
    FormSpec form;
    std::string tag;
    if (it.job == Job::Realize)
    {
      Realization R = realize(it.S);
      want = canonicalize(it.S);
      X = R.X;
      form = R.form;
      tag = "realize " + dj(it.S);
    }
    else
    {
      want = induce_real(it.S, it.n).diagrams[static_cast<std::size_t>(it.j)];
      X = build_witness(it.S, it.n, it.j);
      form = FormSpec::sp(it.n);
      tag = "witness S=" + dj(it.S) + " n=" + std::to_string(it.n) + " j="
          + std::to_string(it.j);
    }
    if (jordan_partition(X) != want.shape())
      return tag + ": Jordan type " + jordan_partition(X).to_string() + ", expected "
           + want.shape().to_string();
    SignedDiagram got = classify_signed(X, form);
    if (got != want)
      return tag + ": classified as " + dj(got) + ", expected " + dj(want);
    SignedDiagram neg = classify_signed(-X, form);
    if (neg != negate(want))
      return tag + ": -X classified as " + dj(neg) + ", expected " + dj(negate(want));
    Conjugator g = random_form_preserving(form, rng);
    if (!preserves_form(g.g, form) || !(g.g * g.g_inv == RationalMatrix::identity(form.dim())))
      return tag + ": conjugator does not preserve the form";
    SignedDiagram conj = classify_signed(g.g * X * g.g_inv, form);
    if (conj != want)
      return tag + ": conjugate classified as " + dj(conj);
    return std::nullopt;
  }, parallel);
}

// --- non3 ------------------------------------------------------------------

SuiteReport suite_non3 (int max, bool parallel)
{
  auto items = class_u_both(max);
  return finish("non3", max, items.size(), [&](std::size_t i) -> Outcome {
    const SignedDiagram &D = items[i];
    std::vector<NamedCheck> checks;
    for (int k: non3_levels(D))
    {
      Non3Record r = check_non3(D, k);
      if (!r.ok)
        for (const auto &c: r.checks)
          if (!c.ok)
            checks.push_back(c);
    }
    if (auto f = failed_checks(D, checks))
      return f;
    TowerCertificate c = certificate(D);
    if (!c.valid)
      return dj(D) + ": certificate invalid";
    return std::nullopt;
  }, parallel);
}

// --- appendix --------------------------------------------------------------

SuiteReport suite_appendix (int max, bool parallel)
{
  struct Item
  {
    int which;  // 0 segment sums, 1 lemma i2, 2 lemma i3
    int a, b, c, d;
  };
  std::vector<Item> items;
  for (int m = 1; m <= 99; m += 2)
    items.push_back({0, m, 0, 0, 0});
  for (int m = 1; m <= 40; ++m)
    for (int r = m % 2; r <= m; r += 2)
      items.push_back({1, m, r, 0, 0});
  for (int m = 1; m <= max; ++m)
    for (int j = 0; 2 * j * m <= max; ++j)
      for (int m0 = m - 2 * j; m0 >= 0 && (j > 0 || m0 == m); m0 -= 2)
        for (int r = m0; r >= 0; r -= 2)
        {
          int total = 0;
          for (int c: lemma_i3_columns(m, j, m0, r))
            total += c;
          if (total == 0 || total > max)
            continue;
          items.push_back({2, m, j, m0, r});
        }
  return finish("appendix", max, items.size(), [&](std::size_t i) -> Outcome {
    const Item &it = items[i];
    if (it.which == 0)
    {
      if (segment_sum_identity(it.a))
        return std::nullopt;
      return "segment sums fail for m=" + std::to_string(it.a);
    }
    if (it.which == 1)
    {
      if (lemma_i2(it.a, it.b))
        return std::nullopt;
      return "lemma i2 fails for m=" + std::to_string(it.a) + " r=" + std::to_string(it.b);
    }
    if (lemma_i3(it.a, it.b, it.c, it.d))
      return std::nullopt;
    return "lemma i3 fails for m=" + std::to_string(it.a) + " j=" + std::to_string(it.b)
         + " m0=" + std::to_string(it.c) + " r=" + std::to_string(it.d);
  }, parallel);
}

} // namespace

const std::vector<std::string> &suite_names ()
{
  static const std::vector<std::string> names{
    "reasonss", "lemma-pm", "reversal", "bounds", "domino-oracle",
    "twocom", "induce-oracle", "non3", "appendix"};
  return names;
}

int default_max (const std::string &suite)
{
  if (suite == "reasonss")
    return 10;
  if (suite == "reversal")
    return 14;
  if (suite == "twocom" || suite == "induce-oracle")
    return 12;
  if (suite == "appendix")
    return 60;
  if (suite == "lemma-pm" || suite == "bounds" || suite == "domino-oracle" || suite == "non3")
    return 20;
  throw Error("unknown suite '" + suite + "'");
}

SuiteReport run_suite (const std::string &name, std::optional<int> max, bool parallel)
{
  int bound = max ? *max : default_max(name);
  if (bound < 0)
    throw Error("size bound must be nonnegative");
  if (name == "reasonss")
    return suite_reasonss(bound, parallel);
  if (name == "lemma-pm")
    return suite_lemma_pm(bound, parallel);
  if (name == "reversal")
    return suite_reversal(bound, parallel);
  if (name == "bounds")
    return suite_bounds(bound, parallel);
  if (name == "domino-oracle")
    return suite_domino(bound, parallel);
  if (name == "twocom")
    return suite_twocom(bound, parallel);
  if (name == "induce-oracle")
    return suite_induce_oracle(bound, parallel);
  if (name == "non3")
    return suite_non3(bound, parallel);
  if (name == "appendix")
    return suite_appendix(bound, parallel);
  throw Error("unknown suite '" + name + "'");
}

json to_json (const SuiteReport &r)
{
  json j;
  j["suite"] = r.name;
  j["max"] = r.max;
  j["checked"] = r.checked;
  j["passed"] = r.passed();
  j["failures"] = json::array();
  for (const auto &f: r.failures)
    j["failures"].push_back(f.message);
  return j;
}

std::string render_report (const SuiteReport &r, std::size_t max_listed)
{
  std::ostringstream os;
  os << r.name << " (max " << r.max << "): " << (r.passed() ? "pass" : "FAIL") << ", "
     << r.checked << " cases, " << r.failures.size() << " failures\n";
  for (std::size_t i = 0; i < r.failures.size() && i < max_listed; ++i)
    os << "  " << r.failures[i].message << "\n";
  if (r.failures.size() > max_listed)
    os << "  ... " << (r.failures.size() - max_listed) << " more\n";
  return os.str();
}

} // namespace orbitcalc
