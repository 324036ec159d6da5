// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/tower.hpp>
#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>
#include <orbitcalc/induction.hpp>
#include <orbitcalc/infchar.hpp>

#include <algorithm>
#include <map>
#include <sstream>

namespace orbitcalc {

namespace {

std::string str (int x)
{
  return std::to_string(x);
}

std::string sig_str (Signature s)
{
  return "(" + str(s.plus) + "," + str(s.minus) + ")";
}

NamedCheck make_check (int k, std::string name, bool ok, std::string detail)
{
  return NamedCheck{k, std::move(name), ok, std::move(detail)};
}

NamedCheck geq (int k, const std::string &name, int lhs, int rhs)
{
  return make_check(k, name, lhs >= rhs, str(lhs) + " >= " + str(rhs));
}

NamedCheck gt (int k, const std::string &name, int lhs, int rhs)
{
  return make_check(k, name, lhs > rhs, str(lhs) + " > " + str(rhs));
}

NamedCheck eq (int k, const std::string &name, int lhs, int rhs)
{
  return make_check(k, name, lhs == rhs, str(lhs) + " = " + str(rhs));
}

/// Column lengths with m(i) = 0 past the last column, 1-based.
struct Columns
{
  std::vector<int> m;
  int operator() (int i) const
  {
    return i >= 1 && i <= static_cast<int>(m.size()) ? m[static_cast<std::size_t>(i - 1)] : 0;
  }
  int count () const { return static_cast<int>(m.size()); }
};

/// Level data D(0), ..., D(d1), with D(0) empty.
struct Levels
{
  ThetaChain seq;
  int d1 = 0;

  explicit Levels (const SignedDiagram &D)
    : seq(tower_sequence(D))
    , d1(static_cast<int>(seq.size()))
  {}

  Signature sig (int k) const
  {
    return k == 0 ? Signature{} : signature(seq[static_cast<std::size_t>(k - 1)].diagram);
  }
  int size (int k) const { return k == 0 ? 0 : seq[static_cast<std::size_t>(k - 1)].diagram.size(); }
  Kind kind (int k) const { return seq[static_cast<std::size_t>(k - 1)].diagram.kind; }
  const SignedDiagram &diagram (int k) const { return seq[static_cast<std::size_t>(k - 1)].diagram; }
};

} // namespace

bool pre_rigid (const Partition &d)
{
  Partition t = transpose(d);
  const auto &r = t.rows();
  return std::adjacent_find(r.begin(), r.end()) == r.end();
}

bool special (const Partition &d, Kind kind)
{
  (void) kind;
  Partition t = transpose(d);
  for (int x: t.rows())
    if (x % 2 == 1 && t.multiplicity(x) % 2 != 0)
      return false;
  return true;
}

bool excluded_pattern (const SignedDiagram &D)
{
  SignedDiagram C = canonicalize(D);
  Partition t = transpose(C.shape());
  int d1 = t.row_count();
  if (d1 < 2)
    return false;
  int last = t.rows()[static_cast<std::size_t>(d1 - 1)];
  int prev = t.rows()[static_cast<std::size_t>(d1 - 2)];
  // A single uniform row is excluded as well. The range argument rules out
  // min(p',q') = n only for tails of this shape, including the one-row case.
  if (last != prev || last < 1)
    return false;
  bool all_mp = true;  // -+
  bool all_pm = true;  // +-
  for (int i = 0; i < last; ++i)
  {
    const SignedRow &row = C.rows[static_cast<std::size_t>(i)];
    Sign a = row.box(d1 - 1);
    Sign b = row.box(d1);
    all_mp = all_mp && a == Sign::Minus && b == Sign::Plus;
    all_pm = all_pm && a == Sign::Plus && b == Sign::Minus;
  }
  return all_mp || all_pm;
}

ClassUReport class_u (const SignedDiagram &D)
{
  ClassUReport r;
  auto v = validate_signed(D);
  r.valid = v.ok;
  if (!v.ok)
  {
    r.reasons = v.violations;
    return r;
  }
  Partition t = transpose(D.shape());
  r.very_even_or_odd = very_even(t) || very_odd(t);
  if (!r.very_even_or_odd)
    r.reasons.push_back("transpose " + t.to_string() + " is neither very even nor very odd");

  Columns m{t.rows()};
  r.interlacing_ok = true;
  bool sp = D.kind == Kind::Symplectic;
  // i = 0 contributes only the second comparison, m1 against m2.
  for (int i = 0; 2 * i <= m.count(); ++i)
  {
    int a = m(2 * i);
    int b = m(2 * i + 1);
    bool ok = i == 0 || (sp ? a > b : a >= b);
    if (!ok)
    {
      r.interlacing_ok = false;
      r.reasons.push_back("m" + str(2 * i) + "=" + str(a) + (sp ? " > " : " >= ") + "m"
                          + str(2 * i + 1) + "=" + str(b) + " fails");
    }
    if (2 * i + 1 <= m.count())
    {
      int c = m(2 * i + 2);
      bool ok2 = sp ? b >= c : b > c;
      if (!ok2)
      {
        r.interlacing_ok = false;
        r.reasons.push_back("m" + str(2 * i + 1) + "=" + str(b) + (sp ? " >= " : " > ") + "m"
                            + str(2 * i + 2) + "=" + str(c) + " fails");
      }
    }
  }
  r.excluded_pattern = excluded_pattern(D);
  if (r.excluded_pattern)
    r.reasons.push_back("last two columns have equal length and a uniform -+ or +- tail");
  r.member = r.very_even_or_odd && r.interlacing_ok && !r.excluded_pattern;
  return r;
}

std::vector<SignedDiagram> class_u_members (Kind kind, int max_size)
{
  std::vector<SignedDiagram> out;
  for (int N = 1; N <= max_size; ++N)
    for (const auto &d: kind_partitions(N, kind))
    {
      if (d.empty())
        continue;
      // Shape conditions do not depend on signs, so test one representative.
      auto all = diagrams_of_shape(d, kind);
      ClassUReport probe = class_u(all.front());
      if (!probe.very_even_or_odd || !probe.interlacing_ok)
        continue;
      for (const auto &D: all)
        if (!excluded_pattern(D))
          out.push_back(D);
    }
  return out;
}

ThetaChain tower_sequence (const SignedDiagram &D)
{
  ThetaChain c = chain(D);
  std::reverse(c.begin(), c.end());
  return c;
}

std::vector<NamedCheck> check_lemma_pm (const SignedDiagram &D)
{
  Levels L(D);
  std::vector<NamedCheck> out;
  for (int k = 1; k <= L.d1 - 1; ++k)
  {
    Signature a = L.sig(k - 1);
    Signature b = L.sig(k);
    Signature c = L.sig(k + 1);
    out.push_back(geq(k, "pm1 D(k+1)+ - D(k)+ >= D(k)- - D(k-1)-", c.plus - b.plus, b.minus - a.minus));
    out.push_back(geq(k, "pm1 D(k+1)- - D(k)- >= D(k)+ - D(k-1)+", c.minus - b.minus, b.plus - a.plus));
    out.push_back(geq(k, "pm2 D(k+1)+ >= D(k)-", c.plus, b.minus));
    out.push_back(geq(k, "pm2 D(k+1)- >= D(k)+", c.minus, b.plus));
    if (L.kind(k) == Kind::Symplectic)
      out.push_back(geq(k, "pm3 |d(k+1)| + |d(k-1)| >= 2|d(k)| + 2",
                        L.size(k + 1) + L.size(k - 1), 2 * L.size(k) + 2));
    else
      out.push_back(geq(k, "pm4 |d(k+1)| + |d(k-1)| >= 2|d(k)|",
                        L.size(k + 1) + L.size(k - 1), 2 * L.size(k)));
    if (k + 2 <= L.d1)
      out.push_back(make_check(k, "pm5 |d(k+2)| = |d(k)| mod 2",
                               (L.size(k + 2) - L.size(k)) % 2 == 0,
                               str(L.size(k + 2)) + " vs " + str(L.size(k))));
  }
  return out;
}

std::vector<NamedCheck> check_range (const SignedDiagram &D)
{
  Levels L(D);
  std::vector<NamedCheck> out;
  if (L.d1 < 2)
    return out;

  Signature s1 = L.sig(1);
  Signature s2 = L.sig(2);
  if (L.kind(1) == Kind::Symplectic)
  {
    out.push_back(eq(1, "base D(1)+ = D(1)-", s1.plus, s1.minus));
    out.push_back(geq(1, "base D(2)+ >= 2 D(1)-", s2.plus, 2 * s1.minus));
    out.push_back(geq(1, "base D(2)- >= 2 D(1)+", s2.minus, 2 * s1.plus));
    out.push_back(geq(1, "base D(2)+ + D(2)- >= 4 D(1)- + 2", s2.total(), 4 * s1.minus + 2));
  }
  else
  {
    out.push_back(eq(1, "base D(2)+ = D(2)-", s2.plus, s2.minus));
    out.push_back(geq(1, "base D(2)+ >= D(1)+ + D(1)-", s2.plus, s1.total()));
  }

  for (int k = 2; k <= L.d1 - 1; ++k)
  {
    Signature a = L.sig(k - 1);
    Signature b = L.sig(k);
    Signature c = L.sig(k + 1);
    if (L.kind(k) == Kind::Symplectic)
    {
      int p = a.plus, q = a.minus, n = b.plus, pp = c.plus, qq = c.minus;
      out.push_back(geq(k, "qi1 p'+q'-2n >= 2n-(p+q)+2", pp + qq - 2 * n, 2 * n - (p + q) + 2));
      out.push_back(geq(k, "qi1 2n-(p+q)+2 >= 1", 2 * n - (p + q) + 2, 1));
      out.push_back(gt(k, "qi1 min(p',q') > n", std::min(pp, qq), n));
      out.push_back(make_check(k, "qi1 p+q = p'+q' mod 2", (p + q - pp - qq) % 2 == 0,
                               str(p + q) + " vs " + str(pp + qq)));
    }
    else
    {
      int n = a.plus, p = b.plus, q = b.minus, nn = c.plus;
      out.push_back(geq(k, "qi2 2n'-p-q >= p+q-2n-2", 2 * nn - p - q, p + q - 2 * n - 2));
      out.push_back(gt(k, "qi2 min(p,q) > n", std::min(p, q), n));
    }
  }
  return out;
}

std::vector<int> non3_levels (const SignedDiagram &D)
{
  Levels L(D);
  std::vector<int> out;
  for (int k = 2; k <= L.d1 - 1; ++k)
    if (L.kind(k) == Kind::Symplectic)
      out.push_back(k);
  return out;
}

Non3Record check_non3 (const SignedDiagram &D, int k)
{
  Levels L(D);
  if (k < 2 || k > L.d1 - 1 || L.kind(k) != Kind::Symplectic)
    throw Error("level " + str(k) + " is not a metaplectic middle step");
  Non3Record r;
  r.k = k;
  Signature s0 = L.sig(k - 1);
  Signature s1 = L.sig(k);
  Signature s2 = L.sig(k + 1);
  r.p0 = s0.plus;
  r.q0 = s0.minus;
  r.n1 = s1.plus;
  r.p = s2.plus;
  r.q = s2.minus;
  Partition tk1 = transpose(L.diagram(k + 1).shape());
  r.m1 = tk1.rows()[0];
  r.m2 = tk1.rows()[1];
  r.n2 = r.p + r.q - r.n1 - 1;
  r.j_star = r.p - r.p0 - r.m2;

  r.checks.push_back(eq(k, "n2 - n1 = m1 - 1", r.n2 - r.n1, r.m1 - 1));

  Partition dk = L.diagram(k).shape();
  std::vector<SignedDiagram> d0s;
  for (const auto &C: diagrams_of_shape(dk, Kind::Symplectic))
    if (signature(delete_column_signed(C)) == s0)
      d0s.push_back(C);
  if (d0s.empty())
    throw Error("no D0 of shape " + dk.to_string() + " with D0-1 of signature " + sig_str(s0));
  r.candidates = static_cast<int>(d0s.size());

  bool first = true;
  for (const auto &D0: d0s)
  {
    std::string tag = " [D0 " + to_json(D0).dump() + "]";
    InducedOrbitSet set = induce_real_tau(D0, r.n2);
    r.checks.push_back(eq(k, "component count = m1 - m2" + tag, set.count, r.m1 - r.m2));
    std::vector<Signature> sigs;
    for (int j = 0; j < set.count; ++j)
    {
      Signature sj = signature(delete_column_signed(set.diagrams[static_cast<std::size_t>(j)]));
      sigs.push_back(sj);
      Signature want{r.p0 + r.m2 + j, r.q0 + r.m1 - 1 - j};
      r.checks.push_back(make_check(k, "signature(S(" + str(j) + ")-1)" + tag, sj == want,
                                    sig_str(sj) + " = " + sig_str(want)));
    }
    if (first)
    {
      r.s_signatures = sigs;
      first = false;
    }
    // j* counts the + signs among the m1 - m2 single-box rows of D(k+1), so
    // j* = m1 - m2 exactly when all of them are +. Then no S(j*) exists and the
    // mirrored target (p-1, q) is reached at j = m1 - m2 - 1.
    r.checks.push_back(make_check(k, "0 <= j* <= m1 - m2" + tag,
                                  r.j_star >= 0 && r.j_star <= set.count,
                                  "j* = " + str(r.j_star) + ", count " + str(set.count)));
    r.checks.push_back(make_check(k, "formula at j* gives (p, q-1)" + tag,
                                  Signature{r.p0 + r.m2 + r.j_star, r.q0 + r.m1 - 1 - r.j_star}
                                      == Signature{r.p, r.q - 1},
                                  ""));
    if (r.j_star < 0 || r.j_star > set.count)
      continue;
    r.mirrored = r.j_star == set.count;
    r.j_used = r.mirrored ? set.count - 1 : r.j_star;
    Signature target = r.mirrored ? Signature{r.p - 1, r.q} : Signature{r.p, r.q - 1};
    const SignedDiagram &S = set.diagrams[static_cast<std::size_t>(r.j_used)];
    Signature sj = sigs[static_cast<std::size_t>(r.j_used)];
    r.checks.push_back(make_check(k, std::string(r.mirrored ? "S(j)-1 has signature (p-1, q)"
                                                            : "S(j*)-1 has signature (p, q-1)")
                                         + tag,
                                  sj == target, sig_str(sj)));
    bool fits = r.p + r.q <= S.size();
    r.checks.push_back(geq(k, "2 n2 >= p + q" + tag, S.size(), r.p + r.q));
    if (!fits)
      continue;
    r.checks.push_back(make_check(k, "S(j*) in image of m2 for O(p,q)" + tag,
                                  in_moment_image(S, r.p, r.q), ""));
    bool exclusive = true;
    std::string hits;
    for (int i = 1; 2 * i <= r.q; ++i)
      if (in_moment_image(S, r.p + 2 * i, r.q - 2 * i))
      {
        exclusive = false;
        hits += " O(" + str(r.p + 2 * i) + "," + str(r.q - 2 * i) + ")";
      }
    for (int i = 1; 2 * i <= r.p; ++i)
      if (in_moment_image(S, r.p - 2 * i, r.q + 2 * i))
      {
        exclusive = false;
        hits += " O(" + str(r.p - 2 * i) + "," + str(r.q + 2 * i) + ")";
      }
    r.checks.push_back(make_check(k, "S(j*) not in image for O(p-2i,q+2i), i != 0" + tag,
                                  exclusive, hits));
    bool unique = true;
    std::string others;
    for (int j = 0; j < set.count; ++j)
      if (j != r.j_used && (j - r.j_used) % 2 == 0
          && in_moment_image(set.diagrams[static_cast<std::size_t>(j)], r.p, r.q))
      {
        unique = false;
        others += " " + str(j);
      }
    r.checks.push_back(make_check(k, "j* unique in its parity class" + tag, unique, others));
  }
  r.ok = std::all_of(r.checks.begin(), r.checks.end(), [](const NamedCheck &c) { return c.ok; });
  return r;
}

TowerCertificate certificate (const SignedDiagram &D)
{
  TowerCertificate c;
  c.class_u = class_u(D);
  if (!c.class_u.member)
  {
    std::string msg = "diagram is not in class U";
    for (const auto &reason: c.class_u.reasons)
      msg += "; " + reason;
    throw Error(msg);
  }
  c.diagram = canonicalize(D);
  Levels L(c.diagram);
  auto pm = check_lemma_pm(c.diagram);
  auto range = check_range(c.diagram);
  auto levels = non3_levels(c.diagram);
  for (int k = 1; k <= L.d1; ++k)
  {
    TowerStep s;
    s.k = k;
    s.diagram = L.diagram(k);
    s.group = L.seq[static_cast<std::size_t>(k - 1)].group;
    s.signature = L.sig(k);
    for (const auto &x: pm)
      if (x.k == k)
        s.lemma_pm.push_back(x);
    for (const auto &x: range)
      if (x.k == k)
        s.range.push_back(x);
    if (std::find(levels.begin(), levels.end(), k) != levels.end())
    {
      try
      {
        s.non3 = check_non3(c.diagram, k);
      }
      catch (const Error &e)
      {
        Non3Record fail;
        fail.k = k;
        fail.checks.push_back(make_check(k, "D0 exists", false, e.what()));
        s.non3 = fail;
      }
    }
    c.steps.push_back(std::move(s));
  }
  c.infchar = infchar_segments(c.diagram.shape(), c.diagram.kind);
  c.associated_variety = c.diagram.shape();
  c.annotations.push_back("character twists and the * and tau closures change only the "
                          "wave front bookkeeping and are not tracked");
  c.annotations.push_back("rigidity is not asserted");
  c.valid = true;
  for (const auto &s: c.steps)
  {
    for (const auto &x: s.lemma_pm)
      c.valid = c.valid && x.ok;
    for (const auto &x: s.range)
      c.valid = c.valid && x.ok;
    if (s.non3)
      c.valid = c.valid && s.non3->ok;
  }
  return c;
}

json to_json (const ClassUReport &r)
{
  json j;
  j["member"] = r.member;
  j["valid"] = r.valid;
  j["very_even_or_odd"] = r.very_even_or_odd;
  j["interlacing_ok"] = r.interlacing_ok;
  j["excluded_pattern"] = r.excluded_pattern;
  j["reasons"] = r.reasons;
  return j;
}

json to_json (const NamedCheck &c)
{
  json j;
  j["k"] = c.k;
  j["name"] = c.name;
  j["ok"] = c.ok;
  j["detail"] = c.detail;
  return j;
}

json to_json (const Non3Record &r)
{
  json j;
  j["k"] = r.k;
  j["p0"] = r.p0;
  j["q0"] = r.q0;
  j["n1"] = r.n1;
  j["p"] = r.p;
  j["q"] = r.q;
  j["m1"] = r.m1;
  j["m2"] = r.m2;
  j["n2"] = r.n2;
  j["candidates"] = r.candidates;
  j["j_star"] = r.j_star;
  j["j_used"] = r.j_used;
  j["mirrored"] = r.mirrored;
  j["s_signatures"] = json::array();
  for (auto s: r.s_signatures)
    j["s_signatures"].push_back(to_json(s));
  j["checks"] = json::array();
  for (const auto &c: r.checks)
    j["checks"].push_back(to_json(c));
  j["ok"] = r.ok;
  return j;
}

json to_json (const TowerCertificate &c)
{
  json j;
  j["valid"] = c.valid;
  j["diagram"] = to_json(c.diagram);
  j["class_u"] = to_json(c.class_u);
  j["steps"] = json::array();
  for (const auto &s: c.steps)
  {
    json st;
    st["k"] = s.k;
    st["diagram"] = to_json(s.diagram);
    st["group"] = to_json(s.group);
    st["signature"] = to_json(s.signature);
    st["lemma_pm"] = json::array();
    for (const auto &x: s.lemma_pm)
      st["lemma_pm"].push_back(to_json(x));
    st["range"] = json::array();
    for (const auto &x: s.range)
      st["range"].push_back(to_json(x));
    if (s.non3)
      st["non3"] = to_json(*s.non3);
    j["steps"].push_back(st);
  }
  j["infchar"] = json::array();
  for (const auto &x: c.infchar)
    j["infchar"].push_back(to_string(x));
  j["associated_variety"] = to_json(c.associated_variety);
  j["annotations"] = c.annotations;
  return j;
}

std::string render_certificate (const TowerCertificate &c)
{
  std::ostringstream os;
  os << "certificate: " << (c.valid ? "VALID" : "INVALID") << "\n";
  os << "group chain:";
  for (std::size_t i = 0; i < c.steps.size(); ++i)
    os << (i == 0 ? " " : " -> ") << c.steps[i].group.to_string();
  os << "\n";
  os << "signatures:";
  for (const auto &s: c.steps)
    os << " " << sig_str(s.signature);
  os << "\n";
  for (const auto &s: c.steps)
  {
    int total = 0;
    int passed = 0;
    auto tally = [&](const std::vector<NamedCheck> &v) {
      for (const auto &x: v)
      {
        ++total;
        passed += x.ok ? 1 : 0;
      }
    };
    tally(s.lemma_pm);
    tally(s.range);
    if (s.non3)
      tally(s.non3->checks);
    os << "  D(" << s.k << ") " << s.group.to_string() << " " << sig_str(s.signature)
       << " shape " << s.diagram.shape().to_string() << ": " << passed << "/" << total
       << " checks";
    if (s.non3)
    {
      os << ", nonvanishing step j*=" << s.non3->j_star;
      if (s.non3->mirrored)
        os << " (mirrored, j=" << s.non3->j_used << ")";
    }
    os << "\n";
    auto fails = [&](const std::vector<NamedCheck> &v) {
      for (const auto &x: v)
        if (!x.ok)
          os << "    FAIL " << x.name << ": " << x.detail << "\n";
    };
    fails(s.lemma_pm);
    fails(s.range);
    if (s.non3)
      fails(s.non3->checks);
  }
  os << "infinitesimal character: " << to_string(c.infchar) << "\n";
  os << "associated variety: " << c.associated_variety.to_string() << "\n";
  for (const auto &a: c.annotations)
    os << "note: " << a << "\n";
  return os.str();
}

} // namespace orbitcalc
