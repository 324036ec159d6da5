// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/induction.hpp>
#include <orbitcalc/error.hpp>

#include <algorithm>

namespace orbitcalc {

Partition merge (const Partition &s, const Partition &t)
{
  std::size_t n = std::max(s.rows().size(), t.rows().size());
  std::vector<int> d(n, 0);
  for (std::size_t j = 0; j < s.rows().size(); ++j)
    d[j] += s.rows()[j];
  for (std::size_t j = 0; j < t.rows().size(); ++j)
    d[j] += t.rows()[j];
  return Partition(std::move(d));
}

Partition add_two_columns (const Partition &s, int k)
{
  if (s.row_count() > k)
    throw Error("row count exceeds column length");
  std::vector<int> d;
  for (int x: s.rows())
    d.push_back(x + 2);
  for (int i = s.row_count(); i < k; ++i)
    d.push_back(2);
  return Partition(std::move(d));
}

namespace {

InducedOrbitSet induce (const SignedDiagram &S, int n, bool keep_even_signs)
{
  if (S.kind != Kind::Symplectic)
    throw Error("induction needs a symplectic diagram");
  Validation v = validate_signed(S);
  if (!v.ok)
    throw Error("induction needs a valid diagram");
  if (S.size() % 2 != 0)
    throw Error("symplectic diagram of odd size");
  int m = S.size() / 2;
  int k = n - m;
  int r = static_cast<int>(S.rows.size());
  if (k < r)
    throw Error("n - m = " + std::to_string(k) + " is less than the row count "
                + std::to_string(r) + " of S");

  InducedOrbitSet out;
  out.column_length = k;
  out.rows = r;
  out.count = k - r + 1;

  std::vector<SignedRow> base;
  for (const auto &row: S.rows)
  {
    SignedRow nr{row.length + 2, row.leading};
    if (row.length % 2 == 0 && !keep_even_signs)
      nr.leading = opposite(row.leading);
    base.push_back(nr);
  }

  for (int j = 0; j <= k - r; ++j)
  {
    SignedDiagram D;
    D.kind = Kind::Symplectic;
    D.rows = base;
    for (int i = 0; i < k - r; ++i)
      D.rows.push_back({2, i < k - r - j ? Sign::Plus : Sign::Minus});
    // Odd rows are fixed by the symplectic convention.
    out.diagrams.push_back(normalize_constrained(D));
  }
  return out;
}

} // namespace

InducedOrbitSet induce_real (const SignedDiagram &S, int n)
{
  return induce(S, n, false);
}

InducedOrbitSet induce_real_tau (const SignedDiagram &S, int n)
{
  return induce(S, n, true);
}

std::optional<SignedDiagram> two_n_signed (int n, int i)
{
  if (n < 0)
    throw Error("n must be nonnegative");
  if (i < -1 || i > n + 1)
    throw Error("index i = " + std::to_string(i) + " outside [-1, n+1]");
  if (i == -1 || i == n + 1)
    return std::nullopt;
  SignedDiagram D;
  D.kind = Kind::Symplectic;
  for (int k = 0; k < n; ++k)
    D.rows.push_back({2, k < i ? Sign::Plus : Sign::Minus});
  return D;
}

std::vector<SignedDiagram> wf_theta_trivial (int p, int q)
{
  if (p < 0 || q < 0)
    throw Error("p and q must be nonnegative");
  int n = p + q - 1;
  if (n < 0)
    throw Error("p + q must be at least 1");
  std::vector<SignedDiagram> out;
  for (int i: {p, p - 1})
    if (auto D = two_n_signed(n, i))
      out.push_back(*D);
  return out;
}

std::vector<SignedDiagram> wf_Ialpha (int n, int alpha)
{
  if (n < 0)
    throw Error("n must be nonnegative");
  if (((alpha - n - 1) % 2 + 2) % 2 != 0)
    throw Error("alpha must be congruent to n+1 mod 2");
  std::vector<SignedDiagram> out;
  for (int p = 0; p <= n + 1; ++p)
  {
    int q = n + 1 - p;
    if ((((p - q - alpha) % 4) + 4) % 4 != 0)
      continue;
    for (auto &D: wf_theta_trivial(p, q))
      out.push_back(D);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

} // namespace orbitcalc
