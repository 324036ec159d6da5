// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/theta.hpp>
#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>
#include <orbitcalc/serialize.hpp>

#include <algorithm>

namespace orbitcalc {

Partition theta_lift_complex (const Partition &d, Kind kind, int N)
{
  (void) kind;
  int L = N - d.size();
  if (L < d.row_count())
    throw Error("no column-prepend lift of this size");
  std::vector<int> rows;
  for (int x: d.rows())
    rows.push_back(x + 1);
  for (int i = d.row_count(); i < L; ++i)
    rows.push_back(1);
  return Partition(std::move(rows));
}

std::vector<SignedDiagram> theta_lift_candidates (const SignedDiagram &D,
                                                  Signature target)
{
  std::vector<SignedDiagram> out;
  int N = target.total();
  if (target.plus < 0 || target.minus < 0 || N - D.size() < D.shape().row_count())
    return out;
  Kind lifted = opposite(D.kind);
  Partition shape = theta_lift_complex(D.shape(), D.kind, N);
  SignedDiagram want = canonicalize(D);
  for (const auto &C: diagrams_of_shape(shape, lifted))
    if (signature(C) == target && delete_column_signed(C) == want)
      out.push_back(C);
  std::sort(out.begin(), out.end());
  return out;
}

SignedDiagram theta_lift_real (const SignedDiagram &D, Signature target)
{
  auto cands = theta_lift_candidates(D, target);
  if (cands.empty())
    throw Error("no valid lift of signature (" + std::to_string(target.plus)
                + "," + std::to_string(target.minus) + ")");
  if (cands.size() > 1)
  {
    std::string msg = "ambiguous lift, candidates:";
    for (const auto &c: cands)
      msg += " " + to_json(c).dump();
    throw Error(msg);
  }
  return cands.front();
}

bool in_moment_image (const SignedDiagram &D, int p, int q)
{
  if (D.kind != Kind::Symplectic)
    throw Error("moment image test needs a symplectic diagram");
  if (p < 0 || q < 0 || p + q > D.size())
    throw Error("moment image test requires p + q <= 2n");
  Signature s = signature(delete_column_signed(D));
  return s.plus <= p && s.minus <= q;
}

ThetaChain chain (const SignedDiagram &D)
{
  ThetaChain out;
  SignedDiagram cur = canonicalize(D);
  int d1 = D.shape().first_row();
  for (int j = 0; j < d1; ++j)
  {
    out.push_back({cur, group_of(cur)});
    cur = delete_column_signed(cur);
  }
  return out;
}

} // namespace orbitcalc
