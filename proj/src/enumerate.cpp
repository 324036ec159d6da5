// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>

#include <set>

namespace orbitcalc {

namespace {

void partitions_rec (int remaining, int max_part, std::vector<int> &cur,
                     std::vector<Partition> &out)
{
  if (remaining == 0)
  {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p)
  {
    cur.push_back(p);
    partitions_rec(remaining - p, p, cur, out);
    cur.pop_back();
  }
}

struct LengthClass
{
  int length;
  int multiplicity;
};

std::vector<LengthClass> classes_of (const Partition &d)
{
  std::vector<LengthClass> out;
  for (int r: d.rows())
  {
    if (!out.empty() && out.back().length == r)
      ++out.back().multiplicity;
    else
      out.push_back({r, 1});
  }
  return out;
}

} // namespace

std::vector<Partition> partitions_of (int N)
{
  if (N < 0)
    throw Error("size must be nonnegative");
  std::vector<Partition> out;
  std::vector<int> cur;
  partitions_rec(N, N, cur, out);
  return out;
}

std::vector<Partition> kind_partitions (int N, Kind kind)
{
  std::vector<Partition> out;
  for (auto &d: partitions_of(N))
    if (validate_partition_kind(d, kind))
      out.push_back(d);
  return out;
}

std::vector<SignedDiagram> diagrams_of_shape (const Partition &d, Kind kind)
{
  std::vector<SignedDiagram> out;
  if (!validate_partition_kind(d, kind))
    return out;
  auto classes = classes_of(d);

  std::vector<SignedRow> rows;
  std::function<void (std::size_t)> rec = [&](std::size_t c) {
    if (c == classes.size())
    {
      out.emplace_back(kind, rows);
      return;
    }
    const auto &cl = classes[c];
    if (is_free_length(kind, cl.length))
    {
      for (int plus = cl.multiplicity; plus >= 0; --plus)
      {
        for (int i = 0; i < cl.multiplicity; ++i)
          rows.push_back({cl.length, i < plus ? Sign::Plus : Sign::Minus});
        rec(c + 1);
        rows.resize(rows.size() - cl.multiplicity);
      }
    }
    else
    {
      Sign s = convention_start(kind);
      for (int i = 0; i < cl.multiplicity; ++i)
      {
        rows.push_back({cl.length, s});
        s = opposite(s);
      }
      rec(c + 1);
      rows.resize(rows.size() - cl.multiplicity);
    }
  };
  rec(0);
  return out;
}

long long shape_count_formula (const Partition &d, Kind kind)
{
  if (!validate_partition_kind(d, kind))
    return 0;
  long long prod = 1;
  for (const auto &cl: classes_of(d))
    if (is_free_length(kind, cl.length))
      prod *= cl.multiplicity + 1;
  return prod;
}

void for_each_diagram (Kind kind, int size,
                       const std::function<void (const SignedDiagram &)> &fn)
{
  for (const auto &d: kind_partitions(size, kind))
    for (const auto &D: diagrams_of_shape(d, kind))
      fn(D);
}

std::vector<SignedDiagram> diagrams_of_size (Kind kind, int size)
{
  std::vector<SignedDiagram> out;
  for_each_diagram(kind, size, [&out](const SignedDiagram &D) { out.push_back(D); });
  return out;
}

std::vector<SignedDiagram> diagrams_up_to (Kind kind, int max_size)
{
  std::vector<SignedDiagram> out;
  for (int s = 0; s <= max_size; ++s)
    for_each_diagram(kind, s, [&out](const SignedDiagram &D) { out.push_back(D); });
  return out;
}

std::vector<SignedDiagram> diagrams_of_signature (Kind kind, Signature sig)
{
  std::vector<SignedDiagram> out;
  if (sig.plus < 0 || sig.minus < 0)
    return out;
  if (kind == Kind::Symplectic && sig.plus != sig.minus)
    return out;
  for_each_diagram(kind, sig.total(), [&](const SignedDiagram &D) {
    if (signature(D) == sig)
      out.push_back(D);
  });
  return out;
}

std::map<Signature, long long> brute_force_counts (Kind kind, int size)
{
  std::map<Signature, long long> counts;
  for (const auto &d: partitions_of(size))
  {
    int r = d.row_count();
    std::set<SignedDiagram> seen;
    for (long long mask = 0; mask < (1LL << r); ++mask)
    {
      SignedDiagram D;
      D.kind = kind;
      for (int i = 0; i < r; ++i)
        D.rows.push_back({d.rows()[i], (mask >> i) & 1 ? Sign::Minus : Sign::Plus});
      if (!validate_signed(D).ok)
        continue;
      seen.insert(canonicalize(D));
    }
    for (const auto &D: seen)
      ++counts[signature(D)];
  }
  return counts;
}

} // namespace orbitcalc
