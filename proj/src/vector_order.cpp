// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/vector_order.hpp>
#include <orbitcalc/error.hpp>

#include <algorithm>

namespace orbitcalc {

std::string to_string (const Rational &r)
{
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string to_string (const HalfIntVector &v)
{
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + to_string(v[i]);
  return s + ")";
}

std::string to_string (OrderResult r)
{
  switch (r)
  {
    case OrderResult::LessStrict: return "LessStrict";
    case OrderResult::LessEq: return "LessEq";
    case OrderResult::GreaterEq: return "GreaterEq";
    case OrderResult::GreaterStrict: return "GreaterStrict";
    case OrderResult::Equal: return "Equal";
    case OrderResult::Incomparable: return "Incomparable";
  }
  return "?";
}

Rational parse_rational (const std::string &s)
{
  try
  {
    std::size_t slash = s.find('/');
    std::size_t used = 0;
    if (slash == std::string::npos)
    {
      long long v = std::stoll(s, &used);
      if (used != s.size())
        throw Error("");
      return Rational(v);
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    long long p = std::stoll(num, &used);
    if (used != num.size())
      throw Error("");
    long long q = std::stoll(den, &used);
    if (used != den.size() || q == 0)
      throw Error("");
    return Rational(p, q);
  }
  catch (const std::exception &)
  {
    throw Error("malformed rational '" + s + "'");
  }
}

namespace {

void pad_pair (HalfIntVector &a, HalfIntVector &b, Padding pad)
{
  if (a.size() == b.size())
    return;
  if (pad == Padding::Reject)
    throw Error("sequence length mismatch (" + std::to_string(a.size())
                + " vs " + std::to_string(b.size()) + ")");
  std::size_t n = std::max(a.size(), b.size());
  a.resize(n, Rational(0));
  b.resize(n, Rational(0));
}

} // namespace

bool seq_preceq (const HalfIntVector &a0, const HalfIntVector &b0, Padding pad)
{
  HalfIntVector a = a0, b = b0;
  pad_pair(a, b, pad);
  Rational sa(0), sb(0);
  for (std::size_t k = 0; k < a.size(); ++k)
  {
    sa += a[k];
    sb += b[k];
    if (sa > sb)
      return false;
  }
  return true;
}

bool seq_prec (const HalfIntVector &a0, const HalfIntVector &b0, Padding pad)
{
  HalfIntVector a = a0, b = b0;
  pad_pair(a, b, pad);
  Rational sa(0), sb(0);
  for (std::size_t k = 0; k < a.size(); ++k)
  {
    sa += a[k];
    sb += b[k];
    if (!(sa < sb))
      return false;
  }
  return true;
}

OrderResult compare_sequences (const HalfIntVector &a0, const HalfIntVector &b0,
                               Padding pad)
{
  HalfIntVector a = a0, b = b0;
  pad_pair(a, b, pad);
  if (a == b)
    return OrderResult::Equal;
  if (seq_prec(a, b))
    return OrderResult::LessStrict;
  if (seq_prec(b, a))
    return OrderResult::GreaterStrict;
  if (seq_preceq(a, b))
    return OrderResult::LessEq;
  if (seq_preceq(b, a))
    return OrderResult::GreaterEq;
  return OrderResult::Incomparable;
}

HalfIntVector bar_sort (HalfIntVector a)
{
  std::sort(a.begin(), a.end(), std::greater<Rational>());
  return a;
}

HalfIntVector scale (const Rational &c, const HalfIntVector &v)
{
  HalfIntVector out;
  out.reserve(v.size());
  for (const auto &x: v)
    out.push_back(c * x);
  return out;
}

HalfIntVector concat (const HalfIntVector &a, const HalfIntVector &b)
{
  HalfIntVector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

HalfIntVector add (const HalfIntVector &a, const HalfIntVector &b)
{
  if (a.size() != b.size())
    throw Error("sequence length mismatch in add");
  HalfIntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    out[i] = a[i] + b[i];
  return out;
}

Rational sum (const HalfIntVector &v)
{
  Rational s(0);
  for (const auto &x: v)
    s += x;
  return s;
}

OrderResult dominance_leq (const Partition &d1, const Partition &d2)
{
  if (d1.size() != d2.size())
    throw Error("incomparable sizes");
  auto as_vec = [](const Partition &p) {
    HalfIntVector v;
    Partition t = transpose(p);
    for (int x: t.rows())
      v.push_back(Rational(x));
    return v;
  };
  HalfIntVector t1 = as_vec(d1), t2 = as_vec(d2);
  if (t1.size() != t2.size())
  {
    std::size_t n = std::max(t1.size(), t2.size());
    t1.resize(n, Rational(0));
    t2.resize(n, Rational(0));
  }
  if (t1 == t2)
    return OrderResult::Equal;
  bool t2_le_t1 = seq_preceq(t2, t1);
  bool t1_le_t2 = seq_preceq(t1, t2);
  if (t2_le_t1)
    return OrderResult::LessEq;
  if (t1_le_t2)
    return OrderResult::GreaterEq;
  return OrderResult::Incomparable;
}

} // namespace orbitcalc
