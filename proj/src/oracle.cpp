// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/oracle.hpp>
#include <orbitcalc/error.hpp>
#include <orbitcalc/induction.hpp>

#include <algorithm>
#include <regex>

namespace orbitcalc {

// --- matrix ----------------------------------------------------------------

RationalMatrix::RationalMatrix (int rows, int cols)
  : rows_(rows)
  , cols_(cols)
  , data_(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols))
{
  if (rows < 0 || cols < 0)
    throw Error("matrix dimensions must be nonnegative");
}

RationalMatrix RationalMatrix::identity (int n)
{
  RationalMatrix m(n, n);
  for (int i = 0; i < n; ++i)
    m(i, i) = 1;
  return m;
}

RationalMatrix RationalMatrix::transpose () const
{
  RationalMatrix t(cols_, rows_);
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      t(j, i) = (*this)(i, j);
  return t;
}

RationalMatrix RationalMatrix::pow (int k) const
{
  if (rows_ != cols_)
    throw Error("matrix power needs a square matrix");
  RationalMatrix out = identity(rows_);
  for (int i = 0; i < k; ++i)
    out = out * *this;
  return out;
}

bool RationalMatrix::is_zero () const
{
  return std::all_of(data_.begin(), data_.end(),
                     [](const BigRational &x) { return sgn(x) == 0; });
}

RationalVector RationalMatrix::apply (const RationalVector &v) const
{
  if (static_cast<int>(v.size()) != cols_)
    throw Error("vector length does not match matrix");
  RationalVector out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    for (int j = 0; j < cols_; ++j)
      if (sgn(v[static_cast<std::size_t>(j)]) != 0)
        out[static_cast<std::size_t>(i)] += (*this)(i, j) * v[static_cast<std::size_t>(j)];
  return out;
}

RationalVector RationalMatrix::column (int j) const
{
  RationalVector out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    out[static_cast<std::size_t>(i)] = (*this)(i, j);
  return out;
}

RationalMatrix operator+ (const RationalMatrix &a, const RationalMatrix &b)
{
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_)
    throw Error("matrix dimension mismatch");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < c.data_.size(); ++i)
    c.data_[i] += b.data_[i];
  return c;
}

RationalMatrix operator- (const RationalMatrix &a, const RationalMatrix &b)
{
  return a + (-b);
}

RationalMatrix operator- (const RationalMatrix &a)
{
  RationalMatrix c = a;
  for (auto &x: c.data_)
    x = -x;
  return c;
}

RationalMatrix operator* (const RationalMatrix &a, const RationalMatrix &b)
{
  if (a.cols_ != b.rows_)
    throw Error("matrix dimension mismatch");
  RationalMatrix c(a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int k = 0; k < a.cols_; ++k)
    {
      const BigRational &x = a(i, k);
      if (sgn(x) == 0)
        continue;
      for (int j = 0; j < b.cols_; ++j)
        if (sgn(b(k, j)) != 0)
          c(i, j) += x * b(k, j);
    }
  return c;
}

RationalMatrix operator* (const BigRational &c, const RationalMatrix &a)
{
  RationalMatrix out = a;
  for (auto &x: out.data_)
    x *= c;
  return out;
}

bool operator== (const RationalMatrix &a, const RationalMatrix &b)
{
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

namespace {

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref (RationalMatrix &m)
{
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols() && r < m.rows(); ++c)
  {
    int piv = -1;
    for (int i = r; i < m.rows(); ++i)
      if (sgn(m(i, c)) != 0)
      {
        piv = i;
        break;
      }
    if (piv < 0)
      continue;
    if (piv != r)
      for (int j = 0; j < m.cols(); ++j)
        std::swap(m(piv, j), m(r, j));
    BigRational inv = 1 / m(r, c);
    for (int j = 0; j < m.cols(); ++j)
      m(r, j) *= inv;
    for (int i = 0; i < m.rows(); ++i)
    {
      if (i == r || sgn(m(i, c)) == 0)
        continue;
      BigRational f = m(i, c);
      for (int j = 0; j < m.cols(); ++j)
        if (sgn(m(r, j)) != 0)
          m(i, j) -= f * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

RationalMatrix from_columns (const std::vector<RationalVector> &cols, int dim)
{
  RationalMatrix m(dim, static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j)
    for (int i = 0; i < dim; ++i)
      m(i, static_cast<int>(j)) = cols[j][static_cast<std::size_t>(i)];
  return m;
}

BigRational bilinear (const RationalVector &u, const RationalMatrix &J,
                      const RationalVector &v)
{
  RationalVector Jv = J.apply(v);
  BigRational s = 0;
  for (std::size_t i = 0; i < u.size(); ++i)
    s += u[i] * Jv[i];
  return s;
}

RationalVector unit (int dim, int i)
{
  RationalVector v(static_cast<std::size_t>(dim));
  v[static_cast<std::size_t>(i)] = 1;
  return v;
}

RationalVector scaled (const RationalVector &v, const BigRational &c)
{
  RationalVector out = v;
  for (auto &x: out)
    x *= c;
  return out;
}

RationalVector sum_vec (const RationalVector &a, const RationalVector &b)
{
  RationalVector out = a;
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] += b[i];
  return out;
}

} // namespace

int rank (const RationalMatrix &m)
{
  RationalMatrix c = m;
  return static_cast<int>(rref(c).size());
}

std::vector<RationalVector> kernel_basis (const RationalMatrix &m)
{
  RationalMatrix r = m;
  auto pivots = rref(r);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (int c: pivots)
    is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<RationalVector> out;
  for (int f = 0; f < m.cols(); ++f)
  {
    if (is_pivot[static_cast<std::size_t>(f)])
      continue;
    RationalVector v(static_cast<std::size_t>(m.cols()));
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[static_cast<std::size_t>(pivots[i])] = -r(static_cast<int>(i), f);
    out.push_back(std::move(v));
  }
  return out;
}

RationalMatrix inverse (const RationalMatrix &m)
{
  if (m.rows() != m.cols())
    throw Error("inverse needs a square matrix");
  int n = m.rows();
  RationalMatrix aug(n, 2 * n);
  for (int i = 0; i < n; ++i)
  {
    for (int j = 0; j < n; ++j)
      aug(i, j) = m(i, j);
    aug(i, n + i) = 1;
  }
  auto piv = rref(aug);
  if (static_cast<int>(piv.size()) < n || (n > 0 && piv[static_cast<std::size_t>(n - 1)] >= n))
    throw Error("matrix is singular");
  RationalMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      inv(i, j) = aug(i, n + j);
  return inv;
}

Signature symmetric_signature (const RationalMatrix &g)
{
  if (g.rows() != g.cols())
    throw Error("signature needs a square matrix");
  RationalMatrix a = g;
  if (!(a == a.transpose()))
    throw Error("signature needs a symmetric matrix");
  Signature s;
  std::vector<int> live;
  for (int i = 0; i < a.rows(); ++i)
    live.push_back(i);
  while (!live.empty())
  {
    int piv = -1;
    for (int i: live)
      if (sgn(a(i, i)) != 0)
      {
        piv = i;
        break;
      }
    if (piv < 0)
    {
      // Zero diagonal: replace e_i by e_i + e_j for an off-diagonal entry.
      int pi = -1;
      int pj = -1;
      for (int i: live)
        for (int j: live)
          if (i != j && sgn(a(i, j)) != 0 && pi < 0)
          {
            pi = i;
            pj = j;
          }
      if (pi < 0)
        break;
      for (int k = 0; k < a.rows(); ++k)
        a(pi, k) += a(pj, k);
      for (int k = 0; k < a.rows(); ++k)
        a(k, pi) += a(k, pj);
      piv = pi;
    }
    if (sgn(a(piv, piv)) > 0)
      ++s.plus;
    else
      ++s.minus;
    live.erase(std::find(live.begin(), live.end(), piv));
    for (int i: live)
    {
      if (sgn(a(i, piv)) == 0)
        continue;
      BigRational f = a(i, piv) / a(piv, piv);
      for (int j: live)
        a(i, j) -= f * a(piv, j);
    }
  }
  return s;
}

// --- forms -----------------------------------------------------------------

FormSpec FormSpec::sp (int n)
{
  if (n < 0)
    throw Error("symplectic rank must be nonnegative");
  FormSpec f;
  f.type = Type::Symplectic;
  f.n = n;
  return f;
}

FormSpec FormSpec::o (int p, int q)
{
  if (p < 0 || q < 0)
    throw Error("orthogonal signature must be nonnegative");
  FormSpec f;
  f.type = Type::Orthogonal;
  f.p = p;
  f.q = q;
  return f;
}

FormSpec FormSpec::parse (const std::string &s)
{
  static const std::regex sp_re(R"(^\s*sp\s*:\s*(\d+)\s*$)");
  static const std::regex o_re(R"(^\s*o\s*:\s*(\d+)\s*,\s*(\d+)\s*$)");
  std::smatch m;
  if (std::regex_match(s, m, sp_re))
  {
    int two_n = std::stoi(m[1]);
    if (two_n % 2 != 0)
      throw Error("symplectic dimension must be even: " + s);
    return sp(two_n / 2);
  }
  if (std::regex_match(s, m, o_re))
    return o(std::stoi(m[1]), std::stoi(m[2]));
  throw Error("form must be sp:2n or o:p,q, got '" + s + "'");
}

RationalMatrix FormSpec::matrix () const
{
  RationalMatrix J(dim(), dim());
  if (type == Type::Symplectic)
  {
    for (int i = 0; i < n; ++i)
    {
      J(i, n + i) = 1;
      J(n + i, i) = -1;
    }
  }
  else
  {
    for (int i = 0; i < p; ++i)
      J(i, i) = 1;
    for (int i = 0; i < q; ++i)
      J(p + i, p + i) = -1;
  }
  return J;
}

std::string FormSpec::to_string () const
{
  if (type == Type::Symplectic)
    return "sp:" + std::to_string(2 * n);
  return "o:" + std::to_string(p) + "," + std::to_string(q);
}

FormSpec form_of (const SignedDiagram &D)
{
  GroupLabel g = group_of(D);
  if (g.kind == Kind::Symplectic)
    return FormSpec::sp(g.n);
  return FormSpec::o(g.p, g.q);
}

// --- moment maps -----------------------------------------------------------

RationalMatrix moment_m1 (const RationalMatrix &x, int p, int q)
{
  if (x.rows() != p + q || x.cols() % 2 != 0)
    throw Error("moment map needs a (p+q) x 2n matrix");
  RationalMatrix W = FormSpec::sp(x.cols() / 2).matrix();
  RationalMatrix I = FormSpec::o(p, q).matrix();
  return I * x * W * x.transpose();
}

RationalMatrix moment_m2 (const RationalMatrix &x, int p, int q)
{
  if (x.rows() != p + q || x.cols() % 2 != 0)
    throw Error("moment map needs a (p+q) x 2n matrix");
  RationalMatrix W = FormSpec::sp(x.cols() / 2).matrix();
  RationalMatrix I = FormSpec::o(p, q).matrix();
  return W * x.transpose() * I * x;
}

bool in_lie_algebra (const RationalMatrix &X, const FormSpec &form)
{
  if (X.rows() != form.dim() || X.cols() != form.dim())
    return false;
  RationalMatrix J = form.matrix();
  return (X.transpose() * J + J * X).is_zero();
}

bool is_nilpotent (const RationalMatrix &X)
{
  if (X.rows() != X.cols())
    return false;
  return X.pow(X.rows()).is_zero();
}

Partition jordan_partition (const RationalMatrix &X)
{
  if (!is_nilpotent(X))
    throw Error("matrix is not nilpotent");
  int N = X.rows();
  std::vector<int> rk(static_cast<std::size_t>(N + 2), 0);
  RationalMatrix P = RationalMatrix::identity(N);
  for (int k = 0; k <= N + 1; ++k)
  {
    rk[static_cast<std::size_t>(k)] = rank(P);
    P = P * X;
  }
  // Rows of length >= k number rk[k-1] - rk[k].
  std::vector<int> rows;
  for (int k = N; k >= 1; --k)
  {
    int ge_k = rk[static_cast<std::size_t>(k - 1)] - rk[static_cast<std::size_t>(k)];
    int ge_k1 = rk[static_cast<std::size_t>(k)] - rk[static_cast<std::size_t>(k + 1)];
    for (int i = 0; i < ge_k - ge_k1; ++i)
      rows.push_back(k);
  }
  return Partition(rows);
}

SignedDiagram classify_signed (const RationalMatrix &X, const FormSpec &form)
{
  if (X.rows() != form.dim() || X.cols() != form.dim())
    throw Error("matrix size does not match form " + form.to_string());
  if (!in_lie_algebra(X, form))
    throw Error("matrix is not in the Lie algebra of " + form.to_string());
  if (!is_nilpotent(X))
    throw Error("matrix is not nilpotent");

  Kind kind = form.type == FormSpec::Type::Symplectic ? Kind::Symplectic
                                                      : Kind::Orthogonal;
  int N = form.dim();
  RationalMatrix J = form.matrix();
  Partition shape = jordan_partition(X);

  std::vector<RationalMatrix> P;
  P.push_back(RationalMatrix::identity(N));
  for (int k = 1; k <= N + 1; ++k)
    P.push_back(P.back() * X);

  std::vector<SignedRow> rows;
  for (int k = shape.first_row(); k >= 1; --k)
  {
    int mult = shape.multiplicity(k);
    if (mult == 0)
      continue;
    if (!is_free_length(kind, k))
    {
      for (int i = 0; i < mult; ++i)
        rows.push_back({k, Sign::Plus});
      continue;
    }
    // Span of ker X^{k-1} + X ker X^{k+1}, then complete inside ker X^k.
    std::vector<RationalVector> span = kernel_basis(P[static_cast<std::size_t>(k - 1)]);
    for (const auto &v: kernel_basis(P[static_cast<std::size_t>(k + 1)]))
      span.push_back(X.apply(v));
    int base_rank = span.empty() ? 0 : rank(from_columns(span, N));
    std::vector<RationalVector> reps;
    for (const auto &v: kernel_basis(P[static_cast<std::size_t>(k)]))
    {
      span.push_back(v);
      int r = rank(from_columns(span, N));
      if (r > base_rank)
      {
        base_rank = r;
        reps.push_back(v);
      }
      else
        span.pop_back();
    }
    if (static_cast<int>(reps.size()) != mult)
      throw Error("internal: quotient dimension does not match multiplicity");
    RationalMatrix G(mult, mult);
    for (int a = 0; a < mult; ++a)
    {
      RationalVector Xa = P[static_cast<std::size_t>(k - 1)].apply(reps[static_cast<std::size_t>(a)]);
      for (int b = 0; b < mult; ++b)
        G(a, b) = bilinear(Xa, J, reps[static_cast<std::size_t>(b)]);
    }
    Signature s = symmetric_signature(G);
    if (s.total() != mult)
      throw Error("internal: degenerate quotient form");
    int plus = s.plus;
    if (kind == Kind::Orthogonal && ((k - 1) / 2) % 2 == 1)
      plus = s.minus;
    for (int i = 0; i < mult; ++i)
      rows.push_back({k, i < plus ? Sign::Plus : Sign::Minus});
  }
  return normalize_constrained(SignedDiagram(kind, rows));
}

// --- realization -----------------------------------------------------------

namespace {

struct ChainPlan
{
  std::vector<RationalVector> chain;
};

RationalMatrix matrix_from_chains (const std::vector<std::vector<RationalVector>> &chains,
                                   int dim)
{
  std::vector<RationalVector> basis;
  std::vector<RationalVector> image;
  RationalVector zero(static_cast<std::size_t>(dim));
  for (const auto &c: chains)
    for (std::size_t t = 0; t < c.size(); ++t)
    {
      basis.push_back(c[t]);
      image.push_back(t + 1 < c.size() ? c[t + 1] : zero);
    }
  if (static_cast<int>(basis.size()) != dim)
    throw Error("internal: chain vectors do not span the space");
  RationalMatrix B = from_columns(basis, dim);
  RationalMatrix Nm = from_columns(image, dim);
  return Nm * inverse(B);
}

} // namespace

Realization realize (const SignedDiagram &D)
{
  auto val = validate_signed(D);
  if (!val.ok)
    throw Error("invalid diagram: " + val.violations.front());
  SignedDiagram C = canonicalize(D);
  Realization out;
  out.form = form_of(C);
  int dim = out.form.dim();
  const auto &rows = C.rows;

  if (C.kind == Kind::Symplectic)
  {
    int n = out.form.n;
    int next_pair = 0;
    auto f = [&](int a) { return unit(dim, a); };
    auto fp = [&](int a) { return unit(dim, n + a); };
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
      int s = rows[i].length;
      if (s % 2 == 0)
      {
        int eps = rows[i].leading == Sign::Plus ? 1 : -1;
        int h = s / 2;
        std::vector<RationalVector> g(static_cast<std::size_t>(s));
        for (int t = 1; t <= h; ++t)
        {
          int a = next_pair++;
          int sgn_t = ((t - 1) % 2 == 0 ? 1 : -1) * -eps;
          g[static_cast<std::size_t>(t - 1)] = f(a);
          g[static_cast<std::size_t>(s - t)] = scaled(fp(a), sgn_t);
        }
        out.chains.push_back(std::move(g));
      }
      else
      {
        // Constrained odd rows come in adjacent pairs of equal length.
        std::vector<RationalVector> g(static_cast<std::size_t>(s));
        std::vector<RationalVector> hch(static_cast<std::size_t>(s));
        std::vector<int> pairs;
        for (int t = 0; t < s; ++t)
          pairs.push_back(next_pair++);
        for (int t = 1; t <= s; ++t)
          g[static_cast<std::size_t>(t - 1)] = f(pairs[static_cast<std::size_t>(t - 1)]);
        for (int b = 1; b <= s; ++b)
        {
          int tau_b = (s - b) % 2 == 0 ? 1 : -1;
          hch[static_cast<std::size_t>(b - 1)] =
            scaled(fp(pairs[static_cast<std::size_t>(s - b)]), tau_b);
        }
        out.chains.push_back(std::move(g));
        out.chains.push_back(std::move(hch));
        ++i;
      }
    }
  }
  else
  {
    int p = out.form.p;
    int next_plus = 0;
    int next_minus = 0;
    auto take_pair = [&]() {
      int a = next_plus++;
      int b = p + next_minus++;
      RationalVector u = sum_vec(unit(dim, a), unit(dim, b));
      RationalVector w = sum_vec(scaled(unit(dim, a), BigRational(1, 2)),
                                 scaled(unit(dim, b), BigRational(-1, 2)));
      return std::pair{u, w};
    };
    for (std::size_t i = 0; i < rows.size(); ++i)
    {
      int k = rows[i].length;
      if (k % 2 == 1)
      {
        int h = (k - 1) / 2;
        int sval = rows[i].leading == Sign::Plus ? 1 : -1;
        std::vector<RationalVector> g(static_cast<std::size_t>(k));
        int w1 = (h % 2 == 0 ? 1 : -1) * sval;
        for (int a = 1; a <= h; ++a)
        {
          auto [u, w] = take_pair();
          int wa = ((a - 1) % 2 == 0 ? 1 : -1) * w1;
          g[static_cast<std::size_t>(a - 1)] = u;
          g[static_cast<std::size_t>(k - a)] = scaled(w, wa);
        }
        RationalVector z = sval > 0 ? unit(dim, next_plus++) : unit(dim, p + next_minus++);
        g[static_cast<std::size_t>(h)] = z;
        out.chains.push_back(std::move(g));
      }
      else
      {
        std::vector<RationalVector> g(static_cast<std::size_t>(k));
        std::vector<RationalVector> hch(static_cast<std::size_t>(k));
        for (int a = 1; a <= k; ++a)
        {
          auto [u, w] = take_pair();
          int va = (a - 1) % 2 == 0 ? 1 : -1;
          g[static_cast<std::size_t>(a - 1)] = u;
          hch[static_cast<std::size_t>(k - a)] = scaled(w, va);
        }
        out.chains.push_back(std::move(g));
        out.chains.push_back(std::move(hch));
        ++i;
      }
    }
  }

  out.X = matrix_from_chains(out.chains, dim);
  if (!in_lie_algebra(out.X, out.form))
    throw Error("internal: realization left the Lie algebra");
  return out;
}

// --- induction witness -----------------------------------------------------

WitnessParts build_witness_parts (const SignedDiagram &S, int n, int j)
{
  if (S.kind != Kind::Symplectic)
    throw Error("witness needs a symplectic diagram");
  InducedOrbitSet set = induce_real(S, n);
  int k = set.column_length;
  int r = set.rows;
  if (j < 0 || j > k - r)
    throw Error("component index out of range");
  int m = S.size() / 2;
  int dim = 2 * n;

  Realization R = realize(S);
  auto emb = [&](int a) { return a < m ? n - m + a : 2 * n - m + (a - m); };
  auto emb_vec = [&](const RationalVector &v) {
    RationalVector out(static_cast<std::size_t>(dim));
    for (int a = 0; a < 2 * m; ++a)
      out[static_cast<std::size_t>(emb(a))] = v[static_cast<std::size_t>(a)];
    return out;
  };

  WitnessParts w;
  w.levi = RationalMatrix(dim, dim);
  for (int a = 0; a < 2 * m; ++a)
    for (int b = 0; b < 2 * m; ++b)
      w.levi(emb(a), emb(b)) = R.X(a, b);

  RationalMatrix W = FormSpec::sp(n).matrix();
  w.nilradical = RationalMatrix(dim, dim);
  // Row i of S is attached to e_i through g e_iᵗW + e_i gᵗW.
  for (int i = 0; i < r; ++i)
  {
    RationalVector g = emb_vec(R.chains[static_cast<std::size_t>(i)].front());
    RationalVector gW = W.transpose().apply(g);  // (gᵗ W)ᵗ
    for (int a = 0; a < dim; ++a)
    {
      // g e_iᵗ W has row a equal to g_a times row i of W, i.e. entry (a, n+i).
      w.nilradical(a, n + i) += g[static_cast<std::size_t>(a)];
      // e_i gᵗ W has row i equal to gᵗ W.
      w.nilradical(i, a) += gW[static_cast<std::size_t>(a)];
    }
  }
  // Remaining basis vectors of V0 get ± e_l e_lᵗ W.
  int free_rows = k - r;
  for (int l = r; l < k; ++l)
  {
    int idx = l - r;
    int eps = idx < free_rows - j ? 1 : -1;
    w.nilradical(l, n + l) += eps;
  }
  if (!in_nilradical(w.nilradical, n, k))
    throw Error("internal: witness correction is not in the nilradical");
  w.X = w.levi + w.nilradical;
  return w;
}

RationalMatrix build_witness (const SignedDiagram &S, int n, int j)
{
  return build_witness_parts(S, n, j).X;
}

bool in_nilradical (const RationalMatrix &u, int n, int k)
{
  int dim = 2 * n;
  if (u.rows() != dim || u.cols() != dim || !in_lie_algebra(u, FormSpec::sp(n)))
    return false;
  // V0 = span(e_0..e_{k-1}); V0-perp = everything except e_{n}..e_{n+k-1}.
  auto in_v0 = [&](int i) { return i < k; };
  auto in_perp = [&](int i) { return !(i >= n && i < n + k); };
  for (int c = 0; c < dim; ++c)
    for (int rr = 0; rr < dim; ++rr)
    {
      if (sgn(u(rr, c)) == 0)
        continue;
      if (in_v0(c))
        return false;
      if (in_perp(c) && !in_v0(rr))
        return false;
      if (!in_perp(rr))
        return false;
    }
  return true;
}

// --- conjugation -----------------------------------------------------------

Conjugator random_form_preserving (const FormSpec &form, std::mt19937_64 &rng,
                                   int steps)
{
  int dim = form.dim();
  RationalMatrix J = form.matrix();
  Conjugator c{RationalMatrix::identity(dim), RationalMatrix::identity(dim)};
  std::uniform_int_distribution<int> coeff(-1, 1);
  std::uniform_int_distribution<int> scal(1, 2);
  for (int s = 0; s < steps; ++s)
  {
    RationalVector v(static_cast<std::size_t>(dim));
    bool nonzero = false;
    for (auto &x: v)
    {
      x = coeff(rng);
      nonzero = nonzero || sgn(x) != 0;
    }
    if (!nonzero)
      continue;
    RationalMatrix vv(dim, dim);
    RationalVector vJ = J.transpose().apply(v);  // (vᵗ J)ᵗ
    for (int a = 0; a < dim; ++a)
      for (int b = 0; b < dim; ++b)
        vv(a, b) = v[static_cast<std::size_t>(a)] * vJ[static_cast<std::size_t>(b)];
    RationalMatrix I = RationalMatrix::identity(dim);
    RationalMatrix g;
    RationalMatrix gi;
    if (form.type == FormSpec::Type::Symplectic)
    {
      BigRational cc = scal(rng) * (coeff(rng) < 0 ? -1 : 1);
      g = I + cc * vv;
      gi = I - cc * vv;
    }
    else
    {
      BigRational norm = bilinear(v, J, v);
      if (sgn(norm) == 0)
        continue;
      g = I - BigRational(2) / norm * vv;
      gi = g;
    }
    c.g = g * c.g;
    c.g_inv = c.g_inv * gi;
  }
  return c;
}

bool preserves_form (const RationalMatrix &g, const FormSpec &form)
{
  if (g.rows() != form.dim() || g.cols() != form.dim())
    return false;
  RationalMatrix J = form.matrix();
  return g.transpose() * J * g == J;
}

// --- serialization ---------------------------------------------------------

json to_json (const RationalMatrix &m)
{
  json rows = json::array();
  for (int i = 0; i < m.rows(); ++i)
  {
    json row = json::array();
    for (int j = 0; j < m.cols(); ++j)
      row.push_back(m(i, j).get_str());
    rows.push_back(row);
  }
  return rows;
}

RationalMatrix matrix_from_json (const json &j)
{
  if (!j.is_array())
    throw Error("matrix must be an array of rows");
  int rows = static_cast<int>(j.size());
  int cols = rows == 0 ? 0 : (j[0].is_array() ? static_cast<int>(j[0].size()) : -1);
  if (cols < 0)
    throw Error("matrix rows[0] must be an array");
  RationalMatrix m(rows, cols);
  for (int i = 0; i < rows; ++i)
  {
    const json &row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<int>(row.size()) != cols)
      throw Error("matrix rows[" + std::to_string(i) + "] has the wrong length");
    for (int c = 0; c < cols; ++c)
    {
      const json &e = row[static_cast<std::size_t>(c)];
      std::string path = "matrix rows[" + std::to_string(i) + "][" + std::to_string(c) + "]";
      if (e.is_number_integer())
        m(i, c) = BigRational(e.get<long>());
      else if (e.is_string())
      {
        BigRational x;
        if (x.set_str(e.get<std::string>(), 10) != 0)
          throw Error(path + " is not a rational number");
        if (sgn(x.get_den()) == 0)
          throw Error(path + " has zero denominator");
        x.canonicalize();
        m(i, c) = x;
      }
      else
        throw Error(path + " must be an integer or a rational string");
    }
  }
  return m;
}

} // namespace orbitcalc
