#include "zzm/linalg.hpp"

#include <cstdlib>
#include <numeric>

namespace zzm {

namespace {

using checked::add;
using checked::floor_div;
using checked::mul;
using checked::sub;

// Extended gcd: returns g >= 0 with x*a + y*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t x0 = 1, y0 = 0, x1 = 0, y1 = 1;
  while (b != 0) {
    std::int64_t q = a / b;
    std::int64_t t = a - q * b;
    a = b;
    b = t;
    t = sub(x0, mul(q, x1));
    x0 = x1;
    x1 = t;
    t = sub(y0, mul(q, y1));
    y0 = y1;
    y1 = t;
  }
  if (a < 0) {
    a = -a;
    x0 = -x0;
    y0 = -y0;
  }
  x = x0;
  y = y0;
  return a;
}

// c_i <- c_i*a + c_j*b ; c_j <- c_i*c + c_j*d  (unimodular 2x2 on columns)
void combine(MatXi& M, Index i, Index j, std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  for (Index r = 0; r < M.rows(); ++r) {
    std::int64_t u = M(r, i), v = M(r, j);
    M(r, i) = add(mul(u, a), mul(v, b));
    M(r, j) = add(mul(u, c), mul(v, d));
  }
}

void axpy_col(MatXi& M, Index dst, Index src, std::int64_t f) {
  if (f == 0) return;
  for (Index r = 0; r < M.rows(); ++r) M(r, dst) = sub(M(r, dst), mul(f, M(r, src)));
}

}  // namespace

ColumnHermite column_hermite(const MatXi& A) {
  ColumnHermite out;
  out.H = A;
  out.U = MatXi::Identity(A.cols(), A.cols());
  MatXi& H = out.H;
  MatXi& U = out.U;
  Index c = 0;
  for (Index r = 0; r < H.rows() && c < H.cols(); ++r) {
    for (Index j = c + 1; j < H.cols(); ++j) {
      if (H(r, j) == 0) continue;
      std::int64_t a = H(r, c), b = H(r, j), x, y;
      std::int64_t g = ext_gcd(a, b, x, y);
      std::int64_t p = a / g, q = b / g;
      // [x -q; y p] has det x*p + y*q = 1.
      combine(H, c, j, x, y, -q, p);
      combine(U, c, j, x, y, -q, p);
    }
    if (H(r, c) == 0) continue;
    if (H(r, c) < 0) {
      for (Index k = 0; k < H.rows(); ++k) H(k, c) = -H(k, c);
      for (Index k = 0; k < U.rows(); ++k) U(k, c) = -U(k, c);
    }
    for (Index k = 0; k < c; ++k) {
      std::int64_t f = floor_div(H(r, k), H(r, c));
      axpy_col(H, k, c, f);
      axpy_col(U, k, c, f);
    }
    out.pivot_rows.push_back(r);
    ++c;
  }
  out.rank = c;
  return out;
}

MatXi integer_kernel(const MatXi& A) {
  ColumnHermite ch = column_hermite(A);
  MatXi K = ch.U.rightCols(A.cols() - ch.rank);
  if (K.cols() == 0) return K;
  ColumnHermite red = column_hermite(K);
  return red.H.leftCols(red.rank);
}

std::optional<VecXi> integer_solve(const MatXi& A, const VecXi& b) {
  ColumnHermite ch = column_hermite(A);
  VecXi y = VecXi::Zero(A.cols());
  VecXi rest = b;
  std::size_t k = 0;
  for (Index r = 0; r < A.rows(); ++r) {
    if (k < ch.pivot_rows.size() && ch.pivot_rows[k] == r) {
      Index c = static_cast<Index>(k);
      if (rest(r) % ch.H(r, c) != 0) return std::nullopt;
      std::int64_t f = rest(r) / ch.H(r, c);
      y(c) = f;
      for (Index i = 0; i < A.rows(); ++i) rest(i) = sub(rest(i), mul(f, ch.H(i, c)));
      ++k;
    } else if (rest(r) != 0) {
      return std::nullopt;
    }
  }
  VecXi x = VecXi::Zero(A.cols());
  for (Index c = 0; c < A.cols(); ++c)
    for (Index i = 0; i < A.cols(); ++i) x(i) = add(x(i), mul(ch.U(i, c), y(c)));
  return x;
}

MatXi lattice_basis(const MatXi& gens) {
  ColumnHermite ch = column_hermite(gens);
  return ch.H.leftCols(ch.rank);
}

Index integer_rank(const MatXi& A) { return column_hermite(A).rank; }

std::int64_t common_denominator(const MatXq& m) {
  std::int64_t d = 1;
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) d = checked::lcm(d, m(i, j).den());
  return d;
}

}  // namespace zzm
