#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "zzm/rational.hpp"

namespace zzm {

using Index = Eigen::Index;

template <typename Scalar>
using Vec2 = Eigen::Matrix<Scalar, 2, 1>;
template <typename Scalar>
using Mat2 = Eigen::Matrix<Scalar, 2, 2>;
template <typename Scalar>
using VecX = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;
template <typename Scalar>
using MatX = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;

using Vec2q = Vec2<Rational>;
using Mat2q = Mat2<Rational>;
using VecXq = VecX<Rational>;
using MatXq = MatX<Rational>;

using Vec2i = Vec2<std::int64_t>;
using Mat2i = Mat2<std::int64_t>;
using VecXi = VecX<std::int64_t>;
using MatXi = MatX<std::int64_t>;

template <typename Scalar>
Scalar cross(const Vec2<Scalar>& a, const Vec2<Scalar>& b) {
  return a.x() * b.y() - a.y() * b.x();
}

template <typename Scalar>
Scalar det2(const Mat2<Scalar>& m) {
  return m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
}

/// Inverse of a 2x2 matrix over a field; caller guarantees det != 0.
template <typename Scalar>
Mat2<Scalar> inverse2(const Mat2<Scalar>& m) {
  Scalar d = det2(m);
  Mat2<Scalar> r;
  r << m(1, 1) / d, -m(0, 1) / d, -m(1, 0) / d, m(0, 0) / d;
  return r;
}

template <typename Derived>
MatXq to_rational(const Eigen::MatrixBase<Derived>& m) {
  return m.template cast<std::int64_t>().unaryExpr([](std::int64_t v) { return Rational(v); });
}

/// Lexicographic comparison of rational 2-vectors.
inline bool lex_less(const Vec2q& a, const Vec2q& b) {
  if (a.x() != b.x()) return a.x() < b.x();
  return a.y() < b.y();
}

}  // namespace zzm
