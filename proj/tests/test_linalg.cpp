#include "doctest.h"
#include "zzm/linalg.hpp"

using namespace zzm;

TEST_CASE("rational elimination") {
  MatXq a(2, 3);
  a << Rational(1), Rational(2), Rational(3), Rational(2), Rational(4), Rational(6);
  CHECK(exact_rank(a) == 1);
  MatXq n = exact_nullspace(a);
  CHECK(n.cols() == 2);
  CHECK((a * n).isZero(Rational(0)));

  MatXq A(2, 2), B(2, 1);
  A << Rational(2), Rational(1), Rational(1), Rational(3);
  B << Rational(1), Rational(2);
  auto x = exact_solve(A, B);
  REQUIRE(x);
  CHECK((A * *x - B).isZero(Rational(0)));
  CHECK(exact_determinant(A) == Rational(5));

  MatXq S(2, 1);
  S << Rational(1), Rational(2);
  MatXq lhs(2, 2);
  lhs << Rational(1), Rational(1), Rational(1), Rational(1);
  CHECK_FALSE(exact_solve(lhs, S));
}

TEST_CASE("integer hermite, kernel, solve") {
  MatXi A(2, 3);
  A << 2, 4, 6, 1, 3, 5;
  ColumnHermite ch = column_hermite(A);
  CHECK((A * ch.U - ch.H).isZero());
  CHECK(zzm::abs(exact_determinant(to_rational(ch.U))) == Rational(1));
  CHECK(ch.rank == 2);

  MatXi K = integer_kernel(A);
  REQUIRE(K.cols() == 1);
  CHECK((A * K).isZero());
  // (1, -2, 1) generates the kernel
  CHECK(std::abs(K(0, 0)) == 1);

  VecXi b(2);
  b << 2, 1;
  auto x = integer_solve(A, b);
  REQUIRE(x);
  CHECK(A * *x == b);
  b << 1, 0;  // 2x+4y+6z odd: impossible
  CHECK_FALSE(integer_solve(A, b));

  MatXi gens(2, 3);
  gens << 2, 0, 1, 0, 2, 1;
  MatXi L = lattice_basis(gens);
  CHECK(L.cols() == 2);
  CHECK(zzm::abs(exact_determinant(to_rational(L))) == Rational(2));
}
