#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "zzm/error.hpp"
#include "zzm/zebra.hpp"

using namespace zzm;

TEST_CASE("parse F2") {
  auto p = parse_polynomial("z21+z41");
  MatXi V(2, 2);
  V << -1, 1, 1, 1;
  CHECK(p.V == V);
  CHECK(p.M == MatXi::Identity(2, 2));
}

TEST_CASE("parse the five-monomial example") {
  auto p = parse_polynomial("z21+z31+z41+z61+z31*z61*z42");
  MatXi V(2, 5);
  V << -1, 0, 1, 2, 2,  //
      1, 2, 1, 0, 2;
  MatXi M(5, 5);
  M << 1, 0, 0, 0, 0,  //
      0, 1, 0, 0, 1,   //
      0, 0, 1, 0, 0,   //
      0, 0, 0, 1, 1,   //
      0, 0, 0, 0, 1;
  CHECK(p.V == V);
  CHECK(p.M == M);
  CHECK(p.str() == "z21+z31+z41+z61+z31*z61*z42");
}

TEST_CASE("parser normalization") {
  auto p = parse_polynomial("  z21 * z21 + z412 ");
  CHECK(p.monomial_count() == 2);
  CHECK(p.frequencies[1].multiplier == 12);
  // cancelling pair drops its frequency
  auto q = parse_polynomial("z21+z31*z41+z41*z31");
  CHECK(q.frequency_count() == 1);
  CHECK(q.monomial_count() == 1);
}

TEST_CASE("parser errors") {
  auto kind_of = [](const char* t) {
    try {
      parse_polynomial(t);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Invariant;
  };
  CHECK(kind_of("z21+z21") == ErrorKind::Domain);
  CHECK(kind_of("z71") == ErrorKind::Domain);
  CHECK(kind_of("z20") == ErrorKind::Domain);
  CHECK(kind_of("z2") == ErrorKind::Syntax);
  CHECK(kind_of("") == ErrorKind::Syntax);
  try {
    parse_polynomial("z21+x41");
    FAIL("expected syntax error");
  } catch (const Error& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("evaluation examples") {
  auto f2 = parse_polynomial("z21+z41");
  CHECK(evaluate(f2, Vec2q(Rational(0), Rational(0))) == 0);
  // hand evaluation: floor(-1)=-1 -> 1, floor(1)=1 -> 1, sum 0
  CHECK(evaluate(f2, Vec2q(Rational(1, 2), Rational(0))) == 0);
  // floor(-1/2)=-1 -> 1, floor(1/2)=0 -> 0
  CHECK(evaluate(f2, Vec2q(Rational(1, 4), Rational(0))) == 1);

  auto z61 = parse_polynomial("z61");
  // 2x.(2,0) = 4x
  CHECK(evaluate(z61, Vec2q(Rational(1, 8), Rational(5))) == 0);
  CHECK(evaluate(z61, Vec2q(Rational(1, 4), Rational(-3))) == 1);
  CHECK(evaluate(z61, Vec2q(Rational(3, 8), Rational(0))) == 1);

  MatXi X(3, 2);
  X << 0, 0, 2, 0, 1, 0;
  VecXi expect(3);
  expect << 0, 0, 1;
  CHECK(evaluate(f2, X, 4) == expect);
}

TEST_CASE("matrix formula agrees with the naive oracle") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coord(-40, 40);
  for (int trial = 0; trial < 40; ++trial) {
    std::string text = oracle::random_polynomial(rng);
    ZebraPolynomial p;
    try {
      p = parse_polynomial(text);
    } catch (const Error&) {
      continue;
    }
    MatXi X(50, 2);
    for (Index r = 0; r < X.rows(); ++r) X.row(r) << coord(rng), coord(rng);
    VecXi vals = evaluate(p, X, 12);
    for (Index r = 0; r < X.rows(); ++r) {
      Vec2q x(Rational(X(r, 0), 12), Rational(X(r, 1), 12));
      CHECK(vals(r) == oracle::naive_value(p, x));
      CHECK(evaluate(p, x) == vals(r));
    }
  }
}

TEST_CASE("periodicity and F2 addition") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(-30, 30);
  for (int trial = 0; trial < 30; ++trial) {
    std::string a = oracle::random_polynomial(rng, 2), b = oracle::random_polynomial(rng, 2);
    ZebraPolynomial pa, pb, pab;
    try {
      pa = parse_polynomial(a);
      pb = parse_polynomial(b);
      pab = parse_polynomial(a + "+" + b);
    } catch (const Error&) {
      continue;
    }
    for (int k = 0; k < 20; ++k) {
      Vec2q x(Rational(coord(rng), 7), Rational(coord(rng), 5));
      CHECK(evaluate(pab, x) == (evaluate(pa, x) ^ evaluate(pb, x)));
      // tau = (1/2, 1/2): tau . (k v~) = k (v~x + v~y)/2, an integer for every v~
      Vec2q tau(Rational(1, 2), Rational(1, 2));
      CHECK(evaluate(pa, x) == evaluate(pa, Vec2q(x + tau)));
    }
  }
}
