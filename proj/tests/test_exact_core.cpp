#include "doctest.h"

#include "oracles.hpp"
#include "support.hpp"

#include "spinmap/half_int.hpp"
#include "spinmap/linear_solve.hpp"
#include "spinmap/polynomial.hpp"
#include "spinmap/rational.hpp"

#include <random>

using namespace spinmap;

namespace {
RationalPolynomial poly(std::initializer_list<BigRational> c) { return RationalPolynomial(std::vector<BigRational>(c)); }
}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("lowest terms and sign on numerator") {
    const BigRational q(6, -8);
    CHECK(q.str() == "-3/4");
    CHECK(q.numerator_str() == "-3");
    CHECK(q.denominator_str() == "4");
    CHECK(BigRational(4, 2).is_integer());
    CHECK(BigRational(4, 2).str() == "2");
  }

  TEST_CASE("parse accepts n and n/d only") {
    CHECK(BigRational::parse("-17/51") == BigRational(-1, 3));
    CHECK(BigRational::parse("42") == BigRational(42));
    CHECK(BigRational::parse("123456789012345678901234567890").str() == "123456789012345678901234567890");
    for (const char* bad : {"", "1/", "/2", "1/-2", "+3", " 1", "1 ", "1.5", "a", "1/2/3"}) {
      CAPTURE(bad);
      CHECK(throws_kind([&] { (void)BigRational::parse(bad); }, ErrorKind::Parse));
    }
    CHECK(throws_kind([] { (void)BigRational::parse("1/0"); }, ErrorKind::Parse));
  }

  TEST_CASE("division by zero") {
    CHECK(throws_kind([] { (void)(BigRational(1) / BigRational(0)); }, ErrorKind::DivisionByZero));
    CHECK(throws_kind([] { (void)BigRational(1, 0); }, ErrorKind::DivisionByZero));
  }

  TEST_CASE("large denominators stay exact") {
    const BigRational a = BigRational::parse("9/262683704098816000000");
    const BigRational b = BigRational::parse("1/39836991946752000000");
    const BigRational sum = a + b;
    CHECK(sum - a == b);
    CHECK((sum * BigRational(262683704098816000)).is_integer() == false);
  }

  TEST_CASE("field axioms on random values") {
    std::mt19937_64 rng(11);
    for (int n = 0; n < 500; ++n) {
      const BigRational a = oracle::random_rational(rng, 1000, 97);
      const BigRational b = oracle::random_rational(rng, 1000, 97);
      const BigRational c = oracle::random_rational(rng, 1000, 97);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a * b) * c == a * (b * c));
      if (!b.is_zero()) CHECK((a / b) * b == a);
    }
  }

  TEST_CASE("ordering and pow") {
    CHECK(BigRational(-1, 2) < BigRational(1, 3));
    CHECK(BigRational(2, 3).pow(3) == BigRational(8, 27));
    CHECK(BigRational(5).pow(0) == BigRational(1));
    CHECK(factorial(10) == BigRational(3628800));
  }
}

TEST_SUITE("half_int") {
  TEST_CASE("parse and print") {
    CHECK(HalfInt::parse("7/2").doubled() == 7);
    CHECK(HalfInt::parse("-3").doubled() == -6);
    CHECK(HalfInt::parse("-3/2").str() == "-3/2");
    CHECK(HalfInt::from_doubled(4).str() == "2");
    CHECK(throws_kind([] { (void)HalfInt::parse("1/3"); }, ErrorKind::Parse));
    CHECK(throws_kind([] { (void)HalfInt::parse("x"); }, ErrorKind::Parse));
  }

  TEST_CASE("arithmetic") {
    const HalfInt a = HalfInt::from_doubled(3);
    const HalfInt b = HalfInt::from_doubled(-1);
    CHECK((a + b) == HalfInt::integer(1));
    CHECK((a - b).doubled() == 4);
    CHECK((-a).doubled() == -3);
    CHECK(a.to_rational() == BigRational(3, 2));
    CHECK_FALSE(a.is_integer());
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("evaluation examples") {
    CHECK(poly({0, BigRational(13, 12), 0, BigRational(-1, 3)}).evaluate(BigRational(3, 2)) == BigRational(1, 2));
    CHECK(RationalPolynomial().evaluate(BigRational(7)) == BigRational(0));
    CHECK(poly({0, BigRational(-7, 6), 0, BigRational(2, 3)}).evaluate(BigRational(1, 2)) == BigRational(-1, 2));
  }

  TEST_CASE("arithmetic examples") {
    CHECK(poly({1}) + poly({0, 1}) == poly({1, 1}));
    CHECK(poly({-1, 1}) * poly({1, 1}) == poly({-1, 0, 1}));
    CHECK(poly({0, 2}).scaled(BigRational(1, 2)) == poly({0, 1}));
    CHECK((poly({1, 2}) - poly({1, 2})).is_zero());
    CHECK((poly({1, 2}) - poly({1, 2})).degree() == -1);
  }

  TEST_CASE("product evaluates to product of values") {
    std::mt19937_64 rng(5);
    std::uniform_int_distribution<int> deg(0, 8);
    for (int n = 0; n < 200; ++n) {
      std::vector<BigRational> a(static_cast<std::size_t>(deg(rng)) + 1), b(static_cast<std::size_t>(deg(rng)) + 1);
      for (auto& c : a) c = oracle::random_rational(rng);
      for (auto& c : b) c = oracle::random_rational(rng);
      const RationalPolynomial p(a), q(b);
      const BigRational x = oracle::random_rational(rng);
      CHECK((p * q).evaluate(x) == p.evaluate(x) * q.evaluate(x));
      CHECK((p + q).evaluate(x) == p.evaluate(x) + q.evaluate(x));
    }
  }

  TEST_CASE("text round trip") {
    const RationalPolynomial p = poly({0, BigRational(-7, 6), 0, BigRational(2, 3)});
    CHECK(p.str() == "[0, -7/6, 0, 2/3]");
    CHECK(RationalPolynomial::parse(p.str()) == p);
    CHECK(RationalPolynomial::parse("[]").is_zero());
    CHECK(throws_kind([] { (void)RationalPolynomial::parse("[1,2]"); }, ErrorKind::Parse));
    CHECK(throws_kind([] { (void)RationalPolynomial::parse("1, 2"); }, ErrorKind::Parse));
  }

  TEST_CASE("synthetic division") {
    const RationalPolynomial p = poly({-1, 0, 1});
    CHECK(p.divided_by_root(BigRational(1)) == poly({1, 1}));
    CHECK(throws_kind([&] { (void)p.divided_by_root(BigRational(2)); }, ErrorKind::Inconsistent));
  }

  TEST_CASE("oddness") {
    CHECK(poly({0, 1, 0, 5}).is_odd());
    CHECK_FALSE(poly({1, 1}).is_odd());
    CHECK(RationalPolynomial().is_odd());
  }
}

TEST_SUITE("linear_solve") {
  TEST_CASE("examples") {
    RationalMatrix id(2, 2);
    id(0, 0) = 1;
    id(1, 1) = 1;
    const std::vector<BigRational> b{BigRational(3, 2), BigRational(-1)};
    CHECK(linear_solve(id, b) == b);

    RationalMatrix d(2, 2);
    d(0, 0) = 2;
    d(1, 1) = 4;
    const std::vector<BigRational> ones{1, 1};
    CHECK(linear_solve(d, ones) == std::vector<BigRational>{BigRational(1, 2), BigRational(1, 4)});
  }

  TEST_CASE("Hilbert-like 10x10 recovers a known vector") {
    const std::size_t n = 10;
    RationalMatrix h(n, n);
    std::vector<BigRational> x(n);
    for (std::size_t r = 0; r < n; ++r) {
      x[r] = BigRational(static_cast<std::int64_t>(r) - 4, static_cast<std::int64_t>(r) + 3);
      for (std::size_t c = 0; c < n; ++c) h(r, c) = BigRational(1, static_cast<std::int64_t>(r + c + 1));
    }
    CHECK(linear_solve(h, h.multiply(x)) == x);
  }

  TEST_CASE("random nonsingular systems up to 20") {
    std::mt19937_64 rng(19);
    for (std::size_t n = 1; n <= 20; ++n) {
      RationalMatrix a(n, n);
      std::vector<BigRational> x(n);
      for (std::size_t r = 0; r < n; ++r) {
        x[r] = oracle::random_rational(rng);
        for (std::size_t c = 0; c < n; ++c) a(r, c) = oracle::random_rational(rng, 9, 5);
        a(r, r) += BigRational(100);  // diagonally dominant
      }
      CHECK(linear_solve(a, a.multiply(x)) == x);
    }
  }

  TEST_CASE("error kinds") {
    RationalMatrix s(2, 2);
    s(0, 0) = 1;
    s(0, 1) = 2;
    s(1, 0) = 2;
    s(1, 1) = 4;
    CHECK(throws_kind([&] { (void)linear_solve(s, std::vector<BigRational>{1, 2}); }, ErrorKind::Singular));
    CHECK(throws_kind([&] { (void)linear_solve(s, std::vector<BigRational>{1, 3}); }, ErrorKind::Inconsistent));
    CHECK(throws_kind([&] { (void)linear_solve(s, std::vector<BigRational>{1}); }, ErrorKind::ShapeMismatch));
  }

  TEST_CASE("consistent overdetermined system") {
    RationalMatrix a(3, 2);
    a(0, 0) = 1;
    a(1, 1) = 1;
    a(2, 0) = 1;
    a(2, 1) = 1;
    CHECK(linear_solve(a, std::vector<BigRational>{2, 3, 5}) == std::vector<BigRational>{2, 3});
    CHECK(throws_kind([&] { (void)linear_solve(a, std::vector<BigRational>{2, 3, 6}); }, ErrorKind::Inconsistent));
  }
}
