#include <doctest.h>

#include <sstream>
#include <stdexcept>

#include "generators.hpp"
#include "hecke/polynomial.hpp"
#include "hecke/power_series.hpp"
#include "hecke/rational.hpp"
#include "hecke/root_ring.hpp"

using hecke::PowerSeries;
using hecke::QPolynomial;
using hecke::Rational;
using hecke::RootRing;
using hecke::SymbolTable;
using hecke::series_linear_fraction;

namespace {
  PowerSeries series(std::vector<Rational> c) {
    std::size_t const order = c.size() - 1;
    return PowerSeries(order, std::move(c));
  }
}  // namespace

TEST_SUITE("rational") {
  TEST_CASE("stored reduced with positive denominator") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.to_string() == "-3/2");
    CHECK(Rational(8, 4).to_string() == "2");
    CHECK(Rational(0, 5).to_string() == "0");
  }

  TEST_CASE("parse round trip") {
    CHECK(Rational::parse("1/2") == Rational(1, 2));
    CHECK(Rational::parse("-7") == Rational(-7));
    CHECK(Rational::parse("4/6").to_string() == "2/3");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
  }

  TEST_CASE("division by zero") {
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(0).inverse(), std::domain_error);
  }

  TEST_CASE("field laws on random rationals") {
    testgen::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      Rational a = testgen::small_rational(rng, 40);
      Rational b = testgen::nonzero_rational(rng, 40);
      Rational c = testgen::small_rational(rng, 40);
      CHECK((a / b) * b == a);
      CHECK(a + b == b + a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK((a - c) + c == a);
      // cross-multiplication oracle for the sum
      long an = a.numerator().get_si(), ad = a.denominator().get_si();
      long bn = b.numerator().get_si(), bd = b.denominator().get_si();
      CHECK(a + b == Rational(an * bd + bn * ad, ad * bd));
    }
  }

  TEST_CASE("powers and square roots") {
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(5).pow(0) == Rational(1));
    CHECK(Rational(1, 4).exact_sqrt() == Rational(1, 2));
    CHECK(Rational(9, 16).exact_sqrt() == Rational(3, 4));
    CHECK_FALSE(Rational(1, 2).exact_sqrt().has_value());
    CHECK_FALSE(Rational(-4).exact_sqrt().has_value());
  }
}

TEST_SUITE("polynomial") {
  TEST_CASE("trimmed coefficients and zero degree") {
    QPolynomial zero(std::vector<Rational>{0, 0});
    CHECK(zero.is_zero());
    CHECK_FALSE(zero.degree().has_value());
    QPolynomial p(std::vector<Rational>{1, 2, 0});
    CHECK(p.degree() == 1u);
    CHECK(p.to_string() == "[1,2]");
  }

  TEST_CASE("arithmetic and evaluation") {
    QPolynomial const q = QPolynomial::q();
    QPolynomial const p = (q - Rational(1)) * (q + Rational(1));
    CHECK(p == QPolynomial(std::vector<Rational>{-1, 0, 1}));
    CHECK(p.evaluate(Rational(3)) == Rational(8));
    CHECK(p.evaluate(Rational(1, 2)) == Rational(-3, 4));
  }
}

TEST_SUITE("power_series") {
  TEST_CASE("difference of squares") {
    CHECK(series_mul(series({1, 1, 0, 0}), series({1, -1, 0, 0})) == series({1, 0, -1, 0}));
  }

  TEST_CASE("unit series") {
    PowerSeries s = series({3, Rational(1, 2), -1});
    CHECK(series_mul(PowerSeries::one(2), s) == s);
  }

  TEST_CASE("geometric inverse") {
    CHECK(series_mul(series({1, 2, 4, 8}), series({1, -2, 0, 0})) == series({1, 0, 0, 0}));
  }

  TEST_CASE("mismatched orders are rejected") {
    CHECK_THROWS_AS(series_mul(PowerSeries::one(2), PowerSeries::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(series_add(PowerSeries::one(2), PowerSeries::one(3)), std::invalid_argument);
    CHECK_THROWS_AS(PowerSeries(3, {1, 2}), std::invalid_argument);
  }

  TEST_CASE("linear fraction expansions") {
    CHECK(series_linear_fraction(0, -2, 3) == series({1, 2, 4, 8}));
    CHECK(series_linear_fraction(Rational(3, 7), Rational(3, 7), 4) == PowerSeries::one(4));
    CHECK(series_linear_fraction(1, Rational(1, 2), 2) == series({1, Rational(1, 2), Rational(-1, 4)}));
  }

  TEST_CASE("linear fraction times denominator gives numerator") {
    testgen::Rng rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      Rational b = testgen::small_rational(rng);
      Rational c = testgen::small_rational(rng);
      std::vector<Rational> den(7, 0), num(7, 0);
      den[0] = 1;
      den[1] = c;
      num[0] = 1;
      num[1] = b;
      CHECK(series_mul(series_linear_fraction(b, c, 6), series(den)) == series(num));
    }
  }

  TEST_CASE("printing") {
    std::ostringstream os;
    os << series({1, Rational(-1, 2)});
    CHECK(os.str() == "[1, -1/2]");
  }
}

TEST_SUITE("root_ring") {
  TEST_CASE("sqrt q squared reduces") {
    auto table = SymbolTable::make({{"sqrt_q", 2}});
    RootRing s = RootRing::sqrt_of(table, 0);
    auto part = (s * s).rational_part();
    CHECK(part.pure);
    CHECK(part.value == Rational(2));
  }

  TEST_CASE("distinct symbols multiply to a product component") {
    auto table = SymbolTable::make({{"sqrt_a1", Rational(1, 2)}, {"sqrt_a2", Rational(1, 3)}});
    RootRing x = RootRing::sqrt_of(table, 0) * RootRing::sqrt_of(table, 1);
    REQUIRE(x.components().size() == 1);
    CHECK(x.components()[0].first == 3u);
    CHECK(x.components()[0].second == Rational(1));
    CHECK(x.to_string() == "sqrt_a1*sqrt_a2");
    auto ser = x.serialize();
    REQUIRE(ser.size() == 1);
    CHECK(ser[0].first == std::vector<std::string>{"sqrt_a1", "sqrt_a2"});
  }

  TEST_CASE("binomial square") {
    auto table = SymbolTable::make({{"sqrt_q", 3}});
    RootRing one_plus = RootRing(1) + RootRing::sqrt_of(table, 0);
    RootRing expected = RootRing(table, 4) + RootRing::sqrt_of(table, 0) * Rational(2);
    CHECK(one_plus * one_plus == expected);
    CHECK((one_plus * one_plus).to_string() == "4 + 2*sqrt_q");
  }

  TEST_CASE("rational part") {
    auto table = SymbolTable::make({{"sqrt_q", 2}});
    auto p1 = RootRing(Rational(5, 4)).rational_part();
    CHECK(p1.pure);
    CHECK(p1.value == Rational(5, 4));
    auto p2 = (RootRing(2) + RootRing::sqrt_of(table, 0) * Rational(3)).rational_part();
    CHECK_FALSE(p2.pure);
    CHECK(p2.value == Rational(2));
    auto p3 = RootRing().rational_part();
    CHECK(p3.pure);
    CHECK(p3.value.is_zero());
    CHECK(RootRing().components().empty());
  }

  TEST_CASE("perfect squares never become symbols") {
    auto table = SymbolTable::make({{"sqrt_a1", Rational(1, 4)}, {"sqrt_q", 2}});
    CHECK_FALSE(table->symbol_of(0).has_value());
    CHECK(table->symbol_count() == 1);
    RootRing r = RootRing::sqrt_of(table, 0);
    auto part = r.rational_part();
    CHECK(part.pure);
    CHECK(part.value == Rational(1, 2));
  }

  TEST_CASE("invalid bindings") {
    CHECK_THROWS_AS(SymbolTable::make({{"x", 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SymbolTable::make({{"x", -2}}), std::invalid_argument);
  }

  TEST_CASE("mismatched tables") {
    auto t1 = SymbolTable::make({{"sqrt_q", 2}});
    auto t2 = SymbolTable::make({{"sqrt_q", 3}});
    CHECK_THROWS_AS((void)(RootRing::sqrt_of(t1, 0) * RootRing::sqrt_of(t2, 0)), std::invalid_argument);
  }

  TEST_CASE("ring laws on random elements") {
    auto table = SymbolTable::make(
        {{"sqrt_q", 2}, {"sqrt_a1", Rational(1, 3)}, {"sqrt_a2", Rational(5, 7)}, {"sqrt_a3", 6}});
    testgen::Rng rng(3);
    auto random_element = [&] {
      RootRing x(table, testgen::small_rational(rng));
      for (std::size_t k = 0; k < 4; ++k) {
        RootRing term = RootRing(testgen::small_rational(rng));
        for (std::size_t s = 0; s < 4; ++s) {
          if (rng() % 2) {
            term *= RootRing::sqrt_of(table, s);
          }
        }
        x += term;
      }
      return x;
    };
    for (int trial = 0; trial < 60; ++trial) {
      RootRing a = random_element(), b = random_element(), c = random_element();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a - a == RootRing());
    }
  }
}
