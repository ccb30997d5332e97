#include <doctest.h>

#include <stdexcept>

#include "generators.hpp"
#include "hecke/hecke_element.hpp"
#include "hecke/partition.hpp"
#include "hecke/permutation.hpp"

using hecke::HeckeElement;
using hecke::Permutation;
using hecke::QPolynomial;
using hecke::Rational;

namespace {
  QPolynomial const q = QPolynomial::q();
  QPolynomial const q_minus_1 = QPolynomial::q() - Rational(1);

  HeckeElement sigma(std::size_t m, std::size_t rank) { return HeckeElement::generator(m, rank); }

  Permutation perm(std::vector<int> images) { return Permutation(std::move(images)); }

  // Oracle: right multiplication by generators, T_x T_s = T_{xs} when the
  // length goes up and (q-1) T_x + q T_{xs} otherwise. Y is expanded along
  // words found by stripping right descents, independently of mul().
  HeckeElement times_generator_right(HeckeElement const& x, std::size_t m) {
    HeckeElement out(x.rank());
    Permutation const s = Permutation::simple(m, x.rank());
    for (auto const& [w, c] : x.terms()) {
      Permutation const ws = w * s;
      if (hecke::perm_length(ws) > hecke::perm_length(w)) {
        out.add_term(ws, c);
      } else {
        out.add_term(w, c * q_minus_1);
        out.add_term(ws, c * q);
      }
    }
    return out;
  }

  HeckeElement oracle_mul(HeckeElement const& x, HeckeElement const& y) {
    std::size_t const rank = std::max(x.rank(), y.rank());
    HeckeElement const xp = x.promoted(rank);
    HeckeElement const yp = y.promoted(rank);
    HeckeElement out(rank);
    for (auto const& [w, c] : yp.terms()) {
      std::vector<std::size_t> word;  // w = s_{k1} ... s_{kr}, collected from the right
      Permutation v = w;
      while (!v.is_identity()) {
        for (std::size_t m = 1; m < rank; ++m) {
          if (v(static_cast<int>(m)) > v(static_cast<int>(m) + 1)) {
            word.insert(word.begin(), m);
            v = v * Permutation::simple(m, rank);
            break;
          }
        }
      }
      HeckeElement acc = xp;
      for (std::size_t m : word) {
        acc = times_generator_right(acc, m);
      }
      out += acc * c;
    }
    return out;
  }
}  // namespace

TEST_SUITE("permutation") {
  TEST_CASE("length") {
    CHECK(hecke::perm_length(Permutation(4)) == 0);
    CHECK(hecke::perm_length(Permutation::simple(1, 2)) == 1);
    CHECK(hecke::perm_length(perm({3, 2, 1})) == 3);
  }

  TEST_CASE("parse and print") {
    CHECK(Permutation::parse("[2,1,3]") == perm({2, 1, 3}));
    CHECK(perm({2, 1, 3}).to_string() == "[2,1,3]");
    CHECK_THROWS_AS(Permutation::parse("[1,1]"), std::invalid_argument);
    CHECK_THROWS_AS(perm({0, 1}), std::invalid_argument);
  }

  TEST_CASE("composition is right to left") {
    Permutation const s1 = Permutation::simple(1, 3), s2 = Permutation::simple(2, 3);
    // (s1 s2)(1) = s1(1) = 2
    CHECK((s1 * s2)(1) == 2);
    CHECK((s1 * s2).images() == std::vector<int>{2, 3, 1});
    CHECK(s1.left_simple(2) == s2 * s1);
  }

  TEST_CASE("reduced words have length many letters and rebuild w") {
    for (std::size_t n = 1; n <= 5; ++n) {
      for (auto const& w : hecke::all_permutations(n)) {
        auto word = hecke::reduced_word(w);
        CHECK(word.size() == hecke::perm_length(w));
        Permutation rebuilt(n);
        for (std::size_t m : word) {
          rebuilt = rebuilt * Permutation::simple(m, n);
        }
        CHECK(rebuilt == w);
      }
    }
  }

  TEST_CASE("cycles") {
    auto cyc = perm({2, 3, 1, 4}).cycles();
    REQUIRE(cyc.size() == 2);
    CHECK(cyc[0] == std::vector<int>{1, 2, 3});
    CHECK(cyc[1] == std::vector<int>{4});
  }

  TEST_CASE("all permutations counts") {
    CHECK(hecke::all_permutations(4).size() == 24);
    CHECK(hecke::all_permutations(0).size() == 1);
  }
}

TEST_SUITE("hecke_element") {
  TEST_CASE("quadratic relation for one generator") {
    HeckeElement const t = sigma(1, 2);
    HeckeElement expected = HeckeElement::basis(Permutation::simple(1, 2), q_minus_1);
    expected.add_term(Permutation(2), q);
    CHECK(t * t == expected);
    CHECK(hecke::gen_mul_left(1, HeckeElement::unit(2)) == t);
  }

  TEST_CASE("braid relation from the unit") {
    HeckeElement const e = HeckeElement::unit(3);
    HeckeElement const lhs = hecke::gen_mul_left(1, hecke::gen_mul_left(2, hecke::gen_mul_left(1, e)));
    HeckeElement const rhs = hecke::gen_mul_left(2, hecke::gen_mul_left(1, hecke::gen_mul_left(2, e)));
    CHECK(lhs == rhs);
    CHECK(lhs == HeckeElement::basis(perm({3, 2, 1})));
  }

  TEST_CASE("generator index range") {
    CHECK_THROWS_AS(hecke::gen_mul_left(3, HeckeElement::unit(3)), std::out_of_range);
    CHECK_THROWS_AS(hecke::gen_mul_left(0, HeckeElement::unit(3)), std::out_of_range);
  }

  TEST_CASE("hand-derived products") {
    HeckeElement const s1 = sigma(1, 3), s2 = sigma(2, 3);
    HeckeElement const s1s2 = HeckeElement::basis(Permutation::simple(1, 3) * Permutation::simple(2, 3));
    CHECK(s1 * s2 == s1s2);
    HeckeElement expected = HeckeElement::basis(Permutation::simple(1, 3) * Permutation::simple(2, 3), q_minus_1);
    expected.add_term(Permutation::simple(1, 3), q);
    CHECK((s1 * s2) * s2 == expected);
    CHECK((s1 * s2) * s1 == s1 * (s2 * s1));
    CHECK(HeckeElement::unit(3) * expected == expected);
  }

  TEST_CASE("defining relations in ranks 2 to 5") {
    for (std::size_t n = 2; n <= 5; ++n) {
      HeckeElement const one = HeckeElement::unit(n);
      for (std::size_t m = 1; m < n; ++m) {
        HeckeElement const s = sigma(m, n);
        CHECK((s + one) * (s - one * q) == HeckeElement(n));
        if (m + 1 < n) {
          HeckeElement const t = sigma(m + 1, n);
          CHECK(s * t * s == t * s * t);
        }
        for (std::size_t l = 1; l < n; ++l) {
          if (l + 1 < m || m + 1 < l) {
            CHECK(s * sigma(l, n) == sigma(l, n) * s);
          }
        }
      }
    }
  }

  TEST_CASE("products of generators stay in the T-basis of S_n") {
    testgen::Rng rng(17);
    for (std::size_t n = 2; n <= 5; ++n) {
      std::uniform_int_distribution<std::size_t> gen(1, n - 1);
      for (int trial = 0; trial < 10; ++trial) {
        HeckeElement x = HeckeElement::unit(n);
        for (int k = 0; k < 6; ++k) {
          x = x * sigma(gen(rng), n);
        }
        CHECK(x.rank() == n);
        std::size_t factorial = 1;
        for (std::size_t k = 2; k <= n; ++k) {
          factorial *= k;
        }
        CHECK(x.support_size() <= factorial);
        for (auto const& [w, c] : x.terms()) {
          CHECK(w.rank() == n);
          CHECK_FALSE(c.is_zero());
        }
      }
    }
  }

  TEST_CASE("two reduced words of the longest element agree") {
    HeckeElement const a = sigma(1, 3) * sigma(2, 3) * sigma(1, 3);
    HeckeElement const b = sigma(2, 3) * sigma(1, 3) * sigma(2, 3);
    testgen::Rng rng(23);
    for (int trial = 0; trial < 10; ++trial) {
      HeckeElement y = testgen::random_element(rng, 3);
      CHECK(a * y == b * y);
    }
  }

  TEST_CASE("mul agrees with the right-multiplication oracle") {
    testgen::Rng rng(29);
    for (std::size_t n = 2; n <= 4; ++n) {
      for (int trial = 0; trial < 15; ++trial) {
        HeckeElement x = testgen::random_element(rng, n);
        HeckeElement y = testgen::random_element(rng, n);
        CHECK(x * y == oracle_mul(x, y));
      }
    }
  }

  TEST_CASE("associativity on random triples") {
    testgen::Rng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
      HeckeElement x = testgen::random_element(rng, 4);
      HeckeElement y = testgen::random_element(rng, 4);
      HeckeElement z = testgen::random_element(rng, 4);
      CHECK((x * y) * z == x * (y * z));
    }
  }

  TEST_CASE("star and transpose") {
    HeckeElement const s1 = sigma(1, 3);
    CHECK(hecke::star(s1) == s1);
    CHECK(hecke::transpose(s1) == s1);
    Permutation const w = Permutation::simple(1, 3) * Permutation::simple(2, 3);
    CHECK(hecke::star(HeckeElement::basis(w)) == HeckeElement::basis(w.inverse()));
    CHECK(w.inverse() == Permutation::simple(2, 3) * Permutation::simple(1, 3));
    testgen::Rng rng(37);
    for (int trial = 0; trial < 20; ++trial) {
      HeckeElement x = testgen::random_element(rng, 3);
      HeckeElement y = testgen::random_element(rng, 3);
      CHECK(hecke::star(hecke::star(x)) == x);
      CHECK(hecke::transpose(hecke::transpose(x)) == x);
      CHECK(hecke::star(x * y) == hecke::star(y) * hecke::star(x));
      CHECK(hecke::transpose(x * y) == hecke::transpose(y) * hecke::transpose(x));
    }
  }

  TEST_CASE("promotion commutes with multiplication") {
    testgen::Rng rng(41);
    for (int trial = 0; trial < 15; ++trial) {
      HeckeElement x = testgen::random_element(rng, 3);
      HeckeElement y = testgen::random_element(rng, 3);
      CHECK((x * y).promoted(5) == x.promoted(5) * y.promoted(5));
      CHECK((x * y).promoted(4).rank() == 4);
    }
    CHECK(sigma(1, 2) == sigma(1, 4));
  }

  TEST_CASE("serialization") {
    HeckeElement x = HeckeElement::basis(Permutation::simple(1, 2), q_minus_1);
    x.add_term(Permutation(2), q);
    CHECK(x.to_string() == "[([1,2],[0,1]),([2,1],[-1,1])]");
  }
}

TEST_SUITE("zeta_elements") {
  TEST_CASE("intervals") {
    CHECK(hecke::zeta_interval(1, 1) == HeckeElement::unit());
    CHECK(hecke::zeta_interval(1, 3)
          == HeckeElement::basis(Permutation::simple(2, 3) * Permutation::simple(1, 3)));
    CHECK(hecke::zeta_interval(2, 4)
          == HeckeElement::basis(Permutation::simple(3, 4) * Permutation::simple(2, 4)));
    CHECK(hecke::zeta_interval(1, 3) == sigma(2, 3) * sigma(1, 3));
    CHECK_THROWS(hecke::zeta_interval(3, 2));
  }

  TEST_CASE("partition blocks") {
    using hecke::PartitionSpec;
    CHECK(hecke::zeta_lambda(PartitionSpec({4})) == hecke::zeta_m(4));
    CHECK(hecke::zeta_m(4) == sigma(3, 4) * sigma(2, 4) * sigma(1, 4));
    CHECK(hecke::zeta_lambda(PartitionSpec({1, 1, 1})) == HeckeElement::unit(3));
    CHECK(hecke::zeta_lambda(PartitionSpec({2, 2}))
          == HeckeElement::basis(Permutation::simple(1, 4) * Permutation::simple(3, 4)));
    CHECK(hecke::zeta_lambda(PartitionSpec({3, 2})) == hecke::zeta_interval(4, 5) * hecke::zeta_interval(1, 3));
  }

  TEST_CASE("partition spec validation") {
    using hecke::PartitionSpec;
    CHECK(PartitionSpec::parse("3,2,2").partial_sums() == std::vector<std::size_t>{3, 5, 7});
    CHECK_THROWS_AS(PartitionSpec({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec({2, 0}), std::invalid_argument);
    CHECK_THROWS_AS(PartitionSpec::parse("2,x"), std::invalid_argument);
  }
}
