#include <doctest.h>

#include <map>
#include <stdexcept>

#include "generators.hpp"
#include "hecke/partition.hpp"
#include "hecke/power_series.hpp"
#include "hecke/trace_params.hpp"
#include "hecke/vk_traces.hpp"

using hecke::PartitionSpec;
using hecke::PowerSeries;
using hecke::Rational;
using hecke::TraceParams;

namespace {
  TraceParams params(Rational q, std::vector<Rational> alpha, std::vector<Rational> beta) {
    return TraceParams::make(q, std::move(alpha), std::move(beta));
  }

  TraceParams const half_half = params(2, {Rational(1, 2), Rational(1, 2)}, {});

  Rational factorial(unsigned n) {
    Rational out(1);
    for (unsigned k = 2; k <= n; ++k) {
      out *= Rational(k);
    }
    return out;
  }

  // Oracle: the trace formula summed over partitions generated as nonincreasing part
  // lists, with p_k computed directly from its definition.
  void partitions(unsigned rest, unsigned max_part, std::vector<unsigned>& current,
                  std::vector<std::vector<unsigned>>& out) {
    if (rest == 0) {
      out.push_back(current);
      return;
    }
    for (unsigned part = std::min(rest, max_part); part >= 1; --part) {
      current.push_back(part);
      partitions(rest - part, part, current, out);
      current.pop_back();
    }
  }

  Rational oracle_vk(unsigned m, TraceParams const& p) {
    std::vector<std::vector<unsigned>> parts;
    std::vector<unsigned> current;
    partitions(m, m, current, parts);
    Rational total(0);
    for (auto const& lambda : parts) {
      std::map<unsigned, unsigned> mult;
      for (unsigned part : lambda) {
        ++mult[part];
      }
      Rational term(1);
      for (auto [k, mu] : mult) {
        Rational pk(0);
        for (auto const& a : p.alpha) {
          pk += a.pow(static_cast<int>(k));
        }
        for (auto const& b : p.beta) {
          pk += (k % 2 == 1 ? Rational(1) : Rational(-1)) * b.pow(static_cast<int>(k));
        }
        Rational factor = (p.q.pow(static_cast<int>(k)) - 1) / (Rational(k) * Rational(1));
        term *= factor.pow(static_cast<int>(mu)) / factorial(mu);
        if (k >= 2) {
          term *= pk.pow(static_cast<int>(mu));
        }
      }
      total += term;
    }
    return total / (p.q - 1);
  }

  // Oracle for the delta weight from its closed form in the multiplicities.
  Rational oracle_delta(std::vector<int> const& tuple, Rational const& q) {
    std::map<int, unsigned> mult;
    for (int i : tuple) {
      ++mult[i];
    }
    int sign_exp = 0, q_exp = 0, u = 0, v = 0;
    for (auto [i, c] : mult) {
      if (i < 0) {
        ++u;
        sign_exp += static_cast<int>(c) - 1;
      } else {
        ++v;
        q_exp += static_cast<int>(c) - 1;
      }
    }
    Rational sign = sign_exp % 2 == 0 ? Rational(1) : Rational(-1);
    return sign * q.pow(q_exp) * (q - 1).pow(u + v - 1);
  }

  std::vector<Rational> const test_qs = {Rational(2), Rational(3), Rational(1, 2), Rational(5, 3)};
}  // namespace

TEST_SUITE("trace_params") {
  TEST_CASE("validation") {
    CHECK_NOTHROW(params(2, {Rational(1, 2)}, {Rational(1, 2)}));
    CHECK_THROWS_AS(params(0, {Rational(1)}, {}), hecke::ParamError);
    CHECK_THROWS_AS(params(2, {Rational(1, 4), Rational(1, 2)}, {Rational(1, 4)}), hecke::ParamError);
    CHECK_THROWS_AS(params(2, {Rational(-1, 2), Rational(3, 2)}, {}), hecke::ParamError);
    try {
      params(2, {Rational(1, 3)}, {Rational(1, 3)});
      FAIL("expected a ParamError");
    } catch (hecke::ParamError const& e) {
      CHECK(std::string(e.what()).find("-1/3") != std::string::npos);
    }
  }

  TEST_CASE("record round trip") {
    TraceParams p = params(Rational(3, 2), {Rational(2, 3), Rational(1, 6)}, {Rational(1, 6)});
    CHECK(p.to_json() == R"({"q":"3/2","alpha":["2/3","1/6"],"beta":["1/6"],"gamma":"0"})");
    TraceParams back = TraceParams::from_json(p.to_json());
    CHECK(back.q == p.q);
    CHECK(back.alpha == p.alpha);
    CHECK(back.beta == p.beta);
    CHECK(back.gamma == p.gamma);
    CHECK_THROWS_AS(TraceParams::from_json(R"({"q":"2","alpha":["1/2"],"beta":[]})"), hecke::ParamError);
    CHECK_THROWS_AS(TraceParams::from_json("not json"), hecke::ParamError);
  }

  TEST_CASE("weight function support") {
    hecke::WeightFunction wf(params(2, {Rational(1, 2), Rational(1, 4)}, {Rational(1, 4)}));
    CHECK(wf.support() == std::vector<int>{-1, 1, 2});
    CHECK(wf.weight(-1) == Rational(1, 4));
    CHECK(wf.weight(2) == Rational(1, 4));
    CHECK_THROWS_AS(hecke::WeightFunction(TraceParams::make(2, {Rational(1, 2)}, {}, Rational(1, 2))),
                    hecke::ParamError);
    hecke::WeightFunction with_zero(params(2, {Rational(1), Rational(0)}, {}));
    CHECK(with_zero.support() == std::vector<int>{1});
  }
}

TEST_SUITE("vk_traces") {
  TEST_CASE("super newton sums") {
    CHECK(hecke::super_newton(1, half_half) == Rational(1));
    CHECK(hecke::super_newton(2, params(2, {}, {1})) == Rational(-1));
    CHECK(hecke::super_newton(3, params(2, {Rational(1, 2)}, {Rational(1, 2)})) == Rational(1, 4));
  }

  TEST_CASE("multiplicity enumeration") {
    auto one = hecke::enumerate_multiplicities(1);
    REQUIRE(one.size() == 1);
    CHECK(one[0][1] == 1);
    CHECK(hecke::enumerate_multiplicities(2).size() == 2);
    std::vector<std::size_t> const partition_counts = {1, 2, 3, 5, 7, 11, 15, 22};
    for (std::size_t m = 1; m <= partition_counts.size(); ++m) {
      auto all = hecke::enumerate_multiplicities(m);
      CHECK(all.size() == partition_counts[m - 1]);
      for (auto const& mu : all) {
        CHECK(mu.weight() == m);
      }
      for (std::size_t i = 0; i < all.size(); ++i) {
        for (std::size_t j = i + 1; j < all.size(); ++j) {
          CHECK_FALSE(all[i] == all[j]);
        }
      }
    }
  }

  TEST_CASE("values on zeta_m") {
    CHECK(hecke::vk_zeta_m(1, half_half) == Rational(1));
    CHECK(hecke::vk_zeta_m(3, params(2, {1}, {})) == Rational(4));
    CHECK(hecke::vk_zeta_m(2, half_half) == Rational(5, 4));
    CHECK_THROWS_AS(hecke::vk_zeta_m(2, params(1, {1}, {})), hecke::ParamError);
  }

  TEST_CASE("gamma enters only through normalization") {
    TraceParams p = TraceParams::make(3, {Rational(1, 2)}, {Rational(1, 4)}, Rational(1, 4));
    for (unsigned m = 1; m <= 6; ++m) {
      CHECK(hecke::vk_zeta_m(m, p) == oracle_vk(m, p));
    }
  }

  TEST_CASE("agrees with the partition-list oracle") {
    for (auto const& q : test_qs) {
      for (auto const& p : testgen::named_parameter_sets(q)) {
        for (unsigned m = 1; m <= 7; ++m) {
          CHECK(hecke::vk_zeta_m(m, p) == oracle_vk(m, p));
        }
      }
    }
  }

  TEST_CASE("one-dimensional anchors") {
    for (auto const& q : test_qs) {
      for (unsigned m = 1; m <= 8; ++m) {
        CHECK(hecke::vk_zeta_m(m, params(q, {1}, {})) == q.pow(static_cast<int>(m) - 1));
        CHECK(hecke::vk_zeta_m(m, params(q, {}, {1})) == Rational(m % 2 == 1 ? 1 : -1));
      }
    }
  }

  TEST_CASE("partition products") {
    CHECK(hecke::trace_zeta_lambda(PartitionSpec({1, 1, 1}), half_half) == Rational(1));
    CHECK(hecke::trace_zeta_lambda(PartitionSpec({2, 2}), half_half) == Rational(25, 16));
    CHECK(hecke::trace_zeta_lambda(PartitionSpec({3}), params(3, {1}, {})) == Rational(9));
    CHECK(hecke::trace_zeta_lambda(PartitionSpec({2}), params(1, half_half.alpha, {})) == Rational(1, 2));
  }

  TEST_CASE("thoma values") {
    TraceParams const at_one = params(1, half_half.alpha, {});
    CHECK(hecke::thoma_value(2, at_one) == Rational(1, 2));
    CHECK(hecke::thoma_value(1, at_one) == Rational(1));
    CHECK(hecke::thoma_value(3, params(1, {}, {1})) == Rational(1));
  }

  TEST_CASE("generating series") {
    CHECK(hecke::generating_series(params(2, {1}, {}), 4) == PowerSeries(4, {1, 1, 2, 4, 8}));
    CHECK(hecke::generating_series(params(2, {}, {1}), 4) == PowerSeries(4, {1, 1, -1, 1, -1}));
    CHECK(hecke::series_from_traces(params(2, {1}, {}), 3) == PowerSeries(3, {1, 1, 2, 4}));
    CHECK(hecke::series_from_traces(half_half, 2) == PowerSeries(2, {1, 1, Rational(5, 4)}));
    CHECK_THROWS_AS(hecke::generating_series(TraceParams::make(2, {Rational(1, 2)}, {}, Rational(1, 2)), 3),
                    hecke::ParamError);
  }

  TEST_CASE("series identity to order 8") {
    for (auto const& q : test_qs) {
      for (auto const& p : testgen::named_parameter_sets(q)) {
        PowerSeries g = hecke::generating_series(p, 8);
        CHECK(g[0] == Rational(1));
        CHECK(hecke::series_from_traces(p, 8) == g);
      }
    }
  }

  TEST_CASE("series at q = 1 has no z terms") {
    CHECK(hecke::generating_series(params(1, half_half.alpha, {}), 5) == PowerSeries::one(5));
  }

  TEST_CASE("delta eigenvalues") {
    std::vector<int> const ones{1, 1}, negs{-1, -1}, mixed{1, 2};
    CHECK(hecke::delta_eigenvalue(ones, Rational(7)) == Rational(7));
    CHECK(hecke::delta_eigenvalue(negs, Rational(7)) == Rational(-1));
    CHECK(hecke::delta_eigenvalue(mixed, Rational(7)) == Rational(6));
    std::vector<int> const unsorted{2, 1}, with_zero{0, 1};
    CHECK_THROWS_AS(hecke::delta_eigenvalue(unsorted, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(hecke::delta_eigenvalue(with_zero, Rational(2)), std::invalid_argument);
    std::vector<std::vector<int>> const tuples = {
        {-2, -2, -1, 1, 1, 1, 3}, {-1, -1, -1}, {1, 2, 3}, {-3, 2, 2}, {5}};
    for (auto const& t : tuples) {
      for (auto const& q : test_qs) {
        CHECK(hecke::delta_eigenvalue(t, q) == oracle_delta(t, q));
      }
    }
  }

  TEST_CASE("diagonal sums") {
    CHECK(hecke::zeta_via_diagonal(2, half_half) == Rational(5, 4));
    CHECK(hecke::zeta_via_diagonal(1, half_half) == Rational(1));
    CHECK(hecke::zeta_via_diagonal(3, params(2, {1}, {})) == Rational(4));
    for (auto const& q : test_qs) {
      for (auto const& p : testgen::named_parameter_sets(q)) {
        for (unsigned m = 1; m <= 5; ++m) {
          Rational const direct = hecke::zeta_direct_sum(m, p);
          CHECK(direct == hecke::zeta_grouped_sum(m, p));
          CHECK(direct == hecke::vk_zeta_m(m, p));
        }
      }
    }
  }

  TEST_CASE("direct diagonal sum at q = 1 gives the thoma value") {
    for (auto const& p : testgen::named_parameter_sets(Rational(1))) {
      for (unsigned m = 1; m <= 5; ++m) {
        CHECK(hecke::zeta_direct_sum(m, p) == hecke::thoma_value(m, p));
      }
    }
  }
}
