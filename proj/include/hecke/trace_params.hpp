#ifndef HECKE_TRACE_PARAMS_HPP
#define HECKE_TRACE_PARAMS_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

  /// Raised for parameter triples that violate the Thoma constraints.
  class ParamError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  /// Thoma-type parameters (alpha, beta, gamma) of an indecomposable trace,
  /// together with the Hecke parameter q.
  struct TraceParams {
    Rational q{2};
    std::vector<Rational> alpha;
    std::vector<Rational> beta;
    Rational gamma{0};

    /// Validating constructor; throws ParamError when q <= 0, a sequence is
    /// negative or increasing, or sum(alpha) + sum(beta) + gamma != 1 (the
    /// message names the exact deficit).
    static TraceParams make(Rational q, std::vector<Rational> alpha, std::vector<Rational> beta,
                            Rational gamma = Rational(0));

    void validate() const;

    /// {"q": "2", "alpha": ["1/2","1/2"], "beta": [], "gamma": "0"}
    std::string to_json() const;
    static TraceParams from_json(std::string_view text);
  };

  /// Parses a comma-separated rational list such as "1/2,1/2"; empty text
  /// gives an empty list.
  std::vector<Rational> parse_rational_list(std::string_view text);

  /// Weights a_i on nonzero integer indices: a_j = alpha_j and
  /// a_{-j} = beta_j for j > 0. Only nonzero weights enter the support,
  /// which is kept in increasing index order.
  class WeightFunction {
   public:
    /// Throws ParamError unless gamma == 0.
    explicit WeightFunction(TraceParams const& params);

    std::vector<int> const& support() const { return support_; }
    std::vector<Rational> const& weights() const { return weights_; }
    std::size_t size() const { return support_.size(); }
    /// Weight of index i; zero off the support.
    Rational weight(int index) const;
    /// Position of `index` in support(); throws std::out_of_range if absent.
    std::size_t position(int index) const;

   private:
    std::vector<int> support_;
    std::vector<Rational> weights_;
  };

}  // namespace hecke

#endif  // HECKE_TRACE_PARAMS_HPP
