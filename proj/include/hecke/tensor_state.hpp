#ifndef HECKE_TENSOR_STATE_HPP
#define HECKE_TENSOR_STATE_HPP

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "hecke/root_ring.hpp"

namespace hecke {

  /// Basis tensor eta[I; J] = (v_{i_1} (x) w_{j_1}) (x) ... (x) (v_{i_n} (x) w_{j_n}).
  struct PureTensor {
    std::vector<int> v;  // I, the V-indices
    std::vector<int> w;  // J, the W-indices

    friend bool operator==(PureTensor const&, PureTensor const&) = default;
    friend auto operator<=>(PureTensor const&, PureTensor const&) = default;
  };

  /// Sparse vector over the orthonormal basis of pure tensors.
  class TensorState {
   public:
    using Terms = std::map<PureTensor, RootRing>;

    void add(PureTensor const& basis, RootRing const& coeff);
    Terms const& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    TensorState& operator+=(TensorState const& rhs);
    TensorState& operator*=(Rational const& scalar);

    /// One line per term: "I=[...] J=[...] coeff=<rootring>".
    std::string dump() const;

    friend bool operator==(TensorState const&, TensorState const&) = default;

   private:
    Terms terms_;
  };

  /// Real inner product in the orthonormal pure-tensor basis.
  RootRing inner(TensorState const& a, TensorState const& b);

}  // namespace hecke

#endif  // HECKE_TENSOR_STATE_HPP
