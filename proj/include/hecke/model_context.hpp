#ifndef HECKE_MODEL_CONTEXT_HPP
#define HECKE_MODEL_CONTEXT_HPP

#include <cstddef>
#include <vector>

#include "hecke/root_ring.hpp"
#include "hecke/trace_params.hpp"

namespace hecke {

  /// Everything the finite tensor model over (V (x) W)^{(x) n} needs: the
  /// parameters (gamma must be 0), the number of slots n, the index support
  /// S and the square-root symbols sqrt_q, sqrt_a1, ..., one per nonzero
  /// weight.
  class ModelContext {
   public:
    /// `padding` adds indices of weight zero to S; they carry no symbol and
    /// never appear in Xi. Throws ParamError when gamma != 0.
    ModelContext(TraceParams params, std::size_t slots, std::vector<int> padding = {});

    TraceParams const& params() const { return params_; }
    Rational const& q() const { return params_.q; }
    std::size_t slots() const { return slots_; }

    /// Increasing list of indices (negative ones stand for beta weights).
    std::vector<int> const& support() const { return support_; }
    std::size_t support_size() const { return support_.size(); }
    std::size_t position(int index) const;

    Rational const& weight(int index) const { return weights_[position(index)]; }
    RootRing const& sqrt_weight(int index) const { return sqrt_weights_[position(index)]; }
    RootRing const& sqrt_q() const { return sqrt_q_; }
    SymbolTablePtr const& table() const { return table_; }

    /// The context with the same parameters and support on another number
    /// of slots.
    ModelContext with_slots(std::size_t slots) const;

   private:
    TraceParams params_;
    std::size_t slots_;
    std::vector<int> padding_;
    std::vector<int> support_;
    std::vector<Rational> weights_;
    std::vector<RootRing> sqrt_weights_;
    SymbolTablePtr table_;
    RootRing sqrt_q_;
  };

}  // namespace hecke

#endif  // HECKE_MODEL_CONTEXT_HPP
