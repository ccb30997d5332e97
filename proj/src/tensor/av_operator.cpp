#include "hecke/av_operator.hpp"

#include <stdexcept>
#include <string>

namespace hecke {

  AVOperator::AVOperator(std::size_t slots, std::size_t support_size)
      : slots_(slots), support_size_(support_size), table_size_(1) {
    for (std::size_t k = 0; k < slots; ++k) {
      table_size_ *= support_size;
    }
  }

  AVOperator AVOperator::identity(ModelContext const& ctx) {
    return term(ctx, Permutation(ctx.slots()), Table(1, RootRing(1)));
  }

  AVOperator AVOperator::term(ModelContext const& ctx, Permutation const& sigma, Table phi) {
    AVOperator op(ctx.slots(), ctx.support_size());
    if (phi.size() == 1) {
      phi.assign(op.table_size_, phi.front());
    }
    op.add_term(sigma.promoted(ctx.slots()), phi);
    return op;
  }

  AVOperator AVOperator::generator(ModelContext const& ctx, std::size_t j) {
    if (j < 1 || j + 1 > ctx.slots()) {
      throw std::out_of_range("generator slot " + std::to_string(j) + " out of range");
    }
    AVOperator op(ctx.slots(), ctx.support_size());
    Table diag(op.table_size_);
    Table swap(op.table_size_);
    RootRing const minus_sqrt_q = -ctx.sqrt_q();
    for (std::size_t code = 0; code < op.table_size_; ++code) {
      auto const pos = op.decode(code);
      int const a = ctx.support()[pos[j - 1]];
      int const b = ctx.support()[pos[j]];
      if (a == b) {
        diag[code] = a < 0 ? RootRing(-1) : RootRing(ctx.q());
      } else {
        swap[code] = minus_sqrt_q;
        if (a < b) {
          diag[code] = RootRing(ctx.q() - 1);
        }
      }
    }
    op.add_term(Permutation(ctx.slots()), diag);
    op.add_term(Permutation::simple(j, ctx.slots()), swap);
    return op;
  }

  void AVOperator::add_term(Permutation const& sigma, Table const& phi) {
    if (sigma.rank() != slots_ || phi.size() != table_size_) {
      throw std::invalid_argument("AV term shape does not match the operator");
    }
    auto [it, inserted] = terms_.try_emplace(sigma, phi);
    if (!inserted) {
      for (std::size_t c = 0; c < table_size_; ++c) {
        it->second[c] += phi[c];
      }
    }
    bool all_zero = true;
    for (auto const& v : it->second) {
      all_zero = all_zero && v.is_zero();
    }
    if (all_zero) {
      terms_.erase(it);
    }
  }

  std::size_t AVOperator::encode(std::vector<std::size_t> const& positions) const {
    std::size_t code = 0;
    for (std::size_t p : positions) {
      code = code * support_size_ + p;
    }
    return code;
  }

  std::vector<std::size_t> AVOperator::decode(std::size_t code) const {
    std::vector<std::size_t> positions(slots_);
    for (std::size_t k = slots_; k-- > 0;) {
      positions[k] = code % support_size_;
      code /= support_size_;
    }
    return positions;
  }

  std::size_t AVOperator::permute_code(Permutation const& sigma, std::size_t code) const {
    auto const positions = decode(code);
    std::vector<std::size_t> moved(slots_);
    for (std::size_t k = 0; k < slots_; ++k) {
      moved[static_cast<std::size_t>(sigma(static_cast<int>(k + 1)) - 1)] = positions[k];
    }
    return encode(moved);
  }

  AVOperator AVOperator::compose(AVOperator const& rhs) const {
    if (rhs.slots_ != slots_ || rhs.support_size_ != support_size_) {
      throw std::invalid_argument("composing AV operators of different shapes");
    }
    AVOperator out(slots_, support_size_);
    for (auto const& [tau, psi] : rhs.terms_) {
      std::vector<std::size_t> moved(table_size_);
      for (std::size_t c = 0; c < table_size_; ++c) {
        moved[c] = permute_code(tau, c);
      }
      for (auto const& [sigma, phi] : terms_) {
        Table theta(table_size_);
        for (std::size_t c = 0; c < table_size_; ++c) {
          if (!psi[c].is_zero() && !phi[moved[c]].is_zero()) {
            theta[c] = phi[moved[c]] * psi[c];
          }
        }
        out.add_term(sigma * tau, theta);
      }
    }
    return out;
  }

  AVOperator& AVOperator::operator+=(AVOperator const& rhs) {
    for (auto const& [sigma, phi] : rhs.terms_) {
      add_term(sigma, phi);
    }
    return *this;
  }

  AVOperator& AVOperator::operator*=(RootRing const& scalar) {
    AVOperator out(slots_, support_size_);
    for (auto const& [sigma, phi] : terms_) {
      Table scaled(table_size_);
      for (std::size_t c = 0; c < table_size_; ++c) {
        scaled[c] = phi[c] * scalar;
      }
      out.add_term(sigma, scaled);
    }
    return *this = std::move(out);
  }

  AVOperator AVOperator::transposed() const {
    AVOperator out(slots_, support_size_);
    for (auto const& [sigma, phi] : terms_) {
      // D(Phi) T(sigma^-1) = T(sigma^-1) D(Phi o sigma^-1)
      Permutation const inv = sigma.inverse();
      Table moved(table_size_);
      for (std::size_t c = 0; c < table_size_; ++c) {
        moved[c] = phi[permute_code(inv, c)];
      }
      out.add_term(inv, moved);
    }
    return out;
  }

  TensorState AVOperator::apply(ModelContext const& ctx, Side side, TensorState const& state) const {
    if (ctx.slots() != slots_ || ctx.support_size() != support_size_) {
      throw std::invalid_argument("AV operator does not match the model context");
    }
    TensorState out;
    std::vector<std::size_t> positions(slots_);
    for (auto const& [basis, coeff] : state.terms()) {
      auto const& row = side == Side::left ? basis.v : basis.w;
      for (std::size_t k = 0; k < slots_; ++k) {
        positions[k] = ctx.position(row[k]);
      }
      std::size_t const code = encode(positions);
      for (auto const& [sigma, phi] : terms_) {
        if (phi[code].is_zero()) {
          continue;
        }
        PureTensor moved = basis;
        auto& target = side == Side::left ? moved.v : moved.w;
        for (std::size_t k = 0; k < slots_; ++k) {
          target[static_cast<std::size_t>(sigma(static_cast<int>(k + 1)) - 1)] = row[k];
        }
        out.add(moved, coeff * phi[code]);
      }
    }
    return out;
  }

  AVOperator av_normal_form(ModelContext const& ctx, HeckeElement const& x) {
    if (x.rank() > ctx.slots()) {
      throw std::out_of_range("Hecke element of rank " + std::to_string(x.rank())
                              + " does not act on " + std::to_string(ctx.slots()) + " slots");
    }
    std::vector<AVOperator> generators;
    for (std::size_t j = 1; j < ctx.slots(); ++j) {
      generators.push_back(AVOperator::generator(ctx, j));
    }
    AVOperator out(ctx.slots(), ctx.support_size());
    for (auto const& [w, coeff] : x.terms()) {
      AVOperator product = AVOperator::identity(ctx);
      for (std::size_t m : reduced_word(w)) {
        product = product.compose(generators[m - 1]);
      }
      product *= RootRing(coeff.evaluate(ctx.q()));
      out += product;
    }
    return out;
  }

  Rational trace_via_omega(ModelContext const& ctx, AVOperator const& op) {
    std::size_t const s = ctx.support_size();
    RootRing total;
    for (auto const& [sigma, phi] : op.terms()) {
      auto const cycles = sigma.cycles();
      std::vector<std::size_t> choice(cycles.size(), 0);
      std::vector<std::size_t> positions(op.slots());
      while (true) {
        Rational weight = 1;
        for (std::size_t c = 0; c < cycles.size(); ++c) {
          Rational const& a = ctx.weight(ctx.support()[choice[c]]);
          for (int k : cycles[c]) {
            positions[static_cast<std::size_t>(k - 1)] = choice[c];
            weight *= a;
          }
        }
        if (!weight.is_zero()) {
          total += phi[op.encode(positions)] * weight;
        }
        std::size_t c = 0;
        while (c < choice.size() && ++choice[c] == s) {
          choice[c++] = 0;
        }
        if (c == choice.size()) {
          break;
        }
      }
    }
    auto const part = total.rational_part();
    if (!part.pure) {
      throw std::logic_error("Omega-sum has irrational components: " + total.to_string());
    }
    return part.value;
  }

}  // namespace hecke
