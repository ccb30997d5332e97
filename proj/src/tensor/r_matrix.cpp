#include "hecke/tensor_model.hpp"

#include <stdexcept>
#include <string>

namespace hecke {

  namespace {
    void require_slot(ModelContext const& ctx, std::size_t j) {
      if (j < 1 || j + 1 > ctx.slots()) {
        throw std::out_of_range("R-matrix slot " + std::to_string(j) + " out of range for "
                                + std::to_string(ctx.slots()) + " slots");
      }
    }

    std::vector<int>& row(PureTensor& t, Side side) { return side == Side::left ? t.v : t.w; }

    template <bool WithSwap>
    TensorState apply_pair_operator(ModelContext const& ctx, std::size_t j, Side side,
                                    TensorState const& state) {
      require_slot(ctx, j);
      RootRing const q = ctx.q();
      RootRing const q_minus_one = ctx.q() - 1;
      RootRing const minus_sqrt_q = -ctx.sqrt_q();
      TensorState out;
      for (auto const& [basis, coeff] : state.terms()) {
        PureTensor t = basis;
        auto& idx = row(t, side);
        int const a = idx[j - 1];
        int const b = idx[j];
        if (a == b) {
          out.add(t, a < 0 ? -coeff : coeff * q);
          continue;
        }
        if (a < b) {
          out.add(t, coeff * q_minus_one);
        }
        if constexpr (WithSwap) {
          std::swap(idx[j - 1], idx[j]);
          out.add(t, coeff * minus_sqrt_q);
        }
      }
      return out;
    }

    std::size_t int_pow(std::size_t base, std::size_t e) {
      std::size_t out = 1;
      while (e-- > 0) {
        out *= base;
      }
      return out;
    }
  }  // namespace

  TensorState build_xi(ModelContext const& ctx) {
    std::size_t const n = ctx.slots();
    auto const& support = ctx.support();
    TensorState xi;
    std::vector<int> tuple(n);
    std::vector<std::size_t> digits(n, 0);
    std::size_t const total = int_pow(support.size(), n);
    for (std::size_t code = 0; code < total; ++code) {
      RootRing coeff(ctx.table(), Rational(1));
      for (std::size_t k = 0; k < n; ++k) {
        tuple[k] = support[digits[k]];
        coeff *= ctx.sqrt_weight(tuple[k]);
      }
      xi.add(PureTensor{tuple, tuple}, coeff);
      for (std::size_t k = n; k-- > 0;) {
        if (++digits[k] < support.size()) {
          break;
        }
        digits[k] = 0;
      }
    }
    return xi;
  }

  TensorState r_apply(ModelContext const& ctx, std::size_t j, Side side, TensorState const& state) {
    return apply_pair_operator<true>(ctx, j, side, state);
  }

  TensorState d_apply(ModelContext const& ctx, std::size_t j, Side side, TensorState const& state) {
    return apply_pair_operator<false>(ctx, j, side, state);
  }

  TensorState lift_hecke_apply(ModelContext const& ctx, HeckeElement const& x, Side side,
                               TensorState const& state) {
    if (x.rank() > ctx.slots()) {
      throw std::out_of_range("Hecke element of rank " + std::to_string(x.rank())
                              + " does not act on " + std::to_string(ctx.slots()) + " slots");
    }
    TensorState out;
    for (auto const& [w, coeff] : x.terms()) {
      Rational const scalar = coeff.evaluate(ctx.q());
      auto const word = reduced_word(w);
      TensorState image = state;
      for (auto it = word.rbegin(); it != word.rend(); ++it) {
        image = r_apply(ctx, *it, side, image);
      }
      image *= scalar;
      out += image;
    }
    return out;
  }

  RootRing matrix_element_exact(ModelContext const& ctx, HeckeElement const& x) {
    TensorState const xi = build_xi(ctx);
    return inner(lift_hecke_apply(ctx, x, Side::left, xi), xi);
  }

  Rational matrix_element(ModelContext const& ctx, HeckeElement const& x) {
    RootRing const value = matrix_element_exact(ctx, x);
    auto const part = value.rational_part();
    if (!part.pure) {
      throw std::logic_error("matrix element of " + x.to_string()
                             + " has irrational components: " + value.to_string());
    }
    return part.value;
  }

  Rational diagonal_path_zeta(ModelContext const& ctx, std::size_t m) {
    if (m < 1 || m > ctx.slots()) {
      throw std::out_of_range("diagonal path needs 1 <= m <= slots");
    }
    TensorState const xi = build_xi(ctx);
    TensorState image = xi;
    for (std::size_t j = 1; j < m; ++j) {
      image = d_apply(ctx, j, Side::left, image);
    }
    RootRing const value = inner(image, xi);
    auto const part = value.rational_part();
    if (!part.pure) {
      throw std::logic_error("diagonal path value has irrational components: "
                             + value.to_string());
    }
    return part.value;
  }

  DenseMatrix DenseMatrix::zero(std::size_t dim) {
    return DenseMatrix{dim, std::vector<RootRing>(dim * dim)};
  }

  DenseMatrix DenseMatrix::identity(std::size_t dim) {
    DenseMatrix out = zero(dim);
    for (std::size_t i = 0; i < dim; ++i) {
      out.at(i, i) = RootRing(1);
    }
    return out;
  }

  DenseMatrix operator*(DenseMatrix const& a, DenseMatrix const& b) {
    DenseMatrix out = DenseMatrix::zero(a.dim);
    for (std::size_t i = 0; i < a.dim; ++i) {
      for (std::size_t k = 0; k < a.dim; ++k) {
        if (a.at(i, k).is_zero()) {
          continue;
        }
        for (std::size_t j = 0; j < a.dim; ++j) {
          if (!b.at(k, j).is_zero()) {
            out.at(i, j) += a.at(i, k) * b.at(k, j);
          }
        }
      }
    }
    return out;
  }

  DenseMatrix operator+(DenseMatrix const& a, DenseMatrix const& b) {
    DenseMatrix out = a;
    for (std::size_t i = 0; i < out.entries.size(); ++i) {
      out.entries[i] += b.entries[i];
    }
    return out;
  }

  DenseMatrix operator*(RootRing const& s, DenseMatrix const& a) {
    DenseMatrix out = a;
    for (auto& e : out.entries) {
      e = s * e;
    }
    return out;
  }

  DenseMatrix dense_r_matrix(ModelContext const& ctx) {
    auto const& support = ctx.support();
    std::size_t const s = support.size();
    DenseMatrix r = DenseMatrix::zero(s * s);
    auto index = [s](std::size_t a, std::size_t b) { return a * s + b; };
    // column = input basis vector v_a (x) v_b, row = output
    for (std::size_t a = 0; a < s; ++a) {
      // -sum_{i<0} e_ii (x) f_ii + q sum_{i>0} e_ii (x) f_ii
      r.at(index(a, a), index(a, a)) += support[a] < 0 ? RootRing(-1) : RootRing(ctx.q());
      for (std::size_t b = 0; b < s; ++b) {
        if (a == b) {
          continue;
        }
        // -sqrt(q) sum_{i != j} e_ji (x) f_ij : v_a (x) v_b -> v_b (x) v_a
        r.at(index(b, a), index(a, b)) -= ctx.sqrt_q();
        // (q-1) times the projector onto ordered pairs i < j
        if (support[a] < support[b]) {
          r.at(index(a, b), index(a, b)) += RootRing(ctx.q() - 1);
        }
      }
    }
    return r;
  }

  DenseMatrix dense_r_on_factors(ModelContext const& ctx, std::size_t j, std::size_t factors) {
    if (j < 1 || j + 1 > factors) {
      throw std::out_of_range("R-matrix factor pair out of range");
    }
    std::size_t const s = ctx.support_size();
    DenseMatrix const r = dense_r_matrix(ctx);
    std::size_t const before = int_pow(s, j - 1);
    std::size_t const after = int_pow(s, factors - j - 1);
    DenseMatrix out = DenseMatrix::zero(before * s * s * after);
    for (std::size_t hi = 0; hi < before; ++hi) {
      for (std::size_t lo = 0; lo < after; ++lo) {
        for (std::size_t row = 0; row < s * s; ++row) {
          for (std::size_t col = 0; col < s * s; ++col) {
            if (r.at(row, col).is_zero()) {
              continue;
            }
            out.at((hi * s * s + row) * after + lo, (hi * s * s + col) * after + lo) = r.at(row, col);
          }
        }
      }
    }
    return out;
  }

}  // namespace hecke
