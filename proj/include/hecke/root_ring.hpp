#ifndef HECKE_ROOT_RING_HPP
#define HECKE_ROOT_RING_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "hecke/rational.hpp"

namespace hecke {

  /// Names and values of the square roots adjoined to the rationals. Each
  /// binding asks for sqrt(value); values that are squares of rationals are
  /// resolved at construction and never become formal symbols, so every
  /// RootRing built on a table has a unique representation.
  class SymbolTable {
   public:
    struct Binding {
      std::string name;
      Rational value;
    };

    static constexpr std::size_t max_symbols = 64;

    /// Throws std::invalid_argument for non-positive values or more than
    /// max_symbols irrational roots.
    static std::shared_ptr<SymbolTable const> make(std::vector<Binding> bindings);

    std::size_t binding_count() const { return bindings_.size(); }
    Binding const& binding(std::size_t k) const { return bindings_.at(k); }

    /// Formal symbol carrying binding k, or nullopt if its root is rational.
    std::optional<std::size_t> symbol_of(std::size_t k) const { return symbol_of_.at(k); }
    std::optional<Rational> const& rational_root(std::size_t k) const { return rational_root_.at(k); }

    std::size_t symbol_count() const { return symbols_.size(); }
    std::string const& symbol_name(std::size_t s) const { return bindings_[symbols_.at(s)].name; }
    Rational const& symbol_square(std::size_t s) const { return bindings_[symbols_.at(s)].value; }

   private:
    SymbolTable() = default;

    std::vector<Binding> bindings_;
    std::vector<std::optional<std::size_t>> symbol_of_;
    std::vector<std::optional<Rational>> rational_root_;
    std::vector<std::size_t> symbols_;  // symbol index -> binding index
  };

  using SymbolTablePtr = std::shared_ptr<SymbolTable const>;

  /// Element of Q[sqrt x_1, ..., sqrt x_k] for the symbols of a SymbolTable:
  /// a finite sum of rational multiples of square-free symbol products,
  /// each product keyed by a bitmask of symbols. Values without a table are
  /// plain rationals and combine with any table.
  class RootRing {
   public:
    using Mask = std::uint64_t;
    using Component = std::pair<Mask, Rational>;

    struct RationalPart {
      Rational value;
      bool pure;
    };

    RootRing() = default;
    RootRing(Rational value);  // NOLINT: rationals embed implicitly
    RootRing(long value) : RootRing(Rational(value)) {}  // NOLINT
    RootRing(SymbolTablePtr table, Rational value);

    /// sqrt of the k-th binding of `table`.
    static RootRing sqrt_of(SymbolTablePtr const& table, std::size_t k);

    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of the empty symbol product and whether every other
    /// component vanishes.
    RationalPart rational_part() const;

    /// Components sorted by mask; zero coefficients never appear.
    std::vector<Component> const& components() const { return terms_; }
    SymbolTablePtr const& table() const { return table_; }

    /// "2 + 3*sqrt_q - 1/2*sqrt_a1*sqrt_a2"; "0" for zero.
    std::string to_string() const;

    /// (symbol names, rational) pairs in mask order.
    std::vector<std::pair<std::vector<std::string>, Rational>> serialize() const;

    RootRing& operator+=(RootRing const& rhs);
    RootRing& operator-=(RootRing const& rhs);
    RootRing& operator*=(RootRing const& rhs);
    RootRing& operator*=(Rational const& rhs);

    friend RootRing operator+(RootRing lhs, RootRing const& rhs) { return lhs += rhs; }
    friend RootRing operator-(RootRing lhs, RootRing const& rhs) { return lhs -= rhs; }
    friend RootRing operator*(RootRing const& lhs, RootRing const& rhs);
    friend RootRing operator*(RootRing lhs, Rational const& rhs) { return lhs *= rhs; }
    RootRing operator-() const;

    /// Componentwise identity. Throws std::invalid_argument when both sides
    /// carry symbols from different tables.
    friend bool operator==(RootRing const& a, RootRing const& b);

   private:
    static SymbolTablePtr common_table(RootRing const& a, RootRing const& b);
    void add_component(Mask mask, Rational const& value);

    SymbolTablePtr table_;
    std::vector<Component> terms_;
  };

  std::ostream& operator<<(std::ostream& os, RootRing const& x);

}  // namespace hecke

#endif  // HECKE_ROOT_RING_HPP
