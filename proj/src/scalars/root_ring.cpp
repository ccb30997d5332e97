#include "hecke/root_ring.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

namespace hecke {

  std::shared_ptr<SymbolTable const> SymbolTable::make(std::vector<Binding> bindings) {
    std::shared_ptr<SymbolTable> table(new SymbolTable());
    for (auto& b : bindings) {
      if (b.value.sign() <= 0) {
        throw std::invalid_argument("square-root symbol '" + b.name
                                    + "' must be bound to a positive rational, got "
                                    + b.value.to_string());
      }
      auto root = b.value.exact_sqrt();
      if (root) {
        table->symbol_of_.emplace_back(std::nullopt);
      } else {
        if (table->symbols_.size() == max_symbols) {
          throw std::invalid_argument("too many irrational square-root symbols");
        }
        table->symbol_of_.emplace_back(table->symbols_.size());
        table->symbols_.push_back(table->bindings_.size());
      }
      table->rational_root_.push_back(std::move(root));
      table->bindings_.push_back(std::move(b));
    }
    return table;
  }

  RootRing::RootRing(Rational value) {
    if (!value.is_zero()) {
      terms_.emplace_back(0, std::move(value));
    }
  }

  RootRing::RootRing(SymbolTablePtr table, Rational value) : RootRing(std::move(value)) {
    table_ = std::move(table);
  }

  RootRing RootRing::sqrt_of(SymbolTablePtr const& table, std::size_t k) {
    if (auto const& r = table->rational_root(k)) {
      return RootRing(table, *r);
    }
    RootRing out(table, Rational(0));
    out.terms_.emplace_back(Mask{1} << *table->symbol_of(k), Rational(1));
    return out;
  }

  RootRing::RationalPart RootRing::rational_part() const {
    if (terms_.empty()) {
      return {Rational(0), true};
    }
    if (terms_.front().first == 0) {
      return {terms_.front().second, terms_.size() == 1};
    }
    return {Rational(0), false};
  }

  SymbolTablePtr RootRing::common_table(RootRing const& a, RootRing const& b) {
    if (!a.table_) {
      return b.table_;
    }
    if (!b.table_ || a.table_ == b.table_) {
      return a.table_;
    }
    bool a_symbolic = std::any_of(a.terms_.begin(), a.terms_.end(),
                                  [](auto const& c) { return c.first != 0; });
    bool b_symbolic = std::any_of(b.terms_.begin(), b.terms_.end(),
                                  [](auto const& c) { return c.first != 0; });
    if (a_symbolic && b_symbolic) {
      throw std::invalid_argument("RootRing operands use different symbol tables");
    }
    return a_symbolic ? a.table_ : b.table_;
  }

  void RootRing::add_component(Mask mask, Rational const& value) {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), mask,
                               [](Component const& c, Mask m) { return c.first < m; });
    if (it != terms_.end() && it->first == mask) {
      it->second += value;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    } else if (!value.is_zero()) {
      terms_.emplace(it, mask, value);
    }
  }

  RootRing& RootRing::operator+=(RootRing const& rhs) {
    table_ = common_table(*this, rhs);
    for (auto const& [mask, value] : rhs.terms_) {
      add_component(mask, value);
    }
    return *this;
  }

  RootRing& RootRing::operator-=(RootRing const& rhs) { return *this += -rhs; }

  RootRing operator*(RootRing const& lhs, RootRing const& rhs) {
    RootRing out;
    out.table_ = RootRing::common_table(lhs, rhs);
    for (auto const& [ma, va] : lhs.terms_) {
      for (auto const& [mb, vb] : rhs.terms_) {
        Rational coeff = va * vb;
        // repeated symbols square to their bound value
        for (RootRing::Mask both = ma & mb; both != 0; both &= both - 1) {
          coeff *= out.table_->symbol_square(static_cast<std::size_t>(std::countr_zero(both)));
        }
        out.add_component(ma ^ mb, coeff);
      }
    }
    return out;
  }

  RootRing& RootRing::operator*=(RootRing const& rhs) {
    *this = *this * rhs;
    return *this;
  }

  RootRing& RootRing::operator*=(Rational const& rhs) {
    if (rhs.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& c : terms_) {
      c.second *= rhs;
    }
    return *this;
  }

  RootRing RootRing::operator-() const {
    RootRing out = *this;
    for (auto& c : out.terms_) {
      c.second = -c.second;
    }
    return out;
  }

  bool operator==(RootRing const& a, RootRing const& b) {
    RootRing::common_table(a, b);
    return a.terms_ == b.terms_;
  }

  std::vector<std::pair<std::vector<std::string>, Rational>> RootRing::serialize() const {
    std::vector<std::pair<std::vector<std::string>, Rational>> out;
    for (auto const& [mask, value] : terms_) {
      std::vector<std::string> names;
      for (Mask m = mask; m != 0; m &= m - 1) {
        names.push_back(table_->symbol_name(static_cast<std::size_t>(std::countr_zero(m))));
      }
      out.emplace_back(std::move(names), value);
    }
    return out;
  }

  std::string RootRing::to_string() const {
    if (terms_.empty()) {
      return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (auto const& [names, value] : serialize()) {
      Rational shown = value;
      if (!first) {
        os << (value.sign() < 0 ? " - " : " + ");
        shown = value.abs();
      }
      first = false;
      if (names.empty()) {
        os << shown;
        continue;
      }
      if (shown == Rational(-1)) {
        os << '-';
      } else if (!shown.is_one()) {
        os << shown << '*';
      }
      for (std::size_t i = 0; i < names.size(); ++i) {
        os << (i ? "*" : "") << names[i];
      }
    }
    return os.str();
  }

  std::ostream& operator<<(std::ostream& os, RootRing const& x) { return os << x.to_string(); }

}  // namespace hecke
