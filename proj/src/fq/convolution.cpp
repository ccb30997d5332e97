#include "hecke/fq_convolution.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include "hecke/hecke_element.hpp"

namespace hecke::fq {

  std::vector<std::size_t> const& BruhatTable::cell(Permutation const& w) const {
    auto it = cells.find(w);
    if (it == cells.end()) {
      throw std::out_of_range("no Bruhat cell for " + w.to_string());
    }
    return it->second;
  }

  BruhatTable bruhat_table(GroupPtr const& group) {
    BruhatTable table;
    table.group = group;
    std::size_t const order = group->order();
    std::vector<char> seen(order, 0);
    std::vector<std::int64_t> owner(order, -1);
    auto const perms = all_permutations(group->n());
    table.cell_of.assign(order, Permutation(group->n()));
    std::size_t covered = 0;
    for (std::size_t k = 0; k < perms.size(); ++k) {
      Permutation const& w = perms[k];
      std::size_t const pw = group->index_of(FqMatrix::permutation(w, group->p()));
      std::vector<std::size_t> members;
      for (std::size_t b1 : group->borel()) {
        std::size_t const left = group->multiply(b1, pw);
        for (std::size_t b2 : group->borel()) {
          std::size_t const x = group->multiply(left, b2);
          if (owner[x] == static_cast<std::int64_t>(k)) {
            continue;
          }
          if (owner[x] >= 0) {
            throw std::logic_error("Bruhat cells of " + perms[static_cast<std::size_t>(owner[x])].to_string()
                                   + " and " + w.to_string() + " overlap");
          }
          owner[x] = static_cast<std::int64_t>(k);
          members.push_back(x);
        }
      }
      std::sort(members.begin(), members.end());
      for (std::size_t x : members) {
        table.cell_of[x] = w;
      }
      covered += members.size();
      table.cells.emplace(w, std::move(members));
    }
    if (covered != order) {
      throw std::logic_error("Bruhat cells cover " + std::to_string(covered) + " of "
                             + std::to_string(order) + " group elements");
    }
    return table;
  }

  BiInvFunction::BiInvFunction(GroupPtr group) : group_(std::move(group)) {
    if (!group_) {
      throw std::invalid_argument("BiInvFunction needs a group");
    }
  }

  BiInvFunction BiInvFunction::indicator(GroupPtr group, std::vector<std::size_t> const& elements) {
    BiInvFunction f(std::move(group));
    for (std::size_t x : elements) {
      f.values_[x] = Rational(1);
    }
    return f;
  }

  Rational BiInvFunction::value(std::size_t element) const {
    auto it = values_.find(element);
    return it == values_.end() ? Rational(0) : it->second;
  }

  void BiInvFunction::set(std::size_t element, Rational const& v) {
    if (element >= group_->order()) {
      throw std::out_of_range("group element index out of range");
    }
    if (v.is_zero()) {
      values_.erase(element);
    } else {
      values_[element] = v;
    }
  }

  BiInvFunction& BiInvFunction::operator+=(BiInvFunction const& rhs) {
    if (group_ != rhs.group_) {
      throw std::invalid_argument("adding functions on different groups");
    }
    for (auto const& [x, v] : rhs.values_) {
      set(x, value(x) + v);
    }
    return *this;
  }

  BiInvFunction& BiInvFunction::operator*=(Rational const& c) {
    if (c.is_zero()) {
      values_.clear();
      return *this;
    }
    for (auto& [x, v] : values_) {
      v *= c;
    }
    return *this;
  }

  BiInvFunction operator+(BiInvFunction a, BiInvFunction const& b) {
    a += b;
    return a;
  }

  bool operator==(BiInvFunction const& a, BiInvFunction const& b) {
    return a.group_ == b.group_ && a.values_ == b.values_;
  }

  bool BiInvFunction::is_bi_invariant(BruhatTable const& table) const {
    for (auto const& [w, members] : table.cells) {
      Rational const first = value(members.front());
      for (std::size_t x : members) {
        if (value(x) != first) {
          return false;
        }
      }
    }
    return true;
  }

  std::map<Permutation, Rational> BiInvFunction::cell_coefficients(BruhatTable const& table) const {
    if (!is_bi_invariant(table)) {
      throw std::logic_error("function is not constant on Bruhat cells");
    }
    std::map<Permutation, Rational> out;
    for (auto const& [w, members] : table.cells) {
      Rational const c = value(members.front());
      if (!c.is_zero()) {
        out.emplace(w, c);
      }
    }
    return out;
  }

  std::string BiInvFunction::dump(BruhatTable const& table) const {
    std::ostringstream os;
    for (auto const& [w, c] : cell_coefficients(table)) {
      os << "w=" << w.to_string() << " rep=" << group_->element(table.representative(w)).to_string()
         << " coeff=" << c << '\n';
    }
    return os.str();
  }

  BiInvFunction convolve(BiInvFunction const& f, BiInvFunction const& g) {
    if (f.group() != g.group()) {
      throw std::invalid_argument("convolving functions on different groups");
    }
    GroupPtr const& group = f.group();
    // Group each support by value so the inner loop only counts products.
    auto classes = [](BiInvFunction const& h) {
      std::map<Rational, std::vector<std::size_t>> out;
      for (auto const& [x, v] : h.values()) {
        out[v].push_back(x);
      }
      return out;
    };
    auto const fc = classes(f);
    auto const gc = classes(g);
    std::vector<std::uint32_t> counts(group->order(), 0);
    std::vector<Rational> acc(group->order());
    std::vector<char> touched(group->order(), 0);
    for (auto const& [fv, ys] : fc) {
      for (auto const& [gv, zs] : gc) {
        for (std::size_t y : ys) {
          for (std::size_t z : zs) {
            ++counts[group->multiply(y, z)];
          }
        }
        Rational const weight = fv * gv;
        for (std::size_t x = 0; x < counts.size(); ++x) {
          if (counts[x] != 0) {
            acc[x] += weight * Rational(static_cast<long>(counts[x]));
            touched[x] = 1;
            counts[x] = 0;
          }
        }
      }
    }
    Rational const scale = Rational(1, static_cast<long>(group->borel().size()));
    BiInvFunction out(group);
    for (std::size_t x = 0; x < acc.size(); ++x) {
      if (touched[x]) {
        out.set(x, acc[x] * scale);
      }
    }
    return out;
  }

  BiInvFunction borel_indicator(GroupPtr const& group) {
    return BiInvFunction::indicator(group, group->borel());
  }

  BiInvFunction cell_indicator(BruhatTable const& table, Permutation const& w) {
    return BiInvFunction::indicator(table.group, table.cell(w));
  }

  BiInvFunction sigma_element(BruhatTable const& table, std::size_t m) {
    std::size_t const n = table.group->n();
    if (m < 1 || m + 1 > n) {
      throw std::out_of_range("sigma index " + std::to_string(m) + " outside 1.." + std::to_string(n - 1));
    }
    return cell_indicator(table, Permutation::simple(m, n));
  }

  StructureReport structure_constants_check(BruhatTable const& table) {
    GroupPtr const& group = table.group;
    StructureReport report;
    report.n = group->n();
    report.p = group->p();
    report.group_order_ok = group->order() == gl_order(report.n, report.p);
    report.borel_order_ok = group->borel().size() == borel_order(report.n, report.p);

    auto const perms = all_permutations(report.n);
    report.cell_count_ok = table.cells.size() == perms.size();
    report.cell_sizes_ok = true;
    for (auto const& [w, members] : table.cells) {
      std::uint64_t expected = group->borel().size();
      for (std::size_t k = 0; k < perm_length(w); ++k) {
        expected *= report.p;
      }
      if (members.size() != expected) {
        report.cell_sizes_ok = false;
      }
    }

    Rational const q(static_cast<long>(report.p));
    report.closure_ok = true;
    for (auto const& u : perms) {
      BiInvFunction const fu = cell_indicator(table, u);
      for (auto const& v : perms) {
        BiInvFunction const product = convolve(fu, cell_indicator(table, v));
        ++report.pairs_checked;
        if (!product.is_bi_invariant(table)) {
          report.closure_ok = false;
          continue;
        }
        HeckeElement const expected = mul(HeckeElement::basis(u), HeckeElement::basis(v));
        for (auto const& w : perms) {
          Rational const want = expected.coefficient(w).evaluate(q);
          Rational const got = product.value(table.representative(w));
          if (want != got) {
            report.mismatches.push_back({u, v, w, want, got});
          }
        }
      }
    }
    return report;
  }

  StructureReport structure_constants_check(std::size_t n, unsigned p) {
    return structure_constants_check(bruhat_table(FiniteGL::make(n, p)));
  }

}  // namespace hecke::fq
