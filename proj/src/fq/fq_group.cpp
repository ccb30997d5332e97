#include "hecke/fq_group.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke::fq {

  namespace {
    std::uint64_t checked_power(unsigned base, std::size_t exp) {
      std::uint64_t out = 1;
      for (std::size_t k = 0; k < exp; ++k) {
        out *= base;
        if (out > enumeration_limit) {
          throw std::invalid_argument("GL(n, p) enumeration guard: p^(n^2) exceeds "
                                      + std::to_string(enumeration_limit));
        }
      }
      return out;
    }

    void validate(std::size_t n, unsigned p) {
      if (!is_prime(p)) {
        throw std::invalid_argument("only prime fields are supported, got p = "
                                    + std::to_string(p));
      }
      if (n == 0) {
        throw std::invalid_argument("matrix size must be positive");
      }
      checked_power(p, n * n);
    }

    unsigned inverse_mod(unsigned a, unsigned p) {
      // Fermat: a^(p-2)
      unsigned long long result = 1;
      unsigned long long base = a % p;
      for (unsigned e = p - 2; e > 0; e >>= 1) {
        if (e & 1U) {
          result = result * base % p;
        }
        base = base * base % p;
      }
      return static_cast<unsigned>(result);
    }
  }  // namespace

  FqMatrix::FqMatrix(unsigned p, std::size_t n, std::vector<unsigned> entries)
      : p_(p), n_(n), entries_(std::move(entries)) {
    if (entries_.size() != n * n) {
      throw std::invalid_argument("FqMatrix needs n*n entries");
    }
    for (auto& e : entries_) {
      e %= p_;
    }
  }

  FqMatrix FqMatrix::identity(unsigned p, std::size_t n) {
    std::vector<unsigned> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      e[i * n + i] = 1;
    }
    return FqMatrix(p, n, std::move(e));
  }

  FqMatrix FqMatrix::permutation(Permutation const& w, unsigned p) {
    std::size_t const n = w.rank();
    std::vector<unsigned> e(n * n, 0);
    for (std::size_t i = 1; i <= n; ++i) {
      e[static_cast<std::size_t>(w(static_cast<int>(i)) - 1) * n + (i - 1)] = 1;
    }
    return FqMatrix(p, n, std::move(e));
  }

  FqMatrix FqMatrix::from_code(unsigned p, std::size_t n, std::uint64_t code) {
    std::vector<unsigned> e(n * n);
    for (std::size_t k = n * n; k-- > 0;) {
      e[k] = static_cast<unsigned>(code % p);
      code /= p;
    }
    return FqMatrix(p, n, std::move(e));
  }

  std::uint64_t FqMatrix::code() const {
    std::uint64_t c = 0;
    for (unsigned e : entries_) {
      c = c * p_ + e;
    }
    return c;
  }

  unsigned FqMatrix::determinant() const {
    std::vector<unsigned long long> m(entries_.begin(), entries_.end());
    unsigned long long det = 1;
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && m[pivot * n_ + col] == 0) {
        ++pivot;
      }
      if (pivot == n_) {
        return 0;
      }
      if (pivot != col) {
        for (std::size_t k = 0; k < n_; ++k) {
          std::swap(m[pivot * n_ + k], m[col * n_ + k]);
        }
        det = (p_ - det % p_) % p_;
      }
      unsigned long long const pv = m[col * n_ + col];
      det = det * pv % p_;
      unsigned long long const inv = inverse_mod(static_cast<unsigned>(pv), p_);
      for (std::size_t r = col + 1; r < n_; ++r) {
        unsigned long long const f = m[r * n_ + col] * inv % p_;
        if (f == 0) {
          continue;
        }
        for (std::size_t k = col; k < n_; ++k) {
          m[r * n_ + k] = (m[r * n_ + k] + (p_ - f) * m[col * n_ + k]) % p_;
        }
      }
    }
    return static_cast<unsigned>(det % p_);
  }

  bool FqMatrix::is_upper_triangular() const {
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < i; ++j) {
        if (at(i, j) != 0) {
          return false;
        }
      }
    }
    return true;
  }

  FqMatrix FqMatrix::inverse() const {
    std::size_t const w = 2 * n_;
    std::vector<unsigned long long> m(n_ * w, 0);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        m[i * w + j] = at(i, j);
      }
      m[i * w + n_ + i] = 1;
    }
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && m[pivot * w + col] == 0) {
        ++pivot;
      }
      if (pivot == n_) {
        throw std::domain_error("singular matrix has no inverse");
      }
      for (std::size_t k = 0; k < w; ++k) {
        std::swap(m[pivot * w + k], m[col * w + k]);
      }
      unsigned long long const inv = inverse_mod(static_cast<unsigned>(m[col * w + col]), p_);
      for (std::size_t k = 0; k < w; ++k) {
        m[col * w + k] = m[col * w + k] * inv % p_;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        unsigned long long const f = m[r * w + col];
        if (r == col || f == 0) {
          continue;
        }
        for (std::size_t k = 0; k < w; ++k) {
          m[r * w + k] = (m[r * w + k] + (p_ - f) * m[col * w + k]) % p_;
        }
      }
    }
    std::vector<unsigned> out(n_ * n_);
    for (std::size_t i = 0; i < n_; ++i) {
      for (std::size_t j = 0; j < n_; ++j) {
        out[i * n_ + j] = static_cast<unsigned>(m[i * w + n_ + j]);
      }
    }
    return FqMatrix(p_, n_, std::move(out));
  }

  std::string FqMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < n_; ++i) {
      os << (i ? ",[" : "[");
      for (std::size_t j = 0; j < n_; ++j) {
        os << (j ? "," : "") << at(i, j);
      }
      os << ']';
    }
    os << ']';
    return os.str();
  }

  FqMatrix operator*(FqMatrix const& a, FqMatrix const& b) {
    if (a.p_ != b.p_ || a.n_ != b.n_) {
      throw std::invalid_argument("multiplying matrices of different shapes or fields");
    }
    std::size_t const n = a.n_;
    std::vector<unsigned> e(n * n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        unsigned long long acc = 0;
        for (std::size_t k = 0; k < n; ++k) {
          acc += static_cast<unsigned long long>(a.at(i, k)) * b.at(k, j);
        }
        e[i * n + j] = static_cast<unsigned>(acc % a.p_);
      }
    }
    return FqMatrix(a.p_, n, std::move(e));
  }

  bool is_prime(unsigned p) {
    if (p < 2) {
      return false;
    }
    for (unsigned d = 2; d * d <= p; ++d) {
      if (p % d == 0) {
        return false;
      }
    }
    return true;
  }

  std::vector<FqMatrix> enumerate_gl(std::size_t n, unsigned p) {
    validate(n, p);
    std::uint64_t const total = checked_power(p, n * n);
    std::vector<FqMatrix> out;
    for (std::uint64_t code = 0; code < total; ++code) {
      FqMatrix m = FqMatrix::from_code(p, n, code);
      if (m.is_invertible()) {
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  std::vector<FqMatrix> borel_subgroup(std::size_t n, unsigned p) {
    validate(n, p);
    std::vector<FqMatrix> out;
    for (auto& m : enumerate_gl(n, p)) {
      if (m.is_upper_triangular()) {
        out.push_back(std::move(m));
      }
    }
    return out;
  }

  std::uint64_t gl_order(std::size_t n, unsigned p) {
    std::uint64_t const pn = checked_power(p, n);
    std::uint64_t out = 1;
    std::uint64_t pk = 1;
    for (std::size_t k = 0; k < n; ++k) {
      out *= pn - pk;
      pk *= p;
    }
    return out;
  }

  std::uint64_t borel_order(std::size_t n, unsigned p) {
    std::uint64_t out = 1;
    for (std::size_t k = 0; k < n; ++k) {
      out *= p - 1;
    }
    for (std::size_t k = 0; k < n * (n - 1) / 2; ++k) {
      out *= p;
    }
    return out;
  }

  std::shared_ptr<FiniteGL const> FiniteGL::make(std::size_t n, unsigned p) {
    return std::shared_ptr<FiniteGL const>(new FiniteGL(n, p));
  }

  FiniteGL::FiniteGL(std::size_t n, unsigned p) : n_(n), p_(p) {
    elements_ = enumerate_gl(n, p);
    std::uint64_t const total = checked_power(p, n * n);
    row_codes_ = static_cast<std::size_t>(checked_power(p, n));
    index_by_code_.assign(total, -1);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      index_by_code_[elements_[i].code()] = static_cast<std::int32_t>(i);
      if (elements_[i].is_upper_triangular()) {
        borel_.push_back(i);
      }
    }
    identity_ = index_of(FqMatrix::identity(p, n));

    // row_code_of_[i*n + r]: base-p code of row r of element i
    row_code_of_.resize(elements_.size() * n);
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      for (std::size_t r = 0; r < n; ++r) {
        std::uint32_t c = 0;
        for (std::size_t k = 0; k < n; ++k) {
          c = c * p + elements_[i].at(r, k);
        }
        row_code_of_[i * n + r] = c;
      }
    }
    // row_times_[row * |G| + j]: code of (row vector) * element j
    row_times_.resize(row_codes_ * elements_.size());
    std::vector<unsigned> digits(n);
    for (std::size_t row = 0; row < row_codes_; ++row) {
      std::size_t c = row;
      for (std::size_t k = n; k-- > 0;) {
        digits[k] = static_cast<unsigned>(c % p);
        c /= p;
      }
      for (std::size_t j = 0; j < elements_.size(); ++j) {
        std::uint32_t out = 0;
        for (std::size_t col = 0; col < n; ++col) {
          unsigned long long acc = 0;
          for (std::size_t k = 0; k < n; ++k) {
            acc += static_cast<unsigned long long>(digits[k]) * elements_[j].at(k, col);
          }
          out = out * p + static_cast<std::uint32_t>(acc % p);
        }
        row_times_[row * elements_.size() + j] = out;
      }
    }
    inverse_.resize(elements_.size());
    for (std::size_t i = 0; i < elements_.size(); ++i) {
      inverse_[i] = index_of(elements_[i].inverse());
    }
  }

  std::size_t FiniteGL::index_of(FqMatrix const& g) const {
    if (g.prime() != p_ || g.size() != n_) {
      throw std::invalid_argument("matrix does not belong to this GL(n, p)");
    }
    std::int32_t const idx = index_by_code_[g.code()];
    if (idx < 0) {
      throw std::invalid_argument("singular matrix " + g.to_string() + " is not in GL(n, p)");
    }
    return static_cast<std::size_t>(idx);
  }

  std::size_t FiniteGL::multiply(std::size_t a, std::size_t b) const {
    std::size_t const g = elements_.size();
    std::uint64_t code = 0;
    for (std::size_t r = 0; r < n_; ++r) {
      code = code * row_codes_ + row_times_[row_code_of_[a * n_ + r] * g + b];
    }
    return static_cast<std::size_t>(index_by_code_[code]);
  }

}  // namespace hecke::fq
