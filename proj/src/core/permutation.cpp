#include "hecke/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hecke {

  Permutation::Permutation(std::size_t rank) : images_(rank) {
    std::iota(images_.begin(), images_.end(), 1);
  }

  Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    std::vector<bool> seen(images_.size(), false);
    for (int v : images_) {
      if (v < 1 || static_cast<std::size_t>(v) > images_.size() || seen[v - 1]) {
        throw std::invalid_argument("not a permutation in one-line notation");
      }
      seen[v - 1] = true;
    }
  }

  Permutation Permutation::simple(std::size_t m, std::size_t rank) {
    if (m < 1 || m + 1 > rank) {
      throw std::out_of_range("simple transposition s_" + std::to_string(m)
                              + " does not exist in rank " + std::to_string(rank));
    }
    Permutation s(rank);
    std::swap(s.images_[m - 1], s.images_[m]);
    return s;
  }

  Permutation Permutation::parse(std::string_view text) {
    std::string cleaned;
    for (char c : text) {
      cleaned += (c == '[' || c == ']' || c == ',') ? ' ' : c;
    }
    std::istringstream in(cleaned);
    std::vector<int> images;
    int v;
    while (in >> v) {
      images.push_back(v);
    }
    if (!in.eof()) {
      throw std::invalid_argument("malformed permutation '" + std::string(text) + "'");
    }
    return Permutation(std::move(images));
  }

  bool Permutation::is_identity() const {
    for (std::size_t i = 0; i < images_.size(); ++i) {
      if (images_[i] != static_cast<int>(i + 1)) {
        return false;
      }
    }
    return true;
  }

  Permutation Permutation::inverse() const {
    Permutation out(rank());
    for (std::size_t i = 0; i < images_.size(); ++i) {
      out.images_[images_[i] - 1] = static_cast<int>(i + 1);
    }
    return out;
  }

  Permutation Permutation::promoted(std::size_t rank) const {
    if (rank < images_.size()) {
      throw std::invalid_argument("cannot demote a permutation");
    }
    Permutation out = *this;
    for (std::size_t i = images_.size(); i < rank; ++i) {
      out.images_.push_back(static_cast<int>(i + 1));
    }
    return out;
  }

  Permutation Permutation::left_simple(std::size_t m) const {
    Permutation out = *this;
    int const a = static_cast<int>(m);
    for (int& v : out.images_) {
      if (v == a) {
        v = a + 1;
      } else if (v == a + 1) {
        v = a;
      }
    }
    return out;
  }

  bool Permutation::has_left_descent(std::size_t m) const {
    int const a = static_cast<int>(m);
    for (int v : images_) {
      if (v == a) {
        return false;
      }
      if (v == a + 1) {
        return true;
      }
    }
    return false;
  }

  std::vector<std::vector<int>> Permutation::cycles() const {
    std::vector<std::vector<int>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t start = 1; start <= images_.size(); ++start) {
      if (seen[start - 1]) {
        continue;
      }
      std::vector<int> cycle;
      for (int i = static_cast<int>(start); !seen[i - 1]; i = (*this)(i)) {
        seen[i - 1] = true;
        cycle.push_back(i);
      }
      out.push_back(std::move(cycle));
    }
    return out;
  }

  std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < images_.size(); ++i) {
      os << (i ? "," : "") << images_[i];
    }
    os << ']';
    return os.str();
  }

  Permutation operator*(Permutation const& u, Permutation const& v) {
    std::size_t const n = std::max(u.rank(), v.rank());
    Permutation const a = u.promoted(n);
    Permutation const b = v.promoted(n);
    Permutation out(n);
    for (std::size_t i = 0; i < n; ++i) {
      out.images_[i] = a.images_[b.images_[i] - 1];
    }
    return out;
  }

  std::size_t perm_length(Permutation const& w) {
    auto const& img = w.images();
    std::size_t count = 0;
    for (std::size_t i = 0; i < img.size(); ++i) {
      for (std::size_t j = i + 1; j < img.size(); ++j) {
        count += img[i] > img[j] ? 1 : 0;
      }
    }
    return count;
  }

  std::vector<std::size_t> reduced_word(Permutation const& w) {
    std::vector<std::size_t> word;
    Permutation rest = w;
    while (!rest.is_identity()) {
      for (std::size_t m = 1; m < rest.rank(); ++m) {
        if (rest.has_left_descent(m)) {
          word.push_back(m);
          rest = rest.left_simple(m);
          break;
        }
      }
    }
    return word;
  }

  std::vector<Permutation> all_permutations(std::size_t rank) {
    std::vector<int> images(rank);
    std::iota(images.begin(), images.end(), 1);
    std::vector<Permutation> out;
    do {
      out.emplace_back(images);
    } while (std::next_permutation(images.begin(), images.end()));
    return out;
  }

  std::ostream& operator<<(std::ostream& os, Permutation const& w) { return os << w.to_string(); }

}  // namespace hecke
