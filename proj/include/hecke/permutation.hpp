#ifndef HECKE_PERMUTATION_HPP
#define HECKE_PERMUTATION_HPP

#include <compare>
#include <cstddef>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hecke {

  /// Permutation of {1..n} in one-line notation: images()[i-1] = w(i).
  /// Products compose right to left, (u * v)(i) = u(v(i)).
  class Permutation {
   public:
    explicit Permutation(std::size_t rank = 0);
    /// Throws std::invalid_argument unless `images` is a bijection of 1..n.
    explicit Permutation(std::vector<int> images);

    /// The simple transposition s_m = (m, m+1) in S_n.
    static Permutation simple(std::size_t m, std::size_t rank);

    /// Parses "[2,1,3]".
    static Permutation parse(std::string_view text);

    std::size_t rank() const { return images_.size(); }
    std::vector<int> const& images() const { return images_; }
    /// w(i) for 1 <= i <= rank.
    int operator()(int i) const { return images_[static_cast<std::size_t>(i - 1)]; }

    bool is_identity() const;
    Permutation inverse() const;
    /// Appends fixed points up to `rank`.
    Permutation promoted(std::size_t rank) const;

    /// s_m * w: exchanges the values m and m+1 in the one-line notation.
    Permutation left_simple(std::size_t m) const;

    /// Whether s_m is a left descent, i.e. m+1 precedes m in one-line form.
    bool has_left_descent(std::size_t m) const;

    /// Disjoint cycles (fixed points included), each listed from its least
    /// element.
    std::vector<std::vector<int>> cycles() const;

    std::string to_string() const;

    friend Permutation operator*(Permutation const& u, Permutation const& v);
    friend bool operator==(Permutation const&, Permutation const&) = default;
    friend auto operator<=>(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> images_;
  };

  /// Coxeter length: the number of inversions.
  std::size_t perm_length(Permutation const& w);

  /// A reduced word (m_1, ..., m_k) with w = s_{m_1} s_{m_2} ... s_{m_k},
  /// built by repeatedly stripping a left descent.
  std::vector<std::size_t> reduced_word(Permutation const& w);

  /// All permutations of rank n in lexicographic order.
  std::vector<Permutation> all_permutations(std::size_t rank);

  std::ostream& operator<<(std::ostream& os, Permutation const& w);

}  // namespace hecke

#endif  // HECKE_PERMUTATION_HPP
