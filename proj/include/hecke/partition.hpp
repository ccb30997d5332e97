#ifndef HECKE_PARTITION_HPP
#define HECKE_PARTITION_HPP

#include <cstddef>
#include <string_view>
#include <vector>

namespace hecke {

  /// Partition nu_1 >= nu_2 >= ... > 0 with partial sums
  /// lambda_j = nu_1 + ... + nu_j.
  class PartitionSpec {
   public:
    /// Throws std::invalid_argument unless parts are positive and
    /// nonincreasing.
    explicit PartitionSpec(std::vector<std::size_t> parts);

    /// Parses "2,2,1".
    static PartitionSpec parse(std::string_view text);

    std::vector<std::size_t> const& parts() const { return parts_; }
    std::vector<std::size_t> const& partial_sums() const { return partial_sums_; }
    std::size_t size() const { return partial_sums_.empty() ? 0 : partial_sums_.back(); }

   private:
    std::vector<std::size_t> parts_;
    std::vector<std::size_t> partial_sums_;
  };

}  // namespace hecke

#endif  // HECKE_PARTITION_HPP
