#include "hecke/partition.hpp"

#include <sstream>
#include <stdexcept>
#include <string>

namespace hecke {

  PartitionSpec::PartitionSpec(std::vector<std::size_t> parts) : parts_(std::move(parts)) {
    std::size_t sum = 0;
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (parts_[j] == 0 || (j > 0 && parts_[j] > parts_[j - 1])) {
        throw std::invalid_argument("partition parts must be positive and nonincreasing");
      }
      sum += parts_[j];
      partial_sums_.push_back(sum);
    }
  }

  PartitionSpec PartitionSpec::parse(std::string_view text) {
    std::vector<std::size_t> parts;
    std::string item;
    std::istringstream in{std::string(text)};
    while (std::getline(in, item, ',')) {
      std::size_t used = 0;
      long value = -1;
      try {
        value = std::stol(item, &used);
      } catch (std::exception const&) {
        used = 0;
      }
      if (used == 0 || value <= 0) {
        throw std::invalid_argument("malformed partition '" + std::string(text) + "'");
      }
      parts.push_back(static_cast<std::size_t>(value));
    }
    return PartitionSpec(std::move(parts));
  }

}  // namespace hecke
