/*
Copyright 2026 The sstlab Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef SST_PARTITIONS_HPP
#define SST_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sst {

// Compact storage for many integer partitions with parts below 256. Each
// partition is stored with its parts in descending order.
class PartitionList {
 public:
  using Part = std::uint8_t;

  std::size_t size() const noexcept { return offsets_.size() - 1; }
  std::span<const Part> operator[](std::size_t i) const {
    return {parts_.data() + offsets_[i], parts_.data() + offsets_[i + 1]};
  }

  void push_back(std::span<const Part> parts);
  void reserve(std::size_t partitions, std::size_t parts);
  std::size_t total_parts() const noexcept { return parts_.size(); }

 private:
  std::vector<Part> parts_;
  std::vector<std::uint32_t> offsets_{0};
};

// Every partition of n into at most max_parts parts, each exactly once, in
// reverse lexicographic order of the descending part lists. n must be in
// [1, 255].
PartitionList enumerate_partitions(unsigned n, unsigned max_parts);

}  // namespace sst

#endif  // SST_PARTITIONS_HPP
