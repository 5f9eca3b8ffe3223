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

#include "sst/partitions.hpp"

#include <algorithm>
#include <limits>

#include <fmt/format.h>

#include "sst/error.hpp"

namespace sst {

void PartitionList::push_back(std::span<const Part> parts) {
  parts_.insert(parts_.end(), parts.begin(), parts.end());
  if (parts_.size() > std::numeric_limits<std::uint32_t>::max())
    throw Error(ErrorCode::internal, "partition list too large");
  offsets_.push_back(static_cast<std::uint32_t>(parts_.size()));
}

void PartitionList::reserve(std::size_t partitions, std::size_t parts) {
  offsets_.reserve(partitions + 1);
  parts_.reserve(parts);
}

namespace {

struct Generator {
  unsigned max_parts;
  std::vector<PartitionList::Part> stack;
  PartitionList out;

  // Fill `remaining` with parts no larger than `largest`.
  void run(unsigned remaining, unsigned largest) {
    if (remaining == 0) {
      out.push_back(stack);
      return;
    }
    const auto slots = max_parts - static_cast<unsigned>(stack.size());
    if (slots == 0) return;
    for (unsigned p = std::min(remaining, largest); p >= 1; --p) {
      // The remaining slots cannot hold more than slots * p.
      if (static_cast<unsigned long>(p) * slots < remaining) break;
      stack.push_back(static_cast<PartitionList::Part>(p));
      run(remaining - p, p);
      stack.pop_back();
    }
  }
};

}  // namespace

PartitionList enumerate_partitions(unsigned n, unsigned max_parts) {
  if (n == 0 || n > 255 || max_parts == 0)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("cannot enumerate partitions of {} into at most "
                            "{} parts",
                            n, max_parts));
  Generator g{std::min(max_parts, n), {}, {}};
  g.stack.reserve(n);
  g.run(n, n);
  return std::move(g.out);
}

}  // namespace sst
