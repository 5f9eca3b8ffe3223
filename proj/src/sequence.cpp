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

#include "sst/sequence.hpp"

#include <fmt/format.h>

#include "sst/error.hpp"

namespace sst {

Sequence::Sequence(std::vector<Symbol> symbols, unsigned alphabet_size)
    : symbols_(std::move(symbols)), alphabet_size_(alphabet_size) {
  if (alphabet_size_ < 2)
    throw Error(ErrorCode::invalid_argument,
                fmt::format("alphabet size must be at least 2, got {}",
                            alphabet_size_));
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] >= alphabet_size_)
      throw Error(ErrorCode::invalid_argument,
                  fmt::format("symbol {} at position {} outside alphabet of "
                              "size {}",
                              symbols_[i], i, alphabet_size_));
  }
}

}  // namespace sst
