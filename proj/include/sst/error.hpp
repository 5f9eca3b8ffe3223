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

#ifndef SST_ERROR_HPP
#define SST_ERROR_HPP

#include <stdexcept>
#include <string>

namespace sst {

enum class ErrorCode {
  invalid_argument = 1,
  out_of_range,
  shape_mismatch,
  not_in_shaped_set,
  impossible_emission,
  multiset_mismatch,
  code_mismatch,
  io,
  corrupt_cache,
  bounds_exceeded,
  internal,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace sst

#endif  // SST_ERROR_HPP
