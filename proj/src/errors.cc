// Copyright 2026 The kdiverse Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "kdiverse/errors.h"

#include <string>

namespace kdiverse {

int64_t CheckedAdd(int64_t a, int64_t b, const char* what) {
  int64_t out;
  if (__builtin_add_overflow(a, b, &out)) {
    throw InvalidArgumentError(std::string("integer overflow in ") + what);
  }
  return out;
}

int64_t CheckedMul(int64_t a, int64_t b, const char* what) {
  int64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw InvalidArgumentError(std::string("integer overflow in ") + what);
  }
  return out;
}

}  // namespace kdiverse
