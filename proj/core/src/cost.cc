// Copyright 2026 The ipwdm Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ipwdm/cost.h"

#include <cmath>
#include <cstdlib>

namespace ipwdm {

Cost Cost::FromUnits(double units) {
  if (!std::isfinite(units)) throw Error("non-finite cost value");
  return Cost(static_cast<int64_t>(std::llround(units * kMicrosPerUnit)));
}

std::string Cost::ToString() const {
  if (is_infinite()) return "inf";
  const bool negative = micros_ < 0;
  const uint64_t magnitude =
      negative ? static_cast<uint64_t>(-(micros_ + 1)) + 1
               : static_cast<uint64_t>(micros_);
  std::string out = std::to_string(magnitude / kMicrosPerUnit);
  uint64_t frac = magnitude % kMicrosPerUnit;
  if (frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, 6 - digits.size(), '0');
    while (!digits.empty() && digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return negative ? "-" + out : out;
}

}  // namespace ipwdm
