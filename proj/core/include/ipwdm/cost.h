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

#ifndef IPWDM_COST_H_
#define IPWDM_COST_H_

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace ipwdm {

// Base exception for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An amount on the normalized equipment-cost scale (10G long-haul
// transponder = 1.0), stored as an exact count of micro-units so that sums
// and comparisons are exact.
class Cost {
 public:
  static constexpr int64_t kMicrosPerUnit = 1'000'000;

  constexpr Cost() = default;

  static constexpr Cost FromMicros(int64_t micros) { return Cost(micros); }
  // Rounds to the nearest micro-unit.
  static Cost FromUnits(double units);
  static constexpr Cost Zero() { return Cost(0); }
  static constexpr Cost Infinite() {
    return Cost(std::numeric_limits<int64_t>::max());
  }

  constexpr int64_t micros() const { return micros_; }
  double units() const {
    return static_cast<double>(micros_) / kMicrosPerUnit;
  }
  constexpr bool is_infinite() const { return *this == Infinite(); }

  // Exact decimal rendering with trailing zeros stripped ("901.75", "3").
  std::string ToString() const;

  constexpr Cost& operator+=(Cost other) {
    micros_ = Saturate(micros_, other.micros_);
    return *this;
  }
  constexpr Cost& operator-=(Cost other) {
    micros_ -= other.micros_;
    return *this;
  }
  friend constexpr Cost operator+(Cost a, Cost b) { return a += b; }
  friend constexpr Cost operator-(Cost a, Cost b) { return a -= b; }
  friend constexpr Cost operator*(Cost a, int64_t k) {
    if (a.is_infinite()) return a;
    return Cost(a.micros_ * k);
  }
  friend constexpr Cost operator*(int64_t k, Cost a) { return a * k; }
  friend constexpr auto operator<=>(Cost, Cost) = default;

 private:
  constexpr explicit Cost(int64_t micros) : micros_(micros) {}

  // Infinity absorbs additions so that "no feasible module" propagates.
  static constexpr int64_t Saturate(int64_t a, int64_t b) {
    constexpr int64_t kInf = std::numeric_limits<int64_t>::max();
    if (a == kInf || b == kInf) return kInf;
    return a + b;
  }

  int64_t micros_ = 0;
};

}  // namespace ipwdm

#endif  // IPWDM_COST_H_
