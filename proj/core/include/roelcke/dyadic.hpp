// Copyright 2026 The roelcke Authors
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

#ifndef ROELCKE_DYADIC_HPP
#define ROELCKE_DYADIC_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace roelcke {

// An exact non-negative dyadic rational numerator * 2^-exponent, normalized
// so that the numerator is odd (or the value is 0 with exponent 0).
class DyadicValue {
 public:
  constexpr DyadicValue() = default;
  static DyadicValue zero() { return {}; }
  static DyadicValue one() { return power_of_two(0); }
  // 2^e, e may be negative.
  static DyadicValue power_of_two(int e);
  static DyadicValue from_parts(std::uint64_t numerator, int exponent);

  std::uint64_t numerator() const { return num_; }
  int exponent() const { return exp_; }
  bool is_zero() const { return num_ == 0; }

  // Throws BudgetError if the exact result does not fit.
  DyadicValue operator+(const DyadicValue& other) const;
  DyadicValue operator-(const DyadicValue& other) const;

  bool operator==(const DyadicValue&) const = default;
  std::strong_ordering operator<=>(const DyadicValue& other) const;

  // "0", an integer such as "1" or "2", "2^-k", or "m*2^-k" with m odd.
  std::string str() const;
  static DyadicValue parse(std::string_view text);

  double approx() const;

 private:
  std::uint64_t num_ = 0;
  int exp_ = 0;
};

}  // namespace roelcke

#endif  // ROELCKE_DYADIC_HPP
