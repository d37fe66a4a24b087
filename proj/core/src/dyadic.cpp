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

#include "roelcke/dyadic.hpp"

#include <charconv>
#include <cmath>

#include "roelcke/error.hpp"

namespace roelcke {

namespace {

using Wide = unsigned __int128;

// Scales a numerator at exponent `from` to exponent `to` >= from.
Wide scaled(std::uint64_t num, int from, int to) {
  const int shift = to - from;
  if (num == 0) return 0;
  if (shift >= 64) throw BudgetError("dyadic value out of range");
  return static_cast<Wide>(num) << shift;
}

DyadicValue normalize(Wide num, int exp) {
  if (num == 0) return DyadicValue::zero();
  while ((num & 1) == 0) {
    num >>= 1;
    --exp;
  }
  if (num > UINT64_MAX) throw BudgetError("dyadic value out of range");
  return DyadicValue::from_parts(static_cast<std::uint64_t>(num), exp);
}

}  // namespace

DyadicValue DyadicValue::power_of_two(int e) {
  DyadicValue v;
  v.num_ = 1;
  v.exp_ = -e;
  return v;
}

DyadicValue DyadicValue::from_parts(std::uint64_t numerator, int exponent) {
  DyadicValue v;
  if (numerator == 0) return v;
  while ((numerator & 1) == 0) {
    numerator >>= 1;
    --exponent;
  }
  v.num_ = numerator;
  v.exp_ = exponent;
  return v;
}

DyadicValue DyadicValue::operator+(const DyadicValue& other) const {
  if (is_zero()) return other;
  if (other.is_zero()) return *this;
  const int e = std::max(exp_, other.exp_);
  return normalize(scaled(num_, exp_, e) + scaled(other.num_, other.exp_, e), e);
}

DyadicValue DyadicValue::operator-(const DyadicValue& other) const {
  if (other.is_zero()) return *this;
  if (*this < other) throw ValidationError("dyadic subtraction would be negative");
  const int e = std::max(exp_, other.exp_);
  return normalize(scaled(num_, exp_, e) - scaled(other.num_, other.exp_, e), e);
}

std::strong_ordering DyadicValue::operator<=>(const DyadicValue& other) const {
  if (is_zero() || other.is_zero()) return num_ <=> other.num_;
  const int e = std::max(exp_, other.exp_);
  return scaled(num_, exp_, e) <=> scaled(other.num_, other.exp_, e);
}

std::string DyadicValue::str() const {
  if (num_ == 0) return "0";
  if (exp_ <= 0) {
    Wide v = scaled(num_, exp_, 0);
    std::string digits;
    for (; v > 0; v /= 10) digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(v % 10)));
    return digits;
  }
  if (num_ == 1) return "2^-" + std::to_string(exp_);
  return std::to_string(num_) + "*2^-" + std::to_string(exp_);
}

DyadicValue DyadicValue::parse(std::string_view text) {
  auto fail = [&] { return ValidationError("bad dyadic value: " + std::string(text)); };
  auto to_u64 = [&](std::string_view s) {
    std::uint64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) throw fail();
    return v;
  };
  std::uint64_t num = 1;
  std::string_view rest = text;
  if (auto star = text.find('*'); star != std::string_view::npos) {
    num = to_u64(text.substr(0, star));
    rest = text.substr(star + 1);
  } else if (!text.starts_with("2^-")) {
    return from_parts(to_u64(text), 0);
  }
  if (!rest.starts_with("2^-")) throw fail();
  auto k = to_u64(rest.substr(3));
  if (k > 4096) throw fail();
  return from_parts(num, static_cast<int>(k));
}

double DyadicValue::approx() const {
  return std::ldexp(static_cast<double>(num_), -exp_);
}

}  // namespace roelcke
