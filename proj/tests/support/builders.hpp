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

#ifndef ROELCKE_TESTS_BUILDERS_HPP
#define ROELCKE_TESTS_BUILDERS_HPP

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "roelcke/cantor.hpp"
#include "roelcke/homeo.hpp"

namespace roelcke::build {

inline cantor::Word w(const char* s) { return cantor::Word::parse(s); }

inline std::vector<cantor::Word> words(std::initializer_list<const char*> list) {
  std::vector<cantor::Word> out;
  for (const auto* s : list) out.push_back(w(s));
  return out;
}

inline cantor::ClopenSet clopen(std::initializer_list<const char*> list) {
  return cantor::ClopenSet(words(list));
}

// pm({{"0", "1"}, {"1", "0"}}) is the swap.
inline homeo::PrefixMap pm(std::initializer_list<std::pair<const char*, const char*>> rules) {
  std::vector<homeo::Rule> out;
  for (const auto& [d, r] : rules) out.push_back({w(d), w(r)});
  return homeo::canonicalize(std::move(out));
}

inline std::vector<homeo::Rule> rules(std::initializer_list<std::pair<const char*, const char*>> list) {
  std::vector<homeo::Rule> out;
  for (const auto& [d, r] : list) out.push_back({w(d), w(r)});
  return out;
}

inline const homeo::PrefixMap& swap_map() {
  static const auto f = pm({{"0", "1"}, {"1", "0"}});
  return f;
}

// Every complete prefix code with at most `max_size` words, none longer
// than `depth`, each code sorted.
inline std::vector<std::vector<cantor::Word>> all_codes(std::size_t max_size, std::size_t depth) {
  std::vector<std::vector<cantor::Word>> out{{cantor::Word()}};
  for (std::size_t i = 0; i < out.size(); ++i) {
    const auto code = out[i];
    if (code.size() >= max_size) continue;
    for (std::size_t j = 0; j < code.size(); ++j) {
      if (code[j].size() >= depth) continue;
      auto next = code;
      next[j] = code[j].child(0);
      next.insert(next.begin() + static_cast<std::ptrdiff_t>(j) + 1, code[j].child(1));
      bool seen = false;
      for (const auto& c : out) seen = seen || c == next;
      if (!seen) out.push_back(next);
    }
  }
  return out;
}

}  // namespace roelcke::build

#endif  // ROELCKE_TESTS_BUILDERS_HPP
