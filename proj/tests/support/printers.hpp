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

// Readable gtest failure messages for library value types.

#ifndef ROELCKE_TESTS_PRINTERS_HPP
#define ROELCKE_TESTS_PRINTERS_HPP

#include <ostream>

#include "roelcke/document.hpp"
#include "roelcke/dyadic.hpp"

namespace roelcke {
inline void PrintTo(const DyadicValue& v, std::ostream* os) { *os << v.str(); }
namespace finrel {
inline void PrintTo(const IndexRelation& r, std::ostream* os) { *os << "\n" << cli::format(r); }
}  // namespace finrel
namespace cantor {
inline void PrintTo(const Word& w, std::ostream* os) { *os << w.str(); }
inline void PrintTo(const ClopenSet& c, std::ostream* os) { *os << "\n" << cli::format(c); }
inline void PrintTo(const Partition& p, std::ostream* os) { *os << "\n" << cli::format(p); }
}  // namespace cantor
namespace homeo {
inline void PrintTo(const PrefixMap& f, std::ostream* os) { *os << "\n" << cli::format(f); }
inline void PrintTo(const Rule& r, std::ostream* os) {
  *os << r.domain.str() << " -> " << r.range.str();
}
}  // namespace homeo
}  // namespace roelcke

#endif  // ROELCKE_TESTS_PRINTERS_HPP
