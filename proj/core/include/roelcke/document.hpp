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

#ifndef ROELCKE_DOCUMENT_HPP
#define ROELCKE_DOCUMENT_HPP

#include <string>
#include <string_view>
#include <type_traits>
#include <variant>
#include <vector>

#include "roelcke/cantor.hpp"
#include "roelcke/error.hpp"
#include "roelcke/finrel.hpp"
#include "roelcke/homeo.hpp"
#include "roelcke/towers.hpp"

// Line-oriented text formats:
//
//   rel <k>              relation on k points, then one "<a> <b>" per line
//   pm                   prefix map, then one "<word> -> <word>" per line
//   part                 partition, then one "block: <word> [<word>...]" per line
//   clopen               clopen set, then one "<word>" per line
//   tower clopen <n>     clopen tower, then "<a> <b>" lines of the level-n seed
//   tower graph          graph tower, then "<word> -> <word>" lines
//
// A relation set is a sequence of relation documents separated by blank
// lines. Words are over {0,1}; "e" is the empty word. Lines starting with
// '#' are ignored.
namespace roelcke::cli {

enum class DocumentKind { relation, partition, prefixmap, tower, relation_set, clopen };

const char* to_string(DocumentKind kind);

using RelationSet = std::vector<finrel::IndexRelation>;

using Document = std::variant<finrel::IndexRelation, cantor::Partition, homeo::PrefixMap,
                              towers::RelationTower, RelationSet, cantor::ClopenSet>;

DocumentKind kind_of(const Document& doc);

// Syntax error at a given (1-based) line.
class ParseError : public ValidationError {
 public:
  ParseError(std::size_t line, const std::string& message);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Parses one document; the kind is taken from the header line. Several
/// relation documents separated by blank lines parse as a relation set.
Document parse(std::string_view text);

/// Parses text that must hold a document of `kind`. A single relation is
/// accepted as a one-element relation set, and empty text as an empty one.
Document parse_as(std::string_view text, DocumentKind kind);

template <typename T>
constexpr DocumentKind kind_for() {
  if constexpr (std::is_same_v<T, finrel::IndexRelation>) return DocumentKind::relation;
  else if constexpr (std::is_same_v<T, cantor::Partition>) return DocumentKind::partition;
  else if constexpr (std::is_same_v<T, homeo::PrefixMap>) return DocumentKind::prefixmap;
  else if constexpr (std::is_same_v<T, towers::RelationTower>) return DocumentKind::tower;
  else if constexpr (std::is_same_v<T, RelationSet>) return DocumentKind::relation_set;
  else return DocumentKind::clopen;
}

/// parse_as followed by extraction of the value.
template <typename T>
T parse_value(std::string_view text) {
  return std::get<T>(parse_as(text, kind_for<T>()));
}

std::string format(const finrel::IndexRelation& r);
std::string format(const cantor::Partition& p);
std::string format(const homeo::PrefixMap& f);
std::string format(const cantor::ClopenSet& c);
/// Exact towers print as themselves; an approximate tower prints as the
/// clopen tower seeded with its trace at the budget level.
std::string format(const towers::RelationTower& t);
std::string format(const RelationSet& rs);
std::string format(const Document& doc);

}  // namespace roelcke::cli

#endif  // ROELCKE_DOCUMENT_HPP
