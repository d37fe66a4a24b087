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

#include "roelcke/document.hpp"

#include <charconv>
#include <sstream>

namespace roelcke::cli {

namespace {

constexpr std::size_t kMaxRelationSize = 4096;

struct Line {
  std::size_t number;
  std::string_view text;
};

std::string_view trim(std::string_view s) {
  const auto ws = " \t\r";
  const auto first = s.find_first_not_of(ws);
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(ws);
  return s.substr(first, last - first + 1);
}

std::vector<std::string_view> tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t')) ++i;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t') ++i;
    if (i > start) out.push_back(s.substr(start, i - start));
  }
  return out;
}

// Splits into trimmed lines, dropping comments. Blank lines are kept since
// they separate documents in a relation set.
std::vector<Line> split_lines(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    auto line = trim(text.substr(pos, end - pos));
    if (!line.starts_with('#')) lines.push_back({number, line});
    ++number;
    pos = end + 1;
  }
  return lines;
}

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty()) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

cantor::Word parse_word(std::string_view token, std::size_t line) {
  try {
    return cantor::Word::parse(token);
  } catch (const ValidationError& e) {
    throw ParseError(line, e.what());
  }
}

class Reader {
 public:
  explicit Reader(std::string_view text) : lines_(split_lines(text)) {}

  void skip_blank() {
    while (pos_ < lines_.size() && lines_[pos_].text.empty()) ++pos_;
  }
  bool done() {
    skip_blank();
    return pos_ >= lines_.size();
  }
  const Line& peek() const { return lines_[pos_]; }
  std::size_t last_line() const { return lines_.empty() ? 1 : lines_.back().number; }

  // Body lines up to the next blank line.
  std::vector<Line> body() {
    std::vector<Line> out;
    while (pos_ < lines_.size() && !lines_[pos_].text.empty()) out.push_back(lines_[pos_++]);
    return out;
  }
  const Line& next() { return lines_[pos_++]; }

 private:
  std::vector<Line> lines_;
  std::size_t pos_ = 0;
};

template <typename Fn>
auto at_line(std::size_t line, Fn&& fn) {
  try {
    return fn();
  } catch (const ParseError&) {
    throw;
  } catch (const ValidationError& e) {
    throw ParseError(line, e.what());
  }
}

finrel::IndexRelation relation_body(std::size_t size, const std::vector<Line>& body,
                                    std::size_t header_line) {
  if (size == 0) throw ParseError(header_line, "relation size must be positive");
  if (size > kMaxRelationSize) {
    throw BudgetError("line " + std::to_string(header_line) + ": relation size exceeds " +
                      std::to_string(kMaxRelationSize));
  }
  finrel::IndexRelation r(size);
  for (const auto& line : body) {
    auto t = tokens(line.text);
    if (t.size() != 2) throw ParseError(line.number, "expected '<a> <b>'");
    const auto a = parse_count(t[0], line.number);
    const auto b = parse_count(t[1], line.number);
    if (a >= size || b >= size) {
      throw ParseError(line.number, "pair (" + std::to_string(a) + "," + std::to_string(b) +
                                        ") outside [0," + std::to_string(size) + ")");
    }
    r.insert(static_cast<finrel::Index>(a), static_cast<finrel::Index>(b));
  }
  return r;
}

homeo::PrefixMap map_body(const std::vector<Line>& body, std::size_t header_line) {
  std::vector<homeo::Rule> rules;
  for (const auto& line : body) {
    auto t = tokens(line.text);
    if (t.size() != 3 || t[1] != "->") throw ParseError(line.number, "expected '<word> -> <word>'");
    rules.push_back({parse_word(t[0], line.number), parse_word(t[2], line.number)});
  }
  return at_line(header_line, [&] { return homeo::canonicalize(std::move(rules)); });
}

Document read_document(Reader& reader) {
  const Line header = reader.next();
  auto head = tokens(header.text);
  auto body = reader.body();
  if (head[0] == "rel") {
    if (head.size() != 2) throw ParseError(header.number, "expected 'rel <k>'");
    return relation_body(parse_count(head[1], header.number), body, header.number);
  }
  if (head[0] == "pm") {
    if (head.size() != 1) throw ParseError(header.number, "unexpected tokens after 'pm'");
    return map_body(body, header.number);
  }
  if (head[0] == "clopen") {
    if (head.size() != 1) throw ParseError(header.number, "unexpected tokens after 'clopen'");
    std::vector<cantor::Word> words;
    for (const auto& line : body) {
      auto t = tokens(line.text);
      if (t.size() != 1) throw ParseError(line.number, "expected one word per line");
      words.push_back(parse_word(t[0], line.number));
    }
    return at_line(header.number, [&] { return cantor::ClopenSet(std::move(words)); });
  }
  if (head[0] == "part") {
    if (head.size() != 1) throw ParseError(header.number, "unexpected tokens after 'part'");
    std::vector<cantor::ClopenSet> blocks;
    for (const auto& line : body) {
      auto t = tokens(line.text);
      if (t.size() < 2 || t[0] != "block:") {
        throw ParseError(line.number, "expected 'block: <word> [<word>...]'");
      }
      std::vector<cantor::Word> words;
      for (std::size_t i = 1; i < t.size(); ++i) words.push_back(parse_word(t[i], line.number));
      blocks.push_back(at_line(line.number, [&] { return cantor::ClopenSet(std::move(words)); }));
    }
    return at_line(header.number, [&] { return cantor::Partition(std::move(blocks)); });
  }
  if (head[0] == "tower") {
    if (head.size() == 3 && head[1] == "clopen") {
      const auto level = parse_count(head[2], header.number);
      if (level > towers::kMaxLevel) {
        throw BudgetError("line " + std::to_string(header.number) + ": tower level exceeds " +
                          std::to_string(towers::kMaxLevel));
      }
      auto seed = relation_body(std::size_t{1} << level, body, header.number);
      return at_line(header.number,
                     [&] { return towers::RelationTower::clopen(level, std::move(seed)); });
    }
    if (head.size() == 2 && head[1] == "graph") {
      return towers::RelationTower::graph(map_body(body, header.number));
    }
    throw ParseError(header.number, "expected 'tower clopen <level>' or 'tower graph'");
  }
  throw ParseError(header.number, "unknown document header '" + std::string(head[0]) + "'");
}

}  // namespace

ParseError::ParseError(std::size_t line, const std::string& message)
    : ValidationError("line " + std::to_string(line) + ": " + message), line_(line) {}

const char* to_string(DocumentKind kind) {
  switch (kind) {
    case DocumentKind::relation:
      return "relation";
    case DocumentKind::partition:
      return "partition";
    case DocumentKind::prefixmap:
      return "prefixmap";
    case DocumentKind::tower:
      return "tower";
    case DocumentKind::relation_set:
      return "relation-set";
    case DocumentKind::clopen:
      return "clopen";
  }
  return "?";
}

DocumentKind kind_of(const Document& doc) {
  return static_cast<DocumentKind>(doc.index());
}

Document parse(std::string_view text) {
  Reader reader(text);
  if (reader.done()) throw ParseError(reader.last_line(), "empty document");
  Document first = read_document(reader);
  if (reader.done()) return first;
  if (!std::holds_alternative<finrel::IndexRelation>(first)) {
    throw ParseError(reader.peek().number, "unexpected content after document");
  }
  RelationSet set{std::get<finrel::IndexRelation>(std::move(first))};
  while (!reader.done()) {
    const auto line = reader.peek().number;
    auto doc = read_document(reader);
    if (!std::holds_alternative<finrel::IndexRelation>(doc)) {
      throw ParseError(line, "relation sets may only contain relation documents");
    }
    set.push_back(std::get<finrel::IndexRelation>(std::move(doc)));
  }
  return set;
}

Document parse_as(std::string_view text, DocumentKind kind) {
  if (kind == DocumentKind::relation_set) {
    Reader probe(text);
    if (probe.done()) return RelationSet{};
  }
  Document doc = parse(text);
  if (kind == DocumentKind::relation_set && kind_of(doc) == DocumentKind::relation) {
    return RelationSet{std::get<finrel::IndexRelation>(std::move(doc))};
  }
  if (kind_of(doc) != kind) {
    throw ParseError(1, std::string("expected a ") + to_string(kind) + " document, got a " +
                            to_string(kind_of(doc)));
  }
  return doc;
}

namespace {

void write_pairs(std::ostringstream& out, const finrel::IndexRelation& r) {
  for (auto [a, b] : r.pairs()) out << a << ' ' << b << '\n';
}

void write_rules(std::ostringstream& out, const homeo::PrefixMap& f) {
  for (const auto& [d, r] : f.rules()) out << d.str() << " -> " << r.str() << '\n';
}

}  // namespace

std::string format(const finrel::IndexRelation& r) {
  std::ostringstream out;
  out << "rel " << r.size() << '\n';
  write_pairs(out, r);
  return out.str();
}

std::string format(const cantor::Partition& p) {
  std::ostringstream out;
  out << "part\n";
  for (const auto& block : p.blocks()) {
    out << "block:";
    for (const auto& w : block.cylinders()) out << ' ' << w.str();
    out << '\n';
  }
  return out.str();
}

std::string format(const homeo::PrefixMap& f) {
  std::ostringstream out;
  out << "pm\n";
  write_rules(out, f);
  return out.str();
}

std::string format(const cantor::ClopenSet& c) {
  std::ostringstream out;
  out << "clopen\n";
  for (const auto& w : c.cylinders()) out << w.str() << '\n';
  return out.str();
}

std::string format(const towers::RelationTower& t) {
  std::ostringstream out;
  if (t.kind() == towers::Kind::graph) {
    out << "tower graph\n";
    write_rules(out, t.map());
  } else if (t.kind() == towers::Kind::clopen) {
    out << "tower clopen " << t.seed_level() << '\n';
    write_pairs(out, t.seed());
  } else {
    const auto level = t.budget().value_or(towers::kMaxLevel);
    out << "tower clopen " << level << '\n';
    write_pairs(out, t.trace(level));
  }
  return out.str();
}

std::string format(const RelationSet& rs) {
  std::string out;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    if (i > 0) out += '\n';
    out += format(rs[i]);
  }
  return out;
}

std::string format(const Document& doc) {
  return std::visit([](const auto& value) { return format(value); }, doc);
}

}  // namespace roelcke::cli
