#include "stacksort/text.hpp"

#include <charconv>
#include <set>

namespace stacksort {

namespace {

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t at = text.find(sep, start);
    out.push_back(text.substr(start, at == std::string_view::npos ? text.npos : at - start));
    if (at == std::string_view::npos) break;
    start = at + 1;
  }
  return out;
}

int parse_positive(std::string_view tok) {
  int v = 0;
  const auto* end = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(tok.data(), end, v);
  if (tok.empty() || ec != std::errc() || ptr != end || v < 1)
    throw ParseError("expected a positive integer, got '" + std::string(tok) + "'");
  return v;
}

Permutation checked(std::vector<int> entries) {
  std::set<int> seen(entries.begin(), entries.end());
  if (seen.size() != entries.size()) throw ParseError("duplicate entry");
  return Permutation(std::move(entries));
}

VincularPattern checked_pattern(std::vector<int> entries, std::set<std::size_t> bonds) {
  Permutation p = checked(std::move(entries));
  if (!p.is_normalized()) throw ParseError("pattern '" + to_string(p) + "' is not normalized");
  return VincularPattern(std::move(p), std::move(bonds));
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  if (text.empty()) return {};
  std::vector<int> entries;
  for (auto tok : split(text, ' ')) entries.push_back(parse_positive(tok));
  return checked(std::move(entries));
}

VincularPattern parse_vincular(std::string_view text) {
  std::vector<int> entries;
  std::set<std::size_t> bonds;
  bool open = false;
  std::size_t block_start = 0;
  if (text.empty()) return {};
  for (auto tok : split(text, ' ')) {
    bool opens = false, closes = false;
    if (!tok.empty() && tok.front() == '[') {
      if (open) throw ParseError("nested '['");
      opens = true;
      tok.remove_prefix(1);
    }
    if (!tok.empty() && tok.back() == ']') {
      closes = true;
      tok.remove_suffix(1);
    }
    entries.push_back(parse_positive(tok));
    const std::size_t pos = entries.size();  // 1-based position of this entry
    if (opens) {
      open = true;
      block_start = pos;
    } else if (open) {
      bonds.insert(pos - 1);
    }
    if (closes) {
      if (!open) throw ParseError("unmatched ']'");
      if (pos == block_start) throw ParseError("bracketed block needs at least two entries");
      open = false;
    }
  }
  if (open) throw ParseError("unterminated '['");
  return checked_pattern(std::move(entries), std::move(bonds));
}

std::vector<VincularPattern> parse_pattern_list(std::string_view text, bool allow_bonds) {
  std::vector<VincularPattern> out;
  if (text.empty()) return out;
  for (auto item : split(text, ',')) {
    if (item.empty()) throw ParseError("empty pattern in list");
    std::vector<int> entries;
    std::set<std::size_t> bonds;
    bool open = false;
    std::size_t block_start = 0;
    for (char c : item) {
      if (c == '[') {
        if (!allow_bonds) throw ParseError("bracketed (vincular) pattern needs --vincular");
        if (open) throw ParseError("nested '['");
        open = true;
        block_start = entries.size() + 1;
      } else if (c == ']') {
        if (!open) throw ParseError("unmatched ']'");
        if (entries.size() < block_start + 1)
          throw ParseError("bracketed block needs at least two entries");
        open = false;
      } else if (c >= '1' && c <= '9') {
        entries.push_back(c - '0');
        if (open && entries.size() > block_start) bonds.insert(entries.size() - 1);
      } else {
        throw ParseError("unexpected character '" + std::string(1, c) + "' in pattern list");
      }
    }
    if (open) throw ParseError("unterminated '['");
    out.push_back(checked_pattern(std::move(entries), std::move(bonds)));
  }
  return out;
}

std::vector<int> parse_composition_parts(std::string_view text) {
  std::vector<int> parts;
  for (auto tok : split(text, ',')) parts.push_back(parse_positive(tok));
  return parts;
}

}  // namespace stacksort
