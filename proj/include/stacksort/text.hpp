#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "stacksort/pattern.hpp"
#include "stacksort/permutation.hpp"

namespace stacksort {

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// "3 1 5 4 2": decimal entries separated by single spaces. "" is the empty
/// permutation.
Permutation parse_permutation(std::string_view text);

/// "[3 2] 4 1": entries separated by single spaces, each underlined block of
/// two or more entries wrapped in brackets.
VincularPattern parse_vincular(std::string_view text);

/// Compact form used on the command line: one pattern per comma-separated
/// item, single-digit entries, e.g. "2341,1342,[32]41,[31]42". Brackets are
/// rejected unless allow_bonds is set. "" is the empty list.
std::vector<VincularPattern> parse_pattern_list(std::string_view text, bool allow_bonds);

/// "2,1,3".
std::vector<int> parse_composition_parts(std::string_view text);

}  // namespace stacksort
