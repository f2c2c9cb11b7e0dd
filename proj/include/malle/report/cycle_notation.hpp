#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "malle/permutation.hpp"

namespace malle::report {

/// Parses "(1 2 3)(4 5)", "(14)(25)(36)", "()" or "id".
///
/// Cycles compose left to right and need not be disjoint. Whitespace and
/// commas separate points. For degree <= 9 every digit is its own point, so
/// "(123)" works; from degree 10 on, points are maximal digit runs.
/// Throws ParseError (message carries the 0-based position) and
/// PointOutOfRange.
Permutation parse_cycles(std::string_view text, std::size_t degree);

std::vector<Permutation> parse_cycle_list(const std::vector<std::string>& texts, std::size_t degree);

/// Canonical form: disjoint cycles, each starting at its least point, cycles
/// ordered by that point, points separated by single spaces; "()" for the
/// identity.
std::string print_cycles(const Permutation& p);

}  // namespace malle::report
