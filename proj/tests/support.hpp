#pragma once

#include <initializer_list>
#include <string_view>
#include <vector>

#include "malle/group.hpp"
#include "malle/report/cycle_notation.hpp"

namespace fixtures {

using malle::FiniteGroup;
using malle::Permutation;

inline Permutation P(std::size_t n, std::string_view text) { return malle::report::parse_cycles(text, n); }

inline FiniteGroup gen(std::size_t n, std::initializer_list<std::string_view> gens) {
  std::vector<Permutation> ps;
  for (auto g : gens) ps.push_back(P(n, g));
  return FiniteGroup::closure(ps, n);
}

inline FiniteGroup kl_n() { return gen(6, {"(1 2 3)", "(4 5 6)", "(14)(25)(36)"}); }
inline FiniteGroup kl_g1() { return gen(6, {"(1 2 3)", "(4 5 6)"}); }
inline FiniteGroup kl_g2_literal() { return gen(6, {"(1 2 3)(4 5 6)"}); }
inline FiniteGroup kl_g2c() { return gen(6, {"(1 2 3)(4 6 5)"}); }
inline Permutation kl_tau() { return P(6, "(14)(25)(36)"); }

inline FiniteGroup s3() { return gen(3, {"(1 2)", "(1 2 3)"}); }
inline FiniteGroup a3() { return gen(3, {"(1 2 3)"}); }
inline FiniteGroup v4() { return gen(4, {"(1 2)(3 4)", "(1 3)(2 4)"}); }
inline FiniteGroup c4() { return gen(4, {"(1 2 3 4)"}); }
inline FiniteGroup c6() { return gen(6, {"(1 2 3 4 5 6)"}); }
inline FiniteGroup c3xc3() { return gen(9, {"(1 2 3)(4 5 6)(7 8 9)", "(1 4 7)(2 5 8)(3 6 9)"}); }

// (C3 wr C3) x C2 on 18 points, (i, j) -> i + 9j + 1
inline constexpr std::string_view kG1 = "(1 2 3)(10 11 12)";
inline constexpr std::string_view kG2 = "(4 5 6)(13 14 15)";
inline constexpr std::string_view kG3 = "(7 8 9)(16 17 18)";
inline constexpr std::string_view kX = "(1 4 7)(2 5 8)(3 6 9)(10 13 16)(11 14 17)(12 15 18)";
inline constexpr std::string_view kY = "(1 10)(2 11)(3 12)(4 13)(5 14)(6 15)(7 16)(8 17)(9 18)";

inline FiniteGroup wr_n() { return gen(18, {kG1, kG2, kG3, kX, kY}); }
inline FiniteGroup wr_wreath() { return gen(18, {kG1, kX}); }
inline FiniteGroup wr_base() { return gen(18, {kG1, kG2, kG3}); }
inline FiniteGroup wr_base_y() { return gen(18, {kG1, kG2, kG3, kY}); }

}  // namespace fixtures
