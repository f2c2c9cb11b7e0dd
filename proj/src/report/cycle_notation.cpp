#include "malle/report/cycle_notation.hpp"

#include <cctype>
#include <string>

#include "malle/error.hpp"

namespace malle::report {

namespace {

[[noreturn]] void fail(std::size_t pos, const std::string& what) {
  throw Error(ErrorCode::ParseError, "at position " + std::to_string(pos) + ": " + what);
}

bool is_separator(char c) { return std::isspace(static_cast<unsigned char>(c)) || c == ','; }

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  if (degree == 0) throw Error(ErrorCode::InvalidArgument, "degree must be positive");
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip();
  if (text.substr(i, 2) == "id") {
    i += 2;
    skip();
    if (i != text.size()) fail(i, "unexpected text after 'id'");
    return Permutation::identity(degree);
  }
  if (i == text.size()) fail(i, "empty permutation");

  std::vector<std::vector<Point>> cycles;
  while (i < text.size()) {
    if (text[i] != '(') fail(i, std::string("expected '(' but found '") + text[i] + "'");
    ++i;
    std::vector<Point> cycle;
    std::vector<bool> used(degree + 1, false);
    while (true) {
      while (i < text.size() && is_separator(text[i])) ++i;
      if (i == text.size()) fail(i, "unterminated cycle");
      if (text[i] == ')') {
        ++i;
        break;
      }
      if (!std::isdigit(static_cast<unsigned char>(text[i]))) fail(i, std::string("unexpected character '") + text[i] + "'");
      const std::size_t start = i;
      unsigned long long value = 0;
      if (degree <= 9) {
        value = static_cast<unsigned long long>(text[i] - '0');
        ++i;
      } else {
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          value = value * 10 + static_cast<unsigned long long>(text[i] - '0');
          if (value > degree) value = degree + 1;  // clamp, reported below
          ++i;
        }
      }
      if (value < 1 || value > degree)
        throw Error(ErrorCode::PointOutOfRange, "at position " + std::to_string(start) + ": point " +
                                                    std::string(text.substr(start, i - start)) +
                                                    " outside 1.." + std::to_string(degree));
      if (used[value]) fail(start, "point " + std::to_string(value) + " repeated within a cycle");
      used[value] = true;
      cycle.push_back(static_cast<Point>(value));
    }
    if (cycle.size() > 1) cycles.push_back(std::move(cycle));
    skip();
  }
  return Permutation::from_cycles(degree, cycles);
}

std::vector<Permutation> parse_cycle_list(const std::vector<std::string>& texts, std::size_t degree) {
  std::vector<Permutation> out;
  out.reserve(texts.size());
  for (const auto& t : texts) out.push_back(parse_cycles(t, degree));
  return out;
}

std::string print_cycles(const Permutation& p) { return p.to_cycle_string(); }

}  // namespace malle::report
