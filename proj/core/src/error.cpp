#include "hteq/error.hpp"

#include <sstream>
#include <utility>

namespace hteq {

namespace {

std::string format_parse_error(std::size_t line, std::size_t column, const std::string& message,
                               const std::set<std::string>& expected) {
  std::ostringstream out;
  out << line << ':' << column << ": " << message;
  if (!expected.empty()) {
    out << " (expected ";
    bool first = true;
    for (const auto& token : expected) {
      if (!first) out << ", ";
      out << token;
      first = false;
    }
    out << ')';
  }
  return out.str();
}

std::string format_guard(const std::string& what, std::size_t value, std::size_t limit) {
  std::ostringstream out;
  out << what << " = " << value << " exceeds the enumeration guard of " << limit
      << " (use --force to override)";
  return out.str();
}

}  // namespace

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& message,
                       std::set<std::string> expected)
    : Error(format_parse_error(line, column, message, expected)),
      line_(line),
      column_(column),
      expected_(std::move(expected)) {}

GuardExceeded::GuardExceeded(const std::string& what, std::size_t value, std::size_t limit)
    : Error(format_guard(what, value, limit)), what_(what), value_(value), limit_(limit) {}

void Guard::check(const std::string& what, std::size_t value, std::size_t limit) const {
  if (!force && value > limit) throw GuardExceeded(what, value, limit);
}

}  // namespace hteq
