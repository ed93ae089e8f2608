#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>

namespace hteq {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Syntax error in program or formula text. Line and column are 1-based.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message,
             std::set<std::string> expected = {});

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }
  const std::set<std::string>& expected() const noexcept { return expected_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::set<std::string> expected_;
};

/// An exhaustive enumeration would exceed its configured bound.
class GuardExceeded : public Error {
 public:
  GuardExceeded(const std::string& what, std::size_t value, std::size_t limit);

  const std::string& what_exceeded() const noexcept { return what_; }
  std::size_t value() const noexcept { return value_; }
  std::size_t limit() const noexcept { return limit_; }

 private:
  std::string what_;
  std::size_t value_;
  std::size_t limit_;
};

/// Input lies outside the syntactic fragment an operation is defined on.
class FragmentError : public Error {
 public:
  using Error::Error;
};

struct Guard {
  bool force = false;

  void check(const std::string& what, std::size_t value, std::size_t limit) const;
};

namespace limits {
inline constexpr std::size_t classical_atoms = 20;
inline constexpr std::size_t ht_atoms = 12;
inline constexpr std::size_t oracle_atoms = 4;
inline constexpr std::size_t expressibility_atoms = 4;
inline constexpr std::size_t expressibility_depth = 3;
inline constexpr std::size_t kripke_worlds = 5;
inline constexpr std::size_t kripke_atoms = 4;
inline constexpr std::size_t prover_formula_size = 96;
// Hard ceilings imposed by the bitmask representations; --force cannot lift these.
inline constexpr std::size_t max_universe = 31;
inline constexpr std::size_t max_worlds = 8;
}  // namespace limits

}  // namespace hteq
