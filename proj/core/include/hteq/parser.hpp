#pragma once

#include <string>
#include <string_view>

#include "hteq/syntax.hpp"

namespace hteq {

/// Parses the program text format:
///
///   program   := { statement }
///   statement := (rule | fact) "."
///   rule      := formula "->" formula
///   fact      := formula
///   formula   := imp
///   imp       := or [ "->" imp ]
///   or        := and { "|" and }
///   and       := unary { "&" unary }
///   unary     := "not" unary | "(" formula ")" | "top" | "bot" | ATOM
///
/// `%` starts a comment running to the end of the line. A statement whose
/// outermost connective is an unparenthesised `->` is a rule; anything else is
/// a fact `top -> F`.
///
/// Throws ParseError.
Program parse_program(std::string_view text);

/// Parses a single formula (no trailing `.`).
Formula parse_formula(std::string_view text);

/// Parses a single rule, with or without the trailing `.`.
Rule parse_rule(std::string_view text);

// Printing uses the minimal parentheses for the precedence
// not > & > | > -> (with -> right-associative, & and | left-associative),
// so that parsing the output reproduces the same tree.
std::string render(const Formula& f);
std::string render(const Rule& r);
std::string render(const Program& p);
std::string render(const AtomSet& atoms);

}  // namespace hteq
