// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#pragma once

#include <stdexcept>
#include <string>

namespace orbitcalc {

/// Raised when an operation's precondition is violated.
class Error : public std::runtime_error
{
public:
  explicit Error (const std::string &what)
    : std::runtime_error(what)
  {}
};

/// Raised by the text and JSON readers; carries a 1-based position.
class ParseError : public Error
{
public:
  ParseError (const std::string &what, int line, int column)
    : Error(what + " (line " + std::to_string(line)
            + ", column " + std::to_string(column) + ")")
    , line_(line)
    , column_(column)
  {}

  int line () const noexcept { return line_; }
  int column () const noexcept { return column_; }

private:
  int line_;
  int column_;
};

} // namespace orbitcalc
