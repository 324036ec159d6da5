// SPDX-License-Identifier: MIT
// Diagrams transcribed box by box from the pictures they are named after.

#pragma once

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/serialize.hpp>

#include <string>
#include <vector>

namespace fixtures {

using orbitcalc::Kind;
using orbitcalc::SignedDiagram;

/// Builds a diagram from printed rows such as "-+-+". The rows are kept in
/// the printed order; no canonicalization happens here.
inline SignedDiagram from_rows (Kind kind, const std::vector<std::string> &rows)
{
  SignedDiagram D;
  D.kind = kind;
  for (const auto &r: rows)
    D.rows.push_back({static_cast<int>(r.size()),
                      r.front() == '+' ? orbitcalc::Sign::Plus : orbitcalc::Sign::Minus});
  return D;
}

/// Introduction diagram of Mp(30); also the first class U picture.
inline std::vector<std::string> intro_rows ()
{
  return {"-+-+-+", "-+-+-", "+-+-+", "-+-+", "+-+-", "+-", "+-", "-", "+"};
}

inline SignedDiagram intro () { return from_rows(Kind::Symplectic, intro_rows()); }

/// The tau example: left and right pictures.
inline SignedDiagram tau_before ()
{
  return from_rows(Kind::Symplectic, {"-+-+-+-", "+-+-+-+", "+-+-", "+-", "-", "+"});
}

inline SignedDiagram tau_after ()
{
  return from_rows(Kind::Symplectic, {"-+-+-+-", "+-+-+-+", "-+-+", "-+", "-", "+"});
}

/// The two pictured members of YD_+(7,9).
inline SignedDiagram o79_left ()
{
  return from_rows(Kind::Orthogonal, {"+-+-+-", "-+-+-+", "-+-", "-"});
}

inline SignedDiagram o79_right ()
{
  return from_rows(Kind::Orthogonal, {"-+-+-", "+-+-", "-+-+", "-+-"});
}

/// The induced-orbit example: S in the middle of the picture, n - m = 7.
inline SignedDiagram induce_S ()
{
  return from_rows(Kind::Symplectic, {"-+-+-", "+-+-+", "-+-+", "-+", "-+"});
}

inline constexpr int induce_column = 7;

/// D^(0), D^(1), D^(2) as printed.
inline std::vector<SignedDiagram> induce_D ()
{
  std::vector<std::string> common{"-+-+-+-", "+-+-+-+", "+-+-+-", "+-+-", "+-+-"};
  std::vector<SignedDiagram> out;
  for (const auto &tail: std::vector<std::vector<std::string>>{
         {"+-", "+-"}, {"+-", "-+"}, {"-+", "-+"}})
  {
    auto rows = common;
    rows.insert(rows.end(), tail.begin(), tail.end());
    out.push_back(from_rows(Kind::Symplectic, rows));
  }
  return out;
}

/// Printed signature sequence of the introduction tower, from D downwards.
inline std::vector<orbitcalc::Signature> intro_signatures ()
{
  return {{15, 15}, {10, 11}, {7, 7}, {5, 4}, {2, 2}, {1, 0}};
}

} // namespace fixtures
