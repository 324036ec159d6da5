// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/serialize.hpp>
#include <orbitcalc/error.hpp>

#include <sstream>

namespace orbitcalc {

json to_json (const SignedDiagram &D)
{
  json rows = json::array();
  for (const auto &r: D.rows)
    rows.push_back({{"len", r.length}, {"sign", std::string(1, sign_char(r.leading))}});
  return {{"kind", kind_name(D.kind)}, {"rows", rows}};
}

json to_json (const Partition &d)
{
  return json(d.rows());
}

json to_json (const Signature &s)
{
  return json::array({s.plus, s.minus});
}

json to_json (const GroupLabel &g)
{
  return g.to_string();
}

Kind parse_kind (const std::string &name)
{
  if (name == "symplectic" || name == "sp" || name == "mp")
    return Kind::Symplectic;
  if (name == "orthogonal" || name == "o")
    return Kind::Orthogonal;
  throw Error("unknown kind '" + name + "' (expected sp or o)");
}

namespace {

void require_valid (const SignedDiagram &D)
{
  Validation v = validate_signed(D);
  if (!v.ok)
  {
    std::string msg = "invalid signed diagram:";
    for (const auto &s: v.violations)
      msg += " " + s + ";";
    throw Error(msg);
  }
}

} // namespace

SignedDiagram diagram_from_json (const json &j)
{
  if (!j.is_object())
    throw Error("diagram JSON must be an object");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw Error("diagram JSON: missing string field 'kind'");
  if (!j.contains("rows") || !j["rows"].is_array())
    throw Error("diagram JSON: missing array field 'rows'");

  SignedDiagram D;
  D.kind = parse_kind(j["kind"].get<std::string>());
  int idx = 0;
  for (const auto &r: j["rows"])
  {
    std::string where = "diagram JSON: rows[" + std::to_string(idx++) + "]";
    if (!r.is_object() || !r.contains("len") || !r.contains("sign"))
      throw Error(where + " needs fields 'len' and 'sign'");
    if (!r["len"].is_number_integer() || r["len"].get<int>() < 1)
      throw Error(where + ".len must be a positive integer");
    if (!r["sign"].is_string())
      throw Error(where + ".sign must be \"+\" or \"-\"");
    std::string s = r["sign"].get<std::string>();
    if (s != "+" && s != "-")
      throw Error(where + ".sign must be \"+\" or \"-\"");
    D.rows.push_back({r["len"].get<int>(), s == "+" ? Sign::Plus : Sign::Minus});
  }
  require_valid(D);
  return canonicalize(D);
}

Partition partition_from_json (const json &j)
{
  if (!j.is_array())
    throw Error("partition JSON must be an array of row lengths");
  std::vector<int> rows;
  for (const auto &v: j)
  {
    if (!v.is_number_integer())
      throw Error("partition JSON entries must be integers");
    rows.push_back(v.get<int>());
  }
  return Partition(std::move(rows));
}

std::string render_ascii (const SignedDiagram &D)
{
  std::string out;
  for (const auto &r: D.rows)
  {
    for (int c = 1; c <= r.length; ++c)
      out += sign_char(r.box(c));
    out += '\n';
  }
  return out;
}

SignedDiagram parse_ascii (const std::string &text, std::optional<Kind> kind)
{
  std::vector<SignedRow> rows;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line))
  {
    ++lineno;
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t'))
      line.pop_back();
    if (line.empty())
      continue;
    SignedRow row;
    row.length = static_cast<int>(line.size());
    for (std::size_t c = 0; c < line.size(); ++c)
    {
      char ch = line[c];
      int col = static_cast<int>(c) + 1;
      if (ch != '+' && ch != '-')
        throw ParseError(std::string("unexpected character '") + ch + "'", lineno, col);
      Sign s = ch == '+' ? Sign::Plus : Sign::Minus;
      if (c == 0)
        row.leading = s;
      else if (s != row.box(col))
        throw ParseError("signs must alternate along a row", lineno, col);
    }
    if (!rows.empty() && row.length > rows.back().length)
      throw ParseError("row is longer than the row above", lineno, row.length);
    rows.push_back(row);
  }

  auto attempt = [&rows](Kind k) {
    SignedDiagram D(k, rows);
    return std::make_pair(validate_signed(D), D);
  };

  if (kind)
  {
    auto [v, D] = attempt(*kind);
    if (!v.ok)
    {
      std::string msg = "invalid " + kind_name(*kind) + " diagram:";
      for (const auto &s: v.violations)
        msg += " " + s + ";";
      throw Error(msg);
    }
    return canonicalize(D);
  }

  auto [vs, Ds] = attempt(Kind::Symplectic);
  auto [vo, Do] = attempt(Kind::Orthogonal);
  if (vs.ok && vo.ok)
    throw Error("ambiguous diagram: valid as both kinds, pass the kind explicitly");
  if (vs.ok)
    return canonicalize(Ds);
  if (vo.ok)
    return canonicalize(Do);
  throw Error("text is neither a valid symplectic nor a valid orthogonal diagram");
}

SignedDiagram parse_diagram (const std::string &text, std::optional<Kind> kind)
{
  auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string::npos && text[pos] == '{')
  {
    json j;
    try
    {
      j = json::parse(text);
    }
    catch (const json::parse_error &e)
    {
      int line = 1, col = 1;
      for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i)
      {
        if (text[i] == '\n')
        {
          ++line;
          col = 1;
        }
        else
          ++col;
      }
      throw ParseError("malformed JSON", line, col);
    }
    SignedDiagram D = diagram_from_json(j);
    if (kind && *kind != D.kind)
      throw Error("diagram kind does not match the requested kind");
    return D;
  }
  return parse_ascii(text, kind);
}

} // namespace orbitcalc
