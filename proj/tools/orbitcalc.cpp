// SPDX-License-Identifier: MIT
// orbitcalc: signed Young diagram calculus for Mp(2n) and O(p,q).

#include <orbitcalc/diagram.hpp>
#include <orbitcalc/enumerate.hpp>
#include <orbitcalc/error.hpp>
#include <orbitcalc/induction.hpp>
#include <orbitcalc/infchar.hpp>
#include <orbitcalc/oracle.hpp>
#include <orbitcalc/serialize.hpp>
#include <orbitcalc/theta.hpp>
#include <orbitcalc/tower.hpp>
#include <orbitcalc/verify.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <set>
#include <iostream>
#include <iterator>
#include <sstream>

using namespace orbitcalc;

namespace {

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kUsage = 2;

/// Input problems (bad files, malformed diagrams) map to the usage code.
struct InputError : Error
{
  using Error::Error;
};

std::string read_input (const std::string &path)
{
  if (path == "-")
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  std::ifstream in(path);
  if (!in)
    throw InputError("cannot open '" + path + "'");
  return std::string(std::istreambuf_iterator<char>(in), {});
}

std::optional<Kind> kind_option (const std::string &s)
{
  if (s.empty())
    return std::nullopt;
  try
  {
    return parse_kind(s);
  }
  catch (const Error &e)
  {
    throw InputError(e.what());
  }
}

SignedDiagram load_diagram (const std::string &path, const std::string &kind)
{
  std::string text = read_input(path);
  try
  {
    return parse_diagram(text, kind_option(kind));
  }
  catch (const Error &e)
  {
    throw InputError(path + ": " + e.what());
  }
}

std::string sig_text (Signature s)
{
  return "(" + std::to_string(s.plus) + "," + std::to_string(s.minus) + ")";
}

void print_json (const json &j)
{
  std::cout << j.dump(2) << "\n";
}

std::string diagram_line (const SignedDiagram &D)
{
  std::string out;
  for (const auto &r: D.rows)
  {
    if (!out.empty())
      out += " ";
    out += std::to_string(r.length) + sign_char(r.leading);
  }
  return out.empty() ? "(empty)" : out;
}

json induced_json (const InducedOrbitSet &set)
{
  json j;
  j["column_length"] = set.column_length;
  j["rows"] = set.rows;
  j["count"] = set.count;
  j["diagrams"] = json::array();
  for (const auto &D: set.diagrams)
    j["diagrams"].push_back(to_json(D));
  return j;
}

json infchar_json (const HalfIntVector &v)
{
  json a = json::array();
  for (const auto &x: v)
    a.push_back(to_string(x));
  return a;
}

} // namespace

int main (int argc, char **argv)
{
  CLI::App app{"Signed Young diagram calculus for Mp(2n) and O(p,q)"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "Emit JSON instead of text");

  std::string file;
  std::string kind;

  auto *validate = app.add_subcommand("validate", "Check a signed diagram against its classification");
  validate->add_option("file", file, "Diagram file (JSON or ASCII, '-' for stdin)")->required();
  validate->add_option("--kind", kind, "sp or o when ASCII is ambiguous");

  auto *classify = app.add_subcommand("classify", "Group, signature and class U membership");
  classify->add_option("file", file)->required();
  classify->add_option("--kind", kind);

  auto *tower = app.add_subcommand("tower", "Quantum induction tower certificate");
  tower->add_option("file", file)->required();
  tower->add_option("--kind", kind);

  int n = 0;
  bool use_tau = false;
  auto *induce = app.add_subcommand("induce", "Real induced orbits from GL(n-m) x Sp(2m)");
  induce->add_option("file", file)->required();
  induce->add_option("--n", n, "Target rank n of Sp(2n)")->required();
  induce->add_flag("--tau", use_tau, "Induce from tau(O_S) so even rows keep their sign");

  auto *infchar = app.add_subcommand("infchar", "Infinitesimal character by segments and dominoes");
  infchar->add_option("file", file, "Partition array or diagram file")->required();
  infchar->add_option("--kind", kind, "sp or o");

  auto *chain_cmd = app.add_subcommand("chain", "Column-deletion chain with groups");
  chain_cmd->add_option("file", file)->required();
  chain_cmd->add_option("--kind", kind);

  std::string form;
  auto *oracle = app.add_subcommand("oracle", "Exact matrix oracle");
  oracle->require_subcommand(1);
  auto *oracle_classify = oracle->add_subcommand("classify", "Signed diagram of a nilpotent matrix");
  oracle_classify->add_option("file", file, "Row-major matrix JSON")->required();
  oracle_classify->add_option("--form", form, "sp:2n or o:p,q")->required();

  auto *render = app.add_subcommand("render", "Print a diagram as ASCII rows");
  render->add_option("file", file)->required();
  render->add_option("--kind", kind);

  int max = -1;
  std::string signature_opt;
  bool count_only = false;
  auto *enumerate = app.add_subcommand("enumerate", "List canonical diagrams");
  enumerate->add_option("--kind", kind, "sp or o")->required();
  enumerate->add_option("--max", max, "Largest size to list");
  enumerate->add_option("--signature", signature_opt, "p,q (for sp use n,n)");
  enumerate->add_flag("--count", count_only, "Print counts and the product formula only");

  std::string suite;
  bool serial = false;
  auto *verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("--suite", suite, "Suite name or 'all'")->required();
  verify->add_option("--max", max, "Size bound (suite default when omitted)");
  verify->add_flag("--serial", serial, "Use the serial reference path");

  int alpha = 0;
  auto *wf = app.add_subcommand("wf-ialpha", "Wave front components of the degenerate series");
  wf->add_option("--n", n)->required();
  wf->add_option("--alpha", alpha)->required();

  try
  {
    app.parse(argc, argv);
  }
  catch (const CLI::ParseError &e)
  {
    int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  try
  {
    if (validate->parsed())
    {
      std::string text = read_input(file);
      SignedDiagram D;
      Validation v;
      try
      {
        D = parse_diagram(text, kind_option(kind));
      }
      catch (const Error &e)
      {
        v.ok = false;
        v.violations.push_back(e.what());
      }
      if (as_json)
      {
        json j;
        j["valid"] = v.ok;
        j["violations"] = v.violations;
        if (v.ok)
          j["diagram"] = to_json(D);
        print_json(j);
      }
      else if (v.ok)
        std::cout << "valid " << kind_name(D.kind) << " diagram, group "
                  << group_of(D).to_string() << "\n";
      else
        for (const auto &msg: v.violations)
          std::cout << "invalid: " << msg << "\n";
      return v.ok ? kOk : kCheckFailed;
    }

    if (classify->parsed())
    {
      SignedDiagram D = load_diagram(file, kind);
      ClassUReport u = class_u(D);
      Partition d = D.shape();
      if (as_json)
      {
        json j;
        j["diagram"] = to_json(D);
        j["group"] = to_json(group_of(D));
        j["signature"] = to_json(signature(D));
        j["shape"] = to_json(d);
        j["transpose"] = to_json(transpose(d));
        j["pre_rigid"] = pre_rigid(d);
        j["special"] = special(d, D.kind);
        j["class_u"] = to_json(u);
        print_json(j);
      }
      else
      {
        std::cout << "group: " << group_of(D).to_string() << "\n"
                  << "signature: " << sig_text(signature(D)) << "\n"
                  << "shape: " << d.to_string() << "\n"
                  << "transpose: " << transpose(d).to_string() << "\n"
                  << "pre-rigid: " << (pre_rigid(d) ? "yes" : "no") << "\n"
                  << "special: " << (special(d, D.kind) ? "yes" : "no") << "\n"
                  << "class U: " << (u.member ? "member" : "not a member") << "\n";
        for (const auto &r: u.reasons)
          std::cout << "  " << r << "\n";
      }
      return kOk;
    }

    if (tower->parsed())
    {
      SignedDiagram D = load_diagram(file, kind);
      ClassUReport u = class_u(D);
      if (!u.member)
      {
        if (as_json)
        {
          json j;
          j["valid"] = false;
          j["class_u"] = to_json(u);
          print_json(j);
        }
        else
        {
          std::cout << "not in class U\n";
          for (const auto &r: u.reasons)
            std::cout << "  " << r << "\n";
        }
        return kCheckFailed;
      }
      TowerCertificate c = certificate(D);
      if (as_json)
        print_json(to_json(c));
      else
        std::cout << render_certificate(c);
      return c.valid ? kOk : kCheckFailed;
    }

    if (induce->parsed())
    {
      SignedDiagram S = load_diagram(file, "sp");
      InducedOrbitSet set;
      try
      {
        set = use_tau ? induce_real_tau(S, n) : induce_real(S, n);
      }
      catch (const Error &e)
      {
        throw InputError(e.what());
      }
      if (as_json)
        print_json(induced_json(set));
      else
      {
        std::cout << set.count << " components (column length " << set.column_length
                  << ", " << set.rows << " rows in S)\n";
        for (std::size_t j = 0; j < set.diagrams.size(); ++j)
          std::cout << "D(" << j << "): " << diagram_line(set.diagrams[j]) << "\n";
      }
      return kOk;
    }

    if (infchar->parsed())
    {
      std::string text = read_input(file);
      Partition d;
      std::optional<Kind> k = kind_option(kind);
      try
      {
        json j = json::parse(text);
        if (j.is_array())
          d = partition_from_json(j);
        else
        {
          SignedDiagram D = diagram_from_json(j);
          d = D.shape();
          if (!k)
            k = D.kind;
        }
      }
      catch (const json::parse_error &)
      {
        SignedDiagram D;
        try
        {
          D = parse_diagram(text, k);
        }
        catch (const Error &e)
        {
          throw InputError(file + ": " + e.what());
        }
        d = D.shape();
        if (!k)
          k = D.kind;
      }
      catch (const Error &e)
      {
        throw InputError(file + ": " + e.what());
      }
      if (!k)
        throw InputError("--kind is required for a bare partition");
      if (!validate_partition_kind(d, *k))
        throw InputError(d.to_string() + " is not a valid " + kind_name(*k) + " shape");
      HalfIntVector seg = infchar_segments(d, *k);
      Partition t = transpose(d);
      bool domino_ok = very_even(t) || very_odd(t);
      HalfIntVector dom;
      if (domino_ok)
        dom = infchar_domino(d, *k);
      if (as_json)
      {
        json j;
        j["partition"] = to_json(d);
        j["kind"] = kind_name(*k);
        j["segments"] = infchar_json(seg);
        j["segments_sorted"] = infchar_json(bar_sort(seg));
        if (domino_ok)
          j["domino"] = infchar_json(dom);
        else
          j["domino"] = nullptr;
        j["agree"] = domino_ok ? json(bar_sort(seg) == dom) : json(nullptr);
        print_json(j);
      }
      else
      {
        std::cout << "segments: " << to_string(seg) << "\n"
                  << "sorted:   " << to_string(bar_sort(seg)) << "\n";
        if (domino_ok)
          std::cout << "domino:   " << to_string(dom) << "\n"
                    << (bar_sort(seg) == dom ? "agree" : "DISAGREE") << "\n";
        else
          std::cout << "domino:   not applicable (transpose neither very even nor very odd)\n";
      }
      return domino_ok && bar_sort(seg) != dom ? kCheckFailed : kOk;
    }

    if (chain_cmd->parsed())
    {
      SignedDiagram D = load_diagram(file, kind);
      ThetaChain c = chain(D);
      if (as_json)
      {
        json a = json::array();
        for (const auto &e: c)
        {
          json j;
          j["group"] = to_json(e.group);
          j["signature"] = to_json(signature(e.diagram));
          j["diagram"] = to_json(e.diagram);
          a.push_back(j);
        }
        print_json(a);
      }
      else
        for (const auto &e: c)
          std::cout << e.group.to_string() << " " << sig_text(signature(e.diagram)) << " "
                    << diagram_line(e.diagram) << "\n";
      return kOk;
    }

    if (oracle_classify->parsed())
    {
      FormSpec f;
      RationalMatrix X;
      try
      {
        f = FormSpec::parse(form);
        X = matrix_from_json(json::parse(read_input(file)));
      }
      catch (const json::parse_error &e)
      {
        throw InputError(std::string("matrix JSON: ") + e.what());
      }
      catch (const Error &e)
      {
        throw InputError(e.what());
      }
      SignedDiagram D;
      try
      {
        D = classify_signed(X, f);
      }
      catch (const Error &e)
      {
        throw InputError(e.what());
      }
      if (as_json)
      {
        json j;
        j["form"] = f.to_string();
        j["diagram"] = to_json(D);
        j["shape"] = to_json(D.shape());
        print_json(j);
      }
      else
        std::cout << "form " << f.to_string() << ": " << diagram_line(D) << "\n";
      return kOk;
    }

    if (render->parsed())
    {
      SignedDiagram D = load_diagram(file, kind);
      if (as_json)
        print_json(to_json(D));
      else
        std::cout << render_ascii(D);
      return kOk;
    }

    if (enumerate->parsed())
    {
      Kind k = *kind_option(kind);
      std::vector<SignedDiagram> list;
      if (!signature_opt.empty())
      {
        int p = 0, q = 0;
        char comma = 0;
        std::istringstream in(signature_opt);
        if (!(in >> p >> comma >> q) || comma != ',' || p < 0 || q < 0)
          throw InputError("--signature must be p,q");
        list = diagrams_of_signature(k, Signature{p, q});
      }
      else
      {
        if (max < 0)
          throw InputError("enumerate needs --max or --signature");
        list = diagrams_up_to(k, max);
      }
      // Independent count from the multiplicity-product formula.
      std::optional<long long> formula;
      if (signature_opt.empty())
      {
        formula = 0;
        for (int s = 0; s <= max; ++s)
          for (const auto &d: kind_partitions(s, k))
            *formula += shape_count_formula(d, k);
      }
      if (as_json)
      {
        json j;
        j["kind"] = kind_name(k);
        j["count"] = list.size();
        if (formula)
          j["formula"] = *formula;
        j["diagrams"] = json::array();
        if (!count_only)
          for (const auto &D: list)
            j["diagrams"].push_back(to_json(D));
        print_json(j);
      }
      else
      {
        if (!count_only)
          for (const auto &D: list)
            std::cout << sig_text(signature(D)) << " " << diagram_line(D) << "\n";
        std::cout << list.size() << " diagrams";
        if (formula)
          std::cout << " (formula " << *formula << ")";
        std::cout << "\n";
      }
      return kOk;
    }

    if (verify->parsed())
    {
      std::vector<std::string> names;
      if (suite == "all")
        names = suite_names();
      else
        names.push_back(suite);
      bool ok = true;
      json all = json::array();
      for (const auto &name: names)
      {
        std::optional<int> bound;
        if (max >= 0)
          bound = max;
        SuiteReport r;
        try
        {
          r = run_suite(name, bound, !serial);
        }
        catch (const Error &e)
        {
          throw InputError(e.what());
        }
        ok = ok && r.passed();
        if (as_json)
          all.push_back(to_json(r));
        else
          std::cout << render_report(r);
      }
      if (as_json)
        print_json(names.size() == 1 ? all[0] : all);
      return ok ? kOk : kCheckFailed;
    }

    if (wf->parsed())
    {
      std::vector<SignedDiagram> comps;
      try
      {
        comps = wf_Ialpha(n, alpha);
      }
      catch (const Error &e)
      {
        throw InputError(e.what());
      }
      if (as_json)
      {
        json j;
        j["n"] = n;
        j["alpha"] = alpha;
        j["components"] = json::array();
        for (const auto &D: comps)
          j["components"].push_back(to_json(D));
        print_json(j);
      }
      else
        for (const auto &D: comps)
          std::cout << diagram_line(D) << "\n";
      return kOk;
    }
  }
  catch (const InputError &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  catch (const Error &e)
  {
    std::cerr << "error: " << e.what() << "\n";
    return kCheckFailed;
  }
  return kUsage;
}
