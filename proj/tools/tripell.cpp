// tripell: decide which triangular numbers T_n belong to D(a)-pairs of
// triangular numbers, enumerate all such indices up to a bound, and extend
// every pair to D(a)-triples through the attached Pell solution classes.
//
// Exit codes: 0 success / valid, 1 valid run with a negative answer,
// 2 usage or domain error, 3 internal consistency failure.

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "tripell/arith.hpp"
#include "tripell/int.hpp"
#include "tripell/pell.hpp"
#include "tripell/sieve.hpp"
#include "tripell/tuples.hpp"

using tripell::Int;
using ojson = nlohmann::ordered_json;
namespace arith = tripell::arith;
namespace pell = tripell::pell;
namespace sieve = tripell::sieve;
namespace tuples = tripell::tuples;

namespace {

constexpr int kExitValid = 0;
constexpr int kExitNegative = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Output {
  ojson parameters;
  ojson result;
  std::string text;               // body for --format text
  std::vector<std::string> csv;   // header + data rows for --format csv
  int exit_code = kExitValid;
};

Int parse_int(const std::string& token, const std::string& what) {
  try {
    return Int(token);
  } catch (const std::invalid_argument&) {
    throw std::domain_error(what + ": '" + token + "' is not an integer");
  }
}

Int parse_positive(const std::string& token, const std::string& what) {
  Int v = parse_int(token, what);
  if (v < 1) throw std::domain_error(what + " must be a positive integer");
  return v;
}

std::string istr(const Int& v) { return v.get_str(); }

ojson jint_list(const std::vector<Int>& values) {
  ojson arr = ojson::array();
  for (const auto& v : values) arr.push_back(istr(v));
  return arr;
}

std::string join(const std::vector<Int>& values, const char* sep = " ") {
  std::string out;
  for (const auto& v : values) {
    if (!out.empty()) out += sep;
    out += istr(v);
  }
  return out;
}

ojson factors_json(const arith::Factorization& f) {
  ojson arr = ojson::array();
  for (const auto& [p, e] : f.factors) arr.push_back(ojson{{"prime", istr(p)}, {"exponent", e}});
  return arr;
}

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string pair_note(const Int& a) {
  return a < 0 ? " - " + istr(-a) : " + " + istr(a);
}

// ---------------------------------------------------------------------------

Output cmd_admissible(const std::string& n_arg, const std::string& format) {
  Int n = parse_positive(n_arg, "n");
  auto res = sieve::admissible(n);

  Output out;
  out.parameters = {{"n", istr(n)}, {"format", format}};
  out.result = {{"n", istr(n)},
                {"admissible", res.admissible},
                {"n_factors", factors_json(res.n_factors)},
                {"n1_factors", factors_json(res.n1_factors)},
                {"violation", res.violation() ? ojson(*res.violation()) : ojson(nullptr)},
                {"violations", res.violations}};

  std::ostringstream text;
  text << "n   = " << istr(n) << " = " << res.n_factors.str() << "\n";
  text << "n+1 = " << istr(n + 1) << " = " << res.n1_factors.str() << "\n";
  text << "admissible: " << (res.admissible ? "yes" : "no") << "\n";
  for (const auto& v : res.violations) text << "  - " << v << "\n";
  out.text = text.str();

  std::string joined;
  for (const auto& v : res.violations) {
    if (!joined.empty()) joined += "; ";
    joined += v;
  }
  out.csv = {"n,admissible,n_factorization,n1_factorization,violations",
             istr(n) + "," + (res.admissible ? "true" : "false") + "," +
                 csv_quote(res.n_factors.str()) + "," + csv_quote(res.n1_factors.str()) + "," +
                 csv_quote(joined)};

  out.exit_code = res.admissible ? kExitValid : kExitNegative;
  return out;
}

// Smallest stream index beyond `bound` across the parity classes, used as
// the truncation marker showing the growth rate.
std::optional<Int> next_partner_beyond(const pell::PellProblem& p,
                                       const std::vector<pell::FundamentalSolution>& classes,
                                       const Int& bound) {
  std::optional<Int> best;
  for (const auto& f : classes) {
    if (!pell::triangular_parity(f)) continue;
    auto c = pell::make_class(p, f);
    std::size_t within = pell::positive_solutions(c, 2 * bound + 1).size();
    auto more = pell::first_solutions(c, within + 2);
    for (std::size_t i = within; i < more.size(); ++i) {
      Int m = (more[i].y - 1) / 2;
      if (m <= bound || m == p.n) continue;
      if (!best || m < *best) best = m;
      break;
    }
  }
  return best;
}

Output cmd_solve(const std::string& n_arg, long long property, const std::string& bound_arg,
                 const std::string& format) {
  Int n = parse_positive(n_arg, "n");
  Int a(static_cast<long>(property));
  Int bound = parse_positive(bound_arg, "bound");
  auto p = pell::make_problem(n, a);
  auto bounds = pell::fundamental_bounds(p);
  auto classes = pell::fundamental_solutions(p);
  bool experimental = (a != -1);

  // partner indices within the bound: m >= 1, m != n
  std::vector<Int> partners;
  for (const auto& y : pell::merged_y_values(p, 2 * bound + 1)) {
    Int m = (y - 1) / 2;
    if (m >= 1 && m != n) partners.push_back(std::move(m));
  }
  auto next = next_partner_beyond(p, classes, bound);

  Output out;
  out.parameters = {{"n", istr(n)}, {"property", istr(a)}, {"bound", istr(bound)}, {"format", format}};

  ojson jclasses = ojson::array();
  for (const auto& f : classes) {
    auto c = pell::make_class(p, f);
    jclasses.push_back({{"x", istr(f.x)},
                        {"y", istr(f.y)},
                        {"start_index", c.start_index},
                        {"triangular_parity", pell::triangular_parity(f)}});
  }
  out.result = {{"problem",
                 {{"n", istr(n)},
                  {"a", istr(a)},
                  {"D", istr(p.D)},
                  {"N", istr(p.N)},
                  {"unit", {istr(p.unit_x), istr(p.unit_y)}}}},
                {"bounds", {{"y", istr(bounds.y_bound)}, {"x", istr(bounds.x_bound)}}},
                {"classes", jclasses},
                {"partners", jint_list(partners)},
                {"next_partner", next ? ojson(istr(*next)) : ojson(nullptr)},
                {"experimental", experimental}};

  std::ostringstream text;
  text << "problem: x^2 - " << istr(p.D) << " y^2 = " << istr(p.N) << "   (n=" << istr(n)
       << ", a=" << istr(a) << ", unit (" << istr(p.unit_x) << ", " << istr(p.unit_y) << "))\n";
  text << "fundamental bounds: 0 <= y* <= " << istr(bounds.y_bound) << ", |x*| <= "
       << istr(bounds.x_bound) << "\n";
  if (experimental) text << "note: properties other than -1 are experimental\n";
  if (classes.empty()) {
    text << "solution classes: none (the bound sweep proves the equation unsolvable)\n";
  } else {
    text << "solution classes (" << classes.size() << "):\n";
    for (const auto& f : classes)
      text << "  x*=" << istr(f.x) << " y*=" << istr(f.y)
           << (pell::triangular_parity(f) ? "" : "  [no triangular parity]") << "\n";
  }
  text << "partners m with {T_" << istr(n) << ", T_m} a D(" << istr(a) << ")-pair, m <= "
       << istr(bound) << ": " << (partners.empty() ? "none" : join(partners)) << "\n";
  if (next) text << "truncated at the bound; next partner m = " << istr(*next) << "\n";
  out.text = text.str();

  out.csv = {"record,x,y,value"};
  out.csv.push_back("bounds," + istr(bounds.x_bound) + "," + istr(bounds.y_bound) + ",");
  for (const auto& f : classes)
    out.csv.push_back("class," + istr(f.x) + "," + istr(f.y) + "," +
                      (pell::triangular_parity(f) ? "parity" : "no-parity"));
  for (const auto& m : partners) out.csv.push_back("partner,,," + istr(m));
  if (next) out.csv.push_back("next_partner,,," + istr(*next));

  out.exit_code = classes.empty() ? kExitNegative : kExitValid;
  return out;
}

Output cmd_check(const std::vector<std::string>& index_args, long long property,
                 const std::string& format) {
  Int a(static_cast<long>(property));
  std::vector<Int> indices;
  for (const auto& s : index_args) indices.push_back(parse_positive(s, "index"));
  auto report = tuples::check_tuple(indices, a);

  Output out;
  out.parameters = {{"indices", jint_list(report.indices)}, {"property", istr(a)}, {"format", format}};

  ojson pairs = ojson::array();
  for (const auto& pr : report.pair_results)
    pairs.push_back({{"i", istr(pr.i)},
                     {"j", istr(pr.j)},
                     {"root", pr.root ? ojson(istr(*pr.root)) : ojson(nullptr)}});
  out.result = {{"a", istr(a)},
                {"indices", jint_list(report.indices)},
                {"pairs", pairs},
                {"valid", report.is_valid}};

  std::ostringstream text;
  text << "indices: " << join(report.indices) << "   property a = " << istr(a) << "\n";
  out.csv = {"i,j,root,valid"};
  for (const auto& pr : report.pair_results) {
    Int product = tuples::triangular(pr.i) * tuples::triangular(pr.j) + a;
    text << "  T_" << istr(pr.i) << " * T_" << istr(pr.j) << pair_note(a) << " = "
         << istr(product);
    if (pr.root)
      text << " = " << istr(*pr.root) << "^2\n";
    else
      text << "  (not a positive square)\n";
    out.csv.push_back(istr(pr.i) + "," + istr(pr.j) + "," + (pr.root ? istr(*pr.root) : "") + "," +
                      (pr.root ? "true" : "false"));
  }
  text << "valid D(" << istr(a) << ")-tuple: " << (report.is_valid ? "yes" : "no") << "\n";
  out.text = text.str();

  out.exit_code = report.is_valid ? kExitValid : kExitNegative;
  return out;
}

Output cmd_check_values(const std::vector<std::string>& value_args, long long property,
                        const std::string& format) {
  Int a(static_cast<long>(property));
  if (a == 0) throw std::domain_error("property a must be nonzero");
  std::vector<Int> values;
  for (const auto& s : value_args) values.push_back(parse_positive(s, "value"));
  if (values.size() < 2) throw std::domain_error("check-values: need at least two values");
  std::sort(values.begin(), values.end());
  if (std::adjacent_find(values.begin(), values.end()) != values.end())
    throw std::domain_error("check-values: values must be distinct");

  bool valid = true;
  struct Row {
    Int u, v;
    std::optional<Int> root;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < values.size(); ++i)
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      auto root = tuples::check_pair_values(values[i], values[j], a);
      if (!root) valid = false;
      rows.push_back({values[i], values[j], std::move(root)});
    }

  Output out;
  out.parameters = {{"values", jint_list(values)}, {"property", istr(a)}, {"format", format}};
  ojson pairs = ojson::array();
  for (const auto& r : rows)
    pairs.push_back({{"u", istr(r.u)},
                     {"v", istr(r.v)},
                     {"root", r.root ? ojson(istr(*r.root)) : ojson(nullptr)}});
  out.result = {{"a", istr(a)}, {"values", jint_list(values)}, {"pairs", pairs}, {"valid", valid}};

  std::ostringstream text;
  text << "values: " << join(values) << "   property a = " << istr(a) << "\n";
  out.csv = {"u,v,root,valid"};
  for (const auto& r : rows) {
    Int product = r.u * r.v + a;
    text << "  " << istr(r.u) << " * " << istr(r.v) << pair_note(a) << " = " << istr(product);
    if (r.root)
      text << " = " << istr(*r.root) << "^2\n";
    else
      text << "  (not a positive square)\n";
    out.csv.push_back(istr(r.u) + "," + istr(r.v) + "," + (r.root ? istr(*r.root) : "") + "," +
                      (r.root ? "true" : "false"));
  }
  text << "valid D(" << istr(a) << ")-tuple of values: " << (valid ? "yes" : "no") << "\n";
  out.text = text.str();

  out.exit_code = valid ? kExitValid : kExitNegative;
  return out;
}

Output cmd_extend(const std::string& n_arg, long long property, std::size_t count,
                  const std::string& format) {
  Int n = parse_positive(n_arg, "n");
  Int a(static_cast<long>(property));
  if (count < 1) throw std::domain_error("count must be >= 1");
  auto triples = tuples::build_triples(n, a, count);
  bool experimental = (a != -1);

  // per-class sequences for the rendering, one extra term as growth marker
  auto problem = pell::make_problem(n, a);
  ojson jclasses = ojson::array();
  std::ostringstream text;
  text << "n=" << istr(n) << "  a=" << istr(a) << "\n";
  if (experimental) text << "note: properties other than -1 are experimental\n";
  for (const auto& f : pell::fundamental_solutions(problem)) {
    if (!pell::triangular_parity(f)) continue;
    auto seq = tuples::index_sequence(pell::make_class(problem, f), count + 3);
    std::vector<Int> shown;
    for (const auto& t : seq.terms) shown.push_back(t.m);
    ojson jc = {{"x", istr(f.x)}, {"y", istr(f.y)}};
    if (shown.size() > count + 2) {
      Int marker = shown.back();
      shown.pop_back();
      jc["sequence"] = jint_list(shown);
      jc["next_term"] = istr(marker);
      text << "class x*=" << istr(f.x) << " y*=" << istr(f.y) << ": m = " << join(shown)
           << " ... next " << istr(marker) << "\n";
    } else {
      jc["sequence"] = jint_list(shown);
      jc["next_term"] = nullptr;
      text << "class x*=" << istr(f.x) << " y*=" << istr(f.y) << ": m = " << join(shown) << "\n";
    }
    jclasses.push_back(std::move(jc));
  }

  Output out;
  out.parameters = {{"n", istr(n)},
                    {"property", istr(a)},
                    {"count", count},
                    {"format", format}};

  ojson jtriples = ojson::array();
  out.csv = {"n,m1,m2,closed_form_root,valid"};
  for (const auto& rep : triples) {
    // the two non-n members are the consecutive class indices
    std::vector<Int> ms;
    for (const auto& idx : rep.indices)
      if (idx != n) ms.push_back(idx);
    Int root = tuples::closed_form_root(n, ms[0], ms[1]);

    ojson pairs = ojson::array();
    for (const auto& pr : rep.pair_results)
      pairs.push_back({{"i", istr(pr.i)},
                       {"j", istr(pr.j)},
                       {"root", pr.root ? ojson(istr(*pr.root)) : ojson(nullptr)}});
    jtriples.push_back({{"indices", jint_list(rep.indices)},
                        {"pairs", pairs},
                        {"closed_form_root", istr(root)},
                        {"valid", rep.is_valid}});

    text << "triple {" << join(rep.indices, ", ") << "}: valid, pair roots";
    for (const auto& pr : rep.pair_results) text << " " << istr(*pr.root);
    text << "\n";
    out.csv.push_back(istr(n) + "," + istr(ms[0]) + "," + istr(ms[1]) + "," + istr(root) + ",true");
  }
  out.result = {{"n", istr(n)},
                {"a", istr(a)},
                {"count", count},
                {"classes", jclasses},
                {"triples", jtriples},
                {"experimental", experimental}};
  out.text = text.str();
  out.exit_code = kExitValid;
  return out;
}

Output cmd_enumerate(const std::string& bound_arg, bool run_oracle, const std::string& format) {
  Int bound = parse_positive(bound_arg, "bound");
  auto report = sieve::enumerate_pairs(bound);

  Output out;
  out.parameters = {{"bound", istr(bound)}, {"oracle", run_oracle}, {"format", format}};

  ojson jsteps = ojson::array();
  for (const auto& step : report.steps)
    jsteps.push_back({{"seed", istr(step.seed)}, {"discovered", jint_list(step.discovered)}});
  out.result = {{"bound", istr(bound)}, {"steps", jsteps}, {"result", jint_list(report.result)}};

  std::ostringstream text;
  text << "bound: " << istr(bound) << "\n";
  out.csv = {"record,seed,values"};
  for (const auto& step : report.steps) {
    text << "seed " << istr(step.seed) << " -> "
         << (step.discovered.empty() ? "none" : join(step.discovered)) << "\n";
    out.csv.push_back("step," + istr(step.seed) + "," + csv_quote(join(step.discovered)));
  }
  text << "result (" << report.result.size() << "): "
       << (report.result.empty() ? "none" : join(report.result)) << "\n";
  out.csv.push_back("result,," + csv_quote(join(report.result)));

  out.exit_code = kExitValid;
  if (run_oracle) {
    auto brute = sieve::brute_force_pairs(bound);
    bool match = (brute == report.result);
    out.result["oracle"] = {{"match", match}, {"result", jint_list(brute)}};
    text << "oracle: " << (match ? "match" : "MISMATCH " + join(brute)) << "\n";
    out.csv.push_back(std::string("oracle,,") + (match ? "match" : "mismatch"));
    if (!match) out.exit_code = kExitInternal;
  } else {
    out.result["oracle"] = nullptr;
  }
  out.text = text.str();
  return out;
}

// ---------------------------------------------------------------------------

int emit(const std::string& command, const Output& out, const std::string& format,
         std::chrono::steady_clock::time_point started) {
  auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                     std::chrono::steady_clock::now() - started)
                     .count();
  if (format == "json") {
    ojson envelope = {{"command", command},
                      {"parameters", out.parameters},
                      {"result", out.result},
                      {"elapsed_ms", elapsed}};
    std::cout << envelope.dump(2) << "\n";
  } else if (format == "csv") {
    for (const auto& row : out.csv) std::cout << row << "\n";
  } else {
    std::cout << out.text << "elapsed_ms: " << elapsed << "\n";
  }
  return out.exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact D(a)-pair and D(a)-triple arithmetic on triangular numbers"};
  app.require_subcommand(1);

  std::string format = "text";
  std::string n_arg, bound_arg = "1000";
  long long property = -1;
  std::size_t count = 3;
  bool oracle = false;
  std::vector<std::string> list_args;

  auto add_format = [&format](CLI::App* cmd) {
    cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
  };

  auto* adm = app.add_subcommand("admissible", "necessary-condition test for membership in a D(-1)-pair");
  adm->add_option("n", n_arg, "triangular index")->required();
  add_format(adm);

  auto* solve = app.add_subcommand("solve", "Pell classes, bounds and partner indices for one index");
  solve->add_option("n", n_arg, "triangular index")->required();
  solve->add_option("--property", property, "tuple property a (nonzero)")->capture_default_str();
  solve->add_option("--bound", bound_arg, "partner search bound")->capture_default_str();
  add_format(solve);

  auto* check = app.add_subcommand("check", "verify a D(a)-tuple given triangular indices");
  check->add_option("indices", list_args, "two or more distinct indices")->required()->expected(-2);
  check->add_option("--property", property, "tuple property a (nonzero)")->capture_default_str();
  add_format(check);

  auto* checkv = app.add_subcommand("check-values", "verify a D(a)-tuple given raw values");
  checkv->add_option("values", list_args, "two or more distinct positive values")
      ->required()
      ->expected(-2);
  checkv->add_option("--property", property, "tuple property a (nonzero)")->capture_default_str();
  add_format(checkv);

  auto* extend = app.add_subcommand("extend", "build D(a)-triples containing T_n");
  extend->add_option("n", n_arg, "triangular index")->required();
  extend->add_option("--count", count, "number of triples")->capture_default_str();
  extend->add_option("--property", property, "tuple property a (nonzero)")->capture_default_str();
  add_format(extend);

  auto* enumerate = app.add_subcommand("enumerate", "all indices up to the bound whose T_n is in a D(-1)-pair");
  enumerate->add_option("--bound", bound_arg, "inclusive index bound")->capture_default_str();
  enumerate->add_flag("--oracle", oracle, "also run the brute-force oracle and compare");
  add_format(enumerate);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto started = std::chrono::steady_clock::now();
  try {
    Output out;
    std::string command;
    if (adm->parsed()) {
      command = "admissible";
      out = cmd_admissible(n_arg, format);
    } else if (solve->parsed()) {
      command = "solve";
      out = cmd_solve(n_arg, property, bound_arg, format);
    } else if (check->parsed()) {
      command = "check";
      out = cmd_check(list_args, property, format);
    } else if (checkv->parsed()) {
      command = "check-values";
      out = cmd_check_values(list_args, property, format);
    } else if (extend->parsed()) {
      command = "extend";
      out = cmd_extend(n_arg, property, count, format);
    } else {
      command = "enumerate";
      out = cmd_enumerate(bound_arg, oracle, format);
    }
    return emit(command, out, format, started);
  } catch (const tuples::no_pairs_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNegative;
  } catch (const tripell::internal_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
