#include "cayley/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <ostream>
#include <sstream>

#include "cayley/classify.hpp"
#include "cayley/errors.hpp"
#include "cayley/numtheory.hpp"

namespace cayley::cli {

namespace {

using json = nlohmann::ordered_json;
using ffpoly::FieldPoly;

std::string beta_text(const maps::Rational& b) {
  return b.den == 1 ? std::to_string(b.num) : std::to_string(b.num) + "/" + std::to_string(b.den);
}

std::string fraction_text(const maps::Rational& b) { return std::to_string(b.num) + "/" + std::to_string(b.den); }

json factorization_json(const ffpoly::Factorization& fz) {
  json out = json::array();
  for (const auto& [q, k] : fz.factors) out.push_back({{"poly", ffpoly::to_string(q)}, {"multiplicity", k}});
  return out;
}

json record_json(const maps::MapRecord& r) {
  return {{"poly", ffpoly::to_string(r.f)},
          {"factorization", factorization_json(r.factorization)},
          {"j", r.j},
          {"alpha", r.alpha},
          {"k", r.k},
          {"m", r.m},
          {"rl_order", r.rl_order},
          {"beta", {{"num", r.beta.num}, {"den", r.beta.den}}},
          {"genus", r.genus},
          {"unbalanced_capable", r.unbalanced_capable},
          {"vertices", r.vertices},
          {"edges", r.edges},
          {"faces", r.faces}};
}

const std::vector<std::string> kRecordColumns = {"poly",  "factorization",      "j",        "alpha", "k",
                                                 "m",     "rl_order",           "beta",     "genus", "unbalanced_capable",
                                                 "vertices", "edges",           "faces"};

std::vector<std::string> record_cells(const maps::MapRecord& r, Format format) {
  return {ffpoly::to_string(r.f),
          ffpoly::to_string(r.factorization),
          std::to_string(r.j),
          std::to_string(r.alpha),
          std::to_string(r.k),
          std::to_string(r.m),
          std::to_string(r.rl_order),
          format == Format::csv ? fraction_text(r.beta) : beta_text(r.beta),
          std::to_string(r.genus),
          r.unbalanced_capable ? "true" : "false",
          std::to_string(r.vertices),
          std::to_string(r.edges),
          std::to_string(r.faces)};
}

/// Left-aligned text table with a dashed rule under the header.
void print_table(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
                 std::ostream& out) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  auto line = [&](const std::vector<std::string>& cells) {
    std::string s;
    for (std::size_t c = 0; c < cells.size(); ++c) {
      s += cells[c];
      if (c + 1 < cells.size()) s += std::string(width[c] - cells[c].size() + 2, ' ');
    }
    out << s << '\n';
  };
  line(header);
  std::vector<std::string> rule;
  for (auto w : width) rule.emplace_back(w, '-');
  line(rule);
  for (const auto& row : rows) line(row);
}

void print_csv(const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows,
               std::ostream& out) {
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t c = 0; c < cells.size(); ++c) out << (c ? "," : "") << cells[c];
    out << '\n';
  };
  line(header);
  for (const auto& row : rows) line(row);
}

json counts_json(const std::map<unsigned, std::uint64_t>& per_j) {
  json out = json::object();
  for (const auto& [j, nj] : per_j) out[std::to_string(j)] = nj;
  return out;
}

classify::Limits limits_for(const CliRequest& req) {
  const Caps& caps = req.caps;
  if ((caps.max_n || caps.max_p || caps.oracle_cap) && !caps.unsafe) {
    throw std::invalid_argument("cap overrides require --unsafe-caps");
  }
  classify::Limits limits;
  if (caps.max_n) limits.max_n = *caps.max_n;
  if (caps.max_p) limits.max_p = *caps.max_p;
  return limits;
}

FieldPoly request_poly(const CliRequest& req, const classify::Limits& limits) {
  if (!nt::is_prime(req.p)) throw std::invalid_argument("p = " + std::to_string(req.p) + " is not prime");
  if (!req.poly) throw std::invalid_argument("--poly is required");
  const FieldPoly f = ffpoly::parse_poly(*req.poly, req.p);
  if (f.is_zero() || f.degree() == 0) throw std::invalid_argument("polynomial must have degree >= 1");
  classify::check_request(f.degree(), req.p, limits);
  return f;
}

int run_count(const CliRequest& req, const classify::Limits& limits, std::ostream& out) {
  const auto counted = classify::count_Mnp(req.n, req.p, limits);
  std::uint64_t m1_total = 0;
  for (const auto& f : classify::enum_Mnp(req.n, req.p, limits)) m1_total += classify::is_M1(f) ? 1 : 0;

  std::vector<std::vector<std::string>> rows;
  for (const auto& [j, nj] : counted.per_j) rows.push_back({std::to_string(j), std::to_string(nj)});
  switch (req.format) {
    case Format::json:
      out << json{{"n", req.n},
                  {"p", req.p},
                  {"per_j_counts", counts_json(counted.per_j)},
                  {"total", counted.total},
                  {"m1_total", m1_total}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv:
      print_csv({"j", "n_j"}, rows, out);
      out << "total," << counted.total << "\nm1_total," << m1_total << '\n';
      break;
    case Format::table:
      out << "M(" << req.n << "," << req.p << ")\n";
      print_table({"j", "n_j"}, rows, out);
      out << "total " << counted.total << "\nm1_total " << m1_total << '\n';
      break;
  }
  return 0;
}

int run_aij(const CliRequest& req, const classify::Limits& limits, std::ostream& out) {
  if (!nt::is_prime(req.p)) throw std::invalid_argument("p = " + std::to_string(req.p) + " is not prime");
  if (req.p > limits.max_p) throw CapExceeded("p = " + std::to_string(req.p) + " exceeds the cap");
  if (req.i > limits.max_n) throw CapExceeded("i = " + std::to_string(req.i) + " exceeds the cap");
  const classify::AijKey key{req.p, req.i, req.j};
  const auto orders = classify::build_Iij(key);
  const auto formula = classify::count_Aij(key);
  const auto members = classify::enum_Aij(key, limits);

  std::vector<std::string> names;
  for (const auto& f : members) names.push_back(ffpoly::to_string(f));
  switch (req.format) {
    case Format::json:
      out << json{{"p", req.p},
                  {"i", req.i},
                  {"j", req.j},
                  {"I_ij", orders},
                  {"count_formula", formula},
                  {"count_enumerated", members.size()},
                  {"polys", names}}
                 .dump(2)
          << '\n';
      break;
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& s : names) rows.push_back({s});
      print_csv({"poly"}, rows, out);
      break;
    }
    case Format::table: {
      out << "A(" << req.i << "," << req.j << ") over F_" << req.p << '\n';
      out << "I_ij:";
      for (auto e : orders) out << ' ' << e;
      out << "\ncount (formula)    " << formula << "\ncount (enumerated) " << members.size() << '\n';
      for (const auto& s : names) out << "  " << s << '\n';
      break;
    }
  }
  return 0;
}

int run_ord(const CliRequest& req, const classify::Limits& limits, std::ostream& out) {
  const FieldPoly f = request_poly(req, limits);
  if (f.constant_term() == 0) throw std::domain_error("order undefined: zero constant term");
  const auto fz = ffpoly::factor(f);
  const auto ord = ffpoly::ord_poly(fz, req.p);
  switch (req.format) {
    case Format::json:
      out << json{{"poly", ffpoly::to_string(f)}, {"factorization", factorization_json(fz)}, {"ord", ord}}.dump(2)
          << '\n';
      break;
    case Format::csv:
      print_csv({"poly", "factorization", "ord"}, {{ffpoly::to_string(f), ffpoly::to_string(fz), std::to_string(ord)}},
                out);
      break;
    case Format::table:
      out << "poly           " << ffpoly::to_string(f) << "\nfactorization  " << ffpoly::to_string(fz)
          << "\nord            " << ord << '\n';
      break;
  }
  return 0;
}

int run_genus(const CliRequest& req, const classify::Limits& limits, std::ostream& out) {
  const FieldPoly f = request_poly(req, limits);
  if (!f.is_monic()) throw std::invalid_argument(ffpoly::to_string(f) + " is not monic");
  emit_record(maps::map_record(f, f.degree()), req.format, out);
  return 0;
}

int dispatch(const CliRequest& req, std::ostream& out) {
  const classify::Limits limits = limits_for(req);
  switch (req.command) {
    case Command::classify:
      emit_report(maps::build_report(req.n, req.p, limits), req.format, out);
      return 0;
    case Command::count:
      return run_count(req, limits, out);
    case Command::aij:
      return run_aij(req, limits, out);
    case Command::ord:
      return run_ord(req, limits, out);
    case Command::genus:
      return run_genus(req, limits, out);
    case Command::verify: {
      oracle::VerifyOptions opts;
      opts.limits = limits;
      if (req.caps.oracle_cap) opts.size_cap = *req.caps.oracle_cap;
      const auto report = oracle::verify_all(req.n, req.p, opts);
      emit_verification(report, req.format, out);
      return report.all_passed() ? 0 : 1;
    }
  }
  return 2;
}

}  // namespace

void emit_report(const maps::ClassificationReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      json records = json::array();
      for (const auto& r : report.records) records.push_back(record_json(r));
      out << json{{"n", report.n},
                  {"p", report.p},
                  {"per_j_counts", counts_json(report.per_j_counts)},
                  {"total", report.total},
                  {"m1_total", report.m1_total},
                  {"records", records}}
                 .dump(2)
          << '\n';
      return;
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : report.records) rows.push_back(record_cells(r, format));
      print_csv(kRecordColumns, rows, out);
      return;
    }
    case Format::table: {
      out << "M(" << report.n << "," << report.p << "): total " << report.total << ", m1_total " << report.m1_total
          << '\n';
      std::vector<std::vector<std::string>> rows;
      for (const auto& r : report.records) rows.push_back(record_cells(r, format));
      print_table(kRecordColumns, rows, out);
      return;
    }
  }
}

void emit_record(const maps::MapRecord& record, Format format, std::ostream& out) {
  switch (format) {
    case Format::json:
      out << record_json(record).dump(2) << '\n';
      return;
    case Format::csv:
      print_csv(kRecordColumns, {record_cells(record, format)}, out);
      return;
    case Format::table: {
      const auto cells = record_cells(record, format);
      std::vector<std::vector<std::string>> rows;
      for (std::size_t c = 0; c < cells.size(); ++c) rows.push_back({kRecordColumns[c], cells[c]});
      print_table({"field", "value"}, rows, out);
      return;
    }
  }
}

void emit_verification(const oracle::VerificationReport& report, Format format, std::ostream& out) {
  switch (format) {
    case Format::json: {
      json checks = json::array();
      for (const auto& c : report.checks) {
        checks.push_back({{"name", c.name}, {"passed", c.passed}, {"counterexamples", c.counterexamples}});
      }
      out << json{{"n", report.n},
                  {"p", report.p},
                  {"records", report.records},
                  {"all_passed", report.all_passed()},
                  {"checks", checks}}
                 .dump(2)
          << '\n';
      return;
    }
    case Format::csv: {
      std::vector<std::vector<std::string>> rows;
      for (const auto& c : report.checks) {
        rows.push_back({c.name, c.passed ? "pass" : "fail", std::to_string(c.counterexamples.size())});
      }
      print_csv({"check", "status", "counterexamples"}, rows, out);
      return;
    }
    case Format::table: {
      out << "verify M(" << report.n << "," << report.p << "): " << report.records << " records\n";
      for (const auto& c : report.checks) {
        out << (c.passed ? "PASS  " : "FAIL  ") << c.name << '\n';
        for (const auto& ce : c.counterexamples) out << "      " << ce << '\n';
      }
      return;
    }
  }
}

int run(const CliRequest& request, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(request, out);
  } catch (const CapExceeded& e) {
    err << "error: resource cap exceeded: " << e.what() << '\n';
    return 3;
  } catch (const ConsistencyError& e) {
    err << "error: internal inconsistency: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
}

std::optional<CliRequest> parse_args(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
                                     int& exit_code) {
  CliRequest req;
  CLI::App app{"Regular Cayley maps of elementary abelian groups Z_p^n", "cayleymaps"};
  app.require_subcommand(1);

  const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}, {"csv", Format::csv}};
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", req.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("--max-n", req.caps.max_n, "Override the cap on n (needs --unsafe-caps)");
    sub->add_option("--max-p", req.caps.max_p, "Override the cap on p (needs --unsafe-caps)");
    sub->add_option("--oracle-cap", req.caps.oracle_cap, "Override the oracle group-size cap (needs --unsafe-caps)");
    sub->add_flag("--unsafe-caps", req.caps.unsafe, "Acknowledge cap overrides");
  };
  auto np = [&](CLI::App* sub) {
    sub->add_option("--n", req.n, "Dimension n")->required();
    sub->add_option("--p", req.p, "Prime p")->required();
  };

  struct Sub {
    const char* name;
    const char* help;
    Command cmd;
  };
  const Sub subs[] = {{"classify", "Full map catalog for M(n,p)", Command::classify},
                      {"count", "Per-j counts n_j, |M(n,p)| and |M1(n,p)|", Command::count},
                      {"aij", "The set A_ij and its size by formula and enumeration", Command::aij},
                      {"ord", "Multiplicative order of a polynomial", Command::ord},
                      {"genus", "Map record for one polynomial", Command::genus},
                      {"verify", "Brute-force verification report", Command::verify}};
  std::vector<std::pair<CLI::App*, Command>> handles;
  for (const Sub& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    switch (s.cmd) {
      case Command::classify:
      case Command::count:
      case Command::verify:
        np(sub);
        break;
      case Command::aij:
        sub->add_option("--p", req.p, "Prime p")->required();
        sub->add_option("--i", req.i, "Degree i")->required();
        sub->add_option("--j", req.j, "2-adic valuation j")->required();
        break;
      case Command::ord:
      case Command::genus:
        sub->add_option("--p", req.p, "Prime p")->required();
        sub->add_option("--poly", req.poly, "Polynomial, e.g. \"x^2+2x+2\" or \"[2,2,1]\"")->required();
        break;
    }
    handles.emplace_back(sub, s.cmd);
  }

  try {
    std::vector<std::string> args;
    for (int a = argc - 1; a > 0; --a) args.emplace_back(argv[a]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = 2;
    return std::nullopt;
  }
  for (const auto& [sub, cmd] : handles) {
    if (sub->parsed()) req.command = cmd;
  }
  exit_code = 0;
  return req;
}

}  // namespace cayley::cli
