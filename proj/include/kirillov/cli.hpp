#pragma once

// Command-line front end. run() parses arguments, dispatches to a subcommand
// and renders its Document as an aligned table, CSV or JSON.

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "kirillov/g2.hpp"
#include "kirillov/intpoly.hpp"
#include "kirillov/irreducibility.hpp"
#include "kirillov/parallel.hpp"
#include "kirillov/partition.hpp"
#include "kirillov/report.hpp"
#include "kirillov/typea.hpp"

namespace kirillov::cli {

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kBudgetExceeded = 3 };

struct RunConfig {
  std::string format = "table";
  std::vector<std::uint64_t> primes;
  unsigned workers = 1;
  std::uint64_t budget = typea::kDefaultBudget;
  std::string out;
  bool timing = false;
};

using Json = nlohmann::ordered_json;

/// One block of tabular output.
struct Section {
  std::string title;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Everything a subcommand produces.
struct Document {
  Json json = Json::object();
  std::vector<Section> sections;
  std::vector<VerificationReport> reports;

  bool passed() const {
    return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.all_passed(); });
  }
};

namespace detail {

inline std::size_t display_width(const std::string& s) {
  // Count UTF-8 code points; every symbol used here is single-width.
  return static_cast<std::size_t>(std::count_if(s.begin(), s.end(), [](char c) { return (static_cast<unsigned char>(c) & 0xC0) != 0x80; }));
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string r = "\"";
  for (char c : s) {
    if (c == '"') r += '"';
    r += c;
  }
  return r + "\"";
}

inline Section report_section(const VerificationReport& r) {
  Section s{r.title, {"check", "result", "detail"}, {}};
  for (const auto& e : r.entries) s.rows.push_back({e.name, e.passed ? "PASS" : "FAIL", e.detail});
  return s;
}

inline Json report_json(const VerificationReport& r) {
  Json checks = Json::array();
  for (const auto& e : r.entries) checks.push_back({{"name", e.name}, {"passed", e.passed}, {"detail", e.detail}});
  return {{"title", r.title}, {"passed", r.all_passed()}, {"checks", checks}};
}

inline Json coeffs_json(const IntPoly& p) {
  Json a = Json::array();
  for (const auto& c : p.coeffs()) a.push_back(to_decimal(c));
  return a;
}

inline std::string split_display(const SplitForm& s) {
  std::string out;
  if (s.a > 0) out += s.a == 1 ? "q" : "q^" + std::to_string(s.a);
  if (s.b > 0) out += (out.empty() ? "" : " ") + std::string(s.b == 1 ? "(q-1)" : "(q-1)^" + std::to_string(s.b));
  return out + (out.empty() ? "" : " ") + "(" + s.r.to_string() + ")";
}

inline std::string rank_seq_text(const g2::RankSeq& r) {
  std::string s;
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s;
}

}  // namespace detail

/// Renders a document in the requested format.
inline void render(const Document& doc, const std::string& format, std::ostream& out) {
  if (format == "json") {
    Json j = doc.json;
    Json checks = Json::array();
    for (const auto& r : doc.reports) checks.push_back(detail::report_json(r));
    if (!doc.reports.empty()) {
      j["verification"] = checks;
      j["passed"] = doc.passed();
    }
    out << j.dump(2) << '\n';
    return;
  }
  std::vector<Section> sections = doc.sections;
  for (const auto& r : doc.reports) sections.push_back(detail::report_section(r));
  bool first = true;
  for (const auto& s : sections) {
    if (!first) out << '\n';
    first = false;
    if (format == "csv") {
      for (std::size_t i = 0; i < s.header.size(); ++i) out << (i ? "," : "") << detail::csv_field(s.header[i]);
      out << '\n';
      for (const auto& row : s.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << detail::csv_field(row[i]);
        out << '\n';
      }
      continue;
    }
    if (!s.title.empty()) out << s.title << '\n';
    std::vector<std::size_t> width(s.header.size(), 0);
    for (std::size_t i = 0; i < s.header.size(); ++i) width[i] = detail::display_width(s.header[i]);
    for (const auto& row : s.rows)
      for (std::size_t i = 0; i < row.size() && i < width.size(); ++i)
        width[i] = std::max(width[i], detail::display_width(row[i]));
    auto line = [&](const std::vector<std::string>& cells) {
      std::string text;
      for (std::size_t i = 0; i < cells.size(); ++i) {
        text += cells[i];
        if (i + 1 < cells.size()) text += std::string(width[i] - detail::display_width(cells[i]) + 2, ' ');
      }
      text.erase(text.find_last_not_of(' ') + 1);
      out << text << '\n';
    };
    line(s.header);
    for (const auto& row : s.rows) line(row);
  }
}

// ---- subcommands ----------------------------------------------------------

inline Document typea_poly(const Partition& lambda) {
  Document doc;
  const IntPoly p = typea::kirillov_polynomial(lambda);
  const SplitForm s = split_qfactors(p);
  const auto expected = typea::valuation_profile(lambda);
  const auto observed = typea::observed_profile(s);
  doc.json = {{"partition", lambda.to_string()},
              {"polynomial", p.to_string()},
              {"coefficients", detail::coeffs_json(p)},
              {"split", {{"a", std::to_string(s.a)}, {"b", std::to_string(s.b)}, {"r", detail::coeffs_json(s.r)}}}};
  doc.sections.push_back({"P_" + lambda.to_string(),
                          {"field", "value"},
                          {{"P", p.to_string()},
                           {"split", detail::split_display(s)},
                           {"a", std::to_string(s.a)},
                           {"b", std::to_string(s.b)},
                           {"R", s.r.to_string()}}});
  VerificationReport r;
  r.title = "split profile";
  r.add("exponent of q", observed.a == expected.a, std::to_string(observed.a) + " vs " + std::to_string(expected.a));
  r.add("exponent of q-1", observed.b == expected.b, std::to_string(observed.b) + " vs " + std::to_string(expected.b));
  r.add("deg R", observed.deg_r == expected.deg_r, std::to_string(observed.deg_r) + " vs " + std::to_string(expected.deg_r));
  r.add("lead R = hook dimension", observed.lead_r == expected.lead_r,
        observed.lead_r.str() + " vs " + expected.lead_r.str());
  r.add("reconstruction", s.reconstruct() == p);
  doc.reports.push_back(r);
  return doc;
}

inline Document typea_census(int n, std::uint64_t q, const RunConfig& cfg) {
  if (n < 0) throw InvalidPartition("n must be non-negative");
  const FieldCtx field = make_field(q);
  const auto start = std::chrono::steady_clock::now();
  const typea::Census census = typea::brute_force_census(n, field, cfg.workers, cfg.budget);
  const double elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  Document doc;
  Json counts = Json::object();
  Section sec{"census n=" + std::to_string(n) + " over " + field.name(), {"partition", "count", "P(q)"}, {}};
  VerificationReport r;
  r.title = "census against recursion";
  BigInt total = 0;
  for (const auto& lambda : partitions_of(n)) {
    const auto it = census.find(lambda);
    const BigInt got = it == census.end() ? 0 : it->second;
    const BigInt want = typea::kirillov_polynomial(lambda).eval(BigInt(q));
    total += got;
    counts[lambda.to_string()] = to_decimal(got);
    sec.rows.push_back({lambda.to_string(), to_decimal(got), to_decimal(want)});
    r.add("P_" + lambda.to_string() + "(" + std::to_string(q) + ")", got == want, got.str() + " vs " + want.str());
  }
  r.add("total = q^C(n,2)", total == boost::multiprecision::pow(BigInt(q), static_cast<unsigned>(n * (n - 1) / 2)),
        total.str());
  doc.json = {{"n", n}, {"q", std::to_string(q)}, {"counts", counts}};
  if (cfg.timing) doc.json["elapsed_ms"] = std::to_string(static_cast<long long>(elapsed));
  doc.sections.push_back(sec);
  doc.reports.push_back(r);
  return doc;
}

inline Document typea_scan(int n_max, const RunConfig& cfg) {
  const auto entries = typea::reducibility_scan(n_max, cfg.workers);
  Document doc;
  Json reducible = Json::array(), all = Json::array();
  Section red{"reducible R", {"partition", "factors"}, {}};
  Section sec{"irreducibility verdicts", {"partition", "R", "verdict"}, {}};
  for (const auto& e : entries) {
    Json factors = Json::array();
    std::string text;
    for (const auto& f : e.verdict.factors) {
      factors.push_back(detail::coeffs_json(f));
      text += "(" + f.to_string() + ")";
    }
    all.push_back({{"partition", e.lambda.to_string()},
                   {"r", detail::coeffs_json(e.split.r)},
                   {"verdict", e.verdict.kind_name()},
                   {"certificate", e.verdict.describe()}});
    if (e.verdict.reducible()) {
      reducible.push_back({{"partition", e.lambda.to_string()}, {"factors", factors}});
      red.rows.push_back({e.lambda.to_string(), text});
    }
    sec.rows.push_back({e.lambda.to_string(), e.split.r.to_string(), e.verdict.describe()});
  }
  doc.json = {{"n_max", n_max}, {"reducible", reducible}, {"entries", all}};
  doc.sections = {red, sec};
  doc.reports.push_back(typea::scan_report(entries));
  return doc;
}

inline Document typea_table4() {
  Document doc;
  Json rows = Json::array();
  Section sec{"n = 4 class types", {"type", "Jordan type", "count"}, {}};
  for (const auto& row : typea::vla_rows_n4()) {
    rows.push_back({{"type", row.type}, {"jordan", row.jordan.to_string()}, {"count", detail::coeffs_json(row.count())}});
    sec.rows.push_back({row.type, row.jordan.to_string(), row.count().to_string()});
  }
  doc.json = {{"rows", rows}};
  doc.sections.push_back(sec);
  doc.reports.push_back(typea::vla_table_n4());
  return doc;
}

inline Document typea_profile(int n_max) {
  Document doc;
  Json rows = Json::array();
  Section sec{"valuation profiles", {"partition", "a", "b", "deg R", "lead R"}, {}};
  for (int n = 1; n <= n_max; ++n)
    for (const auto& lambda : partitions_of(n)) {
      const auto v = typea::valuation_profile(lambda);
      rows.push_back({{"partition", lambda.to_string()},
                      {"a", std::to_string(v.a)},
                      {"b", std::to_string(v.b)},
                      {"deg_r", std::to_string(v.deg_r)},
                      {"lead_r", to_decimal(v.lead_r)}});
      sec.rows.push_back({lambda.to_string(), std::to_string(v.a), std::to_string(v.b), std::to_string(v.deg_r),
                          to_decimal(v.lead_r)});
    }
  doc.json = {{"n_max", n_max}, {"profiles", rows}};
  doc.sections.push_back(sec);
  doc.reports.push_back(typea::structure_report(n_max));
  return doc;
}

inline Document g2_build() {
  Document doc;
  const g2::G2Basis basis = g2::build_chevalley();
  Json roots = Json::object();
  Section sec{"Chevalley basis images (nonzero entries, 1-based)", {"root", "entries"}, {}};
  for (std::size_t k = 0; k < g2::kParams; ++k) {
    Json entries = Json::array();
    std::string text;
    for (std::size_t i = 0; i < g2::kDim; ++i)
      for (std::size_t j = 0; j < g2::kDim; ++j)
        if (const long long v = basis.e[k][i][j]; v != 0) {
          entries.push_back({i + 1, j + 1, std::to_string(v)});
          text += (text.empty() ? "" : " ") + std::to_string(v) + "*e" + std::to_string(i + 1) + std::to_string(j + 1);
        }
    roots[g2::root_names()[k]] = entries;
    sec.rows.push_back({"e_" + g2::root_names()[k], text});
  }
  const g2::SymMatrix x = g2::symbolic_x(basis);
  Section xs{"X", {"row", "1", "2", "3", "4", "5", "6", "7"}, {}};
  Json xj = Json::array();
  for (std::size_t i = 0; i < g2::kDim; ++i) {
    std::vector<std::string> row{std::to_string(i + 1)};
    Json jr = Json::array();
    for (std::size_t j = 0; j < g2::kDim; ++j) {
      row.push_back(x[i][j].to_string());
      jr.push_back(x[i][j].to_string());
    }
    xs.rows.push_back(row);
    xj.push_back(jr);
  }
  doc.json = {{"basis", roots}, {"x", xj}};
  doc.sections = {sec, xs};
  doc.reports.push_back(g2::verify_construction());
  return doc;
}

inline Document g2_powers() {
  Document doc;
  const g2::SymMatrix x = g2::symbolic_x(g2::build_chevalley());
  Section sec{"nonzero entries of X^k", {"k", "row", "col", "entry"}, {}};
  Json powers = Json::object();
  g2::SymMatrix p = x;
  for (int k = 2; k <= 6; ++k) {
    p = g2::sym_mul(p, x);
    Json entries = Json::array();
    for (std::size_t i = 0; i < g2::kDim; ++i)
      for (std::size_t j = 0; j < g2::kDim; ++j)
        if (!p[i][j].is_zero()) {
          entries.push_back({i + 1, j + 1, p[i][j].to_string()});
          sec.rows.push_back({std::to_string(k), std::to_string(i + 1), std::to_string(j + 1), p[i][j].to_string()});
        }
    powers[std::to_string(k)] = entries;
  }
  doc.json = {{"powers", powers}};
  doc.sections.push_back(sec);
  doc.reports.push_back(g2::verify_displayed_powers());
  return doc;
}

inline Json census_json(const g2::CensusReport& c, bool timing) {
  Json counts = Json::object();
  for (const auto& [lambda, count] : c.counts) counts[lambda.to_string()] = std::to_string(count);
  Json cases = Json::array();
  for (const auto& [key, count] : c.cases)
    cases.push_back({{"case", key.first}, {"rank_seq", detail::rank_seq_text(key.second)}, {"count", std::to_string(count)}});
  Json j = {{"q", std::to_string(c.q)}, {"counts", counts}, {"cases", cases}};
  if (timing) j["elapsed_ms"] = std::to_string(static_cast<long long>(c.elapsed_ms));
  return j;
}

inline Document g2_census_cmd(std::uint64_t q, const RunConfig& cfg) {
  const FieldCtx field = make_field(q);
  g2::require_admissible(field);
  const g2::CensusReport c = g2::g2_census(field, cfg.workers, cfg.budget);
  Document doc;
  doc.json = census_json(c, cfg.timing);
  Section counts{"g2 census over " + field.name(), {"partition", "count"}, {}};
  for (const auto& [lambda, count] : c.counts) counts.rows.push_back({lambda.to_string(), std::to_string(count)});
  Section cases{"per case", {"case", "rank sequence", "count"}, {}};
  for (const auto& [key, count] : c.cases)
    cases.rows.push_back({std::to_string(key.first), detail::rank_seq_text(key.second), std::to_string(count)});
  doc.sections = {counts, cases};
  doc.reports.push_back(g2::census_report(c));
  doc.reports.push_back(g2::case2_equation_report(field));
  return doc;
}

inline Document g2_interpolate_cmd(const RunConfig& cfg) {
  std::vector<std::uint64_t> primes = cfg.primes;
  if (primes.empty()) primes = {5, 7, 11, 13, 17, 19, 23};
  for (auto q : primes) g2::require_admissible(make_field(q));
  const bool reduced = primes.size() == 6;
  const g2::Interpolation result = reduced ? g2::g2_interpolate_reduced(primes, cfg.workers, cfg.budget)
                                           : g2::g2_interpolate(primes, cfg.workers, cfg.budget);
  Document doc;
  Json polys = Json::object();
  Section sec{"interpolated polynomials", {"partition", "P(q)"}, {}};
  for (const auto& [lambda, poly] : result.polynomials) {
    polys[lambda.to_string()] = detail::coeffs_json(poly);
    sec.rows.push_back({lambda.to_string(), poly.to_string()});
  }
  sec.rows.push_back({"3,3,1 (complement)", result.complement_331.to_string()});
  Json censuses = Json::array();
  for (const auto& c : result.censuses) censuses.push_back(census_json(c, cfg.timing));
  Json qs = Json::array();
  for (auto q : primes) qs.push_back(std::to_string(q));
  doc.json = {{"primes", qs},
              {"mode", reduced ? "reduced" : "full"},
              {"polynomials", polys},
              {"complement_3,3,1", detail::coeffs_json(result.complement_331)},
              {"censuses", censuses}};
  doc.sections.push_back(sec);
  doc.reports.push_back(g2::interpolation_report(result));
  if (reduced) doc.reports.push_back(g2::fit_report(result.censuses));
  for (const auto& c : result.censuses) doc.reports.push_back(g2::census_report(c));
  return doc;
}

inline Document g2_springer() {
  Document doc;
  Json rows = Json::array();
  Section sec{"nilpotent orbits", {"orbit", "diagram", "representative", "partition", "dim"}, {}};
  for (const auto& r : g2::springer_table()) {
    const std::string diagram = std::to_string(r.diagram.first) + "," + std::to_string(r.diagram.second);
    rows.push_back({{"orbit", r.orbit},
                    {"diagram", diagram},
                    {"representative", r.representative_text},
                    {"partition", r.partition.to_string()},
                    {"dim", std::to_string(r.dimension)}});
    sec.rows.push_back({r.orbit, diagram, r.representative_text, r.partition.to_string(), std::to_string(r.dimension)});
  }
  doc.json = {{"orbits", rows}};
  doc.sections.push_back(sec);
  doc.reports.push_back(g2::springer_check());
  return doc;
}

inline Document poly_split(const IntPoly& p) {
  const SplitForm s = split_qfactors(p);
  Document doc;
  doc.json = {{"input", detail::coeffs_json(p)},
              {"a", std::to_string(s.a)},
              {"b", std::to_string(s.b)},
              {"r", detail::coeffs_json(s.r)}};
  doc.sections.push_back({"split", {"field", "value"},
                          {{"input", p.to_string()},
                           {"split", detail::split_display(s)},
                           {"a", std::to_string(s.a)},
                           {"b", std::to_string(s.b)},
                           {"R", s.r.to_string()}}});
  VerificationReport r;
  r.title = "split";
  r.add("reconstruction", s.reconstruct() == p);
  doc.reports.push_back(r);
  return doc;
}

inline Document poly_irred(const IntPoly& p) {
  const IrreducibilityVerdict v = irreducibility(p);
  Document doc;
  Json factors = Json::array();
  std::string text;
  for (const auto& f : v.factors) {
    factors.push_back(detail::coeffs_json(f));
    text += "(" + f.to_string() + ")";
  }
  doc.json = {{"input", detail::coeffs_json(p)}, {"verdict", v.kind_name()}, {"certificate", v.describe()}, {"factors", factors}};
  doc.sections.push_back(
      {"irreducibility", {"field", "value"}, {{"input", p.to_string()}, {"verdict", v.describe()}, {"factors", text}}});
  VerificationReport r;
  r.title = "certificate";
  r.add("certificate re-checks", verify_verdict(p, v));
  doc.reports.push_back(r);
  return doc;
}

// ---- entry point ----------------------------------------------------------

inline constexpr const char* kSynopsis =
    "usage: kirillov <command> [options]\n"
    "  typea poly <partition>     typea census <n> <q>     typea scan <n_max>\n"
    "  typea table4               typea profile <n_max>\n"
    "  g2 build    g2 powers    g2 census <q>    g2 interpolate [--primes p,...]    g2 springer\n"
    "  poly split <coeffs>        poly irred <coeffs>\n"
    "options: --format table|json|csv  --primes p,...  --workers N  --budget N  --out PATH  --timing\n";

/// Runs one invocation; returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  cfg.workers = default_workers();
  CLI::App app{"Kirillov polynomials for type A and g2", "kirillov"};
  app.require_subcommand(1);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json", "csv"}));
  app.add_option("--primes", cfg.primes, "field orders for g2 interpolate")->delimiter(',');
  app.add_option("--workers", cfg.workers, "worker threads (default: KIRILLOV_WORKERS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--budget", cfg.budget, "maximum number of enumerated matrices")->check(CLI::PositiveNumber);
  app.add_option("--out", cfg.out, "write output to this file");
  app.add_flag("--timing", cfg.timing, "include elapsed_ms in census output");

  std::string partition_arg, coeffs_arg;
  int n = 0;
  std::uint64_t q = 0;
  std::function<Document()> action;

  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    return sub;
  };
  auto* typea_cmd = app.add_subcommand("typea", "strictly upper triangular matrices");
  auto* g2_cmd = app.add_subcommand("g2", "the 7-dimensional representation of g2");
  auto* poly_cmd = app.add_subcommand("poly", "integer polynomial utilities");
  for (auto* s : {typea_cmd, g2_cmd, poly_cmd}) {
    s->require_subcommand(1);
    s->fallthrough();
  }

  auto* c = leaf(typea_cmd, "poly", "P_λ by recursion, with its split form");
  c->add_option("partition", partition_arg, "e.g. 3,2,1,1")->required();
  c->callback([&] { action = [&] { return typea_poly(Partition::parse(partition_arg)); }; });

  c = leaf(typea_cmd, "census", "brute-force census of n x n strictly upper triangular matrices");
  c->add_option("n", n)->required()->check(CLI::NonNegativeNumber);
  c->add_option("q", q)->required();
  c->callback([&] { action = [&] { return typea_census(n, q, cfg); }; });

  c = leaf(typea_cmd, "scan", "irreducibility of every R_λ with |λ| <= n_max");
  c->add_option("n_max", n)->required()->check(CLI::Range(1, 20));
  c->callback([&] { action = [&] { return typea_scan(n, cfg); }; });

  c = leaf(typea_cmd, "table4", "n = 4 class-type table");
  c->callback([&] { action = [] { return typea_table4(); }; });

  c = leaf(typea_cmd, "profile", "valuation profiles for |λ| <= n_max");
  c->add_option("n_max", n)->required()->check(CLI::Range(1, 30));
  c->callback([&] { action = [&] { return typea_profile(n); }; });

  c = leaf(g2_cmd, "build", "Chevalley basis and the generic X");
  c->callback([&] { action = [] { return g2_build(); }; });

  c = leaf(g2_cmd, "powers", "X^2 .. X^6 against the displayed matrices");
  c->callback([&] { action = [] { return g2_powers(); }; });

  c = leaf(g2_cmd, "census", "census of all q^6 parameter tuples");
  c->add_option("q", q)->required();
  c->callback([&] { action = [&] { return g2_census_cmd(q, cfg); }; });

  c = leaf(g2_cmd, "interpolate", "recover the polynomials from censuses");
  c->callback([&] { action = [&] { return g2_interpolate_cmd(cfg); }; });

  c = leaf(g2_cmd, "springer", "orbit table and leading coefficients");
  c->callback([&] { action = [] { return g2_springer(); }; });

  c = leaf(poly_cmd, "split", "P = q^a (q-1)^b R");
  c->add_option("coeffs", coeffs_arg, "lowest first, e.g. 0,-1,1 or \"q^2 - q\"")->required();
  c->callback([&] { action = [&] { return poly_split(IntPoly::parse(coeffs_arg)); }; });

  c = leaf(poly_cmd, "irred", "irreducibility over Z with certificate");
  c->add_option("coeffs", coeffs_arg, "lowest first, e.g. 1,3,8,8")->required();
  c->callback([&] { action = [&] { return poly_irred(IntPoly::parse(coeffs_arg)); }; });

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n' << kSynopsis;
    return kUsage;
  }

  std::set<std::uint64_t> distinct(cfg.primes.begin(), cfg.primes.end());
  if (distinct.size() != cfg.primes.size()) {
    err << "error: --primes entries must be pairwise distinct\n" << kSynopsis;
    return kUsage;
  }

  Document doc;
  try {
    doc = action();
  } catch (const TooLarge& e) {
    err << "error: budget exceeded: " << e.what() << '\n';
    return kBudgetExceeded;
  } catch (const PredicateMismatch& e) {
    err << "verification failed: " << e.what() << '\n';
    return kVerificationFailed;
  } catch (const BadCharacteristic& e) {
    err << "error: " << e.what() << '\n' << kSynopsis;
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n' << kSynopsis;
    return kUsage;
  }

  if (cfg.out.empty()) {
    render(doc, cfg.format, out);
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.out << " for writing\n";
      return kUsage;
    }
    render(doc, cfg.format, file);
  }
  if (!doc.passed()) {
    for (const auto& r : doc.reports)
      for (const auto& e : r.entries)
        if (!e.passed) err << "FAIL " << r.title << ": " << e.name << (e.detail.empty() ? "" : " (" + e.detail + ")") << '\n';
    return kVerificationFailed;
  }
  return kOk;
}

}  // namespace kirillov::cli
