#include "bwrt/cli.hpp"

#include "bwrt/chi.hpp"
#include "bwrt/exactmath.hpp"
#include "bwrt/modularform.hpp"
#include "bwrt/ohtsuki.hpp"
#include "bwrt/topology.hpp"
#include "bwrt/wrt.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bwrt::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr long kDefaultInvariantN = 25;
constexpr long kDefaultAsymptoticN = 200;
constexpr long kDefaultIdentityMaxN = 12;
constexpr long kDefaultGammaPmax = 1000;
constexpr long kDefaultIdentityPmax = 200;

const std::vector<std::string> kSuites{"theorem51", "table1", "modular", "torsion", "gamma"};

BrieskornTriple parse_triple(const std::string& text) {
  std::vector<long> values;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const long v = std::stol(item, &used);
      if (used != item.size()) {
        throw std::invalid_argument(item);
      }
      values.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("--p expects three comma-separated integers, got '" + text + "'");
    }
  }
  if (values.size() != 3) {
    throw UsageError("--p expects three comma-separated integers, got '" + text + "'");
  }
  try {
    return BrieskornTriple(values[0], values[1], values[2]);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- output shapes

struct Table {
  std::vector<std::string> headers;
  std::vector<std::vector<std::string>> rows;
};

struct Outcome {
  Json results = Json::object();
  Json metadata = Json::object();
  Table table;
  std::vector<std::string> failures;
  int exit_code = kExitOk;
};

Json json_rational(const Rational& x) {
  return Json{{"num", to_string(numerator_of(x))}, {"den", to_string(denominator_of(x))}};
}

Json json_integer(const Integer& x) { return json_rational(Rational(x)); }

std::string real_text(const Real& x, const PrecisionContext& ctx) { return x.to_string(ctx.decimal_digits()); }

Json json_complex(const BigComplex& z, const PrecisionContext& ctx) {
  return Json{{"re", real_text(z.real(), ctx)}, {"im", real_text(z.imag(), ctx)}};
}

Json json_triple(const EllTriple& ell) { return Json::array({ell.l[0], ell.l[1], ell.l[2]}); }

Json json_manifold(const BrieskornTriple& p) { return Json::array({p[0], p[1], p[2]}); }

std::string triple_text(const EllTriple& ell) { return ell.to_string(); }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) {
    return s;
  }
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') {
      out += '"';
    }
    out += c;
  }
  return out + "\"";
}

std::string render_csv(const Table& table) {
  std::ostringstream out;
  auto line = [&out](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "," : "") << csv_field(cells[i]);
    }
    out << "\n";
  };
  line(table.headers);
  for (const auto& row : table.rows) {
    line(row);
  }
  return out.str();
}

std::string render_text(const Table& table, const Outcome& outcome) {
  std::vector<std::size_t> widths(table.headers.size(), 0);
  auto grow = [&widths](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size() && i < widths.size(); ++i) {
      widths[i] = std::max(widths[i], cells[i].size());
    }
  };
  grow(table.headers);
  for (const auto& row : table.rows) {
    grow(row);
  }
  std::ostringstream out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      out << (i ? "  " : "") << cells[i];
      if (i + 1 < cells.size()) {
        out << std::string(widths[i] - cells[i].size(), ' ');
      }
    }
    out << "\n";
  };
  line(table.headers);
  for (const auto& row : table.rows) {
    line(row);
  }
  out << "status: " << (outcome.exit_code == kExitOk ? "ok" : "fail") << "\n";
  for (const auto& f : outcome.failures) {
    out << "  " << f << "\n";
  }
  return out.str();
}

// ---------------------------------------------------------------- verbs

void complex_row(Table& table, const std::string& name, const BigComplex& z, const PrecisionContext& ctx) {
  table.rows.push_back({name, real_text(z.real(), ctx), real_text(z.imag(), ctx), real_text(z.abs(), ctx)});
}

Outcome run_invariant(const Command& cmd, const PrecisionContext& ctx) {
  const BrieskornTriple& p = *cmd.p;
  const long N = cmd.N.value_or(kDefaultInvariantN);
  const WrtResult r = tau_n(p, N, ctx, cmd.workers);
  Outcome out;
  out.results = Json{{"manifold", json_manifold(p)},
                     {"N", N},
                     {"level_k", N - 2},
                     {"phi", json_rational(phi_invariant(p))},
                     {"normalized", json_complex(r.normalized, ctx)},
                     {"tau", json_complex(r.tau, ctx)},
                     {"z_witten", json_complex(r.z_witten, ctx)}};
  out.metadata["term_count"] = r.term_count;
  out.metadata["error_budget"] = real_text(r.error_budget, ctx);
  out.table.headers = {"quantity", "re", "im", "abs"};
  complex_row(out.table, "normalized", r.normalized, ctx);
  complex_row(out.table, "tau", r.tau, ctx);
  complex_row(out.table, "z_witten", r.z_witten, ctx);
  return out;
}

Outcome run_ohtsuki(const Command& cmd) {
  const BrieskornTriple& p = *cmd.p;
  const OhtsukiSeries series = lambda_coefficients(p, cmd.order);
  Outcome out;
  Json lambdas = Json::array();
  out.table.headers = {"p1", "p2", "p3"};
  std::vector<std::string> row{std::to_string(p[0]), std::to_string(p[1]), std::to_string(p[2])};
  for (std::size_t n = 0; n < series.lambdas.size(); ++n) {
    lambdas.push_back(json_rational(series.lambdas[n]));
    out.table.headers.push_back("lambda_" + std::to_string(n));
    row.push_back(to_string(series.lambdas[n]));
  }
  out.table.rows.push_back(std::move(row));
  out.results = Json{{"manifold", json_manifold(p)},
                     {"order", cmd.order},
                     {"lambdas", lambdas},
                     {"warnings", series.warnings}};
  out.metadata["error_budget"] = "exact";
  return out;
}

Outcome run_cs(const Command& cmd) {
  const BrieskornTriple& p = *cmd.p;
  Outcome out;
  Json values = Json::array();
  out.table.headers = {"triple", "cs"};
  for (const auto& ell : admissible_triples(p).triples) {
    const Rational cs = chern_simons(p, ell);
    values.push_back(Json{{"triple", json_triple(ell)}, {"cs", json_rational(cs)}});
    out.table.rows.push_back({triple_text(ell), to_string(cs)});
  }
  out.results = Json{{"manifold", json_manifold(p)}, {"window", "(-1/2, 1/2]"}, {"cs", values}};
  out.metadata["error_budget"] = "exact";
  return out;
}

Outcome run_flat(const Command& cmd, const PrecisionContext& ctx) {
  const BrieskornTriple& p = *cmd.p;
  Outcome out;
  Json records = Json::array();
  out.table.headers = {"triple", "cs", "torsion_sqrt", "spectral_flow", "angle_1", "angle_2", "angle_3"};
  for (const auto& r : flat_connections(p, ctx)) {
    Json angles = Json::array();
    for (const auto& a : r.conjugacy_angles) {
      angles.push_back(json_rational(a));
    }
    records.push_back(Json{{"triple", json_triple(r.triple)},
                           {"cs", json_rational(r.cs)},
                           {"torsion_sqrt", real_text(r.torsion_sqrt, ctx)},
                           {"spectral_flow", r.spectral_flow},
                           {"conjugacy_angles", angles}});
    out.table.rows.push_back({triple_text(r.triple), to_string(r.cs), real_text(r.torsion_sqrt, ctx),
                              std::to_string(r.spectral_flow), to_string(r.conjugacy_angles[0]),
                              to_string(r.conjugacy_angles[1]), to_string(r.conjugacy_angles[2])});
  }
  out.results = Json{{"manifold", json_manifold(p)},
                     {"casson", json_rational(casson(p))},
                     {"flat_connections", records}};
  out.metadata["error_budget"] = real_text(ctx.tolerance(), ctx);
  return out;
}

Outcome run_asymptotic(const Command& cmd, const PrecisionContext& ctx) {
  const BrieskornTriple& p = *cmd.p;
  const long N = cmd.N.value_or(kDefaultAsymptoticN);
  const AsymptoticApprox a = asymptotic_approx(p, N, cmd.terms, ctx, cmd.workers);
  Outcome out;
  out.results = Json{{"manifold", json_manifold(p)},
                     {"N", N},
                     {"K", cmd.terms},
                     {"dominant", json_complex(a.dominant, ctx)},
                     {"tail", json_complex(a.tail, ctx)},
                     {"exact", json_complex(a.exact, ctx)},
                     {"abs_error", real_text(a.abs_error, ctx)},
                     {"last_tail_term", real_text(a.last_tail_term, ctx)}};
  out.metadata["term_count"] = 2 * p.product() * N - 2 * p.product();
  out.metadata["error_budget"] = real_text(ctx.tolerance(), ctx);
  out.table.headers = {"quantity", "re", "im", "abs"};
  complex_row(out.table, "dominant", a.dominant, ctx);
  complex_row(out.table, "tail", a.tail, ctx);
  complex_row(out.table, "exact", a.exact, ctx);
  out.table.rows.push_back({"abs_error", "", "", real_text(a.abs_error, ctx)});
  out.table.rows.push_back({"last_tail_term", "", "", real_text(a.last_tail_term, ctx)});
  return out;
}

// ---------------------------------------------------------------- verify suites

struct Checks {
  Json cases = Json::array();
  Table table{{"case", "value", "pass"}, {}};
  std::vector<std::string> failures;
  long count = 0;

  void add(const std::string& name, const std::string& value, bool pass) {
    ++count;
    cases.push_back(Json{{"case", name}, {"value", value}, {"pass", pass}});
    table.rows.push_back({name, value, pass ? "yes" : "no"});
    if (!pass) {
      failures.push_back(name + ": " + value);
    }
  }
};

// Suites compare numeric residuals against 10^-(digits - 20).
Real suite_threshold(const PrecisionContext& ctx) { return ctx.power_of_ten(ctx.decimal_digits() - 20); }

std::vector<BrieskornTriple> example_manifolds(const Command& cmd) {
  if (cmd.p) {
    return {*cmd.p};
  }
  return {BrieskornTriple(2, 3, 5), BrieskornTriple(2, 3, 7), BrieskornTriple(3, 4, 5)};
}

void suite_surgery_identity(const Command& cmd, const PrecisionContext& ctx, Checks& checks, Json& summary) {
  const long pmax = cmd.pmax.value_or(kDefaultIdentityPmax);
  const long nmax = cmd.N.value_or(kDefaultIdentityMaxN);
  const Real threshold = suite_threshold(ctx);
  const std::vector<BrieskornTriple> manifolds =
      cmd.p ? std::vector<BrieskornTriple>{*cmd.p} : brieskorn_triples_up_to(pmax);
  Real worst = ctx.zero();
  for (const auto& p : manifolds) {
    for (long N = 3; N <= nmax; ++N) {
      const Real residual = surgery_identity_residual(p, N, ctx, cmd.workers).residual;
      worst = max(worst, residual);
      checks.add(p.to_string() + " N=" + std::to_string(N), real_text(residual, ctx), residual < threshold);
    }
  }
  summary = Json{{"manifolds", manifolds.size()}, {"max_N", nmax}, {"max_residual", real_text(worst, ctx)}};
}

void suite_table1(Checks& checks, Json& summary) {
  const Table1Report report = table1_verify();
  for (const auto& m : report.mismatches) {
    checks.add(m.manifold.to_string() + " lambda_" + std::to_string(m.n),
               "expected " + to_string(m.expected) + ", got " + to_string(m.got), false);
  }
  summary = Json{{"rows", report.rows}, {"cells", report.cells}, {"mismatches", report.mismatches.size()}};
  if (report.ok()) {
    checks.add("table1", std::to_string(report.cells) + " cells match", true);
  }
}

void suite_modular(const Command& cmd, const PrecisionContext& ctx, Checks& checks, Json& summary) {
  const Real threshold = suite_threshold(ctx);
  const Real one = ctx.from(1L);
  const std::vector<std::pair<std::string, BigComplex>> samples{
      {"i", BigComplex(ctx.zero(), one)},
      {"(1+2i)/3", BigComplex(ctx.from(Rational(1, 3)), ctx.from(Rational(2, 3)))},
      {"i/5", BigComplex(ctx.zero(), ctx.from(Rational(1, 5)))}};
  summary = Json::array();
  for (const auto& p : example_manifolds(cmd)) {
    const ModularData data = modular_data(p, ctx);
    for (const auto& [label, tau] : samples) {
      const Real s = s_transformation_residual(data, tau, ctx);
      const Real t = t_transformation_residual(data, tau, ctx);
      checks.add(p.to_string() + " S at tau=" + label, real_text(s, ctx), s < threshold);
      checks.add(p.to_string() + " T at tau=" + label, real_text(t, ctx), t < threshold);
    }
    summary.push_back(Json{{"manifold", json_manifold(p)},
                           {"involution_defect", real_text(data.involution_defect(), ctx)},
                           {"symmetry_defect", real_text(data.symmetry_defect(), ctx)}});
  }
}

void suite_torsion(const Command& cmd, const PrecisionContext& ctx, Checks& checks, Json& summary) {
  const Real threshold = suite_threshold(ctx);
  summary = Json::array();
  for (const auto& p : example_manifolds(cmd)) {
    const Real residual = verify_s_torsion(p, ctx);
    checks.add(p.to_string() + " S/torsion", real_text(residual, ctx), residual < threshold);
    Json flows = Json::array();
    for (const auto& r : flat_connections(p, ctx)) {
      flows.push_back(Json{{"triple", json_triple(r.triple)}, {"spectral_flow", r.spectral_flow}});
    }
    summary.push_back(Json{{"manifold", json_manifold(p)}, {"spectral_flows", flows}});
  }
}

void suite_gamma(const Command& cmd, Checks& checks, Json& summary) {
  const long pmax = cmd.pmax.value_or(kDefaultGammaPmax);
  const std::vector<BrieskornTriple> manifolds =
      cmd.p ? std::vector<BrieskornTriple>{*cmd.p} : brieskorn_triples_up_to(pmax);
  long passed = 0;
  for (const auto& p : manifolds) {
    const AdmissibleTriples adm = admissible_triples(p);
    long by_weight = 0;
    bool weights_ok = true;
    for (const auto& ell : enumerate_triples(p)) {
      const long ws = weighted_sum(build_chi(p, ell));
      weights_ok = weights_ok && (ws == 0 || ws == 4 * p.product()) &&
                   ((ws != 0) == satisfies_ell_condition(p, ell));
      by_weight += ws != 0 ? 1 : 0;
    }
    const Rational closed = gamma_closed_form(p);
    const long mordell = p.dimension() - mordell_count(p);
    const Rational lambda_c = casson(p);
    const bool ok = weights_ok && by_weight == adm.gamma && closed == adm.gamma && mordell == adm.gamma &&
                    lambda_c == Rational(-adm.gamma, 2) && is_integer(lambda_c);
    passed += ok ? 1 : 0;
    if (!ok || cmd.p) {
      checks.add(p.to_string(),
                 "gamma=" + std::to_string(adm.gamma) + " weight=" + std::to_string(by_weight) +
                     " closed=" + to_string(closed) + " D-N3=" + std::to_string(mordell) +
                     " casson=" + to_string(lambda_c),
                 ok);
    }
  }
  if (!cmd.p && passed == static_cast<long>(manifolds.size())) {
    checks.add("gamma P<=" + std::to_string(pmax), std::to_string(passed) + " manifolds consistent", true);
  }
  summary = Json{{"checked", manifolds.size()}, {"consistent", passed}};
}

Outcome run_verify(const Command& cmd, const PrecisionContext& ctx) {
  Checks checks;
  Json summary;
  if (cmd.suite == "theorem51") {
    suite_surgery_identity(cmd, ctx, checks, summary);
  } else if (cmd.suite == "table1") {
    suite_table1(checks, summary);
  } else if (cmd.suite == "modular") {
    suite_modular(cmd, ctx, checks, summary);
  } else if (cmd.suite == "torsion") {
    suite_torsion(cmd, ctx, checks, summary);
  } else {
    suite_gamma(cmd, checks, summary);
  }
  Outcome out;
  out.results = Json{{"suite", cmd.suite}, {"summary", summary}, {"cases", checks.cases}};
  out.metadata["checks"] = checks.count;
  out.metadata["threshold"] = real_text(suite_threshold(ctx), ctx);
  out.table = std::move(checks.table);
  out.failures = std::move(checks.failures);
  out.exit_code = out.failures.empty() ? kExitOk : kExitSuiteFailure;
  return out;
}

Outcome run_table() {
  const auto rows = load_table1();
  const Table1Report report = table1_verify(rows);
  Outcome out;
  out.table.headers = {"p1", "p2", "p3"};
  for (int n = 0; n <= 8; ++n) {
    out.table.headers.push_back("lambda_" + std::to_string(n));
  }
  out.table.headers.push_back("match");
  Json json_rows = Json::array();
  for (const auto& row : rows) {
    const bool match = std::none_of(report.mismatches.begin(), report.mismatches.end(),
                                    [&row](const Table1Mismatch& m) { return m.manifold == row.manifold; });
    std::vector<std::string> cells{std::to_string(row.manifold[0]), std::to_string(row.manifold[1]),
                                   std::to_string(row.manifold[2])};
    Json lambdas = Json::array();
    for (const auto& v : row.lambdas) {
      cells.push_back(to_string(v));
      lambdas.push_back(json_integer(v));
    }
    cells.push_back(match ? "yes" : "no");
    out.table.rows.push_back(std::move(cells));
    json_rows.push_back(Json{{"manifold", json_manifold(row.manifold)}, {"lambdas", lambdas}, {"match", match}});
  }
  for (const auto& m : report.mismatches) {
    out.failures.push_back(m.manifold.to_string() + " lambda_" + std::to_string(m.n) + ": expected " +
                           to_string(m.expected) + ", got " + to_string(m.got));
  }
  out.results = Json{{"rows", json_rows}, {"cells", report.cells}, {"mismatches", report.mismatches.size()}};
  out.metadata["error_budget"] = "exact";
  out.exit_code = out.failures.empty() ? kExitOk : kExitSuiteFailure;
  return out;
}

Json command_echo(const Command& cmd) {
  Json echo{{"verb", cmd.verb}};
  if (cmd.p) {
    echo["p"] = json_manifold(*cmd.p);
  }
  if (cmd.N) {
    echo["N"] = *cmd.N;
  }
  if (cmd.verb == "ohtsuki") {
    echo["order"] = cmd.order;
  }
  if (cmd.verb == "asymptotic") {
    echo["terms"] = cmd.terms;
  }
  if (!cmd.suite.empty()) {
    echo["suite"] = cmd.suite;
  }
  if (cmd.pmax) {
    echo["pmax"] = *cmd.pmax;
  }
  echo["precision"] = cmd.precision;
  echo["format"] = cmd.format;
  echo["workers"] = cmd.workers;
  return echo;
}

}  // namespace

Command parse(const std::vector<std::string>& args) {
  CLI::App app{"Quantum invariants of Brieskorn homology spheres", "bwrt"};
  app.require_subcommand(1);

  Command cmd;
  std::string p_text;
  long N = 0;
  long pmax = 0;

  auto common = [&](CLI::App* sub, bool needs_p) {
    auto* opt = sub->add_option("--p", p_text, "exponents p1,p2,p3 (pairwise coprime, each >= 2)");
    if (needs_p) {
      opt->required();
    }
    sub->add_option("--precision", cmd.precision, "decimal digits (>= 15)")->capture_default_str();
    sub->add_option("--format", cmd.format, "json, csv or text")
        ->check(CLI::IsMember({"json", "csv", "text"}))
        ->capture_default_str();
    sub->add_option("--out", cmd.out, "write the report to FILE instead of stdout");
    sub->add_option("--workers", cmd.workers, "threads for the surgery sum")->capture_default_str();
    sub->add_flag("--timing", cmd.timing, "record wall time in metadata");
  };

  auto* invariant = app.add_subcommand("invariant", "tau_N, normalized sum and Witten invariant");
  common(invariant, true);
  invariant->add_option("--N", N, "level N >= 3 (default 25)");

  auto* ohtsuki = app.add_subcommand("ohtsuki", "Ohtsuki coefficients lambda_0..lambda_order");
  common(ohtsuki, true);
  ohtsuki->add_option("--order", cmd.order, "highest coefficient")->capture_default_str();

  auto* cs = app.add_subcommand("cs", "Chern-Simons spectrum of irreducible flat connections");
  common(cs, true);

  auto* flat = app.add_subcommand("flat", "flat connection records");
  common(flat, true);

  auto* asymptotic = app.add_subcommand("asymptotic", "large-N approximation of the normalized sum");
  common(asymptotic, true);
  asymptotic->add_option("--N", N, "level N >= 3 (default 200)");
  asymptotic->add_option("--terms", cmd.terms, "tail order K")->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run a named consistency suite");
  common(verify, false);
  verify->add_option("--suite", cmd.suite, "theorem51, table1, modular, torsion or gamma")
      ->required()
      ->check(CLI::IsMember(kSuites));
  verify->add_option("--pmax", pmax, "largest p1 p2 p3 for theorem51 and gamma");
  verify->add_option("--N", N, "largest N for theorem51 (default 12)");

  auto* table = app.add_subcommand("table", "re-emit and check the golden lambda table");
  common(table, false);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    throw HelpRequested(subs.empty() ? app.help() : subs.front()->help());
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  const CLI::App* chosen = app.get_subcommands().front();
  cmd.verb = chosen->get_name();
  if (!p_text.empty()) {
    cmd.p = parse_triple(p_text);
  }
  auto given = [chosen](const std::string& name) {
    const CLI::Option* opt = chosen->get_option_no_throw(name);
    return opt != nullptr && opt->count() > 0;
  };
  if (given("--N")) {
    cmd.N = N;
    if (N < 3) {
      throw UsageError("N must be at least 3");
    }
  }
  if (given("--pmax")) {
    if (pmax < 1 || pmax > BrieskornTriple::kMaxProduct) {
      throw UsageError("--pmax must be between 1 and " + std::to_string(BrieskornTriple::kMaxProduct));
    }
    cmd.pmax = pmax;
  }
  if (cmd.precision < PrecisionContext::kMinDigits) {
    throw UsageError("--precision must be at least " + std::to_string(PrecisionContext::kMinDigits));
  }
  if (cmd.order < 0) {
    throw UsageError("--order must be non-negative");
  }
  if (cmd.terms < 0) {
    throw UsageError("--terms must be non-negative");
  }
  if (cmd.workers < 1) {
    throw UsageError("--workers must be at least 1");
  }
  return cmd;
}

Report execute(const Command& cmd) {
  const auto start = std::chrono::steady_clock::now();
  const PrecisionContext ctx(cmd.precision);
  Outcome outcome;
  try {
    if (cmd.verb == "invariant") {
      outcome = run_invariant(cmd, ctx);
    } else if (cmd.verb == "ohtsuki") {
      outcome = run_ohtsuki(cmd);
    } else if (cmd.verb == "cs") {
      outcome = run_cs(cmd);
    } else if (cmd.verb == "flat") {
      outcome = run_flat(cmd, ctx);
    } else if (cmd.verb == "asymptotic") {
      outcome = run_asymptotic(cmd, ctx);
    } else if (cmd.verb == "verify") {
      outcome = run_verify(cmd, ctx);
    } else if (cmd.verb == "table") {
      outcome = run_table();
    } else {
      throw UsageError("unknown verb '" + cmd.verb + "'");
    }
  } catch (const PrecisionError& e) {
    outcome = Outcome{};
    outcome.failures.push_back(std::string("precision failure: ") + e.what());
    outcome.exit_code = kExitPrecisionFailure;
  } catch (const std::invalid_argument& e) {
    outcome = Outcome{};
    outcome.failures.push_back(e.what());
    outcome.exit_code = kExitUsage;
  }

  Json metadata{{"precision_digits", ctx.decimal_digits()},
                {"working_bits", static_cast<long>(ctx.bits())},
                {"tolerance", "1e-" + std::to_string(ctx.tolerance_exponent())},
                {"workers", cmd.workers}};
  for (auto& [key, value] : outcome.metadata.items()) {
    metadata[key] = value;
  }
  if (cmd.timing) {
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    metadata["wall_time_seconds"] = elapsed.count();
  }

  Report report;
  report.exit_code = outcome.exit_code;
  if (cmd.format == "csv") {
    report.rendered = render_csv(outcome.table);
  } else if (cmd.format == "text") {
    report.rendered = render_text(outcome.table, outcome);
  } else {
    const Json doc{{"command", command_echo(cmd)},
                   {"results", outcome.results},
                   {"metadata", metadata},
                   {"status", Json{{"state", outcome.exit_code == kExitOk ? "ok" : "fail"},
                                   {"exit_code", outcome.exit_code},
                                   {"details", outcome.failures}}}};
    report.rendered = doc.dump(2) + "\n";
  }
  return report;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Command cmd;
  try {
    cmd = parse(args);
  } catch (const HelpRequested& help) {
    out << help.what();
    return kExitOk;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\nRun with --help for usage.\n";
    return kExitUsage;
  }
  const Report report = execute(cmd);
  if (!cmd.out.empty()) {
    std::ofstream file(cmd.out);
    if (!file) {
      err << "error: cannot open " << cmd.out << " for writing\n";
      return kExitUsage;
    }
    file << report.rendered;
  } else {
    out << report.rendered;
  }
  if (report.exit_code != kExitOk && cmd.format != "json") {
    err << "status: fail (exit " << report.exit_code << ")\n";
  }
  return report.exit_code;
}

}  // namespace bwrt::cli
