#include "commands.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace mvop::cli {

namespace {

Params parse_params(const RunConfig& cfg) { return Params(parse_rational(cfg.p), parse_rational(cfg.n)); }

void append(std::vector<Check>& to, const std::vector<Check>& from) { to.insert(to.end(), from.begin(), from.end()); }
void append(std::vector<Finding>& to, const std::vector<Finding>& from) { to.insert(to.end(), from.begin(), from.end()); }

std::vector<std::string> flat(const ConstMat& m) {
  return {to_string(m(0, 0)), to_string(m(0, 1)), to_string(m(1, 0)), to_string(m(1, 1))};
}

std::vector<std::string> flat_header(const std::string& prefix) {
  return {prefix + "_w_11", prefix + "_w_12", prefix + "_w_21", prefix + "_w_22"};
}

CommandResult finish(std::string command, const Params& params, Json body, const std::vector<Check>& checks,
                     const std::vector<Finding>& findings, Table table) {
  CommandResult r;
  r.exit_code = all_passed(checks) ? kOk : kIdentityFailure;
  r.report = Json{{"command", std::move(command)}, {"params", to_json(params)}};
  for (auto& [key, value] : body.items()) r.report[key] = value;
  r.report["checks"] = to_json(checks);
  r.report["findings"] = to_json(findings);
  r.report["passed"] = r.exit_code == kOk;
  r.table = std::move(table);
  return r;
}

CommandResult failure(const std::string& command, int code, const std::string& message) {
  CommandResult r;
  r.exit_code = code;
  r.report = Json{{"command", command}, {"error", message}, {"passed", false}};
  r.table = {{"command", "error"}, {{command, message}}};
  return r;
}

template <class Body>
CommandResult guarded(const std::string& command, Body body) {
  try {
    return body();
  } catch (const std::overflow_error& e) {
    return failure(command, kBitGuard, e.what());
  }
}

Table checks_table(const std::string& command, const Json& report) {
  Table t{{"command", "check", "passed"}, {}};
  for (const auto& c : report.at("checks")) {
    t.rows.push_back({command, c.at("name").get<std::string>(), c.at("passed").get<bool>() ? "true" : "false"});
  }
  return t;
}

CommandResult run_single(const RunConfig& cfg) {
  std::vector<std::string> commands;
  for (const std::string& c : cfg.commands) {
    if (c == "all") {
      commands.insert(commands.end(), {"family", "algebra", "dw"});
    } else {
      commands.push_back(c);
    }
  }
  std::vector<CommandResult> parts;
  for (const std::string& c : commands) {
    if (c == "family") {
      parts.push_back(cmd_family(cfg));
    } else if (c == "algebra") {
      parts.push_back(cmd_algebra(cfg));
    } else if (c == "dw") {
      parts.push_back(cmd_dw(cfg));
    } else {
      throw std::invalid_argument("unknown command: " + c);
    }
  }
  if (parts.size() == 1) return std::move(parts.front());
  CommandResult all;
  all.report = Json{{"command", "all"}, {"parts", Json::array()}};
  all.table = {{"command", "check", "passed"}, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) {
    all.exit_code = std::max(all.exit_code, parts[i].exit_code);
    all.report["parts"].push_back(parts[i].report);
    if (parts[i].report.contains("checks")) {
      const Table t = checks_table(commands[i], parts[i].report);
      all.table.rows.insert(all.table.rows.end(), t.rows.begin(), t.rows.end());
    }
  }
  all.report["passed"] = all.exit_code == kOk;
  return all;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

void collect(const Json& node, std::vector<const Json*>& checks, std::vector<const Json*>& findings) {
  if (node.is_object()) {
    for (auto it = node.begin(); it != node.end(); ++it) {
      if (it.key() == "checks" && it->is_array()) {
        for (const auto& c : *it) checks.push_back(&c);
      } else if (it.key() == "findings" && it->is_array()) {
        for (const auto& f : *it) findings.push_back(&f);
      } else {
        collect(*it, checks, findings);
      }
    }
  } else if (node.is_array()) {
    for (const auto& v : node) collect(v, checks, findings);
  }
}

}  // namespace

std::vector<std::pair<std::string, std::string>> sweep_grid() {
  return {{"1/1", "3/1"}, {"1/1", "4/1"}, {"2/1", "5/1"}, {"3/2", "7/2"}, {"5/2", "6/1"}, {"1/1", "2/1"}};
}

CommandResult cmd_family(const RunConfig& cfg) {
  const std::string command = "family";
  std::optional<Params> parsed;
  try {
    parsed.emplace(parse_params(cfg));
    if (cfg.w_max < 1 || cfg.w_max > kMaxW) throw std::invalid_argument("w_max must lie in [1, 24]");
  } catch (const std::invalid_argument& e) {
    return failure(command, kInvalidParameters, e.what());
  }
  const Params params = *parsed;
  return guarded(command, [&] {
    const int w_max = cfg.w_max;
    const FamilyCache family(params, w_max + 1);
    const FamilyChecks fc = family_checks(family, w_max);
    const NormReport nr = norm_report(family, w_max);

    std::vector<Check> checks;
    checks.push_back({"weight invariants", family.weight().check_invariants(), ""});
    checks.push_back({"sigma W_{p,n} sigma = W_{n-p,n}", conjugation_check(params.p(), params.n()), ""});
    append(checks, fc.checks);
    append(checks, eigen_equation_checks(family, w_max));
    checks.push_back({"norm: Gram matrices diagonal", nr.all_diagonal(), ""});
    checks.push_back({"norm: diagonal ratio", nr.all_ratios(), ""});
    checks.push_back({"monic identity A~_w = gram_w gram_{w-1}^-1", nr.all_monic_identities(), ""});

    std::vector<Finding> findings = fc.findings;
    append(findings, nr.findings);
    if (params.reducible()) {
      const ReductionResult red = reduction_check(family.weight());
      checks.push_back({"reduction witness", red.witness_verified, ""});
      findings.push_back({"reducible", "n = 2p: the weight reduces to scalar weights via M = [[1,1],[-1,1]]"});
    }

    Json records = Json::array();
    Json norms = Json::array();
    Table table;
    table.header = {"w"};
    for (const char* prefix : {"gram", "A", "B", "C", "A_tilde", "B_tilde"}) {
      const auto h = flat_header(prefix);
      table.header.insert(table.header.end(), h.begin(), h.end());
    }
    for (int w = 0; w <= w_max; ++w) {
      records.push_back(family_record(family, w));
      const NormRecord& nrec = nr.records[static_cast<std::size_t>(w)];
      norms.push_back(Json{{"w", w},
                           {"ratio_matches", nrec.ratio_matches},
                           {"profile_matches", nrec.profile_matches},
                           {"q_cofactor", {to_string(nrec.q_cofactor[0]), to_string(nrec.q_cofactor[1])}},
                           {"p_cofactor", {to_string(nrec.p_cofactor[0]), to_string(nrec.p_cofactor[1])}}});
      const RecursionCoeffs rc = recursion_coeffs(w, params);
      std::vector<std::string> row{std::to_string(w)};
      for (const ConstMat* m : {&family[w].gram, &rc.A, &rc.B, &rc.C, &rc.A_monic, &rc.B_monic}) {
        const auto f = flat(*m);
        row.insert(row.end(), f.begin(), f.end());
      }
      table.rows.push_back(std::move(row));
    }
    Json body{{"w_max", w_max}, {"weight", to_json(family.weight())}, {"records", records}, {"norm", norms}};
    return finish(command, params, std::move(body), checks, findings, std::move(table));
  });
}

CommandResult cmd_algebra(const RunConfig& cfg) {
  const std::string command = "algebra";
  std::optional<Params> parsed;
  try {
    parsed.emplace(parse_params(cfg));
  } catch (const std::invalid_argument& e) {
    return failure(command, kInvalidParameters, e.what());
  }
  const Params params = *parsed;
  return guarded(command, [&] {
    const NamedBasis b = named_basis(params);
    const RelationReport rel = relation_suite(params);
    const Weight weight(params);
    const FamilyCache family(params, 8);
    const Rational& p = params.p();
    const Rational q = params.q();

    std::vector<Check> checks = rel.relations;
    std::vector<Finding> findings;
    checks.push_back({"D = -D1 - D2 + p(n-p) I", b.d_thm_consistent, ""});
    checks.push_back({"E3 = (n-p) D3 + p D4 matches its display", b.e3_matches_display, ""});
    checks.push_back({"-i E4 = (n-p) D3 - p D4 matches its display", b.e4_matches_display, ""});
    if (params.reducible()) {
      findings.push_back({"noncommutativity", std::string("n = 2p: D1 D3 ") + (rel.noncommutative ? "!=" : "=") +
                                                  " D3 D1 (not asserted)"});
    } else {
      checks.push_back({"D1 D3 != D3 D1", rel.noncommutative, ""});
    }

    Json symmetry = Json::array();
    Table table{{"section", "name", "result"}, {}};
    for (const Check& c : rel.relations) table.rows.push_back({"relation", c.name, c.passed ? "holds" : "fails"});
    const std::vector<std::string> symmetric_names{"I", "D1", "D2", "E3", "D"};
    for (const NamedOperator& op : b.all()) {
      if (op.times_i) continue;
      const auto verdict = symmetry_check(op.op, weight.form());
      const bool expected =
          std::find(symmetric_names.begin(), symmetric_names.end(), op.name) != symmetric_names.end();
      Json v{{"name", op.name}, {"symmetric", verdict.symmetric}};
      if (!verdict.symmetric) v["failed"] = verdict.failed;
      symmetry.push_back(std::move(v));
      checks.push_back({"symmetry: " + op.name + (expected ? " symmetric" : " not symmetric"),
                        verdict.symmetric == expected, verdict.failed});
      table.rows.push_back({"symmetry", op.name, verdict.symmetric ? "symmetric" : "not symmetric"});
    }

    Json adjoints = Json::array();
    const std::vector<std::pair<std::string, std::pair<DiffOp, DiffOp>>> expected_adjoints{
        {"D1", {b.D1, b.D1}},
        {"D2", {b.D2, b.D2}},
        {"D3", {b.D3, (p / q) * b.D4}},
        {"D4", {b.D4, (q / p) * b.D3}},
        {"E3", {b.E3, b.E3}},
        {"E4 (real part)", {b.E4, -b.E4}},
        {"D", {b.D_thm, b.D_thm}},
    };
    const std::vector<std::string> expected_text{"D1", "D2", "(p/(n-p)) D4", "((n-p)/p) D3", "E3", "-(real part)", "D"};
    bool eigen_ok = true;
    for (std::size_t k = 0; k < expected_adjoints.size(); ++k) {
      const auto& [name, ops] = expected_adjoints[k];
      const DiffOp star = adjoint(ops.first, family);
      for (int w = 0; w <= 8; ++w) {
        const ConstMat& g = family[w].gram;
        eigen_ok = eigen_ok && eigenvalue_of(star, w) == g * eigenvalue_of(ops.first, w).transpose() * *g.inverse();
      }
      checks.push_back({"adjoint: " + name + "* = " + expected_text[k], star == ops.second, ""});
      adjoints.push_back(Json{{"name", name}, {"adjoint", to_json(star)}});
      table.rows.push_back({"adjoint", name, star == ops.second ? expected_text[k] : "unexpected"});
    }
    checks.push_back({"adjoint: Lambda_w(D*) = gram_w Lambda_w(D)^T gram_w^-1 for w <= 8", eigen_ok, ""});

    const DiffOp printed = order_two_family(params, 1, 0, 0, 0, 0, true);
    if (!eigen_equation_holds(printed, family, 6)) {
      findings.push_back({"order-two classification",
                          "with the printed +[[a22,a21],[a12,a11]] constant term of F2 the a11 direction is not in "
                          "D(W); the sign is taken as -"});
    }

    Json body{{"relations", to_json(rel.relations)}, {"symmetry", symmetry}, {"adjoints", adjoints}};
    return finish(command, params, std::move(body), checks, findings, std::move(table));
  });
}

CommandResult cmd_dw(const RunConfig& cfg) {
  const std::string command = "dw";
  std::optional<Params> parsed;
  try {
    parsed.emplace(parse_params(cfg));
    if (cfg.s_max < 0 || cfg.s_max > kMaxS) throw std::invalid_argument("s_max must lie in [0, 6]");
  } catch (const std::invalid_argument& e) {
    return failure(command, kInvalidParameters, e.what());
  }
  const Params params = *parsed;
  return guarded(command, [&] {
    const FiltrationReport fr = filtration_report(cfg.s_max, params, cfg.max_bits);
    std::vector<Check> checks = fr.checks;
    std::vector<Finding> findings = fr.findings;
    Json body = to_json(fr);
    body.erase("params");
    body.erase("checks");
    body.erase("findings");
    body["s_max"] = cfg.s_max;
    if (cfg.kpr) {
      const KprReport k = kpr_crosscheck();
      checks.push_back({"KPR: L L^-1 = I", k.inverse_identity, ""});
      checks.push_back({"KPR: printed W_1 = L W_{1,3} L^T", k.printed_similarity, ""});
      for (const auto& v : k.operators) {
        checks.push_back({"KPR: " + v.name + " symmetric w.r.t. printed W_1", v.symmetric_printed, v.failed_printed});
        checks.push_back({"KPR: " + v.name + " symmetric w.r.t. L W_{1,3} L^T", v.symmetric_conjugated, ""});
      }
      append(findings, k.findings);
      Json kj = to_json(k);
      kj.erase("findings");
      body["kpr"] = std::move(kj);
    }
    Table table{{"order", "dim", "new_dim", "stabilized"}, {}};
    for (const StratumRecord& s : fr.strata) {
      table.rows.push_back(
          {std::to_string(s.order), std::to_string(s.dim), std::to_string(s.new_dim), s.stabilized ? "true" : "false"});
    }
    return finish(command, params, std::move(body), checks, findings, std::move(table));
  });
}

CommandResult run(const RunConfig& cfg) {
  if (!cfg.seed_sweep) return run_single(cfg);
  const auto grid = sweep_grid();
  std::vector<std::future<CommandResult>> jobs;
  for (const auto& [p, n] : grid) {
    RunConfig local = cfg;
    local.p = p;
    local.n = n;
    local.seed_sweep = false;
    jobs.push_back(std::async(std::launch::async, [local] { return run_single(local); }));
  }
  CommandResult out;
  out.report = Json{{"command", "sweep"}, {"grid", Json::array()}};
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    CommandResult r = jobs[i].get();
    out.exit_code = std::max(out.exit_code, r.exit_code);
    if (out.table.header.empty()) {
      out.table.header = {"p", "n"};
      out.table.header.insert(out.table.header.end(), r.table.header.begin(), r.table.header.end());
    }
    for (auto& row : r.table.rows) {
      row.insert(row.begin(), {grid[i].first, grid[i].second});
      out.table.rows.push_back(std::move(row));
    }
    out.report["grid"].push_back(std::move(r.report));
  }
  out.report["passed"] = out.exit_code == kOk;
  return out;
}

std::string render(const CommandResult& result, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::json:
      os << result.report.dump(2) << '\n';
      break;
    case Format::csv: {
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) os << (i ? "," : "") << csv_field(cells[i]);
        os << '\n';
      };
      line(result.table.header);
      for (const auto& row : result.table.rows) line(row);
      break;
    }
    case Format::pretty: {
      std::vector<const Json*> checks;
      std::vector<const Json*> findings;
      collect(result.report, checks, findings);
      std::size_t failed = 0;
      for (const Json* c : checks) {
        const bool ok = c->at("passed").get<bool>();
        failed += ok ? 0 : 1;
        os << (ok ? "PASS  " : "FAIL  ") << c->at("name").get<std::string>();
        if (!ok && c->contains("detail")) os << "  (" << c->at("detail").get<std::string>() << ")";
        os << '\n';
      }
      for (const Json* f : findings) {
        os << "NOTE  " << f->at("topic").get<std::string>() << ": " << f->at("detail").get<std::string>() << '\n';
      }
      if (result.report.contains("error")) os << "ERROR " << result.report.at("error").get<std::string>() << '\n';
      std::vector<std::size_t> width(result.table.header.size(), 0);
      auto measure = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size() && i < width.size(); ++i) width[i] = std::max(width[i], cells[i].size());
      };
      measure(result.table.header);
      for (const auto& row : result.table.rows) measure(row);
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          os << cells[i];
          if (i + 1 < cells.size()) os << std::string(width[i] - cells[i].size() + 2, ' ');
        }
        os << '\n';
      };
      if (!result.table.rows.empty()) {
        os << '\n';
        line(result.table.header);
        for (const auto& row : result.table.rows) line(row);
      }
      os << '\n' << (checks.size() - failed) << "/" << checks.size() << " checks passed\n";
      break;
    }
  }
  return os.str();
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of the 2x2 matrix orthogonal polynomials attached to W_{p,n}"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string format = "json";
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--p", cfg.p, "parameter p as num/den")->capture_default_str();
    sub->add_option("--n", cfg.n, "parameter n as num/den")->capture_default_str();
    sub->add_option("--format", format, "json, csv or pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}))
        ->capture_default_str();
    sub->add_option("--out", cfg.out, "write the report to this path");
    sub->add_flag("--seed-sweep", cfg.seed_sweep, "run over the built-in parameter grid");
  };
  CLI::App* family = app.add_subcommand("family", "polynomials, recursions, norms and their identities");
  CLI::App* algebra = app.add_subcommand("algebra", "operator relations, adjoints and symmetry");
  CLI::App* dw = app.add_subcommand("dw", "filtration of D(W) by order");
  CLI::App* all = app.add_subcommand("all", "family, algebra and dw");
  for (CLI::App* sub : {family, algebra, dw, all}) add_common(sub);
  for (CLI::App* sub : {family, all}) sub->add_option("--w-max", cfg.w_max, "largest degree w")->capture_default_str();
  for (CLI::App* sub : {dw, all}) {
    sub->add_option("--s-max", cfg.s_max, "largest operator order")->capture_default_str();
    sub->add_flag("--kpr", cfg.kpr, "include the Q(sqrt2) cross-check");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }
  try {
    cfg.max_bits = max_bits_from_env();
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidParameters;
  }
  cfg.format = format == "csv" ? Format::csv : format == "pretty" ? Format::pretty : Format::json;
  for (CLI::App* sub : app.get_subcommands()) cfg.commands.push_back(sub->get_name());

  const CommandResult result = run(cfg);
  const std::string text = render(result, cfg.format);
  if (cfg.out.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.out, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << cfg.out << '\n';
      return 1;
    }
  }
  if (result.report.contains("error")) err << "error: " << result.report.at("error").get<std::string>() << '\n';
  return result.exit_code;
}

}  // namespace mvop::cli
