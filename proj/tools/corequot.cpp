#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "corequot/characters.hpp"
#include "corequot/json_io.hpp"
#include "corequot/littlewood_richardson.hpp"
#include "corequot/partition.hpp"
#include "corequot/schur.hpp"
#include "corequot/theorems.hpp"
#include "corequot/vertex.hpp"

using nlohmann::json;

namespace {

using namespace corequot;

std::string display(const Partition& p) { return p.empty() ? "∅" : p.str(); }

int thread_cap() {
  const unsigned hw = std::thread::hardware_concurrency();
  int cap = hw ? static_cast<int>(hw) : 1;
  if (const char* env = std::getenv("COREQUOT_THREADS")) {
    const int requested = std::atoi(env);
    if (requested > 0) cap = requested;
  }
  return cap;
}

// Deterministic order: results land at the index of their input item.
template <class R, class T, class F>
std::vector<R> parallel_map(const std::vector<T>& items, F&& fn) {
  std::vector<R> results(items.size());
  const int workers = std::min<int>(thread_cap(), static_cast<int>(items.size()));
  if (workers <= 1) {
    for (size_t i = 0; i < items.size(); ++i) results[i] = fn(items[i]);
    return results;
  }
  std::atomic<size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (;;) {
        const size_t i = next.fetch_add(1);
        if (i >= items.size()) return;
        results[i] = fn(items[i]);
      }
    });
  }
  for (auto& worker : pool) worker.join();
  return results;
}

struct CommandResult {
  int exit_code = 0;  // 0 pass, 1 verification failure
  json payload;
  std::string pretty;
};

CommandResult run_quotient(const std::string& arg) {
  const Partition y = parse_partition(arg);
  const int padding = default_padding(y);
  const BetaSet bs = beta_set(y, padding);
  const Triplet t = two_quotient_triplet(y);

  CommandResult res;
  res.payload = {{"partition", y.str()},
                 {"beta_set", bs.entries},
                 {"padding", padding},
                 {"core", t.core.str()},
                 {"quotient0", t.quotient0.str()},
                 {"quotient1", t.quotient1.str()}};
  std::ostringstream out;
  out << "partition: " << display(y) << "\n";
  out << "beta-set:  ";
  for (size_t i = 0; i < bs.entries.size(); ++i) out << (i ? "," : "") << bs.entries[i];
  out << " (padding " << padding << ")\n";
  out << "core:      " << display(t.core) << "\n";
  out << "quotient0: " << display(t.quotient0) << "\n";
  out << "quotient1: " << display(t.quotient1);
  res.pretty = out.str();
  return res;
}

CommandResult run_core(const std::string& arg) {
  const Partition core = two_core(parse_partition(arg));
  return {0, {{"core", core.str()}}, display(core)};
}

CommandResult run_sign(const std::string& arg) {
  const int sign = two_sign(parse_partition(arg));
  return {0, {{"sign", sign}}, sign > 0 ? "+1" : "-1"};
}

CommandResult run_schur(const std::string& arg, bool reduced) {
  const Partition y = parse_partition(arg);
  const GradedPolynomial f = reduced ? reduced_schur(y) : schur(y);
  CommandResult res;
  res.payload = {{"partition", y.str()},
                 {"reduced", reduced},
                 {"polynomial", polynomial_to_json(f)},
                 {"pretty", f.pretty()}};
  res.pretty = f.pretty();
  return res;
}

CommandResult run_character(const std::string& shape_arg, const std::string& cycles_arg) {
  const Partition shape = parse_partition(shape_arg);
  const Partition cycles = parse_partition(cycles_arg);
  const Integer value = mn_character(shape, cycles);
  return {0,
          {{"shape", shape.str()}, {"cycles", cycles.str()}, {"value", to_string(value)}},
          to_string(value)};
}

CommandResult run_lr(const std::string& outer_arg, const std::string& inner_arg,
                     const std::string& content_arg) {
  const Partition outer = parse_partition(outer_arg);
  const Partition inner = parse_partition(inner_arg);
  const Partition content = parse_partition(content_arg);
  const long long value = lr_coefficient(outer, inner, content);
  return {0,
          {{"outer", outer.str()},
           {"inner", inner.str()},
           {"content", content.str()},
           {"value", value}},
          std::to_string(value)};
}

CommandResult run_lr_expand(const std::string& mu_arg, const std::string& nu_arg) {
  const Partition mu = parse_partition(mu_arg);
  const Partition nu = parse_partition(nu_arg);
  CommandResult res;
  json terms = json::array();
  std::ostringstream out;
  bool first = true;
  for (const auto& [lambda, coeff] : lr_expand_product(mu, nu)) {
    terms.push_back({{"partition", lambda.str()}, {"coeff", coeff}});
    if (!first) out << "\n";
    out << display(lambda) << ": " << coeff;
    first = false;
  }
  res.payload = {{"mu", mu.str()}, {"nu", nu.str()}, {"terms", terms}};
  res.pretty = out.str();
  return res;
}

CommandResult run_weight(const std::string& arg) {
  const Weight w = weight_of(parse_partition(arg));
  std::ostringstream out;
  out << "Lambda_" << w.r << " - " << w.n << "·delta (degree " << w.degree() << ")";
  return {0, {{"r", w.r}, {"n", w.n}, {"degree", w.degree()}}, out.str()};
}

CommandResult run_basis(int r, int n) {
  CommandResult res;
  json list = json::array();
  std::ostringstream out;
  bool first = true;
  for (const Partition& z : basis_for_weight(Weight{r, n})) {
    list.push_back(z.str());
    if (!first) out << "\n";
    out << display(z);
    first = false;
  }
  res.payload = {{"r", r}, {"n", n}, {"basis", list}};
  res.pretty = out.str();
  return res;
}

CommandResult run_verify_theorem2(int max_r, int max_n) {
  CommandResult res;
  json checks = json::array();
  std::ostringstream out;
  bool all_pass = true;
  for (int r = 0; r <= max_r; ++r) {
    for (int n = 0; n <= max_n; ++n) {
      const RankReport report = verify_theorem2(Weight{r, n});
      checks.push_back({{"r", r},
                        {"n", n},
                        {"rank", report.rank},
                        {"expected", to_string(report.expected)},
                        {"pass", report.pass}});
      out << "r=" << r << " n=" << n << ": rank " << report.rank << ", expected "
          << to_string(report.expected) << (report.pass ? "" : "  MISMATCH") << "\n";
      all_pass = all_pass && report.pass;
    }
  }
  out << (all_pass ? "theorem2: pass" : "theorem2: FAIL");
  res.payload = {{"checks", checks}, {"pass", all_pass}};
  res.pretty = out.str();
  res.exit_code = all_pass ? 0 : 1;
  return res;
}

CommandResult run_verify_theorem3_single(const std::string& arg) {
  const DecompositionReport report = verify_theorem3(parse_partition(arg));
  CommandResult res;
  res.payload = report_to_json(report);
  std::ostringstream out;
  out << "subject: " << display(report.subject) << "\n";
  out << "basis:  ";
  for (const Partition& z : report.basis) out << " [" << display(z) << "]";
  out << "\nformula:";
  for (long long c : report.formula) out << " " << c;
  out << "\nsolved: ";
  for (const Rational& c : report.solved) out << " " << to_string(c);
  out << "\nmatch: " << (report.match ? "true" : "false");
  res.pretty = out.str();
  res.exit_code = report.match ? 0 : 1;
  return res;
}

CommandResult run_verify_theorem3_sweep(int max_size) {
  std::vector<Partition> subjects;
  for (int n = 0; n <= max_size; ++n) {
    for (const Partition& y : enumerate_partitions(n)) subjects.push_back(y);
  }
  const std::vector<DecompositionReport> reports =
      parallel_map<DecompositionReport>(subjects, [](const Partition& y) { return verify_theorem3(y); });

  CommandResult res;
  json failures = json::array();
  int failed = 0;
  for (const DecompositionReport& report : reports) {
    if (!report.match) {
      ++failed;
      failures.push_back(report_to_json(report));
    }
  }
  res.payload = {{"max_size", max_size},
                 {"checked", reports.size()},
                 {"failures", failures},
                 {"pass", failed == 0}};
  std::ostringstream out;
  out << "theorem3: " << (reports.size() - static_cast<size_t>(failed)) << "/" << reports.size()
      << " partitions of size <= " << max_size << " match";
  if (failed) out << "  FAIL";
  res.pretty = out.str();
  res.exit_code = failed == 0 ? 0 : 1;
  return res;
}

CommandResult run_verify_multiplicity(int max_degree) {
  const MultiplicityReport report = multiplicity_report(max_degree);
  CommandResult res;
  json rows = json::array();
  for (const MultiplicityRow& row : report.rows) {
    rows.push_back({{"degree", row.degree},
                    {"weight_sum", to_string(row.weight_sum)},
                    {"odd_count", to_string(row.odd_count)},
                    {"pass", row.pass}});
  }
  res.payload = {{"max_degree", max_degree}, {"rows", rows}, {"pass", report.pass}};
  std::ostringstream out;
  out << "multiplicity: degrees 0.." << max_degree << " "
      << (report.pass ? "all match p^odd" : "MISMATCH");
  res.pretty = out.str();
  res.exit_code = report.pass ? 0 : 1;
  return res;
}

CommandResult run_verify_gauss(int order) {
  const GaussReport report = gauss_series_check(order);
  CommandResult res;
  json lhs = json::array();
  json rhs = json::array();
  for (const Integer& c : report.lhs) lhs.push_back(to_string(c));
  for (const Integer& c : report.rhs) rhs.push_back(to_string(c));
  res.payload = {{"order", order},
                 {"pass", report.pass},
                 {"first_mismatch", report.first_mismatch},
                 {"lhs", lhs},
                 {"rhs", rhs}};
  std::ostringstream out;
  out << "gauss: series identity to order " << order << " "
      << (report.pass ? "holds" : ("breaks at q^" + std::to_string(report.first_mismatch)));
  res.pretty = out.str();
  res.exit_code = report.pass ? 0 : 1;
  return res;
}

CommandResult run_vertex_apply(int k, const std::string& arg) {
  GradedPolynomial input;
  json input_json;
  if (!arg.empty() && arg.front() == '[') {
    input = polynomial_from_json(json::parse(arg));
    input_json = polynomial_to_json(input);
  } else {
    const Partition y = parse_partition(arg);
    input = reduced_schur(y);
    input_json = y.str();
  }
  const GradedPolynomial result = vertex_apply(k, input);
  CommandResult res;
  res.payload = {{"k", k},
                 {"input", input_json},
                 {"result", polynomial_to_json(result)},
                 {"pretty", result.pretty()}};
  res.pretty = result.pretty();
  return res;
}

CommandResult run_vertex_commutators(int degree_bound) {
  std::vector<OperatorRef> ops;
  for (int j : {1, -1, 3, -3}) ops.push_back(OperatorRef::a(j));
  for (int k = -2; k <= 2; ++k) ops.push_back(OperatorRef::x(k));

  CommandResult res;
  json fits = json::array();
  std::ostringstream out;
  bool all_consistent = true;
  bool first = true;
  for (size_t i = 0; i < ops.size(); ++i) {
    for (size_t j = i + 1; j < ops.size(); ++j) {
      const CommutatorFit fit = commutator_fit(ops[i], ops[j], degree_bound);
      json combination = json::array();
      for (const auto& [name, value] : fit.combination) {
        combination.push_back({{"candidate", name}, {"coeff", to_string(value)}});
      }
      json entry = {{"op1", fit.op1.str()},
                    {"op2", fit.op2.str()},
                    {"consistent", fit.consistent},
                    {"fully_determined", fit.fully_determined},
                    {"combination", combination}};
      if (fit.witness) entry["witness"] = fit.witness->str();
      fits.push_back(entry);
      if (!first) out << "\n";
      out << fit.str();
      if (fit.consistent && !fit.fully_determined) out << "  (not pinned at this degree bound)";
      first = false;
      all_consistent = all_consistent && fit.consistent;
    }
  }
  res.payload = {{"degree_bound", degree_bound}, {"fits", fits}, {"pass", all_consistent}};
  res.pretty = out.str();
  res.exit_code = all_consistent ? 0 : 1;
  return res;
}

CommandResult run_batch(const std::string& path, const std::string& check) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot read batch file '" + path + "'");

  std::vector<std::pair<int, Partition>> entries;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const auto first = line.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) continue;
    try {
      entries.emplace_back(line_number, parse_partition(line));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("parse error at line " + std::to_string(line_number) + ": " +
                                  e.what());
    }
  }

  // int, not bool: vector<bool> packs bits and is unsafe to write in parallel.
  const std::vector<int> outcomes = parallel_map<int>(
      entries, [&check](const std::pair<int, Partition>& entry) -> int {
        if (check == "roundtrip") {
          return from_triplet(two_quotient_triplet(entry.second)) == entry.second;
        }
        return verify_theorem3(entry.second).match;
      });

  CommandResult res;
  json lines = json::array();
  std::ostringstream out;
  int failures = 0;
  for (size_t i = 0; i < entries.size(); ++i) {
    const bool pass = outcomes[i] != 0;
    if (!pass) ++failures;
    lines.push_back({{"line", entries[i].first},
                     {"partition", entries[i].second.str()},
                     {"pass", pass}});
    out << "line " << entries[i].first << ": " << display(entries[i].second) << " "
        << (pass ? "pass" : "FAIL") << "\n";
  }
  out << entries.size() - static_cast<size_t>(failures) << "/" << entries.size() << " pass";
  res.payload = {{"path", path},
                 {"check", check},
                 {"lines", lines},
                 {"passes", entries.size() - static_cast<size_t>(failures)},
                 {"failures", failures}};
  res.pretty = out.str();
  res.exit_code = failures == 0 ? 0 : 1;
  return res;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact 2-core/2-quotient combinatorics, Schur functions, and weight-space checks"};
  app.require_subcommand(1);
  app.fallthrough();  // let --json appear after the subcommand too

  bool json_out = false;
  app.add_flag("--json", json_out, "emit a JSON report instead of text");

  std::function<CommandResult()> action;

  std::string arg_partition;
  auto* quotient = app.add_subcommand("quotient", "beta-set, 2-core and 2-quotient of a partition");
  quotient->add_option("partition", arg_partition, "partition, e.g. 4,3,1,1")->required();
  quotient->callback([&] { action = [&] { return run_quotient(arg_partition); }; });

  std::string core_arg;
  auto* core = app.add_subcommand("core", "2-core of a partition");
  core->add_option("partition", core_arg)->required();
  core->callback([&] { action = [&] { return run_core(core_arg); }; });

  std::string sign_arg;
  auto* sign = app.add_subcommand("sign", "2-sign of a partition");
  sign->add_option("partition", sign_arg)->required();
  sign->callback([&] { action = [&] { return run_sign(sign_arg); }; });

  std::string schur_arg;
  bool schur_reduced = false;
  auto* schur_cmd = app.add_subcommand("schur", "Schur function in the power-sum variables");
  schur_cmd->add_option("partition", schur_arg)->required();
  schur_cmd->add_flag("--reduced", schur_reduced, "set the even variables to zero");
  schur_cmd->callback([&] { action = [&] { return run_schur(schur_arg, schur_reduced); }; });

  std::string char_shape, char_cycles;
  auto* character = app.add_subcommand("character", "symmetric-group character value");
  character->add_option("shape", char_shape)->required();
  character->add_option("cycles", char_cycles)->required();
  character->callback([&] { action = [&] { return run_character(char_shape, char_cycles); }; });

  std::string lr_outer, lr_inner, lr_content;
  auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
  lr->add_option("outer", lr_outer)->required();
  lr->add_option("inner", lr_inner)->expected(1);
  lr->add_option("content", lr_content)->expected(1);
  lr->callback([&] { action = [&] { return run_lr(lr_outer, lr_inner, lr_content); }; });

  std::string lrx_mu, lrx_nu;
  auto* lr_expand = app.add_subcommand("lr-expand", "expansion of a product of Schur functions");
  lr_expand->add_option("mu", lrx_mu)->expected(1);
  lr_expand->add_option("nu", lrx_nu)->expected(1);
  lr_expand->callback([&] { action = [&] { return run_lr_expand(lrx_mu, lrx_nu); }; });

  std::string weight_arg;
  auto* weight = app.add_subcommand("weight", "weight of the reduced Schur function");
  weight->add_option("partition", weight_arg)->required();
  weight->callback([&] { action = [&] { return run_weight(weight_arg); }; });

  int basis_r = 0, basis_n = 0;
  auto* basis = app.add_subcommand("basis", "weight-space basis partitions");
  basis->add_option("r", basis_r)->required()->check(CLI::NonNegativeNumber);
  basis->add_option("n", basis_n)->required()->check(CLI::NonNegativeNumber);
  basis->callback([&] { action = [&] { return run_basis(basis_r, basis_n); }; });

  auto* verify = app.add_subcommand("verify", "run a verification suite");
  verify->require_subcommand(1);

  int t2_r = 3, t2_n = 6;
  auto* theorem2 = verify->add_subcommand("theorem2", "basis rank equals p(n) for all r,n up to the bounds");
  theorem2->add_option("--r", t2_r, "largest core index")->capture_default_str()->check(CLI::NonNegativeNumber);
  theorem2->add_option("--n", t2_n, "largest delta depth")->capture_default_str()->check(CLI::NonNegativeNumber);
  theorem2->callback([&] { action = [&] { return run_verify_theorem2(t2_r, t2_n); }; });

  std::string t3_partition;
  int t3_max_size = 8;
  auto* theorem3 = verify->add_subcommand("theorem3", "LR formula against the exact linear solve");
  theorem3->add_option("partition", t3_partition, "check a single partition");
  auto* t3_size_opt = theorem3->add_option("--max-size", t3_max_size, "check every partition up to this size");
  t3_size_opt->capture_default_str()->check(CLI::NonNegativeNumber);
  theorem3->callback([&] {
    const bool has_partition = theorem3->count("partition") > 0;
    const bool has_size = t3_size_opt->count() > 0;
    if (has_partition && has_size) {
      throw CLI::ValidationError("theorem3", "give either a partition or --max-size, not both");
    }
    if (has_partition) {
      action = [&] { return run_verify_theorem3_single(t3_partition); };
    } else {
      action = [&] { return run_verify_theorem3_sweep(t3_max_size); };
    }
  });

  int mult_degree = 40;
  auto* multiplicity_cmd = verify->add_subcommand("multiplicity", "weight multiplicities against p^odd");
  multiplicity_cmd->add_option("--max-degree", mult_degree)->capture_default_str()->check(CLI::NonNegativeNumber);
  multiplicity_cmd->callback([&] { action = [&] { return run_verify_multiplicity(mult_degree); }; });

  int gauss_order = 80;
  auto* gauss = verify->add_subcommand("gauss", "truncated q-series identity");
  gauss->add_option("--order", gauss_order)->capture_default_str()->check(CLI::NonNegativeNumber);
  gauss->callback([&] { action = [&] { return run_verify_gauss(gauss_order); }; });

  auto* vertex = app.add_subcommand("vertex", "vertex-operator modes");
  vertex->require_subcommand(1);

  int apply_k = 0;
  std::string apply_arg;
  auto* vertex_apply_cmd = vertex->add_subcommand("apply", "apply the mode X_k");
  vertex_apply_cmd->add_option("--k", apply_k, "mode index")->required();
  vertex_apply_cmd->add_option("poly-or-partition", apply_arg,
                               "partition (its reduced Schur function) or polynomial JSON")
      ->required();
  vertex_apply_cmd->callback([&] { action = [&] { return run_vertex_apply(apply_k, apply_arg); }; });

  int commutator_degree = 6;
  auto* commutators = vertex->add_subcommand("commutators", "fit brackets of a_j and X_k");
  commutators->add_option("--degree", commutator_degree, "test monomial degree bound")
      ->capture_default_str()
      ->check(CLI::NonNegativeNumber);
  commutators->callback([&] { action = [&] { return run_vertex_commutators(commutator_degree); }; });

  std::string batch_path, batch_check = "theorem3";
  auto* batch = app.add_subcommand("batch", "apply a verification to one partition per line");
  batch->add_option("path", batch_path, "file of partitions, one per line")->required();
  batch->add_option("--check", batch_check, "theorem3 or roundtrip")
      ->capture_default_str()
      ->check(CLI::IsMember({"theorem3", "roundtrip"}));
  batch->callback([&] { action = [&] { return run_batch(batch_path, batch_check); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    CommandResult result = action();
    const double ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    if (json_out) {
      json envelope = {{"status", result.exit_code == 0 ? "pass" : "fail"},
                       {"ms", ms},
                       {"payload", result.payload}};
      std::cout << envelope.dump() << "\n";
    } else {
      std::cout << result.pretty << "\n";
    }
    return result.exit_code;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    if (json_out) {
      std::cout << json{{"status", "error"}, {"message", e.what()}}.dump() << "\n";
    }
    return 2;
  }
}
