#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cq/classify.hpp"
#include "cq/cyclic.hpp"
#include "cq/io.hpp"
#include "cq/oracle.hpp"
#include "cq/perm.hpp"
#include "cq/quandle.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw std::runtime_error("cannot open " + out_path + " for writing");
  out << text;
}

std::string bool_str(bool value) { return value ? "true" : "false"; }

struct CommonOpts {
  int n = 0;
  int max_n = 0;
  int min_n = 3;
  unsigned workers = 0;
  std::string format = "text";
  std::string out_path;
  std::string s2_text;
};

int run_enumerate(const CommonOpts& opts) {
  const cq::ClassificationRow row = cq::enumerate_fn(opts.n, opts.workers);
  if (opts.format == "json")
    emit(cq::row_to_json(row).dump(2) + "\n", opts.out_path);
  else
    emit(cq::row_to_text(row) + "\n", opts.out_path);
  return kExitOk;
}

int run_table(const CommonOpts& opts) {
  const auto rows = cq::classification_table(opts.min_n, opts.max_n, opts.workers);
  if (opts.format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const auto& row : rows) j.push_back(cq::row_to_json(row));
    emit(j.dump(2) + "\n", opts.out_path);
  } else {
    std::string text;
    for (const auto& row : rows) text += cq::row_to_text(row) + "\n";
    emit(text, opts.out_path);
  }
  return kExitOk;
}

int run_phi(const CommonOpts& opts) {
  const cq::Permutation s2 = cq::parse_cycles(opts.s2_text, opts.n);
  const cq::Quandle q = cq::phi(s2);
  if (opts.format == "json")
    emit(cq::quandle_to_json(q).dump(2) + "\n", opts.out_path);
  else
    emit(cq::write_quandle(q), opts.out_path);
  return kExitOk;
}

int run_check(const std::string& path, const CommonOpts& opts) {
  const cq::Quandle q = cq::read_quandle_file(path);
  const int n = q.size();
  const bool connected = cq::is_connected(q);
  const bool cyclic = n >= 3 && cq::is_cyclic_type(q);
  const bool two_point = n >= 2 && cq::is_two_point_homogeneous(q);
  if (opts.format == "json") {
    nlohmann::json j = {{"n", n},
                        {"valid", true},
                        {"connected", connected},
                        {"cyclic_type", cyclic},
                        {"two_point_homogeneous", two_point}};
    emit(j.dump(2) + "\n", opts.out_path);
  } else {
    std::string text;
    text += "n: " + std::to_string(n) + "\n";
    text += "valid: true\n";
    text += "connected: " + bool_str(connected) + "\n";
    text += "cyclic_type: " + bool_str(cyclic) + "\n";
    text += "two_point_homogeneous: " + bool_str(two_point) + "\n";
    emit(text, opts.out_path);
  }
  return kExitOk;
}

int run_iso(const std::string& path1, const std::string& path2,
            const CommonOpts& opts) {
  const cq::Quandle a = cq::read_quandle_file(path1);
  const cq::Quandle b = cq::read_quandle_file(path2);
  const auto witness = cq::are_isomorphic(a, b);
  if (witness) {
    emit("isomorphic witness=" + cq::format_cycles(witness->map) + "\n",
         opts.out_path);
    return kExitOk;
  }
  emit("not isomorphic\n", opts.out_path);
  return kExitCheckFailed;
}

int run_oracle(const CommonOpts& opts) {
  const cq::CrossCheckReport report = cq::cross_check(opts.n, opts.workers);
  if (opts.format == "json") {
    emit(cq::cross_check_to_json(report).dump(2) + "\n", opts.out_path);
  } else {
    std::string text = "n=" + std::to_string(report.n) +
                       " oracle_classes=" + std::to_string(report.oracle_classes) +
                       " #F_n=" + std::to_string(report.fn_count) +
                       " agreed=" + bool_str(report.agreed) + "\n";
    for (const auto& match : report.matching)
      text += "match: class_rep=" + std::to_string(match.representative_index) +
              " s2=" + cq::format_cycles(match.s2) + "\n";
    for (const auto& problem : report.problems) text += "problem: " + problem + "\n";
    emit(text, opts.out_path);
  }
  return report.agreed ? kExitOk : kExitCheckFailed;
}

int run_conjecture(const CommonOpts& opts) {
  const auto entries =
      cq::prime_power_consistency(opts.min_n, opts.max_n, opts.workers);
  bool all_agree = true;
  for (const auto& e : entries) all_agree = all_agree && e.agree();
  if (opts.format == "json") {
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& e : entries)
      rows.push_back({{"n", e.n},
                      {"prime_power", e.prime_power},
                      {"nonempty", e.nonempty},
                      {"agree", e.agree()}});
    nlohmann::json j = {{"rows", std::move(rows)}, {"all_agree", all_agree}};
    emit(j.dump(2) + "\n", opts.out_path);
  } else {
    std::string text;
    for (const auto& e : entries)
      text += "n=" + std::to_string(e.n) + " prime_power=" + bool_str(e.prime_power) +
              " nonempty=" + bool_str(e.nonempty) + " agree=" + bool_str(e.agree()) +
              "\n";
    text += "all rows agree: " + std::string(bool_str(all_agree)) + "\n";
    emit(text, opts.out_path);
  }
  return all_agree ? kExitOk : kExitCheckFailed;
}

void add_output_flags(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--format", opts.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  cmd->add_option("--out", opts.out_path, "Write output to FILE instead of stdout");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Classification of finite quandles of cyclic type"};
  app.require_subcommand(1);

  CommonOpts opts;
  std::string file1, file2;

  auto* enumerate = app.add_subcommand("enumerate", "Enumerate F_n for one n");
  enumerate->add_option("--n", opts.n, "Cardinality")->required()->check(CLI::Range(3, 64));
  enumerate->add_option("--workers", opts.workers, "Worker threads (0 = auto)");
  add_output_flags(enumerate, opts);

  auto* table = app.add_subcommand("table", "Classification table for a range of n");
  table->add_option("--max-n", opts.max_n, "Largest cardinality")->required()->check(CLI::Range(3, 64));
  table->add_option("--min-n", opts.min_n, "Smallest cardinality")->check(CLI::Range(3, 64));
  table->add_option("--workers", opts.workers, "Worker threads (0 = auto)");
  add_output_flags(table, opts);

  auto* phi = app.add_subcommand("phi", "Reconstruct the quandle of a member of F_n");
  phi->add_option("--n", opts.n, "Cardinality")->required()->check(CLI::Range(3, 64));
  phi->add_option("--s2", opts.s2_text, "Member of F_n in cycle notation")->required();
  add_output_flags(phi, opts);

  auto* check = app.add_subcommand("check", "Validate a quandle file and report properties");
  check->add_option("file", file1, "Quandle file")->required();
  add_output_flags(check, opts);

  auto* iso = app.add_subcommand("iso", "Test two quandle files for isomorphism");
  iso->add_option("file1", file1, "First quandle file")->required();
  iso->add_option("file2", file2, "Second quandle file")->required();
  add_output_flags(iso, opts);

  auto* oracle = app.add_subcommand("oracle", "Cross-check the pipeline against brute force");
  oracle->add_option("--n", opts.n, "Cardinality")->required()->check(CLI::Range(3, 6));
  oracle->add_option("--workers", opts.workers, "Worker threads (0 = auto)");
  add_output_flags(oracle, opts);

  auto* conjecture = app.add_subcommand("conjecture", "Prime-power consistency report");
  conjecture->add_option("--max-n", opts.max_n, "Largest cardinality")->required()->check(CLI::Range(3, 64));
  conjecture->add_option("--min-n", opts.min_n, "Smallest cardinality")->check(CLI::Range(3, 64));
  conjecture->add_option("--workers", opts.workers, "Worker threads (0 = auto)");
  add_output_flags(conjecture, opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*enumerate) return run_enumerate(opts);
    if (*table) return run_table(opts);
    if (*phi) return run_phi(opts);
    if (*check) return run_check(file1, opts);
    if (*iso) return run_iso(file1, file2, opts);
    if (*oracle) return run_oracle(opts);
    if (*conjecture) return run_conjecture(opts);
  } catch (const cq::QuandleParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return *check ? kExitCheckFailed : kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitUsage;
}
