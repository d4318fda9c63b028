#include "cq/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cq {

QuandleParseError::QuandleParseError(std::string message, int line, int column)
    : std::runtime_error("line " + std::to_string(line) +
                         (column > 0 ? ", column " + std::to_string(column) : "") +
                         ": " + message),
      line(line),
      column(column) {}

Quandle read_quandle(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw QuandleParseError("missing cardinality line", 1);
  int n = 0;
  {
    std::istringstream ss(line);
    std::string extra;
    if (!(ss >> n) || n < 1)
      throw QuandleParseError("expected a positive cardinality", 1);
    if (ss >> extra)
      throw QuandleParseError("unexpected token '" + extra + "'", 1);
  }
  std::vector<Permutation> maps;
  maps.reserve(n);
  for (int x = 0; x < n; ++x) {
    const int line_no = x + 2;
    if (!std::getline(in, line))
      throw QuandleParseError("missing image row for s_" + std::to_string(x + 1),
                              line_no);
    std::istringstream ss(line);
    std::vector<int> images;
    images.reserve(n);
    int value = 0;
    while (ss >> value) {
      if (value < 1 || value > n)
        throw QuandleParseError("image " + std::to_string(value) +
                                " out of range 1.." + std::to_string(n),
                                line_no, static_cast<int>(images.size()) + 1);
      images.push_back(value - 1);
    }
    if (!ss.eof()) {
      std::string token;
      ss.clear();
      ss >> token;
      throw QuandleParseError("unexpected token '" + token + "'", line_no,
                              static_cast<int>(images.size()) + 1);
    }
    if (static_cast<int>(images.size()) != n)
      throw QuandleParseError("expected " + std::to_string(n) + " images, got " +
                              std::to_string(images.size()),
                              line_no);
    try {
      maps.emplace_back(std::move(images));
    } catch (const std::invalid_argument& e) {
      throw QuandleParseError(e.what(), line_no);
    }
  }
  return Quandle::from_translations(std::move(maps));
}

Quandle read_quandle_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_quandle(in);
}

std::string write_quandle(const Quandle& q) {
  std::string out = std::to_string(q.size()) + "\n";
  for (const auto& s : q.translations()) {
    for (int y = 0; y < q.size(); ++y) {
      if (y > 0) out += ' ';
      out += std::to_string(s(y) + 1);
    }
    out += '\n';
  }
  return out;
}

nlohmann::json quandle_to_json(const Quandle& q) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& s : q.translations()) {
    nlohmann::json row = nlohmann::json::array();
    for (int y = 0; y < q.size(); ++y) row.push_back(s(y) + 1);
    rows.push_back(std::move(row));
  }
  return {{"n", q.size()}, {"s", std::move(rows)}};
}

Quandle quandle_from_json(const nlohmann::json& j) {
  const int n = j.at("n").get<int>();
  std::vector<Permutation> maps;
  maps.reserve(n);
  for (const auto& row : j.at("s")) {
    std::vector<int> images;
    images.reserve(n);
    for (const auto& value : row) images.push_back(value.get<int>() - 1);
    maps.emplace_back(std::move(images));
  }
  if (static_cast<int>(maps.size()) != n)
    throw std::invalid_argument("quandle_from_json: row count does not match n");
  return Quandle::from_translations(std::move(maps));
}

nlohmann::json row_to_json(const ClassificationRow& row) {
  nlohmann::json members = nlohmann::json::array();
  for (const auto& s2 : row.members) members.push_back(format_cycles(s2));
  return {{"n", row.n},
          {"count", row.count()},
          {"members", std::move(members)},
          {"stats",
           {{"candidates", row.stats.candidates},
            {"filter_rejected", row.stats.filter_rejected},
            {"full_rejected", row.stats.full_rejected}}},
          {"elapsed_ms", row.elapsed.count()}};
}

std::string row_to_text(const ClassificationRow& row) {
  std::string out = "n=" + std::to_string(row.n) + " #F_n=" + std::to_string(row.count());
  if (!row.members.empty()) {
    out += " members=";
    for (std::size_t i = 0; i < row.members.size(); ++i) {
      if (i > 0) out += ',';
      out += format_cycles(row.members[i]);
    }
  }
  return out;
}

nlohmann::json cross_check_to_json(const CrossCheckReport& report) {
  nlohmann::json matching = nlohmann::json::array();
  for (const auto& match : report.matching)
    matching.push_back({{"representative_index", match.representative_index},
                        {"s2", format_cycles(match.s2)}});
  nlohmann::json j = {{"n", report.n},
                      {"oracle_classes", report.oracle_classes},
                      {"fn_count", report.fn_count},
                      {"matching", std::move(matching)},
                      {"agreed", report.agreed}};
  if (!report.problems.empty()) j["problems"] = report.problems;
  return j;
}

}  // namespace cq
