#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "cq/classify.hpp"
#include "cq/oracle.hpp"
#include "cq/quandle.hpp"

namespace cq {

/// Raised by read_quandle with a 1-based line (and column, when known).
struct QuandleParseError : std::runtime_error {
  QuandleParseError(std::string message, int line, int column = 0);
  int line;
  int column;
};

/// Text format: line 1 is n; lines 2..n+1 hold the image rows of s_1..s_n,
/// n space-separated 1-based integers each. Validates the result.
Quandle read_quandle(std::istream& in);
Quandle read_quandle_file(const std::string& path);

std::string write_quandle(const Quandle& q);

/// Structured-object variant: {"n": n, "s": [[...], ...]} with 1-based images.
nlohmann::json quandle_to_json(const Quandle& q);
Quandle quandle_from_json(const nlohmann::json& j);

/// {n, count, members, stats: {candidates, filter_rejected, full_rejected},
///  elapsed_ms}
nlohmann::json row_to_json(const ClassificationRow& row);

/// One Table-1-style line: "n=5 #F_n=2 members=(1 3 5 4),(1 4 3 5)";
/// the members field is omitted when F_n is empty.
std::string row_to_text(const ClassificationRow& row);

nlohmann::json cross_check_to_json(const CrossCheckReport& report);

}  // namespace cq
