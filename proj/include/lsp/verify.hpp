#pragma once

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace lsp {

enum class Status { pass, fail, inconclusive };
enum class Scale { quick, full };

const char* to_string(Status s);
const char* to_string(Scale s);

struct Check {
  std::string id;
  Status status = Status::pass;
  std::string witness;  // first failure, or a short summary of what was covered
};

struct Report {
  std::string suite;
  Scale scale = Scale::quick;
  unsigned precision = 0;
  std::string started;  // ISO 8601, UTC
  double elapsed_seconds = 0;
  std::vector<Check> checks;

  std::size_t count(Status s) const;
};

inline constexpr int kReportSchema = 1;

// 0 when nothing failed, 1 when some check failed, 3 when only inconclusive checks remain
int exit_code(const Report& r);

nlohmann::json to_json(const Report& r);

const std::vector<std::string>& suite_names();  // without "all"

// suite is one of suite_names() or "all"; throws std::invalid_argument otherwise
Report run_suite(const std::string& suite, Scale scale, unsigned precision);

std::vector<Check> dedekind_checks(Scale scale);
std::vector<Check> charsums_checks(Scale scale);
std::vector<Check> tau_checks(Scale scale);
std::vector<Check> feq_checks(Scale scale, unsigned precision);
std::vector<Check> rademacher_checks(Scale scale, unsigned precision);

}  // namespace lsp
