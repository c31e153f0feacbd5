#pragma once

// Job files in, reports out. Both are JSON; words use the fp-groups syntax
// over the names of G's generators.
//
//   {"schema": "pq-pi1-job/1",
//    "group": {"degree": 2, "generators": [[1, 0]], "names": ["s"]},
//    "actions": [{"projection": [[1, 0]],            // p(g_k) as images; omit for p = id
//                 "signature": {"genus": 0, "periods": [2, 2, 2, 2]},
//                 "vector": {"a": [], "b": [], "c": ["s", "s", "s", "s"]}}],
//    "budgets": {"max_cosets": 200000, "tietze_steps": 10000, "verify_index_bound": 12},
//    "outputs": ["pi1", "abelianization", "structure", "verify", "freeness", "enumerate"]}
//
// Vector entries are words in G's names, mapped into H through p.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "json.hpp"

#include "pq/error.hpp"
#include "pq/product_quotient.hpp"

namespace pq::cli {

using nlohmann::json;

inline constexpr const char* kJobSchema = "pq-pi1-job/1";
inline constexpr const char* kReportSchema = "pq-pi1-report/1";

enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 1,
  kExitValidation = 2,
  kExitOverflow = 3,
  kExitConsistency = 4,
};

// Malformed JSON; the message carries line and column.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed JSON that breaks an invariant. `pointer` locates the culprit.
class ValidationError : public Error {
 public:
  ValidationError(std::string pointer, const std::string& what)
      : Error(pointer + ": " + what), pointer_(std::move(pointer)) {}
  const std::string& pointer() const noexcept { return pointer_; }

 private:
  std::string pointer_;
};

struct ActionSpec {
  std::optional<std::vector<std::vector<Point>>> projection;
  Signature signature;
  std::vector<std::string> a, b, c;
};

struct JobSpec {
  std::size_t degree = 0;
  std::vector<std::vector<Point>> generators;
  std::vector<std::string> names;
  std::vector<ActionSpec> actions;
  PipelineOptions budgets;
  std::set<std::string> outputs;

  // Filled in by parse_job.
  GroupPtr group;
  std::vector<CurveAction> curve_actions;
};

inline const std::set<std::string>& known_outputs() {
  static const std::set<std::string> s{"pi1",    "abelianization", "structure",
                                       "verify", "freeness",       "enumerate"};
  return s;
}

JobSpec parse_job(const std::string& text);
// Validates the fields and builds the group and curve actions.
void build_job(JobSpec& job);
json emit_job(const JobSpec& job);

struct RunResult {
  json report;
  int exit_code = kExitOk;
};

RunResult run_job(const JobSpec& job, bool timing = false);

// Stable text form: two-space indent, sorted keys, trailing newline.
std::string dump(const json& j);

}  // namespace pq::cli
