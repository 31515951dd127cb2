#pragma once

// Front-end plumbing shared by the command-line tool and the Python module:
// a job description, its dispatch onto the library, and deterministic
// serialization of the result document.

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flagspec/error.hpp"
#include "flagspec/flag_variety.hpp"
#include "flagspec/pi_scalar.hpp"
#include "flagspec/rational.hpp"
#include "flagspec/spectral.hpp"

namespace flagspec {

inline constexpr int kSchemaVersion = 1;
inline constexpr std::string_view kArtifactVersion = "0.1.0";

enum class Command { describe, spinc_check, theta_spectrum, spectrum, min, bound, harmonic, scan };

std::string_view to_string(Command c);
/// Throws Error(invalid_argument) for an unknown name.
Command parse_command(std::string_view name);
const std::vector<std::string>& command_names();

struct JobSpec {
  Command command = Command::describe;
  char lie_family = 'A';
  int rank = 1;
  std::vector<int> painted;
  std::optional<std::vector<long>> line_bundle;
  std::optional<std::vector<Rational>> theta;
  std::optional<std::vector<Rational>> kahler;
  bool kahler_pi_units = false;
  /// "auto-ke" or a PiScalar literal such as "24" or "8*pi".
  std::optional<std::string> scalar_target;
  std::optional<std::pair<long, long>> q_range;
  std::size_t max_distinct = kDefaultMaxDistinct;
  bool json = false;

  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

/// "a:b" or "a..b".
std::pair<long, long> parse_q_range(std::string_view text);
std::vector<int> parse_node_list(std::string_view text);
std::vector<long> parse_integer_list(std::string_view text);

/// Merge cap from FLAGSPEC_MAX_DISTINCT, if set and valid.
std::optional<std::size_t> max_distinct_from_env();

nlohmann::json to_json(const Rational& r);
nlohmann::json to_json(const PiScalar& s);
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const JobSpec& spec);

PiScalar pi_scalar_from_json(const nlohmann::json& j);
Spectrum spectrum_from_json(const nlohmann::json& j);
JobSpec job_from_json(const nlohmann::json& j);

/// Runs the job and returns the full result document (schema_version,
/// artifact_version, job echo, result payload). Library errors propagate.
nlohmann::json run_job(const JobSpec& spec);

/// Structured error document for a failed job.
nlohmann::json error_document(const Error& e);

enum class Format { table, json };

/// Deterministic rendering: sorted JSON keys, rationals and big integers as
/// strings; or a human-readable table.
std::string emit(const nlohmann::json& doc, Format format);

}  // namespace flagspec
