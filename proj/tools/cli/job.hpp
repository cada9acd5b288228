#pragma once

#include <cstddef>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "hochschild/algebra.hpp"
#include "hochschild/errors.hpp"
#include "hochschild/simplicial.hpp"

namespace hochschild::cli {

/// A config problem with its location: "line:col" for syntax errors, a JSON pointer otherwise.
class ConfigError : public ParseError {
 public:
  ConfigError(std::string location, std::string message)
      : ParseError(location + ": " + message), location_(std::move(location)), message_(std::move(message)) {}
  const std::string& location() const { return location_; }
  const std::string& message() const { return message_; }

 private:
  std::string location_;
  std::string message_;
};

/// What the command line asked for, before resolution.
struct Options {
  std::string command;
  std::optional<std::string> config_path;
  std::optional<std::string> fixture;  ///< "A" or "A:B"
  std::optional<std::string> field;
  std::optional<std::string> pair;
  std::optional<std::size_t> q_max;
  bool timing = true;
  bool emit_matrices = false;
  bool reverse_b_order = false;
};

/// A fully resolved job. `echo` describes it canonically and feeds the digest.
struct Job {
  Triple triple;
  SimplicialPair pair;
  std::string pair_name;  ///< builtin name or "config"
  bool explicit_pair = false;
  std::size_t q_max = 3;
  nlohmann::json echo;
};

inline constexpr std::size_t kDefaultQMax = 3;

/// Parses JSON text; syntax errors become ConfigError with line:col.
nlohmann::json parse_config_text(const std::string& text);

/// Combines the config (if any) with command-line overrides. Throws ConfigError or UsageError.
Job resolve_job(const Options& options, const std::optional<nlohmann::json>& config);

/// Hex SHA-256 of the canonical echo.
std::string digest(const nlohmann::json& echo);

}  // namespace hochschild::cli
