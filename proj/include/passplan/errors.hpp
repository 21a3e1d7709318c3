#pragma once

#include <stdexcept>
#include <string>

namespace passplan {

/// Failure categories carried by every thrown Error. The CLI maps them to
/// exit codes (schema/validation -> 2, config -> 3, domain/internal -> 4);
/// library callers can switch on category() instead of exception type.
enum class ErrorCategory {
  schema,      ///< input JSON is structurally wrong (missing/extra/mistyped keys)
  validation,  ///< input parsed but violates a world-state rule
  config,      ///< configuration file or parameter value is unusable
  domain,      ///< argument outside the mathematical domain of an operation
  internal,    ///< invariant broken inside the library itself
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& message)
      : std::runtime_error(message), category_(category) {}

  ErrorCategory category() const { return category_; }

 private:
  ErrorCategory category_;
};

inline Error schema_error(const std::string& m) { return Error(ErrorCategory::schema, m); }
inline Error validation_error(const std::string& m) { return Error(ErrorCategory::validation, m); }
inline Error config_error(const std::string& m) { return Error(ErrorCategory::config, m); }
inline Error domain_error(const std::string& m) { return Error(ErrorCategory::domain, m); }
inline Error internal_error(const std::string& m) { return Error(ErrorCategory::internal, m); }

inline const char* category_name(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::schema: return "schema";
    case ErrorCategory::validation: return "validation";
    case ErrorCategory::config: return "config";
    case ErrorCategory::domain: return "domain";
    case ErrorCategory::internal: return "internal";
  }
  return "internal";
}

/// Exit code the CLI uses for a given category.
inline int exit_code_for(ErrorCategory c) {
  switch (c) {
    case ErrorCategory::schema:
    case ErrorCategory::validation:
      return 2;
    case ErrorCategory::config:
      return 3;
    case ErrorCategory::domain:
    case ErrorCategory::internal:
      return 4;
  }
  return 4;
}

}  // namespace passplan
