#pragma once

#include <string>
#include <vector>

namespace st2x {

enum class Severity { Warning, Error };

// Stable machine-readable diagnostic codes. The full set is documented in
// the README; codes are never renamed once released.
namespace diag {
// parse level
inline constexpr const char* MALFORMED_LINE = "MALFORMED_LINE";
inline constexpr const char* DUPLICATE_ID = "DUPLICATE_ID";
inline constexpr const char* DANGLING_REFERENCE = "DANGLING_REFERENCE";
inline constexpr const char* UNKNOWN_ROLE = "UNKNOWN_ROLE";
// graph level
inline constexpr const char* UNKNOWN_TYPE = "UNKNOWN_TYPE";
inline constexpr const char* CYCLIC_THEME = "CYCLIC_THEME";
inline constexpr const char* THEME_ONLY_LOCALIZATION = "THEME_ONLY_LOCALIZATION";
inline constexpr const char* MODIFIER_ONLY_EVENT = "MODIFIER_ONLY_EVENT";
// conversion level
inline constexpr const char* UNRESOLVED_THEME = "UNRESOLVED_THEME";
inline constexpr const char* UNMAPPED_TYPE = "UNMAPPED_TYPE";
inline constexpr const char* GRANULARITY = "GRANULARITY";
inline constexpr const char* PATHWAY_EVENT = "PATHWAY_EVENT";
inline constexpr const char* ROLE_IGNORED = "ROLE_IGNORED";
// annotation level
inline constexpr const char* LOOKUP_FAILED = "LOOKUP_FAILED";
// input layout level
inline constexpr const char* INPUT_CONFLICT = "INPUT_CONFLICT";
}  // namespace diag

struct Diagnostic {
  Severity severity = Severity::Warning;
  std::string code;
  int line = 0;  // physical line in the source file; 0 when not line-bound
  std::string message;

  static Diagnostic warning(std::string code, int line, std::string message) {
    return {Severity::Warning, std::move(code), line, std::move(message)};
  }
  static Diagnostic error(std::string code, int line, std::string message) {
    return {Severity::Error, std::move(code), line, std::move(message)};
  }
};

inline bool has_errors(const std::vector<Diagnostic>& diags) {
  for (const auto& d : diags)
    if (d.severity == Severity::Error) return true;
  return false;
}

inline const char* severity_name(Severity s) {
  return s == Severity::Error ? "error" : "warning";
}

}  // namespace st2x
