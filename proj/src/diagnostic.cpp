#include "texpic/diagnostic.hpp"

#include <algorithm>

namespace texpic {

std::string_view rule_id(Rule rule) {
  switch (rule) {
    case Rule::E01_SlopeBound: return "E01";
    case Rule::E02_CommonDivisor: return "E02";
    case Rule::E03_ZeroSlope: return "E03";
    case Rule::E04_Syntax: return "E04";
    case Rule::W01_OutsideBox: return "W01";
    case Rule::W02_NonIntegerArg: return "W02";
    case Rule::W03_Unsupported: return "W03";
  }
  return "???";
}

Severity rule_severity(Rule rule) {
  switch (rule) {
    case Rule::E01_SlopeBound:
    case Rule::E02_CommonDivisor:
    case Rule::E03_ZeroSlope:
    case Rule::E04_Syntax:
      return Severity::Error;
    default:
      return Severity::Warning;
  }
}

Severity Diagnostic::severity() const { return rule_severity(rule); }

bool has_errors(const std::vector<Diagnostic>& diagnostics) {
  return std::any_of(diagnostics.begin(), diagnostics.end(),
                     [](const Diagnostic& d) { return d.is_error(); });
}

LineColumn locate(std::string_view text, std::size_t offset) {
  LineColumn lc;
  offset = std::min(offset, text.size());
  for (std::size_t i = 0; i < offset; ++i) {
    if (text[i] == '\n') {
      ++lc.line;
      lc.column = 1;
    } else {
      ++lc.column;
    }
  }
  return lc;
}

std::string format_diagnostic(const Diagnostic& d, std::string_view text, std::string_view origin) {
  const LineColumn lc = locate(text, d.span.begin);
  std::string out(origin);
  out += ':' + std::to_string(lc.line) + ':' + std::to_string(lc.column) + ": ";
  out += d.is_error() ? "error " : "warning ";
  out += rule_id(d.rule);
  out += ": ";
  out += d.message;
  return out;
}

}  // namespace texpic
