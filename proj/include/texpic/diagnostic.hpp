#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace texpic {

// Byte range [begin, end) into the source text.
struct Span {
  std::size_t begin = 0;
  std::size_t end = 0;

  std::size_t size() const { return end - begin; }
  friend bool operator==(const Span&, const Span&) = default;
};

enum class Rule {
  E01_SlopeBound,
  E02_CommonDivisor,
  E03_ZeroSlope,
  E04_Syntax,
  W01_OutsideBox,
  W02_NonIntegerArg,
  W03_Unsupported,
};

enum class Severity { Error, Warning };

struct Diagnostic {
  Rule rule;
  Span span;
  std::string message;

  Severity severity() const;
  bool is_error() const { return severity() == Severity::Error; }
};

std::string_view rule_id(Rule rule);
Severity rule_severity(Rule rule);

bool has_errors(const std::vector<Diagnostic>& diagnostics);

struct LineColumn {
  std::size_t line = 1;
  std::size_t column = 1;
};

// 1-based line and column of a byte offset.
LineColumn locate(std::string_view text, std::size_t offset);

// "<origin>:<line>:<col>: error E02: <message>"
std::string format_diagnostic(const Diagnostic& d, std::string_view text, std::string_view origin);

}  // namespace texpic
