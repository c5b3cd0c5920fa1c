#pragma once

#include <string>
#include <variant>
#include <vector>

#include "texpic/diagnostic.hpp"
#include "texpic/geometry.hpp"

namespace texpic {

// Commands of a picture environment. Numeric fields are reals so that
// parsed, possibly non-integer input round-trips; the emitter only ever
// fills them with integers.
struct LineCmd {
  double a = 1.0;
  double b = 0.0;
  double length = 0.0;

  friend bool operator==(const LineCmd&, const LineCmd&) = default;
};

struct VectorCmd {
  double a = 1.0;
  double b = 0.0;
  double length = 0.0;

  friend bool operator==(const VectorCmd&, const VectorCmd&) = default;
};

struct CircleCmd {
  double diameter = 1.0;
  bool filled = false;

  friend bool operator==(const CircleCmd&, const CircleCmd&) = default;
};

struct TextCmd {
  std::string text;

  friend bool operator==(const TextCmd&, const TextCmd&) = default;
};

using PutBody = std::variant<LineCmd, VectorCmd, CircleCmd, TextCmd>;

struct PutCmd {
  Point at;
  PutBody body;

  friend bool operator==(const PutCmd&, const PutCmd&) = default;
};

struct QbezierCmd {
  Point p0;
  Point c;
  Point p1;

  friend bool operator==(const QbezierCmd&, const QbezierCmd&) = default;
};

using PictureCommand = std::variant<PutCmd, QbezierCmd>;

struct SourceCommand {
  PictureCommand command;
  Span span;
};

struct PictureDoc {
  double width = 0.0;
  double height = 0.0;
  Point origin;  // optional (x,y) after the dimensions
  std::vector<SourceCommand> commands;
};

// Locale-independent shortest decimal; integral values print without a
// fractional part.
std::string format_number(double v);

// One command without trailing newline, e.g. \put(8,2){O}.
std::string format_command(const PictureCommand& cmd);

}  // namespace texpic
