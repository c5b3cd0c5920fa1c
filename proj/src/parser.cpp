#include "texpic/parser.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>
#include <string>

#include "texpic/slope.hpp"

namespace texpic {
namespace {

// Half the diagonal of the rounding cell, with headroom: a stroke whose
// control sits this close to its chord is a straight line drawn with
// rounded integer coordinates.
constexpr double kStraightTolerance = 1.0;
constexpr double kCollinearTolerance = 1e-6;
constexpr double kBarbLengthSlack = 2.0;
constexpr double kBarbAngleSlack = 0.3;

bool is_letter(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool is_space(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f'; }

class Cursor {
 public:
  Cursor(std::string_view text, std::size_t pos = 0) : text_(text), pos_(pos) {}

  std::size_t pos() const { return pos_; }
  void seek(std::size_t pos) { pos_ = pos; }
  bool eof() const { return pos_ >= text_.size(); }
  char peek() const { return eof() ? '\0' : text_[pos_]; }
  std::string_view text() const { return text_; }

  void skip_space() {
    while (!eof()) {
      const char c = text_[pos_];
      if (is_space(c)) {
        ++pos_;
      } else if (c == '%') {
        while (!eof() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  bool consume(char c) {
    skip_space();
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  bool consume_word(std::string_view word) {
    skip_space();
    if (text_.substr(pos_, word.size()) != word) return false;
    pos_ += word.size();
    return true;
  }

  // \name (letters) or \c (single non-letter). Empty if not at a backslash.
  std::string_view control_word() {
    if (peek() != '\\') return {};
    const std::size_t start = pos_++;
    if (!eof() && is_letter(text_[pos_])) {
      while (!eof() && is_letter(text_[pos_])) ++pos_;
    } else if (!eof()) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  // TeX-style decimal: optional sign, digits with an optional point.
  std::optional<double> number() {
    skip_space();
    const std::size_t start = pos_;
    bool negative = false;
    if (peek() == '+' || peek() == '-') {
      negative = peek() == '-';
      ++pos_;
      skip_space();
    }
    const std::size_t digits = pos_;
    bool any_digit = false;
    while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
      any_digit = true;
    }
    if (peek() == '.') {
      ++pos_;
      while (!eof() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
        any_digit = true;
      }
    }
    if (!any_digit) {
      pos_ = start;
      return std::nullopt;
    }
    std::string token(text_.substr(digits, pos_ - digits));
    if (token.front() == '.') token.insert(token.begin(), '0');
    if (token.back() == '.') token.pop_back();
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{}) {
      pos_ = start;
      return std::nullopt;
    }
    return negative ? -v : v;
  }

  // "(x,y)"
  std::optional<Point> pair() {
    const std::size_t start = pos_;
    Point p;
    std::optional<double> x, y;
    if (consume('(') && (x = number()) && consume(',') && (y = number()) && consume(')')) {
      p = {*x, *y};
      return p;
    }
    pos_ = start;
    return std::nullopt;
  }

  struct Group {
    std::size_t end = 0;  // one past the closing bracket
    int max_depth = 0;    // 1 for a flat group
  };

  // At an opening bracket, find its partner honoring backslash escapes.
  std::optional<Group> group(char open, char close) const {
    if (peek() != open) return std::nullopt;
    Group g;
    int depth = 0;
    for (std::size_t i = pos_; i < text_.size(); ++i) {
      const char c = text_[i];
      if (c == '\\') {
        ++i;
      } else if (c == '%' && open == '{') {
        while (i < text_.size() && text_[i] != '\n') ++i;
      } else if (c == open) {
        g.max_depth = std::max(g.max_depth, ++depth);
      } else if (c == close) {
        if (--depth == 0) {
          g.end = i + 1;
          return g;
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::string_view text_;
  std::size_t pos_;
};

std::string collapse_space(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && is_space(s[b])) ++b;
  while (e > b && is_space(s[e - 1])) --e;
  std::string out;
  for (std::size_t i = b; i < e; ++i) {
    if (is_space(s[i])) {
      out += ' ';
      while (i + 1 < e && is_space(s[i + 1])) ++i;
    } else {
      out += s[i];
    }
  }
  return out;
}

// Interprets the body of \put{...} as one of the known commands.
std::optional<PutBody> parse_known_body(std::string_view body) {
  Cursor cur(body);
  cur.skip_space();
  const std::string_view word = cur.control_word();
  std::optional<PutBody> out;
  if (word == "\\line" || word == "\\vector") {
    const auto slope = cur.pair();
    if (!slope || !cur.consume('{')) return std::nullopt;
    const auto len = cur.number();
    if (!len || !cur.consume('}')) return std::nullopt;
    if (word == "\\line") {
      out = LineCmd{slope->x, slope->y, *len};
    } else {
      out = VectorCmd{slope->x, slope->y, *len};
    }
  } else if (word == "\\circle") {
    const bool filled = cur.consume('*');
    if (!cur.consume('{')) return std::nullopt;
    const auto d = cur.number();
    if (!d || !cur.consume('}')) return std::nullopt;
    out = CircleCmd{*d, filled};
  } else {
    return std::nullopt;
  }
  cur.skip_space();
  if (!cur.eof()) return std::nullopt;
  return out;
}

class PictureParser {
 public:
  explicit PictureParser(std::string_view text) : text_(text), cur_(text) {}

  ParseResult run() {
    parse_header();
    parse_body();
    ParseResult out{std::move(doc_), std::move(diags_)};
    auto lints = lint(out.doc);
    out.diagnostics.insert(out.diagnostics.end(), lints.begin(), lints.end());
    return out;
  }

 private:
  void error(Span span, std::string message) {
    diags_.push_back({Rule::E04_Syntax, span, std::move(message)});
  }

  [[noreturn]] void fatal(Span span, std::string message) {
    throw ParseError({Rule::E04_Syntax, span, std::move(message)});
  }

  void parse_header() {
    std::size_t search = 0;
    while (true) {
      const std::size_t at = text_.find("\\begin", search);
      if (at == std::string_view::npos) fatal({0, 0}, "missing \\begin{picture}");
      cur_.seek(at);
      cur_.control_word();
      if (cur_.pos() == at + 6 && cur_.consume('{') && cur_.consume_word("picture") &&
          cur_.consume('}')) {
        const std::size_t header_end = cur_.pos();
        const auto dims = cur_.pair();
        if (!dims) fatal({at, header_end}, "\\begin{picture} needs (width,height)");
        if (dims->x < 0.0 || dims->y < 0.0) {
          fatal({at, cur_.pos()}, "picture dimensions must be non-negative");
        }
        doc_.width = dims->x;
        doc_.height = dims->y;
        if (const auto origin = cur_.pair()) doc_.origin = *origin;
        return;
      }
      search = at + 1;
    }
  }

  void skip_arguments() {
    while (true) {
      const std::size_t save = cur_.pos();
      cur_.skip_space();
      std::optional<Cursor::Group> g;
      switch (cur_.peek()) {
        case '(': g = cur_.group('(', ')'); break;
        case '[': g = cur_.group('[', ']'); break;
        case '{': g = cur_.group('{', '}'); break;
        default: break;
      }
      if (!g) {
        cur_.seek(save);
        return;
      }
      cur_.seek(g->end);
    }
  }

  // Resume scanning at the next backslash after a broken command.
  void resync(std::size_t from) {
    const std::size_t next = text_.find('\\', from + 1);
    cur_.seek(next == std::string_view::npos ? text_.size() : next);
  }

  void parse_body() {
    while (true) {
      cur_.skip_space();
      if (cur_.eof()) {
        error({text_.size(), text_.size()}, "missing \\end{picture}");
        return;
      }
      const std::size_t start = cur_.pos();
      if (cur_.peek() != '\\') {
        std::size_t end = start;
        while (end < text_.size() && text_[end] != '\\') ++end;
        while (is_space(text_[end - 1])) --end;
        error({start, end}, "unexpected text '" + std::string(text_.substr(start, end - start)) + "'");
        cur_.seek(end);
        continue;
      }
      const std::string_view word = cur_.control_word();
      if (word == "\\end") {
        if (cur_.consume('{') && cur_.consume_word("picture") && cur_.consume('}')) return;
        error({start, cur_.pos()}, "unexpected \\end");
        resync(start);
      } else if (word == "\\qbezier") {
        parse_qbezier(start);
      } else if (word == "\\put") {
        parse_put(start);
      } else {
        skip_arguments();
        error({start, cur_.pos()}, "unsupported command " + std::string(word));
      }
    }
  }

  void parse_qbezier(std::size_t start) {
    cur_.skip_space();
    if (cur_.peek() == '[') {
      skip_arguments();
      error({start, cur_.pos()}, "\\qbezier with a point count is not supported");
      return;
    }
    const auto p0 = cur_.pair();
    const auto c = p0 ? cur_.pair() : std::nullopt;
    const auto p1 = c ? cur_.pair() : std::nullopt;
    if (!p1) {
      error({start, std::max(cur_.pos(), start + 8)}, "\\qbezier needs three (x,y) points");
      resync(start);
      return;
    }
    doc_.commands.push_back({QbezierCmd{*p0, *c, *p1}, {start, cur_.pos()}});
  }

  void parse_put(std::size_t start) {
    const auto at = cur_.pair();
    if (!at) {
      error({start, start + 4}, "\\put needs an (x,y) position");
      resync(start);
      return;
    }
    cur_.skip_space();
    const auto g = cur_.group('{', '}');
    if (!g) {
      if (cur_.peek() == '{') {
        error({start, text_.size()}, "unbalanced braces in \\put body");
        cur_.seek(text_.size());
      } else {
        error({start, cur_.pos()}, "\\put needs a {body}");
        resync(start);
      }
      return;
    }
    const Span span{start, g->end};
    const std::string_view body = text_.substr(cur_.pos() + 1, g->end - cur_.pos() - 2);
    cur_.seek(g->end);
    if (g->max_depth > 2) {
      error(span, "\\put body nests braces more than one level deep");
      return;
    }
    std::optional<PutBody> known = parse_known_body(body);
    if (known) {
      if (const auto* circle = std::get_if<CircleCmd>(&*known); circle && !(circle->diameter > 0.0)) {
        error(span, "circle diameter must be positive");
        return;
      }
      doc_.commands.push_back({PutCmd{*at, std::move(*known)}, span});
      return;
    }
    std::string text = collapse_space(body);
    if (text.empty()) {
      error(span, "empty \\put body");
      return;
    }
    doc_.commands.push_back({PutCmd{*at, TextCmd{std::move(text)}}, span});
  }

  std::string_view text_;
  Cursor cur_;
  PictureDoc doc_;
  std::vector<Diagnostic> diags_;
};

bool is_integral(double v) { return std::fabs(v - std::nearbyint(v)) <= 1e-9; }

// Displacement drawn by \line(a,b){len} / \vector(a,b){len}.
Vec2 stroke_offset(double a, double b, double len) {
  if (a == 0.0) return {0.0, b > 0.0 ? len : (b < 0.0 ? -len : 0.0)};
  const double dx = a > 0.0 ? len : -len;
  return {dx, dx * b / a};
}

struct Stroke {
  Point p0;
  Point p1;
};

std::optional<Stroke> straight_stroke(const PictureCommand& cmd) {
  if (const auto* q = std::get_if<QbezierCmd>(&cmd)) {
    if (q->p0 == q->p1) return std::nullopt;
    if (distance_to_segment(q->c, q->p0, q->p1) > kStraightTolerance) return std::nullopt;
    return Stroke{q->p0, q->p1};
  }
  const auto& put = std::get<PutCmd>(cmd);
  if (const auto* line = std::get_if<LineCmd>(&put.body)) {
    const Vec2 d = stroke_offset(line->a, line->b, line->length);
    if (d.x == 0.0 && d.y == 0.0) return std::nullopt;
    return Stroke{put.at, put.at + d};
  }
  return std::nullopt;
}

bool is_barb(const Stroke& barb, Point tip, Vec2 back, const ArrowStyle& style, double& side) {
  if (barb.p0 != tip) return false;
  const Vec2 v = barb.p1 - tip;
  const double len = norm(v);
  if (std::fabs(len - style.barb_length) > kBarbLengthSlack) return false;
  const double angle = std::atan2(std::fabs(cross(back, v)), dot(back, v));
  if (std::fabs(angle - style.barb_half_angle) > kBarbAngleSlack) return false;
  side = cross(back, v);
  return side != 0.0;
}

bool collinear_within(Point p0, Point c, Point p1) {
  const Vec2 chord = p1 - p0;
  const double len = norm(chord);
  if (len == 0.0) return c == p0;
  if (std::fabs(cross(c - p0, chord)) / len > kCollinearTolerance) return false;
  const double t = dot(c - p0, chord) / (len * len);
  return t >= -kCollinearTolerance && t <= 1.0 + kCollinearTolerance;
}

}  // namespace

ParseError::ParseError(Diagnostic diagnostic)
    : Error(ErrorCode::MalformedInput, diagnostic.message), diagnostic_(std::move(diagnostic)) {}

ParseResult parse_picture(std::string_view text) { return PictureParser(text).run(); }

std::vector<ArrowMatch> find_arrows(const PictureDoc& doc, const ArrowStyle& style) {
  std::vector<ArrowMatch> out;
  const auto& cmds = doc.commands;
  for (std::size_t i = 0; i + 2 < cmds.size();) {
    const auto shaft = straight_stroke(cmds[i].command);
    const auto first = shaft ? straight_stroke(cmds[i + 1].command) : std::nullopt;
    const auto second = first ? straight_stroke(cmds[i + 2].command) : std::nullopt;
    if (second) {
      const Vec2 reverse = shaft->p0 - shaft->p1;
      const Vec2 back = (1.0 / norm(reverse)) * reverse;
      double side1 = 0.0, side2 = 0.0;
      if (is_barb(*first, shaft->p1, back, style, side1) &&
          is_barb(*second, shaft->p1, back, style, side2) && (side1 < 0.0) != (side2 < 0.0)) {
        out.push_back({i, i + 1, i + 2});
        i += 3;
        continue;
      }
    }
    ++i;
  }
  return out;
}

std::vector<Diagnostic> lint(const PictureDoc& doc, const ArrowStyle& style) {
  std::vector<Diagnostic> out;
  std::vector<bool> barb(doc.commands.size(), false);
  for (const ArrowMatch& m : find_arrows(doc, style)) {
    barb[m.first_barb] = true;
    barb[m.second_barb] = true;
  }
  const double x0 = doc.origin.x, y0 = doc.origin.y;
  const double x1 = x0 + doc.width, y1 = y0 + doc.height;
  const auto outside = [&](Point p) { return p.x < x0 || p.x > x1 || p.y < y0 || p.y > y1; };

  for (std::size_t i = 0; i < doc.commands.size(); ++i) {
    const auto& [cmd, span] = doc.commands[i];
    std::vector<Point> anchors;
    if (const auto* q = std::get_if<QbezierCmd>(&cmd)) {
      if (!barb[i]) anchors = {q->p0, q->c, q->p1};
    } else {
      const auto& put = std::get<PutCmd>(cmd);
      anchors = {put.at};
      const auto check_slope = [&](double a, double b, double len, SlopeKind kind) {
        if (is_integral(a) && is_integral(b)) {
          auto found = validate_slope(std::llround(a), std::llround(b), kind, span);
          out.insert(out.end(), found.begin(), found.end());
        }
        if (!is_integral(a) || !is_integral(b) || !is_integral(len)) {
          out.push_back({Rule::W02_NonIntegerArg, span,
                         "slope and length arguments should be integers"});
        }
      };
      if (const auto* line = std::get_if<LineCmd>(&put.body)) {
        check_slope(line->a, line->b, line->length, SlopeKind::Line);
      } else if (const auto* vec = std::get_if<VectorCmd>(&put.body)) {
        check_slope(vec->a, vec->b, vec->length, SlopeKind::Vector);
      }
    }
    for (Point p : anchors) {
      if (outside(p)) {
        out.push_back({Rule::W01_OutsideBox, span,
                       "point (" + format_number(p.x) + "," + format_number(p.y) +
                           ") lies outside the picture box"});
        break;
      }
    }
  }
  return out;
}

Scene doc_to_scene(const PictureDoc& doc, const RecoveryOptions& opts) {
  const auto findings = lint(doc, opts.arrow_style);
  for (const Diagnostic& d : findings) {
    if (d.is_error()) throw Error(ErrorCode::LintFailed, std::string(rule_id(d.rule)) + ": " + d.message);
  }

  const std::size_t n = doc.commands.size();
  std::vector<int> role(n, 0);  // 1 = arrow shaft, 2 = barb
  if (opts.recognize_arrows) {
    for (const ArrowMatch& m : find_arrows(doc, opts.arrow_style)) {
      role[m.shaft] = 1;
      role[m.first_barb] = 2;
      role[m.second_barb] = 2;
    }
  }

  const Vec2 shift{-doc.origin.x, -doc.origin.y};
  const auto place = [&](Point p) { return p + shift; };

  Scene scene;
  for (std::size_t i = 0; i < n; ++i) {
    if (role[i] == 2) continue;
    const PictureCommand& cmd = doc.commands[i].command;
    if (role[i] == 1) {
      const auto shaft = straight_stroke(cmd);
      scene.add(Segment{place(shaft->p0), place(shaft->p1), true});
      continue;
    }
    if (const auto* q = std::get_if<QbezierCmd>(&cmd)) {
      if (collinear_within(q->p0, q->c, q->p1)) {
        scene.add(Segment{place(q->p0), place(q->p1), false});
      } else {
        scene.add(QuadBezier{place(q->p0), place(q->c), place(q->p1)});
      }
      continue;
    }
    const auto& put = std::get<PutCmd>(cmd);
    const Point at = place(put.at);
    std::visit(
        [&](const auto& body) {
          using T = std::decay_t<decltype(body)>;
          if constexpr (std::is_same_v<T, LineCmd> || std::is_same_v<T, VectorCmd>) {
            const Point end = at + stroke_offset(body.a, body.b, body.length);
            scene.add(Segment{at, end, std::is_same_v<T, VectorCmd> && end != at});
          } else if constexpr (std::is_same_v<T, CircleCmd>) {
            scene.add(Circle{at, body.diameter, body.filled});
          } else {
            scene.add(Label{at, body.text});
          }
        },
        put.body);
  }
  return scene;
}

}  // namespace texpic
