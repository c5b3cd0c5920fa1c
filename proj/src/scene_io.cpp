#include "texpic/scene_io.hpp"

#include <charconv>
#include <vector>

#include "texpic/error.hpp"
#include "texpic/picture.hpp"

namespace texpic {
namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

class LineReader {
 public:
  LineReader(std::string_view line, std::size_t number) : line_(line), number_(number) {}

  std::string_view word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < line_.size() && !is_blank(line_[pos_])) ++pos_;
    return line_.substr(start, pos_ - start);
  }

  // Consumes `word` if it is the next token.
  bool keyword(std::string_view word) {
    skip();
    const std::string_view tail = line_.substr(pos_);
    if (tail.substr(0, word.size()) != word) return false;
    if (tail.size() > word.size() && !is_blank(tail[word.size()])) return false;
    pos_ += word.size();
    return true;
  }

  double number() {
    const std::string_view tok = word();
    if (tok.empty()) fail("expected a number");
    std::string_view digits = tok;
    if (digits.front() == '+') digits.remove_prefix(1);
    double v = 0.0;
    const auto res = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (res.ec != std::errc{} || res.ptr != digits.data() + digits.size()) {
      fail("'" + std::string(tok) + "' is not a number");
    }
    return v;
  }

  std::string_view rest() {
    skip();
    std::string_view r = line_.substr(pos_);
    while (!r.empty() && is_blank(r.back())) r.remove_suffix(1);
    pos_ = line_.size();
    return r;
  }

  void finish() {
    skip();
    if (pos_ < line_.size() && line_[pos_] != '#') {
      fail("unexpected trailing '" + std::string(line_.substr(pos_)) + "'");
    }
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::MalformedInput, "scene line " + std::to_string(number_) + ": " + why);
  }

 private:
  void skip() {
    while (pos_ < line_.size() && is_blank(line_[pos_])) ++pos_;
  }

  std::string_view line_;
  std::size_t number_;
  std::size_t pos_ = 0;
};

Primitive read_primitive(LineReader& in, std::string_view kind) {
  if (kind == "segment" || kind == "vector") {
    const double x0 = in.number(), y0 = in.number(), x1 = in.number(), y1 = in.number();
    in.finish();
    return Segment{{x0, y0}, {x1, y1}, kind == "vector"};
  }
  if (kind == "rect") {
    const double x = in.number(), y = in.number(), w = in.number(), h = in.number();
    in.finish();
    return Rectangle{{x, y}, w, h};
  }
  if (kind == "circle") {
    const double x = in.number(), y = in.number(), d = in.number();
    const bool filled = in.keyword("filled");
    in.finish();
    return Circle{{x, y}, d, filled};
  }
  if (kind == "qbezier") {
    const double x0 = in.number(), y0 = in.number(), cx = in.number(), cy = in.number(),
                 x1 = in.number(), y1 = in.number();
    in.finish();
    return QuadBezier{{x0, y0}, {cx, cy}, {x1, y1}};
  }
  if (kind == "label") {
    const double x = in.number(), y = in.number();
    return Label{{x, y}, std::string(in.rest())};
  }
  in.fail("unknown primitive '" + std::string(kind) + "'");
}

}  // namespace

Scene read_scene(std::string_view text) {
  Scene scene;
  std::size_t number = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    const std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++number;
    LineReader in(line, number);
    const std::string_view kind = in.word();
    if (kind.empty() || kind.front() == '#') continue;
    Primitive prim = read_primitive(in, kind);
    try {
      scene.add(std::move(prim));
    } catch (const Error& e) {
      in.fail(e.what());
    }
  }
  return scene;
}

std::string write_scene(const Scene& scene) {
  std::string out;
  const auto num = [&](double v) {
    out += ' ';
    out += format_number(v);
  };
  for (const auto& prim : scene) {
    std::visit(
        [&](const auto& p) {
          using T = std::decay_t<decltype(p)>;
          if constexpr (std::is_same_v<T, Segment>) {
            out += p.arrow ? "vector" : "segment";
            num(p.p0.x), num(p.p0.y), num(p.p1.x), num(p.p1.y);
          } else if constexpr (std::is_same_v<T, Rectangle>) {
            out += "rect";
            num(p.corner.x), num(p.corner.y), num(p.width), num(p.height);
          } else if constexpr (std::is_same_v<T, Circle>) {
            out += "circle";
            num(p.center.x), num(p.center.y), num(p.diameter);
            if (p.filled) out += " filled";
          } else if constexpr (std::is_same_v<T, QuadBezier>) {
            out += "qbezier";
            num(p.p0.x), num(p.p0.y), num(p.c.x), num(p.c.y), num(p.p1.x), num(p.p1.y);
          } else {
            out += "label";
            num(p.anchor.x), num(p.anchor.y);
            out += ' ';
            out += p.text;
          }
        },
        prim);
    out += '\n';
  }
  return out;
}

}  // namespace texpic
