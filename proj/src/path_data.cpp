#include "texpic/svg_import.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "texpic/error.hpp"

namespace texpic {
namespace {

class PathScanner {
 public:
  explicit PathScanner(std::string_view d) : d_(d) {}

  void skip_separators() {
    while (pos_ < d_.size() && (std::isspace(static_cast<unsigned char>(d_[pos_])) || d_[pos_] == ',')) {
      ++pos_;
    }
  }

  bool eof() {
    skip_separators();
    return pos_ >= d_.size();
  }

  bool at_number() {
    skip_separators();
    if (pos_ >= d_.size()) return false;
    const char c = d_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }

  char command() {
    skip_separators();
    return d_[pos_++];
  }

  // SVG number: sign, digits, optional fraction, optional exponent. "1.5.5"
  // reads as 1.5 then .5, "10-5" as 10 then -5.
  double number() {
    skip_separators();
    const std::size_t start = pos_;
    if (pos_ < d_.size() && (d_[pos_] == '+' || d_[pos_] == '-')) ++pos_;
    bool digits = false;
    while (pos_ < d_.size() && std::isdigit(static_cast<unsigned char>(d_[pos_]))) ++pos_, digits = true;
    if (pos_ < d_.size() && d_[pos_] == '.') {
      ++pos_;
      while (pos_ < d_.size() && std::isdigit(static_cast<unsigned char>(d_[pos_]))) ++pos_, digits = true;
    }
    if (!digits) fail(start, "expected a number");
    if (pos_ < d_.size() && (d_[pos_] == 'e' || d_[pos_] == 'E')) {
      std::size_t e = pos_ + 1;
      if (e < d_.size() && (d_[e] == '+' || d_[e] == '-')) ++e;
      if (e < d_.size() && std::isdigit(static_cast<unsigned char>(d_[e]))) {
        pos_ = e;
        while (pos_ < d_.size() && std::isdigit(static_cast<unsigned char>(d_[pos_]))) ++pos_;
      }
    }
    std::string token(d_.substr(start, pos_ - start));
    if (!token.empty() && token.front() == '+') token.erase(token.begin());
    double v = 0.0;
    const auto res = std::from_chars(token.data(), token.data() + token.size(), v);
    if (res.ec != std::errc{}) fail(start, "bad number '" + token + "'");
    return v;
  }

  Point point() {
    const double x = number();
    const double y = number();
    return {x, y};
  }

  [[noreturn]] void fail(std::size_t at, const std::string& why) const {
    throw Error(ErrorCode::MalformedInput, "path data at offset " + std::to_string(at) + ": " + why);
  }

  std::size_t pos() const { return pos_; }

 private:
  std::string_view d_;
  std::size_t pos_ = 0;
};

}  // namespace

std::vector<PathPiece> parse_path_data(std::string_view d) {
  PathScanner in(d);
  std::vector<PathPiece> out;
  Point current{0.0, 0.0};
  Point start{0.0, 0.0};
  char cmd = 0;
  in.skip_separators();
  const std::size_t first = in.pos();
  while (!in.eof()) {
    if (!in.at_number()) {
      const std::size_t at = in.pos();
      cmd = in.command();
      if (std::string_view("MmLlQqZz").find(cmd) == std::string_view::npos) {
        in.fail(at, std::string("unsupported path command '") + cmd + "'");
      }
      if (at == first && cmd != 'M' && cmd != 'm') {
        in.fail(at, "path data must start with a moveto");
      }
    } else if (cmd == 0) {
      in.fail(in.pos(), "path data must start with a command");
    } else if (cmd == 'Z' || cmd == 'z') {
      in.fail(in.pos(), "closepath takes no arguments");
    }

    const bool relative = std::islower(static_cast<unsigned char>(cmd)) != 0;
    const auto resolve = [&](Point p) { return relative ? current + Vec2{p.x, p.y} : p; };
    switch (cmd) {
      case 'M':
      case 'm':
        current = start = resolve(in.point());
        // further pairs are implicit linetos
        cmd = relative ? 'l' : 'L';
        break;
      case 'L':
      case 'l': {
        const Point next = resolve(in.point());
        out.emplace_back(Segment{current, next, false});
        current = next;
        break;
      }
      case 'Q':
      case 'q': {
        const Point c = resolve(in.point());
        const Point next = resolve(in.point());
        out.emplace_back(QuadBezier{current, c, next});
        current = next;
        break;
      }
      default:  // Z / z
        if (current != start) out.emplace_back(Segment{current, start, false});
        current = start;
        break;
    }
  }
  return out;
}

}  // namespace texpic
