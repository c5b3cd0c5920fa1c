#include "texpic/svg_import.hpp"

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>
#include <charconv>
#include <optional>
#include <sstream>
#include <string>

#include "texpic/error.hpp"

namespace texpic {
namespace {

namespace pt = boost::property_tree;

// Elements that carry no geometry of their own.
bool is_inert(std::string_view name) {
  return name == "<xmlattr>" || name == "<xmlcomment>" || name == "defs" || name == "marker" ||
         name == "title" || name == "desc" || name == "metadata";
}

std::optional<std::string> attribute(const pt::ptree& node, const std::string& name) {
  if (const auto attrs = node.get_child_optional("<xmlattr>")) {
    if (const auto v = attrs->get_optional<std::string>(name)) return *v;
  }
  return std::nullopt;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// "12", "12.5px", "-3e2". Other units are not supported.
std::optional<double> parse_length(std::string_view s) {
  s = trim(s);
  if (s.size() > 2 && s.substr(s.size() - 2) == "px") s.remove_suffix(2);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc{} || res.ptr != s.data() + s.size() || s.empty()) return std::nullopt;
  return v;
}

std::vector<double> parse_number_list(std::string_view s) {
  std::vector<double> out;
  std::string token;
  std::string all(s);
  for (char& c : all) {
    if (c == ',') c = ' ';
  }
  std::istringstream words(all);
  while (words >> token) {
    const auto v = parse_length(token);
    if (!v) return {};
    out.push_back(*v);
  }
  return out;
}

struct Frame {
  double min_x = 0.0;
  double top = 0.0;
};

class SvgImporter {
 public:
  explicit SvgImporter(const ImportOptions& opts) : opts_(opts) {}

  ImportResult run(std::string_view text) {
    pt::ptree tree;
    try {
      std::istringstream in{std::string(text)};
      pt::read_xml(in, tree);
    } catch (const pt::xml_parser_error& e) {
      throw Error(ErrorCode::MalformedInput, std::string("SVG is not well-formed XML: ") + e.what());
    }
    const auto root = tree.get_child_optional("svg");
    if (!root) throw Error(ErrorCode::MalformedInput, "SVG document has no <svg> root");
    frame_ = read_frame(*root);
    walk(*root);
    ImportResult out;
    out.scene = from_canvas(screen_, {frame_.min_x * opts_.scale, frame_.top * opts_.scale});
    out.diagnostics = std::move(diags_);
    return out;
  }

 private:
  Frame read_frame(const pt::ptree& svg) {
    if (const auto vb = attribute(svg, "viewBox")) {
      const auto v = parse_number_list(*vb);
      if (v.size() != 4 || v[2] < 0.0 || v[3] < 0.0) {
        throw Error(ErrorCode::MalformedInput, "viewBox must hold four numbers");
      }
      return {v[0], v[1] + v[3]};
    }
    const auto h = attribute(svg, "height");
    const auto w = attribute(svg, "width");
    if (!h || !w) throw Error(ErrorCode::MalformedInput, "<svg> needs a viewBox or width/height");
    const auto height = parse_length(*h);
    if (!height || !parse_length(*w)) {
      throw Error(ErrorCode::MalformedInput, "<svg> width/height must be plain user-unit lengths");
    }
    return {0.0, *height};
  }

  void skip(const std::string& what) {
    if (opts_.strict) throw Error(ErrorCode::UnsupportedFeature, what);
    diags_.push_back({Rule::W03_Unsupported, {}, what + "; element skipped"});
  }

  Point screen(double x, double y) const { return {x * opts_.scale, y * opts_.scale}; }

  double length_attr(const pt::ptree& node, const std::string& name, bool& ok) const {
    const auto raw = attribute(node, name);
    if (!raw) return 0.0;  // SVG lacuna value
    const auto v = parse_length(*raw);
    if (!v) {
      ok = false;
      return 0.0;
    }
    return *v;
  }

  void add(Primitive p, const std::string& where) {
    try {
      screen_.add(std::move(p));
    } catch (const Error& e) {
      skip(where + ": " + e.what());
    }
  }

  void walk(const pt::ptree& parent) {
    for (const auto& [name, node] : parent) {
      if (is_inert(name)) continue;
      const std::string where = "<" + name + "> #" + std::to_string(++element_count_);
      if (attribute(node, "transform")) {
        skip(where + " uses a transform attribute");
        continue;
      }
      if (name == "g" || name == "svg") {
        walk(node);
      } else if (name == "line") {
        import_line(node, where);
      } else if (name == "rect") {
        import_rect(node, where);
      } else if (name == "circle") {
        import_circle(node, where);
      } else if (name == "text") {
        import_text(node, where);
      } else if (name == "path") {
        import_path(node, where);
      } else {
        skip(where + " is not a supported element");
      }
    }
  }

  void import_line(const pt::ptree& node, const std::string& where) {
    bool ok = true;
    const double x1 = length_attr(node, "x1", ok), y1 = length_attr(node, "y1", ok);
    const double x2 = length_attr(node, "x2", ok), y2 = length_attr(node, "y2", ok);
    if (!ok) return skip(where + " has an unsupported coordinate");
    const auto marker = attribute(node, "marker-end");
    const Point a = screen(x1, y1), b = screen(x2, y2);
    const bool arrow = marker && trim(*marker) != "none" && a != b;
    add(Segment{a, b, arrow}, where);
  }

  void import_rect(const pt::ptree& node, const std::string& where) {
    bool ok = true;
    const double x = length_attr(node, "x", ok), y = length_attr(node, "y", ok);
    const double w = length_attr(node, "width", ok), h = length_attr(node, "height", ok);
    if (!ok) return skip(where + " has an unsupported coordinate");
    // the screen-space corner is the top-left one; the flip turns it into
    // the bottom-left corner
    add(Rectangle{screen(x, y), w * opts_.scale, h * opts_.scale}, where);
  }

  void import_circle(const pt::ptree& node, const std::string& where) {
    bool ok = true;
    const double cx = length_attr(node, "cx", ok), cy = length_attr(node, "cy", ok);
    const double r = length_attr(node, "r", ok);
    if (!ok) return skip(where + " has an unsupported coordinate");
    const auto fill = attribute(node, "fill");
    const bool filled = !fill || (trim(*fill) != "none" && trim(*fill) != "transparent");
    add(Circle{screen(cx, cy), 2.0 * r * opts_.scale, filled}, where);
  }

  static void collect_text(const pt::ptree& node, std::string& out) {
    out += node.data();
    for (const auto& [name, child] : node) {
      if (name == "tspan") collect_text(child, out);
    }
  }

  void import_text(const pt::ptree& node, const std::string& where) {
    const auto xs = parse_number_list(attribute(node, "x").value_or("0"));
    const auto ys = parse_number_list(attribute(node, "y").value_or("0"));
    if (xs.empty() || ys.empty()) return skip(where + " has an unsupported coordinate");
    std::string raw;
    collect_text(node, raw);
    std::string text;
    bool space = false;
    for (char c : trim(raw)) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        space = true;
        continue;
      }
      if (space) text += ' ';
      space = false;
      text += c;
    }
    add(Label{screen(xs.front(), ys.front()), text}, where);
  }

  void import_path(const pt::ptree& node, const std::string& where) {
    const auto d = attribute(node, "d");
    if (!d) return skip(where + " has no path data");
    std::vector<PathPiece> pieces;
    try {
      pieces = parse_path_data(*d);
    } catch (const Error& e) {
      return skip(where + ": " + e.what());
    }
    for (const PathPiece& piece : pieces) {
      if (const auto* s = std::get_if<Segment>(&piece)) {
        add(Segment{screen(s->p0.x, s->p0.y), screen(s->p1.x, s->p1.y), false}, where);
      } else {
        const auto& q = std::get<QuadBezier>(piece);
        add(QuadBezier{screen(q.p0.x, q.p0.y), screen(q.c.x, q.c.y), screen(q.p1.x, q.p1.y)}, where);
      }
    }
  }

  const ImportOptions& opts_;
  Frame frame_;
  Scene screen_;
  std::vector<Diagnostic> diags_;
  int element_count_ = 0;
};

}  // namespace

ImportResult import_svg(std::string_view text, const ImportOptions& opts) {
  if (!(opts.scale > 0.0) || !std::isfinite(opts.scale)) {
    throw Error(ErrorCode::Domain, "import scale must be finite and positive");
  }
  return SvgImporter(opts).run(text);
}

}  // namespace texpic
