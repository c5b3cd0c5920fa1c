// texpic: convert scenes and SVG drawings to LaTeX picture code, lint
// picture code, render previews and check round-trip fidelity.

#include <CLI11.hpp>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "texpic/emitter.hpp"
#include "texpic/error.hpp"
#include "texpic/fidelity.hpp"
#include "texpic/parser.hpp"
#include "texpic/scene_io.hpp"
#include "texpic/svg_import.hpp"

namespace {

using namespace texpic;

constexpr int kOk = 0;
constexpr int kSemantic = 1;
constexpr int kOperational = 2;

struct Flags {
  std::string input;
  std::string output;
  std::string format;
  std::string line_mode = "qbezier";
  std::string circle_mode = "native";
  std::string unitlength;
  double t_step = 0.01;
  double scale = 1.0;
  double max_distance = 1.5;
  bool strict = false;
};

enum class InputKind { Scene, Svg, Tex };

InputKind input_kind(const Flags& f) {
  std::string kind = f.format;
  if (kind.empty()) {
    const auto dot = f.input.rfind('.');
    kind = dot == std::string::npos ? "" : f.input.substr(dot + 1);
  }
  if (kind == "scene") return InputKind::Scene;
  if (kind == "svg") return InputKind::Svg;
  if (kind == "tex") return InputKind::Tex;
  throw Error(ErrorCode::Io, "cannot tell the input format of '" + f.input + "' (use --format)");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const Flags& f, const std::string& text) {
  if (f.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(f.output, std::ios::binary);
  if (!out || !(out << text)) throw Error(ErrorCode::Io, "cannot write '" + f.output + "'");
}

EmitOptions emit_options(const Flags& f) {
  EmitOptions opts;
  if (f.line_mode == "native-when-exact") {
    opts.line_mode = LineMode::NativeWhenExact;
  } else if (f.line_mode != "qbezier") {
    throw Error(ErrorCode::Domain, "unknown --line-mode '" + f.line_mode + "'");
  }
  if (f.circle_mode.rfind("quads:", 0) == 0) {
    const std::string n = f.circle_mode.substr(6);
    int arcs = 0;
    const auto res = std::from_chars(n.data(), n.data() + n.size(), arcs);
    if (res.ec != std::errc{} || res.ptr != n.data() + n.size() || arcs < 4) {
      throw Error(ErrorCode::Domain, "--circle-mode quads:N needs N >= 4");
    }
    opts.circle_quads = arcs;
  } else if (f.circle_mode != "native") {
    throw Error(ErrorCode::Domain, "unknown --circle-mode '" + f.circle_mode + "'");
  }
  if (!f.unitlength.empty()) opts.unitlength = f.unitlength;
  return opts;
}

void print_svg_diagnostics(const Flags& f, const std::vector<Diagnostic>& diags) {
  for (const Diagnostic& d : diags) {
    std::cerr << f.input << ": " << (d.is_error() ? "error " : "warning ") << rule_id(d.rule) << ": "
              << d.message << '\n';
  }
}

// Scene from a .scene or .svg input; the bool reports diagnostics.
std::pair<Scene, bool> load_scene(const Flags& f) {
  const std::string text = read_file(f.input);
  if (input_kind(f) == InputKind::Scene) return {read_scene(text), false};
  if (input_kind(f) == InputKind::Svg) {
    ImportResult imported = import_svg(text, {f.scale, f.strict});
    print_svg_diagnostics(f, imported.diagnostics);
    return {std::move(imported.scene), !imported.diagnostics.empty()};
  }
  throw Error(ErrorCode::Io, "expected a .scene or .svg input");
}

int run_convert(const Flags& f) {
  const EmitOptions opts = emit_options(f);
  const auto [scene, diagnosed] = load_scene(f);
  write_output(f, emit_scene(scene, opts));
  return f.strict && diagnosed ? kSemantic : kOk;
}

int run_check(const Flags& f) {
  const std::string text = read_file(f.input);
  ParseResult parsed;
  try {
    parsed = parse_picture(text);
  } catch (const ParseError& e) {
    std::cerr << format_diagnostic(e.diagnostic(), text, f.input) << '\n';
    return kOperational;
  }
  for (const Diagnostic& d : parsed.diagnostics) {
    std::cerr << format_diagnostic(d, text, f.input) << '\n';
  }
  return has_errors(parsed.diagnostics) ? kSemantic : kOk;
}

int run_render(const Flags& f) {
  if (input_kind(f) == InputKind::Tex) {
    const std::string text = read_file(f.input);
    const ParseResult parsed = parse_picture(text);
    for (const Diagnostic& d : parsed.diagnostics) {
      std::cerr << format_diagnostic(d, text, f.input) << '\n';
    }
    const Scene scene = doc_to_scene(parsed.doc, {false, {}});
    const double height = std::max(parsed.doc.height, scene_bbox(scene).height());
    write_output(f, render_preview(scene, height));
    return kOk;
  }
  const auto [scene, diagnosed] = load_scene(f);
  const NormalizedScene norm = normalize(scene);
  write_output(f, render_preview(norm.scene, norm.height));
  return f.strict && diagnosed ? kSemantic : kOk;
}

int run_roundtrip(const Flags& f) {
  const EmitOptions opts = emit_options(f);
  FlattenPolicy policy;
  policy.t_step = f.t_step;
  const auto [scene, diagnosed] = load_scene(f);
  const double d = roundtrip_distance(scene, opts, policy);
  std::cout << "hausdorff " << format_number(d) << '\n';
  if (f.strict && diagnosed) return kSemantic;
  return d <= f.max_distance ? kOk : kSemantic;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"LaTeX picture environment compiler and linter", "texpic"};
  app.require_subcommand(1);
  Flags f;

  const auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("input", f.input, "Input file (.scene, .svg or .tex)")->required();
    cmd->add_option("--format", f.format, "Override the input format")
        ->check(CLI::IsMember({"scene", "svg", "tex"}));
  };
  const auto add_emit = [&](CLI::App* cmd) {
    cmd->add_option("--line-mode", f.line_mode, "qbezier | native-when-exact");
    cmd->add_option("--circle-mode", f.circle_mode, "native | quads:N");
    cmd->add_option("--unitlength", f.unitlength, "Prepend \\setlength{\\unitlength}{S}");
  };
  const auto add_import = [&](CLI::App* cmd) {
    cmd->add_option("--scale", f.scale, "SVG user units to picture units")->check(CLI::PositiveNumber);
    cmd->add_flag("--strict", f.strict, "Fail on skipped SVG content");
  };

  CLI::App* convert = app.add_subcommand("convert", "Emit picture environment code");
  add_input(convert);
  add_emit(convert);
  add_import(convert);
  convert->add_option("-o", f.output, "Output path (default: stdout)");

  CLI::App* check = app.add_subcommand("check", "Lint picture environment code");
  add_input(check);

  CLI::App* render = app.add_subcommand("render", "Write an SVG preview");
  add_input(render);
  add_import(render);
  render->add_option("-o", f.output, "Output path (default: stdout)");

  CLI::App* roundtrip = app.add_subcommand("roundtrip", "Measure emit/parse fidelity");
  add_input(roundtrip);
  add_emit(roundtrip);
  add_import(roundtrip);
  roundtrip->add_option("--t-step", f.t_step, "Curve flattening step");
  roundtrip->add_option("--max-distance", f.max_distance, "Hausdorff threshold");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kOperational;
  }

  try {
    if (*convert) return run_convert(f);
    if (*check) return run_check(f);
    if (*render) return run_render(f);
    return run_roundtrip(f);
  } catch (const Error& e) {
    std::cerr << "texpic: " << e.what() << '\n';
    if (e.code() == ErrorCode::UnsupportedFeature || e.code() == ErrorCode::LintFailed) return kSemantic;
    return kOperational;
  } catch (const std::exception& e) {
    std::cerr << "texpic: " << e.what() << '\n';
    return kOperational;
  }
}
