#include <gtest/gtest.h>

#include <cmath>
#include <regex>
#include <sstream>

#include "texpic/emitter.hpp"
#include "texpic/error.hpp"
#include "texpic/parser.hpp"
#include "texpic/scene_io.hpp"
#include "texpic/slope.hpp"
#include "test_support.hpp"

namespace texpic {
namespace {

std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> formatted(const Primitive& p, const EmitOptions& opts = {}) {
  std::vector<std::string> out;
  for (const auto& cmd : emit_primitive(p, opts)) out.push_back(format_command(cmd));
  return out;
}

TEST(RoundCoord, HalfAwayFromZero) {
  EXPECT_EQ(round_coord(104.5), 105);
  EXPECT_EQ(round_coord(-2.5), -3);
  EXPECT_EQ(round_coord(15.5), 16);
  EXPECT_EQ(round_coord(2.4999), 2);
  EXPECT_EQ(round_coord(-0.4), 0);
}

TEST(FormatNumber, Forms) {
  EXPECT_EQ(format_number(0.0), "0");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(-17.0), "-17");
  EXPECT_EQ(format_number(2.5), "2.5");
  EXPECT_EQ(format_number(0.1), "0.1");
}

TEST(EmitPrimitive, ReferenceCommands) {
  EXPECT_EQ(formatted(Label{{101, 160}, "V"}), std::vector<std::string>{"\\put(101,160){V}"});
  EXPECT_EQ(formatted(Circle{{64, 192}, 38}), std::vector<std::string>{"\\put(64,192){\\circle{38}}"});
  EXPECT_EQ(formatted(Circle{{5, 5}, 4, true}), std::vector<std::string>{"\\put(5,5){\\circle*{4}}"});
}

TEST(EmitPrimitive, ArrowedAxis) {
  const std::vector<std::string> expected = {
      "\\qbezier(0,14)(105,14)(209,14)",
      "\\qbezier(209,14)(206,16)(202,17)",
      "\\qbezier(209,14)(206,13)(202,11)",
  };
  EXPECT_EQ(formatted(Segment{{0, 14}, {209, 14}, true}), expected);
}

TEST(EmitPrimitive, RectangleIsFourStrokes) {
  const auto out = formatted(Rectangle{{8, 22}, 160, 212});
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], "\\qbezier(8,22)(88,22)(168,22)");
  EXPECT_EQ(out[3], "\\qbezier(8,234)(8,128)(8,22)");
}

TEST(EmitPrimitive, RoundsEverything) {
  EXPECT_EQ(formatted(QuadBezier{{0.4, 0.6}, {10.5, 20.49}, {-0.5, 3}}),
            std::vector<std::string>{"\\qbezier(0,1)(11,20)(-1,3)"});
  EXPECT_EQ(formatted(Circle{{1, 1}, 0.3}), std::vector<std::string>{"\\put(1,1){\\circle{1}}"});
  // control is the midpoint of the rounded endpoints
  EXPECT_EQ(formatted(Segment{{0.4, 0}, {2.6, 0}}), std::vector<std::string>{"\\qbezier(0,0)(2,0)(3,0)"});
}

TEST(EmitPrimitive, CircleQuads) {
  EmitOptions opts;
  opts.circle_quads = 4;
  const auto out = formatted(Circle{{10, 10}, 20}, opts);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], "\\qbezier(20,10)(20,20)(10,20)");
  opts.circle_quads = 2;
  EXPECT_THROW(emit_primitive(Circle{{10, 10}, 20}, opts), Error);
}

TEST(EmitPrimitive, NativeWhenExact) {
  EmitOptions opts;
  opts.line_mode = LineMode::NativeWhenExact;
  EXPECT_EQ(formatted(Segment{{60, 50}, {80, 10}}, opts),
            std::vector<std::string>{"\\put(60,50){\\line(1,-2){20}}"});
  EXPECT_EQ(formatted(Segment{{8, 234}, {8, 22}}, opts),
            std::vector<std::string>{"\\put(8,234){\\line(0,-1){212}}"});
  EXPECT_EQ(formatted(Segment{{0, 14}, {209, 14}, true}, opts),
            std::vector<std::string>{"\\put(0,14){\\vector(1,0){209}}"});
  // (5,1) is a line slope but not a vector slope
  EXPECT_EQ(formatted(Segment{{0, 0}, {10, 2}}, opts), std::vector<std::string>{"\\put(0,0){\\line(5,1){10}}"});
  EXPECT_EQ(formatted(Segment{{0, 0}, {10, 2}, true}, opts).size(), 3u);
  // slope outside the bound, non-integer endpoints, zero length
  EXPECT_EQ(formatted(Segment{{0, 0}, {7, 1}}, opts), std::vector<std::string>{"\\qbezier(0,0)(4,1)(7,1)"});
  EXPECT_EQ(formatted(Segment{{0.5, 0}, {10.5, 2}}, opts).front().rfind("\\qbezier", 0), 0u);
  EXPECT_EQ(formatted(Segment{{3, 3}, {3, 3}}, opts), std::vector<std::string>{"\\qbezier(3,3)(3,3)(3,3)"});
}

TEST(EmitPrimitive, NativeLinesPassValidation) {
  EmitOptions opts;
  opts.line_mode = LineMode::NativeWhenExact;
  for (int dx = -12; dx <= 12; ++dx) {
    for (int dy = -12; dy <= 12; ++dy) {
      for (bool arrow : {false, true}) {
        if (arrow && dx == 0 && dy == 0) continue;
        for (const auto& cmd : emit_primitive(Segment{{20, 20}, {20.0 + dx, 20.0 + dy}, arrow}, opts)) {
          const auto* put = std::get_if<PutCmd>(&cmd);
          if (!put) continue;
          if (const auto* l = std::get_if<LineCmd>(&put->body)) {
            EXPECT_TRUE(validate_slope(static_cast<long long>(l->a), static_cast<long long>(l->b),
                                       SlopeKind::Line, {})
                            .empty());
          } else if (const auto* v = std::get_if<VectorCmd>(&put->body)) {
            EXPECT_TRUE(validate_slope(static_cast<long long>(v->a), static_cast<long long>(v->b),
                                       SlopeKind::Vector, {})
                            .empty());
          }
        }
      }
    }
  }
}

TEST(EmitPrimitive, StrictRejectsNegativeCoordinates) {
  EmitOptions opts;
  opts.strict = true;
  EXPECT_THROW(emit_primitive(Label{{-1, 0}, "A"}, opts), Error);
  EXPECT_THROW(emit_primitive(Circle{{2, 2}, 6}, opts), Error);
  EXPECT_NO_THROW(emit_primitive(Circle{{3, 3}, 6}, opts));
  opts.strict = false;
  EXPECT_NO_THROW(emit_primitive(Label{{-1, 0}, "A"}, opts));
  opts.exactness_tolerance = -1;
  EXPECT_THROW(emit_primitive(Label{{1, 0}, "A"}, opts), Error);
}

TEST(EmitScene, SingleLabel) {
  Scene s;
  s.add(Label{{0, 0}, "A"});
  EXPECT_EQ(emit_scene(s), "\\begin{picture}(0,0)\n\\put(0,0){A}\n\\end{picture}\n");
  EXPECT_THROW(emit_scene(Scene{}), Error);
}

TEST(EmitScene, CropsAndCeils) {
  Scene s;
  s.add(Segment{{10.5, 20}, {30.2, 25.1}});
  s.add(Label{{12, 22}, "x"});
  const auto out = lines_of(emit_scene(s));
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0], "\\begin{picture}(20,6)");
  EXPECT_EQ(out[2], "\\put(2,2){x}");
}

TEST(EmitScene, UnitLengthPrefix) {
  Scene s;
  s.add(Label{{0, 0}, "A"});
  EmitOptions opts;
  opts.unitlength = "1mm";
  EXPECT_EQ(lines_of(emit_scene(s, opts)).front(), "\\setlength{\\unitlength}{1mm}");
}

TEST(EmitScene, AxesFigureGolden) {
  const Scene scene = read_scene(testing::read_data("axes_figure.scene"));
  const std::string text = emit_scene(scene);
  const auto out = lines_of(text);
  ASSERT_EQ(out.size(), 22u);
  EXPECT_EQ(out.front(), "\\begin{picture}(215,283)");
  EXPECT_EQ(out.back(), "\\end{picture}");
  const auto reference = lines_of(testing::read_data("axes_figure.tex"));
  // circle and labels are the last five commands in both
  for (std::size_t k = 1; k <= 6; ++k) EXPECT_EQ(out[out.size() - k], reference[reference.size() - k]);
  EXPECT_EQ(text, emit_scene(scene));
  EXPECT_EQ(text.find("\\line"), std::string::npos);
  EXPECT_EQ(text.find("\\vector"), std::string::npos);
  EXPECT_EQ(text.find('\r'), std::string::npos);
}

TEST(EmitScene, GrammarAndBox) {
  const std::regex pair(R"(\((-?\d+),(-?\d+)\))");
  const std::regex qbezier(R"(\\qbezier\(-?\d+,-?\d+\)\(-?\d+,-?\d+\)\(-?\d+,-?\d+\))");
  const std::regex put(R"(\\put\(-?\d+,-?\d+\)\{.*\})");
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    testing::SceneGenerator gen(seed);
    const Scene scene = gen.scene(1, 12);
    const NormalizedScene norm = normalize(scene);
    const auto out = lines_of(emit_scene(scene));
    std::smatch m;
    ASSERT_TRUE(std::regex_match(out.front(), m, std::regex(R"(\\begin\{picture\}\((\d+),(\d+)\))")));
    const long long w = std::stoll(m[1]), h = std::stoll(m[2]);
    EXPECT_EQ(w, static_cast<long long>(std::ceil(norm.width)));
    EXPECT_EQ(h, static_cast<long long>(std::ceil(norm.height)));
    for (std::size_t i = 1; i + 1 < out.size(); ++i) {
      EXPECT_TRUE(std::regex_match(out[i], qbezier) || std::regex_match(out[i], put)) << out[i];
    }
  }
}

TEST(EmitScene, ParsesWithoutErrors) {
  for (std::uint64_t seed = 100; seed < 150; ++seed) {
    testing::SceneGenerator gen(seed);
    for (LineMode mode : {LineMode::QbezierAlways, LineMode::NativeWhenExact}) {
      EmitOptions opts;
      opts.line_mode = mode;
      Scene scene = gen.scene(1, 10);
      scene.add(Segment{{0, 0}, {12, 18}, gen.pick(2) == 0});
      const ParseResult res = parse_picture(emit_scene(scene, opts));
      EXPECT_FALSE(has_errors(res.diagnostics));
    }
  }
}

}  // namespace
}  // namespace texpic
