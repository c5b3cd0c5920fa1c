#include <gtest/gtest.h>

#include "texpic/error.hpp"
#include "texpic/fidelity.hpp"
#include "texpic/scene_io.hpp"
#include "texpic/svg_import.hpp"
#include "test_support.hpp"

namespace texpic {
namespace {

std::string svg(const std::string& body, const std::string& attrs = R"x(width="100" height="50")x") {
  return R"(<svg xmlns="http://www.w3.org/2000/svg" )" + attrs + ">" + body + "</svg>";
}

TEST(PathData, Absolute) {
  const auto pieces = parse_path_data("M 0 0 L 10 0 Q 15 5 10 10 Z");
  ASSERT_EQ(pieces.size(), 3u);
  EXPECT_EQ(pieces[0], (PathPiece{Segment{{0, 0}, {10, 0}}}));
  EXPECT_EQ(pieces[1], (PathPiece{QuadBezier{{10, 0}, {15, 5}, {10, 10}}}));
  EXPECT_EQ(pieces[2], (PathPiece{Segment{{10, 10}, {0, 0}}}));
}

TEST(PathData, RelativeAndImplicit) {
  const auto pieces = parse_path_data("m1,1 2,0 0,2 l-1-1 q1,0 1,1z");
  ASSERT_EQ(pieces.size(), 5u);
  EXPECT_EQ(pieces[0], (PathPiece{Segment{{1, 1}, {3, 1}}}));
  EXPECT_EQ(pieces[1], (PathPiece{Segment{{3, 1}, {3, 3}}}));
  EXPECT_EQ(pieces[2], (PathPiece{Segment{{3, 3}, {2, 2}}}));
  EXPECT_EQ(pieces[3], (PathPiece{QuadBezier{{2, 2}, {3, 2}, {3, 3}}}));
  EXPECT_EQ(pieces[4], (PathPiece{Segment{{3, 3}, {1, 1}}}));
}

TEST(PathData, NumberForms) {
  const auto pieces = parse_path_data("M.5.5L1e1-2.5");
  ASSERT_EQ(pieces.size(), 1u);
  EXPECT_EQ(pieces[0], (PathPiece{Segment{{0.5, 0.5}, {10, -2.5}}}));
}

TEST(PathData, Rejects) {
  EXPECT_THROW(parse_path_data("M 0 0 C 1 1 2 2 3 3"), Error);
  EXPECT_THROW(parse_path_data("L 1 1"), Error);
  EXPECT_THROW(parse_path_data("M 0"), Error);
  EXPECT_THROW(parse_path_data("M 0 0 A 1 1 0 0 0 2 2"), Error);
  EXPECT_TRUE(parse_path_data("").empty());
}

TEST(ImportSvg, MirrorsIntoPictureSpace) {
  const ImportResult res = import_svg(svg(R"x(<line x1="10" y1="0" x2="20" y2="50"/>)x"));
  EXPECT_TRUE(res.diagnostics.empty());
  ASSERT_EQ(res.scene.size(), 1u);
  EXPECT_EQ(res.scene.primitives()[0], (Primitive{Segment{{10, 50}, {20, 0}}}));
}

TEST(ImportSvg, ViewBoxFrame) {
  const ImportResult res = import_svg(
      svg(R"x(<circle cx="15" cy="25" r="2" fill="none"/><rect x="10" y="20" width="4" height="6"/>)x",
          R"x(viewBox="10 20 40 30")x"));
  ASSERT_EQ(res.scene.size(), 2u);
  EXPECT_EQ(res.scene.primitives()[0], (Primitive{Circle{{5, 25}, 4, false}}));
  EXPECT_EQ(res.scene.primitives()[1], (Primitive{Rectangle{{0, 24}, 4, 6}}));
}

TEST(ImportSvg, ScaleAndElements) {
  ImportOptions opts;
  opts.scale = 2;
  const ImportResult res = import_svg(svg(R"x(<g><text x="1" y="40"> A <tspan>b</tspan></text></g>)x"
                                          R"x(<circle cx="5" cy="5" r="1"/>)x"
                                          R"x(<path d="M0 50 Q 5 45 10 50"/>)x"
                                          R"x(<line x1="0" y1="0" x2="1" y2="0" marker-end="url(#m)"/>)x"),
                                      opts);
  EXPECT_TRUE(res.diagnostics.empty());
  ASSERT_EQ(res.scene.size(), 4u);
  EXPECT_EQ(res.scene.primitives()[0], (Primitive{Label{{2, 20}, "A b"}}));
  EXPECT_EQ(res.scene.primitives()[1], (Primitive{Circle{{10, 90}, 4, true}}));
  EXPECT_EQ(res.scene.primitives()[2], (Primitive{QuadBezier{{0, 0}, {10, 10}, {20, 0}}}));
  EXPECT_EQ(res.scene.primitives()[3], (Primitive{Segment{{0, 100}, {2, 100}, true}}));
}

TEST(ImportSvg, UnsupportedContent) {
  const std::string doc =
      svg(R"x(<ellipse cx="1" cy="1" rx="1" ry="2"/><line x1="0" y1="0" x2="1" y2="1" transform="scale(2)"/>)x"
          R"x(<line x1="0" y1="0" x2="3" y2="3"/><title>t</title>)x");
  const ImportResult res = import_svg(doc);
  ASSERT_EQ(res.diagnostics.size(), 2u);
  for (const auto& d : res.diagnostics) {
    EXPECT_EQ(d.rule, Rule::W03_Unsupported);
    EXPECT_FALSE(d.is_error());
  }
  EXPECT_EQ(res.scene.size(), 1u);
  ImportOptions strict;
  strict.strict = true;
  try {
    import_svg(doc, strict);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnsupportedFeature);
  }
}

TEST(ImportSvg, BadElementsAreSkipped) {
  const ImportResult res = import_svg(svg(R"x(<line x1="a" y1="0" x2="1" y2="1"/>)x"
                                          R"x(<path d="M 0 0 C 1 1 2 2 3 3"/><circle r="-1"/>)x"));
  EXPECT_EQ(res.diagnostics.size(), 3u);
  EXPECT_TRUE(res.scene.empty());
}

TEST(ImportSvg, MalformedDocuments) {
  EXPECT_THROW(import_svg("<svg"), Error);
  EXPECT_THROW(import_svg("<html/>"), Error);
  ImportOptions bad;
  bad.scale = 0;
  EXPECT_THROW(import_svg(svg(""), bad), Error);
}

TEST(ImportSvg, AxesFigureFixture) {
  const ImportResult res = import_svg(testing::read_data("axes_figure.svg"));
  EXPECT_TRUE(res.diagnostics.empty());
  EXPECT_EQ(res.scene.size(), 12u);
  const Scene reference = read_scene(testing::read_data("axes_figure.scene"));
  const auto a = flatten_scene(res.scene);
  const auto b = flatten_scene(reference);
  EXPECT_LT(hausdorff(a, b), 1.5);
  EXPECT_EQ(res.scene.primitives().back(), (Primitive{Label{{215, 0}, "X"}}));
}

}  // namespace
}  // namespace texpic
