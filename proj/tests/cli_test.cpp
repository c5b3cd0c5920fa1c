#include <gtest/gtest.h>
#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "texpic/parser.hpp"
#include "texpic/slope.hpp"
#include "texpic/svg_import.hpp"
#include "test_support.hpp"

namespace texpic {
namespace {

namespace fs = std::filesystem;

struct CliRun {
  int status = -1;
  std::string out;
  std::string err;
};

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("texpic_cli_" + std::to_string(::getpid()) + "_" +
                                        ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string file(const std::string& name, const std::string& content) const {
    const fs::path p = dir_ / name;
    std::ofstream(p, std::ios::binary) << content;
    return p.string();
  }

  std::string slurp(const std::string& path) const {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }

  CliRun run(const std::string& args) const {
    const std::string out = (dir_ / "stdout").string(), err = (dir_ / "stderr").string();
    const std::string cmd = std::string("\"") + TEXPIC_CLI + "\" " + args + " >\"" + out + "\" 2>\"" + err + "\"";
    const int raw = std::system(cmd.c_str());
    return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, slurp(out), slurp(err)};
  }

  fs::path dir_;
};

BoundingBox bbox_of(const Primitive& p) {
  Scene s;
  s.add(p);
  return scene_bbox(s);
}

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

TEST_F(Cli, ConvertAxesFigureScene) {
  const std::string out = (dir_ / "fig.tex").string();
  const CliRun r = run("convert " + quoted(testing::data_path("axes_figure.scene")) + " -o " + quoted(out));
  EXPECT_EQ(r.status, 0) << r.err;
  const std::string tex = slurp(out);
  EXPECT_EQ(tex.rfind("\\begin{picture}(215,283)\n", 0), 0u);
  EXPECT_NE(tex.find("\\put(64,192){\\circle{38}}\n"), std::string::npos);
  EXPECT_EQ(run("convert " + quoted(testing::data_path("axes_figure.scene"))).out, tex);
}

TEST_F(Cli, ConvertFailures) {
  CliRun r = run("convert " + quoted(file("empty.scene", "# nothing\n")));
  EXPECT_EQ(r.status, 2);
  EXPECT_NE(r.err.find("EmptyScene"), std::string::npos) << r.err;
  EXPECT_EQ(run("convert " + quoted((dir_ / "missing.scene").string())).status, 2);
  EXPECT_EQ(run("convert " + quoted(file("x.png", ""))).status, 2);
  EXPECT_EQ(run("convert " + quoted(file("bad.scene", "blob 1 2\n"))).status, 2);
  EXPECT_EQ(run("convert --line-mode fancy " + quoted(testing::data_path("axes_figure.scene"))).status, 2);
  EXPECT_EQ(run("convert --circle-mode quads:2 " + quoted(testing::data_path("axes_figure.scene"))).status, 2);
  EXPECT_EQ(run("convert --bogus " + quoted(testing::data_path("axes_figure.scene"))).status, 2);
  EXPECT_EQ(run("").status, 2);
}

TEST_F(Cli, ConvertNativeLines) {
  const std::string svg = file("fig.svg", R"x(<svg xmlns="http://www.w3.org/2000/svg" width="100" height="100">
<line x1="10" y1="90" x2="40" y2="30"/><line x1="0" y1="0" x2="70" y2="10"/>
<line x1="0" y1="50" x2="100" y2="50" marker-end="url(#a)"/></svg>)x");
  const CliRun r = run("convert " + quoted(svg) + " --line-mode native-when-exact");
  ASSERT_EQ(r.status, 0) << r.err;
  const ParseResult parsed = parse_picture(r.out);
  int natives = 0;
  for (const auto& sc : parsed.doc.commands) {
    const auto* put = std::get_if<PutCmd>(&sc.command);
    if (!put) continue;
    if (const auto* l = std::get_if<LineCmd>(&put->body)) {
      ++natives;
      EXPECT_TRUE(validate_slope(static_cast<long long>(l->a), static_cast<long long>(l->b), SlopeKind::Line).empty());
    }
    if (const auto* v = std::get_if<VectorCmd>(&put->body)) {
      ++natives;
      EXPECT_TRUE(validate_slope(static_cast<long long>(v->a), static_cast<long long>(v->b), SlopeKind::Vector).empty());
    }
  }
  EXPECT_EQ(natives, 2);
  EXPECT_NE(r.out.find("\\put(10,0){\\line(1,2){30}}"), std::string::npos) << r.out;
}

TEST_F(Cli, ConvertOptions) {
  const std::string scene = quoted(testing::data_path("axes_figure.scene"));
  const CliRun r = run("convert " + scene + " --unitlength 0.5mm --circle-mode quads:8");
  ASSERT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.rfind("\\setlength{\\unitlength}{0.5mm}\n\\begin{picture}", 0), 0u);
  EXPECT_EQ(r.out.find("\\circle"), std::string::npos);
}

TEST_F(Cli, StrictSvg) {
  const std::string svg = file("odd.svg", R"x(<svg xmlns="http://www.w3.org/2000/svg" width="10" height="10">
<ellipse cx="1" cy="1" rx="1" ry="1"/><line x1="0" y1="0" x2="5" y2="5"/></svg>)x");
  CliRun r = run("convert " + quoted(svg));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.err.find("W03"), std::string::npos);
  r = run("convert --strict " + quoted(svg));
  EXPECT_EQ(r.status, 1);
}

TEST_F(Cli, CheckAxesFigure) {
  const CliRun r = run("check " + quoted(testing::data_path("axes_figure.tex")));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "");
  EXPECT_EQ(r.err, "");
}

TEST_F(Cli, CheckReportsRules) {
  const std::string bad =
      file("bad.tex", "\\begin{picture}(50,50)\n\\put(10,10){\\line(2,4){10}}\n\\end{picture}\n");
  CliRun r = run("check " + quoted(bad));
  EXPECT_EQ(r.status, 1);
  EXPECT_EQ(r.err, bad + ":2:1: error E02: \\line slope (2,4) has common divisor 2\n");
  const std::string warn = file("warn.tex", "\\begin{picture}(5,5)\\put(10,10){A}\\end{picture}");
  r = run("check " + quoted(warn));
  EXPECT_EQ(r.status, 0);
  EXPECT_NE(r.err.find("warning W01"), std::string::npos);
  EXPECT_EQ(run("check " + quoted(file("empty.tex", ""))).status, 2);
}

TEST_F(Cli, RenderTex) {
  const std::string out = (dir_ / "fig.svg").string();
  const CliRun r = run("render " + quoted(testing::data_path("axes_figure.tex")) + " -o " + quoted(out));
  ASSERT_EQ(r.status, 0) << r.err;
  const ImportResult back = import_svg(slurp(out));
  EXPECT_EQ(back.scene.size(), 20u);
  EXPECT_TRUE(back.diagnostics.empty());
}

TEST_F(Cli, RenderSvgIsInvolution) {
  const CliRun r = run("render " + quoted(testing::data_path("axes_figure.svg")));
  ASSERT_EQ(r.status, 0) << r.err;
  const Scene original = import_svg(testing::read_data("axes_figure.svg")).scene;
  const Scene again = import_svg(r.out).scene;
  ASSERT_EQ(original.size(), again.size());
  const auto a = normalize(original).scene.primitives();
  const auto b = again.primitives();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const BoundingBox ba = bbox_of(a[i]), bb = bbox_of(b[i]);
    EXPECT_NEAR(ba.min.x, bb.min.x, 1e-6);
    EXPECT_NEAR(ba.min.y, bb.min.y, 1e-6);
    EXPECT_NEAR(ba.max.x, bb.max.x, 1e-6);
    EXPECT_NEAR(ba.max.y, bb.max.y, 1e-6);
    EXPECT_EQ(a[i].index(), b[i].index());
  }
}

TEST_F(Cli, Roundtrip) {
  CliRun r = run("roundtrip " + quoted(testing::data_path("axes_figure.scene")));
  EXPECT_EQ(r.status, 0) << r.err;
  EXPECT_EQ(r.out.rfind("hausdorff ", 0), 0u);
  EXPECT_LE(std::stod(r.out.substr(10)), 1.5);

  r = run("roundtrip " + quoted(file("one.scene", "label 3.25 4.75 A\n")));
  EXPECT_EQ(r.status, 0);
  EXPECT_EQ(r.out, "hausdorff 0\n");

  const std::string frac = quoted(file("frac.scene", "segment 0.3 0.2 10.6 7.1\n"));
  EXPECT_EQ(run("roundtrip " + frac).status, 0);
  EXPECT_EQ(run("roundtrip --max-distance 0 " + frac).status, 1);
  EXPECT_EQ(run("roundtrip " + quoted(testing::data_path("axes_figure.svg"))).status, 0);
}

}  // namespace
}  // namespace texpic
