#pragma once

#include <string_view>
#include <vector>

#include "texpic/curves.hpp"
#include "texpic/diagnostic.hpp"
#include "texpic/error.hpp"
#include "texpic/picture.hpp"
#include "texpic/scene.hpp"

namespace texpic {

struct ParseResult {
  PictureDoc doc;
  // Syntax findings followed by lint findings.
  std::vector<Diagnostic> diagnostics;
};

// Raised when there is no usable \begin{picture}(W,H) header.
class ParseError : public Error {
 public:
  explicit ParseError(Diagnostic diagnostic);

  const Diagnostic& diagnostic() const { return diagnostic_; }

 private:
  Diagnostic diagnostic_;
};

// Parses the first picture environment in text. Text outside it is
// ignored; unknown commands inside it produce E04 and are skipped.
ParseResult parse_picture(std::string_view text);

// Slope rules on \line (bound 6) and \vector (bound 4), W01 for anchors
// outside the declared box (arrowhead barbs excepted), W02 for non-integer
// slope or length arguments.
std::vector<Diagnostic> lint(const PictureDoc& doc, const ArrowStyle& style = {});

// Indices of a straight shaft followed by the two barb strokes of an
// arrowhead drawn at its end.
struct ArrowMatch {
  std::size_t shaft = 0;
  std::size_t first_barb = 0;
  std::size_t second_barb = 0;
};

std::vector<ArrowMatch> find_arrows(const PictureDoc& doc, const ArrowStyle& style = {});

struct RecoveryOptions {
  // Fold shaft + barb triples back into arrowed segments.
  bool recognize_arrows = true;
  ArrowStyle arrow_style;
};

// Rebuilds a scene from parsed commands. Throws Error(LintFailed) when
// lint reports errors.
Scene doc_to_scene(const PictureDoc& doc, const RecoveryOptions& opts = {});

}  // namespace texpic
