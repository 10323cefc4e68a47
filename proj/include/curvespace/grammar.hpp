#pragma once

// Textual forms shared by the command-line tool and the tests.
//
//   surface   orientable:<genus>:<punctures> | nonorientable:<genus>:<punctures>
//   word      token (space token)*  |  1
//   token     name [^ [-]digits]     lowercase name = generator, uppercase = inverse
//   curve     model=plane|torus|klein, then one "x,y" vertex per line, # comments

#include <istream>
#include <string>
#include <string_view>

#include "curvespace/flatcurves.hpp"
#include "curvespace/stbundle.hpp"

namespace curvespace {

SurfaceSpec parse_surface(std::string_view text);
std::string format_surface(const SurfaceSpec& s);

/// Parses a word over presentation(surface). The fiber name `f` is rejected.
Word parse_word(const SurfaceSpec& surface, std::string_view text);
/// Parses a word over the generators of presentation(surface) and `f`,
/// multiplied left to right in π₁(ST F).
STWord parse_stword(const SurfaceSpec& surface, std::string_view text);

std::string format_letters(const Presentation& p, const LetterString& w);
std::string format_word(const Word& w);
std::string format_stword(const STWord& w);

CurveOnSurface parse_curve(std::istream& in);
CurveOnSurface read_curve_file(const std::string& path);

}  // namespace curvespace
