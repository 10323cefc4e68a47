#include "curvespace/grammar.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <optional>

#include "curvespace/error.hpp"

namespace curvespace {

namespace {

bool parse_long(std::string_view s, long& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

bool parse_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc{} && ptr == s.data() + s.size();
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

struct Token {
  std::string name;  // lowercase
  long exponent = 1;
  std::size_t column = 1;
};

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto col = [](std::size_t at) { return at + 1; };
  while (i < n) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (!std::isalpha(static_cast<unsigned char>(text[i]))) {
      if (text[i] == '1' && out.empty()) {
        std::size_t j = i + 1;
        while (j < n && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        if (j == n) return out;
      }
      throw ParseError(std::string("unexpected character '") + text[i] + "'", 0, col(i));
    }
    const bool upper = std::isupper(static_cast<unsigned char>(text[i]));
    Token t;
    t.column = col(start);
    t.name.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(text[i++]))));
    while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) t.name.push_back(text[i++]);
    if (i < n && text[i] == '^') {
      const std::size_t exp_start = ++i;
      if (i < n && (text[i] == '-' || text[i] == '+')) ++i;
      while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
      if (!parse_long(text.substr(exp_start, i - exp_start), t.exponent))
        throw ParseError("expected an integer exponent after '^'", 0, col(exp_start));
    }
    if (i < n && !std::isspace(static_cast<unsigned char>(text[i])))
      throw ParseError(std::string("unexpected character '") + text[i] + "'", 0, col(i));
    if (upper) t.exponent = -t.exponent;
    out.push_back(std::move(t));
  }
  if (out.empty()) throw ParseError("empty word; write 1 for the identity", 0, 1);
  return out;
}

// Generator index, or -1 for the fiber class.
int resolve(const Presentation& p, const Token& t, bool allow_fiber) {
  if (t.name == "f") {
    if (!allow_fiber) throw ParseError("the fiber class f is not a surface generator", 0, t.column);
    return -1;
  }
  const int g = p.find(t.name);
  if (g < 0) throw ParseError("unknown generator '" + t.name + "'", 0, t.column);
  return g;
}

void append_power(std::string& out, const std::string& name, long e) {
  if (e == 0) return;
  if (!out.empty()) out += ' ';
  std::string n = name;
  if (e < 0) n[0] = static_cast<char>(std::toupper(static_cast<unsigned char>(n[0])));
  out += n;
  if (std::abs(e) != 1) out += '^' + std::to_string(std::abs(e));
}

}  // namespace

SurfaceSpec parse_surface(std::string_view text) {
  const std::string_view t = trim(text);
  const std::size_t a = t.find(':');
  const std::size_t b = a == std::string_view::npos ? a : t.find(':', a + 1);
  if (b == std::string_view::npos)
    throw ParseError("expected <orientable|nonorientable>:<genus>:<punctures>", 0, 1);
  const std::string_view kind = t.substr(0, a);
  SurfaceSpec s;
  if (kind == "orientable")
    s.orientable = true;
  else if (kind == "nonorientable")
    s.orientable = false;
  else
    throw ParseError("surface kind must be orientable or nonorientable", 0, 1);
  long genus = 0, punctures = 0;
  if (!parse_long(t.substr(a + 1, b - a - 1), genus))
    throw ParseError("genus must be an integer", 0, a + 2);
  if (!parse_long(t.substr(b + 1), punctures))
    throw ParseError("puncture count must be an integer", 0, b + 2);
  s.genus = static_cast<int>(genus);
  s.punctures = static_cast<int>(punctures);
  validate(s);
  return s;
}

std::string format_surface(const SurfaceSpec& s) {
  return std::string(s.orientable ? "orientable" : "nonorientable") + ":" +
         std::to_string(s.genus) + ":" + std::to_string(s.punctures);
}

Word parse_word(const SurfaceSpec& surface, std::string_view text) {
  const Presentation p = presentation(surface);
  LetterString letters;
  for (const Token& t : tokenize(text)) {
    const int g = resolve(p, t, false);
    for (long e = 0; e < std::abs(t.exponent); ++e) letters.push_back({g, t.exponent > 0 ? 1 : -1});
  }
  return Word(surface, std::move(letters));
}

STWord parse_stword(const SurfaceSpec& surface, std::string_view text) {
  const Presentation p = presentation(surface);
  STWord out = STWord::identity(surface);
  for (const Token& t : tokenize(text)) {
    const int g = resolve(p, t, true);
    const STWord x = g < 0 ? STWord::fiber_power(surface, 1) : STWord::generator(surface, g);
    out = st_multiply(out, st_power(x, t.exponent));
  }
  return out;
}

std::string format_letters(const Presentation& p, const LetterString& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size();) {
    std::size_t j = i;
    while (j < w.size() && w[j] == w[i]) ++j;
    append_power(out, p.generators[static_cast<std::size_t>(w[i].generator)].name,
                 static_cast<long>(j - i) * w[i].sign);
    i = j;
  }
  return out.empty() ? "1" : out;
}

std::string format_word(const Word& w) {
  return format_letters(presentation(w.surface()), w.letters());
}

std::string format_stword(const STWord& w) {
  std::string out =
      w.base().empty() ? std::string() : format_letters(presentation(w.surface()), w.base().letters());
  append_power(out, "f", w.fiber());
  return out.empty() ? "1" : out;
}

CurveOnSurface parse_curve(std::istream& in) {
  CurveOnSurface c;
  std::optional<CurveModel> model;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const std::size_t hash = line.find('#'); hash != std::string_view::npos)
      line = line.substr(0, hash);
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    const std::size_t column = static_cast<std::size_t>(body.data() - raw.data()) + 1;
    if (!model) {
      if (body.substr(0, 6) != "model=")
        throw ParseError("first line must be model=plane|torus|klein", line_no, column);
      const std::string_view name = trim(body.substr(6));
      if (name == "plane")
        model = CurveModel::Plane;
      else if (name == "torus")
        model = CurveModel::Torus;
      else if (name == "klein")
        model = CurveModel::Klein;
      else
        throw ParseError("unknown curve model '" + std::string(name) + "'", line_no, column + 6);
      continue;
    }
    const std::size_t comma = body.find(',');
    if (comma == std::string_view::npos)
      throw ParseError("expected x,y", line_no, column + body.size());
    Point p;
    if (!parse_double(trim(body.substr(0, comma)), p.x))
      throw ParseError("bad x coordinate", line_no, column);
    if (!parse_double(trim(body.substr(comma + 1)), p.y))
      throw ParseError("bad y coordinate", line_no, column + comma + 1);
    c.polyline.vertices.push_back(p);
  }
  if (!model) throw ParseError("missing model= line", line_no + 1, 1);
  c.model = *model;
  return c;
}

CurveOnSurface read_curve_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open curve file " + path);
  return parse_curve(in);
}

}  // namespace curvespace
