#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace curvespace {

/// A surface up to diffeomorphism: orientability, genus and number of
/// punctures. For nonorientable surfaces `genus` counts crosscaps, so the
/// projective plane is (nonorientable, 1, 0) and the Klein bottle is
/// (nonorientable, 2, 0).
struct SurfaceSpec {
  bool orientable = true;
  int genus = 0;
  int punctures = 0;

  friend auto operator<=>(const SurfaceSpec&, const SurfaceSpec&) = default;

  static SurfaceSpec sphere() { return {true, 0, 0}; }
  static SurfaceSpec torus() { return {true, 1, 0}; }
  static SurfaceSpec projective_plane() { return {false, 1, 0}; }
  static SurfaceSpec klein_bottle() { return {false, 2, 0}; }
  static SurfaceSpec closed_orientable(int g) { return {true, g, 0}; }
  static SurfaceSpec closed_nonorientable(int k) { return {false, k, 0}; }
};

/// Which presentation (and which normal-form machinery) a surface uses.
enum class Regime : std::uint8_t {
  Sphere,
  Torus,
  RP2,
  Klein,
  ClosedOrientableHyperbolic,
  ClosedNonorientableHyperbolic,
  Punctured,
};

std::string_view to_string(Regime r);

/// Throws InvalidInput if the fields do not describe a surface.
void validate(const SurfaceSpec& spec);

Regime regime(const SurfaceSpec& spec);
int euler_characteristic(const SurfaceSpec& spec);

inline bool is_closed_hyperbolic(Regime r) {
  return r == Regime::ClosedOrientableHyperbolic ||
         r == Regime::ClosedNonorientableHyperbolic;
}

inline bool is_finite_regime(Regime r) {
  return r == Regime::Sphere || r == Regime::RP2;
}

/// A generator occurrence: index into a presentation's generator list and an
/// exponent sign (+1 or -1).
struct Letter {
  int generator = 0;
  int sign = 1;

  Letter inverse() const { return {generator, -sign}; }
  friend auto operator<=>(const Letter&, const Letter&) = default;
};

using LetterString = std::vector<Letter>;

LetterString inverse(const LetterString& w);

/// Free reduction in place; returns the number of cancelled pairs.
std::size_t free_reduce(LetterString& w);

struct Generator {
  std::string name;
  int character = 1;  // orientation character, +1 or -1
};

struct Presentation {
  std::vector<Generator> generators;
  std::vector<LetterString> relators;

  int character(const Letter& x) const { return generators.at(x.generator).character; }
  int character(const LetterString& w) const;
  /// Index of the generator named `name`, or -1.
  int find(std::string_view name) const;
};

/// Standard presentation of the fundamental group of the surface.
///
/// Closed orientable genus g: a1 b1 ... ag bg | [a1,b1]...[ag,bg].
/// Closed nonorientable genus k: c1 ... ck | c1^2 ... ck^2.
/// Punctured: free on a1 b1 ... (or c1 ...) followed by d1 ... d_{p-1}, where
/// the crosscap generators c_i reverse orientation and all others preserve it.
Presentation presentation(const SurfaceSpec& spec);

/// Presentation of the fundamental group of the unit tangent bundle: the
/// generators of presentation(spec) followed by the fiber class `f`. The
/// surface relator R lifts to f^chi, emitted as the relator R f^-chi; each
/// generator x contributes x f x^-1 f^-1 (orientation preserving) or
/// x f x^-1 f (orientation reversing). The sphere has no surface generators
/// and gives <f | f^2>.
Presentation st_presentation(const SurfaceSpec& spec);

}  // namespace curvespace
