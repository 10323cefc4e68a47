#pragma once

#include "curvespace/words.hpp"

namespace curvespace {

/// An element of the fundamental group of the unit tangent bundle, written
/// base * f^fiber where `base` is a surface word read through the standard
/// lifts of the generators and f is the oriented fiber.
///
/// Sphere and RP2 elements reduce to residues: on the sphere the base is
/// empty and the fiber is taken mod 2; on RP2 the group is cyclic of order 4
/// generated by the lift of c1, with c1^2 = f, and the normal form is
/// c1^e f^m with e, m in {0, 1}.
class STWord {
 public:
  /// Normalizes base_letters * f^fiber.
  STWord(SurfaceSpec surface, LetterString base_letters, long fiber = 0);
  STWord(const Word& base, long fiber = 0);

  static STWord identity(const SurfaceSpec& s) { return STWord(s, {}, 0); }
  static STWord fiber_power(const SurfaceSpec& s, long m) { return STWord(s, {}, m); }
  static STWord generator(const SurfaceSpec& s, int index, int sign = 1) {
    return STWord(s, {{index, sign}}, 0);
  }

  const SurfaceSpec& surface() const { return base_.surface(); }
  const Word& base() const { return base_; }
  long fiber() const { return fiber_; }
  /// Sphere: element of Z/2; RP2: element of Z/4 (c1 = 1, f = 2).
  long residue() const;

  friend bool operator==(const STWord&, const STWord&) = default;

 private:
  Word base_;
  long fiber_ = 0;
};

STWord st_multiply(const STWord& u, const STWord& v);
STWord st_invert(const STWord& u);
STWord st_power(const STWord& u, long n);
/// by * u * by^-1
STWord st_conjugate(const STWord& u, const STWord& by);

bool st_is_trivial(const STWord& u);
/// Equality in the group (the normal form is only unique outside the closed
/// hyperbolic regimes).
bool st_equal(const STWord& u, const STWord& v);
bool st_commute(const STWord& u, const STWord& v);

/// Orientation character of the projection to the surface.
int st_character(const STWord& u);

/// Conjugacy in the tangent-bundle group. Exact except in closed hyperbolic
/// regimes, where it depends on finding a base conjugator (see conjugacy()).
Verdict st_is_conjugate(const STWord& u, const STWord& v, int max_conjugator_length = 4);

/// xi = root_lift^k f^l, with root_lift the lift (primitive root, fiber 0).
struct LiftDecomposition {
  STWord root_lift;
  long k = 0;
  long l = 0;
};

/// Throws InvalidInput when the base is trivial or the regime is Sphere/RP2.
LiftDecomposition decompose(const STWord& xi);
STWord recompose(const LiftDecomposition& d);

/// Klein bottle coordinates g^k h^l f^m with g = c1 c2, h = c2^-1.
detail::KleinTriple klein_coordinates(const STWord& u);
STWord klein_element(const detail::KleinTriple& t);

}  // namespace curvespace
