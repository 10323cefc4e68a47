#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "curvespace/surfaces.hpp"

namespace curvespace {

/// Three-valued answer for procedures that are only semi-decisions in some
/// regimes (conjugacy in closed hyperbolic surface groups).
enum class Verdict : std::uint8_t { No, Yes, Undecided };

std::string_view to_string(Verdict v);

/// An element of the fundamental group of a surface, always held in the
/// regime's normal form:
///   Sphere      empty word;
///   RP2         c1^e, e in {0, 1};
///   Torus       a1^p b1^q;
///   Klein       free reduction of (c1 c2)^k c2^-l, i.e. g^k h^l with
///               g = c1 c2 and h = c2^-1;
///   Punctured   freely reduced word;
///   hyperbolic  Dehn-reduced word, then lexicographically minimised over
///               half-relator swaps.
/// The first five forms are unique. The hyperbolic form is deterministic but
/// two equal elements can still have different forms; compare those with
/// equal(), which solves the word problem.
class Word {
 public:
  explicit Word(SurfaceSpec surface, LetterString letters = {});

  static Word identity(const SurfaceSpec& surface) { return Word(surface); }
  static Word generator(const SurfaceSpec& surface, int index, int sign = 1);

  const SurfaceSpec& surface() const { return surface_; }
  const LetterString& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  friend bool operator==(const Word&, const Word&) = default;

 private:
  struct Normalized {};
  Word(SurfaceSpec surface, LetterString letters, Normalized)
      : surface_(surface), letters_(std::move(letters)) {}

  SurfaceSpec surface_;
  LetterString letters_;

  friend Word make_normalized_word(const SurfaceSpec&, LetterString);
};

/// Wraps letters that are already in normal form (no rewriting is done).
Word make_normalized_word(const SurfaceSpec& surface, LetterString letters);

Word multiply(const Word& u, const Word& v);
Word invert(const Word& u);
Word power(const Word& u, long n);

bool is_trivial(const Word& u);
/// Equality in the group, decided through the word problem.
bool equal(const Word& u, const Word& v);

/// +1 if the loop preserves orientation, -1 otherwise.
int orientation_character(const Word& u);

struct ConjugacyResult {
  Verdict verdict = Verdict::No;
  /// When verdict is Yes: some c with c u c^-1 = v.
  std::optional<Word> conjugator;
};

/// Exact except in closed hyperbolic regimes, where a failed cyclic Dehn
/// comparison falls back to a search over conjugators of length at most
/// `max_conjugator_length` and may answer Undecided.
ConjugacyResult conjugacy(const Word& u, const Word& v, int max_conjugator_length = 4);
Verdict is_conjugate(const Word& u, const Word& v, int max_conjugator_length = 4);

struct PrimitiveRoot {
  Word root;
  long exponent = 1;
};

/// root^exponent = u with exponent maximal. Throws InvalidInput for the
/// trivial element and for Sphere/RP2.
PrimitiveRoot primitive_root(const Word& u);

/// Exponent sum of each generator.
std::vector<long> exponent_sums(const LetterString& w, std::size_t generator_count);

namespace detail {

/// Exact normal form inside the tangent-bundle group: the input letters
/// (read as the standard lifts of the surface generators) equal
/// `letters` followed by f^fiber_shift.
struct LiftedNormalForm {
  LetterString letters;
  long fiber_shift = 0;
};

LiftedNormalForm normalize_lifted(const SurfaceSpec& surface, LetterString letters);

/// Coordinates g^k h^l f^m of an element of pi_1(ST K), where g = c1 c2,
/// h = c2^-1 and f is the fiber.
struct KleinTriple {
  long k = 0;
  long l = 0;
  long m = 0;
  friend bool operator==(const KleinTriple&, const KleinTriple&) = default;
};

KleinTriple klein_multiply(const KleinTriple& a, const KleinTriple& b);
KleinTriple klein_invert(const KleinTriple& a);
KleinTriple klein_letters_to_triple(const LetterString& w);
/// Canonical word for g^k h^l.
LetterString klein_word(long k, long l);

/// All freely reduced words of length <= max_length, ordered by length and
/// then lexicographically (generator index, positive before negative).
std::vector<LetterString> reduced_words(std::size_t generator_count, int max_length);

}  // namespace detail

}  // namespace curvespace
