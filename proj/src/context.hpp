#pragma once

// Per-surface data shared by the rewriting engines. Built once per
// SurfaceSpec and cached for the life of the process.

#include <cstddef>
#include <vector>

#include "curvespace/surfaces.hpp"

namespace curvespace::detail {

/// A cyclic permutation of the surface relator or of its inverse, together
/// with its value f^value in the tangent-bundle group.
struct CyclicRelator {
  LetterString word;
  long value = 0;
};

struct SurfaceContext {
  SurfaceSpec spec;
  Regime regime;
  Presentation pres;
  int chi = 0;
  std::size_t relator_length = 0;
  std::vector<CyclicRelator> cyclic;
  // cyclic relators grouped by their first letter (index letter_slot()).
  std::vector<std::vector<std::size_t>> by_first_letter;

  int character(const Letter& x) const { return pres.character(x); }
  int character(const LetterString& w) const { return pres.character(w); }
  std::size_t generator_count() const { return pres.generators.size(); }
};

inline std::size_t letter_slot(const Letter& x) {
  return 2 * static_cast<std::size_t>(x.generator) + (x.sign < 0 ? 1 : 0);
}

/// Total order on letters: by generator, positive before negative.
inline bool letter_less(const Letter& a, const Letter& b) {
  return letter_slot(a) < letter_slot(b);
}

inline bool word_less(const LetterString& a, const LetterString& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != b[i]) return letter_less(a[i], b[i]);
  }
  return false;
}

const SurfaceContext& context(const SurfaceSpec& spec);

}  // namespace curvespace::detail
