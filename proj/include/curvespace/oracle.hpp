#pragma once

// Brute-force checkers. Nothing here calls the Dehn, Klein or decomposition
// engines for its verdicts except through group multiplication and the
// commutation test; identity checking works on raw presentations.

#include <optional>
#include <string>
#include <vector>

#include "curvespace/classify.hpp"

namespace curvespace::oracle {

struct SearchBound {
  int max_word_length = 4;  // base length of enumerated elements; BFS length cap
  int max_fiber = 3;        // |fiber| of enumerated elements
  int max_depth = 4;        // relator insertions in identity search
};

/// Smith normal form of the relation matrix of a presentation.
class Abelianization {
 public:
  explicit Abelianization(const Presentation& p);

  int free_rank() const { return free_rank_; }
  /// Torsion coefficients > 1 in divisibility order.
  const std::vector<long>& torsion() const { return torsion_; }
  /// Canonical coordinates of the image of an exponent vector.
  std::vector<long> image(const std::vector<long>& exponents) const;
  std::vector<long> image(const LetterString& w) const;
  /// e.g. "Z^4 ⊕ Z/2".
  std::string describe() const;

 private:
  std::size_t generators_ = 0;
  std::vector<long> diagonal_;           // nonzero diagonal entries
  std::vector<std::vector<long>> cols_;  // column transform V (n x n)
  int free_rank_ = 0;
  std::vector<long> torsion_;
};

/// Yes: the word was reduced to the empty word by at most max_depth relator
/// insertions. No: its image in the abelianization is nonzero. Undecided
/// otherwise. Never answers No for a trivial word.
Verdict bounded_is_trivial(const Presentation& p, const LetterString& w, const SearchBound& b);
Verdict bounded_is_trivial(const SurfaceSpec& s, const LetterString& w, const SearchBound& b);

/// Order of the group by Todd-Coxeter coset enumeration over the trivial
/// subgroup, or nullopt if more than max_cosets cosets were defined.
std::optional<std::size_t> group_order(const Presentation& p, std::size_t max_cosets = 100000);

/// All elements with base length <= max_word_length and |fiber| <= max_fiber,
/// one per normal form, ordered by base length, base letters, fiber.
std::vector<STWord> bounded_box(const SurfaceSpec& s, const SearchBound& b);

/// The elements of bounded_box commuting with xi.
std::vector<STWord> bounded_centralizer(const SurfaceSpec& s, const STWord& xi,
                                        const SearchBound& b);

struct VerificationResult {
  bool passed = false;
  std::string detail;
  std::optional<STWord> counterexample;
  std::size_t centralizer_size = 0;
  std::size_t products_checked = 0;
};

/// Checks classify_pi1(s, xi) against the bounded centralizer:
/// every witness commutes with xi, every bounded product of witnesses
/// commutes with xi, and every bounded centralizer element is such a
/// product (or, for the FullSTGroup and OrientationPreservingSubgroup kinds,
/// satisfies the membership predicate).
VerificationResult verify_classification(const SurfaceSpec& s, const STWord& xi,
                                         const SearchBound& b);

}  // namespace curvespace::oracle
