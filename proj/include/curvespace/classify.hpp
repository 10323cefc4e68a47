#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvespace/stbundle.hpp"

namespace curvespace {

enum class GroupKind : std::uint8_t {
  Z2,
  Z4,
  Z,
  ZxZ,
  ZxZxZ,
  KleinBottleGroup,
  FullSTGroup,
  OrientationPreservingSubgroup,
  SymbolicSphereSum,
  TrivialGroup,
};

std::string_view to_string(GroupKind k);

/// A homotopy group of the space of immersed curves, named up to
/// isomorphism. For pi_1 the group is a subgroup of pi_1(ST F) and
/// `witnesses` generate it:
///   Z, ZxZ, ZxZxZ        free abelian basis;
///   Z2, Z4               a generator of the cyclic group;
///   KleinBottleGroup     (x, y) with x y x^-1 y = 1;
///   FullSTGroup          the generators of st_presentation;
///   OrientationPreservingSubgroup
///                        Schreier generators of the index-two subgroup
///                        {w : orientation character of w is +1}.
struct GroupDescription {
  GroupKind kind = GroupKind::TrivialGroup;
  std::vector<STWord> witnesses;
  std::optional<Presentation> presentation;
  /// n for SymbolicSphereSum: the group is pi_n(S^2) + pi_{n+1}(S^2).
  int sphere_degree = 0;

  /// Human-readable name, e.g. "Z ⊕ Z" or "Z ⊕ π_4(S²)".
  std::string name() const;
  /// Rank expected of `witnesses` (0 when not fixed by the kind).
  std::size_t expected_witness_count() const;
};

struct ClassificationReport {
  SurfaceSpec surface;
  STWord xi;
  std::optional<LiftDecomposition> decomposition;
  std::string case_label;
  GroupDescription group;
};

/// The fundamental group of the space of immersed curves at a curve whose
/// lift is `xi`, realised as the centralizer of `xi`.
ClassificationReport classify_pi1(const SurfaceSpec& surface, const STWord& xi);

/// pi_n of the space of immersed curves, n >= 2.
GroupDescription classify_pin(const SurfaceSpec& surface, int n);

/// Whether two curves with lifts u and v are regularly homotopic (their
/// lifts are freely homotopic in the tangent bundle).
Verdict regular_homotopy_equivalent(const SurfaceSpec& surface, const STWord& u,
                                    const STWord& v, int max_conjugator_length = 4);

/// Membership predicate of the OrientationPreservingSubgroup kind.
inline bool preserves_orientation(const STWord& w) { return st_character(w) == 1; }

}  // namespace curvespace
