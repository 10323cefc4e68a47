#include "curvespace/classify.hpp"

#include "curvespace/error.hpp"

namespace curvespace {

std::string_view to_string(GroupKind k) {
  switch (k) {
    case GroupKind::Z2: return "Z2";
    case GroupKind::Z4: return "Z4";
    case GroupKind::Z: return "Z";
    case GroupKind::ZxZ: return "ZxZ";
    case GroupKind::ZxZxZ: return "ZxZxZ";
    case GroupKind::KleinBottleGroup: return "KleinBottleGroup";
    case GroupKind::FullSTGroup: return "FullSTGroup";
    case GroupKind::OrientationPreservingSubgroup: return "OrientationPreservingSubgroup";
    case GroupKind::SymbolicSphereSum: return "SymbolicSphereSum";
    case GroupKind::TrivialGroup: return "TrivialGroup";
  }
  return "?";
}

std::string GroupDescription::name() const {
  switch (kind) {
    case GroupKind::Z2: return "Z/2";
    case GroupKind::Z4: return "Z/4";
    case GroupKind::Z: return "Z";
    case GroupKind::ZxZ: return "Z ⊕ Z";
    case GroupKind::ZxZxZ: return "Z ⊕ Z ⊕ Z";
    case GroupKind::KleinBottleGroup: return "π_1(K) = <x, y | x y x^-1 y>";
    case GroupKind::FullSTGroup: return "π_1(ST F)";
    case GroupKind::OrientationPreservingSubgroup:
      return "{w in π_1(ST F) : w preserves orientation}";
    case GroupKind::SymbolicSphereSum: {
      const std::string second = "π_" + std::to_string(sphere_degree + 1) + "(S²)";
      // pi_3(S^2) = Z is the only value stated explicitly.
      if (sphere_degree == 3) return "Z ⊕ " + second;
      return "π_" + std::to_string(sphere_degree) + "(S²) ⊕ " + second;
    }
    case GroupKind::TrivialGroup: return "0";
  }
  return "?";
}

std::size_t GroupDescription::expected_witness_count() const {
  switch (kind) {
    case GroupKind::Z:
    case GroupKind::Z2:
    case GroupKind::Z4: return 1;
    case GroupKind::ZxZ:
    case GroupKind::KleinBottleGroup: return 2;
    case GroupKind::ZxZxZ: return 3;
    default: return 0;
  }
}

namespace {

GroupDescription make(GroupKind kind, std::vector<STWord> witnesses) {
  GroupDescription g;
  g.kind = kind;
  g.witnesses = std::move(witnesses);
  return g;
}

std::vector<STWord> st_generators(const SurfaceSpec& s) {
  std::vector<STWord> out;
  const Presentation p = presentation(s);
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    out.push_back(STWord::generator(s, static_cast<int>(i)));
  out.push_back(STWord::fiber_power(s, 1));
  return out;
}

GroupDescription full_group(const SurfaceSpec& s) {
  GroupDescription g = make(GroupKind::FullSTGroup, st_generators(s));
  g.presentation = st_presentation(s);
  return g;
}

// Schreier generators for the orientation-preserving subgroup with
// transversal {1, c}, c the first orientation-reversing generator.
GroupDescription orientation_preserving_group(const SurfaceSpec& s) {
  const std::vector<STWord> gens = st_generators(s);
  const STWord* c = nullptr;
  for (const STWord& x : gens)
    if (st_character(x) == -1) {
      c = &x;
      break;
    }
  std::vector<STWord> witnesses;
  auto add = [&](const STWord& w) {
    if (st_is_trivial(w)) return;
    for (const STWord& seen : witnesses)
      if (st_equal(seen, w)) return;
    witnesses.push_back(w);
  };
  for (const STWord& x : gens) {
    if (st_character(x) == 1) {
      add(x);
      if (c) add(st_conjugate(x, *c));
    } else {
      add(st_multiply(x, st_invert(*c)));
      add(st_multiply(*c, x));
    }
  }
  GroupDescription g = make(GroupKind::OrientationPreservingSubgroup, std::move(witnesses));
  g.presentation = st_presentation(s);
  return g;
}

Presentation klein_bottle_group_presentation() {
  Presentation p;
  p.generators = {{"x", -1}, {"y", 1}};
  p.relators = {{{0, 1}, {1, 1}, {0, -1}, {1, 1}}};
  return p;
}

void classify_klein(ClassificationReport& rep) {
  const SurfaceSpec& s = rep.surface;
  const detail::KleinTriple t = klein_coordinates(rep.xi);
  const STWord g = klein_element({1, 0, 0});
  const STWord f = STWord::fiber_power(s, 1);
  if (t.l % 2 != 0) {
    // xi = g^k h^(2j+1) f^m lies in the cyclic group of g^k h f^m.
    rep.case_label = "Thm 5 II";
    rep.group = make(GroupKind::Z, {klein_element({t.k, 1, t.m})});
  } else if (t.k == 0 && t.m == 0) {
    rep.case_label = "Thm 5 I a";
    rep.group = full_group(s);
  } else {
    rep.case_label = "Thm 5 I b";
    rep.group = make(GroupKind::ZxZxZ, {g, klein_element({0, 2, 0}), f});
  }
}

}  // namespace

ClassificationReport classify_pi1(const SurfaceSpec& surface, const STWord& xi) {
  if (xi.surface() != surface)
    throw AmbientMismatch("the loop does not live on the requested surface");

  ClassificationReport rep{surface, xi, std::nullopt, {}, {}};
  const Regime r = regime(surface);
  const STWord f = STWord::fiber_power(surface, 1);
  const bool base_trivial = is_trivial(xi.base());
  if (!is_finite_regime(r) && !base_trivial) rep.decomposition = decompose(xi);

  switch (r) {
    case Regime::Sphere:
      rep.case_label = "Thm 1";
      rep.group = make(GroupKind::Z2, {f});
      return rep;
    case Regime::RP2:
      rep.case_label = "Thm 4";
      rep.group = make(GroupKind::Z4, {STWord::generator(surface, 0)});
      return rep;
    case Regime::Torus:
      rep.case_label = "Thm 2";
      rep.group = make(GroupKind::ZxZxZ, st_generators(surface));
      return rep;
    case Regime::Klein:
      classify_klein(rep);
      return rep;
    default:
      break;
  }

  if (surface.orientable) {
    if (base_trivial) {
      rep.case_label = "Thm 3 II";
      rep.group = full_group(surface);
    } else {
      rep.case_label = "Thm 3 I";
      rep.group = make(GroupKind::ZxZ, {rep.decomposition->root_lift, f});
    }
    return rep;
  }

  if (base_trivial) {
    if (xi.fiber() != 0) {
      rep.case_label = "Thm 6 III a";
      rep.group = orientation_preserving_group(surface);
    } else {
      rep.case_label = "Thm 6 III b";
      rep.group = full_group(surface);
    }
    return rep;
  }

  const LiftDecomposition& d = *rep.decomposition;
  const STWord& g = d.root_lift;
  if (st_character(xi) == -1) {
    rep.case_label = "Thm 6 I";
    rep.group = make(GroupKind::Z, {st_multiply(g, STWord::fiber_power(surface, d.l))});
  } else if (st_character(g) == 1) {
    rep.case_label = "Thm 6 II a";
    rep.group = make(GroupKind::ZxZ, {g, f});
  } else if (d.l != 0) {
    rep.case_label = "Thm 6 II a";
    rep.group = make(GroupKind::ZxZ, {st_power(g, 2), f});
  } else {
    rep.case_label = "Thm 6 II b";
    rep.group = make(GroupKind::KleinBottleGroup, {g, f});
    rep.group.presentation = klein_bottle_group_presentation();
  }
  return rep;
}

GroupDescription classify_pin(const SurfaceSpec& surface, int n) {
  if (n < 2) throw InvalidInput("higher homotopy groups need n >= 2");
  const Regime r = regime(surface);
  if (!is_finite_regime(r)) return make(GroupKind::TrivialGroup, {});
  if (n == 2) return make(GroupKind::Z, {});
  GroupDescription g = make(GroupKind::SymbolicSphereSum, {});
  g.sphere_degree = n;
  return g;
}

Verdict regular_homotopy_equivalent(const SurfaceSpec& surface, const STWord& u,
                                    const STWord& v, int max_conjugator_length) {
  if (u.surface() != surface || v.surface() != surface)
    throw AmbientMismatch("the loops do not live on the requested surface");
  return st_is_conjugate(u, v, max_conjugator_length);
}

}  // namespace curvespace
