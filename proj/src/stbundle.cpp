#include "curvespace/stbundle.hpp"

#include <cstdlib>

#include "context.hpp"
#include "curvespace/error.hpp"

namespace curvespace {

namespace {

long floor_mod(long a, long n) { return ((a % n) + n) % n; }

}  // namespace

STWord::STWord(SurfaceSpec surface, LetterString base_letters, long fiber)
    : base_(Word::identity(surface)) {
  auto nf = detail::normalize_lifted(surface, std::move(base_letters));
  long m = nf.fiber_shift + fiber;
  switch (regime(surface)) {
    case Regime::Sphere:
      fiber_ = floor_mod(m, 2);
      return;
    case Regime::RP2: {
      const long r = floor_mod(static_cast<long>(nf.letters.size()) + 2 * m, 4);
      if (r % 2 == 1) base_ = make_normalized_word(surface, {{0, 1}});
      fiber_ = r / 2;
      return;
    }
    default:
      base_ = make_normalized_word(surface, std::move(nf.letters));
      fiber_ = m;
  }
}

STWord::STWord(const Word& base, long fiber) : STWord(base.surface(), base.letters(), fiber) {}

long STWord::residue() const {
  if (regime(surface()) == Regime::RP2) return static_cast<long>(base_.length()) + 2 * fiber_;
  return fiber_;
}

namespace {

void require_same_ambient(const STWord& u, const STWord& v) {
  if (u.surface() != v.surface())
    throw AmbientMismatch("tangent-bundle words live on different surfaces");
}

}  // namespace

STWord st_multiply(const STWord& u, const STWord& v) {
  require_same_ambient(u, v);
  // u_b f^m1 v_b f^m2 = u_b v_b f^(eps(v_b) m1 + m2)
  LetterString letters = u.base().letters();
  letters.insert(letters.end(), v.base().letters().begin(), v.base().letters().end());
  const long fiber = orientation_character(v.base()) * u.fiber() + v.fiber();
  return STWord(u.surface(), std::move(letters), fiber);
}

STWord st_invert(const STWord& u) {
  // (w f^m)^-1 = f^-m w^-1 = w^-1 f^(-eps(w) m)
  return STWord(u.surface(), inverse(u.base().letters()),
                -orientation_character(u.base()) * u.fiber());
}

STWord st_power(const STWord& u, long n) {
  STWord base = n < 0 ? st_invert(u) : u;
  STWord result = STWord::identity(u.surface());
  for (long e = std::abs(n); e > 0; e >>= 1) {
    if (e & 1) result = st_multiply(result, base);
    if (e > 1) base = st_multiply(base, base);
  }
  return result;
}

STWord st_conjugate(const STWord& u, const STWord& by) {
  return st_multiply(st_multiply(by, u), st_invert(by));
}

bool st_is_trivial(const STWord& u) { return u.base().empty() && u.fiber() == 0; }

bool st_equal(const STWord& u, const STWord& v) {
  require_same_ambient(u, v);
  return st_is_trivial(st_multiply(u, st_invert(v)));
}

bool st_commute(const STWord& u, const STWord& v) {
  return st_equal(st_multiply(u, v), st_multiply(v, u));
}

int st_character(const STWord& u) { return orientation_character(u.base()); }

detail::KleinTriple klein_coordinates(const STWord& u) {
  if (regime(u.surface()) != Regime::Klein)
    throw InvalidInput("Klein coordinates need the Klein bottle");
  auto t = detail::klein_letters_to_triple(u.base().letters());
  return detail::klein_multiply(t, {0, 0, u.fiber()});
}

STWord klein_element(const detail::KleinTriple& t) {
  return STWord(SurfaceSpec::klein_bottle(), detail::klein_word(t.k, t.l), t.m);
}

LiftDecomposition decompose(const STWord& xi) {
  if (is_finite_regime(regime(xi.surface())))
    throw InvalidInput("decomposition is undefined for the sphere and projective plane");
  if (is_trivial(xi.base()))
    throw InvalidInput("decomposition needs a homotopically nontrivial base loop");
  const PrimitiveRoot pr = primitive_root(xi.base());
  const STWord root_lift(pr.root, 0);
  const STWord rest = st_multiply(st_invert(st_power(root_lift, pr.exponent)), xi);
  if (!rest.base().empty())
    throw Error("internal: primitive root power does not cover the base loop");
  return {root_lift, pr.exponent, rest.fiber()};
}

STWord recompose(const LiftDecomposition& d) {
  return st_multiply(st_power(d.root_lift, d.k), STWord::fiber_power(d.root_lift.surface(), d.l));
}

Verdict st_is_conjugate(const STWord& u, const STWord& v, int max_conjugator_length) {
  require_same_ambient(u, v);
  const SurfaceSpec& s = u.surface();
  const Regime r = regime(s);
  switch (r) {
    case Regime::Sphere:
    case Regime::RP2:
    case Regime::Torus:
      return u == v ? Verdict::Yes : Verdict::No;
    case Regime::Klein: {
      // Conjugation by g: (k, odd, m) -> (k + 2, odd, m); by h:
      // (k, l, m) -> (-k, l, -m); by f: (k, odd, m) -> (k, odd, m - 2).
      const auto a = klein_coordinates(u);
      const auto b = klein_coordinates(v);
      if (a.l != b.l) return Verdict::No;
      if (a.l % 2 != 0)
        return ((a.k - b.k) % 2 == 0 && (a.m - b.m) % 2 == 0) ? Verdict::Yes : Verdict::No;
      const bool same = a.k == b.k && a.m == b.m;
      const bool flipped = a.k == -b.k && a.m == -b.m;
      return (same || flipped) ? Verdict::Yes : Verdict::No;
    }
    default:
      break;
  }

  const bool u_trivial = is_trivial(u.base());
  const bool v_trivial = is_trivial(v.base());
  if (u_trivial || v_trivial) {
    if (u_trivial != v_trivial) return Verdict::No;
    // f^m is central over an orientable surface; any orientation-reversing
    // loop conjugates it to f^-m otherwise.
    if (s.orientable) return u.fiber() == v.fiber() ? Verdict::Yes : Verdict::No;
    return std::abs(u.fiber()) == std::abs(v.fiber()) ? Verdict::Yes : Verdict::No;
  }

  const ConjugacyResult base = conjugacy(u.base(), v.base(), max_conjugator_length);
  if (base.verdict != Verdict::Yes) return base.verdict;

  // Move u onto v's base, then compare fiber offsets against v's root lift.
  const STWord moved = st_conjugate(u, STWord(*base.conjugator, 0));
  const LiftDecomposition dv = decompose(v);
  const STWord rest =
      st_multiply(st_invert(st_power(dv.root_lift, dv.k)), moved);
  if (!rest.base().empty()) throw Error("internal: conjugator does not match base loops");
  const long lu = rest.fiber();
  const long lv = dv.l;

  // The base centralizer is generated by the root g; conjugating
  // g^k f^l by g gives g^k f^(eps(g) l), by f gives g^k f^(l + eps(g^k) - 1).
  if (st_character(dv.root_lift) == 1) return lu == lv ? Verdict::Yes : Verdict::No;
  if (dv.k % 2 != 0) return (lu - lv) % 2 == 0 ? Verdict::Yes : Verdict::No;
  return std::abs(lu) == std::abs(lv) ? Verdict::Yes : Verdict::No;
}

}  // namespace curvespace
