#pragma once

// Test-side models of the tangent bundle groups, written without any of the
// library's rewriting code. Each model evaluates a letter string over
// st_presentation(s) (surface generators, then f) to a concrete group
// element; two words name the same element exactly when their values agree.

#include <cstdint>
#include <cstdlib>
#include <random>
#include <stdexcept>
#include <variant>
#include <vector>

#include "curvespace/stbundle.hpp"

namespace testing {

using namespace curvespace;

// Deck transformations of R^2 x R (plane times the angle line) covering the
// unit tangent bundle of the Klein bottle:
//   (x, y, t) -> (x + i, s y + b, s t + 2 pi n),  s = (-1)^i.
struct KleinDeck {
  long i = 0;
  long b = 0;
  long s = 1;
  long n = 0;
  friend bool operator==(const KleinDeck&, const KleinDeck&) = default;
};

inline KleinDeck compose(const KleinDeck& a, const KleinDeck& c) {
  return {a.i + c.i, a.s * c.b + a.b, a.s * c.s, a.s * c.n + a.n};
}

inline KleinDeck inverse(const KleinDeck& a) {
  // y = s y' + b  =>  y' = s (y - b)
  return {-a.i, -a.s * a.b, a.s, -a.s * a.n};
}

// c1 = (x + 1, 2 - y), c2 = (x - 1, 1 - y), f = rotation by one full turn.
inline KleinDeck klein_generator(int g) {
  switch (g) {
    case 0: return {1, 2, -1, 0};
    case 1: return {-1, 1, -1, 0};
    default: return {0, 0, 1, 1};
  }
}

// Torus: translations of R^2 x R.
struct TorusDeck {
  long p = 0, q = 0, n = 0;
  friend bool operator==(const TorusDeck&, const TorusDeck&) = default;
};

// Free group times Z, twisted by the orientation character: the group of a
// punctured surface's tangent bundle, which is trivial over the surface.
struct FreeTwisted {
  std::vector<std::pair<int, int>> word;  // (generator, sign), freely reduced
  long n = 0;
  friend bool operator==(const FreeTwisted&, const FreeTwisted&) = default;
};

using ModelValue = std::variant<long, TorusDeck, KleinDeck, FreeTwisted>;

// Evaluates letters over st_presentation(s). Generator index
// presentation(s).generators.size() is f. Only non-hyperbolic regimes.
inline ModelValue evaluate(const SurfaceSpec& s, const LetterString& w) {
  const Presentation base = presentation(s);
  const int f = static_cast<int>(base.generators.size());
  switch (regime(s)) {
    case Regime::Sphere: {
      long r = 0;
      for (const Letter& x : w) r += x.sign;
      return ((r % 2) + 2) % 2;
    }
    case Regime::RP2: {
      long r = 0;
      for (const Letter& x : w) r += x.sign * (x.generator == f ? 2 : 1);
      return ((r % 4) + 4) % 4;
    }
    case Regime::Torus: {
      TorusDeck t;
      for (const Letter& x : w) (x.generator == 0 ? t.p : x.generator == 1 ? t.q : t.n) += x.sign;
      return t;
    }
    case Regime::Klein: {
      KleinDeck d;
      for (const Letter& x : w) {
        const KleinDeck g = klein_generator(x.generator == f ? 2 : x.generator);
        d = compose(d, x.sign > 0 ? g : inverse(g));
      }
      return d;
    }
    case Regime::Punctured: {
      // w f^n: moving f^n right past a letter x multiplies n by eps(x).
      FreeTwisted t;
      for (const Letter& x : w) {
        if (x.generator == f) {
          t.n += x.sign;
          continue;
        }
        t.n *= base.generators[static_cast<std::size_t>(x.generator)].character;
        if (!t.word.empty() && t.word.back().first == x.generator &&
            t.word.back().second == -x.sign)
          t.word.pop_back();
        else
          t.word.push_back({x.generator, x.sign});
      }
      return t;
    }
    default:
      break;
  }
  throw std::logic_error("no exact model for this regime");
}

// Letters of u over st_presentation(u.surface()).
inline LetterString st_letters(const STWord& u) {
  LetterString w = u.base().letters();
  const int f = static_cast<int>(presentation(u.surface()).generators.size());
  for (long i = 0; i < std::abs(u.fiber()); ++i) w.push_back({f, u.fiber() > 0 ? 1 : -1});
  return w;
}

inline ModelValue evaluate(const STWord& u) { return evaluate(u.surface(), st_letters(u)); }

inline LetterString random_letters(std::mt19937_64& rng, std::size_t generators, int max_len) {
  std::uniform_int_distribution<int> len(0, max_len);
  std::uniform_int_distribution<int> gen(0, static_cast<int>(generators) - 1);
  std::bernoulli_distribution sign(0.5);
  LetterString w;
  for (int i = len(rng); i > 0; --i) w.push_back({gen(rng), sign(rng) ? 1 : -1});
  return w;
}

inline STWord random_stword(std::mt19937_64& rng, const SurfaceSpec& s, int max_len = 8,
                            long max_fiber = 4) {
  const std::size_t n = presentation(s).generators.size();
  std::uniform_int_distribution<long> fib(-max_fiber, max_fiber);
  LetterString w = n ? random_letters(rng, n, max_len) : LetterString{};
  return STWord(s, std::move(w), fib(rng));
}

inline std::vector<SurfaceSpec> regime_battery() {
  return {SurfaceSpec::sphere(),
          SurfaceSpec::torus(),
          SurfaceSpec::projective_plane(),
          SurfaceSpec::klein_bottle(),
          SurfaceSpec::closed_orientable(2),
          SurfaceSpec::closed_orientable(3),
          SurfaceSpec::closed_nonorientable(3),
          SurfaceSpec::closed_nonorientable(4),
          SurfaceSpec{true, 1, 1},
          SurfaceSpec{false, 2, 2}};
}

}  // namespace testing
