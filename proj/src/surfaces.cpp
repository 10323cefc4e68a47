#include "curvespace/surfaces.hpp"

#include <algorithm>
#include <cstdlib>

#include "curvespace/error.hpp"

namespace curvespace {

std::string_view to_string(Regime r) {
  switch (r) {
    case Regime::Sphere: return "Sphere";
    case Regime::Torus: return "Torus";
    case Regime::RP2: return "RP2";
    case Regime::Klein: return "Klein";
    case Regime::ClosedOrientableHyperbolic: return "ClosedOrientableHyperbolic";
    case Regime::ClosedNonorientableHyperbolic: return "ClosedNonorientableHyperbolic";
    case Regime::Punctured: return "Punctured";
  }
  return "?";
}

void validate(const SurfaceSpec& spec) {
  if (spec.genus < 0) throw InvalidInput("genus must be nonnegative");
  if (spec.punctures < 0) throw InvalidInput("puncture count must be nonnegative");
  if (!spec.orientable && spec.genus < 1)
    throw InvalidInput("a nonorientable surface needs at least one crosscap");
}

Regime regime(const SurfaceSpec& spec) {
  validate(spec);
  if (spec.punctures > 0) return Regime::Punctured;
  if (spec.orientable) {
    if (spec.genus == 0) return Regime::Sphere;
    if (spec.genus == 1) return Regime::Torus;
    return Regime::ClosedOrientableHyperbolic;
  }
  if (spec.genus == 1) return Regime::RP2;
  if (spec.genus == 2) return Regime::Klein;
  return Regime::ClosedNonorientableHyperbolic;
}

int euler_characteristic(const SurfaceSpec& spec) {
  validate(spec);
  return spec.orientable ? 2 - 2 * spec.genus - spec.punctures
                         : 2 - spec.genus - spec.punctures;
}

LetterString inverse(const LetterString& w) {
  LetterString out;
  out.reserve(w.size());
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
  return out;
}

std::size_t free_reduce(LetterString& w) {
  std::size_t kept = 0;
  std::size_t cancelled = 0;
  for (const Letter& x : w) {
    if (kept > 0 && w[kept - 1] == x.inverse()) {
      --kept;
      ++cancelled;
    } else {
      w[kept++] = x;
    }
  }
  w.resize(kept);
  return cancelled;
}

int Presentation::character(const LetterString& w) const {
  int eps = 1;
  for (const Letter& x : w) eps *= character(x);
  return eps;
}

int Presentation::find(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

namespace {

void add_generators(Presentation& p, char letter, int count, int character) {
  for (int i = 1; i <= count; ++i)
    p.generators.push_back({std::string(1, letter) + std::to_string(i), character});
}

// Generators and (for closed surfaces) the surface relator.
Presentation base_presentation(const SurfaceSpec& spec) {
  Presentation p;
  if (spec.orientable) {
    for (int i = 1; i <= spec.genus; ++i) {
      p.generators.push_back({"a" + std::to_string(i), 1});
      p.generators.push_back({"b" + std::to_string(i), 1});
    }
  } else {
    add_generators(p, 'c', spec.genus, -1);
  }
  if (spec.punctures > 0) {
    add_generators(p, 'd', spec.punctures - 1, 1);
    return p;
  }
  LetterString relator;
  if (spec.orientable) {
    for (int i = 0; i < spec.genus; ++i) {
      const int a = 2 * i;
      const int b = 2 * i + 1;
      relator.insert(relator.end(), {{a, 1}, {b, 1}, {a, -1}, {b, -1}});
    }
  } else {
    for (int i = 0; i < spec.genus; ++i) relator.insert(relator.end(), {{i, 1}, {i, 1}});
  }
  if (!relator.empty()) p.relators.push_back(std::move(relator));
  return p;
}

}  // namespace

Presentation presentation(const SurfaceSpec& spec) {
  validate(spec);
  return base_presentation(spec);
}

Presentation st_presentation(const SurfaceSpec& spec) {
  validate(spec);
  Presentation p = base_presentation(spec);
  const int f = static_cast<int>(p.generators.size());
  p.generators.push_back({"f", 1});

  if (regime(spec) == Regime::Sphere) {
    p.relators.push_back({{f, 1}, {f, 1}});
    return p;
  }
  const int chi = euler_characteristic(spec);
  for (LetterString& r : p.relators)
    for (int i = 0; i < std::abs(chi); ++i) r.push_back({f, chi > 0 ? -1 : 1});
  for (int x = 0; x < f; ++x) {
    const int twist = p.generators[static_cast<std::size_t>(x)].character;
    p.relators.push_back({{x, 1}, {f, 1}, {x, -1}, {f, -twist}});
  }
  return p;
}

}  // namespace curvespace
