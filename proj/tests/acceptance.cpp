// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "curvespace/classify.hpp"
#include "curvespace/grammar.hpp"
#include "curvespace/oracle.hpp"

using namespace curvespace;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t) {
  return std::chrono::duration<double>(Clock::now() - t).count();
}

struct Outcome {
  bool pass = true;
  std::string note;
  void fail(const std::string& why) {
    if (pass) note = why;
    pass = false;
  }
};

struct Case {
  SurfaceSpec surface;
  std::string word;
  std::string label;
  GroupKind kind;
};

const SurfaceSpec kS2 = SurfaceSpec::sphere();
const SurfaceSpec kT2 = SurfaceSpec::torus();
const SurfaceSpec kRP2 = SurfaceSpec::projective_plane();
const SurfaceSpec kK = SurfaceSpec::klein_bottle();
const SurfaceSpec kG2 = SurfaceSpec::closed_orientable(2);
const SurfaceSpec kG3 = SurfaceSpec::closed_orientable(3);
const SurfaceSpec kN3 = SurfaceSpec::closed_nonorientable(3);
const SurfaceSpec kN4 = SurfaceSpec::closed_nonorientable(4);

std::vector<Case> battery() {
  std::vector<Case> out;
  auto add = [&](const SurfaceSpec& s, std::vector<std::string> words, const char* label, GroupKind k) {
    for (auto& w : words) out.push_back({s, w, label, k});
  };
  add(kS2, {"1", "f", "f^2", "f^3", "F"}, "Thm 1", GroupKind::Z2);
  add(kT2, {"1", "a1", "b1 f^2", "a1^2 B1^3 F", "f^4"}, "Thm 2", GroupKind::ZxZxZ);
  add(kRP2, {"1", "c1", "c1^2", "c1 f", "C1 F^3"}, "Thm 4", GroupKind::Z4);
  // Klein bottle, g = c1 c2, h = C2.
  add(kK, {"c1", "C2", "c1 f^3", "c2 F", "c1 c2 C2^3 f"}, "Thm 5 II", GroupKind::Z);
  add(kK, {"c1 c2", "f", "c1 c2 C2^2", "c1^2 c2^2 c1 c2 F^2", "C2 C1 c2^2 f^3"}, "Thm 5 I b",
      GroupKind::ZxZxZ);
  add(kK, {"1", "C2^2", "c2^2", "c1^2", "C2^6"}, "Thm 5 I a", GroupKind::FullSTGroup);
  add(kG2, {"a1", "a1 b1", "a1^2 f^3", "a1 b1 A1 B1"}, "Thm 3 I", GroupKind::ZxZ);
  add(kG3, {"a1 b2 F"}, "Thm 3 I", GroupKind::ZxZ);
  add(kG2, {"1", "f", "F^2", "a1 b1 A1 B1 a2 b2 A2 B2"}, "Thm 3 II", GroupKind::FullSTGroup);
  add(kG3, {"f^5"}, "Thm 3 II", GroupKind::FullSTGroup);
  add(kN3, {"c1", "c1 c2 c3", "c1 f", "c2 c1 c1 F^2"}, "Thm 6 I", GroupKind::Z);
  add(kN4, {"c1 c2 c3"}, "Thm 6 I", GroupKind::Z);
  add(kN3, {"c1 c2", "c1 c2 f^2", "c2 c3 F", "c1^2 f", "c1^2 F^2", "c2^4 f"}, "Thm 6 II a",
      GroupKind::ZxZ);
  add(kN4, {"c1 c3"}, "Thm 6 II a", GroupKind::ZxZ);
  add(kN3, {"c1^2", "c2^2", "c3^4", "c1 c2 c3 c1 c2 c3"}, "Thm 6 II b", GroupKind::KleinBottleGroup);
  add(kN4, {"c1^2"}, "Thm 6 II b", GroupKind::KleinBottleGroup);
  add(kN3, {"f", "F", "f^2", "c1^2 c2^2 c3^2"}, "Thm 6 III a",
      GroupKind::OrientationPreservingSubgroup);
  add(kN4, {"F^3"}, "Thm 6 III a", GroupKind::OrientationPreservingSubgroup);
  add(kN3, {"1", "c1 C1", "c1^2 c2^2 c3^2 f"}, "Thm 6 III b", GroupKind::FullSTGroup);
  add(kN4, {"1"}, "Thm 6 III b", GroupKind::FullSTGroup);
  add(SurfaceSpec::closed_nonorientable(5), {"1"}, "Thm 6 III b", GroupKind::FullSTGroup);
  return out;
}

std::string describe(const Case& c) { return format_surface(c.surface) + " [" + c.word + "]"; }

Outcome theorem_table(const std::vector<Case>& cases) {
  Outcome o;
  double worst = 0;
  for (const Case& c : cases) {
    const auto t = Clock::now();
    const ClassificationReport r = classify_pi1(c.surface, parse_stword(c.surface, c.word));
    worst = std::max(worst, seconds_since(t));
    if (r.case_label != c.label || r.group.kind != c.kind)
      o.fail(describe(c) + " gave " + r.case_label + " / " + std::string(to_string(r.group.kind)));
  }
  if (worst >= 1.0) o.fail("an input took " + std::to_string(worst) + " s");
  if (o.pass)
    o.note = std::to_string(cases.size()) + " inputs, slowest " + std::to_string(worst * 1e3) + " ms";
  return o;
}

Outcome oracle_agreement(const std::vector<Case>& cases) {
  Outcome o;
  const auto t = Clock::now();
  const oracle::SearchBound bound;
  for (const Case& c : cases) {
    const auto v = oracle::verify_classification(c.surface, parse_stword(c.surface, c.word), bound);
    if (!v.passed) {
      std::string why = describe(c) + ": " + v.detail;
      if (v.counterexample) why += " at " + format_stword(*v.counterexample);
      o.fail(why);
    }
  }
  const double total = seconds_since(t);
  if (total >= 60.0) o.fail("took " + std::to_string(total) + " s");
  if (o.pass)
    o.note = std::to_string(cases.size()) + " inputs at bounds (length " +
             std::to_string(bound.max_word_length) + ", fiber " + std::to_string(bound.max_fiber) +
             ", depth " + std::to_string(bound.max_depth) + ") in " + std::to_string(total) + " s";
  return o;
}

Outcome higher_homotopy() {
  Outcome o;
  for (const SurfaceSpec& s : {kS2, kRP2}) {
    if (classify_pin(s, 2).kind != GroupKind::Z) o.fail("pi_2 is not Z on " + format_surface(s));
    const GroupDescription g3 = classify_pin(s, 3);
    if (g3.kind != GroupKind::SymbolicSphereSum || g3.name() != "Z ⊕ π_4(S²)")
      o.fail("pi_3 rendered as " + g3.name());
    for (int n = 4; n <= 8; ++n) {
      const GroupDescription g = classify_pin(s, n);
      const std::string want =
          "π_" + std::to_string(n) + "(S²) ⊕ π_" + std::to_string(n + 1) + "(S²)";
      if (g.kind != GroupKind::SymbolicSphereSum || g.name() != want) o.fail("pi_n rendered as " + g.name());
    }
  }
  for (const SurfaceSpec& s : {kT2, kK, kG2, kG3, kN3, kN4, SurfaceSpec{true, 0, 1}, SurfaceSpec{false, 2, 1}})
    for (int n = 2; n <= 8; ++n)
      if (classify_pin(s, n).kind != GroupKind::TrivialGroup)
        o.fail("pi_" + std::to_string(n) + " nonzero on " + format_surface(s));
  if (o.pass) o.note = "sphere and RP2 for n = 2..8, eight other surfaces trivial for n = 2..8";
  return o;
}

Outcome property_suite() {
  Outcome o;
  const std::vector<SurfaceSpec> regimes{kS2, kT2, kRP2, kK, kG2, kN3, SurfaceSpec{true, 1, 2}};
  const int trials = 10000;
  std::size_t failures = 0;
  for (const SurfaceSpec& s : regimes) {
    std::mt19937_64 rng(0x5eed + static_cast<unsigned>(s.genus * 11 + s.punctures) +
                        (s.orientable ? 0u : 1000u));
    const Presentation p = presentation(s);
    const std::size_t n = p.generators.size();
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<long> fib(-3, 3);
    auto random = [&]() {
      LetterString w;
      for (int i = n ? len(rng) : 0; i > 0; --i)
        w.push_back({static_cast<int>(rng() % n), rng() % 2 ? 1 : -1});
      return STWord(s, std::move(w), fib(rng));
    };
    const STWord f = STWord::fiber_power(s, 1);
    for (int trial = 0; trial < trials; ++trial) {
      const STWord a = random(), b = random(), c = random();
      bool ok = st_multiply(st_multiply(a, b), c) == st_multiply(a, st_multiply(b, c));
      ok = ok && st_multiply(a, st_invert(a)) == STWord::identity(s);
      ok = ok && st_character(st_multiply(a, b)) == st_character(a) * st_character(b);
      ok = ok && st_multiply(a, f) == st_multiply(STWord::fiber_power(s, st_character(a)), a);
      if (!is_finite_regime(regime(s)) && !is_trivial(a.base()))
        ok = ok && recompose(decompose(a)) == a;
      if (!ok) {
        if (failures == 0)
          o.fail(format_surface(s) + " at " + format_stword(a) + ", " + format_stword(b) + ", " +
                 format_stword(c));
        ++failures;
      }
    }
  }
  if (failures) o.note += " (" + std::to_string(failures) + " failing trials)";
  if (o.pass)
    o.note = std::to_string(trials) + " trials in each of " + std::to_string(regimes.size()) +
             " regimes, zero failures";
  return o;
}

Outcome presentation_sanity() {
  Outcome o;
  for (int g : {2, 3}) {
    const oracle::Abelianization ab(st_presentation(SurfaceSpec::closed_orientable(g)));
    if (ab.free_rank() != 2 * g || ab.torsion() != std::vector<long>{2L * g - 2})
      o.fail("genus " + std::to_string(g) + " gives " + ab.describe());
  }
  if (oracle::group_order(st_presentation(kS2)) != 2u) o.fail("sphere group order");
  if (oracle::group_order(st_presentation(kRP2)) != 4u) o.fail("RP2 group order");
  if (oracle::bounded_box(kS2, {}).size() != 2) o.fail("sphere element enumeration");
  if (oracle::bounded_box(kRP2, {}).size() != 4) o.fail("RP2 element enumeration");
  if (o.pass) o.note = "Z^4 ⊕ Z/2, Z^6 ⊕ Z/4; orders 2 and 4 by coset and element enumeration";
  return o;
}

CurveOnSurface curve(const char* name) {
  return read_curve_file(std::string(CURVES_DIR) + "/" + name);
}

Outcome curve_ingestion() {
  Outcome o;
  if (turning_number(curve("circle.curve").polyline) != 1) o.fail("counterclockwise square");
  if (turning_number(curve("circle_cw.curve").polyline) != -1) o.fail("clockwise square");

  const CurveOnSurface fig8 = curve("fig8.curve");
  for (const SurfaceSpec& s : {kT2, kG2, kN3}) {
    const STWord x = lift(fig8, s);
    if (!st_is_trivial(x)) o.fail("figure eight lift on " + format_surface(s));
  }
  // On the torus every centralizer is all of Z^3 = pi_1(ST T^2): the answer
  // is reported through the torus theorem, with the full generating set.
  const ClassificationReport t = classify_pi1(kT2, lift(fig8, kT2));
  const std::vector<STWord> full{STWord::generator(kT2, 0), STWord::generator(kT2, 1),
                                 STWord::fiber_power(kT2, 1)};
  if (t.case_label != "Thm 2" || t.group.witnesses != full) o.fail("figure eight on the torus");
  const ClassificationReport g = classify_pi1(kG2, lift(fig8, kG2));
  if (g.case_label != "Thm 3 II" || g.group.kind != GroupKind::FullSTGroup)
    o.fail("figure eight on genus 2");
  const ClassificationReport n = classify_pi1(kN3, lift(fig8, kN3));
  if (n.case_label != "Thm 6 III b" || n.group.kind != GroupKind::FullSTGroup)
    o.fail("figure eight on nonorientable genus 3");

  const STWord h = lift(curve("torus_horizontal.curve"), kT2);
  if (!(h == STWord::generator(kT2, 0))) o.fail("horizontal torus loop lifts to " + format_stword(h));
  if (classify_pi1(kT2, h).group.kind != GroupKind::ZxZxZ) o.fail("horizontal torus loop kind");
  if (o.pass)
    o.note = "turning +1/-1; figure eight trivial (torus: Thm 2 with generators a1, b1, f; "
             "genus 2: Thm 3 II; k=3: Thm 6 III b); horizontal loop a1, ZxZxZ";
  return o;
}

Outcome regular_homotopy() {
  Outcome o;
  for (long a = -2; a <= 2; ++a)
    for (long b = -2; b <= 2; ++b) {
      const Verdict v = regular_homotopy_equivalent(kT2, STWord::fiber_power(kT2, a),
                                                    STWord::fiber_power(kT2, b));
      if (v != (a == b ? Verdict::Yes : Verdict::No))
        o.fail("torus f^" + std::to_string(a) + " vs f^" + std::to_string(b));
    }
  if (regular_homotopy_equivalent(kK, STWord::fiber_power(kK, 1), STWord::fiber_power(kK, -1)) !=
      Verdict::Yes)
    o.fail("Klein f vs f^-1");
  if (regular_homotopy_equivalent(kK, STWord::fiber_power(kK, 1), STWord::fiber_power(kK, 2)) !=
      Verdict::No)
    o.fail("Klein f vs f^2");
  if (o.pass) o.note = "torus 5x5 table is the identity; Klein f ~ f^-1, f !~ f^2";
  return o;
}

}  // namespace

int main() {
  const std::vector<Case> cases = battery();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"theorem table", [&] { return theorem_table(cases); }},
      {"oracle agreement", [&] { return oracle_agreement(cases); }},
      {"higher homotopy", higher_homotopy},
      {"algebra properties", property_suite},
      {"presentation sanity", presentation_sanity},
      {"curve ingestion", curve_ingestion},
      {"regular homotopy", regular_homotopy},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    std::printf("criterion %zu %-20s %s  %s\n", i + 1, criteria[i].first, o.pass ? "PASS" : "FAIL",
                o.note.c_str());
    failed += !o.pass;
  }
  return failed == 0 ? 0 : 1;
}
