#include <doctest.h>

#include <random>

#include "curvespace/classify.hpp"
#include "curvespace/error.hpp"
#include "curvespace/grammar.hpp"
#include "support.hpp"

using namespace curvespace;

namespace {

const SurfaceSpec kKlein = SurfaceSpec::klein_bottle();
const SurfaceSpec kN3 = SurfaceSpec::closed_nonorientable(3);
const SurfaceSpec kG2 = SurfaceSpec::closed_orientable(2);

STWord st(const SurfaceSpec& s, const char* text) { return parse_stword(s, text); }

GroupKind kind_for(const std::string& label) {
  if (label == "Thm 1") return GroupKind::Z2;
  if (label == "Thm 4") return GroupKind::Z4;
  if (label == "Thm 2" || label == "Thm 5 I b") return GroupKind::ZxZxZ;
  if (label == "Thm 5 II" || label == "Thm 6 I") return GroupKind::Z;
  if (label == "Thm 3 I" || label == "Thm 6 II a") return GroupKind::ZxZ;
  if (label == "Thm 6 II b") return GroupKind::KleinBottleGroup;
  if (label == "Thm 6 III a") return GroupKind::OrientationPreservingSubgroup;
  return GroupKind::FullSTGroup;  // Thm 3 II, Thm 5 I a, Thm 6 III b
}

}  // namespace

TEST_SUITE("classify") {

TEST_CASE("examples") {
  auto r = classify_pi1(SurfaceSpec::sphere(), st(SurfaceSpec::sphere(), "f"));
  CHECK(r.case_label == "Thm 1");
  CHECK(r.group.kind == GroupKind::Z2);

  r = classify_pi1(kKlein, st(kKlein, "C2^2"));
  CHECK(r.case_label == "Thm 5 I a");
  CHECK(r.group.kind == GroupKind::FullSTGroup);
  CHECK(r.group.presentation.has_value());

  r = classify_pi1(kN3, st(kN3, "c1^2"));
  CHECK(r.case_label == "Thm 6 II b");
  REQUIRE(r.group.kind == GroupKind::KleinBottleGroup);
  REQUIRE(r.group.witnesses.size() == 2);
  CHECK(r.group.witnesses[0] == st(kN3, "c1"));
  CHECK(r.group.witnesses[1] == st(kN3, "f"));
  REQUIRE(r.group.presentation.has_value());
  CHECK(r.group.presentation->relators.size() == 1);

  r = classify_pi1(kG2, st(kG2, "f^3"));
  CHECK(r.case_label == "Thm 3 II");
  CHECK(r.group.kind == GroupKind::FullSTGroup);

  r = classify_pi1(SurfaceSpec::torus(), st(SurfaceSpec::torus(), "a1^2 b1 f"));
  CHECK(r.case_label == "Thm 2");
  CHECK(r.group.witnesses.size() == 3);
}

TEST_CASE("Klein bottle cases") {
  // g = c1 c2, h = C2
  auto r = classify_pi1(kKlein, st(kKlein, "c1 c2 C2 f^2"));  // g h f^2
  CHECK(r.case_label == "Thm 5 II");
  REQUIRE(r.group.witnesses.size() == 1);
  const STWord alpha = r.group.witnesses[0];
  CHECK(st_power(alpha, 2) == st(kKlein, "C2^2"));

  r = classify_pi1(kKlein, st(kKlein, "c1 c2 C2^2"));
  CHECK(r.case_label == "Thm 5 I b");
  r = classify_pi1(kKlein, st(kKlein, "f"));
  CHECK(r.case_label == "Thm 5 I b");
  r = classify_pi1(kKlein, STWord::identity(kKlein));
  CHECK(r.case_label == "Thm 5 I a");
}

TEST_CASE("Klein odd case identities") {
  // xi = alpha^l with alpha = g^k h f^m and alpha^2 = h^2 whenever l is odd.
  const STWord h2 = st(kKlein, "C2^2");
  for (long k = -3; k <= 3; ++k)
    for (long l = -5; l <= 5; l += 2)
      for (long m = -3; m <= 3; ++m) {
        const STWord xi = klein_element({k, l, m});
        const auto r = classify_pi1(kKlein, xi);
        REQUIRE(r.case_label == "Thm 5 II");
        const STWord alpha = r.group.witnesses.at(0);
        CHECK(st_power(alpha, 2) == h2);
        CHECK(st_power(alpha, l) == xi);
      }
}

TEST_CASE("nonorientable cases") {
  CHECK(classify_pi1(kN3, st(kN3, "c1")).case_label == "Thm 6 I");
  CHECK(classify_pi1(kN3, st(kN3, "c1 c2")).case_label == "Thm 6 II a");
  CHECK(classify_pi1(kN3, st(kN3, "c1^2 f")).case_label == "Thm 6 II a");
  CHECK(classify_pi1(kN3, st(kN3, "c1^2")).case_label == "Thm 6 II b");
  CHECK(classify_pi1(kN3, st(kN3, "f^2")).case_label == "Thm 6 III a");
  CHECK(classify_pi1(kN3, st(kN3, "1")).case_label == "Thm 6 III b");

  const auto r = classify_pi1(kN3, st(kN3, "c1 c2 c1 f"));
  REQUIRE(r.case_label == "Thm 6 I");
  const STWord w = r.group.witnesses.at(0);
  CHECK(st_equal(st_power(w, 2), st_power(r.decomposition->root_lift, 2)));
}

TEST_CASE("Klein bottle group witnesses satisfy x y x^-1 y") {
  for (const char* text : {"c1^2", "c2^4", "c1 c2 c3 c1 c2 c3"}) {
    const auto r = classify_pi1(kN3, st(kN3, text));
    if (r.group.kind != GroupKind::KleinBottleGroup) continue;
    const STWord& x = r.group.witnesses[0];
    const STWord& y = r.group.witnesses[1];
    CHECK(st_is_trivial(st_multiply(st_multiply(st_multiply(x, y), st_invert(x)), y)));
  }
}

TEST_CASE("witness soundness and label totality") {
  std::mt19937_64 rng(31);
  for (const SurfaceSpec& s : testing::regime_battery()) {
    for (int trial = 0; trial < 150; ++trial) {
      const STWord xi = testing::random_stword(rng, s, 5, 3);
      const auto r = classify_pi1(s, xi);
      CHECK_FALSE(r.case_label.empty());
      if (regime(s) != Regime::Punctured) CHECK(r.group.kind == kind_for(r.case_label));
      const std::size_t rank = r.group.expected_witness_count();
      if (rank) CHECK(r.group.witnesses.size() == rank);
      for (const STWord& w : r.group.witnesses) CHECK(st_commute(w, xi));
    }
  }
}

TEST_CASE("higher homotopy") {
  CHECK(classify_pin(SurfaceSpec::projective_plane(), 2).kind == GroupKind::Z);
  CHECK(classify_pin(SurfaceSpec::torus(), 5).kind == GroupKind::TrivialGroup);
  const auto g = classify_pin(SurfaceSpec::sphere(), 3);
  CHECK(g.kind == GroupKind::SymbolicSphereSum);
  CHECK(g.name() == "Z ⊕ π_4(S²)");
  CHECK(classify_pin(SurfaceSpec::sphere(), 6).name() == "π_6(S²) ⊕ π_7(S²)");
  CHECK_THROWS_AS(classify_pin(SurfaceSpec::sphere(), 1), InvalidInput);
}

TEST_CASE("regular homotopy") {
  const auto t = SurfaceSpec::torus();
  CHECK(regular_homotopy_equivalent(t, st(t, "1"), STWord::identity(t)) == Verdict::Yes);
  CHECK(regular_homotopy_equivalent(t, st(t, "f"), st(t, "F")) == Verdict::No);
  CHECK(regular_homotopy_equivalent(kKlein, st(kKlein, "f"), st(kKlein, "F")) == Verdict::Yes);
  CHECK_THROWS_AS(regular_homotopy_equivalent(t, st(kKlein, "f"), st(t, "f")), AmbientMismatch);
}

TEST_CASE("surface mismatch") {
  CHECK_THROWS_AS(classify_pi1(kG2, st(kN3, "c1")), AmbientMismatch);
}

}  // TEST_SUITE
