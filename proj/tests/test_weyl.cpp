#include <random>
#include <set>

#include "doctest.h"
#include "etrans/orbitfunc.hpp"

using namespace etrans;

namespace {

// Orbit by breadth-first search over the generating reflections.
std::set<Weight> brute_orbit(GroupId g, Weight l, bool even) {
  std::vector<WeylElement> gens{simple_reflection(g, 1), simple_reflection(g, 2)};
  if (even) gens = {gens[0] * gens[1], gens[1] * gens[0]};
  if (even && g == GroupId::A1xA1) gens = {WeylElement{}};
  std::set<Weight> seen{l};
  std::vector<Weight> todo{l};
  while (!todo.empty()) {
    Weight w = todo.back();
    todo.pop_back();
    for (const auto& s : gens)
      if (seen.insert(s.apply(w)).second) todo.push_back(s.apply(w));
  }
  return seen;
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(generate_group(GroupId::A1xA1, false).size() == 4);
  CHECK(generate_group(GroupId::A2, false).size() == 6);
  CHECK(generate_group(GroupId::C2, false).size() == 8);
  CHECK(generate_group(GroupId::G2, false).size() == 12);
  for (GroupId g : {GroupId::A2, GroupId::C2, GroupId::G2}) {
    CHECK(generate_group(g, true).size() * 2 == generate_group(g, false).size());
    CHECK(symmetry_group(g).size() == generate_group(g, true).size());
    for (const auto& w : generate_group(g, true)) CHECK(w.parity == Parity::even);
  }
  CHECK(symmetry_group(GroupId::A1xA1).size() == 1);
}

TEST_CASE("simple reflections") {
  for (GroupId g : kAllGroups)
    for (int i = 1; i <= 2; ++i) {
      const auto r = simple_reflection(g, i);
      CHECK(r * r == WeylElement{});
      const auto& C = cartan_data(g).cartan;
      Weight alpha{C[i - 1][0], C[i - 1][1]};
      CHECK(r.apply(alpha) == -alpha);
      CHECK(r.parity == Parity::odd);
    }
  CHECK_THROWS_AS(simple_reflection(GroupId::A2, 3), InvalidArgument);
}

TEST_CASE("pairing is W-invariant") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-2, 2);
  for (GroupId g : kAllGroups)
    for (const auto& w : generate_group(g, false)) {
      Weight l{3, -2};
      DomainPoint x{u(rng), u(rng)};
      CHECK(pairing(g, w.apply(l), w.apply(x)) == doctest::Approx(pairing(g, l, x)).epsilon(1e-12));
    }
}

TEST_CASE("orbits agree with breadth-first search") {
  for (GroupId g : kAllGroups)
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = -3; b <= 3; ++b)
        for (bool even : {false, true}) {
          auto o = orbit(g, {a, b}, even);
          auto ref = brute_orbit(g, {a, b}, even);
          CHECK(std::set<Weight>(o.begin(), o.end()) == ref);
          CHECK(std::is_sorted(o.begin(), o.end()));
        }
}

TEST_CASE("every E-orbit meets P_e exactly once") {
  for (GroupId g : kAllGroups)
    for (std::int64_t a = -5; a <= 5; ++a)
      for (std::int64_t b = -5; b <= 5; ++b) {
        int hits = 0;
        for (const auto& m : orbit(g, {a, b}, true)) hits += in_Pe(g, m) ? 1 : 0;
        CHECK(hits == 1);
        Weight c = canonical_label(g, {a, b});
        CHECK(in_Pe(g, c));
        CHECK(in_P_plus(dominant_label(g, {a, b})));
      }
}

TEST_CASE("reduction into the fundamental domains") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> u(-4, 4);
  for (GroupId g : kAllGroups)
    for (int k = 0; k < 300; ++k) {
      DomainPoint x{u(rng), u(rng)};
      for (bool even : {false, true}) {
        auto red = reduce_to_fundamental(g, x, even);
        CHECK(in_fundamental_domain(g, red.point, even, 1e-9));
        auto back = red.transform.inverse(red.point);
        CHECK(back.x == doctest::Approx(x.x).epsilon(1e-9));
        CHECK(back.y == doctest::Approx(x.y).epsilon(1e-9));
        if (even) CHECK(red.transform.parity == Parity::even);
        OrbitKind kind = even ? OrbitKind::E : OrbitKind::C;
        Weight l{2, 1};
        CHECK(std::abs(eval_generic(g, kind, l, red.point) - eval_generic(g, kind, l, x)) < 1e-10);
      }
    }
}

TEST_CASE("congruence classes are additive and roots are in class 0") {
  for (GroupId g : kAllGroups) {
    const auto& C = cartan_data(g).cartan;
    const int s = static_cast<int>(center_elements(g).size());
    CHECK(congruence_class(g, {C[0][0], C[0][1]}) == 0);
    CHECK(congruence_class(g, {C[1][0], C[1][1]}) == 0);
    for (std::int64_t a = -3; a <= 3; ++a)
      for (std::int64_t b = -3; b <= 3; ++b) {
        int c = congruence_class(g, {a, b});
        CHECK(c >= 0);
        CHECK(c < s);
        // The class is fixed by the Weyl group.
        for (const auto& w : generate_group(g, false)) CHECK(congruence_class(g, w.apply(Weight{a, b})) == c);
      }
  }
  CHECK(congruence_class(GroupId::A2, {1, 0}) != congruence_class(GroupId::A2, {0, 1}));
  // alpha1 + alpha2 = (0,1) is a root of C2.
  CHECK(congruence_class(GroupId::C2, {0, 1}) == 0);
  CHECK(congruence_class(GroupId::C2, {1, 0}) == 1);
}

TEST_CASE("characters of the center are orthogonal") {
  for (GroupId g : kAllGroups) {
    const int s = static_cast<int>(center_elements(g).size());
    for (int i = 0; i < s; ++i)
      for (int j = 0; j < s; ++j) {
        Complex sum{0, 0};
        for (int k = 0; k < s; ++k) sum += character(g, i, k) * std::conj(character(g, j, k));
        CHECK(std::abs(sum - Complex(i == j ? s : 0, 0)) < 1e-12);
      }
  }
}

TEST_CASE("center elements act on E-functions through their character") {
  for (GroupId g : kAllGroups) {
    const auto z = center_elements(g);
    for (std::size_t k = 0; k < z.size(); ++k) {
      Weight l{2, 3};
      DomainPoint x{0.21, 0.13};
      DomainPoint y{x.x + static_cast<double>(z[k][0]), x.y + static_cast<double>(z[k][1])};
      Complex lhs = eval_generic(g, OrbitKind::E, l, y);
      Complex rhs = character(g, congruence_class(g, l), static_cast<int>(k)) * eval_generic(g, OrbitKind::E, l, x);
      CHECK(std::abs(lhs - rhs) < 1e-12);
    }
  }
}
