#include <cmath>

#include "doctest.h"
#include "etrans/cartan.hpp"

using namespace etrans;

namespace {

Vec2<Rational> unit(int i) { return i == 0 ? Vec2<Rational>{1, 0} : Vec2<Rational>{0, 1}; }

}  // namespace

TEST_CASE("Cartan matrices") {
  CHECK(cartan_data(GroupId::A2).cartan == Mat2<std::int64_t>{{{2, -1}, {-1, 2}}});
  CHECK(cartan_data(GroupId::C2).cartan == Mat2<std::int64_t>{{{2, -1}, {-2, 2}}});
  CHECK(cartan_data(GroupId::G2).cartan == Mat2<std::int64_t>{{{2, -3}, {-1, 2}}});
  CHECK(cartan_data(GroupId::A1xA1).cartan == Mat2<std::int64_t>{{{2, 0}, {0, 2}}});

  CHECK(cartan_data(GroupId::A1xA1).cartan_det == 4);
  CHECK(cartan_data(GroupId::A2).cartan_det == 3);
  CHECK(cartan_data(GroupId::C2).cartan_det == 2);
  CHECK(cartan_data(GroupId::G2).cartan_det == 1);
}

TEST_CASE("inverse and adjugate agree") {
  for (GroupId g : kAllGroups) {
    const auto& d = cartan_data(g);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        Rational s(0);
        for (int k = 0; k < 2; ++k) s += Rational(d.cartan[i][k]) * d.cartan_inv[k][j];
        CHECK(s == Rational(i == j ? 1 : 0));
        CHECK(d.cartan_inv[i][j] * Rational(d.cartan_det) == Rational(d.cartan_adj[i][j]));
      }
  }
}

TEST_CASE("fundamental weights are dual to coroots") {
  for (GroupId g : kAllGroups)
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(inner(g, unit(i), Basis::omega, unit(j), Basis::alpha_check) == Rational(i == j ? 1 : 0));
}

TEST_CASE("highest root has squared length 2 and the marks expand it") {
  for (GroupId g : {GroupId::A2, GroupId::C2, GroupId::G2}) {
    const auto& d = cartan_data(g);
    Vec2<Rational> h{d.highest_root_marks[0], d.highest_root_marks[1]};
    CHECK(inner(g, h, Basis::alpha, h, Basis::alpha) == Rational(2));
    auto hc = convert(g, h, Basis::alpha, Basis::alpha_check);
    CHECK(hc[0] == Rational(d.comarks[0]));
    CHECK(hc[1] == Rational(d.comarks[1]));
  }
}

TEST_CASE("basis conversions round trip") {
  const Vec2<Rational> v{Rational(3, 2), Rational(-5, 7)};
  for (GroupId g : kAllGroups)
    for (Basis a : {Basis::alpha, Basis::omega, Basis::alpha_check, Basis::omega_check})
      for (Basis b : {Basis::alpha, Basis::omega, Basis::alpha_check, Basis::omega_check}) {
        auto w = convert(g, convert(g, v, a, b), b, a);
        CHECK(w[0] == v[0]);
        CHECK(w[1] == v[1]);
      }
}

TEST_CASE("pairing of weights with coweights") {
  // <lambda, x> = lambda^T C^{-1} x.
  CHECK(pairing(GroupId::A2, Weight{1, 0}, Vec2<Rational>{1, 0}) == Rational(2, 3));
  CHECK(pairing(GroupId::C2, Weight{0, 1}, Vec2<Rational>{0, 1}) == Rational(1));
  CHECK(pairing(GroupId::G2, Weight{1, 0}, Vec2<Rational>{1, 0}) == Rational(2));
  CHECK(pairing(GroupId::A2, Weight{2, 1}, DomainPoint{0.5, 0.25}) ==
        doctest::Approx(to_double(pairing(GroupId::A2, Weight{2, 1}, Vec2<Rational>{Rational(1, 2), Rational(1, 4)}))));
}

TEST_CASE("orthonormal embedding is isometric") {
  for (GroupId g : kAllGroups) {
    const Vec2<double> u{0.3, -1.1}, v{2.0, 0.7};
    auto pu = to_orthonormal(g, u, Basis::omega_check);
    auto pv = to_orthonormal(g, v, Basis::omega_check);
    double want = to_double(inner(g, {Rational(3, 10), Rational(-11, 10)}, Basis::omega_check, {2, Rational(7, 10)},
                                  Basis::omega_check));
    CHECK(pu[0] * pv[0] + pu[1] * pv[1] == doctest::Approx(want).epsilon(1e-13));
    auto back = from_orthonormal(g, pu);
    CHECK(back.x == doctest::Approx(u[0]));
    CHECK(back.y == doctest::Approx(u[1]));
  }
}

TEST_CASE("group names") {
  CHECK(parse_group("c2") == GroupId::C2);
  CHECK(parse_group("B2") == GroupId::C2);
  CHECK(parse_group("A1xA1") == GroupId::A1xA1);
  CHECK(parse_group("a1a1") == GroupId::A1xA1);
  CHECK(parse_group("G2") == GroupId::G2);
  CHECK_THROWS_AS(parse_group("E8"), InvalidArgument);
  for (GroupId g : kAllGroups) CHECK(parse_group(to_string(g)) == g);
}
