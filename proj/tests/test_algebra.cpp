#include <algorithm>
#include <random>

#include "doctest.h"
#include "etrans/algebra.hpp"

using namespace etrans;

namespace {

std::vector<Weight> raw_labels(const LabelMultiset& m) {
  std::vector<Weight> v;
  for (const auto& t : m.raw) v.push_back(t.label);
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Weight> sorted(std::vector<Weight> v) {
  std::sort(v.begin(), v.end());
  return v;
}

double identity_error(GroupId g, OrbitKind kind, Weight l, Weight lp, const LabelMultiset& m) {
  double worst = 0.0;
  for (int k = 0; k < 25; ++k) {
    DomainPoint x{-0.9 + 0.07 * k, 0.4 - 0.05 * k};
    Complex lhs = eval_generic(g, kind, l, x) * eval_generic(g, kind, lp, x);
    worst = std::max(worst, std::abs(lhs - evaluate(g, m, x)));
  }
  return worst;
}

}  // namespace

TEST_CASE("Xi products in closed form") {
  const std::int64_t a = 4, b = 3, c = 2, d = 1;
  CHECK(raw_labels(product_e(GroupId::C2, {a, b}, {c, d})) ==
        sorted({{a + c, b + d}, {a - c, b - d}, {a + 2 * d + c, b - c - d}, {a - 2 * d - c, b + d + c}}));
  CHECK(raw_labels(product_e(GroupId::A2, {a, b}, {c, d})) ==
        sorted({{a + c, b + d}, {a + d, b - c - d}, {a - c - d, b + c}}));
  auto g2 = raw_labels(product_e(GroupId::G2, {a, b}, {c, d}));
  CHECK(g2.size() == 6);
  CHECK(std::find(g2.begin(), g2.end(), Weight{a + 2 * c + d, b - 3 * c - d}) != g2.end());
  for (GroupId g : kAllGroups) {
    auto m = product_e(g, {a, b}, {c, d});
    CHECK(identity_error(g, OrbitKind::Xi, {a, b}, {c, d}, m) < 1e-10);
    for (const auto& t : m.terms) CHECK(in_Pe(g, t.label));
  }
}

TEST_CASE("one-dimensional factor: E_m times conj(E_m')") {
  DomainPoint x{0.37, -0.61};
  for (std::int64_t m = -3; m <= 3; ++m)
    for (std::int64_t mp = -3; mp <= 3; ++mp) {
      Complex lhs = eval_generic(GroupId::A1xA1, OrbitKind::E, {m, 0}, x) *
                    std::conj(eval_generic(GroupId::A1xA1, OrbitKind::E, {mp, 0}, x));
      CHECK(std::abs(lhs - eval_generic(GroupId::A1xA1, OrbitKind::E, {m - mp, 0}, x)) < 1e-12);
    }
}

TEST_CASE("Omega products") {
  for (GroupId g : kAllGroups) {
    auto m = product_omega(g, {2, 1}, {1, 2});
    CHECK(identity_error(g, OrbitKind::Omega, {2, 1}, {1, 2}, m) < 1e-10);
    for (const auto& t : m.terms) CHECK(in_P_plus(t.label));
    // Omega_0 = |W|.
    auto id = product_omega(g, {3, 1}, {0, 0});
    REQUIRE(id.terms.size() == 1);
    CHECK(id.terms[0].coeff == Rational(cartan_data(g).weyl_order));
  }
}

TEST_CASE("case formulas for C-functions") {
  auto c2 = product_c(GroupId::C2, {5, 0}, {2, 0});
  std::vector<LabelTerm> want{{{3, 0}, 1}, {{3, 2}, 1}, {{7, 0}, 1}};
  REQUIRE(c2.terms.size() == want.size());
  for (std::size_t i = 0; i < want.size(); ++i) {
    CHECK(c2.terms[i].label == want[i].label);
    CHECK(c2.terms[i].coeff == want[i].coeff);
  }
  for (GroupId g : {GroupId::C2, GroupId::A2})
    for (auto [l, lp] : std::vector<std::pair<Weight, Weight>>{
             {{4, 0}, {1, 0}}, {{0, 3}, {0, 2}}, {{3, 0}, {0, 2}}, {{0, 2}, {3, 0}}, {{2, 3}, {1, 1}}, {{1, 0}, {2, 2}}})
      CHECK(identity_error(g, OrbitKind::C, l, lp, product_c(g, l, lp)) < 1e-10);
  CHECK(identity_error(GroupId::G2, OrbitKind::C, {2, 1}, {0, 3}, product_c(GroupId::G2, {2, 1}, {0, 3})) < 1e-10);

  CHECK_THROWS_AS(product_c(GroupId::C2, {-1, 2}, {1, 0}), InvalidArgument);
  CHECK_THROWS_AS(product_c(GroupId::C2, {2, 0}, {2, 0}), Unsupported);
  CHECK_THROWS_AS(product_c(GroupId::G2, {2, 0}, {0, 1}), Unsupported);
}

TEST_CASE("central splitting of grid data") {
  std::mt19937_64 rng(4);
  std::uniform_real_distribution<double> u(-1, 1);
  for (GroupId g : kAllGroups) {
    DiscreteTransform T(g, 4);
    const Grid& grid = T.grid();
    std::vector<Complex> f(grid.size());
    for (auto& v : f) v = {u(rng), u(rng)};
    auto parts = central_split(grid, f);
    CHECK(parts.size() == center_elements(g).size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Complex s{0, 0};
      for (const auto& p : parts) s += p[i];
      CHECK(std::abs(s - f[i]) < 1e-13);
    }
    for (std::size_t j = 0; j < parts.size(); ++j) {
      Spectrum sp = T.forward(parts[j]);
      for (std::size_t k = 0; k < sp.labels.size(); ++k)
        if (congruence_class(g, sp.labels[k]) != static_cast<int>(j)) CHECK(std::abs(sp.coeffs[k]) < 1e-12);
    }
  }
  CHECK(central_split(build_grid(GroupId::G2, 3), std::vector<Complex>(build_grid(GroupId::G2, 3).size())).size() == 1);
}

TEST_CASE("central splitting of functions follows the C2 folding map") {
  const GroupId g = GroupId::C2;
  Function f = [g](DomainPoint x) {
    return eval_generic(g, OrbitKind::Xi, {1, 2}, x) + 0.5 * eval_generic(g, OrbitKind::Xi, {0, 1}, x) +
           Complex(0, 0.25) * eval_generic(g, OrbitKind::Xi, {-1, 3}, x);
  };
  auto parts = central_split(g, f);
  REQUIRE(parts.size() == 2);
  for (double a : {0.05, 0.1, -0.1}) {
    DomainPoint x{a, 0.4};
    if (!in_fundamental_domain(g, x, true)) continue;
    Complex f0 = 0.5 * (f(x) + f({-a, 1 - 0.4}));
    Complex f1 = 0.5 * (f(x) - f({-a, 1 - 0.4}));
    CHECK(std::abs(parts[0](x) - f0) < 1e-12);
    CHECK(std::abs(parts[1](x) - f1) < 1e-12);
  }
  auto g2 = central_split(GroupId::G2, f);
  CHECK(g2.size() == 1);
}
