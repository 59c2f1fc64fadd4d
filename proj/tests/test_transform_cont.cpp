#include <cmath>

#include "doctest.h"
#include "etrans/transform_cont.hpp"

using namespace etrans;

TEST_CASE("Gauss-Legendre rules") {
  for (int n : {1, 2, 5, 16, 64}) {
    const auto& r = gauss_legendre(n);
    REQUIRE(r.nodes.size() == static_cast<std::size_t>(n));
    double w = 0.0;
    for (double x : r.weights) w += x;
    CHECK(w == doctest::Approx(1.0).epsilon(1e-14));
    // Exact for polynomials of degree 2n - 1.
    for (int deg = 0; deg <= 2 * n - 1; ++deg) {
      double s = 0.0;
      for (int i = 0; i < n; ++i) s += r.weights[i] * std::pow(r.nodes[i], deg);
      CHECK(s == doctest::Approx(1.0 / (deg + 1)).epsilon(1e-13));
    }
  }
  CHECK(&gauss_legendre(8) == &gauss_legendre(8));
}

TEST_CASE("fundamental domains") {
  const double areas[] = {2.0, 1.0 / std::sqrt(3.0), 0.5, std::sqrt(3.0) / 6.0};
  for (GroupId g : kAllGroups) {
    const auto& dom = fundamental_domain(g);
    CHECK(dom.volume == doctest::Approx(areas[static_cast<int>(g)]).epsilon(1e-14));
    for (const auto& v : dom.vertices) CHECK(in_fundamental_domain(g, v, true, 1e-12));
    auto nodes = quadrature_nodes(g, 12);
    double w = 0.0;
    for (std::size_t i = 0; i < nodes.points.size(); ++i) {
      w += nodes.weights[i];
      CHECK(in_fundamental_domain(g, nodes.points[i], true, 1e-12));
    }
    CHECK(w == doctest::Approx(dom.volume).epsilon(1e-13));
  }
  const auto& g2 = fundamental_domain(GroupId::G2);
  CHECK(g2.triangle);
}

TEST_CASE("continuous inner products") {
  for (GroupId g : kAllGroups) {
    Weight l{1, 1};
    Function e = [g, l](DomainPoint x) { return eval_generic(g, OrbitKind::E, l, x); };
    auto r = inner_product_continuous(g, e, e);
    CHECK(r.value.real() == doctest::Approx(e_norm_squared(g, l)).epsilon(1e-10));
    CHECK(r.error_estimate < 1e-9);
  }
  Function wild = [](DomainPoint x) { return Complex(std::cos(400 * x.x) * std::sin(300 * x.y), 0); };
  CHECK_THROWS_AS(inner_product_continuous(GroupId::A2, wild, wild, {8, 1e-12}), QuadratureError);
}

TEST_CASE("truncations") {
  for (GroupId g : kAllGroups) {
    auto ls = truncation_by_radius(g, 3.0);
    for (std::size_t i = 0; i < ls.size(); ++i) {
      CHECK(in_Pe(g, ls[i]));
      CHECK(to_double(norm_squared(g, ls[i])) <= 9.0 + 1e-12);
      if (i) CHECK(norm_squared(g, ls[i - 1]) <= norm_squared(g, ls[i]));
    }
    auto low = lowest_labels(g, 10);
    CHECK(low.size() == 10);
    CHECK(low.front() == Weight{0, 0});
  }
}

TEST_CASE("forward transform recovers a band-limited function") {
  for (GroupId g : kAllGroups) {
    auto labels = lowest_labels(g, 8);
    std::vector<Complex> coeffs;
    for (std::size_t i = 0; i < labels.size(); ++i) coeffs.push_back({0.5 + i, -0.25 * i});
    Function f = [&](DomainPoint x) {
      Complex v{0, 0};
      for (std::size_t i = 0; i < labels.size(); ++i) v += coeffs[i] * eval_generic(g, OrbitKind::E, labels[i], x);
      return v;
    };
    auto sp = forward_continuous(g, f, labels);
    for (std::size_t i = 0; i < labels.size(); ++i) CHECK(std::abs(sp.coeffs[i] - coeffs[i]) < 1e-9);
    DomainPoint x = fundamental_domain(g).map(0.3, 0.6);
    CHECK(std::abs(reconstruct(sp, x) - f(x)) < 1e-8);
  }
}
