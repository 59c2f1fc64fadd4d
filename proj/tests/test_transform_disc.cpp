#include <random>

#include <Eigen/Dense>

#include "doctest.h"
#include "etrans/tabulated.hpp"
#include "etrans/transform_disc.hpp"

using namespace etrans;

TEST_CASE("grid points lie in F^e and carry the printed weights") {
  for (GroupId g : kAllGroups)
    for (std::int64_t M = 1; M <= 7; ++M) {
      Grid grid = build_grid(g, M);
      CHECK(std::is_sorted(grid.points.begin(), grid.points.end()));
      Rational sum(0);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(in_fundamental_domain(g, grid.point(i), true, 1e-12));
        sum += grid.eps[i];
        if (auto p = tabulated::epsilon(g, M, grid.points[i])) CHECK(*p == grid.eps[i]);
      }
      CHECK(sum == Rational(torus_size(g, M)));
    }
}

TEST_CASE("small grids by hand") {
  Grid c2 = build_grid(GroupId::C2, 2);
  CHECK(c2.size() == 5);
  CHECK(c2.n_classes == 4);
  CHECK(build_grid(GroupId::G2, 2).size() == 2);
  CHECK(build_grid(GroupId::A1xA1, 2).size() == 25);
  CHECK(build_grid(GroupId::A1xA1, 2).n_classes == 16);
  CHECK(epsilon_generic(GroupId::A2, 3, {1, 1}) == Rational(3));
  CHECK(epsilon_generic(GroupId::A2, 3, {3, 0}) == Rational(1, 2));
  CHECK_THROWS_AS(epsilon_generic(GroupId::A2, 3, {5, 5}), InvalidArgument);
  CHECK_THROWS_AS(build_grid(GroupId::A2, 0), InvalidArgument);
}

TEST_CASE("aliasing keys") {
  for (GroupId g : kAllGroups) {
    const auto& C = cartan_data(g).cartan;
    const std::int64_t M = 5;
    Weight l{2, -1};
    Weight shifted{l.a + M * C[0][0], l.b + M * C[0][1]};
    CHECK(label_key(g, M, l) == label_key(g, M, shifted));
    for (const auto& w : symmetry_group(g)) CHECK(label_key(g, M, w.apply(l)) == label_key(g, M, l));
  }
}

TEST_CASE("label sets are complete and sampled bases have full rank") {
  for (GroupId g : kAllGroups)
    for (std::int64_t M = 1; M <= 6; ++M) {
      DiscreteTransform T(g, M);
      const auto& ls = T.labels();
      const Grid& grid = T.grid();
      REQUIRE(static_cast<int>(ls.labels.size()) == grid.n_classes);
      CHECK(std::is_sorted(ls.labels.begin(), ls.labels.end()));
      for (const auto& l : ls.labels) CHECK(in_Pe(g, l));

      // One representative point per class.
      std::vector<std::size_t> reps(grid.n_classes);
      for (std::size_t i = grid.size(); i-- > 0;) reps[grid.class_id[i]] = i;
      Eigen::MatrixXcd B(ls.labels.size(), grid.n_classes);
      for (std::size_t i = 0; i < ls.labels.size(); ++i)
        for (int c = 0; c < grid.n_classes; ++c) B(i, c) = T.basis(i, reps[c]);
      Eigen::FullPivLU<Eigen::MatrixXcd> lu(B);
      CHECK(lu.rank() == grid.n_classes);
    }
}

TEST_CASE("basis values are constant on torus classes") {
  for (GroupId g : kAllGroups) {
    DiscreteTransform T(g, 6);
    const Grid& grid = T.grid();
    for (std::size_t l = 0; l < T.labels().labels.size(); ++l) {
      std::vector<Complex> first(grid.n_classes);
      std::vector<bool> seen(grid.n_classes, false);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        int c = grid.class_id[i];
        if (!seen[c]) {
          seen[c] = true;
          first[c] = T.basis(l, i);
        }
        CHECK(std::abs(T.basis(l, i) - first[c]) < 1e-12);
      }
    }
  }
}

TEST_CASE("forward transform of a basis function") {
  for (GroupId g : kAllGroups) {
    DiscreteTransform T(g, 4);
    const auto& labels = T.labels().labels;
    for (std::size_t k = 0; k < labels.size(); ++k) {
      Spectrum sp = T.forward(T.sample(k));
      for (std::size_t j = 0; j < labels.size(); ++j)
        CHECK(std::abs(sp.coeffs[j] - Complex(j == k ? 1.0 : 0.0, 0.0)) < 1e-12);
    }
    std::vector<Complex> one(T.grid().size(), Complex(2.5, 0));
    Spectrum sp = T.forward(one);
    for (std::size_t j = 0; j < labels.size(); ++j) {
      double expect = labels[j].is_zero() ? 2.5 / double(symmetry_group(g).size()) : 0.0;
      CHECK(std::abs(sp.coeffs[j] - expect) < 1e-12);
    }
  }
}

TEST_CASE("round trip through the interpolant and synthesis") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<double> u(-1, 1);
  for (GroupId g : kAllGroups)
    for (std::int64_t M : {2, 5}) {
      DiscreteTransform T(g, M);
      const Grid& grid = T.grid();
      std::vector<Complex> raw(grid.size());
      for (auto& v : raw) v = {u(rng), u(rng)};
      auto f = project_to_classes(grid, raw);
      Spectrum sp = forward_discrete(g, M, f);
      auto back = T.synthesize(sp);
      Interpolant fc(sp);
      for (std::size_t i = 0; i < grid.size(); ++i) {
        CHECK(std::abs(back[i] - f[i]) < 1e-12);
        CHECK(std::abs(fc(grid.point(i)) - f[i]) < 1e-12);
        CHECK(std::abs(interpolate(sp, grid.point(i)) - f[i]) < 1e-12);
      }
      // Projection is idempotent and leaves the spectrum unchanged.
      auto again = project_to_classes(grid, f);
      for (std::size_t i = 0; i < grid.size(); ++i) CHECK(std::abs(again[i] - f[i]) < 1e-14);
      Spectrum sr = T.forward(raw);
      for (std::size_t j = 0; j < sp.coeffs.size(); ++j) CHECK(std::abs(sr.coeffs[j] - sp.coeffs[j]) < 1e-13);
    }
}

TEST_CASE("norms") {
  CHECK(discrete_norm(GroupId::C2, 4, {0, 0}) == Rational(8 * 16 * 4));
  CHECK(discrete_norm(GroupId::A2, 3, {1, 1}) == Rational(9 * 9));
  CHECK(discrete_norm(GroupId::G2, 6, {0, 0}) == Rational(6 * 36 * 6));
  for (GroupId g : kAllGroups) {
    DiscreteTransform T(g, 3);
    for (std::size_t k = 0; k < T.labels().labels.size(); ++k) {
      auto s = T.sample(k);
      CHECK(T.inner(s, s).real() == doctest::Approx(to_double(T.labels().norms[k])).epsilon(1e-12));
      CHECK(std::abs(inner_product_M(T.grid(), s, s) - T.inner(s, s)) < 1e-9);
    }
  }
}

TEST_CASE("mismatched input is rejected") {
  DiscreteTransform T(GroupId::A2, 3);
  std::vector<Complex> shorter(T.grid().size() - 1);
  CHECK_THROWS_AS(T.forward(shorter), InvalidArgument);
  Spectrum bad{GroupId::A2, 3, {{0, 0}}, {}};
  CHECK_THROWS_AS(interpolate(bad, {0, 0}), InvalidArgument);
}
