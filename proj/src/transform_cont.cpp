#include "etrans/transform_cont.hpp"

#include <algorithm>
#include <cmath>

#include "etrans/parallel.hpp"

namespace etrans {

namespace {

struct CompensatedSum {
  Complex sum{0.0, 0.0};
  Complex comp{0.0, 0.0};
  void add(Complex v) {
    auto step = [](double& s, double& c, double x) {
      double t = s + x;
      if (std::abs(s) >= std::abs(x))
        c += (s - t) + x;
      else
        c += (x - t) + s;
      s = t;
    };
    double sr = sum.real(), si = sum.imag(), cr = comp.real(), ci = comp.imag();
    step(sr, cr, v.real());
    step(si, ci, v.imag());
    sum = {sr, si};
    comp = {cr, ci};
  }
  Complex value() const { return sum + comp; }
};

FundamentalDomain make_domain(GroupId g) {
  FundamentalDomain d;
  d.group = g;
  switch (g) {
    case GroupId::A1xA1:
      d.vertices = {{-1, -1}, {1, -1}, {1, 1}, {-1, 1}};
      d.origin = {-1, -1};
      d.e1 = {2, 0};
      d.e2 = {0, 2};
      break;
    case GroupId::C2:
      d.vertices = {{0, 0}, {0.5, 0}, {0, 1}, {-0.5, 1}};
      d.origin = {0, 0};
      d.e1 = {0.5, 0};
      d.e2 = {-0.5, 1};
      break;
    case GroupId::A2:
      d.vertices = {{0, 0}, {1, 0}, {0, 1}, {-1, 1}};
      d.origin = {0, 0};
      d.e1 = {1, 0};
      d.e2 = {-1, 1};
      break;
    case GroupId::G2:
      d.vertices = {{0, 0}, {0, 1.0 / 3.0}, {1, -1.0 / 3.0}};
      d.triangle = true;
      d.origin = {0, 0};
      d.e1 = {0, 1.0 / 3.0};
      d.e2 = {1, -2.0 / 3.0};
      break;
  }
  auto G = gram(g, Basis::omega_check);
  d.metric_factor = std::sqrt(to_double(G[0][0] * G[1][1] - G[0][1] * G[1][0]));
  double coord = std::abs(d.e1[0] * d.e2[1] - d.e1[1] * d.e2[0]);
  d.volume = (d.triangle ? 0.5 : 1.0) * coord * d.metric_factor;
  return d;
}

}  // namespace

DomainPoint FundamentalDomain::map(double u, double v) const {
  if (triangle)
    return {origin.x + u * (e1[0] + v * e2[0]), origin.y + u * (e1[1] + v * e2[1])};
  return {origin.x + u * e1[0] + v * e2[0], origin.y + u * e1[1] + v * e2[1]};
}

double FundamentalDomain::jacobian(double u, double /*v*/) const {
  double coord = std::abs(e1[0] * e2[1] - e1[1] * e2[0]);
  return (triangle ? u : 1.0) * coord * metric_factor;
}

const FundamentalDomain& fundamental_domain(GroupId g) {
  static const std::array<FundamentalDomain, 4> t{make_domain(GroupId::A1xA1), make_domain(GroupId::A2),
                                                   make_domain(GroupId::C2), make_domain(GroupId::G2)};
  return t[static_cast<std::size_t>(g)];
}

QuadratureNodes quadrature_nodes(GroupId g, int order) {
  const auto& dom = fundamental_domain(g);
  const auto& rule = gauss_legendre(order);
  QuadratureNodes q;
  for (int i = 0; i < order; ++i)
    for (int j = 0; j < order; ++j) {
      double u = rule.nodes[i], v = rule.nodes[j];
      q.points.push_back(dom.map(u, v));
      q.weights.push_back(rule.weights[i] * rule.weights[j] * dom.jacobian(u, v));
    }
  return q;
}

QuadratureResult inner_product_continuous(GroupId g, const Function& f, const Function& h,
                                          const QuadratureSpec& spec) {
  if (spec.order < 2) throw InvalidArgument("quadrature order must be at least 2");
  auto integrate = [&](int order) {
    auto q = quadrature_nodes(g, order);
    CompensatedSum s;
    for (std::size_t k = 0; k < q.points.size(); ++k)
      s.add(q.weights[k] * f(q.points[k]) * std::conj(h(q.points[k])));
    return s.value();
  };
  QuadratureResult r;
  r.value = integrate(spec.order);
  r.error_estimate = std::abs(r.value - integrate(std::max(1, spec.order / 2)));
  if (r.error_estimate > spec.tolerance)
    throw QuadratureError("quadrature did not reach tolerance " + std::to_string(spec.tolerance) +
                              " (achieved " + std::to_string(r.error_estimate) + ")",
                          r.error_estimate);
  return r;
}

double e_norm_squared(GroupId g, Weight lambda) {
  return fundamental_domain(g).volume * static_cast<double>(orbit(g, lambda, true).size());
}

std::vector<Weight> truncation_by_radius(GroupId g, double R) {
  if (R < 0) throw InvalidArgument("truncation radius must be non-negative");
  // <lambda|lambda> >= c (a^2 + b^2) with c the smallest eigenvalue of the
  // omega Gram matrix, which bounds the search window.
  auto G = gram(g, Basis::omega);
  double g00 = to_double(G[0][0]), g01 = to_double(G[0][1]), g11 = to_double(G[1][1]);
  double tr = g00 + g11, det = g00 * g11 - g01 * g01;
  double cmin = 0.5 * (tr - std::sqrt(std::max(0.0, tr * tr - 4 * det)));
  auto B = static_cast<std::int64_t>(std::ceil(R / std::sqrt(cmin))) + 1;
  std::vector<Weight> out;
  for (std::int64_t a = -B; a <= B; ++a)
    for (std::int64_t b = -B; b <= B; ++b) {
      Weight l{a, b};
      if (in_Pe(g, l) && to_double(norm_squared(g, l)) <= R * R + 1e-12) out.push_back(l);
    }
  std::sort(out.begin(), out.end(), [g](Weight x, Weight y) {
    Rational nx = norm_squared(g, x), ny = norm_squared(g, y);
    return nx != ny ? nx < ny : x < y;
  });
  return out;
}

std::vector<Weight> lowest_labels(GroupId g, std::size_t count) {
  double R = 1.0;
  for (;;) {
    auto v = truncation_by_radius(g, R);
    if (v.size() >= count) {
      v.resize(count);
      return v;
    }
    R *= 1.5;
  }
}

ContinuousSpectrum forward_continuous(GroupId g, const Function& f, std::span<const Weight> truncation,
                                      const QuadratureSpec& spec) {
  ContinuousSpectrum s;
  s.group = g;
  s.labels.assign(truncation.begin(), truncation.end());
  s.coeffs.resize(s.labels.size());
  s.truncation = std::to_string(s.labels.size()) + " labels";
  // Sample f once per rule, then project onto every E.
  auto project = [&](int order) {
    auto q = quadrature_nodes(g, order);
    std::vector<Complex> fv(q.points.size());
    for (std::size_t k = 0; k < fv.size(); ++k) fv[k] = q.weights[k] * f(q.points[k]);
    std::vector<Complex> out(s.labels.size());
    parallel_for(s.labels.size(), [&](std::size_t i) {
      OrbitSum e(g, OrbitKind::E, s.labels[i]);
      CompensatedSum acc;
      for (std::size_t k = 0; k < fv.size(); ++k) acc.add(fv[k] * std::conj(e(q.points[k])));
      out[i] = acc.value();
    });
    return out;
  };
  auto hi = project(spec.order);
  auto lo = project(std::max(1, spec.order / 2));
  for (std::size_t i = 0; i < s.labels.size(); ++i) {
    double err = std::abs(hi[i] - lo[i]);
    s.max_error_estimate = std::max(s.max_error_estimate, err);
    s.coeffs[i] = hi[i] / e_norm_squared(g, s.labels[i]);
  }
  if (s.max_error_estimate > spec.tolerance)
    throw QuadratureError("continuous transform did not reach tolerance", s.max_error_estimate);
  return s;
}

Complex reconstruct(const ContinuousSpectrum& spectrum, DomainPoint x) {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < spectrum.labels.size(); ++i)
    s += spectrum.coeffs[i] * OrbitSum(spectrum.group, OrbitKind::E, spectrum.labels[i])(x);
  return s;
}

GramResult gram_continuous(GroupId g, std::span<const Weight> labels, const QuadratureSpec& spec) {
  auto build = [&](int order) {
    auto q = quadrature_nodes(g, order);
    const std::size_t n = labels.size(), m = q.points.size();
    std::vector<std::vector<Complex>> vals(n, std::vector<Complex>(m));
    parallel_for(n, [&](std::size_t i) {
      OrbitSum e(g, OrbitKind::E, labels[i]);
      for (std::size_t k = 0; k < m; ++k) vals[i][k] = e(q.points[k]);
    });
    std::vector<std::vector<Complex>> G(n, std::vector<Complex>(n));
    parallel_for(n, [&](std::size_t i) {
      for (std::size_t j = 0; j < n; ++j) {
        CompensatedSum acc;
        for (std::size_t k = 0; k < m; ++k) acc.add(q.weights[k] * vals[i][k] * std::conj(vals[j][k]));
        G[i][j] = acc.value();
      }
    });
    return G;
  };
  GramResult r;
  r.matrix = build(spec.order);
  auto coarse = build(std::max(1, spec.order / 2));
  for (std::size_t i = 0; i < labels.size(); ++i)
    for (std::size_t j = 0; j < labels.size(); ++j)
      r.error_estimate = std::max(r.error_estimate, std::abs(r.matrix[i][j] - coarse[i][j]));
  if (r.error_estimate > spec.tolerance)
    throw QuadratureError("Gram matrix quadrature did not reach tolerance", r.error_estimate);
  return r;
}

}  // namespace etrans
