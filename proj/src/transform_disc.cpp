#include "etrans/transform_disc.hpp"

#include <algorithm>
#include <set>

#include "etrans/kernels.hpp"
#include "etrans/parallel.hpp"
#include "etrans/tabulated.hpp"

namespace etrans {

namespace {

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

LatticeKey raw_point_key(const CartanData& d, std::int64_t M, Vec2<std::int64_t> v) {
  const std::int64_t N = d.cartan_det * M;
  return {mod_pos(d.cartan_adj[0][0] * v[0] + d.cartan_adj[0][1] * v[1], N),
          mod_pos(d.cartan_adj[1][0] * v[0] + d.cartan_adj[1][1] * v[1], N)};
}

LatticeKey raw_label_key(const CartanData& d, std::int64_t M, Weight l) {
  const std::int64_t N = d.cartan_det * M;
  return {mod_pos(l.a * d.cartan_adj[0][0] + l.b * d.cartan_adj[1][0], N),
          mod_pos(l.a * d.cartan_adj[0][1] + l.b * d.cartan_adj[1][1], N)};
}

std::size_t point_orbit_size(GroupId g, std::int64_t M, Vec2<std::int64_t> s) {
  const auto& d = cartan_data(g);
  std::set<LatticeKey> keys;
  for (const auto& w : symmetry_group(g)) keys.insert(raw_point_key(d, M, w.apply_point(s)));
  return keys.size();
}

std::vector<Vec2<std::int64_t>> grid_points(GroupId g, std::int64_t M) {
  std::vector<Vec2<std::int64_t>> pts;
  if (g == GroupId::A1xA1) {
    for (std::int64_t s1 = -M; s1 <= M; ++s1)
      for (std::int64_t s2 = -M; s2 <= M; ++s2) pts.push_back({s1, s2});
    return pts;
  }
  const auto& d = cartan_data(g);
  const auto ri = simple_reflection(g, d.even_reflection_index);
  for (std::int64_t s1 = 0; d.highest_root_marks[0] * s1 <= M; ++s1)
    for (std::int64_t s2 = 0; d.highest_root_marks[0] * s1 + d.highest_root_marks[1] * s2 <= M; ++s2) {
      pts.push_back({s1, s2});
      pts.push_back(ri.apply_point({s1, s2}));
    }
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

bool norm_less(GroupId g, Weight a, Weight b) {
  Rational na = norm_squared(g, a), nb = norm_squared(g, b);
  if (na != nb) return na < nb;
  return a < b;
}

}  // namespace

DomainPoint Grid::point(std::size_t i) const {
  return {static_cast<double>(points[i][0]) / static_cast<double>(M),
          static_cast<double>(points[i][1]) / static_cast<double>(M)};
}

std::optional<std::size_t> Grid::find(Vec2<std::int64_t> s) const {
  auto it = std::lower_bound(points.begin(), points.end(), s);
  if (it == points.end() || *it != s) return std::nullopt;
  return static_cast<std::size_t>(it - points.begin());
}

int Grid::class_of(Vec2<std::int64_t> s) const {
  auto it = key_to_class.find(point_key(group, M, s));
  return it == key_to_class.end() ? -1 : it->second;
}

LatticeKey point_key(GroupId g, std::int64_t M, Vec2<std::int64_t> s) {
  const auto& d = cartan_data(g);
  LatticeKey best{};
  bool first = true;
  for (const auto& w : symmetry_group(g)) {
    LatticeKey k = raw_point_key(d, M, w.apply_point(s));
    if (first || k < best) best = k;
    first = false;
  }
  return best;
}

LatticeKey label_key(GroupId g, std::int64_t M, Weight lambda) {
  const auto& d = cartan_data(g);
  LatticeKey best{};
  bool first = true;
  for (const auto& w : symmetry_group(g)) {
    LatticeKey k = raw_label_key(d, M, w.apply(lambda));
    if (first || k < best) best = k;
    first = false;
  }
  return best;
}

std::int64_t torus_size(GroupId g, std::int64_t M) { return cartan_data(g).cartan_det * M * M; }

Grid build_grid(GroupId g, std::int64_t M) {
  if (M < 1) throw InvalidArgument("grid resolution M must be at least 1");
  Grid grid;
  grid.group = g;
  grid.M = M;
  grid.points = grid_points(g, M);
  std::vector<int> members;
  for (const auto& s : grid.points) {
    auto key = point_key(g, M, s);
    auto [it, inserted] = grid.key_to_class.emplace(key, grid.n_classes);
    if (inserted) {
      ++grid.n_classes;
      members.push_back(0);
    }
    grid.class_id.push_back(it->second);
    ++members[it->second];
  }
  for (std::size_t i = 0; i < grid.points.size(); ++i)
    grid.eps.push_back(Rational(static_cast<std::int64_t>(point_orbit_size(g, M, grid.points[i])),
                                members[grid.class_id[i]]));
  return grid;
}

Rational epsilon_generic(GroupId g, std::int64_t M, Vec2<std::int64_t> s) {
  Grid grid = build_grid(g, M);
  auto idx = grid.find(s);
  if (!idx) throw InvalidArgument("point " + std::to_string(s[0]) + "/" + std::to_string(M) + "," +
                                  std::to_string(s[1]) + "/" + std::to_string(M) + " is not in F^e_M");
  return grid.eps[*idx];
}

Rational discrete_norm(GroupId g, std::int64_t M, Weight lambda) {
  const auto& d = cartan_data(g);
  const auto k0 = raw_label_key(d, M, lambda);
  std::int64_t stab = 0;
  for (const auto& w : symmetry_group(g))
    if (raw_label_key(d, M, w.apply(lambda)) == k0) ++stab;
  return Rational(torus_size(g, M) * static_cast<std::int64_t>(symmetry_group(g).size()) * stab);
}

LabelSet build_label_set(GroupId g, std::int64_t M) {
  if (M < 1) throw InvalidArgument("grid resolution M must be at least 1");
  const auto& d = cartan_data(g);
  const Grid grid = build_grid(g, M);
  const std::int64_t R = 3 * M + 3;

  std::vector<Weight> window;
  for (std::int64_t a = -R; a <= R; ++a)
    for (std::int64_t b = -R; b <= R; ++b)
      if (in_Pe(g, {a, b})) window.push_back({a, b});
  auto by_norm = [g](Weight x, Weight y) { return norm_less(g, x, y); };
  std::sort(window.begin(), window.end(), by_norm);

  std::vector<Weight> printed;
  for (const auto& l : window)
    if (tabulated::in_label_set(g, M, l)) printed.push_back(l);

  std::vector<Weight> candidates{{0, 0}};
  candidates.insert(candidates.end(), printed.begin(), printed.end());
  if (g != GroupId::A1xA1) {
    const auto ri = simple_reflection(g, d.even_reflection_index);
    for (const auto& l : printed)
      if (in_P_plus_plus(l)) candidates.push_back(ri.apply(l));
  }
  candidates.insert(candidates.end(), window.begin(), window.end());

  std::set<LatticeKey> taken;
  std::vector<Weight> chosen;
  for (const auto& l : candidates) {
    if (static_cast<int>(chosen.size()) == grid.n_classes) break;
    if (taken.insert(label_key(g, M, l)).second) chosen.push_back(l);
  }
  if (static_cast<int>(chosen.size()) != grid.n_classes)
    throw Error("label set for " + std::string(to_string(g)) + " M=" + std::to_string(M) +
                " is incomplete");

  std::sort(chosen.begin(), chosen.end());
  LabelSet out;
  out.group = g;
  out.M = M;
  out.labels = chosen;
  for (const auto& l : chosen) {
    out.norms.push_back(discrete_norm(g, M, l));
    out.printed.push_back(tabulated::in_label_set(g, M, l));
  }
  return out;
}

Complex inner_product_M(const Grid& grid, std::span<const Complex> f, std::span<const Complex> h) {
  if (f.size() != grid.size() || h.size() != grid.size())
    throw InvalidArgument("inner_product_M: data length does not match the grid");
  const std::size_t n = grid.size();
  std::vector<double> w(n), fr(n), fi(n), hr(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    w[i] = to_double(grid.eps[i]);
    fr[i] = f[i].real();
    fi[i] = f[i].imag();
    hr[i] = h[i].real();
    hi[i] = h[i].imag();
  }
  auto r = kernels::active().weighted_dot_conj(n, w.data(), fr.data(), fi.data(), hr.data(), hi.data());
  return {r.re, r.im};
}

DiscreteTransform::DiscreteTransform(GroupId g, std::int64_t M)
    : grid_(build_grid(g, M)), labels_(build_label_set(g, M)) {
  const std::size_t np = grid_.size(), nl = labels_.labels.size();
  eps_.resize(np);
  for (std::size_t i = 0; i < np; ++i) eps_[i] = to_double(grid_.eps[i]);
  b_re_.resize(nl * np);
  b_im_.resize(nl * np);
  bt_re_.resize(nl * np);
  bt_im_.resize(nl * np);
  parallel_for(nl, [&](std::size_t l) {
    OrbitSum xi(g, OrbitKind::Xi, labels_.labels[l]);
    for (std::size_t p = 0; p < np; ++p) {
      Complex v = xi.at_lattice(grid_.points[p], M);
      b_re_[l * np + p] = v.real();
      b_im_[l * np + p] = v.imag();
      bt_re_[p * nl + l] = v.real();
      bt_im_[p * nl + l] = v.imag();
    }
  });
}

Complex DiscreteTransform::basis(std::size_t label, std::size_t point) const {
  const std::size_t np = grid_.size();
  return {b_re_[label * np + point], b_im_[label * np + point]};
}

std::vector<Complex> DiscreteTransform::sample(std::size_t label) const {
  std::vector<Complex> out(grid_.size());
  for (std::size_t p = 0; p < out.size(); ++p) out[p] = basis(label, p);
  return out;
}

Spectrum DiscreteTransform::forward(std::span<const Complex> f) const {
  const std::size_t np = grid_.size(), nl = labels_.labels.size();
  if (f.size() != np) throw InvalidArgument("forward: data length does not match the grid");
  std::vector<double> fr(np), fi(np);
  for (std::size_t i = 0; i < np; ++i) {
    fr[i] = f[i].real();
    fi[i] = f[i].imag();
  }
  Spectrum s;
  s.group = grid_.group;
  s.M = grid_.M;
  s.labels = labels_.labels;
  s.coeffs.resize(nl);
  const auto& k = kernels::active();
  parallel_for(nl, [&](std::size_t l) {
    auto r = k.weighted_dot_conj(np, eps_.data(), fr.data(), fi.data(), &b_re_[l * np], &b_im_[l * np]);
    s.coeffs[l] = Complex(r.re, r.im) / to_double(labels_.norms[l]);
  });
  return s;
}

std::vector<Complex> DiscreteTransform::synthesize(const Spectrum& spectrum) const {
  const std::size_t np = grid_.size(), nl = labels_.labels.size();
  std::vector<Complex> out(np);
  if (spectrum.group != grid_.group || spectrum.M != grid_.M || spectrum.labels != labels_.labels) {
    Interpolant f(spectrum);
    for (std::size_t p = 0; p < np; ++p) out[p] = f(grid_.point(p));
    return out;
  }
  std::vector<double> dr(nl), di(nl);
  for (std::size_t l = 0; l < nl; ++l) {
    dr[l] = spectrum.coeffs[l].real();
    di[l] = spectrum.coeffs[l].imag();
  }
  const auto& k = kernels::active();
  parallel_for(np, [&](std::size_t p) {
    auto r = k.dot(nl, dr.data(), di.data(), &bt_re_[p * nl], &bt_im_[p * nl]);
    out[p] = {r.re, r.im};
  });
  return out;
}

Complex DiscreteTransform::inner(std::span<const Complex> f, std::span<const Complex> h) const {
  return inner_product_M(grid_, f, h);
}

Spectrum forward_discrete(GroupId g, std::int64_t M, std::span<const Complex> f) {
  return DiscreteTransform(g, M).forward(f);
}

Complex interpolate(const Spectrum& spectrum, DomainPoint x) { return Interpolant(spectrum)(x); }

Interpolant::Interpolant(const Spectrum& spectrum) : coeffs_(spectrum.coeffs) {
  if (spectrum.labels.size() != spectrum.coeffs.size())
    throw InvalidArgument("spectrum has mismatched labels and coefficients");
  terms_.reserve(spectrum.labels.size());
  for (const auto& l : spectrum.labels) terms_.emplace_back(spectrum.group, OrbitKind::Xi, l);
}

Complex Interpolant::operator()(DomainPoint x) const {
  Complex s{0.0, 0.0};
  for (std::size_t i = 0; i < terms_.size(); ++i) s += coeffs_[i] * terms_[i](x);
  return s;
}

std::vector<Complex> project_to_classes(const Grid& grid, std::span<const Complex> f) {
  if (f.size() != grid.size()) throw InvalidArgument("project_to_classes: data length does not match the grid");
  std::vector<Complex> sum(grid.n_classes, Complex{0.0, 0.0});
  std::vector<double> weight(grid.n_classes, 0.0);
  for (std::size_t i = 0; i < grid.size(); ++i) {
    double e = to_double(grid.eps[i]);
    sum[grid.class_id[i]] += e * f[i];
    weight[grid.class_id[i]] += e;
  }
  std::vector<Complex> out(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) out[i] = sum[grid.class_id[i]] / weight[grid.class_id[i]];
  return out;
}

}  // namespace etrans
