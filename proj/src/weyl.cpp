#include "etrans/weyl.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace etrans {

namespace {

template <class T>
Mat2<T> mul(const Mat2<T>& a, const Mat2<T>& b) {
  Mat2<T> r{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) r[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return r;
}

std::int64_t mod_pos(std::int64_t a, std::int64_t m) {
  std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::vector<WeylElement> closure(GroupId g, bool even_only) {
  std::vector<WeylElement> gens{simple_reflection(g, 1), simple_reflection(g, 2)};
  if (even_only) gens = {gens[0] * gens[1], gens[1] * gens[0]};
  std::vector<WeylElement> out{WeylElement{}};
  for (std::size_t k = 0; k < out.size(); ++k) {
    for (const auto& s : gens) {
      WeylElement n = s * out[k];
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
  }
  return out;
}

// Walls of F as (normal in coweight-coordinate pairing, level): a wall is
// { x : n . x = level } and F lies on the side n . x >= level for simple walls
// and n . x <= level for the affine one.
struct Wall {
  Vec2<double> normal;
  double level;
  bool upper;  // F satisfies normal . x <= level
  Mat2<std::int64_t> linear;
  Vec2<double> shift;
};

std::vector<Wall> walls_of_F(GroupId g) {
  const auto& d = cartan_data(g);
  std::vector<Wall> out;
  for (int i = 0; i < 2; ++i) {
    Wall w;
    w.normal = {i == 0 ? 1.0 : 0.0, i == 1 ? 1.0 : 0.0};
    w.level = 0.0;
    w.upper = false;
    w.linear = simple_reflection(g, i + 1).point_matrix;
    w.shift = {0.0, 0.0};
    out.push_back(w);
  }
  for (const auto& aw : d.affine_walls) {
    if (g == GroupId::A1xA1) continue;
    // xi in simple-root coordinates; its coroot in coweight coordinates.
    Vec2<Rational> gm{d.gram_alpha[0][0] * aw.root[0] + d.gram_alpha[0][1] * aw.root[1],
                      d.gram_alpha[1][0] * aw.root[0] + d.gram_alpha[1][1] * aw.root[1]};
    Rational n2 = gm[0] * aw.root[0] + gm[1] * aw.root[1];
    Vec2<Rational> cor{Rational(2) * gm[0] / n2, Rational(2) * gm[1] / n2};
    if (cor[0].denominator() != 1 || cor[1].denominator() != 1) throw Error("non-integral coroot");
    Wall w;
    w.normal = {static_cast<double>(aw.root[0]), static_cast<double>(aw.root[1])};
    w.level = static_cast<double>(aw.level);
    w.upper = true;
    std::int64_t c0 = cor[0].numerator(), c1 = cor[1].numerator();
    w.linear = {{{1 - c0 * aw.root[0], -c0 * aw.root[1]}, {-c1 * aw.root[0], 1 - c1 * aw.root[1]}}};
    w.shift = {static_cast<double>(c0 * aw.level), static_cast<double>(c1 * aw.level)};
    out.push_back(w);
  }
  return out;
}

double violation(const Wall& w, DomainPoint x) {
  double v = w.normal[0] * x.x + w.normal[1] * x.y - w.level;
  return w.upper ? v : -v;
}

void compose(AffineTransform& t, const Mat2<std::int64_t>& lin, Vec2<double> shift, Parity p) {
  Vec2<double> nt{lin[0][0] * t.translation[0] + lin[0][1] * t.translation[1] + shift[0],
                  lin[1][0] * t.translation[0] + lin[1][1] * t.translation[1] + shift[1]};
  t.linear = mul(lin, t.linear);
  t.translation = nt;
  t.parity = t.parity * p;
}

DomainPoint apply_lin(const Mat2<std::int64_t>& m, Vec2<double> s, DomainPoint x) {
  return {m[0][0] * x.x + m[0][1] * x.y + s[0], m[1][0] * x.x + m[1][1] * x.y + s[1]};
}

Reduction reduce_a1xa1(DomainPoint x, bool even) {
  Reduction r{x, {}};
  auto fold = [](double v, double& shift) {
    // into (-1, 1]
    double k = std::floor((v + 1.0) / 2.0);
    double y = v - 2.0 * k;
    if (y <= -1.0) {
      y += 2.0;
      k -= 1.0;
    }
    shift = -2.0 * k;
    return y;
  };
  double s0 = 0, s1 = 0;
  r.point.x = fold(x.x, s0);
  r.point.y = fold(x.y, s1);
  r.transform.translation = {s0, s1};
  if (!even) {
    if (r.point.x < 0) {
      r.point.x = -r.point.x;
      r.transform.linear[0][0] = -1;
      r.transform.translation[0] = -r.transform.translation[0];
      r.transform.parity = r.transform.parity * Parity::odd;
    }
    if (r.point.y < 0) {
      r.point.y = -r.point.y;
      r.transform.linear[1][1] = -1;
      r.transform.translation[1] = -r.transform.translation[1];
      r.transform.parity = r.transform.parity * Parity::odd;
    }
  }
  return r;
}

}  // namespace

Weight WeylElement::apply(Weight l) const {
  return {weight_matrix[0][0] * l.a + weight_matrix[0][1] * l.b,
          weight_matrix[1][0] * l.a + weight_matrix[1][1] * l.b};
}

DomainPoint WeylElement::apply(DomainPoint x) const {
  return {point_matrix[0][0] * x.x + point_matrix[0][1] * x.y,
          point_matrix[1][0] * x.x + point_matrix[1][1] * x.y};
}

Vec2<std::int64_t> WeylElement::apply_point(Vec2<std::int64_t> s) const {
  return {point_matrix[0][0] * s[0] + point_matrix[0][1] * s[1],
          point_matrix[1][0] * s[0] + point_matrix[1][1] * s[1]};
}

WeylElement WeylElement::operator*(const WeylElement& rhs) const {
  return {mul(weight_matrix, rhs.weight_matrix), mul(point_matrix, rhs.point_matrix),
          parity * rhs.parity};
}

WeylElement simple_reflection(GroupId g, int i) {
  if (i != 1 && i != 2) throw InvalidArgument("simple reflection index must be 1 or 2");
  const auto& C = cartan_data(g).cartan;
  const int r = i - 1;
  WeylElement w;
  w.parity = Parity::odd;
  for (int k = 0; k < 2; ++k)
    for (int j = 0; j < 2; ++j) {
      // weights: lambda_k -> lambda_k - lambda_r C[r][k]
      w.weight_matrix[k][j] = (k == j ? 1 : 0) - (j == r ? C[r][k] : 0);
      // points: x_k -> x_k - x_r C[k][r]
      w.point_matrix[k][j] = (k == j ? 1 : 0) - (j == r ? C[k][r] : 0);
    }
  return w;
}

const std::vector<WeylElement>& generate_group(GroupId g, bool even_only) {
  static const auto tables = [] {
    std::array<std::array<std::vector<WeylElement>, 2>, 4> t;
    for (GroupId id : kAllGroups) {
      t[static_cast<std::size_t>(id)][0] = closure(id, false);
      t[static_cast<std::size_t>(id)][1] = closure(id, true);
    }
    return t;
  }();
  return tables[static_cast<std::size_t>(g)][even_only ? 1 : 0];
}

const std::vector<WeylElement>& symmetry_group(GroupId g) {
  static const std::vector<WeylElement> trivial{WeylElement{}};
  if (g == GroupId::A1xA1) return trivial;
  return generate_group(g, true);
}

std::vector<Weight> orbit(GroupId g, Weight lambda, bool even_only) {
  const auto& grp = even_only ? symmetry_group(g) : generate_group(g, false);
  std::vector<Weight> out;
  out.reserve(grp.size());
  for (const auto& w : grp) out.push_back(w.apply(lambda));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool in_P_plus(Weight l) { return l.a >= 0 && l.b >= 0; }
bool in_P_plus_plus(Weight l) { return l.a > 0 && l.b > 0; }

bool in_Pe(GroupId g, Weight l) {
  if (g == GroupId::A1xA1) return true;
  if (in_P_plus(l)) return true;
  return in_P_plus_plus(simple_reflection(g, cartan_data(g).even_reflection_index).apply(l));
}

Weight canonical_label(GroupId g, Weight lambda) {
  for (const auto& m : orbit(g, lambda, true))
    if (in_Pe(g, m)) return m;
  throw Error("no P_e representative for " + to_string(lambda));
}

Weight dominant_label(GroupId g, Weight lambda) {
  for (const auto& m : orbit(g, lambda, false))
    if (in_P_plus(m)) return m;
  throw Error("no dominant representative for " + to_string(lambda));
}

DomainPoint AffineTransform::apply(DomainPoint x) const { return apply_lin(linear, translation, x); }

DomainPoint AffineTransform::inverse(DomainPoint y) const {
  double det = static_cast<double>(linear[0][0] * linear[1][1] - linear[0][1] * linear[1][0]);
  double u = y.x - translation[0], v = y.y - translation[1];
  return {(linear[1][1] * u - linear[0][1] * v) / det, (-linear[1][0] * u + linear[0][0] * v) / det};
}

Reduction reduce_to_fundamental(GroupId g, DomainPoint x, bool even) {
  if (g == GroupId::A1xA1) return reduce_a1xa1(x, even);
  const auto& d = cartan_data(g);
  Reduction r{x, {}};

  // Translate by the coroot lattice into the unit cell spanned by the coroots.
  double k0 = to_double(d.cartan_inv[0][0]) * x.x + to_double(d.cartan_inv[0][1]) * x.y;
  double k1 = to_double(d.cartan_inv[1][0]) * x.x + to_double(d.cartan_inv[1][1]) * x.y;
  double f0 = std::floor(k0 + 1e-13), f1 = std::floor(k1 + 1e-13);
  Vec2<double> shift{-(d.cartan[0][0] * f0 + d.cartan[0][1] * f1),
                     -(d.cartan[1][0] * f0 + d.cartan[1][1] * f1)};
  compose(r.transform, {{{1, 0}, {0, 1}}}, shift, Parity::even);
  r.point = r.transform.apply(x);

  const auto walls = walls_of_F(g);
  for (int iter = 0;; ++iter) {
    if (iter > 10000) throw Error("fundamental-domain reduction did not terminate");
    double tol = 1e-12 * std::max(1.0, std::abs(r.point.x) + std::abs(r.point.y));
    const Wall* worst = nullptr;
    double worst_v = tol;
    for (const auto& w : walls) {
      double v = violation(w, r.point);
      if (v > worst_v) {
        worst_v = v;
        worst = &w;
      }
    }
    if (!worst) break;
    compose(r.transform, worst->linear, worst->shift, Parity::odd);
    r.point = apply_lin(worst->linear, worst->shift, r.point);
  }

  if (even && r.transform.parity == Parity::odd) {
    double tol = 1e-12 * std::max(1.0, std::abs(r.point.x) + std::abs(r.point.y));
    const Wall* on = nullptr;
    for (const auto& w : walls)
      if (std::abs(violation(w, r.point)) <= tol) {
        on = &w;
        break;
      }
    if (on) {
      // The point is fixed by this reflection; only the parity changes.
      compose(r.transform, on->linear, on->shift, Parity::odd);
    } else {
      auto ri = simple_reflection(g, d.even_reflection_index);
      compose(r.transform, ri.point_matrix, {0.0, 0.0}, Parity::odd);
      r.point = ri.apply(r.point);
    }
  }
  return r;
}

bool in_fundamental_domain(GroupId g, DomainPoint x, bool even, double tol) {
  if (g == GroupId::A1xA1) {
    double lo = even ? -1.0 : 0.0;
    return x.x >= lo - tol && x.x <= 1.0 + tol && x.y >= lo - tol && x.y <= 1.0 + tol;
  }
  const auto walls = walls_of_F(g);
  auto inside = [&](DomainPoint p) {
    for (const auto& w : walls)
      if (violation(w, p) > tol) return false;
    return true;
  };
  if (inside(x)) return true;
  if (!even) return false;
  return inside(simple_reflection(g, cartan_data(g).even_reflection_index).apply(x));
}

int congruence_class(GroupId g, Weight lambda) {
  const auto& d = cartan_data(g);
  int j = 0, radix = 1;
  for (const auto& z : d.center_generators) {
    std::int64_t u0 = lambda.a * d.cartan_adj[0][0] + lambda.b * d.cartan_adj[1][0];
    std::int64_t u1 = lambda.a * d.cartan_adj[0][1] + lambda.b * d.cartan_adj[1][1];
    std::int64_t num = mod_pos(u0 * z.coweight[0] + u1 * z.coweight[1], d.cartan_det);
    std::int64_t digit = num * z.order / d.cartan_det;
    j += static_cast<int>(digit) * radix;
    radix *= z.order;
  }
  return j;
}

std::vector<Vec2<std::int64_t>> center_elements(GroupId g) {
  const auto& d = cartan_data(g);
  std::vector<Vec2<std::int64_t>> out{{0, 0}};
  for (const auto& z : d.center_generators) {
    std::vector<Vec2<std::int64_t>> next;
    for (int e = 0; e < z.order; ++e)
      for (const auto& p : out) next.push_back({p[0] + e * z.coweight[0], p[1] + e * z.coweight[1]});
    out = std::move(next);
  }
  return out;
}

Complex character(GroupId g, int j, int k) {
  const auto& d = cartan_data(g);
  double phase = 0.0;
  for (const auto& z : d.center_generators) {
    int jd = j % z.order, kd = k % z.order;
    j /= z.order;
    k /= z.order;
    phase += static_cast<double>((jd * kd) % z.order) / z.order;
  }
  phase -= std::floor(phase);
  return std::polar(1.0, 2.0 * std::numbers::pi * phase);
}

}  // namespace etrans
