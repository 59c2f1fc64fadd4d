#include "etrans/cartan.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <string>

namespace etrans {

std::string_view to_string(GroupId g) {
  switch (g) {
    case GroupId::A1xA1: return "A1xA1";
    case GroupId::A2: return "A2";
    case GroupId::C2: return "C2";
    case GroupId::G2: return "G2";
  }
  return "?";
}

GroupId parse_group(std::string_view name) {
  std::string s;
  for (char c : name) s.push_back(static_cast<char>(std::toupper(static_cast<unsigned char>(c))));
  if (s == "A1XA1" || s == "A1A1" || s == "A1*A1") return GroupId::A1xA1;
  if (s == "A2") return GroupId::A2;
  if (s == "C2" || s == "B2") return GroupId::C2;
  if (s == "G2") return GroupId::G2;
  throw InvalidArgument("unknown group '" + std::string(name) + "' (expected A1xA1, A2, C2 or G2)");
}

std::string to_string(Weight w) {
  return "(" + std::to_string(w.a) + "," + std::to_string(w.b) + ")";
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

namespace {

Mat2<Rational> inverse(const Mat2<Rational>& m) {
  Rational det = m[0][0] * m[1][1] - m[0][1] * m[1][0];
  if (det.numerator() == 0) throw Error("singular 2x2 matrix");
  return {{{m[1][1] / det, -m[0][1] / det}, {-m[1][0] / det, m[0][0] / det}}};
}

CartanData make(GroupId g, Mat2<Rational> gram_alpha, Vec2<std::int64_t> marks, int weyl_order,
                int e_symmetry_order, int eri, std::vector<AffineWall> walls,
                std::vector<CenterGenerator> center) {
  CartanData d;
  d.group = g;
  d.gram_alpha = gram_alpha;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational c = Rational(2) * gram_alpha[i][j] / gram_alpha[j][j];
      if (c.denominator() != 1) throw Error("non-integral Cartan entry");
      d.cartan[i][j] = c.numerator();
    }
  Mat2<Rational> cr{{{d.cartan[0][0], d.cartan[0][1]}, {d.cartan[1][0], d.cartan[1][1]}}};
  d.cartan_inv = inverse(cr);
  d.cartan_det = d.cartan[0][0] * d.cartan[1][1] - d.cartan[0][1] * d.cartan[1][0];
  d.cartan_adj = {{{d.cartan[1][1], -d.cartan[0][1]}, {-d.cartan[1][0], d.cartan[0][0]}}};
  d.highest_root_marks = marks;
  for (int i = 0; i < 2; ++i) {
    Rational q = Rational(marks[i]) * gram_alpha[i][i] / Rational(2);
    if (q.denominator() != 1) throw Error("non-integral comark");
    d.comarks[i] = q.numerator();
  }
  d.weyl_order = weyl_order;
  d.even_order = weyl_order / 2;
  d.e_symmetry_order = e_symmetry_order;
  d.center_order = static_cast<int>(d.cartan_det);
  d.even_reflection_index = eri;
  d.affine_walls = std::move(walls);
  d.center_generators = std::move(center);
  return d;
}

const std::array<CartanData, 4>& tables() {
  static const std::array<CartanData, 4> t = [] {
    using R = Rational;
    return std::array<CartanData, 4>{
        make(GroupId::A1xA1, {{{R(2), R(0)}, {R(0), R(2)}}}, {1, 1}, 4, 1, 1,
             {{{1, 0}, 1}, {{0, 1}, 1}}, {{{1, 0}, 2}, {{0, 1}, 2}}),
        make(GroupId::A2, {{{R(2), R(-1)}, {R(-1), R(2)}}}, {1, 1}, 6, 3, 1, {{{1, 1}, 1}},
             {{{1, 0}, 3}}),
        make(GroupId::C2, {{{R(1), R(-1)}, {R(-1), R(2)}}}, {2, 1}, 8, 4, 1, {{{2, 1}, 1}},
             {{{0, 1}, 2}}),
        make(GroupId::G2, {{{R(2), R(-1)}, {R(-1), R(2, 3)}}}, {2, 3}, 12, 6, 2, {{{2, 3}, 1}},
             {}),
    };
  }();
  return t;
}

Vec2<Rational> row_times(const Vec2<Rational>& v, const Mat2<Rational>& m) {
  return {v[0] * m[0][0] + v[1] * m[1][0], v[0] * m[0][1] + v[1] * m[1][1]};
}

struct Embedding {
  // Rows are the simple roots as orthonormal vectors.
  Mat2<double> roots;
};

const Embedding& embedding(GroupId g) {
  static const std::array<Embedding, 4> e = [] {
    std::array<Embedding, 4> out{};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto& G = tables()[k].gram_alpha;
      double g00 = to_double(G[0][0]), g01 = to_double(G[0][1]), g11 = to_double(G[1][1]);
      double l00 = std::sqrt(g00);
      double l10 = g01 / l00;
      double l11 = std::sqrt(g11 - l10 * l10);
      out[k].roots = {{{l00, 0.0}, {l10, l11}}};
    }
    return out;
  }();
  return e[static_cast<std::size_t>(g)];
}

}  // namespace

const CartanData& cartan_data(GroupId g) { return tables()[static_cast<std::size_t>(g)]; }

Mat2<Rational> basis_in_alpha(GroupId g, Basis b) {
  const auto& d = cartan_data(g);
  switch (b) {
    case Basis::alpha: return {{{Rational(1), Rational(0)}, {Rational(0), Rational(1)}}};
    case Basis::omega: return d.cartan_inv;
    case Basis::alpha_check:
      return {{{Rational(2) / d.gram_alpha[0][0], Rational(0)},
               {Rational(0), Rational(2) / d.gram_alpha[1][1]}}};
    case Basis::omega_check: return inverse(d.gram_alpha);
  }
  throw Error("bad basis");
}

Mat2<Rational> gram(GroupId g, Basis b) {
  auto T = basis_in_alpha(g, b);
  const auto& G = cartan_data(g).gram_alpha;
  Mat2<Rational> out{};
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      Rational s = 0;
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l) s += T[i][k] * G[k][l] * T[j][l];
      out[i][j] = s;
    }
  return out;
}

Rational inner(GroupId g, Vec2<Rational> u, Basis bu, Vec2<Rational> v, Basis bv) {
  auto ua = row_times(u, basis_in_alpha(g, bu));
  auto va = row_times(v, basis_in_alpha(g, bv));
  const auto& G = cartan_data(g).gram_alpha;
  Rational s = 0;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) s += ua[k] * G[k][l] * va[l];
  return s;
}

Vec2<Rational> convert(GroupId g, Vec2<Rational> v, Basis from, Basis to) {
  auto a = row_times(v, basis_in_alpha(g, from));
  return row_times(a, inverse(basis_in_alpha(g, to)));
}

Rational pairing(GroupId g, Weight lambda, Vec2<Rational> x) {
  const auto& ci = cartan_data(g).cartan_inv;
  Rational la(lambda.a), lb(lambda.b);
  return la * (ci[0][0] * x[0] + ci[0][1] * x[1]) + lb * (ci[1][0] * x[0] + ci[1][1] * x[1]);
}

double pairing(GroupId g, Weight lambda, DomainPoint x) {
  const auto& d = cartan_data(g);
  const auto& adj = d.cartan_adj;
  double u0 = static_cast<double>(lambda.a * adj[0][0] + lambda.b * adj[1][0]);
  double u1 = static_cast<double>(lambda.a * adj[0][1] + lambda.b * adj[1][1]);
  return (u0 * x.x + u1 * x.y) / static_cast<double>(d.cartan_det);
}

Rational norm_squared(GroupId g, Weight lambda) {
  Vec2<Rational> v{Rational(lambda.a), Rational(lambda.b)};
  return inner(g, v, Basis::omega, v, Basis::omega);
}

Vec2<double> to_orthonormal(GroupId g, Vec2<double> v, Basis b) {
  auto T = basis_in_alpha(g, b);
  Vec2<double> a{v[0] * to_double(T[0][0]) + v[1] * to_double(T[1][0]),
                 v[0] * to_double(T[0][1]) + v[1] * to_double(T[1][1])};
  const auto& L = embedding(g).roots;
  return {a[0] * L[0][0] + a[1] * L[1][0], a[0] * L[0][1] + a[1] * L[1][1]};
}

DomainPoint from_orthonormal(GroupId g, Vec2<double> p) {
  // Coweight coordinates are the pairings with the simple roots.
  const auto& L = embedding(g).roots;
  return {p[0] * L[0][0] + p[1] * L[0][1], p[0] * L[1][0] + p[1] * L[1][1]};
}

}  // namespace etrans
