#include "etrans/algebra.hpp"

#include <algorithm>
#include <map>

namespace etrans {

namespace {

LabelMultiset finish(GroupId g, OrbitKind kind, std::vector<LabelTerm> raw) {
  LabelMultiset m;
  m.kind = kind;
  m.raw = raw;
  std::map<Weight, Rational> merged;
  const bool even = kind == OrbitKind::E || kind == OrbitKind::Xi;
  for (const auto& t : raw) {
    Weight c = even ? canonical_label(g, t.label) : dominant_label(g, t.label);
    merged[c] += t.coeff;
  }
  for (const auto& [l, c] : merged)
    if (c.numerator() != 0) m.terms.push_back({l, c});
  return m;
}

}  // namespace

LabelMultiset product_e(GroupId g, Weight l, Weight lp) {
  auto orb = orbit(g, lp, true);
  Rational c(static_cast<std::int64_t>(symmetry_group(g).size()), static_cast<std::int64_t>(orb.size()));
  std::vector<LabelTerm> raw;
  for (const auto& mu : orb) raw.push_back({l + mu, c});
  return finish(g, OrbitKind::Xi, raw);
}

LabelMultiset product_omega(GroupId g, Weight l, Weight lp) {
  auto orb = orbit(g, lp, false);
  Rational c(cartan_data(g).weyl_order, static_cast<std::int64_t>(orb.size()));
  std::vector<LabelTerm> raw;
  for (const auto& mu : orb) raw.push_back({l + mu, c});
  return finish(g, OrbitKind::Omega, raw);
}

LabelMultiset product_c(GroupId g, Weight l, Weight lp) {
  if (!in_P_plus(l) || !in_P_plus(lp))
    throw InvalidArgument("product_c: labels must be dominant, got " + to_string(l) + " and " + to_string(lp));
  if (l.is_zero() && lp.is_zero()) return finish(g, OrbitKind::C, {{l, Rational(1)}});
  if (lp.is_zero()) std::swap(l, lp);
  if (l.is_zero()) return finish(g, OrbitKind::C, {{lp, Rational(1)}});
  if (!in_P_plus_plus(l) && in_P_plus_plus(lp)) std::swap(l, lp);

  const Rational W(cartan_data(g).weyl_order);
  auto wcoef = [&](Weight v) { return W / Rational(static_cast<std::int64_t>(orbit(g, v, false).size())); };

  std::vector<LabelTerm> raw;
  if (in_P_plus_plus(l)) {
    for (const auto& mu : orbit(g, lp, false)) raw.push_back({l + mu, wcoef(l + mu)});
    return finish(g, OrbitKind::C, raw);
  }
  // Both labels lie on the walls of P+.
  if (l.b != 0 && lp.a != 0) std::swap(l, lp);  // order as (a,0)(0,d) when mixed
  const std::int64_t a = l.a, b = l.b, c = lp.a, d = lp.b;
  if (g == GroupId::C2) {
    if ((b == 0 && d == 0 && a == c) || (a == 0 && c == 0 && b == d))
      throw Unsupported("product_c: the C2 case formulas need distinct labels, got " + to_string(l) + " twice");
    if (b == 0 && d == 0) {
      raw = {{{a + c, 0}, Rational(1)}, {{a - c, 0}, Rational(1)}, {{a - c, c}, wcoef({a - c, c})}};
    } else if (a == 0 && c == 0) {
      raw = {{{0, b + d}, Rational(1)}, {{0, b - d}, Rational(1)}, {{2 * d, b - d}, wcoef({2 * d, b - d})}};
    } else {
      raw = {{{a, d}, wcoef({a, d})}, {{a, -d}, wcoef({a, -d})}};
    }
    return finish(g, OrbitKind::C, raw);
  }
  if (g == GroupId::A2) {
    if (b == 0 && d == 0) {
      raw = {{{a + c, 0}, Rational(1)}, {{a, -c}, wcoef({a, -c})}};
    } else if (a == 0 && c == 0) {
      raw = {{{0, b + d}, Rational(1)}, {{-d, b}, wcoef({-d, b})}};
    } else {
      raw = {{{a, d}, wcoef({a, d})}, {{0, -a + d}, Rational(1)}};
    }
    return finish(g, OrbitKind::C, raw);
  }
  throw Unsupported("product_c: no case formula for " + std::string(to_string(g)) + " with " + to_string(l) +
                    " and " + to_string(lp));
}

Complex evaluate(GroupId g, const LabelMultiset& m, DomainPoint x) {
  Complex s{0.0, 0.0};
  for (const auto& t : m.terms) s += to_double(t.coeff) * eval_generic(g, m.kind, t.label, x);
  return s;
}

std::vector<std::vector<Complex>> central_split(const Grid& grid, std::span<const Complex> f) {
  if (f.size() != grid.size()) throw InvalidArgument("central_split: data length does not match the grid");
  const GroupId g = grid.group;
  const auto centers = center_elements(g);
  const int s = static_cast<int>(centers.size());
  if (s == 1) return {std::vector<Complex>(f.begin(), f.end())};

  auto avg = project_to_classes(grid, f);
  std::vector<Complex> class_value(grid.n_classes);
  for (std::size_t i = 0; i < grid.size(); ++i) class_value[grid.class_id[i]] = avg[i];

  // shifted[k][i]: class of point i translated by z_k
  std::vector<std::vector<int>> shifted(s, std::vector<int>(grid.size()));
  for (int k = 0; k < s; ++k)
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Vec2<std::int64_t> t{grid.points[i][0] + grid.M * centers[k][0], grid.points[i][1] + grid.M * centers[k][1]};
      int c = grid.class_of(t);
      if (c < 0) throw Error("central_split: grid is not closed under the center translations");
      shifted[k][i] = c;
    }

  std::vector<std::vector<Complex>> out(s, std::vector<Complex>(grid.size()));
  for (int j = 0; j < s; ++j)
    for (std::size_t i = 0; i < grid.size(); ++i) {
      Complex acc = f[i];
      for (int k = 1; k < s; ++k) acc += std::conj(character(g, j, k)) * class_value[shifted[k][i]];
      out[j][i] = acc / static_cast<double>(s);
    }
  return out;
}

std::vector<Function> central_split(GroupId g, Function f) {
  const auto centers = center_elements(g);
  const int s = static_cast<int>(centers.size());
  if (s == 1) return {f};
  std::vector<Function> out;
  for (int j = 0; j < s; ++j) {
    out.push_back([g, f, centers, s, j](DomainPoint x) {
      Complex acc = f(x);
      for (int k = 1; k < s; ++k) {
        DomainPoint y{x.x + static_cast<double>(centers[k][0]), x.y + static_cast<double>(centers[k][1])};
        acc += std::conj(character(g, j, k)) * f(reduce_to_fundamental(g, y, true).point);
      }
      return acc / static_cast<double>(s);
    });
  }
  return out;
}

}  // namespace etrans
