#include "etrans/orbitfunc.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

namespace etrans {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Complex expi_turns(double t) {
  t -= std::floor(t);
  return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}

}  // namespace

std::string_view to_string(OrbitKind k) {
  switch (k) {
    case OrbitKind::E: return "E";
    case OrbitKind::Xi: return "Xi";
    case OrbitKind::C: return "C";
    case OrbitKind::Omega: return "Omega";
  }
  return "?";
}

OrbitKind parse_kind(std::string_view s) {
  std::string l;
  for (char c : s) l.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (l == "e") return OrbitKind::E;
  if (l == "xi") return OrbitKind::Xi;
  if (l == "c") return OrbitKind::C;
  if (l == "omega") return OrbitKind::Omega;
  throw InvalidArgument("unknown function kind '" + std::string(s) + "' (expected E, Xi, C, Omega)");
}

Rational xi_scale(GroupId g, Weight lambda) {
  return Rational(static_cast<std::int64_t>(symmetry_group(g).size()),
                  static_cast<std::int64_t>(orbit(g, lambda, true).size()));
}

Rational omega_scale(GroupId g, Weight lambda) {
  return Rational(cartan_data(g).weyl_order, static_cast<std::int64_t>(orbit(g, lambda, false).size()));
}

Complex root_of_unity(std::int64_t n, std::int64_t N) {
  if (N <= 0) throw InvalidArgument("root_of_unity: N must be positive");
  n %= N;
  if (n < 0) n += N;
  std::int64_t gg = std::gcd(n, N);
  if (gg == 0) gg = N;
  n /= gg;
  N /= gg;
  if (N == 1) return {1.0, 0.0};
  if (N == 2) return {-1.0, 0.0};
  if (N == 4) return n == 1 ? Complex{0.0, 1.0} : Complex{0.0, -1.0};
  double t = static_cast<double>(n) / static_cast<double>(N);
  return {std::cos(kTwoPi * t), std::sin(kTwoPi * t)};
}

OrbitSum::OrbitSum(GroupId g, OrbitKind kind, Weight lambda) : label_(lambda) {
  const auto& d = cartan_data(g);
  det_ = d.cartan_det;
  bool even = kind == OrbitKind::E || kind == OrbitKind::Xi;
  for (const auto& mu : orbit(g, lambda, even)) {
    u_.push_back({mu.a * d.cartan_adj[0][0] + mu.b * d.cartan_adj[1][0],
                  mu.a * d.cartan_adj[0][1] + mu.b * d.cartan_adj[1][1]});
  }
  if (kind == OrbitKind::Xi) scale_ = to_double(xi_scale(g, lambda));
  if (kind == OrbitKind::Omega) scale_ = to_double(omega_scale(g, lambda));
}

Complex OrbitSum::operator()(DomainPoint x) const {
  Complex s{0.0, 0.0};
  const double inv_det = 1.0 / static_cast<double>(det_);
  for (const auto& u : u_) s += expi_turns((static_cast<double>(u[0]) * x.x + static_cast<double>(u[1]) * x.y) * inv_det);
  return scale_ * s;
}

Complex OrbitSum::at_lattice(Vec2<std::int64_t> s, std::int64_t M) const {
  Complex acc{0.0, 0.0};
  for (const auto& u : u_) acc += root_of_unity(u[0] * s[0] + u[1] * s[1], det_ * M);
  return scale_ * acc;
}

Complex eval_generic(GroupId g, OrbitKind kind, Weight lambda, DomainPoint x) {
  return OrbitSum(g, kind, lambda)(x);
}

Complex eval_closed(GroupId g, OrbitKind kind, Weight lambda, DomainPoint p) {
  if (kind != OrbitKind::E && kind != OrbitKind::Xi)
    throw Unsupported("closed forms exist only for E and Xi");
  const double a = static_cast<double>(lambda.a), b = static_cast<double>(lambda.b);
  const double x = p.x, y = p.y;
  const double pi = std::numbers::pi;
  Complex xi;
  switch (g) {
    case GroupId::A1xA1:
      xi = std::exp(Complex(0.0, pi * (a * x + b * y)));
      break;
    case GroupId::C2:
      xi = 2.0 * std::cos(pi * ((2 * a + 2 * b) * x + (a + 2 * b) * y)) +
           2.0 * std::cos(pi * (2 * b * x - a * y));
      break;
    case GroupId::A2: {
      const double k = 2.0 * pi / 3.0;
      xi = std::exp(Complex(0.0, k * ((2 * a + b) * x + (a + 2 * b) * y))) +
           std::exp(Complex(0.0, -k * ((x + 2 * y) * a + (y - x) * b))) +
           std::exp(Complex(0.0, -k * ((x - y) * a + (2 * x + y) * b)));
      break;
    }
    case GroupId::G2:
      xi = 2.0 * std::cos(2 * pi * ((2 * a + b) * x + (3 * a + 2 * b) * y)) +
           2.0 * std::cos(2 * pi * (a * x + (3 * a + b) * y)) +
           2.0 * std::cos(2 * pi * ((a + b) * x + b * y));
      break;
  }
  if (kind == OrbitKind::Xi) return xi;
  return xi / to_double(xi_scale(g, lambda));
}

Complex c_from_e(GroupId g, Weight lambda, DomainPoint x) {
  if (!in_P_plus(lambda)) throw InvalidArgument("c_from_e: label " + to_string(lambda) + " is not dominant");
  if (g == GroupId::A1xA1) {
    // C is the sum of the E-functions over the distinct E-orbits inside W(lambda).
    Complex s{0.0, 0.0};
    for (const auto& mu : orbit(g, lambda, false)) s += eval_generic(g, OrbitKind::E, mu, x);
    return s;
  }
  Complex e = eval_generic(g, OrbitKind::E, lambda, x);
  if (!in_P_plus_plus(lambda)) return e;
  Weight r = simple_reflection(g, cartan_data(g).even_reflection_index).apply(lambda);
  return e + eval_generic(g, OrbitKind::E, r, x);
}

double laplace_eigenvalue(GroupId g, Weight lambda) {
  return -4.0 * std::numbers::pi * std::numbers::pi * to_double(norm_squared(g, lambda));
}

}  // namespace etrans
