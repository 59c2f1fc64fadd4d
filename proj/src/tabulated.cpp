#include "etrans/tabulated.hpp"

#include "etrans/weyl.hpp"

namespace etrans::tabulated {

namespace {

using R = Rational;

std::optional<R> eps_a1(std::int64_t M, std::int64_t s) {
  if (s == M || s == -M) return R(1, 2);
  if (-M < s && s < M) return R(1);
  return std::nullopt;
}

std::optional<R> eps_c2(std::int64_t M, std::int64_t s1, std::int64_t s2) {
  // Comparisons against M/2 are done on doubled values.
  const std::int64_t t1 = 2 * s1;
  if ((s1 == 0 && (s2 == 0 || s2 == M)) || (s2 == 0 && t1 == M) || (t1 == -M && s2 == M)) return R(1);
  if ((2 * s1 + s2 == 0 && 0 < s2 && s2 < M) || (2 * s1 + s2 == M && 0 < s2 && s2 < M) ||
      (s2 == 0 && 0 < t1 && t1 < M) || (s2 == M && -M < t1 && t1 < 0))
    return R(2);
  if (0 < s2 && s2 < M && 0 < 2 * s1 + s2 && 2 * s1 + s2 < M) return R(4);
  return std::nullopt;
}

std::optional<R> eps_a2(std::int64_t M, std::int64_t s1, std::int64_t s2) {
  if ((s2 == 0 && s1 == M) || (s2 == M && s1 == -M)) return R(1, 2);
  if (s1 == 0 && (s2 == 0 || s2 == M)) return R(1);
  if ((s2 == 0 && 0 < s1 && s1 < M) || (s2 == M && -M < s1 && s1 < 0) ||
      (s1 + s2 == M && 0 < s2 && s2 < M) || (s1 + s2 == 0 && 0 < s2 && s2 < M))
    return R(3, 2);
  if (0 < s2 && s2 < M && 0 < s1 + s2 && s1 + s2 < M) return R(3);
  return std::nullopt;
}

std::optional<R> eps_g2(std::int64_t M, std::int64_t s1, std::int64_t s2) {
  // Comparisons against M/3 are done on tripled values.
  const std::int64_t t2 = 3 * s2;
  if ((s1 == 0 && s2 == 0) || (s1 == 0 && t2 == M) || (s1 == M && t2 == -M)) return R(1);
  if ((s1 == 0 && 0 < t2 && t2 < M) || (3 * s2 + s1 == 0 && 0 < s1 && s1 < M) ||
      (3 * s2 + 2 * s1 == M && 0 < s1 && s1 < M))
    return R(3);
  if (0 < s1 && s1 < M && 0 < s1 + 3 * s2 && 2 * s1 + 3 * s2 < M) return R(6);
  return std::nullopt;
}

std::optional<R> norm_c2(std::int64_t M, std::int64_t a, std::int64_t b) {
  const R base(8 * M * M);
  if ((a == 0 || a == M) && b == 0) return base * 4;
  if (a == 0 && 2 * b == M) return base * 2;
  if ((0 < a && a < M && 0 < a + 2 * b && a + 2 * b < M) || (a == 0 && 0 < 2 * b && 2 * b < M) ||
      (a + 2 * b == M && 0 < 2 * b && 2 * b < M))
    return base;
  return std::nullopt;
}

std::optional<R> norm_a2(std::int64_t M, std::int64_t a, std::int64_t b) {
  const R base(9 * M * M);
  if ((a == 0 && b == 0) || (a == 0 && b == M) || (a == M && b == 0)) return base * 3;
  if ((0 < a && a < M && (b == 0 || b == M)) || (0 <= a + b && a + b <= M && 0 < a && a < M))
    return base;
  return std::nullopt;
}

std::optional<R> norm_g2(std::int64_t M, std::int64_t a, std::int64_t b) {
  const R base(6 * M * M);
  if (a == 0 && b == 0) return base * 6;
  if (3 * a == M && b == 0) return base * 3;
  if (a == 0 && 2 * b == M) return base * 2;
  if ((b == 0 && 0 < 3 * a && 3 * a < M) || (a == 0 && 0 < 2 * b && 2 * b < M) ||
      (0 < 3 * a + b && 3 * a + 2 * b < M))
    return base;
  return std::nullopt;
}

std::optional<R> norm_a1(std::int64_t M, std::int64_t k) {
  if (k == M || k == -M) return R(4 * M);
  if (-M < k && k < M) return R(2 * M);
  return std::nullopt;
}

}  // namespace

std::optional<Rational> epsilon(GroupId g, std::int64_t M, Vec2<std::int64_t> s) {
  switch (g) {
    case GroupId::A1xA1: {
      auto e1 = eps_a1(M, s[0]), e2 = eps_a1(M, s[1]);
      if (!e1 || !e2) return std::nullopt;
      return *e1 * *e2;
    }
    case GroupId::C2: return eps_c2(M, s[0], s[1]);
    case GroupId::A2: return eps_a2(M, s[0], s[1]);
    case GroupId::G2: return eps_g2(M, s[0], s[1]);
  }
  return std::nullopt;
}

std::optional<Rational> norm(GroupId g, std::int64_t M, Weight l) {
  switch (g) {
    case GroupId::A1xA1: {
      auto n1 = norm_a1(M, l.a), n2 = norm_a1(M, l.b);
      if (!n1 || !n2) return std::nullopt;
      return *n1 * *n2;
    }
    case GroupId::C2: return norm_c2(M, l.a, l.b);
    case GroupId::A2: return norm_a2(M, l.a, l.b);
    case GroupId::G2: return norm_g2(M, l.a, l.b);
  }
  return std::nullopt;
}

bool in_label_set(GroupId g, std::int64_t M, Weight l) {
  const std::int64_t a = l.a, b = l.b;
  switch (g) {
    case GroupId::A1xA1: return -M <= a && a <= M && -M <= b && b <= M;
    case GroupId::C2: return in_Pe(g, l) && 0 < a + 2 * b && a + 2 * b <= M && 0 <= a && a < M;
    case GroupId::A2: return in_Pe(g, l) && 0 < a + b && a + b <= M && 0 <= a && a < M;
    case GroupId::G2: return in_Pe(g, l) && 0 < 3 * a + b && 3 * a + 2 * b <= M && 0 <= 3 * a && 3 * a <= M;
  }
  return false;
}

}  // namespace etrans::tabulated
