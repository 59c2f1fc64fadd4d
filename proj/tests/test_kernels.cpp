#include <cstdlib>
#include <cstring>
#include <random>
#include <string>

#include "doctest.h"
#include "etrans/kernels.hpp"
#include "etrans/types.hpp"

using namespace etrans::kernels;

namespace {

struct Data {
  std::vector<double> w, ar, ai, br, bi;
  explicit Data(std::size_t n, unsigned seed) : w(n), ar(n), ai(n), br(n), bi(n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> u(-1, 1);
    for (std::size_t i = 0; i < n; ++i) {
      w[i] = 3 + u(rng);
      ar[i] = u(rng);
      ai[i] = u(rng);
      br[i] = u(rng) * 1e3;
      bi[i] = u(rng) * 1e-3;
    }
  }
};

bool same(ComplexSum a, ComplexSum b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("scalar kernels compute the sums") {
  Data d(10, 1);
  auto s = scalar::dot(10, d.ar.data(), d.ai.data(), d.br.data(), d.bi.data());
  auto t = scalar::weighted_dot_conj(10, d.w.data(), d.ar.data(), d.ai.data(), d.br.data(), d.bi.data());
  std::complex<double> es{0, 0}, et{0, 0};
  for (int i = 0; i < 10; ++i) {
    std::complex<double> a(d.ar[i], d.ai[i]), b(d.br[i], d.bi[i]);
    es += a * b;
    et += d.w[i] * a * std::conj(b);
  }
  CHECK(s.re == doctest::Approx(es.real()).epsilon(1e-12));
  CHECK(s.im == doctest::Approx(es.imag()).epsilon(1e-12));
  CHECK(t.re == doctest::Approx(et.real()).epsilon(1e-12));
  CHECK(t.im == doctest::Approx(et.imag()).epsilon(1e-12));
  auto z = scalar::dot(0, nullptr, nullptr, nullptr, nullptr);
  CHECK(z.re == 0.0);
  CHECK(z.im == 0.0);
}

TEST_CASE("every available variant is bitwise equal to the scalar reference") {
  const auto& ref = table(Isa::scalar);
  for (Isa isa : available()) {
    CAPTURE(std::string(to_string(isa)));
    const auto& k = table(isa);
    CHECK(k.isa == isa);
    for (std::size_t n = 0; n < 70; ++n) {
      Data d(n, static_cast<unsigned>(n) + 100);
      CHECK(same(ref.dot(n, d.ar.data(), d.ai.data(), d.br.data(), d.bi.data()),
                 k.dot(n, d.ar.data(), d.ai.data(), d.br.data(), d.bi.data())));
      CHECK(same(ref.weighted_dot_conj(n, d.w.data(), d.ar.data(), d.ai.data(), d.br.data(), d.bi.data()),
                 k.weighted_dot_conj(n, d.w.data(), d.ar.data(), d.ai.data(), d.br.data(), d.bi.data())));
    }
  }
}

TEST_CASE("runtime selection") {
  auto av = available();
  REQUIRE(!av.empty());
  CHECK(av.front() == Isa::scalar);
  if (const char* env = std::getenv("ETRANS_SIMD")) {
    if (std::string(env) == "scalar") CHECK(active().isa == Isa::scalar);
  } else {
    CHECK(active().isa == av.back());
  }
#if !defined(__aarch64__)
  CHECK_THROWS_AS(table(Isa::neon), etrans::Unsupported);
#endif
}
