#include "doctest.h"

#include "signut/simd/modular_rank.hpp"
#include "support/oracles.hpp"

using namespace signut;
using namespace signut::simd;

namespace {

std::vector<Isa> available() {
  std::vector<Isa> out{Isa::Scalar};
  if (is_supported(Isa::Avx2)) out.push_back(Isa::Avx2);
  return out;
}

// Rank over GF(p) by textbook elimination with 64-bit arithmetic.
std::size_t reference_rank_mod_p(const IntMatrix& m) {
  const std::int64_t p = kModulus;
  std::vector<std::vector<std::int64_t>> a(m.rows(), std::vector<std::int64_t>(m.cols()));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i][j] = ((m(i, j) % p) + p) % p;
  auto power = [&](std::int64_t b, std::int64_t e) {
    std::int64_t r = 1;
    for (b %= p; e; e >>= 1, b = b * b % p)
      if (e & 1) r = r * b % p;
    return r;
  };
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols() && rank < m.rows(); ++c) {
    std::size_t piv = rank;
    while (piv < m.rows() && a[piv][c] == 0) ++piv;
    if (piv == m.rows()) continue;
    std::swap(a[piv], a[rank]);
    const std::int64_t inv = power(a[rank][c], p - 2);
    for (std::size_t i = rank + 1; i < m.rows(); ++i) {
      const std::int64_t f = a[i][c] * inv % p;
      for (std::size_t j = c; j < m.cols(); ++j) a[i][j] = ((a[i][j] - f * a[rank][j]) % p + p) % p;
    }
    ++rank;
  }
  return rank;
}

}  // namespace

TEST_CASE("ISA selection") {
  CHECK(is_supported(Isa::Scalar));
  CHECK(is_supported(best_supported_isa()));
  CHECK(to_string(Isa::Scalar) == "scalar");
  CHECK(to_string(Isa::Avx2) == "avx2");
  const Isa before = active_isa();
  set_active_isa(Isa::Scalar);
  CHECK(active_isa() == Isa::Scalar);
  set_active_isa(before);
  if (!is_supported(Isa::Avx2)) CHECK_THROWS_AS(set_active_isa(Isa::Avx2), std::invalid_argument);
  MESSAGE("best ISA on this machine: " << to_string(best_supported_isa()));
}

TEST_CASE("axpy kernels are bit-identical to the scalar reference") {
  auto r = oracle::rng(61);
  std::uniform_int_distribution<std::int32_t> residue(0, kModulus - 1);
  for (Isa isa : available()) {
    CAPTURE(to_string(isa));
    const AxpyModKernel kernel = axpy_mod_kernel(isa);
    for (int t = 0; t < 2000; ++t) {
      const std::size_t len = kLaneWidth * (1 + t % 9);
      std::vector<std::int32_t> src(len), dst(len);
      for (auto& x : src) x = residue(r);
      for (auto& x : dst) x = residue(r);
      // Extremes show up regularly.
      if (t % 5 == 0) {
        src[0] = kModulus - 1;
        dst[0] = 0;
      }
      const std::int32_t factor = t % 7 == 0 ? kModulus - 1 : residue(r);
      auto expected = dst;
      for (std::size_t i = 0; i < len; ++i) {
        const std::int64_t v = (static_cast<std::int64_t>(expected[i]) - static_cast<std::int64_t>(factor) * src[i]) %
                               kModulus;
        expected[i] = static_cast<std::int32_t>(v < 0 ? v + kModulus : v);
      }
      auto got = dst;
      kernel(got.data(), src.data(), factor, len);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("modular inverse") {
  for (std::int32_t a = 1; a < kModulus; a += 97)
    CHECK((static_cast<std::int64_t>(a) * inverse_mod(a)) % kModulus == 1);
  CHECK(inverse_mod(kModulus - 1) == kModulus - 1);
}

TEST_CASE("rank mod p agrees across ISAs and with the reference") {
  auto r = oracle::rng(62);
  ModularRankWorkspace ws;
  for (int t = 0; t < 1500; ++t) {
    const std::size_t n = 1 + t % 24;
    const auto g = oracle::random_signing(r, oracle::random_graph(r, n, 0.2 + 0.05 * (t % 12)));
    const auto a = adjacency_matrix(g);
    const auto expected = reference_rank_mod_p(a);
    for (Isa isa : available()) {
      CHECK(rank_mod_p(a, isa) == expected);
      CHECK(ws.rank(a, isa) == expected);
    }
    // One-sided filter: reduction mod p never raises the rank.
    if (n <= 12) CHECK(expected <= oracle::rank(a));
  }
}

TEST_CASE("rank mod p on general integer matrices") {
  auto r = oracle::rng(63);
  std::uniform_int_distribution<std::int64_t> entry(-100000, 100000);
  for (int t = 0; t < 300; ++t) {
    IntMatrix m(1 + t % 7, 1 + (t / 7) % 9);
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = t % 3 == 0 ? entry(r) % 3 : entry(r);
    for (Isa isa : available()) CHECK(rank_mod_p(m, isa) == reference_rank_mod_p(m));
  }
  IntMatrix p(1, 1);
  p(0, 0) = kModulus;
  CHECK(rank_mod_p(p, Isa::Scalar) == 0);
}
