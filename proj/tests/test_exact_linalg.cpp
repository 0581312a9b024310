#include "doctest.h"

#include "signut/constructions.hpp"
#include "signut/exact_linalg.hpp"
#include "support/oracles.hpp"

using namespace signut;

namespace {

std::vector<Rational> q(std::initializer_list<long> xs) {
  std::vector<Rational> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<Integer> z(std::initializer_list<long> xs) {
  std::vector<Integer> v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

// Local condition at every vertex, summed by hand from the edge list.
bool satisfies_local_condition(const SignedGraph& g, const std::vector<Rational>& x) {
  std::vector<Rational> sum(g.order(), 0);
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const int s = to_int(g.sign(i));
    sum[edges[i].u] += s * x[edges[i].v];
    sum[edges[i].v] += s * x[edges[i].u];
  }
  return std::all_of(sum.begin(), sum.end(), [](const Rational& r) { return r == 0; });
}

}  // namespace

TEST_CASE("rank and nullity") {
  CHECK(rank_nullity(adjacency_matrix(oracle::cycle(3))) == RankNullity{3, 0});
  CHECK(rank_nullity(adjacency_matrix(oracle::cycle(4))) == RankNullity{2, 2});
  CHECK(rank_nullity(adjacency_matrix(complete_nut(1).graph)) == RankNullity{4, 1});
  CHECK(rank_nullity(IntMatrix(3, 3)) == RankNullity{0, 3});
  CHECK(rank_nullity(RationalMatrix(adjacency_matrix(oracle::cycle(4)))) == RankNullity{2, 2});

  SUBCASE("non-square matrices") {
    IntMatrix m(2, 4);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 2) = 3;
    CHECK(rank_nullity(m) == RankNullity{2, 2});
  }
}

TEST_CASE("exact rank agrees with the rational oracle and with floating SVD on 1000 random signed graphs") {
  auto r = oracle::rng(21);
  std::size_t singular = 0;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t n = 1 + t % 10;
    const auto g = oracle::random_signing(r, oracle::random_graph(r, n, 0.15 + 0.1 * (t % 7)));
    const auto a = adjacency_matrix(g);
    const auto rn = rank_nullity(a);
    CHECK(rn.rank + rn.nullity == n);
    CHECK(rn.rank == oracle::rank(a));
    CHECK(rn.rank == oracle::float_rank(a));
    if (rn.nullity > 0) ++singular;
  }
  CHECK(singular > 100);
}

TEST_CASE("kernel basis") {
  SUBCASE("C4 alternating kernel") {
    const auto b = kernel_basis(adjacency_matrix(oracle::cycle(4)));
    REQUIRE(b.nullity() == 2);
    CHECK(b.dimension == 4);
    CHECK(same_span(b.vectors, {q({1, 0, -1, 0}), q({0, 1, 0, -1})}));
    CHECK(b.is_integer);
    CHECK_FALSE(b.is_full);
  }
  SUBCASE("signed K5 nut") {
    const auto b = kernel_basis(adjacency_matrix(complete_nut(1).graph));
    REQUIRE(b.nullity() == 1);
    CHECK(b.vectors[0] == q({1, -1, 1, 1, -1}));
    CHECK(b.is_full);
  }
  SUBCASE("nonsingular matrix") {
    const auto b = kernel_basis(adjacency_matrix(oracle::complete_graph(5)));
    CHECK(b.nullity() == 0);
  }
  SUBCASE("random graphs: local condition, independence, oracle span") {
    auto r = oracle::rng(22);
    for (int t = 0; t < 400; ++t) {
      const std::size_t n = 2 + t % 11;
      const auto g = oracle::random_signing(r, oracle::random_graph(r, n, 0.3));
      const auto a = adjacency_matrix(g);
      const auto b = kernel_basis(a);
      CHECK(b.nullity() == n - oracle::rank(a));
      CHECK(oracle::rank(b.vectors) == b.nullity());
      CHECK(oracle::same_span(b.vectors, oracle::kernel(a)));
      for (const auto& x : b.vectors) {
        CHECK(satisfies_local_condition(g, x));
        CHECK(in_kernel(a, std::span<const Rational>(x)));
        // Primitive integer, first non-zero entry positive.
        Integer gcd = 0;
        for (const auto& e : x) {
          CHECK(e.get_den() == 1);
          mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), e.get_num_mpz_t());
        }
        CHECK(gcd == 1);
        const auto first = std::find_if(x.begin(), x.end(), [](const Rational& e) { return e != 0; });
        CHECK(*first > 0);
      }
    }
  }
}

TEST_CASE("kernel basis on large entries takes the arbitrary-precision path") {
  IntMatrix m(3, 3);
  const std::int64_t big = std::int64_t{1} << 40;
  m(0, 0) = big;
  m(0, 1) = big + 1;
  m(1, 0) = big - 1;
  m(1, 1) = big;
  m(2, 0) = 3 * big - 1;
  m(2, 1) = 3 * big + 1;
  CHECK_FALSE(fits_machine_elimination(m));
  const auto rn = rank_nullity(m);
  CHECK(rn.rank == oracle::rank(m));
  const auto b = kernel_basis(m);
  CHECK(oracle::same_span(b.vectors, oracle::kernel(m)));
}

TEST_CASE("kernel is switching covariant") {
  auto r = oracle::rng(23);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 9;
    const auto g = oracle::random_signing(r, oracle::random_graph(r, n, 0.4));
    const SwitchingSet u(oracle::random_subset(r, n));
    auto flipped = kernel_basis(adjacency_matrix(g)).vectors;
    for (auto& x : flipped)
      for (auto v : u.members()) x[v] = -x[v];
    CHECK(same_span(flipped, kernel_basis(adjacency_matrix(switch_at(g, u))).vectors));
  }
}

TEST_CASE("fullify basis") {
  SUBCASE("already full basis is unchanged") {
    const auto b = kernel_basis(adjacency_matrix(complete_nut(1).graph));
    CHECK(fullify_basis(b).vectors == b.vectors);
  }
  SUBCASE("C4") {
    const auto b = KernelBasis::from_vectors(4, {q({1, 0, -1, 0}), q({0, 1, 0, -1})});
    const auto f = fullify_basis(b);
    REQUIRE(f.nullity() == 2);
    CHECK(f.is_full);
    CHECK(f.is_integer);
    CHECK(oracle::same_span(f.vectors, b.vectors));
    for (const auto& x : f.vectors)
      for (const auto& e : x) CHECK(e != 0);
  }
  SUBCASE("span missing a coordinate") {
    const auto b = KernelBasis::from_vectors(3, {q({1, 1, 0}), q({1, -1, 0})});
    CHECK_THROWS_WITH_AS(fullify_basis(b), doctest::Contains("not a core kernel"), std::domain_error);
  }
  SUBCASE("single step uses the smallest valid alpha") {
    // x1 = (1,0,2), x2 = (3,1,1): zero at coordinate 1 of x1, donor x2,
    // alpha = floor(max(1/3, 2/1)) + 1 = 3, so x1 <- (10, 3, 5).
    const auto b = KernelBasis::from_vectors(3, {q({1, 0, 2}), q({3, 1, 1})});
    const auto f = fullify_basis(b);
    CHECK(f.vectors[0] == q({10, 3, 5}));
    CHECK(f.vectors[1] == q({3, 1, 1}));
  }
}

TEST_CASE("canonical eigenvector") {
  CHECK(canonical_eigenvector(KernelBasis::from_vectors(5, {q({2, -2, 2, 2, -2})})) == z({1, -1, 1, 1, -1}));
  CHECK(canonical_eigenvector(KernelBasis::from_vectors(5, {q({-1, 1, -1, -1, 1})})) == z({1, -1, 1, 1, -1}));
  CHECK_THROWS_AS(canonical_eigenvector(KernelBasis::from_vectors(4, {q({1, 0, -1, 0}), q({0, 1, 0, -1})})),
                  std::domain_error);
  CHECK_THROWS_AS(canonical_eigenvector(KernelBasis::from_vectors(4, {})), std::domain_error);
  std::vector<Rational> half{Rational(1, 2), Rational(-3, 4)};
  CHECK(primitive_integer_vector(std::span<const Rational>(half)) == z({2, -3}));
}

TEST_CASE("same_span") {
  CHECK(same_span({q({1, 0}), q({0, 1})}, {q({1, 1}), q({1, -1})}));
  CHECK_FALSE(same_span({q({1, 0})}, {q({0, 1})}));
  CHECK_FALSE(same_span({q({1, 0}), q({0, 1})}, {q({1, 1})}));
}
