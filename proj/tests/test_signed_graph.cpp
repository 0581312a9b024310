#include "doctest.h"

#include "signut/signed_graph.hpp"
#include "support/oracles.hpp"

using namespace signut;

namespace {

SignedGraph path3() { return SignedGraph(3, {{0, 1}, {1, 2}}); }

SignedGraph triangle_with_negative(Vertex a, Vertex b) {
  SignedGraph g = oracle::cycle(3);
  std::vector<Sign> s(3, Sign::Positive);
  s[static_cast<std::size_t>(g.edge_index(a, b))] = Sign::Negative;
  return g.with_signs(s);
}

}  // namespace

TEST_CASE("construction rejects loops, duplicates and out-of-range endpoints") {
  CHECK_THROWS_AS(SignedGraph(3, {{1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 3}}), std::invalid_argument);
  CHECK_THROWS_AS(SignedGraph(3, {{0, 1}}, {Sign::Positive, Sign::Negative}), std::invalid_argument);
}

TEST_CASE("edges are stored in lexicographic order with their signs") {
  SignedGraph g(4, {{2, 3}, {1, 0}, {0, 3}}, {Sign::Negative, Sign::Positive, Sign::Negative});
  REQUIRE(g.size() == 3);
  CHECK(g.edges()[0] == Edge{0, 1});
  CHECK(g.edges()[1] == Edge{0, 3});
  CHECK(g.edges()[2] == Edge{2, 3});
  CHECK(g.sign(0) == Sign::Positive);
  CHECK(g.sign(1) == Sign::Negative);
  CHECK(g.sign_of(3, 2) == Sign::Negative);
  CHECK(g.edge_index(1, 2) == -1);
  CHECK_THROWS_AS(g.sign_of(1, 2), std::out_of_range);
  CHECK(g.underlying().all_positive());
  CHECK(g.negative_count() == 2);
}

TEST_CASE("adjacency matrix") {
  SUBCASE("all-positive triangle") {
    const auto a = adjacency_matrix(oracle::cycle(3));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) CHECK(a(i, j) == (i == j ? 0 : 1));
  }
  SUBCASE("triangle with negative edge 01") {
    const auto a = adjacency_matrix(triangle_with_negative(0, 1));
    CHECK(a(0, 1) == -1);
    CHECK(a(1, 0) == -1);
    CHECK(a(0, 2) == 1);
    CHECK(a(1, 2) == 1);
  }
  SUBCASE("edgeless graph") {
    const auto a = adjacency_matrix(SignedGraph(3, {}));
    for (auto x : a.data()) CHECK(x == 0);
  }
  SUBCASE("matches oracle on random signed graphs") {
    auto r = oracle::rng(11);
    for (int t = 0; t < 100; ++t) {
      const auto g = oracle::random_signing(r, oracle::random_graph(r, 1 + t % 9, 0.5));
      const auto a = adjacency_matrix(g);
      CHECK(a.is_symmetric());
      CHECK(a == oracle::adjacency(g));
    }
  }
}

TEST_CASE("switching") {
  const auto g = triangle_with_negative(0, 1);
  CHECK(switch_at(g, SwitchingSet{}) == g);
  CHECK(switch_at(g, SwitchingSet({0, 1, 2})) == g);
  CHECK(switch_at(switch_at(g, SwitchingSet({1})), SwitchingSet({1})) == g);
  CHECK_THROWS_AS(switch_at(g, SwitchingSet({3})), std::domain_error);

  SUBCASE("involution and conjugation identity on random triples") {
    auto r = oracle::rng(12);
    for (int t = 0; t < 300; ++t) {
      const std::size_t n = 1 + t % 10;
      const auto h = oracle::random_signing(r, oracle::random_graph(r, n, 0.5));
      const SwitchingSet u(oracle::random_subset(r, n));
      const auto sw = switch_at(h, u);
      CHECK(sw.same_underlying(h));
      CHECK(switch_at(sw, u) == h);
      const auto a = adjacency_matrix(h);
      const auto b = adjacency_matrix(sw);
      const auto s = u.signature(n);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) CHECK(b(i, j) == s[i] * a(i, j) * s[j]);
      CHECK(oracle::sign_mask(sw) == (oracle::sign_mask(h) ^ oracle::cut_mask(h, [&] {
                                        std::uint64_t m = 0;
                                        for (auto v : u.members()) m |= std::uint64_t{1} << v;
                                        return m;
                                      }())));
    }
  }
}

TEST_CASE("switching set canonical form excludes vertex 0") {
  const SwitchingSet u({0, 2});
  CHECK(u.canonical(4) == SwitchingSet({1, 3}));
  CHECK(SwitchingSet({1, 3}).canonical(4) == SwitchingSet({1, 3}));
  CHECK(SwitchingSet({0, 1, 2, 3}).canonical(4).empty());
  CHECK(SwitchingSet({3, 1, 3}) == SwitchingSet({1, 3}));
  CHECK_THROWS_AS(SwitchingSet({5}).canonical(4), std::domain_error);
}

TEST_CASE("spanning tree") {
  SUBCASE("path is its own tree") {
    const auto t = spanning_tree(path3());
    CHECK(t.edges.size() == 2);
    CHECK(t.is_tree_edge == std::vector<bool>{true, true});
  }
  SUBCASE("C4 under BFS from 0, ascending neighbours") {
    const auto g = oracle::cycle(4);  // 01 03 12 23
    const auto t = spanning_tree(g);
    std::vector<Edge> tree(t.edges.begin(), t.edges.end());
    std::sort(tree.begin(), tree.end());
    CHECK(tree == std::vector<Edge>{{0, 1}, {0, 3}, {1, 2}});
    CHECK(t.parent == std::vector<Vertex>{0, 0, 1, 0});
  }
  SUBCASE("2K2 is rejected") {
    CHECK_THROWS_AS(spanning_tree(SignedGraph(4, {{0, 1}, {2, 3}})), std::domain_error);
  }
}

TEST_CASE("tree-positive representative") {
  SUBCASE("all-positive graph is its own representative") {
    const auto [rep, u] = tree_positive_representative(oracle::complete_graph(4));
    CHECK(rep == oracle::complete_graph(4));
    CHECK(u.empty());
  }
  SUBCASE("triangle with negative tree edge 01") {
    const auto g = triangle_with_negative(0, 1);
    const auto [rep, u] = tree_positive_representative(g);
    // Oracle: the unique member of the class with 01 and 02 positive.
    std::vector<SignedGraph> members;
    for (std::uint64_t s = 0; s < 8; ++s) {
      SwitchingSet set([&] {
        std::vector<Vertex> m;
        for (Vertex v = 0; v < 3; ++v)
          if ((s >> v) & 1U) m.push_back(v);
        return m;
      }());
      const auto h = switch_at(g, set);
      if (h.sign_of(0, 1) == Sign::Positive && h.sign_of(0, 2) == Sign::Positive) members.push_back(h);
    }
    REQUIRE(!members.empty());
    for (const auto& m : members) CHECK(m == members.front());
    CHECK(rep == members.front());
    CHECK(rep.sign_of(1, 2) == Sign::Negative);
    CHECK(switch_at(g, u) == rep);
    CHECK(u == u.canonical(3));
  }
  SUBCASE("idempotent and unique per class on every signing of C4 and K4") {
    for (const auto& base : {oracle::cycle(4), oracle::complete_graph(4)}) {
      const auto classes = oracle::switching_classes(base);
      const auto tree = spanning_tree(base);
      for (const auto& [id, members] : classes) {
        std::size_t tree_positive = 0;
        std::set<SignedGraph> reps;
        for (auto mask : members) {
          const auto g = oracle::with_mask(base, mask);
          bool positive = true;
          for (std::size_t i = 0; i < base.size(); ++i)
            if (tree.is_tree_edge[i] && g.sign(i) == Sign::Negative) positive = false;
          if (positive) ++tree_positive;
          const auto [rep, u] = tree_positive_representative(g);
          CHECK(tree_positive_representative(rep).first == rep);
          CHECK(switch_at(g, u) == rep);
          reps.insert(rep);
        }
        CHECK(tree_positive == 1);
        CHECK(reps.size() == 1);
      }
    }
  }
  SUBCASE("disconnected input") {
    CHECK_THROWS_AS(tree_positive_representative(SignedGraph(4, {{0, 1}, {2, 3}})), std::domain_error);
  }
}

TEST_CASE("traditional versus proper") {
  CHECK(is_traditional(oracle::complete_graph(5)));
  CHECK_FALSE(is_traditional(triangle_with_negative(0, 1)));
  const auto c4 = oracle::cycle(4);  // 01 03 12 23
  std::vector<Sign> s(4, Sign::Positive);
  s[static_cast<std::size_t>(c4.edge_index(0, 1))] = Sign::Negative;
  s[static_cast<std::size_t>(c4.edge_index(2, 3))] = Sign::Negative;
  CHECK(is_traditional(c4.with_signs(s)));
  CHECK_THROWS_AS(is_traditional(SignedGraph(4, {{0, 1}, {2, 3}})), std::domain_error);

  SUBCASE("agrees with exhaustive switching on all connected graphs with n <= 5") {
    for (std::size_t n = 2; n <= 5; ++n)
      for (const auto& g : oracle::connected_unlabelled_graphs(n))
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.size()); ++mask) {
          const auto h = oracle::with_mask(g, mask);
          const bool expected = oracle::balanced_by_exhaustion(h);
          CHECK(is_traditional(h) == expected);
          CHECK(is_balanced(h) == expected);
        }
  }
  SUBCASE("balance of disconnected graphs is per component") {
    const auto two = SignedGraph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(is_balanced(two));
    std::vector<Sign> t(6, Sign::Positive);
    t[3] = Sign::Negative;
    CHECK_FALSE(is_balanced(two.with_signs(t)));
  }
}

TEST_CASE("switching equivalence") {
  const auto g = triangle_with_negative(0, 2);
  CHECK(switching_equivalent(g, g));
  CHECK_FALSE(switching_equivalent(oracle::cycle(3), g));
  CHECK_THROWS_AS(switching_equivalent(oracle::cycle(3), path3()), std::domain_error);

  auto r = oracle::rng(13);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 2 + t % 8;
    const auto h = oracle::random_signing(r, oracle::random_connected_graph(r, n, 0.4));
    CHECK(switching_equivalent(h, switch_at(h, SwitchingSet(oracle::random_subset(r, n)))));
  }
  SUBCASE("agrees with brute-force orbits on K4") {
    const auto k4 = oracle::complete_graph(4);
    const auto classes = oracle::switching_classes(k4);
    std::map<std::uint64_t, std::uint64_t> id;
    for (const auto& [c, members] : classes)
      for (auto m : members) id[m] = c;
    for (std::uint64_t a = 0; a < 64; a += 3)
      for (std::uint64_t b = 0; b < 64; b += 5)
        CHECK(switching_equivalent(oracle::with_mask(k4, a), oracle::with_mask(k4, b)) == (id[a] == id[b]));
  }
}

TEST_CASE("class representatives") {
  SUBCASE("tree has a single all-positive representative") {
    ClassRepresentatives reps(path3());
    CHECK(reps.count() == 1);
    CHECK(reps[0].all_positive());
  }
  SUBCASE("C3 has two") {
    ClassRepresentatives reps(oracle::cycle(3));
    CHECK(reps.count() == 2);
    CHECK(reps.cyclomatic_number() == 1);
  }
  SUBCASE("K4: eight pairwise inequivalent representatives covering all 64 signings") {
    const auto k4 = oracle::complete_graph(4);
    ClassRepresentatives reps(k4);
    REQUIRE(reps.count() == 8);
    std::vector<SignedGraph> all;
    reps.for_each([&](const SignedGraph& g) { all.push_back(g); });
    REQUIRE(all.size() == 8);
    for (std::size_t i = 0; i < 8; ++i) {
      CHECK(all[i] == reps[i]);
      CHECK(reps.index_of(all[i]) == i);
      CHECK(tree_positive_representative(all[i]).first == all[i]);
      for (std::size_t j = i + 1; j < 8; ++j) CHECK_FALSE(switching_equivalent(all[i], all[j]));
    }
    std::map<std::size_t, std::size_t> hits;
    for (std::uint64_t m = 0; m < 64; ++m) {
      const auto g = oracle::with_mask(k4, m);
      std::size_t matches = 0;
      for (std::size_t i = 0; i < 8; ++i)
        if (switching_equivalent(g, all[i])) {
          ++matches;
          ++hits[i];
        }
      CHECK(matches == 1);
    }
    for (const auto& [i, count] : hits) CHECK(count == 8);
  }
  SUBCASE("binary-counter order over lexicographic non-tree edges") {
    const auto k4 = oracle::complete_graph(4);  // tree 01 02 03; non-tree 12 13 23
    ClassRepresentatives reps(k4);
    const auto nt = reps.non_tree_edges();
    REQUIRE(nt.size() == 3);
    CHECK(k4.edges()[nt[0]] == Edge{1, 2});
    CHECK(k4.edges()[nt[1]] == Edge{1, 3});
    CHECK(k4.edges()[nt[2]] == Edge{2, 3});
    CHECK(reps[1].negative_edges() == std::vector<Edge>{{1, 2}});
    CHECK(reps[4].negative_edges() == std::vector<Edge>{{2, 3}});
    CHECK(reps[5].negative_edges() == std::vector<Edge>{{1, 2}, {2, 3}});
  }
  SUBCASE("disconnected input") {
    CHECK_THROWS_AS(ClassRepresentatives(SignedGraph(4, {{0, 1}, {2, 3}})), std::domain_error);
  }
}
