#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <random>
#include <vector>

#include "pancake/permutation.hpp"
#include "support.hpp"

using namespace pancake;
using testsupport::from_cycles;

TEST_CASE("prefix reversal one-line forms") {
  CHECK(prefix_reversal(3, 2) == Permutation({2, 1, 3}));
  CHECK(prefix_reversal(3, 3) == Permutation({3, 2, 1}));
  CHECK(prefix_reversal(5, 4) == Permutation({4, 3, 2, 1, 5}));
}

TEST_CASE("prefix reversal rejects out-of-range j") {
  CHECK_THROWS_AS(prefix_reversal(4, 1), std::domain_error);
  CHECK_THROWS_AS(prefix_reversal(4, 5), std::domain_error);
  CHECK_THROWS_AS(prefix_reversal(1, 2), std::domain_error);
}

TEST_CASE("prefix reversals are involutions fixing the tail") {
  for (int n = 2; n <= 6; ++n)
    for (int j = 2; j <= n; ++j) {
      const Permutation r = prefix_reversal(n, j);
      CHECK(compose(r, r).is_identity());
      CHECK(r == inverse(r));
      for (int k = j + 1; k <= n; ++k) CHECK(r.image(k) == k);
    }
}

TEST_CASE("composition applies the right factor first") {
  // reversing all three entries of [2,1,3] gives [3,1,2]
  CHECK(compose(Permutation({2, 1, 3}), prefix_reversal(3, 3)) ==
        Permutation({3, 1, 2}));
  for (int j = 2; j <= 5; ++j)
    CHECK(compose(Permutation::identity(5), prefix_reversal(5, j)) ==
          prefix_reversal(5, j));
  CHECK(compose(Permutation({3, 1, 2}), Permutation({2, 3, 1})).is_identity());
}

TEST_CASE("composition rejects mismatched degrees") {
  CHECK_THROWS_AS(compose(Permutation::identity(3), Permutation::identity(4)),
                  std::domain_error);
}

TEST_CASE("right factor r_1j reverses a prefix of the one-line form") {
  for (int n = 3; n <= 6; ++n) {
    const auto f = factorial(static_cast<unsigned>(n));
    for (std::uint64_t r = 0; r < f; r += 7) {
      const Permutation g = perm_unrank(r, n);
      for (int j = 2; j <= n; ++j) {
        std::vector<std::uint8_t> expect(g.one_line());
        std::reverse(expect.begin(), expect.begin() + j);
        CHECK(compose(g, prefix_reversal(n, j)) == Permutation(expect));
      }
    }
  }
}

TEST_CASE("inverse examples and involution of inversion") {
  CHECK(inverse(Permutation({1, 2, 3})) == Permutation({1, 2, 3}));
  // cycle (1 3 2) inverts to (1 2 3)
  CHECK(inverse(Permutation({3, 1, 2})) == Permutation({2, 3, 1}));
  CHECK(from_cycles(3, {{1, 3, 2}}) == Permutation({3, 1, 2}));
  CHECK(inverse(from_cycles(3, {{1, 3, 2}})) == from_cycles(3, {{1, 2, 3}}));
  for (std::uint64_t r = 0; r < 120; ++r) {
    const Permutation p = perm_unrank(r, 5);
    CHECK(inverse(inverse(p)) == p);
    CHECK(compose(p, inverse(p)).is_identity());
    CHECK(compose(inverse(p), p).is_identity());
  }
}

TEST_CASE("rank/unrank is the lexicographic bijection") {
  CHECK(perm_rank(Permutation({1, 2, 3})) == 0);
  CHECK(perm_unrank(5, 3) == Permutation({3, 2, 1}));

  // oracle: std::next_permutation enumerates one-line forms in
  // lexicographic order, so the i-th form must be perm_unrank(i)
  for (int n = 1; n <= 6; ++n) {
    std::vector<int> form(static_cast<std::size_t>(n));
    for (int k = 1; k <= n; ++k) form[static_cast<std::size_t>(k - 1)] = k;
    std::uint64_t r = 0;
    do {
      const Permutation p(form);
      CHECK(perm_rank(p) == r);
      CHECK(perm_unrank(r, n) == p);
      ++r;
    } while (std::next_permutation(form.begin(), form.end()));
    CHECK(r == factorial(static_cast<unsigned>(n)));
  }
}

TEST_CASE("rank bounds are enforced") {
  CHECK_THROWS_AS(perm_unrank(6, 3), std::domain_error);
  CHECK_THROWS_AS(perm_unrank(0, 0), std::domain_error);
  CHECK_THROWS_AS(perm_unrank(0, 21), std::domain_error);
}

TEST_CASE("permutation validation") {
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 3}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{0, 1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{2, 3, 4}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Permutation(std::vector<int>{}), std::invalid_argument);
}

TEST_CASE("composition is associative and identity is neutral") {
  std::mt19937 rng(20260810);
  std::uniform_int_distribution<std::uint64_t> pick(0, 119);
  const Permutation id = Permutation::identity(5);
  for (int t = 0; t < 200; ++t) {
    const Permutation a = perm_unrank(pick(rng), 5);
    const Permutation b = perm_unrank(pick(rng), 5);
    const Permutation c = perm_unrank(pick(rng), 5);
    CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    CHECK(compose(a, id) == a);
    CHECK(compose(id, a) == a);
  }
}

TEST_CASE("short reversals preserve the last entry") {
  for (int n = 3; n <= 5; ++n) {
    const auto f = factorial(static_cast<unsigned>(n));
    for (std::uint64_t r = 0; r < f; ++r) {
      const Permutation g = perm_unrank(r, n);
      for (int j = 2; j < n; ++j)
        CHECK(compose(g, prefix_reversal(n, j)).image(n) == g.image(n));
    }
  }
}

TEST_CASE("generator set invariants") {
  for (int n = 2; n <= 6; ++n) {
    const GeneratorSet gs = generator_set(n);
    CHECK(gs.reversals.size() == static_cast<std::size_t>(n - 1));
    for (std::size_t k = 0; k < gs.reversals.size(); ++k) {
      const Permutation& r = gs.reversals[k];
      CHECK(r == prefix_reversal(n, static_cast<int>(k) + 2));
      CHECK_FALSE(r.is_identity());
      // closed under inverse: every element is its own inverse
      CHECK(inverse(r) == r);
    }
  }
}
