#include <catch_amalgamated.hpp>

#include "bandgroup/bandgroup.hpp"
#include "oracles.hpp"

using namespace bandgroup;

namespace {
  ArtinWord W(int n, std::vector<int> l) {
    return ArtinWord::from_signed(n, l);
  }
  FreeWord F(std::vector<FreeWord::letter_type> l) {
    return FreeWord::from_letters(l);
  }

  ArtinWord random_word(Rng& rng, int n, int len) {
    ArtinWord w(n);
    for (int q = 0; q < len; ++q) {
      w.push_back({rng.between(1, n - 1), rng.between(0, 1) ? 1 : -1});
    }
    return w;
  }
}  // namespace

TEST_CASE("artin words") {
  CHECK_THROWS_AS(W(3, {3}), std::out_of_range);
  CHECK_THROWS_AS(W(3, {0}), std::invalid_argument);
  CHECK_THROWS_AS(ArtinWord(0), std::invalid_argument);
  CHECK_THROWS_AS(W(3, {1}) * W(4, {1}), std::invalid_argument);
  CHECK(W(3, {1, -2}).inverse() == W(3, {2, -1}));
  CHECK(W(3, {1, 2}).pow(-2) == W(3, {-2, -1, -2, -1}));
  CHECK(W(3, {1, 2, -2, -1, 2}).freely_reduced() == W(3, {2}));
  CHECK(W(3, {1, 2}).reversed() == W(3, {2, 1}));
}

TEST_CASE("band generators expand from above") {
  CHECK(band_to_artin({1, 2}, 2) == W(2, {1}));
  CHECK(band_to_artin({2, 3}, 4) == W(4, {2}));
  CHECK(band_to_artin({1, 3}, 3) == W(3, {2, 1, -2}));
  CHECK(band_to_artin({1, 4}, 4) == W(4, {3, 2, 1, -2, -3}));
  CHECK_THROWS_AS(band_to_artin({1, 4}, 3), std::out_of_range);
  CHECK(band_power({1, 3}, -1, 3) == W(3, {2, -1, -2}));
}

TEST_CASE("free group action") {
  auto const t1 = FreeWord::generator(1);
  auto const t2 = FreeWord::generator(2);

  auto e = artin_action_on_free(W(2, {1}));
  CHECK(e.image(1) == F({1, 2, -1}));
  CHECK(e.image(2) == t1);

  CHECK(artin_action_on_free(ArtinWord(4)).is_identity());

  auto e2 = artin_action_on_free(W(2, {1, 1}));
  CHECK(e2.image(1) == F({1, 2, 1, -2, -1}));
  CHECK(e2.image(2) == F({1, 2, -1}));
  CHECK(conjugate(t1, t2) == F({1, 2, -1}));
}

TEST_CASE("free words reduce") {
  CHECK(F({1, 2, -2, -1}).empty());
  CHECK(F({1, 2, -2, 3}) == F({1, 3}));
  CHECK_THROWS_AS(F({0}), std::invalid_argument);
  auto x = F({1, 2});
  x *= F({-2, -1, 3});
  CHECK(x == F({3}));
  CHECK(F({1, -2}).inverse() == F({2, -1}));
}

TEST_CASE("action composes along concatenation") {
  Rng rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int const n = rng.between(2, 5);
    auto const u = random_word(rng, n, rng.between(0, 8));
    auto const v = random_word(rng, n, rng.between(0, 8));
    CHECK(artin_action_on_free(u * v)
          == artin_action_on_free(u).then(artin_action_on_free(v)));
    // w followed by its inverse acts trivially.
    CHECK(artin_action_on_free(u * u.inverse()).is_identity());
  }
}

TEST_CASE("braid equality") {
  CHECK(braid_equal(W(3, {1, 2, 1}), W(3, {2, 1, 2})));
  CHECK_FALSE(braid_equal(W(2, {1}), W(2, {-1})));
  CHECK(braid_equal(W(4, {1, 3}), W(4, {3, 1})));
  CHECK_FALSE(braid_equal(W(3, {1, 2}), W(3, {2, 1})));
  CHECK(braid_equal(band_to_artin({1, 2}, 3) * band_to_artin({1, 3}, 3),
                    band_to_artin({1, 3}, 3) * band_to_artin({2, 3}, 3)));
  CHECK_THROWS_AS(braid_equal(W(3, {1}), W(4, {1})), std::invalid_argument);

  SECTION("the full twist is central") {
    for (int n = 2; n <= 5; ++n) {
      ArtinWord delta(n);
      for (int k = n - 1; k >= 1; --k)
        for (int i = 1; i <= k; ++i) delta.push_back({i, 1});
      auto const d2 = delta * delta;
      for (int i = 1; i < n; ++i) CHECK(braid_equal(d2 * W(n, {i}), W(n, {i}) * d2));
      CHECK_FALSE(is_trivial_braid(d2));
    }
  }
}

TEST_CASE("braid equality agrees with the Burau oracle") {
  Rng rng(11);
  int equal_pairs = 0;
  for (int trial = 0; trial < 400; ++trial) {
    int const n = rng.between(2, 3);
    auto const u = random_word(rng, n, rng.between(0, 6));
    // Perturb by inserting a relator so equal pairs occur often.
    auto v = u;
    if (trial % 2 == 0 && n == 3) {
      v *= W(3, {1, 2, 1, -2, -1, -2});
    } else if (trial % 3 == 0) {
      v *= W(n, {1, 1});
    }
    bool const eq = braid_equal(u, v);
    equal_pairs += eq;
    // Burau is faithful for n <= 3.
    CHECK(eq == (oracle::burau(u) == oracle::burau(v)));
  }
  CHECK(equal_pairs > 100);
}

TEST_CASE("band relations of the dual presentation") {
  for (int n = 2; n <= 5; ++n) {
    auto const rep = verify_relations(relations_bkl(n), CoxeterDatum(n, 1));
    CHECK(rep.passed());
  }
}

TEST_CASE("mirrored band convention breaks the triple relations") {
  // a_13 built from below: sig1 sig2 sig1'.
  auto const below = W(3, {1, 2, -1});
  CHECK_FALSE(braid_equal(W(3, {1}) * below, below * W(3, {2})));
  CHECK(braid_equal(W(3, {1}) * band_to_artin({1, 3}, 3),
                    band_to_artin({1, 3}, 3) * W(3, {2})));
}

TEST_CASE("permutations") {
  CHECK(permutation_image(W(3, {1})).cycles() == "(1 2)");
  CHECK(permutation_image(W(3, {1, 1})).is_identity());
  CHECK(permutation_image(band_to_artin({1, 3}, 3)).cycles() == "(1 3)");
  CHECK(permutation_image(band_to_artin({2, 5}, 6)).cycles() == "(2 5)");
  CHECK(Permutation(3).cycles() == "()");
  CHECK_THROWS_AS(Permutation(std::vector<int>{1, 1, 2}), std::invalid_argument);

  Permutation const p({2, 3, 1});
  Permutation const q({2, 1, 3});
  CHECK((p * q)(1) == p(q(1)));
  CHECK((p * p.inverse()).is_identity());
  CHECK(q.is_involution());
  CHECK_FALSE(p.is_involution());

  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    int const n = rng.between(2, 6);
    auto const u = random_word(rng, n, rng.between(0, 10));
    auto const v = random_word(rng, n, rng.between(0, 10));
    CHECK(permutation_image(u * v) == permutation_image(u) * permutation_image(v));
  }
}
