#pragma once

// Seeded random property runs for the two band-action propositions.
// Draws use only the raw 64-bit engine output, so runs are reproducible
// across standard libraries.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "coxcomb.hpp"
#include "coxword.hpp"

namespace bandgroup {

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform-ish integer in [lo, hi].
    int between(int lo, int hi) {
      auto const span = static_cast<std::uint64_t>(hi - lo + 1);
      return lo + static_cast<int>(eng_() % span);
    }

   private:
    std::mt19937_64 eng_;
  };

  // Reduced word of the given length over s_1..s_n.
  inline CoxWord random_cox_word(Rng& rng, int n, int length) {
    std::vector<int> raw;
    for (int q = 0; q < length; ++q) {
      int x = rng.between(1, n - 1);
      if (!raw.empty() && x >= raw.back()) {
        ++x;
      }
      raw.push_back(x);
    }
    return CoxWord(raw);
  }

  inline BandPair random_band(Rng& rng, int n) {
    int const i = rng.between(1, n - 1);
    return {i, rng.between(i + 1, n)};
  }

  struct PropertyCase {
    CoxWord  word;
    BandPair band;
    long     m = 0;
    PropReport report;
  };

  struct PropertyRun {
    std::size_t               cases    = 0;
    std::size_t               rejected = 0;  // draws failing the hypothesis
    std::vector<PropertyCase> failures;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  inline long random_m(Rng& rng, int lo, int hi) {
    long const a = rng.between(lo, hi);
    return rng.between(0, 1) ? a : -a;
  }

  // `cases` instances with n <= max_n, |w| <= max_len, |m| in {3, 4}; draws
  // with a jk-block of length 2|m| are redrawn.
  inline PropertyRun run_prop_trans(std::uint64_t seed, std::size_t cases,
                                    int max_n = 6, int max_len = 12) {
    Rng         rng(seed);
    PropertyRun run;
    while (run.cases < cases) {
      int const     n = rng.between(2, max_n);
      CoxWord const w = random_cox_word(rng, n, rng.between(0, max_len));
      BandPair const t = random_band(rng, n);
      long const     m = random_m(rng, 3, 4);
      auto const     r = check_prop_trans(w, t, m);
      if (r.status == PropReport::Status::hypothesis_violation) {
        ++run.rejected;
        continue;
      }
      ++run.cases;
      if (!r.passed()) {
        run.failures.push_back({w, t, m, r});
      }
    }
    return run;
  }

  // `words` random words, each checked against every band on its strands and
  // every m in {-4, -3, 3, 4}; `cases` counts the (w, band, m) triples that
  // satisfy the hypothesis.
  inline PropertyRun run_prop_trans_all_bands(std::uint64_t seed, std::size_t words,
                                              int max_n = 6, int max_len = 12) {
    Rng         rng(seed);
    PropertyRun run;
    for (std::size_t q = 0; q < words; ++q) {
      int const     n = rng.between(2, max_n);
      CoxWord const w = random_cox_word(rng, n, rng.between(0, max_len));
      for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
          for (long m : {-4L, -3L, 3L, 4L}) {
            auto const r = check_prop_trans(w, {i, j}, m);
            if (r.status == PropReport::Status::hypothesis_violation) {
              ++run.rejected;
              continue;
            }
            ++run.cases;
            if (!r.passed()) {
              run.failures.push_back({w, {i, j}, m, r});
            }
          }
        }
      }
    }
    return run;
  }

  // `cases` instances with n <= max_n, |w| <= max_len, 3 <= |m| <= 5 and no
  // long il-subword in w.
  inline PropertyRun run_prop7(std::uint64_t seed, std::size_t cases,
                               int max_n = 6, int max_len = 12) {
    Rng         rng(seed);
    PropertyRun run;
    while (run.cases < cases) {
      int const     n = rng.between(2, max_n);
      CoxWord const w = random_cox_word(rng, n, rng.between(0, max_len));
      BandPair const t = random_band(rng, n);
      long const     m = random_m(rng, 3, 5);
      auto const     r = check_prop7(w, t, m);
      if (r.status == PropReport::Status::hypothesis_violation) {
        ++run.rejected;
        continue;
      }
      ++run.cases;
      if (!r.passed()) {
        run.failures.push_back({w, t, m, r});
      }
    }
    return run;
  }

}  // namespace bandgroup
