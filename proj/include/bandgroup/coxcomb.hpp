#pragma once

// Word combinatorics of band powers acting on the universal Coxeter group:
// jk-factorizations, long and critical subwords, and executable checks of the
// two structural statements about how a_jk^m reshapes a word.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"
#include "coxword.hpp"
#include "hurwitz.hpp"

namespace bandgroup {

  // w = w_0 s_{i_1} w_1 ... s_{i_l} w_l with every w_v over {s_j, s_k} and
  // every separator i_v outside {j, k}.
  struct JkFactorization {
    int                  j = 1;
    int                  k = 2;
    std::vector<CoxWord> blocks;      // l + 1 entries
    std::vector<int>     separators;  // l entries

    std::size_t length() const noexcept {
      return separators.size();
    }

    CoxWord flatten() const {
      std::vector<int> raw;
      for (std::size_t v = 0; v < blocks.size(); ++v) {
        if (v > 0) {
          raw.push_back(separators[v - 1]);
        }
        raw.insert(raw.end(), blocks[v].begin(), blocks[v].end());
      }
      return CoxWord(raw);
    }
  };

  inline JkFactorization jk_factorize(CoxWord const& w, int j, int k) {
    if (j == k) {
      throw std::invalid_argument("jk-factorization needs j != k");
    }
    JkFactorization  f{j, k, {}, {}};
    std::vector<int> block;
    for (int x : w) {
      if (x == j || x == k) {
        block.push_back(x);
      } else {
        f.blocks.emplace_back(block);
        f.separators.push_back(x);
        block.clear();
      }
    }
    f.blocks.emplace_back(block);
    return f;
  }

  inline bool is_long(CoxWord const& block) noexcept {
    return block.size() >= 4;
  }

  inline bool has_long_block(CoxWord const& w, int j, int k) {
    // Scan without materializing the factorization.
    std::size_t run = 0;
    for (int x : w) {
      if (x == j || x == k) {
        if (++run >= 4) {
          return true;
        }
      } else {
        run = 0;
      }
    }
    return false;
  }

  // The first and last blocks have a single neighbour and are never critical.
  inline bool is_critical(JkFactorization const& f, std::size_t v) {
    if (v >= f.blocks.size()) {
      throw std::out_of_range("block index " + std::to_string(v)
                              + " outside 0.." + std::to_string(f.length()));
    }
    if (v == 0 || v == f.length()) {
      return false;
    }
    int const left  = f.separators[v - 1];
    int const right = f.separators[v];
    if (f.blocks[v].size() % 2 == 1) {
      return left == right;
    }
    if (left == right) {
      return false;
    }
    return crossing(BandPair::sorted(left, right), BandPair::sorted(f.j, f.k));
  }

  // (w) a_t^m: substitute the closed form for every letter and reduce.
  inline CoxWord act_band_on_cox(CoxWord const& w, BandPair t, long m) {
    CoxWord out;
    for (int x : w) {
      out *= band_power_letter_action(x, t, m);
    }
    return out;
  }

  struct PropReport {
    enum class Status { pass, fail, hypothesis_violation };

    Status                     status = Status::pass;
    std::optional<std::size_t> block;   // offending block, if any
    std::optional<BandPair>    pair;    // offending jk pair (prop 7)
    std::string                detail;

    bool passed() const noexcept {
      return status == Status::pass;
    }
  };

  inline std::string to_string(PropReport::Status s) {
    switch (s) {
      case PropReport::Status::pass:
        return "pass";
      case PropReport::Status::fail:
        return "fail";
      case PropReport::Status::hypothesis_violation:
        return "hypothesis-violation";
    }
    return "?";
  }

  // Under a_jk^m, provided no jk-block has length 2|m|: the separators are
  // preserved, and each critical block w_v turns into a critical block w'_v
  // with |w'_v| + |w_v| >= 2|m|.
  inline PropReport check_prop_trans(CoxWord const& w, BandPair t, long m) {
    auto const        f     = jk_factorize(w, t.i, t.j);
    std::size_t const twice = 2 * static_cast<std::size_t>(m < 0 ? -m : m);
    for (std::size_t v = 0; v < f.blocks.size(); ++v) {
      if (f.blocks[v].size() == twice) {
        return {PropReport::Status::hypothesis_violation, v, t,
                "block " + std::to_string(v) + " = " + to_string(f.blocks[v])
                    + " has length 2|m| = " + std::to_string(twice)};
      }
    }
    CoxWord const image = act_band_on_cox(w, t, m);
    auto const    g     = jk_factorize(image, t.i, t.j);
    if (g.separators != f.separators) {
      return {PropReport::Status::fail, std::nullopt, t,
              "separator sequence changed: " + to_string(w) + " -> "
                  + to_string(image)};
    }
    for (std::size_t v = 0; v < f.blocks.size(); ++v) {
      if (!is_critical(f, v)) {
        continue;
      }
      if (!is_critical(g, v)) {
        return {PropReport::Status::fail, v, t,
                "critical block " + std::to_string(v) + " not critical in image "
                    + to_string(image)};
      }
      if (g.blocks[v].size() + f.blocks[v].size() < twice) {
        return {PropReport::Status::fail, v, t,
                "length bound violated at block " + std::to_string(v) + ": "
                    + std::to_string(g.blocks[v].size()) + " + "
                    + std::to_string(f.blocks[v].size()) + " < "
                    + std::to_string(twice)};
      }
    }
    return {};
  }

  // If w has no long il-subword and |m| >= 3, every long jk-subword of
  // (w) a_il^m has jk = il, or jk commutes with il and w already had a long
  // jk-subword.
  inline PropReport check_prop7(CoxWord const& w, BandPair il, long m) {
    if (m > -3 && m < 3) {
      return {PropReport::Status::hypothesis_violation, std::nullopt, il,
              "|m| must be >= 3"};
    }
    if (has_long_block(w, il.i, il.j)) {
      return {PropReport::Status::hypothesis_violation, std::nullopt, il,
              to_string(w) + " has a long " + to_string(il) + "-subword"};
    }
    CoxWord const image = act_band_on_cox(w, il, m);
    int const     n     = std::max(image.max_letter(), il.j);
    for (int j = 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k) {
        if (!has_long_block(image, j, k)) {
          continue;
        }
        BandPair const jk(j, k);
        if (jk == il) {
          continue;
        }
        if (commutes_in_brn(il, jk) && has_long_block(w, j, k)) {
          continue;
        }
        return {PropReport::Status::fail, std::nullopt, jk,
                "image " + to_string(image) + " has a long " + to_string(jk)
                    + "-subword not accounted for"};
      }
    }
    return {};
  }

}  // namespace bandgroup
