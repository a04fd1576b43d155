#pragma once

// Slow reference implementations used to cross-check the library.

#include <algorithm>
#include <map>
#include <queue>
#include <set>
#include <vector>

#include "bandgroup/bandgroup.hpp"

namespace oracle {

  using namespace bandgroup;

  // Repeatedly deletes the leftmost adjacent pair of equal letters.
  inline std::vector<int> naive_cox_reduce(std::vector<int> w) {
    for (bool changed = true; changed;) {
      changed = false;
      for (std::size_t q = 0; q + 1 < w.size(); ++q) {
        if (w[q] == w[q + 1]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(q),
                  w.begin() + static_cast<std::ptrdiff_t>(q) + 2);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  // (s_i)sig_j^{±1} expanded letter by letter from the definition of the
  // Hurwitz move, then reduced naively.
  inline std::vector<int> naive_cox_act(std::vector<int> x, ArtinWord const& w) {
    for (auto const& l : w) {
      std::vector<int> y;
      int const        j = l.index;
      for (int s : x) {
        if (l.sign > 0 && s == j) {
          y.insert(y.end(), {j, j + 1, j});
        } else if (l.sign > 0 && s == j + 1) {
          y.push_back(j);
        } else if (l.sign < 0 && s == j) {
          y.push_back(j + 1);
        } else if (l.sign < 0 && s == j + 1) {
          y.insert(y.end(), {j + 1, j, j + 1});
        } else {
          y.push_back(s);
        }
      }
      x = naive_cox_reduce(std::move(y));
    }
    return x;
  }

  // ---------------------------------------------------------------------------
  // Unreduced Burau representation over Z[t, t^-1].  Equal braids have equal
  // matrices; for n <= 3 the converse holds as well.

  using Laurent = std::map<int, long long>;

  inline Laurent trim(Laurent p) {
    for (auto it = p.begin(); it != p.end();) {
      it = it->second == 0 ? p.erase(it) : std::next(it);
    }
    return p;
  }

  using Matrix = std::vector<std::vector<Laurent>>;

  inline Matrix identity(int n) {
    Matrix m(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i) {
      m[i][i][0] = 1;
    }
    return m;
  }

  inline Matrix mul(Matrix const& a, Matrix const& b) {
    int const n = static_cast<int>(a.size());
    Matrix    c(n, std::vector<Laurent>(n));
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < n; ++k) {
        if (a[i][k].empty()) {
          continue;
        }
        for (int j = 0; j < n; ++j) {
          for (auto const& [e1, c1] : a[i][k]) {
            for (auto const& [e2, c2] : b[k][j]) {
              c[i][j][e1 + e2] += c1 * c2;
            }
          }
        }
      }
    }
    for (auto& row : c) {
      for (auto& x : row) {
        x = trim(std::move(x));
      }
    }
    return c;
  }

  inline Matrix burau(ArtinWord const& w) {
    int const n = w.n();
    Matrix    out = identity(n);
    for (auto const& l : w) {
      Matrix g = identity(n);
      int const i = l.index - 1;
      g[i][i].clear();
      g[i + 1][i + 1].clear();
      if (l.sign > 0) {
        // [[1-t, t], [1, 0]]
        g[i][i]     = {{0, 1}, {1, -1}};
        g[i][i + 1] = {{1, 1}};
        g[i + 1][i] = {{0, 1}};
      } else {
        // [[0, 1], [t^-1, 1 - t^-1]]
        g[i][i + 1]     = {{0, 1}};
        g[i + 1][i]     = {{-1, 1}};
        g[i + 1][i + 1] = {{0, 1}, {-1, -1}};
      }
      out = mul(out, g);
    }
    return out;
  }

  // ---------------------------------------------------------------------------
  // Exhaustive search over type I / type II moves.

  inline std::vector<RaagExpression> neighbours(RaagExpression const& w) {
    std::vector<RaagExpression> out;
    for (std::size_t q = 0; q + 1 < w.size(); ++q) {
      if (w[q].base == w[q + 1].base) {
        out.push_back(apply_type1(w, q));
      } else if (commutes_in_brn(w[q].base, w[q + 1].base)) {
        out.push_back(apply_type2(w, q));
      }
    }
    return out;
  }

  // Every expression reachable from w.
  inline std::set<RaagExpression> closure(RaagExpression const& w, bool type2_only) {
    std::set<RaagExpression>   seen{w};
    std::queue<RaagExpression> todo;
    todo.push(w);
    while (!todo.empty()) {
      auto x = todo.front();
      todo.pop();
      for (auto& y : neighbours(x)) {
        if (type2_only && y.size() != x.size()) {
          continue;
        }
        if (seen.insert(y).second) {
          todo.push(std::move(y));
        }
      }
    }
    return seen;
  }

  inline std::size_t min_length(RaagExpression const& w) {
    std::size_t best = w.size();
    for (auto const& x : closure(w, false)) {
      best = std::min(best, x.size());
    }
    return best;
  }

  // Some shortest reachable form has last base t.
  inline bool ends_in(RaagExpression const& w, BandPair t) {
    auto const  all  = closure(w, false);
    std::size_t best = w.size();
    for (auto const& x : all) {
      best = std::min(best, x.size());
    }
    for (auto const& x : all) {
      if (x.size() == best && !x.empty() && x.back().base == t) {
        return true;
      }
    }
    return false;
  }

  // All expressions with 1 <= length <= max_len and 1 <= |p| <= max_exp.
  inline std::vector<RaagExpression> all_expressions(std::vector<BandPair> const& gens,
                                                     int max_len, int max_exp) {
    std::vector<Syllable> alphabet;
    for (auto const& g : gens) {
      for (int p = -max_exp; p <= max_exp; ++p) {
        if (p != 0) {
          alphabet.push_back({g, p});
        }
      }
    }
    std::vector<RaagExpression> out;
    std::vector<RaagExpression> level{RaagExpression{}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<RaagExpression> next;
      for (auto const& w : level) {
        for (auto const& x : alphabet) {
          auto y = w;
          y.push_back(x);
          next.push_back(std::move(y));
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      level = std::move(next);
    }
    return out;
  }

}  // namespace oracle
