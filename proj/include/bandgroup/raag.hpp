#pragma once

// Expressions in the right-angled Artin group G_M on generators b_t, t in
// T_M, where b_t and b_s commute iff the bands t and s commute in Br_n.
//
// An expression is a sequence of syllables (b_t)^p with p != 0.  Operation I
// merges two adjacent syllables with equal base, operation II swaps two
// adjacent commuting syllables.

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "braid.hpp"
#include "core.hpp"
#include "coxcomb.hpp"
#include "hurwitz.hpp"

namespace bandgroup {

  struct Syllable {
    BandPair base;
    int      exp = 1;

    friend bool operator==(Syllable const&, Syllable const&) = default;
    friend auto operator<=>(Syllable const&, Syllable const&) = default;
  };

  using RaagExpression = std::vector<Syllable>;

  inline std::string to_string(RaagExpression const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& x : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += "b" + to_string(x.base);
      if (x.exp != 1) {
        s += "^" + std::to_string(x.exp);
      }
    }
    return s;
  }

  inline void check_expression(RaagExpression const& w, CoxeterDatum const& m) {
    for (auto const& x : w) {
      if (x.exp == 0) {
        throw std::invalid_argument("expression has a zero exponent");
      }
      if (!x.base.valid_for(m.n()) || m(x.base) == 0) {
        throw std::invalid_argument("b" + to_string(x.base)
                                    + " is not a generator of G_M");
      }
    }
  }

  // Merges syllables pos and pos+1 (0-based), which must share a base.
  inline RaagExpression apply_type1(RaagExpression w, std::size_t pos) {
    if (pos + 1 >= w.size()) {
      throw std::out_of_range("type I position out of range");
    }
    if (w[pos].base != w[pos + 1].base) {
      throw std::invalid_argument("type I needs equal bases, got b"
                                  + to_string(w[pos].base) + " and b"
                                  + to_string(w[pos + 1].base));
    }
    int const e = w[pos].exp + w[pos + 1].exp;
    auto      it = w.begin() + static_cast<std::ptrdiff_t>(pos);
    if (e == 0) {
      w.erase(it, it + 2);
    } else {
      it->exp = e;
      w.erase(it + 1);
    }
    return w;
  }

  // Swaps syllables pos and pos+1 (0-based), whose bases must commute.
  inline RaagExpression apply_type2(RaagExpression w, std::size_t pos) {
    if (pos + 1 >= w.size()) {
      throw std::out_of_range("type II position out of range");
    }
    if (!commutes_in_brn(w[pos].base, w[pos + 1].base)) {
      throw std::invalid_argument("type II needs commuting bases, b"
                                  + to_string(w[pos].base) + " and b"
                                  + to_string(w[pos + 1].base) + " do not");
    }
    std::swap(w[pos], w[pos + 1]);
    return w;
  }

  namespace detail {
    // Appends x, merging it into the last syllable of its base when every
    // later syllable commutes with it.  Keeps `out` M-reduced.
    inline void pile(RaagExpression& out, Syllable x) {
      for (std::size_t q = out.size(); q-- > 0;) {
        if (out[q].base == x.base) {
          out[q].exp += x.exp;
          if (out[q].exp == 0) {
            out.erase(out.begin() + static_cast<std::ptrdiff_t>(q));
          }
          return;
        }
        if (!commutes_in_brn(out[q].base, x.base)) {
          break;
        }
      }
      out.push_back(x);
    }
  }  // namespace detail

  // M-reduced canonical representative: greedy piling removes every
  // cancellable pair, then the commutation class is written in its
  // lexicographically least order (smallest available base first).
  inline RaagExpression normalize(RaagExpression const& w) {
    RaagExpression reduced;
    for (auto const& x : w) {
      if (x.exp == 0) {
        throw std::invalid_argument("expression has a zero exponent");
      }
      detail::pile(reduced, x);
    }
    RaagExpression   out;
    std::vector<bool> used(reduced.size(), false);
    out.reserve(reduced.size());
    for (std::size_t step = 0; step < reduced.size(); ++step) {
      std::optional<std::size_t> best;
      for (std::size_t q = 0; q < reduced.size(); ++q) {
        if (used[q]) {
          continue;
        }
        // q is available if it commutes with every unused syllable before it.
        bool available = true;
        for (std::size_t r = 0; r < q && available; ++r) {
          if (!used[r] && !commutes_in_brn(reduced[r].base, reduced[q].base)) {
            available = false;
          }
        }
        if (available && (!best || reduced[q].base < reduced[*best].base)) {
          best = q;
        }
      }
      used[*best] = true;
      out.push_back(reduced[*best]);
    }
    return out;
  }

  // No operation sequence can shorten w.
  inline bool is_m_reduced(RaagExpression const& w) {
    for (std::size_t p = 0; p < w.size(); ++p) {
      for (std::size_t q = p + 1; q < w.size(); ++q) {
        if (w[q].base == w[p].base) {
          return false;
        }
        if (!commutes_in_brn(w[q].base, w[p].base)) {
          break;
        }
      }
    }
    return true;
  }

  struct EndsInResult {
    bool                          ends = false;
    bool                          normalized_input = false;  // input was not M-reduced
    std::optional<RaagExpression> witness;  // type-II rearrangement ending in t
  };

  // Whether some type-II rearrangement of w (normalized first if necessary)
  // has last base t; the rearrangement is returned as witness.
  inline EndsInResult ends_in_report(RaagExpression const& w, BandPair t) {
    EndsInResult   r;
    RaagExpression x = w;
    if (!is_m_reduced(w)) {
      x                  = normalize(w);
      r.normalized_input = true;
    }
    for (std::size_t q = x.size(); q-- > 0;) {
      if (x[q].base == t) {
        bool ok = true;
        for (std::size_t p = q + 1; p < x.size() && ok; ++p) {
          ok = commutes_in_brn(x[p].base, t);
        }
        if (ok) {
          r.ends = true;
          RaagExpression y = x;
          std::rotate(y.begin() + static_cast<std::ptrdiff_t>(q),
                      y.begin() + static_cast<std::ptrdiff_t>(q) + 1, y.end());
          r.witness = std::move(y);
        }
        break;
      }
    }
    return r;
  }

  inline bool ends_in(RaagExpression const& w, BandPair t) {
    return ends_in_report(w, t).ends;
  }

  // All bases w ends in.
  inline std::vector<BandPair> terminal_bases(RaagExpression const& w) {
    std::vector<BandPair> out;
    for (std::size_t q = w.size(); q-- > 0;) {
      bool ok = true;
      for (std::size_t p = q + 1; p < w.size() && ok; ++p) {
        ok = commutes_in_brn(w[p].base, w[q].base);
      }
      if (ok && std::find(out.begin(), out.end(), w[q].base) == out.end()) {
        out.push_back(w[q].base);
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  inline ArtinWord expression_to_braid(RaagExpression const& w,
                                       CoxeterDatum const&   m) {
    ArtinWord out(m.n());
    for (auto const& x : w) {
      int const mt = m(x.base);
      if (mt == 0) {
        throw std::invalid_argument("b" + to_string(x.base)
                                    + " has zero Coxeter exponent");
      }
      out *= band_power(x.base, static_cast<long>(x.exp) * mt, m.n());
    }
    return out;
  }

  // (x) beta for beta the braid of w, computed syllable by syllable with the
  // closed-form band action.
  inline CoxWord act_expression_on_cox(CoxWord x, RaagExpression const& w,
                                       CoxeterDatum const& m) {
    for (auto const& s : w) {
      x = act_band_on_cox(x, s.base, static_cast<long>(s.exp) * m(s.base));
    }
    return x;
  }

  // Every canonical M-reduced expression with 1 <= length <= max_len and
  // 1 <= |p| <= max_exp, in lexicographic order by length then content.
  inline std::vector<RaagExpression> enumerate_reduced(CoxeterDatum const& m,
                                                       int max_len,
                                                       int max_exp) {
    auto const                  gens = m.support();
    std::vector<Syllable>       alphabet;
    for (auto const& g : gens) {
      for (int p = -max_exp; p <= max_exp; ++p) {
        if (p != 0) {
          alphabet.push_back({g, p});
        }
      }
    }
    std::vector<RaagExpression> out;
    std::vector<RaagExpression> frontier{RaagExpression{}};
    for (int len = 1; len <= max_len; ++len) {
      std::vector<RaagExpression> next;
      for (auto const& w : frontier) {
        for (auto const& x : alphabet) {
          RaagExpression y = w;
          y.push_back(x);
          // Prefixes of canonical forms are canonical, so extending the
          // previous level suffices.
          if (is_m_reduced(y) && normalize(y) == y) {
            next.push_back(y);
          }
        }
      }
      out.insert(out.end(), next.begin(), next.end());
      frontier = std::move(next);
    }
    return out;
  }

  struct InjectivityReport {
    std::size_t                 scanned            = 0;
    std::size_t                 trivial_images     = 0;
    std::size_t                 certificate_failed = 0;
    std::size_t                 certificate_checks = 0;
    std::vector<RaagExpression> violations;

    bool passed() const noexcept {
      return trivial_images == 0 && certificate_failed == 0;
    }
  };

  // For every canonical M-reduced expression up to the bounds: its braid is
  // non-trivial, and for every base jk it ends in, (s_j) beta != s_j.
  inline InjectivityReport injectivity_scan(CoxeterDatum const& m, int max_len,
                                            int max_exp) {
    if (!m.is_large_type()) {
      throw ScopeError("injectivity scan needs a matrix of large type");
    }
    if (max_len < 1 || max_exp < 1) {
      throw std::invalid_argument("scan bounds must be >= 1");
    }
    InjectivityReport rep;
    for (auto const& w : enumerate_reduced(m, max_len, max_exp)) {
      ++rep.scanned;
      bool bad = false;
      if (is_trivial_braid(expression_to_braid(w, m))) {
        ++rep.trivial_images;
        bad = true;
      }
      for (auto const& t : terminal_bases(w)) {
        ++rep.certificate_checks;
        if (act_expression_on_cox(CoxWord::letter(t.i), w, m) == CoxWord::letter(t.i)) {
          ++rep.certificate_failed;
          bad = true;
        }
      }
      if (bad) {
        rep.violations.push_back(w);
      }
    }
    return rep;
  }

}  // namespace bandgroup
