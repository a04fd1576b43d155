#pragma once

// Relation families for the subgroups E_M, their expansion into Artin words
// and the soundness check against the braid equality oracle.

#include <algorithm>
#include <array>
#include <map>
#include <string>
#include <vector>

#include "braid.hpp"
#include "core.hpp"

namespace bandgroup {

  // b-letters stand for b_t = a_t^{m_t}; a-letters are raw band generators.
  enum class LetterKind { b, a };

  struct RelLetter {
    LetterKind kind = LetterKind::b;
    BandPair   base;
    int        exp = 1;

    friend bool operator==(RelLetter const&, RelLetter const&) = default;
  };

  using RelWord = std::vector<RelLetter>;

  struct Relation {
    RelWord          lhs;
    RelWord          rhs;
    std::string      label;
    std::vector<int> indices;
  };

  namespace rel {
    inline RelLetter b(int x, int y, int e = 1) {
      return {LetterKind::b, BandPair::sorted(x, y), e};
    }
    inline RelLetter a(int x, int y, int e = 1) {
      return {LetterKind::a, BandPair::sorted(x, y), e};
    }

    inline RelWord inverse(RelWord const& w) {
      RelWord out(w.rbegin(), w.rend());
      for (auto& l : out) {
        l.exp = -l.exp;
      }
      return out;
    }

    inline RelWord pow(RelWord const& w, int e) {
      RelWord const base = e < 0 ? inverse(w) : w;
      RelWord       out;
      for (int k = 0; k < std::abs(e); ++k) {
        out.insert(out.end(), base.begin(), base.end());
      }
      return out;
    }

    inline RelWord cat(std::initializer_list<RelWord> parts) {
      RelWord out;
      for (auto const& p : parts) {
        out.insert(out.end(), p.begin(), p.end());
      }
      return out;
    }

    // Pushes x = y = z = ... as consecutive equalities.
    inline void chain(std::vector<Relation>&     out,
                      std::vector<RelWord> const& words,
                      std::string const&          label,
                      std::vector<int> const&     indices) {
      for (std::size_t q = 0; q + 1 < words.size(); ++q) {
        out.push_back({words[q], words[q + 1], label, indices});
      }
    }
  }  // namespace rel

  inline std::string to_string(RelLetter const& l) {
    std::string s = (l.kind == LetterKind::b ? "b" : "a") + to_string(l.base);
    if (l.exp != 1) {
      s += "^" + std::to_string(l.exp);
    }
    return s;
  }

  inline std::string to_string(RelWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& l : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += to_string(l);
    }
    return s;
  }

  inline ArtinWord expand(RelWord const& w, CoxeterDatum const& m) {
    ArtinWord out(m.n());
    for (auto const& l : w) {
      long e = l.exp;
      if (l.kind == LetterKind::b) {
        int const mt = m(l.base);
        if (mt == 0) {
          throw std::invalid_argument("letter b" + to_string(l.base)
                                      + " has zero Coxeter exponent");
        }
        e *= mt;
      }
      out *= band_power(l.base, e, m.n());
    }
    return out;
  }

  namespace detail {
    // The three cyclic rotations (i,j,k), (j,k,i), (k,i,j) of x < y < z.
    inline std::array<std::array<int, 3>, 3> rotations(int x, int y, int z) {
      return {{{x, y, z}, {y, z, x}, {z, x, y}}};
    }
  }  // namespace detail

  // The defining relations of the band presentation of Br_n, in raw band
  // letters: commutation of non-interleaved disjoint bands and
  // a_ij a_ik = a_jk a_ij = a_ik a_jk for i < j < k.
  inline std::vector<Relation> relations_bkl(int n) {
    using namespace rel;
    std::vector<Relation> out;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = 1; k <= n; ++k) {
          for (int l = k + 1; l <= n; ++l) {
            if (BandPair(i, j) < BandPair(k, l)
                && commutes_in_brn(BandPair(i, j), BandPair(k, l))) {
              out.push_back({{a(i, j), a(k, l)}, {a(k, l), a(i, j)}, "bkl.commute", {i, j, k, l}});
            }
          }
        }
        for (int k = j + 1; k <= n; ++k) {
          chain(out,
                {{a(i, j), a(i, k)}, {a(j, k), a(i, j)}, {a(i, k), a(j, k)}},
                "bkl.triple",
                {i, j, k});
        }
      }
    }
    return out;
  }

  // Commutations b_t b_s = b_s b_t for commuting pairs in T_M.
  inline std::vector<Relation> relations_thm1(CoxeterDatum const& m) {
    if (!m.is_large_type()) {
      throw ScopeError("matrix is not of large type (entries must be 0 or >= 3)");
    }
    using namespace rel;
    std::vector<Relation> out;
    auto const            gens = m.support();
    for (std::size_t p = 0; p < gens.size(); ++p) {
      for (std::size_t q = p + 1; q < gens.size(); ++q) {
        auto const t = gens[p];
        auto const s = gens[q];
        if (commutes_in_brn(t, s)) {
          out.push_back({{b(t.i, t.j), b(s.i, s.j)},
                         {b(s.i, s.j), b(t.i, t.j)},
                         "thm1",
                         {t.i, t.j, s.i, s.j}});
        }
      }
    }
    return out;
  }

  inline std::vector<Relation> relations_thm2(Partition const& part) {
    using namespace rel;
    CoxeterDatum const    m = partition_to_matrix(part);
    int const             n = part.n();
    std::vector<Relation> out;
    // i) nested and disjoint commutations.
    for (int i = 1; i <= n; ++i) {
      for (int j = 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          for (int l = i + 1; l <= n; ++l) {
            bool const nested   = i < j && k < l;
            bool const disjoint = k < i;
            if (nested || disjoint) {
              out.push_back({{b(i, l), b(j, k)},
                             {b(j, k), b(i, l)},
                             "thm2.i",
                             {i, j, k, l}});
            }
          }
        }
      }
    }
    // ii) b_jl a_kl^2 b_ik a_kl^-2 = a_kl^2 b_ik a_kl^-2 b_jl.
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          for (int l = k + 1; l <= n; ++l) {
            int const sq = m(k, l) == 2 ? 1 : 2;
            RelWord const conj{b(k, l, sq), b(i, k), b(k, l, -sq)};
            out.push_back({cat({{b(j, l)}, conj}),
                           cat({conj, {b(j, l)}}),
                           "thm2.ii",
                           {i, j, k, l}});
          }
        }
      }
    }
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        for (int z = y + 1; z <= n; ++z) {
          // iii) cyclic order, m_ij = 1, m_ik = m_jk = 2.
          for (auto [i, j, k] : detail::rotations(x, y, z)) {
            if (m(i, j) == 1 && m(i, k) == 2 && m(j, k) == 2) {
              std::vector<int> const idx{i, j, k};
              out.push_back({{b(i, j), b(i, k)}, {b(j, k), b(i, j)}, "thm2.iii", idx});
              out.push_back({{b(i, j), b(i, k), b(j, k)},
                             {b(i, k), b(j, k), b(i, j)},
                             "thm2.iii",
                             idx});
            }
          }
          int const i = x, j = y, k = z;
          if (m(i, j) == 2 && m(i, k) == 2 && m(j, k) == 2) {
            chain(out,
                  {{b(i, j), b(i, k), b(j, k)},
                   {b(j, k), b(i, j), b(i, k)},
                   {b(i, k), b(j, k), b(i, j)}},
                  "thm2.iv",
                  {i, j, k});
          }
          if (m(i, j) == 1 && m(i, k) == 1 && m(j, k) == 1) {
            chain(out,
                  {{b(i, j), b(i, k)}, {b(j, k), b(i, j)}, {b(i, k), b(j, k)}},
                  "thm2.v",
                  {i, j, k});
          }
        }
      }
    }
    return out;
  }


  // Relations of E_{P'n} over the generators a_i^2 = a_{in}^2 and b_jk
  // (j, k < n), followed by the conjugation identities obtained by combing.
  // `prime` is a partition of {1..n-1}; n = prime.n() + 1 is a singleton.
  inline std::vector<Relation> relations_combing(Partition const& prime) {
    using namespace rel;
    int const             n = prime.n() + 1;
    CoxeterDatum const    m = partition_to_matrix(prime.extend_singleton());
    std::vector<Relation> out;
    auto sq = [n](int i, int e = 1) { return a(i, n, 2 * e); };

    // i) a_i^2 b_jk = b_jk a_i^2 for i<j<k<n or j<k<i<n.
    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if ((i < j) || (k < i)) {
            out.push_back({{sq(i), b(j, k)}, {b(j, k), sq(i)}, "combing.i", {i, j, k}});
          }
        }
      }
    }
    // ii) a_j^2 a_k^2 b_ik a_k^-2 = a_k^2 b_ik a_k^-2 a_j^2 for i<j<k<n.
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          RelWord const conj{sq(k), b(i, k), sq(k, -1)};
          out.push_back({cat({{sq(j)}, conj}), cat({conj, {sq(j)}}), "combing.ii", {i, j, k}});
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> const idx{i, j};
        if (m(i, j) == 1) {
          // iii)
          out.push_back({{b(i, j), sq(i)}, {sq(j), b(i, j)}, "combing.iii", idx});
          out.push_back({{b(i, j), sq(i), sq(j)}, {sq(i), sq(j), b(i, j)}, "combing.iii", idx});
        } else {
          // iv)
          chain(out,
                {{sq(j), b(i, j), sq(i)}, {b(i, j), sq(i), sq(j)}, {sq(i), sq(j), b(i, j)}},
                "combing.iv",
                idx);
        }
      }
    }

    // Derived conjugation identities (1)-(8).
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> const idx{i, j};
        RelWord const          bij{b(i, j)};
        RelWord const          conj_l = bij;
        RelWord const          conj_r = inverse(bij);
        if (m(i, j) == 1) {
          out.push_back({cat({conj_l, {sq(i)}, conj_r}), {sq(j)}, "combing.derived.3", idx});
          out.push_back({cat({conj_l, {sq(j)}, conj_r}),
                         {sq(j, -1), sq(i), sq(j)},
                         "combing.derived.4",
                         idx});
        } else {
          out.push_back({cat({conj_l, {sq(i)}, conj_r}),
                         {sq(j, -1), sq(i), sq(j)},
                         "combing.derived.5",
                         idx});
          out.push_back({cat({conj_l, {sq(j)}, conj_r}),
                         {sq(j, -1), sq(i, -1), sq(j), sq(i), sq(j)},
                         "combing.derived.6",
                         idx});
        }
        for (int k = j + 1; k < n; ++k) {
          std::vector<int> const ijk{i, j, k};
          out.push_back({{b(j, k), sq(i), b(j, k, -1)}, {sq(i)}, "combing.derived.1", ijk});
          out.push_back({{b(i, j), sq(k), b(i, j, -1)}, {sq(k)}, "combing.derived.2", ijk});
          if (m(i, k) == 1) {
            out.push_back({{b(i, k), sq(j), b(i, k, -1)},
                           {sq(k, -1), sq(i), sq(j), sq(i, -1), sq(k)},
                           "combing.derived.7",
                           ijk});
          } else {
            out.push_back({{b(i, k, -1), sq(j), b(i, k)},
                           {sq(i), sq(k), sq(i, -1), sq(k, -1), sq(j), sq(k), sq(i),
                            sq(k, -1), sq(i, -1)},
                           "combing.derived.8",
                           ijk});
          }
        }
      }
    }
    return out;
  }

  // The identities used to transport the combing relations into G_M, with
  // b_i = b_{in} and b_i^2 substituted for a_{in}^2 when i ~ n.
  inline std::vector<Relation> relations_thm2_proof(Partition const& part) {
    using namespace rel;
    int const             n = part.n();
    CoxeterDatum const    m = partition_to_matrix(part);
    std::vector<Relation> out;
    auto bi = [n](int i, int e = 1) { return b(i, n, e); };
    // a_i^2 as a word in G_M.
    auto sq = [&](int i, int e = 1) { return bi(i, m(i, n) == 2 ? e : 2 * e); };

    for (int i = 1; i < n; ++i) {
      for (int j = 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          if (i < j || k < i) {
            out.push_back({{bi(i), b(j, k)}, {b(j, k), bi(i)}, "thm2.proof.1", {i, j, k}});
          }
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        for (int k = j + 1; k < n; ++k) {
          RelWord const conj{sq(k), b(i, k), sq(k, -1)};
          out.push_back({cat({{bi(j)}, conj}),
                         cat({conj, {bi(j)}}),
                         m(k, n) == 2 ? "thm2.proof.2a" : "thm2.proof.2b",
                         {i, j, k}});
        }
      }
    }
    for (int i = 1; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        std::vector<int> const idx{i, j};
        bool const             in_i = part.related(i, n);
        bool const             in_j = part.related(j, n);
        if (m(i, j) == 1) {
          if (!in_i) {
            // Same shape as combing iii: b_ij b_i = b_j b_ij.
            out.push_back({{b(i, j), bi(i)}, {bi(j), b(i, j)}, "thm2.proof.3a", idx});
            out.push_back({{b(i, j), bi(i), bi(j)}, {bi(i), bi(j), b(i, j)}, "thm2.proof.3a", idx});
          } else {
            chain(out, {{b(i, j), bi(i)}, {bi(i), bi(j)}, {bi(j), b(i, j)}}, "thm2.proof.3b", idx);
            out.push_back({{b(i, j), bi(i, 2)}, {bi(j, 2), b(i, j)}, "thm2.proof.3b", idx});
            out.push_back({{b(i, j), bi(i, 2), bi(j, 2)},
                           {bi(i, 2), bi(j, 2), b(i, j)},
                           "thm2.proof.3b",
                           idx});
          }
        } else if (!in_i && !in_j) {
          out.push_back({{bi(i), bi(j), b(i, j)}, {bi(j), b(i, j), bi(i)}, "thm2.proof.4a", idx});
          out.push_back({{bi(i), bi(j), b(i, j)}, {b(i, j), bi(i), bi(j)}, "thm2.proof.4a", idx});
        } else if (in_i) {
          out.push_back({{bi(i), bi(j), b(i, j)}, {bi(j), b(i, j), bi(i)}, "thm2.proof.4b", idx});
          out.push_back({{bi(i), bi(j)}, {b(i, j), bi(i)}, "thm2.proof.4b", idx});
          out.push_back({{bi(i, 2), bi(j), b(i, j)}, {bi(j), b(i, j), bi(i, 2)}, "thm2.proof.4b", idx});
          out.push_back({{bi(i, 2), bi(j), b(i, j)}, {b(i, j), bi(i, 2), bi(j)}, "thm2.proof.4b", idx});
        } else {
          out.push_back({{bi(j), b(i, j), bi(i)}, {b(i, j), bi(i), bi(j)}, "thm2.proof.4c", idx});
          out.push_back({{bi(j), b(i, j)}, {bi(i), bi(j)}, "thm2.proof.4c", idx});
          out.push_back({{bi(j, 2), b(i, j), bi(i)}, {b(i, j), bi(i), bi(j, 2)}, "thm2.proof.4c", idx});
          out.push_back({{bi(j, 2), b(i, j), bi(i)}, {bi(i), bi(j, 2), b(i, j)}, "thm2.proof.4c", idx});
        }
      }
    }
    return out;
  }

  // Relations for data with every entry >= 2.
  inline std::vector<Relation> relations_sec4(CoxeterDatum const& m) {
    using namespace rel;
    int const n = m.n();
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        if (m(i, j) < 2) {
          throw ScopeError("every entry must be >= 2, got m" + std::to_string(i)
                           + "," + std::to_string(j) + " = "
                           + std::to_string(m(i, j)));
        }
      }
    }
    std::vector<Relation> out;
    for (int i = 1; i <= n; ++i) {
      for (int j = i + 1; j <= n; ++j) {
        for (int k = j + 1; k <= n; ++k) {
          for (int l = k + 1; l <= n; ++l) {
            std::vector<int> const idx{i, j, k, l};
            out.push_back({{b(i, j), b(k, l)}, {b(k, l), b(i, j)}, "sec4.1", idx});
            out.push_back({{b(i, l), b(j, k)}, {b(j, k), b(i, l)}, "sec4.1", idx});
            if (m(j, k) == 2) {
              RelWord const conj{b(j, k), b(j, l), b(j, k, -1)};
              out.push_back({cat({{b(i, k)}, conj}), cat({conj, {b(i, k)}}), "sec4.2", idx});
            }
          }
        }
      }
    }
    for (int x = 1; x <= n; ++x) {
      for (int y = x + 1; y <= n; ++y) {
        for (int z = y + 1; z <= n; ++z) {
          for (auto [i, j, k] : detail::rotations(x, y, z)) {
            std::vector<int> const idx{i, j, k};
            int const              mij = m(i, j), mik = m(i, k), mjk = m(j, k);
            RelWord const          bij{b(i, j)}, bik{b(i, k)}, bjk{b(j, k)};
            RelWord const          pair = cat({bij, bik});
            if (mij == 2 && mik == 2 && mjk % 2 == 0) {
              int const nu = mjk / 2;
              chain(out,
                    {cat({pow(pair, nu - 1), bjk, bij, bik}),
                     cat({bik, pow(pair, nu - 1), bjk, bij}),
                     cat({pow(pair, nu), bjk})},
                    "sec4.3a",
                    idx);
            }
            if (mij == 2 && mik == 2 && mjk % 2 == 1) {
              // Middle word: (b_ij b_ik)^nu b_jk b_ij.  With exponent nu-1
              // (two letters shorter) the identity is false in Br_3.
              int const nu = mjk / 2;
              chain(out,
                    {cat({bik, pow(pair, nu - 1), bjk, bij, bik}),
                     cat({pow(pair, nu), bjk, bij}),
                     cat({bik, pow(pair, nu), bjk})},
                    "sec4.3b",
                    idx);
            }
            if (mij == 2 && mik == 3 && mjk == 3) {
              chain(out,
                    {cat({bij, bjk, bij, bik, bjk}),
                     cat({bjk, bij, bik, bjk, bij}),
                     cat({bij, bik, bjk, bij, bik})},
                    "sec4.3c",
                    idx);
            }
            if (mij == 2 && mik == 3 && mjk == 4) {
              chain(out,
                    {pow(cat({bij, bik, bjk}), 2),
                     cat({bik, bjk, bij, bik, bjk, bij}),
                     cat({bjk, bij, bik, bjk, bij, bik})},
                    "sec4.3d",
                    idx);
            }
            if (mij == 2 && mik == 3 && mjk == 5) {
              chain(out,
                    {pow(cat({bij, bik, bjk}), 3),
                     pow(cat({bik, bjk, bij}), 3),
                     pow(cat({bjk, bij, bik}), 3)},
                    "sec4.3e",
                    idx);
            }
          }
        }
      }
    }
    return out;
  }

}  // namespace bandgroup
