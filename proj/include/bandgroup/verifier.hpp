#pragma once

// Soundness checks: relation lists against the braid equality oracle, the
// coset closure table of H_M in G_M, cross-block commutation, and text
// export of presentations.

#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "braid.hpp"
#include "core.hpp"
#include "relations.hpp"

namespace bandgroup {

  struct RelationFailure {
    Relation  relation;
    ArtinWord lhs;
    ArtinWord rhs;
  };

  struct FamilyCount {
    std::size_t instances = 0;
    std::size_t passed    = 0;
  };

  struct VerifyReport {
    std::map<std::string, FamilyCount> families;
    std::vector<RelationFailure>       failures;

    std::size_t instances() const {
      std::size_t total = 0;
      for (auto const& [_, c] : families) {
        total += c.instances;
      }
      return total;
    }
    bool passed() const noexcept {
      return failures.empty();
    }

    void merge(VerifyReport const& other) {
      for (auto const& [label, c] : other.families) {
        families[label].instances += c.instances;
        families[label].passed += c.passed;
      }
      failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    }
  };

  inline VerifyReport verify_relations(std::vector<Relation> const& rels,
                                       CoxeterDatum const&          m) {
    VerifyReport rep;
    for (auto const& r : rels) {
      auto& c = rep.families[r.label];
      ++c.instances;
      ArtinWord lhs = expand(r.lhs, m);
      ArtinWord rhs = expand(r.rhs, m);
      if (braid_equal(lhs, rhs)) {
        ++c.passed;
      } else {
        rep.failures.push_back({r, std::move(lhs), std::move(rhs)});
      }
    }
    return rep;
  }

  // ---------------------------------------------------------------------------
  // Cosets of H_M in G_M for partition-type M.
  //
  // With b_i := b_{in} and I the class of n, H_M is generated by b_ij
  // (i < j < n), b_i (i not in I) and b_i^2 (i in I).  The representatives are
  // b_t, t in I, with b_n = 1.
  // ---------------------------------------------------------------------------

  struct CosetStep {
    int         target = 0;  // t' with g b_t = b_{t'} tail
    RelWord     tail;        // word in the generators of H_M
    std::string case_id;     // which branch of the case analysis applied
    int         stated_target = 0;  // t' as named by that branch
  };

  inline bool in_coset_class(Partition const& p, int i) {
    return p.related(i, p.n());
  }

  // Whether every letter of w is a generator of H_M (or a power thereof).
  inline bool in_h_generators(RelWord const& w, Partition const& p) {
    int const n = p.n();
    for (auto const& l : w) {
      if (l.kind != LetterKind::b) {
        return false;
      }
      if (l.base.j < n) {
        continue;
      }
      if (in_coset_class(p, l.base.i) && l.exp % 2 != 0) {
        return false;
      }
    }
    return true;
  }

  // Rewrites g * b_t as b_{t'} * tail.
  inline CosetStep coset_rewrite(BandPair g, int t, Partition const& p) {
    using namespace rel;
    int const n = p.n();
    if (!g.valid_for(n)) {
      throw std::invalid_argument("generator b" + to_string(g) + " invalid for n = "
                                  + std::to_string(n));
    }
    if (t < 1 || t > n || !in_coset_class(p, t)) {
      throw std::invalid_argument("coset index " + std::to_string(t)
                                  + " is not in the class of " + std::to_string(n));
    }
    auto inI = [&](int x) { return in_coset_class(p, x); };
    auto bi  = [n](int x, int e = 1) { return b(x, n, e); };

    if (t == n) {
      if (g.j == n && inI(g.i)) {
        return {g.i, {}, "trivial.rep", g.i};
      }
      return {n, {b(g.i, g.j)}, "trivial.h", n};
    }

    if (g.j == n) {
      int const i = g.i;
      if (inI(i)) {
        if (i < t) {
          return {t, {b(i, t)}, "1a", t};
        }
        if (i == t) {
          return {n, {bi(t, 2)}, "1b", n};
        }
        return {t, {bi(t, -2), b(t, i), bi(t, 2)}, "1c", t};
      }
      if (i < t) {
        return {t, {b(i, t)}, "2a", t};
      }
      return {t, {bi(i), b(t, i), bi(i, -1)}, "2c", t};
    }

    int const i = g.i;
    int const j = g.j;
    if (t < i || j < t) {
      return {t, {b(i, j)}, "3a", t};
    }
    if (t == i) {
      if (inI(j)) {
        return {j, {b(t, j)}, "3b", j};
      }
      return {t, {bi(j)}, "3d", t};
    }
    if (t == j) {
      if (inI(i)) {
        return {i, {bi(t, 2), b(i, t, -1)}, "3c", i};
      }
      return {t, {b(i, t), bi(i), b(i, t, -1)}, "3e", j};
    }

    // i < t < k with k = j < n.
    int const     k = j;
    RelWord const from_k{bi(k), b(t, k), bi(k, -1)};      // b_k b_t = b_t from_k, k not in I
    RelWord const from_k_in{bi(t, -2), b(t, k), bi(t, 2)};  // b_k b_t = b_t from_k_in, k in I
    if (inI(i) && !inI(k)) {
      return {t,
              cat({{bi(k), b(i, k), bi(k, -1)}, from_k, {b(i, t, 2)}, inverse(from_k),
                   {b(i, t, -2)}}),
              "4a",
              t};
    }
    if (!inI(i) && !inI(k)) {
      if (!p.related(i, k)) {
        return {t,
                cat({{bi(k), b(i, k), bi(k, -1)}, from_k, {b(i, t)}, inverse(from_k),
                     {b(i, t, -1)}}),
                "4b",
                t};
      }
      return {t, cat({{bi(k), b(i, k), bi(k, -1)}, from_k, {b(i, t, -1)}}), "4d", t};
    }
    if (!inI(i) && inI(k)) {
      return {t,
              cat({{bi(k, 2), b(i, k), bi(k, -2)}, pow(from_k_in, 2), {b(i, t)},
                   pow(from_k_in, -2), {b(i, t, -1)}}),
              "4c",
              t};
    }
    return {t, cat({{bi(k, 2), b(i, k), bi(k, -2)}, pow(from_k_in, 2), {b(i, t, -2)}}),
            "4e", t};
  }

  struct CosetRow {
    BandPair  generator;
    int       t = 0;
    CosetStep step;
    bool      braid_ok       = false;  // g b_t = b_t' tail in Br_n
    bool      discriminant_ok = false;  // t' = perm(g b_t)(n)
    bool      tail_in_h      = false;
    bool      stated_agrees  = false;  // the branch names the same t'

    bool passed() const noexcept {
      return braid_ok && discriminant_ok && tail_in_h;
    }
  };

  struct CosetReport {
    std::vector<int>      representatives;  // I
    std::vector<CosetRow> rows;

    bool passed() const {
      for (auto const& r : rows) {
        if (!r.passed()) {
          return false;
        }
      }
      return true;
    }
    std::size_t label_disagreements() const {
      std::size_t c = 0;
      for (auto const& r : rows) {
        c += r.stated_agrees ? 0 : 1;
      }
      return c;
    }
  };

  inline CosetReport coset_table_check(Partition const& p) {
    using namespace rel;
    int const          n = p.n();
    CoxeterDatum const m = partition_to_matrix(p);
    CosetReport        rep;
    rep.representatives = p.part_of(n);
    for (auto const& g : m.support()) {
      for (int t : rep.representatives) {
        CosetRow row{g, t, coset_rewrite(g, t, p)};
        RelWord  lhs{b(g.i, g.j)};
        if (t != n) {
          lhs.push_back(b(t, n));
        }
        RelWord rhs;
        if (row.step.target != n) {
          rhs.push_back(b(row.step.target, n));
        }
        rhs.insert(rhs.end(), row.step.tail.begin(), row.step.tail.end());
        ArtinWord const lw = expand(lhs, m);
        row.braid_ok        = braid_equal(lw, expand(rhs, m));
        row.discriminant_ok = permutation_image(lw)(n) == row.step.target;
        row.tail_in_h       = in_h_generators(row.step.tail, p);
        row.stated_agrees   = row.step.stated_target == row.step.target;
        rep.rows.push_back(std::move(row));
      }
    }
    return rep;
  }

  // ---------------------------------------------------------------------------

  struct BlockReport {
    std::size_t                                pairs = 0;
    std::vector<std::pair<BandPair, BandPair>> failures;

    bool passed() const noexcept {
      return failures.empty();
    }
  };

  // Every generator of the first block commutes in Br_n with every generator
  // of the second.
  inline BlockReport block_product_check(CoxeterDatum const& m1,
                                         CoxeterDatum const& m2) {
    CoxeterDatum const m = CoxeterDatum::block_sum(m1, m2);
    int const          k = m1.n();
    BlockReport        rep;
    for (auto const& t : m.support()) {
      if (t.j > k) {
        continue;
      }
      for (auto const& s : m.support()) {
        if (s.i <= k) {
          continue;
        }
        ++rep.pairs;
        RelWord const bt{rel::b(t.i, t.j)};
        RelWord const bs{rel::b(s.i, s.j)};
        if (!braid_equal(expand(rel::cat({bt, bs}), m), expand(rel::cat({bs, bt}), m))) {
          rep.failures.emplace_back(t, s);
        }
      }
    }
    return rep;
  }

  // ---------------------------------------------------------------------------

  enum class ExportFormat { plain, gap_style };

  namespace detail {
    inline std::string gap_name(RelLetter const& l, bool inverse) {
      std::string s = l.kind == LetterKind::b ? "b" : "a";
      if (inverse) {
        s[0] = static_cast<char>(s[0] - 'a' + 'A');
      }
      return s + std::to_string(l.base.i) + "_" + std::to_string(l.base.j);
    }

    // lhs * rhs^-1 with powers written out, uppercase for inverses.
    inline std::string gap_relator(Relation const& r) {
      std::vector<std::string> tokens;
      auto emit = [&](RelWord const& w) {
        for (auto const& l : w) {
          for (int q = 0; q < std::abs(l.exp); ++q) {
            tokens.push_back(gap_name(l, l.exp < 0));
          }
        }
      };
      emit(r.lhs);
      emit(rel::inverse(r.rhs));
      std::string s;
      for (auto const& tkn : tokens) {
        if (!s.empty()) {
          s += '*';
        }
        s += tkn;
      }
      return s.empty() ? "1" : s;
    }
  }  // namespace detail

  // Generator line followed by one relation per line.
  inline std::string export_presentation(std::vector<Relation> const& rels,
                                         CoxeterDatum const&          m,
                                         ExportFormat                 format) {
    std::ostringstream out;
    auto const         gens = m.support();
    out << "generators:";
    for (auto const& g : gens) {
      out << ' '
          << (format == ExportFormat::plain
                  ? "b" + to_string(g)
                  : detail::gap_name({LetterKind::b, g, 1}, false));
    }
    out << '\n';
    for (auto const& r : rels) {
      if (format == ExportFormat::plain) {
        out << to_string(r.lhs) << " = " << to_string(r.rhs) << '\n';
      } else {
        out << detail::gap_relator(r) << '\n';
      }
    }
    return out.str();
  }

}  // namespace bandgroup
