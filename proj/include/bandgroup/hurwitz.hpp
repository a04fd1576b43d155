#pragma once

// Hurwitz actions of Br_n on n-tuples over the free group, the universal
// Coxeter group and finite permutation realizations.
//
// Two related actions live here:
//
//  * the tuple action (hurwitz_step / hurwitz_apply): letters of a braid
//    word are applied left to right as moves on a tuple, so
//    apply(T, u v) = apply(apply(T, u), v);
//
//  * the action on group elements, (x)w, obtained by substituting every
//    letter of x by its image under each Artin letter in turn.  This is the
//    action used by all band-generator formulas, e.g.
//    (s_j) a_jk^m = (s_j s_k)^m s_j.
//
// On the generating tuple they are related by word reversal:
// (x_i)w = apply((x_1, ..., x_n), reversed(w))[i].

#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "braid.hpp"
#include "core.hpp"
#include "coxword.hpp"

namespace bandgroup {

  enum class ContextKind { free, universal_coxeter, permutation };

  // Describes the group the tuple entries live in.  For permutation
  // realizations the designated images of s_1..s_n (or t_1..t_n) are kept
  // alongside the degree.
  struct GroupContext {
    ContextKind              kind   = ContextKind::free;
    int                      degree = 0;
    std::vector<Permutation> images;
    bool                     involutive = false;

    static GroupContext free_group() {
      return {ContextKind::free, 0, {}, false};
    }
    static GroupContext universal_coxeter() {
      return {ContextKind::universal_coxeter, 0, {}, true};
    }
    static GroupContext permutations(int degree, std::vector<Permutation> images,
                                     bool involutive) {
      GroupContext c{ContextKind::permutation, degree, std::move(images), involutive};
      c.validate();
      return c;
    }

    void validate() const {
      if (kind != ContextKind::permutation) {
        return;
      }
      for (std::size_t i = 0; i < images.size(); ++i) {
        if (images[i].degree() != degree) {
          throw std::invalid_argument("image " + std::to_string(i + 1)
                                      + " has degree "
                                      + std::to_string(images[i].degree())
                                      + ", expected " + std::to_string(degree));
        }
        if (involutive && !images[i].is_involution()) {
          throw std::invalid_argument("image " + std::to_string(i + 1) + " = "
                                      + images[i].cycles()
                                      + " is not an involution");
        }
      }
    }
  };

  template <typename T>
  using GroupTuple = std::vector<T>;

  namespace detail {
    inline FreeWord group_inverse(FreeWord const& x) {
      return x.inverse();
    }
    inline CoxWord group_inverse(CoxWord const& x) {
      return x.inverse();
    }
    inline Permutation group_inverse(Permutation const& x) {
      return x.inverse();
    }
  }  // namespace detail

  // One move at position j (1-based):
  //   sign +1: (x, y) -> (x y x^-1, x)
  //   sign -1: (x, y) -> (y, y^-1 x y)
  // For involutive entries x^-1 = x, giving (x y x, x).
  template <typename T>
  GroupTuple<T> hurwitz_step(GroupTuple<T> tup, int j, int sign) {
    if (j < 1 || j >= static_cast<int>(tup.size())) {
      throw std::out_of_range("Hurwitz move index " + std::to_string(j)
                              + " outside 1.." + std::to_string(tup.size() - 1));
    }
    if (sign != 1 && sign != -1) {
      throw std::invalid_argument("Hurwitz move sign must be +1 or -1");
    }
    T& x = tup[j - 1];
    T& y = tup[j];
    if (sign > 0) {
      T nx = x * y * detail::group_inverse(x);
      y    = std::move(x);
      x    = std::move(nx);
    } else {
      T ny = detail::group_inverse(y) * x * y;
      x    = std::move(y);
      y    = std::move(ny);
    }
    return tup;
  }

  template <typename T>
  GroupTuple<T> hurwitz_apply(GroupTuple<T> tup, ArtinWord const& w) {
    if (static_cast<int>(tup.size()) != w.n()) {
      throw std::invalid_argument("tuple length " + std::to_string(tup.size())
                                  + " does not match braid strand count "
                                  + std::to_string(w.n()));
    }
    for (auto const& l : w) {
      tup = hurwitz_step(std::move(tup), l.index, l.sign);
    }
    return tup;
  }

  // True iff w fixes every entry under the action on elements, i.e. the
  // realization t_i -> tup[i] is invariant under w.
  template <typename T>
  bool stabilizes(GroupTuple<T> const& tup, ArtinWord const& w) {
    return hurwitz_apply(tup, w.reversed()) == tup;
  }

  inline GroupTuple<CoxWord> coxeter_generators(int n) {
    GroupTuple<CoxWord> out;
    for (int i = 1; i <= n; ++i) {
      out.push_back(CoxWord::letter(i));
    }
    return out;
  }

  inline GroupTuple<FreeWord> free_generators(int n) {
    GroupTuple<FreeWord> out;
    for (int i = 1; i <= n; ++i) {
      out.push_back(FreeWord::generator(i));
    }
    return out;
  }

  // (s_i)sig_j^{±1}.
  inline CoxWord letter_action(int i, ArtinLetter l) {
    int const j = l.index;
    if (l.sign > 0) {
      if (i == j) {
        return CoxWord({j, j + 1, j});
      }
      if (i == j + 1) {
        return CoxWord::letter(j);
      }
    } else {
      if (i == j) {
        return CoxWord::letter(j + 1);
      }
      if (i == j + 1) {
        return CoxWord({j + 1, j, j + 1});
      }
    }
    return CoxWord::letter(i);
  }

  // (x)w in the universal Coxeter group, applying the letters of w from the
  // left by substitution.
  inline CoxWord act(CoxWord x, ArtinWord const& w) {
    for (auto const& l : w) {
      CoxWord y;
      for (int s : x) {
        y *= letter_action(s, l);
      }
      x = std::move(y);
    }
    return x;
  }

  // (x)w in the free group.
  inline FreeWord act(FreeWord x, ArtinWord const& w) {
    for (auto const& l : w) {
      int const j = l.index;
      FreeEndo  e = FreeEndo::identity(w.n());
      auto&     im = e.images();
      if (l.sign > 0) {
        im[j - 1] = conjugate(FreeWord::generator(j), FreeWord::generator(j + 1));
        im[j]     = FreeWord::generator(j);
      } else {
        im[j - 1] = FreeWord::generator(j + 1);
        im[j]     = conjugate(FreeWord::generator(j + 1).inverse(),
                              FreeWord::generator(j));
      }
      x = e.apply(x);
    }
    return x;
  }

  // Closed form for (s_i) a_jk^m in the universal Coxeter group:
  //   s_i                               i < j or i > k
  //   (s_j s_k)^m s_j                   i = j
  //   (s_j s_k)^m s_i (s_j s_k)^-m      j < i < k
  //   s_k (s_j s_k)^-m                  i = k
  inline CoxWord band_power_letter_action(int i, BandPair t, long m) {
    int const j = t.i;
    int const k = t.j;
    if (i < j || i > k) {
      return CoxWord::letter(i);
    }
    if (i == j) {
      return alternating_power(j, k, m) * CoxWord::letter(j);
    }
    if (i == k) {
      return CoxWord::letter(k) * alternating_power(j, k, -m);
    }
    return alternating_power(j, k, m) * CoxWord::letter(i)
           * alternating_power(j, k, -m);
  }

  // Runtime-typed tuple used by the command line front end.
  using AnyTuple = std::variant<GroupTuple<FreeWord>, GroupTuple<CoxWord>,
                                GroupTuple<Permutation>>;

}  // namespace bandgroup
