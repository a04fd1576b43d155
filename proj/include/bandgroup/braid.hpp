#pragma once

// Exact braid arithmetic.  Braids are words in the Artin generators; equality
// in Br_n is decided by the (faithful) right Hurwitz action on the free group
// F_n = <t_1, ..., t_n>.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "core.hpp"

namespace bandgroup {

  struct ArtinLetter {
    int index = 1;  // sig_index, 1 <= index <= n-1
    int sign  = 1;  // +1 or -1

    ArtinLetter inverse() const noexcept {
      return {index, -sign};
    }
    friend bool operator==(ArtinLetter const&, ArtinLetter const&) = default;
  };

  class ArtinWord {
   public:
    ArtinWord() = default;
    explicit ArtinWord(int n) : n_(n) {
      if (n < 1) {
        throw std::invalid_argument("strand count must be >= 1");
      }
    }
    ArtinWord(int n, std::vector<ArtinLetter> letters)
        : ArtinWord(n) {
      for (auto const& l : letters) {
        push_back(l);
      }
    }

    // Signed-integer shorthand: +k for sig_k, -k for sig_k'.
    static ArtinWord from_signed(int n, std::vector<int> const& letters) {
      ArtinWord w(n);
      for (int x : letters) {
        if (x == 0) {
          throw std::invalid_argument("0 is not an Artin letter");
        }
        w.push_back({x > 0 ? x : -x, x > 0 ? 1 : -1});
      }
      return w;
    }

    int n() const noexcept {
      return n_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    std::vector<ArtinLetter> const& letters() const noexcept {
      return letters_;
    }
    auto begin() const noexcept {
      return letters_.begin();
    }
    auto end() const noexcept {
      return letters_.end();
    }

    void push_back(ArtinLetter l) {
      if (l.index < 1 || l.index >= n_) {
        throw std::out_of_range("Artin generator s" + std::to_string(l.index)
                                + " out of range for n = "
                                + std::to_string(n_));
      }
      if (l.sign != 1 && l.sign != -1) {
        throw std::invalid_argument("Artin letter sign must be +1 or -1");
      }
      letters_.push_back(l);
    }

    ArtinWord& operator*=(ArtinWord const& other) {
      check_same_n(other);
      letters_.insert(letters_.end(), other.letters_.begin(),
                      other.letters_.end());
      return *this;
    }
    friend ArtinWord operator*(ArtinWord a, ArtinWord const& b) {
      a *= b;
      return a;
    }

    ArtinWord inverse() const {
      ArtinWord w(n_);
      w.letters_.reserve(letters_.size());
      for (auto it = letters_.rbegin(); it != letters_.rend(); ++it) {
        w.letters_.push_back(it->inverse());
      }
      return w;
    }

    // The same letters in the opposite order.  Reversal is an
    // anti-automorphism of Br_n (the braid relations are palindromic).
    ArtinWord reversed() const {
      ArtinWord w(n_);
      w.letters_.assign(letters_.rbegin(), letters_.rend());
      return w;
    }

    ArtinWord pow(long e) const {
      ArtinWord base = e < 0 ? inverse() : *this;
      ArtinWord out(n_);
      for (long k = 0; k < (e < 0 ? -e : e); ++k) {
        out *= base;
      }
      return out;
    }

    // Cancels adjacent sig_k sig_k' pairs.
    ArtinWord freely_reduced() const {
      ArtinWord w(n_);
      for (auto const& l : letters_) {
        if (!w.letters_.empty() && w.letters_.back() == l.inverse()) {
          w.letters_.pop_back();
        } else {
          w.letters_.push_back(l);
        }
      }
      return w;
    }

    // Literal equality of letter sequences (not braid equality).
    friend bool operator==(ArtinWord const&, ArtinWord const&) = default;

   private:
    void check_same_n(ArtinWord const& other) const {
      if (other.n_ != n_) {
        throw std::invalid_argument("strand counts differ: "
                                    + std::to_string(n_) + " vs "
                                    + std::to_string(other.n_));
      }
    }

    int                      n_ = 1;
    std::vector<ArtinLetter> letters_;
  };

  // Word over t_1..t_n, letters stored as signed integers (+i for t_i, -i for
  // its inverse).  Always freely reduced.
  class FreeWord {
   public:
    using letter_type = std::int32_t;

    FreeWord() = default;

    static FreeWord generator(int i) {
      FreeWord w;
      w.letters_.push_back(i);
      return w;
    }

    // Reduces the input.
    static FreeWord from_letters(std::vector<letter_type> const& letters) {
      FreeWord w;
      for (auto x : letters) {
        if (x == 0) {
          throw std::invalid_argument("0 is not a free-group letter");
        }
        w.append(x);
      }
      return w;
    }

    std::vector<letter_type> const& letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }

    FreeWord inverse() const {
      FreeWord w;
      w.letters_.resize(letters_.size());
      std::transform(letters_.rbegin(), letters_.rend(), w.letters_.begin(),
                     [](letter_type x) { return -x; });
      return w;
    }

    // this := this * other, reducing at the seam.
    FreeWord& operator*=(FreeWord const& other) {
      std::size_t k = 0;
      while (k < other.letters_.size() && !letters_.empty()
             && letters_.back() == -other.letters_[k]) {
        letters_.pop_back();
        ++k;
      }
      letters_.insert(letters_.end(), other.letters_.begin() + k,
                      other.letters_.end());
      return *this;
    }
    friend FreeWord operator*(FreeWord a, FreeWord const& b) {
      a *= b;
      return a;
    }

    friend bool operator==(FreeWord const&, FreeWord const&) = default;

   private:
    void append(letter_type x) {
      if (!letters_.empty() && letters_.back() == -x) {
        letters_.pop_back();
      } else {
        letters_.push_back(x);
      }
    }

    std::vector<letter_type> letters_;
  };

  // x * y * x^-1 without building the intermediate concatenation twice.
  inline FreeWord conjugate(FreeWord const& x, FreeWord const& y) {
    FreeWord out = x;
    out *= y;
    out *= x.inverse();
    return out;
  }

  // An endomorphism of F_n given by the images of t_1..t_n.
  class FreeEndo {
   public:
    FreeEndo() = default;

    static FreeEndo identity(int n) {
      FreeEndo e;
      e.images_.reserve(n);
      for (int i = 1; i <= n; ++i) {
        e.images_.push_back(FreeWord::generator(i));
      }
      return e;
    }

    explicit FreeEndo(std::vector<FreeWord> images)
        : images_(std::move(images)) {}

    int n() const noexcept {
      return static_cast<int>(images_.size());
    }
    std::vector<FreeWord> const& images() const noexcept {
      return images_;
    }
    std::vector<FreeWord>& images() noexcept {
      return images_;
    }
    FreeWord const& image(int i) const {
      return images_.at(i - 1);
    }

    // Image of an arbitrary word under this endomorphism.
    FreeWord apply(FreeWord const& w) const {
      FreeWord out;
      for (auto x : w.letters()) {
        if (x > 0) {
          out *= images_.at(x - 1);
        } else {
          out *= images_.at(-x - 1).inverse();
        }
      }
      return out;
    }

    // The endomorphism t_i -> this->apply(second.image(i)); with the Hurwitz
    // convention this is the action of u*v when this = action(u) and
    // second = action(v).
    FreeEndo then(FreeEndo const& second) const {
      std::vector<FreeWord> out;
      out.reserve(second.images_.size());
      for (auto const& w : second.images_) {
        out.push_back(apply(w));
      }
      return FreeEndo(std::move(out));
    }

    bool is_identity() const {
      for (int i = 1; i <= n(); ++i) {
        if (images_[i - 1] != FreeWord::generator(i)) {
          return false;
        }
      }
      return true;
    }

    friend bool operator==(FreeEndo const&, FreeEndo const&) = default;

   private:
    std::vector<FreeWord> images_;
  };

  // One Hurwitz move on a tuple of free words, in place.
  //   sig_j : (x, y) -> (x y x^-1, x)
  //   sig_j': (x, y) -> (y, y^-1 x y)
  inline void hurwitz_free_step(std::vector<FreeWord>& tup, ArtinLetter l) {
    auto& x = tup[l.index - 1];
    auto& y = tup[l.index];
    if (l.sign > 0) {
      FreeWord nx = conjugate(x, y);
      y           = std::move(x);
      x           = std::move(nx);
    } else {
      FreeWord ny = conjugate(y.inverse(), x);
      x           = std::move(y);
      y           = std::move(ny);
    }
  }

  // The right action of w on (t_1, ..., t_n), letter by letter from the left.
  inline FreeEndo artin_action_on_free(ArtinWord const& w) {
    FreeEndo e = FreeEndo::identity(w.n());
    for (auto const& l : w) {
      hurwitz_free_step(e.images(), l);
    }
    return e;
  }

  // Equality in Br_n.
  inline bool braid_equal(ArtinWord const& u, ArtinWord const& v) {
    if (u.n() != v.n()) {
      throw std::invalid_argument("braid_equal: strand counts differ");
    }
    return artin_action_on_free(u.freely_reduced())
           == artin_action_on_free(v.freely_reduced());
  }

  inline bool is_trivial_braid(ArtinWord const& w) {
    return artin_action_on_free(w.freely_reduced()).is_identity();
  }

  // a_ij = sig_{j-1} ... sig_{i+1} sig_i sig_{i+1}' ... sig_{j-1}'.
  inline ArtinWord band_to_artin(BandPair t, int n) {
    if (!t.valid_for(n)) {
      throw std::out_of_range("band " + to_string(t) + " invalid for n = "
                              + std::to_string(n));
    }
    ArtinWord w(n);
    for (int k = t.j - 1; k > t.i; --k) {
      w.push_back({k, 1});
    }
    w.push_back({t.i, 1});
    for (int k = t.i + 1; k < t.j; ++k) {
      w.push_back({k, -1});
    }
    return w;
  }

  inline ArtinWord band_power(BandPair t, long e, int n) {
    return band_to_artin(t, n).pow(e);
  }

  // A permutation of {1..d}, stored as the list of images.
  class Permutation {
   public:
    Permutation() = default;
    explicit Permutation(int degree) : img_(degree) {
      std::iota(img_.begin(), img_.end(), 1);
    }
    explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
      std::vector<bool> seen(img_.size() + 1, false);
      for (int x : img_) {
        if (x < 1 || x > degree() || seen[x]) {
          throw std::invalid_argument("not a permutation of 1.."
                                      + std::to_string(degree()));
        }
        seen[x] = true;
      }
    }

    static Permutation transposition(int degree, int a, int b) {
      Permutation p(degree);
      std::swap(p.img_.at(a - 1), p.img_.at(b - 1));
      return p;
    }

    int degree() const noexcept {
      return static_cast<int>(img_.size());
    }
    int operator()(int x) const {
      return img_.at(x - 1);
    }
    std::vector<int> const& images() const noexcept {
      return img_;
    }

    // (p * q)(x) = p(q(x)).
    friend Permutation operator*(Permutation const& p, Permutation const& q) {
      if (p.degree() != q.degree()) {
        throw std::invalid_argument("permutation degrees differ");
      }
      Permutation r(p.degree());
      for (int x = 1; x <= p.degree(); ++x) {
        r.img_[x - 1] = p(q(x));
      }
      return r;
    }

    Permutation inverse() const {
      Permutation r(degree());
      for (int x = 1; x <= degree(); ++x) {
        r.img_[(*this)(x)-1] = x;
      }
      return r;
    }

    bool is_identity() const {
      for (int x = 1; x <= degree(); ++x) {
        if (img_[x - 1] != x) {
          return false;
        }
      }
      return true;
    }

    bool is_involution() const {
      return ((*this) * (*this)).is_identity();
    }

    // Disjoint cycle notation, fixed points omitted; "()" for the identity.
    std::string cycles() const {
      std::string       out;
      std::vector<bool> seen(degree() + 1, false);
      for (int x = 1; x <= degree(); ++x) {
        if (seen[x] || (*this)(x) == x) {
          continue;
        }
        out += '(';
        int y = x;
        do {
          if (y != x) {
            out += ' ';
          }
          out += std::to_string(y);
          seen[y] = true;
          y       = (*this)(y);
        } while (y != x);
        out += ')';
      }
      return out.empty() ? "()" : out;
    }

    friend bool operator==(Permutation const&, Permutation const&) = default;

   private:
    std::vector<int> img_;
  };

  // The underlying permutation; a homomorphism Br_n -> S_n with
  // image(u * v) = image(u) * image(v).
  inline Permutation permutation_image(ArtinWord const& w) {
    Permutation p(w.n());
    for (auto const& l : w) {
      p = p * Permutation::transposition(w.n(), l.index, l.index + 1);
    }
    return p;
  }

}  // namespace bandgroup
