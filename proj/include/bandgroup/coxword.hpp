#pragma once

// Elements of the universal Coxeter group <s_1, ..., s_n | s_i^2 = 1>,
// represented by words without repetition.

#include <stdexcept>
#include <string>
#include <vector>

namespace bandgroup {

  class CoxWord {
   public:
    CoxWord() = default;

    // Reduces the input by deleting adjacent equal letters.
    explicit CoxWord(std::vector<int> const& raw) {
      for (int x : raw) {
        push(x);
      }
    }
    CoxWord(std::initializer_list<int> raw) : CoxWord(std::vector<int>(raw)) {}

    static CoxWord letter(int i) {
      return CoxWord({i});
    }

    std::vector<int> const& letters() const noexcept {
      return letters_;
    }
    std::size_t size() const noexcept {
      return letters_.size();
    }
    bool empty() const noexcept {
      return letters_.empty();
    }
    int operator[](std::size_t k) const {
      return letters_[k];
    }
    auto begin() const noexcept {
      return letters_.begin();
    }
    auto end() const noexcept {
      return letters_.end();
    }

    int max_letter() const noexcept {
      int m = 0;
      for (int x : letters_) {
        m = std::max(m, x);
      }
      return m;
    }

    // Every letter is a generator of the group on n letters.
    bool valid_for(int n) const noexcept {
      for (int x : letters_) {
        if (x < 1 || x > n) {
          return false;
        }
      }
      return true;
    }

    CoxWord inverse() const {
      CoxWord w;
      w.letters_.assign(letters_.rbegin(), letters_.rend());
      return w;
    }

    CoxWord& operator*=(CoxWord const& other) {
      std::size_t k = 0;
      while (k < other.letters_.size() && !letters_.empty()
             && letters_.back() == other.letters_[k]) {
        letters_.pop_back();
        ++k;
      }
      letters_.insert(letters_.end(), other.letters_.begin() + k,
                      other.letters_.end());
      return *this;
    }
    friend CoxWord operator*(CoxWord a, CoxWord const& b) {
      a *= b;
      return a;
    }

    friend bool operator==(CoxWord const&, CoxWord const&) = default;
    friend auto operator<=>(CoxWord const&, CoxWord const&) = default;

   private:
    void push(int x) {
      if (x < 1) {
        throw std::invalid_argument("Coxeter letters are positive, got "
                                    + std::to_string(x));
      }
      if (!letters_.empty() && letters_.back() == x) {
        letters_.pop_back();
      } else {
        letters_.push_back(x);
      }
    }

    std::vector<int> letters_;
  };

  // Deletes adjacent identical letters until none remain.  Deletion is
  // confluent, so the result does not depend on the order of deletions.
  inline CoxWord reduce_cox(std::vector<int> const& raw) {
    return CoxWord(raw);
  }

  // (s_j s_k)^p, with negative p giving (s_k s_j)^{|p|}.
  inline CoxWord alternating_power(int j, int k, long p) {
    std::vector<int> raw;
    raw.reserve(2 * static_cast<std::size_t>(p < 0 ? -p : p));
    int const first = p >= 0 ? j : k;
    int const second = p >= 0 ? k : j;
    for (long q = 0; q < (p < 0 ? -p : p); ++q) {
      raw.push_back(first);
      raw.push_back(second);
    }
    return CoxWord(raw);
  }

  inline std::string to_string(CoxWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (int x : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += 's' + std::to_string(x);
    }
    return s;
  }

}  // namespace bandgroup
