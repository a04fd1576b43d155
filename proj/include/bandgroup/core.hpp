#pragma once

// Index combinatorics shared by the whole library: band pairs, Coxeter data,
// partitions of {1..n} and the commutation/crossing predicates on bands.
//
// Strand indices are 1-based throughout.  A Coxeter entry m_ij = 0 plays the
// role usually played by infinity: the band a_ij contributes no generator.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bandgroup {

  // Raised when an input lies outside the scope of an operation (e.g. a
  // matrix that is not of large type handed to a large-type routine).
  class ScopeError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
  };

  struct BandPair {
    int i = 1;
    int j = 2;

    constexpr BandPair() = default;
    constexpr BandPair(int a, int b) : i(a), j(b) {
      if (!(0 < a && a < b)) {
        throw std::invalid_argument("band pair requires 1 <= i < j, got ("
                                    + std::to_string(a) + ","
                                    + std::to_string(b) + ")");
      }
    }

    // Builds the pair {a, b} in either order.
    static constexpr BandPair sorted(int a, int b) {
      return a < b ? BandPair(a, b) : BandPair(b, a);
    }

    constexpr bool contains(int k) const noexcept {
      return k == i || k == j;
    }
    constexpr bool valid_for(int n) const noexcept {
      return 1 <= i && i < j && j <= n;
    }

    friend constexpr bool operator==(BandPair const&, BandPair const&)
        = default;
    friend constexpr auto operator<=>(BandPair const&, BandPair const&)
        = default;
  };

  inline std::string to_string(BandPair p) {
    return std::to_string(p.i) + "." + std::to_string(p.j);
  }

  // The commutation predicate of the BKL presentation:
  // (k-i)(k-j)(l-i)(l-j) > 0.  Two bands commute in Br_n iff they have four
  // distinct indices and are not interleaved.  This is also the
  // "non-crossing" relation of the right-angled Artin group G_M.
  constexpr bool commutes_in_brn(BandPair t, BandPair s) noexcept {
    long long const p = static_cast<long long>(s.i - t.i) * (s.i - t.j)
                        * (s.j - t.i) * (s.j - t.j);
    return p > 0;
  }

  // True iff exactly one index of s lies strictly between the indices of t.
  // Only defined for four distinct indices.
  constexpr bool crossing(BandPair t, BandPair s) {
    if (t.contains(s.i) || t.contains(s.j)) {
      throw std::invalid_argument("crossing requires four distinct indices, got "
                                  + to_string(t) + " and " + to_string(s));
    }
    bool const a = t.i < s.i && s.i < t.j;
    bool const b = t.i < s.j && s.j < t.j;
    return a != b;
  }

  class CoxeterDatum {
   public:
    CoxeterDatum() = default;

    // All off-diagonal entries equal to `fill`.
    CoxeterDatum(int n, int fill) : n_(n), m_(checked_size(n) * n, fill) {
      for (int i = 1; i <= n; ++i) {
        at(i, i) = 0;
      }
    }

    static CoxeterDatum from_rows(std::vector<std::vector<int>> const& rows) {
      int const n = static_cast<int>(rows.size());
      CoxeterDatum d(n, 0);
      for (int i = 1; i <= n; ++i) {
        if (static_cast<int>(rows[i - 1].size()) != n) {
          throw std::invalid_argument("Coxeter matrix must be square, row "
                                      + std::to_string(i) + " has "
                                      + std::to_string(rows[i - 1].size())
                                      + " entries, expected "
                                      + std::to_string(n));
        }
        for (int j = 1; j <= n; ++j) {
          int const v = rows[i - 1][j - 1];
          if (v < 0) {
            throw std::invalid_argument("Coxeter entries must be >= 0");
          }
          if (i == j && v != 0) {
            throw std::invalid_argument("Coxeter matrix must have zero diagonal");
          }
          if (v != rows[j - 1][i - 1]) {
            throw std::invalid_argument("Coxeter matrix must be symmetric, m"
                                        + std::to_string(i) + std::to_string(j)
                                        + " != m" + std::to_string(j)
                                        + std::to_string(i));
          }
          d.at(i, j) = v;
        }
      }
      return d;
    }

    int n() const noexcept {
      return n_;
    }

    int operator()(int i, int j) const {
      check(i);
      check(j);
      return m_[(i - 1) * n_ + (j - 1)];
    }
    int operator()(BandPair p) const {
      return (*this)(p.i, p.j);
    }

    // Sets m_ij and m_ji.
    CoxeterDatum& set(int i, int j, int value) {
      check(i);
      check(j);
      if (i == j || value < 0) {
        throw std::invalid_argument("invalid Coxeter entry assignment");
      }
      at(i, j) = value;
      at(j, i) = value;
      return *this;
    }

    std::vector<std::vector<int>> rows() const {
      std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
      for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
          out[i - 1][j - 1] = (*this)(i, j);
        }
      }
      return out;
    }

    // Every off-diagonal entry is 0 or >= 3.
    bool is_large_type() const noexcept {
      for (int i = 0; i < n_ * n_; ++i) {
        if (m_[i] == 1 || m_[i] == 2) {
          return false;
        }
      }
      return true;
    }

    // Returns the first offending triple/entry, or nullopt if every
    // off-diagonal entry is in {1,2} and the 1-entries are transitive.
    std::optional<std::string> partition_type_violation() const {
      for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
          int const v = (*this)(i, j);
          if (v != 1 && v != 2) {
            return "entry m" + std::to_string(i) + "," + std::to_string(j)
                   + " = " + std::to_string(v) + " is not in {1,2}";
          }
        }
      }
      for (int i = 1; i <= n_; ++i) {
        for (int j = 1; j <= n_; ++j) {
          for (int k = 1; k <= n_; ++k) {
            if (i == j || j == k || i == k) {
              continue;
            }
            if ((*this)(i, j) == 1 && (*this)(j, k) == 1 && (*this)(i, k) != 1) {
              return "transitivity violated: m" + std::to_string(i) + ","
                     + std::to_string(j) + " = m" + std::to_string(j) + ","
                     + std::to_string(k) + " = 1 but m" + std::to_string(i)
                     + "," + std::to_string(k) + " = "
                     + std::to_string((*this)(i, k));
            }
          }
        }
      }
      return std::nullopt;
    }

    bool is_partition_type() const {
      return !partition_type_violation().has_value();
    }

    // T_M: the bands with non-zero exponent, in lexicographic order.
    std::vector<BandPair> support() const {
      std::vector<BandPair> out;
      for (int i = 1; i <= n_; ++i) {
        for (int j = i + 1; j <= n_; ++j) {
          if ((*this)(i, j) != 0) {
            out.emplace_back(i, j);
          }
        }
      }
      return out;
    }

    // Block-diagonal assembly with zero off-diagonal blocks.
    static CoxeterDatum block_sum(CoxeterDatum const& a, CoxeterDatum const& b) {
      CoxeterDatum d(a.n() + b.n(), 0);
      for (int i = 1; i <= a.n(); ++i) {
        for (int j = i + 1; j <= a.n(); ++j) {
          d.set(i, j, a(i, j));
        }
      }
      for (int i = 1; i <= b.n(); ++i) {
        for (int j = i + 1; j <= b.n(); ++j) {
          d.set(a.n() + i, a.n() + j, b(i, j));
        }
      }
      return d;
    }

    friend bool operator==(CoxeterDatum const&, CoxeterDatum const&) = default;

   private:
    static std::size_t checked_size(int n) {
      if (n < 0) {
        throw std::invalid_argument("strand count must be non-negative");
      }
      return static_cast<std::size_t>(n);
    }

    void check(int i) const {
      if (i < 1 || i > n_) {
        throw std::out_of_range("index " + std::to_string(i)
                                + " outside 1.." + std::to_string(n_));
      }
    }

    int& at(int i, int j) {
      return m_[(i - 1) * n_ + (j - 1)];
    }

    int              n_ = 0;
    std::vector<int> m_;
  };

  // A set partition of {1..n}.  Parts are stored sorted, and the list of
  // parts is sorted by smallest element, so equal partitions compare equal.
  class Partition {
   public:
    Partition() = default;

    Partition(int n, std::vector<std::vector<int>> parts)
        : n_(n), parts_(std::move(parts)), block_(n, -1) {
      for (auto& p : parts_) {
        if (p.empty()) {
          throw std::invalid_argument("partition has an empty part");
        }
        std::sort(p.begin(), p.end());
      }
      std::sort(parts_.begin(), parts_.end());
      for (std::size_t b = 0; b < parts_.size(); ++b) {
        for (int x : parts_[b]) {
          if (x < 1 || x > n) {
            throw std::invalid_argument("partition element "
                                        + std::to_string(x) + " outside 1.."
                                        + std::to_string(n));
          }
          if (block_[x - 1] != -1) {
            throw std::invalid_argument("partition parts are not disjoint: "
                                        + std::to_string(x)
                                        + " occurs twice");
          }
          block_[x - 1] = static_cast<int>(b);
        }
      }
      for (int x = 1; x <= n; ++x) {
        if (block_[x - 1] == -1) {
          throw std::invalid_argument("partition misses element "
                                      + std::to_string(x));
        }
      }
    }

    static Partition singletons(int n) {
      std::vector<std::vector<int>> parts;
      for (int i = 1; i <= n; ++i) {
        parts.push_back({i});
      }
      return Partition(n, std::move(parts));
    }

    static Partition single_part(int n) {
      std::vector<int> all(n);
      for (int i = 0; i < n; ++i) {
        all[i] = i + 1;
      }
      return Partition(n, {all});
    }

    int n() const noexcept {
      return n_;
    }
    std::vector<std::vector<int>> const& parts() const noexcept {
      return parts_;
    }

    bool related(int i, int j) const {
      return block_.at(i - 1) == block_.at(j - 1);
    }

    // The part containing i.
    std::vector<int> const& part_of(int i) const {
      return parts_[block_.at(i - 1)];
    }

    // Restriction to {1..n-1} (the element n is dropped from its part).
    Partition restrict_last() const {
      std::vector<std::vector<int>> parts;
      for (auto const& p : parts_) {
        std::vector<int> q;
        std::copy_if(p.begin(), p.end(), std::back_inserter(q),
                     [this](int x) { return x != n_; });
        if (!q.empty()) {
          parts.push_back(std::move(q));
        }
      }
      return Partition(n_ - 1, std::move(parts));
    }

    // This partition on {1..n} extended by the singleton {n+1}.
    Partition extend_singleton() const {
      auto parts = parts_;
      parts.push_back({n_ + 1});
      return Partition(n_ + 1, std::move(parts));
    }

    friend bool operator==(Partition const& a, Partition const& b) {
      return a.n_ == b.n_ && a.parts_ == b.parts_;
    }

   private:
    int                           n_ = 0;
    std::vector<std::vector<int>> parts_;
    std::vector<int>              block_;
  };

  // m_ij = 1 when i ~ j, m_ij = 2 otherwise.
  inline CoxeterDatum partition_to_matrix(Partition const& p) {
    CoxeterDatum d(p.n(), 2);
    for (int i = 1; i <= p.n(); ++i) {
      for (int j = i + 1; j <= p.n(); ++j) {
        if (p.related(i, j)) {
          d.set(i, j, 1);
        }
      }
    }
    return d;
  }

  inline Partition matrix_to_partition(CoxeterDatum const& m) {
    if (auto why = m.partition_type_violation()) {
      throw std::invalid_argument("matrix is not of partition type: " + *why);
    }
    std::vector<std::vector<int>> parts;
    std::vector<bool>             seen(m.n() + 1, false);
    for (int i = 1; i <= m.n(); ++i) {
      if (seen[i]) {
        continue;
      }
      std::vector<int> part{i};
      seen[i] = true;
      for (int j = i + 1; j <= m.n(); ++j) {
        if (m(i, j) == 1) {
          part.push_back(j);
          seen[j] = true;
        }
      }
      parts.push_back(std::move(part));
    }
    return Partition(m.n(), std::move(parts));
  }

  // All set partitions of {1..n} (Bell(n) of them), in restricted-growth
  // order.
  inline std::vector<Partition> all_partitions(int n) {
    std::vector<Partition> out;
    if (n == 0) {
      out.emplace_back(0, std::vector<std::vector<int>>{});
      return out;
    }
    std::vector<int> rgs(n, 0);
    while (true) {
      int const                     blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
      std::vector<std::vector<int>> parts(blocks);
      for (int i = 0; i < n; ++i) {
        parts[rgs[i]].push_back(i + 1);
      }
      out.emplace_back(n, std::move(parts));
      // next restricted growth string
      int k = n - 1;
      for (; k > 0; --k) {
        int const mx = *std::max_element(rgs.begin(), rgs.begin() + k);
        if (rgs[k] <= mx) {
          break;
        }
      }
      if (k == 0) {
        break;
      }
      ++rgs[k];
      std::fill(rgs.begin() + k + 1, rgs.end(), 0);
    }
    return out;
  }

}  // namespace bandgroup
