#pragma once

// Text syntax for words and permutations.
//
//   braid words     s1 s2' a1.3^3 a2.4'    ("1" or "" is the empty word)
//   Coxeter words   s1 s2 s1
//   free words      t1 t2' t3^-2
//   expressions     b1.2^2 b3.4^-1
//   permutations    (1 2)(3 4)
//
// A trailing ' inverts a letter, ^<e> raises it to an integer power; both may
// be combined (s1'^2 = s1^-2).  Printing uses ' for exponent -1, ^e otherwise.

#include <cctype>
#include <charconv>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "braid.hpp"
#include "core.hpp"
#include "coxword.hpp"
#include "raag.hpp"

namespace bandgroup {

  class ParseError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  namespace detail {
    inline std::vector<std::string> split_ws(std::string_view s) {
      std::vector<std::string> out;
      std::istringstream       in{std::string(s)};
      std::string              tok;
      while (in >> tok) {
        out.push_back(tok);
      }
      if (out.size() == 1 && out[0] == "1") {
        out.clear();
      }
      return out;
    }

    inline int parse_int(std::string_view s, std::string const& token) {
      int value = 0;
      if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
      }
      auto const [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
      if (ec != std::errc{} || p != s.data() + s.size() || s.empty()) {
        throw ParseError("bad number in token '" + token + "'");
      }
      return value;
    }

    struct Token {
      char     head = 's';
      int      first = 0;
      int      second = 0;  // 0 for single-index letters
      int      exp = 1;
    };

    // <head><int>[.<int>]['][^<int>]
    inline Token parse_token(std::string const& tok, std::string_view heads,
                             bool pair) {
      if (tok.empty() || heads.find(tok[0]) == std::string_view::npos) {
        throw ParseError("unexpected token '" + tok + "'");
      }
      Token            t;
      t.head          = tok[0];
      std::string_view rest(tok);
      rest.remove_prefix(1);
      int sign = 1;
      int power = 1;
      if (auto caret = rest.find('^'); caret != std::string_view::npos) {
        power = parse_int(rest.substr(caret + 1), tok);
        rest  = rest.substr(0, caret);
      }
      if (!rest.empty() && rest.back() == '\'') {
        sign = -1;
        rest.remove_suffix(1);
      }
      if (pair) {
        auto dot = rest.find('.');
        if (dot == std::string_view::npos) {
          throw ParseError("token '" + tok + "' needs the form " + t.head + "<i>.<j>");
        }
        t.first  = parse_int(rest.substr(0, dot), tok);
        t.second = parse_int(rest.substr(dot + 1), tok);
      } else {
        t.first = parse_int(rest, tok);
      }
      t.exp = sign * power;
      if (t.exp == 0) {
        throw ParseError("zero exponent in token '" + tok + "'");
      }
      return t;
    }

    inline std::string exp_suffix(long e) {
      if (e == 1) {
        return "";
      }
      if (e == -1) {
        return "'";
      }
      return "^" + std::to_string(e);
    }
  }  // namespace detail

  // ---------------------------------------------------------------------------
  // Braid words, kept as a token list so band letters survive a round trip.

  struct BraidToken {
    bool     band = false;
    int      index = 1;  // Artin letter s_index
    BandPair pair;       // band letter a_pair
    int      exp = 1;

    friend bool operator==(BraidToken const&, BraidToken const&) = default;
  };

  using BraidText = std::vector<BraidToken>;

  inline BraidText parse_braid_text(std::string_view s) {
    BraidText out;
    for (auto const& tok : detail::split_ws(s)) {
      if (tok[0] == 'a') {
        auto t = detail::parse_token(tok, "a", true);
        if (t.first < 1 || t.first >= t.second) {
          throw ParseError("band letter '" + tok + "' needs 1 <= i < j");
        }
        out.push_back({true, 1, BandPair(t.first, t.second), t.exp});
      } else {
        auto t = detail::parse_token(tok, "s", false);
        if (t.first < 1) {
          throw ParseError("Artin letter '" + tok + "' needs index >= 1");
        }
        out.push_back({false, t.first, BandPair(1, 2), t.exp});
      }
    }
    return out;
  }

  inline std::string to_string(BraidText const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto const& t : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += t.band ? "a" + to_string(t.pair) : "s" + std::to_string(t.index);
      s += detail::exp_suffix(t.exp);
    }
    return s;
  }

  // Smallest strand count the text fits in.
  inline int min_strands(BraidText const& w) {
    int n = 1;
    for (auto const& t : w) {
      n = std::max(n, t.band ? t.pair.j : t.index + 1);
    }
    return n;
  }

  inline ArtinWord to_artin(BraidText const& w, int n) {
    ArtinWord out(n);
    for (auto const& t : w) {
      if (t.band) {
        if (!t.pair.valid_for(n)) {
          throw std::out_of_range("band a" + to_string(t.pair) + " out of range for n = "
                                  + std::to_string(n));
        }
        out *= band_power(t.pair, t.exp, n);
      } else {
        out *= ArtinWord(n, {{t.index, 1}}).pow(t.exp);
      }
    }
    return out;
  }

  inline ArtinWord parse_braid(std::string_view s, int n) {
    return to_artin(parse_braid_text(s), n);
  }

  inline std::string to_string(ArtinWord const& w) {
    BraidText t;
    for (auto const& l : w) {
      t.push_back({false, l.index, BandPair(1, 2), l.sign});
    }
    return to_string(t);
  }

  // ---------------------------------------------------------------------------

  inline CoxWord parse_cox(std::string_view s) {
    std::vector<int> raw;
    for (auto const& tok : detail::split_ws(s)) {
      auto t = detail::parse_token(tok, "s", false);
      if (t.first < 1) {
        throw ParseError("Coxeter letter '" + tok + "' needs index >= 1");
      }
      // Involutive letters: s^e is s for odd e and trivial for even e.
      if (t.exp % 2 != 0) {
        raw.push_back(t.first);
      }
    }
    return reduce_cox(raw);
  }

  inline FreeWord parse_free(std::string_view s) {
    FreeWord w;
    for (auto const& tok : detail::split_ws(s)) {
      auto t = detail::parse_token(tok, "t", false);
      if (t.first < 1) {
        throw ParseError("free letter '" + tok + "' needs index >= 1");
      }
      FreeWord g = FreeWord::generator(t.first);
      if (t.exp < 0) {
        g = g.inverse();
      }
      for (int q = 0; q < std::abs(t.exp); ++q) {
        w *= g;
      }
    }
    return w;
  }

  inline std::string to_string(FreeWord const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    auto const& ls = w.letters();
    for (std::size_t q = 0; q < ls.size();) {
      std::size_t r = q;
      while (r < ls.size() && ls[r] == ls[q]) {
        ++r;
      }
      int const x = ls[q];
      long const e = static_cast<long>(r - q) * (x > 0 ? 1 : -1);
      if (!s.empty()) {
        s += ' ';
      }
      s += "t" + std::to_string(x > 0 ? x : -x) + detail::exp_suffix(e);
      q = r;
    }
    return s;
  }

  inline RaagExpression parse_expression(std::string_view s) {
    RaagExpression out;
    for (auto const& tok : detail::split_ws(s)) {
      auto t = detail::parse_token(tok, "b", true);
      if (t.first < 1 || t.first >= t.second) {
        throw ParseError("generator '" + tok + "' needs 1 <= i < j");
      }
      out.push_back({BandPair(t.first, t.second), t.exp});
    }
    return out;
  }

  // Cycle notation over 1..degree; "()" or "" is the identity.
  inline Permutation parse_permutation(std::string_view s, int degree) {
    if (degree < 1) {
      throw ParseError("permutation degree must be >= 1");
    }
    std::vector<int> img(static_cast<std::size_t>(degree));
    for (int x = 1; x <= degree; ++x) {
      img[x - 1] = x;
    }
    std::vector<bool> used(static_cast<std::size_t>(degree) + 1, false);
    std::size_t       pos = 0;
    auto skip_ws = [&] {
      while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) {
        ++pos;
      }
    };
    skip_ws();
    while (pos < s.size()) {
      if (s[pos] != '(') {
        throw ParseError("expected '(' in permutation '" + std::string(s) + "'");
      }
      ++pos;
      std::vector<int> cycle;
      for (;;) {
        skip_ws();
        if (pos >= s.size()) {
          throw ParseError("unterminated cycle in '" + std::string(s) + "'");
        }
        if (s[pos] == ')') {
          ++pos;
          break;
        }
        std::size_t end = pos;
        while (end < s.size() && std::isdigit(static_cast<unsigned char>(s[end]))) {
          ++end;
        }
        if (end == pos) {
          throw ParseError("bad character in permutation '" + std::string(s) + "'");
        }
        int const x = detail::parse_int(s.substr(pos, end - pos), std::string(s));
        if (x < 1 || x > degree || used[x]) {
          throw ParseError("point " + std::to_string(x)
                           + " repeated or outside 1.." + std::to_string(degree));
        }
        used[x] = true;
        cycle.push_back(x);
        pos = end;
        if (pos < s.size() && s[pos] == ',') {
          ++pos;
        }
      }
      for (std::size_t q = 0; q < cycle.size(); ++q) {
        img[cycle[q] - 1] = cycle[(q + 1) % cycle.size()];
      }
      skip_ws();
    }
    return Permutation(std::move(img));
  }

}  // namespace bandgroup
