#pragma once

// JSON file formats.
//
//   matrix     {"n": 4, "m": [[0,3,3,3],[3,0,3,3],[3,3,0,3],[3,3,3,0]]}
//   partition  {"n": 4, "parts": [[1,2],[3],[4]]}
//   tuple      ["s1", "s2 s1 s2"]  or  ["t1", "t2'"]  or  ["(1 2)", "(2 3)"]
//   perm ctx   {"degree": 4, "involutive": true, "images": ["(1 2)", ...]}
//
// Needs nlohmann/json (json.hpp) on the include path.

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "core.hpp"
#include "hurwitz.hpp"
#include "syntax.hpp"

namespace bandgroup {

  using Json = nlohmann::ordered_json;

  inline Json read_json_file(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw std::invalid_argument("cannot open '" + path + "'");
    }
    try {
      return Json::parse(in);
    } catch (Json::parse_error const& e) {
      throw std::invalid_argument("'" + path + "': " + e.what());
    }
  }

  inline CoxeterDatum matrix_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("m")) {
      throw std::invalid_argument("matrix file needs an object with key \"m\"");
    }
    auto rows = j.at("m").get<std::vector<std::vector<int>>>();
    if (j.contains("n") && j.at("n").get<int>() != static_cast<int>(rows.size())) {
      throw std::invalid_argument("\"n\" = " + std::to_string(j.at("n").get<int>())
                                  + " but \"m\" has " + std::to_string(rows.size())
                                  + " rows");
    }
    return CoxeterDatum::from_rows(rows);
  }

  inline Json matrix_to_json(CoxeterDatum const& m) {
    return Json{{"n", m.n()}, {"m", m.rows()}};
  }

  inline Partition partition_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("parts")) {
      throw std::invalid_argument(
          "partition file needs an object with keys \"n\" and \"parts\"");
    }
    return Partition(j.at("n").get<int>(),
                     j.at("parts").get<std::vector<std::vector<int>>>());
  }

  inline Json partition_to_json(Partition const& p) {
    return Json{{"n", p.n()}, {"parts", p.parts()}};
  }

  inline std::vector<std::string> string_array(Json const& j, char const* what) {
    if (!j.is_array()) {
      throw std::invalid_argument(std::string(what) + " must be a JSON array of strings");
    }
    std::vector<std::string> out;
    for (auto const& x : j) {
      if (!x.is_string()) {
        throw std::invalid_argument(std::string(what) + " entries must be strings");
      }
      out.push_back(x.get<std::string>());
    }
    return out;
  }

  // Degree and designated images of a permutation realization.
  inline GroupContext perm_context_from_json(Json const& j) {
    if (!j.is_object() || !j.contains("degree")) {
      throw std::invalid_argument("permutation context needs key \"degree\"");
    }
    int const                degree     = j.at("degree").get<int>();
    bool const               involutive = j.value("involutive", false);
    std::vector<Permutation> images;
    if (j.contains("images")) {
      for (auto const& s : string_array(j.at("images"), "\"images\"")) {
        images.push_back(parse_permutation(s, degree));
      }
    }
    return GroupContext::permutations(degree, std::move(images), involutive);
  }

  inline AnyTuple tuple_from_json(Json const& j, GroupContext const& ctx) {
    auto const entries = string_array(j, "tuple");
    switch (ctx.kind) {
      case ContextKind::free: {
        GroupTuple<FreeWord> t;
        for (auto const& s : entries) {
          t.push_back(parse_free(s));
        }
        return t;
      }
      case ContextKind::universal_coxeter: {
        GroupTuple<CoxWord> t;
        for (auto const& s : entries) {
          t.push_back(parse_cox(s));
        }
        return t;
      }
      case ContextKind::permutation: {
        GroupTuple<Permutation> t;
        for (auto const& s : entries) {
          t.push_back(parse_permutation(s, ctx.degree));
        }
        GroupContext{ctx.kind, ctx.degree, t, ctx.involutive}.validate();
        return t;
      }
    }
    throw std::logic_error("unknown context");
  }

  inline Json tuple_to_json(AnyTuple const& t) {
    Json out = Json::array();
    std::visit(
        [&](auto const& tup) {
          for (auto const& x : tup) {
            if constexpr (std::is_same_v<std::decay_t<decltype(x)>, Permutation>) {
              out.push_back(x.cycles());
            } else {
              out.push_back(to_string(x));
            }
          }
        },
        t);
    return out;
  }

}  // namespace bandgroup
