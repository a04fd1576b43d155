// bandgroup: command line front end.
//
// Exit codes: 0 all checks passed, 1 some check failed, 2 usage or scope error.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "bandgroup/bandgroup.hpp"

using namespace bandgroup;

namespace {

  struct Options {
    bool          json = false;
    std::uint64_t seed = 0;

    std::string matrix, matrix2, partition, tuple_file, context = "free";
    std::string word, word2, band, format = "plain", family;
    int         n = 0, j = 0, k = 0, max_len = 3, max_exp = 2;
    long        m = 3;
    std::size_t random = 0;
    bool        with_proof = false;
  };

  class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
  };

  std::string need(std::string const& value, char const* flag) {
    if (value.empty()) {
      throw UsageError(std::string("missing required option ") + flag);
    }
    return value;
  }

  CoxeterDatum load_matrix(std::string const& path, char const* flag = "--matrix") {
    return matrix_from_json(read_json_file(need(path, flag)));
  }

  Partition load_partition(std::string const& path) {
    return partition_from_json(read_json_file(need(path, "--partition")));
  }

  BandPair parse_band(std::string const& s) {
    auto const t = parse_braid_text("a" + need(s, "--band"));
    if (t.size() != 1 || t[0].exp != 1) {
      throw UsageError("--band expects i.j");
    }
    return t[0].pair;
  }

  int emit(RunReport const& r, Options const& o) {
    if (o.json) {
      std::cout << r.to_json().dump(2) << '\n';
    } else {
      std::cout << r.to_text();
    }
    return r.ok() ? 0 : 1;
  }

  // ---------------------------------------------------------------------------

  RunReport verify_family(std::string const& which, Options const& o) {
    RunReport r;
    r.tag = "verify " + which;
    if (which == "bkl") {
      if (o.n < 2) {
        throw UsageError("--n must be >= 2");
      }
      r.add(verify_relations(relations_bkl(o.n), CoxeterDatum(o.n, 1)));
    } else if (which == "thm1") {
      auto const m = load_matrix(o.matrix);
      r.add(verify_relations(relations_thm1(m), m));
    } else if (which == "thm2") {
      auto const p = load_partition(o.partition);
      auto const m = partition_to_matrix(p);
      r.add(verify_relations(relations_thm2(p), m));
      if (o.with_proof) {
        r.add(verify_relations(relations_thm2_proof(p), m));
      }
    } else if (which == "combing") {
      auto const p = load_partition(o.partition);
      r.add(verify_relations(relations_combing(p),
                             partition_to_matrix(p.extend_singleton())));
      r.details["n"] = p.n() + 1;
    } else if (which == "sec4") {
      auto const m = load_matrix(o.matrix);
      r.add(verify_relations(relations_sec4(m), m));
    } else if (which == "cosets") {
      auto const p   = load_partition(o.partition);
      auto const rep = coset_table_check(p);
      for (auto const& row : rep.rows) {
        std::string why;
        if (!row.braid_ok) {
          why += " braid";
        }
        if (!row.discriminant_ok) {
          why += " discriminant";
        }
        if (!row.tail_in_h) {
          why += " membership";
        }
        r.count(row.passed(),
                {"coset." + row.step.case_id,
                 {row.generator.i, row.generator.j, row.t},
                 "",
                 "",
                 "t' = " + std::to_string(row.step.target) + ", failed:" + why});
      }
      r.details["representatives"] = rep.representatives;
      r.details["label_disagreements"] = rep.label_disagreements();
    } else if (which == "block") {
      auto const a   = load_matrix(o.matrix, "--matrix1");
      auto const b   = load_matrix(o.matrix2, "--matrix2");
      auto const rep = block_product_check(a, b);
      r.instances    = rep.pairs;
      r.passed       = rep.pairs - rep.failures.size();
      for (auto const& [t, s] : rep.failures) {
        r.failures.push_back({"block", {t.i, t.j, s.i, s.j}, "", "", "bands do not commute"});
      }
    }
    return r;
  }

  RunReport scan_inject(Options const& o) {
    auto const m   = load_matrix(o.matrix);
    auto const rep = injectivity_scan(m, o.max_len, o.max_exp);
    RunReport  r;
    r.tag       = "scan inject";
    r.instances = rep.scanned;
    r.passed    = rep.scanned - rep.violations.size();
    for (auto const& w : rep.violations) {
      r.failures.push_back({"inject", {}, to_string(w), "", "trivial image or certificate failed"});
    }
    r.details["trivial_images"]     = rep.trivial_images;
    r.details["certificate_checks"] = rep.certificate_checks;
    r.details["certificate_failed"] = rep.certificate_failed;
    return r;
  }

  int strands(Options const& o, std::initializer_list<BraidText const*> words) {
    if (o.n > 0) {
      return o.n;
    }
    int n = 1;
    for (auto const* w : words) {
      n = std::max(n, min_strands(*w));
    }
    return n;
  }

  RunReport eq(Options const& o) {
    auto const u = parse_braid_text(o.word);
    auto const v = parse_braid_text(o.word2);
    int const  n = strands(o, {&u, &v});
    bool const equal = braid_equal(to_artin(u, n), to_artin(v, n));
    RunReport  r;
    r.tag = "eq";
    r.count(equal, {"eq", {}, to_string(u), to_string(v), "not equal"});
    r.details["n"]      = n;
    r.details["result"] = equal ? "equal" : "not equal";
    return r;
  }

  RunReport perm(Options const& o) {
    auto const w = parse_braid_text(o.word);
    int const  n = strands(o, {&w});
    RunReport  r;
    r.tag = "perm";
    r.count(true);
    auto const p          = permutation_image(to_artin(w, n));
    r.details["n"]        = n;
    r.details["cycles"]   = p.cycles();
    r.details["images"]   = p.images();
    return r;
  }

  RunReport hurwitz(Options const& o) {
    GroupContext ctx = GroupContext::free_group();
    std::optional<AnyTuple> tup;
    if (o.context == "coxeter") {
      ctx = GroupContext::universal_coxeter();
    } else if (o.context.rfind("perm:", 0) == 0) {
      ctx = perm_context_from_json(read_json_file(o.context.substr(5)));
      if (o.tuple_file.empty()) {
        tup = GroupTuple<Permutation>(ctx.images);
      }
    } else if (o.context != "free") {
      throw UsageError("--context must be free, coxeter or perm:<file>");
    }
    if (!tup) {
      tup = tuple_from_json(read_json_file(need(o.tuple_file, "--tuple")), ctx);
    }
    auto const text = parse_braid_text(o.word);
    RunReport  r;
    r.tag = "hurwitz";
    r.count(true);
    std::visit(
        [&](auto const& t) {
          int const       n = static_cast<int>(t.size());
          ArtinWord const w = to_artin(text, n);
          r.details["n"]          = n;
          r.details["word"]       = to_string(text);
          r.details["image"]      = tuple_to_json(AnyTuple(hurwitz_apply(t, w)));
          r.details["stabilizes"] = stabilizes(t, w);
        },
        *tup);
    return r;
  }

  RunReport factorize(Options const& o) {
    auto const w = parse_cox(o.word);
    auto const f = jk_factorize(w, o.j, o.k);
    RunReport  r;
    r.tag = "factorize";
    r.count(true);
    Json blocks = Json::array();
    for (std::size_t v = 0; v < f.blocks.size(); ++v) {
      blocks.push_back({{"block", to_string(f.blocks[v])},
                        {"length", f.blocks[v].size()},
                        {"long", is_long(f.blocks[v])},
                        {"critical", is_critical(f, v)}});
    }
    r.details["word"]       = to_string(w);
    r.details["separators"] = f.separators;
    r.details["blocks"]     = blocks;
    return r;
  }

  RunReport checkprop(std::string const& which, Options const& o) {
    bool const trans = which == "trans";
    RunReport  r;
    r.tag = "checkprop " + which;
    if (o.random > 0) {
      auto const run = trans ? run_prop_trans(o.seed, o.random) : run_prop7(o.seed, o.random);
      r.instances    = run.cases;
      r.passed       = run.cases - run.failures.size();
      for (auto const& c : run.failures) {
        r.failures.push_back({which, {c.band.i, c.band.j, static_cast<int>(c.m)},
                              to_string(c.word), "", c.report.detail});
      }
      r.details["seed"]     = o.seed;
      r.details["rejected"] = run.rejected;
      return r;
    }
    auto const w   = parse_cox(need(o.word, "--word"));
    auto const t   = parse_band(o.band);
    auto const rep = trans ? check_prop_trans(w, t, o.m) : check_prop7(w, t, o.m);
    if (rep.status == PropReport::Status::hypothesis_violation) {
      throw ScopeError("hypothesis not satisfied: " + rep.detail);
    }
    r.count(rep.passed(), {which, {t.i, t.j, static_cast<int>(o.m)}, to_string(w), "", rep.detail});
    r.details["image"] = to_string(act_band_on_cox(w, t, o.m));
    return r;
  }

  int export_cmd(Options const& o) {
    std::vector<Relation> rels;
    CoxeterDatum          m;
    if (o.family == "thm1" || o.family == "sec4") {
      m    = load_matrix(o.matrix);
      rels = o.family == "thm1" ? relations_thm1(m) : relations_sec4(m);
    } else if (o.family == "thm2") {
      auto const p = load_partition(o.partition);
      m            = partition_to_matrix(p);
      rels         = relations_thm2(p);
    } else if (o.family == "combing") {
      auto const p = load_partition(o.partition);
      m            = partition_to_matrix(p.extend_singleton());
      rels         = relations_combing(p);
    } else {
      throw UsageError("--family must be thm1, thm2, combing or sec4");
    }
    ExportFormat fmt = ExportFormat::plain;
    if (o.format == "gap-style") {
      fmt = ExportFormat::gap_style;
    } else if (o.format != "plain") {
      throw UsageError("--format must be plain or gap-style");
    }
    std::string const text = export_presentation(rels, m, fmt);
    if (o.json) {
      Json lines = Json::array();
      std::istringstream in(text);
      for (std::string line; std::getline(in, line);) {
        lines.push_back(line);
      }
      std::cout << Json{{"family", o.family}, {"format", o.format}, {"lines", lines}}.dump(2)
                << '\n';
    } else {
      std::cout << text;
    }
    return 0;
  }

  template <typename F>
  int timed(F&& f, Options const& o) {
    auto const t0 = std::chrono::steady_clock::now();
    RunReport  r  = f();
    r.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return emit(r, o);
  }

}  // namespace

int main(int argc, char** argv) {
  Options  o;
  CLI::App app{"Band generators, Hurwitz actions and presentation checks for braid groups"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--seed", o.seed, "Seed for randomized runs")->default_val(0);

  auto* verify = app.add_subcommand("verify", "Check relation families against the braid oracle");
  verify->require_subcommand(1);
  std::string which;
  auto add_verify = [&](char const* name, char const* help) {
    auto* c = verify->add_subcommand(name, help);
    c->callback([&, name] { which = name; });
    return c;
  };
  add_verify("bkl", "Band presentation of Br_n")->add_option("--n", o.n)->required();
  add_verify("thm1", "Commutation relations, large type")
      ->add_option("--matrix", o.matrix, "Coxeter datum JSON")->required();
  auto* thm2 = add_verify("thm2", "Relations for partition-type data");
  thm2->add_option("--partition", o.partition, "Partition JSON")->required();
  thm2->add_flag("--with-proof", o.with_proof, "Also check the identities used in the proof");
  add_verify("combing", "Relations of E_{P'n} and combing identities")
      ->add_option("--partition", o.partition, "Partition P' of 1..n-1")->required();
  add_verify("sec4", "Relations for data with all entries >= 2")
      ->add_option("--matrix", o.matrix)->required();
  add_verify("cosets", "Coset rewriting table")->add_option("--partition", o.partition)->required();
  auto* block = add_verify("block", "Cross-block commutation");
  block->add_option("--matrix1", o.matrix)->required();
  block->add_option("--matrix2", o.matrix2)->required();

  auto* scan = app.add_subcommand("scan", "Finite injectivity scans");
  scan->require_subcommand(1);
  auto* inject = scan->add_subcommand("inject", "Scan M-reduced expressions");
  inject->add_option("--matrix", o.matrix)->required();
  inject->add_option("--max-len", o.max_len)->default_val(3);
  inject->add_option("--max-exp", o.max_exp)->default_val(2);

  auto* eqc = app.add_subcommand("eq", "Braid equality");
  eqc->add_option("u", o.word)->required();
  eqc->add_option("v", o.word2)->required();
  eqc->add_option("--n", o.n, "Strand count (default: smallest that fits)");

  auto* permc = app.add_subcommand("perm", "Underlying permutation");
  permc->add_option("word", o.word)->required();
  permc->add_option("--n", o.n);

  auto* hur = app.add_subcommand("hurwitz", "Hurwitz action on a tuple");
  hur->add_option("--context", o.context, "free, coxeter or perm:<file>")->default_val("free");
  hur->add_option("--tuple", o.tuple_file, "Tuple JSON");
  hur->add_option("--word", o.word)->required();

  auto* fac = app.add_subcommand("factorize", "jk-factorization of a Coxeter word");
  fac->add_option("word", o.word)->required();
  fac->add_option("--j", o.j)->required();
  fac->add_option("--k", o.k)->required();

  auto* cp = app.add_subcommand("checkprop", "Band action on Coxeter words");
  cp->require_subcommand(1);
  std::string prop;
  for (char const* name : {"trans", "seven"}) {
    auto* c = cp->add_subcommand(name, name == std::string("trans")
                                           ? "Separators and critical blocks"
                                           : "Long subwords of the image");
    c->callback([&, name] { prop = name; });
    c->add_option("--word", o.word, "Coxeter word");
    c->add_option("--band", o.band, "i.j");
    c->add_option("--m", o.m)->default_val(3);
    c->add_option("--random", o.random, "Run this many seeded random cases instead");
  }

  auto* exp = app.add_subcommand("export", "Print a presentation");
  exp->add_option("--family", o.family)->required();
  exp->add_option("--format", o.format)->default_val("plain");
  exp->add_option("--matrix", o.matrix);
  exp->add_option("--partition", o.partition);

  try {
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const& e) {
    return app.exit(e);
  } catch (CLI::CallForAllHelp const& e) {
    return app.exit(e);
  } catch (CLI::ParseError const& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (verify->parsed()) {
      return timed([&] { return verify_family(which, o); }, o);
    }
    if (scan->parsed()) {
      return timed([&] { return scan_inject(o); }, o);
    }
    if (eqc->parsed()) {
      return timed([&] { return eq(o); }, o);
    }
    if (permc->parsed()) {
      return timed([&] { return perm(o); }, o);
    }
    if (hur->parsed()) {
      return timed([&] { return hurwitz(o); }, o);
    }
    if (fac->parsed()) {
      return timed([&] { return factorize(o); }, o);
    }
    if (cp->parsed()) {
      return timed([&] { return checkprop(prop, o); }, o);
    }
    if (exp->parsed()) {
      return export_cmd(o);
    }
  } catch (ScopeError const& e) {
    std::cerr << "scope error: " << e.what() << '\n';
    return 2;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
