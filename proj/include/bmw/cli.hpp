#pragma once

#include <filesystem>
#include <fstream>
#include <iostream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bmw/json_io.hpp"
#include "bmw/lkrep.hpp"
#include "bmw/tcoeff.hpp"
#include "bmw/verify.hpp"
#include "bmw/wordalg.hpp"

namespace bmw::cli {

// Bad input from the user: reported on stderr, exit code 2.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

inline std::shared_ptr<const RootSystem> load_type(const std::string& t) {
  try {
    return std::make_shared<const RootSystem>(RootSystem::build(t));
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string(e.what()) + "; expected A1.., D4.., E6, E7 or E8");
  }
}

// "1,1,0" or "(1,1,0)" -> a positive root of rs.
inline Root parse_root(const RootSystem& rs, std::string s) {
  std::erase_if(s, [](char c) { return c == '(' || c == ')' || c == ' '; });
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      v.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageError("bad root coefficient '" + tok + "'");
    }
  }
  if (static_cast<int>(v.size()) != rs.rank())
    throw UsageError("root needs " + std::to_string(rs.rank()) + " coefficients");
  Root r = Root::from_vector(v);
  if (!rs.is_positive_root(r)) throw UsageError(r.to_string() + " is not a positive root");
  return r;
}

inline Node parse_node(const RootSystem& rs, int n) {
  if (n < 1 || n > rs.rank())
    throw UsageError("node " + std::to_string(n) + " out of range 1.." + std::to_string(rs.rank()));
  return n - 1;
}

// "l=5/7,r=3/2"
inline std::pair<Rational, Rational> parse_point(const std::string& s) {
  std::optional<Rational> l, r;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw UsageError("bad specialization '" + part + "'");
    std::string key = part.substr(0, eq);
    Rational v;
    try {
      v = parse_rational(part.substr(eq + 1));
    } catch (const std::exception&) {
      throw UsageError("bad rational in '" + part + "'");
    }
    if (key == "l") l = v;
    else if (key == "r") r = v;
    else throw UsageError("unknown parameter '" + key + "'");
  }
  if (!l || !r) throw UsageError("--specialize needs both l=<rat> and r=<rat>");
  if (*l == 0 || *r == 0 || *r - 1 / *r == 0)
    throw UsageError("--specialize needs l != 0, r != 0 and r - 1/r != 0");
  return {*l, *r};
}

inline void emit(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

inline Json root_json(const Root& r) {
  Json a = Json::array();
  for (int k = 0; k < r.rank(); ++k) a.push_back(int(r[k]));
  return a;
}

inline Json word_combination_json(const WordCombination& c) {
  Json terms = Json::array();
  for (const auto& [w, s] : c.terms()) {
    Json letters = Json::array();
    for (const auto& l : w) letters.push_back(bmw::to_string(BmwWord{l}));
    terms.push_back({{"word", letters}, {"coeff", to_json(s)}});
  }
  return {{"terms", terms}};
}

// ---- T-coefficient cache on disk ----

inline std::filesystem::path cache_file(const std::string& dir, const RootSystem& rs) {
  return std::filesystem::path(dir) / ("tcoeff-" + rs.type().name() + "-generic.json");
}

inline void load_cache(const std::string& dir, const LKRepresentation<HeckeModel>& lk) {
  if (dir.empty()) return;
  std::ifstream in(cache_file(dir, lk.roots()));
  if (!in) return;
  Json j;
  try {
    j = Json::parse(in);
  } catch (const std::exception&) {
    return;  // an unreadable cache is ignored and rewritten
  }
  const auto& z0 = lk.model().z0();
  for (const auto& e : j.at("entries")) {
    std::vector<int> v = e.at("root").get<std::vector<int>>();
    Root b = Root::from_vector(v);
    lk.tcoeffs().preload(e.at("node").get<int>() - 1, lk.roots().require_index(b),
                         hecke_from_json(z0, e.at("value")));
  }
}

inline void save_cache(const std::string& dir, const LKRepresentation<HeckeModel>& lk) {
  if (dir.empty()) return;
  std::filesystem::create_directories(dir);
  Json entries = Json::array();
  for (const auto& [i, idx, v] : lk.tcoeffs().snapshot())
    entries.push_back({{"node", i + 1},
                       {"root", root_json(lk.roots().positive_roots()[idx])},
                       {"value", to_json(v)}});
  std::ofstream(cache_file(dir, lk.roots())) << Json{{"type", lk.roots().type().name()},
                                                     {"entries", entries}}
                                                    .dump()
                                             << "\n";
}

// ---- subcommands ----

struct Options {
  std::string type, word, root, suite = "all", specialize, theta, r, cache_dir, json_path;
  int node = 0;
  bool json = false;
  bool verbose = false;
};

inline int cmd_roots(const Options& o, std::ostream& out) {
  auto rs = load_type(o.type);
  ParabolicInfo c = rs->c_info();
  Json cn = Json::array();
  for (Node j : rs->c_nodes()) cn.push_back(j + 1);
  if (o.json) {
    Json roots = Json::array();
    for (const auto& b : rs->positive_roots()) roots.push_back(root_json(b));
    emit(out, {{"type", rs->type().name()},
               {"positive_roots", roots},
               {"highest_root", root_json(rs->highest_root())},
               {"c_nodes", cn},
               {"c_type", c.label()},
               {"weyl_c_order", c.order.get_str()}});
    return 0;
  }
  out << "type " << rs->type().name() << "\n";
  out << "positive roots (" << rs->num_positive() << "):\n";
  for (const auto& b : rs->positive_roots()) out << "  " << b.to_string() << "\n";
  out << "highest root " << rs->highest_root().to_string() << "\n";
  out << "C = {";
  for (std::size_t k = 0; k < cn.size(); ++k) out << (k ? "," : "") << cn[k].get<int>();
  out << "}  type " << c.label() << "  |W_C| = " << c.order.get_str() << "\n";
  return 0;
}

inline int cmd_reduce(const Options& o, std::ostream& out) {
  auto rs = load_type(o.type);
  BmwWord w;
  try {
    w = parse_word(o.word, rs->rank());
  } catch (const WordParseError& e) {
    throw UsageError(std::string("word: ") + e.what());
  }
  WordCombination r = reduce_word(rs, w);
  if (o.json) {
    emit(out, {{"type", rs->type().name()}, {"word", to_string(w)}, {"result", word_combination_json(r)}});
    return 0;
  }
  out << to_string(w) << " = " << r.to_string() << "\n";
  return 0;
}

inline int cmd_hbeta(const Options& o, std::ostream& out) {
  auto rs = load_type(o.type);
  Root b = parse_root(*rs, o.root);
  Node i = parse_node(*rs, o.node);
  if (rs->pairing_simple(i, b) != 0)
    throw UsageError("h_{b,i} needs (alpha_i, b) = 0; here it is " +
                     std::to_string(rs->pairing_simple(i, b)));
  Node h = h_beta_i(*rs, b, i);
  if (o.json) {
    emit(out, {{"type", rs->type().name()}, {"root", root_json(b)}, {"node", i + 1}, {"h", h + 1}});
    return 0;
  }
  out << "h_{" << b.to_string() << "," << i + 1 << "} = z" << h + 1 << "\n";
  return 0;
}

inline int cmd_tcoeff(const Options& o, std::ostream& out) {
  auto rs = load_type(o.type);
  Root b = parse_root(*rs, o.root);
  Node i = parse_node(*rs, o.node);
  Json j = {{"type", rs->type().name()}, {"root", root_json(b)}, {"node", i + 1}};
  std::string text;
  if (o.specialize.empty()) {
    if (!generic_supported(rs->type()))
      throw UsageError("generic T-coefficients are limited to A1..A5, D4, D5; pass --specialize");
    LKRepresentation<HeckeModel> lk{HeckeModel(rs)};
    load_cache(o.cache_dir, lk);
    const HeckeElement& v = lk.tcoeffs().t(i, b);
    save_cache(o.cache_dir, lk);
    j["mode"] = "generic";
    j["value"] = to_json(v);
    text = v.to_string();
  } else {
    auto [l0, r0] = parse_point(o.specialize);
    PointModel pm(rs, l0, r0);
    TCoefficients<PointModel> tc{pm};
    const Rational& v = tc.t(i, b);
    j["mode"] = Mode::specialized(l0, r0).name();
    j["value"] = rational_to_string(v);
    text = v.get_str();
  }
  if (o.json) {
    emit(out, j);
    return 0;
  }
  out << "T_{" << i + 1 << "," << b.to_string() << "} = " << text << "\n";
  return 0;
}

inline int cmd_matrices(const Options& o, std::ostream& out) {
  auto rs = load_type(o.type);
  Json mats = Json::array();
  std::ostringstream text;
  auto list_entries = [&](int i, const auto& m, auto&& show) {
    text << "sigma_" << i + 1 << ":\n";
    for (int c = 0; c < m.size(); ++c)
      for (const auto& [r, v] : m.column(c))
        text << "  [" << rs->positive_roots()[r].to_string() << ", "
             << rs->positive_roots()[c].to_string() << "] " << show(v) << "\n";
  };
  Json head = {{"type", rs->type().name()}};
  if (o.theta.empty()) {
    if (!o.r.empty()) throw UsageError("--r only applies with --theta lk");
    if (!generic_supported(rs->type()))
      throw UsageError("generic matrices are limited to A1..A5, D4, D5; use --theta lk");
    LKRepresentation<HeckeModel> lk{HeckeModel(rs)};
    load_cache(o.cache_dir, lk);
    const Json zero = to_json(lk.model().zero());
    for (Node i = 0; i < rs->rank(); ++i) {
      const auto& m = lk.sigma(i);
      mats.push_back(matrix_to_json(m, zero, [](const HeckeElement& h) { return to_json(h); }));
      list_entries(i, m, [](const HeckeElement& h) { return h.to_string(); });
    }
    save_cache(o.cache_dir, lk);
    head["mode"] = "generic";
  } else {
    if (o.theta != "lk") throw UsageError("only --theta lk is available");
    ThetaModel th(rs, classical_lk(*rs));
    LKRepresentation<ThetaModel> lk{th};
    std::optional<Rational> r0;
    if (!o.r.empty()) {
      try {
        r0 = parse_rational(o.r);
      } catch (const std::exception&) {
        throw UsageError("bad rational for --r: " + o.r);
      }
      if (*r0 == 0 || *r0 - 1 / *r0 == 0) throw UsageError("--r needs r != 0 and r - 1/r != 0");
    }
    auto at = [&](const ThetaMatrix& mm) {
      ThetaScalar s = mm(0, 0);
      return r0 ? s.substitute<RVar>(RatFunc(*r0)) : s;
    };
    const Json zero = to_json(ThetaScalar());
    for (Node i = 0; i < rs->rank(); ++i) {
      const auto& m = lk.sigma(i);
      mats.push_back(matrix_to_json(m, zero, [&](const ThetaMatrix& mm) { return to_json(at(mm)); }));
      list_entries(i, m, [&](const ThetaMatrix& mm) { return at(mm).to_string(); });
    }
    head["mode"] = r0 ? "theta lk, r=" + r0->get_str() : std::string("theta lk");
  }
  if (o.json) {
    head["sigma"] = mats;
    if (o.json_path.empty()) {
      emit(out, head);
    } else {
      std::ofstream f(o.json_path);
      if (!f) throw UsageError("cannot write " + o.json_path);
      emit(f, head);
      out << "wrote " << o.json_path << "\n";
    }
    return 0;
  }
  out << "type " << rs->type().name() << " [" << head["mode"].get<std::string>() << "]\n"
      << text.str();
  return 0;
}

inline int cmd_verify(const Options& o, std::ostream& out) {
  auto rs = load_type(o.type);
  SuiteReport rep;
  if (o.suite == "a2_dimension") {
    if (rs->type().name() != "A2") throw UsageError("suite a2_dimension is for type A2");
    if (!o.specialize.empty()) {
      auto [l0, r0] = parse_point(o.specialize);
      rep = a2_dimension_check(l0, r0);
    } else {
      rep = a2_dimension_check();
    }
  } else {
    Suite s;
    try {
      s = parse_suite(o.suite);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
    Mode mode = Mode::make_generic();
    if (!o.specialize.empty()) {
      auto [l0, r0] = parse_point(o.specialize);
      mode = Mode::specialized(l0, r0);
    } else if (!generic_supported(rs->type())) {
      throw UsageError("generic mode supports A1..A5, D4, D5; pass --specialize l=5/7,r=3/2 for " +
                       rs->type().name());
    }
    rep = run_suite(s, o.type, mode);
  }
  if (o.json)
    emit(out, rep.to_json());
  else
    out << rep.to_text(o.verbose);
  return rep.all_pass() ? 0 : 1;
}

inline int cmd_dims(const Options& o, std::ostream& out) {
  auto rs = load_type(o.type);
  DimsReport d = dims_report(*rs);
  if (o.json)
    emit(out, d.to_json());
  else
    out << d.to_text();
  return 0;
}

// Parses args (without the program name), runs one subcommand and returns
// the exit code: 0 success, 1 a check failed, 2 usage error.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact BMW algebra computations via generalized Lawrence-Krammer representations",
               "bmw"};
  app.require_subcommand(1, 1);
  Options o;
  app.add_option("--cache-dir", o.cache_dir, "Directory for memoized T-coefficients (off by default)");

  auto type_opt = [&](CLI::App* s) { s->add_option("--type", o.type, "Dynkin type, e.g. A3, D4, E8")->required(); };
  auto json_flag = [&](CLI::App* s) { s->add_flag("--json", o.json, "Print JSON"); };

  auto* roots = app.add_subcommand("roots", "Positive roots, highest root and the node set C");
  type_opt(roots);
  json_flag(roots);

  auto* reduce = app.add_subcommand("reduce", "Rewrite a word in g<i>, G<i>, e<i> to short words");
  type_opt(reduce);
  reduce->add_option("--word", o.word, "Whitespace-separated tokens g<i>, G<i>, e<i>")->required();
  json_flag(reduce);

  auto* tcoeff = app.add_subcommand("tcoeff", "The coefficient T_{i,b}");
  type_opt(tcoeff);
  tcoeff->add_option("--node", o.node, "Node i (1-based)")->required();
  tcoeff->add_option("--root", o.root, "Root coefficients c1,...,cn")->required();
  tcoeff->add_option("--specialize", o.specialize, "Evaluate at l=<rat>,r=<rat>");
  json_flag(tcoeff);

  auto* hbeta = app.add_subcommand("hbeta", "The generator h_{b,i} of Z0");
  type_opt(hbeta);
  hbeta->add_option("--root", o.root, "Root coefficients c1,...,cn")->required();
  hbeta->add_option("--node", o.node, "Node i (1-based)")->required();
  json_flag(hbeta);

  auto* matrices = app.add_subcommand("matrices", "The matrices sigma_i");
  type_opt(matrices);
  matrices->add_option("--theta", o.theta, "Push through a representation of Z0 (only: lk)");
  matrices->add_option("--r", o.r, "Value of r for --theta lk");
  auto* mj = matrices->add_option("--json", o.json_path, "Print JSON, or write it to the given file")
                 ->expected(0, 1);

  auto* verify = app.add_subcommand("verify", "Run a relation suite");
  type_opt(verify);
  verify->add_option("--suite", o.suite,
                     "braid, essential, eiproj, table1, zaction, tau_monoid, all or a2_dimension");
  verify->add_option("--specialize", o.specialize, "Check at l=<rat>,r=<rat> instead of generically");
  verify->add_flag("--verbose", o.verbose, "List passing checks too");
  json_flag(verify);

  auto* dims = app.add_subcommand("dims", "Dimension formulas");
  type_opt(dims);
  json_flag(dims);

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    std::string help;
    for (const auto* s : app.get_subcommands()) help = " " + s->get_name();
    err << "bmw: " << e.what() << "\nrun 'bmw" << help << " --help' for usage\n";
    return 2;
  }
  if (mj->count() > 0) o.json = true;

  try {
    if (*roots) return cmd_roots(o, out);
    if (*reduce) return cmd_reduce(o, out);
    if (*tcoeff) return cmd_tcoeff(o, out);
    if (*hbeta) return cmd_hbeta(o, out);
    if (*matrices) return cmd_matrices(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*dims) return cmd_dims(o, out);
  } catch (const UsageError& e) {
    err << "bmw: " << e.what() << "\nrun 'bmw --help' for usage\n";
    return 2;
  } catch (const std::exception& e) {
    err << "bmw: error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace bmw::cli
