#pragma once

// Command-line front end. run_cli() is kept separate from main() so the test
// suite can drive it in-process with string streams.

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "setumbral/setumbral.hpp"

namespace setumbral::cli {

enum ExitCode : int { kOk = 0, kVerifyFailed = 1, kUsage = 2, kCap = 3 };

using Json = nlohmann::ordered_json;

struct RunConfig {
  std::string command;
  std::string name;  // oracle / verify selector
  std::string graph_path;
  std::optional<Mask> subset;
  std::string basis;
  std::string blocks;
  std::optional<int> k;
  std::string x = "";
  std::string a = "1";
  std::string mode = "derivative";
  long y = 2;
  int u = 0;
  int v = -1;
  std::string format = "json";
  std::optional<int> cap;
};

namespace detail {

inline Json coeffs(const Poly& p) {
  Json out = Json::array();
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  for (const Rational& c : p.coefficients()) out.push_back(to_string(c));
  return out;
}

inline Json rationals(std::span<const Rational> v) {
  Json out = Json::array();
  for (const Rational& c : v) out.push_back(to_string(c));
  return out;
}

inline std::vector<int> parse_blocks(const std::string& text) {
  std::vector<int> sizes;
  if (text.empty()) throw parse_error("--blocks is required, e.g. --blocks 2,1");
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t used = 0;
    int s = 0;
    try {
      s = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size()) throw parse_error("bad block size '" + item + "'");
    if (s < 1) throw parse_error("block sizes must be >= 1");
    sizes.push_back(s);
  }
  return sizes;
}

// Rough work estimates printed when a cap is raised.
inline double bell_estimate(int n) {
  std::vector<double> row{1.0};
  for (int i = 1; i <= n; ++i) {
    std::vector<double> next{row.back()};
    for (double r : row) next.push_back(next.back() + r);
    row = std::move(next);
  }
  return row.front();
}

class Runner {
 public:
  Runner(const RunConfig& cfg, std::ostream& out, std::ostream& err) : cfg_(cfg), out_(out), err_(err) {}

  int run() {
    if (cfg_.format != "json" && cfg_.format != "table") throw parse_error("--format must be json or table");
    doc_["command"] = cfg_.command;
    doc_["input"] = Json::object();
    doc_["result"] = Json::object();
    doc_["checks"] = Json::array();
    int code = kOk;
    if (cfg_.command == "chromatic") code = chromatic();
    else if (cfg_.command == "expand") code = expand_cmd();
    else if (cfg_.command == "verify") code = verify();
    else if (cfg_.command == "oracle") code = oracle();
    else if (cfg_.command == "abel") code = abel();
    emit();
    return code;
  }

 private:
  const RunConfig& cfg_;
  std::ostream& out_;
  std::ostream& err_;
  Json doc_;
  std::optional<Graph> graph_;

  int cap(int fallback, const char* what, const std::function<double(int)>& cost) {
    if (!cfg_.cap) return fallback;
    const int c = *cfg_.cap;
    if (c < 1) throw precondition_error("--cap must be positive");
    if (c > fallback) {
      err_ << "warning: raising " << what << " cap from " << fallback << " to " << c
           << "; estimated work ~" << static_cast<long long>(std::min(cost(c), 9.0e18)) << " steps\n";
    }
    return c;
  }

  const Graph& graph() {
    if (!graph_) {
      if (cfg_.graph_path.empty()) throw parse_error("--graph is required for " + cfg_.command);
      graph_ = load_graph(cfg_.graph_path);
      doc_["input"]["graph"] = cfg_.graph_path;
      doc_["input"]["n"] = graph_->order();
      doc_["input"]["m"] = graph_->edge_count();
    }
    return *graph_;
  }

  Mask subset() {
    const Graph& g = graph();
    const Mask s = cfg_.subset.value_or(g.vertices());
    if ((s & ~g.vertices()) != 0) {
      throw precondition_error("--subset " + std::to_string(s) + " has vertices outside 0.." +
                               std::to_string(g.order() - 1));
    }
    doc_["input"]["subset"] = s;
    return s;
  }

  BlockPartition blocks() {
    BlockPartition b(parse_blocks(cfg_.blocks));
    doc_["input"]["blocks"] = b.sizes();
    return b;
  }

  void add_check(const std::string& name, bool pass, const Json& detail = Json()) {
    Json c;
    c["name"] = name;
    c["pass"] = pass;
    if (!detail.is_null()) c["detail"] = detail;
    doc_["checks"].push_back(std::move(c));
  }

  int status_from_checks() const {
    for (const auto& c : doc_["checks"])
      if (!c["pass"].get<bool>()) return kVerifyFailed;
    return kOk;
  }

  int chromatic() {
    const Graph& g = graph();
    const Mask s = subset();
    const Poly p = chromatic_poly(restrict(g, s));
    doc_["result"]["coefficients"] = coeffs(p);
    doc_["result"]["polynomial"] = p.to_string();
    if (!cfg_.x.empty()) {
      const Rational x = parse_rational(cfg_.x);
      doc_["input"]["x"] = to_string(x);
      doc_["result"]["value"] = to_string(p(x));
    }
    return kOk;
  }

  int expand_cmd() {
    const Graph& g = graph();
    const Mask s = subset();
    const BinomialFamily fam = BinomialFamily::parse(cfg_.basis.empty() ? "monomial" : cfg_.basis);
    doc_["input"]["basis"] = fam.to_string();
    const int limit = cap(kMaxExpansionSubset, "expand |S|", bell_estimate);
    // Only G|_S matters; restricting first keeps the table at 2^{|S|} entries.
    const Graph h = restrict(g, s);
    const auto chi = chromatic_setmap(h);
    const Expansion e = expand(chi, h.vertices(), fam, limit);

    // Report coefficients under the caller's vertex labels.
    std::vector<int> label;
    for (int v = 0; v < g.order(); ++v)
      if ((s >> v) & 1U) label.push_back(v);
    Json per = Json::array();
    for (std::size_t t = 1; t < e.coefficients.ground().subset_count(); ++t) {
      Mask original = 0;
      for (Mask r = static_cast<Mask>(t); r != 0; r &= r - 1) original |= Mask{1} << label[static_cast<std::size_t>(std::countr_zero(r))];
      Json row;
      row["subset"] = original;
      row["value"] = to_string(e.coefficients[static_cast<Mask>(t)]);
      per.push_back(std::move(row));
    }
    const bool ok = reconstruct(e) == chi[h.vertices()];
    doc_["result"]["chromatic"] = coeffs(chi[h.vertices()]);
    doc_["result"]["coefficients"] = std::move(per);
    doc_["result"]["c"] = rationals(e.by_length);
    doc_["result"]["reconstructs"] = ok;
    add_check("reconstructs", ok);
    return status_from_checks();
  }

  static std::vector<BinomialFamily> standard_families() {
    return {BinomialFamily::monomial(),      BinomialFamily::falling(Rational(1)),
            BinomialFamily::falling(Rational(-1)), BinomialFamily::falling(Rational(2)),
            BinomialFamily::rising(),        BinomialFamily::abel(Rational(0)),
            BinomialFamily::abel(Rational(1)),     BinomialFamily::log_family()};
  }

  CexpForm cexp_form() const {
    if (cfg_.mode == "derivative") return CexpForm::derivative;
    if (cfg_.mode == "evaluation") return CexpForm::evaluation;
    throw parse_error("--mode must be derivative or evaluation");
  }

  void verify_graph_check(const std::string& name) {
    const Graph& g = graph();
    const Mask s = subset();
    auto c = [&](int fallback) { return cap(fallback, name.c_str(), [](int n) { return bell_estimate(n) * std::pow(2.0, n); }); };
    if (name == "binomial") {
      const int limit = cap(kMaxBinomialCheckGround, "binomial ground size", [](int n) { return std::pow(3.0, n) * n * n; });
      add_check(name, check_binomial_type(chromatic_setmap(restrict(g, s)), limit));
    } else if (name == "mix") {
      const Graph h = restrict(g, s);
      const auto chi = chromatic_setmap(h);
      const int limit = cap(kMaxExpansionSubset, "expand |S|", bell_estimate);
      std::vector<BinomialFamily> fams;
      if (cfg_.basis.empty()) fams = standard_families();
      else fams.push_back(BinomialFamily::parse(cfg_.basis));
      for (const auto& fam : fams) add_check("mix " + fam.to_string(), reconstruct(expand(chi, h.vertices(), fam, limit)) == chi[h.vertices()]);
    } else if (name == "exp91") {
      add_check(name, verify_exp91(g, s, c(6)));
    } else if (name == "exp92") {
      add_check(name, verify_exp92(g, s, c(8)));
    } else if (name == "exp93") {
      add_check(name, verify_exp93(g, s, c(8)));
    } else if (name == "cexp") {
      const Rational a = parse_rational(cfg_.a);
      doc_["input"]["a"] = to_string(a);
      doc_["input"]["mode"] = cfg_.mode;
      add_check(name, verify_cexp(g, s, a, cexp_form(), c(8)));
    } else if (name == "stanley") {
      add_check(name, verify_stanley(g, s, c(8)));
    } else if (name == "small-values") {
      add_check(name, verify_small_values(g, s, c(12)));
    } else if (name == "unique-sink") {
      add_check(name, verify_unique_sink(g, s, c(8)));
    } else if (name == "sink-source") {
      add_check(name, verify_sink_source(g, s, c(8)));
    } else if (name == "power") {
      const Rational x = parse_rational(cfg_.x.empty() ? "1" : cfg_.x);
      doc_["input"]["x"] = to_string(x);
      doc_["input"]["y"] = cfg_.y;
      const int limit = cap(kMaxBinomialCheckGround, "power ground size", [](int n) { return std::pow(3.0, n); });
      add_check(name, setmap_power_identity(chromatic_setmap(restrict(g, s)), x, cfg_.y, limit));
    } else {
      throw parse_error("unknown check '" + name + "'");
    }
  }

  int verify() {
    static const std::vector<std::string> graph_checks{"binomial", "mix",          "exp91",       "exp92",
                                                       "exp93",    "cexp",         "stanley",     "small-values",
                                                       "unique-sink", "sink-source", "power"};
    const std::string& name = cfg_.name;
    if (name.empty()) throw parse_error("verify needs a check name");
    doc_["input"]["check"] = name;
    if (name == "sm3" || name == "pfc") {
      const BlockPartition b = blocks();
      const Mask pi = cfg_.subset.value_or(b.all());
      if ((pi & ~b.all()) != 0) throw precondition_error("--subset names blocks outside the partition");
      doc_["input"]["subset"] = pi;
      const int limit = cap(kMaxPartitionSumBlocks, name.c_str(), bell_estimate);
      if (name == "sm3") {
        add_check(name, verify_sm3(b, pi, limit));
      } else if (cfg_.k) {
        doc_["input"]["k"] = *cfg_.k;
        add_check("pfc k=" + std::to_string(*cfg_.k), verify_pfc(b, pi, *cfg_.k, limit));
      } else {
        for (int k = 1; k <= popcount(pi); ++k) add_check("pfc k=" + std::to_string(k), verify_pfc(b, pi, k, limit));
      }
    } else if (name == "abel-binomial") {
      const BlockPartition b = blocks();
      add_check(name, check_binomial_type(abel_setmap(b)));
    } else if (name == "all") {
      for (const auto& n : graph_checks) {
        if (n == "cexp") continue;  // parametrized; run it by name
        verify_graph_check(n);
      }
    } else if (std::find(graph_checks.begin(), graph_checks.end(), name) != graph_checks.end()) {
      verify_graph_check(name);
    } else {
      throw parse_error("unknown check '" + name + "'");
    }
    int passed = 0, failed = 0;
    for (const auto& c : doc_["checks"]) (c["pass"].get<bool>() ? passed : failed)++;
    doc_["result"]["passed"] = passed;
    doc_["result"]["failed"] = failed;
    return status_from_checks();
  }

  int oracle() {
    const std::string& name = cfg_.name;
    if (name.empty()) throw parse_error("oracle needs a count name");
    doc_["input"]["oracle"] = name;
    std::uint64_t count = 0;
    if (name == "tail-forests") {
      const BlockPartition b = blocks();
      if (!cfg_.k) throw parse_error("tail-forests needs --k");
      doc_["input"]["k"] = *cfg_.k;
      count = count_tail_forests(b, *cfg_.k);
    } else {
      const Graph& g = graph();
      const Mask s = subset();
      const Graph h = restrict(g, s);
      const int edge_cap = cap(kMaxEnumeratedEdges, "orientation edge count", [](int m) { return std::pow(2.0, m); });
      if (name == "colorings") {
        if (cfg_.x.empty()) throw parse_error("colorings needs --x");
        const Rational x = parse_rational(cfg_.x);
        if (!is_integer(x) || x < 0) throw precondition_error("colorings needs a nonnegative integer --x");
        doc_["input"]["x"] = to_string(x);
        count = count_proper_colorings(h, x.get_num().get_si());
      } else if (name == "acyclic") {
        count = count_acyclic_orientations(h, edge_cap);
      } else if (name == "stable-partitions") {
        count = count_stable_partitions(h, cap(kMaxStablePartitionOrder, "stable-partition order", bell_estimate));
      } else if (name == "unique-sink") {
        doc_["input"]["v"] = cfg_.v;
        count = count_acyclic_unique_sink(h, vertex_in(h, cfg_.v, "--v"), edge_cap);
      } else if (name == "sink-source") {
        doc_["input"]["u"] = cfg_.u;
        doc_["input"]["v"] = cfg_.v;
        count = count_acyclic_sink_source(h, vertex_in(h, cfg_.u, "--u"), vertex_in(h, cfg_.v, "--v"), edge_cap);
      } else {
        throw parse_error("unknown oracle '" + name + "'");
      }
    }
    doc_["result"]["count"] = count;
    return kOk;
  }

  // Maps an original vertex label to its index in G|_S.
  int vertex_in(const Graph&, int v, const char* flag) {
    const Mask s = cfg_.subset.value_or(graph().vertices());
    if (v < 0 || v >= graph().order() || !((s >> v) & 1U)) {
      throw precondition_error(std::string(flag) + " must name a vertex of the chosen subset");
    }
    return popcount(s & ((Mask{1} << v) - 1));
  }

  int abel() {
    const BlockPartition b = blocks();
    const Mask pi = cfg_.subset.value_or(b.all());
    if ((pi & ~b.all()) != 0) throw precondition_error("--subset names blocks outside the partition");
    doc_["input"]["subset"] = pi;
    const int limit = cap(kMaxAbelBlocks, "abel block count", [](int n) { return std::pow(2.0, n); });
    const auto f = abel_setmap(b, limit);
    doc_["result"]["length"] = popcount(pi);
    doc_["result"]["weight"] = b.weight(pi);
    doc_["result"]["coefficients"] = coeffs(f[pi]);
    doc_["result"]["polynomial"] = f[pi].to_string();
    if (!cfg_.x.empty()) {
      const Rational x = parse_rational(cfg_.x);
      doc_["input"]["x"] = to_string(x);
      doc_["result"]["value"] = to_string(f[pi](x));
    }
    return kOk;
  }

  static std::string scalar(const Json& j) {
    if (j.is_string()) return j.get<std::string>();
    if (j.is_array()) {
      std::string s = "[";
      for (std::size_t i = 0; i < j.size(); ++i) s += (i ? " " : "") + scalar(j[i]);
      return s + "]";
    }
    return j.dump();
  }

  void emit() {
    if (cfg_.format == "json") {
      out_ << doc_.dump(2) << '\n';
      return;
    }
    out_ << "command: " << cfg_.command << '\n';
    for (const auto& [key, val] : doc_["input"].items()) out_ << "input." << key << ": " << scalar(val) << '\n';
    for (const auto& [key, val] : doc_["result"].items()) {
      if (key == "coefficients" && val.is_array() && !val.empty() && val[0].is_object()) {
        for (const auto& row : val) out_ << "coefficient[" << row["subset"].dump() << "]: " << scalar(row["value"]) << '\n';
      } else {
        out_ << key << ": " << scalar(val) << '\n';
      }
    }
    for (const auto& c : doc_["checks"]) out_ << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["name"].get<std::string>() << '\n';
  }
};

}  // namespace detail

/// Parses args (without the program name) and runs one command.
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chromatic set maps, binomial-type expansions and their combinatorial checks", "setumbral"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "Output format: json (default) or table");
    sub->add_option("--cap", cfg.cap, "Override the size cap of the command (prints a cost estimate)");
  };
  auto add_graph = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--graph", cfg.graph_path, "Graph file: 'n m' then m lines 'u v' (0 <= u < v < n), '#' comments");
    if (required) opt->required();
    sub->add_option("--subset", cfg.subset,
                    "Decimal vertex bit-set, e.g. 5 = {0,2}; default is every vertex (or every block)");
  };

  auto* chromatic = app.add_subcommand("chromatic", "Chromatic polynomial of G restricted to a subset");
  add_graph(chromatic, true);
  chromatic->add_option("--x", cfg.x, "Also evaluate at this rational");
  add_common(chromatic);

  auto* expand = app.add_subcommand("expand", "Expand the chromatic set map in a binomial-type family");
  add_graph(expand, true);
  expand->add_option("--basis", cfg.basis, "monomial | falling:a | rising | abel:a | logfamily (default monomial)");
  add_common(expand);

  auto* verify = app.add_subcommand(
      "verify",
      "Run a check: binomial, mix, exp91, exp92, exp93, cexp, stanley, small-values, unique-sink, sink-source, "
      "power, all (graph checks); sm3, pfc, abel-binomial (block checks)");
  verify->add_option("name", cfg.name, "Check name");
  verify->add_option("--check", cfg.name, "Check name (same as the positional argument)");
  add_graph(verify, false);
  verify->add_option("--basis", cfg.basis, "Family for 'mix' (default: all standard families)");
  verify->add_option("--blocks", cfg.blocks, "Block sizes s1,s2,... for sm3 / pfc / abel-binomial");
  verify->add_option("--k", cfg.k, "Block count for pfc (default: every k)");
  verify->add_option("--a", cfg.a, "Parameter a for cexp (rational, default 1)");
  verify->add_option("--mode", cfg.mode, "cexp form: derivative (default) or evaluation");
  verify->add_option("--x", cfg.x, "x0 for the power identity (default 1)");
  verify->add_option("--y", cfg.y, "y0 >= 1 for the power identity (default 2)");
  add_common(verify);

  auto* oracle = app.add_subcommand(
      "oracle", "Brute-force count: colorings, acyclic, stable-partitions, unique-sink, sink-source, tail-forests");
  oracle->add_option("name", cfg.name, "Count name");
  add_graph(oracle, false);
  oracle->add_option("--x", cfg.x, "Number of colors for 'colorings'");
  oracle->add_option("--u", cfg.u, "Source vertex for sink-source (default 0)");
  oracle->add_option("--v", cfg.v, "Sink vertex for unique-sink / sink-source");
  oracle->add_option("--blocks", cfg.blocks, "Block sizes for tail-forests");
  oracle->add_option("--k", cfg.k, "Component count for tail-forests");
  add_common(oracle);

  auto* abel = app.add_subcommand("abel", "Abel set map x(x + |pi|)^(l(pi)-1) on subsets of blocks");
  abel->add_option("--blocks", cfg.blocks, "Block sizes s1,s2,...")->required();
  abel->add_option("--subset", cfg.subset, "Decimal bit-set of blocks; default all");
  abel->add_option("--x", cfg.x, "Also evaluate at this rational");
  add_common(abel);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  cfg.command = app.get_subcommands().front()->get_name();
  if (cfg.v < 0 && cfg.name == "sink-source") cfg.v = 1;
  if (cfg.v < 0) cfg.v = 0;
  try {
    detail::Runner runner(cfg, out, err);
    return runner.run();
  } catch (const cap_exceeded& e) {
    err << "error: " << e.what() << " (raise with --cap)\n";
    return kCap;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const precondition_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace setumbral::cli
