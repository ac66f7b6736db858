#include "ghoststrata/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "ghoststrata/arith.hpp"
#include "ghoststrata/errors.hpp"
#include "ghoststrata/ghosts.hpp"
#include "ghoststrata/graph_io.hpp"
#include "ghoststrata/props.hpp"

namespace ghoststrata {
namespace {

using nlohmann::json;

json rational_json(const Rational& r) {
  return {{"numerator", r.numerator()}, {"denominator", r.denominator()}};
}

std::string rational_text(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::string rational_text(const json& j) {
  if (j.is_null()) return "none";
  return rational_text(Rational(j["numerator"].get<std::int64_t>(), j["denominator"].get<std::int64_t>()));
}

json graph_summary(const Multigraph& g) {
  return {{"vertices", g.vertex_count()},
          {"edges", g.edge_count()},
          {"betti1", betti1(g)},
          {"tree_like", is_tree_like(g)}};
}

template <class T>
std::string joined(const std::vector<T>& xs, const char* sep = ",") {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? sep : "") << xs[i];
  return os.str();
}

std::string joined(const json& xs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < xs.size(); ++i) os << (i ? "," : "") << xs[i].dump();
  return os.str();
}

std::string hex(const std::string& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (unsigned char c : bytes) {
    out += digits[c >> 4];
    out += digits[c & 15];
  }
  return out;
}

std::string edge_list(const DecoratedGraph& d) {
  std::ostringstream os;
  const auto& g = d.base();
  for (EdgeId e = 0; e < g.edge_count(); ++e)
    os << (e ? " " : "") << g.ends(e).tail << '-' << g.ends(e).head << ':' << d.m().on_edge(e);
  return os.str();
}

json genus_section(const DecoratedGraph& d, std::optional<std::int64_t> k) {
  std::optional<std::vector<std::uint32_t>> labels = d.genus();
  json out;
  if (k) {
    labels = genus_labeling(d, *k);
    out["source"] = "k";
    out["k"] = reduce_mod(*k, d.ell());
    out["admissible"] = labels.has_value();
  } else {
    if (!labels) return nullptr;
    out["source"] = "input";
  }
  out["labels"] = labels ? json(*labels) : json(nullptr);
  if (labels) {
    const auto g = total_genus(d.with_genus(labels));
    out["total_genus"] = g;
    out["root_count"] = root_count(g, d.ell()).str();
  }
  return out;
}

}  // namespace

json analysis_report(const DecoratedGraph& d, std::optional<std::int64_t> k) {
  json r;
  r["input"] = to_json(d);
  r["ell"] = d.ell();

  const auto g0 = gamma0(d);
  r["gamma0"] = graph_summary(g0.graph.base());

  json primes = json::array();
  for (const auto& [p, e] : factorize(d.ell())) {
    const auto gp = gamma_p(d, p);
    json entry{{"p", p}, {"exponent", e}, {"gamma_p", graph_summary(gp.graph)}, {"tree_like", is_tree_like(gp.graph)}};
    primes.push_back(std::move(entry));
  }
  r["primes"] = std::move(primes);
  r["generated_by_qr"] = generated_by_qr(d);

  r["ghost_group_order"] = ghost_order(d).str();
  r["qr_order"] = qr_order(d).str();
  r["stratum_age"] = nullptr;
  r["junior"] = nullptr;
  r["witness"] = nullptr;
  if (is_prime(d.ell())) {
    const auto s = stratum_age(d);
    if (s.age) {
      r["stratum_age"] = rational_json(*s.age);
      r["witness"] = s.witness->edge_values();
    }
    r["junior"] = s.age.has_value() && *s.age < Rational(1);
  }

  r["codimension"] = codimension(d);
  r["multidegree"] = multidegree(d).values();
  r["admissible_k"] = admissible_k(d);

  if (auto w = vine_witness(d)) {
    std::vector<int> side(w->side.begin(), w->side.end());
    r["vine_witness"] = {{"n", w->n()}, {"crossing", w->crossing}, {"side", side}};
  } else {
    r["vine_witness"] = nullptr;
  }
  r["genus"] = genus_section(d, k);
  return r;
}

std::string format_analysis(const json& r) {
  std::ostringstream os;
  auto line = [&](const std::string& key, const std::string& value) {
    os << std::left << std::setw(18) << key << value << '\n';
  };
  auto summary = [](const json& s) {
    return s["vertices"].dump() + " vertices, " + s["edges"].dump() + " edges, b1 " + s["betti1"].dump() +
           (s["tree_like"].get<bool>() ? ", tree-like" : "");
  };
  auto opt = [](const json& j) { return j.is_null() ? std::string("n/a") : j.is_string() ? j.get<std::string>() : j.dump(); };

  line("input", r["input"].dump());
  line("ell", r["ell"].dump());
  line("gamma0", summary(r["gamma0"]));
  for (const auto& p : r["primes"])
    line("gamma_" + p["p"].dump(), summary(p["gamma_p"]) + (p["tree_like"].get<bool>() ? "" : ", not tree-like"));
  line("generated by qr", r["generated_by_qr"].get<bool>() ? "yes" : "no");
  line("ghost group order", opt(r["ghost_group_order"]));
  line("qr order", opt(r["qr_order"]));
  line("stratum age", r["junior"].is_null() ? "n/a" : rational_text(r["stratum_age"]));
  line("junior", r["junior"].is_null() ? "n/a" : r["junior"].get<bool>() ? "yes" : "no");
  line("witness", r["witness"].is_null() ? "none" : "(" + joined(r["witness"]) + ")");
  line("codimension", r["codimension"].dump());
  line("multidegree", "(" + joined(r["multidegree"]) + ")");
  line("admissible k", "{" + joined(r["admissible_k"]) + "}");
  const auto& w = r["vine_witness"];
  line("vine witness", w.is_null() ? "none" : w["n"].dump() + "-vine across edges {" + joined(w["crossing"]) + "}");
  const auto& g = r["genus"];
  if (!g.is_null()) {
    if (g["source"] == "k") line("k", g["k"].dump() + (g["admissible"].get<bool>() ? ", admissible" : ", not admissible"));
    if (!g["labels"].is_null()) {
      line("genus labels", "(" + joined(g["labels"]) + ")");
      line("total genus", g["total_genus"].dump());
      line("root count", g["root_count"].get<std::string>());
    }
  }
  return os.str();
}

std::string classes_tsv(const std::vector<StratumClass>& classes) {
  std::ostringstream os;
  os << "edges\tvertices\tvine\tage\tmaximal\tadmissible_k\twitness\torbit_size\tmin_total_genus\tgraph\n";
  for (const auto& c : classes) {
    os << c.graph.base().edge_count() << '\t' << c.graph.base().vertex_count() << '\t'
       << (c.vine ? "(" + joined(*c.vine) + ")" : "-") << '\t' << rational_text(c.age) << '\t'
       << (c.maximal ? "yes" : "no") << '\t' << joined(c.admissible_k) << '\t'
       << joined(c.witness.edge_values()) << '\t' << c.orbit_size << '\t' << c.min_total_genus << '\t'
       << edge_list(c.graph) << '\n';
  }
  return os.str();
}

json classes_json(std::uint32_t ell, std::int64_t k, const std::vector<StratumClass>& classes) {
  json rows = json::array();
  for (const auto& c : classes) {
    rows.push_back({{"graph", to_json(c.graph)},
                    {"code", hex(c.code)},
                    {"vine", c.vine ? json(*c.vine) : json(nullptr)},
                    {"age", rational_json(c.age)},
                    {"codimension", c.codimension},
                    {"admissible_k", c.admissible_k},
                    {"witness", c.witness.edge_values()},
                    {"orbit_size", c.orbit_size},
                    {"maximal", c.maximal},
                    {"min_total_genus", c.min_total_genus}});
  }
  return {{"ell", ell}, {"k", reduce_mod(k, ell)}, {"count", classes.size()}, {"classes", std::move(rows)}};
}

std::string snapshot_name(std::uint32_t ell, std::int64_t k, std::optional<std::size_t> max_edges,
                          bool include_dominated) {
  std::string name = "classify_ell" + std::to_string(ell) + "_k" + std::to_string(reduce_mod(k, ell));
  if (max_edges) name += "_e" + std::to_string(*max_edges);
  if (include_dominated) name += "_all";
  return name + ".tsv";
}

namespace {

struct AnalyzeArgs {
  std::string path;
  std::optional<std::int64_t> k;
  bool json = false;
};

struct ClassifyArgs {
  std::uint32_t ell = 0;
  std::int64_t k = 0;
  std::optional<std::size_t> max_edges;
  std::string format = "tsv";
  std::optional<std::string> snapshot;
  unsigned threads = 1;
  bool allow_large_ell = false;
  bool all = false;
};

struct PropsArgs {
  std::uint64_t seed = 1;
  std::optional<std::string> scope;
};

int cmd_analyze(const AnalyzeArgs& a, std::ostream& out, std::ostream& err) {
  std::ifstream in(a.path, std::ios::binary);
  if (!in) {
    err << "error: cannot read " << a.path << '\n';
    return kExitUsage;
  }
  std::stringstream buf;
  buf << in.rdbuf();
  const auto d = parse_decorated(buf.str());
  const auto report = analysis_report(d, a.k);
  if (a.json) out << report.dump(2) << '\n';
  else out << format_analysis(report);
  return kExitOk;
}

int cmd_classify(const ClassifyArgs& a, std::ostream& out, std::ostream& err) {
  ClassifyOptions opts;
  opts.max_edges = a.max_edges;
  opts.include_dominated = a.all;
  opts.allow_large_ell = a.allow_large_ell;
  opts.threads = a.threads;
  const auto classes = classify_junior(a.ell, a.k, opts);
  const auto tsv = classes_tsv(classes);
  if (a.format == "json") out << classes_json(a.ell, a.k, classes).dump(2) << '\n';
  else out << tsv;

  if (!a.snapshot) return kExitOk;
  const auto path = std::filesystem::path(*a.snapshot) / snapshot_name(a.ell, a.k, a.max_edges, a.all);
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << "snapshot missing: " << path.string() << '\n';
    return kExitFailure;
  }
  std::stringstream expected;
  expected << in.rdbuf();
  if (expected.str() == tsv) {
    err << "snapshot ok: " << path.string() << '\n';
    return kExitOk;
  }
  std::istringstream want(expected.str()), got(tsv);
  std::string lw, lg;
  for (std::size_t line = 1;; ++line) {
    const bool hw = static_cast<bool>(std::getline(want, lw));
    const bool hg = static_cast<bool>(std::getline(got, lg));
    if (!hw && !hg) break;
    if (hw != hg || lw != lg) {
      err << "snapshot drift: " << path.string() << " line " << line << "\n  expected: " << (hw ? lw : "<end>")
          << "\n  actual:   " << (hg ? lg : "<end>") << '\n';
      break;
    }
  }
  return kExitFailure;
}

int cmd_props(const PropsArgs& a, std::ostream& out) {
  const auto report = run_properties(a.seed, a.scope);
  std::size_t cases = 0, failures = 0;
  for (const auto& r : report.results) {
    out << (r.failures ? "FAIL" : "PASS") << "  " << std::left << std::setw(11) << r.scope << std::setw(62) << r.name
        << std::right << std::setw(6) << r.cases << " cases  digest " << std::hex << std::setw(16) << std::setfill('0')
        << r.digest << std::dec << std::setfill(' ') << '\n';
    if (r.first_failure) out << "      " << r.failures << " failing; first: " << *r.first_failure << '\n';
    cases += r.cases;
    failures += r.failures;
  }
  out << report.results.size() << " properties, " << cases << " cases, " << failures << " failures (seed " << a.seed
      << ")\n";
  return report.ok() ? kExitOk : kExitFailure;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Ghost automorphism strata of decorated dual graphs", "ghoststrata"};
  app.require_subcommand(1);

  AnalyzeArgs aa;
  std::int64_t k_value = 0;
  auto* analyze = app.add_subcommand("analyze", "Report on one decorated graph file");
  analyze->add_option("file", aa.path, "Decorated graph (JSON)")->required();
  auto* k_opt = analyze->add_option("--k", k_value, "Add the genus labelling for this k");
  analyze->add_flag("--json", aa.json, "JSON output");

  ClassifyArgs ca;
  auto* classify = app.add_subcommand("classify", "Junior classes of decorated graphs");
  classify->add_option("--ell", ca.ell, "Level (prime)")->required();
  classify->add_option("--k", ca.k, "Residue k")->required();
  classify->add_option("--max-edges", ca.max_edges, "Edge bound (default ell - 1)");
  classify->add_option("--format", ca.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  classify->add_option("--snapshot", ca.snapshot, "Compare with the stored table in this directory");
  classify->add_option("--threads", ca.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  classify->add_flag("--allow-large-ell", ca.allow_large_ell, "Permit ell = 11");
  classify->add_flag("--all", ca.all, "Include classes dominated by a junior contraction");

  PropsArgs pa;
  auto* props = app.add_subcommand("props", "Run the randomized invariant suites");
  props->add_option("--seed", pa.seed, "Random seed");
  props->add_option("--scope", pa.scope, "Only this module")->check(CLI::IsMember(property_scopes()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze) {
      if (k_opt->count()) aa.k = k_value;
      return cmd_analyze(aa, out, err);
    }
    if (*classify) return cmd_classify(ca, out, err);
    return cmd_props(pa, out);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const BoundExceeded& e) {
    err << "bound exceeded: " << e.what() << '\n';
    return kExitBound;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace ghoststrata
