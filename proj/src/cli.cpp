#include "conjdiam/cli.hpp"

#include <chrono>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "conjdiam/delta.hpp"
#include "conjdiam/error.hpp"
#include "conjdiam/expr.hpp"
#include "conjdiam/formulas.hpp"
#include "conjdiam/harness.hpp"
#include "conjdiam/kernels.hpp"
#include "conjdiam/norm.hpp"
#include "conjdiam/subgroup.hpp"

namespace conjdiam {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  std::string family;
  std::int64_t n = 0;
  std::int64_t p = 2;
  std::string set;
  std::string element;
  std::uint32_t radius = 1;
  std::size_t max_set_size = 0;
  bool json = false;
  bool csv = false;
  bool reference = false;
  bool timings = false;
  int threads = 0;
  std::uint64_t seed = VerificationConfig{}.seed;
  std::vector<std::string> suites;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

GroupSpec spec_of(const Options& o) {
  if (o.family.empty()) throw UsageError("--family is required");
  if (o.n == 0) throw UsageError("--n is required");
  const Family f = parse_family(o.family);
  GroupSpec s{f, o.n, f == Family::Modular ? o.p : 2};
  validate(s);
  return s;
}

json element_json(const Element& e) { return format_element(e); }

json set_json(const std::vector<Element>& xs) {
  json arr = json::array();
  for (const Element& x : xs) arr.push_back(element_json(x));
  return arr;
}

std::string norm_text(std::uint32_t v) {
  return v == NormProfile::kUnreachable ? "inf" : std::to_string(v);
}

json norm_json(std::uint32_t v) { return v == NormProfile::kUnreachable ? json(nullptr) : json(v); }

std::vector<Element> require_set(const Options& o, const Group& g) {
  if (o.set.empty()) throw UsageError("--set is required");
  return parse_set(o.set, g);
}

int cmd_info(const Options& o, std::ostream& out) {
  const Group g = build_group(spec_of(o));
  const ClassDecomposition cd = conjugacy_classes(g);
  const std::size_t pairs = class_pairs(cd).count();
  const std::size_t zsize = center(g).size();
  const std::int64_t pred = predicted_delta(g.spec());
  if (o.json) {
    json j;
    j["label"] = spec_label(g.spec());
    j["family"] = family_name(g.spec().family);
    j["n"] = g.spec().n;
    j["p"] = g.spec().p;
    j["order"] = g.order();
    j["ord_a"] = g.ord_a();
    j["ord_b"] = g.order_of(g.b());
    j["classes"] = cd.count();
    j["class_pairs"] = pairs;
    j["center"] = zsize;
    j["predicted_delta"] = pred;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << spec_label(g.spec()) << '\n'
      << "order=" << g.order() << '\n'
      << "ord(a)=" << g.ord_a() << " ord(b)=" << g.order_of(g.b()) << '\n'
      << "classes=" << cd.count() << " class_pairs=" << pairs << '\n'
      << "center=" << zsize << '\n'
      << "predicted_delta=" << pred << '\n';
  return 0;
}

int cmd_classes(const Options& o, std::ostream& out) {
  const Group g = build_group(spec_of(o));
  const ClassDecomposition cd = conjugacy_classes(g);
  if (o.json) {
    json arr = json::array();
    for (std::size_t c = 0; c < cd.count(); ++c) {
      json item;
      item["representative"] = format_element(g.element(cd.representative[c]));
      item["size"] = cd.size_of(static_cast<std::uint32_t>(c));
      json members = json::array();
      for (std::uint32_t x : cd.members[c]) members.push_back(format_element(g.element(x)));
      item["members"] = std::move(members);
      item["inverse_class"] = cd.inverse_class[c];
      arr.push_back(std::move(item));
    }
    out << arr.dump(2) << '\n';
    return 0;
  }
  for (std::size_t c = 0; c < cd.count(); ++c) {
    out << c << " size=" << cd.size_of(static_cast<std::uint32_t>(c)) << " : ";
    for (std::size_t k = 0; k < cd.members[c].size(); ++k)
      out << (k ? ", " : "") << format_element(g.element(cd.members[c][k]));
    out << '\n';
  }
  return 0;
}

int cmd_norm(const Options& o, std::ostream& out) {
  const Group g = build_group(spec_of(o));
  const auto s = require_set(o, g);
  const NormProfile pr = word_norms(g, s);
  std::uint32_t value = 0;
  if (!o.element.empty()) {
    value = pr.at(g, parse_element(o.element, g));
  } else {
    value = pr.generates ? pr.max_finite : NormProfile::kUnreachable;
  }
  if (o.json) {
    json j;
    j["group"] = spec_label(g.spec());
    j["set"] = set_json(s);
    if (!o.element.empty()) j["element"] = format_element(parse_element(o.element, g));
    j["generates"] = pr.generates;
    j["norm"] = norm_json(value);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << norm_text(value) << '\n';
  return 0;
}

int cmd_ball(const Options& o, std::ostream& out) {
  const Group g = build_group(spec_of(o));
  const auto s = require_set(o, g);
  const auto b = ball(g, s, o.radius);
  if (o.json) {
    json j;
    j["group"] = spec_label(g.spec());
    j["set"] = set_json(s);
    j["radius"] = o.radius;
    j["size"] = b.size();
    j["elements"] = set_json(b);
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "size=" << b.size() << '\n' << format_set(b) << '\n';
  return 0;
}

json entry_json(const DeltaEntry& e) {
  json j;
  j["max_set_size"] = e.max_set_size;
  j["value"] = e.value;
  j["witness"] = set_json(e.witness);
  j["candidates"] = e.candidates;
  j["generating"] = e.generating;
  return j;
}

int cmd_delta(const Options& o, std::ostream& out) {
  const Group g = build_group(spec_of(o));
  DeltaOptions opts;
  opts.threads = o.threads;
  opts.reference = o.reference;
  if (o.max_set_size > 0) {
    const DeltaEntry e = delta_n(g, o.max_set_size, opts);
    if (o.json) {
      json j = entry_json(e);
      j["group"] = spec_label(g.spec());
      out << j.dump(2) << '\n';
      return 0;
    }
    out << "delta_" << o.max_set_size << '=' << e.value << '\n'
        << "witness=" << format_set(e.witness) << '\n';
    return 0;
  }
  const DeltaReport rep = delta(g, opts);
  if (o.json) {
    json j;
    j["group"] = spec_label(g.spec());
    j["delta"] = entry_json(rep.delta);
    j["predicted"] = rep.predicted ? json(*rep.predicted) : json(nullptr);
    j["match"] = rep.match;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << "delta=" << rep.delta.value << " predicted="
      << (rep.predicted ? std::to_string(*rep.predicted) : std::string("none"))
      << " match=" << (rep.match ? "yes" : "no") << '\n'
      << "witness=" << format_set(rep.delta.witness) << '\n';
  return 0;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<GroupSpec> grid;
  if (o.family.empty())
    grid = default_grid();
  else
    grid.push_back(spec_of(o));
  VerificationConfig config;
  config.seed = o.seed;
  config.threads = o.threads;
  config.record_timings = o.timings;
  for (const std::string& s : o.suites) config.suites.push_back(parse_suite(s));
  const VerificationReport rep = run_verification(grid, config);
  if (o.json) {
    out << to_json(rep) << '\n';
  } else if (o.csv) {
    out << to_csv(rep);
  } else {
    for (const InstanceRecord& r : rep.records) {
      out << spec_label(r.spec) << " order=" << r.order << " delta=" << r.delta
          << " predicted=" << r.predicted << " match=" << (r.match ? "yes" : "no")
          << " delta2=" << r.delta2 << " suites=" << r.suites_passed << '/' << r.suites.size();
      if (o.timings) out << " ms=" << static_cast<std::int64_t>(r.millis);
      out << '\n';
      for (const SuiteResult& s : r.suites)
        if (!s.passed) out << "  FAIL " << suite_name(s.suite) << ": " << s.counterexample << '\n';
    }
    out << "pass=" << (rep.pass ? "yes" : "no") << '\n';
  }
  return rep.pass ? 0 : 1;
}

int cmd_bench(const Options& o, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  Options local = o;
  if (local.family.empty()) {
    local.family = "m";
    local.n = 3;
    local.p = 7;
  }
  const Group g = build_group(spec_of(local));
  const auto gens = g.generators();
  const ConjClosedSet cs = conj_set(g, gens);

  std::uint64_t visited = 0;
  const auto t0 = clock::now();
  auto elapsed = [](clock::time_point since) {
    return std::chrono::duration<double>(clock::now() - since).count();
  };
  int rounds = 0;
  while (rounds < 3 || elapsed(t0) < 0.2) {
    visited += word_norms(g, cs).distance.size();
    ++rounds;
  }
  const double bfs_rate = static_cast<double>(visited) / elapsed(t0);

  DeltaOptions opts;
  opts.threads = local.threads;
  opts.reference = local.reference;
  const auto t1 = clock::now();
  const DeltaReport rep = delta(g, opts);
  const double dt = elapsed(t1);
  const double cand_rate = static_cast<double>(rep.delta.candidates) / (dt > 0 ? dt : 1e-9);

  if (o.json) {
    json j;
    j["group"] = spec_label(g.spec());
    j["bfs_elements_per_second"] = bfs_rate;
    j["delta_candidates"] = rep.delta.candidates;
    j["delta_candidates_per_second"] = cand_rate;
    out << j.dump(2) << '\n';
    return 0;
  }
  out << spec_label(g.spec()) << '\n'
      << "bfs_elements_per_second=" << static_cast<std::uint64_t>(bfs_rate) << '\n'
      << "delta_candidates=" << rep.delta.candidates << '\n'
      << "delta_candidates_per_second=" << static_cast<std::uint64_t>(cand_rate) << '\n';
  return 0;
}

void add_group_options(CLI::App* cmd, Options& o) {
  cmd->add_option("--family", o.family, "d, sd, q or m");
  cmd->add_option("--n", o.n, "family parameter n");
  cmd->add_option("--p", o.p, "prime for the modular family");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Conjugacy diameters of small p-groups and dihedral groups", "conjdiam"};
  app.require_subcommand(1);
  app.add_option("--threads", o.threads, "worker threads (0 = all cores)");
  app.add_flag("--json", o.json, "JSON output");
  app.add_flag("--csv", o.csv, "CSV output (verify)");

  auto* info = app.add_subcommand("info", "order, classes and predicted diameter of a group");
  add_group_options(info, o);
  auto* classes = app.add_subcommand("classes", "list conjugacy classes");
  add_group_options(classes, o);
  auto* norm = app.add_subcommand("norm", "||g||_S for one element, or ||G||_S");
  add_group_options(norm, o);
  norm->add_option("--set", o.set, "elements separated by ';'");
  norm->add_option("--element", o.element, "element expression");
  auto* ballc = app.add_subcommand("ball", "elements of norm at most the radius");
  add_group_options(ballc, o);
  ballc->add_option("--set", o.set, "elements separated by ';'");
  ballc->add_option("--radius", o.radius, "ball radius");
  auto* deltac = app.add_subcommand("delta", "conjugacy diameter");
  add_group_options(deltac, o);
  deltac->add_option("--max-set-size", o.max_set_size, "compute Delta_n for this n instead");
  deltac->add_flag("--reference", o.reference, "use the serial reference evaluator");
  auto* verify = app.add_subcommand("verify", "run the verification grid");
  add_group_options(verify, o);
  verify->add_option("--seed", o.seed, "seed for randomized suites");
  verify->add_flag("--timings", o.timings, "record wall-clock timings");
  verify->add_option("--suite", o.suites, "restrict to the named suites");
  auto* bench = app.add_subcommand("bench", "BFS and delta-search throughput");
  add_group_options(bench, o);
  bench->add_flag("--reference", o.reference, "use the serial reference evaluator");

  for (CLI::App* sub : {info, classes, norm, ballc, deltac, verify, bench}) {
    sub->add_option("--threads", o.threads, "worker threads (0 = all cores)");
    sub->add_flag("--json", o.json, "JSON output");
    sub->add_flag("--csv", o.csv, "CSV output (verify)");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*info) return cmd_info(o, out);
    if (*classes) return cmd_classes(o, out);
    if (*norm) return cmd_norm(o, out);
    if (*ballc) return cmd_ball(o, out);
    if (*deltac) return cmd_delta(o, out);
    if (*verify) return cmd_verify(o, out);
    if (*bench) return cmd_bench(o, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error (" << to_string(e.code()) << "): " << e.what() << '\n';
    switch (e.code()) {
      case ErrorCode::InvalidSpec:
      case ErrorCode::OrderCapExceeded:
      case ErrorCode::EmptySet:
      case ErrorCode::SyntaxError:
      case ErrorCode::TokenNotInFamily: return 2;
      default: return 1;
    }
  }
  return 2;
}

}  // namespace conjdiam
