#include "ras/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "ras/error.hpp"
#include "ras/reports.hpp"

namespace ras::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  bool json = false;
  bool assert_mode = false;
  unsigned jobs = 1;
};

struct Loaded {
  std::string file;
  Scenario scenario;
};

Loaded load(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw UsageError("cannot open " + file);
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return {file, parse_scenario(buf.str())};
  } catch (const ParseError& e) {
    throw UsageError(e.diagnostic(file));
  }
}

unsigned effective_jobs(unsigned jobs) {
  if (jobs != 0) return jobs;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::string format_counterexample(const Counterexample& c) {
  const auto& u = c.space.universe();
  std::ostringstream os;
  os << "n=" << u->size() << " partition " << format_partition(c.space.partition());
  if (c.table) {
    os << " table [";
    const auto& cells = c.table->cells();
    for (std::size_t i = 0; i < cells.size(); ++i) {
      os << (i ? " " : "") << (cells[i] ? u->label(*cells[i]) : std::string("?"));
    }
    os << ']';
  }
  os << " X=" << format_set(c.x) << " Y=" << format_set(c.y);
  if (c.witness) os << " witness " << u->label(*c.witness);
  return os.str();
}

// Minimal counterexamples are mined only for refuted claims that the miner knows.
std::optional<std::string> minimal_counterexample(const SweepLine& line) {
  if (line.theorem || line.failures == 0) return std::nullopt;
  const auto rel = parse_relation(line.id);
  if (!rel) return std::nullopt;
  SearchSpec bounds;
  bounds.universe_size = line.max_n;
  const auto r = find_counterexample(*rel, bounds);
  if (!r.found) return std::nullopt;
  return format_counterexample(*r.found);
}

std::vector<LawsEntry> run_laws(const std::string& law, std::size_t max_n, unsigned jobs) {
  if (max_n < 1 || max_n > kMaxUniverseSize) {
    throw UsageError("--max-n must be between 1 and " + std::to_string(kMaxUniverseSize));
  }
  std::vector<SweepLine> lines;
  const bool all = law.empty();
  for (auto l : kAllApproxLaws) {
    if (all || law == to_string(l)) lines.push_back(sweep_approx_law(l, max_n, jobs));
  }
  if (all || law == "P31") {
    for (auto& l : sweep_intersection(max_n, jobs)) lines.push_back(std::move(l));
  }
  if (all || law == "P22") {
    for (auto& l : sweep_product_laws(max_n, jobs)) lines.push_back(std::move(l));
  }
  if (all || law == "P41") lines.push_back(sweep_composition(CompositionProp::AntiAfterHom, max_n, jobs));
  if (all || law == "P42") lines.push_back(sweep_composition(CompositionProp::AntiAfterAntiHom, max_n, jobs));
  if (lines.empty()) throw UsageError("unknown law " + law + " (expected L1..L9, P22, P31, P41, P42)");
  std::vector<LawsEntry> entries;
  for (auto& l : lines) {
    auto ce = minimal_counterexample(l);
    entries.push_back({std::move(l), std::move(ce)});
  }
  return entries;
}

void add_require(SearchSpec& spec, const std::string& req) {
  const auto eq = req.find('=');
  if (eq == std::string::npos) {
    const auto s = parse_structural(req);
    if (!s) throw UsageError("unknown structural constraint " + req);
    spec.structural_constraints.push_back(*s);
    return;
  }
  const auto law = parse_law(req.substr(0, eq));
  const auto status = parse_status(req.substr(eq + 1));
  if (!law || !status) {
    throw UsageError("bad --require " + req + " (expected C1..C10=AllTrue|AllFalse|Mixed)");
  }
  spec.law_constraints.emplace_back(*law, *status);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Globals g;
  CLI::App app{"Rough approximation spaces and outer algebraic structures", "ras"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", g.json, "Print a machine-readable report");
  app.add_flag("--assert", g.assert_mode, "Exit 1 on false verdicts or discrepancies");
  app.add_option("--jobs", g.jobs, "Worker threads for sweeps and search (0 = all cores)");

  std::function<Report()> action;
  std::string file;

  auto* parse = app.add_subcommand("parse", "Validate a .ras file");
  parse->add_option("FILE", file)->required();
  parse->callback([&] {
    action = [&] {
      auto l = load(file);
      return parse_report(l.file, l.scenario);
    };
  });

  std::string space_name;
  std::string set_name;
  auto* approx = app.add_subcommand("approx", "Lower and upper approximation of a set");
  approx->add_option("FILE", file)->required();
  approx->add_option("--space", space_name)->required();
  approx->add_option("--set", set_name)->required();
  approx->callback([&] {
    action = [&] {
      auto l = load(file);
      return approx_report(space_name, set_name, l.scenario.space(space_name), l.scenario.set(set_name));
    };
  });

  std::string table_name;
  auto* cls = app.add_subcommand("classify", "Evaluate C1..C10 on a table");
  cls->add_option("FILE", file)->required();
  cls->add_option("--table", table_name)->required();
  cls->callback([&] {
    action = [&] {
      auto l = load(file);
      return classify_report(table_name, l.scenario.table(table_name));
    };
  });

  auto* check = app.add_subcommand("check", "Structure and morphism checks");
  check->require_subcommand(1);
  check->fallthrough();

  std::string ambient_name;
  auto* rsg = check->add_subcommand("rough-semigroup", "Rough anti-semigroup conditions");
  rsg->add_option("FILE", file)->required();
  rsg->add_option("--space", space_name)->required();
  rsg->add_option("--table", table_name)->required();
  rsg->add_option("--ambient", ambient_name, "Table used for products outside the carrier");
  rsg->callback([&] {
    action = [&] {
      auto l = load(file);
      const auto& t = l.scenario.table(table_name);
      const OpTable* ambient = ambient_name.empty() ? nullptr : &l.scenario.table(ambient_name);
      return rough_semigroup_report(table_name, t,
                                    check_rough_anti_semigroup(l.scenario.space(space_name), t, ambient));
    };
  });

  std::string subset_name;
  auto* rss = check->add_subcommand("rough-subsemigroup", "Closure of a subset inside its upper approximation");
  rss->add_option("FILE", file)->required();
  rss->add_option("--space", space_name)->required();
  rss->add_option("--table", table_name)->required();
  rss->add_option("--subset", subset_name)->required();
  rss->callback([&] {
    action = [&] {
      auto l = load(file);
      const auto& t = l.scenario.table(table_name);
      return rough_subsemigroup_report(
          table_name, subset_name, t,
          check_rough_anti_subsemigroup(l.scenario.space(space_name), t, l.scenario.set(subset_name)));
    };
  });

  std::string map_name;
  std::string kind_name;
  std::string table_a;
  std::string table_b;
  std::string space_a;
  std::string space_b;
  auto* mor = check->add_subcommand("morphism", "Homomorphism-type checks of a map");
  mor->add_option("FILE", file)->required();
  mor->add_option("--map", map_name)->required();
  mor->add_option("--kind", kind_name, "hom|anti-hom|rough-hom|rough-anti-hom|anti-group-hom")->required();
  mor->add_option("--table-a", table_a)->required();
  mor->add_option("--table-b", table_b)->required();
  mor->add_option("--space-a", space_a);
  mor->add_option("--space-b", space_b);
  mor->callback([&] {
    action = [&] {
      const auto kind = parse_morphism_kind(kind_name);
      if (!kind) throw UsageError("unknown morphism kind " + kind_name);
      auto l = load(file);
      const auto& s = l.scenario;
      const auto& phi = s.mapping(map_name);
      const auto& ta = s.table(table_a);
      const auto& tb = s.table(table_b);
      MorphismReport r;
      switch (*kind) {
        case MorphismKind::AntiGroupHom: r = check_anti_group_hom(phi, ta, tb); break;
        case MorphismKind::Hom:
        case MorphismKind::AntiHom: r = check_hom(phi, ta, tb, *kind); break;
        case MorphismKind::RoughHom:
        case MorphismKind::RoughAntiHom:
          if (space_a.empty() || space_b.empty()) {
            throw UsageError(kind_name + " needs --space-a and --space-b");
          }
          r = check_rough_hom(s.space(space_a), s.space(space_b), phi, ta, tb, *kind);
          break;
      }
      return morphism_report(map_name, phi, r);
    };
  });

  std::size_t max_n = 4;
  std::string law;
  auto* laws = app.add_subcommand("laws", "Exhaustive law suites");
  laws->add_option("--max-n", max_n, "Largest universe size")->capture_default_str();
  laws->add_option("--law", law, "L1..L9, P22, P31, P41 or P42 (default: all)");
  laws->callback([&] {
    action = [&] { return laws_report(run_laws(law, max_n, effective_jobs(g.jobs))); };
  });

  SearchSpec spec;
  std::vector<std::string> requires_;
  auto* srch = app.add_subcommand("search", "Find small structures satisfying constraints");
  srch->add_option("--universe-size", spec.universe_size)->required();
  srch->add_option("--carrier-size", spec.carrier_size)->required();
  srch->add_option("--require", requires_, "LAW=STATUS or a structural name")->take_all();
  srch->add_option("--limit", spec.limit)->capture_default_str();
  srch->add_option("--budget", spec.budget)->capture_default_str();
  srch->add_flag("--allow-indet", spec.allow_indet, "Let cells be INDET");
  srch->callback([&] {
    action = [&] {
      for (const auto& r : requires_) add_require(spec, r);
      spec.jobs = effective_jobs(g.jobs);
      spec.validate();
      auto result = search(spec);
      auto report = search_report(spec, result);
      report.ok = !result.matches.empty();
      return report;
    };
  });

  auto* audit = app.add_subcommand("audit-paper", "Recompute the bundled published examples");
  audit->callback([&] { action = [] { return audit_report(audit_published_examples()); }; });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    Report report = action();
    if (g.json) {
      out << report.json.dump(2) << '\n';
    } else {
      out << report.text;
    }
    return g.assert_mode && !report.ok ? kAssertFailed : kOk;
  } catch (const UsageError& e) {
    err << "ras: " << e.what() << '\n';
    return kUsageError;
  } catch (const ParseError& e) {
    err << e.diagnostic("<input>") << '\n';
    return kUsageError;
  } catch (const Error& e) {
    err << "ras: " << e.what() << '\n';
    return kUsageError;
  } catch (const std::exception& e) {
    err << "ras: internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace ras::cli
