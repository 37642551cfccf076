#include <chrono>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <grpkit/grpkit.hpp>
#include <grpkit/report.hpp>

namespace {

enum Exit { kPass = 0, kFail = 1, kError = 2 };

struct Options {
  bool json = false;
  bool timings = false;
  std::uint64_t seed = 0;
  std::optional<std::uint64_t> bound_enum;
  std::optional<std::uint64_t> bound_brute;

  std::string criterion;
  std::string atlas_name;
  std::string group_file;
  std::string subgroup_gens;
  std::string formation = "supersoluble";
  bool probes = false;

  std::string corpus;
  std::uint64_t max_order = 500;
};

std::uint64_t env_seed() {
  const char* raw = std::getenv("GRPKIT_SEED");
  if (!raw || !*raw) return 0;
  try {
    std::size_t used = 0;
    unsigned long long v = std::stoull(raw, &used);
    if (used != std::string(raw).size()) throw std::invalid_argument(raw);
    return v;
  } catch (const std::exception&) {
    throw grpkit::InvalidInput(std::string("GRPKIT_SEED is not an unsigned integer: ") + raw);
  }
}

// Splits "(1 2)(3 4),(1 3)" at commas outside parentheses.
std::vector<std::string> split_generators(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '(') ++depth;
    if (c == ')') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(grpkit::detail::trim(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!grpkit::detail::trim(cur).empty() || !out.empty()) out.push_back(grpkit::detail::trim(cur));
  return out;
}

grpkit::ojson base_inputs(const Options& o) {
  grpkit::ojson in;
  in["seed"] = o.seed;
  if (o.bound_enum) in["bound_enum"] = *o.bound_enum;
  if (o.bound_brute) in["bound_brute"] = *o.bound_brute;
  return in;
}

void emit(const Options& o, const std::string& command, grpkit::ojson inputs, grpkit::ojson result,
          const std::string& text, double elapsed) {
  if (o.json) {
    grpkit::ojson env = grpkit::envelope(command, std::move(inputs), std::move(result));
    if (o.timings) env["elapsed_seconds"] = elapsed;
    std::cout << env.dump(2) << "\n";
  } else {
    std::cout << text;
    if (o.timings) std::cout << "elapsed: " << elapsed << " s\n";
  }
}

double since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

int cmd_verify(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  grpkit::VerificationReport rep;
  try {
    rep = grpkit::run_verification(o.seed);
  } catch (const grpkit::ClaimFailed& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  emit(o, "verify-counterexample", base_inputs(o), grpkit::to_json(rep, o.timings),
       grpkit::render_text(rep, o.timings), since(t0));
  return rep.overall ? kPass : kFail;
}

int cmd_criterion(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  if (o.atlas_name.empty() == o.group_file.empty())
    throw grpkit::InvalidInput("give exactly one of --atlas or --group");
  grpkit::PermGroup g = o.atlas_name.empty() ? grpkit::read_grp_file(o.group_file)
                                             : grpkit::atlas_lookup(o.atlas_name).group;
  grpkit::FormationPredicate f = grpkit::formation_by_name(o.formation);

  bool needs_h = o.criterion == "wang" || o.criterion == "conjecture1" || o.criterion == "theorem2";
  std::optional<grpkit::SubgroupHandle> h;
  if (!o.subgroup_gens.empty()) {
    std::vector<grpkit::Perm> gens;
    for (const auto& s : split_generators(o.subgroup_gens)) {
      if (s.empty()) throw grpkit::InvalidInput("empty generator in --subgroup-gens");
      gens.push_back(grpkit::parse_cycles(s, g.degree()));
    }
    grpkit::PermGroup hg(g.degree(), std::move(gens));
    if (!hg.is_subgroup_of(g)) throw grpkit::InvalidInput("--subgroup-gens do not lie in G");
    h = grpkit::SubgroupHandle{g, std::move(hg)};
  }
  if (needs_h && !h) throw grpkit::InvalidInput(o.criterion + " needs --subgroup-gens");
  if (!needs_h && h) throw grpkit::InvalidInput(o.criterion + " takes no --subgroup-gens");

  grpkit::CriterionResult r;
  if (o.criterion == "huppert") r = grpkit::huppert(g);
  else if (o.criterion == "kramer") r = grpkit::kramer(g);
  else if (o.criterion == "lili") r = grpkit::li_li(g);
  else if (o.criterion == "wang") r = grpkit::wang(g, *h, f);
  else if (o.criterion == "conjecture1") r = grpkit::conjecture1_hypothesis(g, *h, f);
  else r = grpkit::theorem2_check(g, *h, f);

  grpkit::ojson inputs = base_inputs(o);
  inputs["criterion"] = o.criterion;
  if (!o.atlas_name.empty()) inputs["atlas"] = o.atlas_name;
  if (!o.group_file.empty()) inputs["group"] = o.group_file;
  if (h) inputs["subgroup_gens"] = o.subgroup_gens;
  if (needs_h) inputs["formation"] = f.name;

  grpkit::ojson result = grpkit::to_json(r);
  std::string text = grpkit::render_text(r);
  if (o.probes) {
    if (o.criterion != "theorem2") throw grpkit::InvalidInput("--probes applies to theorem2 only");
    inputs["probes"] = true;
    auto probes = grpkit::theorem2_proofstep_probes(g, *h, f);
    result["probes"] = grpkit::to_json(probes);
    for (const auto& p : probes) {
      text += "  step " + p.step + ": " + (p.holds ? "holds" : "fails");
      for (const auto& [k, v] : p.evidence) text += "  " + k + "=" + grpkit::detail_text(v);
      text += "\n";
    }
  }
  emit(o, "criterion", std::move(inputs), std::move(result), text, since(t0));
  if (r.violation) std::cerr << "THEOREM VIOLATION: hypothesis holds but G is not in the formation\n";
  return r.holds ? kPass : kFail;
}

int cmd_corpus(const Options& o) {
  auto t0 = std::chrono::steady_clock::now();
  grpkit::CorpusReport rep = grpkit::run_corpus(o.corpus, o.max_order);
  grpkit::ojson inputs = base_inputs(o);
  inputs["check"] = o.corpus;
  if (o.corpus == "theorem2-soundness") inputs["max_order"] = o.max_order;
  emit(o, "corpus", std::move(inputs), grpkit::to_json(rep), grpkit::render_text(rep), since(t0));
  return rep.pass ? kPass : kFail;
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"grpkit: finite group toolkit"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "Print a JSON envelope instead of text");
  app.add_flag("--timings", o.timings, "Include elapsed times (breaks byte-identical output)");
  auto* seed_opt = app.add_option("--seed", o.seed, "Search seed (default: GRPKIT_SEED or 0)");
  app.add_option("--bound-enum", o.bound_enum, "Maximum number of enumerated elements");
  app.add_option("--bound-brute", o.bound_brute, "Maximum |G| for the subgroup-lattice path");

  auto* verify = app.add_subcommand("verify-counterexample",
                                    "Build the A5 counterexample and check every claim");

  auto* crit = app.add_subcommand("criterion", "Evaluate a supersolubility criterion");
  crit->add_option("name", o.criterion, "Criterion")
      ->required()
      ->check(CLI::IsMember({"huppert", "kramer", "lili", "wang", "conjecture1", "theorem2"}));
  auto* atlas_opt = crit->add_option("--atlas", o.atlas_name, "Built-in group name");
  auto* group_opt = crit->add_option("--group", o.group_file, "Path to a .grp file");
  atlas_opt->excludes(group_opt);
  crit->add_option("--subgroup-gens", o.subgroup_gens,
                   "Generators of H in cycle notation, comma separated");
  crit->add_option("--formation", o.formation, "Formation")
      ->check(CLI::IsMember({"supersoluble", "soluble", "nilpotent"}));
  crit->add_flag("--probes", o.probes, "Also check the intermediate proof steps (theorem2)");

  auto* corpus = app.add_subcommand("corpus", "Run an invariant over the built-in atlas");
  corpus->add_option("check", o.corpus, "Check name")
      ->required()
      ->check(CLI::IsMember(grpkit::corpus_checks()));
  corpus->add_option("--max-order", o.max_order, "Largest |G| for theorem2-soundness");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kError;
  }

  try {
    if (!*seed_opt) o.seed = env_seed();
    if (o.bound_enum) grpkit::limits().enum_bound = *o.bound_enum;
    if (o.bound_brute) grpkit::limits().brute_bound = *o.bound_brute;
    if (*verify) return cmd_verify(o);
    if (*crit) return cmd_criterion(o);
    if (*corpus) return cmd_corpus(o);
  } catch (const grpkit::BoundExceeded& e) {
    std::cerr << "error: bound exceeded: " << e.what() << "\n";
    return kError;
  } catch (const grpkit::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
