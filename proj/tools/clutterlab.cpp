// clutterlab: inspect clutters (blockers, minors, cleanness, cores, setcores,
// covering parameters) and run the theorem/lemma verification campaigns.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "clutterlab/io.hpp"
#include "clutterlab/obstructions.hpp"

namespace {

using namespace clutterlab;

struct CommonOpts {
  std::string input;   // empty = stdin
  std::string format = "text";
};

void add_common(CLI::App* cmd, CommonOpts& opts, bool with_format = true) {
  cmd->add_option("--input", opts.input, "input file (default: stdin)");
  if (with_format)
    cmd->add_option("--format", opts.format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
}

std::string slurp(const CommonOpts& opts) {
  if (opts.input.empty()) {
    std::stringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(opts.input);
  if (!in) throw Error(Errc::ParseError, "cannot open " + opts.input);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Clutter read_clutter(const CommonOpts& opts) {
  return parse_clutter_text(slurp(opts));
}

ElemSet parse_element_list(const std::string& csv) {
  ElemSet out;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const int e = std::stoi(tok);
    if (e < 1 || e > 64)
      throw Error(Errc::ElementOutOfRange, "element " + tok);
    out = out.with(e);
  }
  return out;
}

void print_report(const VerificationReport& report, const std::string& format) {
  if (format == "json") {
    std::cout << to_json(report).dump(2) << "\n";
    return;
  }
  std::cout << "config: " << report.config_echo << "\n"
            << "instances: " << report.instances_total
            << "  clean tangled: " << report.clean_tangled_count
            << "  violations: " << report.violations << "  ("
            << report.runtime_ms << " ms)\n";
  for (const ViolationDetail& v : report.violation_details) {
    std::cout << "violation [" << v.check << "] " << v.detail << "\n";
    std::istringstream lines(v.instance);
    std::string line;
    while (std::getline(lines, line)) std::cout << "  | " << line << "\n";
  }
}

int run(int argc, char** argv) {
  CLI::App app{"clutter calculus and min-min theorem verification"};
  app.require_subcommand(1);

  CommonOpts opts;
  int max_n = 12;
  bool want_witness = false;
  std::string delete_csv, contract_csv;
  int gen_n = 4;
  std::uint64_t count = 1, seed = 0;
  std::string family_name;
  bool exhaustive6 = false;

  auto* validate_cmd = app.add_subcommand("validate", "canonicalize a clutter");
  add_common(validate_cmd, opts);
  auto* blocker_cmd = app.add_subcommand("blocker", "blocker clutter");
  add_common(blocker_cmd, opts);
  auto* tau_cmd = app.add_subcommand("tau", "covering number");
  add_common(tau_cmd, opts);
  auto* minor_cmd =
      app.add_subcommand("minor", "delete/contract minor, re-indexed");
  add_common(minor_cmd, opts);
  minor_cmd->add_option("--delete", delete_csv, "elements to delete (csv)");
  minor_cmd->add_option("--contract", contract_csv,
                        "elements to contract (csv)");
  auto* clean_cmd = app.add_subcommand("is-clean", "excluded-minor test");
  add_common(clean_cmd, opts, false);
  clean_cmd->add_option("--max-n", max_n, "minor enumeration bound");
  clean_cmd->add_flag("--witness", want_witness, "print the obstruction");
  auto* tangled_cmd = app.add_subcommand("is-tangled", "tangledness test");
  add_common(tangled_cmd, opts, false);
  auto* graph_cmd =
      app.add_subcommand("graph", "minimum-cover graph with bipartitions");
  add_common(graph_cmd, opts);
  auto* core_cmd = app.add_subcommand("core", "core members");
  add_common(core_cmd, opts);
  auto* setcore_cmd = app.add_subcommand("setcore", "setcore set-system");
  add_common(setcore_cmd, opts);
  auto* mu_cmd = app.add_subcommand("mu", "rainbow covering number");
  add_common(mu_cmd, opts);
  auto* lambda_cmd = app.add_subcommand(
      "lambda", "connectivity of a set-system (or of a clutter's setcore)");
  add_common(lambda_cmd, opts);
  auto* chain_cmd = app.add_subcommand("mu-chain", "mu, mu1, mu2, mu3");
  add_common(chain_cmd, opts);
  auto* report_cmd =
      app.add_subcommand("report", "all five parameters with witnesses");
  add_common(report_cmd, opts);

  auto add_campaign_opts = [&](CLI::App* cmd) {
    add_common(cmd, opts);
    cmd->add_option("--n", gen_n, "ground size (bound for exhaustive runs)");
    cmd->add_option("--count", count, "random instance count");
    cmd->add_option("--seed", seed, "PRNG seed");
    cmd->add_option("--family", family_name, "delta | odd-hole | cuboid");
    cmd->add_flag("--exhaustive", exhaustive6, "allow the n = 6 deep sweep");
  };
  auto* vt_cmd = app.add_subcommand("verify-theorem", "min-min theorem sweep");
  add_campaign_opts(vt_cmd);
  auto* vl_cmd = app.add_subcommand("verify-lemmas", "full property sweep");
  add_campaign_opts(vl_cmd);
  auto* gen_cmd = app.add_subcommand("generate", "emit instances");
  add_campaign_opts(gen_cmd);

  CLI11_PARSE(app, argc, argv);

  auto make_config = [&](CLI::App* cmd) {
    GeneratorConfig config;
    config.n = gen_n;
    config.count = count;
    config.seed = seed;
    config.exhaustive_bound = exhaustive6 ? 6 : 5;
    if (!family_name.empty()) {
      config.kind = GenKind::Family;
      if (family_name == "delta")
        config.family = FamilyKind::Delta;
      else if (family_name == "odd-hole")
        config.family = FamilyKind::OddHole;
      else if (family_name == "cuboid") {
        config.family = FamilyKind::Cuboid;
        config.cuboid_points = parse_setsystem_text(slurp(opts));
      } else {
        throw Error(Errc::ParseError, "unknown family " + family_name);
      }
    } else if (cmd->count("--count") || cmd->count("--seed")) {
      config.kind = GenKind::Random;
    } else {
      config.kind = GenKind::Exhaustive;
    }
    return config;
  };

  if (*validate_cmd) {
    const Clutter c = read_clutter(opts);
    if (opts.format == "json")
      std::cout << to_json(c).dump(2) << "\n";
    else
      std::cout << format_clutter(c);
    return 0;
  }
  if (*blocker_cmd) {
    const Clutter b = blocker(read_clutter(opts));
    if (opts.format == "json")
      std::cout << to_json(b).dump(2) << "\n";
    else
      std::cout << format_clutter(b);
    return 0;
  }
  if (*tau_cmd) {
    std::cout << covering_number(read_clutter(opts)).to_string() << "\n";
    return 0;
  }
  if (*minor_cmd) {
    const Clutter c = read_clutter(opts);
    const MinorResult r = minor(
        c, {parse_element_list(delete_csv), parse_element_list(contract_csv)});
    if (opts.format == "json") {
      nlohmann::json j = to_json(r.clutter);
      j["old_labels"] = r.old_label;
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << format_clutter(r.clutter);
      std::cout << "# old labels:";
      for (int e : r.old_label) std::cout << " " << e;
      std::cout << "\n";
    }
    return 0;
  }
  if (*clean_cmd) {
    const CleanResult r = is_clean(read_clutter(opts), max_n);
    std::cout << (r.clean ? "clean" : "not-clean") << "\n";
    if (!r.clean && want_witness)
      std::cout << obstruction_kind_name(r.witness->kind) << " "
                << r.witness->dimension << " "
                << r.witness->spec.deleted.to_string() << " "
                << r.witness->spec.contracted.to_string() << "\n";
    return 0;
  }
  if (*tangled_cmd) {
    std::cout << (is_tangled(read_clutter(opts)) ? "tangled" : "not-tangled")
              << "\n";
    return 0;
  }
  if (*graph_cmd) {
    const Clutter c = read_clutter(opts);
    const MinCoverGraph g = min_cover_graph(c);
    if (opts.format == "json") {
      std::cout << to_json(g).dump(2) << "\n";
    } else {
      std::cout << "graph " << g.vertex_count << "\n";
      for (ElemSet e : g.edges) {
        auto uv = e.elements();
        std::cout << "edge " << uv[0] << " " << uv[1] << "\n";
      }
      for (std::size_t i = 0; i < g.components.size(); ++i)
        std::cout << "component " << i + 1 << " U="
                  << g.components[i].side_u.to_string()
                  << " V=" << g.components[i].side_v.to_string() << "\n";
    }
    return 0;
  }
  if (*core_cmd) {
    const Clutter c = read_clutter(opts);
    const std::vector<ElemSet> members = core(c);
    const Clutter as_clutter =
        Clutter::from_antichain(c.ground_size(), {members.begin(),
                                                  members.end()});
    if (opts.format == "json")
      std::cout << to_json(as_clutter).dump(2) << "\n";
    else
      std::cout << format_clutter(as_clutter);
    return 0;
  }
  if (*setcore_cmd) {
    const SetSystem s = setcore(read_clutter(opts));
    if (opts.format == "json")
      std::cout << to_json(s).dump(2) << "\n";
    else
      std::cout << format_setsystem(s);
    return 0;
  }
  if (*mu_cmd) {
    const Clutter c = read_clutter(opts);
    const MinCoverGraph g = min_cover_graph(c);
    const CoverSearchResult r = rainbow_covering_number(c, g);
    if (opts.format == "json") {
      nlohmann::json j{{"mu", to_json(r.value)}};
      if (r.witness) j["witness"] = to_json(*r.witness);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << r.value.to_string();
      if (r.witness) std::cout << " witness " << r.witness->to_string();
      std::cout << "\n";
    }
    return 0;
  }
  if (*lambda_cmd) {
    std::istringstream in(slurp(opts));
    const ParsedInput parsed = parse_any(in);
    const SetSystem s =
        parsed.setsystem ? *parsed.setsystem : setcore(*parsed.clutter);
    const ConnectivityResult r = connectivity(s);
    if (opts.format == "json") {
      nlohmann::json j{{"lambda", to_json(r.value)}};
      if (r.witness) j["witness"] = to_json(*r.witness);
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << r.value.to_string();
      if (r.witness)
        std::cout << " witness I=" << r.witness->positive.to_string()
                  << " J=" << r.witness->negated.to_string();
      std::cout << "\n";
    }
    return 0;
  }
  if (*chain_cmd || *report_cmd) {
    const ParamReport r = param_report(read_clutter(opts));
    if (opts.format == "json") {
      std::cout << to_json(r).dump(2) << "\n";
    } else {
      std::cout << "mu=" << r.mu.to_string() << " mu1=" << r.mu1.to_string()
                << " mu2=" << r.mu2.to_string()
                << " mu3=" << r.mu3.to_string()
                << " lambda=" << r.lambda.to_string() << "\n";
      if (*report_cmd) {
        if (r.rainbow_witness)
          std::cout << "mu witness " << r.rainbow_witness->to_string() << "\n";
        if (r.core_cover_witness)
          std::cout << "mu1 witness " << r.core_cover_witness->to_string()
                    << "\n";
        if (r.mu2_witness)
          std::cout << "mu2 witness " << pattern_to_string(*r.mu2_witness)
                    << "\n";
        if (r.mu3_witness)
          std::cout << "mu3 witness " << pattern_to_string(*r.mu3_witness)
                    << "\n";
        if (r.lambda_witness)
          std::cout << "lambda witness I="
                    << r.lambda_witness->positive.to_string()
                    << " J=" << r.lambda_witness->negated.to_string() << "\n";
      }
    }
    return 0;
  }
  if (*vt_cmd || *vl_cmd) {
    CLI::App* cmd = *vt_cmd ? vt_cmd : vl_cmd;
    const GeneratorConfig config = make_config(cmd);
    const VerificationReport report =
        *vt_cmd ? verify_theorem(config) : verify_lemmas(config);
    print_report(report, opts.format);
    return report.passed() ? 0 : 1;
  }
  if (*gen_cmd) {
    const GeneratorConfig config = make_config(gen_cmd);
    switch (config.kind) {
      case GenKind::Family:
        std::cout << format_clutter(make_family(config));
        break;
      case GenKind::Random: {
        RandomClutterStream stream(config);
        for (std::uint64_t i = 0; i < config.count; ++i)
          std::cout << format_clutter(stream.next()) << "\n";
        break;
      }
      case GenKind::Exhaustive:
        for_each_clutter(
            config.n,
            [](const Clutter& c) { std::cout << format_clutter(c) << "\n"; },
            config.exhaustive_bound);
        break;
    }
    return 0;
  }
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
