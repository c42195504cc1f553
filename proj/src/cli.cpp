#include "basekit/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "basekit/fixtures.hpp"
#include "basekit/io.hpp"

namespace basekit {

namespace {

struct GlobalOpts {
  std::string format = "text";
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  std::uint64_t budget = 1'000'000;
  std::uint64_t class_cap = 10'000'000;
};

void render_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) {
      if (value.is_object() || value.is_array()) {
        out << pad << key << ":\n";
        render_text(value, out, indent + 1);
      } else {
        out << pad << key << ": " << value.dump() << "\n";
      }
    }
  } else if (j.is_array()) {
    for (const auto& value : j) {
      if (value.is_object() || value.is_array()) {
        out << pad << "-\n";
        render_text(value, out, indent + 1);
      } else {
        out << pad << "- " << value.dump() << "\n";
      }
    }
  } else {
    out << pad << j.dump() << "\n";
  }
}

void emit_report(const std::string& command, const Json& inputs, const Json& results,
                 const GlobalOpts& global, bool include_seed, std::ostream& out) {
  Json report;
  report["command"] = command;
  report["inputs"] = inputs;
  report["results"] = results;
  if (include_seed) report["seed"] = global.seed;
  report["version"] = kToolVersion;
  if (global.format == "json")
    out << report.dump(2) << "\n";
  else
    render_text(report, out, 0);
}

BigInt parse_bigint(const std::string& s) {
  try {
    return BigInt(s);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("malformed integer: '" + s + "'");
  }
}

int cmd_greedy(const std::string& group_file, const std::string& policy, bool max_mode,
               const GlobalOpts& global, std::ostream& out, std::ostream& err) {
  const Group g = load_group_file(group_file);
  Json inputs = {{"group_file", group_file}, {"group", g.label()},
                 {"degree", g.degree()}, {"order", g.order().str()}};
  if (max_mode) {
    const SearchCount result = greedy_size_max(g, global.budget);
    if (result.exceeded()) {
      err << "error: backtrack budget exceeded after " << result.nodes << " nodes\n";
      return 3;
    }
    emit_report("greedy", inputs,
                {{"greedy_size_max", *result.value}, {"nodes", result.nodes}}, global,
                false, out);
    return 0;
  }
  const bool random = policy == "random";
  const GreedyTrace trace = greedy_base(
      g, random ? GreedyPolicy::SeededRandom : GreedyPolicy::Deterministic, global.seed);
  inputs["policy"] = random ? "random" : "deterministic";
  emit_report("greedy", inputs, {{"trace", greedy_trace_to_json(trace)}}, global, random,
              out);
  return 0;
}

int cmd_bounds(const std::string& group_file, const std::string& class_data_file,
               const std::string& subgroup_file, std::int64_t stabilizer,
               std::uint64_t c, const GlobalOpts& global, std::ostream& out,
               std::ostream& err) {
  const int modes = (!group_file.empty() && stabilizer >= 0) +
                    (!group_file.empty() && !subgroup_file.empty()) +
                    !class_data_file.empty();
  if (modes != 1) {
    err << "error: choose exactly one input mode (--stabilizer, --subgroup-file, or "
           "--class-data)\n";
    return 2;
  }
  FprTable table;
  Json inputs;
  if (!class_data_file.empty()) {
    table = fpr_table_from_class_data(load_class_data_file(class_data_file));
    inputs = {{"class_data_file", class_data_file}};
  } else {
    const Group g = load_group_file(group_file);
    inputs = {{"group_file", group_file}, {"group", g.label()},
              {"degree", g.degree()}, {"order", g.order().str()}};
    if (!subgroup_file.empty()) {
      const Group h = load_group_file(subgroup_file);
      inputs["subgroup_file"] = subgroup_file;
      table = fpr_table_from_class_data(class_data_from_groups(g, h, global.class_cap));
    } else {
      inputs["stabilizer"] = stabilizer;
      const ClassList classes =
          prime_order_class_reps(g, ClassSearchMode::Exhaustive, global.class_cap);
      table = fpr_table_live(g, static_cast<Point>(stabilizer), classes);
    }
  }
  const Rational q = qhat(table, c);
  const Certificate cert = lemma_q_certificate(q, c);
  inputs["c"] = c;
  emit_report("bounds", inputs,
              {{"fpr_table", fpr_table_to_json(table)},
               {"qhat", rational_to_json(q)},
               {"certificate", certificate_to_json(cert)}},
              global, false, out);
  return 0;
}

int cmd_certify(const std::vector<std::string>& prop_key,
                const std::vector<std::string>& cor_int,
                const std::vector<std::string>& greedy4, const GlobalOpts& global,
                std::ostream& out, std::ostream& err) {
  const int modes = !prop_key.empty() + !cor_int.empty() + !greedy4.empty();
  if (modes != 1) {
    err << "error: choose exactly one of --prop-key, --cor-int, --greedy4\n";
    return 2;
  }
  Json inputs, results;
  if (!prop_key.empty()) {
    const BigInt d = parse_bigint(prop_key[0]);
    const BigInt index = parse_bigint(prop_key[1]);
    const Rational q = parse_rational(prop_key[2]);
    inputs = {{"d", d.str()}, {"index", index.str()}, {"qhat3", format_rational(q)}};
    results["certificate"] = certificate_to_json(prop_key_certificate(d, index, q));
  } else if (!cor_int.empty()) {
    const BigInt m = parse_bigint(cor_int[0]);
    const BigInt h_order = parse_bigint(cor_int[1]);
    const BigInt g_order = parse_bigint(cor_int[2]);
    const Rational q = parse_rational(cor_int[3]);
    inputs = {{"m", m.str()}, {"h_order", h_order.str()}, {"g_order", g_order.str()},
              {"qhat3", format_rational(q)}};
    results["certificate"] =
        certificate_to_json(cor_int_certificate(m, h_order, g_order, q));
  } else {
    const BigInt n = parse_bigint(greedy4[0]);
    const BigInt d1 = parse_bigint(greedy4[1]);
    const BigInt paired = parse_bigint(greedy4[2]);
    const Rational q = parse_rational(greedy4[3]);
    inputs = {{"n", n.str()}, {"d1", d1.str()}, {"paired_size", paired.str()},
              {"qhat4", format_rational(q)}};
    Greedy4Breakdown breakdown;
    const Certificate cert = greedy4_certificate(n, d1, paired, q, {}, &breakdown);
    results["certificate"] = certificate_to_json(cert);
    results["breakdown"] = {{"p3", rational_to_json(breakdown.p3)},
                            {"p2", rational_to_json(breakdown.p2)},
                            {"q3", rational_to_json(breakdown.q3)},
                            {"q2", rational_to_json(breakdown.q2)},
                            {"p", rational_to_json(breakdown.p)}};
  }
  emit_report("certify", inputs, results, global, false, out);
  return 0;
}

int cmd_rank(const std::string& group_file, std::int64_t stabilizer,
             const std::string& index_str, const std::string& rank_str,
             const GlobalOpts& global, std::ostream& out, std::ostream& err) {
  const bool live = !group_file.empty();
  const bool arithmetic = !index_str.empty() && !rank_str.empty();
  if (live == arithmetic) {
    err << "error: choose exactly one mode (group file with --stabilizer, or --index "
           "with --rank)\n";
    return 2;
  }
  if (arithmetic) {
    const BigInt index = parse_bigint(index_str);
    const BigInt rank = parse_bigint(rank_str);
    const Rational bound = rank_subdegree_lower_bound(index, rank);
    emit_report("rank", {{"index", index.str()}, {"rank", rank.str()}},
                {{"subdegree_lower_bound", rational_to_json(bound)}}, global, false, out);
    return 0;
  }
  const Group g = load_group_file(group_file);
  const Point alpha = stabilizer >= 0 ? static_cast<Point>(stabilizer) : 0;
  const SuborbitProfile profile = suborbit_profile(g, alpha);
  Json results = {{"profile", suborbit_profile_to_json(profile)}};
  if (profile.rank >= 2 && g.degree() >= 2)
    results["subdegree_lower_bound"] = rational_to_json(rank_subdegree_lower_bound(
        BigInt(static_cast<std::uint64_t>(g.degree())),
        BigInt(static_cast<std::uint64_t>(profile.rank))));
  emit_report("rank",
              {{"group_file", group_file}, {"group", g.label()},
               {"degree", g.degree()}, {"stabilizer", alpha}},
              results, global, false, out);
  return 0;
}

int cmd_search(const std::string& group_file, const std::string& subgroup_file,
               const std::string& threshold_str, std::uint64_t max_iters, bool verbose,
               const GlobalOpts& global, std::ostream& out, std::ostream&) {
  const Group g = load_group_file(group_file);
  const Group h = load_group_file(subgroup_file);
  Rng rng(global.seed);
  const SearchOutcome outcome = search_until_below(
      g, h, parse_bigint(threshold_str), max_iters, rng, verbose, global.budget);
  emit_report("search",
              {{"group_file", group_file}, {"subgroup_file", subgroup_file},
               {"threshold", threshold_str}, {"max_iters", max_iters}},
              {{"outcome", search_outcome_to_json(outcome, verbose)}}, global, true, out);
  return 0;
}

int cmd_fixture(const std::string& name, bool list, const std::string& out_file,
                const GlobalOpts& global, std::ostream& out, std::ostream& err) {
  if (list) {
    Json names = fixture_names();
    emit_report("fixture", Json::object(), {{"names", names}}, global, false, out);
    return 0;
  }
  if (name.empty()) {
    err << "error: fixture name required (or --list)\n";
    return 2;
  }
  const Json j = group_to_json(fixture_group(name));
  if (!out_file.empty()) {
    std::ofstream f(out_file);
    if (!f) {
      err << "error: cannot write " << out_file << "\n";
      return 1;
    }
    f << j.dump(2) << "\n";
    return 0;
  }
  out << j.dump(2) << "\n";
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"permutation group base analysis toolkit"};
  app.require_subcommand(1);
  GlobalOpts global;
  app.add_option("--format", global.format, "output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--seed", global.seed, "random seed");
  app.add_option("--jobs", global.jobs, "worker cap");
  app.add_option("--budget", global.budget, "search node budget");

  auto* greedy = app.add_subcommand("greedy", "greedy base runs and exact maximum");
  std::string greedy_file, greedy_policy = "deterministic";
  bool greedy_max = false;
  greedy->add_option("group_file", greedy_file)->required();
  greedy->add_option("--policy", greedy_policy)
      ->check(CLI::IsMember({"deterministic", "random"}));
  greedy->add_flag("--max", greedy_max, "exact maximum greedy base size by backtrack");

  auto* bounds = app.add_subcommand("bounds", "fixed point ratios and qhat");
  std::string bounds_group, bounds_class_data, bounds_subgroup;
  std::int64_t bounds_stab = -1;
  std::uint64_t bounds_c = 3;
  bounds->add_option("group_file", bounds_group);
  bounds->add_option("--class-data", bounds_class_data);
  bounds->add_option("--subgroup-file", bounds_subgroup);
  bounds->add_option("--stabilizer", bounds_stab);
  bounds->add_option("--c", bounds_c);

  auto* certify = app.add_subcommand("certify", "exact-rational certificates");
  std::vector<std::string> opt_prop_key, opt_cor_int, opt_greedy4;
  certify->add_option("--prop-key", opt_prop_key, "d index qhat3")->expected(3);
  certify->add_option("--cor-int", opt_cor_int, "m h_order g_order qhat3")->expected(4);
  certify->add_option("--greedy4", opt_greedy4, "n d1 paired_size qhat4")->expected(4);

  auto* rank = app.add_subcommand("rank", "suborbit profiles and rank bound");
  std::string rank_group, rank_index, rank_rank;
  std::int64_t rank_stab = -1;
  rank->add_option("group_file", rank_group);
  rank->add_option("--stabilizer", rank_stab);
  rank->add_option("--index", rank_index);
  rank->add_option("--rank", rank_rank);

  auto* search = app.add_subcommand("search", "random conjugate intersection search");
  std::string search_group, search_subgroup, search_threshold;
  std::uint64_t search_iters = 1000;
  bool search_verbose = false;
  search->add_option("group_file", search_group)->required();
  search->add_option("subgroup_file", search_subgroup)->required();
  search->add_option("--threshold", search_threshold)->required();
  search->add_option("--max-iters", search_iters);
  search->add_flag("--verbose", search_verbose, "include the full sample trace");

  auto* fixture = app.add_subcommand("fixture", "dump a built-in fixture group");
  std::string fixture_name, fixture_out;
  bool fixture_list = false;
  fixture->add_option("name", fixture_name);
  fixture->add_flag("--list", fixture_list);
  fixture->add_option("--out", fixture_out);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (greedy->parsed())
      return cmd_greedy(greedy_file, greedy_policy, greedy_max, global, out, err);
    if (bounds->parsed())
      return cmd_bounds(bounds_group, bounds_class_data, bounds_subgroup, bounds_stab,
                        bounds_c, global, out, err);
    if (certify->parsed())
      return cmd_certify(opt_prop_key, opt_cor_int, opt_greedy4, global, out, err);
    if (rank->parsed())
      return cmd_rank(rank_group, rank_stab, rank_index, rank_rank, global, out, err);
    if (search->parsed())
      return cmd_search(search_group, search_subgroup, search_threshold, search_iters,
                        search_verbose, global, out, err);
    if (fixture->parsed())
      return cmd_fixture(fixture_name, fixture_list, fixture_out, global, out, err);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  err << "error: no command\n";
  return 2;
}

}  // namespace basekit
