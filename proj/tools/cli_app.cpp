#include "cli_app.hpp"

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "coinweigh/bounds.hpp"
#include "coinweigh/construct.hpp"
#include "coinweigh/nontight.hpp"
#include "coinweigh/search.hpp"
#include "coinweigh/sequences.hpp"
#include "coinweigh/special.hpp"
#include "coinweigh/verify.hpp"

namespace coinweigh {

namespace {

using nlohmann::json;

json weighing_json(const Weighing& w) {
  const Classification c = classify(w);
  json j;
  j["n"] = w.n();
  j["multiplicities"] = w.multiplicities;
  j["outcome"] = outcome_name(c.outcome);
  j["total_weight"] = c.total_weight;
  j["total_coins"] = c.total_coins;
  return j;
}

json bounds_json(const BoundsReport& r) {
  json j;
  j["n"] = r.n;
  j["s_star"] = r.s_star;
  j["w_left"] = r.w_left;
  j["w_right"] = r.w_right;
  j["w_bounding"] = r.w_bounding;
  j["coin_floor"] = r.coin_floor;
  j["coin_ceiling"] = r.coin_ceiling ? json(*r.coin_ceiling) : json(nullptr);
  return j;
}

void print_bounds_text(std::ostream& out, const BoundsReport& r) {
  out << "n=" << r.n << " s*=" << r.s_star << " W_L=" << r.w_left << " W_R=" << r.w_right
      << " W_B=" << r.w_bounding << " coin_floor=" << r.coin_floor << " coin_ceiling=";
  if (r.coin_ceiling) {
    out << *r.coin_ceiling;
  } else {
    out << "none";
  }
  out << "\n";
}

json nontight_json(const NonTightReport& r) {
  json j;
  j["n"] = r.n;
  j["s_prime"] = r.s_prime;
  j["weight_floor"] = r.weight_floor;
  j["coin_floor_num"] = r.coin_floor.num;
  j["coin_floor_den"] = r.coin_floor.den;
  j["coin_floor_ceiling"] = r.coin_floor.ceil();
  j["dominated"] = r.dominated;
  return j;
}

json construction_json(const Construction& c) {
  json j = weighing_json(c.weighing);
  j["verifying"] = true;
  j["case_tag"] = case_tag_name(c.case_tag);
  json groups = json::array();
  for (const auto& g : c.added_groups) {
    groups.push_back({{"pan", g.pan == Pan::Left ? "left" : "right"},
                      {"group_size", g.group_size},
                      {"copies", g.copies}});
  }
  j["added_groups"] = groups;
  j["rendered"] = render(c.weighing);
  return j;
}

int cmd_bounds(Int n, bool as_json, std::ostream& out) {
  const BoundsReport r = bounds_report(n);
  if (as_json) {
    out << bounds_json(r).dump() << "\n";
  } else {
    print_bounds_text(out, r);
  }
  return 0;
}

int cmd_construct(Int n, bool as_json, std::ostream& out) {
  const Construction c = construct_weight_optimal(n);
  if (as_json) {
    out << construction_json(c).dump() << "\n";
    return 0;
  }
  const Classification cls = classify(c.weighing);
  out << render(c.weighing) << "  weight=" << cls.total_weight << " coins=" << cls.total_coins
      << "\n";
  return 0;
}

int cmd_verify(const std::string& mults, Int cap, bool as_json, std::ostream& out,
               std::ostream& err) {
  const Weighing w = parse_multiplicity_list(mults);
  if (cap > kDefaultOracleCap) {
    err << "warning: brute force above n=" << kDefaultOracleCap << " gets slow fast\n";
  }
  const VerifyReport report = is_verifying(w, cap);
  if (as_json) {
    json j = weighing_json(w);
    j["verifying"] = report.verifying;
    j["method"] = verify_method_name(report.method);
    j["permutations_checked"] = report.permutations_checked;
    if (report.counterexample) j["counterexample"] = *report.counterexample;
    out << j.dump() << "\n";
    return 0;
  }
  out << "verifying: " << (report.verifying ? "true" : "false") << " ("
      << verify_method_name(report.method) << ")\n";
  if (report.counterexample) {
    out << "counterexample:";
    for (Int v : *report.counterexample) out << " " << v;
    out << "\n";
  }
  return 0;
}

int cmd_search(Int n, const std::string& mode, Int cap, bool has_cap, bool all_oracle, Int mcap,
               bool has_mcap, const SearchOptions& opts, bool as_json, std::ostream& out) {
  const Objective obj = mode == "coins" ? Objective::Coins : Objective::Weight;
  if (!has_cap) cap = default_search_cap(n, obj);
  SearchResult result;
  if (all_oracle) {
    if (!has_mcap) mcap = cap;
    result = search_all_oracle(n, obj, mcap, cap, opts);
  } else {
    result = search_downhill(n, obj, cap, opts);
  }
  if (as_json) {
    json j;
    j["n"] = result.n;
    j["objective"] = objective_name(result.objective);
    j["optimum"] = result.optimum;
    j["proven"] = result.proven;
    j["restriction"] = restriction_name(result.restriction);
    j["nodes_explored"] = result.nodes_explored;
    json witnesses = json::array();
    for (const auto& w : result.witnesses) {
      json wj = weighing_json(w);
      wj["verifying"] = true;
      witnesses.push_back(wj);
    }
    j["witnesses"] = witnesses;
    out << j.dump() << "\n";
    return 0;
  }
  out << "optimum " << objective_name(result.objective) << "=" << result.optimum
      << " proven=" << (result.proven ? "true" : "false") << " nodes=" << result.nodes_explored
      << "\n";
  for (const auto& w : result.witnesses) {
    out << "witness: " << format_multiplicities(w) << "  (" << render(w) << ")\n";
  }
  return 0;
}

int cmd_sequence(Int n_from, Int n_to, bool oeis, const OeisOptions& oeis_opts, bool as_json,
                 std::ostream& out) {
  if (oeis) {
    const auto checks = run_named_oeis_checks(oeis_opts);
    bool all_match = true;
    if (as_json) {
      json arr = json::array();
      for (const auto& c : checks) {
        json j;
        j["sequence_id"] = c.sequence_id;
        j["offset_map"] = c.offset_map;
        j["matched_terms"] = c.matched_terms;
        j["status"] = c.status == OeisStatus::Match        ? "match"
                      : c.status == OeisStatus::Mismatch   ? "mismatch"
                                                           : "unavailable";
        if (c.first_bad_index) j["first_bad_index"] = *c.first_bad_index;
        if (!c.detail.empty()) j["detail"] = c.detail;
        arr.push_back(j);
        all_match = all_match && c.status == OeisStatus::Match;
      }
      out << arr.dump() << "\n";
    } else {
      for (const auto& c : checks) {
        out << c.sequence_id << ": ";
        switch (c.status) {
          case OeisStatus::Match:
            out << "match (" << c.matched_terms << " terms, " << c.offset_map << ")";
            break;
          case OeisStatus::Mismatch:
            out << "MISMATCH";
            if (c.first_bad_index) out << " at local index " << *c.first_bad_index;
            if (!c.detail.empty()) out << ": " << c.detail;
            break;
          case OeisStatus::Unavailable:
            out << "unavailable: " << c.detail;
            break;
        }
        out << "\n";
        all_match = all_match && c.status == OeisStatus::Match;
      }
    }
    return all_match ? 0 : 1;
  }
  const auto rows = sequence_table(n_from, n_to);
  if (as_json) {
    json arr = json::array();
    for (const auto& r : rows) {
      json j;
      j["n"] = r.n;
      j["w_bounding"] = r.w_bounding;
      j["w_min"] = r.w_min;
      j["coin_floor"] = r.coin_floor;
      j["coin_ceiling"] = r.coin_ceiling ? json(*r.coin_ceiling) : json(nullptr);
      j["source"] = r.source == SequenceSource::Formula ? "formula" : "exception-table";
      arr.push_back(j);
    }
    out << arr.dump() << "\n";
  } else {
    for (const auto& r : rows) {
      out << "n=" << r.n << " W_B=" << r.w_bounding << " W_M=" << r.w_min
          << " coins>=" << r.coin_floor << " coins<=";
      if (r.coin_ceiling) {
        out << *r.coin_ceiling;
      } else {
        out << "none";
      }
      out << (r.source == SequenceSource::Formula ? "" : "  [exception]") << "\n";
    }
  }
  return 0;
}

int cmd_solo(Int n, int variant, bool as_json, std::ostream& out) {
  const SoloVariant v = variant == 0 ? SoloVariant::ZeroBased : SoloVariant::OneBased;
  const auto solo = construct_solo(n, v);
  if (!solo) {
    out << "none\n";
    return 1;
  }
  const Classification c = classify(solo->weighing);
  if (as_json) {
    json j = weighing_json(solo->weighing);
    j["verifying"] = true;
    j["kind"] = solo->kind == SoloKind::Balance ? "balance" : "tight-imbalance";
    out << j.dump() << "\n";
    return 0;
  }
  out << render(solo->weighing) << "  weight=" << c.total_weight << " coins=" << c.total_coins
      << (solo->kind == SoloKind::Balance ? "" : "  [tight imbalance]") << "\n";
  return 0;
}

int cmd_ap(Int n, Int d, bool as_json, std::ostream& out) {
  const auto ap = construct_ap(n, d);
  if (!ap) {
    out << "none\n";
    return 1;
  }
  if (as_json) {
    json j = weighing_json(*ap);
    j["verifying"] = true;
    j["d"] = d;
    out << j.dump() << "\n";
    return 0;
  }
  const Classification c = classify(*ap);
  out << format_multiplicities(*ap) << "  (" << render(*ap) << ")  weight=" << c.total_weight
      << " coins=" << c.total_coins << "\n";
  return 0;
}

int cmd_report(Int n, bool as_json, std::ostream& out) {
  const BoundsReport bounds = bounds_report(n);
  const Construction construction = construct_weight_optimal(n);
  std::optional<NonTightReport> nontight;
  if (n >= 3) nontight = dominance_table(n, n).front();
  if (as_json) {
    json j;
    j["bounds"] = bounds_json(bounds);
    j["construction"] = construction_json(construction);
    j["nontight"] = nontight ? nontight_json(*nontight) : json(nullptr);
    out << j.dump() << "\n";
    return 0;
  }
  print_bounds_text(out, bounds);
  const Classification c = classify(construction.weighing);
  out << "optimal: " << render(construction.weighing) << "  weight=" << c.total_weight
      << " coins=" << c.total_coins << " case=" << case_tag_name(construction.case_tag) << "\n";
  if (nontight) {
    std::ostringstream sp;
    sp.setf(std::ios::fixed);
    sp.precision(2);
    sp << nontight->s_prime;
    out << "non-tight: s'=" << sp.str() << " weight_floor=" << nontight->weight_floor
        << " coin_floor=" << nontight->coin_floor.num << "/" << nontight->coin_floor.den
        << " dominated=" << (nontight->dominated ? "true" : "false") << "\n";
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"balance-scale weighings that confirm coin-bag labels"};
  app.require_subcommand(1);

  Int n = 0;
  bool as_json = false;

  auto* bounds_cmd = app.add_subcommand("bounds", "bounding weights and coin bounds for n bags");
  bounds_cmd->add_option("n", n, "number of bags")->required();
  bounds_cmd->add_flag("--json", as_json, "JSON output");

  auto* construct_cmd = app.add_subcommand("construct", "weight-optimal verifying weighing");
  construct_cmd->add_option("n", n, "number of bags")->required();
  construct_cmd->add_flag("--json", as_json, "JSON output");

  std::string mults;
  Int verify_cap = kDefaultOracleCap;
  auto* verify_cmd = app.add_subcommand("verify", "decide whether a weighing is verifying");
  verify_cmd->add_option("multiplicities", mults, "comma-separated multiplicities")->required();
  verify_cmd->add_option("--cap", verify_cap, "brute-force size cap");
  verify_cmd->add_flag("--json", as_json, "JSON output");

  std::string mode = "weight";
  Int cap = 0, mcap = 0;
  bool all_oracle = false;
  SearchOptions sopts;
  double timeout_seconds = 0;
  int threads = 0;
  bool include_nontight = false;
  Int witness_limit = 64;
  auto* search_cmd = app.add_subcommand("search", "exhaustive search for optimal weighings");
  search_cmd->add_option("n", n, "number of bags")->required();
  search_cmd->add_option("--mode", mode, "objective: weight or coins")
      ->check(CLI::IsMember({"weight", "coins"}))
      ->required();
  auto* cap_opt = search_cmd->add_option("--cap", cap, "objective cap");
  auto* oracle_flag =
      search_cmd->add_flag("--all-oracle", all_oracle, "enumerate all vectors, test via oracle");
  auto* mcap_opt = search_cmd->add_option("--mcap", mcap, "multiplicity cap (oracle search)");
  mcap_opt->needs(oracle_flag);
  search_cmd->add_flag("--include-nontight", include_nontight,
                       "also search non-tight imbalances (oracle-checked)");
  search_cmd->add_option("--witness-limit", witness_limit, "max witnesses kept");
  search_cmd->add_option("--threads", threads, "worker threads (0 = all cores)");
  search_cmd->add_option("--timeout-seconds", timeout_seconds, "best-found result on timeout");
  search_cmd->add_flag("--json", as_json, "JSON output");

  Int n_to = 0;
  bool oeis = false;
  OeisOptions oeis_opts;
  auto* sequence_cmd = app.add_subcommand("sequence", "weight/coin sequences and OEIS checks");
  auto* from_opt = sequence_cmd->add_option("n_from", n, "first n");
  auto* to_opt = sequence_cmd->add_option("n_to", n_to, "last n");
  sequence_cmd->add_flag("--oeis", oeis, "cross-check the referenced OEIS sequences");
  sequence_cmd->add_flag("--offline", oeis_opts.offline, "use embedded fixtures, no network");
  sequence_cmd->add_option("--cache-dir", oeis_opts.cache_dir,
                           "b-file cache directory (default: $COINWEIGH_OEIS_CACHE)");
  sequence_cmd->add_flag("--json", as_json, "JSON output");

  int variant = 1;
  auto* solo_cmd = app.add_subcommand("solo", "solo weighing (one coin type on the right)");
  solo_cmd->add_option("n", n, "number of bags")->required();
  solo_cmd->add_option("--variant", variant, "0 = left multiplicities 0..n-2, 1 = 1..n-1")
      ->check(CLI::IsMember({0, 1}))
      ->required();
  solo_cmd->add_flag("--json", as_json, "JSON output");

  Int d = 3;
  auto* ap_cmd = app.add_subcommand("ap", "arithmetic-progression weighing");
  ap_cmd->add_option("n", n, "number of bags")->required();
  ap_cmd->add_option("--d", d, "common difference")->required();
  ap_cmd->add_flag("--json", as_json, "JSON output");

  auto* report_cmd = app.add_subcommand("report", "bounds + construction + non-tight summary");
  report_cmd->add_option("n", n, "number of bags")->required();
  report_cmd->add_flag("--json", as_json, "JSON output");

  std::vector<std::string> raw(args.rbegin(), args.rend());
  try {
    app.parse(raw);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  try {
    if (bounds_cmd->parsed()) return cmd_bounds(n, as_json, out);
    if (construct_cmd->parsed()) return cmd_construct(n, as_json, out);
    if (verify_cmd->parsed()) return cmd_verify(mults, verify_cap, as_json, out, err);
    if (search_cmd->parsed()) {
      sopts.witness_limit = witness_limit;
      sopts.threads = threads;
      sopts.timeout_seconds = timeout_seconds;
      sopts.include_nontight = include_nontight;
      return cmd_search(n, mode, cap, !cap_opt->empty(), all_oracle, mcap, !mcap_opt->empty(),
                        sopts, as_json, out);
    }
    if (sequence_cmd->parsed()) {
      if (!oeis && (from_opt->empty() || to_opt->empty())) {
        err << "sequence: need n_from and n_to (or --oeis)\n";
        return 2;
      }
      return cmd_sequence(n, n_to, oeis, oeis_opts, as_json, out);
    }
    if (solo_cmd->parsed()) return cmd_solo(n, variant, as_json, out);
    if (ap_cmd->parsed()) return cmd_ap(n, d, as_json, out);
    if (report_cmd->parsed()) return cmd_report(n, as_json, out);
    err << "no subcommand\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace coinweigh
