// Copyright 2026 The nml Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>

#include "nml/nml.hpp"

namespace nml::cli {
namespace {

constexpr int kDisplayDecimals = 4;

struct Globals {
  std::string format;  // empty: command default
  std::uint64_t max_space = kDefaultMaxSpace;
  unsigned threads = 0;
  bool timing = false;
  std::string out_path;

  unsigned worker_threads() const {
    if (threads > 0) return threads;
    return std::max(1u, std::thread::hardware_concurrency());
  }
  bool csv(const char* fallback = "json") const { return (format.empty() ? fallback : format) == std::string("csv"); }
};

/// Either a JSON report or preformatted text (CSV, frame JSON).
struct Output {
  std::optional<Json> report;
  std::string text;
};

Json report_header(const std::string& command, Json inputs) {
  Json r;
  r["schema"] = kSchema;
  r["command"] = command;
  r["inputs"] = std::move(inputs);
  return r;
}

void put_rational(Json& r, const std::string& key, const ExactRational& value, int decimals = kDisplayDecimals) {
  r[key] = rational_json(value);
  r[key + "_decimal"] = to_decimal_string(value, decimals);
}

Json frame_summary(const LotteryFrame& frame) { return frame_to_json(frame); }

std::string csv_line(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ',';
    line += cells[i];
  }
  return line + "\n";
}

FrameDocument load(const std::string& path, const Globals& g, std::ostream& err) {
  FrameDocument doc = read_frame_file(path, g.max_space);
  for (const auto& w : doc.warnings) err << "warning: " << w << "\n";
  return doc;
}

Output nm_command(const std::string& path, const Globals& g, std::ostream& err) {
  const FrameDocument doc = load(path, g, err);
  const NearMissReport rep = near_miss_index(doc.frame, g.max_space);
  const bool perfect = is_perfect_radius1(doc.frame, g.max_space);
  if (g.csv()) {
    std::string text = csv_line({"q", "n", "winners", "index", "p", "seller_value", "covering_radius"});
    text += csv_line({std::to_string(doc.frame.q()), std::to_string(doc.frame.n()),
                      std::to_string(doc.frame.winning_count()), to_fraction_string(rep.index),
                      to_fraction_string(rep.win_probability), to_fraction_string(rep.seller_value),
                      std::to_string(rep.profile.covering_radius())});
    return {std::nullopt, text};
  }
  Json r = report_header("nm", {{"q", doc.frame.q()}, {"n", doc.frame.n()}, {"winners", doc.frame.winning_count()}});
  put_rational(r, "index", rep.index);
  put_rational(r, "p", rep.win_probability);
  put_rational(r, "seller_value", rep.seller_value);
  r["profile"] = rep.profile.counts;
  r["covering_radius"] = rep.profile.covering_radius();
  r["perfect_radius1"] = perfect;
  return {r, {}};
}

Output frame_output(const LotteryFrame& frame, const std::optional<std::vector<std::string>>& labels = std::nullopt) {
  return {std::nullopt, write_frame(frame, labels)};
}

Json certificate_json(const SearchCertificate& cert) {
  Json r;
  r["kind"] = to_string(cert.kind);
  r["size"] = cert.frame.winning_count();
  r["target_radius"] = cert.target_radius;
  r["verified_radius"] = cert.verified_radius;
  r["verified"] = cert.verified;
  r["nodes_explored"] = cert.nodes_explored;
  if (cert.seed) r["seed"] = *cert.seed;
  if (cert.target_size) {
    r["target_size"] = *cert.target_size;
    r["target_met"] = cert.target_met;
  }
  r["frame"] = frame_summary(cert.frame);
  return r;
}

Json design_json(const SellerDesign& d, bool with_frame) {
  Json r;
  r["q"] = d.params.q();
  r["m"] = d.params.m();
  r["n"] = d.params.n();
  r["winners_log_q"] = d.params.dimension();
  put_rational(r, "p", d.params.win_probability());
  put_rational(r, "value", d.value);
  put_rational(r, "bound", d.bound);
  r["optimal"] = d.optimal;
  r["verified"] = d.verified;
  if (!d.verified) r["note"] = "unverified: analytic only";
  if (with_frame && d.frame) r["frame"] = frame_summary(*d.frame);
  return r;
}

struct Table1Options {
  unsigned max_n = 5;
  unsigned exact_max_n = 5;
  std::uint64_t seed = 1;
  std::uint64_t budget = 2'000'000;
};

Output table1(const Table1Options& o, const Globals& g) {
  struct Row {
    unsigned radius;
    unsigned n;
    std::size_t size;
    std::string method;
  };
  std::vector<Row> rows;
  for (unsigned radius = 1; radius <= 2; ++radius) {
    for (unsigned n = radius; n <= o.max_n; ++n) {
      CoveringSearchOptions opts;
      opts.max_space = g.max_space;
      opts.threads = g.worker_threads();
      std::string method = "exact";
      if (n > o.exact_max_n) {
        opts.mode = SearchMode::kHeuristic;
        opts.seed = o.seed;
        opts.budget = o.budget;
        method = "heuristic";
      }
      const auto cert = minimal_covering_code(2, n, radius, opts);
      rows.push_back({radius, n, cert.frame.winning_count(), method});
    }
  }
  if (g.csv("csv")) {
    std::string text = csv_line({"R", "n", "K", "method"});
    for (const auto& row : rows) {
      text += csv_line({std::to_string(row.radius), std::to_string(row.n), std::to_string(row.size), row.method});
    }
    return {std::nullopt, text};
  }
  Json r = report_header("tables", {{"which", "table1"}, {"max_n", o.max_n}, {"exact_max_n", o.exact_max_n}});
  Json arr = Json::array();
  for (const auto& row : rows) arr.push_back({{"R", row.radius}, {"n", row.n}, {"K", row.size}, {"method", row.method}});
  r["rows"] = std::move(arr);
  return {r, {}};
}

Output m_table(const Globals& g, const std::string& command) {
  const auto rows = paper_m_bound_table();
  if (g.csv("csv")) {
    std::string text = csv_line({"q", "n", "p", "M"});
    for (const auto& row : rows) {
      text += csv_line({std::to_string(row.q), std::to_string(row.n), to_decimal_string(row.threshold_p, 4),
                        to_decimal_string(row.m, 2)});
    }
    return {std::nullopt, text};
  }
  Json r = report_header(command, {{"grid", "paper"}});
  Json arr = Json::array();
  for (const auto& row : rows) {
    Json j{{"q", row.q}, {"n", row.n}};
    put_rational(j, "p", row.threshold_p);
    put_rational(j, "M", row.m, 2);
    arr.push_back(std::move(j));
  }
  r["rows"] = std::move(arr);
  return {r, {}};
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Near-miss index analysis and design of framed lotteries", "nml"};
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--max-space", g.max_space, "Largest q^n to enumerate")
      ->envname("NML_MAX_SPACE")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", g.threads, "Worker threads for heuristic restarts (0: all cores)");
  app.add_flag("--timing", g.timing, "Add wall-clock timing to JSON reports");
  app.add_option("--out", g.out_path, "Write the output to a file instead of stdout");

  std::function<Output()> action;

  // nm
  auto* nm = app.add_subcommand("nm", "Near-miss index, win probability and seller value of a frame");
  std::string nm_in;
  nm->add_option("--in", nm_in, "Frame JSON file")->required();
  nm->callback([&] { action = [&] { return nm_command(nm_in, g, err); }; });

  // build
  auto* build = app.add_subcommand("build", "Frame constructions (emit frame JSON)");
  build->require_subcommand(1);
  build->fallthrough();
  unsigned b_q = 2, b_m = 1, b_t = 1, b_base = 2;
  std::uint64_t b_seed = 1;
  std::string b_in;
  auto* b_hamming = build->add_subcommand("hamming", "Perfect radius-1 Hamming code frame");
  b_hamming->add_option("--q", b_q, "Prime power alphabet size")->required();
  b_hamming->add_option("--m", b_m, "Number of parity checks")->required();
  b_hamming->callback([&] {
    action = [&] { return frame_output(hamming_code(HammingCodeParams(b_q, b_m), g.max_space)); };
  });
  auto add_in = [&](CLI::App* sub) { sub->add_option("--in", b_in, "Frame JSON file")->required(); };
  auto* b_extend = build->add_subcommand("extend", "Append a free coordinate (W x Q)");
  add_in(b_extend);
  b_extend->callback([&] {
    action = [&] {
      const auto doc = load(b_in, g, err);
      return frame_output(extend_length(doc.frame), doc.labels);
    };
  });
  auto* b_lift = build->add_subcommand("lift", "Same as extend; keeps the covering radius");
  add_in(b_lift);
  b_lift->callback([&] {
    action = [&] {
      const auto doc = load(b_in, g, err);
      return frame_output(lift_code(doc.frame), doc.labels);
    };
  });
  auto* b_split = build->add_subcommand("split", "Split every symbol into t copies");
  b_split->add_option("--t", b_t, "Copies per symbol")->required()->check(CLI::PositiveNumber);
  add_in(b_split);
  b_split->callback([&] {
    action = [&] { return frame_output(split_symbols(load(b_in, g, err).frame, b_t)); };
  });
  auto* b_fold = build->add_subcommand("fold", "Rewrite an alphabet of size base^t as t base-ary coordinates");
  b_fold->add_option("--base", b_base, "Target alphabet size")->required();
  b_fold->add_option("--t", b_t, "Coordinates per symbol")->required()->check(CLI::PositiveNumber);
  add_in(b_fold);
  b_fold->callback([&] {
    action = [&] { return frame_output(fold_alphabet(load(b_in, g, err).frame, b_t, b_base)); };
  });
  auto* b_r1n3 = build->add_subcommand("r1n3", "Optimal length-3 radius-1 code");
  b_r1n3->add_option("--q", b_q, "Alphabet size")->required();
  b_r1n3->add_option("--seed", b_seed, "Search seed");
  b_r1n3->callback([&] { action = [&] { return frame_output(radius1_length3_code(b_q, b_seed, g.max_space)); }; });

  // bound
  auto* bound = app.add_subcommand("bound", "Closed-form bounds");
  bound->require_subcommand(1);
  bound->fallthrough();
  unsigned bd_q = 2, bd_n = 1, bd_r = 1;
  std::string bd_p, bd_grid = "paper";
  auto* bd_m = bound->add_subcommand("m", "Threshold probability and M-bound");
  bd_m->add_option("--q", bd_q)->required();
  bd_m->add_option("--n", bd_n)->required();
  bd_m->callback([&] {
    action = [&]() -> Output {
      const MBoundRow row = m_bound(bd_q, bd_n);
      if (g.csv()) {
        return {std::nullopt, csv_line({"q", "n", "p", "M"}) +
                                  csv_line({std::to_string(row.q), std::to_string(row.n),
                                            to_decimal_string(row.threshold_p, 4), to_decimal_string(row.m, 2)})};
      }
      Json r = report_header("bound m", {{"q", bd_q}, {"n", bd_n}});
      put_rational(r, "threshold_p", row.threshold_p);
      put_rational(r, "M", row.m, 2);
      return {r, {}};
    };
  });
  auto* bd_sphere = bound->add_subcommand("sphere", "Sphere covering lower bound on K_q(n,R)");
  bd_sphere->add_option("--q", bd_q)->required();
  bd_sphere->add_option("--n", bd_n)->required();
  bd_sphere->add_option("--r", bd_r)->required();
  bd_sphere->callback([&] {
    action = [&]() -> Output {
      const BigInt b = sphere_covering_bound(bd_q, bd_n, bd_r);
      if (g.csv()) return {std::nullopt, csv_line({"q", "n", "R", "bound"}) +
                                             csv_line({std::to_string(bd_q), std::to_string(bd_n),
                                                       std::to_string(bd_r), b.str()})};
      Json r = report_header("bound sphere", {{"q", bd_q}, {"n", bd_n}, {"R", bd_r}});
      r["bound"] = b.str();
      return {r, {}};
    };
  });
  auto* bd_ratio = bound->add_subcommand("ratio", "Bounds on NM/p at a realizable p");
  bd_ratio->add_option("--q", bd_q)->required();
  bd_ratio->add_option("--n", bd_n)->required();
  bd_ratio->add_option("--p", bd_p, "Win probability as num/den")->required();
  bd_ratio->callback([&] {
    action = [&]() -> Output {
      const ExactRational p = parse_rational(bd_p);
      const RatioBounds b = ratio_bounds(bd_q, bd_n, p);
      Json r = report_header("bound ratio", {{"q", bd_q}, {"n", bd_n}, {"p", rational_json(p)}});
      r["regime"] = b.below_threshold ? "p <= threshold" : "p > threshold";
      put_rational(r, "lower", b.lower);
      put_rational(r, "upper", b.upper);
      return {r, {}};
    };
  });
  auto* bd_table = bound->add_subcommand("table", "Threshold/M-bound table");
  bd_table->add_option("--grid", bd_grid)->check(CLI::IsMember({"paper"}));
  bd_table->callback([&] { action = [&] { return m_table(g, "bound table"); }; });

  // search
  auto* search = app.add_subcommand("search", "Exact and heuristic searches");
  search->require_subcommand(1);
  search->fallthrough();
  unsigned s_q = 2, s_n = 1, s_r = 1;
  std::uint64_t s_w = 1;
  std::string s_mode = "exact";
  CoveringSearchOptions s_opts;
  FrameSearchOptions f_opts;
  std::optional<std::size_t> s_target;
  auto* s_kqnr = search->add_subcommand("kqnr", "Minimal covering code K_q(n,R)");
  s_kqnr->add_option("--q", s_q)->required();
  s_kqnr->add_option("--n", s_n)->required();
  s_kqnr->add_option("--r", s_r)->required();
  s_kqnr->add_option("--mode", s_mode)->check(CLI::IsMember({"exact", "heuristic"}));
  s_kqnr->add_option("--budget", s_opts.budget, "Node budget (exact) or swap budget (heuristic)");
  s_kqnr->add_option("--seed", s_opts.seed);
  s_kqnr->add_option("--target", s_target, "Heuristic: stop at this size");
  s_kqnr->add_option("--restarts", s_opts.restarts);
  s_kqnr->add_option("--exact-cap", s_opts.exact_space_cap, "Largest q^n for exact mode");
  s_kqnr->callback([&] {
    action = [&] {
      s_opts.mode = s_mode == "exact" ? SearchMode::kExact : SearchMode::kHeuristic;
      s_opts.max_space = g.max_space;
      s_opts.threads = g.worker_threads();
      s_opts.target_size = s_target;
      const auto cert = minimal_covering_code(s_q, s_n, s_r, s_opts);
      Json r = report_header("search kqnr", {{"q", s_q}, {"n", s_n}, {"R", s_r}, {"mode", s_mode}});
      r.update(certificate_json(cert));
      return Output{r, {}};
    };
  });
  auto* s_frame = search->add_subcommand("frame", "Frame with maximal index for a fixed number of winners");
  s_frame->add_option("--q", s_q)->required();
  s_frame->add_option("--n", s_n)->required();
  s_frame->add_option("--w", s_w, "Number of winners")->required();
  s_frame->add_option("--budget", f_opts.budget);
  s_frame->callback([&] {
    action = [&] {
      const auto best = optimal_frame(s_q, s_n, s_w, f_opts);
      Json r = report_header("search frame", {{"q", s_q}, {"n", s_n}, {"w", s_w}});
      put_rational(r, "index", best.index);
      put_rational(r, "p", best.frame.win_probability());
      r["distance_sum"] = best.distance_sum;
      r["nodes_explored"] = best.nodes_explored;
      r["frame"] = frame_summary(best.frame);
      return Output{r, {}};
    };
  });
  auto* s_curve = search->add_subcommand("curve", "Minimal distance sum for every winner count");
  s_curve->add_option("--q", s_q)->required();
  s_curve->add_option("--n", s_n)->required();
  s_curve->callback([&] {
    action = [&]() -> Output {
      const auto curve = min_distance_sum_curve(s_q, s_n);
      const BigInt denom = BigInt(s_n) * BigInt(HammingSpace(s_q, s_n).size());
      if (g.csv()) {
        std::string text = csv_line({"m", "distance_sum", "index"});
        for (std::size_t i = 0; i < curve.size(); ++i) {
          text += csv_line({std::to_string(i + 1), std::to_string(curve[i]),
                            to_fraction_string(ExactRational(1) - ratio(BigInt(curve[i]), denom))});
        }
        return {std::nullopt, text};
      }
      Json r = report_header("search curve", {{"q", s_q}, {"n", s_n}});
      r["curve"] = curve;
      bool convex = true;
      for (std::size_t i = 2; i < curve.size(); ++i) {
        if (static_cast<long long>(curve[i] + curve[i - 2]) < 2 * static_cast<long long>(curve[i - 1])) convex = false;
      }
      r["convex"] = convex;
      return {r, {}};
    };
  });

  // seller
  auto* seller = app.add_subcommand("seller", "Seller design problem");
  seller->require_subcommand(1);
  seller->fallthrough();
  unsigned sl_q = 2, sl_m = 1, sl_mmax = 1;
  bool sl_frame = false;
  auto* sl_design = seller->add_subcommand("design", "Optimal Hamming-parameter design");
  sl_design->add_option("--q", sl_q)->required();
  sl_design->add_option("--m", sl_m)->required();
  sl_design->add_flag("--with-frame", sl_frame, "Include the winning set");
  sl_design->callback([&] {
    action = [&] {
      Json r = report_header("seller design", {{"q", sl_q}, {"m", sl_m}});
      r.update(design_json(design_optimal(sl_q, sl_m, g.max_space), sl_frame));
      return Output{r, {}};
    };
  });
  auto* sl_schedule = seller->add_subcommand("schedule", "Designs for m = 1..mmax");
  sl_schedule->add_option("--q", sl_q)->required();
  sl_schedule->add_option("--mmax", sl_mmax)->required();
  sl_schedule->callback([&] {
    action = [&]() -> Output {
      const auto designs = corollary_schedule(sl_q, sl_mmax, g.max_space);
      if (g.csv()) {
        std::string text = csv_line({"m", "n", "p", "value", "verified"});
        for (const auto& d : designs) {
          text += csv_line({std::to_string(d.params.m()), std::to_string(d.params.n()),
                            to_fraction_string(d.params.win_probability()), to_fraction_string(d.value),
                            d.verified ? "true" : "false"});
        }
        return {std::nullopt, text};
      }
      Json r = report_header("seller schedule", {{"q", sl_q}, {"mmax", sl_mmax}});
      Json arr = Json::array();
      for (const auto& d : designs) arr.push_back(design_json(d, false));
      r["designs"] = std::move(arr);
      return {r, {}};
    };
  });
  auto* sl_minlen = seller->add_subcommand("minlen", "Check that no shorter length reaches the maximal value");
  sl_minlen->add_option("--q", sl_q)->required();
  sl_minlen->add_option("--m", sl_m)->required();
  sl_minlen->callback([&] {
    action = [&] {
      Json r = report_header("seller minlen", {{"q", sl_q}, {"m", sl_m}});
      r["n"] = HammingCodeParams(sl_q, sl_m).n();
      r["minimal"] = minimal_length_check(sl_q, sl_m);
      return Output{r, {}};
    };
  });

  // tables
  auto* tables = app.add_subcommand("tables", "Reproduce reference tables");
  std::string which = "table1";
  Table1Options t1;
  tables->add_option("--which", which)->check(CLI::IsMember({"table1", "mbound"}));
  tables->add_option("--max-n", t1.max_n)->check(CLI::Range(1u, 12u));
  tables->add_option("--exact-max-n", t1.exact_max_n, "Longest length solved exactly (others heuristic)");
  tables->add_option("--seed", t1.seed);
  tables->add_option("--budget", t1.budget, "Heuristic swap budget per entry");
  tables->callback([&] {
    action = [&] { return which == "table1" ? table1(t1, g) : m_table(g, "tables"); };
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  }
  if (!action) {
    err << "error: no command\n";
    return kExitInvalid;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    Output result = action();
    const auto elapsed = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start);
    std::string text;
    if (result.report) {
      if (g.timing) (*result.report)["timing_ms"] = elapsed.count();
      text = result.report->dump(2) + "\n";
    } else {
      text = std::move(result.text);
    }
    if (g.out_path.empty()) {
      out << text;
    } else {
      std::ofstream file(g.out_path, std::ios::binary);
      if (!file) throw InvalidInput("cannot write '" + g.out_path + "'");
      file << text;
    }
    return kExitOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kExitInvalid;
  } catch (const LimitExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitLimit;
  }
}

}  // namespace nml::cli
