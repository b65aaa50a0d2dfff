// Copyright 2026 The splitshower Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "splitshower_cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>

#include "splitshower/calibrate.hpp"
#include "splitshower/entanglement.hpp"
#include "splitshower/error.hpp"
#include "splitshower/io.hpp"
#include "splitshower/jets.hpp"
#include "splitshower/noise.hpp"
#include "splitshower/qcd.hpp"
#include "splitshower/rng.hpp"
#include "splitshower/splitter.hpp"
#include "splitshower/stats.hpp"
#include "splitshower/svg.hpp"

namespace splitshower::cli {

namespace {

using splitter::SplittingParams;

// Plots are artifacts only; a failure is reported and otherwise ignored.
void try_plot(const std::string& path, const std::string& svg_text, std::ostream& log) {
  if (path.empty()) return;
  try {
    svg::write_file(path, svg_text);
  } catch (const std::exception& e) {
    fmt::print(log, "warning: plot not written: {}\n", e.what());
  }
}

double max_abs(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

SplittingParams random_params(Rng& rng) {
  const double g1 = rng.uniform01() * std::numbers::pi / 3.0;
  const double g3 = rng.uniform01() * std::numbers::pi;
  return SplittingParams::from_gamma1_gamma3(g1, g3);
}

std::vector<double> linspace(double lo, double hi, int n) {
  std::vector<double> v;
  if (n == 1) return {0.5 * (lo + hi)};
  for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * i / (n - 1));
  return v;
}

}  // namespace

int cmd_theory_check(const TheoryCheckOptions& o, std::ostream& log) {
  std::vector<io::CheckRow> rows;
  auto add = [&](std::string name, double err, double tol) {
    rows.push_back({std::move(name), err < tol, err, tol});
  };

  const auto grid = linspace(o.z_min, o.z_max, o.grid_points);
  double e_w = 0.0, e_amp = 0.0;
  for (double z : grid) {
    const auto rho = qcd::rho_sc(z);
    const double cq = entanglement::c_qcd(z).value();
    e_w = std::max(e_w, std::abs(entanglement::concurrence_wootters(rho.to_density()).value() - cq));
    const auto alt = qcd::rho_sc_from_amplitudes(qcd::helicity_amplitudes(z));
    e_amp = std::max(e_amp, (rho.matrix - alt.matrix).cwiseAbs().maxCoeff());
  }
  if (grid.size() == 1) fmt::print(log, "c_qcd({}) = {:.12g}\n", grid[0], entanglement::c_qcd(grid[0]).value());
  add("wootters_vs_c_qcd", e_w, 1e-8);
  add("spin_density_from_amplitudes", e_amp, 1e-12);

  Rng rng(o.seed);
  double e_s3 = 0.0, e_c = 0.0, e_red1 = 0.0, e_red3 = 0.0;
  for (int i = 0; i < o.samples; ++i) {
    const auto p = random_params(rng);
    const auto psi = qsim::run(splitter::build_block(p));
    const auto rho = qsim::to_density(psi);
    const auto ra = qsim::partial_trace(rho, {0});
    const auto rb = qsim::partial_trace(rho, {1});
    e_s3 = std::max(e_s3, std::abs(qsim::expect_sigma3(psi, 0) - p.z()));
    e_c = std::max(e_c, std::abs(entanglement::concurrence_pure(ra).value() -
                                 entanglement::c_circuit(p.gamma1(), p.gamma3()).value()));
    const auto pred1 = splitter::predicted_reduced_AB(1.0, p);
    e_red1 = std::max({e_red1, max_abs(ra.matrix(), pred1.a.matrix()), max_abs(rb.matrix(), pred1.b.matrix())});

    const auto first = random_params(rng);
    const splitter::ShowerTopology topo{splitter::TopologyKind::ThreeDominant, {first, p}};
    const auto rho3 = qsim::to_density(qsim::run(splitter::build_topology(topo)));
    const auto pred3 = splitter::predicted_reduced_AB(first.z(), p);
    e_red3 = std::max({e_red3, max_abs(qsim::partial_trace(rho3, {0}).matrix(), pred3.a.matrix()),
                       max_abs(qsim::partial_trace(rho3, {1}).matrix(), pred3.b.matrix())});
  }
  add("block_sigma3_vs_z", e_s3, 1e-9);
  add("block_concurrence_vs_closed_form", e_c, 1e-9);
  add("reduced_states_single_block", e_red1, 1e-10);
  add("reduced_states_three_dominant", e_red3, 1e-10);

  auto f = io::open_out(o.output);
  io::write_check_csv(f, rows);
  bool ok = true;
  for (const auto& r : rows) {
    fmt::print(log, "{:<36} {} max_abs_error={:.3e} tolerance={:.0e}\n", r.check, r.pass ? "pass" : "FAIL",
               r.max_abs_error, r.tolerance);
    ok = ok && r.pass;
  }
  return ok ? kExitOk : kExitData;
}

int cmd_calibrate(const CalibrateOptions& o, std::ostream& log) {
  auto in = io::open_in(o.input);
  const auto zs = io::read_z_samples(in);
  const auto dist = calibrate::calibrate_dataset(zs, o.input);
  auto out = io::open_out(o.output);
  io::write_params_csv(out, dist.records);
  fmt::print(log, "accepted {} rejected {} reflected {}\n", dist.records.size(), dist.rejected.size(), dist.reflected);
  for (const auto& r : dist.rejected) fmt::print(log, "  rejected #{} z={}: {}\n", r.index, r.z, r.reason);
  return kExitOk;
}

int cmd_shower(const ShowerOptions& o, std::ostream& log) {
  const auto kind = splitter::parse_topology(o.topology);
  const auto mode = noise::parse_postprocess(o.postprocess);
  const noise::NoiseModel model = o.noisy ? noise::NoiseModel{o.p01, o.p10, o.depol} : noise::NoiseModel::noiseless();
  model.validate();
  const noise::RunBatch batch{o.runs, o.shots, o.seed};
  batch.validate();

  auto in = io::open_in(o.params);
  const auto records = io::read_params_csv(in);
  if (records.empty()) throw Error(ErrorCode::EmptyDataset, fmt::format("no parameter rows in '{}'", o.params));

  const auto& lay = splitter::layout(kind);
  const std::size_t n_split = lay.splits.size();
  const std::size_t n_prongs = lay.final_wires.size();
  // Parameter rows come from their own stream so that shot streams do not
  // depend on the number of rows.
  Rng pick(stream_seed(o.seed, ~std::uint64_t{0}));

  std::vector<io::RunRow> rows;
  std::vector<stats::Histogram> hists(n_prongs, stats::Histogram::uniform(o.bins));
  std::size_t accepted = 0;
  for (std::uint64_t r = 0; r < o.runs; ++r) {
    splitter::ShowerTopology topo{kind, {}};
    for (std::size_t s = 0; s < n_split; ++s) topo.params.push_back(records[pick.below(records.size())].params);
    const auto circuit = splitter::build_topology(topo);
    const auto probs = o.noisy ? noise::noisy_probabilities(circuit, model.twoqubit_depol)
                               : qsim::run(circuit).probabilities();
    const auto counts = noise::sample_run(probs, lay.n_qubits, model, o.shots, stream_seed(o.seed, r));
    const auto f = noise::postprocess(counts, kind, mode);
    io::RunRow row{r, f.has_value(), {}};
    if (f) {
      row.fractions = f->final;
      for (std::size_t k = 0; k < n_prongs; ++k) hists[k].fill(f->final[k]);
      ++accepted;
    }
    rows.push_back(std::move(row));
  }

  auto out = io::open_out(o.output);
  io::write_runs_csv(out, rows, static_cast<int>(n_prongs));
  auto hout = io::open_out(o.histogram);
  const auto hrows = io::histogram_rows(hists);
  io::write_histogram_csv(hout, hrows);

  fmt::print(log, "{} {} runs x {} shots, postprocess {}: accepted {} rejected {}\n", splitter::to_string(kind),
             o.runs, o.shots, noise::to_string(mode), accepted, o.runs - accepted);
  for (std::size_t k = 0; k < n_prongs; ++k) {
    std::vector<double> v;
    for (const auto& row : rows)
      if (row.accepted) v.push_back(row.fractions[k]);
    fmt::print(log, "  prong {} mean {:.6f}\n", k + 1, stats::mean(v));
  }

  std::vector<svg::StepSeries> series;
  for (std::size_t k = 0; k < n_prongs; ++k)
    series.push_back({fmt::format("prong {}", k + 1), hists[k].edges(), hists[k].densities()});
  try_plot(o.plot, svg::step_plot(fmt::format("{} prong momentum fractions", splitter::to_string(kind)),
                                  "momentum fraction", series),
           log);
  return kExitOk;
}

int cmd_jets(const JetsOptions& o, std::ostream& log) {
  auto in = io::open_in(o.input);
  const auto events = io::read_constituents_jsonl(in);
  if (events.empty()) throw Error(ErrorCode::EmptyInput, fmt::format("no events in '{}'", o.input));

  jets::PipelineConfig cfg;
  cfg.cuts = {o.jet_pt_min, o.abs_eta_max, o.constituent_pt_min};
  cfg.n_prongs = o.n_prongs;
  cfg.mode = jets::parse_fraction_mode(o.mode);

  std::vector<io::JetRow> rows;
  std::size_t kept = 0, empty = 0, unselected = 0, small = 0;
  for (std::size_t e = 0; e < events.size(); ++e) {
    const auto res = jets::process_event(events[e], cfg);
    switch (res.status) {
      case jets::EventStatus::Ok:
        ++kept;
        for (std::size_t k = 0; k < res.fractions.size(); ++k)
          rows.push_back({e, static_cast<int>(k) + 1, res.fractions[k]});
        break;
      case jets::EventStatus::Empty: ++empty; break;
      case jets::EventStatus::NoSelectedJet: ++unselected; break;
      case jets::EventStatus::TooFewConstituents: ++small; break;
    }
  }
  auto out = io::open_out(o.output);
  io::write_jets_csv(out, rows);
  fmt::print(log, "events {} kept {} failed-selection {} too-few-constituents {}\n", events.size(), kept,
             unselected, small);
  if (empty > 0) fmt::print(log, "warning: skipped {} empty events\n", empty);
  return kExitOk;
}

std::vector<double> read_prong_values(const std::string& path, int prong) {
  auto in = io::open_in(path);
  std::string header;
  std::getline(in, header);
  if (!header.empty() && header.back() == '\r') header.pop_back();
  in.clear();
  in.seekg(0);
  if (header.rfind("run_id,accepted,", 0) == 0) return io::read_column(in, fmt::format("frac{}", prong));
  if (header == "event_id,prong_rank,fraction") {
    std::vector<double> v;
    for (const auto& r : io::read_jets_csv(in))
      if (r.prong_rank == prong) v.push_back(r.fraction);
    return v;
  }
  if (header.rfind("z,", 0) == 0) return io::read_column(in, "z");
  return io::read_z_samples(in);
}

int cmd_compare(const CompareOptions& o, std::ostream& log) {
  const auto a = read_prong_values(o.a, o.prong);
  const auto b = read_prong_values(o.b, o.prong);
  if (a.empty() || b.empty()) throw Error(ErrorCode::EmptyInput, "no values to compare");
  const auto rep = stats::compare(a, b, o.bins);
  auto out = io::open_out(o.output);
  io::write_compare_csv(out, rep);
  fmt::print(log, "ks {:.6f} (1% critical {:.6f}) chi2 {:.4f} over {} bins, samples {} / {}\n", rep.ks_statistic,
             stats::ks_critical(0.01, rep.samples_a, rep.samples_b), rep.chi2, rep.n_bins, rep.samples_a,
             rep.samples_b);

  auto ha = stats::Histogram::uniform(o.bins), hb = stats::Histogram::uniform(o.bins);
  ha.fill(a);
  hb.fill(b);
  try_plot(o.plot,
           svg::step_plot(fmt::format("prong {}", o.prong), "momentum fraction",
                          {{o.a, ha.edges(), ha.densities()}, {o.b, hb.edges(), hb.densities()}}),
           log);
  return kExitOk;
}

int cmd_scan_concurrence(const ScanOptions& o, std::ostream& log) {
  const auto grid = o.z_prime.empty() ? linspace(o.z_min, o.z_max, o.points) : o.z_prime;
  const auto pts = splitter::composed_concurrence_scan(o.z_first, grid);
  auto out = io::open_out(o.output);
  io::write_scan_csv(out, pts);
  double worst = 0.0;
  for (const auto& p : pts) worst = std::max(worst, p.relative_deviation);
  fmt::print(log, "z_first {} points {} max relative deviation {:.4f}\n", o.z_first, pts.size(), worst);

  if (!o.plot.empty()) {
    svg::CurveSeries circuit{"circuit", {}, {}, true};
    for (const auto& p : pts) {
      circuit.xs.push_back(p.z_prime);
      circuit.ys.push_back(p.concurrence);
    }
    svg::CurveSeries theory{"c_qcd", {}, {}, false};
    const double lo = *std::min_element(grid.begin(), grid.end());
    const double hi = *std::max_element(grid.begin(), grid.end());
    for (double z : linspace(lo, hi, 200)) {
      theory.xs.push_back(z);
      theory.ys.push_back(entanglement::c_qcd(z).value());
    }
    try_plot(o.plot,
             svg::curve_plot(fmt::format("reduced-state concurrence, z = {}", o.z_first), "z'", "concurrence",
                             {theory, circuit}),
             log);
  }
  return kExitOk;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"splitshower: quantum splitting-circuit shower toolkit"};
  app.set_config("--config", "", "key = value configuration file; flags win");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  TheoryCheckOptions th;
  auto* c_th = app.add_subcommand("theory-check", "check closed forms against simulation");
  c_th->add_option("--grid-points", th.grid_points, "z grid size")->check(CLI::PositiveNumber);
  c_th->add_option("--z-min", th.z_min)->check(CLI::Range(0.0, 1.0));
  c_th->add_option("--z-max", th.z_max)->check(CLI::Range(0.0, 1.0));
  c_th->add_option("--samples", th.samples, "random parameter sets for circuit checks")->check(CLI::NonNegativeNumber);
  c_th->add_option("--seed", th.seed)->envname("SPLITSHOWER_SEED");
  c_th->add_option("-o,--output", th.output, "report CSV");

  CalibrateOptions ca;
  auto* c_ca = app.add_subcommand("calibrate", "solve circuit parameters for a z sample");
  c_ca->add_option("-i,--input", ca.input, "z sample file")->required();
  c_ca->add_option("-o,--output", ca.output, "parameter CSV");

  ShowerOptions sh;
  auto* c_sh = app.add_subcommand("shower", "run a multi-splitting circuit over sampled parameters");
  c_sh->add_option("-t,--topology", sh.topology);
  c_sh->add_option("-p,--params", sh.params, "parameter CSV")->required();
  c_sh->add_option("--runs", sh.runs)->check(CLI::PositiveNumber);
  c_sh->add_option("--shots", sh.shots)->check(CLI::PositiveNumber);
  c_sh->add_flag("--noise", sh.noisy, "density-matrix simulation with the noise model");
  c_sh->add_option("--depol", sh.depol)->check(CLI::Range(0.0, 0.5));
  c_sh->add_option("--p01", sh.p01)->check(CLI::Range(0.0, 0.5));
  c_sh->add_option("--p10", sh.p10)->check(CLI::Range(0.0, 0.5));
  c_sh->add_option("--postprocess", sh.postprocess)->check(CLI::IsMember({"raw", "derived", "shifted"}));
  c_sh->add_option("--seed", sh.seed)->envname("SPLITSHOWER_SEED");
  c_sh->add_option("--bins", sh.bins)->check(CLI::PositiveNumber);
  c_sh->add_option("-o,--output", sh.output, "per-run CSV");
  c_sh->add_option("--histogram", sh.histogram, "histogram CSV");
  c_sh->add_option("--plot", sh.plot, "SVG path");

  JetsOptions je;
  auto* c_je = app.add_subcommand("jets", "prong momentum fractions from constituent JSONL");
  c_je->add_option("-i,--input", je.input)->required();
  c_je->add_option("-o,--output", je.output);
  c_je->add_option("-n,--n-prongs", je.n_prongs)->check(CLI::Range(2, 16));
  c_je->add_option("--mode", je.mode)->check(CLI::IsMember({"per-jet-pt", "pair-min", "pair-max"}));
  c_je->add_option("--jet-pt-min", je.jet_pt_min)->check(CLI::NonNegativeNumber);
  c_je->add_option("--eta-max", je.abs_eta_max)->check(CLI::NonNegativeNumber);
  c_je->add_option("--constituent-pt-min", je.constituent_pt_min)->check(CLI::NonNegativeNumber);

  CompareOptions co;
  auto* c_co = app.add_subcommand("compare", "KS and chi-square between two fraction files");
  c_co->add_option("a", co.a)->required();
  c_co->add_option("b", co.b)->required();
  c_co->add_option("--prong", co.prong)->check(CLI::PositiveNumber);
  c_co->add_option("--bins", co.bins)->check(CLI::PositiveNumber);
  c_co->add_option("-o,--output", co.output);
  c_co->add_option("--plot", co.plot);

  ScanOptions sc;
  auto* c_sc = app.add_subcommand("scan-concurrence", "reduced-state concurrence after two splittings");
  c_sc->add_option("--z-first", sc.z_first);
  c_sc->add_option("--z-min", sc.z_min);
  c_sc->add_option("--z-max", sc.z_max);
  c_sc->add_option("--points", sc.points)->check(CLI::PositiveNumber);
  c_sc->add_option("--z-prime", sc.z_prime, "explicit grid (overrides --z-min/--z-max/--points)");
  c_sc->add_option("-o,--output", sc.output);
  c_sc->add_option("--plot", sc.plot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*c_th) return cmd_theory_check(th, out);
    if (*c_ca) return cmd_calibrate(ca, out);
    if (*c_sh) return cmd_shower(sh, out);
    if (*c_je) return cmd_jets(je, out);
    if (*c_co) return cmd_compare(co, out);
    if (*c_sc) return cmd_scan_concurrence(sc, out);
  } catch (const std::exception& e) {
    fmt::print(err, "error: {}\n", e.what());
    return kExitData;
  }
  return kExitUsage;
}

}  // namespace splitshower::cli
