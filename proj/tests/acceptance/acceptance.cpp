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

// Acceptance suite: one PASS/FAIL line per criterion.
//
//   splitshower_acceptance [--criterion N]...

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iterator>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

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
#include "splitshower_cli/commands.hpp"
#include "support/oracles.hpp"

namespace ss = splitshower;
using ss::splitter::ShowerTopology;
using ss::splitter::SplittingParams;
using ss::splitter::TopologyKind;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double max_abs(const Eigen::MatrixXcd& a, const Eigen::MatrixXcd& b) { return (a - b).cwiseAbs().maxCoeff(); }

SplittingParams random_params(ss::Rng& rng) {
  return SplittingParams::from_gamma1_gamma3(rng.uniform01() * std::numbers::pi / 3.0,
                                             rng.uniform01() * std::numbers::pi);
}

// Calibrated records for a synthetic truncated Beta(5, 2) sample.
std::vector<ss::calibrate::CalibrationRecord> synthetic_records(std::size_t n, std::uint64_t seed) {
  const auto zs = ss::testing::truncated_beta52_sample(n, seed);
  auto dist = ss::calibrate::calibrate_dataset(zs, "synthetic");
  if (!dist.rejected.empty()) throw std::runtime_error("synthetic sample has infeasible entries");
  return dist.records;
}

// ---------------------------------------------------------------------------

Outcome criterion1() {
  Stopwatch sw;
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double z = 1e-3 + (1.0 - 2e-3) * i / 999.0;
    const double w = ss::entanglement::concurrence_wootters(ss::qcd::rho_sc(z).to_density()).value();
    worst = std::max(worst, std::abs(w - ss::entanglement::c_qcd(z).value()));
  }
  const double t = sw.seconds();
  return {worst < 1e-8 && t < 1.0, fmt::format("max |dC| = {:.2e} (< 1e-8), {:.3f} s (< 1 s)", worst, t)};
}

Outcome criterion2() {
  Stopwatch sw;
  ss::Rng rng(2002);
  double e_z = 0.0, e_c = 0.0, e_c2 = 0.0, e_sum = 0.0;
  for (int i = 0; i < 200; ++i) {
    const auto p = random_params(rng);
    const auto psi = ss::qsim::run(ss::splitter::build_block(p));
    const double a = ss::qsim::expect_sigma3(psi, 0);
    const double b = ss::qsim::expect_sigma3(psi, 1);
    // Pure two-qubit state: C = 2 |a00 a11 - a01 a10|.
    const double c_sim = 2.0 * std::abs(psi[0] * psi[3] - psi[1] * psi[2]);
    const double c_formula = ss::entanglement::c_circuit(p.gamma1(), p.gamma3()).value();
    e_z = std::max(e_z, std::abs(a - p.z()));
    e_c = std::max(e_c, std::abs(c_sim - c_formula));
    e_sum = std::max(e_sum, std::abs(a + b - 1.0));
    // The z-parametrised form of the same closed expression.
    if (std::abs(std::cos(p.gamma3())) > 0.05) {
      const double zm = p.z() - 0.5;
      const double rad = 0.75 - zm * zm +
                         zm * (std::tan(p.gamma1()) * std::tan(p.gamma3()) +
                               1.0 / (std::cos(p.gamma1()) * std::cos(p.gamma3())));
      e_c2 = std::max(e_c2, std::abs(std::sqrt(std::max(0.0, rad)) - c_sim));
    }
  }
  const double t = sw.seconds();
  const bool ok = e_z < 1e-9 && e_c < 1e-9 && e_c2 < 1e-9 && e_sum < 1e-10 && t < 5.0;
  return {ok, fmt::format("<s3>_A vs z {:.1e}, C vs closed form {:.1e} / {:.1e}, |a+b-1| {:.1e}, {:.3f} s", e_z,
                          e_c, e_c2, e_sum, t)};
}

Outcome criterion3() {
  ss::Rng rng(3003);
  double e1 = 0.0, e3 = 0.0;
  for (int i = 0; i < 50; ++i) {
    const auto p = random_params(rng);
    const auto rho = ss::qsim::to_density(ss::qsim::run(ss::splitter::build_block(p)));
    const auto pred1 = ss::splitter::predicted_reduced_AB(1.0, p);
    e1 = std::max({e1, max_abs(ss::qsim::partial_trace(rho, {0}).matrix(), pred1.a.matrix()),
                   max_abs(ss::qsim::partial_trace(rho, {1}).matrix(), pred1.b.matrix())});

    const auto first = random_params(rng);
    const ShowerTopology topo{TopologyKind::ThreeDominant, {first, p}};
    const auto rho3 = ss::qsim::to_density(ss::qsim::run(ss::splitter::build_topology(topo)));
    const auto pred3 = ss::splitter::predicted_reduced_AB(first.z(), p);
    e3 = std::max({e3, max_abs(ss::qsim::partial_trace(rho3, {0}).matrix(), pred3.a.matrix()),
                   max_abs(ss::qsim::partial_trace(rho3, {1}).matrix(), pred3.b.matrix())});
  }
  return {e1 < 1e-10 && e3 < 1e-10,
          fmt::format("single block {:.1e}, three-particle {:.1e} (< 1e-10, 50 sets)", e1, e3)};
}

Outcome criterion4() {
  Stopwatch sw;
  std::vector<double> grid;
  for (int i = 0; i < 45; ++i) grid.push_back(0.55 + 0.01 * i);
  auto worst = [&](double zf) {
    double m = 0.0;
    for (const auto& p : ss::splitter::composed_concurrence_scan(zf, grid)) m = std::max(m, p.relative_deviation);
    return m;
  };
  const double a = worst(0.9924), b = worst(0.8937);
  const double t = sw.seconds();
  return {a < 0.01 && b >= 0.08 && b <= 0.13 && t < 30.0,
          fmt::format("z=0.9924: {:.2f}% (< 1%), z=0.8937: {:.2f}% (8-13%), {:.2f} s", 100 * a, 100 * b, t)};
}

Outcome criterion5() {
  ss::Rng rng(5005);
  double e3 = 0.0, e4 = 0.0, esum = 0.0;
  for (int i = 0; i < 100; ++i) {
    const auto p1 = random_params(rng), p2 = random_params(rng), p3 = random_params(rng);
    const double z = p1.z(), zp = p2.z(), zs = p3.z();

    const ShowerTopology t3{TopologyKind::ThreeDominant, {p1, p2}};
    const auto psi3 = ss::qsim::run(ss::splitter::build_topology(t3));
    const double want3[] = {z * zp, z * (1 - zp), 1 - z};
    const int wires3[] = {0, 1, 3};
    double s3 = 0.0;
    for (int k = 0; k < 3; ++k) {
      const double v = ss::qsim::expect_sigma3(psi3, wires3[k]);
      e3 = std::max(e3, std::abs(v - want3[k]));
      s3 += v;
    }

    const ShowerTopology t4{TopologyKind::FourBalanced, {p1, p2, p3}};
    const auto psi4 = ss::qsim::run(ss::splitter::build_topology(t4));
    const double want4[] = {z * zp, z * (1 - zp), (1 - z) * zs, (1 - z) * (1 - zs)};
    const int wires4[] = {0, 1, 4, 5};
    double s4 = 0.0;
    for (int k = 0; k < 4; ++k) {
      const double v = ss::qsim::expect_sigma3(psi4, wires4[k]);
      e4 = std::max(e4, std::abs(v - want4[k]));
      s4 += v;
    }
    esum = std::max({esum, std::abs(s3 - 1.0), std::abs(s4 - 1.0)});
  }
  return {e3 < 1e-10 && e4 < 1e-10 && esum < 1e-9,
          fmt::format("three-prong {:.1e}, four-prong {:.1e} (< 1e-10), |sum-1| {:.1e}", e3, e4, esum)};
}

Outcome criterion6() {
  std::vector<double> grid{0.51};
  for (int k = 11; k <= 19; ++k) grid.push_back(0.05 * k);
  grid.push_back(0.99);
  grid.push_back(1.0);
  double worst_r = 0.0, worst_t = 0.0;
  bool ok = true;
  for (double z : grid) {
    Stopwatch sw;
    try {
      const auto rec = ss::calibrate::make_record(z, ss::calibrate::solve_params(z));
      worst_t = std::max(worst_t, sw.seconds());
      worst_r = std::max({worst_r, std::abs(rec.residual_z), std::abs(rec.residual_c)});
    } catch (const ss::Error&) {
      ok = false;
    }
  }
  bool infeasible = false;
  try {
    ss::calibrate::solve_params(0.5);
  } catch (const ss::Error& e) {
    infeasible = e.code() == ss::ErrorCode::CalibrationInfeasible;
  }
  ok = ok && worst_r < 1e-8 && worst_t < 0.05 && infeasible;
  return {ok, fmt::format("{} grid points, max residual {:.1e} (< 1e-8), slowest {:.2f} ms (< 50 ms), z=0.5 {}",
                          grid.size(), worst_r, 1e3 * worst_t, infeasible ? "CalibrationInfeasible" : "solved")};
}

Outcome criterion7() {
  Stopwatch sw;
  const auto records = synthetic_records(1000, 7007);
  const auto kind = TopologyKind::ThreeDominant;
  const ss::noise::RunBatch batch{500, 1024, 77};
  ss::Rng pick(ss::stream_seed(batch.seed, ~std::uint64_t{0}));

  std::vector<std::vector<double>> prong(3);
  for (std::uint64_t r = 0; r < batch.runs; ++r) {
    const ShowerTopology t{kind, {records[pick.below(records.size())].params, records[pick.below(records.size())].params}};
    const auto probs = ss::qsim::run(ss::splitter::build_topology(t)).probabilities();
    const auto counts = ss::noise::sample_run(probs, 4, ss::noise::NoiseModel::noiseless(), batch.shots_per_run,
                                              ss::stream_seed(batch.seed, r));
    const auto f = ss::noise::fractions_from_counts(counts, kind);
    if (!f) continue;
    for (int k = 0; k < 3; ++k) prong[k].push_back(f->final[k]);
  }

  // Closed-form mixture: every ordered pair of calibrated splittings with equal weight.
  std::vector<std::vector<double>> atoms(3);
  for (const auto& a : records) {
    for (const auto& b : records) {
      const double z = a.z, zp = b.z;
      std::vector<double> v{z * zp, z * (1 - zp), 1 - z};
      std::sort(v.rbegin(), v.rend());
      for (int k = 0; k < 3; ++k) atoms[k].push_back(v[k]);
    }
  }
  bool ok = true;
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    const double d = ss::stats::ks_against_atoms(prong[k], atoms[k]);
    const double crit = ss::stats::ks_critical(0.01, prong[k].size());
    ok = ok && d < crit;
    detail += fmt::format("prong {} KS {:.4f}/{:.4f}; ", k + 1, d, crit);
  }
  const double t = sw.seconds();
  ok = ok && t < 120.0;
  return {ok, detail + fmt::format("{:.2f} s", t)};
}

Outcome criterion8() {
  const auto records = synthetic_records(1000, 8008);
  const auto kind = TopologyKind::ThreeDominant;
  const ss::noise::NoiseModel model;  // defaults
  const ss::noise::RunBatch batch{500, 1024, 88};
  ss::Rng pick(ss::stream_seed(batch.seed, ~std::uint64_t{0}));

  std::vector<double> truth(3, 0.0), post(3, 0.0), raw(3, 0.0);
  std::size_t n_post = 0, n_raw = 0;
  for (std::uint64_t r = 0; r < batch.runs; ++r) {
    const ShowerTopology t{kind, {records[pick.below(records.size())].params, records[pick.below(records.size())].params}};
    const auto exact = ss::splitter::analytic_fractions(t);
    for (int k = 0; k < 3; ++k) truth[k] += exact.final[k] / static_cast<double>(batch.runs);
    const auto probs = ss::noise::noisy_probabilities(ss::splitter::build_topology(t), model.twoqubit_depol);
    const auto counts = ss::noise::sample_run(probs, 4, model, batch.shots_per_run, ss::stream_seed(batch.seed, r));
    if (const auto f = ss::noise::shifted_fractions(counts, kind)) {
      ++n_post;
      for (int k = 0; k < 3; ++k) post[k] += f->final[k];
    }
    if (const auto f = ss::noise::raw_mode(counts, kind)) {
      ++n_raw;
      for (int k = 0; k < 3; ++k) raw[k] += f->final[k];
    }
  }
  bool ok = n_post > 0 && n_raw > 0;
  std::string detail;
  for (int k = 0; k < 3; ++k) {
    post[k] /= static_cast<double>(n_post);
    raw[k] /= static_cast<double>(n_raw);
    const bool closer = std::abs(post[k] - truth[k]) < std::abs(raw[k] - truth[k]);
    ok = ok && closer;
    detail += fmt::format("prong {} truth {:.4f} post {:.4f} raw {:.4f}{}; ", k + 1, truth[k], post[k], raw[k],
                          closer ? "" : " (raw closer)");
  }
  return {ok, detail + fmt::format("accepted post {} raw {}", n_post, n_raw)};
}

Outcome criterion9() {
  ss::Rng rng(9009);
  int mismatches = 0;
  double worst_sum = 0.0;
  for (int f = 0; f < 50; ++f) {
    const auto fixture = ss::testing::random_fixture(rng, 6);
    for (bool anti : {true, false}) {
      const ss::jets::ClusterSpec spec{anti ? ss::jets::Algorithm::AntiKt : ss::jets::Algorithm::CamAachen, 0.8};
      const auto got = ss::jets::cluster(fixture, spec);
      const auto want = ss::testing::cluster_oracle(fixture, anti, spec.R);
      if (ss::testing::jet_list_distance(got, want) > 1e-9) ++mismatches;
      for (const auto& j : got) {
        const int n = static_cast<int>(std::min<std::size_t>(j.n_constituents(), 4));
        if (n < 2) continue;
        const auto prongs = ss::jets::decluster(j, n);
        double px = 0, py = 0, pz = 0, e = 0;
        for (const auto& p : prongs) {
          px += p.px();
          py += p.py();
          pz += p.pz();
          e += p.e();
        }
        worst_sum = std::max({worst_sum, std::abs(px - j.px()), std::abs(py - j.py()), std::abs(pz - j.pz()),
                              std::abs(e - j.e())});
      }
    }
  }
  return {mismatches == 0 && worst_sum < 1e-9,
          fmt::format("{} / 100 oracle mismatches, prong momentum sum error {:.1e} GeV", mismatches, worst_sum)};
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

Outcome criterion10() {
  namespace fs = std::filesystem;
  const fs::path root = fs::temp_directory_path() / fmt::format("splitshower_acceptance_{}", ::getpid());
  fs::create_directories(root);
  {
    std::ofstream z(root / "z.txt");
    ss::io::write_z_samples(z, ss::testing::truncated_beta52_sample(300, 1010));
    std::ofstream j(root / "events.jsonl");
    ss::Rng rng(1011);
    std::vector<std::vector<ss::jets::PseudoJet>> events;
    for (int e = 0; e < 20; ++e) {
      std::vector<ss::jets::PseudoJet> ev;
      for (int k = 0; k < 12; ++k) ev.push_back(ss::testing::random_constituent(rng, 0.3, 1.0, 0.3));
      events.push_back(ev);
    }
    ss::io::write_constituents_jsonl(j, events);
  }
  auto run_all = [&](const fs::path& dir) {
    fs::create_directories(dir);
    auto p = [&](const char* name) { return (dir / name).string(); };
    auto in = [&](const char* name) { return (root / name).string(); };
    std::ostringstream log;
    int rc = 0;
    rc |= ss::cli::cmd_theory_check({200, 1e-3, 1 - 1e-3, 20, 5, p("theory.csv")}, log);
    rc |= ss::cli::cmd_calibrate({in("z.txt"), p("params.csv")}, log);
    ss::cli::ShowerOptions sh;
    sh.params = p("params.csv");
    sh.runs = 100;
    sh.seed = 42;
    sh.output = p("shower.csv");
    sh.histogram = p("hist.csv");
    rc |= ss::cli::cmd_shower(sh, log);
    sh.noisy = true;
    sh.postprocess = "shifted";
    sh.output = p("noisy.csv");
    sh.histogram = p("noisy_hist.csv");
    rc |= ss::cli::cmd_shower(sh, log);
    ss::cli::JetsOptions je;
    je.input = in("events.jsonl");
    je.output = p("jets.csv");
    je.jet_pt_min = 100.0;
    rc |= ss::cli::cmd_jets(je, log);
    rc |= ss::cli::cmd_compare({p("shower.csv"), p("noisy.csv"), 2, 20, p("compare.csv"), ""}, log);
    ss::cli::ScanOptions sc;
    sc.points = 10;
    sc.output = p("scan.csv");
    rc |= ss::cli::cmd_scan_concurrence(sc, log);
    return rc;
  };
  const int rc1 = run_all(root / "a");
  const int rc2 = run_all(root / "b");
  int compared = 0, differ = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    ++compared;
    if (slurp(entry.path()) != slurp(root / "b" / entry.path().filename())) ++differ;
  }
  fs::remove_all(root);
  return {rc1 == 0 && rc2 == 0 && differ == 0 && compared == 9,
          fmt::format("{} CSV files from 6 commands, {} differ between reruns", compared, differ)};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria = {
      {1, {"concurrence oracle", criterion1}},
      {2, {"circuit/analytic agreement", criterion2}},
      {3, {"reduced-state fixtures", criterion3}},
      {4, {"composed concurrence scan", criterion4}},
      {5, {"composition identities", criterion5}},
      {6, {"calibration round-trip", criterion6}},
      {7, {"end-to-end statistical closure", criterion7}},
      {8, {"noise pipeline vs raw readout", criterion8}},
      {9, {"clustering oracle", criterion9}},
      {10, {"determinism", criterion10}},
  };
  std::vector<int> selected;
  for (int i = 1; i < argc; ++i) {
    if (std::string(argv[i]) == "--criterion" && i + 1 < argc) selected.push_back(std::stoi(argv[++i]));
  }
  if (selected.empty())
    for (const auto& [k, _] : criteria) selected.push_back(k);

  int failed = 0;
  for (int k : selected) {
    const auto it = criteria.find(k);
    if (it == criteria.end()) {
      std::printf("FAIL criterion %d: unknown\n", k);
      ++failed;
      continue;
    }
    Outcome o{false, ""};
    try {
      o = it->second.second();
    } catch (const std::exception& e) {
      o = {false, fmt::format("exception: {}", e.what())};
    }
    std::printf("%s criterion %d: %s: %s\n", o.pass ? "PASS" : "FAIL", k, it->second.first, o.detail.c_str());
    std::fflush(stdout);
    failed += o.pass ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
