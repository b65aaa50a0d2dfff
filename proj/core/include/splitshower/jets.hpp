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

#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace splitshower::jets {

/// Four-momentum in GeV with optional clustering history.
class PseudoJet {
 public:
  PseudoJet() = default;
  PseudoJet(double px, double py, double pz, double e) : px_(px), py_(py), pz_(pz), e_(e) {}

  /// E-scheme merge keeping both inputs as parents.
  static PseudoJet merge(const PseudoJet& a, const PseudoJet& b);

  double px() const noexcept { return px_; }
  double py() const noexcept { return py_; }
  double pz() const noexcept { return pz_; }
  double e() const noexcept { return e_; }

  double pt2() const noexcept { return px_ * px_ + py_ * py_; }
  double pt() const;
  /// Rapidity; +-1e5 when E <= |pz|.
  double rap() const;
  /// Pseudorapidity; +-1e5 along the beam.
  double eta() const;
  /// Azimuth in (-pi, pi].
  double phi() const;

  bool has_parents() const noexcept { return parent1_ != nullptr; }
  const PseudoJet& parent1() const { return *parent1_; }
  const PseudoJet& parent2() const { return *parent2_; }

  /// Original inputs below this jet (itself if it has no history).
  std::vector<PseudoJet> constituents() const;
  std::size_t n_constituents() const;

 private:
  double px_ = 0.0, py_ = 0.0, pz_ = 0.0, e_ = 0.0;
  std::shared_ptr<const PseudoJet> parent1_, parent2_;
};

enum class Algorithm { AntiKt, CamAachen };

std::string_view to_string(Algorithm a) noexcept;

struct ClusterSpec {
  Algorithm algorithm = Algorithm::AntiKt;
  double R = 0.8;
};

/// A zero threshold disables that cut.
struct SelectionCuts {
  double jet_pt_min = 300.0;
  double abs_eta_max = 2.4;
  double constituent_pt_min = 1.0;
};

/// Squared rapidity-azimuth distance with the azimuth difference wrapped.
double delta_r2(const PseudoJet& a, const PseudoJet& b);

/// Generalised-kT inclusive clustering. Jets are returned in the order they
/// were declared final. Ties in the distance are resolved by the smallest
/// index pair (merged jets take the next free index; the beam distance of i
/// counts as the pair (i, i)). Throws EmptyInput, NonFiniteMomentum,
/// ParameterDomain (R outside (0, 2]).
std::vector<PseudoJet> cluster(std::span<const PseudoJet> constituents, const ClusterSpec& spec);

/// Splits the hardest prong that still has parents until n_prongs remain.
/// Returned in descending pT. Throws InsufficientConstituents.
std::vector<PseudoJet> decluster(const PseudoJet& jet, int n_prongs);

enum class FractionMode { PerJetPt, PairMin, PairMax };

FractionMode parse_fraction_mode(std::string_view name);

/// Throws ZeroJetPt, PairModeArity, EmptyInput.
std::vector<double> momentum_fractions(std::span<const PseudoJet> prongs, const PseudoJet& jet,
                                       FractionMode mode);

/// Jets with pT > jet_pt_min and |eta| < abs_eta_max.
std::vector<PseudoJet> select(std::span<const PseudoJet> jets, const SelectionCuts& cuts);

/// Constituents with pT > pt_min.
std::vector<PseudoJet> filter_constituents(std::span<const PseudoJet> constituents, double pt_min);

std::vector<PseudoJet> sorted_by_pt(std::vector<PseudoJet> jets);

enum class EventStatus { Ok, Empty, NoSelectedJet, TooFewConstituents };

struct EventResult {
  EventStatus status = EventStatus::Ok;
  std::vector<double> fractions;  // descending
};

struct PipelineConfig {
  SelectionCuts cuts;
  ClusterSpec primary{Algorithm::AntiKt, 0.8};
  ClusterSpec recluster{Algorithm::CamAachen, 0.4};
  int n_prongs = 2;
  FractionMode mode = FractionMode::PerJetPt;
};

/// Leading selected primary jet -> constituent cut -> recluster -> hardest
/// reclustered jet -> decluster -> fractions relative to the primary jet.
EventResult process_event(std::span<const PseudoJet> constituents, const PipelineConfig& config);

}  // namespace splitshower::jets
