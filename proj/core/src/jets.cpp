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

#include "splitshower/jets.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <tuple>

#include <fmt/format.h>

#include "splitshower/error.hpp"

namespace splitshower::jets {

namespace {

constexpr double kMaxRap = 1e5;
constexpr double kPi = std::numbers::pi;

// Ordering key for a candidate step: distance, then index pair.
struct Key {
  double d = std::numeric_limits<double>::infinity();
  std::size_t i = 0;
  std::size_t j = 0;  // == i for the beam
  bool operator<(const Key& o) const { return std::tie(d, i, j) < std::tie(o.d, o.i, o.j); }
};

double momentum_factor(const PseudoJet& p, Algorithm a) {
  if (a == Algorithm::CamAachen) return 1.0;
  const double pt2 = p.pt2();
  return pt2 > 0.0 ? 1.0 / pt2 : std::numeric_limits<double>::max();
}

void check_finite(const PseudoJet& p) {
  if (!std::isfinite(p.px()) || !std::isfinite(p.py()) || !std::isfinite(p.pz()) || !std::isfinite(p.e())) {
    throw Error(ErrorCode::NonFiniteMomentum, "constituent with non-finite momentum");
  }
}

}  // namespace

PseudoJet PseudoJet::merge(const PseudoJet& a, const PseudoJet& b) {
  PseudoJet m(a.px_ + b.px_, a.py_ + b.py_, a.pz_ + b.pz_, a.e_ + b.e_);
  m.parent1_ = std::make_shared<const PseudoJet>(a);
  m.parent2_ = std::make_shared<const PseudoJet>(b);
  return m;
}

double PseudoJet::pt() const { return std::sqrt(pt2()); }

double PseudoJet::rap() const {
  if (e_ <= std::abs(pz_)) return pz_ >= 0.0 ? kMaxRap : -kMaxRap;
  return 0.5 * std::log((e_ + pz_) / (e_ - pz_));
}

double PseudoJet::eta() const {
  const double pt_ = pt();
  if (pt_ == 0.0) return pz_ >= 0.0 ? kMaxRap : -kMaxRap;
  return std::asinh(pz_ / pt_);
}

double PseudoJet::phi() const {
  if (px_ == 0.0 && py_ == 0.0) return 0.0;
  double p = std::atan2(py_, px_);
  if (p <= -kPi) p += 2.0 * kPi;
  return p;
}

std::vector<PseudoJet> PseudoJet::constituents() const {
  std::vector<PseudoJet> out;
  std::vector<const PseudoJet*> stack{this};
  while (!stack.empty()) {
    const PseudoJet* p = stack.back();
    stack.pop_back();
    if (p->has_parents()) {
      stack.push_back(p->parent2_.get());
      stack.push_back(p->parent1_.get());
    } else {
      out.push_back(PseudoJet(p->px_, p->py_, p->pz_, p->e_));
    }
  }
  return out;
}

std::size_t PseudoJet::n_constituents() const {
  return has_parents() ? parent1_->n_constituents() + parent2_->n_constituents() : 1;
}

std::string_view to_string(Algorithm a) noexcept {
  return a == Algorithm::AntiKt ? "AntiKt" : "CamAachen";
}

double delta_r2(const PseudoJet& a, const PseudoJet& b) {
  const double dy = a.rap() - b.rap();
  double dphi = std::abs(a.phi() - b.phi());
  if (dphi > kPi) dphi = 2.0 * kPi - dphi;
  return dy * dy + dphi * dphi;
}

std::vector<PseudoJet> cluster(std::span<const PseudoJet> constituents, const ClusterSpec& spec) {
  if (constituents.empty()) throw Error(ErrorCode::EmptyInput, "no constituents to cluster");
  if (!(spec.R > 0.0 && spec.R <= 2.0)) {
    throw Error(ErrorCode::ParameterDomain, fmt::format("R = {} outside (0, 2]", spec.R));
  }
  for (const auto& p : constituents) check_finite(p);

  // The minimal d_ij, with k_i <= k_j, always pairs i with its nearest
  // neighbour in (y, phi), so only that neighbour is cached per jet.
  constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
  const double inv_r2 = 1.0 / (spec.R * spec.R);
  std::vector<PseudoJet> jets(constituents.begin(), constituents.end());
  std::vector<double> factor, rap, phi, nn_dr2;
  std::vector<std::size_t> nn;
  std::vector<bool> active;
  auto add = [&](const PseudoJet& j) {
    factor.push_back(momentum_factor(j, spec.algorithm));
    rap.push_back(j.rap());
    phi.push_back(j.phi());
    nn.push_back(kNone);
    nn_dr2.push_back(std::numeric_limits<double>::infinity());
    active.push_back(true);
  };
  for (const auto& j : jets) add(j);

  auto dr2 = [&](std::size_t a, std::size_t b) {
    const double dy = rap[a] - rap[b];
    double dphi = std::abs(phi[a] - phi[b]);
    if (dphi > kPi) dphi = 2.0 * kPi - dphi;
    return dy * dy + dphi * dphi;
  };
  auto find_nn = [&](std::size_t a) {
    nn[a] = kNone;
    nn_dr2[a] = std::numeric_limits<double>::infinity();
    for (std::size_t b = 0; b < jets.size(); ++b) {
      if (b == a || !active[b]) continue;
      const double d = dr2(a, b);
      if (d < nn_dr2[a]) {
        nn_dr2[a] = d;
        nn[a] = b;
      }
    }
  };
  auto candidate = [&](std::size_t a) {
    Key k{factor[a], a, a};
    if (nn[a] != kNone) {
      const std::size_t b = nn[a];
      k = std::min(k, Key{std::min(factor[a], factor[b]) * nn_dr2[a] * inv_r2, std::min(a, b), std::max(a, b)});
    }
    return k;
  };
  for (std::size_t a = 0; a < jets.size(); ++a) find_nn(a);

  std::vector<PseudoJet> out;
  std::size_t remaining = jets.size();
  while (remaining > 0) {
    Key step;
    for (std::size_t a = 0; a < jets.size(); ++a)
      if (active[a]) step = std::min(step, candidate(a));

    active[step.i] = active[step.j] = false;
    --remaining;
    if (step.i == step.j) {
      out.push_back(jets[step.i]);
    } else {
      jets.push_back(PseudoJet::merge(jets[step.i], jets[step.j]));
      add(jets.back());
      find_nn(jets.size() - 1);
    }
    const std::size_t k = step.i == step.j ? kNone : jets.size() - 1;
    for (std::size_t a = 0; a < jets.size(); ++a) {
      if (!active[a] || a == k) continue;
      if (nn[a] == step.i || nn[a] == step.j) {
        find_nn(a);
      } else if (k != kNone) {
        const double d = dr2(a, k);
        if (d < nn_dr2[a]) {
          nn_dr2[a] = d;
          nn[a] = k;
        }
      }
    }
  }
  return out;
}

std::vector<PseudoJet> sorted_by_pt(std::vector<PseudoJet> jets) {
  std::stable_sort(jets.begin(), jets.end(),
                   [](const PseudoJet& a, const PseudoJet& b) { return a.pt2() > b.pt2(); });
  return jets;
}

std::vector<PseudoJet> decluster(const PseudoJet& jet, int n_prongs) {
  if (n_prongs < 1 || jet.n_constituents() < static_cast<std::size_t>(n_prongs)) {
    throw Error(ErrorCode::InsufficientConstituents,
                fmt::format("{} constituents cannot give {} prongs", jet.n_constituents(), n_prongs));
  }
  std::vector<PseudoJet> prongs{jet};
  while (prongs.size() < static_cast<std::size_t>(n_prongs)) {
    std::size_t pick = prongs.size();
    for (std::size_t i = 0; i < prongs.size(); ++i) {
      if (!prongs[i].has_parents()) continue;
      if (pick == prongs.size() || prongs[i].pt2() > prongs[pick].pt2()) pick = i;
    }
    const PseudoJet p = prongs[pick];
    prongs[pick] = p.parent1();
    prongs.insert(prongs.begin() + static_cast<std::ptrdiff_t>(pick) + 1, p.parent2());
  }
  return sorted_by_pt(std::move(prongs));
}

FractionMode parse_fraction_mode(std::string_view name) {
  if (name == "per-jet-pt" || name == "PerJetPt") return FractionMode::PerJetPt;
  if (name == "pair-min" || name == "PairMin") return FractionMode::PairMin;
  if (name == "pair-max" || name == "PairMax") return FractionMode::PairMax;
  throw Error(ErrorCode::Parse, fmt::format("unknown fraction mode '{}'", name));
}

std::vector<double> momentum_fractions(std::span<const PseudoJet> prongs, const PseudoJet& jet,
                                       FractionMode mode) {
  if (prongs.empty()) throw Error(ErrorCode::EmptyInput, "no prongs");
  if (mode == FractionMode::PerJetPt) {
    const double pt = jet.pt();
    if (!(pt > 0.0)) throw Error(ErrorCode::ZeroJetPt, "jet has zero transverse momentum");
    std::vector<double> out;
    for (const auto& p : prongs) out.push_back(p.pt() / pt);
    return out;
  }
  if (prongs.size() != 2) {
    throw Error(ErrorCode::PairModeArity, fmt::format("pair mode needs 2 prongs, got {}", prongs.size()));
  }
  const double a = prongs[0].pt(), b = prongs[1].pt();
  if (!(a + b > 0.0)) throw Error(ErrorCode::ZeroJetPt, "prongs have zero transverse momentum");
  return {(mode == FractionMode::PairMin ? std::min(a, b) : std::max(a, b)) / (a + b)};
}

std::vector<PseudoJet> select(std::span<const PseudoJet> jets, const SelectionCuts& cuts) {
  std::vector<PseudoJet> out;
  for (const auto& j : jets) {
    if (cuts.jet_pt_min > 0.0 && !(j.pt() > cuts.jet_pt_min)) continue;
    if (cuts.abs_eta_max > 0.0 && !(std::abs(j.eta()) < cuts.abs_eta_max)) continue;
    out.push_back(j);
  }
  return out;
}

std::vector<PseudoJet> filter_constituents(std::span<const PseudoJet> constituents, double pt_min) {
  std::vector<PseudoJet> out;
  for (const auto& c : constituents)
    if (pt_min <= 0.0 || c.pt() > pt_min) out.push_back(c);
  return out;
}

EventResult process_event(std::span<const PseudoJet> constituents, const PipelineConfig& config) {
  if (constituents.empty()) return {EventStatus::Empty, {}};
  const auto selected = sorted_by_pt(select(cluster(constituents, config.primary), config.cuts));
  if (selected.empty()) return {EventStatus::NoSelectedJet, {}};
  const PseudoJet& lead = selected.front();

  const auto kept = filter_constituents(lead.constituents(), config.cuts.constituent_pt_min);
  const int need = config.mode == FractionMode::PerJetPt ? config.n_prongs : 2;
  if (kept.size() < static_cast<std::size_t>(need)) return {EventStatus::TooFewConstituents, {}};
  const auto sub = sorted_by_pt(cluster(kept, config.recluster));
  if (sub.front().n_constituents() < static_cast<std::size_t>(need)) {
    return {EventStatus::TooFewConstituents, {}};
  }
  const auto prongs = decluster(sub.front(), need);
  auto fr = momentum_fractions(prongs, lead, config.mode);
  std::sort(fr.begin(), fr.end(), std::greater<>());
  return {EventStatus::Ok, std::move(fr)};
}

}  // namespace splitshower::jets
