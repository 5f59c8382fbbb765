#ifndef IONLINK_MARKOV_CHAIN_HPP
#define IONLINK_MARKOV_CHAIN_HPP

// Independent check of the shelving scheme's re-excitation series: the
// 650 nm drive/decay cycle as an absorbing Markov chain over Zeeman
// sublevels, solved exactly and by Monte Carlo trajectories.
//
// Each cycle excites the current D3/2 sublevel to the P1/2 sublevel one
// drive quantum away (the drive is saturating), then samples a decay. A
// decay to S1/2 ends the trajectory with a photon, tagged good when it came
// from the P1/2 sublevel reached from the initial state and bad otherwise.
// A D3/2 sublevel with no reachable P1/2 partner is dark.

#include <algorithm>
#include <array>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "ionlink/atomic_model.hpp"
#include "ionlink/error.hpp"

namespace ionlink {

struct PumpCycleConfig {
  ZeemanState initial{Level::D32, +3};
  Polarization drive = Polarization::SigmaMinus;
  BranchingModel model = default_barium_model();
  /// Trajectories still shelved after this many excitations count as dark.
  int max_cycles = 1000;

  void validate() const {
    if (initial.level() != Level::D32) throw DomainError("initial state must be a D32 sublevel");
    if (max_cycles < 1) throw DomainError("max_cycles must be at least 1");
  }
};

struct ChainOutcome {
  double p_good = 0.0;
  double p_bad = 0.0;
  double p_dark = 0.0;
  // standard errors; zero for exact solutions
  double se_good = 0.0;
  double se_bad = 0.0;
  double se_dark = 0.0;
};

namespace detail {

/// P1/2 sublevel the drive couples a D3/2 sublevel to, if any.
inline std::optional<ZeemanState> driven_partner(const ZeemanState& d, Polarization drive) {
  const int target = d.two_mj() + 2 * delta_m(drive);
  if (std::abs(target) > two_j(Level::P12)) return std::nullopt;
  return ZeemanState{Level::P12, target};
}

inline int d_index(const ZeemanState& d) { return (d.two_mj() + 3) / 2; }  // 0..3
inline int p_index(const ZeemanState& p) { return (p.two_mj() + 1) / 2; }  // 0..1

enum Outcome : int { kGood = 0, kBad = 1, kDark = 2 };

/// Decay table of one P1/2 sublevel flattened for sampling.
struct DecayTable {
  std::vector<double> cumulative;
  std::vector<int> next;  // D32 index for shelving decays, -1 - outcome for photons
};

inline std::vector<DecayTable> decay_tables(const PumpCycleConfig& cfg, const ZeemanState& good_p) {
  std::vector<DecayTable> tables;
  for (const auto& p : sublevels(Level::P12)) {
    DecayTable t;
    double acc = 0.0;
    for (const auto& ch : allowed_decays(p, cfg.model)) {
      acc += ch.probability;
      t.cumulative.push_back(acc);
      if (ch.lower.level() == Level::D32)
        t.next.push_back(d_index(ch.lower));
      else
        t.next.push_back(-1 - (p == good_p ? kGood : kBad));
    }
    tables.push_back(std::move(t));
  }
  return tables;
}

inline double unit_uniform(std::uint64_t bits) { return static_cast<double>(bits >> 11) * 0x1.0p-53; }

}  // namespace detail

/// Absorption probabilities of the infinite-horizon chain via (I - Q) B = R
/// over the six transient sublevels (four D3/2, two P1/2).
inline ChainOutcome solve_exact(const PumpCycleConfig& cfg) {
  cfg.validate();
  using detail::d_index;
  using detail::p_index;
  constexpr int kTransient = 6;  // D32 at 0..3, P12 at 4..5
  Eigen::Matrix<double, kTransient, kTransient> q = Eigen::Matrix<double, kTransient, kTransient>::Zero();
  Eigen::Matrix<double, kTransient, 3> r = Eigen::Matrix<double, kTransient, 3>::Zero();

  const auto good_p = detail::driven_partner(cfg.initial, cfg.drive);
  if (!good_p) return {0.0, 0.0, 1.0};

  for (const auto& d : sublevels(Level::D32)) {
    if (const auto p = detail::driven_partner(d, cfg.drive))
      q(d_index(d), 4 + p_index(*p)) = 1.0;
    else
      r(d_index(d), detail::kDark) = 1.0;
  }
  for (const auto& p : sublevels(Level::P12)) {
    const int row = 4 + p_index(p);
    for (const auto& ch : allowed_decays(p, cfg.model)) {
      if (ch.lower.level() == Level::D32)
        q(row, d_index(ch.lower)) += ch.probability;
      else
        r(row, p == *good_p ? detail::kGood : detail::kBad) += ch.probability;
    }
  }

  const Eigen::Matrix<double, kTransient, kTransient> a =
      Eigen::Matrix<double, kTransient, kTransient>::Identity() - q;
  const Eigen::FullPivLU<Eigen::Matrix<double, kTransient, kTransient>> lu(a);
  if (!lu.isInvertible()) throw NumericError("absorbing chain is singular: some sublevels never reach an outcome");
  const Eigen::Matrix<double, kTransient, 3> b = lu.solve(r);
  const int start = d_index(cfg.initial);
  return {b(start, detail::kGood), b(start, detail::kBad), b(start, detail::kDark)};
}

/// Exact distribution after at most cfg.max_cycles excitations; whatever is
/// still shelved at the cutoff is counted dark, as in simulate().
inline ChainOutcome solve_truncated(const PumpCycleConfig& cfg) {
  cfg.validate();
  const auto good_p = detail::driven_partner(cfg.initial, cfg.drive);
  if (!good_p) return {0.0, 0.0, 1.0};
  std::vector<double> shelf(4, 0.0);
  shelf[detail::d_index(cfg.initial)] = 1.0;
  ChainOutcome out;
  for (int cycle = 0; cycle < cfg.max_cycles; ++cycle) {
    std::vector<double> next(4, 0.0);
    for (const auto& d : sublevels(Level::D32)) {
      const double mass = shelf[detail::d_index(d)];
      if (mass == 0.0) continue;
      const auto p = detail::driven_partner(d, cfg.drive);
      if (!p) {
        out.p_dark += mass;
        continue;
      }
      for (const auto& ch : allowed_decays(*p, cfg.model)) {
        if (ch.lower.level() == Level::D32)
          next[detail::d_index(ch.lower)] += mass * ch.probability;
        else if (*p == *good_p)
          out.p_good += mass * ch.probability;
        else
          out.p_bad += mass * ch.probability;
      }
    }
    shelf = std::move(next);
  }
  for (double m : shelf) out.p_dark += m;
  return out;
}

/// Trajectories are generated in fixed blocks, each with its own
/// mt19937_64 stream seeded from (seed, block index), so the result depends
/// only on (cfg, n_trials, seed) and never on the thread count.
inline constexpr std::uint64_t kTrajectoriesPerBlock = 8192;

inline ChainOutcome simulate(const PumpCycleConfig& cfg, std::uint64_t n_trials, std::uint64_t seed,
                             unsigned threads = 1) {
  cfg.validate();
  if (n_trials < 1) throw DomainError("n_trials must be at least 1");
  const auto good_p = detail::driven_partner(cfg.initial, cfg.drive);

  std::vector<std::optional<int>> drive_target(4);  // D32 index -> P12 index
  for (const auto& d : sublevels(Level::D32))
    if (const auto p = detail::driven_partner(d, cfg.drive)) drive_target[detail::d_index(d)] = detail::p_index(*p);
  const auto tables = good_p ? detail::decay_tables(cfg, *good_p) : std::vector<detail::DecayTable>{};

  const std::uint64_t n_blocks = (n_trials + kTrajectoriesPerBlock - 1) / kTrajectoriesPerBlock;
  std::vector<std::array<std::uint64_t, 3>> counts(n_blocks, {0, 0, 0});

  auto run_block = [&](std::uint64_t block) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
    std::mt19937_64 rng(seq);
    const std::uint64_t first = block * kTrajectoriesPerBlock;
    const std::uint64_t last = std::min(n_trials, first + kTrajectoriesPerBlock);
    auto& c = counts[block];
    for (std::uint64_t t = first; t < last; ++t) {
      int d = detail::d_index(cfg.initial);
      int outcome = detail::kDark;
      for (int cycle = 0; cycle < cfg.max_cycles; ++cycle) {
        if (!drive_target[d]) break;
        const auto& table = tables[*drive_target[d]];
        const double u = detail::unit_uniform(rng()) * table.cumulative.back();
        const auto k = static_cast<std::size_t>(
            std::upper_bound(table.cumulative.begin(), table.cumulative.end(), u) - table.cumulative.begin());
        const int next = table.next[std::min(k, table.next.size() - 1)];
        if (next < 0) {
          outcome = -1 - next;
          break;
        }
        d = next;
      }
      ++c[outcome];
    }
  };

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(n_blocks, 1024))));
  if (threads == 1) {
    for (std::uint64_t b = 0; b < n_blocks; ++b) run_block(b);
  } else {
    std::atomic<std::uint64_t> next_block{0};
    std::vector<std::jthread> workers;
    for (unsigned w = 0; w < threads; ++w)
      workers.emplace_back([&] {
        for (std::uint64_t b = next_block++; b < n_blocks; b = next_block++) run_block(b);
      });
  }

  std::array<std::uint64_t, 3> total{0, 0, 0};
  for (const auto& c : counts)
    for (int i = 0; i < 3; ++i) total[i] += c[i];
  const double n = static_cast<double>(n_trials);
  auto se = [n](double p) { return std::sqrt(p * (1.0 - p) / n); };
  ChainOutcome out;
  out.p_good = total[detail::kGood] / n;
  out.p_bad = total[detail::kBad] / n;
  out.p_dark = total[detail::kDark] / n;
  out.se_good = se(out.p_good);
  out.se_bad = se(out.p_bad);
  out.se_dark = se(out.p_dark);
  return out;
}

}  // namespace ionlink

#endif
