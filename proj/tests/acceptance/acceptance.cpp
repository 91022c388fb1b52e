// Copyright 2026 The dynlpa Authors.
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

// End-to-end acceptance suite. Each numbered check prints one pass/fail
// line; the process exits nonzero if any check fails. Seeds are pinned,
// so every run is reproducible bit for bit.

#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "dynlpa/experiment.hpp"
#include "dynlpa/extensions.hpp"
#include "dynlpa/metrics.hpp"
#include "dynlpa/oracle.hpp"

using namespace dynlpa;

namespace {

int g_failures = 0;

void report(const std::string& name, bool ok, const std::string& detail) {
  std::printf("[%s] %-58s %s\n", ok ? "PASS" : "FAIL", name.c_str(),
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

ExperimentConfig desk_config(const std::string& p, const std::string& q,
                             double c, uint64_t seed) {
  ExperimentConfig cfg;
  cfg.n = 20000;
  cfg.p = p;
  cfg.q = q;
  cfg.c = c;
  cfg.trials = 100;
  cfg.seed = seed;
  return cfg;
}

void table_check(const std::string& name, const ExperimentConfig& cfg,
                 uint32_t min_successes, uint64_t max_rounds) {
  ExperimentSummary s = run_experiment(cfg);
  char detail[128];
  std::snprintf(detail, sizeof detail, "%u/%u successes in %llu rounds (need >=%u within %llu)",
                s.successes, cfg.trials,
                (unsigned long long)s.total_rounds, min_successes,
                (unsigned long long)max_rounds);
  report(name, s.successes >= min_successes && s.total_rounds <= max_rounds,
         detail);
}

// 1. Homogeneous desk-scale grid at n=20000, p=5/n.
void criterion1() {
  table_check("1a. table1 q=n^-2, c=0.5", desk_config("5/n", "n^-2", 0.5, 11),
              95, 36);
  table_check("1b. table1 q=n^-5/3, c=0.6",
              desk_config("5/n", "n^-5/3", 0.6, 2), 95, 46);
  table_check("1c. table1 q=n^-3/2, c=0.9",
              desk_config("5/n", "n^-3/2", 0.9, 13), 93, 66);
}

// 2-3. Non-homogeneous desk-scale rows.
void criteria23() {
  table_check("2.  table2 uniform(1/n,9/n), q=n^-2, c=0.4",
              desk_config("uniform(1/n,9/n)", "n^-2", 0.4, 17), 95, 36);
  table_check("3.  table3 uniform(0,log n/n), q=n^-2, c=0.4",
              desk_config("uniform(0,log n / n)", "n^-2", 0.4, 19), 95, 31);
}

// 4. Link orientation distribution at p=0.19 over 1e6 pair-rounds.
void criterion4() {
  const double p = 0.19;
  const uint64_t rounds = 1000000;
  oracle::LinkprocStats st = oracle::linkproc_stats(p, rounds, 20260301);
  const double p_dir = 1.0 - std::sqrt(1.0 - p);  // 0.1
  const double nn = double(rounds);
  double sd_dir = std::sqrt(p_dir * (1 - p_dir) / nn);
  bool dir_ok =
      std::abs(double(st.retained_fwd) / nn - p_dir) <= 3 * sd_dir &&
      std::abs(double(st.retained_bwd) / nn - p_dir) <= 3 * sd_dir;
  double p_joint = p_dir * p_dir;  // 0.01
  double sd_joint = std::sqrt(p_joint * (1 - p_joint) / nn);
  bool joint_ok =
      std::abs(double(st.retained_both) / nn - p_joint) <= 3 * sd_joint;
  MarkDist d = mark_dist(p);
  double draws = 2.0 * double(st.edges);
  double expect[3] = {d.p_one, d.p_one, d.p_zero};
  bool marks_ok = true;
  for (int i = 0; i < 3; ++i) {
    double freq = double(st.mark_counts[i]) / draws;
    double sd = std::sqrt(expect[i] * (1 - expect[i]) / draws);
    marks_ok = marks_ok && std::abs(freq - expect[i]) <= 3 * sd;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "dir %.5f/%.5f (0.1), joint %.5f (0.01), marks %s",
                double(st.retained_fwd) / nn, double(st.retained_bwd) / nn,
                double(st.retained_both) / nn, marks_ok ? "3sigma" : "off");
  report("4.  link-proc retention/mark distribution",
         dir_ok && joint_ok && marks_ok, detail);
}

// 5. Phase-1 end-state interval at n=20000, p=5/n, q=n^-2, default c.
void criterion5() {
  const uint64_t n = 20000;
  const double p = 5.0 / double(n);
  PlantedPartition part(n, 2);
  PhaseSchedule sched = operational_schedule(n, 0.5, 3);
  double np_tau1 = double(n) * p * double(sched.tau1);
  double k_lo = np_tau1 / 16.0, k_hi = 4.0 * np_tau1;
  uint32_t h_zero = 0, k_in_range = 0;
  const uint32_t trials = 100;
  for (uint32_t trial = 0; trial < trials; ++trial) {
    DynamicGraphProcess proc(part, EdgeModel::two_block(p, 1.0 / (double(n) * double(n))),
                             derive_trial_seed(37, trial));
    ProtocolConfig cfg;
    cfg.schedule = sched;
    cfg.record_trajectory = true;
    RunResult res = run_protocol(proc, cfg);
    const TrajectoryRow& at_tau1 = res.trajectory.at(sched.tau1 - 1);
    if (at_tau1.h[0] == 0 && at_tau1.h[1] == 0) ++h_zero;
    bool in_range = true;
    for (int i = 0; i < 2; ++i)
      in_range = in_range && double(at_tau1.k[i]) >= k_lo &&
                 double(at_tau1.k[i]) <= k_hi;
    if (in_range) ++k_in_range;
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "h=0 in %u/100 (need >=99), k in [%.2f,%.0f] in %u/100 (need >=95)",
                h_zero, k_lo, k_hi, k_in_range);
  report("5.  phase-1 end state (k interval, h=0)",
         h_zero >= 99 && k_in_range >= 95, detail);
}

// 6. Markovian stationarity + degenerate independence.
void criterion6() {
  MegCheck check = run_meg_check(43);
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "density %.5f vs %.5f (sigma %.5f); meg %u vs bernoulli %u",
                check.density, check.expected_density, check.density_sigma,
                check.meg_successes, check.bernoulli_successes);
  report("6.  markovian stationarity + degenerate case",
         check.density_ok && check.success_gap_ok, detail);
}

// 7. OR-graph union rate and sparse-variant equivalence at n=5000.
void criterion7() {
  const uint64_t n = 5000;
  const double p = 1.0 / (4.0 * double(n));
  const int delta = 4;
  const double p_union = 1.0 - std::pow(1.0 - p, double(delta));

  PlantedPartition part(n, 2);
  DynamicGraphProcess proc(part, EdgeModel::two_block(p, p), 4242);
  uint64_t union_edges = 0;
  const int reps = 60;
  for (int rep = 0; rep < reps; ++rep) {
    std::vector<Snapshot> window;
    for (int i = 0; i < delta; ++i) window.push_back(proc.next_snapshot());
    union_edges += or_union(window).edges.size();
  }
  double pairs = double(n) * double(n - 1) / 2.0 * reps;
  double rate = double(union_edges) / pairs;
  double sd = std::sqrt(p_union * (1 - p_union) / pairs);
  bool rate_ok = std::abs(rate - p_union) <= 3 * sd;

  ExperimentConfig sparse_cfg;
  sparse_cfg.n = n;
  sparse_cfg.p = "1/20000";  // 1/(4n) at n=5000
  sparse_cfg.q = "0";
  sparse_cfg.sparse = true;
  sparse_cfg.c = 3.0;
  sparse_cfg.trials = 100;
  sparse_cfg.seed = 47;
  ExperimentSummary sparse_sum = run_experiment(sparse_cfg);

  ExperimentConfig direct_cfg = sparse_cfg;
  direct_cfg.sparse = false;
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12f", p_union);
  direct_cfg.p = buf;
  direct_cfg.seed = 48;
  ExperimentSummary direct_sum = run_experiment(direct_cfg);

  bool equiv_ok = std::abs(int(sparse_sum.successes) -
                           int(direct_sum.successes)) <= 5;
  char detail[200];
  std::snprintf(detail, sizeof detail,
                "union rate %.3g vs %.3g (3sd %.2g); sparse %u vs direct %u",
                rate, p_union, 3 * sd, sparse_sum.successes,
                direct_sum.successes);
  report("7.  delta-OR union rate + sparse equivalence", rate_ok && equiv_ok,
         detail);
}

// 8. Degree estimator concentration: n=20000, d=5, c=30. The estimator
// models the per-round degree as n-1 trials at d/n, i.e. p = q = d/n.
void criterion8() {
  const uint64_t n = 20000;
  const double d = 5.0;
  PlantedPartition part(n, 2);
  DynamicGraphProcess proc(part, EdgeModel::two_block(d / n, d / n), 53);
  uint64_t rounds = uint64_t(std::ceil(30.0 * std::log(double(n))));
  std::vector<uint64_t> degree_sum(n, 0);
  for (uint64_t t = 0; t < rounds; ++t) {
    Snapshot s = proc.next_snapshot();
    for (const Edge& e : s.edges) {
      ++degree_sum[e.u];
      ++degree_sum[e.v];
    }
  }
  uint64_t within = 0;
  for (uint64_t v = 0; v < n; ++v) {
    double est = estimate_degree(degree_sum[v], rounds, n);
    if (std::abs(est - d) <= std::sqrt(d)) ++within;
  }
  double fraction = double(within) / double(n);
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "|D(S)-5| <= sqrt(5) for %.2f%% of nodes (need >=99%%)",
                100.0 * fraction);
  report("8.  degree estimator confidence interval", fraction >= 0.99, detail);
}

// 9. Multi-source end-to-end; every success carries the minimal source
// label of its community.
void criterion9() {
  const uint64_t n = 20000;
  PlantedPartition part(n, 2);
  uint32_t successes = 0;
  bool min_label_ok = true;
  const uint32_t trials = 100;
  for (uint32_t trial = 0; trial < trials; ++trial) {
    DynamicGraphProcess proc(
        part,
        EdgeModel::two_block(5.0 / double(n),
                             1.0 / (double(n) * double(n))),
        derive_trial_seed(59, trial));
    ProtocolConfig cfg;
    cfg.variant = ProtocolVariant::multi_source;
    cfg.schedule = operational_schedule(n, 1.5, 4);
    cfg.source_d = 2.0;
    RunResult res = run_protocol(proc, cfg);
    if (!res.success) continue;
    ++successes;
    for (uint32_t i = 0; i < 2; ++i)
      min_label_ok = min_label_ok &&
                     res.labels[part.begin(i)] == res.reference_labels[i];
  }
  char detail[128];
  std::snprintf(detail, sizeof detail,
                "%u/100 successes (need >=90), min-source labels %s",
                successes, min_label_ok ? "hold" : "VIOLATED");
  report("9.  multi-source election end-to-end",
         successes >= 90 && min_label_ok, detail);
}

// 10. Bit-for-bit oracle equivalence at n <= 200 over 1e3 rounds.
void criterion10() {
  const uint64_t n = 200;
  PlantedPartition part(n, 2);

  bool generator_ok = true;
  uint64_t generator_rounds = 0;
  std::vector<EdgeModel> models = {
      EdgeModel::two_block(0.05, 0.01),
      EdgeModel::non_homogeneous(0.0, 0.1, 0.01),
      EdgeModel::markovian(0.02, 0.3, 0.005, 0.4, MarkovInit::stationary)};
  for (size_t m = 0; m < models.size(); ++m) {
    uint64_t seed = derive_trial_seed(61, m);
    DynamicGraphProcess fast(part, models[m], seed);
    oracle::NaiveDynamicGraph naive(part, models[m], seed,
                                    oracle::DrawMode::shared);
    for (int t = 0; t < 350; ++t) {
      ++generator_rounds;
      generator_ok =
          generator_ok && fast.next_snapshot().edges == naive.next_snapshot().edges;
    }
  }

  bool protocol_ok = true;
  uint64_t protocol_rounds = 0;
  for (int rep = 0; rep < 6; ++rep) {
    bool multi = rep % 2 == 1;
    EdgeModel model = EdgeModel::two_block(0.06, 0.002);
    uint64_t seed = derive_trial_seed(67, rep);
    DynamicGraphProcess proc(part, model, seed);
    ProtocolConfig cfg;
    cfg.variant =
        multi ? ProtocolVariant::multi_source : ProtocolVariant::two_source;
    cfg.schedule = operational_schedule(n, 4.5, multi ? 4 : 3);
    cfg.source_d = 4.0;
    ProtocolEngine engine(proc.pairs(), proc.rng(), cfg, 0.06);
    oracle::NaiveProtocol naive(proc.pairs(), proc.rng(), cfg, 0.06);
    protocol_ok = protocol_ok && engine.labels() == naive.labels();
    while (!engine.finished()) {
      Snapshot s = proc.next_snapshot();
      engine.advance(s);
      naive.advance(s);
      ++protocol_rounds;
      protocol_ok = protocol_ok && engine.labels() == naive.labels();
    }
  }
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "generator %llu rounds %s; protocol %llu rounds %s",
                (unsigned long long)generator_rounds,
                generator_ok ? "bit-identical" : "MISMATCH",
                (unsigned long long)protocol_rounds,
                protocol_ok ? "bit-identical" : "MISMATCH");
  report("10. naive-oracle bit-for-bit equivalence",
         generator_ok && protocol_ok &&
             generator_rounds >= 1000 && protocol_rounds >= 1000,
         detail);
}

// Indirect asymptotic check: rounds grow by at most 5 per doubling of n
// while the success bar holds (q=n^-2, c=0.5 column).
void round_growth_check() {
  uint64_t rounds[3];
  uint32_t succ[3];
  uint64_t ns[3] = {20000, 40000, 80000};
  uint64_t seeds[3] = {11, 23, 29};
  for (int i = 0; i < 3; ++i) {
    ExperimentConfig cfg;
    cfg.n = ns[i];
    cfg.p = "5/n";
    cfg.q = "n^-2";
    cfg.c = 0.5;
    cfg.trials = 100;
    cfg.seed = seeds[i];
    ExperimentSummary s = run_experiment(cfg);
    rounds[i] = s.total_rounds;
    succ[i] = s.successes;
  }
  bool ok = rounds[1] >= rounds[0] && rounds[2] >= rounds[1] &&
            rounds[1] - rounds[0] <= 5 && rounds[2] - rounds[1] <= 5 &&
            succ[0] >= 95 && succ[1] >= 95 && succ[2] >= 95;
  char detail[160];
  std::snprintf(detail, sizeof detail,
                "rounds %llu -> %llu -> %llu, successes %u/%u/%u",
                (unsigned long long)rounds[0], (unsigned long long)rounds[1],
                (unsigned long long)rounds[2], succ[0], succ[1], succ[2]);
  report("11. round growth <= 5 per doubling (n up to 80000)", ok, detail);
}

}  // namespace

int main() {
  std::printf("acceptance suite (pinned seeds, deterministic)\n");
  criterion1();
  criteria23();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  round_growth_check();
  if (g_failures == 0)
    std::printf("all acceptance checks passed\n");
  else
    std::printf("%d acceptance check(s) FAILED\n", g_failures);
  return g_failures == 0 ? 0 : 1;
}
