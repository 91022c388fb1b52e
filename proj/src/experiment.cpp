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

#include "dynlpa/experiment.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <fstream>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "dynlpa/metrics.hpp"
#include "dynlpa/prob_expr.hpp"

namespace dynlpa {

EdgeModel ExperimentConfig::make_model() const {
  if (!p_up.empty()) {
    auto rate = [&](const std::string& expr, const char* name) {
      if (expr.empty())
        throw std::invalid_argument(std::string("markovian model: missing ") +
                                    name);
      ProbValue v = parse_prob_expr(expr, n);
      if (v.uniform)
        throw std::invalid_argument(
            std::string(name) + ": uniform(..) is only valid for p");
      return v.fixed();
    };
    return EdgeModel::markovian(rate(p_up, "p_up"), rate(p_down, "p_down"),
                                rate(q_up, "q_up"), rate(q_down, "q_down"),
                                markov_init);
  }
  ProbValue pv = parse_prob_expr(p, n);
  ProbValue qv = parse_prob_expr(q, n);
  if (qv.uniform)
    throw std::invalid_argument("q: uniform(..) is only valid for p");
  if (pv.uniform)
    return EdgeModel::non_homogeneous(pv.lo, pv.hi, qv.fixed());
  return EdgeModel::two_block(pv.fixed(), qv.fixed());
}

PhaseSchedule ExperimentConfig::make_schedule() const {
  uint32_t windows = multi_source ? 4 : 3;
  PhaseSchedule sched =
      c_per_phase ? operational_schedule_per_phase(n, *c_per_phase, windows)
                  : operational_schedule(n, c, windows);
  EdgeModel model = make_model();
  if (sparse) sched = sparse_schedule(sched, model.mean_intra_prob(), n);
  if (meg) sched = meg_schedule(sched, model, n, meg_multiplier);
  return sched;
}

std::string ExperimentConfig::model_name() const {
  if (!p_up.empty()) return "markovian";
  return parse_prob_expr(p, n).uniform ? "nonhomogeneous" : "twoblock";
}

std::string ExperimentConfig::variant_name() const {
  std::string v = multi_source ? "multi-source" : "two-source";
  if (p_unknown) v += "+p-unknown";
  if (sparse) v += "+sparse";
  if (meg) v += "+meg";
  return v;
}

std::string ExperimentSummary::csv_header() {
  return "n,model,p_expr,q_expr,variant,c,trials,successes,total_rounds,seed";
}

std::string ExperimentSummary::csv_row() const {
  std::ostringstream os;
  os << config.n << ',' << config.model_name() << ','
     << (config.p_up.empty() ? config.p : config.p_up) << ','
     << (config.p_up.empty() ? config.q : config.q_up) << ','
     << config.variant_name() << ',' << config.c << ',' << config.trials << ','
     << successes << ',' << total_rounds << ',' << config.seed;
  return os.str();
}

namespace {

struct TrialOutput {
  TrialRecord record;
  Trajectory trajectory;
};

TrialOutput run_one_trial(const ExperimentConfig& config,
                          const EdgeModel& model, const PhaseSchedule& sched,
                          uint32_t trial) {
  TrialOutput out;
  uint64_t trial_seed = derive_trial_seed(config.seed, trial);
  PlantedPartition part(config.n, config.r);
  DynamicGraphProcess process(part, model, trial_seed);

  ProtocolConfig pcfg;
  pcfg.variant = config.multi_source ? ProtocolVariant::multi_source
                                     : ProtocolVariant::two_source;
  pcfg.schedule = sched;
  pcfg.p_unknown = config.p_unknown;
  pcfg.estimation_c = config.estimation_c;
  pcfg.source_d = config.d;
  pcfg.record_trajectory = config.trajectories;

  RunResult res = run_protocol(process, pcfg);
  out.record.trial = trial;
  out.record.seed = trial_seed;
  out.record.success = res.success;
  out.record.rounds = sched.graph_rounds();
  out.record.convergence_round = res.convergence;
  out.trajectory = std::move(res.trajectory);
  return out;
}

void write_trial_csv(const ExperimentSummary& summary) {
  const std::string& path = summary.config.out;
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open output file: " + path);
  os << "trial,seed,success,rounds,convergence_round\n";
  for (const TrialRecord& rec : summary.records) {
    os << rec.trial << ',' << rec.seed << ',' << (rec.success ? 1 : 0) << ','
       << rec.rounds << ',';
    if (rec.convergence_round) os << *rec.convergence_round;
    os << '\n';
  }
  if (!os.flush()) throw std::runtime_error("write failed: " + path);
}

std::string trajectory_path(const std::string& out, uint32_t trial) {
  std::string stem = out;
  size_t dot = stem.rfind('.');
  if (dot != std::string::npos && dot > stem.rfind('/') + 1)
    stem = stem.substr(0, dot);
  return stem + "_traj_" + std::to_string(trial) + ".csv";
}

}  // namespace

ExperimentSummary run_experiment(const ExperimentConfig& config) {
  if (config.trials < 1)
    throw std::invalid_argument("run_experiment: trials must be >= 1");
  EdgeModel model = config.make_model();
  PhaseSchedule sched = config.make_schedule();
  if (config.meg && config.sparse)
    throw std::invalid_argument(
        "run_experiment: sparse and meg cannot be combined");

  ExperimentSummary summary;
  summary.config = config;
  summary.total_rounds = sched.graph_rounds();

  std::vector<TrialOutput> outputs(config.trials);
  uint32_t workers = config.threads ? config.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<uint32_t>(workers, config.trials);

  std::atomic<uint32_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    while (!failed.load(std::memory_order_relaxed)) {
      uint32_t trial = next.fetch_add(1);
      if (trial >= config.trials) return;
      try {
        outputs[trial] = run_one_trial(config, model, sched, trial);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        failed.store(true);
        return;
      }
    }
  };

  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (uint32_t i = 0; i < workers; ++i) pool.emplace_back(worker);
    for (std::thread& th : pool) th.join();
  }
  if (error) std::rethrow_exception(error);

  summary.records.reserve(config.trials);
  for (TrialOutput& o : outputs) {
    if (o.record.success) ++summary.successes;
    summary.records.push_back(o.record);
  }

  if (!config.out.empty()) {
    write_trial_csv(summary);
    if (config.trajectories) {
      for (const TrialOutput& o : outputs) {
        std::string path = trajectory_path(config.out, o.record.trial);
        std::ofstream os(path);
        if (!os) throw std::runtime_error("cannot open output file: " + path);
        write_trajectory_csv(os, o.trajectory);
      }
    }
  }
  return summary;
}

std::vector<ExperimentConfig> table_presets(const std::string& name,
                                            uint64_t max_n) {
  struct Column {
    const char* q;
    double c;
  };
  std::vector<uint64_t> sizes;
  std::string p;
  std::vector<Column> columns;
  if (name == "table1") {
    sizes = {20000,  40000,  80000,   160000,
             320000, 640000, 1280000, 2560000};
    p = "5/n";
    columns = {{"n^-3/2", 0.9}, {"n^-5/3", 0.6}, {"n^-2", 0.5}};
  } else if (name == "table2") {
    sizes = {20000, 40000, 80000, 160000, 320000, 640000, 1280000};
    p = "uniform(1/n,9/n)";
    columns = {{"n^-3/2", 1.0}, {"n^-5/3", 0.4}, {"n^-2", 0.4}};
  } else if (name == "table3") {
    sizes = {20000, 40000, 80000, 160000, 320000, 640000, 1280000};
    p = "uniform(0,log n / n)";
    columns = {{"n^-3/2", 1.0}, {"n^-5/3", 0.4}, {"n^-2", 0.4}};
  } else {
    throw std::invalid_argument("unknown table preset: " + name);
  }
  std::vector<ExperimentConfig> configs;
  for (uint64_t n : sizes) {
    if (max_n != 0 && n > max_n) continue;
    for (const Column& col : columns) {
      ExperimentConfig cfg;
      cfg.n = n;
      cfg.p = p;
      cfg.q = col.q;
      cfg.c = col.c;
      cfg.trials = 100;
      configs.push_back(cfg);
    }
  }
  return configs;
}

void set_config_key(ExperimentConfig& config, const std::string& key,
                    const std::string& value) {
  auto to_u64 = [&](const std::string& v) { return std::stoull(v); };
  auto to_f = [&](const std::string& v) { return std::stod(v); };
  auto to_bool = [&](const std::string& v) {
    if (v == "1" || v == "true" || v == "yes" || v == "on") return true;
    if (v == "0" || v == "false" || v == "no" || v == "off") return false;
    throw std::invalid_argument("expected a boolean, got '" + v + "'");
  };
  try {
    if (key == "n") config.n = to_u64(value);
    else if (key == "r") config.r = uint32_t(to_u64(value));
    else if (key == "p") config.p = value;
    else if (key == "q") config.q = value;
    else if (key == "p_up") config.p_up = value;
    else if (key == "p_down") config.p_down = value;
    else if (key == "q_up") config.q_up = value;
    else if (key == "q_down") config.q_down = value;
    else if (key == "markov_init") {
      if (value == "stationary") config.markov_init = MarkovInit::stationary;
      else if (value == "empty") config.markov_init = MarkovInit::empty;
      else throw std::invalid_argument("markov_init must be stationary|empty");
    } else if (key == "variant") {
      config.multi_source = false;
      config.p_unknown = false;
      config.sparse = false;
      config.meg = false;
      std::stringstream ss(value);
      std::string flag;
      while (std::getline(ss, flag, ',')) {
        if (flag == "two-source") config.multi_source = false;
        else if (flag == "multi-source") config.multi_source = true;
        else if (flag == "p-known") config.p_unknown = false;
        else if (flag == "p-unknown") config.p_unknown = true;
        else if (flag == "sparse") config.sparse = true;
        else if (flag == "meg") config.meg = true;
        else if (!flag.empty())
          throw std::invalid_argument("unknown variant flag: " + flag);
      }
    } else if (key == "c") config.c = to_f(value);
    else if (key == "c1" || key == "c2" || key == "c3" || key == "c4" ||
             key == "c5") {
      if (!config.c_per_phase)
        config.c_per_phase = {config.c, config.c, config.c, config.c, config.c};
      (*config.c_per_phase)[key[1] - '1'] = to_f(value);
    } else if (key == "d") config.d = to_f(value);
    else if (key == "estimation_c") config.estimation_c = to_f(value);
    else if (key == "meg_multiplier") config.meg_multiplier = to_f(value);
    else if (key == "trials") config.trials = uint32_t(to_u64(value));
    else if (key == "seed") config.seed = to_u64(value);
    else if (key == "out") config.out = value;
    else if (key == "trajectories") config.trajectories = to_bool(value);
    else if (key == "threads") config.threads = uint32_t(to_u64(value));
    else throw std::invalid_argument("unknown config key: " + key);
  } catch (const std::invalid_argument&) {
    throw;
  } catch (const std::exception&) {
    throw std::invalid_argument("bad value for " + key + ": '" + value + "'");
  }
}

void load_config_file(ExperimentConfig& config, const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open config file: " + path);
  std::string line;
  int lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    size_t hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    size_t eq = line.find('=');
    if (eq == std::string::npos) {
      bool blank = line.find_first_not_of(" \t\r") == std::string::npos;
      if (blank) continue;
      throw std::invalid_argument(path + ":" + std::to_string(lineno) +
                                  ": expected key = value");
    }
    auto trim = [](std::string s) {
      size_t b = s.find_first_not_of(" \t\r");
      size_t e = s.find_last_not_of(" \t\r");
      return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    };
    set_config_key(config, trim(line.substr(0, eq)), trim(line.substr(eq + 1)));
  }
}

std::optional<double> tune_c(ExperimentConfig config, double c_min,
                             double c_max, double target) {
  for (double c = c_min; c <= c_max + 1e-9; c += 0.1) {
    config.c = std::round(c * 10.0) / 10.0;
    config.c_per_phase.reset();
    ExperimentSummary s = run_experiment(config);
    if (double(s.successes) / double(config.trials) >= target)
      return config.c;
  }
  return std::nullopt;
}

MegCheck run_meg_check(uint64_t seed) {
  MegCheck out;

  // Stationary density from an empty start, sampled after the mixing
  // bound. A single chain class (q == p) over n=1000 gives ~5e5 pairs.
  {
    const uint64_t n = 1000;
    EdgeModel model = EdgeModel::markovian(0.001, 0.3, 0.001, 0.3,
                                           MarkovInit::empty);
    PlantedPartition part(n, 2);
    DynamicGraphProcess proc(part, model, derive_trial_seed(seed, 0));
    uint64_t mix = mixing_time_bound(model, n, 3.0);
    Snapshot snap;
    for (uint64_t t = 0; t < mix; ++t) snap = proc.next_snapshot();
    double pairs = double(n) * double(n - 1) / 2.0;
    double pi = stationary_edge_prob(0.001, 0.3);
    out.density = double(snap.edges.size()) / pairs;
    out.expected_density = pi;
    out.density_sigma = std::sqrt(pi * (1.0 - pi) / pairs);
    out.density_ok =
        std::abs(out.density - out.expected_density) <= 3.0 * out.density_sigma;
  }

  // Degenerate chains (down = 1-up) resample every edge independently
  // each round, so the protocol's success rate must match the Bernoulli
  // generator's.
  {
    ExperimentConfig meg_cfg;
    meg_cfg.n = 5000;
    meg_cfg.p_up = "5/n";
    meg_cfg.p_down = "0.9990";  // 1 - 5/n at n=5000
    meg_cfg.q_up = "n^-2";
    meg_cfg.q_down = "0.99999996";  // 1 - n^-2 at n=5000
    meg_cfg.meg = true;
    meg_cfg.meg_multiplier = 1.0;
    meg_cfg.c = 0.5;
    meg_cfg.trials = 100;
    meg_cfg.seed = derive_trial_seed(seed, 1);

    ExperimentConfig bern_cfg;
    bern_cfg.n = 5000;
    bern_cfg.p = "5/n";
    bern_cfg.q = "n^-2";
    bern_cfg.c = 0.5;
    bern_cfg.trials = 100;
    bern_cfg.seed = derive_trial_seed(seed, 2);

    ExperimentSummary meg_sum = run_experiment(meg_cfg);
    ExperimentSummary bern_sum = run_experiment(bern_cfg);
    out.meg_successes = meg_sum.successes;
    out.bernoulli_successes = bern_sum.successes;
    out.trials = meg_cfg.trials;
    out.success_gap_ok =
        std::abs(int(out.meg_successes) - int(out.bernoulli_successes)) <= 5;
  }
  return out;
}

}  // namespace dynlpa
