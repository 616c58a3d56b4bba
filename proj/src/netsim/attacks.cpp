#include "nakamoto/netsim/attacks.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

#include <nlohmann/json.hpp>

#include "nakamoto/crypto/rng.hpp"

namespace nakamoto::netsim {

AttackOutcome double_spend_attack(const ScenarioConfig& config, double q, std::uint64_t confirmations,
                                  std::uint64_t seed, Estimator estimator, double tilt) {
  if (!config.attack) throw InvalidConfig("double spend needs an attack section");
  ScenarioConfig c = with_attacker_power(config, q);
  c.attack->confirmations = confirmations;
  c.monte_carlo.reset();
  RunOptions opts;
  opts.settle = false;
  opts.track_forks = false;
  if (estimator == Estimator::tilted && q > 0) {
    std::map<std::string, double> draw;
    for (const auto& p : with_attacker_power(config, tilt).participants)
      if (p.role == Role::miner || p.id == config.attack->attacker) draw[p.id] = p.hash_power;
    opts.sampling_powers = std::move(draw);
  }
  return *run(c, seed, opts).metrics.attack;
}

LogFit log_linear_fit(const std::vector<double>& x, const std::vector<double>& y) {
  LogFit f;
  if (x.size() != y.size() || x.size() < 2) return f;
  for (double v : y)
    if (!(v > 0)) return f;
  double n = static_cast<double>(x.size()), sx = 0, sy = 0;
  std::vector<double> ly;
  for (std::size_t i = 0; i < x.size(); ++i) {
    ly.push_back(std::log(y[i]));
    sx += x[i];
    sy += ly.back();
  }
  double mx = sx / n, my = sy / n, sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (ly[i] - my);
    syy += (ly[i] - my) * (ly[i] - my);
  }
  if (sxx == 0) return f;
  f.defined = true;
  f.slope = sxy / sxx;
  f.intercept = my - f.slope * mx;
  f.r2 = syy == 0 ? 1.0 : sxy * sxy / (sxx * syy);
  return f;
}

namespace {

// Calls body(j) for j in [0, runs) on up to `workers` threads; each index is
// handled exactly once and results are stored by index.
template <class F>
void fan_out(std::uint64_t runs, unsigned workers, F body) {
  workers = std::max(1u, workers);
  if (workers == 1 || runs < 2) {
    for (std::uint64_t j = 0; j < runs; ++j) body(j);
    return;
  }
  std::vector<std::thread> threads;
  std::uint64_t chunk = (runs + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t lo = w * chunk, hi = std::min(runs, lo + chunk);
    if (lo >= hi) break;
    threads.emplace_back([lo, hi, &body] {
      for (std::uint64_t j = lo; j < hi; ++j) body(j);
    });
  }
  for (auto& t : threads) t.join();
}

}  // namespace

DoubleSpendStudy double_spend_study(const ScenarioConfig& config, const MonteCarloConfig& mc, std::uint64_t seed,
                                    unsigned workers) {
  config.validate();
  DoubleSpendStudy study;
  study.estimator = mc.estimator;
  study.tilt = mc.estimator == Estimator::tilted ? mc.tilt : 0;
  for (double q : mc.powers) {
    StudyCurve curve;
    curve.q = q;
    std::vector<double> xs, ys;
    for (std::uint64_t k : mc.confirmations) {
      std::vector<double> weights(mc.runs, 0.0);
      fan_out(mc.runs, workers, [&](std::uint64_t j) {
        AttackOutcome o = double_spend_attack(config, q, k, crypto::Rng::derive_seed(seed, j), mc.estimator, mc.tilt);
        weights[j] = o.success ? std::exp(o.log_weight) : 0.0;
      });
      StudyPoint p;
      p.q = q;
      p.confirmations = k;
      p.runs = mc.runs;
      double sum = 0, sumsq = 0;
      for (double w : weights) {
        p.successes += w > 0;
        sum += w;
        sumsq += w * w;
      }
      double n = static_cast<double>(mc.runs);
      p.rate = sum / n;
      double var = std::max(0.0, sumsq / n - p.rate * p.rate);
      p.std_error = n > 1 ? std::sqrt(var / (n - 1)) : 0;
      curve.points.push_back(p);
      xs.push_back(static_cast<double>(k));
      ys.push_back(p.rate);
    }
    curve.monotone = true;
    for (std::size_t i = 1; i < curve.points.size(); ++i)
      if (curve.points[i].rate > curve.points[i - 1].rate) curve.monotone = false;
    curve.fit = log_linear_fit(xs, ys);
    study.curves.push_back(std::move(curve));
  }
  return study;
}

std::vector<std::string> DoubleSpendStudy::json_lines() const {
  using nlohmann::ordered_json;
  std::vector<std::string> out;
  for (const auto& c : curves) {
    for (const auto& p : c.points)
      out.push_back(ordered_json{{"type", "double-spend"},
                                 {"estimator", to_string(estimator)},
                                 {"q", p.q},
                                 {"confirmations", p.confirmations},
                                 {"runs", p.runs},
                                 {"successes", p.successes},
                                 {"success_rate", p.rate},
                                 {"std_error", p.std_error}}
                        .dump());
    ordered_json fit{{"type", "double-spend-fit"}, {"estimator", to_string(estimator)}, {"q", c.q},
                     {"monotone", c.monotone}};
    if (c.fit.defined) {
      fit["slope"] = c.fit.slope;
      fit["intercept"] = c.fit.intercept;
      fit["r2"] = c.fit.r2;
    } else {
      fit["r2"] = nullptr;
    }
    out.push_back(fit.dump());
  }
  return out;
}

RewriteStudy majority_rewrite_study(const ScenarioConfig& config, double q, std::uint64_t confirmations,
                                    std::uint64_t runs, std::uint64_t seed, unsigned workers) {
  config.validate();
  std::vector<AttackOutcome> outcomes(runs);
  fan_out(runs, workers, [&](std::uint64_t j) {
    outcomes[j] = double_spend_attack(config, q, confirmations, crypto::Rng::derive_seed(seed, j));
  });
  RewriteStudy s{q, confirmations, runs, 0, 0, 0};
  bool first = true;
  for (const auto& o : outcomes) {
    if (!o.success || o.replaced_depth < confirmations) continue;
    ++s.successes;
    s.shallowest = first ? o.replaced_depth : std::min(s.shallowest, o.replaced_depth);
    first = false;
  }
  s.rate = runs ? static_cast<double>(s.successes) / static_cast<double>(runs) : 0;
  return s;
}

std::string RewriteStudy::json() const {
  return nlohmann::ordered_json{{"type", "majority-rewrite"}, {"q", q},
                                {"confirmations", confirmations}, {"runs", runs},
                                {"successes", successes}, {"success_rate", rate},
                                {"shallowest_replacement", shallowest}}
      .dump();
}

double race_success_probability(double q, std::uint64_t k) {
  if (q <= 0) return 0;
  double p = 1 - q;
  if (q >= p) return 1;
  double r = q / p;
  if (k == 0) return r;
  // a = attacker blocks while the honest side mines k; negative binomial.
  double total = 0, term = std::pow(p, static_cast<double>(k));  // a = 0
  for (std::uint64_t a = 0; a < 10000; ++a) {
    if (a > 0) term *= q * static_cast<double>(k + a - 1) / static_cast<double>(a);
    double catch_up = a > k ? 1.0 : std::pow(r, static_cast<double>(k - a + 1));
    total += term * catch_up;
    if (a > k && term < 1e-18) break;
  }
  return total;
}

}  // namespace nakamoto::netsim
