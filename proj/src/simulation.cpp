#include "mediagame/simulation.hpp"

#include <algorithm>
#include <thread>
#include <vector>

#include "mediagame/rng.hpp"

namespace mediagame {

namespace {

// Integer tallies only, so merging per-thread partials is order-insensitive.
struct Tally {
  std::array<std::array<std::uint64_t, 3>, kNumClasses> by_class_type{};
  std::array<std::uint64_t, 3> retained{};

  void merge(const Tally& o) {
    for (std::size_t c = 0; c < kNumClasses; ++c)
      for (std::size_t t = 0; t < 3; ++t) by_class_type[c][t] += o.by_class_type[c][t];
    for (std::size_t t = 0; t < 3; ++t) retained[t] += o.retained[t];
  }
};

void play(const ModelParams& p, const StrategyProfile& profile, std::uint64_t seed,
          std::uint64_t begin, std::uint64_t end, Tally& tally) {
  const double sigma = p.sigma();
  const double high_cut = sigma + (1.0 - sigma) * p.pi();
  for (std::uint64_t rep = begin; rep < end; ++rep) {
    ReplicationRng rng(seed, rep);
    // Fixed number of draws per replication, consumed in game order.
    const double u_type = rng.uniform();
    const int state = rng.bernoulli(0.5) ? 1 : 0;
    const bool coin = rng.bernoulli(0.5);
    const bool accurate = rng.bernoulli(p.q());
    const bool malicious = rng.bernoulli(p.phi());

    IncumbentType type = IncumbentType::Low;
    if (u_type < sigma) {
      type = IncumbentType::Subversive;
    } else if (u_type < high_cut) {
      type = IncumbentType::High;
    }

    const bool informed = type == IncumbentType::High && profile.high_effort;
    const int policy = informed ? state : (coin ? 1 : 0);
    int message;
    if (type == IncumbentType::Subversive) {
      message = policy;
    } else {
      message = accurate ? state : 1 - state;
    }
    const AltReport report = (malicious || type == IncumbentType::Subversive)
                                 ? AltReport::Subversive
                                 : AltReport::NotSubversive;
    const ObservationClass obs{message == policy, report};

    ++tally.by_class_type[obs.index()][index_of(type)];
    if (profile.voter_rule.retains(obs)) ++tally.retained[index_of(type)];
  }
}

void fill_retention(const ModelParams& p, Metrics& m, const std::array<double, 3>& type_mass,
                    const std::array<double, 3>& retained_mass, double total) {
  double welfare = 0.0;
  double retained_total = 0.0;
  for (IncumbentType t : kAllTypes) {
    const auto i = index_of(t);
    m.retain_prob_by_type[i] = type_mass[i] > 0.0 ? retained_mass[i] / type_mass[i] : 0.0;
    welfare += retained_mass[i] * type_utility(p, t);
    retained_total += retained_mass[i];
  }
  welfare += (total - retained_total) * p.u_c();
  m.expected_voter_welfare = welfare / total;
  m.p_high_retained = m.retain_prob_by_type[index_of(IncumbentType::High)];
  m.p_low_retained = m.retain_prob_by_type[index_of(IncumbentType::Low)];
  m.p_subversive_retained = m.retain_prob_by_type[index_of(IncumbentType::Subversive)];
}

}  // namespace

Metrics simulate(const ModelParams& params, const StrategyProfile& profile, std::uint64_t n,
                 std::uint64_t seed, unsigned threads) {
  if (n == 0) throw InvalidCount();
  if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, n));

  std::vector<Tally> partial(threads);
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
      const std::uint64_t begin = n * w / threads;
      const std::uint64_t end = n * (w + 1) / threads;
      workers.emplace_back([&, w, begin, end] { play(params, profile, seed, begin, end, partial[w]); });
    }
  }
  Tally tally;
  for (const Tally& t : partial) tally.merge(t);

  Metrics m;
  m.n_replications = n;
  m.seed = seed;
  std::array<double, 3> type_mass{};
  std::array<double, 3> retained_mass{};
  for (std::size_t t = 0; t < 3; ++t) {
    for (std::size_t c = 0; c < kNumClasses; ++c) type_mass[t] += static_cast<double>(tally.by_class_type[c][t]);
    retained_mass[t] = static_cast<double>(tally.retained[t]);
  }
  fill_retention(params, m, type_mass, retained_mass, static_cast<double>(n));
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto& row = tally.by_class_type[c];
    if (row[0] + row[1] + row[2] == 0) continue;
    m.empirical_posteriors[c] = Posterior::from_weights(
        static_cast<double>(row[0]), static_cast<double>(row[1]), static_cast<double>(row[2]));
  }
  return m;
}

Metrics theoretical_metrics(const ModelParams& params, const StrategyProfile& profile) {
  const OutcomeTable table = outcome_distribution(params, profile);
  Metrics m;
  std::array<double, 3> type_mass{};
  std::array<double, 3> retained_mass{};
  for (IncumbentType t : kAllTypes) {
    const auto i = index_of(t);
    type_mass[i] = table.type_mass(t);
    for (std::size_t c = 0; c < kNumClasses; ++c) {
      const auto obs = ObservationClass::from_index(c);
      if (profile.voter_rule.retains(obs)) retained_mass[i] += table.joint(t, obs);
    }
  }
  fill_retention(params, m, type_mass, retained_mass, table.total());
  for (std::size_t c = 0; c < kNumClasses; ++c) {
    const auto obs = ObservationClass::from_index(c);
    if (!(table.class_probability(obs) > 0.0)) continue;
    m.empirical_posteriors[c] = Posterior::from_weights(table.joint(IncumbentType::High, obs),
                                                        table.joint(IncumbentType::Low, obs),
                                                        table.joint(IncumbentType::Subversive, obs));
  }
  return m;
}

}  // namespace mediagame
