#include "gzl/selfplay.hpp"

#include <atomic>
#include <stdexcept>
#include <thread>

#include "gzl/rng.hpp"

namespace gzl::harness {

void HarnessConfig::validate() const {
  if (num_games < 1) throw std::invalid_argument("harness: num_games must be >= 1");
  if (ply_cap < 1) throw std::invalid_argument("harness: ply cap must be >= 1");
  if (workers < 1) throw std::invalid_argument("harness: workers must be >= 1");
  if (game == GameId::ToyIdeal) {
    if (!toy) throw std::invalid_argument("harness: ToyIdeal requires toy params");
    toy->validate();
  } else if (toy) {
    throw std::invalid_argument("harness: toy params only valid for ToyIdeal");
  }
  if (policy == PolicyKind::Biased) {
    if (game != GameId::ToyIdeal || !toy || toy->prefs.empty())
      throw std::invalid_argument("harness: biased policy needs ToyIdeal prefs");
  }
  if (policy == PolicyKind::Mcts) search.validate();
}

RecordMode HarnessConfig::effective_record_mode() const {
  switch (record) {
    case RecordModeOption::Acting: return RecordMode::Acting;
    case RecordModeOption::Reached: return RecordMode::Reached;
    case RecordModeOption::Auto:
      return game == GameId::ToyIdeal ? RecordMode::Reached : RecordMode::Acting;
  }
  return RecordMode::Acting;
}

uint64_t HarnessConfig::digest() const {
  std::string blob = game_name(game);
  blob += '|';
  blob += std::to_string(static_cast<int>(policy)) + '|' + std::to_string(num_games) +
          '|' + std::to_string(seed) + '|' + std::to_string(ply_cap) + '|' +
          std::to_string(static_cast<int>(effective_record_mode()));
  if (toy) {
    blob += "|toy:" + std::to_string(toy->branching) + ',' + std::to_string(toy->length);
    for (double p : toy->prefs) blob += ',' + std::to_string(p);
  }
  if (policy == PolicyKind::Mcts) {
    blob += "|mcts:" + std::to_string(search.simulations) + ',' +
            std::to_string(search.c_puct) + ',' + std::to_string(search.temperature) +
            ',' + std::to_string(search.rollout_count);
  }
  return fnv1a64(blob);
}

Trajectory play_game(const GameState& initial, const search::Policy& policy,
                     RecordMode mode, uint32_t ply_cap, std::mt19937_64& rng) {
  Trajectory out;
  GameState s = initial;
  bool tracks_captures = s.id == GameId::Oware || s.id == GameId::Checkers;
  auto push = [&](const GameState& st) {
    StateRecord r;
    r.key = observation_key(st);
    r.turn = static_cast<uint32_t>(out.records.size() + 1);
    if (tracks_captures) r.captures = capture_counts(st);
    out.records.push_back(std::move(r));
  };

  while (!outcome(s).terminal() && s.turn < static_cast<int>(ply_cap)) {
    if (mode == RecordMode::Acting) push(s);
    Action a = policy.choose(s, rng);
    s = apply(s, a);
    if (mode == RecordMode::Reached) push(s);
  }
  out.result = outcome(s);
  return out;
}

std::unique_ptr<search::Policy> make_policy(const HarnessConfig& cfg) {
  switch (cfg.policy) {
    case PolicyKind::Uniform:
      return std::make_unique<search::UniformPolicy>();
    case PolicyKind::Biased:
      return std::make_unique<search::BiasedPolicy>(cfg.toy->prefs);
    case PolicyKind::Mcts:
      return std::make_unique<search::MctsPolicy>(
          std::make_shared<search::RolloutEvaluator>(cfg.search.rollout_count),
          cfg.search);
  }
  throw std::invalid_argument("harness: unknown policy kind");
}

FrequencyTable run_selfplay_range(const HarnessConfig& cfg, uint64_t game_lo,
                                  uint64_t game_hi) {
  cfg.validate();
  RecordMode mode = cfg.effective_record_mode();
  FrequencyTable table(cfg.game, mode);
  auto policy = make_policy(cfg);
  GameState initial = new_game(cfg.game, cfg.toy);
  for (uint64_t g = game_lo; g < game_hi; ++g) {
    std::mt19937_64 rng = game_stream(cfg.seed, g);
    Trajectory traj = play_game(initial, *policy, mode, cfg.ply_cap, rng);
    for (const StateRecord& r : traj.records) table.record(r.key, r.turn);
    table.add_games_played(1);
  }
  return table;
}

FrequencyTable run_selfplay(const HarnessConfig& cfg) {
  cfg.validate();
  int workers = cfg.workers;
  if (static_cast<uint64_t>(workers) > cfg.num_games)
    workers = static_cast<int>(cfg.num_games);
  if (workers <= 1) return run_selfplay_range(cfg, 0, cfg.num_games);

  std::vector<FrequencyTable> partials;
  partials.reserve(workers);
  for (int w = 0; w < workers; ++w)
    partials.emplace_back(cfg.game, cfg.effective_record_mode());

  std::atomic<uint64_t> next{0};
  const uint64_t chunk = std::max<uint64_t>(1, cfg.num_games / (workers * 32ull));
  auto work = [&](int w) {
    auto policy = make_policy(cfg);
    GameState initial = new_game(cfg.game, cfg.toy);
    RecordMode mode = cfg.effective_record_mode();
    for (;;) {
      uint64_t lo = next.fetch_add(chunk);
      if (lo >= cfg.num_games) break;
      uint64_t hi = std::min(lo + chunk, cfg.num_games);
      for (uint64_t g = lo; g < hi; ++g) {
        std::mt19937_64 rng = game_stream(cfg.seed, g);
        Trajectory traj = play_game(initial, *policy, mode, cfg.ply_cap, rng);
        for (const StateRecord& r : traj.records) partials[w].record(r.key, r.turn);
        partials[w].add_games_played(1);
      }
    }
  };

  std::vector<std::thread> threads;
  for (int w = 1; w < workers; ++w) threads.emplace_back(work, w);
  work(0);
  for (auto& t : threads) t.join();

  FrequencyTable table = std::move(partials[0]);
  for (int w = 1; w < workers; ++w) {
    table.merge(partials[w]);
    partials[w] = FrequencyTable();  // release memory eagerly
  }
  return table;
}

}  // namespace gzl::harness
