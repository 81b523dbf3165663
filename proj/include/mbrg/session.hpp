#pragma once

#include <chrono>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "mbrg/families.hpp"
#include "mbrg/graph.hpp"
#include "mbrg/pairing.hpp"
#include "mbrg/solver.hpp"
#include "mbrg/twins.hpp"

namespace mbrg {

/// A legal request that does not fit the session's current state
/// (occupied vertex, out of turn, game over).
class MoveRejected : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SessionNotFound : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct MoveRecord {
  Player player = Player::Resolver;
  int vertex = 0;
  bool by_engine = false;
  /// Game values for the mover's opponent-to-move position before and after.
  GameValue before;
  GameValue after;
  bool created_win = false;    // mover could not force a win before, can now
  bool destroyed_win = false;  // mover could force a win before, cannot now
};

struct Hint {
  int vertex = 0;
  std::string tag;  // "twin-grab", "pairing-completion" or "search"
};

/// One human-vs-engine game. Not thread-safe by itself; SessionManager hands
/// out sessions together with their lock.
class Session {
 public:
  static constexpr int kMaxOrder = 16;

  Session(std::string id, Graph g, std::optional<FamilySpec> family, Player human, Player first);

  const std::string& id() const { return id_; }
  const Graph& graph() const { return graph_; }
  Player human() const { return human_; }
  Player engine() const { return other(human_); }
  const GameState& state() const { return state_; }
  Status status() const { return status_; }
  const std::vector<MoveRecord>& history() const { return history_; }
  const std::optional<OutcomeRecord>& solved() const { return solved_; }

  /// Human move followed by the engine's reply unless the game ended.
  void play(int vertex);
  Hint hint();
  /// Solves both games (once) so the view carries the outcome record.
  const OutcomeRecord& solve_record();

  nlohmann::json view() const;

 private:
  void apply(int vertex, Player mover, bool by_engine);
  void engine_move();
  std::optional<int> pairing_move() const;

  std::string id_;
  Graph graph_;
  DistanceMatrix dist_;
  std::optional<FamilySpec> family_;
  Player human_;
  GameState state_;
  Status status_ = Status::Ongoing;
  std::vector<MoveRecord> history_;
  GameSolver solver_;
  TwinPartition twins_;
  std::optional<PairingSet> pairing_;
  std::optional<OutcomeRecord> solved_;
};

/// In-memory session store with idle expiry.
class SessionManager {
 public:
  using Clock = std::chrono::steady_clock;

  struct Options {
    std::chrono::seconds idle_timeout{3600};
    std::size_t max_sessions = 64;
    std::function<Clock::time_point()> now = [] { return Clock::now(); };
  };

  SessionManager();
  explicit SessionManager(Options opts);

  /// Body of POST /api/session. Returns the new session's view.
  nlohmann::json create(const nlohmann::json& request);
  nlohmann::json view(const std::string& id);
  nlohmann::json move(const std::string& id, const nlohmann::json& request);
  nlohmann::json hint(const std::string& id);

  /// Drops sessions idle for longer than the timeout; returns how many.
  std::size_t expire();
  std::size_t size() const;

 private:
  struct Entry {
    std::mutex mutex;
    std::unique_ptr<Session> session;
    Clock::time_point last_access;
  };

  /// Runs f on the session under its own lock; the store lock is not held
  /// while f runs, so solver work for different sessions can overlap.
  template <typename F>
  auto with_session(const std::string& id, F&& f);

  std::string new_id();

  Options opts_;
  mutable std::mutex mutex_;
  std::map<std::string, std::shared_ptr<Entry>> sessions_;
  std::uint64_t counter_ = 0;
  std::uint64_t salt_;
};

}  // namespace mbrg
