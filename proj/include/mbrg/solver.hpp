#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "mbrg/graph.hpp"
#include "mbrg/resolving.hpp"
#include "mbrg/vertex_set.hpp"

namespace mbrg {

enum class Player : std::uint8_t { Resolver, Spoiler };

constexpr Player other(Player p) { return p == Player::Resolver ? Player::Spoiler : Player::Resolver; }
char player_code(Player p);
/// Accepts "R" / "S" (case-insensitive) and the full role names.
Player parse_player(std::string_view s);

/// Claimed vertices of both players. Whose turn it is follows from the claim
/// counts and the first player.
struct GameState {
  VertexSet resolver;
  VertexSet spoiler;
  Player first = Player::Resolver;

  VertexSet claimed() const { return resolver | spoiler; }
  Player to_move() const;
};

/// Throws InvalidInput when the claims overlap, leave the graph, or have
/// counts inconsistent with alternating play from `first`.
void validate_state(const Graph& g, const GameState& state);

enum class Status { Ongoing, ResolverWon, SpoilerWon };
std::string_view status_name(Status s);  // "ongoing" / "r_won" / "s_won"

/// Resolver has won once his claims resolve G. Otherwise Spoiler has won once
/// Resolver's claims plus every unclaimed vertex no longer resolve G
/// (resolving sets are closed under supersets).
Status terminal_status(const Graph& g, const DistanceMatrix& d, const GameState& state);

/// Optimal result of a game: who wins and how many moves the winner has made
/// at the moment the game is decided.
struct GameValue {
  Player winner = Player::Resolver;
  int winner_moves = 0;
  friend bool operator==(const GameValue&, const GameValue&) = default;
};

enum class Outcome { R, S, N };
char outcome_code(Outcome o);

/// o(G) with the four move-count invariants; nullopt means unbounded.
struct OutcomeRecord {
  Outcome outcome = Outcome::R;
  std::optional<int> r_mb;    // Resolver first, Resolver wins
  std::optional<int> r_mb_s;  // Spoiler first, Resolver wins
  std::optional<int> s_mb;    // Resolver first, Spoiler wins
  std::optional<int> s_mb_s;  // Spoiler first, Spoiler wins
  friend bool operator==(const OutcomeRecord&, const OutcomeRecord&) = default;
};

nlohmann::json to_json(const GameValue& v);
nlohmann::json to_json(const OutcomeRecord& r);

struct SolverOptions {
  /// Largest graph order the exhaustive solver accepts.
  int max_order = 16;
  /// Transposition table on/off. Off is only practical for tiny graphs.
  bool memoize = true;
};

/// Exact minimax solver for one graph and one first player.
///
/// Value order: every player first prefers winning. The eventual winner then
/// minimizes his move count and the loser maximizes it. Moves are tried in
/// ascending vertex order and ties keep the lowest vertex, so results are
/// deterministic. Positions are memoized on (resolver claims, spoiler claims);
/// the turn follows from the counts.
class GameSolver {
 public:
  GameSolver(const Graph& g, Player first, SolverOptions opts = {});
  ~GameSolver();
  GameSolver(GameSolver&&) noexcept;
  GameSolver& operator=(GameSolver&&) noexcept;

  Player first() const { return first_; }
  int order() const { return n_; }

  /// Value of the game from the empty board.
  GameValue value();
  /// Value of an arbitrary reachable position under optimal play from there.
  GameValue value(const GameState& state);
  Status status(const GameState& state);

  /// Optimal move for the player to move; lowest vertex among equals. Throws
  /// InvalidInput when the position is already decided.
  int best_move(const GameState& state);
  /// Value after each legal move, ascending by vertex.
  std::vector<std::pair<int, GameValue>> move_values(const GameState& state);

  std::uint64_t positions_evaluated() const { return evaluated_; }

 private:
  class Memo;

  std::int8_t search(std::uint64_t r, std::uint64_t s, std::uint64_t index);
  std::int8_t child_value(std::uint64_t r, std::uint64_t s, std::uint64_t index, int v, Player mover);
  std::uint64_t ternary_index(std::uint64_t r, std::uint64_t s) const;
  void check_state(const GameState& state) const;

  int n_;
  Player first_;
  SolverOptions opts_;
  std::uint64_t all_;
  ResolvingOracle oracle_;
  std::vector<std::uint64_t> pow3_;
  std::unique_ptr<Memo> memo_;
  std::uint64_t evaluated_ = 0;
};

GameValue solve(const Graph& g, Player first, const SolverOptions& opts = {});

/// Combines both games. Throws std::logic_error if the second-player-win
/// pattern ever appears (it cannot for a correct solver).
OutcomeRecord outcome_record(const Graph& g, const SolverOptions& opts = {});

/// `mover` must be the player whose turn it is in `state`.
int best_move(const Graph& g, const GameState& state, Player mover, const SolverOptions& opts = {});

/// The same game except that `may_skip` can pass on any turn. Test oracle for
/// the claim that passing never helps Resolver and never hurts him when
/// Spoiler passes.
GameValue solve_with_skips(const Graph& g, Player first, Player may_skip, const SolverOptions& opts = {});

/// True iff Spoiler can stop Resolver from owning a resolving set within his
/// first `move_budget` moves. Exhaustive bounded-depth search; throws
/// GuardExceeded when the position count bound exceeds `max_positions`.
bool resolver_cannot_win_within(const Graph& g, Player first, int move_budget, double max_positions = 1e9);

/// Smallest budget b <= max_budget with resolver_cannot_win_within(b) false,
/// i.e. Resolver's optimal forced win length; nullopt if none within range.
std::optional<int> resolver_forced_win_moves(const Graph& g, Player first, int max_budget,
                                             double max_positions = 1e9);

}  // namespace mbrg
