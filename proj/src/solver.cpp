#include "mbrg/solver.hpp"

#include <bit>
#include <cctype>
#include <cstdlib>
#include <string>
#include <unordered_map>

#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"

namespace mbrg {

namespace {

// Values are packed into one signed byte: +m is "Resolver wins having made m
// moves", -m is "Spoiler wins having made m moves", 0 is "not computed".
constexpr std::int8_t pack(Player winner, int moves) {
  return static_cast<std::int8_t>(winner == Player::Resolver ? moves : -moves);
}

GameValue unpack(std::int8_t v) {
  return v > 0 ? GameValue{Player::Resolver, v} : GameValue{Player::Spoiler, -v};
}

// Scalar order that Resolver maximizes and Spoiler minimizes: any Resolver win
// beats any Spoiler win, quicker wins are better for the winner, longer ones
// better for the loser.
constexpr int score(std::int8_t v) { return v > 0 ? 1000 - v : -1000 - v; }

Player turn_of(std::uint64_t r, std::uint64_t s, Player first) {
  const int rc = std::popcount(r);
  const int sc = std::popcount(s);
  if (rc == sc) return first;
  return rc > sc ? Player::Spoiler : Player::Resolver;
}

constexpr int kDenseMaxOrder = 17;

void check_solvable(const Graph& g, const SolverOptions& opts) {
  require_connected(g);
  if (g.order() > opts.max_order) {
    throw GuardExceeded("solver guard: order " + std::to_string(g.order()) + " exceeds " +
                        std::to_string(opts.max_order));
  }
}

}  // namespace

char player_code(Player p) { return p == Player::Resolver ? 'R' : 'S'; }

Player parse_player(std::string_view s) {
  std::string t;
  for (char c : s) t += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  if (t == "r" || t == "resolver") return Player::Resolver;
  if (t == "s" || t == "spoiler") return Player::Spoiler;
  throw InvalidInput("unknown player '" + std::string(s) + "' (expected R or S)");
}

Player GameState::to_move() const { return turn_of(resolver.bits(), spoiler.bits(), first); }

void validate_state(const Graph& g, const GameState& state) {
  if (state.resolver.intersects(state.spoiler)) throw InvalidInput("a vertex is claimed by both players");
  if (!state.claimed().is_subset_of(g.vertices())) throw InvalidInput("claimed vertex outside the graph");
  const int rc = state.resolver.size();
  const int sc = state.spoiler.size();
  const bool ok = state.first == Player::Resolver ? (rc == sc || rc == sc + 1) : (sc == rc || sc == rc + 1);
  if (!ok) throw InvalidInput("claim counts are inconsistent with alternating play");
}

std::string_view status_name(Status s) {
  switch (s) {
    case Status::Ongoing: return "ongoing";
    case Status::ResolverWon: return "r_won";
    case Status::SpoilerWon: return "s_won";
  }
  return "ongoing";
}

Status terminal_status(const Graph& g, const DistanceMatrix& d, const GameState& state) {
  validate_state(g, state);
  require_connected(g);
  if (!state.resolver.empty() && is_resolving(g, d, state.resolver)) return Status::ResolverWon;
  const VertexSet available = g.vertices() - state.spoiler;
  if (available.empty() || !is_resolving(g, d, available)) return Status::SpoilerWon;
  return Status::Ongoing;
}

char outcome_code(Outcome o) {
  switch (o) {
    case Outcome::R: return 'R';
    case Outcome::S: return 'S';
    case Outcome::N: return 'N';
  }
  return '?';
}

nlohmann::json to_json(const GameValue& v) {
  return {{"winner", std::string(1, player_code(v.winner))}, {"winner_moves", v.winner_moves}};
}

nlohmann::json to_json(const OutcomeRecord& r) {
  auto opt = [](const std::optional<int>& x) { return x ? nlohmann::json(*x) : nlohmann::json(nullptr); };
  return {{"outcome", std::string(1, outcome_code(r.outcome))},
          {"r_mb", opt(r.r_mb)},
          {"r_mb_s", opt(r.r_mb_s)},
          {"s_mb", opt(r.s_mb)},
          {"s_mb_s", opt(r.s_mb_s)}};
}

// Dense base-3 table (each vertex unclaimed / Resolver / Spoiler) for small
// orders; a hash map beyond. The dense table is calloc'd so untouched pages
// stay unmapped.
class GameSolver::Memo {
 public:
  explicit Memo(int n) {
    if (n <= kDenseMaxOrder) {
      std::size_t size = 1;
      for (int i = 0; i < n; ++i) size *= 3;
      dense_.reset(static_cast<std::int8_t*>(std::calloc(size, 1)));
      if (!dense_) throw std::bad_alloc();
    }
  }

  std::int8_t get(std::uint64_t index, std::uint64_t r, std::uint64_t s) const {
    if (dense_) return dense_.get()[index];
    auto it = sparse_.find(Key{r, s});
    return it == sparse_.end() ? 0 : it->second;
  }

  void put(std::uint64_t index, std::uint64_t r, std::uint64_t s, std::int8_t v) {
    if (dense_) {
      dense_.get()[index] = v;
    } else {
      sparse_[Key{r, s}] = v;
    }
  }

 private:
  struct Key {
    std::uint64_t r, s;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()(k.r * 0x9E3779B97F4A7C15ULL ^ k.s);
    }
  };
  struct Free {
    void operator()(std::int8_t* p) const { std::free(p); }
  };
  std::unique_ptr<std::int8_t, Free> dense_;
  std::unordered_map<Key, std::int8_t, KeyHash> sparse_;
};

GameSolver::GameSolver(const Graph& g, Player first, SolverOptions opts)
    : n_(g.order()),
      first_(first),
      opts_(opts),
      all_(g.vertices().bits()),
      oracle_((check_solvable(g, opts), g)) {
  pow3_.resize(n_);
  std::uint64_t p = 1;
  for (int i = 0; i < n_; ++i, p *= 3) pow3_[i] = p;
  if (opts_.memoize) memo_ = std::make_unique<Memo>(n_);
}

GameSolver::~GameSolver() = default;
GameSolver::GameSolver(GameSolver&&) noexcept = default;
GameSolver& GameSolver::operator=(GameSolver&&) noexcept = default;

std::uint64_t GameSolver::ternary_index(std::uint64_t r, std::uint64_t s) const {
  std::uint64_t index = 0;
  for (std::uint64_t b = r; b; b &= b - 1) index += pow3_[std::countr_zero(b)];
  for (std::uint64_t b = s; b; b &= b - 1) index += 2 * pow3_[std::countr_zero(b)];
  return index;
}

void GameSolver::check_state(const GameState& state) const {
  if (state.first != first_) throw InvalidInput("state was started by the other player");
  if (state.resolver.intersects(state.spoiler) || !state.claimed().is_subset_of(VertexSet(all_))) {
    throw InvalidInput("invalid claims");
  }
  const int rc = state.resolver.size();
  const int sc = state.spoiler.size();
  const bool ok = first_ == Player::Resolver ? (rc == sc || rc == sc + 1) : (sc == rc || sc == rc + 1);
  if (!ok) throw InvalidInput("claim counts are inconsistent with alternating play");
}

Status GameSolver::status(const GameState& state) {
  check_state(state);
  if (oracle_.resolves_cached(state.resolver)) return Status::ResolverWon;
  if (!oracle_.resolves_cached(VertexSet(all_ & ~state.spoiler.bits()))) return Status::SpoilerWon;
  return Status::Ongoing;
}

// Value of the position after `mover` claims v, which is either decided on
// the spot or searched.
std::int8_t GameSolver::child_value(std::uint64_t r, std::uint64_t s, std::uint64_t index, int v,
                                    Player mover) {
  const std::uint64_t bit = std::uint64_t{1} << v;
  if (mover == Player::Resolver) {
    const std::uint64_t r2 = r | bit;
    if (oracle_.resolves_cached(VertexSet(r2))) return pack(Player::Resolver, std::popcount(r2));
    // Resolver's claim leaves Resolver-plus-unclaimed unchanged, so the
    // position stays alive.
    return search(r2, s, index + pow3_[v]);
  }
  const std::uint64_t s2 = s | bit;
  if (!oracle_.resolves_cached(VertexSet(all_ & ~s2))) return pack(Player::Spoiler, std::popcount(s2));
  return search(r, s2, index + 2 * pow3_[v]);
}

std::int8_t GameSolver::search(std::uint64_t r, std::uint64_t s, std::uint64_t index) {
  if (memo_) {
    if (const std::int8_t hit = memo_->get(index, r, s); hit != 0) return hit;
  }
  ++evaluated_;
  const Player mover = turn_of(r, s, first_);
  // Winning on this very move is the best the mover can ever do.
  const std::int8_t immediate =
      mover == Player::Resolver ? pack(Player::Resolver, std::popcount(r) + 1) : pack(Player::Spoiler, std::popcount(s) + 1);
  std::int8_t best = 0;
  for (std::uint64_t free = all_ & ~(r | s); free; free &= free - 1) {
    const int v = std::countr_zero(free);
    const std::int8_t value = child_value(r, s, index, v, mover);
    if (best == 0 || (mover == Player::Resolver ? score(value) > score(best) : score(value) < score(best))) {
      best = value;
    }
    if (best == immediate) break;
  }
  if (memo_) memo_->put(index, r, s, best);
  return best;
}

GameValue GameSolver::value() { return value(GameState{{}, {}, first_}); }

GameValue GameSolver::value(const GameState& state) {
  switch (status(state)) {
    case Status::ResolverWon: return {Player::Resolver, state.resolver.size()};
    case Status::SpoilerWon: return {Player::Spoiler, state.spoiler.size()};
    case Status::Ongoing: break;
  }
  const auto r = state.resolver.bits();
  const auto s = state.spoiler.bits();
  return unpack(search(r, s, ternary_index(r, s)));
}

std::vector<std::pair<int, GameValue>> GameSolver::move_values(const GameState& state) {
  if (status(state) != Status::Ongoing) throw InvalidInput("the game is already decided");
  const auto r = state.resolver.bits();
  const auto s = state.spoiler.bits();
  const auto index = ternary_index(r, s);
  const Player mover = state.to_move();
  std::vector<std::pair<int, GameValue>> out;
  for (std::uint64_t free = all_ & ~(r | s); free; free &= free - 1) {
    const int v = std::countr_zero(free);
    out.emplace_back(v, unpack(child_value(r, s, index, v, mover)));
  }
  return out;
}

int GameSolver::best_move(const GameState& state) {
  const Player mover = state.to_move();
  int best_vertex = -1;
  int best_score = 0;
  for (const auto& [v, val] : move_values(state)) {
    const int sc = score(pack(val.winner, val.winner_moves));
    const bool better = mover == Player::Resolver ? sc > best_score : sc < best_score;
    if (best_vertex < 0 || better) {
      best_vertex = v;
      best_score = sc;
    }
  }
  return best_vertex;
}

GameValue solve(const Graph& g, Player first, const SolverOptions& opts) {
  GameSolver solver(g, first, opts);
  return solver.value();
}

OutcomeRecord outcome_record(const Graph& g, const SolverOptions& opts) {
  const GameValue r_game = solve(g, Player::Resolver, opts);
  const GameValue s_game = solve(g, Player::Spoiler, opts);
  OutcomeRecord rec;
  const bool r_wins_r = r_game.winner == Player::Resolver;
  const bool r_wins_s = s_game.winner == Player::Resolver;
  if (!r_wins_r && r_wins_s) {
    throw std::logic_error("solver produced a second-player win; this outcome is impossible");
  }
  if (r_wins_r && r_wins_s) {
    rec.outcome = Outcome::R;
    rec.r_mb = r_game.winner_moves;
    rec.r_mb_s = s_game.winner_moves;
  } else if (!r_wins_r && !r_wins_s) {
    rec.outcome = Outcome::S;
    rec.s_mb = r_game.winner_moves;
    rec.s_mb_s = s_game.winner_moves;
  } else {
    rec.outcome = Outcome::N;
    rec.r_mb = r_game.winner_moves;
    rec.s_mb_s = s_game.winner_moves;
  }
  return rec;
}

int best_move(const Graph& g, const GameState& state, Player mover, const SolverOptions& opts) {
  if (state.to_move() != mover) throw InvalidInput("it is not that player's turn");
  GameSolver solver(g, state.first, opts);
  return solver.best_move(state);
}

namespace {

// Same game, but one player may pass. Whose turn it is can no longer be read
// off the claim counts, so it is part of the key.
class SkipSearch {
 public:
  SkipSearch(const Graph& g, Player may_skip) : all_(g.vertices().bits()), may_skip_(may_skip), oracle_(g) {}

  std::int8_t run(Player first) { return search(0, 0, first); }

 private:
  std::int8_t search(std::uint64_t r, std::uint64_t s, Player mover) {
    const Key key{r, s, mover};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const std::int8_t immediate = mover == Player::Resolver ? pack(Player::Resolver, std::popcount(r) + 1)
                                                            : pack(Player::Spoiler, std::popcount(s) + 1);
    std::int8_t best = 0;
    auto consider = [&](std::int8_t value) {
      if (best == 0 || (mover == Player::Resolver ? score(value) > score(best) : score(value) < score(best))) {
        best = value;
      }
    };
    for (std::uint64_t free = all_ & ~(r | s); free && best != immediate; free &= free - 1) {
      const std::uint64_t bit = free & (~free + 1);
      if (mover == Player::Resolver) {
        const std::uint64_t r2 = r | bit;
        consider(oracle_.resolves_cached(VertexSet(r2)) ? pack(Player::Resolver, std::popcount(r2))
                                                        : search(r2, s, Player::Spoiler));
      } else {
        const std::uint64_t s2 = s | bit;
        consider(!oracle_.resolves_cached(VertexSet(all_ & ~s2)) ? pack(Player::Spoiler, std::popcount(s2))
                                                                  : search(r, s2, Player::Resolver));
      }
    }
    // A pass never decides the game by itself; the opponent moves next.
    if (mover == may_skip_ && best != immediate) consider(search(r, s, other(mover)));
    memo_.emplace(key, best);
    return best;
  }

  struct Key {
    std::uint64_t r, s;
    Player mover;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      return std::hash<std::uint64_t>()((k.r * 0x9E3779B97F4A7C15ULL ^ k.s) * 2 + static_cast<int>(k.mover));
    }
  };

  std::uint64_t all_;
  Player may_skip_;
  ResolvingOracle oracle_;
  std::unordered_map<Key, std::int8_t, KeyHash> memo_;
};

// Bounded-depth refutation search: can Resolver force a resolving set within
// `budget` of his own moves? Memoized on the claim pair; the remaining budget
// is budget - |r|.
class BoundedSearch {
 public:
  BoundedSearch(const Graph& g, Player first, int budget)
      : all_(g.vertices().bits()), first_(first), budget_(budget), oracle_(g) {}

  bool resolver_forces(std::uint64_t r, std::uint64_t s) {
    if (oracle_.resolves_cached(VertexSet(r))) return true;
    if (std::popcount(r) >= budget_) return false;
    if (!oracle_.resolves_cached(VertexSet(all_ & ~s))) return false;
    const Key key{r, s};
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result;
    const std::uint64_t free = all_ & ~(r | s);
    if (turn_of(r, s, first_) == Player::Resolver) {
      result = false;
      for (std::uint64_t f = free; f && !result; f &= f - 1) result = resolver_forces(r | (f & (~f + 1)), s);
    } else {
      result = true;
      for (std::uint64_t f = free; f && result; f &= f - 1) result = resolver_forces(r, s | (f & (~f + 1)));
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  struct Key {
    std::uint64_t r, s;
    bool operator==(const Key&) const = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const { return std::hash<std::uint64_t>()(k.r * 0x9E3779B97F4A7C15ULL ^ k.s); }
  };

  std::uint64_t all_;
  Player first_;
  int budget_;
  ResolvingOracle oracle_;
  std::unordered_map<Key, bool, KeyHash> memo_;
};

// Upper bound on distinct positions with at most `budget` Resolver claims and
// at most `budget` Spoiler claims.
double bounded_position_count(int n, int budget) {
  double total = 0;
  for (int i = 0; i <= budget; ++i)
    for (int j = 0; j <= budget; ++j) total += binomial(n, i) * binomial(n - i, j);
  return total;
}

}  // namespace

GameValue solve_with_skips(const Graph& g, Player first, Player may_skip, const SolverOptions& opts) {
  check_solvable(g, opts);
  SkipSearch search(g, may_skip);
  return unpack(search.run(first));
}

bool resolver_cannot_win_within(const Graph& g, Player first, int move_budget, double max_positions) {
  require_connected(g);
  if (move_budget < 0) throw InvalidInput("move budget must be non-negative");
  const double bound = bounded_position_count(g.order(), move_budget);
  if (bound > max_positions) {
    throw GuardExceeded("bounded search would visit up to " + std::to_string(bound) + " positions");
  }
  BoundedSearch search(g, first, move_budget);
  return !search.resolver_forces(0, 0);
}

std::optional<int> resolver_forced_win_moves(const Graph& g, Player first, int max_budget, double max_positions) {
  for (int b = 1; b <= max_budget; ++b) {
    if (!resolver_cannot_win_within(g, first, b, max_positions)) return b;
  }
  return std::nullopt;
}

}  // namespace mbrg
