#include "mbrg/session.hpp"

#include <cstdio>
#include <random>

#include "mbrg/errors.hpp"
#include "mbrg/resolving.hpp"

namespace mbrg {

using nlohmann::json;

namespace {

std::string code(Player p) { return std::string(1, player_code(p)); }

json value_json(const GameValue& v) { return {{"winner", code(v.winner)}, {"moves", v.winner_moves}}; }

SolverOptions session_solver_options() {
  SolverOptions o;
  o.max_order = Session::kMaxOrder;
  return o;
}

Graph checked_graph(Graph g) {
  require_connected(g);
  if (g.order() > Session::kMaxOrder) {
    throw GuardExceeded("sessions are limited to " + std::to_string(Session::kMaxOrder) + " vertices");
  }
  return g;
}

// A pairing Resolver can follow: the family's own construction when it has
// one, otherwise a searched dim-pairing on graphs where that is cheap.
std::optional<PairingSet> session_pairing(const Graph& g, const std::optional<FamilySpec>& family) {
  if (family) {
    try {
      PairingSet p = construct_family_pairing(*family);
      if (is_pairing_resolving(g, p)) return p;
    } catch (const InvalidInput&) {
    }
  }
  try {
    PairingOptions o;
    o.max_nodes = 1e6;
    return find_dim_pairing(g, o);
  } catch (const GuardExceeded&) {
    return std::nullopt;
  }
}

}  // namespace

Session::Session(std::string id, Graph g, std::optional<FamilySpec> family, Player human, Player first)
    : id_(std::move(id)),
      graph_(checked_graph(std::move(g))),
      dist_(all_pairs_distances(graph_)),
      family_(std::move(family)),
      human_(human),
      state_{{}, {}, first},
      solver_(graph_, first, session_solver_options()),
      twins_(twin_classes(graph_)),
      pairing_(session_pairing(graph_, family_)) {
  if (!graph_.has_labels()) {
    std::vector<std::string> labels;
    for (int v = 0; v < graph_.order(); ++v) labels.push_back(graph_.label(v));
    graph_ = graph_.with_labels(std::move(labels));
  }
  if (first == engine()) engine_move();
}

void Session::apply(int vertex, Player mover, bool by_engine) {
  MoveRecord rec;
  rec.player = mover;
  rec.vertex = vertex;
  rec.by_engine = by_engine;
  rec.before = solver_.value(state_);
  (mover == Player::Resolver ? state_.resolver : state_.spoiler).insert(vertex);
  rec.after = solver_.value(state_);
  rec.created_win = rec.before.winner != mover && rec.after.winner == mover;
  rec.destroyed_win = rec.before.winner == mover && rec.after.winner != mover;
  history_.push_back(rec);
  status_ = terminal_status(graph_, dist_, state_);
}

void Session::engine_move() {
  if (status_ != Status::Ongoing) return;
  apply(solver_.best_move(state_), engine(), true);
}

void Session::play(int vertex) {
  if (status_ != Status::Ongoing) throw MoveRejected("game is over");
  if (state_.to_move() != human_) throw MoveRejected("not your turn");
  if (vertex < 0 || vertex >= graph_.order()) throw InvalidInput("vertex " + std::to_string(vertex) + " out of range");
  if (state_.claimed().contains(vertex)) throw MoveRejected("vertex " + std::to_string(vertex) + " is already claimed");
  apply(vertex, human_, false);
  engine_move();
}

std::optional<int> Session::pairing_move() const {
  if (!pairing_) return std::nullopt;
  const VertexSet r = state_.resolver;
  const VertexSet s = state_.spoiler;
  // Answer Spoiler inside a pair first, then open the first untouched pair.
  for (const auto& [u, w] : pairing_->pairs) {
    if (r.contains(u) || r.contains(w)) continue;
    if (s.contains(u) && !s.contains(w)) return w;
    if (s.contains(w) && !s.contains(u)) return u;
  }
  for (const auto& [u, w] : pairing_->pairs) {
    if (r.contains(u) || r.contains(w)) continue;
    if (!s.contains(u) && !s.contains(w)) return std::min(u, w);
  }
  return std::nullopt;
}

Hint Session::hint() {
  if (status_ != Status::Ongoing) throw MoveRejected("game is over");
  if (state_.to_move() != human_) throw MoveRejected("not your turn");
  const int best = solver_.best_move(state_);
  const auto value_of = [&](int v) {
    GameState next = state_;
    (human_ == Player::Resolver ? next.resolver : next.spoiler).insert(v);
    return solver_.value(next);
  };
  const GameValue best_value = value_of(best);
  // A strategy move is offered only when it is as good as the searched one.
  std::optional<int> candidate;
  std::string tag;
  if (human_ == Player::Spoiler && spoiler_quick_win(twins_)) {
    candidate = twin_grab_move(twins_, state_.resolver, state_.spoiler);
    tag = "twin-grab";
  } else if (human_ == Player::Resolver) {
    candidate = pairing_move();
    tag = "pairing-completion";
  }
  if (candidate && !state_.claimed().contains(*candidate) && value_of(*candidate) == best_value) {
    return {*candidate, tag};
  }
  return {best, "search"};
}

const OutcomeRecord& Session::solve_record() {
  if (!solved_) solved_ = outcome_record(graph_, session_solver_options());
  return *solved_;
}

json Session::view() const {
  json history = json::array();
  for (const auto& m : history_) {
    history.push_back({{"player", code(m.player)},
                       {"vertex", m.vertex},
                       {"by", m.by_engine ? "engine" : "human"},
                       {"value_before", value_json(m.before)},
                       {"value_after", value_json(m.after)},
                       {"created_win", m.created_win},
                       {"destroyed_win", m.destroyed_win}});
  }
  const ResolvingOracle oracle(graph_, dist_);
  const VertexSet open = graph_.vertices() - state_.spoiler;
  json state = {{"resolver", state_.resolver.members()},
                {"spoiler", state_.spoiler.members()},
                {"first", code(state_.first)},
                {"to_move", status_ == Status::Ongoing ? json(code(state_.to_move())) : json(nullptr)}};
  return {{"id", id_},
          {"graph", to_json(graph_)},
          {"labels", graph_.labels()},
          {"family", family_ ? to_json(*family_) : json(nullptr)},
          {"human_role", code(human_)},
          {"engine_role", code(engine())},
          {"first_player", code(state_.first)},
          {"state", state},
          {"status", std::string(status_name(status_))},
          {"resolver_resolves", !state_.resolver.empty() && oracle.resolves(state_.resolver)},
          {"completions_dead", !oracle.resolves(open)},
          {"history", history},
          {"solved", solved_ ? to_json(*solved_) : json(nullptr)}};
}

SessionManager::SessionManager() : SessionManager(Options{}) {}

SessionManager::SessionManager(Options opts) : opts_(std::move(opts)) {
  std::random_device rd;
  salt_ = (std::uint64_t{rd()} << 32) ^ rd();
}

std::string SessionManager::new_id() {
  std::mt19937_64 mix(salt_ ^ ++counter_);
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(mix()),
                static_cast<unsigned long long>(mix()));
  return buf;
}

template <typename F>
auto SessionManager::with_session(const std::string& id, F&& f) {
  std::shared_ptr<Entry> entry;
  {
    std::lock_guard lock(mutex_);
    const auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionNotFound("no session " + id);
    entry = it->second;
  }
  std::lock_guard lock(entry->mutex);
  entry->last_access = opts_.now();
  return f(*entry->session);
}

json SessionManager::create(const json& request) {
  if (!request.is_object()) throw InvalidInput("request body must be a JSON object");
  std::optional<FamilySpec> family;
  std::optional<Graph> graph;
  try {
    if (request.contains("family")) {
      family = family_from_json(request.at("family"));
      graph = generate(*family);
    } else if (request.contains("graph")) {
      graph = graph_from_json(request.at("graph"));
    } else {
      throw InvalidInput("request needs \"family\" or \"graph\"");
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInput(e.what());
  }
  const auto role = [&](const char* key, Player fallback) {
    if (!request.contains(key)) return fallback;
    const auto& v = request.at(key);
    if (!v.is_string()) throw InvalidInput(std::string(key) + " must be \"R\" or \"S\"");
    return parse_player(v.get<std::string>());
  };
  const Player human = role("human_role", Player::Resolver);
  const Player first = role("first_player", Player::Resolver);

  expire();
  {
    std::lock_guard lock(mutex_);
    if (sessions_.size() >= opts_.max_sessions) throw GuardExceeded("too many live sessions");
  }
  auto entry = std::make_shared<Entry>();
  const std::string id = [this] {
    std::lock_guard lock(mutex_);
    return new_id();
  }();
  entry->session = std::make_unique<Session>(id, std::move(*graph), std::move(family), human, first);
  entry->last_access = opts_.now();
  json out = entry->session->view();
  std::lock_guard lock(mutex_);
  sessions_.emplace(id, std::move(entry));
  return out;
}

json SessionManager::view(const std::string& id) {
  return with_session(id, [](Session& s) {
    s.solve_record();
    return s.view();
  });
}

json SessionManager::move(const std::string& id, const json& request) {
  if (!request.is_object() || !request.contains("vertex") || !request.at("vertex").is_number_integer()) {
    throw InvalidInput("request needs an integer \"vertex\"");
  }
  const int vertex = request.at("vertex").get<int>();
  return with_session(id, [vertex](Session& s) {
    s.play(vertex);
    return s.view();
  });
}

json SessionManager::hint(const std::string& id) {
  return with_session(id, [](Session& s) {
    const Hint h = s.hint();
    return json{{"vertex", h.vertex}, {"tag", h.tag}, {"label", s.graph().label(h.vertex)}};
  });
}

std::size_t SessionManager::expire() {
  const auto now = opts_.now();
  std::lock_guard lock(mutex_);
  std::size_t dropped = 0;
  for (auto it = sessions_.begin(); it != sessions_.end();) {
    // A session whose lock is held is in use, so it is not idle.
    std::unique_lock entry_lock(it->second->mutex, std::try_to_lock);
    if (entry_lock.owns_lock() && now - it->second->last_access > opts_.idle_timeout) {
      entry_lock.unlock();
      it = sessions_.erase(it);
      ++dropped;
    } else {
      ++it;
    }
  }
  return dropped;
}

std::size_t SessionManager::size() const {
  std::lock_guard lock(mutex_);
  return sessions_.size();
}

}  // namespace mbrg
