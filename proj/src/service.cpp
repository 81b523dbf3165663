#include "mbrg/service.hpp"

#include <atomic>
#include <chrono>
#include <iostream>
#include <thread>

#include <httplib.h>
#include <nlohmann/json.hpp>

#include "mbrg/errors.hpp"
#include "mbrg/families.hpp"
#include "mbrg/session.hpp"

namespace mbrg {

using nlohmann::json;

namespace {

void send(httplib::Response& res, int status, const json& body) {
  res.status = status;
  res.set_content(body.dump(), "application/json");
}

// Maps engine errors onto HTTP statuses.
template <typename F>
void guarded(httplib::Response& res, F&& f) {
  try {
    send(res, 200, f());
  } catch (const SessionNotFound& e) {
    send(res, 404, {{"error", e.what()}});
  } catch (const MoveRejected& e) {
    send(res, 409, {{"error", e.what()}});
  } catch (const GuardExceeded& e) {
    send(res, 422, {{"error", e.what()}});
  } catch (const InvalidInput& e) {
    send(res, 400, {{"error", e.what()}});
  } catch (const json::exception& e) {
    send(res, 400, {{"error", e.what()}});
  } catch (const std::exception& e) {
    send(res, 500, {{"error", e.what()}});
  }
}

json parse_body(const httplib::Request& req) {
  try {
    return json::parse(req.body);
  } catch (const json::parse_error& e) {
    throw InvalidInput(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

void register_routes(httplib::Server& server, SessionManager& sessions) {
  server.Get("/api/families", [](const httplib::Request&, httplib::Response& res) {
    guarded(res, [] { return family_catalog(); });
  });
  server.Post("/api/session", [&sessions](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return sessions.create(parse_body(req)); });
  });
  server.Get(R"(/api/session/([0-9a-f]+))", [&sessions](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return sessions.view(req.matches[1]); });
  });
  server.Post(R"(/api/session/([0-9a-f]+)/move)", [&sessions](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return sessions.move(req.matches[1], parse_body(req)); });
  });
  server.Get(R"(/api/session/([0-9a-f]+)/hint)", [&sessions](const httplib::Request& req, httplib::Response& res) {
    guarded(res, [&] { return sessions.hint(req.matches[1]); });
  });
}

int serve(const std::string& host, int port) {
  SessionManager sessions;
  httplib::Server server;
  register_routes(server, sessions);
  std::atomic<bool> running{true};
  std::thread reaper([&] {
    int ticks = 0;
    while (running) {
      std::this_thread::sleep_for(std::chrono::seconds(1));
      if (++ticks % 60 == 0) sessions.expire();
    }
  });
  std::cerr << "listening on http://" << host << ":" << port << "\n";
  const bool ok = server.listen(host, port);
  running = false;
  reaper.join();
  if (!ok) {
    std::cerr << "could not listen on " << host << ":" << port << "\n";
    return 1;
  }
  return 0;
}

}  // namespace mbrg
