#pragma once

#include <string>

namespace httplib {
class Server;
}

namespace mbrg {

class SessionManager;

/// Installs the /api routes on `server`. `sessions` must outlive it.
void register_routes(httplib::Server& server, SessionManager& sessions);

/// Blocking HTTP server; returns only on failure to bind.
int serve(const std::string& host, int port);

}  // namespace mbrg
