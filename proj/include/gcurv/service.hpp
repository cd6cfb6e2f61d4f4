#pragma once

#include <chrono>
#include <cstdio>
#include <string>
#include <string_view>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "gcurv/classification.hpp"
#include "gcurv/report.hpp"
#include "gcurv/spectral.hpp"

namespace gcurv {

inline constexpr const char* kVersion = "1.0.0";

struct ServiceConfig {
  std::string host = "127.0.0.1";
  int port = 8080;
  int max_vertices = 64;
  int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
};

struct ApiResponse {
  int status = 200;
  std::string body;
  double compute_ms = 0.0;
};

/// Stateless request handler. Every request carries the full graph; nothing
/// is kept between calls, so one instance may serve any number of threads.
class CurvatureService {
 public:
  explicit CurvatureService(ServiceConfig config = {}) : config_(std::move(config)) {}

  const ServiceConfig& config() const { return config_; }

  ApiResponse handle(std::string_view method, std::string_view path, std::string_view body) const {
    const auto start = std::chrono::steady_clock::now();
    ApiResponse r = dispatch(method, path, body);
    r.compute_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
  }

  /// Registers the /api routes on an httplib server.
  void bind(httplib::Server& server) const {
    server.new_task_queue = [n = config_.workers] { return new httplib::ThreadPool(n); };
    auto route = [this](const httplib::Request& req, httplib::Response& res) {
      ApiResponse r = handle(req.method, req.path, req.body);
      res.status = r.status;
      char ms[32];
      std::snprintf(ms, sizeof ms, "%.3f", r.compute_ms);
      res.set_header("X-Compute-Millis", ms);
      res.set_content(r.body, "application/json");
    };
    server.Post(R"(/api/.*)", route);
    server.Get(R"(/api/.*)", route);
  }

 private:
  static ApiResponse error(int status, std::string_view code, std::string_view message,
                           std::optional<std::string> location = std::nullopt) {
    Json doc{{"error", code}, {"message", message}};
    if (location) doc["location"] = *location;
    return {status, doc.dump(), 0.0};
  }

  static std::optional<std::string> entry_location(std::string_view message) {
    auto open = message.find('(');
    auto close = message.find(')', open);
    if (open == std::string_view::npos || close == std::string_view::npos) return std::nullopt;
    return std::string(message.substr(open, close - open + 1));
  }

  Graph read_graph(const Json& doc) const {
    if (!doc.contains("adjacency")) throw ParseError("missing field 'adjacency'");
    const Json& a = doc["adjacency"];
    Graph g = parse_adjacency(a.is_string() ? a.get<std::string>() : a.dump());
    if (g.order() > config_.max_vertices) throw TooLarge{g.order(), config_.max_vertices};
    return g;
  }

  struct TooLarge {
    int order, cap;
  };

  static std::string scalar_text(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number()) return v.dump();
    throw ParseError("expected a string or number parameter");
  }

  ApiResponse dispatch(std::string_view method, std::string_view path, std::string_view body) const {
    if (path == "/api/health") {
      if (method != "GET") return error(405, "method_not_allowed", "use GET");
      return {200, Json{{"status", "ok"}, {"version", kVersion}, {"compiler", __VERSION__}, {"max_vertices", config_.max_vertices}}.dump()};
    }
    if (path != "/api/curvature" && path != "/api/classify" && path != "/api/spectrum")
      return error(404, "not_found", "unknown endpoint " + std::string(path));
    if (method != "POST") return error(405, "method_not_allowed", "use POST");
    if (body.empty()) return error(400, "empty_body", "request body is empty");

    Json doc;
    try {
      doc = Json::parse(body);
    } catch (const Json::parse_error& e) {
      return error(400, "invalid_json", e.what());
    }
    if (!doc.is_object()) return error(400, "invalid_request", "request body must be an object");

    try {
      Graph g = read_graph(doc);
      if (path == "/api/curvature") {
        CurvatureRequest req;
        req.graph = std::move(g);
        const std::string notion = doc.value("notion", std::string("ollivier"));
        auto parsed = parse_notion(notion);
        if (!parsed) return error(400, "unknown_notion", "unknown notion '" + notion + "'");
        req.notion = *parsed;
        if (doc.contains("idleness")) req.idleness = parse_rational(scalar_text(doc["idleness"]));
        if (doc.contains("dimension")) req.dimension = Dimension::parse(scalar_text(doc["dimension"]));
        return {200, curvature_document(req).dump()};
      }
      if (path == "/api/classify") return {200, verdict_document(classify_cubic(g)).dump()};
      return {200, spectrum_document(laplacian_spectrum(g)).dump()};
    } catch (const TooLarge& t) {
      return error(413, "graph_too_large",
                   "graph has " + std::to_string(t.order) + " vertices; limit is " + std::to_string(t.cap));
    } catch (const ParseError& e) {
      return error(400, "invalid_input", e.what(), entry_location(e.what()));
    } catch (const IncompatibleParams& e) {
      return error(422, "incompatible_params", e.what());
    } catch (const DomainError& e) {
      return error(422, "unprocessable", e.what());
    } catch (const std::exception& e) {
      return error(500, "internal", e.what());
    }
  }

  ServiceConfig config_;
};

/// Runs the HTTP service in the foreground.
inline bool serve(const ServiceConfig& config) {
  CurvatureService service(config);
  httplib::Server server;
  service.bind(server);
  return server.listen(config.host, config.port);
}

}  // namespace gcurv
