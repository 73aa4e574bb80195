#include "evidentia/service/http_api.hpp"

#include <pthread.h>

#include <atomic>
#include <csignal>
#include <thread>

#include <httplib.h>
#include <spdlog/spdlog.h>

#include "evidentia/engine/serialization.hpp"

namespace evidentia::service {

using nlohmann::ordered_json;

namespace {

constexpr const char* kJson = "application/json";

int status_for(Errc code) {
  switch (code) {
    case Errc::UnknownSession:
    case Errc::UnknownRuleId:
    case Errc::NotAsserted:
      return 404;
    case Errc::DuplicateSymptom:
      return 409;
    case Errc::TotalConflict:
      return 422;
    case Errc::SyntaxError:
      return 400;
    default:
      return 500;
  }
}

void send(httplib::Response& res, int status, const ordered_json& body) {
  res.status = status;
  res.set_content(body.dump(), kJson);
}

void send_error(httplib::Response& res, int status, std::string_view code, std::string_view message) {
  send(res, status, {{"error", code}, {"message", message}});
}

// Runs a handler, mapping library errors onto status codes.
template <typename Fn>
httplib::Server::Handler guarded(Fn fn) {
  return [fn = std::move(fn)](const httplib::Request& req, httplib::Response& res) {
    try {
      fn(req, res);
    } catch (const Error& e) {
      const int status = status_for(e.code());
      if (status >= 500) spdlog::error("{} {}: {}", req.method, req.path, e.what());
      send_error(res, status, to_string(e.code()), e.detail());
    }
  };
}

ordered_json session_view(const engine::ConsultationSession& s) {
  return {{"id", s.id()},
          {"kb", s.kb().name()},
          {"asserted", s.asserted()},
          {"report", engine::report_json(s.evaluate())}};
}

std::string symptom_from_body(const httplib::Request& req) {
  const auto body = nlohmann::json::parse(req.body, nullptr, false);
  if (body.is_discarded() || !body.is_object()) {
    throw Error(Errc::SyntaxError, "request body must be a JSON object");
  }
  const auto it = body.find("id");
  if (it == body.end() || !it->is_string()) {
    throw Error(Errc::SyntaxError, "request body needs a string field \"id\"");
  }
  return it->get<std::string>();
}

ordered_json kb_view(const kb::KnowledgeBase& kb) {
  ordered_json out;
  out["name"] = kb.name();
  out["hypotheses"] = kb.hypotheses();
  out["catch_all"] = kb.catch_all();
  out["symptoms"] = ordered_json::array();
  for (const auto& r : kb.rules()) {
    out["symptoms"].push_back(
        {{"id", r.id}, {"label", r.label}, {"diseases", r.diseases}, {"bpa", r.bpa}});
  }
  return out;
}

}  // namespace

void mount_api(httplib::Server& server, SessionStore& store) {
  server.Get("/kb", guarded([&store](const httplib::Request&, httplib::Response& res) {
    send(res, 200, kb_view(store.kb()));
  }));

  server.Post("/sessions", guarded([&store](const httplib::Request&, httplib::Response& res) {
    const auto id = store.create();
    const auto report = store.read(id, [](const auto& s) { return engine::report_json(s.evaluate()); });
    send(res, 201, {{"id", id}, {"report", report}});
  }));

  server.Get(R"(/sessions/([^/]+))", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    send(res, 200, store.read(req.matches[1], session_view));
  }));

  server.Delete(R"(/sessions/([^/]+))", guarded([&store](const httplib::Request& req, httplib::Response& res) {
    const std::string id = req.matches[1];
    store.erase(id);
    send(res, 200, {{"id", id}, {"deleted", true}});
  }));

  server.Post(R"(/sessions/([^/]+)/symptoms)",
              guarded([&store](const httplib::Request& req, httplib::Response& res) {
                const std::string id = req.matches[1];
                const auto symptom = symptom_from_body(req);
                auto body = store.mutate(id, [&](engine::ConsultationSession& s) {
                  const auto& step = s.assert_symptom(symptom);
                  return ordered_json{{"step", engine::step_json(step)},
                                      {"report", engine::report_json(s.evaluate())}};
                });
                send(res, 200, body);
              }));

  server.Delete(R"(/sessions/([^/]+)/symptoms/([^/]+))",
                guarded([&store](const httplib::Request& req, httplib::Response& res) {
                  const std::string id = req.matches[1];
                  const std::string symptom = req.matches[2];
                  auto body = store.mutate(id, [&](engine::ConsultationSession& s) {
                    s.retract_symptom(symptom);
                    return session_view(s);
                  });
                  send(res, 200, body);
                }));

  server.Get(R"(/sessions/([^/]+)/report)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               const std::string id = req.matches[1];
               if (req.get_param_value("precision") == "full") {
                 send(res, 200, store.read(id, [](const auto& s) { return engine::report_json(s.evaluate()); }));
                 return;
               }
               res.status = 200;
               res.set_content(
                   store.read(id, [](const auto& s) { return engine::canonical_report(s.evaluate()); }),
                   kJson);
             }));

  server.Get(R"(/sessions/([^/]+)/trace)",
             guarded([&store](const httplib::Request& req, httplib::Response& res) {
               send(res, 200, store.read(req.matches[1], [](const auto& s) {
                 return ordered_json{{"steps", engine::trace_json(s.explain())}};
               }));
             }));

  server.set_error_handler([](const httplib::Request& req, httplib::Response& res) {
    if (!res.body.empty()) return;
    if (res.status == 404) {
      send_error(res, 404, "NotFound", fmt::format("no route for {} {}", req.method, req.path));
    } else {
      send_error(res, res.status, "HttpError", httplib::status_message(res.status));
    }
  });

  server.set_exception_handler(
      [](const httplib::Request& req, httplib::Response& res, std::exception_ptr ep) {
        std::string what = "unknown exception";
        try {
          std::rethrow_exception(ep);
        } catch (const std::exception& e) {
          what = e.what();
        } catch (...) {
        }
        spdlog::error("{} {}: {}", req.method, req.path, what);
        send_error(res, 500, "InternalError", what);
      });

  server.set_logger([](const httplib::Request& req, const httplib::Response& res) {
    spdlog::debug("{} {} -> {}", req.method, req.path, res.status);
  });
}

int serve(const ServiceConfig& config) {
  switch (config.log_level) {
    case LogLevel::error: spdlog::set_level(spdlog::level::err); break;
    case LogLevel::warn: spdlog::set_level(spdlog::level::warn); break;
    case LogLevel::info: spdlog::set_level(spdlog::level::info); break;
    case LogLevel::debug: spdlog::set_level(spdlog::level::debug); break;
  }

  std::shared_ptr<const kb::KnowledgeBase> kb;
  try {
    kb = std::make_shared<const kb::KnowledgeBase>(kb::load_kb(config.kb_path));
  } catch (const Error& e) {
    spdlog::error("{}: {}", config.kb_path.string(), e.what());
    return e.code() == Errc::IoError ? 2 : 1;
  }

  SessionStore store(kb, config.session_store_path);
  try {
    store.load();
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  }

  httplib::Server server;
  mount_api(server, store);
  if (config.web_root && !server.set_mount_point("/", config.web_root->string())) {
    spdlog::error("web root '{}' is not a directory", config.web_root->string());
    return 1;
  }

  int port = config.listen.port;
  if (port == 0) {
    port = server.bind_to_any_port(config.listen.host);
  } else if (!server.bind_to_port(config.listen.host, port)) {
    port = -1;
  }
  if (port < 0) {
    spdlog::error("cannot listen on {}", config.listen.to_string());
    return 1;
  }
  spdlog::info("knowledge base '{}': {} hypotheses, {} rules; {} stored sessions", kb->name(),
               kb->hypotheses().size(), kb->rules().size(), store.size());
  spdlog::info("listening on http://{}", ListenAddress{config.listen.host, port}.to_string());

  // Termination signals are taken synchronously by a watcher thread so that
  // stopping the server never runs inside a signal handler.
  sigset_t stop_signals;
  sigemptyset(&stop_signals);
  sigaddset(&stop_signals, SIGINT);
  sigaddset(&stop_signals, SIGTERM);
  sigset_t previous;
  pthread_sigmask(SIG_BLOCK, &stop_signals, &previous);
  std::atomic<bool> listening{true};
  std::thread watcher([&] {
    int signal = 0;
    sigwait(&stop_signals, &signal);
    if (listening.exchange(false)) spdlog::info("received signal {}, shutting down", signal);
    server.stop();
  });

  const bool ok = server.listen_after_bind();
  if (listening.exchange(false)) pthread_kill(watcher.native_handle(), SIGTERM);
  watcher.join();
  pthread_sigmask(SIG_SETMASK, &previous, nullptr);

  try {
    store.save();
  } catch (const Error& e) {
    spdlog::error("{}", e.what());
    return 1;
  }
  spdlog::info("stopped");
  return ok ? 0 : 1;
}

}  // namespace evidentia::service
