// evidentia: evidential diagnosis from the command line.
//
//   evidentia validate <kb>
//   evidentia evaluate <kb> [--json] <symptom-id>...
//   evidentia consult <kb>
//   evidentia serve --kb <path> --listen <host:port> [--store <path>] [--log-level <lvl>] [--web-root <dir>]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "evidentia/error.hpp"
#include "evidentia/service/commands.hpp"
#include "evidentia/service/config.hpp"
#include "evidentia/service/http_api.hpp"

namespace svc = evidentia::service;

int main(int argc, char** argv) {
  CLI::App app{"Dempster-Shafer diagnostic consultation"};
  app.require_subcommand(1);

  std::string kb_path;
  auto* validate = app.add_subcommand("validate", "Check a knowledge base file");
  validate->add_option("kb", kb_path, "Knowledge base (JSON)")->required();

  std::vector<std::string> symptoms;
  bool as_json = false;
  auto* evaluate = app.add_subcommand("evaluate", "Combine the given symptoms and print the ranking");
  evaluate->add_option("kb", kb_path, "Knowledge base (JSON)")->required();
  evaluate->add_option("symptoms", symptoms, "Symptom ids, combined in order");
  evaluate->add_flag("--json", as_json, "Print the canonical JSON report");

  auto* consult = app.add_subcommand("consult", "Interactive consultation");
  consult->add_option("kb", kb_path, "Knowledge base (JSON)")->required();

  std::string listen = "127.0.0.1:8080";
  std::string store_path;
  std::string log_level = "info";
  std::string web_root;
  auto* serve = app.add_subcommand("serve", "Run the HTTP/JSON consultation service");
  serve->add_option("--kb", kb_path, "Knowledge base (JSON); EVIDENTIA_KB overrides");
  serve->add_option("--listen", listen, "host:port; EVIDENTIA_LISTEN overrides")->capture_default_str();
  serve->add_option("--store", store_path, "Session store file");
  serve->add_option("--log-level", log_level, "error, warn, info or debug")->capture_default_str();
  serve->add_option("--web-root", web_root, "Directory of static files served at /");

  CLI11_PARSE(app, argc, argv);

  if (*validate) return svc::run_validate(kb_path, std::cout, std::cerr);
  if (*evaluate) {
    return svc::run_evaluate(kb_path, symptoms,
                             as_json ? svc::ReportFormat::json : svc::ReportFormat::text, std::cout,
                             std::cerr);
  }
  if (*consult) return svc::run_consult(kb_path, std::cin, std::cout, std::cerr);

  try {
    svc::ServiceConfig config;
    config.kb_path = kb_path;
    config.listen = svc::parse_listen_address(listen);
    config.log_level = svc::parse_log_level(log_level);
    if (!store_path.empty()) config.session_store_path = store_path;
    if (!web_root.empty()) config.web_root = web_root;
    config = svc::apply_environment(std::move(config), [](const char* name) { return std::getenv(name); });
    return svc::serve(config);
  } catch (const evidentia::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
