#include "evidentia/service/config.hpp"

#include <charconv>

#include <fmt/format.h>

#include "evidentia/error.hpp"

namespace evidentia::service {

std::string ListenAddress::to_string() const {
  if (host.find(':') != std::string::npos) return fmt::format("[{}]:{}", host, port);
  return fmt::format("{}:{}", host, port);
}

ListenAddress parse_listen_address(std::string_view text) {
  const auto colon = text.rfind(':');
  if (colon == std::string_view::npos) {
    throw Error(Errc::InvalidConfig, fmt::format("listen address '{}' is not host:port", text));
  }
  auto host = text.substr(0, colon);
  const auto port_text = text.substr(colon + 1);
  if (host.size() >= 2 && host.front() == '[' && host.back() == ']') {
    host = host.substr(1, host.size() - 2);
  } else if (host.find(':') != std::string_view::npos) {
    throw Error(Errc::InvalidConfig, fmt::format("IPv6 host in '{}' needs brackets", text));
  }
  if (host.empty()) {
    throw Error(Errc::InvalidConfig, fmt::format("listen address '{}' has no host", text));
  }
  int port = -1;
  const auto [end, ec] = std::from_chars(port_text.data(), port_text.data() + port_text.size(), port);
  if (ec != std::errc{} || end != port_text.data() + port_text.size() || port < 0 || port > 65535) {
    throw Error(Errc::InvalidConfig, fmt::format("bad port '{}' in listen address", port_text));
  }
  return {std::string(host), port};
}

LogLevel parse_log_level(std::string_view text) {
  if (text == "error") return LogLevel::error;
  if (text == "warn") return LogLevel::warn;
  if (text == "info") return LogLevel::info;
  if (text == "debug") return LogLevel::debug;
  throw Error(Errc::InvalidConfig,
              fmt::format("log level '{}' is not one of error, warn, info, debug", text));
}

ServiceConfig apply_environment(ServiceConfig config, const EnvLookup& getenv) {
  if (const char* kb = getenv("EVIDENTIA_KB"); kb && *kb) config.kb_path = kb;
  if (const char* listen = getenv("EVIDENTIA_LISTEN"); listen && *listen) {
    config.listen = parse_listen_address(listen);
  }
  if (config.kb_path.empty()) {
    throw Error(Errc::InvalidConfig, "no knowledge base given (--kb or EVIDENTIA_KB)");
  }
  return config;
}

}  // namespace evidentia::service
