#pragma once

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace evidentia::service {

enum class LogLevel { error, warn, info, debug };

struct ListenAddress {
  std::string host;
  int port = 0;

  std::string to_string() const;
};

// "host:port"; IPv6 hosts go in brackets. Throws InvalidConfig.
ListenAddress parse_listen_address(std::string_view text);
// Throws InvalidConfig.
LogLevel parse_log_level(std::string_view text);

struct ServiceConfig {
  std::filesystem::path kb_path;
  ListenAddress listen{"127.0.0.1", 8080};
  std::optional<std::filesystem::path> session_store_path;
  LogLevel log_level = LogLevel::info;
  // Static files (the browser client) served under "/".
  std::optional<std::filesystem::path> web_root;
};

using EnvLookup = std::function<const char*(const char*)>;

// EVIDENTIA_KB and EVIDENTIA_LISTEN, when set, replace the corresponding
// values. Throws InvalidConfig if the result has no KB path or a malformed
// listen address.
ServiceConfig apply_environment(ServiceConfig config, const EnvLookup& getenv);

}  // namespace evidentia::service
