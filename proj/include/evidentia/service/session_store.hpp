#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <shared_mutex>
#include <string>
#include <vector>

#include "evidentia/engine/session.hpp"
#include "evidentia/error.hpp"
#include "evidentia/kb/knowledge_base.hpp"

namespace evidentia::service {

// What gets written to disk. Masses are never stored; they are refolded from
// the assertion list on load.
struct SessionRecord {
  std::string id;
  std::string kb_name;
  std::vector<std::string> asserted;
  std::int64_t created_ms = 0;
  std::int64_t updated_ms = 0;
};

// Live sessions over one knowledge base, optionally mirrored to a JSON file.
// Lookups take a shared lock on the index; each session has its own mutex so
// mutations of one session are serialized while others proceed.
class SessionStore {
 public:
  SessionStore(std::shared_ptr<const kb::KnowledgeBase> kb,
               std::optional<std::filesystem::path> file = std::nullopt);

  const kb::KnowledgeBase& kb() const noexcept { return *kb_; }

  // Replaces the in-memory sessions with the file's contents. A missing file is
  // an empty store. Throws StoreError on malformed records, a foreign KB name or
  // rule ids the KB does not define.
  void load();
  // Writes atomically (temp file + rename). No-op without a file.
  void save() const;

  // Returns the new session's id.
  std::string create();
  // Throws UnknownSession.
  void erase(const std::string& id);
  std::size_t size() const;
  std::vector<SessionRecord> records() const;

  // Runs fn(const ConsultationSession&) under the session's lock.
  template <typename Fn>
  auto read(const std::string& id, Fn&& fn) const {
    const auto slot = find(id);
    std::lock_guard lock(slot->mutex);
    return fn(static_cast<const engine::ConsultationSession&>(slot->session));
  }

  // Runs fn(ConsultationSession&) under the session's lock, then persists.
  // If fn throws, nothing is persisted and the exception propagates.
  template <typename Fn>
  auto mutate(const std::string& id, Fn&& fn) {
    const auto slot = find(id);
    if constexpr (std::is_void_v<decltype(fn(slot->session))>) {
      {
        std::lock_guard lock(slot->mutex);
        fn(slot->session);
        slot->updated_ms = now_ms();
      }
      save();
    } else {
      auto result = [&] {
        std::lock_guard lock(slot->mutex);
        auto r = fn(slot->session);
        slot->updated_ms = now_ms();
        return r;
      }();
      save();
      return result;
    }
  }

 private:
  struct Slot {
    explicit Slot(engine::ConsultationSession s) : session(std::move(s)) {}
    mutable std::mutex mutex;
    engine::ConsultationSession session;
    std::int64_t created_ms = 0;
    std::int64_t updated_ms = 0;
  };

  static std::int64_t now_ms();
  std::shared_ptr<Slot> find(const std::string& id) const;

  std::shared_ptr<const kb::KnowledgeBase> kb_;
  std::optional<std::filesystem::path> file_;
  mutable std::shared_mutex index_mutex_;
  std::map<std::string, std::shared_ptr<Slot>> sessions_;
  mutable std::mutex save_mutex_;
};

}  // namespace evidentia::service
