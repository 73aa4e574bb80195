#include "evidentia/service/session_store.hpp"

#include <chrono>
#include <fstream>
#include <sstream>

#include <fmt/format.h>
#include <json.hpp>

namespace evidentia::service {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

SessionRecord record_from_json(const json& node) {
  SessionRecord r;
  r.id = node.at("id").get<std::string>();
  r.kb_name = node.at("kb").get<std::string>();
  r.asserted = node.at("asserted").get<std::vector<std::string>>();
  r.created_ms = node.at("created_ms").get<std::int64_t>();
  r.updated_ms = node.at("updated_ms").get<std::int64_t>();
  return r;
}

nlohmann::ordered_json record_to_json(const SessionRecord& r) {
  return {{"id", r.id},
          {"kb", r.kb_name},
          {"asserted", r.asserted},
          {"created_ms", r.created_ms},
          {"updated_ms", r.updated_ms}};
}

}  // namespace

SessionStore::SessionStore(std::shared_ptr<const kb::KnowledgeBase> kb,
                           std::optional<fs::path> file)
    : kb_(std::move(kb)), file_(std::move(file)) {}

std::int64_t SessionStore::now_ms() {
  using namespace std::chrono;
  return duration_cast<milliseconds>(system_clock::now().time_since_epoch()).count();
}

std::shared_ptr<SessionStore::Slot> SessionStore::find(const std::string& id) const {
  std::shared_lock lock(index_mutex_);
  const auto it = sessions_.find(id);
  if (it == sessions_.end()) {
    throw Error(Errc::UnknownSession, fmt::format("no session '{}'", id));
  }
  return it->second;
}

std::string SessionStore::create() {
  auto slot = std::make_shared<Slot>(engine::start_session(kb_));
  slot->created_ms = slot->updated_ms = now_ms();
  auto id = slot->session.id();
  {
    std::unique_lock lock(index_mutex_);
    sessions_.emplace(id, std::move(slot));
  }
  save();
  return id;
}

void SessionStore::erase(const std::string& id) {
  {
    std::unique_lock lock(index_mutex_);
    if (sessions_.erase(id) == 0) {
      throw Error(Errc::UnknownSession, fmt::format("no session '{}'", id));
    }
  }
  save();
}

std::size_t SessionStore::size() const {
  std::shared_lock lock(index_mutex_);
  return sessions_.size();
}

std::vector<SessionRecord> SessionStore::records() const {
  std::vector<std::shared_ptr<Slot>> slots;
  {
    std::shared_lock lock(index_mutex_);
    for (const auto& [_, slot] : sessions_) slots.push_back(slot);
  }
  std::vector<SessionRecord> out;
  out.reserve(slots.size());
  for (const auto& slot : slots) {
    std::lock_guard lock(slot->mutex);
    out.push_back({slot->session.id(), kb_->name(), slot->session.asserted(), slot->created_ms,
                   slot->updated_ms});
  }
  return out;
}

void SessionStore::load() {
  if (!file_) return;
  std::map<std::string, std::shared_ptr<Slot>> loaded;
  std::error_code ec;
  if (fs::exists(*file_, ec)) {
    std::ifstream in(*file_, std::ios::binary);
    if (!in) {
      throw Error(Errc::StoreError, fmt::format("cannot open session store '{}'", file_->string()));
    }
    std::ostringstream text;
    text << in.rdbuf();
    std::vector<SessionRecord> records;
    try {
      const auto doc = json::parse(text.str());
      for (const auto& node : doc.at("sessions")) records.push_back(record_from_json(node));
    } catch (const json::exception& e) {
      throw Error(Errc::StoreError,
                  fmt::format("malformed session store '{}': {}", file_->string(), e.what()));
    }
    for (auto& r : records) {
      if (r.kb_name != kb_->name()) {
        throw Error(Errc::StoreError, fmt::format("session '{}' belongs to knowledge base '{}', not '{}'",
                                                  r.id, r.kb_name, kb_->name()));
      }
      try {
        auto slot = std::make_shared<Slot>(engine::ConsultationSession::restore(kb_, r.id, r.asserted));
        slot->created_ms = r.created_ms;
        slot->updated_ms = r.updated_ms;
        if (!loaded.emplace(r.id, std::move(slot)).second) {
          throw Error(Errc::StoreError, "duplicate session id");
        }
      } catch (const Error& e) {
        throw Error(Errc::StoreError, fmt::format("cannot restore session '{}': {}", r.id, e.what()));
      }
    }
  }
  std::unique_lock lock(index_mutex_);
  sessions_ = std::move(loaded);
}

void SessionStore::save() const {
  if (!file_) return;
  std::lock_guard lock(save_mutex_);
  nlohmann::ordered_json doc;
  doc["kb"] = kb_->name();
  doc["sessions"] = nlohmann::ordered_json::array();
  for (const auto& r : records()) doc["sessions"].push_back(record_to_json(r));

  auto tmp = *file_;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    out << doc.dump(2) << '\n';
    if (!out) {
      throw Error(Errc::StoreError, fmt::format("cannot write session store '{}'", tmp.string()));
    }
  }
  std::error_code ec;
  fs::rename(tmp, *file_, ec);
  if (ec) {
    throw Error(Errc::StoreError,
                fmt::format("cannot replace '{}': {}", file_->string(), ec.message()));
  }
}

}  // namespace evidentia::service
