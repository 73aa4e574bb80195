#include "located_json.hpp"

#include <cctype>
#include <iterator>
#include <set>
#include <vector>

#include <fmt/format.h>

namespace evidentia::kb::detail {

namespace {

// Input iterator that publishes how far the lexer has read.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator(const char* at, const char** cursor) : at_(at), cursor_(cursor) {}

  reference operator*() const { return *at_; }
  TrackingIterator& operator++() {
    ++at_;
    *cursor_ = at_;
    return *this;
  }
  TrackingIterator operator++(int) {
    auto copy = *this;
    ++*this;
    return copy;
  }
  bool operator==(const TrackingIterator& other) const { return at_ == other.at_; }
  bool operator!=(const TrackingIterator& other) const { return at_ != other.at_; }

 private:
  const char* at_;
  const char** cursor_;
};

std::string escape_token(std::string_view key) {
  std::string out;
  for (char c : key) {
    if (c == '~') {
      out += "~0";
    } else if (c == '/') {
      out += "~1";
    } else {
      out += c;
    }
  }
  return out;
}

class LocatingHandler {
 public:
  using json = nlohmann::json;
  using number_integer_t = json::number_integer_t;
  using number_unsigned_t = json::number_unsigned_t;
  using number_float_t = json::number_float_t;
  using string_t = json::string_t;
  using binary_t = json::binary_t;

  LocatingHandler(std::string_view text, const char** cursor, LocatedJson& out)
      : text_(text), cursor_(cursor), out_(out), dom_(out.value, true) {}

  bool null() { return scalar(dom_.null()); }
  bool boolean(bool v) { return scalar(dom_.boolean(v)); }
  bool number_integer(number_integer_t v) { return scalar(dom_.number_integer(v)); }
  bool number_unsigned(number_unsigned_t v) { return scalar(dom_.number_unsigned(v)); }
  bool number_float(number_float_t v, const string_t& s) { return scalar(dom_.number_float(v, s)); }
  bool string(string_t& v) { return scalar(dom_.string(v)); }
  bool binary(binary_t& v) { return scalar(dom_.binary(v)); }

  bool start_object(std::size_t n) {
    record();
    levels_.push_back({false, 0, {}, {}});
    return dom_.start_object(n);
  }
  bool end_object() {
    levels_.pop_back();
    advance();
    return dom_.end_object();
  }
  bool start_array(std::size_t n) {
    record();
    levels_.push_back({true, 0, {}, {}});
    return dom_.start_array(n);
  }
  bool end_array() {
    levels_.pop_back();
    advance();
    return dom_.end_array();
  }
  bool key(string_t& k) {
    auto& level = levels_.back();
    if (!level.seen.insert(k).second) {
      throw Error(Errc::SyntaxError, fmt::format("duplicate key \"{}\"", k), here());
    }
    level.key = k;
    return dom_.key(k);
  }

  bool parse_error(std::size_t byte, const std::string&, const nlohmann::detail::exception& ex) {
    std::string message = ex.what();
    if (const auto colon = message.find(": "); colon != std::string::npos) {
      message = message.substr(colon + 2);
    }
    // Drop the echo of consumed input; the position already says where.
    if (const auto echo = message.find("; last read: '"); echo != std::string::npos) {
      const auto close = message.find("'; ", echo + 14);
      message.erase(echo, close == std::string::npos ? std::string::npos : close + 1 - echo);
    }
    throw Error(Errc::SyntaxError, message, position_of(text_, byte == 0 ? 0 : byte - 1));
  }

 private:
  struct Level {
    bool is_array;
    std::size_t index;
    std::string key;
    std::set<std::string> seen;
  };

  // Position of the last non-blank character the lexer has consumed. The lexer
  // reads one character past a token, so step back over it and any blanks.
  TextPosition here() const {
    std::size_t offset = static_cast<std::size_t>(*cursor_ - text_.data());
    if (offset > 0) --offset;
    while (offset > 0 && std::isspace(static_cast<unsigned char>(text_[offset]))) --offset;
    return position_of(text_, offset);
  }

  std::string pointer() const {
    std::string p;
    for (const auto& level : levels_) {
      p += '/';
      p += level.is_array ? std::to_string(level.index) : escape_token(level.key);
    }
    return p;
  }

  void record() { out_.positions.insert_or_assign(pointer(), here()); }

  void advance() {
    if (!levels_.empty() && levels_.back().is_array) ++levels_.back().index;
  }

  bool scalar(bool result) {
    record();
    advance();
    return result;
  }

  std::string_view text_;
  const char** cursor_;
  LocatedJson& out_;
  nlohmann::detail::json_sax_dom_parser<json> dom_;
  std::vector<Level> levels_;
};

}  // namespace

TextPosition LocatedJson::at(const std::string& pointer) const {
  // Fall back to the nearest located ancestor.
  std::string p = pointer;
  while (true) {
    if (const auto it = positions.find(p); it != positions.end()) return it->second;
    if (p.empty()) return {};
    p.erase(p.rfind('/'));
  }
}

LocatedJson parse_located(std::string_view text) {
  LocatedJson out;
  const char* cursor = text.data();
  LocatingHandler handler(text, &cursor, out);
  TrackingIterator first(text.data(), &cursor);
  TrackingIterator last(text.data() + text.size(), &cursor);
  nlohmann::json::sax_parse(first, last, &handler);
  return out;
}

}  // namespace evidentia::kb::detail
