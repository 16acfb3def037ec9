#include "sandwich/cli/located_json.hpp"

#include <algorithm>
#include <cctype>
#include <iterator>
#include <vector>

namespace sandwich::cli {
namespace {

using json = nlohmann::json;

// Input iterator that remembers how far the lexer has read.
class TrackingIterator {
 public:
  using iterator_category = std::input_iterator_tag;
  using value_type = char;
  using difference_type = std::ptrdiff_t;
  using pointer = const char*;
  using reference = const char&;

  TrackingIterator() = default;
  TrackingIterator(const char* p, const char* base, std::size_t* furthest)
      : p_(p), base_(base), furthest_(furthest) {}

  reference operator*() const { return *p_; }
  TrackingIterator& operator++() {
    ++p_;
    if (furthest_) *furthest_ = std::max(*furthest_, static_cast<std::size_t>(p_ - base_));
    return *this;
  }
  TrackingIterator operator++(int) {
    TrackingIterator t = *this;
    ++*this;
    return t;
  }
  bool operator==(const TrackingIterator& o) const { return p_ == o.p_; }
  bool operator!=(const TrackingIterator& o) const { return p_ != o.p_; }

 private:
  const char* p_ = nullptr;
  const char* base_ = nullptr;
  std::size_t* furthest_ = nullptr;
};

std::string escape_token(const std::string& key) {
  std::string out;
  for (char c : key) {
    if (c == '~') out += "~0";
    else if (c == '/') out += "~1";
    else out += c;
  }
  return out;
}

std::size_t line_at(std::string_view text, std::size_t offset) {
  offset = std::min(offset, text.size());
  return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + offset, '\n'));
}

class LocatingHandler : public nlohmann::detail::json_sax_dom_parser<json> {
  using base = nlohmann::detail::json_sax_dom_parser<json>;

 public:
  LocatingHandler(json& root, std::string_view text, const std::size_t& furthest,
                  std::map<std::string, std::size_t>& lines)
      : base(root, true), text_(text), furthest_(furthest), lines_(lines) {}

  bool null() { return leaf(), base::null(); }
  bool boolean(bool v) { return leaf(), base::boolean(v); }
  bool number_integer(number_integer_t v) { return leaf(), base::number_integer(v); }
  bool number_unsigned(number_unsigned_t v) { return leaf(), base::number_unsigned(v); }
  bool number_float(number_float_t v, const string_t& s) { return leaf(), base::number_float(v, s); }
  bool string(string_t& v) { return leaf(), base::string(v); }
  bool binary(binary_t& v) { return leaf(), base::binary(v); }

  bool start_object(std::size_t n) {
    open(false);
    return base::start_object(n);
  }
  bool key(string_t& k) {
    frames_.back().key = k;
    return base::key(k);
  }
  bool end_object() {
    frames_.pop_back();
    return base::end_object();
  }
  bool start_array(std::size_t n) {
    open(true);
    return base::start_array(n);
  }
  bool end_array() {
    frames_.pop_back();
    return base::end_array();
  }

 private:
  struct Frame {
    std::string path;
    bool array = false;
    std::size_t next = 0;
    std::string key;
  };

  // Offset of the last significant character read; the lexer may have read
  // one character of lookahead past the token.
  std::size_t current_line() const {
    std::size_t pos = furthest_;
    while (pos > 0 && std::isspace(static_cast<unsigned char>(text_[pos - 1]))) --pos;
    return line_at(text_, pos == 0 ? 0 : pos - 1);
  }

  std::string child_path() {
    if (frames_.empty()) return "";
    Frame& top = frames_.back();
    if (top.array) return top.path + "/" + std::to_string(top.next++);
    return top.path + "/" + escape_token(top.key);
  }

  void leaf() { lines_.emplace(child_path(), current_line()); }

  void open(bool array) {
    std::string path = child_path();
    lines_.emplace(path, current_line());
    frames_.push_back({std::move(path), array, 0, {}});
  }

  std::string_view text_;
  const std::size_t& furthest_;
  std::map<std::string, std::size_t>& lines_;
  std::vector<Frame> frames_;
};

}  // namespace

LocatedJson LocatedJson::parse(std::string_view text) {
  LocatedJson out;
  std::size_t furthest = 0;
  LocatingHandler handler(out.root_, text, furthest, out.lines_);
  TrackingIterator first(text.data(), text.data(), &furthest);
  TrackingIterator last(text.data() + text.size(), text.data(), nullptr);
  try {
    json::sax_parse(first, last, &handler);
  } catch (const json::parse_error& e) {
    throw ParseError(line_at(text, e.byte == 0 ? 0 : e.byte - 1), "", e.what());
  }
  return out;
}

std::size_t LocatedJson::line_of(const std::string& pointer) const {
  std::string p = pointer;
  while (true) {
    if (auto it = lines_.find(p); it != lines_.end()) return it->second;
    if (p.empty()) return 1;
    p.erase(p.rfind('/'));
  }
}

}  // namespace sandwich::cli
