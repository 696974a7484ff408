#include "fles/label.hpp"

#include <cstdlib>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "fles/limits.hpp"

namespace fles {

namespace {

struct LabelTable {
  std::shared_mutex mutex;
  std::deque<std::string> names{std::string{}};
  std::unordered_map<std::string, uint32_t> ids{{std::string{}, 0}};
};

LabelTable& table() {
  static LabelTable t;
  return t;
}

}  // namespace

Label Label::intern(std::string_view name) {
  auto& t = table();
  std::string key(name);
  {
    std::shared_lock lock(t.mutex);
    if (auto it = t.ids.find(key); it != t.ids.end()) return Label{it->second};
  }
  std::unique_lock lock(t.mutex);
  if (auto it = t.ids.find(key); it != t.ids.end()) return Label{it->second};
  const auto id = static_cast<uint32_t>(t.names.size());
  t.names.push_back(key);
  t.ids.emplace(std::move(key), id);
  return Label{id};
}

const std::string& Label::name() const {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  // deque never relocates existing elements, so the reference stays valid.
  return t.names[id_];
}

std::size_t label_universe_size() {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  return t.names.size();
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += w[i].name();
  }
  return out;
}

Word parse_word(std::string_view text) {
  Word w;
  std::istringstream in{std::string(text)};
  std::string tok;
  while (in >> tok) {
    if (tok == "ε" || tok == "eps" || tok == "\"\"") {
      throw std::invalid_argument("word contains the empty label: " + tok);
    }
    w.push_back(Label::intern(tok));
  }
  return w;
}

bool name_less(const Word& a, const Word& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i] == b[i]) continue;
    return a[i].name() < b[i].name();
  }
  return a.size() < b.size();
}

Limits Limits::from_environment() {
  Limits l;
  if (const char* v = std::getenv("FLES_MAX_CONFIGS"); v && *v) {
    char* end = nullptr;
    const unsigned long long n = std::strtoull(v, &end, 10);
    if (end && *end == '\0' && n > 0) l.max_configurations = static_cast<std::size_t>(n);
  }
  return l;
}

}  // namespace fles
