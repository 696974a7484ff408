#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fles {

/// Interned event label. Id 0 is the empty label ε.
///
/// Interning is process-wide so labels from different structures compare by
/// id. The table is append-only and safe to use from several threads.
class Label {
 public:
  constexpr Label() = default;

  static Label intern(std::string_view name);
  static constexpr Label epsilon() { return Label{}; }

  constexpr uint32_t id() const { return id_; }
  constexpr bool is_epsilon() const { return id_ == 0; }
  const std::string& name() const;

  friend constexpr bool operator==(Label, Label) = default;
  friend constexpr auto operator<=>(Label, Label) = default;

 private:
  constexpr explicit Label(uint32_t id) : id_(id) {}
  uint32_t id_ = 0;
};

/// Number of labels interned so far (ε included). Label ids are < this.
std::size_t label_universe_size();

/// Finite sequence of non-ε labels.
using Word = std::vector<Label>;

/// Space-separated rendering, e.g. "B A A". The empty word renders as "".
std::string to_string(const Word& w);

/// Parses space-separated labels. Throws std::invalid_argument on an ε token.
Word parse_word(std::string_view text);

/// Lexicographic order on label names (not on intern ids).
bool name_less(const Word& a, const Word& b);

}  // namespace fles
