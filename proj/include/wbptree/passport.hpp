#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "wbptree/bigint.hpp"
#include "wbptree/error.hpp"
#include "wbptree/number_theory.hpp"

namespace wbp {

using Weight = std::uint64_t;

enum class Color : std::uint8_t { black, white };

inline Color opposite(Color c) {
  return c == Color::black ? Color::white : Color::black;
}

inline const char* to_string(Color c) {
  return c == Color::black ? "black" : "white";
}

/// Vertex label token. An ordinary label is a nonnegative integer or the
/// star; `index` is nonzero only for the double labels produced by fill(),
/// where (base label, index) identifies one copy of a repeated entry.
struct Label {
  bool star = false;
  std::uint32_t value = 0;  // always 0 for the star
  std::uint32_t index = 0;

  static constexpr Label plain(std::uint32_t v) { return Label{false, v, 0}; }
  static constexpr Label star_label() { return Label{true, 0, 0}; }

  constexpr Label base() const { return Label{star, value, 0}; }
  constexpr bool is_fill_label() const { return index != 0; }
  constexpr bool is_default() const { return !star && value == 0 && index == 0; }

  auto operator<=>(const Label&) const = default;
};

/// A weight K with label k, written K_k.
struct LabeledWeight {
  Weight weight = 1;
  Label label{};

  auto operator<=>(const LabeledWeight&) const = default;
};

/// A pair of multisets of labeled weights: black side and white side.
///
/// Each side is kept sorted in descending (weight, label) order so equal
/// passports compare and print identically. At most one entry may carry the
/// star label.
class Passport {
 public:
  Passport() = default;

  Passport(std::vector<LabeledWeight> black, std::vector<LabeledWeight> white)
      : black_(std::move(black)), white_(std::move(white)) {
    for (const auto* side : {&black_, &white_}) {
      for (const auto& e : *side) {
        if (e.weight == 0) throw DomainError("passport weights must be >= 1");
      }
    }
    std::sort(black_.begin(), black_.end(), std::greater<>());
    std::sort(white_.begin(), white_.end(), std::greater<>());
    if (star_count() > 1) {
      throw DomainError("passport carries more than one star label");
    }
  }

  const std::vector<LabeledWeight>& black() const { return black_; }
  const std::vector<LabeledWeight>& white() const { return white_; }
  const std::vector<LabeledWeight>& side(Color c) const {
    return c == Color::black ? black_ : white_;
  }

  /// Total number of points.
  std::size_t size() const { return black_.size() + white_.size(); }
  bool empty() const { return black_.empty() && white_.empty(); }

  Weight weight_sum(Color c) const {
    Weight sum = 0;
    for (const auto& e : side(c)) sum += e.weight;
    return sum;
  }

  bool is_balanced() const {
    return weight_sum(Color::black) == weight_sum(Color::white);
  }

  bool has_star() const { return star_count() == 1; }

  bool operator==(const Passport&) const = default;

 private:
  std::size_t star_count() const {
    std::size_t n = 0;
    for (const auto* side : {&black_, &white_}) {
      for (const auto& e : *side) n += e.label.star ? 1 : 0;
    }
    return n;
  }

  std::vector<LabeledWeight> black_;
  std::vector<LabeledWeight> white_;
};

/// One distinct labeled weight of a passport together with its multiplicity.
struct Group {
  Color color;
  LabeledWeight entry;
  std::uint64_t multiplicity;
};

/// Distinct entries: black side first, then white, each ascending by
/// (weight, label). This is the order used by g_vector().
inline std::vector<Group> groups(const Passport& xi) {
  std::vector<Group> out;
  for (Color c : {Color::black, Color::white}) {
    const auto& side = xi.side(c);
    for (auto it = side.rbegin(); it != side.rend(); ++it) {
      if (!out.empty() && out.back().color == c && out.back().entry == *it) {
        ++out.back().multiplicity;
      } else {
        out.push_back(Group{c, *it, 1});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Notation
// ---------------------------------------------------------------------------

namespace detail {

class PassportParser {
 public:
  explicit PassportParser(std::string_view text) : text_(text) {}

  Passport parse() {
    std::vector<LabeledWeight> black = parse_side(false);
    skip_spaces();
    if (at_end() || peek() != '|') fail("expected '|'");
    ++pos_;
    skip_spaces();
    std::vector<LabeledWeight> white = parse_side(true);
    if (!at_end()) fail("unexpected character");
    return Passport(std::move(black), std::move(white));
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return text_[pos_]; }
  static bool is_digit(char c) { return c >= '0' && c <= '9'; }

  [[noreturn]] void fail(const std::string& message) const {
    throw ParseError(pos_, message);
  }

  std::size_t skip_spaces() {
    std::size_t n = 0;
    while (!at_end() && peek() == ' ') {
      ++pos_;
      ++n;
    }
    return n;
  }

  std::uint64_t parse_int() {
    if (at_end() || !is_digit(peek())) fail("expected an integer");
    std::uint64_t v = 0;
    const std::size_t start = pos_;
    while (!at_end() && is_digit(peek())) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > std::numeric_limits<std::uint32_t>::max()) {
        pos_ = start;
        fail("integer too large");
      }
      ++pos_;
    }
    return v;
  }

  std::vector<LabeledWeight> parse_side(bool last) {
    std::vector<LabeledWeight> entries;
    if (at_end() || !is_digit(peek())) return entries;
    parse_term(entries);
    while (true) {
      const std::size_t before = pos_;
      const std::size_t spaces = skip_spaces();
      if (spaces > 0 && !at_end() && is_digit(peek())) {
        parse_term(entries);
        continue;
      }
      if (last && spaces > 0 && at_end()) {
        pos_ = before;
        fail("trailing whitespace");
      }
      pos_ = before;
      return entries;
    }
  }

  void parse_term(std::vector<LabeledWeight>& out) {
    const std::size_t term_start = pos_;
    const std::uint64_t weight = parse_int();
    if (weight == 0) {
      pos_ = term_start;
      fail("zero weight");
    }
    Label label;
    if (!at_end() && peek() == '_') {
      ++pos_;
      if (!at_end() && peek() == '*') {
        ++pos_;
        label = Label::star_label();
      } else {
        label = Label::plain(static_cast<std::uint32_t>(parse_int()));
      }
    }
    std::uint64_t mult = 1;
    if (!at_end() && peek() == '^') {
      ++pos_;
      const std::size_t mult_start = pos_;
      mult = parse_int();
      if (mult == 0) {
        pos_ = mult_start;
        fail("zero multiplicity");
      }
    }
    if (!at_end() && peek() != ' ' && peek() != '|') fail("unexpected character");
    if (label.star) {
      if (seen_star_ || mult > 1) {
        pos_ = term_start;
        fail("duplicated star label");
      }
      seen_star_ = true;
    }
    out.insert(out.end(), mult, LabeledWeight{weight, label});
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  bool seen_star_ = false;
};

inline std::string label_suffix(const Label& label, bool unique_in_side) {
  if (label.is_fill_label() && !unique_in_side) {
    if (label.star) return "_*";  // unreachable for valid passports
    if (label.value == 0) return "_" + std::to_string(label.index);
    // Display-only form; the notation grammar has no nested labels.
    return "_" + std::to_string(label.value) + "." + std::to_string(label.index);
  }
  if (label.star) return "_*";
  if (label.value == 0) return "";
  return "_" + std::to_string(label.value);
}

inline std::string side_to_string(const std::vector<LabeledWeight>& side) {
  std::string out;
  for (std::size_t i = 0; i < side.size();) {
    std::size_t j = i;
    while (j < side.size() && side[j] == side[i]) ++j;
    bool unique = true;
    if (side[i].label.is_fill_label()) {
      for (const auto& e : side) {
        if (&e != &side[i] && e.weight == side[i].weight &&
            e.label.base() == side[i].label.base()) {
          unique = false;
        }
      }
    }
    if (!out.empty()) out += ' ';
    out += std::to_string(side[i].weight);
    out += label_suffix(side[i].label, unique);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out;
}

}  // namespace detail

/// Parses power notation such as "2^2 4^3 | 8^2" or "3 1 | 2_* 2".
/// Balance is not checked here.
inline Passport parse_passport(std::string_view text) {
  return detail::PassportParser(text).parse();
}

/// Canonical power notation; '^1' and '_0' are omitted.
inline std::string to_string(const Passport& xi) {
  const std::string left = detail::side_to_string(xi.black());
  const std::string right = detail::side_to_string(xi.white());
  return left + (left.empty() ? "" : " ") + "|" + (right.empty() ? "" : " ") +
         right;
}

// ---------------------------------------------------------------------------
// Algebra
// ---------------------------------------------------------------------------

/// Product of the factorials of all multiplicities.
inline BigInt p_factor(const Passport& xi) {
  BigInt p = 1;
  for (const auto& g : groups(xi)) p *= factorial(g.multiplicity);
  return p;
}

inline bool is_simple(const Passport& xi) {
  for (const auto& g : groups(xi)) {
    if (g.multiplicity != 1) return false;
  }
  return true;
}

/// Gives the copies of every repeated entry distinct double labels
/// (label, 1..multiplicity). Unique entries get index 1 and print unchanged.
inline Passport fill(const Passport& xi) {
  std::vector<LabeledWeight> sides[2];
  for (const auto& g : groups(xi)) {
    auto& out = sides[g.color == Color::black ? 0 : 1];
    if (g.entry.label.is_fill_label()) {
      if (g.multiplicity != 1) {
        throw DomainError("cannot fill a repeated double-labelled entry");
      }
      out.push_back(g.entry);
      continue;
    }
    for (std::uint64_t s = 1; s <= g.multiplicity; ++s) {
      Label l = g.entry.label;
      l.index = static_cast<std::uint32_t>(s);
      out.push_back(LabeledWeight{g.entry.weight, l});
    }
  }
  return Passport(std::move(sides[0]), std::move(sides[1]));
}

/// The projection Fill(xi) -> xi that forgets the index of every double
/// label, listed per entry of the filled passport (black then white, in
/// canonical order).
struct FillProjection {
  std::vector<std::pair<LabeledWeight, LabeledWeight>> black;
  std::vector<std::pair<LabeledWeight, LabeledWeight>> white;
};

inline FillProjection forget_fill(const Passport& filled, const Passport& xi) {
  if (!(fill(xi) == filled)) {
    throw DomainError("'" + to_string(filled) + "' is not the filling of '" +
                      to_string(xi) + "'");
  }
  FillProjection map;
  for (const auto& e : filled.black()) {
    map.black.emplace_back(e, LabeledWeight{e.weight, e.label.base()});
  }
  for (const auto& e : filled.white()) {
    map.white.emplace_back(e, LabeledWeight{e.weight, e.label.base()});
  }
  return map;
}

/// Replaces every double label by its base label.
inline Passport collapse_fill_labels(const Passport& xi) {
  std::vector<LabeledWeight> sides[2];
  for (Color c : {Color::black, Color::white}) {
    for (const auto& e : xi.side(c)) {
      sides[c == Color::black ? 0 : 1].push_back(
          LabeledWeight{e.weight, e.label.base()});
    }
  }
  return Passport(std::move(sides[0]), std::move(sides[1]));
}

namespace detail {

/// gcd(K_i; every multiplicity, with lambda_i replaced by lambda_i - 1).
inline std::uint64_t group_gcd(const std::vector<Group>& gs, std::size_t i) {
  std::uint64_t g = gs[i].entry.weight;
  for (std::size_t j = 0; j < gs.size(); ++j) {
    g = gcd(g, j == i ? gs[j].multiplicity - 1 : gs[j].multiplicity);
  }
  return g;
}

inline std::size_t star_group(const std::vector<Group>& gs) {
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (gs[i].entry.label.star) return i;
  }
  return gs.size();
}

}  // namespace detail

/// One g_i per distinct entry, in groups() order. Star-free passports only.
inline std::vector<std::uint64_t> g_vector(const Passport& xi) {
  if (xi.has_star()) throw DomainError("g_vector: passport carries a star label");
  const auto gs = groups(xi);
  std::vector<std::uint64_t> g(gs.size());
  for (std::size_t i = 0; i < gs.size(); ++i) g[i] = detail::group_gcd(gs, i);
  return g;
}

/// All d for which xi/d is defined, ascending. For a starred passport only
/// the star entry can serve as the symmetric center.
inline std::vector<std::uint64_t> divisor_set(const Passport& xi) {
  std::vector<std::uint64_t> out{1};
  const auto gs = groups(xi);
  const std::size_t star = detail::star_group(gs);
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (star != gs.size() && i != star) continue;
    for (std::uint64_t d : divisors(detail::group_gcd(gs, i))) {
      if (d == 1) continue;
      if (std::find(out.begin(), out.end(), d) != out.end()) {
        throw ConsistencyError("divisor " + std::to_string(d) +
                               " divides two g_i of " + to_string(xi));
      }
      out.push_back(d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The divided passport xi/d: one sector of a d-fold symmetric tree, whose
/// cut vertex carries the star label. Dividing a starred passport divides
/// the starred entry again.
inline Passport divide(const Passport& xi, std::uint64_t d) {
  if (d == 0) throw DomainError("divide: d must be >= 1");
  if (d == 1) return xi;
  const auto gs = groups(xi);
  const std::size_t star = detail::star_group(gs);
  std::size_t center = gs.size();
  for (std::size_t i = 0; i < gs.size(); ++i) {
    if (star != gs.size() && i != star) continue;
    if (detail::group_gcd(gs, i) % d == 0) {
      center = i;
      break;
    }
  }
  if (center == gs.size()) {
    throw DomainError("divide: " + to_string(xi) + " has no sector for d = " +
                      std::to_string(d));
  }
  std::vector<LabeledWeight> sides[2];
  for (std::size_t i = 0; i < gs.size(); ++i) {
    auto& out = sides[gs[i].color == Color::black ? 0 : 1];
    std::uint64_t copies = gs[i].multiplicity;
    if (i == center) {
      --copies;
      out.push_back(LabeledWeight{gs[i].entry.weight / d, Label::star_label()});
    }
    if (gs[i].entry.label.star) continue;
    out.insert(out.end(), copies / d, gs[i].entry);
  }
  return Passport(std::move(sides[0]), std::move(sides[1]));
}

}  // namespace wbp
