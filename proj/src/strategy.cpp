#include "catbox/strategy.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

namespace catbox {

namespace {

std::vector<BoxId> parse_boxes(std::string_view text, bool comma_form, const Topology& t, std::string_view whole) {
  std::vector<BoxId> out;
  if (text.empty()) return out;
  auto check = [&](BoxId b) {
    if (!t.contains(b)) {
      throw std::invalid_argument("box " + std::to_string(b) + " out of range for " + t.spec() + " in '" +
                                  std::string(whole) + "'");
    }
    out.push_back(b);
  };
  if (!comma_form) {
    for (char c : text) {
      if (c < '0' || c > '9') throw std::invalid_argument("unexpected character in '" + std::string(whole) + "'");
      check(c - '0');
    }
    return out;
  }
  std::size_t start = 0;
  while (start <= text.size()) {
    const auto pos = std::min(text.find(',', start), text.size());
    const auto token = text.substr(start, pos - start);
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw std::invalid_argument("malformed box list in '" + std::string(whole) + "'");
    }
    check(value);
    start = pos + 1;
  }
  return out;
}

std::string join(const std::vector<BoxId>& boxes, bool digits) {
  std::string out;
  for (std::size_t i = 0; i < boxes.size(); ++i) {
    if (!digits && i > 0) out += ',';
    out += std::to_string(boxes[i]);
  }
  return out;
}

std::string format_with(const Strategy& s, bool digits) {
  std::string out = join(s.prefix(), digits);
  if (!s.finite()) {
    // a comma separates the prefix from the cycle only inside the box lists
    out += "(" + join(s.cycle(), digits) + ")";
  }
  return out;
}

}  // namespace

BoxId Strategy::box_at(int step) const {
  if (step < 1) throw std::out_of_range("steps are 1-based");
  const auto k = prefix_.size();
  const auto idx = static_cast<std::size_t>(step - 1);
  if (idx < k) return prefix_[idx];
  if (cycle_.empty()) throw StrategyExhausted("finite strategy exhausted at step " + std::to_string(step));
  return cycle_[(idx - k) % cycle_.size()];
}

std::vector<BoxId> Strategy::openings(int steps) const {
  std::vector<BoxId> out;
  for (int s = 1; s <= steps; ++s) {
    if (finite() && s > prefix_length()) break;
    out.push_back(box_at(s));
  }
  return out;
}

BoxId Strategy::max_box() const {
  BoxId m = 0;
  for (BoxId b : prefix_) m = std::max(m, b);
  for (BoxId b : cycle_) m = std::max(m, b);
  return m;
}

Strategy Strategy::canonical() const {
  std::vector<BoxId> prefix = prefix_;
  std::vector<BoxId> cycle = cycle_;
  if (!cycle.empty()) {
    const std::size_t len = cycle.size();
    for (std::size_t p = 1; p <= len; ++p) {
      if (len % p != 0) continue;
      bool periodic = true;
      for (std::size_t i = p; i < len && periodic; ++i) periodic = cycle[i] == cycle[i - p];
      if (periodic) {
        cycle.resize(p);
        break;
      }
    }
    while (!prefix.empty() && prefix.back() == cycle.back()) {
      std::rotate(cycle.rbegin(), cycle.rbegin() + 1, cycle.rend());
      prefix.pop_back();
    }
  }
  return Strategy(std::move(prefix), std::move(cycle));
}

Strategy parse_strategy(std::string_view text, const Topology& t) {
  if (text.empty()) throw std::invalid_argument("empty strategy");
  if (text.substr(0, 7) == "preset:") {
    const auto preset = find_preset(text.substr(7));
    if (!preset) throw std::invalid_argument("unknown preset '" + std::string(text.substr(7)) + "'");
    if (Topology::parse(preset->topology) != t) {
      throw std::invalid_argument("preset '" + preset->name + "' belongs to " + preset->topology + ", not " +
                                  t.spec());
    }
    return parse_strategy(preset->strategy, t);
  }

  std::string_view head = text;
  std::string_view tail;
  bool has_cycle = false;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')' || text.find('(', open + 1) != std::string_view::npos ||
        text.find(')') != text.size() - 1) {
      throw std::invalid_argument("malformed parentheses in '" + std::string(text) + "'");
    }
    head = text.substr(0, open);
    tail = text.substr(open + 1, text.size() - open - 2);
    has_cycle = true;
    if (tail.empty()) throw std::invalid_argument("empty cycle in '" + std::string(text) + "'");
  } else if (text.find(')') != std::string_view::npos) {
    throw std::invalid_argument("malformed parentheses in '" + std::string(text) + "'");
  }
  if (!head.empty() && head.back() == ',') head.remove_suffix(1);

  // Above nine boxes every number is a whole box, so a lone "12" or "(3)" is
  // read as one box.
  const bool comma_form = text.find(',') != std::string_view::npos || t.boxes() > 9;
  auto prefix = parse_boxes(head, comma_form, t, text);
  auto cycle = has_cycle ? parse_boxes(tail, comma_form, t, text) : std::vector<BoxId>{};
  if (prefix.empty() && cycle.empty()) throw std::invalid_argument("empty strategy");
  return Strategy(std::move(prefix), std::move(cycle));
}

std::string format_strategy(const Strategy& s) { return format_with(s, s.max_box() <= 9); }

std::string format_strategy(const Strategy& s, const Topology& t) { return format_with(s, t.boxes() <= 9); }

Strategy mirror_strategy(const Strategy& s, const Permutation& sigma) {
  auto apply = [&](const std::vector<BoxId>& boxes) {
    std::vector<BoxId> out;
    out.reserve(boxes.size());
    for (BoxId b : boxes) out.push_back(sigma.at(static_cast<std::size_t>(b)));
    return out;
  };
  return Strategy(apply(s.prefix()), apply(s.cycle()));
}

Strategy sweep_strategy(int n) {
  if (n <= 2) throw std::invalid_argument("sweep strategy needs n > 2");
  std::vector<BoxId> boxes;
  for (BoxId b = 2; b <= n - 1; ++b) boxes.push_back(b);
  for (BoxId b = n - 1; b >= 2; --b) boxes.push_back(b);
  return Strategy(std::move(boxes), {});
}

Strategy twice_left_twice_right(int n) {
  if (n < 4) throw std::invalid_argument("twice-left-twice-right needs n >= 4");
  return Strategy({1, n - 1, n - 1, 1}, {2, 2, n - 1, n - 1});
}

Strategy parity_swap(const Strategy& s, int n) {
  // an odd cycle length would alternate step parity between repetitions
  std::vector<BoxId> cycle = s.cycle();
  if (cycle.size() % 2 == 1) cycle.insert(cycle.end(), s.cycle().begin(), s.cycle().end());
  auto swap_at = [n](BoxId b, int step) { return (b + step) % 2 == 1 ? n + 1 - b : b; };
  std::vector<BoxId> prefix;
  int step = 1;
  for (BoxId b : s.prefix()) prefix.push_back(swap_at(b, step++));
  std::vector<BoxId> swapped;
  for (BoxId b : cycle) swapped.push_back(swap_at(b, step++));
  return Strategy(std::move(prefix), std::move(swapped));
}

bool sequence_less(const Strategy& a, const Strategy& b) {
  const auto horizon = [](const Strategy& s) { return s.prefix_length() + s.cycle_length(); };
  const int la = a.finite() ? a.prefix_length() : -1;
  const int lb = b.finite() ? b.prefix_length() : -1;
  int limit = std::max(horizon(a), horizon(b));
  if (!a.finite() && !b.finite()) {
    limit = std::max(a.prefix_length(), b.prefix_length()) + std::lcm(a.cycle_length(), b.cycle_length());
  }
  for (int step = 1; step <= limit + 1; ++step) {
    const bool a_done = la >= 0 && step > la;
    const bool b_done = lb >= 0 && step > lb;
    if (a_done || b_done) return a_done && !b_done;
    const BoxId x = a.box_at(step);
    const BoxId y = b.box_at(step);
    if (x != y) return x < y;
  }
  return false;
}

const std::vector<Preset>& presets() {
  static const std::string s9 =
      "1829825881238258298723428763(9298723458817181238765281318123876522939298723458297)";
  static const std::vector<Preset> table = {
      {"s8_fast", "line:8",
       "475274257742247742247744724725527447255274472552744725527447255274257752472552742577524",
       "first 87 openings of the fastest known search of eight boxes (no exits)"},
      {"s8r", "line:8:exits", "177122477(2347187237762236818761)",
       "minimum-escape strategy for eight boxes with exits"},
      {"s8r_alt", "line:8:exits", "17712247(72347)",
       "eight boxes with exits, period-5 tail from step 9 on; marginally worse escape"},
      {"s9", "line:9:exits", s9, "minimum-escape strategy for nine boxes with exits (box 2 at step 3)"},
      {"s9r", "line:9:exits",
       format_strategy(parity_swap(parse_strategy(s9, Topology::parse("line:9:exits")), 9)),
       "odd/even-swapped twin of s9 (box 8 at step 3)"},
  };
  return table;
}

std::optional<Preset> find_preset(std::string_view name) {
  for (const auto& p : presets()) {
    if (p.name == name) return p;
  }
  return std::nullopt;
}

}  // namespace catbox
