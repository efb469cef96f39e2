#ifndef CATBOX_STRATEGY_HPP
#define CATBOX_STRATEGY_HPP

#include "catbox/topology.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace catbox {

class StrategyExhausted : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// Opening sequence: a finite prefix followed by a cycle repeated forever.
// An empty cycle makes the strategy finite.
class Strategy {
 public:
  Strategy() = default;
  Strategy(std::vector<BoxId> prefix, std::vector<BoxId> cycle)
      : prefix_(std::move(prefix)), cycle_(std::move(cycle)) {}

  const std::vector<BoxId>& prefix() const { return prefix_; }
  const std::vector<BoxId>& cycle() const { return cycle_; }
  bool finite() const { return cycle_.empty(); }
  int prefix_length() const { return static_cast<int>(prefix_.size()); }
  int cycle_length() const { return static_cast<int>(cycle_.size()); }

  // Box opened at 1-based step; throws StrategyExhausted past a finite end.
  BoxId box_at(int step) const;

  // First `steps` openings (or fewer for a finite strategy).
  std::vector<BoxId> openings(int steps) const;

  BoxId max_box() const;

  // Same infinite opening sequence with the shortest cycle and prefix.
  Strategy canonical() const;

  bool operator==(const Strategy&) const = default;

 private:
  std::vector<BoxId> prefix_;
  std::vector<BoxId> cycle_;
};

// "2552(33)" digit per box (topologies with at most 9 boxes) or the comma form
// "2,5,5,2(3,3)". "preset:NAME" resolves a named strategy; its topology must
// match `t`.
Strategy parse_strategy(std::string_view text, const Topology& t);

// Digit form when every box is at most 9, else comma form.
std::string format_strategy(const Strategy& s);

// Digit form only when `t` allows it, so parse(format(s, t), t) == s.
std::string format_strategy(const Strategy& s, const Topology& t);

Strategy mirror_strategy(const Strategy& s, const Permutation& sigma);

// 2, 3, ..., n-1, n-1, ..., 3, 2: guaranteed capture on a line without exits.
Strategy sweep_strategy(int n);

// 1 (n-1) (n-1) 1 followed by the cycle 2 2 (n-1) (n-1).
Strategy twice_left_twice_right(int n);

// On a line with an odd number of boxes the populations that started on odd
// and on even boxes never mix. Replacing box b by n+1-b at every step whose
// index has the opposite parity of b changes only how one of the two
// populations is searched and yields an equivalent strategy.
Strategy parity_swap(const Strategy& s, int n);

// Lexicographic order on the infinite opening sequence; a finite strategy that
// is a prefix of another orders first.
bool sequence_less(const Strategy& a, const Strategy& b);

struct Preset {
  std::string name;
  std::string topology;
  std::string strategy;
  std::string description;
};

const std::vector<Preset>& presets();
std::optional<Preset> find_preset(std::string_view name);

}  // namespace catbox

#endif  // CATBOX_STRATEGY_HPP
