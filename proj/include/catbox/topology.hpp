#ifndef CATBOX_TOPOLOGY_HPP
#define CATBOX_TOPOLOGY_HPP

#include "catbox/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace catbox {

// 1-based box index. Line and ring: 1..n. Grid 2 x m: upper row 1..m,
// lower row m+1..2m, column-aligned.
using BoxId = int;

// Destination marker for a move that leaves the grid.
inline constexpr BoxId kEscape = 0;

enum class TopologyKind { Line, Ring, Grid2xM };

class Topology {
 public:
  // Validates size and exit flag; throws std::invalid_argument.
  static Topology build(TopologyKind kind, int size, bool exits);

  // "line:5", "line:5:exits", "ring:6", "grid:2x4", "grid:2x4:exits".
  static Topology parse(std::string_view spec);

  TopologyKind kind() const { return kind_; }
  int size() const { return size_; }
  bool exits() const { return exits_; }
  int boxes() const { return kind_ == TopologyKind::Grid2xM ? 2 * size_ : size_; }
  bool contains(BoxId b) const { return b >= 1 && b <= boxes(); }

  std::string spec() const;

  bool operator==(const Topology&) const = default;

 private:
  Topology(TopologyKind kind, int size, bool exits) : kind_(kind), size_(size), exits_(exits) {}

  TopologyKind kind_;
  int size_;
  bool exits_;
};

struct Move {
  BoxId to;  // kEscape for leaving the grid
  Rational probability;
};

// Per-box list of moves; every row sums to exactly one.
class MoveKernel {
 public:
  explicit MoveKernel(std::vector<std::vector<Move>> rows) : rows_(std::move(rows)) {}

  const std::vector<Move>& from(BoxId b) const { return rows_.at(static_cast<std::size_t>(b - 1)); }
  int boxes() const { return static_cast<int>(rows_.size()); }
  Rational escape_probability(BoxId b) const;

  // Least common denominator of all move probabilities.
  long common_denominator() const;

 private:
  std::vector<std::vector<Move>> rows_;
};

MoveKernel move_kernel(const Topology& t);

// perm[b] is the image of box b; perm[0] is unused and holds 0.
using Permutation = std::vector<BoxId>;

// Graph automorphisms that also preserve exits: the line mirror b -> n+1-b,
// the four-element grid group, the dihedral group on rings. Distinct
// permutations only; the identity comes first.
std::vector<Permutation> symmetries(const Topology& t);

// Smallest box of every orbit under the symmetry group, ascending.
std::vector<BoxId> orbit_representatives(const Topology& t);

}  // namespace catbox

#endif  // CATBOX_TOPOLOGY_HPP
