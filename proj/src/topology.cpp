#include "catbox/topology.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <numeric>
#include <stdexcept>

namespace catbox {

namespace {

int parse_positive(std::string_view text, std::string_view spec) {
  int value = 0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw std::invalid_argument("bad size in topology '" + std::string(spec) + "'");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  while (true) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Directions available from box b, with nullopt-like kEscape for missing
// neighbours when the topology has exits.
std::vector<BoxId> directions(const Topology& t, BoxId b) {
  std::vector<BoxId> out;
  const int n = t.size();
  switch (t.kind()) {
    case TopologyKind::Line:
      for (BoxId next : {b - 1, b + 1}) {
        if (next >= 1 && next <= n) {
          out.push_back(next);
        } else if (t.exits()) {
          out.push_back(kEscape);
        }
      }
      break;
    case TopologyKind::Ring:
      out.push_back(b == 1 ? n : b - 1);
      out.push_back(b == n ? 1 : b + 1);
      break;
    case TopologyKind::Grid2xM: {
      const int m = n;
      const bool upper = b <= m;
      const int col = upper ? b : b - m;
      const int row_base = upper ? 0 : m;
      for (int c : {col - 1, col + 1}) {
        if (c >= 1 && c <= m) {
          out.push_back(row_base + c);
        } else if (t.exits()) {
          out.push_back(kEscape);
        }
      }
      out.push_back(upper ? b + m : b - m);
      if (t.exits()) out.push_back(kEscape);  // the outward vertical side
      break;
    }
  }
  return out;
}

}  // namespace

Topology Topology::build(TopologyKind kind, int size, bool exits) {
  if (size < 2) throw std::invalid_argument("topology size must be at least 2");
  if (kind == TopologyKind::Ring && exits) throw std::invalid_argument("rings have no exits");
  return Topology(kind, size, exits);
}

Topology Topology::parse(std::string_view spec) {
  const auto parts = split(spec, ':');
  if (parts.size() < 2 || parts.size() > 3) {
    throw std::invalid_argument("topology must look like 'line:5[:exits]', got '" + std::string(spec) + "'");
  }
  bool exits = false;
  if (parts.size() == 3) {
    if (parts[2] != "exits") throw std::invalid_argument("unknown topology flag '" + std::string(parts[2]) + "'");
    exits = true;
  }
  if (parts[0] == "line") return build(TopologyKind::Line, parse_positive(parts[1], spec), exits);
  if (parts[0] == "ring") return build(TopologyKind::Ring, parse_positive(parts[1], spec), exits);
  if (parts[0] == "grid") {
    const auto dims = parts[1];
    if (dims.size() < 3 || dims.substr(0, 2) != "2x") {
      throw std::invalid_argument("grid size must be '2xM', got '" + std::string(dims) + "'");
    }
    return build(TopologyKind::Grid2xM, parse_positive(dims.substr(2), spec), exits);
  }
  throw std::invalid_argument("unknown topology kind '" + std::string(parts[0]) + "'");
}

std::string Topology::spec() const {
  std::string out;
  switch (kind_) {
    case TopologyKind::Line: out = "line:" + std::to_string(size_); break;
    case TopologyKind::Ring: out = "ring:" + std::to_string(size_); break;
    case TopologyKind::Grid2xM: out = "grid:2x" + std::to_string(size_); break;
  }
  if (exits_) out += ":exits";
  return out;
}

Rational MoveKernel::escape_probability(BoxId b) const {
  Rational p = 0;
  for (const auto& m : from(b)) {
    if (m.to == kEscape) p += m.probability;
  }
  return p;
}

long MoveKernel::common_denominator() const {
  long lcm = 1;
  for (const auto& row : rows_) {
    for (const auto& m : row) lcm = std::lcm(lcm, m.probability.get_den().get_si());
  }
  return lcm;
}

MoveKernel move_kernel(const Topology& t) {
  std::vector<std::vector<Move>> rows;
  rows.reserve(static_cast<std::size_t>(t.boxes()));
  for (BoxId b = 1; b <= t.boxes(); ++b) {
    const auto dirs = directions(t, b);
    const Rational each(1, static_cast<unsigned long>(dirs.size()));
    // merge repeated destinations (two-box ring, several exit sides)
    std::map<BoxId, Rational> merged;
    for (BoxId d : dirs) merged[d] += each;
    std::vector<Move> row;
    for (auto& [to, p] : merged) {
      if (to != kEscape) row.push_back({to, p});
    }
    if (auto it = merged.find(kEscape); it != merged.end()) row.push_back({kEscape, it->second});
    rows.push_back(std::move(row));
  }
  return MoveKernel(std::move(rows));
}

std::vector<Permutation> symmetries(const Topology& t) {
  const int n = t.boxes();
  std::vector<Permutation> out;
  auto add = [&](const Permutation& p) {
    if (std::find(out.begin(), out.end(), p) == out.end()) out.push_back(p);
  };
  Permutation id(static_cast<std::size_t>(n) + 1);
  std::iota(id.begin(), id.end(), 0);
  add(id);

  switch (t.kind()) {
    case TopologyKind::Line: {
      Permutation mirror(id.size(), 0);
      for (BoxId b = 1; b <= n; ++b) mirror[static_cast<std::size_t>(b)] = n + 1 - b;
      add(mirror);
      break;
    }
    case TopologyKind::Ring: {
      for (int shift = 0; shift < n; ++shift) {
        Permutation rot(id.size(), 0), refl(id.size(), 0);
        for (BoxId b = 1; b <= n; ++b) {
          rot[static_cast<std::size_t>(b)] = (b - 1 + shift) % n + 1;
          refl[static_cast<std::size_t>(b)] = ((shift - (b - 1)) % n + n) % n + 1;
        }
        add(rot);
        add(refl);
      }
      break;
    }
    case TopologyKind::Grid2xM: {
      const int m = t.size();
      for (int flip_h = 0; flip_h < 2; ++flip_h) {
        for (int flip_v = 0; flip_v < 2; ++flip_v) {
          Permutation p(id.size(), 0);
          for (BoxId b = 1; b <= n; ++b) {
            const bool upper = b <= m;
            int col = upper ? b : b - m;
            bool row_upper = upper;
            if (flip_h) col = m + 1 - col;
            if (flip_v) row_upper = !row_upper;
            p[static_cast<std::size_t>(b)] = row_upper ? col : col + m;
          }
          add(p);
        }
      }
      break;
    }
  }
  return out;
}

std::vector<BoxId> orbit_representatives(const Topology& t) {
  const auto group = symmetries(t);
  std::vector<BoxId> reps;
  for (BoxId b = 1; b <= t.boxes(); ++b) {
    bool smallest = true;
    for (const auto& p : group) {
      if (p[static_cast<std::size_t>(b)] < b) {
        smallest = false;
        break;
      }
    }
    if (smallest) reps.push_back(b);
  }
  return reps;
}

}  // namespace catbox
