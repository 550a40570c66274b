#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "wbptree/error.hpp"
#include "wbptree/passport.hpp"

// Ground truth by exhaustive search: every weighted bicoloured plane tree
// with a given passport, one per orientation-preserving equivalence class.

namespace wbp::oracle {

/// Default limit on the number of points the generator will accept.
inline constexpr std::size_t kDefaultMaxPoints = 16;

struct Vertex {
  Color color;
  LabeledWeight type;  // type.weight is the vertex weight
};

struct Edge {
  std::array<std::size_t, 2> ends;
  Weight weight;
};

/// A bipartite plane tree with positive edge weights. rotation()[v] lists
/// the edges at v in counterclockwise order.
class WbpTree {
 public:
  WbpTree(std::vector<Vertex> vertices, std::vector<Edge> edges,
          std::vector<std::vector<std::size_t>> rotation)
      : vertices_(std::move(vertices)),
        edges_(std::move(edges)),
        rotation_(std::move(rotation)) {
    validate();
  }

  const std::vector<Vertex>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<std::vector<std::size_t>>& rotation() const { return rotation_; }

  std::size_t other_end(std::size_t e, std::size_t v) const {
    return edges_[e].ends[0] == v ? edges_[e].ends[1] : edges_[e].ends[0];
  }

  Passport passport() const {
    std::vector<LabeledWeight> black, white;
    for (const auto& v : vertices_) {
      (v.color == Color::black ? black : white).push_back(v.type);
    }
    return Passport(std::move(black), std::move(white));
  }

 private:
  [[noreturn]] static void invalid(const std::string& why) {
    throw DomainError("invalid tree: " + why);
  }

  void validate() const {
    const std::size_t n = vertices_.size();
    if (n < 2) invalid("fewer than two vertices");
    if (edges_.size() != n - 1) invalid("edge count is not vertex count - 1");
    if (rotation_.size() != n) invalid("rotation system size mismatch");
    std::vector<std::vector<std::size_t>> incident(n);
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const auto [a, b] = edges_[e].ends;
      if (a >= n || b >= n) invalid("edge endpoint out of range");
      if (vertices_[a].color == vertices_[b].color) invalid("edge joins equal colours");
      if (edges_[e].weight == 0) invalid("zero edge weight");
      incident[a].push_back(e);
      incident[b].push_back(e);
    }
    for (std::size_t v = 0; v < n; ++v) {
      auto sorted = rotation_[v];
      std::sort(sorted.begin(), sorted.end());
      if (sorted != incident[v]) invalid("rotation at a vertex is not its edge set");
      Weight sum = 0;
      for (std::size_t e : incident[v]) sum += edges_[e].weight;
      if (sum != vertices_[v].type.weight) invalid("vertex weight != incident edge weights");
    }
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> stack{0};
    seen[0] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
      const std::size_t v = stack.back();
      stack.pop_back();
      for (std::size_t e : incident[v]) {
        const std::size_t u = other_end(e, v);
        if (!seen[u]) {
          seen[u] = 1;
          ++reached;
          stack.push_back(u);
        }
      }
    }
    if (reached != n) invalid("not connected");
  }

  std::vector<Vertex> vertices_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> rotation_;
};

/// One step of the boundary walk: the edge side leaving `from` along an
/// edge of weight `edge_weight`. `partner_offset` is the cyclic distance to
/// the opposite side of the same edge, which pins down the plane structure
/// independently of where the walk starts.
struct CodeSymbol {
  std::uint32_t partner_offset;
  Color from_color;
  LabeledWeight from_type;
  Weight edge_weight;

  auto operator<=>(const CodeSymbol&) const = default;
};

/// Lexicographically least rotation of the boundary-walk encoding.
struct CanonicalCode {
  std::vector<CodeSymbol> code;
  std::size_t period = 0;  // least cyclic period of code

  /// Size of the rotation group: number of edge sides / period.
  std::size_t symmetry_order() const { return code.size() / period; }

  bool operator==(const CanonicalCode& o) const { return code == o.code; }
  auto operator<=>(const CanonicalCode& o) const { return code <=> o.code; }

  std::string to_string() const {
    std::string s;
    for (const auto& c : code) {
      if (!s.empty()) s += '.';
      s += std::to_string(c.partner_offset);
      s += c.from_color == Color::black ? 'B' : 'W';
      s += std::to_string(c.from_type.weight);
      const Label& l = c.from_type.label;
      if (l.star) {
        s += "_*";
      } else if (l.value != 0 || l.index != 0) {
        s += "_" + std::to_string(l.value);
        if (l.index != 0) s += ":" + std::to_string(l.index);
      }
      s += 'e' + std::to_string(c.edge_weight);
    }
    return s;
  }
};

namespace detail {

/// Source vertex of each edge side in boundary-walk order, plus the
/// walk-order position of each edge's two sides.
struct BoundaryWalk {
  std::vector<std::size_t> source;
  std::vector<std::size_t> edge;
  std::vector<std::size_t> partner;
};

inline BoundaryWalk boundary_walk(const WbpTree& t) {
  const std::size_t m = t.edges().size();
  const std::size_t n = t.vertices().size();
  // Position of each edge within the rotation at each of its ends.
  std::vector<std::array<std::size_t, 2>> slot(m);
  for (std::size_t v = 0; v < n; ++v) {
    const auto& rot = t.rotation()[v];
    for (std::size_t i = 0; i < rot.size(); ++i) {
      slot[rot[i]][t.edges()[rot[i]].ends[0] == v ? 0 : 1] = i;
    }
  }
  BoundaryWalk walk;
  walk.source.reserve(2 * m);
  walk.edge.reserve(2 * m);
  std::vector<std::array<std::size_t, 2>> seen_at(m, {SIZE_MAX, SIZE_MAX});
  std::size_t v = t.edges()[0].ends[0];
  std::size_t e = 0;
  for (std::size_t step = 0; step < 2 * m; ++step) {
    const int side = t.edges()[e].ends[0] == v ? 0 : 1;
    if (seen_at[e][side] != SIZE_MAX) {
      throw ConsistencyError("boundary walk revisited an edge side");
    }
    seen_at[e][side] = step;
    walk.source.push_back(v);
    walk.edge.push_back(e);
    const std::size_t u = t.other_end(e, v);
    const auto& rot = t.rotation()[u];
    const std::size_t at = slot[e][side == 0 ? 1 : 0];
    e = rot[(at + 1) % rot.size()];
    v = u;
  }
  walk.partner.resize(2 * m);
  for (std::size_t i = 0; i < m; ++i) {
    walk.partner[seen_at[i][0]] = seen_at[i][1];
    walk.partner[seen_at[i][1]] = seen_at[i][0];
  }
  return walk;
}

inline std::size_t least_rotation(const std::vector<CodeSymbol>& s) {
  const std::size_t n = s.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      const auto& a = s[(k + i) % n];
      const auto& b = s[(best + i) % n];
      if (a == b) continue;
      if (a < b) best = k;
      break;
    }
  }
  return best;
}

inline std::size_t least_period(const std::vector<CodeSymbol>& s) {
  const std::size_t n = s.size();
  for (std::size_t k = 1; k <= n; ++k) {
    if (n % k != 0) continue;
    bool ok = true;
    for (std::size_t i = 0; ok && i < n; ++i) ok = s[i] == s[(i + k) % n];
    if (ok) return k;
  }
  return n;
}

}  // namespace detail

/// Canonical form of t. `vertex_labels`, when non-empty, replaces the label
/// of every vertex (used to compare labellings of one shape).
inline CanonicalCode canonical_code(const WbpTree& t,
                                    std::span<const Label> vertex_labels = {}) {
  const auto walk = detail::boundary_walk(t);
  const std::size_t len = walk.source.size();
  std::vector<CodeSymbol> raw(len);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t v = walk.source[i];
    LabeledWeight type = t.vertices()[v].type;
    if (!vertex_labels.empty()) type.label = vertex_labels[v];
    raw[i] = CodeSymbol{
        static_cast<std::uint32_t>((walk.partner[i] + len - i) % len),
        t.vertices()[v].color, type, t.edges()[walk.edge[i]].weight};
  }
  const std::size_t start = detail::least_rotation(raw);
  CanonicalCode c;
  c.code.reserve(len);
  for (std::size_t i = 0; i < len; ++i) c.code.push_back(raw[(start + i) % len]);
  c.period = detail::least_period(c.code);
  return c;
}

/// Order of the (cyclic) automorphism group of t. The shift of the boundary
/// walk by one period is turned back into a vertex map and checked to be a
/// rotation about a single fixed vertex.
inline std::size_t aut_order(const WbpTree& t) {
  const CanonicalCode c = canonical_code(t);
  const std::size_t order = c.symmetry_order();
  if (order == 1) return 1;
  const auto walk = detail::boundary_walk(t);
  const std::size_t len = walk.source.size();
  const std::size_t n = t.vertices().size();
  std::vector<std::size_t> image(n, SIZE_MAX);
  for (std::size_t i = 0; i < len; ++i) {
    const std::size_t from = walk.source[i];
    const std::size_t to = walk.source[(i + c.period) % len];
    if (image[from] != SIZE_MAX && image[from] != to) {
      throw ConsistencyError("walk shift does not induce a vertex map");
    }
    image[from] = to;
  }
  std::size_t fixed = 0;
  for (std::size_t v = 0; v < n; ++v) {
    const auto& a = t.vertices()[v];
    const auto& b = t.vertices()[image[v]];
    if (a.color != b.color || a.type != b.type) {
      throw ConsistencyError("walk shift does not preserve vertex types");
    }
    fixed += image[v] == v ? 1 : 0;
  }
  if (fixed != 1) {
    throw ConsistencyError("symmetry of order " + std::to_string(order) +
                           " is not a rotation about one vertex");
  }
  return order;
}

namespace detail {

class TreeGenerator {
 public:
  TreeGenerator(const Passport& xi) {
    for (const auto& g : groups(xi)) {
      auto& side = sides_[index(g.color)];
      side.types.push_back(g.entry);
      side.left.push_back(g.multiplicity);
      side.unused += g.multiplicity;
      side.unused_weight += g.entry.weight * g.multiplicity;
    }
    // Root at the rarest type: every tree has at least one such vertex.
    for (Color c : {Color::black, Color::white}) {
      const auto& side = sides_[index(c)];
      for (std::size_t i = 0; i < side.types.size(); ++i) {
        const bool better =
            !root_found_ || side.left[i] < root_mult_ ||
            (side.left[i] == root_mult_ && side.types[i].weight > root_weight_);
        if (better) {
          root_found_ = true;
          root_color_ = c;
          root_type_ = i;
          root_mult_ = side.left[i];
          root_weight_ = side.types[i].weight;
        }
      }
    }
  }

  std::map<CanonicalCode, WbpTree> run() {
    if (!root_found_) return {};
    place_root();
    if (feasible()) step();
    return std::move(found_);
  }

 private:
  struct Side {
    std::vector<LabeledWeight> types;
    std::vector<std::uint64_t> left;
    std::uint64_t unused = 0;
    Weight unused_weight = 0;
    Weight open_residual = 0;
  };

  struct Node {
    Color color;
    LabeledWeight type;
    std::size_t parent;
    Weight parent_weight;
    std::vector<std::size_t> children;
  };

  static std::size_t index(Color c) { return c == Color::black ? 0 : 1; }

  void place_root() {
    Side& side = sides_[index(root_color_)];
    const LabeledWeight type = side.types[root_type_];
    --side.left[root_type_];
    --side.unused;
    side.unused_weight -= type.weight;
    side.open_residual += type.weight;
    nodes_.push_back(Node{root_color_, type, SIZE_MAX, 0, {}});
    tasks_.push_back({0, type.weight});
  }

  bool feasible() const {
    const Side& b = sides_[0];
    const Side& w = sides_[1];
    const std::uint64_t edges_left = b.unused + w.unused;
    const Weight weight_left = b.open_residual + b.unused_weight;
    if (weight_left < edges_left) return false;
    if (edges_left == 0 && weight_left != 0) return false;
    if (b.open_residual > 0 && w.unused == 0) return false;
    if (w.open_residual > 0 && b.unused == 0) return false;
    return true;
  }

  void step() {
    if (tasks_.empty()) {
      if (sides_[0].unused == 0 && sides_[1].unused == 0) emit();
      return;
    }
    const auto [v, residual] = tasks_.back();
    if (residual == 0) {
      tasks_.pop_back();
      step();
      tasks_.push_back({v, 0});
      return;
    }
    const Color child_color = opposite(nodes_[v].color);
    Side& parent_side = sides_[index(nodes_[v].color)];
    Side& child_side = sides_[index(child_color)];
    for (Weight w = 1; w <= residual; ++w) {
      for (std::size_t t = 0; t < child_side.types.size(); ++t) {
        if (child_side.left[t] == 0) continue;
        const LabeledWeight type = child_side.types[t];
        if (type.weight < w) continue;
        const std::size_t u = nodes_.size();
        nodes_.push_back(Node{child_color, type, v, w, {}});
        nodes_[v].children.push_back(u);
        --child_side.left[t];
        --child_side.unused;
        child_side.unused_weight -= type.weight;
        child_side.open_residual += type.weight - w;
        parent_side.open_residual -= w;
        tasks_.back().second = residual - w;
        tasks_.push_back({u, type.weight - w});

        if (feasible()) step();

        tasks_.pop_back();
        tasks_.back().second = residual;
        parent_side.open_residual += w;
        child_side.open_residual -= type.weight - w;
        child_side.unused_weight += type.weight;
        ++child_side.unused;
        ++child_side.left[t];
        nodes_[v].children.pop_back();
        nodes_.pop_back();
      }
    }
  }

  void emit() {
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    std::vector<std::vector<std::size_t>> rotation(nodes_.size());
    for (const auto& node : nodes_) vertices.push_back(Vertex{node.color, node.type});
    // Edge u-1 joins node u to its parent.
    for (std::size_t u = 1; u < nodes_.size(); ++u) {
      const auto& node = nodes_[u];
      edges.push_back(Edge{{node.parent, u}, node.parent_weight});
      if (node.color == Color::white) std::swap(edges.back().ends[0], edges.back().ends[1]);
    }
    for (std::size_t u = 0; u < nodes_.size(); ++u) {
      if (u != 0) rotation[u].push_back(u - 1);
      for (std::size_t c : nodes_[u].children) rotation[u].push_back(c - 1);
    }
    WbpTree tree(std::move(vertices), std::move(edges), std::move(rotation));
    CanonicalCode code = canonical_code(tree);
    found_.try_emplace(std::move(code), std::move(tree));
  }

  std::array<Side, 2> sides_;
  bool root_found_ = false;
  Color root_color_ = Color::black;
  std::size_t root_type_ = 0;
  std::uint64_t root_mult_ = 0;
  Weight root_weight_ = 0;
  std::vector<Node> nodes_;
  std::vector<std::pair<std::size_t, Weight>> tasks_;
  std::map<CanonicalCode, WbpTree> found_;
};

inline void require_enumerable(const Passport& xi, std::size_t max_points) {
  if (xi.black().empty() || xi.white().empty()) {
    throw DomainError("passport '" + to_string(xi) + "' has an empty side");
  }
  if (!xi.is_balanced()) {
    throw DomainError("passport '" + to_string(xi) + "' is not balanced");
  }
  if (xi.size() > max_points) {
    throw BoundExceeded("passport '" + to_string(xi) + "' has " +
                        std::to_string(xi.size()) + " points, above the bound " +
                        std::to_string(max_points));
  }
}

}  // namespace detail

/// Every tree with passport xi, one per equivalence class, sorted by
/// canonical code. Labels (including a star) distinguish vertex types.
inline std::vector<WbpTree> enumerate_trees(const Passport& xi,
                                            std::size_t max_points = kDefaultMaxPoints) {
  detail::require_enumerable(xi, max_points);
  auto found = detail::TreeGenerator(xi).run();
  std::vector<WbpTree> out;
  out.reserve(found.size());
  for (auto& [code, tree] : found) out.push_back(std::move(tree));
  return out;
}

/// Number of trees per automorphism order; only occurring orders appear.
using SymmetryCensus = std::map<std::size_t, std::uint64_t>;

inline SymmetryCensus symmetry_census(const Passport& xi,
                                      std::size_t max_points = kDefaultMaxPoints) {
  SymmetryCensus census;
  for (const auto& t : enumerate_trees(xi, max_points)) ++census[aut_order(t)];
  return census;
}

/// Labelled trees with a simple passport, grouped by the automorphism order
/// of the underlying unlabelled shape. Counted directly: each shape of the
/// collapsed passport gets every compatible assignment of the simple
/// labels, and assignments are compared by canonical code.
inline SymmetryCensus labeled_census(const Passport& simple,
                                     std::size_t max_points = kDefaultMaxPoints) {
  if (!is_simple(simple)) throw DomainError("labeled_census needs a simple passport");
  const Passport base = collapse_fill_labels(simple);
  detail::require_enumerable(base, max_points);

  // Full labels available for each (colour, collapsed type).
  std::map<std::pair<Color, LabeledWeight>, std::vector<Label>> pool;
  for (Color c : {Color::black, Color::white}) {
    for (const auto& e : simple.side(c)) {
      pool[{c, LabeledWeight{e.weight, e.label.base()}}].push_back(e.label);
    }
  }

  SymmetryCensus census;
  for (const auto& shape : enumerate_trees(base, max_points)) {
    struct Slot {
      std::vector<std::size_t> vertices;
      std::vector<Label> labels;
    };
    std::vector<Slot> slots;
    std::map<std::pair<Color, LabeledWeight>, std::size_t> slot_of;
    for (std::size_t v = 0; v < shape.vertices().size(); ++v) {
      const auto key = std::make_pair(shape.vertices()[v].color, shape.vertices()[v].type);
      auto [it, inserted] = slot_of.try_emplace(key, slots.size());
      if (inserted) slots.push_back(Slot{{}, pool.at(key)});
      slots[it->second].vertices.push_back(v);
    }
    for (auto& s : slots) {
      if (s.vertices.size() != s.labels.size()) {
        throw ConsistencyError("shape does not match the collapsed passport");
      }
      std::sort(s.labels.begin(), s.labels.end());
    }

    std::vector<Label> assignment(shape.vertices().size());
    std::set<CanonicalCode> distinct;
    // Odometer over one permutation per slot.
    while (true) {
      for (const auto& s : slots) {
        for (std::size_t i = 0; i < s.vertices.size(); ++i) {
          assignment[s.vertices[i]] = s.labels[i];
        }
      }
      distinct.insert(canonical_code(shape, assignment));
      std::size_t k = 0;
      while (k < slots.size() &&
             !std::next_permutation(slots[k].labels.begin(), slots[k].labels.end())) {
        ++k;
      }
      if (k == slots.size()) break;
    }
    census[aut_order(shape)] += distinct.size();
  }
  return census;
}

/// Total number of labelled trees with a simple passport, by direct count.
inline std::uint64_t count_labeled_direct(const Passport& simple,
                                          std::size_t max_points = kDefaultMaxPoints) {
  std::uint64_t total = 0;
  for (const auto& [order, n] : labeled_census(simple, max_points)) total += n;
  return total;
}

}  // namespace wbp::oracle
