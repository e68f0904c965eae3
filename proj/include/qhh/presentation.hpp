#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qhh/errors.hpp"

namespace qhh {

struct Arrow {
  std::string id;
  int source = -1;
  int target = -1;
};

// Finite quiver.  Vertices and arrows keep their declared ids; everything
// downstream addresses them by dense index.
struct Quiver {
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::unordered_map<std::string, int> vertex_index;
  std::unordered_map<std::string, int> arrow_index;

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_arrows() const { return static_cast<int>(arrows.size()); }
  int source(int arrow) const { return arrows[arrow].source; }
  int target(int arrow) const { return arrows[arrow].target; }
  const std::string& vertex_id(int v) const { return vertices[v]; }
  const std::string& arrow_id(int a) const { return arrows[a].id; }

  // -1 when absent
  int find_vertex(std::string_view id) const;
  int find_arrow(std::string_view id) const;

  int add_vertex(std::string id);
  int add_arrow(std::string id, int source, int target);
};

// A path stores its arrows in traversal order: arrows.front() leaves source,
// arrows.back() enters target.  Files and printed output use composition
// order instead (the last walked arrow is written leftmost), so formatting
// and parsing reverse the sequence.  A trivial path has no arrows and
// source == target.
struct Path {
  int source = -1;
  int target = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  bool is_cycle() const { return source == target; }

  friend bool operator==(const Path&, const Path&) = default;
  friend auto operator<=>(const Path&, const Path&) = default;
};

struct PathHash {
  std::size_t operator()(const Path& p) const {
    std::size_t h = static_cast<std::size_t>(p.source) * 0x9e3779b97f4a7c15ULL;
    for (int a : p.arrows) h = h * 1099511628211ULL + static_cast<std::size_t>(a) + 1;
    return h;
  }
};

Path trivial_path(int vertex);
Path arrow_path(const Quiver& q, int arrow);
Path path_from_arrows(const Quiver& q, std::vector<int> traversal_order);

// Walk `first`, then `then`.  Empty when the endpoints do not meet.
std::optional<Path> concat(const Path& first, const Path& then);

// Contiguous piece of `p` starting at traversal offset `pos`.
Path subpath(const Quiver& q, const Path& p, int pos, int len);

bool contains_subpath(const Path& haystack, const Path& needle);
int count_subpath_occurrences(const Path& haystack, const Path& needle);

// Composition-order rendering, e.g. "a3.a2.a1.a0"; trivial paths as "(u)".
std::string format_path(const Quiver& q, const Path& p);

struct Presentation {
  std::string name;
  Quiver quiver;
  std::vector<Path> relations;  // the set Z
};

// Only validate() hands these out; holding one certifies that relations are
// composable, of length >= 2, duplicate-free and minimal under the subpath
// order.
class ValidatedPresentation {
 public:
  const Presentation& get() const { return p_; }
  const Presentation& operator*() const { return p_; }
  const Presentation* operator->() const { return &p_; }

 private:
  explicit ValidatedPresentation(Presentation p) : p_(std::move(p)) {}
  friend ValidatedPresentation validate(Presentation p);
  Presentation p_;
};

// Presentation file format (one quiver per file, '#' starts a comment):
//   quiver <name>
//   vertex <id> [<id> ...]
//   arrow <id> <source-vertex> <target-vertex>
//   relation <arrow-id> <arrow-id> ...
// Relation arrows are written in composition order: the leftmost arrow is
// walked last.  There is no alternate order.
Presentation parse_presentation(std::string_view text);
std::string serialize_presentation(const Presentation& p);

ValidatedPresentation validate(Presentation p);

struct ComponentSplit {
  std::vector<ValidatedPresentation> components;
};

// Partition by undirected connectivity; every relation lands in the
// component owning its vertices.
ComponentSplit connected_components(const ValidatedPresentation& p);

// True iff every component's underlying undirected multigraph is a tree and
// no two arrows share an unordered endpoint pair.
bool is_tree_without_double_arrows(const ValidatedPresentation& p);

}  // namespace qhh
