#include "qhh/presentation.hpp"

#include <algorithm>
#include <sstream>

namespace qhh {

int Quiver::find_vertex(std::string_view id) const {
  auto it = vertex_index.find(std::string(id));
  return it == vertex_index.end() ? -1 : it->second;
}

int Quiver::find_arrow(std::string_view id) const {
  auto it = arrow_index.find(std::string(id));
  return it == arrow_index.end() ? -1 : it->second;
}

int Quiver::add_vertex(std::string id) {
  int idx = num_vertices();
  vertex_index.emplace(id, idx);
  vertices.push_back(std::move(id));
  return idx;
}

int Quiver::add_arrow(std::string id, int source, int target) {
  int idx = num_arrows();
  arrow_index.emplace(id, idx);
  arrows.push_back(Arrow{std::move(id), source, target});
  return idx;
}

Path trivial_path(int vertex) { return Path{vertex, vertex, {}}; }

Path arrow_path(const Quiver& q, int arrow) {
  return Path{q.source(arrow), q.target(arrow), {arrow}};
}

Path path_from_arrows(const Quiver& q, std::vector<int> traversal_order) {
  if (traversal_order.empty()) throw DomainError("path_from_arrows: empty sequence has no endpoints");
  Path p;
  p.source = q.source(traversal_order.front());
  p.target = q.target(traversal_order.back());
  p.arrows = std::move(traversal_order);
  return p;
}

std::optional<Path> concat(const Path& first, const Path& then) {
  if (first.target != then.source) return std::nullopt;
  Path p;
  p.source = first.source;
  p.target = then.target;
  p.arrows.reserve(first.arrows.size() + then.arrows.size());
  p.arrows = first.arrows;
  p.arrows.insert(p.arrows.end(), then.arrows.begin(), then.arrows.end());
  return p;
}

Path subpath(const Quiver& q, const Path& p, int pos, int len) {
  Path out;
  if (len == 0) {
    int v = pos == 0 ? p.source : q.target(p.arrows[pos - 1]);
    return trivial_path(v);
  }
  out.arrows.assign(p.arrows.begin() + pos, p.arrows.begin() + pos + len);
  out.source = q.source(out.arrows.front());
  out.target = q.target(out.arrows.back());
  return out;
}

bool contains_subpath(const Path& haystack, const Path& needle) {
  return count_subpath_occurrences(haystack, needle) > 0;
}

int count_subpath_occurrences(const Path& haystack, const Path& needle) {
  int n = haystack.length(), m = needle.length();
  if (m == 0 || m > n) return 0;
  int count = 0;
  for (int i = 0; i + m <= n; ++i) {
    bool hit = true;
    for (int j = 0; j < m; ++j) {
      if (haystack.arrows[i + j] != needle.arrows[j]) {
        hit = false;
        break;
      }
    }
    if (hit) ++count;
  }
  return count;
}

std::string format_path(const Quiver& q, const Path& p) {
  if (p.trivial()) return "(" + q.vertex_id(p.source) + ")";
  std::string out;
  for (auto it = p.arrows.rbegin(); it != p.arrows.rend(); ++it) {
    if (!out.empty()) out += '.';
    out += q.arrow_id(*it);
  }
  return out;
}

namespace {

struct Token {
  std::string text;
  int column;  // 1-based
};

std::vector<Token> tokenize(const std::string& line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#') break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
    tokens.push_back(Token{line.substr(start, i - start), static_cast<int>(start) + 1});
  }
  return tokens;
}

}  // namespace

Presentation parse_presentation(std::string_view text) {
  Presentation p;
  bool saw_quiver = false;

  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    const std::string& keyword = tokens[0].text;

    if (keyword == "quiver") {
      if (saw_quiver) throw ParseError("more than one quiver declaration", lineno, tokens[0].column);
      if (tokens.size() > 2) throw ParseError("quiver takes at most one name", lineno, tokens[2].column);
      saw_quiver = true;
      if (tokens.size() == 2) p.name = tokens[1].text;
      continue;
    }
    if (!saw_quiver)
      throw ParseError("expected a quiver declaration before '" + keyword + "'", lineno, tokens[0].column);

    if (keyword == "vertex") {
      if (tokens.size() < 2) throw ParseError("vertex needs at least one id", lineno, tokens[0].column);
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (p.quiver.find_vertex(tokens[i].text) >= 0)
          throw ParseError("duplicate vertex id '" + tokens[i].text + "'", lineno, tokens[i].column);
        if (p.quiver.find_arrow(tokens[i].text) >= 0)
          throw ParseError("id '" + tokens[i].text + "' already names an arrow", lineno, tokens[i].column);
        p.quiver.add_vertex(tokens[i].text);
      }
    } else if (keyword == "arrow") {
      if (tokens.size() != 4)
        throw ParseError("arrow needs exactly: id, source vertex, target vertex", lineno, tokens[0].column);
      if (p.quiver.find_arrow(tokens[1].text) >= 0 || p.quiver.find_vertex(tokens[1].text) >= 0)
        throw ParseError("duplicate id '" + tokens[1].text + "'", lineno, tokens[1].column);
      int s = p.quiver.find_vertex(tokens[2].text);
      if (s < 0) throw ParseError("unknown vertex '" + tokens[2].text + "'", lineno, tokens[2].column);
      int t = p.quiver.find_vertex(tokens[3].text);
      if (t < 0) throw ParseError("unknown vertex '" + tokens[3].text + "'", lineno, tokens[3].column);
      p.quiver.add_arrow(tokens[1].text, s, t);
    } else if (keyword == "relation") {
      if (tokens.size() < 2) throw ParseError("relation needs at least one arrow id", lineno, tokens[0].column);
      // Tokens are written in composition order; the rightmost arrow is
      // walked first, so the traversal sequence is the reverse.
      std::vector<int> traversal;
      for (std::size_t i = tokens.size(); i-- > 1;) {
        int a = p.quiver.find_arrow(tokens[i].text);
        if (a < 0) throw ParseError("unknown arrow '" + tokens[i].text + "'", lineno, tokens[i].column);
        traversal.push_back(a);
      }
      Path rel;
      rel.arrows = std::move(traversal);
      rel.source = p.quiver.source(rel.arrows.front());
      rel.target = p.quiver.target(rel.arrows.back());
      p.relations.push_back(std::move(rel));
    } else {
      throw ParseError("unknown directive '" + keyword + "'", lineno, tokens[0].column);
    }
  }
  if (!saw_quiver) throw ParseError("missing quiver declaration", lineno == 0 ? 1 : lineno, 1);
  return p;
}

std::string serialize_presentation(const Presentation& p) {
  std::ostringstream out;
  out << "quiver";
  if (!p.name.empty()) out << ' ' << p.name;
  out << '\n';
  for (const auto& v : p.quiver.vertices) out << "vertex " << v << '\n';
  for (const auto& a : p.quiver.arrows)
    out << "arrow " << a.id << ' ' << p.quiver.vertex_id(a.source) << ' '
        << p.quiver.vertex_id(a.target) << '\n';
  for (const auto& rel : p.relations) {
    out << "relation";
    for (auto it = rel.arrows.rbegin(); it != rel.arrows.rend(); ++it)
      out << ' ' << p.quiver.arrow_id(*it);
    out << '\n';
  }
  return out.str();
}

ValidatedPresentation validate(Presentation p) {
  const Quiver& q = p.quiver;
  if (q.num_vertices() == 0) throw ValidationError("quiver has no vertices");

  for (const auto& rel : p.relations) {
    if (rel.length() < 2)
      throw ValidationError("RelationTooShort: relation " + format_path(q, rel) +
                            " has length " + std::to_string(rel.length()));
    for (std::size_t i = 0; i + 1 < rel.arrows.size(); ++i) {
      if (q.target(rel.arrows[i]) != q.source(rel.arrows[i + 1]))
        throw ValidationError("NonComposableRelation: in " + format_path(q, rel) + ", arrow " +
                              q.arrow_id(rel.arrows[i]) + " does not compose with " +
                              q.arrow_id(rel.arrows[i + 1]));
    }
  }
  for (std::size_t i = 0; i < p.relations.size(); ++i) {
    for (std::size_t j = 0; j < p.relations.size(); ++j) {
      if (i == j) continue;
      if (p.relations[i] == p.relations[j] && i < j)
        throw ValidationError("duplicate relation " + format_path(q, p.relations[i]));
      if (p.relations[i].length() < p.relations[j].length() &&
          contains_subpath(p.relations[j], p.relations[i]))
        throw ValidationError("NonMinimalZ: " + format_path(q, p.relations[i]) +
                              " is a strict subpath of " + format_path(q, p.relations[j]));
    }
  }
  return ValidatedPresentation(std::move(p));
}

namespace {

// Plain union-find, path halving plus union by size.
struct DisjointSet {
  std::vector<int> parent;
  std::vector<int> size;

  explicit DisjointSet(int n) : parent(n), size(n, 1) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (size[a] < size[b]) std::swap(a, b);
    parent[b] = a;
    size[a] += size[b];
  }
};

}  // namespace

ComponentSplit connected_components(const ValidatedPresentation& vp) {
  const Presentation& p = vp.get();
  const Quiver& q = p.quiver;
  DisjointSet ds(q.num_vertices());
  for (const auto& a : q.arrows) ds.unite(a.source, a.target);

  // roots in order of first appearance
  std::vector<int> root_order;
  std::vector<int> comp_of(q.num_vertices(), -1);
  for (int v = 0; v < q.num_vertices(); ++v) {
    int r = ds.find(v);
    if (comp_of[r] < 0) {
      comp_of[r] = static_cast<int>(root_order.size());
      root_order.push_back(r);
    }
    comp_of[v] = comp_of[r];
  }

  int ncomp = static_cast<int>(root_order.size());
  std::vector<Presentation> parts(ncomp);
  std::vector<std::vector<int>> vertex_map(ncomp), arrow_map(ncomp);
  for (int c = 0; c < ncomp; ++c) {
    parts[c].name = p.name.empty() ? "component" + std::to_string(c)
                                   : p.name + "." + std::to_string(c);
    vertex_map[c].assign(q.num_vertices(), -1);
    arrow_map[c].assign(q.num_arrows(), -1);
  }
  if (ncomp == 1) parts[0].name = p.name;

  for (int v = 0; v < q.num_vertices(); ++v) {
    int c = comp_of[v];
    vertex_map[c][v] = parts[c].quiver.add_vertex(q.vertex_id(v));
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    int c = comp_of[q.source(a)];
    arrow_map[c][a] = parts[c].quiver.add_arrow(q.arrow_id(a), vertex_map[c][q.source(a)],
                                                vertex_map[c][q.target(a)]);
  }
  for (const auto& rel : p.relations) {
    int c = comp_of[rel.source];
    Path moved;
    moved.source = vertex_map[c][rel.source];
    moved.target = vertex_map[c][rel.target];
    for (int a : rel.arrows) moved.arrows.push_back(arrow_map[c][a]);
    parts[c].relations.push_back(std::move(moved));
  }

  ComponentSplit split;
  split.components.reserve(ncomp);
  for (auto& part : parts) split.components.push_back(validate(std::move(part)));
  return split;
}

bool is_tree_without_double_arrows(const ValidatedPresentation& vp) {
  const Quiver& q = vp->quiver;
  DisjointSet ds(q.num_vertices());
  int components = q.num_vertices();
  for (const auto& a : q.arrows) {
    if (a.source == a.target) return false;  // self-loop
    if (ds.find(a.source) == ds.find(a.target)) return false;  // closes a cycle
    ds.unite(a.source, a.target);
    --components;
  }
  // acyclic multigraph: each component is a tree, and no unordered endpoint
  // pair can repeat (a repeat would have closed a cycle above)
  (void)components;
  return true;
}

}  // namespace qhh
