// Copyright 2026 The fet Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "fet/ontology.h"

#include <algorithm>
#include <functional>
#include <set>

#include "fet/errors.h"
#include "fet/text.h"

namespace fet {
namespace {

const std::set<std::string, std::less<>> &VagueNames() {
  static const std::set<std::string, std::less<>> names = {
      "entity", "misc", "miscellaneous", "object", "other",
      "others", "stuff", "thing",        "things"};
  return names;
}

// Tarjan's strongly connected components over an adjacency list.
class SccFinder {
 public:
  explicit SccFinder(const std::vector<std::vector<int>> &adj)
      : adj_(adj),
        index_(adj.size(), -1),
        low_(adj.size(), 0),
        on_stack_(adj.size(), false) {}

  std::vector<std::vector<int>> Run() {
    for (int v = 0; v < static_cast<int>(adj_.size()); ++v) {
      if (index_[v] < 0) Visit(v);
    }
    return components_;
  }

 private:
  // Parent chains can be long, so the depth-first search keeps an explicit
  // frame stack instead of recursing.
  void Visit(int root) {
    std::vector<std::pair<int, std::size_t>> frames = {{root, 0}};
    Open(root);
    while (!frames.empty()) {
      auto &[v, next] = frames.back();
      if (next < adj_[v].size()) {
        int w = adj_[v][next++];
        if (index_[w] < 0) {
          Open(w);
          frames.push_back({w, 0});
        } else if (on_stack_[w]) {
          low_[v] = std::min(low_[v], index_[w]);
        }
        continue;
      }
      if (low_[v] == index_[v]) {
        std::vector<int> component;
        int w;
        do {
          w = stack_.back();
          stack_.pop_back();
          on_stack_[w] = false;
          component.push_back(w);
        } while (w != v);
        components_.push_back(std::move(component));
      }
      int finished = v;
      frames.pop_back();
      if (!frames.empty()) {
        int caller = frames.back().first;
        low_[caller] = std::min(low_[caller], low_[finished]);
      }
    }
  }

  void Open(int v) {
    index_[v] = low_[v] = counter_++;
    stack_.push_back(v);
    on_stack_[v] = true;
  }

  const std::vector<std::vector<int>> &adj_;
  std::vector<int> index_;
  std::vector<int> low_;
  std::vector<bool> on_stack_;
  std::vector<int> stack_;
  std::vector<std::vector<int>> components_;
  int counter_ = 0;
};

}  // namespace

std::string NormalizeTypeName(std::string_view name) {
  std::string out = ToLower(Trim(name));
  for (char &c : out) {
    if (c == ' ' || c == '-') c = '_';
  }
  return out;
}

bool IsValidTypeName(std::string_view name) {
  if (name.empty()) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
  });
}

std::string VerbalizeTypeName(std::string_view name) {
  std::string out = ToLower(name);
  std::replace(out.begin(), out.end(), '_', ' ');
  return out;
}

TypePath::TypePath(std::vector<std::string> segments)
    : segments_(std::move(segments)) {
  for (const auto &s : segments_) {
    if (!IsValidTypeName(s)) {
      throw DataError("invalid type name '" + s + "'");
    }
  }
}

TypePath TypePath::Parse(std::string_view text) {
  text = Trim(text);
  if (text.empty() || text.front() != '/') {
    throw DataError("type path must start with '/': '" + std::string(text) +
                    "'");
  }
  std::vector<std::string> segments;
  std::size_t pos = 1;
  while (true) {
    std::size_t slash = text.find('/', pos);
    std::string_view raw = text.substr(
        pos, slash == std::string_view::npos ? std::string_view::npos
                                             : slash - pos);
    if (raw.empty()) {
      throw DataError("empty segment in type path '" + std::string(text) +
                      "'");
    }
    std::string segment = NormalizeTypeName(raw);
    if (!IsValidTypeName(segment)) {
      throw DataError("invalid segment '" + std::string(raw) +
                      "' in type path '" + std::string(text) + "'");
    }
    segments.push_back(std::move(segment));
    if (slash == std::string_view::npos) break;
    pos = slash + 1;
  }
  return TypePath(std::move(segments));
}

std::optional<TypePath> TypePath::Parent() const {
  if (segments_.size() <= 1) return std::nullopt;
  return TypePath(
      std::vector<std::string>(segments_.begin(), segments_.end() - 1));
}

TypePath TypePath::Child(std::string_view segment) const {
  std::vector<std::string> segments = segments_;
  segments.emplace_back(segment);
  return TypePath(std::move(segments));
}

bool TypePath::IsPrefixOf(const TypePath &other) const {
  if (segments_.size() > other.segments_.size()) return false;
  return std::equal(segments_.begin(), segments_.end(),
                    other.segments_.begin());
}

std::vector<TypePath> TypePath::Ancestry() const {
  std::vector<TypePath> out;
  for (std::size_t n = 1; n <= segments_.size(); ++n) {
    out.emplace_back(
        std::vector<std::string>(segments_.begin(), segments_.begin() + n));
  }
  return out;
}

std::string TypePath::ToString() const {
  std::string out;
  for (const auto &s : segments_) {
    out += '/';
    out += s;
  }
  return out;
}

TypeOntology TypeOntology::FromPaths(const std::vector<TypePath> &paths) {
  std::set<TypePath> all;
  for (const auto &p : paths) {
    if (p.empty()) throw DataError("empty type path");
    for (auto &a : p.Ancestry()) all.insert(std::move(a));
  }

  TypeOntology o;
  o.nodes_.reserve(all.size());
  for (const auto &p : all) {
    int idx = static_cast<int>(o.nodes_.size());
    o.nodes_.push_back(TypeNode{p, std::nullopt, {}});
    o.index_.emplace(p, idx);
    o.by_name_.emplace(p.name(), idx);
  }
  // Parents sort before their children, so children lists come out in
  // lexicographic order.
  for (auto &node : o.nodes_) {
    if (auto parent = node.path.Parent()) {
      int pidx = o.index_.at(*parent);
      node.parent = pidx;
      o.nodes_[pidx].children.push_back(o.index_.at(node.path));
    }
  }
  return o;
}

std::vector<TypePath> TypeOntology::Roots() const {
  std::vector<TypePath> roots;
  for (const auto &n : nodes_) {
    if (!n.parent) roots.push_back(n.path);
  }
  return roots;
}

bool TypeOntology::Contains(const TypePath &path) const {
  return index_.count(path) > 0;
}

int TypeOntology::IndexOf(const TypePath &path) const {
  auto it = index_.find(path);
  if (it == index_.end()) {
    throw DataError("unknown type path " + path.ToString());
  }
  return it->second;
}

const TypeNode &TypeOntology::Node(const TypePath &path) const {
  return nodes_[IndexOf(path)];
}

std::vector<TypePath> TypeOntology::Children(const TypePath &path) const {
  std::vector<TypePath> out;
  for (int c : Node(path).children) out.push_back(nodes_[c].path);
  return out;
}

bool TypeOntology::IsDescendantOrEqual(const TypePath &candidate,
                                       const TypePath &ancestor) const {
  IndexOf(candidate);
  IndexOf(ancestor);
  return ancestor.IsPrefixOf(candidate);
}

std::vector<TypePath> TypeOntology::FindByName(std::string_view name) const {
  std::vector<TypePath> out;
  auto [b, e] = by_name_.equal_range(name);
  for (auto it = b; it != e; ++it) out.push_back(nodes_[it->second].path);
  std::sort(out.begin(), out.end());
  return out;
}

TypeOntology ParseOntology(std::string_view text) {
  std::vector<TypePath> paths;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(
        pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = Trim(line);
    if (!line.empty()) {
      try {
        paths.push_back(TypePath::Parse(line));
      } catch (const DataError &e) {
        throw DataError("line " + std::to_string(line_no) + ": " + e.what());
      }
    }
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return TypeOntology::FromPaths(paths);
}

TypeOntology LoadOntology(const std::string &path) {
  std::string text = ReadFile(path);
  try {
    return ParseOntology(text);
  } catch (const DataError &e) {
    throw DataError(path + ": " + e.what());
  }
}

TypeGraph TypeGraph::FromOntology(const TypeOntology &ontology) {
  TypeGraph g;
  for (const auto &n : ontology.nodes()) {
    std::optional<std::string> parent;
    if (n.parent) parent = ontology.nodes()[*n.parent].name();
    g.edges.push_back({n.name(), std::move(parent)});
  }
  return g;
}

const char *RuleName(Violation::Rule rule) {
  switch (rule) {
    case Violation::Rule::kMultiParent:
      return "multi_parent";
    case Violation::Rule::kCycle:
      return "cycle";
    case Violation::Rule::kVagueType:
      return "vague_type";
  }
  return "unknown";
}

std::vector<Violation> ValidateGraph(const TypeGraph &graph) {
  std::map<std::string, int> ids;
  std::vector<std::string> names;
  auto id_of = [&](const std::string &name) {
    auto [it, inserted] = ids.emplace(name, static_cast<int>(names.size()));
    if (inserted) names.push_back(name);
    return it->second;
  };

  std::map<int, std::set<std::optional<std::string>>> parents;
  for (const auto &e : graph.edges) {
    int c = id_of(e.child);
    parents[c].insert(e.parent);
    if (e.parent) id_of(*e.parent);
  }
  // Undeclared parents are implied roots.
  for (int v = 0; v < static_cast<int>(names.size()); ++v) {
    if (!parents.count(v)) parents[v].insert(std::nullopt);
  }

  std::vector<std::vector<int>> adj(names.size());
  for (const auto &[v, ps] : parents) {
    for (const auto &p : ps) {
      if (p) adj[v].push_back(ids.at(*p));
    }
  }

  std::vector<Violation> out;
  for (const auto &[v, ps] : parents) {
    if (ps.size() < 2) continue;
    std::string detail = "parents:";
    for (const auto &p : ps) detail += " " + (p ? *p : std::string("<root>"));
    out.push_back({Violation::Rule::kMultiParent, names[v], detail});
  }

  for (auto &component : SccFinder(adj).Run()) {
    bool cyclic = component.size() > 1;
    if (!cyclic) {
      int v = component[0];
      cyclic = std::find(adj[v].begin(), adj[v].end(), v) != adj[v].end();
    }
    if (!cyclic) continue;
    std::vector<std::string> members;
    for (int v : component) members.push_back(names[v]);
    std::sort(members.begin(), members.end());
    std::string detail = "cycle through:";
    for (const auto &m : members) detail += " " + m;
    out.push_back({Violation::Rule::kCycle, members.front(), detail});
  }

  std::sort(out.begin(), out.end(), [](const Violation &a, const Violation &b) {
    return std::tie(a.rule, a.node) < std::tie(b.rule, b.node);
  });
  return out;
}

std::vector<Violation> ValidateOntology(const TypeOntology &ontology) {
  std::vector<Violation> out = ValidateGraph(TypeGraph::FromOntology(ontology));
  std::set<std::string> flagged;
  for (const auto &n : ontology.nodes()) {
    if (VagueNames().count(n.name()) && flagged.insert(n.name()).second) {
      out.push_back({Violation::Rule::kVagueType, n.name(),
                     "vague catch-all type at " + n.path.ToString()});
    }
  }
  return out;
}

}  // namespace fet
