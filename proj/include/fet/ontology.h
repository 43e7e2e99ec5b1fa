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

#ifndef FET_ONTOLOGY_H_
#define FET_ONTOLOGY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace fet {

// A slash-delimited type path such as /location/building/stadium. Segments
// are lowercase and match [a-z0-9_]+.
class TypePath {
 public:
  TypePath() = default;

  // Throws DataError on an invalid segment.
  explicit TypePath(std::vector<std::string> segments);

  // Parses the canonical form "/a/b/c". Segment names are lowercased and
  // inner spaces or hyphens become underscores before validation.
  static TypePath Parse(std::string_view text);

  const std::vector<std::string> &segments() const { return segments_; }
  int depth() const { return static_cast<int>(segments_.size()); }
  bool empty() const { return segments_.empty(); }

  // Last segment.
  const std::string &name() const { return segments_.back(); }

  // Parent path, or nullopt for a first-level type.
  std::optional<TypePath> Parent() const;

  TypePath Child(std::string_view segment) const;

  // True iff this path's segments are a prefix of `other` (or equal).
  bool IsPrefixOf(const TypePath &other) const;

  // All prefixes from the root down to this path, inclusive.
  std::vector<TypePath> Ancestry() const;

  std::string ToString() const;

  bool operator==(const TypePath &other) const = default;
  // Segment-wise lexicographic order; identical to ordering by ToString()
  // because '/' sorts before every legal segment character.
  auto operator<=>(const TypePath &other) const = default;

 private:
  std::vector<std::string> segments_;
};

// Normalizes a type name: lowercase, spaces and hyphens to underscores.
std::string NormalizeTypeName(std::string_view name);
bool IsValidTypeName(std::string_view name);

// Verbalized form used in hypotheses: underscores to spaces.
std::string VerbalizeTypeName(std::string_view name);

struct TypeNode {
  TypePath path;
  std::optional<int> parent;
  std::vector<int> children;  // indices, lexicographic by path

  const std::string &name() const { return path.name(); }
  int depth() const { return path.depth(); }
};

// Immutable forest of type nodes. Nodes are identified by their full path
// and stored in lexicographic path order.
class TypeOntology {
 public:
  TypeOntology() = default;

  // Builds the ontology from a set of paths; implied ancestors are added.
  static TypeOntology FromPaths(const std::vector<TypePath> &paths);

  const std::vector<TypeNode> &nodes() const { return nodes_; }
  std::size_t size() const { return nodes_.size(); }

  // First-level types in lexicographic order.
  std::vector<TypePath> Roots() const;

  bool Contains(const TypePath &path) const;

  // Throws DataError for an unknown path.
  const TypeNode &Node(const TypePath &path) const;

  // Direct children of `path`. Throws DataError for an unknown path.
  std::vector<TypePath> Children(const TypePath &path) const;

  // True iff `ancestor` is a prefix of `candidate` (equality included).
  // Throws DataError when either path is unknown.
  bool IsDescendantOrEqual(const TypePath &candidate,
                           const TypePath &ancestor) const;

  // Every node whose last segment equals `name`.
  std::vector<TypePath> FindByName(std::string_view name) const;

 private:
  int IndexOf(const TypePath &path) const;

  std::vector<TypeNode> nodes_;
  std::map<TypePath, int> index_;
  std::multimap<std::string, int, std::less<>> by_name_;
};

// Parses the ontology text format: one path per line, '#' comments, blank
// lines ignored, duplicates idempotent. Errors carry the 1-based line number.
TypeOntology ParseOntology(std::string_view text);
TypeOntology LoadOntology(const std::string &path);

// Name-level view of an ontology used for structural validation. Each
// declaration states that `child` sits under `parent` (nullopt for a root).
// Parents that are never declared are treated as roots.
struct TypeGraph {
  struct Edge {
    std::string child;
    std::optional<std::string> parent;
  };
  std::vector<Edge> edges;

  // One edge per node of the ontology, keyed by type name rather than path.
  static TypeGraph FromOntology(const TypeOntology &ontology);
};

struct Violation {
  enum class Rule {
    kMultiParent,  // a type has more than one distinct parent
    kCycle,        // a type lies on a parent cycle
    kVagueType,    // advisory: vague catch-all type name
  };

  Rule rule;
  std::string node;
  std::string detail;

  bool hard() const { return rule != Rule::kVagueType; }
  bool operator==(const Violation &other) const = default;
};

const char *RuleName(Violation::Rule rule);

// Structural checks. Reports one kMultiParent violation per node with two or
// more distinct parents (being a root counts as one), and one kCycle
// violation per strongly connected component of the child->parent graph that
// contains a cycle, named after its lexicographically smallest member.
// Output is sorted by (rule, node).
std::vector<Violation> ValidateGraph(const TypeGraph &graph);

// ValidateGraph over the name-level view plus advisory notes for vague type
// names (other, thing, misc, ...).
std::vector<Violation> ValidateOntology(const TypeOntology &ontology);

}  // namespace fet

#endif  // FET_ONTOLOGY_H_
