#pragma once

#include <vendokit/manifest.hpp>

#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace vendokit {

/// Directed acyclic graph of module dependencies. Edges point from a
/// dependent module to the module it depends on.
///
/// Instances only come out of `build`/`build_graph`, so every edge endpoint
/// is a node and the graph is acyclic.
class DepGraph {
public:
    using Edge = std::pair<std::string, std::string>;

    /// Throws Error(UnknownModule) for a dangling edge endpoint and
    /// Error(DependencyCycle) with the cycle path in `details()`.
    static DepGraph build(std::set<std::string> nodes, const std::vector<Edge>& edges);

    const std::set<std::string>& nodes() const noexcept { return _nodes; }
    const std::set<std::string>& deps_of(const std::string& node) const;
    std::vector<Edge> edges() const;
    std::size_t edge_count() const noexcept;
    bool contains(const std::string& node) const { return _nodes.contains(node); }

private:
    DepGraph() = default;

    std::set<std::string> _nodes;
    std::map<std::string, std::set<std::string>> _deps;
};

/// One node per manifest entry, one edge per declared dependency.
DepGraph build_graph(const Manifest& manifest);

/// Roots plus everything they transitively depend on, dependencies first,
/// ties broken lexicographically. Throws Error(UnknownModule).
std::vector<std::string> closure(const DepGraph& graph, std::span<const std::string> roots);

/// Graphviz rendering; node labels carry `name@version` when a manifest is given.
std::string to_dot(const DepGraph& graph, const Manifest* manifest = nullptr);

}  // namespace vendokit
