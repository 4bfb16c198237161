#include <vendokit/depgraph.hpp>

#include <vendokit/error.hpp>

#include <algorithm>
#include <queue>
#include <sstream>

namespace vendokit {

namespace {

enum class Mark { unvisited, on_stack, done };

/// Iterative DFS in lexicographic order. Returns the first cycle met as
/// [v, ..., v], or an empty path.
std::vector<std::string> find_cycle(const std::set<std::string>& nodes,
                                    const std::map<std::string, std::set<std::string>>& deps) {
    std::map<std::string, Mark> marks;
    for (const auto& n : nodes) {
        marks[n] = Mark::unvisited;
    }

    struct Frame {
        const std::string* node;
        std::set<std::string>::const_iterator next;
    };

    for (const auto& root : nodes) {
        if (marks[root] != Mark::unvisited) {
            continue;
        }
        std::vector<Frame> stack;
        marks[root] = Mark::on_stack;
        stack.push_back({&root, deps.at(root).begin()});
        while (!stack.empty()) {
            auto& top = stack.back();
            const auto& out = deps.at(*top.node);
            if (top.next == out.end()) {
                marks[*top.node] = Mark::done;
                stack.pop_back();
                continue;
            }
            const std::string& dep = *top.next++;
            const auto mark = marks[dep];
            if (mark == Mark::on_stack) {
                std::vector<std::string> path;
                auto it = std::find_if(stack.begin(), stack.end(),
                                       [&](const Frame& f) { return *f.node == dep; });
                for (; it != stack.end(); ++it) {
                    path.push_back(*it->node);
                }
                path.push_back(dep);
                return path;
            }
            if (mark == Mark::unvisited) {
                marks[dep] = Mark::on_stack;
                const auto& key = deps.find(dep)->first;
                stack.push_back({&key, deps.at(dep).begin()});
            }
        }
    }
    return {};
}

std::string dot_quote(std::string_view s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') {
            out += '\\';
        }
        out += c;
    }
    return out + '"';
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i > 0) out += sep;
        out += parts[i];
    }
    return out;
}

}  // namespace

DepGraph DepGraph::build(std::set<std::string> nodes, const std::vector<Edge>& edges) {
    DepGraph g;
    g._nodes = std::move(nodes);
    for (const auto& n : g._nodes) {
        g._deps[n];
    }
    for (const auto& [from, to] : edges) {
        for (const auto* endpoint : {&from, &to}) {
            if (!g._nodes.contains(*endpoint)) {
                throw Error(Errc::UnknownModule, "edge " + from + " -> " + to +
                                                     " references unknown module '" + *endpoint + "'");
            }
        }
        g._deps[from].insert(to);
    }
    if (auto cycle = find_cycle(g._nodes, g._deps); !cycle.empty()) {
        const auto message = "dependency cycle: " + join(cycle, " -> ");
        throw Error(Errc::DependencyCycle, message, std::move(cycle));
    }
    return g;
}

const std::set<std::string>& DepGraph::deps_of(const std::string& node) const {
    const auto it = _deps.find(node);
    if (it == _deps.end()) {
        throw Error(Errc::UnknownModule, "unknown module '" + node + "'");
    }
    return it->second;
}

std::vector<DepGraph::Edge> DepGraph::edges() const {
    std::vector<Edge> out;
    for (const auto& [from, tos] : _deps) {
        for (const auto& to : tos) {
            out.emplace_back(from, to);
        }
    }
    return out;
}

std::size_t DepGraph::edge_count() const noexcept {
    std::size_t n = 0;
    for (const auto& [from, tos] : _deps) {
        n += tos.size();
    }
    return n;
}

DepGraph build_graph(const Manifest& manifest) {
    std::set<std::string> nodes;
    std::vector<DepGraph::Edge> edges;
    for (const auto& [name, entry] : manifest.modules) {
        nodes.insert(name);
        for (const auto& dep : entry.deps) {
            edges.emplace_back(name, dep);
        }
    }
    return DepGraph::build(std::move(nodes), edges);
}

std::vector<std::string> closure(const DepGraph& graph, std::span<const std::string> roots) {
    std::set<std::string> members;
    std::vector<std::string> pending;
    for (const auto& r : roots) {
        if (!graph.contains(r)) {
            throw Error(Errc::UnknownModule, "unknown module '" + r + "'");
        }
        if (members.insert(r).second) {
            pending.push_back(r);
        }
    }
    while (!pending.empty()) {
        const auto node = std::move(pending.back());
        pending.pop_back();
        for (const auto& dep : graph.deps_of(node)) {
            if (members.insert(dep).second) {
                pending.push_back(dep);
            }
        }
    }

    // Kahn's algorithm over the reverse edges: a node becomes ready once all
    // of its dependencies are emitted.
    std::map<std::string, std::size_t> remaining;
    std::map<std::string, std::vector<std::string>> dependents;
    for (const auto& m : members) {
        remaining[m] = graph.deps_of(m).size();
        for (const auto& dep : graph.deps_of(m)) {
            dependents[dep].push_back(m);
        }
    }
    std::priority_queue<std::string, std::vector<std::string>, std::greater<>> ready;
    for (const auto& [m, count] : remaining) {
        if (count == 0) {
            ready.push(m);
        }
    }
    std::vector<std::string> order;
    order.reserve(members.size());
    while (!ready.empty()) {
        auto next = ready.top();
        ready.pop();
        for (const auto& d : dependents[next]) {
            if (--remaining[d] == 0) {
                ready.push(d);
            }
        }
        order.push_back(std::move(next));
    }
    return order;
}

std::string to_dot(const DepGraph& graph, const Manifest* manifest) {
    std::ostringstream out;
    out << "digraph deps {\n";
    for (const auto& n : graph.nodes()) {
        out << "  " << dot_quote(n);
        if (manifest) {
            if (const auto* e = manifest->find(n)) {
                out << " [label=" << dot_quote(n + "@" + format_version(e->version)) << "]";
            }
        }
        out << ";\n";
    }
    for (const auto& [from, to] : graph.edges()) {
        out << "  " << dot_quote(from) << " -> " << dot_quote(to) << ";\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace vendokit
