#include "symmset/dot.hpp"

#include <algorithm>
#include <sstream>

namespace symmset {

namespace {

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

}  // namespace

std::string to_dot(const UGraph& g, const std::vector<int>& mark) {
    std::vector<char> marked(static_cast<std::size_t>(g.n()), 0);
    for (int v : mark) {
        require(v >= 0 && v < g.n(), "to_dot: marked vertex out of range");
        marked[static_cast<std::size_t>(v)] = 1;
    }
    std::ostringstream out;
    out << "graph G {\n  node [shape=circle];\n";
    for (int v = 0; v < g.n(); ++v) {
        out << "  " << v;
        std::vector<std::string> attrs;
        if (!g.vertices.labels.empty()) attrs.push_back("label=" + quote(g.vertices.display(v)));
        if (marked[static_cast<std::size_t>(v)]) {
            attrs.push_back("style=filled");
            attrs.push_back("fillcolor=gray80");
        }
        if (!attrs.empty()) {
            out << " [";
            for (std::size_t i = 0; i < attrs.size(); ++i) out << (i ? ", " : "") << attrs[i];
            out << "]";
        }
        out << ";\n";
    }
    for (const auto& [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_dot(const ReductionGraph& g) {
    std::vector<char> in_upper(static_cast<std::size_t>(g.P.size), 0);
    for (int p : g.upper) in_upper[static_cast<std::size_t>(p)] = 1;

    std::ostringstream out;
    out << "digraph R {\n  node [shape=circle, style=filled];\n";
    for (int v = 0; v < g.P.size; ++v) {
        out << "  " << v << " [";
        if (!g.P.labels.empty()) out << "label=" << quote(g.P.display(v)) << ", ";
        if (in_upper[static_cast<std::size_t>(v)])
            out << "fillcolor=black, fontcolor=white";
        else
            out << "fillcolor=white";
        out << "];\n";
    }
    for (const auto& [p, q] : g.edges) {
        if (g.has_edge(q, p)) {
            if (p < q) out << "  " << p << " -> " << q << " [dir=both];\n";
        } else {
            out << "  " << p << " -> " << q << ";\n";
        }
    }
    out << "}\n";
    return out.str();
}

}  // namespace symmset
