#include "cantor/dot.hpp"

#include <map>
#include <set>
#include <sstream>

namespace cantor {

namespace {

// Emit one rooted binary tree whose leaves are the given words; leaf
// labels come from the word -> label map.
void emit_tree(std::ostringstream& out, const std::string& cluster,
               const std::map<BitWord, std::size_t>& labels) {
    out << "  subgraph cluster_" << cluster << " {\n";
    out << "    label=\"" << cluster << "\";\n";
    std::set<std::string> internal;
    for (const auto& [leaf, unused] : labels) {
        (void)unused;
        for (std::size_t n = 0; n < leaf.level(); ++n) {
            internal.insert(leaf.prefix(n).str());
        }
    }
    for (const auto& w : internal) {
        out << "    " << cluster << "_" << (w.empty() ? "root" : w)
            << " [shape=point];\n";
    }
    for (const auto& [leaf, label] : labels) {
        out << "    " << cluster << "_" << (leaf.empty() ? "root" : leaf.str())
            << " [shape=circle,label=\"" << label << "\"];\n";
    }
    auto name = [&](const std::string& w) {
        return cluster + "_" + (w.empty() ? "root" : w);
    };
    std::set<std::string> nodes = internal;
    for (const auto& [leaf, unused] : labels) {
        (void)unused;
        nodes.insert(leaf.str());
    }
    for (const auto& w : nodes) {
        if (w.empty()) continue;
        out << "    " << name(w.substr(0, w.size() - 1)) << " -> " << name(w)
            << " [label=\"" << w.back() << "\"];\n";
    }
    out << "  }\n";
}

}  // namespace

std::string tree_pair_dot(const PrefixMap& g) {
    std::map<BitWord, std::size_t> domain_labels, range_labels;
    for (std::size_t i = 0; i < g.pieces().size(); ++i) {
        domain_labels[g.pieces()[i].from] = i + 1;
        range_labels[g.pieces()[i].to] = i + 1;
    }
    std::ostringstream out;
    out << "digraph tree_pair {\n";
    out << "  node [fontsize=10];\n";
    emit_tree(out, "domain", domain_labels);
    emit_tree(out, "range", range_labels);
    out << "}\n";
    return out.str();
}

}  // namespace cantor
