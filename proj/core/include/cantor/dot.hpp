#pragma once

#include <string>

#include "cantor/prefix_map.hpp"

namespace cantor {

/// Graphviz text for the tree-pair diagram of an element: two rooted binary
/// trees; leaf i of the domain tree and the range leaf carrying its image
/// share the label i.
std::string tree_pair_dot(const PrefixMap& g);

}  // namespace cantor
