#include "simplervoice/ontology.hpp"

#include <algorithm>

namespace simplervoice {

const OntologyNode& OntologyTree::node(NodeId id) const {
  if (id >= nodes_.size()) throw Error(Errc::NotInTree, "node " + std::to_string(id) + " is not in the tree");
  return nodes_[id];
}

std::optional<NodeId> OntologyTree::child(NodeId parent, std::string_view name) const {
  const auto& kids = node(parent).children;
  const auto it = std::lower_bound(kids.begin(), kids.end(), name,
                                   [this](NodeId id, std::string_view n) { return nodes_[id].name < n; });
  if (it == kids.end() || nodes_[*it].name != name) return std::nullopt;
  return *it;
}

std::optional<NodeId> OntologyTree::find_path(std::span<const std::string> path) const {
  NodeId at = kRoot;
  for (const auto& segment : path) {
    const auto next = child(at, segment);
    if (!next) return std::nullopt;
    at = *next;
  }
  return at;
}

bool OntologyTree::is_leaf_like(NodeId id) const {
  const auto& n = node(id);
  return id != kRoot && (n.children.empty() || !n.products.empty());
}

NodeId OntologyTree::add_child(NodeId parent, const std::string& name) {
  if (auto existing = child(parent, name)) return *existing;
  const auto id = static_cast<NodeId>(nodes_.size());
  nodes_.push_back({name, nodes_[parent].depth + 1, parent, {}, {}});
  auto& kids = nodes_[parent].children;
  const auto pos = std::lower_bound(kids.begin(), kids.end(), name,
                                    [this](NodeId k, const std::string& n) { return nodes_[k].name < n; });
  kids.insert(pos, id);
  return id;
}

OntologyTree OntologyTree::build(const Catalog& catalog) {
  if (catalog.empty()) throw Error(Errc::EmptyInput, "cannot build an ontology from an empty catalog");
  OntologyTree tree;
  tree.nodes_.push_back({std::string(kRootName), 0, kRoot, {}, {}});
  for (const auto& record : catalog.records()) {
    NodeId at = kRoot;
    for (const auto& segment : record.category_path) at = tree.add_child(at, segment);
    tree.nodes_[at].products.push_back(record.upc);
  }
  // Report ragged spots in path order so the warning list is stable.
  for (NodeId id = 1; id < tree.nodes_.size(); ++id) {
    const auto& n = tree.nodes_[id];
    if (!n.products.empty() && !n.children.empty()) {
      tree.warnings_.push_back({0, Errc::PathConflict,
                                "category '" + n.name + "' holds products and has subcategories"});
    }
  }
  return tree;
}

std::string OntologyTree::dump() const {
  std::string out;
  auto visit = [&](auto&& self, NodeId id) -> void {
    const auto& n = nodes_[id];
    out.append(static_cast<std::size_t>(n.depth) * 2, ' ');
    out += n.name;
    if (!n.products.empty()) {
      out += " [";
      for (std::size_t i = 0; i < n.products.size(); ++i) {
        if (i) out += ',';
        out += n.products[i];
      }
      out += ']';
    }
    out += '\n';
    for (const auto c : n.children) self(self, c);
  };
  visit(visit, kRoot);
  return out;
}

NodeId object_type(const OntologyTree& tree, const ProductRecord& record) {
  const auto leaf = tree.find_path(record.category_path);
  if (!leaf) throw Error(Errc::NotInTree, "category path of " + record.upc + " is not in the tree");
  const auto& products = tree.node(*leaf).products;
  if (std::find(products.begin(), products.end(), record.upc) == products.end()) {
    throw Error(Errc::NotInTree, "product " + record.upc + " is not attached to the tree");
  }
  return *leaf;
}

std::vector<NodeId> parents_of(const OntologyTree& tree, NodeId id) {
  std::vector<NodeId> out;
  NodeId at = tree.node(id).parent;
  if (id == OntologyTree::kRoot) return out;
  while (at != OntologyTree::kRoot) {
    out.push_back(at);
    at = tree.node(at).parent;
  }
  return out;
}

std::vector<NodeId> neighbors_of(const OntologyTree& tree, NodeId id) {
  if (!tree.contains(id)) throw Error(Errc::NotInTree, "node " + std::to_string(id) + " is not in the tree");
  if (!tree.is_leaf_like(id)) throw Error(Errc::NotALeaf, "'" + tree.name(id) + "' is not a leaf");
  std::vector<NodeId> out;
  for (const auto sibling : tree.node(tree.node(id).parent).children) {
    if (sibling != id && tree.is_leaf_like(sibling)) out.push_back(sibling);
  }
  return out;
}

}  // namespace simplervoice
