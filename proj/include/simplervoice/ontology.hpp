#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "simplervoice/catalog.hpp"

namespace simplervoice {

using NodeId = std::uint32_t;

struct OntologyNode {
  std::string name;
  int depth = 0;
  NodeId parent = 0;              // root points at itself
  std::vector<NodeId> children;   // sorted by name
  std::vector<std::string> products;  // upcs attached to this category
};

// Category taxonomy built from catalog paths. A synthetic "ROOT" node sits
// above the top-level categories. Immutable once built.
class OntologyTree {
 public:
  static constexpr NodeId kRoot = 0;
  static constexpr std::string_view kRootName = "ROOT";

  // Throws EmptyInput on an empty catalog. Nodes that end up carrying both
  // products and children are kept and recorded in warnings().
  static OntologyTree build(const Catalog& catalog);

  std::size_t size() const noexcept { return nodes_.size(); }
  bool contains(NodeId id) const noexcept { return id < nodes_.size(); }
  const OntologyNode& node(NodeId id) const;
  const std::string& name(NodeId id) const { return node(id).name; }

  std::optional<NodeId> child(NodeId parent, std::string_view name) const;
  std::optional<NodeId> find_path(std::span<const std::string> path) const;

  bool is_leaf(NodeId id) const { return node(id).children.empty(); }
  // Leaf, or an interior node that also holds products.
  bool is_leaf_like(NodeId id) const;

  const std::vector<LineIssue>& warnings() const noexcept { return warnings_; }

  // Two spaces per depth level; product-bearing nodes list their upcs.
  std::string dump() const;

 private:
  NodeId add_child(NodeId parent, const std::string& name);

  std::vector<OntologyNode> nodes_;
  std::vector<LineIssue> warnings_;
};

// The leaf at the end of the record's category path (the message's object).
// Throws NotInTree when the path is absent or the record is not attached.
NodeId object_type(const OntologyTree& tree, const ProductRecord& record);

// Ancestors nearest-first, root excluded. Empty for the root and its children.
std::vector<NodeId> parents_of(const OntologyTree& tree, NodeId node);

// Other leaf-like children of the same parent, in name order.
// Throws NotInTree / NotALeaf.
std::vector<NodeId> neighbors_of(const OntologyTree& tree, NodeId node);

}  // namespace simplervoice
