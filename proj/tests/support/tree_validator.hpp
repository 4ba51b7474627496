#pragma once
// Full traversal check of an OntologyTree against the catalog it was built
// from. Returns one message per violation; empty means the tree is sound.

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "simplervoice/catalog.hpp"
#include "simplervoice/ontology.hpp"

namespace simplervoice::testing {

inline std::vector<std::string> validate_tree(const OntologyTree& tree, const Catalog& catalog) {
  std::vector<std::string> violations;
  auto fail = [&](const std::string& what) { violations.push_back(what); };

  if (tree.name(OntologyTree::kRoot) != OntologyTree::kRootName) fail("root is not named ROOT");
  if (tree.node(OntologyTree::kRoot).depth != 0) fail("root depth is not 0");

  // Reachability: every node is visited exactly once from the root.
  std::vector<int> seen(tree.size(), 0);
  std::vector<NodeId> stack{OntologyTree::kRoot};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    if (++seen[id] > 1) fail("node " + tree.name(id) + " reached twice");
    const auto& n = tree.node(id);
    std::set<std::string> names;
    for (std::size_t i = 0; i < n.children.size(); ++i) {
      const auto& c = tree.node(n.children[i]);
      if (c.parent != id) fail("child " + c.name + " does not point back at " + n.name);
      if (c.depth != n.depth + 1) fail("depth of " + c.name + " is not parent depth + 1");
      if (!names.insert(c.name).second) fail("duplicate child name " + c.name + " under " + n.name);
      if (i > 0 && !(tree.name(n.children[i - 1]) < c.name)) fail("children of " + n.name + " not sorted");
      stack.push_back(n.children[i]);
    }
  }
  for (NodeId id = 0; id < tree.size(); ++id) {
    if (seen[id] == 0) fail("node " + tree.name(id) + " unreachable");
  }

  // Every product sits at the node its path names, and nowhere else.
  std::size_t attached = 0;
  for (NodeId id = 0; id < tree.size(); ++id) attached += tree.node(id).products.size();
  if (attached != catalog.size()) fail("product count mismatch");
  for (const auto& r : catalog.records()) {
    NodeId at = OntologyTree::kRoot;
    bool ok = true;
    for (const auto& seg : r.category_path) {
      const auto& kids = tree.node(at).children;
      const auto it = std::find_if(kids.begin(), kids.end(), [&](NodeId k) { return tree.name(k) == seg; });
      if (it == kids.end()) {
        ok = false;
        break;
      }
      at = *it;
    }
    if (!ok) {
      fail("path of " + r.upc + " missing");
      continue;
    }
    const auto& prods = tree.node(at).products;
    if (std::count(prods.begin(), prods.end(), r.upc) != 1) fail("product " + r.upc + " not attached once");
    if (object_type(tree, r) != at) fail("object_type of " + r.upc + " disagrees with hand walk");
  }

  // parents_of is the upward walk, root excluded; neighbors_of excludes self.
  for (NodeId id = 1; id < tree.size(); ++id) {
    std::vector<NodeId> expected;
    for (NodeId p = tree.node(id).parent; p != OntologyTree::kRoot; p = tree.node(p).parent) expected.push_back(p);
    if (parents_of(tree, id) != expected) fail("parents_of " + tree.name(id) + " wrong");
    if (!tree.is_leaf_like(id)) continue;
    const auto neighbors = neighbors_of(tree, id);
    std::vector<NodeId> sibs;
    for (NodeId s : tree.node(tree.node(id).parent).children) {
      if (s != id && tree.is_leaf_like(s)) sibs.push_back(s);
    }
    if (neighbors != sibs) fail("neighbors_of " + tree.name(id) + " wrong");
    if (std::find(neighbors.begin(), neighbors.end(), id) != neighbors.end()) fail("neighbors include self");
  }
  return violations;
}

}  // namespace simplervoice::testing
