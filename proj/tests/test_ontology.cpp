#include <sstream>

#include "catch_amalgamated.hpp"
#include "fixtures.hpp"
#include "simplervoice/ontology.hpp"
#include "tree_validator.hpp"

using namespace simplervoice;

namespace {

Catalog catalog_of(const std::vector<std::pair<std::string, std::string>>& upc_paths) {
  std::string text;
  for (const auto& [upc, path] : upc_paths) text += upc + "\tItem " + upc + "\t" + path + "\t\n";
  std::istringstream in(text);
  return parse_catalog(in).catalog;
}

std::vector<std::string> names(const OntologyTree& tree, const std::vector<NodeId>& ids) {
  std::vector<std::string> out;
  for (auto id : ids) out.push_back(tree.name(id));
  return out;
}

NodeId at(const OntologyTree& tree, std::vector<std::string> path) {
  const auto id = tree.find_path(path);
  REQUIRE(id.has_value());
  return *id;
}

}  // namespace

TEST_CASE("two paths share their prefix", "[ontology]") {
  const auto catalog = catalog_of({{"1", "food/bakery/bagel"}, {"2", "food/bakery/croissant"}});
  const auto tree = OntologyTree::build(catalog);
  CHECK(tree.size() == 5);
  const auto& root = tree.node(OntologyTree::kRoot);
  REQUIRE(root.children.size() == 1);
  CHECK(tree.name(root.children[0]) == "food");
  const auto bakery = at(tree, {"food", "bakery"});
  CHECK(names(tree, tree.node(bakery).children) == std::vector<std::string>{"bagel", "croissant"});
  CHECK(tree.is_leaf(at(tree, {"food", "bakery", "bagel"})));
  CHECK(testing::validate_tree(tree, catalog).empty());
  CHECK(tree.warnings().empty());
}

TEST_CASE("single record attaches its upc to the leaf", "[ontology]") {
  const auto catalog = catalog_of({{"0001", "food/bakery/bagel"}});
  const auto tree = OntologyTree::build(catalog);
  const auto bagel = at(tree, {"food", "bakery", "bagel"});
  CHECK(tree.node(bagel).products == std::vector<std::string>{"0001"});
  CHECK(object_type(tree, catalog.records()[0]) == bagel);
}

TEST_CASE("empty catalog cannot build a tree", "[ontology]") {
  CHECK_THROWS_AS(OntologyTree::build(Catalog{}), Error);
}

TEST_CASE("object_type on fixture products", "[ontology][fixture]") {
  const auto& ws = testing::fixture_workspace();
  CHECK(ws.tree.name(object_type(ws.tree, lookup(ws.catalog, "Thomas' Plain Mini Bagels"))) == "bagel");
  CHECK(ws.tree.name(object_type(ws.tree, lookup(ws.catalog, "H-E-B Bakery Cookies by the Pound"))) == "cookie");

  const ProductRecord stranger{"999", "Stranger", {"food", "bakery", "bagel"}, ""};
  CHECK_THROWS_AS(object_type(ws.tree, stranger), Error);
  const ProductRecord lost{"0001", "Lost", {"garden", "hose"}, ""};
  CHECK_THROWS_AS(object_type(ws.tree, lost), Error);
}

TEST_CASE("parents_of walks up to but excluding root", "[ontology]") {
  const auto& tree = testing::fixture_workspace().tree;
  CHECK(names(tree, parents_of(tree, at(tree, {"food", "bakery", "bagel"}))) ==
        std::vector<std::string>{"bakery", "food"});
  CHECK(parents_of(tree, at(tree, {"food"})).empty());
  CHECK(parents_of(tree, OntologyTree::kRoot).empty());
}

TEST_CASE("neighbors_of lists sibling leaves without self", "[ontology]") {
  const auto catalog = catalog_of(
      {{"1", "food/bakery/bagel"}, {"2", "food/bakery/croissant"}, {"3", "food/bakery/roll"}, {"4", "drink/soda"}});
  const auto tree = OntologyTree::build(catalog);
  CHECK(names(tree, neighbors_of(tree, at(tree, {"food", "bakery", "bagel"}))) ==
        std::vector<std::string>{"croissant", "roll"});
  CHECK(neighbors_of(tree, at(tree, {"drink", "soda"})).empty());
  CHECK_THROWS_AS(neighbors_of(tree, at(tree, {"food", "bakery"})), Error);
  CHECK_THROWS_AS(neighbors_of(tree, 1000), Error);

  const auto& ws = testing::fixture_workspace();
  CHECK(names(ws.tree, neighbors_of(ws.tree, at(ws.tree, {"food", "bakery", "cookie"}))) ==
        std::vector<std::string>{"bagel", "croissant", "muffin"});
}

TEST_CASE("ragged paths are kept and reported", "[ontology]") {
  const auto catalog = catalog_of({{"1", "food/bakery"}, {"2", "food/bakery/bagel"}, {"3", "food/bakery/roll"}});
  const auto tree = OntologyTree::build(catalog);
  REQUIRE(tree.warnings().size() == 1);
  CHECK(tree.warnings()[0].kind == Errc::PathConflict);
  const auto bakery = at(tree, {"food", "bakery"});
  CHECK(tree.is_leaf_like(bakery));
  CHECK_FALSE(tree.is_leaf(bakery));
  CHECK(testing::validate_tree(tree, catalog).empty());
}

TEST_CASE("200-path fixture passes the traversal validator", "[ontology][fixture]") {
  const auto catalog = testing::load_catalog(testing::fixture_dir() / "ontology_200.tsv");
  REQUIRE(catalog.size() == 200);
  const auto tree = OntologyTree::build(catalog);
  const auto violations = testing::validate_tree(tree, catalog);
  for (const auto& v : violations) UNSCOPED_INFO(v);
  CHECK(violations.empty());
  CHECK(tree.warnings().size() == 2);
}

TEST_CASE("build is deterministic and order-insensitive in structure", "[ontology][property]") {
  const auto catalog = testing::load_catalog(testing::fixture_dir() / "ontology_200.tsv");
  CHECK(OntologyTree::build(catalog).dump() == OntologyTree::build(catalog).dump());

  // Reversing record order changes only the order of upcs inside a node.
  auto records = catalog.records();
  std::reverse(records.begin(), records.end());
  const auto reversed = OntologyTree::build(Catalog(records));
  const auto forward = OntologyTree::build(catalog);
  REQUIRE(reversed.size() == forward.size());
  auto strip = [](std::string dump) {
    std::string out;
    std::istringstream in(dump);
    std::string line;
    while (std::getline(in, line)) out += line.substr(0, line.find(" [")) + "\n";
    return out;
  };
  CHECK(strip(reversed.dump()) == strip(forward.dump()));
}

TEST_CASE("dump shows indentation and products", "[ontology]") {
  const auto tree = OntologyTree::build(catalog_of({{"1", "food/bakery/bagel"}, {"2", "drink"}}));
  CHECK(tree.dump() == "ROOT\n  drink [2]\n  food\n    bakery\n      bagel [1]\n");
}
