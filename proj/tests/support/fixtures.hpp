#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include "simplervoice/workspace.hpp"

namespace simplervoice::testing {

inline fs::path fixture_dir() { return SV_FIXTURE_DIR; }

inline std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

// The bundled 20-product fixture workspace, loaded once.
inline const Workspace& fixture_workspace() {
  static const Workspace ws = Workspace::from_inputs(workspace_layout(fixture_dir()));
  return ws;
}

inline Catalog load_catalog(const fs::path& path) {
  std::ifstream in(path);
  return parse_catalog(in).catalog;
}

struct GoldenRow {
  const char* upc;
  const char* title;
  const char* message;
};

// The five published example products and their key messages.
inline constexpr GoldenRow kGoldenProducts[] = {
    {"041497052132", "H-E-B Bakery Cookies by the Pound", "Woman eating cookie"},
    {"070896201126", "Culpitt", "Woman lighting candle"},
    {"074451049843", "Fisher-Price Brilliant Basics Rock-a-Stack (6-36 Months)", "Baby playing toy"},
    {"781138710153", "Cafe Valley Cocktail Croissant", "Man eating croissant"},
    {"044600311394", "Clorox", "Woman washing with bleach"},
};

}  // namespace simplervoice::testing
