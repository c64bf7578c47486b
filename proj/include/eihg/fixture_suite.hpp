#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eihg {

struct SuiteItem {
  std::string name;
  bool passed = false;
  std::string detail;
};

/// Runs every stored fixture and closed-form law once, in a fixed order.
/// `catalog` is the text of a fixture catalog file; the shipped one is
/// `catalog_text()`. Randomized items use fixed seeds.
std::vector<SuiteItem> run_fixture_suite(std::string_view catalog);

}  // namespace eihg
