#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "sextic/multipoly.hpp"

namespace sextic::cli {

// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitDegenerate = 2;
inline constexpr int kExitUsage = 64;

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

struct Check {
  std::string name;
  bool holds = false;
};

struct VerifyItem {
  std::string name;
  bool gating = true;  // informational items never fail the suite
  std::vector<Check> checks;
  std::string error;  // set when the item threw
  bool passed() const;
};

std::vector<std::string> verify_item_names();
// Throws std::out_of_range for an unknown name.
VerifyItem run_verify_item(const std::string& name);
std::vector<VerifyItem> verify_suite();
bool suite_passed(const std::vector<VerifyItem>& items);

// The delta identity item for an arbitrary candidate closed form, so a
// corrupted formula can be shown to fail.
VerifyItem verify_delta_identity(const MultiPoly& formula);
// The closed form with the sign of its first term flipped.
MultiPoly delta_formula_sign_flipped();

nlohmann::json to_json(const VerifyItem& item);

}  // namespace sextic::cli
