#include "vq/presets.hpp"

#include "vq/catalog.hpp"
#include "vq/errors.hpp"

namespace vq {

std::vector<std::string> preset_names() {
  return {"w3", "q5plus3", "sp63", "h34", "h54", "grid", "d3gf3", "d3gf5"};
}

bool preset_has_lambda(const std::string& name) { return name != "grid"; }

LambdaSpace preset_lambda(const std::string& name) {
  if (name == "w3") {
    const Field& K = Field::get(3, 1, false);
    return LambdaSpace::make_blocks(FormCase::IISymplectic, K, 0, {}, 0);
  }
  if (name == "q5plus3" || name == "d3gf3") {
    const Field& K = Field::get(3, 1, false);
    return LambdaSpace::make_blocks(FormCase::I, K, 1, {}, 0);
  }
  if (name == "d3gf5") {
    const Field& K = Field::get(5, 1, false);
    return LambdaSpace::make_blocks(FormCase::I, K, 1, {}, 0);
  }
  if (name == "sp63") {
    const Field& K = Field::get(3, 1, false);
    return LambdaSpace::make_blocks(FormCase::IISymplectic, K, 1, {}, 0);
  }
  if (name == "h34") {
    const Field& K = Field::get(2, 2, true);
    return LambdaSpace::make_blocks(FormCase::II, K, 0, {}, 0b11);  // K0 = GF(2)
  }
  if (name == "h54") {
    const Field& K = Field::get(2, 2, true);
    return LambdaSpace::make_blocks(FormCase::II, K, 1, {}, 0b11);
  }
  throw input_error("preset '" + name + "' has no Lambda descriptor");
}

LineSpace preset_linespace(const std::string& name, long long cap) {
  if (name == "grid") {
    std::vector<std::vector<int>> lines;
    for (int i = 0; i < 4; ++i) {
      std::vector<int> row, col;
      for (int j = 0; j < 4; ++j) {
        row.push_back(4 * i + j);
        col.push_back(4 * j + i);
      }
      std::sort(col.begin(), col.end());
      lines.push_back(row);
      lines.push_back(col);
    }
    return LineSpace(16, lines);
  }
  LambdaSpace lam = preset_lambda(name);
  Ambient amb(lam);
  return line_space_from_catalog(enumerate_singular(amb, cap));
}

}  // namespace vq
