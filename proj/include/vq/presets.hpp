#pragma once

#include <string>
#include <vector>

#include "vq/lambda.hpp"
#include "vq/linespace.hpp"

namespace vq {

/// Named desk-scale instances:
///   w3       symplectic GF(3), L = 0           (W(3) = Sp(4,3), 40 points)
///   q5plus3  Case I GF(3), L hyperbolic plane  (Q5+(3), 130 points)
///   sp63     symplectic GF(3), L = K^2         (Sp(6,3), 364 points)
///   h34      Case II GF(4), L = 0              (H(3,4), 45 points)
///   h54      Case II GF(4), L hyperbolic K^2   (H(5,4), 693 points)
///   grid     the 4x4 grid GQ(3,1), built combinatorially (no Lambda)
///   d3gf3/d3gf5  D3 parametrization instances over GF(3)/GF(5)
std::vector<std::string> preset_names();

bool preset_has_lambda(const std::string& name);

LambdaSpace preset_lambda(const std::string& name);

/// The polar space of the preset (via the singular catalog for Lambda-based
/// presets, combinatorial for grid).
LineSpace preset_linespace(const std::string& name, long long cap = 10'000'000);

}  // namespace vq
