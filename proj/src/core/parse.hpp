#pragma once

#include <string>

#include "core/modular.hpp"

namespace verlinde {

// "[2,1]" (partition) or "d[1,1]" (Dynkin) -> weight of su(N)_k.
affine_weight parse_weight(const std::string& text, int N, int level);

// Label literal within one modular datum: weight literal for su(N)_k,
// "w3" / "3" / fundamental-weight literal for su(M)_1, and the fixed names
// for the so/e catalogs.
int parse_label(const modular_data& d, const std::string& text);

}  // namespace verlinde
