#pragma once

#include <string>
#include <vector>

namespace refl::testing {

/// Every type exercised by the verification table; E7 only on request.
inline std::vector<std::string> supported_types(bool with_e7 = false) {
    std::vector<std::string> t;
    for (int n = 1; n <= 7; ++n) t.push_back("A" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) t.push_back("B" + std::to_string(n));
    for (int n = 4; n <= 6; ++n) t.push_back("D" + std::to_string(n));
    for (int m = 3; m <= 12; ++m) t.push_back("I2(" + std::to_string(m) + ")");
    for (const char* s : {"G2", "F4", "H3", "H4", "E6"}) t.emplace_back(s);
    if (with_e7) t.emplace_back("E7");
    return t;
}

}  // namespace refl::testing
