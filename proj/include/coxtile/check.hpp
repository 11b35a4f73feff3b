#pragma once

#include <string>

namespace coxtile {

// Outcome of one named verification.
struct CheckResult {
    std::string name;
    bool pass = false;
    std::string details;
};

}  // namespace coxtile
