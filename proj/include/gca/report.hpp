#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace gca {

struct Violation {
    std::size_t i;
    std::size_t j;
    std::string detail;
};

/// Outcome of an exhaustive check over basis pairs (or triples, folded into detail).
struct CheckReport {
    std::vector<Violation> violations;
    bool passed() const { return violations.empty(); }
};

}  // namespace gca
