#pragma once

#include <cstdint>
#include <stdexcept>

namespace toricnp {

// Coefficient field, given by its characteristic (0 or a prime).  Only the
// characteristic matters for Betti numbers, and only char 3 changes any
// verdict of the combinatorial classifier.
struct FieldSpec {
    uint32_t characteristic = 0;

    static FieldSpec rationals() { return {0}; }
    static FieldSpec prime(uint32_t p) {
        if (p < 2) throw std::invalid_argument("characteristic must be 0 or a prime");
        for (uint32_t d = 2; d * d <= p; ++d)
            if (p % d == 0) throw std::invalid_argument("characteristic must be 0 or a prime");
        return {p};
    }

    bool operator==(const FieldSpec&) const = default;
};

}  // namespace toricnp
