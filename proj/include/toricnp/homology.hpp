#pragma once

#include <cstdint>
#include <vector>

#include "toricnp/fiber.hpp"
#include "toricnp/field.hpp"

namespace toricnp {

// dim H~_i(complex; k) for i = 0..i_max, computed from first principles as
// f_i - rank d_i - rank d_{i+1} with f_{-1} = 1 and d_0 the augmentation.
// Ranks are exact: fraction-free integer elimination over char 0, modular
// elimination over char p.  Entries beyond the top dimension are 0.  Throws
// ResourceLimitError when the predicted face count exceeds face_cap.
std::vector<int> reduced_homology_dims(const DivisorComplex& complex, const FieldSpec& field,
                                       int i_max, uint64_t face_cap = 5'000'000);

}  // namespace toricnp
