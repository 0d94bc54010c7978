#pragma once

#include <string_view>

#include "srkit/matrix.hpp"

namespace srkit::fixtures {

/// 6x6 integer matrix whose reduction breaks down at the first stage: the
/// (2,1) entry is nonzero while the (4,1) elimination pivot is zero.
Matrix a6();

/// 12x12 integer matrix whose reduction breaks down at stage 3.
Matrix a12();

/// Lookup by name ("a6" or "a12"); throws std::invalid_argument otherwise.
Matrix by_name(std::string_view name);

}  // namespace srkit::fixtures
