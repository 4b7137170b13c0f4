#pragma once

#include <cstddef>

#include "mph/bifilt/bifiltration.hpp"
#include "mph/bifilt/chain_complex.hpp"
#include "mph/core/field.hpp"

namespace mph::oracle {

/// dim H_i of the simplicial complex B_z, from dense boundary matrices of B_z alone.
std::size_t simplicial_homology(const bifilt::Bifiltration& b, const Grade& z, int i, Field field = Field(2));

/// dim (ker g / im f) at z for a short complex of free modules.
std::size_t pointwise_homology(const bifilt::ShortComplex& c, const Grade& z);

}  // namespace mph::oracle
