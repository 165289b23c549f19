#pragma once

#include <vector>

#include "majorana/matrix4.hpp"

namespace majorana {

struct CommutantDims {
    int dim_commutant = 0;
    int dim_symmetric_commutant = 0;
};

// Dimension of {X : XG = GX for all G} and of its symmetric part, via SVD null
// spaces over the 16-dimensional space of 4x4 real matrices. Singular values
// below rel_cutoff * (largest singular value) count as zero.
CommutantDims commutant_certificate(const std::vector<RealMatrix4>& generators, double rel_cutoff = 1e-10);

}  // namespace majorana
