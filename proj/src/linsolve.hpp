#pragma once

#include <Eigen/Dense>

#include "grid.hpp"

namespace pipeflow {

// Dense direct solve with row equilibration, partial-pivot LU, and two rounds
// of iterative refinement against the unscaled matrix.  Collocation systems at
// large flux are stiff; refinement recovers most of the lost digits cheaply.
struct DenseSolution {
    CVec x;
    double rcond_estimate = 0.0;  // reciprocal condition estimate of the scaled matrix
};

DenseSolution solve_dense(const CMat& A, const CVec& b);

}  // namespace pipeflow
