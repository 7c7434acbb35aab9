#pragma once

#include <cstddef>
#include <vector>

namespace ekr {

// Eigenvalues of a dense symmetric n x n matrix (row-major, full storage) by
// cyclic Jacobi rotations. Sweeps run until the off-diagonal Frobenius norm
// drops below `off_tolerance` or `max_sweeps` is reached; returns the
// eigenvalues in ascending order.
std::vector<double> jacobi_eigenvalues(std::vector<double> matrix, std::size_t n,
                                       double off_tolerance = 1e-12,
                                       int max_sweeps = 100);

}  // namespace ekr
