// eigensolver.hpp - dense symmetric eigendecomposition
#ifndef INHCLUST_EIGENSOLVER_HPP
#define INHCLUST_EIGENSOLVER_HPP

#include <vector>

namespace inhclust {

struct EigenDecomposition {
    int n = 0;
    std::vector<double> values;  // ascending
    std::vector<double> vectors; // row-major; component i of eigenvector j at [i*n + j]

    std::vector<double> eigenvector(int j) const;
};

// Householder tridiagonalization followed by implicit-shift QL, with
// eigenvector accumulation. Deterministic; throws after the iteration cap.
EigenDecomposition eigen_symmetric(std::vector<double> matrix, int n);

} // namespace inhclust

#endif // INHCLUST_EIGENSOLVER_HPP
