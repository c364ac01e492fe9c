#ifndef WANOPT_SMALLLIN_HPP
#define WANOPT_SMALLLIN_HPP

#include <Eigen/Dense>

#include <vector>

#include "wanopt/errors.hpp"

namespace wanopt {

using Eigen::MatrixXcd;
using Eigen::VectorXcd;

struct EigenPair {
  double value = 0.0;
  VectorXcd vector;
};

/// All eigenpairs of a Hermitian matrix, values ascending, vectors
/// orthonormal. Throws NonHermitianInput when ||h - h^*||_F exceeds
/// 1e-10 * max(1, ||h||_F).
std::vector<EigenPair> hermitian_eigensolve(const MatrixXcd& h);

/// Applies the pseudoinverse of (h - e) that ignores the eigensubspace of e:
/// an SVD of (h - e) is taken and the smallest singular triplet discarded.
/// The result is orthogonal to the e-eigenvector. Throws NearDegenerate when
/// the second-smallest singular value (the spectral gap) is below gap_tol.
VectorXcd pseudoinverse_apply(const MatrixXcd& h, double e, const VectorXcd& q,
                              double gap_tol);

struct BandDerivative {
  double denergy = 0.0;
  VectorXcd dvector;
};

/// Directional derivative of a simple eigenpair:
///   dE = u^* dh u,   du = -(h - E)^+ dh u,
/// so u^* du = 0 (parallel-transport tangency).
BandDerivative band_derivative(const MatrixXcd& h, const MatrixXcd& dh,
                               const EigenPair& pair, double gap_tol);

}  // namespace wanopt

#endif
