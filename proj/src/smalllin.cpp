#include "wanopt/smalllin.hpp"

#include <string>

namespace wanopt {

std::vector<EigenPair> hermitian_eigensolve(const MatrixXcd& h) {
  const double dev = (h - h.adjoint()).norm();
  if (dev > 1e-10 * std::max(1.0, h.norm()))
    throw NonHermitianInput("matrix deviates from Hermitian by " +
                            std::to_string(dev));
  Eigen::SelfAdjointEigenSolver<MatrixXcd> solver(h);
  if (solver.info() != Eigen::Success)
    throw NonHermitianInput("eigensolver failed to converge");
  std::vector<EigenPair> pairs(size_t(h.rows()));
  for (Eigen::Index j = 0; j < h.rows(); ++j) {
    pairs[size_t(j)].value = solver.eigenvalues()(j);
    pairs[size_t(j)].vector = solver.eigenvectors().col(j);
  }
  return pairs;
}

VectorXcd pseudoinverse_apply(const MatrixXcd& h, double e, const VectorXcd& q,
                              double gap_tol) {
  const Eigen::Index n = h.rows();
  if (n == 1) return VectorXcd::Zero(1);
  MatrixXcd shifted = h - e * MatrixXcd::Identity(n, n);
  Eigen::JacobiSVD<MatrixXcd> svd(shifted,
                                  Eigen::ComputeFullU | Eigen::ComputeFullV);
  // Singular values are sorted decreasing; the last one belongs to the
  // tracked eigenvalue and is dropped, the next-smallest is the gap.
  const double gap = svd.singularValues()(n - 2);
  if (gap < gap_tol)
    throw NearDegenerate("spectral gap " + std::to_string(gap) +
                         " below tolerance " + std::to_string(gap_tol) +
                         " near eigenvalue " + std::to_string(e));
  VectorXcd coeffs = svd.matrixU().leftCols(n - 1).adjoint() * q;
  coeffs.array() /= svd.singularValues().head(n - 1).array();
  return svd.matrixV().leftCols(n - 1) * coeffs;
}

BandDerivative band_derivative(const MatrixXcd& h, const MatrixXcd& dh,
                               const EigenPair& pair, double gap_tol) {
  BandDerivative out;
  const std::complex<double> de = pair.vector.dot(dh * pair.vector);
  out.denergy = de.real();
  out.dvector = -pseudoinverse_apply(h, pair.value, dh * pair.vector, gap_tol);
  return out;
}

}  // namespace wanopt
