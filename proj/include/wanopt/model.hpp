#ifndef WANOPT_MODEL_HPP
#define WANOPT_MODEL_HPP

#include <Eigen/Dense>

#include <string>
#include <vector>

#include "wanopt/lattice.hpp"

namespace wanopt {

using Eigen::MatrixXcd;

/// One hopping block T_R at R = m1 a1 + m2 a2. Global Hermiticity of H(k)
/// requires the partner block at -R to satisfy T_{-R} = T_R^!*.
struct HoppingTerm {
  int m1 = 0;
  int m2 = 0;
  MatrixXcd t;
};

/// Hermitian Bloch family H(k) = sum_R T_R exp(i k . R) with analytic
/// kappa-derivatives. `band` indexes eigenvalues in ascending order.
struct TightBindingModel {
  std::string name;
  Lattice lat;
  int dim = 0;
  std::vector<HoppingTerm> terms;
  int band = 0;
  double gap_tol = 1e-8;
};

/// H(kappa1, kappa2) = sum_R T_R exp(2 pi i (m1 kappa1 + m2 kappa2));
/// Lambda*-periodic in (kappa1, kappa2) by construction.
MatrixXcd evaluate_h(const TightBindingModel& m, double kappa1, double kappa2);

/// Analytic derivative dH/d(kappa_axis), axis = 1 or 2.
MatrixXcd evaluate_dh(const TightBindingModel& m, double kappa1, double kappa2,
                      int axis);

/// Built-in models with the published lattices and constants:
///   "square3"         3x3 p/d model on a square lattice, top band
///   "haldane-trivial" time-reversal symmetric Haldane model, top band
///   "haldane-chern"   Haldane model with broken time reversal, C1 = 1
TightBindingModel builtin_model(const std::string& name);

/// True iff conj(H(k)) = H(-k) (checked at 100 deterministic sample points);
/// equivalent to every hopping block being real.
bool check_time_reversal(const TightBindingModel& m);

/// True iff all hopping blocks are real to 1e-12 (the coefficient form of
/// the time-reversal criterion).
bool all_terms_real(const TightBindingModel& m);

/// Validates Hermiticity pairing of the hopping terms and basic shape
/// constraints; throws HermiticityViolation / ShapeMismatch.
void validate_model(const TightBindingModel& m);

/// Parses the JSON model document (see README for the schema).
TightBindingModel parse_model_file(const std::string& text);

std::string write_model_file(const TightBindingModel& m);

}  // namespace wanopt

#endif
