#ifndef WANOPT_HODGE_HPP
#define WANOPT_HODGE_HPP

#include "wanopt/grid.hpp"
#include "wanopt/lattice.hpp"

namespace wanopt {

/// Solves psi_xx + psi_yy = -g for a Lambda*-periodic psi on the torus:
/// psi_hat(m) = g_hat(m) / ||m1 a1 + m2 a2||^2 with the mean set to zero.
/// Throws NotSolvable when |mean(g)| exceeds solvability_tol; a genuinely
/// unsolvable right-hand side is how a nonzero Chern number shows up in the
/// curvature route.
GridField poisson_solve_torus(const GridField& g, const Lattice& lat,
                              double solvability_tol = 1e-8);

/// Helmholtz-Hodge split of a periodic vector field (Cartesian components):
/// f = -grad(psi) + (dF/dky, -dF/dkx) + (hx, hy).
struct HodgeDecomposition {
  GridField psi;
  GridField f_pot;
  double hx = 0.0;
  double hy = 0.0;
};

HodgeDecomposition hodge_decompose(const GridField& fx, const GridField& fy,
                                   const Lattice& lat);

/// Spectral divergence dfx/dkx + dfy/dky.
GridField cartesian_divergence(const Lattice& lat, const GridField& fx,
                               const GridField& fy);

/// Spectral curl dfy/dkx - dfx/dky.
GridField cartesian_curl(const Lattice& lat, const GridField& fx,
                         const GridField& fy);

}  // namespace wanopt

#endif
