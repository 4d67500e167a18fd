#pragma once

#include <vector>

#include "arcscatter/arc.hpp"
#include "arcscatter/cosine_space.hpp"
#include "arcscatter/kernel_operators.hpp"

namespace arcscatter {

enum class BoundaryCondition { Dirichlet, Neumann };
enum class Formulation { SecondKindNS, FirstKindS, FirstKindN };
enum class SolverPath { Gmres, DirectLU };

struct ScatteringProblem {
  Arc arc;
  double k;                  // wavenumber, > 0
  BoundaryCondition bc;
  Vec2 incident_direction;   // unit plane-wave direction
  int resolution;            // cosine truncation N
};

struct SolveResult {
  CosineSeries density;           // unknown of the solved linear system
  CosineSeries physical_density;  // phi for Dirichlet, psi = S phi for Neumann
  int iterations = 0;
  std::vector<double> residual_history;
  Formulation formulation = Formulation::SecondKindNS;
  bool converged = false;
  double boundary_residual = 0.0;  // ||S phi - f|| / ||f|| when applicable
};

/// Right-hand boundary data of Eq-type -u_inc (Dirichlet) or -du_inc/dn
/// (Neumann) for the plane wave exp(i k d . x), as cosine coefficients.
CosineSeries boundary_data(const ScatteringProblem& problem);

struct GmresResult {
  VectorXc x;
  int iterations = 0;
  std::vector<double> residual_history;
  bool converged = false;
};

/// Full (non-restarted) GMRES with modified Gram-Schmidt and relative
/// residual stopping; deterministic.
GmresResult gmres(const MatrixXc& a, const VectorXc& b, double tol,
                  int max_iter);

SolveResult solve(const ScatteringProblem& problem, Formulation formulation,
                  double tol, int max_iter,
                  SolverPath path = SolverPath::Gmres);

/// Scattered field at off-arc points via the layer-potential quadrature on
/// the nodal grid. Points closer to the arc than 2*pi/(k N) * max tau are
/// rejected.
std::vector<Complex> evaluate_field(const SolveResult& result,
                                    const ScatteringProblem& problem,
                                    const std::vector<Vec2>& points);

/// Far-field pattern u_inf(angle) from the large-argument kernel asymptotics
/// (prefactor exp(i pi/4)/sqrt(8 pi k), phase exp(-i k xhat . r')).
std::vector<Complex> far_field(const SolveResult& result,
                               const ScatteringProblem& problem,
                               const std::vector<double>& angles);

}  // namespace arcscatter
