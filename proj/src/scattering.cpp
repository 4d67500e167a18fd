#include "arcscatter/scattering.hpp"

#include <cmath>
#include <stdexcept>

#include "arcscatter/bessel.hpp"

namespace arcscatter {
namespace {

void check_problem(const ScatteringProblem& p) {
  if (!(p.k > 0.0)) throw std::invalid_argument("scattering: k must be > 0");
  if (std::abs(p.incident_direction.norm() - 1.0) > 1e-12)
    throw std::invalid_argument("scattering: incident direction must be unit");
  if (p.resolution < 8)
    throw std::invalid_argument("scattering: resolution must be >= 8");
}

Complex incident_wave(const ScatteringProblem& p, const Vec2& x) {
  return std::exp(Complex(0.0, p.k * p.incident_direction.dot(x)));
}

}  // namespace

CosineSeries boundary_data(const ScatteringProblem& problem) {
  check_problem(problem);
  const int n = problem.resolution;
  const NodalGrid grid(n);
  VectorXc samples(n);
  for (int j = 0; j < n; ++j) {
    const Arc::Frame f = problem.arc.evaluate(std::cos(grid.nodes[j]));
    const Complex u = incident_wave(problem, f.point);
    if (problem.bc == BoundaryCondition::Dirichlet) {
      samples[j] = -u;
    } else {
      const double dn = problem.incident_direction.dot(f.normal);
      samples[j] = -Complex(0.0, problem.k * dn) * u;
    }
  }
  return to_coefficients(samples);
}

GmresResult gmres(const MatrixXc& a, const VectorXc& b, double tol,
                  int max_iter) {
  const int n = static_cast<int>(b.size());
  GmresResult out;
  const double bnorm = b.norm();
  if (bnorm == 0.0) {
    out.x = VectorXc::Zero(n);
    out.converged = true;
    out.residual_history.push_back(0.0);
    return out;
  }
  max_iter = std::min(max_iter, n);

  std::vector<VectorXc> v;
  v.push_back(b / bnorm);
  MatrixXc h = MatrixXc::Zero(max_iter + 1, max_iter);
  // Givens rotations applied to H to maintain the QR of the Hessenberg matrix
  std::vector<Complex> cs(max_iter), sn(max_iter);
  VectorXc g = VectorXc::Zero(max_iter + 1);
  g[0] = bnorm;
  out.residual_history.push_back(1.0);

  int m = 0;
  for (; m < max_iter; ++m) {
    VectorXc w = a * v[m];
    for (int i = 0; i <= m; ++i) {
      h(i, m) = v[i].dot(w);  // conjugated inner product
      w -= h(i, m) * v[i];
    }
    h(m + 1, m) = w.norm();
    if (std::abs(h(m + 1, m)) > 1e-300) v.push_back(w / h(m + 1, m));

    for (int i = 0; i < m; ++i) {
      const Complex t = std::conj(cs[i]) * h(i, m) + std::conj(sn[i]) * h(i + 1, m);
      h(i + 1, m) = -sn[i] * h(i, m) + cs[i] * h(i + 1, m);
      h(i, m) = t;
    }
    const double denom =
        std::sqrt(std::norm(h(m, m)) + std::norm(h(m + 1, m)));
    cs[m] = h(m, m) / denom;
    sn[m] = h(m + 1, m) / denom;
    h(m, m) = std::conj(cs[m]) * h(m, m) + std::conj(sn[m]) * h(m + 1, m);
    h(m + 1, m) = 0.0;
    g[m + 1] = -sn[m] * g[m];
    g[m] = std::conj(cs[m]) * g[m];

    const double rel = std::abs(g[m + 1]) / bnorm;
    out.residual_history.push_back(rel);
    if (rel < tol) {
      ++m;
      out.converged = true;
      break;
    }
    if (std::abs(h(m, m)) < 1e-300) break;  // breakdown
  }

  // back substitution on the m x m triangular system
  VectorXc y = VectorXc::Zero(m);
  for (int i = m - 1; i >= 0; --i) {
    Complex s = g[i];
    for (int j2 = i + 1; j2 < m; ++j2) s -= h(i, j2) * y[j2];
    y[i] = s / h(i, i);
  }
  out.x = VectorXc::Zero(n);
  for (int i = 0; i < m; ++i) out.x += y[i] * v[i];
  out.iterations = m;
  return out;
}

SolveResult solve(const ScatteringProblem& problem, Formulation formulation,
                  double tol, int max_iter, SolverPath path) {
  check_problem(problem);
  if (!(tol > 1e-14 && tol < 1e-2))
    throw std::invalid_argument("solve: tol must lie in (1e-14, 1e-2)");
  const int n = problem.resolution;

  const AssembledOperator s_op = assemble_S(problem.arc, problem.k, n);
  const CosineSeries data = boundary_data(problem);
  const VectorXc data_c = data.basis_coefficients();

  MatrixXc system;
  VectorXc rhs;
  MatrixXc n_matrix;
  const bool need_n = formulation != Formulation::FirstKindS;
  if (need_n)
    n_matrix = assemble_N(problem.arc, problem.k, n).matrix.entries;

  switch (formulation) {
    case Formulation::FirstKindS:
      if (problem.bc != BoundaryCondition::Dirichlet)
        throw std::invalid_argument("FirstKindS requires Dirichlet data");
      system = s_op.matrix.entries;
      rhs = data_c;
      break;
    case Formulation::FirstKindN:
      if (problem.bc != BoundaryCondition::Neumann)
        throw std::invalid_argument("FirstKindN requires Neumann data");
      system = n_matrix;
      rhs = data_c;
      break;
    case Formulation::SecondKindNS:
      system = n_matrix * s_op.matrix.entries;
      rhs = problem.bc == BoundaryCondition::Neumann ? data_c
                                                     : VectorXc(n_matrix * data_c);
      break;
  }

  SolveResult out;
  out.formulation = formulation;
  VectorXc x;
  if (path == SolverPath::DirectLU) {
    x = system.partialPivLu().solve(rhs);
    out.iterations = 0;
    out.converged = true;
    const double rn = rhs.norm();
    out.residual_history.push_back(
        rn > 0.0 ? (system * x - rhs).norm() / rn : 0.0);
  } else {
    GmresResult g = gmres(system, rhs, tol, max_iter);
    x = g.x;
    out.iterations = g.iterations;
    out.converged = g.converged;
    out.residual_history = std::move(g.residual_history);
  }

  out.density = CosineSeries::from_basis_coefficients(x);
  switch (formulation) {
    case Formulation::FirstKindS:
    case Formulation::FirstKindN:
      out.physical_density = out.density;
      break;
    case Formulation::SecondKindNS:
      if (problem.bc == BoundaryCondition::Neumann) {
        out.physical_density = CosineSeries::from_basis_coefficients(
            s_op.matrix.entries * x);
      } else {
        out.physical_density = out.density;
      }
      break;
  }

  // Consistency with the first-kind Dirichlet equation S phi = f.
  if (problem.bc == BoundaryCondition::Dirichlet) {
    const double fn = data_c.norm();
    if (fn > 0.0)
      out.boundary_residual =
          (s_op.matrix.entries * out.physical_density.basis_coefficients() -
           data_c)
              .norm() /
          fn;
  }
  return out;
}

std::vector<Complex> evaluate_field(const SolveResult& result,
                                    const ScatteringProblem& problem,
                                    const std::vector<Vec2>& points) {
  check_problem(problem);
  const int n = problem.resolution;
  const NodalGrid grid(n);

  double max_tau = 0.0;
  std::vector<Arc::Frame> frames(n);
  std::vector<double> sin2(n);
  for (int j = 0; j < n; ++j) {
    frames[j] = problem.arc.evaluate(std::cos(grid.nodes[j]));
    const double sj = std::sin(grid.nodes[j]);
    sin2[j] = sj * sj;
    max_tau = std::max(max_tau, frames[j].speed);
  }
  const double margin = 2.0 * kPi / (problem.k * n) * max_tau;

  const VectorXc density =
      from_coefficients(result.physical_density, grid);
  const double h = kPi / n;
  const bool dirichlet = problem.bc == BoundaryCondition::Dirichlet;

  std::vector<Complex> out;
  out.reserve(points.size());
  for (const Vec2& x : points) {
    double dist = 1e300;
    for (int j = 0; j < n; ++j)
      dist = std::min(dist, (x - frames[j].point).norm());
    if (dist <= margin)
      throw std::domain_error(
          "evaluate_field: point within the near-arc quadrature margin " +
          std::to_string(margin));
    Complex u = 0.0;
    for (int j = 0; j < n; ++j) {
      const Vec2 diff = frames[j].point - x;
      const double r = diff.norm();
      Complex kernel;
      if (dirichlet) {
        kernel = helmholtz_kernel(problem.k, r);
      } else {
        // dG/dn' = -(ik/4) H1(kR) (n' . (r' - x)) / R, times the sin^2 weight
        kernel = Complex(0.0, -0.25 * problem.k) *
                 bessel(BesselKind::H1_1, problem.k * r) *
                 (frames[j].normal.dot(diff) / r) * sin2[j];
      }
      u += kernel * density[j] * frames[j].speed;
    }
    out.push_back(h * u);
  }
  return out;
}

std::vector<Complex> far_field(const SolveResult& result,
                               const ScatteringProblem& problem,
                               const std::vector<double>& angles) {
  check_problem(problem);
  const int n = problem.resolution;
  const NodalGrid grid(n);
  std::vector<Arc::Frame> frames(n);
  std::vector<double> sin2(n);
  for (int j = 0; j < n; ++j) {
    frames[j] = problem.arc.evaluate(std::cos(grid.nodes[j]));
    const double sj = std::sin(grid.nodes[j]);
    sin2[j] = sj * sj;
  }
  const VectorXc density =
      from_coefficients(result.physical_density, grid);
  const double h = kPi / n;
  const Complex prefactor =
      std::exp(Complex(0.0, kPi / 4.0)) / std::sqrt(8.0 * kPi * problem.k);
  const bool dirichlet = problem.bc == BoundaryCondition::Dirichlet;

  std::vector<Complex> out;
  out.reserve(angles.size());
  for (double angle : angles) {
    const Vec2 xhat(std::cos(angle), std::sin(angle));
    Complex u = 0.0;
    for (int j = 0; j < n; ++j) {
      const Complex phase =
          std::exp(Complex(0.0, -problem.k * xhat.dot(frames[j].point)));
      Complex factor = phase;
      if (!dirichlet)
        factor *= Complex(0.0, -problem.k * xhat.dot(frames[j].normal)) *
                  sin2[j];
      u += factor * density[j] * frames[j].speed;
    }
    out.push_back(prefactor * h * u);
  }
  return out;
}

}  // namespace arcscatter
