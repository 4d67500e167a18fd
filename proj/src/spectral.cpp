#include "arcscatter/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "arcscatter/kernel_operators.hpp"

namespace arcscatter {
namespace {

void fill_statistics(SpectrumReport& report) {
  if (report.eigenvalues.empty()) return;
  std::sort(report.eigenvalues.begin(), report.eigenvalues.end(),
            [](const Complex& a, const Complex& b) {
              return a.real() != b.real() ? a.real() < b.real()
                                          : a.imag() < b.imag();
            });
  report.min_abs = 1e300;
  report.max_abs = 0.0;
  Complex mean = 0.0;
  std::vector<double> dist;
  dist.reserve(report.eigenvalues.size());
  for (const Complex& ev : report.eigenvalues) {
    report.min_abs = std::min(report.min_abs, std::abs(ev));
    report.max_abs = std::max(report.max_abs, std::abs(ev));
    mean += ev;
    dist.push_back(std::abs(ev - Complex(-0.25)));
  }
  report.cluster_center = mean / static_cast<double>(report.eigenvalues.size());
  std::sort(dist.begin(), dist.end());
  report.cluster_radius_quantiles.clear();
  for (double q : {0.5, 0.8, 0.9, 1.0}) {
    const auto idx = static_cast<size_t>(
        std::min<double>(dist.size() - 1, std::ceil(q * dist.size()) - 1));
    report.cluster_radius_quantiles.push_back(dist[idx]);
  }
}

}  // namespace

SpectrumReport spectrum(const OperatorMatrix& op, const std::string& kind,
                        double k) {
  const int n = op.size();
  if (n > 4096) throw std::invalid_argument("spectrum: N must be <= 4096");
  Eigen::ComplexEigenSolver<MatrixXc> solver(op.entries, true);
  if (solver.info() != Eigen::Success)
    throw std::runtime_error("spectrum: eigensolver failed");

  // backward-stability sample check
  const double op_norm = op.entries.norm();
  for (int i = 0; i < n; i += std::max(1, n / 8)) {
    const VectorXc v = solver.eigenvectors().col(i);
    const double res =
        (op.entries * v - solver.eigenvalues()[i] * v).norm() / v.norm();
    if (res > 1e-10 * std::max(op_norm, 1.0))
      throw std::runtime_error("spectrum: eigenpair residual too large");
  }

  SpectrumReport report;
  report.operator_kind = kind;
  report.k = k;
  report.resolution = n;
  report.eigenvalues.assign(solver.eigenvalues().data(),
                            solver.eigenvalues().data() + n);
  fill_statistics(report);
  return report;
}

double cluster_fraction(const SpectrumReport& report, Complex center,
                        double radius) {
  if (report.eigenvalues.empty()) return 0.0;
  int inside = 0;
  for (const Complex& ev : report.eigenvalues)
    if (std::abs(ev - center) <= radius) ++inside;
  return static_cast<double>(inside) / report.eigenvalues.size();
}

CalderonReport calderon_remainder(const Arc& arc, double k, int N) {
  const MatrixXc s = assemble_S(arc, k, N).matrix.entries;
  const MatrixXc nn = assemble_N(arc, k, N).matrix.entries;
  const MatrixXc product = nn * s;
  const MatrixXc j0tau = tau_conjugated(arc, TauKind::J0tau, N).entries;
  const MatrixXc remainder = product - j0tau;

  CalderonReport report;
  report.product = spectrum(OperatorMatrix{product, 0, 0}, "NS", k);
  report.remainder_max_norm = remainder.cwiseAbs().maxCoeff();

  Eigen::BDCSVD<MatrixXc> svd(remainder);
  const Eigen::VectorXd sigma = svd.singularValues();
  report.remainder.operator_kind = "K";
  report.remainder.k = k;
  report.remainder.resolution = N;
  const double s0 = sigma.size() > 0 ? sigma[0] : 0.0;
  for (int j = 0; j < sigma.size(); ++j) {
    const double ratio = s0 > 0.0 ? sigma[j] / s0 : 0.0;
    report.remainder.singular_value_decay.push_back(ratio);
    if (report.rank_cut_index < 0 && ratio < 1e-6) report.rank_cut_index = j;
  }
  return report;
}

}  // namespace arcscatter
