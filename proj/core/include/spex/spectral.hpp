#pragma once

#include <stdexcept>
#include <vector>

#include "spex/graph.hpp"

namespace spex {

struct SpectralOptions {
  double tolerance = 1e-10;   // infinity-norm bound on A*x - rho*x
  long max_iterations = 1000000;
};

struct SpectrumResult {
  double rho = 0.0;
  std::vector<double> perron;  // max entry 1, supported on dominant component
  double residual = 0.0;
  long iterations = 0;
  int dominant_component = 0;
};

/// Power iteration hit the iteration cap before meeting tolerance. Carries
/// the best iterate so far; never a silent wrong answer.
class ConvergenceError : public std::runtime_error {
 public:
  ConvergenceError(const std::string& what, SpectrumResult best);
  const SpectrumResult& best() const { return best_; }

 private:
  SpectrumResult best_;
};

/// Spectral radius and max-normalized Perron vector. Iterates on A + I per
/// connected component (the shift keeps bipartite components from
/// oscillating); reports the componentwise maximum. Requires n >= 1.
SpectrumResult spectral_radius(const Graph& g, const SpectralOptions& opts = {});
SpectrumResult spectral_radius(const Graph& g, double tolerance);

/// rho(K_{2,n-2}) = sqrt(2n-4), n >= 3.
double closed_form_rho_k2_bar(int n);
/// rho(K_2 + (n-2)K_1) = (1 + sqrt(8n-15)) / 2, n >= 2.
double closed_form_rho_book(int n);
/// Upper bound 2 + sqrt(2n-6) on the spectral radius of planar graphs, n >= 3.
double ellingham_zha_bound(int n);

struct EigenWindowEntry {
  int vertex = 0;
  double value = 0.0;
  bool inside = false;
};

struct EigenWindowReport {
  SpectrumResult spectrum;
  double window_lo = 0.0;  // 2/rho
  double window_hi = 0.0;  // 2/rho + 4.496/rho^2
  bool hubs_at_one = false;
  std::vector<EigenWindowEntry> entries;  // vertices other than u1, u2
  bool all_inside = false;
};

/// For a connected G in which u1 and u2 are both adjacent to every other
/// vertex: checks x_{u1} = x_{u2} = 1 within tol and reports, per remaining
/// vertex, membership of x_u in [2/rho, 2/rho + 4.496/rho^2] within tol.
/// Rejects before any spectral work if the precondition fails.
EigenWindowReport eigen_window_check(const Graph& g, int u1, int u2, double tol);

}  // namespace spex
