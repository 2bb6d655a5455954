#include "spex/spectral.hpp"

#include <algorithm>
#include <cmath>

namespace spex {

ConvergenceError::ConvergenceError(const std::string& what, SpectrumResult best)
    : std::runtime_error(what), best_(std::move(best)) {}

namespace {

struct ComponentSpectrum {
  double rho = 0.0;
  double residual = 0.0;
  long iterations = 0;
  std::vector<double> x;  // indexed by position within the component
  bool converged = true;
};

// Power iteration on (A + I) restricted to one component, started from the
// all-ones vector. rho is the Rayleigh quotient minus one; the residual
// equals ||A x - rho x||_inf because the shift cancels.
ComponentSpectrum component_power_iteration(const Graph& g,
                                            const std::vector<int>& verts,
                                            const SpectralOptions& opts) {
  int k = static_cast<int>(verts.size());
  std::vector<int> local(g.vertex_count(), -1);
  for (int i = 0; i < k; ++i) local[verts[i]] = i;

  ComponentSpectrum out;
  out.x.assign(k, 1.0);
  std::vector<double> y(k, 0.0);

  for (long it = 1; it <= opts.max_iterations; ++it) {
    double dot_xy = 0.0, dot_xx = 0.0;
    for (int i = 0; i < k; ++i) {
      double s = out.x[i];  // the +I shift
      g.neighbors(verts[i]).for_each([&](int w) { s += out.x[local[w]]; });
      y[i] = s;
      dot_xy += out.x[i] * s;
      dot_xx += out.x[i] * out.x[i];
    }
    double lambda = dot_xy / dot_xx;
    double resid = 0.0;
    for (int i = 0; i < k; ++i)
      resid = std::max(resid, std::abs(y[i] - lambda * out.x[i]));
    out.rho = lambda - 1.0;
    out.residual = resid;
    out.iterations = it;
    if (resid <= opts.tolerance) return out;
    double ymax = 0.0;
    for (double v : y) ymax = std::max(ymax, v);
    for (int i = 0; i < k; ++i) out.x[i] = y[i] / ymax;
  }
  out.converged = false;
  return out;
}

}  // namespace

SpectrumResult spectral_radius(const Graph& g, const SpectralOptions& opts) {
  int n = g.vertex_count();
  if (n < 1) throw std::invalid_argument("spectral_radius: need n >= 1");
  if (opts.tolerance <= 0.0)
    throw std::invalid_argument("spectral_radius: tolerance must be positive");

  int ncomp = 0;
  std::vector<int> comp = connected_components(g, &ncomp);
  std::vector<std::vector<int>> members(ncomp);
  for (int v = 0; v < n; ++v) members[comp[v]].push_back(v);

  SpectrumResult result;
  result.perron.assign(n, 0.0);
  std::vector<ComponentSpectrum> spectra;
  spectra.reserve(ncomp);
  long total_iterations = 0;
  int dominant = 0;
  for (int c = 0; c < ncomp; ++c) {
    spectra.push_back(component_power_iteration(g, members[c], opts));
    total_iterations += spectra.back().iterations;
    if (spectra[c].rho > spectra[dominant].rho) dominant = c;
  }

  const ComponentSpectrum& dom = spectra[dominant];
  result.rho = dom.rho;
  result.residual = dom.residual;
  result.iterations = total_iterations;
  result.dominant_component = dominant;
  double xmax = *std::max_element(dom.x.begin(), dom.x.end());
  for (std::size_t i = 0; i < members[dominant].size(); ++i)
    result.perron[members[dominant][i]] = dom.x[i] / xmax;

  for (int c = 0; c < ncomp; ++c)
    if (!spectra[c].converged)
      throw ConvergenceError(
          "spectral_radius: iteration cap " + std::to_string(opts.max_iterations) +
              " reached at residual " + std::to_string(spectra[c].residual),
          result);
  return result;
}

SpectrumResult spectral_radius(const Graph& g, double tolerance) {
  SpectralOptions opts;
  opts.tolerance = tolerance;
  return spectral_radius(g, opts);
}

double closed_form_rho_k2_bar(int n) {
  if (n < 3) throw std::invalid_argument("closed_form_rho_k2_bar: need n >= 3");
  return std::sqrt(2.0 * n - 4.0);
}

double closed_form_rho_book(int n) {
  if (n < 2) throw std::invalid_argument("closed_form_rho_book: need n >= 2");
  return (1.0 + std::sqrt(8.0 * n - 15.0)) / 2.0;
}

double ellingham_zha_bound(int n) {
  if (n < 3) throw std::invalid_argument("ellingham_zha_bound: need n >= 3");
  return 2.0 + std::sqrt(2.0 * n - 6.0);
}

EigenWindowReport eigen_window_check(const Graph& g, int u1, int u2, double tol) {
  int n = g.vertex_count();
  if (u1 < 0 || u1 >= n || u2 < 0 || u2 >= n || u1 == u2)
    throw std::invalid_argument("eigen_window_check: bad hub vertices");
  for (int v = 0; v < n; ++v) {
    if (v == u1 || v == u2) continue;
    if (!g.has_edge(u1, v) || !g.has_edge(u2, v))
      throw std::invalid_argument(
          "eigen_window_check: hubs must be adjacent to every other vertex");
  }
  if (!is_connected(g))
    throw std::invalid_argument("eigen_window_check: graph must be connected");

  EigenWindowReport report;
  SpectralOptions opts;
  opts.tolerance = std::min(tol, 1e-10);
  report.spectrum = spectral_radius(g, opts);
  double rho = report.spectrum.rho;
  report.window_lo = 2.0 / rho;
  report.window_hi = 2.0 / rho + 4.496 / (rho * rho);
  const auto& x = report.spectrum.perron;
  report.hubs_at_one =
      std::abs(x[u1] - 1.0) <= tol && std::abs(x[u2] - 1.0) <= tol;
  report.all_inside = true;
  for (int v = 0; v < n; ++v) {
    if (v == u1 || v == u2) continue;
    EigenWindowEntry entry;
    entry.vertex = v;
    entry.value = x[v];
    entry.inside =
        x[v] >= report.window_lo - tol && x[v] <= report.window_hi + tol;
    report.all_inside = report.all_inside && entry.inside;
    report.entries.push_back(entry);
  }
  return report;
}

}  // namespace spex
