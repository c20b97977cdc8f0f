// Acceptance suite: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "phasespace/distributions.hpp"
#include "phasespace/measurement.hpp"
#include "phasespace/parallel.hpp"
#include "phasespace/pointer.hpp"
#include "phasespace/sampler.hpp"
#include "phasespace/states.hpp"
#include "support/oracles.hpp"
#include "support/random_states.hpp"

namespace {

using namespace phasespace;
using std::numbers::pi;

namespace tol {
constexpr double kCentralIdentity = 1e-8;
constexpr double kCentralSeconds = 30.0;
constexpr double kPointer = 1e-5;
constexpr double kPointerSeconds = 60.0;
constexpr double kMonteCarloTv = 0.02;
constexpr double kMonteCarloSeconds = 120.0;
constexpr double kWignerVacuum = 1e-6;
constexpr double kWignerFock1 = 1e-4;
constexpr double kHusimiVacuum = 1e-6;
constexpr double kPovm = 1e-8;
constexpr double kCoherentFidelityLoss = 1e-4;
constexpr double kSqrtForm = 1e-4;
constexpr double kMarginal = 1e-6;
constexpr double kTraceProduct = 1e-5;
constexpr double kQMoment = 1e-4;
constexpr double kConditionalTv = 0.05;
}  // namespace tol

constexpr std::int64_t kShots = 1000000;
constexpr std::uint64_t kSeed = 20240611;

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

double linf(const std::vector<double>& a, const std::vector<double>& b) {
  double worst = 0;
  for (std::size_t i = 0; i < a.size(); ++i) worst = std::max(worst, std::abs(a[i] - b[i]));
  return worst;
}

double l1(const std::vector<double>& a, const std::vector<double>& b, double step) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::abs(a[i] - b[i]);
  return s * step;
}

std::vector<WaveFunction> random_states(const Grid& grid, int count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<WaveFunction> out;
  for (int i = 0; i < count; ++i) out.push_back(testing_support::random_state(grid, rng));
  return out;
}

const Grid kGrid = default_grid();

Outcome central_identity() {
  const auto states = random_states(kGrid, 20, 1);
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  for (const auto& psi : states) {
    for (double delta : {0.25, 1.0, 4.0}) {
      worst = std::max(worst, linf(successive_density(psi, delta).values, husimi(psi, delta).values));
    }
  }
  const double t = seconds_since(t0);
  return {worst < tol::kCentralIdentity && t < tol::kCentralSeconds,
          fmt("successive_density vs husimi, 20 states x 3 widths: max |diff| %.3e (tol %.0e), %.1f s (limit %.0f s)",
              worst, tol::kCentralIdentity, t, tol::kCentralSeconds)};
}

Outcome pointer_equivalence() {
  const std::vector<std::pair<const char*, WaveFunction>> states = {
      {"vacuum", vacuum(kGrid)}, {"fock 1", fock_state(kGrid, 1)}, {"cat 2", cat_state(kGrid, 2, 1)}};
  const auto t0 = std::chrono::steady_clock::now();
  double worst = 0;
  std::string where;
  for (const auto& [name, psi] : states) {
    for (double g : {1.0, 0.5}) {
      const double d = pointer_vs_direct(psi, {g, 1.0});
      if (d >= worst) {
        worst = d;
        where = fmt("%s, g=%.1f", name, g);
      }
    }
  }
  const double t = seconds_since(t0);
  return {worst < tol::kPointer && t < tol::kPointerSeconds,
          fmt("pointer model vs direct at delta=1/g^2, %zu x 256 device grid: max |diff| %.3e at %s (tol %.0e), "
              "%.1f s (limit %.0f s)",
              kDefaultDeviceN, worst, where.c_str(), tol::kPointer, t, tol::kPointerSeconds)};
}

SampleResult vacuum_run;

Outcome monte_carlo() {
  const WaveFunction vac = vacuum(kGrid);
  const auto t0 = std::chrono::steady_clock::now();
  vacuum_run = sample_joint(vac, 1.0, kShots, kSeed, {32, 32});
  const double t = seconds_since(t0);
  const auto mass = coarsen_mass(husimi(vac, 1.0), vacuum_run.histogram.x, vacuum_run.histogram.p);
  const double tv = total_variation(histogram_mass(vacuum_run.histogram), mass);
  const double noise = shot_noise_tv(mass, kShots);
  return {tv < tol::kMonteCarloTv && t < tol::kMonteCarloSeconds,
          fmt("1e6-shot histogram vs husimi(vacuum, 1), 32x32 bins: TV %.4f (tol %.2f, shot-noise scale %.4f), "
              "%.1f s (limit %.0f s)",
              tv, tol::kMonteCarloTv, noise, t, tol::kMonteCarloSeconds)};
}

Outcome analytic_anchors() {
  const std::size_t o = kGrid.n() / 2;
  const double w0 = wigner(vacuum(kGrid)).at(o, o);
  const double w1 = wigner(fock_state(kGrid, 1)).at(o, o);
  const double q0 = husimi(vacuum(kGrid), 1.0).at(o, o);
  const auto vac = [](double x) { return oracle::cplx(oracle::vacuum(x)); };
  const auto f1 = [](double x) { return oracle::cplx(oracle::fock(1, x)); };
  const double w0_direct = oracle::wigner_direct(vac, 0, 0);
  const double w1_direct = oracle::wigner_direct(f1, 0, 0);
  const double q0_direct = oracle::husimi_direct(vac, 0, 0, 1.0);
  const bool ok = std::abs(w0 - 1 / pi) < tol::kWignerVacuum && std::abs(w0 - w0_direct) < tol::kWignerVacuum &&
                  std::abs(w1 + 1 / pi) < tol::kWignerFock1 && std::abs(w1 - w1_direct) < tol::kWignerFock1 &&
                  std::abs(q0 - 1 / (2 * pi)) < tol::kHusimiVacuum && std::abs(q0 - q0_direct) < tol::kHusimiVacuum;
  return {ok, fmt("W_vac(0,0)-1/pi %.2e, W_fock1(0,0)+1/pi %.2e, Q_vac(0,0)-1/2pi %.2e; vs quadrature "
                  "%.2e %.2e %.2e",
                  w0 - 1 / pi, w1 + 1 / pi, q0 - 1 / (2 * pi), w0 - w0_direct, w1 - w1_direct, q0 - q0_direct)};
}

Outcome operator_identities() {
  double povm = 0;
  for (double delta : {0.25, 1.0, 4.0}) povm = std::max(povm, povm_completeness_deviation(kGrid, delta));

  double min_fidelity = 1;
  for (std::size_t j = 96; j <= 160; j += 4) {
    std::vector<cplx> amp(kGrid.n(), 0.0);
    amp[j] = 1.0 / std::sqrt(kGrid.dp());
    const WaveFunction plane = to_position(WaveFunction(kGrid, Basis::Momentum, std::move(amp)));
    const double f = fidelity(apply_m(plane, {0.0, 1.0}), coherent_state(kGrid, 0.0, kGrid.p(j), 1.0));
    min_fidelity = std::min(min_fidelity, f);
  }

  const Grid small = make_grid(64, -8, 8);
  double sqrt_dev = 0;
  for (double x : {0.0, 1.25, -3.0}) sqrt_dev = std::max(sqrt_dev, sqrt_form_check(small, x, 1.0).deviation);
  sqrt_dev = std::max(sqrt_dev, sqrt_form_identity_deviation(small, 1.0));

  const bool ok = povm < tol::kPovm && min_fidelity > 1 - tol::kCoherentFidelityLoss && sqrt_dev < tol::kSqrtForm;
  return {ok, fmt("POVM completeness %.2e (tol %.0e); plane wave -> coherent min fidelity 1-%.2e (tol %.0e); "
                  "square-root form at n=64 %.2e (tol %.0e)",
                  povm, tol::kPovm, 1 - min_fidelity, tol::kCoherentFidelityLoss, sqrt_dev, tol::kSqrtForm)};
}

Outcome marginals() {
  double wx = 0, wp = 0, qx = 0;
  for (const auto& psi : random_states(kGrid, 10, 6)) {
    const auto w = wigner(psi);
    wx = std::max(wx, linf(marginal(w, MarginalAxis::OverP), psi.density()));
    wp = std::max(wp, linf(marginal(w, MarginalAxis::OverX), to_momentum(psi).density()));
    const auto rho = psi.density();
    std::vector<double> smoothed(kGrid.n());
    for (std::size_t k = 0; k < kGrid.n(); ++k) {
      double s = 0;
      for (std::size_t l = 0; l < kGrid.n(); ++l) s += std::exp(-std::pow(kGrid.x(k) - kGrid.x(l), 2)) * rho[l];
      smoothed[k] = s * kGrid.dx() / std::sqrt(pi);
    }
    qx = std::max(qx, linf(marginal(husimi(psi, 1.0), MarginalAxis::OverP), smoothed));
  }
  const double worst = std::max({wx, wp, qx});
  return {worst < tol::kMarginal,
          fmt("Wigner x-marginal %.2e, p-marginal %.2e, Husimi smoothed x-marginal %.2e (tol %.0e)", wx, wp, qx,
              tol::kMarginal)};
}

Outcome limits() {
  const Grid fine = make_grid(1024, -16, 16);
  int sharp_ok = 0;
  double last_sharp = 0;
  for (const auto& psi : random_states(fine, 10, 7)) {
    const auto rho = psi.density();
    double prev = 1e300;
    bool ok = true;
    for (double delta : {1.0, 0.1, 0.01}) {
      const double d = l1(m_density(psi, delta), rho, fine.dx());
      ok = ok && d < prev;
      prev = d;
    }
    sharp_ok += ok;
    last_sharp = std::max(last_sharp, prev);
  }
  int unsharp_ok = 0;
  double worst_fidelity = 1;
  for (const auto& psi : random_states(kGrid, 10, 8)) {
    double prev = -1;
    bool ok = true;
    for (double delta : {10.0, 1e3, 1e6}) {
      const double f = fidelity(apply_m(psi, {0.0, delta}), psi);
      ok = ok && f > prev;
      prev = f;
    }
    unsharp_ok += ok;
    worst_fidelity = std::min(worst_fidelity, prev);
  }
  return {sharp_ok == 10 && unsharp_ok == 10,
          fmt("sharp L1 decreasing on %d/10 states (max L1 at 0.01: %.2e); unsharp fidelity increasing on %d/10 "
              "(min at 1e6: 1-%.2e)",
              sharp_ok, last_sharp, unsharp_ok, 1 - worst_fidelity)};
}

Outcome expectations() {
  const auto states = random_states(kGrid, 10, 9);
  double trace_dev = 0;
  for (const auto& psi : states) {
    const auto w = wigner(psi);
    for (auto obs : kAllObservables) {
      trace_dev = std::max(trace_dev, std::abs(trace_product(w, observable_wigner(kGrid, obs)) - expectation(psi, obs)));
    }
  }
  double q_dev = 0;
  for (const auto& psi : states) {
    for (double delta : {0.5, 1.0, 2.0}) {
      const auto q = husimi(psi, delta);
      for (auto obs : kAllObservables) q_dev = std::max(q_dev, std::abs(q_moment(q, obs) - expectation(psi, obs)));
    }
  }
  return {trace_dev < tol::kTraceProduct && q_dev < tol::kQMoment,
          fmt("trace-product expectations %.2e (tol %.0e); Husimi moments after ordering corrections %.2e (tol %.0e)",
              trace_dev, tol::kTraceProduct, q_dev, tol::kQMoment)};
}

Outcome conditional() {
  const WaveFunction vac = vacuum(kGrid);
  const auto q = husimi(vac, 1.0);
  const ConditionalQ c = conditional_q(q, vac, 0.0);
  const Axis xb = vacuum_run.histogram.x;
  const double half = 0.5 * kGrid.dp();
  std::vector<double> counts(xb.count, 0.0);
  std::size_t kept = 0;
  const double lo = xb.start - 0.5 * xb.step;
  for (const auto& r : vacuum_run.records) {
    if (std::abs(r.p - c.p) > half) continue;
    const auto b = static_cast<std::size_t>(std::floor((r.x - lo) / xb.step));
    if (b >= xb.count) continue;
    counts[b] += 1;
    ++kept;
  }
  for (double& v : counts) v /= static_cast<double>(kept);
  std::vector<double> expected(xb.count, 0.0);
  for (std::size_t k = 0; k < kGrid.n(); ++k) {
    const auto b = static_cast<std::size_t>(std::floor((kGrid.x(k) - lo) / xb.step));
    expected[std::min(b, xb.count - 1)] += c.normalized[k] * kGrid.dx();
  }
  const double tv = total_variation(counts, expected);
  return {tv < tol::kConditionalTv,
          fmt("post-selected |p*| <= dp/2 (%zu of %lld shots) vs normalized conditional: TV %.4f (tol %.2f); "
              "literal ratio normalization defect %+.4f",
              kept, static_cast<long long>(kShots), tv, tol::kConditionalTv, c.normalization_defect)};
}

}  // namespace

int main() {
  configure_threads_from_env();
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"central identity", central_identity},
      {"pointer-model equivalence", pointer_equivalence},
      {"Monte Carlo convergence", monte_carlo},
      {"analytic anchors", analytic_anchors},
      {"operator identities", operator_identities},
      {"marginal identities", marginals},
      {"limit behavior", limits},
      {"expectation identities", expectations},
      {"conditional distribution", conditional},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      out = criteria[i].second();
    } catch (const std::exception& e) {
      out = {false, std::string("threw: ") + e.what()};
    }
    failures += !out.pass;
    std::printf("[%s] %zu %s: %s\n", out.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, out.detail.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
