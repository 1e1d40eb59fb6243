#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "mtn/errors.hpp"
#include "mtn/scalar.hpp"
#include "mtn/statevector.hpp"

namespace mtn {

enum class WalkKind { motzkin, dyck };

/// Lattice walk given by its steps; heights are the running prefix sums.
struct Walk {
  std::vector<int> steps;   // motzkin: {-1,0,1}, dyck: {-1,1}
  std::vector<int> heights; // heights.size() == steps.size() + 1

  static Walk from_steps(std::vector<int> s, int start_height = 0);
};

struct WalkBoundary {
  enum class Mode { open, fixed, net_height } mode = Mode::open;
  int p = 0; // start height (fixed)
  int q = 0; // end height (fixed)
  int k = 0; // net height (net_height)

  static WalkBoundary open() { return {}; }
  static WalkBoundary fixed(int p, int q) {
    return {Mode::fixed, p, q, q - p};
  }
  static WalkBoundary net_height(int k) {
    return {Mode::net_height, 0, k, k};
  }
};

inline constexpr int kDefaultWalkCap = 20;

/// All walks of the given kind and boundary, in lexicographic step order
/// (-1 < 0 < 1). "open" and "fixed" constrain heights to stay nonnegative;
/// "net_height" only fixes the endpoint sum.
std::vector<Walk> enumerate_walks(int n_steps, WalkKind kind,
                                  const WalkBoundary& boundary = WalkBoundary::open(),
                                  int cap = kDefaultWalkCap);

/// Trapezoid area between the walk and the axis: sum of (h_{x-1}+h_x)/2.
/// Integer for closed excursions, otherwise possibly a half-integer.
Rational walk_area(const Walk& w);

/// Area as sum of the strictly interior heights. Equals walk_area for walks
/// that start and end at height zero.
long walk_area_integer(const Walk& w);

template <class S>
StateVector<S> ground_state_vector(int n_sites, const S& t, WalkKind kind,
                                   int cap = kDefaultWalkCap) {
  StateVector<S> v(n_sites,
                   kind == WalkKind::motzkin ? SiteKind::spin1 : SiteKind::spin_half);
  for (const Walk& w : enumerate_walks(n_sites, kind, WalkBoundary::open(), cap)) {
    long a = walk_area_integer(w);
    v.set(w.steps, scalar_traits<S>::pow(t, static_cast<unsigned long>(a)));
  }
  return v;
}

/// Equal-weight superposition over all spin configurations with total
/// magnetization k (no height constraint).
template <class S>
StateVector<S> periodic_sector_state(int n_sites, int k) {
  if (k < -n_sites || k > n_sites)
    throw argument_error("periodic_sector_state: |k| exceeds n_sites");
  StateVector<S> v(n_sites, SiteKind::spin1);
  std::vector<int> cfg(n_sites, -1);
  while (true) {
    int sum = 0;
    for (int s : cfg) sum += s;
    if (sum == k) v.set(cfg, scalar_traits<S>::one());
    int i = 0;
    for (; i < n_sites; ++i) {
      if (cfg[i] < 1) {
        ++cfg[i];
        break;
      }
      cfg[i] = -1;
    }
    if (i == n_sites) break;
  }
  return v;
}

struct SchmidtSpectrum {
  std::vector<Rational> weights; // normalized, exact; descending
  int cut = 0;
  bool exact = true; // false when the float fallback produced the weights
};

/// Squared Schmidt coefficients for the bipartition [0,cut) | [cut,n).
/// Exact when every fixed-charge block of the amplitude matrix has rank one,
/// which holds for all ground-state and sector states built here.
template <class S>
SchmidtSpectrum schmidt_spectrum(const StateVector<S>& state, int cut);

double entanglement_entropy(const SchmidtSpectrum& spec);

}  // namespace mtn
