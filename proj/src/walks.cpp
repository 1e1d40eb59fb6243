#include "mtn/walks.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "mtn/linalg.hpp"

namespace mtn {

Walk Walk::from_steps(std::vector<int> s, int start_height) {
  Walk w;
  w.steps = std::move(s);
  w.heights.reserve(w.steps.size() + 1);
  int h = start_height;
  w.heights.push_back(h);
  for (int step : w.steps) {
    h += step;
    w.heights.push_back(h);
  }
  return w;
}

namespace {

void recurse(std::vector<int>& steps, int pos, int n_steps, int h,
             const std::vector<int>& alphabet, bool floor_at_zero, int target_end,
             std::vector<Walk>& out) {
  if (pos == n_steps) {
    if (h == target_end) out.push_back(Walk::from_steps(steps));
    return;
  }
  int remaining = n_steps - pos;
  for (int s : alphabet) {
    int nh = h + s;
    if (floor_at_zero && nh < 0) continue;
    if (std::abs(target_end - nh) > remaining - 1) continue;  // unreachable
    steps[pos] = s;
    recurse(steps, pos + 1, n_steps, nh, alphabet, floor_at_zero, target_end, out);
  }
}

}  // namespace

std::vector<Walk> enumerate_walks(int n_steps, WalkKind kind,
                                  const WalkBoundary& boundary, int cap) {
  if (n_steps <= 0 || n_steps % 2 != 0)
    throw argument_error("enumerate_walks: n_steps must be even and positive");
  if (n_steps > cap) throw resource_error("enumerate_walks: n_steps exceeds cap");
  using Mode = WalkBoundary::Mode;
  int start = boundary.mode == Mode::fixed ? boundary.p : 0;
  int end = boundary.mode == Mode::open ? 0
            : boundary.mode == Mode::fixed ? boundary.q
                                           : boundary.k;
  if (boundary.mode == Mode::fixed && (boundary.p < 0 || boundary.q < 0))
    throw argument_error("enumerate_walks: fixed boundary heights must be nonnegative");
  bool floor_at_zero = boundary.mode != Mode::net_height;

  std::vector<int> alphabet =
      kind == WalkKind::motzkin ? std::vector<int>{-1, 0, 1} : std::vector<int>{-1, 1};
  std::vector<Walk> out;
  std::vector<int> steps(n_steps, 0);
  // Enumeration relative to the start height; shift afterwards for fixed walks.
  recurse(steps, 0, n_steps, start, alphabet, floor_at_zero, end, out);
  if (start != 0)
    for (Walk& w : out) w = Walk::from_steps(w.steps, start);
  return out;
}

Rational walk_area(const Walk& w) {
  long twice = 0;
  for (std::size_t x = 1; x < w.heights.size(); ++x)
    twice += w.heights[x - 1] + w.heights[x];
  Rational r(twice, 2);
  r.canonicalize();
  return r;
}

long walk_area_integer(const Walk& w) {
  long a = 0;
  for (std::size_t x = 1; x + 1 < w.heights.size(); ++x) a += w.heights[x];
  return a;
}

namespace {

int config_sum(const std::vector<int>& cfg, int from, int to) {
  int s = 0;
  for (int i = from; i < to; ++i) s += cfg[i];
  return s;
}

Rational to_rational(const BigInt& z) { return Rational(z); }
Rational to_rational(const Rational& q) { return q; }

}  // namespace

template <class S>
SchmidtSpectrum schmidt_spectrum(const StateVector<S>& state, int cut) {
  if (state.empty()) throw argument_error("schmidt_spectrum: zero state");
  if (cut <= 0 || cut >= state.n_sites())
    throw argument_error("schmidt_spectrum: cut must be interior");

  // Group entries into fixed-left-charge blocks.
  struct Block {
    std::map<std::vector<int>, std::map<std::vector<int>, S>> rows;
  };
  std::map<int, Block> blocks;
  for (const auto& [cfg, amp] : state.amplitudes()) {
    std::vector<int> l(cfg.begin(), cfg.begin() + cut);
    std::vector<int> r(cfg.begin() + cut, cfg.end());
    blocks[config_sum(cfg, 0, cut)].rows[l][r] = amp;
  }

  // Exact path: every block must be a rank-one rectangle. Then each block's
  // squared singular value is the plain sum of squared entries.
  bool rank_one = true;
  for (const auto& [charge, blk] : blocks) {
    const auto& rows = blk.rows;
    const auto& ref = rows.begin()->second;
    for (const auto& [l, row] : rows) {
      if (row.size() != ref.size()) {
        rank_one = false;
        break;
      }
      auto it = row.begin(), jt = ref.begin();
      for (; it != row.end(); ++it, ++jt) {
        if (it->first != jt->first) {
          rank_one = false;
          break;
        }
      }
      if (!rank_one) break;
      // Cross ratios against the reference row.
      const S& a0 = ref.begin()->second;
      const S& b0 = row.begin()->second;
      it = row.begin(), jt = ref.begin();
      for (; it != row.end(); ++it, ++jt) {
        if (!(it->second * a0 == jt->second * b0)) {
          rank_one = false;
          break;
        }
      }
      if (!rank_one) break;
    }
    if (!rank_one) break;
  }

  SchmidtSpectrum spec;
  spec.cut = cut;
  if (rank_one) {
    std::vector<Rational> raw;
    Rational total(0);
    for (const auto& [charge, blk] : blocks) {
      Rational w(0);
      for (const auto& [l, row] : blk.rows)
        for (const auto& [r, amp] : row) w += to_rational(S(amp * amp));
      raw.push_back(w);
      total += w;
    }
    for (Rational& w : raw) {
      w /= total;
      w.canonicalize();
      spec.weights.push_back(w);
    }
    std::sort(spec.weights.rbegin(), spec.weights.rend());
    spec.exact = true;
    return spec;
  }

  // Float fallback: eigenvalues of the Gram matrix of rows.
  std::vector<std::vector<int>> left;
  for (const auto& [cfg, amp] : state.amplitudes()) {
    std::vector<int> l(cfg.begin(), cfg.begin() + cut);
    if (left.empty() || left.back() != l) {
      if (std::find(left.begin(), left.end(), l) == left.end()) left.push_back(l);
    }
  }
  std::map<std::vector<int>, std::size_t> lidx;
  for (std::size_t i = 0; i < left.size(); ++i) lidx[left[i]] = i;
  std::map<std::vector<int>, std::map<std::size_t, double>> cols;
  for (const auto& [cfg, amp] : state.amplitudes()) {
    std::vector<int> l(cfg.begin(), cfg.begin() + cut);
    std::vector<int> r(cfg.begin() + cut, cfg.end());
    cols[r][lidx[l]] = scalar_traits<S>::to_double(amp);
  }
  std::vector<std::vector<double>> gram(left.size(),
                                        std::vector<double>(left.size(), 0.0));
  for (const auto& [r, col] : cols)
    for (const auto& [i, vi] : col)
      for (const auto& [j, vj] : col) gram[i][j] += vi * vj;
  double trace = 0;
  for (std::size_t i = 0; i < left.size(); ++i) trace += gram[i][i];
  std::vector<double> eig = jacobi_eigenvalues(std::move(gram));
  std::sort(eig.rbegin(), eig.rend());
  for (double e : eig) {
    if (e / trace > 1e-14) {
      Rational w(e / trace);
      spec.weights.push_back(w);
    }
  }
  spec.exact = false;
  return spec;
}

template SchmidtSpectrum schmidt_spectrum(const StateVector<BigInt>&, int);
template SchmidtSpectrum schmidt_spectrum(const StateVector<Rational>&, int);

double entanglement_entropy(const SchmidtSpectrum& spec) {
  double s = 0;
  for (const Rational& w : spec.weights) {
    double p = w.get_d();
    if (p > 0) s -= p * std::log(p);
  }
  return s;
}

}  // namespace mtn
