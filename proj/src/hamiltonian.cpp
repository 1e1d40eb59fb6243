#include "mtn/hamiltonian.hpp"

#include <array>
#include <cmath>

#include "mtn/errors.hpp"
#include "mtn/linalg.hpp"

namespace mtn {

namespace {

struct MoveComp {
  int a, b;
  bool minus_t;  // coefficient is -t instead of 1
};
struct MoveVector {
  MoveComp c0, c1;
};

// Unnormalized pair states whose span the local projector kills:
// |1,0> - t|0,1>, |0,-1> - t|-1,0>, |1,-1> - t|0,0>.
const std::array<MoveVector, 3>& moves() {
  static const std::array<MoveVector, 3> m = {{
      {{1, 0, false}, {0, 1, true}},
      {{0, -1, false}, {-1, 0, true}},
      {{1, -1, false}, {0, 0, true}},
  }};
  return m;
}

std::size_t pow3(int n) {
  std::size_t r = 1;
  for (int i = 0; i < n; ++i) r *= 3;
  return r;
}

}  // namespace

std::size_t SparseHamiltonian::config_to_index(const std::vector<int>& cfg) {
  std::size_t idx = 0;
  for (std::size_t i = cfg.size(); i-- > 0;) idx = idx * 3 + (cfg[i] + 1);
  return idx;
}

std::vector<int> SparseHamiltonian::index_to_config(std::size_t idx, int n_sites) {
  std::vector<int> cfg(n_sites);
  for (int i = 0; i < n_sites; ++i) {
    cfg[i] = static_cast<int>(idx % 3) - 1;
    idx /= 3;
  }
  return cfg;
}

SparseHamiltonian::SparseHamiltonian(int n_sites, Rational t, BoundaryKind boundary)
    : n_sites_(n_sites), t_(std::move(t)), boundary_(boundary) {
  if (n_sites < 2 || n_sites % 2 != 0)
    throw argument_error("hamiltonian: n_sites must be even and >= 2");
  if (n_sites > 10) throw resource_error("hamiltonian: n_sites capped at 10");
  if (t_ <= 0) throw argument_error("hamiltonian: t must be positive");
  dim_ = pow3(n_sites_);
  rows_.resize(dim_);

  double td = t_.get_d();
  int pairs = boundary_ == BoundaryKind::open ? n_sites_ - 1 : n_sites_;
  for (int j = 0; j < pairs; ++j) add_pair_projector(j, (j + 1) % n_sites_, td);
  if (boundary_ == BoundaryKind::open) {
    add_site_projector(0, -1);
    add_site_projector(n_sites_ - 1, 1);
  }
}

void SparseHamiltonian::add_pair_projector(int a, int b, double t) {
  const double norm_sq = 1.0 + t * t;
  std::size_t stride_a = pow3(a), stride_b = pow3(b);
  // Enumerate configurations of the remaining sites by looping over all
  // indices with the pair digits fixed to zero, then writing the 9 blocks.
  for (std::size_t base = 0; base < dim_; ++base) {
    std::size_t da = (base / stride_a) % 3, db = (base / stride_b) % 3;
    if (da != 0 || db != 0) continue;
    for (const MoveVector& mv : moves()) {
      for (const MoveComp& cr : {mv.c0, mv.c1}) {
        for (const MoveComp& cc : {mv.c0, mv.c1}) {
          double coeff = (cr.minus_t ? -t : 1.0) * (cc.minus_t ? -t : 1.0);
          std::size_t row = base + stride_a * (cr.a + 1) + stride_b * (cr.b + 1);
          std::size_t col = base + stride_a * (cc.a + 1) + stride_b * (cc.b + 1);
          rows_[row].emplace_back(col, coeff / norm_sq);
        }
      }
    }
  }
}

void SparseHamiltonian::add_site_projector(int site, int label) {
  std::size_t stride = pow3(site);
  for (std::size_t idx = 0; idx < dim_; ++idx)
    if ((idx / stride) % 3 == static_cast<std::size_t>(label + 1))
      rows_[idx].emplace_back(idx, 1.0);
}

std::vector<double> SparseHamiltonian::apply(const std::vector<double>& x) const {
  if (x.size() != dim_) throw argument_error("hamiltonian: dimension mismatch");
  std::vector<double> y(dim_, 0.0);
  for (std::size_t r = 0; r < dim_; ++r)
    for (const auto& [c, v] : rows_[r]) y[r] += v * x[c];
  return y;
}

double SparseHamiltonian::entry(std::size_t row, std::size_t col) const {
  double v = 0;
  for (const auto& [c, val] : rows_[row])
    if (c == col) v += val;
  return v;
}

std::vector<double> SparseHamiltonian::to_vector(const StateVector<double>& v) const {
  if (v.n_sites() != n_sites_) throw argument_error("hamiltonian: dimension mismatch");
  std::vector<double> x(dim_, 0.0);
  for (const auto& [cfg, a] : v.amplitudes()) x[config_to_index(cfg)] = a;
  return x;
}

SparseHamiltonian build_hamiltonian(int n_sites, const Rational& t,
                                    BoundaryKind boundary) {
  return SparseHamiltonian(n_sites, t, boundary);
}

double annihilation_residual(const SparseHamiltonian& h,
                             const StateVector<double>& psi) {
  std::vector<double> x = h.to_vector(psi);
  double nx = 0;
  for (double v : x) nx += v * v;
  if (nx == 0) throw argument_error("annihilation_residual: zero state");
  std::vector<double> y = h.apply(x);
  double ny = 0;
  for (double v : y) ny += v * v;
  return std::sqrt(ny / nx);
}

int kernel_dimension(const SparseHamiltonian& h, double tol) {
  if (h.dimension() > 6561)
    throw resource_error("kernel_dimension: dense eigensolve capped at 3^8");
  std::size_t d = h.dimension();
  std::vector<std::vector<double>> dense(d, std::vector<double>(d, 0.0));
  for (std::size_t r = 0; r < d; ++r) {
    std::vector<double> unit(d, 0.0);
    unit[r] = 1.0;
    std::vector<double> col = h.apply(unit);
    for (std::size_t c = 0; c < d; ++c) dense[c][r] = col[c];
  }
  std::vector<double> eig = jacobi_eigenvalues(std::move(dense));
  int count = 0;
  for (double e : eig)
    if (e < tol) ++count;
  return count;
}

template <class S>
StateVector<S> apply_move_projector(const StateVector<S>& psi, int j, const S& t,
                                    bool wrap) {
  int n = psi.n_sites();
  if (j < 0 || j >= n || (!wrap && j == n - 1))
    throw argument_error("apply_move_projector: pair out of range");
  int a = j, b = (j + 1) % n;
  StateVector<S> out(n, psi.site_kind());
  const S one = scalar_traits<S>::one();
  for (const auto& [cfg, c] : psi.amplitudes()) {
    for (const MoveVector& mv : moves()) {
      // Overlap of the pair part of cfg with the move vector.
      S alpha = scalar_traits<S>::zero();
      bool hit = false;
      for (const MoveComp& mc : {mv.c0, mv.c1}) {
        if (cfg[a] == mc.a && cfg[b] == mc.b) {
          alpha = mc.minus_t ? S(-(t * one)) : one;
          hit = true;
          break;
        }
      }
      if (!hit) continue;
      for (const MoveComp& mc : {mv.c0, mv.c1}) {
        std::vector<int> target = cfg;
        target[a] = mc.a;
        target[b] = mc.b;
        S beta = mc.minus_t ? S(-(t * one)) : one;
        out.add(target, S(beta * alpha * c));
      }
    }
  }
  return out;
}

template StateVector<BigInt> apply_move_projector(const StateVector<BigInt>&, int,
                                                  const BigInt&, bool);
template StateVector<Rational> apply_move_projector(const StateVector<Rational>&,
                                                    int, const Rational&, bool);
template StateVector<Poly> apply_move_projector(const StateVector<Poly>&, int,
                                                const Poly&, bool);

}  // namespace mtn
