#pragma once

#include <cstddef>
#include <vector>

#include "mtn/scalar.hpp"
#include "mtn/statevector.hpp"

namespace mtn {

enum class BoundaryKind { open, periodic };

/// Frustration-free spin-1 chain Hamiltonian: a sum of normalized two-site
/// projectors (plus single-site boundary projectors for the open chain),
/// stored sparsely over the 3^(2n)-dimensional configuration basis.
class SparseHamiltonian {
 public:
  SparseHamiltonian(int n_sites, Rational t, BoundaryKind boundary);

  int n_sites() const { return n_sites_; }
  std::size_t dimension() const { return dim_; }
  Rational t() const { return t_; }
  BoundaryKind boundary() const { return boundary_; }

  std::vector<double> apply(const std::vector<double>& x) const;
  double entry(std::size_t row, std::size_t col) const;

  /// Site 0 is the least significant base-3 digit; digit = label + 1.
  static std::size_t config_to_index(const std::vector<int>& cfg);
  static std::vector<int> index_to_config(std::size_t idx, int n_sites);

  std::vector<double> to_vector(const StateVector<double>& v) const;

 private:
  void add_pair_projector(int a, int b, double t);
  void add_site_projector(int site, int label);

  int n_sites_;
  Rational t_;
  BoundaryKind boundary_;
  std::size_t dim_;
  std::vector<std::vector<std::pair<std::size_t, double>>> rows_;
};

SparseHamiltonian build_hamiltonian(int n_sites, const Rational& t,
                                    BoundaryKind boundary);

/// ||H psi|| / ||psi||.
double annihilation_residual(const SparseHamiltonian& h, const StateVector<double>& psi);

/// Count of eigenvalues below tol; dense symmetric eigensolve.
int kernel_dimension(const SparseHamiltonian& h, double tol = 1e-9);

/// Exact single-projector application in a chosen semiring: applies the
/// unnormalized projector onto span{|1,0> - t|0,1>, |0,-1> - t|-1,0>,
/// |1,-1> - t|0,0>} on the pair (j, j+1 mod 2n). A frustration-free state is
/// annihilated by every one of these individually.
template <class S>
StateVector<S> apply_move_projector(const StateVector<S>& psi, int j, const S& t,
                                    bool wrap = false);

}  // namespace mtn
