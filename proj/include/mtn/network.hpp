#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtn/statevector.hpp"
#include "mtn/tensor.hpp"

namespace mtn {

enum class TensorKind { B, BArea, C, T, S, G, W, P, Pi };
std::string kind_name(TensorKind k);

struct Slot {
  enum class Role { bond, physical, pinned };
  Role role = Role::pinned;
  int bond = -1;  // bond id
  int site = -1;  // physical site, 0-based
  int pin = 0;    // pinned label
  static Slot bonded(int id) { return {Role::bond, id, -1, 0}; }
  static Slot physical(int site) { return {Role::physical, -1, site, 0}; }
  static Slot pinned(int label) { return {Role::pinned, -1, -1, label}; }
};

/// One tensor placement. Slot order follows the tensor constructors:
/// B/BArea/C: (south, west, east, north); T/S: (left, right, top);
/// G: (vin, in, vout, out); W: (in1, in2, out); P/Pi: (in, out).
struct Node {
  TensorKind kind = TensorKind::B;
  int level = 1;            // BArea row, or G/W coarse-graining step
  int layer = 0, index = 0; // grid position, for reports and isomorphism checks
  std::vector<Slot> slots;
};

/// Planar tensor graph with geometry annotations. Bonds join exactly two
/// slots; physical slots are the 2n open legs at the base.
struct Network {
  std::vector<Node> nodes;
  int n_bonds = 0;
  int n_sites = 0;
  SiteKind sites = SiteKind::spin1;
  bool deformed = false;  // whether BArea nodes appear (t enters contraction)
  Inventory inventory = Inventory::standard();
  std::string shape;
  std::map<std::string, long> meta;

  int new_bond() { return n_bonds++; }
  /// Structural checks: bond degree two, physical slots exactly 0..2n-1,
  /// matching alphabets across every bond.
  void validate() const;
  /// Net charge pinned into the boundary; zero for the U(1) networks.
  long pinned_charge() const;
};

/// Number of index labels on each slot of a node, used for size estimates.
std::vector<IndexSpace> node_spaces(const Node& node, const Inventory& inv);

/// Instantiate the node's tensor in semiring S. `t` enters only BArea nodes.
template <class S>
LabeledTensor<S> node_tensor(const Node& node, const Inventory& inv, const S& t);

// ---------------------------------------------------------------------------
// Builders.

/// Step pyramid of height-addition tensors; column x holds floor(log2 2x)
/// cells, mirrored about the center. Boundary pinned to zero. With
/// deformation, row s charges each east segment by t^(2^(s-1)), so a walk
/// picks up t^(area).
Network build_binary_height_pyramid(int n, bool deformed = false,
                                    const Inventory& inv = Inventory::standard());

/// m x 2n rectangle with west/east boundaries pinned to the binary expansions
/// of p and q (LSB on row 1).
Network build_rectangle(int n, int m, long p, long q, bool deformed = false,
                        const Inventory& inv = Inventory::standard());

/// Height renormalization network for the periodic sector state: layers of
/// width-halving rows feeding triangle tensors, boundary bits of p and q one
/// per layer, top spin pinned to the difference of the leading bits.
Network build_hrn_periodic(int n, long p, long q,
                           const Inventory& inv = Inventory::standard());

/// Open-chain renormalization network: rectangle of C tensors with projectors
/// on the physical legs and a binary tree of S tensors as the top boundary,
/// apex pinned to zero.
Network build_hrn_open(int n, const Inventory& inv = Inventory::standard());

/// U(1) construction: per step, a disentangling MPO row of G tensors (edge
/// virtual legs pinned to charge zero) followed by W blocking; final output
/// pinned to charge zero.
Network build_u1_mera(int n, const Inventory& inv = Inventory::standard());

/// Append the spin-1/2 projector to every physical slot.
Network wrap_fredkin(Network net);

/// Bits of `value`, least significant first.
std::vector<int> boundary_vector(long value, int m);

}  // namespace mtn
