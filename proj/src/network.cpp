#include "mtn/network.hpp"

#include <algorithm>
#include <cmath>

namespace mtn {

std::string kind_name(TensorKind k) {
  switch (k) {
    case TensorKind::B:
      return "B";
    case TensorKind::BArea:
      return "Bs";
    case TensorKind::C:
      return "C";
    case TensorKind::T:
      return "T";
    case TensorKind::S:
      return "S";
    case TensorKind::G:
      return "G";
    case TensorKind::W:
      return "W";
    case TensorKind::P:
      return "P";
    case TensorKind::Pi:
      return "Pi";
  }
  return "?";
}

std::vector<IndexSpace> node_spaces(const Node& node, const Inventory& inv) {
  // Spaces only; entries are irrelevant, so use the cheapest semiring.
  return node_tensor<double>(node, inv, 1.0).indices();
}

template <class S>
LabeledTensor<S> node_tensor(const Node& node, const Inventory& inv, const S& t) {
  switch (node.kind) {
    case TensorKind::B:
      return make_b<S>(inv);
    case TensorKind::BArea:
      return make_b_area<S>(t, node.level, inv);
    case TensorKind::C:
      return make_c<S>(inv);
    case TensorKind::T:
      return make_t<S>(inv);
    case TensorKind::S:
      return make_s<S>(inv);
    case TensorKind::G:
      return make_g<S>(node.level, inv);
    case TensorKind::W:
      return make_w<S>(node.level, inv);
    case TensorKind::P:
      return make_p<S>();
    case TensorKind::Pi:
      return make_pi<S>();
  }
  throw build_error("node_tensor: unknown kind");
}

template LabeledTensor<BigInt> node_tensor(const Node&, const Inventory&,
                                           const BigInt&);
template LabeledTensor<Rational> node_tensor(const Node&, const Inventory&,
                                             const Rational&);
template LabeledTensor<Poly> node_tensor(const Node&, const Inventory&, const Poly&);
template LabeledTensor<double> node_tensor(const Node&, const Inventory&,
                                           const double&);

void Network::validate() const {
  std::vector<int> bond_degree(n_bonds, 0);
  std::vector<const IndexSpace*> bond_space(n_bonds, nullptr);
  std::vector<int> site_seen(n_sites, 0);
  std::vector<std::vector<IndexSpace>> spaces;
  spaces.reserve(nodes.size());
  for (const Node& node : nodes) spaces.push_back(node_spaces(node, inventory));

  for (std::size_t ni = 0; ni < nodes.size(); ++ni) {
    const Node& node = nodes[ni];
    if (node.slots.size() != spaces[ni].size())
      throw build_error("network: slot count does not match tensor rank");
    for (std::size_t si = 0; si < node.slots.size(); ++si) {
      const Slot& slot = node.slots[si];
      const IndexSpace& sp = spaces[ni][si];
      switch (slot.role) {
        case Slot::Role::bond: {
          if (slot.bond < 0 || slot.bond >= n_bonds)
            throw build_error("network: bond id out of range");
          ++bond_degree[slot.bond];
          if (bond_space[slot.bond] == nullptr)
            bond_space[slot.bond] = &sp;
          else if (!bond_space[slot.bond]->same_labels(sp))
            throw build_error("network: bond joins mismatched alphabets");
          break;
        }
        case Slot::Role::physical:
          if (slot.site < 0 || slot.site >= n_sites)
            throw build_error("network: physical site out of range");
          ++site_seen[slot.site];
          break;
        case Slot::Role::pinned:
          if (!sp.has(slot.pin))
            throw build_error("network: pinned label outside alphabet");
          break;
      }
    }
  }
  for (int d : bond_degree)
    if (d != 2) throw build_error("network: bond degree must be two");
  for (int s : site_seen)
    if (s != 1) throw build_error("network: each site needs exactly one slot");
}

long Network::pinned_charge() const {
  long total = 0;
  for (const Node& node : nodes) {
    auto spaces = node_spaces(node, inventory);
    for (std::size_t si = 0; si < node.slots.size(); ++si) {
      const Slot& slot = node.slots[si];
      if (slot.role != Slot::Role::pinned) continue;
      const IndexSpace& sp = spaces[si];
      auto it = sp.charge.find(slot.pin);
      if (it == sp.charge.end()) continue;
      total += sp.orient == Orientation::incoming ? it->second : -it->second;
    }
  }
  return total;
}

std::vector<int> boundary_vector(long value, int m) {
  if (value < 0 || (m < 63 && value >= (1L << m)))
    throw argument_error("boundary_vector: value does not fit in m bits");
  std::vector<int> bits(m);
  for (int k = 0; k < m; ++k) bits[k] = (value >> k) & 1;
  return bits;
}

namespace {

int floor_log2(long v) {
  int r = 0;
  while ((1L << (r + 1)) <= v) ++r;
  return r;
}

/// Shared builder for pyramid and rectangle grids of height-addition cells.
Network build_grid(const GridGeometry& geom, bool deformed, const Inventory& inv,
                   std::string shape) {
  Network net;
  net.inventory = inv;
  net.shape = std::move(shape);
  net.deformed = deformed;
  int cols = geom.n_cols();
  net.n_sites = cols;

  // east_bond[x-1][row-1]: bond between column x and x+1 at `row`.
  std::vector<std::vector<int>> east_bond(cols);
  std::vector<std::vector<int>> north_bond(cols);
  for (int x = 1; x <= cols; ++x) {
    int rows = geom.rows_in_col[x - 1];
    east_bond[x - 1].assign(rows, -1);
    north_bond[x - 1].assign(rows, -1);
    for (int row = 1; row <= rows; ++row) {
      if (x < cols && row <= geom.rows_in_col[x]) east_bond[x - 1][row - 1] = net.new_bond();
      if (row < rows) north_bond[x - 1][row - 1] = net.new_bond();
    }
  }
  auto p_bits = boundary_vector(geom.p, 62);
  auto q_bits = boundary_vector(geom.q, 62);
  for (int x = 1; x <= cols; ++x) {
    int rows = geom.rows_in_col[x - 1];
    for (int row = 1; row <= rows; ++row) {
      Node node;
      node.kind = deformed ? TensorKind::BArea : TensorKind::B;
      node.level = row;
      node.layer = row;
      node.index = x;
      // south
      if (row == 1)
        node.slots.push_back(Slot::physical(x - 1));
      else
        node.slots.push_back(Slot::bonded(north_bond[x - 1][row - 2]));
      // west
      if (x == 1)
        node.slots.push_back(Slot::pinned(p_bits[row - 1]));
      else if (row > geom.rows_in_col[x - 2])
        node.slots.push_back(Slot::pinned(0));
      else
        node.slots.push_back(Slot::bonded(east_bond[x - 2][row - 1]));
      // east
      if (x == cols)
        node.slots.push_back(Slot::pinned(q_bits[row - 1]));
      else if (row > geom.rows_in_col[x])
        node.slots.push_back(Slot::pinned(0));
      else
        node.slots.push_back(Slot::bonded(east_bond[x - 1][row - 1]));
      // north
      if (row == rows)
        node.slots.push_back(Slot::pinned(0));
      else
        node.slots.push_back(Slot::bonded(north_bond[x - 1][row - 1]));
      net.nodes.push_back(std::move(node));
    }
  }
  return net;
}

}  // namespace

Network build_binary_height_pyramid(int n, bool deformed, const Inventory& inv) {
  Network net = build_grid(GridGeometry::pyramid(n), deformed, inv, "pyramid");
  net.meta["n"] = n;
  net.validate();
  return net;
}

Network build_rectangle(int n, int m, long p, long q, bool deformed,
                        const Inventory& inv) {
  if (m < floor_log2(2L * n))
    throw argument_error("build_rectangle: m too small for the walk heights");
  Network net = build_grid(GridGeometry::rectangle(n, m, p, q), deformed, inv,
                           "rectangle");
  net.meta["n"] = n;
  net.meta["m"] = m;
  net.meta["p"] = p;
  net.meta["q"] = q;
  net.validate();
  return net;
}

Network build_hrn_periodic(int n, long p, long q, const Inventory& inv) {
  int sites = 2 * n;
  if (sites < 2 || (sites & (sites - 1)) != 0)
    throw argument_error("build_hrn_periodic: 2n must be a power of two");
  if (p < 0 || q < 0 || p > sites || q > sites)
    throw argument_error("build_hrn_periodic: boundary heights must lie in [0, 2n]");
  int y = floor_log2(sites);

  Network net;
  net.inventory = inv;
  net.shape = "hrn_periodic";
  net.n_sites = sites;
  net.meta["n"] = n;
  net.meta["p"] = p;
  net.meta["q"] = q;

  // feeds[i] = slot feeding the i-th input of the current layer.
  std::vector<Slot> feeds(sites);
  for (int i = 0; i < sites; ++i) feeds[i] = Slot::physical(i);

  for (int layer = 1; layer <= y; ++layer) {
    int width = sites >> (layer - 1);
    int pbit = (p >> (layer - 1)) & 1;
    int qbit = (q >> (layer - 1)) & 1;
    std::vector<int> bit_bond(width - 1), carry_bond(width);
    for (int i = 0; i + 1 < width; ++i) bit_bond[i] = net.new_bond();
    for (int i = 0; i < width; ++i) carry_bond[i] = net.new_bond();
    // Row of height-addition tensors at this scale.
    for (int i = 0; i < width; ++i) {
      Node node;
      node.kind = TensorKind::B;
      node.layer = layer;
      node.index = i + 1;
      node.slots.push_back(feeds[i]);
      node.slots.push_back(i == 0 ? Slot::pinned(pbit) : Slot::bonded(bit_bond[i - 1]));
      node.slots.push_back(i == width - 1 ? Slot::pinned(qbit)
                                          : Slot::bonded(bit_bond[i]));
      node.slots.push_back(Slot::bonded(carry_bond[i]));
      net.nodes.push_back(std::move(node));
    }

    // Triangle row merging carry pairs into the coarse spins.
    std::vector<Slot> next(width / 2);
    for (int i = 0; i < width / 2; ++i) {
      Node node;
      node.kind = TensorKind::T;
      node.layer = layer;
      node.index = i + 1;
      node.slots.push_back(Slot::bonded(carry_bond[2 * i]));
      node.slots.push_back(Slot::bonded(carry_bond[2 * i + 1]));
      if (layer == y) {
        int top = static_cast<int>(((q >> y) & 1) - ((p >> y) & 1));
        node.slots.push_back(Slot::pinned(top));
      } else {
        int bond = net.new_bond();
        node.slots.push_back(Slot::bonded(bond));
        next[i] = Slot::bonded(bond);
      }
      net.nodes.push_back(std::move(node));
    }
    feeds = std::move(next);
  }
  net.validate();
  return net;
}

Network build_hrn_open(int n, const Inventory& inv) {
  int sites = 2 * n;
  if (sites < 2 || (sites & (sites - 1)) != 0)
    throw argument_error("build_hrn_open: 2n must be a power of two");
  int y = floor_log2(sites);
  int m = y + 1;

  Network net;
  net.inventory = inv;
  net.shape = "hrn_open";
  net.n_sites = sites;
  net.meta["n"] = n;
  net.meta["m"] = m;

  // Rectangle of C tensors, all side and height boundaries at zero.
  std::vector<std::vector<int>> east_bond(sites, std::vector<int>(m, -1));
  std::vector<std::vector<int>> north_bond(sites, std::vector<int>(m, -1));
  std::vector<int> base_bond(sites);
  for (int x = 0; x < sites; ++x) {
    base_bond[x] = net.new_bond();
    for (int row = 0; row < m; ++row) {
      if (x + 1 < sites) east_bond[x][row] = net.new_bond();
      north_bond[x][row] = net.new_bond();  // top row feeds the tree
    }
  }
  for (int x = 0; x < sites; ++x) {
    for (int row = 1; row <= m; ++row) {
      Node node;
      node.kind = TensorKind::C;
      node.layer = row;
      node.index = x + 1;
      node.slots.push_back(row == 1 ? Slot::bonded(base_bond[x])
                                    : Slot::bonded(north_bond[x][row - 2]));
      node.slots.push_back(x == 0 ? Slot::pinned(0)
                                  : Slot::bonded(east_bond[x - 1][row - 1]));
      node.slots.push_back(x == sites - 1 ? Slot::pinned(0)
                                          : Slot::bonded(east_bond[x][row - 1]));
      node.slots.push_back(Slot::bonded(north_bond[x][row - 1]));
      net.nodes.push_back(std::move(node));
    }
    Node proj;
    proj.kind = TensorKind::Pi;
    proj.layer = 0;
    proj.index = x + 1;
    proj.slots.push_back(Slot::physical(x));
    proj.slots.push_back(Slot::bonded(base_bond[x]));
    net.nodes.push_back(std::move(proj));
  }

  // Binary tree of S tensors replacing the |0...0> top boundary.
  std::vector<int> feeds(sites);
  for (int x = 0; x < sites; ++x) feeds[x] = north_bond[x][m - 1];
  for (int level = 1; level <= y; ++level) {
    int width = sites >> level;
    std::vector<int> next(width);
    for (int i = 0; i < width; ++i) {
      Node node;
      node.kind = TensorKind::S;
      node.layer = m + level;
      node.index = i + 1;
      node.slots.push_back(Slot::bonded(feeds[2 * i]));
      node.slots.push_back(Slot::bonded(feeds[2 * i + 1]));
      if (level == y) {
        node.slots.push_back(Slot::pinned(0));
      } else {
        int bond = net.new_bond();
        node.slots.push_back(Slot::bonded(bond));
        next[i] = bond;
      }
      net.nodes.push_back(std::move(node));
    }
    feeds = std::move(next);
  }
  net.validate();
  return net;
}

Network build_u1_mera(int n, const Inventory& inv) {
  int sites = 2 * n;
  if (sites < 2 || (sites & (sites - 1)) != 0)
    throw argument_error("build_u1_mera: 2n must be a power of two");
  int y = floor_log2(sites);

  Network net;
  net.inventory = inv;
  net.shape = "u1_mera";
  net.n_sites = sites;
  net.meta["n"] = n;

  std::vector<Slot> feeds(sites);
  for (int i = 0; i < sites; ++i) feeds[i] = Slot::physical(i);

  for (int level = 1; level <= y; ++level) {
    int width = sites >> (level - 1);
    // Disentangling MPO row; edge virtual legs pinned to charge zero.
    std::vector<int> out_bond(width);
    int prev_virtual = -1;
    for (int i = 0; i < width; ++i) {
      Node node;
      node.kind = TensorKind::G;
      node.level = level;
      node.layer = 2 * level - 1;
      node.index = i + 1;
      node.slots.push_back(i == 0 ? Slot::pinned(0) : Slot::bonded(prev_virtual));
      node.slots.push_back(feeds[i]);
      if (i == width - 1) {
        node.slots.push_back(Slot::pinned(0));
      } else {
        prev_virtual = net.new_bond();
        node.slots.push_back(Slot::bonded(prev_virtual));
      }
      out_bond[i] = net.new_bond();
      node.slots.push_back(Slot::bonded(out_bond[i]));
      net.nodes.push_back(std::move(node));
    }
    // Blocking row.
    std::vector<Slot> next(width / 2);
    for (int i = 0; i < width / 2; ++i) {
      Node node;
      node.kind = TensorKind::W;
      node.level = level;
      node.layer = 2 * level;
      node.index = i + 1;
      node.slots.push_back(Slot::bonded(out_bond[2 * i]));
      node.slots.push_back(Slot::bonded(out_bond[2 * i + 1]));
      if (level == y) {
        node.slots.push_back(Slot::pinned(0));
      } else {
        int bond = net.new_bond();
        node.slots.push_back(Slot::bonded(bond));
        next[i] = Slot::bonded(bond);
      }
      net.nodes.push_back(std::move(node));
    }
    feeds = std::move(next);
  }
  net.validate();
  return net;
}

Network wrap_fredkin(Network net) {
  if (net.sites != SiteKind::spin1)
    throw argument_error("wrap_fredkin: network already has spin-1/2 sites");
  for (Node& node : net.nodes) {
    for (Slot& slot : node.slots) {
      if (slot.role != Slot::Role::physical) continue;
      int site = slot.site;
      int bond = net.new_bond();
      slot = Slot::bonded(bond);
      Node proj;
      proj.kind = TensorKind::P;
      proj.layer = -1;
      proj.index = site + 1;
      proj.slots.push_back(Slot::bonded(bond));
      proj.slots.push_back(Slot::physical(site));
      net.nodes.push_back(std::move(proj));
    }
  }
  net.sites = SiteKind::spin_half;
  net.shape += "+fredkin";
  net.validate();
  return net;
}

}  // namespace mtn
