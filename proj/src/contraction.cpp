#include "mtn/contraction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

namespace mtn {

namespace {

bool is_tree_kind(TensorKind k) { return k == TensorKind::S; }

}  // namespace

ContractionPlan contraction_plan(const Network& net) {
  ContractionPlan plan;
  plan.order.resize(net.nodes.size());
  for (std::size_t i = 0; i < plan.order.size(); ++i) plan.order[i] = static_cast<int>(i);

  bool column_sweep = net.shape.rfind("pyramid", 0) == 0 ||
                      net.shape.rfind("rectangle", 0) == 0 ||
                      net.shape.rfind("hrn_open", 0) == 0;
  std::stable_sort(plan.order.begin(), plan.order.end(), [&](int a, int b) {
    const Node& na = net.nodes[a];
    const Node& nb = net.nodes[b];
    // Tree rows always contract after the grid they cap.
    bool ta = is_tree_kind(na.kind), tb = is_tree_kind(nb.kind);
    if (ta != tb) return tb;
    if (ta) return std::tie(na.layer, na.index) < std::tie(nb.layer, nb.index);
    if (column_sweep)
      return std::tie(na.index, na.layer) < std::tie(nb.index, nb.layer);
    // Layer sweep: merging tensors follow the row feeding them.
    int ma = na.kind == TensorKind::T || na.kind == TensorKind::W;
    int mb = nb.kind == TensorKind::T || nb.kind == TensorKind::W;
    return std::tie(na.layer, ma, na.index) < std::tie(nb.layer, mb, nb.index);
  });

  // Upper bound on intermediate sizes from the open alphabets.
  std::map<int, std::size_t> open_bonds;  // bond id -> alphabet size
  double log2_sites = 0.0;
  double peak = 0.0;
  for (int ni : plan.order) {
    const Node& node = net.nodes[ni];
    auto spaces = node_spaces(node, net.inventory);
    for (std::size_t si = 0; si < node.slots.size(); ++si) {
      const Slot& slot = node.slots[si];
      if (slot.role == Slot::Role::bond) {
        auto it = open_bonds.find(slot.bond);
        if (it != open_bonds.end())
          open_bonds.erase(it);
        else
          open_bonds[slot.bond] = spaces[si].labels.size();
      } else if (slot.role == Slot::Role::physical) {
        log2_sites += std::log2(static_cast<double>(spaces[si].labels.size()));
      }
    }
    double log2_open = log2_sites;
    for (const auto& [id, dim] : open_bonds)
      log2_open += std::log2(static_cast<double>(dim));
    peak = std::max(peak, log2_open);
  }
  plan.log2_max_intermediate = peak;
  return plan;
}

namespace {

struct Leg {
  bool is_site;
  int id;
  bool operator==(const Leg&) const = default;
};

template <class S>
struct Block {
  std::vector<Leg> legs;
  std::map<std::vector<int>, S> data;
};

// Contract one node into the running block. Physical slots may be pinned via
// `config` (amplitude mode) or kept open (full mode).
template <class S>
void absorb_node(Block<S>& block, const Network& net, const Node& node, const S& t,
                 const std::vector<int>* config) {
  LabeledTensor<S> tensor = node_tensor<S>(node, net.inventory, t);

  // Per tensor slot: pin value (or kMin for none) and kept-leg descriptor.
  constexpr int kFree = INT32_MIN;
  std::vector<int> pin(node.slots.size(), kFree);
  std::vector<int> match_pos;          // tensor slot -> position in block key
  std::vector<int> match_slot;
  std::vector<Leg> kept_legs;
  std::vector<int> kept_slots;
  for (std::size_t si = 0; si < node.slots.size(); ++si) {
    const Slot& slot = node.slots[si];
    if (slot.role == Slot::Role::pinned) {
      pin[si] = slot.pin;
    } else if (slot.role == Slot::Role::physical) {
      if (config)
        pin[si] = (*config)[slot.site];
      else
        kept_legs.push_back({true, slot.site}), kept_slots.push_back(static_cast<int>(si));
    } else {
      auto it = std::find(block.legs.begin(), block.legs.end(), Leg{false, slot.bond});
      if (it != block.legs.end()) {
        match_pos.push_back(static_cast<int>(it - block.legs.begin()));
        match_slot.push_back(static_cast<int>(si));
      } else {
        kept_legs.push_back({false, slot.bond});
        kept_slots.push_back(static_cast<int>(si));
      }
    }
  }

  // Bucket tensor entries by their matched sublabels after pin filtering.
  std::map<std::vector<int>, std::vector<std::pair<std::vector<int>, const S*>>>
      buckets;
  for (const auto& [key, value] : tensor.entries()) {
    bool ok = true;
    for (std::size_t si = 0; si < key.size(); ++si)
      if (pin[si] != kFree && key[si] != pin[si]) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<int> sub;
    sub.reserve(match_slot.size());
    for (int si : match_slot) sub.push_back(key[si]);
    std::vector<int> kept;
    kept.reserve(kept_slots.size());
    for (int si : kept_slots) kept.push_back(key[si]);
    buckets[sub].emplace_back(std::move(kept), &value);
  }

  std::vector<bool> block_keep(block.legs.size(), true);
  for (int pos : match_pos) block_keep[pos] = false;

  Block<S> next;
  for (std::size_t li = 0; li < block.legs.size(); ++li)
    if (block_keep[li]) next.legs.push_back(block.legs[li]);
  next.legs.insert(next.legs.end(), kept_legs.begin(), kept_legs.end());

  for (const auto& [key, value] : block.data) {
    std::vector<int> sub;
    sub.reserve(match_pos.size());
    for (int pos : match_pos) sub.push_back(key[pos]);
    auto it = buckets.find(sub);
    if (it == buckets.end()) continue;
    std::vector<int> base;
    base.reserve(next.legs.size());
    for (std::size_t li = 0; li < key.size(); ++li)
      if (block_keep[li]) base.push_back(key[li]);
    for (const auto& [kept, tv] : it->second) {
      std::vector<int> nk = base;
      nk.insert(nk.end(), kept.begin(), kept.end());
      auto [pos, inserted] = next.data.try_emplace(std::move(nk), value * *tv);
      if (!inserted) {
        pos->second += value * *tv;
        if (scalar_traits<S>::is_zero(pos->second)) next.data.erase(pos);
      }
    }
  }
  block = std::move(next);
}

template <class S>
Block<S> run_plan(const Network& net, const std::vector<int>& order, const S& t,
                  const std::vector<int>* config) {
  Block<S> block;
  block.data[{}] = scalar_traits<S>::one();
  for (int ni : order) absorb_node(block, net, net.nodes[ni], t, config);
  return block;
}

}  // namespace

template <class S>
StateVector<S> contract_full_with_order(const Network& net,
                                        const std::vector<int>& order, const S& t,
                                        int cap) {
  if (net.n_sites > cap)
    throw resource_error("contract_full: physical slot count exceeds cap");
  Block<S> block = run_plan<S>(net, order, t, nullptr);

  // Remaining legs are exactly the physical sites; sort key into site order.
  std::vector<int> site_pos(net.n_sites, -1);
  for (std::size_t li = 0; li < block.legs.size(); ++li) {
    if (!block.legs[li].is_site)
      throw build_error("contract_full: dangling internal bond");
    site_pos[block.legs[li].id] = static_cast<int>(li);
  }
  StateVector<S> out(net.n_sites, net.sites);
  for (const auto& [key, value] : block.data) {
    std::vector<int> cfg(net.n_sites);
    for (int s = 0; s < net.n_sites; ++s) cfg[s] = key[site_pos[s]];
    out.add(cfg, value);
  }
  return out;
}

template <class S>
StateVector<S> contract_full(const Network& net, const S& t, int cap) {
  return contract_full_with_order(net, contraction_plan(net).order, t, cap);
}

template <class S>
S amplitude(const Network& net, const std::vector<int>& config, const S& t) {
  if (static_cast<int>(config.size()) != net.n_sites)
    throw argument_error("amplitude: config length mismatch");
  auto labels = site_labels(net.sites);
  for (int v : config)
    if (std::find(labels.begin(), labels.end(), v) == labels.end())
      throw argument_error("amplitude: label outside physical alphabet");
  Block<S> block = run_plan<S>(net, contraction_plan(net).order, t, &config);
  auto it = block.data.find({});
  return it == block.data.end() ? scalar_traits<S>::zero() : it->second;
}

template <class S>
LockedResult<S> locked_propagate(const Network& net, const std::vector<int>& config,
                                 const S& t) {
  if (static_cast<int>(config.size()) != net.n_sites)
    throw argument_error("locked_propagate: config length mismatch");
  LockedResult<S> result;
  std::map<int, int> bond_value;
  S acc = scalar_traits<S>::one();
  ContractionPlan plan = contraction_plan(net);
  for (int ni : plan.order) {
    const Node& node = net.nodes[ni];
    LabeledTensor<S> tensor = node_tensor<S>(node, net.inventory, t);
    // Known labels per slot.
    constexpr int kFree = INT32_MIN;
    std::vector<int> want(node.slots.size(), kFree);
    std::vector<int> unknown;
    for (std::size_t si = 0; si < node.slots.size(); ++si) {
      const Slot& slot = node.slots[si];
      if (slot.role == Slot::Role::pinned) {
        want[si] = slot.pin;
      } else if (slot.role == Slot::Role::physical) {
        want[si] = config[slot.site];
      } else {
        auto it = bond_value.find(slot.bond);
        if (it != bond_value.end())
          want[si] = it->second;
        else
          unknown.push_back(static_cast<int>(si));
      }
    }
    const std::pair<const std::vector<int>, S>* chosen = nullptr;
    int candidates = 0;
    for (const auto& entry : tensor.entries()) {
      bool ok = true;
      for (std::size_t si = 0; si < entry.first.size(); ++si)
        if (want[si] != kFree && entry.first[si] != want[si]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      ++candidates;
      if (candidates == 1) chosen = &entry;
    }
    if (candidates == 0) {
      result.value = scalar_traits<S>::zero();
      return result;
    }
    if (candidates > 1) {
      result.locked = false;
      result.violation = "node " + kind_name(node.kind) + " layer " +
                         std::to_string(node.layer) + " index " +
                         std::to_string(node.index) + " admits " +
                         std::to_string(candidates) + " candidates";
      result.value = amplitude(net, config, t);
      return result;
    }
    for (int si : unknown) bond_value[node.slots[si].bond] = chosen->first[si];
    acc *= chosen->second;
  }
  result.value = acc;
  return result;
}

int count_internal_labelings(const Network& net, const std::vector<int>& config,
                             int limit) {
  if (static_cast<int>(config.size()) != net.n_sites)
    throw argument_error("count_internal_labelings: config length mismatch");
  ContractionPlan plan = contraction_plan(net);
  int found = 0;
  std::map<int, int> bond_value;
  std::function<void(std::size_t)> go = [&](std::size_t step) {
    if (found >= limit) return;
    if (step == plan.order.size()) {
      ++found;
      return;
    }
    const Node& node = net.nodes[plan.order[step]];
    LabeledTensor<double> tensor = node_tensor<double>(node, net.inventory, 1.0);
    constexpr int kFree = INT32_MIN;
    std::vector<int> want(node.slots.size(), kFree);
    std::vector<int> unknown;
    for (std::size_t si = 0; si < node.slots.size(); ++si) {
      const Slot& slot = node.slots[si];
      if (slot.role == Slot::Role::pinned)
        want[si] = slot.pin;
      else if (slot.role == Slot::Role::physical)
        want[si] = config[slot.site];
      else {
        auto it = bond_value.find(slot.bond);
        if (it != bond_value.end())
          want[si] = it->second;
        else
          unknown.push_back(static_cast<int>(si));
      }
    }
    for (const auto& entry : tensor.entries()) {
      bool ok = true;
      for (std::size_t si = 0; si < entry.first.size(); ++si)
        if (want[si] != kFree && entry.first[si] != want[si]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      for (int si : unknown) bond_value[node.slots[si].bond] = entry.first[si];
      go(step + 1);
      for (int si : unknown) bond_value.erase(node.slots[si].bond);
      if (found >= limit) return;
    }
  };
  go(0);
  return found;
}

std::map<std::string, int> count_tensors(const Network& net) {
  std::map<std::string, int> counts;
  for (const Node& node : net.nodes) ++counts[kind_name(node.kind)];
  return counts;
}

#define MTN_INSTANTIATE(S)                                                          \
  template StateVector<S> contract_full_with_order<S>(const Network&,              \
                                                      const std::vector<int>&,     \
                                                      const S&, int);              \
  template StateVector<S> contract_full<S>(const Network&, const S&, int);         \
  template S amplitude<S>(const Network&, const std::vector<int>&, const S&);      \
  template LockedResult<S> locked_propagate<S>(const Network&,                     \
                                               const std::vector<int>&, const S&);

MTN_INSTANTIATE(BigInt)
MTN_INSTANTIATE(Rational)
MTN_INSTANTIATE(Poly)
MTN_INSTANTIATE(double)
#undef MTN_INSTANTIATE

}  // namespace mtn
