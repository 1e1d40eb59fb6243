#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtn/errors.hpp"
#include "mtn/scalar.hpp"
#include "mtn/tiles.hpp"

namespace mtn {

enum class Orientation { incoming, outgoing };

/// A finite ordered label set with a U(1) charge per label. Labels without a
/// charge entry (the omega marker) sit outside the charge system and exempt
/// any entry they appear in from the balance check.
struct IndexSpace {
  std::string name;
  std::vector<int> labels;
  Orientation orient = Orientation::incoming;
  std::map<int, long> charge;

  bool has(int label) const;
  bool same_labels(const IndexSpace& o) const { return labels == o.labels; }
};

IndexSpace spin1_space(std::string name, Orientation o);
IndexSpace spin1_omega_space(std::string name, Orientation o);
IndexSpace bit_space(std::string name, Orientation o);
IndexSpace carry_space(std::string name, Orientation o);       // {-1,0,1}, charge 2x
IndexSpace carry_omega_space(std::string name, Orientation o); // adds omega
IndexSpace spin_half_space(std::string name, Orientation o);   // {-1,1} read as +-1/2
IndexSpace charge_label_space(std::string name, Orientation o,
                              std::vector<long> charges);      // label == charge

/// Sparse tensor over small enumerated index labels.
template <class S>
class LabeledTensor {
 public:
  LabeledTensor() = default;
  explicit LabeledTensor(std::vector<IndexSpace> indices)
      : indices_(std::move(indices)) {}

  const std::vector<IndexSpace>& indices() const { return indices_; }
  std::size_t rank() const { return indices_.size(); }
  std::size_t nnz() const { return entries_.size(); }

  void set(std::vector<int> key, S value) {
    check_key(key);
    if (scalar_traits<S>::is_zero(value))
      entries_.erase(key);
    else
      entries_[std::move(key)] = std::move(value);
  }
  void add(const std::vector<int>& key, const S& value) {
    check_key(key);
    auto it = entries_.find(key);
    if (it == entries_.end()) {
      if (!scalar_traits<S>::is_zero(value)) entries_[key] = value;
      return;
    }
    it->second += value;
    if (scalar_traits<S>::is_zero(it->second)) entries_.erase(it);
  }
  S at(const std::vector<int>& key) const {
    auto it = entries_.find(key);
    return it == entries_.end() ? scalar_traits<S>::zero() : it->second;
  }

  /// Canonical (lexicographic) iteration order.
  const std::map<std::vector<int>, S>& entries() const { return entries_; }

  bool operator==(const LabeledTensor& o) const { return entries_ == o.entries_; }

  std::string to_json() const;

 private:
  void check_key(const std::vector<int>& key) const {
    if (key.size() != indices_.size())
      throw argument_error("LabeledTensor: key arity mismatch");
    for (std::size_t i = 0; i < key.size(); ++i)
      if (!indices_[i].has(key[i]))
        throw argument_error("LabeledTensor: label outside index alphabet");
  }
  std::vector<IndexSpace> indices_;
  std::map<std::vector<int>, S> entries_;
};

/// Pairwise sparse contraction. Paired spaces must carry equal label sets.
/// Free indices of A precede free indices of B in the result.
template <class S>
LabeledTensor<S> contract_pair(const LabeledTensor<S>& a, const LabeledTensor<S>& b,
                               const std::vector<std::pair<int, int>>& pairs);

/// True iff every entry not touching omega balances incoming against
/// outgoing charge.
template <class S>
bool check_charge_conservation(const LabeledTensor<S>& t);

// ---------------------------------------------------------------------------
// Tensor inventory: the tile and entry lists every constructor draws from.
// Mutation tests swap in an inventory with one entry removed.

struct Inventory {
  std::vector<Tile> b_tiles;                    // 6 squares
  std::vector<Tile> c_tiles;                    // 8 squares
  std::vector<Tile> t_tiles;                    // 7 triangles
  std::vector<Tile> s_tiles;                    // 12 triangles
  std::vector<std::array<int, 4>> g_entries;    // (i, k, j, l), unit charges
  std::vector<std::array<int, 3>> w_entries;    // (i, j, k), unit charges

  static const Inventory& standard();
  /// Copy with entry `idx` of `family` (one of B,C,T,S,G,W) removed.
  Inventory drop(const std::string& family, std::size_t idx) const;
};

// ---------------------------------------------------------------------------
// Named tensors. All entries are 1 except the area-weighted variants.

template <class S>
LabeledTensor<S> delta_tensor(std::vector<IndexSpace> spaces, std::vector<int> key) {
  LabeledTensor<S> t(std::move(spaces));
  t.set(std::move(key), scalar_traits<S>::one());
  return t;
}

/// Four-index binary-addition tensor: south spin + west bit = east bit + twice
/// the north carry. One nonzero per tile.
template <class S>
LabeledTensor<S> make_b(const Inventory& inv = Inventory::standard());

/// Row-weighted variant: every horizontal arrow half-segment in row `s`
/// contributes a factor t^(2^(s-1)).
template <class S>
LabeledTensor<S> make_b_weighted(const S& t, int row,
                                 const Inventory& inv = Inventory::standard());

/// Area-charging variant used inside the deformed networks: only the east
/// half-segment is charged, so a contracted column contributes the encoded
/// height exactly once.
template <class S>
LabeledTensor<S> make_b_area(const S& t, int row,
                             const Inventory& inv = Inventory::standard());

/// B extended by the two vertical omega-line tiles.
template <class S>
LabeledTensor<S> make_c(const Inventory& inv = Inventory::standard());

/// Triangle tensor t_{ijk} = [i + j == k] over {-1,0,1}.
template <class S>
LabeledTensor<S> make_t(const Inventory& inv = Inventory::standard());

/// Open-chain triangle tensor over {-1,0,1,omega}.
template <class S>
LabeledTensor<S> make_s(const Inventory& inv = Inventory::standard());

/// Spin-1 to spin-1/2 projector: keeps +-1, kills 0.
template <class S>
LabeledTensor<S> make_p();

/// Diagonal projector that kills the omega component.
template <class S>
LabeledTensor<S> make_pi();

/// MPO disentangler tensor, legs (virtual-in, spin-in, virtual-out, spin-out),
/// charges scaled by 2^(level-1). Labels equal charges.
template <class S>
LabeledTensor<S> make_g(int level, const Inventory& inv = Inventory::standard());

/// Blocking isometry, legs (in, in, out), charges scaled by 2^(level-1).
template <class S>
LabeledTensor<S> make_w(int level, const Inventory& inv = Inventory::standard());

// ---------------------------------------------------------------------------

template <class S>
LabeledTensor<S> contract_pair(const LabeledTensor<S>& a, const LabeledTensor<S>& b,
                               const std::vector<std::pair<int, int>>& pairs) {
  std::vector<bool> a_paired(a.rank(), false), b_paired(b.rank(), false);
  for (auto [ia, ib] : pairs) {
    if (ia < 0 || ia >= static_cast<int>(a.rank()) || ib < 0 ||
        ib >= static_cast<int>(b.rank()))
      throw argument_error("contract_pair: slot out of range");
    if (!a.indices()[ia].same_labels(b.indices()[ib]))
      throw argument_error("contract_pair: alphabet mismatch on paired slots");
    a_paired[ia] = true;
    b_paired[ib] = true;
  }
  std::vector<IndexSpace> out_spaces;
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (!a_paired[i]) out_spaces.push_back(a.indices()[i]);
  for (std::size_t i = 0; i < b.rank(); ++i)
    if (!b_paired[i]) out_spaces.push_back(b.indices()[i]);
  LabeledTensor<S> out(std::move(out_spaces));

  // Bucket b's entries by their paired sublabels.
  std::map<std::vector<int>, std::vector<const std::pair<const std::vector<int>, S>*>>
      buckets;
  for (const auto& e : b.entries()) {
    std::vector<int> sub;
    sub.reserve(pairs.size());
    for (auto [ia, ib] : pairs) sub.push_back(e.first[ib]);
    buckets[sub].push_back(&e);
  }
  for (const auto& ea : a.entries()) {
    std::vector<int> sub;
    sub.reserve(pairs.size());
    for (auto [ia, ib] : pairs) sub.push_back(ea.first[ia]);
    auto it = buckets.find(sub);
    if (it == buckets.end()) continue;
    std::vector<int> base;
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (!a_paired[i]) base.push_back(ea.first[i]);
    for (const auto* eb : it->second) {
      std::vector<int> key = base;
      for (std::size_t i = 0; i < b.rank(); ++i)
        if (!b_paired[i]) key.push_back(eb->first[i]);
      out.add(key, ea.second * eb->second);
    }
  }
  return out;
}

template <class S>
bool check_charge_conservation(const LabeledTensor<S>& t) {
  for (const auto& [key, value] : t.entries()) {
    long in = 0, out = 0;
    bool omega = false;
    for (std::size_t i = 0; i < key.size(); ++i) {
      const IndexSpace& sp = t.indices()[i];
      auto it = sp.charge.find(key[i]);
      if (it == sp.charge.end()) {
        omega = true;
        break;
      }
      (sp.orient == Orientation::incoming ? in : out) += it->second;
    }
    if (!omega && in != out) return false;
  }
  return true;
}

}  // namespace mtn
