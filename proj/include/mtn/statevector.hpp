#pragma once

#include <map>
#include <string>
#include <vector>

#include "mtn/errors.hpp"
#include "mtn/scalar.hpp"

namespace mtn {

enum class SiteKind { spin1, spin_half };

/// Physical alphabet per site. Spin-half labels are stored as +-1 and read
/// as +-1/2; the JSON encoding uses 'u'/'d' for them and '+','0','-' for spin-1.
std::vector<int> site_labels(SiteKind kind);
std::string config_to_string(const std::vector<int>& cfg, SiteKind kind);
std::vector<int> config_from_string(const std::string& s, SiteKind kind);

/// Sparse amplitude map over spin configurations. Keys are ordered
/// lexicographically by label value, which fixes the serialization order.
template <class S>
class StateVector {
 public:
  StateVector() = default;
  StateVector(int n_sites, SiteKind kind) : n_sites_(n_sites), kind_(kind) {}

  int n_sites() const { return n_sites_; }
  SiteKind site_kind() const { return kind_; }

  void set(const std::vector<int>& cfg, S amp) {
    if (static_cast<int>(cfg.size()) != n_sites_)
      throw argument_error("StateVector: config length mismatch");
    if (scalar_traits<S>::is_zero(amp))
      amps_.erase(cfg);
    else
      amps_[cfg] = std::move(amp);
  }
  void add(const std::vector<int>& cfg, const S& amp) {
    if (static_cast<int>(cfg.size()) != n_sites_)
      throw argument_error("StateVector: config length mismatch");
    auto it = amps_.find(cfg);
    if (it == amps_.end()) {
      if (!scalar_traits<S>::is_zero(amp)) amps_[cfg] = amp;
      return;
    }
    it->second += amp;
    if (scalar_traits<S>::is_zero(it->second)) amps_.erase(it);
  }
  S at(const std::vector<int>& cfg) const {
    auto it = amps_.find(cfg);
    return it == amps_.end() ? scalar_traits<S>::zero() : it->second;
  }

  std::size_t nnz() const { return amps_.size(); }
  bool empty() const { return amps_.empty(); }

  S norm_sq() const {
    S acc = scalar_traits<S>::zero();
    for (const auto& [cfg, a] : amps_) acc += a * a;
    return acc;
  }

  const std::map<std::vector<int>, S>& amplitudes() const { return amps_; }

  bool operator==(const StateVector& o) const {
    return n_sites_ == o.n_sites_ && kind_ == o.kind_ && amps_ == o.amps_;
  }
  bool operator!=(const StateVector& o) const { return !(*this == o); }

  template <class T, class F>
  StateVector<T> map(SiteKind kind, F f) const {
    StateVector<T> out(n_sites_, kind);
    for (const auto& [cfg, a] : amps_) out.set(cfg, f(a));
    return out;
  }

  /// Canonical JSON: configs as strings, amplitudes as strings, keys in
  /// lexicographic label order.
  std::string to_json() const;

 private:
  int n_sites_ = 0;
  SiteKind kind_ = SiteKind::spin1;
  std::map<std::vector<int>, S> amps_;
};

StateVector<Rational> eval_at(const StateVector<Poly>& v, const Rational& t);
StateVector<double> to_float(const StateVector<BigInt>& v);
StateVector<double> to_float(const StateVector<Rational>& v);

}  // namespace mtn
