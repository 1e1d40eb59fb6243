#include "mtn/statevector.hpp"

#include <json.hpp>

namespace mtn {

std::vector<int> site_labels(SiteKind kind) {
  if (kind == SiteKind::spin1) return {-1, 0, 1};
  return {-1, 1};
}

std::string config_to_string(const std::vector<int>& cfg, SiteKind kind) {
  std::string s;
  s.reserve(cfg.size());
  for (int v : cfg) {
    if (kind == SiteKind::spin1) {
      s += (v == 1) ? '+' : (v == 0) ? '0' : '-';
    } else {
      s += (v == 1) ? 'u' : 'd';
    }
  }
  return s;
}

std::vector<int> config_from_string(const std::string& s, SiteKind kind) {
  std::vector<int> cfg;
  cfg.reserve(s.size());
  for (char c : s) {
    int v;
    if (kind == SiteKind::spin1) {
      if (c == '+')
        v = 1;
      else if (c == '0')
        v = 0;
      else if (c == '-')
        v = -1;
      else
        throw argument_error(std::string("bad spin-1 config char: ") + c);
    } else {
      if (c == 'u')
        v = 1;
      else if (c == 'd')
        v = -1;
      else
        throw argument_error(std::string("bad spin-1/2 config char: ") + c);
    }
    cfg.push_back(v);
  }
  return cfg;
}

template <class S>
std::string StateVector<S>::to_json() const {
  nlohmann::ordered_json j;
  j["n_sites"] = n_sites_;
  j["sites"] = kind_ == SiteKind::spin1 ? "spin1" : "spin_half";
  j["scalar"] = scalar_traits<S>::name();
  nlohmann::ordered_json amps = nlohmann::ordered_json::object();
  for (const auto& [cfg, a] : amps_)  // map order is the lexicographic label order
    amps[config_to_string(cfg, kind_)] = scalar_traits<S>::str(a);
  j["amplitudes"] = std::move(amps);
  j["norm_sq"] = scalar_traits<S>::str(norm_sq());
  return j.dump(2);
}

template std::string StateVector<BigInt>::to_json() const;
template std::string StateVector<Rational>::to_json() const;
template std::string StateVector<Poly>::to_json() const;
template std::string StateVector<double>::to_json() const;

StateVector<Rational> eval_at(const StateVector<Poly>& v, const Rational& t) {
  return v.map<Rational>(v.site_kind(), [&](const Poly& p) { return p.eval(t); });
}

StateVector<double> to_float(const StateVector<BigInt>& v) {
  return v.map<double>(v.site_kind(), [](const BigInt& z) { return z.get_d(); });
}

StateVector<double> to_float(const StateVector<Rational>& v) {
  return v.map<double>(v.site_kind(), [](const Rational& q) { return q.get_d(); });
}

}  // namespace mtn
