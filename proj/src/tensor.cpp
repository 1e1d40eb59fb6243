#include "mtn/tensor.hpp"

#include <algorithm>

#include <json.hpp>

namespace mtn {

bool IndexSpace::has(int label) const {
  return std::find(labels.begin(), labels.end(), label) != labels.end();
}

IndexSpace spin1_space(std::string name, Orientation o) {
  return {std::move(name), {-1, 0, 1}, o, {{-1, -1}, {0, 0}, {1, 1}}};
}

IndexSpace spin1_omega_space(std::string name, Orientation o) {
  return {std::move(name), {-1, 0, 1, kOmega}, o, {{-1, -1}, {0, 0}, {1, 1}}};
}

IndexSpace bit_space(std::string name, Orientation o) {
  return {std::move(name), {0, 1}, o, {{0, 0}, {1, 1}}};
}

IndexSpace carry_space(std::string name, Orientation o) {
  return {std::move(name), {-1, 0, 1}, o, {{-1, -2}, {0, 0}, {1, 2}}};
}

IndexSpace carry_omega_space(std::string name, Orientation o) {
  return {std::move(name), {-1, 0, 1, kOmega}, o, {{-1, -2}, {0, 0}, {1, 2}}};
}

IndexSpace spin_half_space(std::string name, Orientation o) {
  return {std::move(name), {-1, 1}, o, {{-1, -1}, {1, 1}}};
}

IndexSpace charge_label_space(std::string name, Orientation o,
                              std::vector<long> charges) {
  IndexSpace sp;
  sp.name = std::move(name);
  sp.orient = o;
  for (long c : charges) {
    sp.labels.push_back(static_cast<int>(c));
    sp.charge[static_cast<int>(c)] = c;
  }
  return sp;
}

const Inventory& Inventory::standard() {
  static const Inventory inv = [] {
    Inventory v;
    v.b_tiles = tile_family("B");
    v.c_tiles = tile_family("C");
    v.t_tiles = tile_family("T");
    v.s_tiles = tile_family("S");
    v.g_entries = {{0, -1, 0, -1}, {0, 0, 1, -1}, {0, 1, 0, 1},
                   {1, -1, 1, -1}, {1, 0, 0, 1},  {1, 1, 1, 1}};
    v.w_entries = {{-1, -1, -2}, {-1, 1, 0}, {1, -1, 0}, {1, 1, 2}};
    return v;
  }();
  return inv;
}

Inventory Inventory::drop(const std::string& family, std::size_t idx) const {
  Inventory v = *this;
  auto erase_at = [&](auto& vec) {
    if (idx >= vec.size()) throw argument_error("Inventory::drop: index out of range");
    vec.erase(vec.begin() + static_cast<long>(idx));
  };
  if (family == "B")
    erase_at(v.b_tiles);
  else if (family == "C")
    erase_at(v.c_tiles);
  else if (family == "T")
    erase_at(v.t_tiles);
  else if (family == "S")
    erase_at(v.s_tiles);
  else if (family == "G")
    erase_at(v.g_entries);
  else if (family == "W")
    erase_at(v.w_entries);
  else
    throw argument_error("Inventory::drop: unknown family " + family);
  return v;
}

namespace {

std::vector<IndexSpace> square_spaces(bool omega) {
  auto vertical = omega ? spin1_omega_space : spin1_space;
  auto carry = omega ? carry_omega_space : carry_space;
  return {vertical("south", Orientation::incoming),
          bit_space("west", Orientation::incoming),
          bit_space("east", Orientation::outgoing),
          carry("north", Orientation::outgoing)};
}

std::vector<IndexSpace> triangle_spaces(bool omega) {
  auto sp = omega ? spin1_omega_space : spin1_space;
  return {sp("left", Orientation::incoming), sp("right", Orientation::incoming),
          sp("top", Orientation::outgoing)};
}

template <class S>
LabeledTensor<S> from_square_tiles(const std::vector<Tile>& tiles, bool omega) {
  LabeledTensor<S> t(square_spaces(omega));
  for (const Tile& tile : tiles)
    t.add({tile.south, tile.west, tile.east, tile.north}, scalar_traits<S>::one());
  return t;
}

template <class S>
LabeledTensor<S> from_triangle_tiles(const std::vector<Tile>& tiles, bool omega) {
  LabeledTensor<S> t(triangle_spaces(omega));
  for (const Tile& tile : tiles)
    t.add({tile.left, tile.right, tile.top}, scalar_traits<S>::one());
  return t;
}

}  // namespace

template <class S>
LabeledTensor<S> make_b(const Inventory& inv) {
  return from_square_tiles<S>(inv.b_tiles, false);
}

template <class S>
LabeledTensor<S> make_b_weighted(const S& t, int row, const Inventory& inv) {
  if (row < 1) throw argument_error("make_b_weighted: row must be >= 1");
  LabeledTensor<S> out(square_spaces(false));
  unsigned long unit = 1UL << (row - 1);
  for (const Tile& tile : inv.b_tiles)
    out.add({tile.south, tile.west, tile.east, tile.north},
            scalar_traits<S>::pow(t, unit * tile.segments()));
  return out;
}

template <class S>
LabeledTensor<S> make_b_area(const S& t, int row, const Inventory& inv) {
  if (row < 1) throw argument_error("make_b_area: row must be >= 1");
  LabeledTensor<S> out(square_spaces(false));
  unsigned long unit = 1UL << (row - 1);
  for (const Tile& tile : inv.b_tiles)
    out.add({tile.south, tile.west, tile.east, tile.north},
            scalar_traits<S>::pow(t, unit * (tile.east == 1 ? 1 : 0)));
  return out;
}

template <class S>
LabeledTensor<S> make_c(const Inventory& inv) {
  return from_square_tiles<S>(inv.c_tiles, true);
}

template <class S>
LabeledTensor<S> make_t(const Inventory& inv) {
  return from_triangle_tiles<S>(inv.t_tiles, false);
}

template <class S>
LabeledTensor<S> make_s(const Inventory& inv) {
  return from_triangle_tiles<S>(inv.s_tiles, true);
}

template <class S>
LabeledTensor<S> make_p() {
  LabeledTensor<S> t({spin1_space("in", Orientation::incoming),
                      spin_half_space("out", Orientation::outgoing)});
  t.add({1, 1}, scalar_traits<S>::one());
  t.add({-1, -1}, scalar_traits<S>::one());
  return t;
}

template <class S>
LabeledTensor<S> make_pi() {
  LabeledTensor<S> t({spin1_omega_space("in", Orientation::incoming),
                      spin1_omega_space("out", Orientation::outgoing)});
  for (int v : {-1, 0, 1}) t.add({v, v}, scalar_traits<S>::one());
  return t;
}

template <class S>
LabeledTensor<S> make_g(int level, const Inventory& inv) {
  if (level < 1) throw argument_error("make_g: level must be >= 1");
  long u = 1L << (level - 1);
  LabeledTensor<S> t(
      {charge_label_space("vin", Orientation::incoming, {0, u}),
       charge_label_space("in", Orientation::incoming, {-u, 0, u}),
       charge_label_space("vout", Orientation::outgoing, {0, u}),
       charge_label_space("out", Orientation::outgoing, {-u, u})});
  for (const auto& [i, k, j, l] : inv.g_entries)
    t.add({static_cast<int>(i * u), static_cast<int>(k * u), static_cast<int>(j * u),
           static_cast<int>(l * u)},
          scalar_traits<S>::one());
  return t;
}

template <class S>
LabeledTensor<S> make_w(int level, const Inventory& inv) {
  if (level < 1) throw argument_error("make_w: level must be >= 1");
  long u = 1L << (level - 1);
  LabeledTensor<S> t(
      {charge_label_space("in1", Orientation::incoming, {-u, u}),
       charge_label_space("in2", Orientation::incoming, {-u, u}),
       charge_label_space("out", Orientation::outgoing, {-2 * u, 0, 2 * u})});
  for (const auto& [i, j, k] : inv.w_entries)
    t.add({static_cast<int>(i * u), static_cast<int>(j * u), static_cast<int>(k * u)},
          scalar_traits<S>::one());
  return t;
}

template <class S>
std::string LabeledTensor<S>::to_json() const {
  nlohmann::ordered_json j;
  nlohmann::ordered_json idx = nlohmann::ordered_json::array();
  for (const IndexSpace& sp : indices_) {
    nlohmann::ordered_json s;
    s["name"] = sp.name;
    s["labels"] = sp.labels;
    s["orientation"] = sp.orient == Orientation::incoming ? "in" : "out";
    nlohmann::ordered_json ch = nlohmann::ordered_json::object();
    for (const auto& [l, c] : sp.charge) ch[std::to_string(l)] = c;
    s["charges"] = std::move(ch);
    idx.push_back(std::move(s));
  }
  j["indices"] = std::move(idx);
  nlohmann::ordered_json ent = nlohmann::ordered_json::array();
  for (const auto& [key, value] : entries_) {
    nlohmann::ordered_json e;
    e["key"] = key;
    e["value"] = scalar_traits<S>::str(value);
    ent.push_back(std::move(e));
  }
  j["entries"] = std::move(ent);
  return j.dump(2);
}

#define MTN_INSTANTIATE(S)                                                     \
  template class LabeledTensor<S>;                                             \
  template LabeledTensor<S> make_b<S>(const Inventory&);                       \
  template LabeledTensor<S> make_b_weighted<S>(const S&, int, const Inventory&); \
  template LabeledTensor<S> make_b_area<S>(const S&, int, const Inventory&);   \
  template LabeledTensor<S> make_c<S>(const Inventory&);                       \
  template LabeledTensor<S> make_t<S>(const Inventory&);                       \
  template LabeledTensor<S> make_s<S>(const Inventory&);                       \
  template LabeledTensor<S> make_p<S>();                                       \
  template LabeledTensor<S> make_pi<S>();                                      \
  template LabeledTensor<S> make_g<S>(int, const Inventory&);                  \
  template LabeledTensor<S> make_w<S>(int, const Inventory&);

MTN_INSTANTIATE(BigInt)
MTN_INSTANTIATE(Rational)
MTN_INSTANTIATE(Poly)
MTN_INSTANTIATE(double)
#undef MTN_INSTANTIATE

}  // namespace mtn
