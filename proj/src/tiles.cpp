#include "mtn/tiles.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

namespace mtn {

const std::vector<Tile>& square_tiles() {
  static const std::vector<Tile> tiles = {
      Tile::square("A1", 1, 0, 1, 0),    // up step starts an arrow line
      Tile::square("A2", 1, 1, 0, 1),    // line and up step fuse, carry up
      Tile::square("A3", 0, 1, 1, 0),    // line passes through
      Tile::square("A4", 0, 0, 0, 0),    // blank
      Tile::square("A5", -1, 1, 0, 0),   // line terminates downward
      Tile::square("A6", -1, 0, 1, -1),  // borrow: line starts, carry -1 up
      Tile::square("A7", kOmega, 0, 0, kOmega),
      Tile::square("A8", kOmega, 1, 1, kOmega),
  };
  return tiles;
}

const std::vector<Tile>& triangle_tiles_t() {
  static const std::vector<Tile> tiles = {
      Tile::triangle("D1", -1, 0, -1), Tile::triangle("D2", 0, -1, -1),
      Tile::triangle("D3", 0, 1, 1),   Tile::triangle("D4", 1, 0, 1),
      Tile::triangle("D5", 0, 0, 0),   Tile::triangle("D6", 1, -1, 0),
      Tile::triangle("D7", -1, 1, 0),
  };
  return tiles;
}

const std::vector<Tile>& triangle_tiles_s() {
  static const std::vector<Tile> tiles = {
      Tile::triangle("E1", -1, 0, -1),
      Tile::triangle("E2", 0, -1, -1),
      Tile::triangle("E3", 0, 1, 1),
      Tile::triangle("E4", 1, 0, 1),
      Tile::triangle("E5", 0, 0, 0),
      Tile::triangle("E6", 1, -1, 0),
      Tile::triangle("E7", -1, 1, kOmega),  // the down-up pair opens an omega line
      Tile::triangle("E8", 0, kOmega, kOmega),
      Tile::triangle("E9", kOmega, -1, kOmega),
      Tile::triangle("E10", kOmega, 0, kOmega),
      Tile::triangle("E11", kOmega, 1, kOmega),
      Tile::triangle("E12", kOmega, kOmega, kOmega),
  };
  return tiles;
}

std::vector<Tile> tile_family(const std::string& name) {
  const auto& sq = square_tiles();
  if (name == "B") return {sq.begin(), sq.begin() + 6};
  if (name == "C") return sq;
  if (name == "T") return triangle_tiles_t();
  if (name == "S") return triangle_tiles_s();
  throw argument_error("tile_family: unknown family " + name);
}

GridGeometry GridGeometry::pyramid(int n) {
  if (n < 1) throw argument_error("pyramid: n must be positive");
  GridGeometry g;
  g.rows_in_col.resize(2 * n);
  for (int x = 1; x <= n; ++x) {
    int r = static_cast<int>(std::floor(std::log2(2.0 * x)));
    g.rows_in_col[x - 1] = r;
    g.rows_in_col[2 * n - x] = r;  // mirror
  }
  return g;
}

GridGeometry GridGeometry::rectangle(int n, int m, long p, long q) {
  if (n < 1 || m < 1) throw argument_error("rectangle: n, m must be positive");
  if (p < 0 || q < 0 || p >= (1L << m) || q >= (1L << m))
    throw argument_error("rectangle: boundary heights out of range");
  GridGeometry g;
  g.rows_in_col.assign(2 * n, m);
  g.p = p;
  g.q = q;
  return g;
}

int GridGeometry::max_rows() const {
  int m = 0;
  for (int r : rows_in_col) m = std::max(m, r);
  return m;
}

namespace {

int bit_of(long v, int row) { return (v >> (row - 1)) & 1; }

// Pinned value of the vertical edge between columns x and x+1 at `row`,
// when that edge is exterior (x = 0, x = n_cols, or above both columns).
int pinned_vertical(const GridGeometry& g, int x, int row) {
  if (x == 0) return bit_of(g.p, row);
  if (x == g.n_cols()) return bit_of(g.q, row);
  return 0;
}

const Tile* square_lookup(int south, int west) {
  for (const Tile& t : square_tiles())
    if (t.south == south && t.west == west) return &t;
  return nullptr;
}

}  // namespace

bool is_valid_tiling(const Tiling& t) {
  const GridGeometry& g = t.geom;
  if (static_cast<int>(t.cells.size()) != g.n_cols())
    throw argument_error("is_valid_tiling: partial assignment");
  for (int x = 1; x <= g.n_cols(); ++x)
    if (static_cast<int>(t.cells[x - 1].size()) != g.rows_in_col[x - 1])
      throw argument_error("is_valid_tiling: partial assignment");

  for (int x = 1; x <= g.n_cols(); ++x) {
    for (int row = 1; row <= g.rows_in_col[x - 1]; ++row) {
      const Tile& tile = t.tile(x, row);
      // West edge.
      if (x == 1 || row > g.rows_in_col[x - 2]) {
        if (tile.west != pinned_vertical(g, x - 1, row)) return false;
      } else if (tile.west != t.tile(x - 1, row).east) {
        return false;
      }
      // East edge, exterior side only (interior checked from the east cell).
      if (x == g.n_cols() || row > g.rows_in_col[x]) {
        if (tile.east != pinned_vertical(g, x, row)) return false;
      }
      // North edge.
      if (row == g.rows_in_col[x - 1]) {
        if (tile.north != 0) return false;
      } else if (tile.north != t.tile(x, row + 1).south) {
        return false;
      }
    }
  }
  return true;
}

std::optional<Tiling> tiling_from_config(const std::vector<int>& config,
                                         const GridGeometry& geom) {
  if (static_cast<int>(config.size()) != geom.n_cols())
    throw argument_error("tiling_from_config: config length mismatch");
  // Heights along the walk, starting from p.
  long h = geom.p;
  std::vector<long> heights{h};
  for (int s : config) {
    if (s != -1 && s != 0 && s != 1) return std::nullopt;
    h += s;
    if (h < 0) return std::nullopt;
    heights.push_back(h);
  }
  if (heights.back() != geom.q) return std::nullopt;

  // Every boundary value must fit the edges available there: interior edges
  // carry free bits, exterior edges must equal their pinned value, and bits
  // with no edge at all must vanish.
  int cols = geom.n_cols();
  for (int b = 0; b <= cols; ++b) {
    int left_rows = b >= 1 ? geom.rows_in_col[b - 1] : 0;
    int right_rows = b < cols ? geom.rows_in_col[b] : 0;
    int shared = std::min(left_rows, right_rows);
    int avail = std::max(left_rows, right_rows);
    for (int row = shared + 1; row <= 62; ++row) {
      int have = bit_of(heights[b], row);
      int want = row <= avail ? pinned_vertical(geom, b, row) : 0;
      if (have != want) return std::nullopt;
      if ((heights[b] >> row) == 0 && want == 0 && row > avail) break;
    }
  }

  Tiling t;
  t.geom = geom;
  t.cells.resize(cols);
  for (int x = 1; x <= cols; ++x) {
    int rows = geom.rows_in_col[x - 1];
    long hw = heights[x - 1], he = heights[x];
    int carry = config[x - 1];
    t.cells[x - 1].reserve(rows);
    for (int row = 1; row <= rows; ++row) {
      const Tile* tile = square_lookup(carry, bit_of(hw, row));
      if (!tile || tile->east != bit_of(he, row)) return std::nullopt;
      carry = tile->north;
      t.cells[x - 1].push_back(static_cast<int>(tile - square_tiles().data()));
    }
    if (carry != 0) return std::nullopt;  // carry may not leave the column top
  }
  return t;
}

std::vector<int> config_from_tiling(const Tiling& t) {
  if (!is_valid_tiling(t)) throw argument_error("config_from_tiling: invalid tiling");
  std::vector<int> cfg;
  cfg.reserve(t.geom.n_cols());
  for (int x = 1; x <= t.geom.n_cols(); ++x) cfg.push_back(t.tile(x, 1).south);
  return cfg;
}

int count_tilings(const std::vector<int>& config, const GridGeometry& geom,
                  int limit) {
  // Honest cell-wise backtracking over all candidate tiles; no use of the
  // deterministic construction, so it doubles as a uniqueness check.
  if (static_cast<int>(config.size()) != geom.n_cols())
    throw argument_error("count_tilings: config length mismatch");
  const auto& tiles = square_tiles();
  int cols = geom.n_cols();
  int found = 0;

  Tiling t;
  t.geom = geom;
  t.cells.assign(cols, {});
  for (int x = 1; x <= cols; ++x) t.cells[x - 1].assign(geom.rows_in_col[x - 1], -1);

  std::function<void(int, int)> place = [&](int x, int row) {
    if (found >= limit) return;
    if (x > cols) {
      ++found;
      return;
    }
    int rows = geom.rows_in_col[x - 1];
    auto [nx, nrow] = row < rows ? std::pair{x, row + 1} : std::pair{x + 1, 1};
    for (std::size_t i = 0; i < tiles.size(); ++i) {
      const Tile& tile = tiles[i];
      if (row == 1) {
        if (tile.south != config[x - 1]) continue;
      } else if (tile.south != t.tile(x, row - 1).north) {
        continue;
      }
      if (x == 1 || row > geom.rows_in_col[x - 2]) {
        if (tile.west != pinned_vertical(geom, x - 1, row)) continue;
      } else if (tile.west != t.tile(x - 1, row).east) {
        continue;
      }
      if ((x == cols || row > geom.rows_in_col[x]) &&
          tile.east != pinned_vertical(geom, x, row))
        continue;
      if (row == rows && tile.north != 0) continue;
      t.cells[x - 1][row - 1] = static_cast<int>(i);
      place(nx, nrow);
      t.cells[x - 1][row - 1] = -1;
    }
  };
  place(1, 1);
  return found;
}

int tile_side(const Tile& t, char side) {
  switch (side) {
    case 's':
      return t.south;
    case 'w':
      return t.west;
    case 'e':
      return t.east;
    case 'n':
      return t.north;
    case 'i':
      return t.left;
    case 'j':
      return t.right;
    case 'k':
      return t.top;
  }
  throw argument_error("tile_side: unknown side");
}

std::map<std::vector<int>, std::vector<std::vector<int>>> enumerate_fragment_tilings(
    const Fragment& frag, const std::vector<std::vector<int>>& slot_alphabets) {
  if (slot_alphabets.size() != frag.free_slots.size())
    throw argument_error("enumerate_fragment_tilings: alphabet count mismatch");

  std::map<std::vector<int>, std::vector<std::vector<int>>> out;
  // Seed every boundary labeling so missing tilings are visible as empties.
  std::vector<std::vector<int>> labelings{{}};
  for (const auto& alpha : slot_alphabets) {
    std::vector<std::vector<int>> next;
    for (const auto& partial : labelings)
      for (int v : alpha) {
        auto ext = partial;
        ext.push_back(v);
        next.push_back(std::move(ext));
      }
    labelings = std::move(next);
  }
  for (const auto& l : labelings) out[l] = {};

  std::vector<int> pick(frag.cells.size(), -1);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == frag.cells.size()) {
      for (const auto& bond : frag.bonds) {
        const Tile& a = frag.cells[bond.cell_a].candidates[pick[bond.cell_a]];
        const Tile& b = frag.cells[bond.cell_b].candidates[pick[bond.cell_b]];
        if (tile_side(a, bond.side_a) != tile_side(b, bond.side_b)) return;
      }
      for (const auto& [slot, value] : frag.pinned) {
        const Tile& t = frag.cells[slot.cell].candidates[pick[slot.cell]];
        if (tile_side(t, slot.side) != value) return;
      }
      std::vector<int> labeling;
      labeling.reserve(frag.free_slots.size());
      for (std::size_t s = 0; s < frag.free_slots.size(); ++s) {
        const auto& slot = frag.free_slots[s];
        int v = tile_side(frag.cells[slot.cell].candidates[pick[slot.cell]], slot.side);
        if (std::find(slot_alphabets[s].begin(), slot_alphabets[s].end(), v) ==
            slot_alphabets[s].end())
          return;
        labeling.push_back(v);
      }
      out[labeling].push_back(pick);
      return;
    }
    for (std::size_t c = 0; c < frag.cells[i].candidates.size(); ++c) {
      pick[i] = static_cast<int>(c);
      // Early bond check against already-picked cells.
      bool ok = true;
      for (const auto& bond : frag.bonds) {
        if (bond.cell_a <= static_cast<int>(i) && bond.cell_b <= static_cast<int>(i)) {
          const Tile& a = frag.cells[bond.cell_a].candidates[pick[bond.cell_a]];
          const Tile& b = frag.cells[bond.cell_b].candidates[pick[bond.cell_b]];
          if (tile_side(a, bond.side_a) != tile_side(b, bond.side_b)) {
            ok = false;
            break;
          }
        }
      }
      if (ok) go(i + 1);
    }
    pick[i] = -1;
  };
  go(0);
  return out;
}

namespace {

char glyph_vertical(int v) {
  if (v == 1) return '^';
  if (v == -1) return 'v';
  if (v == kOmega) return '~';
  return ' ';
}

}  // namespace

std::string render_ascii(const Tiling& t) {
  const GridGeometry& g = t.geom;
  int m = g.max_rows();
  std::ostringstream os;
  for (int row = m; row >= 1; --row) {
    std::string line1, line2;
    for (int x = 1; x <= g.n_cols(); ++x) {
      if (!g.cell_at(x, row)) {
        line1 += "      ";
        line2 += "      ";
        continue;
      }
      const Tile& tile = t.tile(x, row);
      line1 += " .";
      line1 += glyph_vertical(tile.north);
      line1 += "-. ";
      line2 += (tile.west == 1) ? '>' : ' ';
      line2 += '|';
      line2 += tile.name.size() > 1 ? tile.name[1] : '?';
      line2 += (tile.name.size() > 2) ? tile.name[2] : '|';
      line2 += (tile.east == 1) ? '>' : ' ';
      line2 += ' ';
    }
    os << line1 << "\n" << line2 << "\n";
  }
  std::string south;
  for (int x = 1; x <= g.n_cols(); ++x) {
    south += "  ";
    south += glyph_vertical(t.tile(x, 1).south);
    south += "   ";
  }
  os << south << "\n";
  return os.str();
}

std::string render_svg(const Tiling& t) {
  const GridGeometry& g = t.geom;
  const int cell = 40;
  int m = g.max_rows();
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << g.n_cols() * cell + 20 << "\" height=\"" << m * cell + 40 << "\">\n";
  for (int x = 1; x <= g.n_cols(); ++x) {
    for (int row = 1; row <= g.rows_in_col[x - 1]; ++row) {
      const Tile& tile = t.tile(x, row);
      int px = 10 + (x - 1) * cell;
      int py = 10 + (m - row) * cell;
      os << "<rect x=\"" << px << "\" y=\"" << py << "\" width=\"" << cell
         << "\" height=\"" << cell << "\" fill=\"none\" stroke=\"black\"/>\n";
      os << "<text x=\"" << px + cell / 2 << "\" y=\"" << py + cell / 2
         << "\" text-anchor=\"middle\" font-size=\"10\">" << tile.name
         << "</text>\n";
      auto edge = [&](int v, int x1, int y1, int x2, int y2) {
        if (v == 0) return;
        os << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2
           << "\" y2=\"" << y2 << "\" stroke=\"" << (v == kOmega ? "gray" : "red")
           << "\"";
        if (v == kOmega) os << " stroke-dasharray=\"3,3\"";
        os << "/>\n";
      };
      edge(tile.west, px, py + cell, px, py);
      edge(tile.east, px + cell, py + cell, px + cell, py);
      edge(tile.south, px + cell / 2, py + cell, px + cell / 2, py + cell / 2);
      edge(tile.north, px + cell / 2, py + cell / 2, px + cell / 2, py);
    }
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace mtn
