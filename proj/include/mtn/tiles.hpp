#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mtn/errors.hpp"

namespace mtn {

/// Non-physical edge marker used by the open-chain tile set. It lives outside
/// the charge system; consistency of omega lines is enforced by edge matching.
inline constexpr int kOmega = 2;

enum class TileShape { square, triangle };

/// A labeled cell. Squares carry (south, west, east, north) with spin values
/// on the vertical direction and bits on the horizontal one. Triangles carry
/// (left, right, top) legs, all spin-valued (plus omega where the family
/// allows it).
struct Tile {
  std::string name;
  TileShape shape = TileShape::square;
  int south = 0, west = 0, east = 0, north = 0;  // squares
  int left = 0, right = 0, top = 0;              // triangles

  static Tile square(std::string name, int s, int w, int e, int n) {
    Tile t;
    t.name = std::move(name);
    t.shape = TileShape::square;
    t.south = s;
    t.west = w;
    t.east = e;
    t.north = n;
    return t;
  }
  static Tile triangle(std::string name, int i, int j, int k) {
    Tile t;
    t.name = std::move(name);
    t.shape = TileShape::triangle;
    t.left = i;
    t.right = j;
    t.top = k;
    return t;
  }

  /// Number of horizontal arrow half-segments (square tiles).
  int segments() const { return (west == 1 ? 1 : 0) + (east == 1 ? 1 : 0); }
};

/// Square tiles A1..A8. A1..A6 realize binary addition of a spin into a
/// height bit string with a signed carry: west + south = east + 2*north.
/// A7/A8 pass an omega line vertically through the cell.
const std::vector<Tile>& square_tiles();

/// Triangle tiles D1..D7: all solutions of left + right = top over {-1,0,1}.
const std::vector<Tile>& triangle_tiles_t();

/// Triangle tiles E1..E12 for the open-chain tensor: the D tiles minus D7,
/// plus the omega-handling tiles (E7 turns the down-up pair into an omega
/// line; E8..E12 propagate omega upward).
const std::vector<Tile>& triangle_tiles_s();

/// Named families: "B" (6 squares), "C" (8 squares), "T" (7 triangles),
/// "S" (12 triangles).
std::vector<Tile> tile_family(const std::string& name);

/// Grid of square cells. Column x (1-based, west to east) holds rows
/// 1..rows_in_col[x-1], row 1 at the bottom. Exterior west/east/north edges
/// are pinned: west/east column boundaries to the bits of p and q (row k is
/// bit k-1), everything else to zero.
struct GridGeometry {
  std::vector<int> rows_in_col;
  long p = 0;
  long q = 0;

  static GridGeometry pyramid(int n);
  static GridGeometry rectangle(int n, int m, long p = 0, long q = 0);

  int n_cols() const { return static_cast<int>(rows_in_col.size()); }
  int max_rows() const;
  bool cell_at(int col, int row) const {
    return col >= 1 && col <= n_cols() && row >= 1 && row <= rows_in_col[col - 1];
  }
};

/// A total assignment of square tiles to a grid. Tiles are indices into
/// square_tiles().
struct Tiling {
  GridGeometry geom;
  std::vector<std::vector<int>> cells;  // [col-1][row-1]

  const Tile& tile(int col, int row) const {
    return square_tiles()[cells[col - 1][row - 1]];
  }
};

/// True iff every shared edge matches and every exterior edge equals its
/// pinned value.
bool is_valid_tiling(const Tiling& t);

/// The unique valid tiling whose south boundary spells the given config,
/// or nullopt when the config admits none (open walks only for p = q = 0).
std::optional<Tiling> tiling_from_config(const std::vector<int>& config,
                                         const GridGeometry& geom);

/// South boundary labels of a valid tiling.
std::vector<int> config_from_tiling(const Tiling& t);

/// Count of valid tilings with the given south boundary, stopping at `limit`.
/// Exhaustive cell-wise search; used for uniqueness and padding checks.
int count_tilings(const std::vector<int>& config, const GridGeometry& geom,
                  int limit = 2);

// ---------------------------------------------------------------------------
// Small free-form fragments used by the lemma verifiers.

struct FragmentCell {
  TileShape shape;
  std::vector<Tile> candidates;
};

/// Bond between two cell sides; sides are 's','w','e','n' for squares and
/// 'i','j','k' for triangles.
struct FragmentBond {
  int cell_a;
  char side_a;
  int cell_b;
  char side_b;
};

struct FragmentSlot {
  int cell;
  char side;
};

struct Fragment {
  std::vector<FragmentCell> cells;
  std::vector<FragmentBond> bonds;
  std::vector<FragmentSlot> free_slots;    // enumerated boundary, in order
  std::vector<std::pair<FragmentSlot, int>> pinned;  // fixed boundary labels
};

int tile_side(const Tile& t, char side);

/// All valid tilings per boundary labeling of the free slots. Keys cover the
/// full product of the slot alphabets; labelings with no valid tiling map to
/// an empty list.
std::map<std::vector<int>, std::vector<std::vector<int>>> enumerate_fragment_tilings(
    const Fragment& frag, const std::vector<std::vector<int>>& slot_alphabets);

// ---------------------------------------------------------------------------
// Rendering.

std::string render_ascii(const Tiling& t);
std::string render_svg(const Tiling& t);

}  // namespace mtn
