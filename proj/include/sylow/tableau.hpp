#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/poly.hpp"

// Elements of the Sylow 2-subgroup P_n(2) of S_{2^n} in tableau form: a list
// of coordinates [f_1, f_2(x_1), ..., f_n(x_1..x_{n-1})] where coordinate i
// is a reduced polynomial in the first i-1 variables.  The group acts on the
// 2^n leaves of a binary tree of height n; a packed leaf index carries bit
// b_1 in the least significant position.
//
// Multiplication convention: (f*g) acts as f first, then g, matching
//   [f*g]_i = f_i + g_i(x_1 + f_1, ..., x_{i-1} + f_{i-1}).

namespace sylow {

struct LeafPermutation {
  unsigned depth = 0;
  std::vector<std::uint32_t> images;  // images[v] = image of leaf v

  static LeafPermutation identity(unsigned depth);
  bool is_identity() const;
  friend bool operator==(const LeafPermutation&,
                         const LeafPermutation&) = default;
};

// a first, then b.
LeafPermutation compose(const LeafPermutation& a, const LeafPermutation& b);
LeafPermutation invert(const LeafPermutation& p);

class Tableau {
 public:
  // coords[i] must have arity i; throws ArityMismatch otherwise.
  explicit Tableau(std::vector<BoolPoly> coords);
  static Tableau identity(unsigned depth);

  unsigned depth() const { return static_cast<unsigned>(coords_.size()); }

  // 1-based coordinate accessors.
  const BoolPoly& coordinate(unsigned i) const;
  const TruthTable& coordinate_table(unsigned i) const;

  // First i coordinates as a tableau of depth i.
  Tableau prefix(unsigned i) const;

  bool is_identity() const;

  Tableau inverse() const;
  Tableau pow(std::uint64_t k) const;

  friend Tableau operator*(const Tableau& f, const Tableau& g);
  friend bool operator==(const Tableau& a, const Tableau& b) {
    return a.coords_ == b.coords_;
  }

 private:
  Tableau() = default;

  std::vector<BoolPoly> coords_;   // coords_[i] has arity i
  std::vector<TruthTable> tables_; // value view of each coordinate
};

LeafPermutation leaf_permutation(const Tableau& f);

// Rebuilds a tableau from its leaf action; throws InternalInconsistency when
// the permutation does not respect the level structure of the tree.
Tableau tableau_from_leaf_permutation(const LeafPermutation& p);

// Coordinate truth tables concatenated into a little-endian bit string;
// coordinate i occupies bits [2^(i-1)-1, 2^i-2].  Equal tableaux and only
// they produce equal keys.
std::vector<std::uint64_t> packed_key(const Tableau& f);

// The packed key read as an integer, and its inverse.  Depth <= 6 so the
// 2^depth - 1 bits fit one word; enumerating indices 0 .. 2^(2^depth - 1) - 1
// walks every element of P_depth(2) exactly once.
std::uint64_t packed_index(const Tableau& f);
Tableau tableau_at(unsigned depth, std::uint64_t packed_bits);

struct PackedKeyHash {
  std::size_t operator()(const std::vector<std::uint64_t>& key) const;
};

// `[p_1; p_2; ...; p_n]` with each coordinate in the poly text grammar.
std::string to_string(const Tableau& f);

}  // namespace sylow
