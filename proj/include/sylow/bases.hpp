#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "sylow/tableau.hpp"

// Diagonal bases of P_n(2): generating sets D_1..D_n where D_i is nonzero
// only on its own coordinate, [D_1]_1 = 1, and [D_i]_i contains the full
// monomial x_1..x_{i-1}.  Every generator is an involution.

namespace sylow {

class DiagonalBase {
 public:
  // diagonal[i-1] is the sole nonzero coordinate of D_i (arity i-1).
  // Throws ValidationError when the shape is not a diagonal base.
  DiagonalBase(unsigned depth, std::vector<BoolPoly> diagonal);

  unsigned depth() const { return depth_; }

  // [D_i]_i, 1-based.
  const BoolPoly& diagonal(unsigned i) const;
  // D_i as a tableau, 1-based.
  const Tableau& generator(unsigned i) const;

  friend bool operator==(const DiagonalBase& a, const DiagonalBase& b) {
    return a.diagonal_ == b.diagonal_;
  }

 private:
  unsigned depth_;
  std::vector<BoolPoly> diagonal_;
  std::vector<Tableau> generators_;
};

// Generator indices whose coordinate has an even number of monomials
// (D_1 has one monomial and is never listed).
std::vector<unsigned> even_monomial_indices(const DiagonalBase& base);

// --- exhaustive enumeration ------------------------------------------------
//
// Coordinate i ranges over x_1..x_{i-1} plus any subset of the other
// 2^(i-1)-1 monomials, giving 2^(2^(i-1)-1) choices; the total count is the
// product over i = 2..n.  Bases are indexed deterministically: the subset
// choice for coordinate 2 is the most significant digit, and within a
// coordinate subsets are ordered by their integer encoding (bit t of the
// encoding is the monomial with mask t).

constexpr unsigned kDefaultExhaustiveGuard = 4;
constexpr unsigned kMaxExhaustiveDepth = 5;

std::uint64_t diagonal_base_count(unsigned n);
DiagonalBase diagonal_base_at(unsigned n, std::uint64_t index);

// All bases of depth n in index order; DepthTooLarge beyond the guard.
std::vector<DiagonalBase> enumerate_diagonal(
    unsigned n, unsigned guard = kDefaultExhaustiveGuard);

// Uniform over all diagonal bases of depth n; deterministic per seed stream.
DiagonalBase sample_diagonal(unsigned n, std::mt19937_64& rng);

// --- delta bases -------------------------------------------------------------

// Bits a_2..a_{n-1} identifying a delta base of depth n.
struct CharacteristicVector {
  unsigned depth = 0;
  std::vector<std::uint8_t> bits;  // bits[t] = a_{t+2}

  static CharacteristicVector parse(unsigned depth, std::string_view text);
  std::string to_string() const;
  friend bool operator==(const CharacteristicVector&,
                         const CharacteristicVector&) = default;
};

// [D_i]_i = x_1..x_{i-1} + a_i for 2 <= i <= n-1 and [D_n]_n = x_1..x_{n-1}.
DiagonalBase delta_base(const CharacteristicVector& a);
DiagonalBase delta_base(unsigned n, std::uint32_t vector_bits);  // a_2 = MSB

// The depth-n base with every coordinate exactly the full monomial.
DiagonalBase full_monomial_base(unsigned n);

// The depth-5 base [1; x1+1; x1*x2+x2; x1*x2*x3+x2*x3+x1+1;
// x1*x2*x3*x4+x2*x3+x3*x4+x2+x4] whose Cayley graph has girth 6.
DiagonalBase base_s();

// Extends a base with no commuting generator pair to depth n+1 by appending
// the coordinate x_1..x_n + sum of x_e over even-monomial-count generators;
// the result again has no commuting pair (re-verified).  Throws
// PreconditionViolated when the input has a commuting pair.
DiagonalBase extend_no4cycle(const DiagonalBase& base);

// --- base file format --------------------------------------------------------
//
//   n=<depth>
//   1: 1
//   2: <poly in x1>
//   ...
//   n: <poly in x1..x_{n-1}>

DiagonalBase read_base(std::istream& in);
DiagonalBase read_base_file(const std::filesystem::path& path);
std::string format_base(const DiagonalBase& base);
void write_base_file(const DiagonalBase& base,
                     const std::filesystem::path& path);

}  // namespace sylow
