#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "sylow/errors.hpp"

// Reduced multilinear polynomials over Z_2 in the quotient ring
// Z_2[x_1..x_k] / <x_i^2 - x_i>, kept in algebraic normal form with a
// truth-table view alongside.
//
// Conventions, fixed project-wide:
//   * A monomial is a bitmask: bit (i-1) set  <=>  x_i is a factor.
//     The empty mask is the constant monomial 1.
//   * A point of Z_2^k is a bitmask with v_1 in the least significant bit.
//   * Truth tables are indexed by packed points (see kernels.hpp for the
//     word layout).

namespace sylow {

using Monomial = std::uint32_t;

constexpr unsigned kMaxArity = 20;

// x_1 * x_2 * ... * x_k
constexpr Monomial full_monomial_mask(unsigned arity) {
  return arity == 0 ? 0u : (Monomial{1} << arity) - 1u;
}

class TruthTable {
 public:
  explicit TruthTable(unsigned arity);
  static TruthTable constant(unsigned arity, bool value);

  unsigned arity() const { return arity_; }
  std::uint32_t size() const { return std::uint32_t{1} << arity_; }

  bool test(std::uint32_t point) const {
    return (words_[point >> 6] >> (point & 63)) & 1u;
  }
  void set(std::uint32_t point, bool value) {
    const std::uint64_t bit = std::uint64_t{1} << (point & 63);
    if (value)
      words_[point >> 6] |= bit;
    else
      words_[point >> 6] &= ~bit;
  }

  TruthTable& operator^=(const TruthTable& other);
  TruthTable& operator&=(const TruthTable& other);
  void flip();  // pointwise complement

  bool is_zero() const;
  std::uint64_t ones() const;

  std::uint64_t* words() { return words_.data(); }
  const std::uint64_t* words() const { return words_.data(); }
  std::size_t word_count() const { return words_.size(); }

  friend bool operator==(const TruthTable& a, const TruthTable& b) {
    return a.arity_ == b.arity_ && a.words_ == b.words_;
  }

 private:
  unsigned arity_;
  std::vector<std::uint64_t> words_;
};

class BoolPoly {
 public:
  // Zero polynomial of the given arity.
  explicit BoolPoly(unsigned arity = 0);
  BoolPoly(unsigned arity, std::initializer_list<Monomial> terms);

  static BoolPoly zero(unsigned arity) { return BoolPoly(arity); }
  static BoolPoly one(unsigned arity) { return BoolPoly(arity, {Monomial{0}}); }
  static BoolPoly variable(unsigned arity, unsigned index);
  static BoolPoly full_monomial(unsigned arity);
  // Terms are folded with symmetric-difference semantics (pairs cancel).
  static BoolPoly from_terms(unsigned arity, std::vector<Monomial> terms);

  unsigned arity() const { return arity_; }
  // Canonical form: strictly increasing monomial masks.
  const std::vector<Monomial>& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_[0] == 0; }
  std::size_t term_count() const { return terms_.size(); }
  bool parity_even() const { return terms_.size() % 2 == 0; }

  bool contains(Monomial m) const;
  bool contains_full() const { return contains(full_monomial_mask(arity_)); }

  // Same polynomial viewed in a ring with more variables.
  BoolPoly with_arity(unsigned arity) const;

  bool evaluate(std::uint32_t point) const;

  friend bool operator==(const BoolPoly& a, const BoolPoly& b) {
    return a.arity_ == b.arity_ && a.terms_ == b.terms_;
  }

 private:
  unsigned arity_;
  std::vector<Monomial> terms_;
};

BoolPoly operator+(const BoolPoly& p, const BoolPoly& q);
BoolPoly operator*(const BoolPoly& p, const BoolPoly& q);

// p with x_i replaced by subs[i-1]; every substitute must have arity
// out_arity.  The overload without out_arity takes it from subs.
BoolPoly substitute(const BoolPoly& p, std::span<const BoolPoly> subs,
                    unsigned out_arity);
BoolPoly substitute(const BoolPoly& p, std::span<const BoolPoly> subs);

TruthTable to_truth_table(const BoolPoly& p);
BoolPoly from_truth_table(const TruthTable& t);

// p = full_coeff * (x_1..x_k)  +  x_pivot * cofactor  +  remainder,
// with cofactor and remainder free of x_pivot and cofactor free of the
// full monomial divided by x_pivot.  The split is unique.
struct Decomposition {
  bool full_coeff;
  BoolPoly cofactor;
  BoolPoly remainder;
};
Decomposition decompose(const BoolPoly& p, unsigned pivot);

}  // namespace sylow
