#include "sylow/poly.hpp"

#include <algorithm>
#include <bit>

#include "sylow/kernels.hpp"

namespace sylow {

namespace {

std::size_t words_for(unsigned arity) {
  return arity >= 6 ? (std::size_t{1} << (arity - 6)) : 1;
}

// Zero outside the live 2^arity bits of a single-word table.
std::uint64_t live_mask(unsigned arity) {
  return arity >= 6 ? ~std::uint64_t{0}
                    : (std::uint64_t{1} << (1u << arity)) - 1u;
}

void check_arity(unsigned arity) {
  if (arity > kMaxArity)
    throw ArityMismatch("arity " + std::to_string(arity) + " exceeds limit " +
                        std::to_string(kMaxArity));
}

void check_same_arity(const BoolPoly& p, const BoolPoly& q, const char* op) {
  if (p.arity() != q.arity())
    throw ArityMismatch(std::string(op) + ": arities " +
                        std::to_string(p.arity()) + " and " +
                        std::to_string(q.arity()) + " differ");
}

}  // namespace

TruthTable::TruthTable(unsigned arity)
    : arity_(arity), words_(words_for(arity), 0) {
  check_arity(arity);
}

TruthTable TruthTable::constant(unsigned arity, bool value) {
  TruthTable t(arity);
  if (value) {
    std::fill(t.words_.begin(), t.words_.end(), ~std::uint64_t{0});
    t.words_.back() &= live_mask(arity);
  }
  return t;
}

TruthTable& TruthTable::operator^=(const TruthTable& other) {
  if (arity_ != other.arity_) throw ArityMismatch("truth-table xor");
  kernels::xor_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

TruthTable& TruthTable::operator&=(const TruthTable& other) {
  if (arity_ != other.arity_) throw ArityMismatch("truth-table and");
  kernels::and_words(words_.data(), other.words_.data(), words_.size());
  return *this;
}

void TruthTable::flip() {
  for (auto& w : words_) w = ~w;
  words_.back() &= live_mask(arity_);
}

bool TruthTable::is_zero() const {
  return kernels::all_zero(words_.data(), words_.size());
}

std::uint64_t TruthTable::ones() const {
  return kernels::popcount(words_.data(), words_.size());
}

BoolPoly::BoolPoly(unsigned arity) : arity_(arity) { check_arity(arity); }

BoolPoly::BoolPoly(unsigned arity, std::initializer_list<Monomial> terms)
    : BoolPoly(from_terms(arity, std::vector<Monomial>(terms))) {}

BoolPoly BoolPoly::variable(unsigned arity, unsigned index) {
  if (index < 1 || index > arity)
    throw ArityMismatch("variable x" + std::to_string(index) +
                        " out of range for arity " + std::to_string(arity));
  return BoolPoly(arity, {Monomial{1} << (index - 1)});
}

BoolPoly BoolPoly::full_monomial(unsigned arity) {
  return BoolPoly(arity, {full_monomial_mask(arity)});
}

BoolPoly BoolPoly::from_terms(unsigned arity, std::vector<Monomial> terms) {
  check_arity(arity);
  for (Monomial m : terms)
    if (m & ~full_monomial_mask(arity))
      throw ArityMismatch("monomial uses a variable above arity " +
                          std::to_string(arity));
  std::sort(terms.begin(), terms.end());
  // Symmetric difference: an even multiplicity cancels.
  std::vector<Monomial> kept;
  kept.reserve(terms.size());
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) kept.push_back(terms[i]);
    i = j;
  }
  BoolPoly p(arity);
  p.terms_ = std::move(kept);
  return p;
}

bool BoolPoly::contains(Monomial m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m);
}

BoolPoly BoolPoly::with_arity(unsigned arity) const {
  if (arity < arity_)
    throw ArityMismatch("cannot narrow arity " + std::to_string(arity_) +
                        " to " + std::to_string(arity));
  BoolPoly p(arity);
  p.terms_ = terms_;
  return p;
}

bool BoolPoly::evaluate(std::uint32_t point) const {
  if (point & ~full_monomial_mask(arity_))
    throw ArityMismatch("evaluation point wider than arity " +
                        std::to_string(arity_));
  unsigned acc = 0;
  for (Monomial m : terms_) acc ^= ((m & point) == m);
  return acc & 1u;
}

BoolPoly operator+(const BoolPoly& p, const BoolPoly& q) {
  check_same_arity(p, q, "poly add");
  std::vector<Monomial> merged;
  merged.reserve(p.term_count() + q.term_count());
  std::set_symmetric_difference(p.terms().begin(), p.terms().end(),
                                q.terms().begin(), q.terms().end(),
                                std::back_inserter(merged));
  return BoolPoly::from_terms(p.arity(), std::move(merged));
}

BoolPoly operator*(const BoolPoly& p, const BoolPoly& q) {
  check_same_arity(p, q, "poly mul");
  if (p.is_zero() || q.is_zero()) return BoolPoly::zero(p.arity());
  // Small products stay in ANF; large ones go through the value view where
  // multiplication is a pointwise AND.
  if (p.term_count() * q.term_count() <= 64) {
    std::vector<Monomial> prods;
    prods.reserve(p.term_count() * q.term_count());
    for (Monomial a : p.terms())
      for (Monomial b : q.terms()) prods.push_back(a | b);
    return BoolPoly::from_terms(p.arity(), std::move(prods));
  }
  TruthTable t = to_truth_table(p);
  t &= to_truth_table(q);
  return from_truth_table(t);
}

BoolPoly substitute(const BoolPoly& p, std::span<const BoolPoly> subs,
                    unsigned out_arity) {
  if (subs.size() != p.arity())
    throw ArityMismatch("substitute: " + std::to_string(subs.size()) +
                        " replacements for arity " +
                        std::to_string(p.arity()));
  for (const BoolPoly& s : subs)
    if (s.arity() != out_arity)
      throw ArityMismatch("substitute: replacement arity " +
                          std::to_string(s.arity()) + " != " +
                          std::to_string(out_arity));
  std::vector<TruthTable> sub_tables;
  sub_tables.reserve(subs.size());
  for (const BoolPoly& s : subs) sub_tables.push_back(to_truth_table(s));

  const TruthTable source = to_truth_table(p);
  TruthTable result(out_arity);
  const std::uint32_t points = std::uint32_t{1} << out_arity;
  for (std::uint32_t w = 0; w < points; ++w) {
    std::uint32_t v = 0;
    for (std::size_t i = 0; i < sub_tables.size(); ++i)
      v |= std::uint32_t{sub_tables[i].test(w)} << i;
    if (source.test(v)) result.set(w, true);
  }
  return from_truth_table(result);
}

BoolPoly substitute(const BoolPoly& p, std::span<const BoolPoly> subs) {
  if (subs.empty())
    throw ArityMismatch("substitute: empty replacement list needs an explicit "
                        "output arity");
  return substitute(p, subs, subs[0].arity());
}

TruthTable to_truth_table(const BoolPoly& p) {
  TruthTable t(p.arity());
  for (Monomial m : p.terms()) t.set(m, true);
  kernels::mobius(t.words(), p.arity());
  return t;
}

BoolPoly from_truth_table(const TruthTable& t) {
  std::vector<std::uint64_t> words(t.words(), t.words() + t.word_count());
  kernels::mobius(words.data(), t.arity());
  std::vector<Monomial> terms;
  for (std::size_t w = 0; w < words.size(); ++w) {
    std::uint64_t bits = words[w];
    while (bits) {
      const unsigned b = std::countr_zero(bits);
      terms.push_back(static_cast<Monomial>(w * 64 + b));
      bits &= bits - 1;
    }
  }
  return BoolPoly::from_terms(t.arity(), std::move(terms));
}

Decomposition decompose(const BoolPoly& p, unsigned pivot) {
  if (pivot < 1 || pivot > p.arity())
    throw ArityMismatch("decompose: pivot " + std::to_string(pivot) +
                        " out of range for arity " +
                        std::to_string(p.arity()));
  const Monomial full = full_monomial_mask(p.arity());
  const Monomial pivot_bit = Monomial{1} << (pivot - 1);
  Decomposition d{false, BoolPoly(p.arity()), BoolPoly(p.arity())};
  std::vector<Monomial> cof, rem;
  for (Monomial m : p.terms()) {
    if (m == full) {
      d.full_coeff = true;
    } else if (m & pivot_bit) {
      cof.push_back(m & ~pivot_bit);
    } else {
      rem.push_back(m);
    }
  }
  d.cofactor = BoolPoly::from_terms(p.arity(), std::move(cof));
  d.remainder = BoolPoly::from_terms(p.arity(), std::move(rem));
  return d;
}

}  // namespace sylow
