#include "sylow/tableau.hpp"

#include <numeric>

#include "sylow/text.hpp"

namespace sylow {

LeafPermutation LeafPermutation::identity(unsigned depth) {
  LeafPermutation p;
  p.depth = depth;
  p.images.resize(std::size_t{1} << depth);
  std::iota(p.images.begin(), p.images.end(), 0u);
  return p;
}

bool LeafPermutation::is_identity() const {
  for (std::uint32_t v = 0; v < images.size(); ++v)
    if (images[v] != v) return false;
  return true;
}

LeafPermutation compose(const LeafPermutation& a, const LeafPermutation& b) {
  if (a.depth != b.depth)
    throw ArityMismatch("composing leaf permutations of different depth");
  LeafPermutation out;
  out.depth = a.depth;
  out.images.resize(a.images.size());
  for (std::size_t v = 0; v < a.images.size(); ++v)
    out.images[v] = b.images[a.images[v]];
  return out;
}

LeafPermutation invert(const LeafPermutation& p) {
  LeafPermutation out;
  out.depth = p.depth;
  out.images.resize(p.images.size());
  for (std::uint32_t v = 0; v < p.images.size(); ++v)
    out.images[p.images[v]] = v;
  return out;
}

Tableau::Tableau(std::vector<BoolPoly> coords) : coords_(std::move(coords)) {
  for (std::size_t i = 0; i < coords_.size(); ++i)
    if (coords_[i].arity() != i)
      throw ArityMismatch("tableau coordinate " + std::to_string(i + 1) +
                          " has arity " + std::to_string(coords_[i].arity()) +
                          ", expected " + std::to_string(i));
  tables_.reserve(coords_.size());
  for (const BoolPoly& c : coords_) tables_.push_back(to_truth_table(c));
}

Tableau Tableau::identity(unsigned depth) {
  std::vector<BoolPoly> coords;
  coords.reserve(depth);
  for (unsigned i = 0; i < depth; ++i) coords.emplace_back(i);
  return Tableau(std::move(coords));
}

const BoolPoly& Tableau::coordinate(unsigned i) const {
  if (i < 1 || i > depth())
    throw std::out_of_range("coordinate index " + std::to_string(i) +
                            " outside 1.." + std::to_string(depth()));
  return coords_[i - 1];
}

const TruthTable& Tableau::coordinate_table(unsigned i) const {
  if (i < 1 || i > depth())
    throw std::out_of_range("coordinate index " + std::to_string(i) +
                            " outside 1.." + std::to_string(depth()));
  return tables_[i - 1];
}

Tableau Tableau::prefix(unsigned i) const {
  if (i < 1 || i > depth())
    throw std::out_of_range("prefix length " + std::to_string(i) +
                            " outside 1.." + std::to_string(depth()));
  return Tableau(std::vector<BoolPoly>(coords_.begin(), coords_.begin() + i));
}

bool Tableau::is_identity() const {
  for (const BoolPoly& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

Tableau operator*(const Tableau& f, const Tableau& g) {
  if (f.depth() != g.depth())
    throw ArityMismatch("multiplying tableaux of depths " +
                        std::to_string(f.depth()) + " and " +
                        std::to_string(g.depth()));
  const unsigned n = f.depth();
  Tableau out;
  out.coords_.reserve(n);
  out.tables_.reserve(n);

  // Nothing above the last nonzero coordinate of g needs the shift map.
  unsigned g_top = 0;
  for (unsigned i = 0; i < n; ++i)
    if (!g.coords_[i].is_zero()) g_top = i + 1;

  // shift[v] = image of point v under the prefix of f seen so far; grows one
  // level per coordinate.
  std::vector<std::uint32_t> shift(1, 0);
  for (unsigned i = 0; i < n; ++i) {
    const TruthTable& ft = f.tables_[i];
    if (g.coords_[i].is_zero()) {
      // (fg)_i = f_i when g contributes nothing on this coordinate.
      out.coords_.push_back(f.coords_[i]);
      out.tables_.push_back(ft);
    } else {
      const TruthTable& gt = g.tables_[i];
      TruthTable prod(i);
      const std::uint32_t points = std::uint32_t{1} << i;
      for (std::uint32_t v = 0; v < points; ++v)
        prod.set(v, ft.test(v) ^ gt.test(shift[v]));
      out.coords_.push_back(from_truth_table(prod));
      out.tables_.push_back(std::move(prod));
    }
    if (i + 1 < g_top) {
      // Extend the leaf map of f's prefix by one level.
      const std::uint32_t half = std::uint32_t{1} << i;
      std::vector<std::uint32_t> next(std::size_t{2} << i);
      for (std::uint32_t v = 0; v < half; ++v) {
        const std::uint32_t low = shift[v];
        const std::uint32_t flip = ft.test(v) ? half : 0;
        next[v] = low | flip;
        next[v | half] = low | (flip ^ half);
      }
      shift = std::move(next);
    }
  }
  return out;
}

Tableau Tableau::inverse() const {
  const unsigned n = depth();
  std::vector<BoolPoly> inv;
  inv.reserve(n);
  // Arguments of the inverse: y_i = x_i + (f^-1)_i, built alongside.
  std::vector<BoolPoly> shifted_args;
  for (unsigned i = 0; i < n; ++i) {
    std::vector<BoolPoly> subs;
    subs.reserve(i);
    for (unsigned j = 0; j < i; ++j) subs.push_back(shifted_args[j].with_arity(i));
    BoolPoly g = substitute(coords_[i], subs, i);
    if (i + 1 < n)
      shifted_args.push_back(BoolPoly::variable(i + 1, i + 1) +
                             g.with_arity(i + 1));
    inv.push_back(std::move(g));
  }
  return Tableau(std::move(inv));
}

Tableau Tableau::pow(std::uint64_t k) const {
  Tableau acc = identity(depth());
  for (std::uint64_t i = 0; i < k; ++i) acc = acc * *this;
  return acc;
}

LeafPermutation leaf_permutation(const Tableau& f) {
  const unsigned n = f.depth();
  LeafPermutation p;
  p.depth = n;
  p.images.resize(std::size_t{1} << n);
  for (std::uint32_t v = 0; v < p.images.size(); ++v) {
    std::uint32_t image = 0;
    for (unsigned i = 0; i < n; ++i) {
      const std::uint32_t low = v & ((std::uint32_t{1} << i) - 1);
      const std::uint32_t bit = (v >> i) & 1u;
      image |= (bit ^ f.coordinate_table(i + 1).test(low)) << i;
    }
    p.images[v] = image;
  }
  return p;
}

Tableau tableau_from_leaf_permutation(const LeafPermutation& p) {
  const unsigned n = p.depth;
  std::vector<BoolPoly> coords;
  coords.reserve(n);
  for (unsigned i = 0; i < n; ++i) {
    TruthTable t(i);
    const std::uint32_t points = std::uint32_t{1} << i;
    for (std::uint32_t v = 0; v < points; ++v)
      t.set(v, (p.images[v] >> i) & 1u);
    coords.push_back(from_truth_table(t));
  }
  Tableau f(std::move(coords));
  if (!(leaf_permutation(f) == p))
    throw InternalInconsistency(
        "permutation does not respect the tree level structure");
  return f;
}

std::vector<std::uint64_t> packed_key(const Tableau& f) {
  const unsigned n = f.depth();
  const std::size_t bits = (std::size_t{1} << n) - 1;
  std::vector<std::uint64_t> key((bits + 63) / 64, 0);
  std::size_t offset = 0;
  for (unsigned i = 1; i <= n; ++i) {
    const TruthTable& t = f.coordinate_table(i);
    const std::uint32_t points = std::uint32_t{1} << (i - 1);
    for (std::uint32_t v = 0; v < points; ++v) {
      if (t.test(v)) {
        const std::size_t pos = offset + v;
        key[pos >> 6] |= std::uint64_t{1} << (pos & 63);
      }
    }
    offset += points;
  }
  return key;
}

std::uint64_t packed_index(const Tableau& f) {
  if (f.depth() > 6)
    throw GuardViolation("packed index needs depth <= 6 to fit one word");
  return packed_key(f)[0];
}

Tableau tableau_at(unsigned depth, std::uint64_t packed_bits) {
  if (depth > 6)
    throw GuardViolation("packed index needs depth <= 6 to fit one word");
  std::vector<BoolPoly> coords;
  coords.reserve(depth);
  std::size_t offset = 0;
  for (unsigned i = 1; i <= depth; ++i) {
    TruthTable t(i - 1);
    const std::uint32_t points = std::uint32_t{1} << (i - 1);
    for (std::uint32_t p = 0; p < points; ++p)
      t.set(p, (packed_bits >> (offset + p)) & 1u);
    coords.push_back(from_truth_table(t));
    offset += points;
  }
  return Tableau(std::move(coords));
}

std::size_t PackedKeyHash::operator()(
    const std::vector<std::uint64_t>& key) const {
  // FNV-1a over the words.
  std::uint64_t h = 0xcbf29ce484222325ull;
  for (std::uint64_t w : key) {
    h ^= w;
    h *= 0x100000001b3ull;
  }
  return static_cast<std::size_t>(h);
}

std::string to_string(const Tableau& f) {
  std::string out = "[";
  for (unsigned i = 1; i <= f.depth(); ++i) {
    if (i > 1) out += "; ";
    out += to_string(f.coordinate(i));
  }
  out += "]";
  return out;
}

}  // namespace sylow
