#include "sylow/bases.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "sylow/text.hpp"

namespace sylow {

namespace {

Tableau generator_tableau(unsigned depth, unsigned index,
                          const BoolPoly& coordinate) {
  std::vector<BoolPoly> coords;
  coords.reserve(depth);
  for (unsigned i = 0; i < depth; ++i)
    coords.push_back(i + 1 == index ? coordinate : BoolPoly(i));
  return Tableau(std::move(coords));
}

bool pair_commutes(const Tableau& a, const Tableau& b) {
  return (b * a).pow(2).is_identity();
}

bool any_pair_commutes(const DiagonalBase& base) {
  for (unsigned i = 1; i <= base.depth(); ++i)
    for (unsigned j = i + 1; j <= base.depth(); ++j)
      if (pair_commutes(base.generator(i), base.generator(j))) return true;
  return false;
}

}  // namespace

DiagonalBase::DiagonalBase(unsigned depth, std::vector<BoolPoly> diagonal)
    : depth_(depth), diagonal_(std::move(diagonal)) {
  if (diagonal_.size() != depth_)
    throw ValidationError(ValidationError::Kind::WrongCoordinateCount, 0,
                          "expected " + std::to_string(depth_) +
                              " coordinates, got " +
                              std::to_string(diagonal_.size()));
  if (depth_ == 0)
    throw ValidationError(ValidationError::Kind::WrongCoordinateCount, 0,
                          "a diagonal base needs depth >= 1");
  for (unsigned i = 0; i < depth_; ++i)
    if (diagonal_[i].arity() != i)
      throw ValidationError(
          ValidationError::Kind::CoordinateArityMismatch, i + 1,
          "coordinate " + std::to_string(i + 1) + " has arity " +
              std::to_string(diagonal_[i].arity()) + ", expected " +
              std::to_string(i));
  if (!diagonal_[0].is_one())
    throw ValidationError(ValidationError::Kind::FirstCoordinateNotOne, 1,
                          "first coordinate must be the constant 1");
  for (unsigned i = 1; i < depth_; ++i)
    if (!diagonal_[i].contains_full())
      throw ValidationError(
          ValidationError::Kind::MissingFullMonomial, i + 1,
          "coordinate " + std::to_string(i + 1) +
              " lacks the full monomial " +
              to_string(BoolPoly::full_monomial(i)));
  generators_.reserve(depth_);
  for (unsigned i = 0; i < depth_; ++i)
    generators_.push_back(generator_tableau(depth_, i + 1, diagonal_[i]));
}

const BoolPoly& DiagonalBase::diagonal(unsigned i) const {
  if (i < 1 || i > depth_)
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " outside 1.." + std::to_string(depth_));
  return diagonal_[i - 1];
}

const Tableau& DiagonalBase::generator(unsigned i) const {
  if (i < 1 || i > depth_)
    throw std::out_of_range("generator index " + std::to_string(i) +
                            " outside 1.." + std::to_string(depth_));
  return generators_[i - 1];
}

std::vector<unsigned> even_monomial_indices(const DiagonalBase& base) {
  std::vector<unsigned> out;
  for (unsigned i = 1; i <= base.depth(); ++i)
    if (base.diagonal(i).parity_even()) out.push_back(i);
  return out;
}

std::uint64_t diagonal_base_count(unsigned n) {
  if (n < 2) throw DepthTooSmall("enumeration needs depth >= 2");
  unsigned bits = 0;
  for (unsigned i = 2; i <= n; ++i) bits += (1u << (i - 1)) - 1;
  if (bits >= 64)
    throw GuardViolation("diagonal base count at depth " + std::to_string(n) +
                         " overflows 64 bits");
  return std::uint64_t{1} << bits;
}

DiagonalBase diagonal_base_at(unsigned n, std::uint64_t index) {
  const std::uint64_t total = diagonal_base_count(n);
  if (index >= total)
    throw std::out_of_range("base index " + std::to_string(index) +
                            " outside 0.." + std::to_string(total - 1));
  // Peel digits from the least significant (coordinate n) upward.
  std::vector<BoolPoly> coords(n, BoolPoly(0));
  coords[0] = BoolPoly::one(0);
  for (unsigned i = n; i >= 2; --i) {
    const unsigned arity = i - 1;
    const std::uint64_t radix = std::uint64_t{1} << ((1u << arity) - 1);
    const std::uint64_t subset = index % radix;
    index /= radix;
    std::vector<Monomial> terms{full_monomial_mask(arity)};
    for (unsigned t = 0; t < (1u << arity) - 1; ++t)
      if ((subset >> t) & 1u) terms.push_back(t);
    coords[i - 1] = BoolPoly::from_terms(arity, std::move(terms));
  }
  return DiagonalBase(n, std::move(coords));
}

std::vector<DiagonalBase> enumerate_diagonal(unsigned n, unsigned guard) {
  if (guard > kMaxExhaustiveDepth)
    throw GuardViolation("exhaustive guard capped at depth " +
                         std::to_string(kMaxExhaustiveDepth));
  if (n > guard)
    throw GuardViolation("exhaustive enumeration at depth " +
                         std::to_string(n) + " exceeds the guard (" +
                         std::to_string(guard) + ")");
  const std::uint64_t total = diagonal_base_count(n);
  std::vector<DiagonalBase> out;
  out.reserve(total);
  for (std::uint64_t idx = 0; idx < total; ++idx)
    out.push_back(diagonal_base_at(n, idx));
  return out;
}

DiagonalBase sample_diagonal(unsigned n, std::mt19937_64& rng) {
  if (n < 2) throw DepthTooSmall("sampling needs depth >= 2");
  std::vector<BoolPoly> coords;
  coords.reserve(n);
  coords.push_back(BoolPoly::one(0));
  for (unsigned i = 2; i <= n; ++i) {
    const unsigned arity = i - 1;
    std::vector<Monomial> terms{full_monomial_mask(arity)};
    // Draw one word of randomness per 64 candidate monomials.
    const unsigned candidates = (1u << arity) - 1;
    for (unsigned t = 0; t < candidates; t += 64) {
      std::uint64_t word = rng();
      const unsigned take = std::min(64u, candidates - t);
      for (unsigned b = 0; b < take; ++b)
        if ((word >> b) & 1u) terms.push_back(t + b);
    }
    coords.push_back(BoolPoly::from_terms(arity, std::move(terms)));
  }
  return DiagonalBase(n, std::move(coords));
}

CharacteristicVector CharacteristicVector::parse(unsigned depth,
                                                 std::string_view text) {
  if (depth < 3) throw DepthTooSmall("delta bases need depth >= 3");
  if (text.size() != depth - 2)
    throw ParseError("characteristic vector for depth " +
                     std::to_string(depth) + " needs " +
                     std::to_string(depth - 2) + " bits, got '" +
                     std::string(text) + "'");
  CharacteristicVector a;
  a.depth = depth;
  for (char c : text) {
    if (c != '0' && c != '1')
      throw ParseError("characteristic vector must be over {0,1}, got '" +
                       std::string(text) + "'");
    a.bits.push_back(c == '1');
  }
  return a;
}

std::string CharacteristicVector::to_string() const {
  std::string out;
  for (std::uint8_t b : bits) out += b ? '1' : '0';
  return out;
}

DiagonalBase delta_base(const CharacteristicVector& a) {
  if (a.depth < 3) throw DepthTooSmall("delta bases need depth >= 3");
  if (a.bits.size() != a.depth - 2)
    throw ParseError("characteristic vector length " +
                     std::to_string(a.bits.size()) + " != depth-2");
  std::vector<BoolPoly> coords;
  coords.reserve(a.depth);
  coords.push_back(BoolPoly::one(0));
  for (unsigned i = 2; i < a.depth; ++i) {
    std::vector<Monomial> terms{full_monomial_mask(i - 1)};
    if (a.bits[i - 2]) terms.push_back(0);
    coords.push_back(BoolPoly::from_terms(i - 1, std::move(terms)));
  }
  coords.push_back(BoolPoly::full_monomial(a.depth - 1));
  return DiagonalBase(a.depth, std::move(coords));
}

DiagonalBase delta_base(unsigned n, std::uint32_t vector_bits) {
  CharacteristicVector a;
  a.depth = n;
  if (n < 3) throw DepthTooSmall("delta bases need depth >= 3");
  for (unsigned t = 0; t < n - 2; ++t)
    a.bits.push_back((vector_bits >> (n - 3 - t)) & 1u);
  return delta_base(a);
}

DiagonalBase full_monomial_base(unsigned n) {
  std::vector<BoolPoly> coords;
  coords.reserve(n);
  coords.push_back(BoolPoly::one(0));
  for (unsigned i = 2; i <= n; ++i)
    coords.push_back(BoolPoly::full_monomial(i - 1));
  return DiagonalBase(n, std::move(coords));
}

DiagonalBase base_s() {
  const char* rows[] = {
      "1",
      "x1+1",
      "x1*x2+x2",
      "x1*x2*x3+x2*x3+x1+1",
      "x1*x2*x3*x4+x2*x3+x3*x4+x2+x4",
  };
  std::vector<BoolPoly> coords;
  for (unsigned i = 0; i < 5; ++i) coords.push_back(parse_poly(rows[i], i));
  return DiagonalBase(5, std::move(coords));
}

DiagonalBase extend_no4cycle(const DiagonalBase& base) {
  if (any_pair_commutes(base))
    throw PreconditionViolated(
        "extension requires a base with no commuting generator pair");
  const unsigned n = base.depth();
  std::vector<BoolPoly> coords;
  coords.reserve(n + 1);
  for (unsigned i = 1; i <= n; ++i) coords.push_back(base.diagonal(i));
  std::vector<Monomial> terms{full_monomial_mask(n)};
  for (unsigned e : even_monomial_indices(base))
    terms.push_back(Monomial{1} << (e - 1));
  coords.push_back(BoolPoly::from_terms(n, std::move(terms)));
  DiagonalBase extended(n + 1, std::move(coords));
  if (any_pair_commutes(extended))
    throw InternalInconsistency(
        "extension of a commuting-pair-free base grew a commuting pair");
  return extended;
}

DiagonalBase read_base(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  if (!std::getline(in, line)) throw ParseError("empty base file", 1);
  ++line_no;
  std::string compact;
  for (char c : line)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.rfind("n=", 0) != 0)
    throw ParseError("expected 'n=<depth>'", line_no);
  unsigned depth = 0;
  try {
    depth = static_cast<unsigned>(std::stoul(compact.substr(2)));
  } catch (const std::exception&) {
    throw ParseError("bad depth '" + compact.substr(2) + "'", line_no);
  }
  if (depth < 1 || depth > kMaxArity)
    throw ParseError("depth " + std::to_string(depth) + " out of range",
                     line_no);

  std::vector<BoolPoly> coords;
  coords.reserve(depth);
  for (unsigned i = 1; i <= depth; ++i) {
    if (!std::getline(in, line))
      throw ParseError("missing line for generator " + std::to_string(i),
                       line_no + 1);
    ++line_no;
    const std::size_t colon = line.find(':');
    if (colon == std::string::npos)
      throw ParseError("expected '<index>: <poly>'", line_no);
    unsigned idx = 0;
    try {
      idx = static_cast<unsigned>(std::stoul(line.substr(0, colon)));
    } catch (const std::exception&) {
      throw ParseError("bad generator index", line_no);
    }
    if (idx != i)
      throw ParseError("generator lines must run 1.." + std::to_string(depth) +
                           " in order; expected " + std::to_string(i),
                       line_no);
    coords.push_back(parse_poly(line.substr(colon + 1), i - 1, line_no));
  }
  return DiagonalBase(depth, std::move(coords));
}

DiagonalBase read_base_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open base file " + path.string());
  return read_base(in);
}

std::string format_base(const DiagonalBase& base) {
  std::ostringstream out;
  out << "n=" << base.depth() << "\n";
  for (unsigned i = 1; i <= base.depth(); ++i)
    out << i << ": " << to_string(base.diagonal(i)) << "\n";
  return out.str();
}

void write_base_file(const DiagonalBase& base,
                     const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write base file " + path.string());
  out << format_base(base);
  if (!out) throw Error("failed writing base file " + path.string());
}

}  // namespace sylow
