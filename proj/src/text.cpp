#include "sylow/text.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

namespace sylow {

std::string to_string(Monomial m) {
  if (m == 0) return "1";
  std::string out;
  for (unsigned i = 0; m; ++i, m >>= 1) {
    if (!(m & 1)) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += std::to_string(i + 1);
  }
  return out;
}

namespace {

// Degree descending, ties by lexicographic order of the variable lists.
bool term_before(Monomial a, Monomial b) {
  const int da = std::popcount(a), db = std::popcount(b);
  if (da != db) return da > db;
  while (a && b) {
    const unsigned la = std::countr_zero(a), lb = std::countr_zero(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return false;
}

}  // namespace

std::string to_string(const BoolPoly& p) {
  if (p.is_zero()) return "0";
  std::vector<Monomial> ordered(p.terms());
  std::sort(ordered.begin(), ordered.end(), term_before);
  std::string out;
  for (Monomial m : ordered) {
    if (!out.empty()) out += '+';
    out += to_string(m);
  }
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& what, std::size_t line) {
  throw ParseError(what, line);
}

}  // namespace

BoolPoly parse_poly(std::string_view text, unsigned arity, std::size_t line) {
  std::string compact;
  compact.reserve(text.size());
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) compact += c;
  if (compact.empty()) fail("empty polynomial", line);

  std::vector<Monomial> terms;
  std::size_t pos = 0;
  while (pos <= compact.size()) {
    const std::size_t plus = compact.find('+', pos);
    const std::string_view term =
        std::string_view(compact).substr(pos, plus == std::string::npos
                                                  ? std::string::npos
                                                  : plus - pos);
    if (term.empty()) fail("empty term in polynomial", line);
    if (term == "0") {
      // contributes nothing
    } else if (term == "1") {
      terms.push_back(0);
    } else {
      Monomial mask = 0;
      std::size_t i = 0;
      while (i < term.size()) {
        if (term[i] != 'x') fail("expected variable in term '" +
                                 std::string(term) + "'", line);
        ++i;
        std::size_t start = i;
        while (i < term.size() &&
               std::isdigit(static_cast<unsigned char>(term[i])))
          ++i;
        if (i == start) fail("missing variable index after 'x'", line);
        const unsigned long index = std::stoul(std::string(term.substr(start, i - start)));
        if (index < 1 || index > arity)
          fail("variable x" + std::to_string(index) +
               " out of range for arity " + std::to_string(arity), line);
        mask |= Monomial{1} << (index - 1);
        if (i < term.size()) {
          if (term[i] != '*') fail("expected '*' between variables", line);
          ++i;
          if (i == term.size()) fail("dangling '*' in term", line);
        }
      }
      terms.push_back(mask);
    }
    if (plus == std::string::npos) break;
    pos = plus + 1;
    if (pos == compact.size()) fail("dangling '+' in polynomial", line);
  }
  return BoolPoly::from_terms(arity, std::move(terms));
}

}  // namespace sylow
