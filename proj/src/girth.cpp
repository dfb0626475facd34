#include "sylow/girth.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace sylow {

bool commutes(const DiagonalBase& base, unsigned i, unsigned j) {
  if (i < 1 || i >= j || j > base.depth())
    throw std::out_of_range("commutes: need 1 <= i < j <= depth");
  const Tableau product = base.generator(j) * base.generator(i);
  return product.pow(2).is_identity();
}

bool has_commuting_pair(const DiagonalBase& base) {
  for (unsigned i = 1; i <= base.depth(); ++i)
    for (unsigned j = i + 1; j <= base.depth(); ++j)
      if (commutes(base, i, j)) return true;
  return false;
}

std::optional<StarWitness> condition_star(const DiagonalBase& base) {
  const unsigned n = base.depth();
  if (n < 3) throw DepthTooSmall("the commutation criterion needs depth >= 3");
  for (unsigned i = 2; i < n; ++i) {
    const bool alpha = !base.diagonal(i).parity_even();
    const BoolPoly d_i = base.diagonal(i);
    for (unsigned j = i + 1; j <= n; ++j) {
      const Decomposition split = decompose(base.diagonal(j), i);
      // Validation guarantees the full monomial is present.
      const BoolPoly lhs = split.cofactor * d_i.with_arity(j - 1);
      BoolPoly rhs(j - 1);
      if (alpha) {
        const Monomial full_over_i =
            full_monomial_mask(j - 1) & ~(Monomial{1} << (i - 1));
        rhs = BoolPoly::from_terms(j - 1, {full_over_i});
      }
      if (lhs == rhs)
        return StarWitness{i, j, alpha, split.cofactor, split.remainder};
    }
  }
  return std::nullopt;
}

namespace {

Tableau word_product(const DiagonalBase& base,
                     std::initializer_list<unsigned> word) {
  Tableau acc = Tableau::identity(base.depth());
  for (unsigned idx : word) acc = acc * base.generator(idx);
  return acc;
}

}  // namespace

bool six_cycle_relation(const DiagonalBase& base, unsigned i, unsigned j,
                        unsigned k) {
  if (!(1 <= i && i < j && j < k && k <= base.depth()))
    throw std::out_of_range("six_cycle_relation: need 1 <= i < j < k <= depth");
  return word_product(base, {k, j, i, k, i, j}).is_identity();
}

std::optional<std::vector<unsigned>> find_six_cycle(const DiagonalBase& base) {
  const unsigned n = base.depth();
  // Depth-first over cyclically reduced words in lexicographic order,
  // carrying the prefix product.
  std::vector<unsigned> word(6);
  std::vector<Tableau> prefix;
  prefix.reserve(7);
  prefix.push_back(Tableau::identity(n));
  std::optional<std::vector<unsigned>> found;

  auto descend = [&](auto&& self, unsigned pos) -> bool {
    for (unsigned g = 1; g <= n; ++g) {
      if (pos > 0 && word[pos - 1] == g) continue;     // reduced
      if (pos == 5 && word[0] == g) continue;          // cyclically reduced
      word[pos] = g;
      prefix.push_back(prefix.back() * base.generator(g));
      if (pos == 5) {
        if (prefix.back().is_identity()) {
          found = word;
          return true;
        }
      } else if (self(self, pos + 1)) {
        return true;
      }
      prefix.pop_back();
    }
    return false;
  };
  descend(descend, 0);
  return found;
}

GirthReport girth(const DiagonalBase& base) {
  const unsigned n = base.depth();
  if (n < 2) throw DepthTooSmall("girth is defined for depth >= 2");

  std::optional<std::pair<unsigned, unsigned>> commuting;
  for (unsigned i = 1; i <= n && !commuting; ++i)
    for (unsigned j = i + 1; j <= n; ++j)
      if (commutes(base, i, j)) {
        commuting = {i, j};
        break;
      }

  std::optional<StarWitness> star;
  if (n >= 3) {
    star = condition_star(base);
    if (star.has_value() != commuting.has_value())
      throw InternalInconsistency(
          "commutation criterion disagrees with the direct pair scan");
  }

  if (commuting) {
    const auto [i, j] = *commuting;
    return GirthReport{4, {i, j, i, j}, star};
  }

  if (n >= 3) {
    if (auto word = find_six_cycle(base))
      return GirthReport{6, std::move(*word), std::nullopt};
  }

  if (!word_product(base, {1, 2, 1, 2, 1, 2, 1, 2}).is_identity())
    throw InternalInconsistency(
        "(D_1 D_2)^4 is not the identity; girth above 8 is impossible");
  return GirthReport{8, {1, 2, 1, 2, 1, 2, 1, 2}, std::nullopt};
}

bool d1_six_cycle_free(const DiagonalBase& base) {
  const unsigned n = base.depth();
  if (n < 3) throw DepthTooSmall("the sweep needs depth >= 3");
  for (unsigned j = 2; j <= n; ++j)
    for (unsigned k = j + 1; k <= n; ++k)
      if (word_product(base, {k, j, 1, k, 1, j}).is_identity()) return false;
  return true;
}

bool verify_even_cycles(const DiagonalBase& base, unsigned max_depth) {
  const unsigned n = base.depth();
  std::unordered_map<std::vector<std::uint64_t>, unsigned, PackedKeyHash>
      distance;
  std::vector<Tableau> frontier{Tableau::identity(n)};
  distance.emplace(packed_key(frontier.front()), 0);

  std::vector<std::vector<Tableau>> layers{frontier};
  for (unsigned d = 0; d < max_depth; ++d) {
    std::vector<Tableau> next;
    for (const Tableau& u : layers[d]) {
      for (unsigned g = 1; g <= n; ++g) {
        Tableau v = u * base.generator(g);
        auto [it, inserted] = distance.emplace(packed_key(v), d + 1);
        if (inserted)
          next.push_back(std::move(v));
        else if (it->second == d)
          return false;  // same-layer edge closes an odd cycle
      }
    }
    layers.push_back(std::move(next));
  }
  // Edges among the outermost layer would close odd cycles as well.
  for (const Tableau& u : layers[max_depth])
    for (unsigned g = 1; g <= n; ++g) {
      const auto it = distance.find(packed_key(u * base.generator(g)));
      if (it != distance.end() && it->second == max_depth) return false;
    }
  return true;
}

namespace {

struct ChunkOutcome {
  std::map<int, std::uint64_t> counts;
  std::map<int, std::uint64_t> exemplar_index;
};

ChunkOutcome classify_range(unsigned n, std::uint64_t begin,
                            std::uint64_t end) {
  ChunkOutcome out;
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    const int g = girth(diagonal_base_at(n, idx)).girth;
    if (++out.counts[g] == 1) out.exemplar_index[g] = idx;
  }
  return out;
}

CensusResult classify_exhaustive(const CensusOptions& options) {
  if (options.exhaustive_guard > kMaxExhaustiveDepth)
    throw GuardViolation("exhaustive guard capped at depth " +
                         std::to_string(kMaxExhaustiveDepth));
  if (options.n > options.exhaustive_guard)
    throw GuardViolation("exhaustive census at depth " +
                         std::to_string(options.n) + " exceeds the guard (" +
                         std::to_string(options.exhaustive_guard) + ")");
  const std::uint64_t total = diagonal_base_count(options.n);
  unsigned jobs = options.jobs ? options.jobs
                               : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(
      std::min<std::uint64_t>(jobs, std::max<std::uint64_t>(total, 1)));

  std::vector<ChunkOutcome> outcomes(jobs);
  std::vector<std::thread> workers;
  const std::uint64_t chunk = (total + jobs - 1) / jobs;
  for (unsigned w = 0; w < jobs; ++w) {
    const std::uint64_t begin = w * chunk;
    const std::uint64_t end = std::min(total, begin + chunk);
    workers.emplace_back([&outcomes, w, n = options.n, begin, end] {
      outcomes[w] = classify_range(n, begin, end);
    });
  }
  for (auto& t : workers) t.join();

  CensusResult result;
  result.n = options.n;
  result.scope = CensusScope::Exhaustive;
  result.total = total;
  std::map<int, std::uint64_t> exemplar_index;
  for (const ChunkOutcome& o : outcomes) {
    for (const auto& [g, c] : o.counts) result.counts[g] += c;
    for (const auto& [g, idx] : o.exemplar_index) {
      const auto it = exemplar_index.find(g);
      if (it == exemplar_index.end() || idx < it->second)
        exemplar_index[g] = idx;
    }
  }
  for (const auto& [g, idx] : exemplar_index)
    result.exemplars.emplace(g, diagonal_base_at(options.n, idx));
  return result;
}

CensusResult classify_delta(const CensusOptions& options) {
  if (options.n < 3) throw DepthTooSmall("delta census needs depth >= 3");
  if (options.n > 12)
    throw GuardViolation("delta census capped at depth 12");
  CensusResult result;
  result.n = options.n;
  result.scope = CensusScope::DeltaOnly;
  result.total = std::uint64_t{1} << (options.n - 2);
  for (std::uint64_t bits = 0; bits < result.total; ++bits) {
    DiagonalBase base = delta_base(options.n, static_cast<std::uint32_t>(bits));
    const int g = girth(base).girth;
    if (++result.counts[g] == 1) result.exemplars.emplace(g, std::move(base));
  }
  return result;
}

CensusResult classify_sample(const CensusOptions& options) {
  if (options.n < 2) throw DepthTooSmall("sampling needs depth >= 2");
  if (options.n > 12)
    throw GuardViolation("sampled census capped at depth 12");
  CensusResult result;
  result.n = options.n;
  result.scope = CensusScope::Sample;
  result.total = options.sample_count;
  result.seed = options.seed;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t s = 0; s < options.sample_count; ++s) {
    DiagonalBase base = sample_diagonal(options.n, rng);
    const int g = girth(base).girth;
    if (++result.counts[g] == 1) result.exemplars.emplace(g, std::move(base));
  }
  return result;
}

}  // namespace

CensusResult classify(const CensusOptions& options) {
  switch (options.scope) {
    case CensusScope::Exhaustive:
      return classify_exhaustive(options);
    case CensusScope::DeltaOnly:
      return classify_delta(options);
    case CensusScope::Sample:
      return classify_sample(options);
  }
  throw Error("unknown census scope");
}

}  // namespace sylow
