#include "sylow/report.hpp"

#include <chrono>
#include <sstream>

#include "json.hpp"
#include "sylow/text.hpp"

namespace sylow {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json base_polys(const DiagonalBase& base) {
  ordered_json arr = ordered_json::array();
  for (unsigned i = 1; i <= base.depth(); ++i)
    arr.push_back(to_string(base.diagonal(i)));
  return arr;
}

const char* scope_name(CensusScope scope) {
  switch (scope) {
    case CensusScope::Exhaustive:
      return "exhaustive";
    case CensusScope::DeltaOnly:
      return "delta";
    case CensusScope::Sample:
      return "sample";
  }
  return "?";
}

}  // namespace

BaseReport analyze_base(const DiagonalBase& base) {
  BaseReport report{base, {}, 0, {}, 0.0};
  const auto start = std::chrono::steady_clock::now();
  report.girth = girth(base);
  report.girth_ms =
      std::chrono::duration<double, std::milli>(
          std::chrono::steady_clock::now() - start)
          .count();
  const DeltaInvariant inv = commuting_degree_profile(base);
  report.pair_count = inv.pair_count;
  report.profile = inv.profile;
  return report;
}

std::string to_json(const BaseReport& report, bool with_timings) {
  ordered_json j;
  j["schema"] = 1;
  j["n"] = report.base.depth();
  j["base"] = base_polys(report.base);
  j["girth"] = report.girth.girth;
  j["witness"] = report.girth.witness;
  if (report.girth.star) {
    j["star"] = ordered_json{{"i", report.girth.star->i},
                             {"j", report.girth.star->j},
                             {"alpha", report.girth.star->alpha ? 1 : 0}};
  } else {
    j["star"] = nullptr;
  }
  j["c_D"] = report.pair_count;
  j["profile"] = report.profile;
  if (with_timings) j["timings"] = ordered_json{{"girth_ms", report.girth_ms}};
  return j.dump(2) + "\n";
}

std::string to_text(const BaseReport& report) {
  std::ostringstream out;
  out << "n: " << report.base.depth() << "\n";
  for (unsigned i = 1; i <= report.base.depth(); ++i)
    out << "D" << i << ": " << to_string(report.base.diagonal(i)) << "\n";
  out << "girth: " << report.girth.girth << "\n";
  out << "witness:";
  for (unsigned idx : report.girth.witness) out << " " << idx;
  out << "\n";
  if (report.girth.star)
    out << "star: i=" << report.girth.star->i << " j=" << report.girth.star->j
        << " alpha=" << (report.girth.star->alpha ? 1 : 0)
        << " g=" << to_string(report.girth.star->g)
        << " h=" << to_string(report.girth.star->h) << "\n";
  else
    out << "star: none\n";
  out << "c_D: " << report.pair_count << "\n";
  out << "profile:";
  for (unsigned t : report.profile) out << " " << t;
  out << "\n";
  return out.str();
}

std::string to_json(const CensusResult& census) {
  ordered_json j;
  j["schema"] = 1;
  j["kind"] = "census";
  j["n"] = census.n;
  j["scope"] = scope_name(census.scope);
  j["total"] = census.total;
  if (census.scope == CensusScope::Sample) j["seed"] = census.seed;
  ordered_json counts;
  for (const auto& [g, c] : census.counts) counts[std::to_string(g)] = c;
  j["counts"] = std::move(counts);
  ordered_json exemplars;
  for (const auto& [g, base] : census.exemplars)
    exemplars[std::to_string(g)] = base_polys(base);
  j["exemplars"] = std::move(exemplars);
  return j.dump(2) + "\n";
}

std::string to_text(const CensusResult& census) {
  std::ostringstream out;
  out << "n: " << census.n << "\n";
  out << "scope: " << scope_name(census.scope) << "\n";
  out << "total: " << census.total << "\n";
  for (const auto& [g, c] : census.counts) {
    out << "girth " << g << ": " << c;
    const auto it = census.exemplars.find(g);
    if (it != census.exemplars.end()) {
      out << "  e.g.";
      for (unsigned i = 1; i <= it->second.depth(); ++i)
        out << (i == 1 ? " [" : "; ") << to_string(it->second.diagonal(i));
      out << "]";
    }
    out << "\n";
  }
  return out.str();
}

void export_json(const BaseReport& report, const std::filesystem::path& path,
                 bool with_timings) {
  write_file_atomic(path, to_json(report, with_timings));
}

void export_json(const CensusResult& census,
                 const std::filesystem::path& path) {
  write_file_atomic(path, to_json(census));
}

}  // namespace sylow
