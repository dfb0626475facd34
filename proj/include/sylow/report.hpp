#pragma once

#include <filesystem>
#include <string>

#include "sylow/graph.hpp"

// Report serialization.  The JSON girth report is a stable external format:
//   { "schema": 1, "n": ..., "base": [poly strings], "girth": ...,
//     "witness": [indices], "star": {"i","j","alpha"} | null,
//     "c_D": ..., "profile": [ints] }
// plus an optional "timings" object (milliseconds) when requested; reports
// without timings are byte-identical across runs.

namespace sylow {

struct BaseReport {
  DiagonalBase base;
  GirthReport girth;
  std::uint64_t pair_count = 0;
  std::vector<unsigned> profile;
  double girth_ms = 0.0;
};

BaseReport analyze_base(const DiagonalBase& base);

std::string to_json(const BaseReport& report, bool with_timings = false);
std::string to_text(const BaseReport& report);

std::string to_json(const CensusResult& census);
std::string to_text(const CensusResult& census);

// Atomic JSON writes (temp file + rename).
void export_json(const BaseReport& report, const std::filesystem::path& path,
                 bool with_timings = false);
void export_json(const CensusResult& census,
                 const std::filesystem::path& path);

}  // namespace sylow
