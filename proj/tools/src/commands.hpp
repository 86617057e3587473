#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "schurlab/bounds.hpp"
#include "schurlab/catalog.hpp"
#include "schurlab/multiplier.hpp"

namespace schurlab::cli {

enum ExitCode : int { kOk = 0, kInputError = 2, kResourceLimit = 3, kTheoremFailure = 4 };

inline constexpr const char* kSchemaVersion = "1";

std::string fnv1a64(const std::string& bytes);

nlohmann::ordered_json to_json(const Subspace& s);
nlohmann::ordered_json to_json(const MultiplierReport& r);
nlohmann::ordered_json to_json(const TheoremReport& r);
nlohmann::ordered_json to_json(const SweepReport& r);

/// Statement checks over a list of catalog entries. Entries outside a
/// statement's hypotheses are counted as skipped.
struct TheoremRun {
    std::string id;
    std::vector<TheoremReport> reports;
    std::vector<TheoremReport> informational;
    std::size_t skipped = 0;
    bool holds = true;
};

inline const std::vector<std::string> kTheoremIds = {"2.1", "2.2", "2.5", "2.6", "2.9", "3.7"};

/// Throws InputError for an unknown id.
TheoremRun run_theorem(const std::string& id, const std::vector<CatalogEntry>& entries);
nlohmann::ordered_json to_json(const TheoremRun& run);

/// Full command line entry point; returns the process exit code.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace schurlab::cli
