#pragma once
// Named algebras with expected analysis results, read from a tab-separated
// manifest so that entries can be added without rebuilding.
//
// Manifest columns: name, constructor, cap, checks, provenance.
// Constructors: field(p), trunc(p,n), product(A,B), matrix(p,n), path_a2(p),
// lrsz(p), tri(A,t), opposite(A), corner(A) and file(path).
// Checks are separated by ';', each kind(args)=expected or a bare kind(args).

#include <filesystem>
#include <string>
#include <vector>

#include "auslab/algebra.hpp"

namespace auslab {

AlgebraPtr build_algebra(const std::string& expr, const std::filesystem::path& base_dir = {});

struct CorpusEntry {
    std::string name;
    std::string constructor;
    std::size_t cap = 6;
    std::vector<std::string> checks;
    std::string provenance;
};

std::vector<CorpusEntry> parse_manifest(const std::string& text);
std::vector<CorpusEntry> load_manifest(const std::filesystem::path& path);
std::filesystem::path default_manifest();

struct CheckOutcome {
    std::string check;
    bool pass = false;
    std::string detail;
};

struct EntryResult {
    std::string name;
    std::vector<CheckOutcome> checks;
    std::string error;  // construction or evaluation failure
    double seconds = 0;
    bool pass() const;
};

EntryResult run_entry(const CorpusEntry& e, const std::filesystem::path& base_dir, std::uint64_t seed = 0xA05);

/// Entries whose name matches the glob, run on up to `jobs` threads; results
/// sorted by name.
std::vector<EntryResult> run_corpus(const std::vector<CorpusEntry>& entries, const std::string& filter,
                                    std::size_t jobs, const std::filesystem::path& base_dir,
                                    std::uint64_t seed = 0xA05);

/// Deterministic summary table (no timings).
std::string format_results(const std::vector<EntryResult>& results);

}  // namespace auslab
