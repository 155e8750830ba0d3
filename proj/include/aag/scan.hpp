#pragma once

// Grid scans and verification runs behind `aag scan` / `aag verify`.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "aag/classify.hpp"

namespace aag {

struct Range {
    std::int64_t lo = 0, hi = -1;  // inclusive
    bool empty() const { return hi < lo; }
    std::int64_t size() const { return empty() ? 0 : hi - lo + 1; }
};

// "lo:hi", "lo..hi" or a single value
std::optional<Range> parse_range(const std::string& s);

enum class ScanFilter {
    None,        // classify whatever validates (hypothesis failures become OracleOnly)
    Hypothesis,  // r'_mu >= h or rho_mu = 0
    Pivot,       // r'_mu >= h only
};

struct ScanSpec {
    Range a, d, c, k, h;
    ScanFilter filter = ScanFilter::Hypothesis;
    bool emit_all = false;  // one record per analyzed tuple, not only almost symmetric ones
    bool oracle_verify = false;
    bool fast_only = false;
    bool normalize = false;
    bool explain_skips = false;
    unsigned workers = 1;
    oracle::Limits limits{};

    std::int64_t total() const;
};

struct ScanRecord {
    Int a, d, c, h;
    int k = 0;
    Classification cls;
    std::optional<bool> oracle_agrees;
    std::string error;  // per-tuple failure recorded in-band
};

struct ScanResult {
    std::int64_t total = 0, analyzed = 0;
    std::vector<ScanRecord> records;  // lexicographic in (a, d, c, k, h)
    std::map<std::string, std::int64_t> skipped;  // reason -> count
    std::vector<std::string> skip_details;        // only with explain_skips
};

ScanResult run_scan(const ScanSpec& spec);

std::string csv_header();
std::string to_csv(const ScanRecord& r);
std::string to_json_line(const ScanRecord& r);

// ---------------------------------------------------------------------------

struct VerifySpec {
    Range a, d, c, k, h;
    // 0 = every tuple of the box; otherwise this many tuples drawn uniformly
    // (seeded) from the box before validity filtering
    std::int64_t sample = 0;
    std::uint64_t seed = 1;
    bool check_grobner = true;
    bool invert_order = false;  // harness self-test: must produce mismatches
    unsigned workers = 1;
    oracle::Limits limits{};
};

struct VerifyReport {
    std::int64_t visited = 0, invalid = 0, hypothesis_failed = 0, checked = 0;
    std::int64_t almost_symmetric = 0, symmetric = 0;
    // informational only: almost symmetric tuples where 2g != F + t
    std::int64_t genus_identity_off = 0;
    std::map<std::string, std::int64_t> mismatches;  // check name -> count, only nonzero entries
    std::map<std::string, std::int64_t> families;    // family id -> count (full path)
    std::map<std::string, std::string> first_failure;
    std::int64_t total_mismatches() const;
};

// every named check run on each valid, hypothesis-satisfying tuple
const std::vector<std::string>& verify_check_names();

VerifyReport run_verify(const VerifySpec& spec);

}  // namespace aag
