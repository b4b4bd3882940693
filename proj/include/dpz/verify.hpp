// verify.hpp
// Table verification: reconstructs the families behind the appendix tables at
// a chosen characteristic, computes orders / histograms / class counts, and
// diffs them against the embedded expected rows.

#ifndef DPZ_VERIFY_HPP
#define DPZ_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dpz::verify {

struct RowResult {
    std::string name;
    std::string status;  // "match", "mismatch", "skipped", "erratum"
    std::string detail;
    long expected_order = 0;
    long computed_order = 0;
    std::vector<std::pair<std::string, long>> expected_counts;  // class counts from the table
    std::vector<std::pair<int, long>> computed_histogram;       // element orders found
    std::string witness;  // parameters and notes (human-readable)
};

struct Report {
    std::string table;
    uint32_t characteristic = 0;
    uint64_t seed = 0;
    std::vector<RowResult> rows;
    long elapsed_ms = 0;

    bool ok() const;  // no row has status "mismatch"
    std::string to_json() const;
    std::string summary() const;  // one line per row
};

// Internal consistency of the embedded Carter data: traces, minus pairs,
// order columns, and name resolution for every table (no field arithmetic).
Report verify_carter_consistency();

// which in {"dp2", "dp1", "dp4"}. deep additionally runs the exhaustive
// PGL_3(9) cross-check of the Fermat row (dp2, characteristic 3 only).
Report verify_table(const std::string& which, uint32_t p, uint64_t seed, bool deep);

}  // namespace dpz::verify

#endif
