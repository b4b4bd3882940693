// tables.hpp
// Expected data transcribed from the appendix tables: the W(E_7) Jordan-form
// dictionary, the automorphism tables for degrees 4, 3, 2, 1, and the wild
// family lists. Counts are stored verbatim; one degree-1 row carries an
// erratum flag (see the verification notes).

#ifndef DPZ_TABLES_HPP
#define DPZ_TABLES_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace dpz::tables {

// W(E_7) dictionary rows: orders of the two lifts, class names, |trace|.
struct JordanRow {
    int order_g;
    int order_gbar;
    std::string class_g;
    std::string class_gbar;
    int trace_abs;
};
const std::vector<JordanRow>& jordan_dictionary();

struct ClassCount {
    std::string name;
    long count;
};

struct ExpectedRow {
    std::string name;            // row label, e.g. "I", "XVIII'", "(phi,phi)"
    std::string chars;           // "any", "=3", "!=3", "!=3,7", "=5", "!=5", "!=3,5"
    std::string group;           // group label as printed
    long order;
    std::vector<ClassCount> class_counts;
    std::string same_as;         // alias target for the grey merge rows
    bool erratum = false;        // printed counts known inconsistent
};

const std::vector<ExpectedRow>& table_dp4();     // quartic del Pezzo surfaces
const std::vector<ExpectedRow>& table_cubics();  // embedded as data only
const std::vector<ExpectedRow>& table_dp2();     // degree 2
const std::vector<ExpectedRow>& table_dp1();     // degree 1

bool char_applies(const std::string& constraint, uint32_t p);

// Element-order histogram implied by a row's class counts through the Carter
// class orders (N = 7 for degree 2, N = 8 for degree 1, N = 5 for degree 4).
std::vector<std::pair<int, long>> implied_histogram(const ExpectedRow& row, int N);

}  // namespace dpz::tables

#endif
