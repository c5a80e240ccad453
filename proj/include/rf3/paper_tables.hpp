#pragma once

#include "rf3/oracle.hpp"

namespace rf3 {

struct TableRow {
    std::string item;  // the input being checked
    std::string want;
    std::string got;
    bool pass = false;
};

struct TableReport {
    std::string title;
    bool pass = false;
    std::vector<TableRow> rows;
};

/// Recomputes the published invariant tables for q = 27 (modulus X^3-X+1
/// over F_3) and q = 25 (modulus X^2+X+1 over F_5): the Class III-a
/// (s,t) -> theta rows and the Class III-b (s,t) -> mu^2 rows.  The stored
/// values are compared against recomputation, never used as a data source.
std::vector<TableReport> paper_invariant_tables(u32 q);

/// The even-characteristic comparison table at the given q: canonical-form
/// correspondences, ramification types and theta values; rows are confirmed
/// by brute-force equivalence when q <= 8.
TableReport paper_even_table(const FieldCtx& F, Exec mode = Exec::parallel);

}  // namespace rf3
