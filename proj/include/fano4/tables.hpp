#pragma once

#include <string>
#include <vector>

#include "fano4/rational.hpp"

namespace fano4 {

/// One invariant table.  Rows carry the leading r index followed by the
/// numeric columns; every cell is an exact rational (integral in practice,
/// which the test suites assert).
struct Table {
    int index = 0;
    std::string caption;
    std::vector<std::string> columns;     ///< includes the leading "r"
    std::vector<std::vector<Rat>> rows;
    std::vector<std::string> notes;

    friend bool operator==(const Table&, const Table&) = default;
};

/// Recompute table k (1..5) from the family constructors:
///   1 — Fano models of P^4 blown up at r+1 points (r = 0..7)
///   2 — family A blow-ups (r = 0..4)
///   3 — family B blow-ups (r = 0..4; split Hodge columns h22/h13)
///   4 — family C blow-ups (r = 0..2)
///   5 — family E blow-downs (r = 0..4)
[[nodiscard]] Table emit_table(int k);

/// All five tables, recomputed.
[[nodiscard]] std::vector<Table> emit_all_tables();

/// The frozen expected values (the golden data `tables --check` verifies
/// against).  Kept as literals, independent of the computing code paths.
[[nodiscard]] const std::vector<Table>& expected_tables();

struct CellMismatch {
    int table = 0;
    int row = 0;              ///< 0-based row index
    std::string column;
    Rat got = 0;
    Rat want = 0;
};

/// Compare recomputed tables against the given expected set, cell by cell.
/// Empty result means everything matches (including shapes).
[[nodiscard]] std::vector<CellMismatch> check_tables(const std::vector<Table>& expected);

[[nodiscard]] std::string render_markdown(const Table& t);
/// Data rows only carry the numeric columns (no r); captions and headers ride
/// on "#" comment lines.  Tabs separate fields; nothing is quoted.
[[nodiscard]] std::string render_tsv(const Table& t);
[[nodiscard]] std::string render_json(const Table& t);
[[nodiscard]] std::string render_json(const std::vector<Table>& tables);

}  // namespace fano4
