#pragma once

#include "ratdist/geometry.hpp"

#include <string>
#include <vector>

namespace ratdist {

struct TableRow {
    Point3 point;
    VertexSet vertices;
    // Printed distances, when the table lists them.
    std::vector<Rational> printed;
};

// Built-in rows as printed. Table 1 rows carry a in vertices.a.
std::vector<TableRow> table_rows(int id);

struct RowCheck {
    TableRow row;
    DistanceReport report;
    bool printed_match = true; // vacuous when nothing is printed
    bool pass = false;
};
struct TableReport {
    int id = 0;
    std::vector<RowCheck> rows;
    int passed = 0;
    bool all_pass() const { return passed == static_cast<int>(rows.size()); }
};

// Every row through the oracle. Table 3 rows also compare the printed
// distances: the four square vertices as a multiset, (0,0,1) exactly.
// Throws InvalidArgument for an unknown id.
TableReport verify_table(int id);

} // namespace ratdist
