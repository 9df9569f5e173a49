#include "ratdist/errors.hpp"
#include "ratdist/tables.hpp"

#include <gtest/gtest.h>

using namespace ratdist;

namespace {

// Plain GMP square test, independent of the library's report.
bool rational_sq(const Rational& s) {
    Integer n = s.num(), d = s.den();
    if (n < 0) return false;
    Integer rn = sqrt(n), rd = sqrt(d);
    return rn * rn == n && rd * rd == d;
}

bool all_rational(const TableRow& r) {
    for (const auto& v : r.vertices.vertices)
        if (!rational_sq(squared_distance(r.point, v))) return false;
    return true;
}

} // namespace

TEST(Tables, Sizes) {
    EXPECT_EQ(table_rows(1).size(), 7u);
    EXPECT_EQ(table_rows(2).size(), 23u);
    EXPECT_EQ(table_rows(3).size(), 2u);
    EXPECT_THROW(table_rows(4), InvalidArgument);
    EXPECT_THROW(verify_table(0), InvalidArgument);
}

TEST(Tables, EveryRowRational) {
    for (int id : {1, 2, 3}) {
        auto rep = verify_table(id);
        EXPECT_TRUE(rep.all_pass()) << "table " << id;
        for (const auto& c : rep.rows) EXPECT_TRUE(all_rational(c.row)) << c.row.point.str();
    }
}

TEST(Tables, Table3Distances) {
    auto rows = table_rows(3);
    // d5 is the distance to (0,0,1).
    for (const auto& r : rows) {
        ASSERT_EQ(r.printed.size(), 5u);
        EXPECT_EQ(squared_distance(r.point, {0, 0, 1}), r.printed[4] * r.printed[4]);
        Rational sum_printed = 0, sum_actual = 0;
        for (int j = 0; j < 4; ++j) {
            sum_printed += r.printed[j] * r.printed[j];
            sum_actual += squared_distance(r.point, r.vertices.vertices[j]);
        }
        EXPECT_EQ(sum_printed, sum_actual);
    }
    for (const auto& c : verify_table(3).rows) EXPECT_TRUE(c.printed_match);
}

TEST(Tables, WrongPrintedValueDetected) {
    // Perturbing one coordinate must break the oracle.
    auto rows = table_rows(2);
    TableRow r = rows[0];
    r.point.z += Rational(1, 1000);
    EXPECT_FALSE(all_rational(r));
    EXPECT_FALSE(distance_report(r.point, r.vertices).all_rational);
}
