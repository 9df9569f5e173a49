#include "ratdist/tables.hpp"

#include "ratdist/errors.hpp"

#include <algorithm>

namespace ratdist {

namespace {

Rational R(const char* s) { return Rational::parse(s); }

std::vector<TableRow> table1() {
    const char* rows[][3] = {
        {"13/12", "88/399", "55/133"}, {"12/11", "24/77", "32/77"},   {"19/12", "35/204", "7/17"},
        {"9/8", "120/169", "50/169"},  {"17/15", "15/14", "11/56"},   {"13/6", "273/500", "34/125"},
        {"9/8", "15/56", "5/14"},
    };
    std::vector<TableRow> out;
    for (const auto& r : rows) out.push_back({{R(r[1]), R(r[2]), 0}, VertexSet::rectangle(R(r[0])), {}});
    return out;
}

std::vector<TableRow> table2() {
    const char* rows[][3] = {
        {"41/27", "77/108", "28/27"},        {"1/35", "37/105", "17/140"},       {"5/54", "35/108", "7/54"},
        {"161/80", "587/300", "7/25"},       {"83/125", "549/500", "14/75"},     {"37/156", "987/2704", "119/676"},
        {"1/189", "283/756", "31/189"},      {"232/189", "493/756", "59/189"},   {"113/190", "2369/1900", "287/2850"},
        {"202/195", "213/325", "161/1300"},  {"383/348", "5397/1682", "2429/1682"}, {"571/476", "2419/2975", "94/425"},
        {"203/594", "119/1188", "469/594"},  {"1589/594", "985/1188", "427/594"}, {"1/756", "127/1512", "307/756"},
        {"1436/847", "7967/3388", "992/847"}, {"127/1029", "341/1372", "307/343"}, {"251/1029", "401/1372", "223/343"},
        {"791/1210", "5299/3630", "2569/2420"}, {"1571/1210", "7487/7260", "509/1210"},
        {"1906/2541", "4019/3388", "360/847"}, {"2185/2541", "3819/3388", "345/847"},
        {"3059/2738", "4487/5476", "3059/8214"},
    };
    std::vector<TableRow> out;
    for (const auto& r : rows) out.push_back({{R(r[0]), R(r[1]), R(r[2])}, VertexSet::unit_square(), {}});
    return out;
}

std::vector<TableRow> table3() {
    return {
        {{R("77/108"), R("41/27"), R("-28/27")},
         VertexSet::cube_five(),
         {R("71/36"), R("67/36"), R("49/36"), R("43/36"), R("95/36")}},
        {{R("83/125"), R("-49/500"), R("-14/75")},
         VertexSet::cube_five(),
         {R("389/300"), R("349/300"), R("209/300"), R("119/300"), R("409/300")}},
    };
}

} // namespace

std::vector<TableRow> table_rows(int id) {
    switch (id) {
    case 1: return table1();
    case 2: return table2();
    case 3: return table3();
    }
    throw InvalidArgument("no table " + std::to_string(id));
}

TableReport verify_table(int id) {
    TableReport rep;
    rep.id = id;
    for (auto& row : table_rows(id)) {
        RowCheck c{row, distance_report(row.point, row.vertices)};
        if (!row.printed.empty()) {
            c.printed_match = c.report.all_rational && row.printed.size() == c.report.entries.size();
            if (c.printed_match) {
                std::vector<Rational> got, want(row.printed.begin(), row.printed.begin() + 4);
                for (std::size_t j = 0; j < 4; ++j) got.push_back(*c.report.entries[j].root);
                std::sort(got.begin(), got.end());
                std::sort(want.begin(), want.end());
                c.printed_match = got == want && *c.report.entries[4].root == row.printed[4];
            }
        }
        c.pass = c.report.all_rational && c.printed_match;
        rep.passed += c.pass;
        rep.rows.push_back(std::move(c));
    }
    return rep;
}

} // namespace ratdist
