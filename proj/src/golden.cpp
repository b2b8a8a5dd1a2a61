#include "relalg/golden.hpp"

#include "relalg/catalog.hpp"

namespace relalg {

namespace {

using Rows = std::vector<std::vector<std::string>>;

const std::vector<std::string> kM3 = {"0", "1'", "0'", "1"};
const std::vector<std::string> kPowerset3 = {"{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"};
const std::vector<std::string> kD = {"0", "1'", "a", "b", "1'+a", "1'+b", "0'", "1"};

std::vector<GoldenTable> transcribe() {
    std::vector<GoldenTable> t;
    t.push_back({1, "", "m3", TableKind::comp, kM3, kM3,
                 Rows{{"0", "0", "0", "0"}, {"0", "1'", "0'", "1"}, {"0", "0'", "1", "1"}, {"0", "1", "1", "1"}}});
    t.push_back({2, "", "z3c", TableKind::comp, kPowerset3, kPowerset3,
                 Rows{
                     {"{}", "{}", "{}", "{}", "{}", "{}", "{}", "{}"},
                     {"{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"},
                     {"{}", "{1}", "{2}", "{0}", "{1,2}", "{0,1}", "{0,2}", "{0,1,2}"},
                     {"{}", "{2}", "{0}", "{1}", "{0,2}", "{1,2}", "{0,1}", "{0,1,2}"},
                     {"{}", "{0,1}", "{1,2}", "{0,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"},
                     {"{}", "{0,2}", "{0,1}", "{1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"},
                     {"{}", "{1,2}", "{0,2}", "{0,1}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"},
                     {"{}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"},
                 }});
    t.push_back({3, "", "z3c", TableKind::conv, kPowerset3, {},
                 Rows{{"{}"}, {"{0}"}, {"{2}"}, {"{1}"}, {"{0,2}"}, {"{0,1}"}, {"{1,2}"}, {"{0,1,2}"}}});
    t.push_back({4, "", "d", TableKind::comp, {"1'", "a", "b"}, {"1'", "a", "b"},
                 Rows{{"1'", "a", "b"}, {"a", "1", "0'"}, {"b", "0'", "1"}}});
    t.push_back({5, "", "d", TableKind::comp, kD, kD,
                 Rows{
                     {"0", "0", "0", "0", "0", "0", "0", "0"},
                     {"0", "1'", "a", "b", "1'+a", "1'+b", "0'", "1"},
                     {"0", "a", "1", "0'", "1", "0'", "1", "1"},
                     {"0", "b", "0'", "1", "0'", "1", "1", "1"},
                     {"0", "1'+a", "1", "0'", "1", "1", "1", "1"},
                     {"0", "1'+b", "0'", "1", "1", "1", "1", "1"},
                     {"0", "0'", "1", "1", "1", "1", "1", "1"},
                     {"0", "1", "1", "1", "1", "1", "1", "1"},
                 }});
    const std::vector<std::string> a2 = {"0", "1'", "1"};
    t.push_back({6, "add", "a2", TableKind::add, a2, a2, Rows{{"0", "1'", "1"}, {"1'", "1'", "0"}, {"1", "0", "1"}}});
    t.push_back({6, "comp", "a2", TableKind::comp, a2, a2, Rows{{"0", "0", "0"}, {"0", "1'", "1"}, {"0", "1", "1'"}}});
    t.push_back({6, "neg", "a2", TableKind::neg, a2, {}, Rows{{"0"}, {"1"}, {"1'"}}});
    t.push_back({7, "", "mckinsey", TableKind::comp, {"0", "1", "2"}, {"0", "1", "2"},
                 Rows{{"0", "1", "2"}, {"1", "0", ""}, {"2", "", "0"}}});
    t.push_back({8, "", "a4", TableKind::comp, kPowerset3, kPowerset3,
                 Rows{
                     {"{}", "{}", "{}", "{}", "{}", "{}", "{}", "{}"},
                     {"{}", "{0}", "{1}", "{2}", "{0,1}", "{0,2}", "{1,2}", "{0,1,2}"},
                     {"{}", "{1}", "{0}", "{}", "{0,1}", "{1}", "{0}", "{0,1}"},
                     {"{}", "{2}", "{}", "{0}", "{2}", "{0,2}", "{0}", "{0,2}"},
                     {"{}", "{0,1}", "{0,1}", "{2}", "{0,1}", "{0,1,2}", "{0,1,2}", "{0,1,2}"},
                     {"{}", "{0,2}", "{1}", "{0,2}", "{0,1,2}", "{0,2}", "{0,1,2}", "{0,1,2}"},
                     {"{}", "{1,2}", "{0}", "{0}", "{0,1,2}", "{0,1,2}", "{0}", "{0,1,2}"},
                     {"{}", "{0,1,2}", "{0,1}", "{0,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}", "{0,1,2}"},
                 }});
    const std::vector<std::string> singletons = {"{0}", "{1}", "{2}"};
    const std::vector<std::string> doubletons = {"{0,1}", "{0,2}", "{1,2}"};
    t.push_back({9, "z3c", "z3c", TableKind::comp, singletons, doubletons,
                 Rows{{"{0,1}", "{0,2}", "{1,2}"}, {"{1,2}", "{0,1}", "{0,2}"}, {"{0,2}", "{1,2}", "{0,1}"}}});
    t.push_back({9, "a9", "a9", TableKind::comp, singletons, doubletons,
                 Rows{{"{0,1}", "{0,2}", "{1,2}"}, {"{0,2}", "{1,2}", "{0,1}"}, {"{1,2}", "{0,1}", "{0,2}"}}});
    t.push_back({10, "", "b10", TableKind::comp, kM3, kM3,
                 Rows{{"0", "0", "0'", "0'"}, {"0", "1'", "0'", "1"}, {"0'", "0'", "0'", "0'"}, {"0'", "1", "0'", "1"}}});
    t.push_back({11, "d", "d", TableKind::comp, {"1'+a", "1'+b"}, {"a", "b"}, Rows{{"1", "0'"}, {"0'", "1"}}});
    t.push_back({11, "b9", "b9", TableKind::comp, {"1'+a", "1'+b"}, {"a", "b"}, Rows{{"0'", "1"}, {"1", "0'"}}});
    return t;
}

std::optional<std::string> algebra_cell(const FiniteAlgebra& a, TableKind table, const std::string& row,
                                        const std::string& column) {
    auto x = a.find_name(row);
    if (!x) return "<no element " + row + ">";
    std::optional<Element> y;
    if (!column.empty()) {
        y = a.find_name(column);
        if (!y) return "<no element " + column + ">";
    }
    switch (table) {
        case TableKind::add: return a.name(a.add(*x, *y));
        case TableKind::comp: return a.name(a.comp(*x, *y));
        case TableKind::neg: return a.name(a.neg(*x));
        case TableKind::conv: return a.name(a.conv(*x));
        case TableKind::ident: return a.name(a.ident());
    }
    return std::nullopt;
}

}  // namespace

std::string GoldenTable::label() const {
    std::string s = "table " + std::to_string(number);
    if (!part.empty()) s += " (" + part + ")";
    return s;
}

const std::vector<GoldenTable>& golden_tables() {
    static const std::vector<GoldenTable> tables = transcribe();
    return tables;
}

std::vector<GoldenMismatch> compare_golden(const GoldenTable& golden, const CellLookup& lookup) {
    std::vector<GoldenMismatch> out;
    for (std::size_t i = 0; i < golden.rows.size(); ++i) {
        const auto& row = golden.rows[i];
        if (golden.columns.empty()) {
            auto actual = lookup(row, "");
            if (actual.value_or("") != golden.cells[i][0])
                out.push_back({row, "", golden.cells[i][0], actual.value_or("")});
            continue;
        }
        for (std::size_t j = 0; j < golden.columns.size(); ++j) {
            auto actual = lookup(row, golden.columns[j]);
            if (actual.value_or("") != golden.cells[i][j])
                out.push_back({row, golden.columns[j], golden.cells[i][j], actual.value_or("")});
        }
    }
    return out;
}

std::vector<GoldenMismatch> compare_golden(const GoldenTable& golden, const FiniteAlgebra& a) {
    return compare_golden(golden, [&](const std::string& row, const std::string& column) {
        return algebra_cell(a, golden.table, row, column);
    });
}

std::vector<GoldenMismatch> compare_golden(const GoldenTable& golden) {
    if (golden.model == "mckinsey") {
        const PartialGroupoidSpec p = mckinsey_groupoid();
        return compare_golden(golden, [&](const std::string& row, const std::string& column) {
            auto v = p.times(static_cast<Element>(std::stoul(row)), static_cast<Element>(std::stoul(column)));
            return v ? std::optional<std::string>(std::to_string(*v)) : std::nullopt;
        });
    }
    return compare_golden(golden, build(golden.model));
}

}  // namespace relalg
