#include "fano4/tables.hpp"

#include <array>

#include "json.hpp"

#include "fano4/errors.hpp"
#include "fano4/families.hpp"
#include "fano4/invariants.hpp"

namespace fano4 {

namespace {

const std::vector<std::string>& standard_columns() {
    static const std::vector<std::string> cols{"r",   "rho",     "K^4", "K^2.c2",
                                               "h22", "b3",      "h0(-K)", "chi(T)"};
    return cols;
}

const std::vector<std::string>& split_hodge_columns() {
    static const std::vector<std::string> cols{"r",   "rho", "K^4",    "K^2.c2", "h22",
                                               "h13", "b3",  "h0(-K)", "chi(T)"};
    return cols;
}

std::vector<Rat> standard_row(int r, const FourfoldRecord& rec) {
    return {Rat(r),       Rat(rec.rho), rec.k4,     rec.k2c2,
            Rat(rec.h22), Rat(rec.b3),  rec.chi_mk, rec.chi_t};
}

std::vector<Rat> split_hodge_row(int r, const FourfoldRecord& rec) {
    return {Rat(r),       Rat(rec.rho), rec.k4,     rec.k2c2,  Rat(rec.h22),
            Rat(rec.h13), Rat(rec.b3),  rec.chi_mk, rec.chi_t};
}

constexpr int kCaptionCount = 5;

const std::array<const char*, kCaptionCount> kCaptions{
    "Numerical invariants of the Fano model of P^4 blown up at r+1 points",
    "Numerical invariants of the blow-ups of the Fano model along a cubic scroll",
    "Numerical invariants of the blow-ups of the Fano model along a sextic K3 surface",
    "Numerical invariants of the blow-ups of the Fano model along a quadric surface",
    "Numerical invariants of the del Pezzo blow-downs of the cubic-scroll 4-folds",
};

const std::array<const char*, kCaptionCount> kNotes{
    "row r is the model on r+1 points with every exceptional line flipped",
    "the scroll passes through all r+1 points; r = 5, 6 are open",
    "the K3 is a sextic with double points at all r+1 points",
    "the quadric passes through r of the r+1 points",
    "each row contracts a del Pezzo surface of degree 8-r out of the scroll 4-fold",
};

// The frozen numbers behind `tables --check`.  check_tables compares the
// recomputed tables against these, cell for cell.
constexpr std::array<std::array<Int, 8>, 8> kExpected1{{
    {0, 2, 544, 232, 2, 0, 111, 20},
    {1, 3, 464, 212, 4, 0, 96, 16},
    {2, 4, 385, 190, 7, 0, 81, 12},
    {3, 5, 307, 166, 11, 0, 66, 8},
    {4, 6, 230, 140, 16, 0, 51, 4},
    {5, 7, 154, 112, 22, 0, 36, 0},
    {6, 8, 80, 80, 30, 0, 21, -4},
    {7, 9, 13, 34, 45, 0, 6, -8},
}};

constexpr std::array<std::array<Int, 8>, 5> kExpected2{{
    {0, 3, 303, 174, 5, 0, 66, 4},
    {1, 4, 256, 160, 8, 0, 57, 2},
    {2, 5, 210, 144, 12, 0, 48, 0},
    {3, 6, 165, 126, 17, 0, 39, -2},
    {4, 7, 121, 106, 23, 0, 30, -4},
}};

constexpr std::array<std::array<Int, 9>, 5> kExpected3{{
    {0, 3, 180, 144, 22, 1, 0, 43, -18},
    {1, 4, 150, 132, 24, 1, 0, 37, -17},
    {2, 5, 121, 118, 27, 1, 0, 31, -16},
    {3, 6, 93, 102, 31, 1, 0, 25, -15},
    {4, 7, 66, 84, 36, 1, 0, 19, -14},
}};

constexpr std::array<std::array<Int, 8>, 3> kExpected4{{
    {0, 3, 350, 188, 4, 0, 75, 7},
    {1, 4, 303, 174, 7, 0, 66, 5},
    {2, 5, 257, 158, 11, 0, 57, 3},
}};

constexpr std::array<std::array<Int, 8>, 5> kExpected5{{
    {0, 2, 432, 204, 3, 0, 90, 12},
    {1, 3, 368, 188, 5, 0, 78, 9},
    {2, 4, 305, 170, 8, 0, 66, 6},
    {3, 5, 243, 150, 12, 0, 54, 3},
    {4, 6, 182, 128, 17, 0, 42, 0},
}};

Table table_shell(int index) {
    Table t;
    t.index = index;
    t.caption = kCaptions[static_cast<std::size_t>(index - 1)];
    t.columns = index == 3 ? split_hodge_columns() : standard_columns();
    t.notes = {kNotes[static_cast<std::size_t>(index - 1)]};
    return t;
}

template <std::size_t Cols, std::size_t Rows>
Table frozen_table(int index, const std::array<std::array<Int, Cols>, Rows>& cells) {
    Table t = table_shell(index);
    for (const auto& row : cells) {
        std::vector<Rat> out;
        out.reserve(Cols);
        for (Int cell : row) out.emplace_back(cell);
        t.rows.push_back(std::move(out));
    }
    return t;
}

}  // namespace

Table emit_table(int k) {
    if (k < 1 || k > 5) throw precondition_error("tables are numbered 1..5");
    Table t = table_shell(k);
    switch (k) {
        case 1:
            for (int r = 0; r <= 7; ++r) t.rows.push_back(standard_row(r, fano_model_W(r + 1)));
            break;
        case 2:
            for (int r = 0; r <= 4; ++r) t.rows.push_back(standard_row(r, family_A(r).record));
            break;
        case 3:
            for (int r = 0; r <= 4; ++r)
                t.rows.push_back(split_hodge_row(r, family_B(r).record));
            break;
        case 4:
            for (int r = 0; r <= 2; ++r) t.rows.push_back(standard_row(r, family_C(r).record));
            break;
        case 5:
            for (int r = 0; r <= 4; ++r) t.rows.push_back(standard_row(r, family_E(r).record));
            break;
        default: break;
    }
    return t;
}

std::vector<Table> emit_all_tables() {
    std::vector<Table> out;
    out.reserve(5);
    for (int k = 1; k <= 5; ++k) out.push_back(emit_table(k));
    return out;
}

const std::vector<Table>& expected_tables() {
    static const std::vector<Table> tables{
        frozen_table(1, kExpected1), frozen_table(2, kExpected2), frozen_table(3, kExpected3),
        frozen_table(4, kExpected4), frozen_table(5, kExpected5),
    };
    return tables;
}

std::vector<CellMismatch> check_tables(const std::vector<Table>& expected) {
    std::vector<CellMismatch> out;
    const std::vector<Table> got = emit_all_tables();
    if (expected.size() != got.size()) {
        out.push_back(CellMismatch{0, -1, "(table count)", Rat(Int(got.size())),
                                   Rat(Int(expected.size()))});
        return out;
    }
    for (std::size_t k = 0; k < got.size(); ++k) {
        const Table& g = got[k];
        const Table& e = expected[k];
        if (g.columns != e.columns || g.rows.size() != e.rows.size()) {
            out.push_back(CellMismatch{g.index, -1, "(shape)", Rat(Int(g.rows.size())),
                                       Rat(Int(e.rows.size()))});
            continue;
        }
        for (std::size_t row = 0; row < g.rows.size(); ++row) {
            for (std::size_t col = 0; col < g.columns.size(); ++col) {
                if (g.rows[row][col] != e.rows[row][col])
                    out.push_back(CellMismatch{g.index, static_cast<int>(row),
                                               g.columns[col], g.rows[row][col],
                                               e.rows[row][col]});
            }
        }
    }
    return out;
}

std::string render_markdown(const Table& t) {
    std::string out = "Table " + std::to_string(t.index) + ". " + t.caption + "\n\n";
    out += "|";
    for (const std::string& c : t.columns) out += " " + c + " |";
    out += "\n|";
    for (std::size_t i = 0; i < t.columns.size(); ++i) out += " --- |";
    out += "\n";
    for (const auto& row : t.rows) {
        out += "|";
        for (const Rat& cell : row) out += " " + to_string(cell) + " |";
        out += "\n";
    }
    for (const std::string& note : t.notes) out += "\n" + ("_" + note + "_") + "\n";
    return out;
}

std::string render_tsv(const Table& t) {
    std::string out = "# Table " + std::to_string(t.index) + ". " + t.caption + "\n#";
    for (std::size_t i = 1; i < t.columns.size(); ++i) {
        out += (i == 1 ? " " : "\t") + t.columns[i];
    }
    out += "\n";
    for (const auto& row : t.rows) {
        for (std::size_t i = 1; i < row.size(); ++i) {
            if (i > 1) out += "\t";
            out += to_string(row[i]);
        }
        out += "\n";
    }
    return out;
}

namespace {

nlohmann::json cell_json(const Rat& cell) {
    if (is_integral(cell)) return cell.numerator();
    return to_string(cell);
}

nlohmann::json table_json(const Table& t) {
    nlohmann::json j;
    j["index"] = t.index;
    j["caption"] = t.caption;
    j["columns"] = t.columns;
    j["rows"] = nlohmann::json::array();
    for (const auto& row : t.rows) {
        nlohmann::json jr = nlohmann::json::array();
        for (const Rat& cell : row) jr.push_back(cell_json(cell));
        j["rows"].push_back(std::move(jr));
    }
    j["notes"] = t.notes;
    return j;
}

}  // namespace

std::string render_json(const Table& t) { return table_json(t).dump(2); }

std::string render_json(const std::vector<Table>& tables) {
    nlohmann::json j = nlohmann::json::array();
    for (const Table& t : tables) j.push_back(table_json(t));
    return j.dump(2);
}

}  // namespace fano4
