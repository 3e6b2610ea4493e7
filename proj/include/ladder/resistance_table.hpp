// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "closed_forms.hpp"
#include "ladder_spec.hpp"
#include "rational.hpp"

namespace ladder {

/// How a table's entries were computed.
enum class TableSource { closed_form, reduction, oracle };

inline std::string to_string(TableSource s) {
    switch (s) {
        case TableSource::closed_form: return "closed_form";
        case TableSource::reduction: return "reduction";
        case TableSource::oracle: return "oracle";
    }
    throw std::logic_error("unknown TableSource");
}

/// All pairwise effective resistances of one ladder. Entries are keyed by
/// the canonical pair order (p before q, then by index) and iterate in that
/// order, so serialization is deterministic.
class ResistanceTable {
public:
    using Key = std::pair<VertexRef, VertexRef>;

    ResistanceTable(int n, TableSource source) : spec_(n), source_(source) {}

    const LadderSpec& spec() const { return spec_; }
    int n() const { return spec_.n(); }
    TableSource source() const { return source_; }

    static Key canonical(VertexRef a, VertexRef b) {
        return a < b ? Key{a, b} : Key{b, a};
    }

    void set(VertexRef a, VertexRef b, Rational value) {
        spec_.require(a);
        spec_.require(b);
        if (a == b) {
            throw std::domain_error("ResistanceTable::set: diagonal entries are fixed at 0");
        }
        entries_[canonical(a, b)] = std::move(value);
    }

    /// r(a, b); the diagonal reads as 0 without being stored.
    const Rational& at(VertexRef a, VertexRef b) const {
        spec_.require(a);
        spec_.require(b);
        if (a == b) {
            static const Rational zero(0);
            return zero;
        }
        const auto it = entries_.find(canonical(a, b));
        if (it == entries_.end()) {
            throw std::out_of_range("ResistanceTable::at: no entry for " + to_string(a) + "," +
                                    to_string(b));
        }
        return it->second;
    }

    std::size_t size() const { return entries_.size(); }
    const std::map<Key, Rational>& entries() const { return entries_; }

    /// Sum of all entries; the Kirchhoff index when the table is complete.
    Rational total() const {
        Rational sum = 0;
        for (const auto& [key, value] : entries_) sum += value;
        return sum;
    }

private:
    LadderSpec spec_;
    TableSource source_;
    std::map<Key, Rational> entries_;
};

/// Every unordered pair of distinct vertices via the closed forms:
/// 2n(2n-1)/2 entries.
inline ResistanceTable resistance_table(const LadderSpec& spec) {
    ResistanceTable table(spec.n(), TableSource::closed_form);
    const auto verts = spec.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i) {
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            table.set(verts[i], verts[j], resistance(spec, verts[i], verts[j]));
        }
    }
    return table;
}

/// CSV with header side_a,idx_a,side_b,idx_b,value, one row per entry in
/// canonical order, exact fractions in the value column.
inline std::string to_csv(const ResistanceTable& table) {
    std::ostringstream out;
    out << "side_a,idx_a,side_b,idx_b,value\n";
    for (const auto& [key, value] : table.entries()) {
        const auto& [a, b] = key;
        out << side_letter(a.side) << ',' << a.index << ',' << side_letter(b.side) << ','
            << b.index << ',' << to_string(value) << '\n';
    }
    return out.str();
}

/// Parses the CSV produced by to_csv. The ladder size is inferred from the
/// largest index present; the source is tagged as closed_form.
inline ResistanceTable table_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "side_a,idx_a,side_b,idx_b,value") {
        throw std::invalid_argument("table_from_csv: missing header row");
    }
    struct Row {
        VertexRef a;
        VertexRef b;
        Rational value;
    };
    std::vector<Row> rows;
    int max_index = 1;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream fields(line);
        std::string side_a, idx_a, side_b, idx_b, value;
        if (!std::getline(fields, side_a, ',') || !std::getline(fields, idx_a, ',') ||
            !std::getline(fields, side_b, ',') || !std::getline(fields, idx_b, ',') ||
            !std::getline(fields, value)) {
            throw std::invalid_argument("table_from_csv: malformed row \"" + line + "\"");
        }
        Row row{parse_vertex(side_a + idx_a), parse_vertex(side_b + idx_b),
                parse_rational(value)};
        max_index = std::max({max_index, row.a.index, row.b.index});
        rows.push_back(std::move(row));
    }
    ResistanceTable table(max_index, TableSource::closed_form);
    for (auto& row : rows) {
        table.set(row.a, row.b, std::move(row.value));
    }
    return table;
}

/// JSON mirror of the CSV: same fields, values as exact-fraction strings.
inline nlohmann::ordered_json table_to_json(const ResistanceTable& table) {
    nlohmann::ordered_json entries = nlohmann::ordered_json::array();
    for (const auto& [key, value] : table.entries()) {
        const auto& [a, b] = key;
        entries.push_back({
            {"side_a", std::string(1, side_letter(a.side))},
            {"idx_a", a.index},
            {"side_b", std::string(1, side_letter(b.side))},
            {"idx_b", b.index},
            {"value", to_string(value)},
        });
    }
    return nlohmann::ordered_json{
        {"n", table.n()},
        {"source", to_string(table.source())},
        {"entries", std::move(entries)},
    };
}

} // namespace ladder
