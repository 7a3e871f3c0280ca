#pragma once

#include <charconv>
#include <cmath>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <istream>
#include <set>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "sx/adjacency.hpp"
#include "sx/error.hpp"
#include "sx/graph.hpp"

namespace sx {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
    return s;
}

inline std::vector<std::string> split_csv_line(std::string_view line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto comma = line.find(',', start);
        out.emplace_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return out;
}

inline std::string where(std::size_t line, std::size_t column) {
    return "line " + std::to_string(line) + ", column " + std::to_string(column);
}

} // namespace detail

/// Reads a labeled square adjacency matrix.
///
/// The first row holds the N column labels (optionally preceded by an empty
/// corner cell); each of the N following rows holds a row label and N numeric
/// entries. Any nonzero entry other than 1 is read as 1 and recorded in
/// `warnings`. Blank lines are ignored. Errors carry 1-based line/column.
inline RawMatrix parse_matrix_csv(std::istream& in) {
    RawMatrix raw;
    std::string line;
    std::size_t line_no = 0;
    bool header_seen = false;
    std::set<std::string> seen;

    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.erase(0, 3);
        if (detail::trim(line).empty()) continue;
        auto fields = detail::split_csv_line(line);
        if (!header_seen) {
            if (fields.size() > 1 && fields.front().empty()) fields.erase(fields.begin());
            for (std::size_t c = 0; c < fields.size(); ++c) {
                if (fields[c].empty())
                    throw InputError("empty label at " + detail::where(line_no, c + 1));
                if (!seen.insert(fields[c]).second)
                    throw InputError("duplicate label '" + fields[c] + "' at " +
                                     detail::where(line_no, c + 1));
            }
            raw.labels = std::move(fields);
            header_seen = true;
            continue;
        }
        const std::size_t n = raw.labels.size();
        const std::size_t row = raw.entries.size();
        if (row >= n)
            throw InputError("more data rows than labels (" + std::to_string(n) + ") at line " +
                             std::to_string(line_no));
        if (fields.size() != n + 1)
            throw InputError("data row " + std::to_string(row + 1) + " at line " +
                             std::to_string(line_no) + " has " + std::to_string(fields.size() - 1) +
                             " entries, expected " + std::to_string(n));
        if (fields[0] != raw.labels[row])
            raw.warnings.push_back("row label '" + fields[0] + "' at line " +
                                   std::to_string(line_no) + " differs from column label '" +
                                   raw.labels[row] + "'");
        std::vector<double> values(n);
        for (std::size_t c = 0; c < n; ++c) {
            const std::string& cell = fields[c + 1];
            double v = 0.0;
            const auto [ptr, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (cell.empty() || ec != std::errc() || ptr != cell.data() + cell.size() || !std::isfinite(v))
                throw InputError("non-numeric entry '" + cell + "' at " +
                                 detail::where(line_no, c + 2));
            if (v != 0.0 && v != 1.0) {
                raw.warnings.push_back("entry '" + cell + "' at " + detail::where(line_no, c + 2) +
                                       " treated as 1");
                v = 1.0;
            }
            values[c] = v;
        }
        raw.entries.push_back(std::move(values));
    }
    if (!header_seen || raw.labels.empty()) throw InputError("empty matrix");
    if (raw.entries.size() != raw.labels.size())
        throw InputError("matrix is not square: " + std::to_string(raw.labels.size()) +
                         " labels but " + std::to_string(raw.entries.size()) + " data rows");
    return raw;
}

inline RawMatrix parse_matrix_csv(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path.string());
    return parse_matrix_csv(in);
}

inline void write_matrix_csv(std::ostream& out, const RawMatrix& raw) {
    for (const auto& l : raw.labels) out << ',' << l;
    out << '\n';
    for (std::size_t i = 0; i < raw.labels.size(); ++i) {
        out << raw.labels[i];
        for (double v : raw.entries[i]) out << ',' << (v != 0.0 ? 1 : 0);
        out << '\n';
    }
}

/// Dumps a level matrix as 0/1 CSV plus a sidecar listing the index basis,
/// one simplex per line with space-separated vertex names.
inline void write_level_matrix(const std::filesystem::path& matrix_path,
                               const std::filesystem::path& basis_path, const BooleanMatrix& m,
                               std::span<const Simplex> basis,
                               std::span<const std::string> names = {}) {
    std::ofstream mat(matrix_path);
    std::ofstream idx(basis_path);
    if (!mat) throw IoError("cannot write " + matrix_path.string());
    if (!idx) throw IoError("cannot write " + basis_path.string());
    for (std::size_t i = 0; i < m.size(); ++i) {
        for (std::size_t j = 0; j < m.size(); ++j) mat << (j ? "," : "") << (m(i, j) ? 1 : 0);
        mat << '\n';
    }
    for (const auto& s : basis) {
        for (std::size_t i = 0; i < s.size(); ++i)
            idx << (i ? " " : "") << (names.empty() ? std::to_string(s[i]) : names[s[i]]);
        idx << '\n';
    }
    if (!mat || !idx) throw IoError("failed writing level matrix");
}

} // namespace sx
