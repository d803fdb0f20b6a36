#pragma once

// Plain-text polytope files.
//
//   # optional comment lines
//   v n
//   x_11 ... x_1n
//   ...
//   x_v1 ... x_vn
//
// Several polytopes are separated by blank lines. The strict reader requires
// the "v n" orientation. The lenient reader also accepts the transposed
// "n v" layout (n rows of v entries, vertices as columns) when the header
// alone decides it: a full-dimensional polytope in dimension n has at least
// n + 1 vertices, so a header "a b" with a > b means vertices as rows, a < b
// means vertices as columns, and a == b is rejected.

#include "reflexkit/polytope.hpp"

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

namespace reflexkit {

struct RawPolytope {
    std::size_t line = 0;  // line of the header
    std::size_t dim = 0;
    std::vector<LatticePoint> points;
    bool transposed = false;  // read from the "n v" layout
};

enum class ReadMode { strict, lenient };

namespace detail {

inline std::string_view trim(std::string_view s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

inline std::vector<Integer> parse_row(std::string_view text, std::size_t line) {
    std::vector<Integer> out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (text[i] == ' ' || text[i] == '\t' || text[i] == '\r') {
            ++i;
            continue;
        }
        std::size_t j = i;
        if (text[j] == '-' || text[j] == '+') ++j;
        const std::size_t digits = j;
        while (j < text.size() && text[j] >= '0' && text[j] <= '9') ++j;
        if (j == digits || (j < text.size() && text[j] != ' ' && text[j] != '\t' && text[j] != '\r'))
            throw ParseError(line, "expected an integer, found '" +
                                       std::string(text.substr(i, text.find_first_of(" \t", i) - i)) + "'");
        std::string token(text.substr(text[i] == '+' ? i + 1 : i, j - (text[i] == '+' ? i + 1 : i)));
        out.emplace_back(token);
        i = j;
    }
    return out;
}

inline bool is_comment(std::string_view t) { return !t.empty() && t.front() == '#'; }

} // namespace detail

inline std::vector<RawPolytope> read_polytopes(std::istream& in, ReadMode mode = ReadMode::strict) {
    std::vector<RawPolytope> out;
    std::string raw;
    std::size_t line = 0;
    bool need_separator = false;

    auto next_line = [&](std::string_view& t) {
        while (std::getline(in, raw)) {
            ++line;
            t = detail::trim(raw);
            if (!detail::is_comment(t)) return true;
        }
        return false;
    };

    std::string_view t;
    while (next_line(t)) {
        if (t.empty()) {
            need_separator = false;
            continue;
        }
        if (need_separator) throw ParseError(line, "expected a blank line between polytopes");
        const auto header = detail::parse_row(t, line);
        if (header.size() != 2) throw ParseError(line, "header must contain exactly two integers");
        if (header[0] <= 0 || header[1] <= 0) throw ParseError(line, "header entries must be positive");
        if (header[0] > 100000 || header[1] > 100000) throw ParseError(line, "header entries too large");
        const auto a = static_cast<std::size_t>(header[0]);
        const auto b = static_cast<std::size_t>(header[1]);

        RawPolytope poly;
        poly.line = line;
        std::vector<std::vector<Integer>> rows;
        for (std::size_t r = 0; r < a; ++r) {
            if (!next_line(t)) throw ParseError(line, "unexpected end of input: expected " + std::to_string(a - r) + " more rows");
            if (t.empty()) throw ParseError(line, "blank line inside a polytope: expected " + std::to_string(a - r) + " more rows");
            auto row = detail::parse_row(t, line);
            if (row.size() != b)
                throw ParseError(line, "expected " + std::to_string(b) + " entries, found " + std::to_string(row.size()));
            rows.push_back(std::move(row));
        }

        if (mode == ReadMode::strict || a > b) {
            poly.dim = b;
            for (auto& row : rows) poly.points.emplace_back(std::move(row), Lattice::N);
        } else if (a < b) {
            poly.dim = a;
            poly.transposed = true;
            for (std::size_t c = 0; c < b; ++c) {
                LatticePoint p(a);
                for (std::size_t r = 0; r < a; ++r) p[r] = rows[r][c];
                poly.points.push_back(std::move(p));
            }
        } else {
            throw ParseError(poly.line, "ambiguous orientation: header declares a square " + std::to_string(a) + "x" +
                                            std::to_string(b) + " block");
        }
        out.push_back(std::move(poly));
        need_separator = true;
    }
    return out;
}

inline std::vector<RawPolytope> read_polytopes(const std::string& text, ReadMode mode = ReadMode::strict) {
    std::istringstream in(text);
    return read_polytopes(in, mode);
}

inline Polytope to_polytope(const RawPolytope& raw) { return Polytope::hull(raw.points); }

inline std::vector<Polytope> parse_polytopes(const std::string& text, ReadMode mode = ReadMode::strict) {
    std::vector<Polytope> out;
    for (const auto& raw : read_polytopes(text, mode)) out.push_back(to_polytope(raw));
    return out;
}

inline void write_polytope(std::ostream& os, const Polytope& p, std::string_view comment = {}) {
    if (!comment.empty()) os << "# " << comment << '\n';
    os << p.vertices().size() << ' ' << p.dim() << '\n';
    for (const auto& v : p.vertices()) {
        for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
        os << '\n';
    }
}

inline std::string emit(const std::vector<Polytope>& ps) {
    std::ostringstream os;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) os << '\n';
        write_polytope(os, ps[i]);
    }
    return os.str();
}

inline std::string emit(const Polytope& p) { return emit(std::vector<Polytope>{p}); }

} // namespace reflexkit
