#include "ferrers/text_format.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <sstream>

namespace ferrers::text {

namespace {

std::string strip_ws(const std::string& s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
    }
    return out;
}

int parse_int(const std::string& tok, const std::string& what) {
    int value = 0;
    const auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    require(ec == std::errc() && ptr == tok.data() + tok.size(),
            "cannot read " + what + " from \"" + tok + "\"");
    return value;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

Square parse_pair(const std::string& tok, const std::string& what) {
    const auto parts = split(tok, ',');
    require(parts.size() == 2, what + " entry \"" + tok + "\" is not a row,col pair");
    return {parse_int(parts[0], what + " row"), parse_int(parts[1], what + " column")};
}

std::vector<Square> parse_pair_list(const std::string& s, const std::string& what) {
    std::vector<Square> out;
    if (s.empty()) return out;
    for (const std::string& tok : split(s, ';')) {
        out.push_back(parse_pair(tok, what));
    }
    return out;
}

std::string format_pair_list(const std::vector<Square>& squares) {
    std::ostringstream out;
    for (std::size_t i = 0; i < squares.size(); ++i) {
        if (i > 0) out << ';';
        out << squares[i].row << ',' << squares[i].col;
    }
    return out.str();
}

} // namespace

std::vector<int> parse_shape(const std::string& s) {
    const std::string flat = strip_ws(s);
    require(!flat.empty(), "shape is empty");
    std::vector<int> lengths;
    for (const std::string& tok : split(flat, ',')) {
        lengths.push_back(parse_int(tok, "row length"));
    }
    return lengths;
}

std::string format_shape(const std::vector<int>& lengths) {
    std::ostringstream out;
    for (std::size_t i = 0; i < lengths.size(); ++i) {
        if (i > 0) out << ',';
        out << lengths[i];
    }
    return out.str();
}

HamiltonianPath parse_path(const std::string& s) {
    HamiltonianPath p;
    std::istringstream in(s);
    std::string tok;
    while (in >> tok) {
        require(tok.size() >= 2 && (tok[0] == 'r' || tok[0] == 'c'),
                "path token \"" + tok + "\" must look like r5 or c2");
        const VertexKind kind = (tok[0] == 'r') ? VertexKind::Row : VertexKind::Col;
        p.seq.push_back({kind, parse_int(tok.substr(1), "vertex index")});
    }
    require(!p.seq.empty(), "path is empty");
    return p;
}

std::string format_path(const HamiltonianPath& p) {
    std::ostringstream out;
    for (std::size_t i = 0; i < p.seq.size(); ++i) {
        if (i > 0) out << ' ';
        out << to_string(p.seq[i]);
    }
    return out.str();
}

RookPlacement parse_placement(const std::string& s) {
    const std::string flat = strip_ws(s);
    require(!flat.empty(), "placement is empty");
    return RookPlacement::of(parse_pair_list(flat, "placement"));
}

std::string format_placement(const RookPlacement& p) {
    return format_pair_list(p.squares);
}

std::string format_placement(const RookPlacement& p, const std::vector<int>& row_order) {
    std::vector<Square> ordered;
    ordered.reserve(p.squares.size());
    for (int row : row_order) {
        const auto it = std::find_if(p.squares.begin(), p.squares.end(),
                                     [&](const Square& s) { return s.row == row; });
        require(it != p.squares.end(), "no square in row " + std::to_string(row));
        ordered.push_back(*it);
    }
    require(ordered.size() == p.squares.size(), "row order does not cover the placement");
    return format_pair_list(ordered);
}

RcConfiguration parse_config(const std::string& s, const Diagram& d) {
    const std::string flat = strip_ws(s);
    require(flat.rfind("R=", 0) == 0, "configuration must start with R=");
    const std::size_t c_at = flat.find("C=");
    require(c_at != std::string::npos, "configuration must contain C=");
    std::string r_part = flat.substr(2, c_at - 2);
    if (!r_part.empty() && r_part.back() == ';') r_part.pop_back();
    const std::string c_part = flat.substr(c_at + 2);

    RcConfiguration cfg;
    cfg.r_cols.assign(std::max(0, d.rows() - 1), 0);
    cfg.c_rows.assign(std::max(0, d.cols() - 1), 0);
    for (const Square& mark : parse_pair_list(r_part, "R")) {
        require(mark.row >= 2 && mark.row <= d.rows(),
                "R mark row " + std::to_string(mark.row) + " must be in 2.." +
                    std::to_string(d.rows()));
        require(cfg.r_cols[mark.row - 2] == 0,
                "row " + std::to_string(mark.row) + " has two R marks");
        cfg.r_cols[mark.row - 2] = mark.col;
    }
    for (const Square& mark : parse_pair_list(c_part, "C")) {
        require(mark.col >= 2 && mark.col <= d.cols(),
                "C mark column " + std::to_string(mark.col) + " must be in 2.." +
                    std::to_string(d.cols()));
        require(cfg.c_rows[mark.col - 2] == 0,
                "column " + std::to_string(mark.col) + " has two C marks");
        cfg.c_rows[mark.col - 2] = mark.row;
    }
    for (int a = 2; a <= d.rows(); ++a) {
        require(cfg.r_cols[a - 2] != 0, "row " + std::to_string(a) + " is missing its R mark");
    }
    for (int b = 2; b <= d.cols(); ++b) {
        require(cfg.c_rows[b - 2] != 0, "column " + std::to_string(b) + " is missing its C mark");
    }
    return cfg;
}

std::string format_config(const RcConfiguration& cfg) {
    std::vector<Square> r_marks, c_marks;
    for (std::size_t i = 0; i < cfg.r_cols.size(); ++i) {
        r_marks.push_back({static_cast<int>(i) + 2, cfg.r_cols[i]});
    }
    for (std::size_t i = 0; i < cfg.c_rows.size(); ++i) {
        c_marks.push_back({cfg.c_rows[i], static_cast<int>(i) + 2});
    }
    return "R=" + format_pair_list(r_marks) + ";C=" + format_pair_list(c_marks);
}

SpanningTree parse_tree(const std::string& s) {
    const std::string flat = strip_ws(s);
    require(!flat.empty(), "tree is empty");
    return SpanningTree::of(parse_pair_list(flat, "tree edge"));
}

std::string format_tree(const SpanningTree& t) {
    return format_pair_list(t.edges);
}

std::vector<BigInt> parse_weights(const std::string& s) {
    const std::string flat = strip_ws(s);
    require(!flat.empty(), "weight list is empty");
    std::vector<BigInt> out;
    for (const std::string& tok : split(flat, ',')) {
        require(!tok.empty(), "empty weight entry");
        try {
            out.emplace_back(tok);
        } catch (const std::exception&) {
            throw RejectedInput("cannot read weight from \"" + tok + "\"");
        }
    }
    return out;
}

std::string format_weights(const std::vector<BigInt>& w) {
    std::ostringstream out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i > 0) out << ',';
        out << w[i];
    }
    return out.str();
}

} // namespace ferrers::text
