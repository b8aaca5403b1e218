#include "submaj/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <string>

namespace submaj::io {

namespace {

// Next non-comment, non-blank line; '#' starts a comment.
bool next_content_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        const auto pos = line.find('#');
        if (pos != std::string::npos) line.erase(pos);
        bool blank = true;
        for (char c : line) {
            if (!std::isspace(static_cast<unsigned char>(c))) {
                blank = false;
                break;
            }
        }
        if (!blank) return true;
    }
    return false;
}

std::ifstream open_input(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error(ErrorCode::ParseError, "cannot open " + path);
    }
    return in;
}

std::ofstream open_output(const std::string& path) {
    std::ofstream out(path);
    if (!out) {
        throw Error(ErrorCode::ParseError, "cannot write " + path);
    }
    return out;
}

}  // namespace

std::string format_full(double x) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), x, std::chars_format::general, 17);
    return std::string(buf, res.ptr);
}

Matrix read_matrix(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) {
        throw Error(ErrorCode::ParseError, "missing matrix header");
    }
    std::istringstream header(line);
    std::size_t rows = 0, cols = 0;
    if (!(header >> rows >> cols) || rows == 0 || cols == 0) {
        throw Error(ErrorCode::ParseError, "bad matrix header, expected \"rows cols\"");
    }
    Matrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        if (!next_content_line(in, line)) {
            throw Error(ErrorCode::ParseError, "matrix ends early");
        }
        std::istringstream row(line);
        for (std::size_t j = 0; j < cols; ++j) {
            if (!(row >> m(i, j))) {
                throw Error(ErrorCode::ParseError, "short matrix row");
            }
        }
        double extra;
        if (row >> extra) {
            throw Error(ErrorCode::ParseError, "extra values in matrix row");
        }
    }
    m.check_finite();
    return m;
}

Matrix read_matrix_file(const std::string& path) {
    auto in = open_input(path);
    return read_matrix(in);
}

void write_matrix(std::ostream& out, const Matrix& m) {
    out << m.rows() << ' ' << m.cols() << '\n';
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            if (j) out << ' ';
            out << format_full(m(i, j));
        }
        out << '\n';
    }
}

void write_matrix_file(const std::string& path, const Matrix& m) {
    auto out = open_output(path);
    write_matrix(out, m);
}

graphs::Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_content_line(in, line)) {
        throw Error(ErrorCode::ParseError, "missing edge-list header");
    }
    std::istringstream header(line);
    std::size_t n = 0, m = 0;
    if (!(header >> n >> m) || n == 0) {
        throw Error(ErrorCode::ParseError, "bad edge-list header, expected \"n m\"");
    }
    std::vector<graphs::Edge> edges;
    edges.reserve(m);
    for (std::size_t k = 0; k < m; ++k) {
        if (!next_content_line(in, line)) {
            throw Error(ErrorCode::ParseError, "edge list ends early");
        }
        std::istringstream edge(line);
        std::size_t i = 0, j = 0;
        if (!(edge >> i >> j) || i == 0 || j == 0) {
            throw Error(ErrorCode::ParseError, "bad edge line, expected \"i j\"");
        }
        edges.emplace_back(i, j);
    }
    return graphs::Graph(n, std::move(edges));
}

graphs::Graph read_graph_file(const std::string& path) {
    auto in = open_input(path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const graphs::Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [i, j] : g.edges()) {
        out << i << ' ' << j << '\n';
    }
}

void write_graph_file(const std::string& path, const graphs::Graph& g) {
    auto out = open_output(path);
    write_graph(out, g);
}

}  // namespace submaj::io
