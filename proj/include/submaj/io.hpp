#pragma once

#include <iosfwd>
#include <string>

#include "submaj/graph.hpp"
#include "submaj/matrix.hpp"

namespace submaj::io {

// Matrix text format: first line "rows cols", then one row per line of
// whitespace-separated decimals. Lines starting with '#' are comments.
Matrix read_matrix(std::istream& in);
Matrix read_matrix_file(const std::string& path);
void write_matrix(std::ostream& out, const Matrix& m);
void write_matrix_file(const std::string& path, const Matrix& m);

// Edge-list format: first line "n m", then m lines "i j" with 1-based
// vertex indices. Input edge order is arbitrary; edges are canonicalized
// on load.
graphs::Graph read_graph(std::istream& in);
graphs::Graph read_graph_file(const std::string& path);
void write_graph(std::ostream& out, const graphs::Graph& g);
void write_graph_file(const std::string& path, const graphs::Graph& g);

// 17 significant digits: lossless decimal round-trip for doubles.
std::string format_full(double x);

}  // namespace submaj::io
