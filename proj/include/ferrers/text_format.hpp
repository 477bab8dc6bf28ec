#pragma once

#include <string>
#include <vector>

#include "ferrers/bigint.hpp"
#include "ferrers/diagram.hpp"
#include "ferrers/hamiltonian.hpp"
#include "ferrers/spanning.hpp"

namespace ferrers::text {

// Plain-text object formats, all 1-based and whitespace-insensitive to parse:
//   shape          6,5,5,2
//   path           r5 c2 r4 c3 r2 c1 r3 c4 r1 c5
//   placement      5,1;4,2;2,3;3,4;1,5          (row,col pairs)
//   configuration  R=2,3;3,2;4,2;C=1,4;2,3;4,2  (R pairs for rows 2..m,
//                                                C pairs for columns 2..n)
//   tree           1,3;1,4;2,2                  (edge pairs)
//   weights        1,2,3
// Printing any parsed object re-parses to an equal value.

std::vector<int> parse_shape(const std::string& s);
std::string format_shape(const std::vector<int>& lengths);

HamiltonianPath parse_path(const std::string& s);
std::string format_path(const HamiltonianPath& p);

RookPlacement parse_placement(const std::string& s);
std::string format_placement(const RookPlacement& p); // sorted by row
// Squares listed by the given row order (one square per row expected); used
// to print a placement in the row order of an associated path.
std::string format_placement(const RookPlacement& p, const std::vector<int>& row_order);

RcConfiguration parse_config(const std::string& s, const Diagram& d);
std::string format_config(const RcConfiguration& cfg); // R by row, C by column

SpanningTree parse_tree(const std::string& s);
std::string format_tree(const SpanningTree& t);

std::vector<BigInt> parse_weights(const std::string& s);
std::string format_weights(const std::vector<BigInt>& w);

} // namespace ferrers::text
