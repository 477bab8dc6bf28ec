#pragma once

#include <vector>

#include "ferrers/diagram.hpp"

namespace ferrers {

// All partitions of total (weakly decreasing positive parts), largest part
// first: (n), (n-1,1), ..., (1,...,1).
std::vector<std::vector<int>> partitions_of(int total);

// All partitions with 1 <= Σλ <= max_cells, grouped by total ascending.
std::vector<std::vector<int>> partitions_up_to(int max_cells);

// Shapes whose graph has n rows and n columns: exactly n parts, largest
// part n.
std::vector<std::vector<int>> square_shapes(int n);

} // namespace ferrers
