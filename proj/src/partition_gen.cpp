#include "ferrers/partition_gen.hpp"

namespace ferrers {

namespace {

void extend(std::vector<std::vector<int>>& out, std::vector<int>& prefix, int remaining, int cap) {
    if (remaining == 0) {
        out.push_back(prefix);
        return;
    }
    for (int part = std::min(remaining, cap); part >= 1; --part) {
        prefix.push_back(part);
        extend(out, prefix, remaining - part, part);
        prefix.pop_back();
    }
}

} // namespace

std::vector<std::vector<int>> partitions_of(int total) {
    require(total >= 1, "partition total must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> prefix;
    extend(out, prefix, total, total);
    return out;
}

std::vector<std::vector<int>> partitions_up_to(int max_cells) {
    require(max_cells >= 1, "cell bound must be >= 1");
    std::vector<std::vector<int>> out;
    for (int total = 1; total <= max_cells; ++total) {
        auto part = partitions_of(total);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

std::vector<std::vector<int>> square_shapes(int n) {
    require(n >= 1, "side must be >= 1");
    std::vector<std::vector<int>> out;
    std::vector<int> shape{n};
    auto rec = [&](auto&& self, int row, int cap) -> void {
        if (row == n) {
            out.push_back(shape);
            return;
        }
        for (int len = cap; len >= 1; --len) {
            shape.push_back(len);
            self(self, row + 1, len);
            shape.pop_back();
        }
    };
    rec(rec, 1, n);
    return out;
}

} // namespace ferrers
