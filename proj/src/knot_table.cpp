#include <alexlab/knot.hpp>

namespace alexlab {

namespace {

// Seifert matrices: torus knots T(2, 2g+1) use -1 on the diagonal and 1 above
// it; connected sums are block diagonal, the mirror block being -V^T.
const std::vector<KnotEntry> kTable = {
    {"0_1", "s1", {}, {1}},
    {"3_1", "s1 s1 s1", {{-1, 1}, {0, -1}}, {1, -1, 1}},
    {"4_1", "s1 S2 s1 S2", {{1, 1}, {0, -1}}, {1, -3, 1}},
    {"5_1", "s1 s1 s1 s1 s1", {{-1, 1, 0, 0}, {0, -1, 1, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}, {1, -1, 1, -1, 1}},
    {"5_2", "s1 s1 s1 s2 S1 s2", {{-1, 1}, {0, -2}}, {2, -3, 2}},
    {"6_1", "s1 s1 s2 S1 S3 s2 S3", {{-1, 1}, {0, 2}}, {2, -5, 2}},
    {"granny", "s1 s1 s1 s2 s2 s2", {{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, -1, 1}, {0, 0, 0, -1}}, {1, -2, 3, -2, 1}},
    {"square", "s1 s1 s1 S2 S2 S2", {{-1, 1, 0, 0}, {0, -1, 0, 0}, {0, 0, 1, 0}, {0, 0, -1, 1}}, {1, -2, 3, -2, 1}},
};

}  // namespace

std::span<const KnotEntry> knot_table() { return kTable; }

}  // namespace alexlab
