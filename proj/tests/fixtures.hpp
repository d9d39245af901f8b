#ifndef JFRIEZE_TEST_FIXTURES_HPP
#define JFRIEZE_TEST_FIXTURES_HPP

// Frozen worked examples, transcribed cell by cell from the published diagrams.
// Each Cell is (row a, column b, value) of the Z x Z matrix picture.  Tables
// marked "anchored" use the published indexing; the others fix an arbitrary
// origin and are compared up to translation.

#include "jfrieze/matrix.hpp"

#include <vector>

namespace fixtures {

struct Cell {
    int a;
    int b;
    int v;
};

// SL(2) frieze of height 6, period 8 (origin arbitrary)
inline const std::vector<Cell> sl2_height6_strip = {
    {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}, {8, 8, 1},
    {9, 9, 1}, {10, 10, 1}, {11, 11, 1}, {12, 12, 1}, {13, 13, 1}, {14, 14, 1}, {15, 15, 1},
    {16, 16, 1}, {17, 17, 1}, {18, 18, 1}, {2, 1, 3}, {3, 2, 2}, {4, 3, 2}, {5, 4, 1}, {6, 5,
    4}, {7, 6, 3}, {8, 7, 1}, {9, 8, 2}, {10, 9, 3}, {11, 10, 2}, {12, 11, 2}, {13, 12, 1},
    {14, 13, 4}, {15, 14, 3}, {16, 15, 1}, {17, 16, 2}, {18, 17, 3}, {2, 0, 5}, {3, 1, 5}, {4,
    2, 3}, {5, 3, 1}, {6, 4, 3}, {7, 5, 11}, {8, 6, 2}, {9, 7, 1}, {10, 8, 5}, {11, 9, 5},
    {12, 10, 3}, {13, 11, 1}, {14, 12, 3}, {15, 13, 11}, {16, 14, 2}, {17, 15, 1}, {18, 16,
    5}, {19, 17, 5}, {3, 0, 8}, {4, 1, 7}, {5, 2, 1}, {6, 3, 2}, {7, 4, 8}, {8, 5, 7}, {9, 6,
    1}, {10, 7, 2}, {11, 8, 8}, {12, 9, 7}, {13, 10, 1}, {14, 11, 2}, {15, 12, 8}, {16, 13,
    7}, {17, 14, 1}, {18, 15, 2}, {19, 16, 8}, {3, -1, 3}, {4, 0, 11}, {5, 1, 2}, {6, 2, 1},
    {7, 3, 5}, {8, 4, 5}, {9, 5, 3}, {10, 6, 1}, {11, 7, 3}, {12, 8, 11}, {13, 9, 2}, {14, 10,
    1}, {15, 11, 5}, {16, 12, 5}, {17, 13, 3}, {18, 14, 1}, {19, 15, 3}, {20, 16, 11}, {4, -1,
    4}, {5, 0, 3}, {6, 1, 1}, {7, 2, 2}, {8, 3, 3}, {9, 4, 2}, {10, 5, 2}, {11, 6, 1}, {12, 7,
    4}, {13, 8, 3}, {14, 9, 1}, {15, 10, 2}, {16, 11, 3}, {17, 12, 2}, {18, 13, 2}, {19, 14,
    1}, {20, 15, 4}, {4, -2, 1}, {5, -1, 1}, {6, 0, 1}, {7, 1, 1}, {8, 2, 1}, {9, 3, 1}, {10,
    4, 1}, {11, 5, 1}, {12, 6, 1}, {13, 7, 1}, {14, 8, 1}, {15, 9, 1}, {16, 10, 1}, {17, 11,
    1}, {18, 12, 1}, {19, 13, 1}, {20, 14, 1}, {21, 15, 1}
};

// SL(3) frieze of height 5, period 8, rows/columns 1..14 (anchored)
inline const std::vector<Cell> sl3_height5_matrix = {
    {1, 1, 1}, {1, 2, 0}, {1, 3, 0}, {1, 4, 0}, {1, 5, 0}, {1, 6, 0}, {1, 7, 0}, {1, 8, 0},
    {1, 9, 0}, {1, 10, 0}, {1, 11, 0}, {1, 12, 0}, {1, 13, 0}, {1, 14, 0}, {2, 1, 3}, {2, 2,
    1}, {2, 3, 0}, {2, 4, 0}, {2, 5, 0}, {2, 6, 0}, {2, 7, 0}, {2, 8, 0}, {2, 9, 0}, {2, 10,
    0}, {2, 11, 0}, {2, 12, 0}, {2, 13, 0}, {2, 14, 0}, {3, 1, 6}, {3, 2, 3}, {3, 3, 1}, {3,
    4, 0}, {3, 5, 0}, {3, 6, 0}, {3, 7, 0}, {3, 8, 0}, {3, 9, 0}, {3, 10, 0}, {3, 11, 0}, {3,
    12, 0}, {3, 13, 0}, {3, 14, 0}, {4, 1, 7}, {4, 2, 5}, {4, 3, 3}, {4, 4, 1}, {4, 5, 0}, {4,
    6, 0}, {4, 7, 0}, {4, 8, 0}, {4, 9, 0}, {4, 10, 0}, {4, 11, 0}, {4, 12, 0}, {4, 13, 0},
    {4, 14, 0}, {5, 1, 4}, {5, 2, 3}, {5, 3, 2}, {5, 4, 1}, {5, 5, 1}, {5, 6, 0}, {5, 7, 0},
    {5, 8, 0}, {5, 9, 0}, {5, 10, 0}, {5, 11, 0}, {5, 12, 0}, {5, 13, 0}, {5, 14, 0}, {6, 1,
    1}, {6, 2, 2}, {6, 3, 4}, {6, 4, 7}, {6, 5, 18}, {6, 6, 1}, {6, 7, 0}, {6, 8, 0}, {6, 9,
    0}, {6, 10, 0}, {6, 11, 0}, {6, 12, 0}, {6, 13, 0}, {6, 14, 0}, {7, 1, 0}, {7, 2, 1}, {7,
    3, 3}, {7, 4, 6}, {7, 5, 16}, {7, 6, 1}, {7, 7, 1}, {7, 8, 0}, {7, 9, 0}, {7, 10, 0}, {7,
    11, 0}, {7, 12, 0}, {7, 13, 0}, {7, 14, 0}, {8, 1, 0}, {8, 2, 0}, {8, 3, 1}, {8, 4, 3},
    {8, 5, 9}, {8, 6, 1}, {8, 7, 5}, {8, 8, 1}, {8, 9, 0}, {8, 10, 0}, {8, 11, 0}, {8, 12, 0},
    {8, 13, 0}, {8, 14, 0}, {9, 1, 0}, {9, 2, 0}, {9, 3, 0}, {9, 4, 1}, {9, 5, 4}, {9, 6, 1},
    {9, 7, 8}, {9, 8, 2}, {9, 9, 1}, {9, 10, 0}, {9, 11, 0}, {9, 12, 0}, {9, 13, 0}, {9, 14,
    0}, {10, 1, 0}, {10, 2, 0}, {10, 3, 0}, {10, 4, 0}, {10, 5, 1}, {10, 6, 1}, {10, 7, 10},
    {10, 8, 3}, {10, 9, 3}, {10, 10, 1}, {10, 11, 0}, {10, 12, 0}, {10, 13, 0}, {10, 14, 0},
    {11, 1, 0}, {11, 2, 0}, {11, 3, 0}, {11, 4, 0}, {11, 5, 0}, {11, 6, 1}, {11, 7, 11}, {11,
    8, 4}, {11, 9, 6}, {11, 10, 3}, {11, 11, 1}, {11, 12, 0}, {11, 13, 0}, {11, 14, 0}, {12,
    1, 0}, {12, 2, 0}, {12, 3, 0}, {12, 4, 0}, {12, 5, 0}, {12, 6, 0}, {12, 7, 1}, {12, 8, 2},
    {12, 9, 7}, {12, 10, 5}, {12, 11, 3}, {12, 12, 1}, {12, 13, 0}, {12, 14, 0}, {13, 1, 0},
    {13, 2, 0}, {13, 3, 0}, {13, 4, 0}, {13, 5, 0}, {13, 6, 0}, {13, 7, 0}, {13, 8, 1}, {13,
    9, 4}, {13, 10, 3}, {13, 11, 2}, {13, 12, 1}, {13, 13, 1}, {13, 14, 0}, {14, 1, 0}, {14,
    2, 0}, {14, 3, 0}, {14, 4, 0}, {14, 5, 0}, {14, 6, 0}, {14, 7, 0}, {14, 8, 0}, {14, 9, 1},
    {14, 10, 2}, {14, 11, 4}, {14, 12, 7}, {14, 13, 18}, {14, 14, 1}
};

// 8-truncated dual of the SL(3) frieze above (origin arbitrary)
inline const std::vector<Cell> sl3_height5_dual_strip = {
    {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}, {8, 8, 1},
    {9, 9, 1}, {10, 10, 1}, {11, 11, 1}, {12, 12, 1}, {13, 13, 1}, {14, 14, 1}, {15, 15, 1},
    {16, 16, 1}, {17, 17, 1}, {18, 18, 1}, {2, 1, 3}, {3, 2, 3}, {4, 3, 3}, {5, 4, 1}, {6, 5,
    18}, {7, 6, 1}, {8, 7, 5}, {9, 8, 2}, {10, 9, 3}, {11, 10, 3}, {12, 11, 3}, {13, 12, 1},
    {14, 13, 18}, {15, 14, 1}, {16, 15, 5}, {17, 16, 2}, {18, 17, 3}, {2, 0, 3}, {3, 1, 3},
    {4, 2, 4}, {5, 3, 1}, {6, 4, 11}, {7, 5, 2}, {8, 6, 4}, {9, 7, 2}, {10, 8, 3}, {11, 9, 3},
    {12, 10, 4}, {13, 11, 1}, {14, 12, 11}, {15, 13, 2}, {16, 14, 4}, {17, 15, 2}, {18, 16,
    3}, {19, 17, 3}, {3, 0, 1}, {4, 1, 1}, {5, 2, 1}, {6, 3, 1}, {7, 4, 1}, {8, 5, 1}, {9, 6,
    1}, {10, 7, 1}, {11, 8, 1}, {12, 9, 1}, {13, 10, 1}, {14, 11, 1}, {15, 12, 1}, {16, 13,
    1}, {17, 14, 1}, {18, 15, 1}, {19, 16, 1}
};

// strip produced by the twist construction on the uniform 3x8 matrix (origin arbitrary)
inline const std::vector<Cell> sl3_twist_strip = {
    {3, 3, 1}, {4, 4, 1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}, {8, 8, 1}, {9, 9, 1}, {10, 10, 1},
    {11, 11, 1}, {12, 12, 1}, {13, 13, 1}, {14, 14, 1}, {15, 15, 1}, {16, 16, 1}, {17, 17, 1},
    {18, 18, 1}, {19, 19, 1}, {20, 20, 1}, {21, 21, 1}, {22, 22, 1}, {23, 23, 1}, {24, 24, 1},
    {25, 25, 1}, {26, 26, 1}, {3, 2, 18}, {4, 3, 1}, {5, 4, 5}, {6, 5, 2}, {7, 6, 3}, {8, 7,
    3}, {9, 8, 3}, {10, 9, 1}, {11, 10, 18}, {12, 11, 1}, {13, 12, 5}, {14, 13, 2}, {15, 14,
    3}, {16, 15, 3}, {17, 16, 3}, {18, 17, 1}, {19, 18, 18}, {20, 19, 1}, {21, 20, 5}, {22,
    21, 2}, {23, 22, 3}, {24, 23, 3}, {25, 24, 3}, {26, 25, 1}, {3, 1, 7}, {4, 2, 16}, {5, 3,
    1}, {6, 4, 8}, {7, 5, 3}, {8, 6, 6}, {9, 7, 5}, {10, 8, 2}, {11, 9, 7}, {12, 10, 16}, {13,
    11, 1}, {14, 12, 8}, {15, 13, 3}, {16, 14, 6}, {17, 15, 5}, {18, 16, 2}, {19, 17, 7}, {20,
    18, 16}, {21, 19, 1}, {22, 20, 8}, {23, 21, 3}, {24, 22, 6}, {25, 23, 5}, {26, 24, 2}, {3,
    0, 4}, {4, 1, 6}, {5, 2, 9}, {6, 3, 1}, {7, 4, 10}, {8, 5, 4}, {9, 6, 7}, {10, 7, 3}, {11,
    8, 4}, {12, 9, 6}, {13, 10, 9}, {14, 11, 1}, {15, 12, 10}, {16, 13, 4}, {17, 14, 7}, {18,
    15, 3}, {19, 16, 4}, {20, 17, 6}, {21, 18, 9}, {22, 19, 1}, {23, 20, 10}, {24, 21, 4},
    {25, 22, 7}, {26, 23, 3}, {3, -1, 2}, {4, 0, 3}, {5, 1, 3}, {6, 2, 4}, {7, 3, 1}, {8, 4,
    11}, {9, 5, 2}, {10, 6, 4}, {11, 7, 2}, {12, 8, 3}, {13, 9, 3}, {14, 10, 4}, {15, 11, 1},
    {16, 12, 11}, {17, 13, 2}, {18, 14, 4}, {19, 15, 2}, {20, 16, 3}, {21, 17, 3}, {22, 18,
    4}, {23, 19, 1}, {24, 20, 11}, {25, 21, 2}, {26, 22, 4}, {3, -2, 1}, {4, -1, 1}, {5, 0,
    1}, {6, 1, 1}, {7, 2, 1}, {8, 3, 1}, {9, 4, 1}, {10, 5, 1}, {11, 6, 1}, {12, 7, 1}, {13,
    8, 1}, {14, 9, 1}, {15, 10, 1}, {16, 11, 1}, {17, 12, 1}, {18, 13, 1}, {19, 14, 1}, {20,
    15, 1}, {21, 16, 1}, {22, 17, 1}, {23, 18, 1}, {24, 19, 1}, {25, 20, 1}, {26, 21, 1}
};

// 53635514-frieze built from its prefrieze skeleton (anchored: C_{1,1} at the marked circle)
inline const std::vector<Cell> juggler_53635514 = {
    {-3, -3, 1}, {-2, -2, 1}, {-1, -1, 1}, {0, 0, 1}, {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4,
    1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}, {8, 8, 1}, {9, 9, 1}, {10, 10, 1}, {11, 11, 1}, {12,
    12, 1}, {13, 13, 1}, {14, 14, 1}, {15, 15, 1}, {-2, -3, 5}, {-1, -2, 1}, {0, -1, 1}, {1,
    0, 3}, {2, 1, 2}, {3, 2, 1}, {4, 3, 5}, {5, 4, 1}, {6, 5, 5}, {7, 6, 1}, {8, 7, 1}, {9, 8,
    3}, {10, 9, 2}, {11, 10, 1}, {12, 11, 5}, {13, 12, 1}, {14, 13, 5}, {15, 14, 1}, {-2, -4,
    3}, {-1, -3, 2}, {0, -2, 0}, {1, -1, 0}, {2, 0, 5}, {3, 1, 1}, {4, 2, 3}, {5, 3, 2}, {6,
    4, 3}, {7, 5, 2}, {8, 6, 0}, {9, 7, 0}, {10, 8, 5}, {11, 9, 1}, {12, 10, 3}, {13, 11, 2},
    {14, 12, 3}, {15, 13, 2}, {-1, -4, 1}, {0, -3, 0}, {1, -2, -2}, {2, -1, 0}, {3, 0, 2}, {4,
    1, 1}, {5, 2, 1}, {6, 3, 1}, {7, 4, 1}, {8, 5, 0}, {9, 6, -2}, {10, 7, 0}, {11, 8, 2},
    {12, 9, 1}, {13, 10, 1}, {14, 11, 1}, {15, 12, 1}, {1, -3, -1}, {2, -2, -3}, {3, -1, 0},
    {4, 0, 1}, {5, 1, 0}, {6, 2, 0}, {7, 3, 0}, {8, 4, 0}, {9, 5, -1}, {10, 6, -3}, {11, 7,
    0}, {12, 8, 1}, {13, 9, 0}, {14, 10, 0}, {15, 11, 0}, {16, 12, 0}, {17, 13, -1}, {2, -3,
    -1}, {3, -2, -1}, {4, -1, 0}, {5, 0, 0}, {6, 1, -1}, {7, 2, 0}, {8, 3, 0}, {9, 4, 0}, {10,
    5, -1}, {11, 6, -1}, {12, 7, 0}, {13, 8, 0}, {14, 9, -1}, {1, -5, 1}, {2, -4, 0}, {3, -3,
    0}, {4, -2, 0}, {5, -1, 0}, {6, 0, 0}, {7, 1, 0}, {8, 2, 0}, {9, 3, 1}, {10, 4, 0}, {11,
    5, 0}, {12, 6, 0}, {13, 7, 0}, {14, 8, 0}, {15, 9, 0}, {16, 10, 0}, {17, 11, 1}
};

// dual of the 53635514-frieze, shape 23345357 (origin arbitrary)
inline const std::vector<Cell> juggler_23345357_dual_strip = {
    {1, 1, 1}, {2, 2, 1}, {3, 3, 1}, {4, 4, 1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}, {8, 8, 1},
    {9, 9, 1}, {10, 10, 1}, {11, 11, 1}, {12, 12, 1}, {13, 13, 1}, {14, 14, 1}, {15, 15, 1},
    {16, 16, 1}, {17, 17, 1}, {18, 18, 1}, {19, 19, 1}, {2, 1, 5}, {3, 2, 1}, {4, 3, 5}, {5,
    4, 1}, {6, 5, 1}, {7, 6, 3}, {8, 7, 2}, {9, 8, 1}, {10, 9, 5}, {11, 10, 1}, {12, 11, 5},
    {13, 12, 1}, {14, 13, 1}, {15, 14, 3}, {16, 15, 2}, {17, 16, 1}, {18, 17, 5}, {19, 18, 1},
    {2, 0, 2}, {3, 1, 3}, {4, 2, 2}, {5, 3, 3}, {6, 4, 1}, {7, 5, 3}, {8, 6, 1}, {9, 7, 1},
    {10, 8, 2}, {11, 9, 3}, {12, 10, 2}, {13, 11, 3}, {14, 12, 1}, {15, 13, 3}, {16, 14, 1},
    {17, 15, 1}, {18, 16, 2}, {19, 17, 3}, {20, 18, 2}, {3, 0, 1}, {4, 1, 1}, {5, 2, 1}, {6,
    3, 3}, {7, 4, 1}, {8, 5, 1}, {9, 6, 0}, {10, 7, 0}, {11, 8, 1}, {12, 9, 1}, {13, 10, 1},
    {14, 11, 3}, {15, 12, 1}, {16, 13, 1}, {17, 14, 0}, {18, 15, 0}, {19, 16, 1}, {20, 17, 1},
    {6, 2, 1}, {7, 3, 0}, {8, 4, 0}, {9, 5, 0}, {10, 6, -1}, {11, 7, 0}, {12, 8, 0}, {13, 9,
    0}, {14, 10, 1}, {15, 11, 0}, {16, 12, 0}, {17, 13, 0}, {18, 14, -1}, {8, 3, -1}, {9, 4,
    0}, {10, 5, -1}, {11, 6, 0}, {12, 7, 0}, {13, 8, 0}, {14, 9, 0}, {15, 10, 0}, {16, 11,
    -1}, {17, 12, 0}, {18, 13, -1}, {5, -2, -1}, {6, -1, 0}, {7, 0, 0}, {8, 1, 0}, {9, 2, 0},
    {10, 3, 0}, {11, 4, 0}, {12, 5, 0}, {13, 6, -1}, {14, 7, 0}, {15, 8, 0}, {16, 9, 0}, {17,
    10, 0}, {18, 11, 0}, {19, 12, 0}, {20, 13, 0}, {21, 14, -1}
};

// twist construction output for the 4x8 matrix of shape 23345357 (origin arbitrary)
inline const std::vector<Cell> juggler_twist_strip = {
    {3, 3, 1}, {4, 4, 1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}, {8, 8, 1}, {9, 9, 1}, {10, 10, 1},
    {11, 11, 1}, {12, 12, 1}, {13, 13, 1}, {14, 14, 1}, {15, 15, 1}, {16, 16, 1}, {17, 17, 1},
    {18, 18, 1}, {19, 19, 1}, {20, 20, 1}, {21, 21, 1}, {22, 22, 1}, {23, 23, 1}, {24, 24, 1},
    {25, 25, 1}, {26, 26, 1}, {3, 2, 3}, {4, 3, 2}, {5, 4, 1}, {6, 5, 5}, {7, 6, 1}, {8, 7,
    5}, {9, 8, 1}, {10, 9, 1}, {11, 10, 3}, {12, 11, 2}, {13, 12, 1}, {14, 13, 5}, {15, 14,
    1}, {16, 15, 5}, {17, 16, 1}, {18, 17, 1}, {19, 18, 3}, {20, 19, 2}, {21, 20, 1}, {22, 21,
    5}, {23, 22, 1}, {24, 23, 5}, {25, 24, 1}, {26, 25, 1}, {4, 2, 5}, {5, 3, 1}, {6, 4, 3},
    {7, 5, 2}, {8, 6, 3}, {9, 7, 2}, {10, 8, 0}, {11, 9, 0}, {12, 10, 5}, {13, 11, 1}, {14,
    12, 3}, {15, 13, 2}, {16, 14, 3}, {17, 15, 2}, {18, 16, 0}, {19, 17, 0}, {20, 18, 5}, {21,
    19, 1}, {22, 20, 3}, {23, 21, 2}, {24, 22, 3}, {25, 23, 2}, {3, 0, -2}, {4, 1, 0}, {5, 2,
    2}, {6, 3, 1}, {7, 4, 1}, {8, 5, 1}, {9, 6, 1}, {10, 7, 0}, {11, 8, -2}, {12, 9, 0}, {13,
    10, 2}, {14, 11, 1}, {15, 12, 1}, {16, 13, 1}, {17, 14, 1}, {18, 15, 0}, {19, 16, -2},
    {20, 17, 0}, {21, 18, 2}, {22, 19, 1}, {23, 20, 1}, {24, 21, 1}, {25, 22, 1}, {3, -1, -1},
    {4, 0, -3}, {5, 1, 0}, {6, 2, 1}, {7, 3, 0}, {8, 4, 0}, {9, 5, 0}, {10, 6, 0}, {11, 7,
    -1}, {12, 8, -3}, {13, 9, 0}, {14, 10, 1}, {15, 11, 0}, {16, 12, 0}, {17, 13, 0}, {18, 14,
    0}, {19, 15, -1}, {20, 16, -3}, {21, 17, 0}, {22, 18, 1}, {4, -1, -1}, {5, 0, -1}, {6, 1,
    0}, {7, 2, 0}, {8, 3, -1}, {9, 4, 0}, {10, 5, 0}, {11, 6, 0}, {12, 7, -1}, {13, 8, -1},
    {14, 9, 0}, {15, 10, 0}, {16, 11, -1}, {17, 12, 0}, {18, 13, 0}, {19, 14, 0}, {20, 15,
    -1}, {21, 16, -1}, {22, 17, 0}, {23, 18, 0}, {24, 19, -1}, {11, 5, 1}, {12, 6, 0}, {13, 7,
    0}, {14, 8, 0}, {15, 9, 0}, {16, 10, 0}, {17, 11, 0}, {18, 12, 0}, {19, 13, 1}, {20, 14,
    0}, {21, 15, 0}, {22, 16, 0}, {23, 17, 0}, {24, 18, 0}, {25, 19, 0}, {26, 20, 0}, {27, 21,
    1}
};

// twist construction output for the inverse twist of the positive complement (origin arbitrary)
inline const std::vector<Cell> juggler_dual_twist_strip = {
    {3, 3, 1}, {4, 4, 1}, {5, 5, 1}, {6, 6, 1}, {7, 7, 1}, {8, 8, 1}, {9, 9, 1}, {10, 10, 1},
    {11, 11, 1}, {12, 12, 1}, {13, 13, 1}, {14, 14, 1}, {15, 15, 1}, {16, 16, 1}, {17, 17, 1},
    {18, 18, 1}, {19, 19, 1}, {20, 20, 1}, {21, 21, 1}, {22, 22, 1}, {23, 23, 1}, {24, 24, 1},
    {25, 25, 1}, {26, 26, 1}, {3, 2, 3}, {4, 3, 2}, {5, 4, 1}, {6, 5, 5}, {7, 6, 1}, {8, 7,
    5}, {9, 8, 1}, {10, 9, 1}, {11, 10, 3}, {12, 11, 2}, {13, 12, 1}, {14, 13, 5}, {15, 14,
    1}, {16, 15, 5}, {17, 16, 1}, {18, 17, 1}, {19, 18, 3}, {20, 19, 2}, {21, 20, 1}, {22, 21,
    5}, {23, 22, 1}, {24, 23, 5}, {25, 24, 1}, {26, 25, 1}, {3, 1, 3}, {4, 2, 1}, {5, 3, 1},
    {6, 4, 2}, {7, 5, 3}, {8, 6, 2}, {9, 7, 3}, {10, 8, 1}, {11, 9, 3}, {12, 10, 1}, {13, 11,
    1}, {14, 12, 2}, {15, 13, 3}, {16, 14, 2}, {17, 15, 3}, {18, 16, 1}, {19, 17, 3}, {20, 18,
    1}, {21, 19, 1}, {22, 20, 2}, {23, 21, 3}, {24, 22, 2}, {25, 23, 3}, {26, 24, 1}, {3, 0,
    1}, {4, 1, 1}, {5, 2, 0}, {6, 3, 0}, {7, 4, 1}, {8, 5, 1}, {9, 6, 1}, {10, 7, 3}, {11, 8,
    1}, {12, 9, 1}, {13, 10, 0}, {14, 11, 0}, {15, 12, 1}, {16, 13, 1}, {17, 14, 1}, {18, 15,
    3}, {19, 16, 1}, {20, 17, 1}, {21, 18, 0}, {22, 19, 0}, {23, 20, 1}, {24, 21, 1}, {25, 22,
    1}, {26, 23, 3}, {6, 2, -1}, {7, 3, 0}, {8, 4, 0}, {9, 5, 0}, {10, 6, 1}, {11, 7, 0}, {12,
    8, 0}, {13, 9, 0}, {14, 10, -1}, {15, 11, 0}, {16, 12, 0}, {17, 13, 0}, {18, 14, 1}, {19,
    15, 0}, {20, 16, 0}, {21, 17, 0}, {22, 18, -1}, {23, 19, 0}, {24, 20, 0}, {25, 21, 0},
    {26, 22, 1}, {4, -1, -1}, {5, 0, 0}, {6, 1, -1}, {7, 2, 0}, {8, 3, 0}, {9, 4, 0}, {10, 5,
    0}, {11, 6, 0}, {12, 7, -1}, {13, 8, 0}, {14, 9, -1}, {15, 10, 0}, {16, 11, 0}, {17, 12,
    0}, {18, 13, 0}, {19, 14, 0}, {20, 15, -1}, {21, 16, 0}, {22, 17, -1}, {17, 10, -1}, {18,
    11, 0}, {19, 12, 0}, {20, 13, 0}, {21, 14, 0}, {22, 15, 0}, {23, 16, 0}, {24, 17, 0}, {25,
    18, -1}
};

// 3x8 consecutively unimodular matrix, its twist and the product twist^T * A.
inline const jfrieze::Matrix sl3_matrix{
    {1, 11, 4, 6, 3, 1, 0, 0}, {0, 1, 2, 7, 5, 3, 1, 0}, {0, 0, 1, 4, 3, 2, 1, 1}};
inline const jfrieze::Matrix sl3_matrix_twist{
    {1, 1, 1, 1, 1, 1, 0, 0}, {-11, -10, -6, -3, -1, 0, 1, 0}, {18, 16, 9, 4, 1, 0, 0, 1}};
inline const jfrieze::Matrix sl3_matrix_product{
    {1, 0, 0, 1, 2, 4, 7, 18}, {1, 1, 0, 0, 1, 3, 6, 16}, {1, 5, 1, 0, 0, 1, 3, 9},
    {1, 8, 2, 1, 0, 0, 1, 4},  {1, 10, 3, 3, 1, 0, 0, 1}, {1, 11, 4, 6, 3, 1, 0, 0},
    {0, 1, 2, 7, 5, 3, 1, 0},  {0, 0, 1, 4, 3, 2, 1, 1}};

// 4x8 matrix of shape 23345357 and its twist and product.
inline const jfrieze::Matrix juggler_matrix{
    {1, 0, -1, 0, 1, 2, 0, -3}, {0, 1, 2, 0, -1, -1, 0, 1}, {0, 0, 0, 1, 2, 1, 0, -1}, {0, 0, 0, 0, 0, 0, 1, 1}};
inline const jfrieze::Matrix juggler_matrix_twist{
    {1, 2, 1, 1, 0, -1, 0, 0}, {0, 1, 1, 3, 1, 0, 0, 0}, {0, 0, 0, 1, 1, 3, 1, 0}, {0, 0, 0, 0, 0, 0, 1, 1}};
inline const jfrieze::Matrix juggler_matrix_product{
    {1, 0, -1, 0, 1, 2, 0, -3}, {2, 1, 0, 0, 1, 3, 0, -5}, {1, 1, 1, 0, 0, 1, 0, -2},
    {1, 3, 5, 1, 0, 0, 0, -1},  {0, 1, 2, 1, 1, 0, 0, 0},  {-1, 0, 1, 3, 5, 1, 0, 0},
    {0, 0, 0, 1, 2, 1, 1, 0},   {0, 0, 0, 0, 0, 0, 1, 1}};

// Kernel of juggler_matrix, its positive complement, and the inverse twist of that.
inline const jfrieze::Matrix juggler_kernel{
    {1, -2, 1, 0, 0, 0, 0, 0}, {-1, 1, 0, -2, 1, 0, 0, 0}, {-2, 1, 0, -1, 0, 1, 0, 0}, {3, -1, 0, 1, 0, 0, -1, 1}};
inline const jfrieze::Matrix juggler_complement{
    {1, 2, 1, 0, 0, 0, 0, 0}, {-1, -1, 0, 2, 1, 0, 0, 0}, {2, 1, 0, -1, 0, 1, 0, 0}, {-3, -1, 0, 1, 0, 0, 1, 1}};
inline const jfrieze::Matrix juggler_complement_inverse_twist{
    {1, 1, 1, 0, 0, 0, 0, 0}, {0, 1, 3, 1, 1, 0, 0, 0}, {0, 0, 1, 2, 5, 1, 0, 0}, {0, 0, 0, 1, 3, 1, 1, 1}};

// Landing-schedule residues L_a, a = 1..8, for 23345357.
inline const std::vector<std::vector<long>> juggler_schedules = {
    {1, 2, 4, 7}, {2, 3, 4, 7}, {3, 4, 5, 7}, {4, 5, 6, 7}, {5, 6, 7, 8}, {2, 6, 7, 8}, {1, 2, 7, 8}, {1, 2, 4, 8}};

// One period of two solutions of C x = 0 for the anchored SL(3) frieze, up to translation.
inline const std::vector<long> sl3_solution_a = {0, 1, -3, 3, -1, 0, 0, 0};
inline const std::vector<long> sl3_solution_b = {0, 0, 1, -4, 3, -1, 0, 0};
// The second row as printed has the magnitudes 4 and 3 swapped; this is the sequence
// obtained from column 2 of the printed dual.
inline const std::vector<long> sl3_solution_b_corrected = {0, 0, 1, -3, 4, -1, 0, 0};

}  // namespace fixtures

#endif
