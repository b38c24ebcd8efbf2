#pragma once

// Worked JOFs with their expected component sets.

#include <vector>

#include "addsys/factorisation.hpp"

namespace fixtures {

using addsys::Int;
using addsys::Jof;
using Parts = std::vector<std::vector<Int>>;

inline const Jof kE1a{{{1, 5}, {2, 2}, {1, 3}, {3, 3}, {2, 2}, {3, 2}, {2, 2}}, {15, 8, 6}};
inline const Jof kE1b{{{1, 5}, {3, 3}, {2, 2}, {3, 2}, {2, 2}, {1, 3}, {2, 2}}, {15, 8, 6}};
inline const Jof kE2{{{1, 2}, {3, 3}, {2, 2}, {3, 2}, {2, 2}, {1, 7}, {2, 2}}, {14, 8, 6}};
inline const Jof kE3{{{1, 5}, {2, 7}, {3, 3}, {1, 3}, {3, 3}}, {15, 7, 9}};
inline const Jof kE4{{{1, 7}, {2, 4}, {5, 2}, {3, 2}, {4, 2}, {2, 5}, {4, 9}, {3, 3}, {1, 4}, {5, 3}, {3, 5}, {5, 2}},
                     {28, 20, 30, 18, 12}};

inline const Parts kE1aParts{{0, 1, 2, 3, 4, 10, 11, 12, 13, 14, 20, 21, 22, 23, 24},
                             {0, 5, 90, 95, 360, 365, 450, 455},
                             {0, 30, 60, 180, 210, 240}};
inline const Parts kE1bParts{{0, 1, 2, 3, 4, 120, 121, 122, 123, 124, 240, 241, 242, 243, 244},
                             {0, 15, 60, 75, 360, 375, 420, 435},
                             {0, 5, 10, 30, 35, 40}};
inline const Parts kE2SumParts{{0, 1, 48, 49, 96, 97, 144, 145, 192, 193, 240, 241, 288, 289},
                               {0, 6, 24, 30, 336, 342, 360, 366},
                               {0, 2, 4, 12, 14, 16}};
inline const Parts kE2Sds{{1, 95, 97, 191, 193, 287, 289}, {306, 318, 354, 366}, {8, 12, 16}};
inline const Parts kE3SumParts{{0, 1, 2, 3, 4, 105, 106, 107, 108, 109, 210, 211, 212, 213, 214},
                               {0, 5, 10, 15, 20, 25, 30},
                               {0, 35, 70, 315, 350, 385, 630, 665, 700}};
inline const Parts kE3Sds{{1, 2, 103, 104, 105, 106, 107}, {5, 10, 15}, {35, 280, 315, 350}};
inline const Parts kE4Parts{
    {0,     1,     2,     3,     4,     5,     6,     30240, 30241, 30242, 30243, 30244, 30245, 30246,
     60480, 60481, 60482, 60483, 60484, 60485, 60486, 90720, 90721, 90722, 90723, 90724, 90725, 90726},
    {0, 7, 14, 21, 224, 231, 238, 245, 448, 455, 462, 469, 672, 679, 686, 693, 896, 903, 910, 917},
    {0,       56,      10080,   10136,   20160,   20216,   362880,  362936,  372960,  373016,
     383040,  383096,  725760,  725816,  735840,  735896,  745920,  745976,  1088640, 1088696,
     1098720, 1098776, 1108800, 1108856, 1451520, 1451576, 1461600, 1461656, 1471680, 1471736},
    {0, 112, 1120, 1232, 2240, 2352, 3360, 3472, 4480, 4592, 5600, 5712, 6720, 6832, 7840, 7952, 8960, 9072},
    {0, 28, 120960, 120988, 241920, 241948, 1814400, 1814428, 1935360, 1935388, 2056320, 2056348}};

}  // namespace fixtures
