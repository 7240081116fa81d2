#pragma once

// Test curves: the two-segment "starling" composite and the two closed
// comparison curves used across the suites.

#include "bezfit/bezier.hpp"

namespace fixtures {

inline bezfit::RationalBezierCurve starling_segment1() {
    return bezfit::RationalBezierCurve(
        {{23, 57}, {-13, 43}, {29, 58}, {44, 48}, {30, 42}, {13, 44}, {-2, 77}, {42, 83}, {80, 1}},
        {1, 4, 3, 1, 5, 4, 7, 6, 1});
}

inline bezfit::RationalBezierCurve starling_segment2() {
    return bezfit::RationalBezierCurve(
        {{80, 1}, {14, 4}, {3, 54}, {42, 54}, {51, 42}, {36, 49}, {66, 12}, {36, 2}, {47, 3}},
        {1, 1, 4, 4, 2, 3, 3, 7, 8});
}

inline bezfit::CompositeCurve starling(int continuity = 0) {
    return bezfit::CompositeCurve{{starling_segment1(), starling_segment2()}, continuity};
}

inline bezfit::RationalBezierCurve closed_degree8() {
    return bezfit::RationalBezierCurve(
        {{14, 1}, {34, 25}, {40, 38}, {-12, 24}, {5, 21}, {26, 7}, {18, 41}, {-13, 34}, {14, 1}},
        {1, 3, 3, 4, 1, 7, 5, 3, 1});
}

inline bezfit::RationalBezierCurve closed_degree9() {
    return bezfit::RationalBezierCurve({{17, 12},
                                        {32, 34},
                                        {-23, 24},
                                        {33, 62},
                                        {-23, 15},
                                        {25, 3},
                                        {30, -2},
                                        {-5, -8},
                                        {-5, 15},
                                        {11, 8}},
                                       {1, 2, 3, 6, 4, 5, 3, 4, 2, 1});
}

}  // namespace fixtures
