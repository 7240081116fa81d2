#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "bezfit/bezier.hpp"

namespace bezfit {

// Line-oriented curve description: an optional "continuity:" header, then
// one or more "segment" blocks with dimension/degree/weights/points.
// A missing weights line means all weights are 1 (a polynomial segment).
struct CurveDocument {
    std::vector<RationalBezierCurve> segments;
    int continuity = 0;

    CompositeCurve to_composite() const;

    static CurveDocument from_composite(const CompositeCurve& c);
    static CurveDocument from_segments(const std::vector<BezierCurve>& segs, int continuity = 0);
};

class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

CurveDocument parse_curve_document(std::istream& in);
CurveDocument parse_curve_document(const std::string& text);
CurveDocument load_curve_document(const std::string& path);

// Decimal serialization with 17 significant digits; read-back is bit exact.
std::string write_curve_document(const CurveDocument& doc);

std::string format_full(double x);

}  // namespace bezfit
