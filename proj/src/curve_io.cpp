#include "bezfit/curve_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace bezfit {

namespace {

std::string strip(const std::string& s) {
    const auto a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    const auto b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

std::vector<double> parse_numbers(const std::string& s, int line) {
    std::istringstream is(s);
    std::vector<double> out;
    double x;
    while (is >> x) out.push_back(x);
    if (!is.eof()) throw ParseError(line, "malformed number in '" + s + "'");
    return out;
}

struct PendingSegment {
    int dimension = -1;
    int degree = -1;
    std::vector<double> weights;
    std::vector<Point> points;
    int start_line = 0;
};

RationalBezierCurve finish(PendingSegment& seg, int line) {
    if (seg.degree < 0) throw ParseError(seg.start_line, "segment is missing a 'degree:' field");
    if (seg.dimension < 0) throw ParseError(seg.start_line, "segment is missing a 'dimension:' field");
    if (static_cast<int>(seg.points.size()) != seg.degree + 1)
        throw ParseError(line, "segment has " + std::to_string(seg.points.size()) + " points, expected " +
                                   std::to_string(seg.degree + 1));
    if (seg.weights.empty()) seg.weights.assign(seg.degree + 1, 1.0);
    if (static_cast<int>(seg.weights.size()) != seg.degree + 1)
        throw ParseError(seg.start_line, "weight count does not match degree + 1");
    try {
        return RationalBezierCurve(std::move(seg.points), std::move(seg.weights));
    } catch (const std::invalid_argument& e) {
        throw ParseError(seg.start_line, e.what());
    }
}

}  // namespace

CompositeCurve CurveDocument::to_composite() const {
    return CompositeCurve{segments, continuity};
}

CurveDocument CurveDocument::from_composite(const CompositeCurve& c) {
    return CurveDocument{c.segments, c.continuity_order};
}

CurveDocument CurveDocument::from_segments(const std::vector<BezierCurve>& segs, int continuity) {
    CurveDocument doc;
    doc.continuity = continuity;
    for (const auto& s : segs) doc.segments.push_back(RationalBezierCurve::from_polynomial(s));
    return doc;
}

CurveDocument parse_curve_document(std::istream& in) {
    CurveDocument doc;
    PendingSegment seg;
    bool in_segment = false;
    bool in_points = false;
    std::string raw;
    int line = 0;
    while (std::getline(in, raw)) {
        ++line;
        std::string s = raw;
        if (const auto hash = s.find('#'); hash != std::string::npos) s.erase(hash);
        s = strip(s);
        if (s.empty()) continue;

        if (s == "segment") {
            if (in_segment) doc.segments.push_back(finish(seg, line));
            seg = PendingSegment{};
            seg.start_line = line;
            in_segment = true;
            in_points = false;
            continue;
        }
        if (const auto colon = s.find(':'); colon != std::string::npos) {
            const std::string key = strip(s.substr(0, colon));
            const std::string val = strip(s.substr(colon + 1));
            if (key == "continuity" && !in_segment) {
                doc.continuity = std::stoi(val);
                continue;
            }
            if (!in_segment) throw ParseError(line, "field '" + key + "' outside a segment block");
            in_points = false;
            if (key == "dimension") seg.dimension = std::stoi(val);
            else if (key == "degree") seg.degree = std::stoi(val);
            else if (key == "weights") seg.weights = parse_numbers(val, line);
            else if (key == "points") in_points = true;
            else throw ParseError(line, "unknown field '" + key + "'");
            continue;
        }
        if (!in_segment || !in_points) throw ParseError(line, "unexpected data row '" + s + "'");
        std::vector<double> row = parse_numbers(s, line);
        if (seg.dimension >= 0 && static_cast<int>(row.size()) != seg.dimension)
            throw ParseError(line, "point has " + std::to_string(row.size()) + " coordinates, expected " +
                                       std::to_string(seg.dimension));
        seg.points.push_back(std::move(row));
    }
    if (in_segment) doc.segments.push_back(finish(seg, line));
    if (doc.segments.empty()) throw ParseError(line, "document contains no segments");
    return doc;
}

CurveDocument parse_curve_document(const std::string& text) {
    std::istringstream is(text);
    return parse_curve_document(is);
}

CurveDocument load_curve_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open curve file: " + path);
    return parse_curve_document(in);
}

std::string format_full(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

std::string write_curve_document(const CurveDocument& doc) {
    std::ostringstream os;
    if (doc.continuity != 0) os << "continuity: " << doc.continuity << "\n";
    for (const auto& seg : doc.segments) {
        os << "segment\n";
        os << "dimension: " << seg.dimension() << "\n";
        os << "degree: " << seg.degree() << "\n";
        bool unit = true;
        for (double w : seg.weights) unit = unit && w == 1.0;
        if (!unit) {
            os << "weights:";
            for (double w : seg.weights) os << ' ' << format_full(w);
            os << "\n";
        }
        os << "points:\n";
        for (const auto& p : seg.control_points) {
            for (std::size_t c = 0; c < p.size(); ++c) os << (c ? " " : "") << format_full(p[c]);
            os << "\n";
        }
    }
    return os.str();
}

}  // namespace bezfit
