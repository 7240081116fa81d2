// Command-line front end: approximate rational Bezier curves by polynomial
// ones, compare against the degree-elevation and progressive-iteration
// baselines, and emit curve documents / CSV reports / SVG overlays.

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bezfit/approximator.hpp"
#include "bezfit/baselines.hpp"
#include "bezfit/chebyshev.hpp"
#include "bezfit/curve_io.hpp"
#include "bezfit/metrics.hpp"
#include "bezfit/svg.hpp"

namespace {

constexpr int kExitParse = 2;
constexpr int kExitValidation = 3;
constexpr int kExitNumerical = 4;

struct Options {
    std::string input;
    std::string method = "dual";
    std::vector<int> degrees{10};
    int k = 1;
    int l = 1;
    double alpha = 0.0;
    double beta = 0.0;
    double eps = 1e-12;
    std::vector<double> subdivide;
    double lu_lambda = 1.0;
    int lu_iters = 100;
    std::string lu_nodes = "uniform";
    int samples = 10000;
    std::string svg_path;
    std::string out_path;
    // compare-only
    std::vector<std::string> methods{"dual", "huang", "lu"};
    std::vector<int> lu_iter_list{25, 50, 75, 100};
};

void add_common_flags(CLI::App* cmd, Options& opt) {
    cmd->add_option("input", opt.input, "curve document to read")->required();
    cmd->add_option("--k", opt.k, "left constraint order")->envname("BEZFIT_K");
    cmd->add_option("--l", opt.l, "right constraint order")->envname("BEZFIT_L");
    cmd->add_option("--alpha", opt.alpha, "Jacobi exponent at t=1")->envname("BEZFIT_ALPHA");
    cmd->add_option("--beta", opt.beta, "Jacobi exponent at t=0")->envname("BEZFIT_BETA");
    cmd->add_option("--eps", opt.eps, "quadrature tolerance")->envname("BEZFIT_EPS");
    cmd->add_option("--samples", opt.samples, "sample count for e_inf")->envname("BEZFIT_SAMPLES");
    cmd->add_option("--lu-lambda", opt.lu_lambda, "Lu step factor")->envname("BEZFIT_LU_LAMBDA");
    cmd->add_option("--lu-nodes", opt.lu_nodes, "Lu node distribution: uniform|chebyshev")
        ->check(CLI::IsMember({"uniform", "chebyshev"}))
        ->envname("BEZFIT_LU_NODES");
    cmd->add_option("--out", opt.out_path, "output file path (default: stdout)");
}

std::vector<double> lu_nodes_for(const Options& opt, int m) {
    return opt.lu_nodes == "chebyshev" ? bezfit::lu_chebyshev_nodes(m) : bezfit::lu_uniform_nodes(m);
}

void write_text(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << text;
}

void print_report(std::ostream& os, const std::string& method, int piece, int degree,
                  const bezfit::ErrorReport& rep, int cheb_order, double seconds) {
    os << "method: " << method << "\n";
    os << "piece: " << piece << "\n";
    os << "degree: " << degree << "\n";
    os << "e_inf: " << bezfit::format_full(rep.e_inf) << "\n";
    os << "argmax_t: " << bezfit::format_full(rep.argmax_t) << "\n";
    os << "e_2: " << bezfit::format_full(rep.e_2) << "\n";
    os << "samples: " << rep.sample_count << "\n";
    if (cheb_order > 0) os << "cheb_order: " << cheb_order << "\n";
    os << "time_s: " << seconds << "\n";
}

int cmd_run(const Options& opt) {
    const bezfit::CurveDocument doc = bezfit::load_curve_document(opt.input);
    const bezfit::JacobiWeight w{opt.alpha, opt.beta};
    const bezfit::ConstraintSpec cons{opt.k, opt.l};

    const auto t_start = std::chrono::steady_clock::now();
    std::vector<bezfit::RationalBezierCurve> pieces;
    std::vector<bezfit::BezierCurve> results;
    std::vector<int> cheb_orders;

    if (opt.method == "dual") {
        bezfit::CompositeCurve comp = doc.to_composite();
        std::vector<std::vector<double>> splits;
        if (!opt.subdivide.empty()) splits.assign(comp.segments.size(), opt.subdivide);
        const std::size_t piece_count =
            comp.segments.size() * (opt.subdivide.size() + 1);
        std::vector<bezfit::SegmentRequest> reqs;
        for (std::size_t p = 0; p < piece_count; ++p) {
            const int m = opt.degrees.size() == 1 ? opt.degrees[0]
                                                  : opt.degrees.at(p);
            reqs.push_back(bezfit::SegmentRequest{m, cons, w, opt.eps});
        }
        auto out = bezfit::approximate_composite(comp, splits, reqs);
        for (auto& piece : out) {
            pieces.push_back(piece.piece);
            results.push_back(piece.result.approximant);
            cheb_orders.push_back(piece.result.moments.cheb_order);
        }
    } else {
        if (doc.segments.size() != 1)
            throw std::invalid_argument(opt.method + " method handles a single segment only");
        if (opt.k != 1 || opt.l != 1)
            throw std::invalid_argument(opt.method + " method only supports end-point interpolation (k=l=1)");
        const bezfit::RationalBezierCurve& R = doc.segments[0];
        const int m = opt.degrees.at(0);
        pieces.push_back(R);
        cheb_orders.push_back(0);
        if (opt.method == "huang") {
            if (m < R.degree()) throw std::invalid_argument("huang: target degree below input degree");
            results.push_back(bezfit::huang_approximation(R, m - R.degree()));
        } else {
            results.push_back(
                bezfit::lu_iterate(R, m, lu_nodes_for(opt, m), opt.lu_lambda, opt.lu_iters).curve);
        }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t_start).count();

    std::ostringstream report;
    for (std::size_t p = 0; p < results.size(); ++p) {
        if (p) report << "\n";
        const bezfit::ErrorReport rep =
            bezfit::error_report(pieces[p], results[p], w, opt.samples, opt.eps);
        print_report(report, opt.method, static_cast<int>(p), results[p].degree(), rep,
                     cheb_orders[p], seconds);
    }
    std::cerr << report.str();

    write_text(opt.out_path,
               bezfit::write_curve_document(bezfit::CurveDocument::from_segments(results, doc.continuity)));

    if (!opt.svg_path.empty()) {
        std::vector<bezfit::SvgPolyline> lines;
        for (const auto& piece : pieces) lines.push_back({bezfit::flatten_rational(piece), "red", false});
        for (const auto& res : results) lines.push_back({bezfit::flatten_polynomial(res), "blue", true});
        write_text(opt.svg_path, bezfit::render_svg(lines));
    }
    return 0;
}

int cmd_compare(const Options& opt) {
    const bezfit::CurveDocument doc = bezfit::load_curve_document(opt.input);
    if (doc.segments.size() != 1)
        throw std::invalid_argument("compare expects a single-segment curve document");
    const bezfit::RationalBezierCurve& R = doc.segments[0];
    const int m = opt.degrees.at(0);
    const bezfit::JacobiWeight w{opt.alpha, opt.beta};

    std::ostringstream csv;
    csv << "method,iter,lambda,nodes,e_inf,e_2,time_s\n";
    auto emit = [&](const std::string& method, const std::string& iter, const std::string& lambda,
                    const std::string& nodes, const bezfit::BezierCurve& P, double seconds) {
        const bezfit::ErrorReport rep = bezfit::error_report(R, P, w, opt.samples, opt.eps);
        csv << method << ',' << iter << ',' << lambda << ',' << nodes << ','
            << bezfit::format_full(rep.e_inf) << ',' << bezfit::format_full(rep.e_2) << ','
            << seconds << "\n";
        std::fprintf(stderr, "%-8s %6s  e_inf=%-10.4g e_2=%-10.4g (%.3fs)\n", method.c_str(),
                     iter.c_str(), rep.e_inf, rep.e_2, seconds);
    };

    for (const std::string& method : opt.methods) {
        const auto t0 = std::chrono::steady_clock::now();
        auto secs = [&] { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count(); };
        if (method == "dual") {
            bezfit::ApproximationRequest req{R, m, {opt.k, opt.l}, w, opt.eps};
            emit("dual", "", "", "", bezfit::approximate(req).approximant, secs());
        } else if (method == "huang") {
            if (m < R.degree()) throw std::invalid_argument("huang: target degree below input degree");
            emit("huang", "", "", "", bezfit::huang_approximation(R, m - R.degree()), secs());
        } else if (method == "lu") {
            for (int iters : opt.lu_iter_list) {
                const auto ti = std::chrono::steady_clock::now();
                auto res = bezfit::lu_iterate(R, m, lu_nodes_for(opt, m), opt.lu_lambda, iters);
                emit("lu", std::to_string(iters), bezfit::format_full(opt.lu_lambda), opt.lu_nodes,
                     res.curve,
                     std::chrono::duration<double>(std::chrono::steady_clock::now() - ti).count());
            }
        } else {
            throw std::invalid_argument("unknown method: " + method);
        }
    }
    write_text(opt.out_path, csv.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Constrained least-squares polynomial approximation of rational Bezier curves"};
    app.require_subcommand(1);
    Options run_opt, cmp_opt;

    CLI::App* run = app.add_subcommand("run", "approximate a curve document");
    add_common_flags(run, run_opt);
    run->add_option("--method", run_opt.method, "dual|huang|lu")
        ->check(CLI::IsMember({"dual", "huang", "lu"}));
    run->add_option("--degree", run_opt.degrees, "target degree(s), one per piece")->delimiter(',');
    run->add_option("--subdivide", run_opt.subdivide, "split parameters applied to every segment")
        ->delimiter(',');
    run->add_option("--lu-iters", run_opt.lu_iters, "Lu iteration count")->envname("BEZFIT_LU_ITERS");
    run->add_option("--svg", run_opt.svg_path, "write an SVG overlay of input and approximant");

    CLI::App* cmp = app.add_subcommand("compare", "error table across methods (CSV)");
    add_common_flags(cmp, cmp_opt);
    cmp->add_option("--degree", cmp_opt.degrees, "target degree")->expected(1);
    cmp->add_option("--methods", cmp_opt.methods, "methods to include")->delimiter(',');
    cmp->add_option("--lu-iters", cmp_opt.lu_iter_list, "Lu iteration counts, one row each")
        ->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitValidation;
    }

    try {
        if (run->parsed()) return cmd_run(run_opt);
        return cmd_compare(cmp_opt);
    } catch (const bezfit::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitParse;
    } catch (const bezfit::QuadratureToleranceError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid request: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
}
