// Command-line surface for the tight closure engine: analyze an ideal,
// decide one element, list syzygy dimensions, probe the Frobenius closure,
// or scan a grid of diagonal configurations.
#include <chrono>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "tclo/errors.hpp"
#include "tclo/report.hpp"

namespace {

using namespace tclo;

struct Options {
    long characteristic = 0;
    std::string curve;
    std::string ideal_csv;
    std::string element;
    std::string degrees;
    long emax = 3;
    std::uint64_t seed = 0;
    std::string format = "text";
    bool strict = false;
};

std::vector<std::string> split_csv(const std::string& s) {
    std::vector<std::string> parts;
    std::string cur;
    for (char c : s) {
        if (c == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

FieldSpec make_field(long characteristic) {
    if (characteristic < 0) throw usage_error("characteristic must be 0 or a prime");
    if (characteristic == 0) return FieldSpec();
    return FieldSpec(static_cast<std::uint32_t>(characteristic));
}

IdealGens make_ideal(const CurveRing& ring, const std::string& csv) {
    if (csv.empty()) throw usage_error("--ideal is required");
    std::vector<HomPoly> gens;
    for (const auto& part : split_csv(csv)) gens.push_back(parse_poly(part, ring.field()));
    return IdealGens::make(ring, std::move(gens));
}

std::pair<long, long> degree_range(const Options& opt, long sum_d) {
    if (opt.degrees.empty()) return {0, sum_d};
    auto pos = opt.degrees.find("..");
    if (pos == std::string::npos)
        throw usage_error("--degrees expects the form a..b, got '" + opt.degrees + "'");
    try {
        long lo = std::stol(opt.degrees.substr(0, pos));
        long hi = std::stol(opt.degrees.substr(pos + 2));
        if (lo < 0 || hi < lo) throw usage_error("--degrees range is empty or negative");
        return {lo, hi};
    } catch (const std::invalid_argument&) {
        throw usage_error("--degrees expects integers around '..', got '" + opt.degrees + "'");
    } catch (const std::out_of_range&) {
        throw usage_error("--degrees bounds out of range: '" + opt.degrees + "'");
    }
}

void reverify_or_throw(const IdealContext& ctx, const std::vector<Certificate>& certs,
                       const HomPoly* element) {
    for (const auto& c : certs)
        if (!reverify_certificate(ctx, c, element))
            throw validation_error("certificate re-verification failed for rule '" + c.rule +
                                   "'");
}

int cmd_analyze(const Options& opt) {
    FieldSpec fs = make_field(opt.characteristic);
    CurveRing ring = smooth_plane_curve(fs, opt.curve);
    IdealGens ideal = make_ideal(ring, opt.ideal_csv);
    IdealContext ctx = build_context(ideal, opt.seed);
    auto [lo, hi] = degree_range(opt, ctx.sum_d());
    if (opt.strict) reverify_or_throw(ctx, ctx.window_certs, nullptr);
    if (opt.format == "json")
        std::cout << analyze_json(ctx, lo, hi).dump(2) << "\n";
    else
        std::cout << analyze_text(ctx, lo, hi);
    if (opt.strict) {
        auto rows = degree_profile(ctx, lo, hi);
        std::size_t unknown = 0;
        for (const auto& r : rows)
            if (r.status == DegreeStatus::Unknown) ++unknown;
        if (2 * unknown > rows.size()) return 3;
    }
    return 0;
}

int cmd_decide(const Options& opt) {
    if (opt.element.empty()) throw usage_error("decide needs --element");
    FieldSpec fs = make_field(opt.characteristic);
    CurveRing ring = smooth_plane_curve(fs, opt.curve);
    IdealGens ideal = make_ideal(ring, opt.ideal_csv);
    IdealContext ctx = build_context(ideal, opt.seed);
    HomPoly f = parse_poly(opt.element, fs);
    OracleOptions oracle;
    oracle.e_max = opt.emax;
    Decision d = decide_element(ctx, f, oracle);
    auto [lo, hi] = degree_range(opt, ctx.sum_d());
    if (opt.strict) reverify_or_throw(ctx, d.certs, &f);
    if (opt.format == "json")
        std::cout << decide_json(ctx, f, d, lo, hi).dump(2) << "\n";
    else
        std::cout << decide_text(ctx, f, d, lo, hi);
    if (opt.strict && d.verdict == Verdict::Unknown) return 3;
    return 0;
}

int cmd_syzygies(const Options& opt) {
    FieldSpec fs = make_field(opt.characteristic);
    CurveRing ring = smooth_plane_curve(fs, opt.curve);
    IdealGens ideal = make_ideal(ring, opt.ideal_csv);
    auto [lo, hi] = degree_range(opt, ideal.sum_degrees());
    if (opt.format == "json")
        std::cout << syzygies_json(ideal, lo, hi).dump(2) << "\n";
    else
        std::cout << syzygies_text(ideal, lo, hi);
    return 0;
}

int cmd_frobtest(const Options& opt) {
    if (opt.element.empty()) throw usage_error("frobtest needs --element");
    FieldSpec fs = make_field(opt.characteristic);
    CurveRing ring = smooth_plane_curve(fs, opt.curve);
    IdealGens ideal = make_ideal(ring, opt.ideal_csv);
    HomPoly f = parse_poly(opt.element, fs);
    OracleOptions opts;
    opts.e_max = opt.emax;
    OracleReport rep = frobenius_closure_probe(ideal, f, opts);
    if (opt.format == "json")
        std::cout << frobtest_json(ideal, f, rep).dump(2) << "\n";
    else
        std::cout << frobtest_text(ideal, f, rep);
    return 0;
}

struct ScanOptions {
    std::vector<long> chars{5, 7, 11};
    std::vector<long> deltas{3, 4, 5};
    std::vector<long> apows{2, 3};
    std::uint64_t seed = 0;
    std::string format = "jsonl";
};

int cmd_scan(const ScanOptions& opt) {
    for (long p : opt.chars) {
        for (long delta : opt.deltas) {
            if (p > 0 && delta % p == 0) continue; // Fermat curve singular there
            for (long a : opt.apows) {
                auto t0 = std::chrono::steady_clock::now();
                FieldSpec fs = make_field(p);
                std::string fx = "x^" + std::to_string(delta);
                std::string fy = "y^" + std::to_string(delta);
                std::string fz = "z^" + std::to_string(delta);
                CurveRing ring = smooth_plane_curve(fs, fx + "+" + fy + "+" + fz);
                IdealGens ideal = IdealGens::make(
                    ring, {HomPoly::variable(fs, 'x', a), HomPoly::variable(fs, 'y', a),
                           HomPoly::variable(fs, 'z', a)});
                IdealContext ctx = build_context(ideal, opt.seed);
                auto rows = degree_profile(ctx, 0, ctx.sum_d());
                auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                              std::chrono::steady_clock::now() - t0)
                              .count();
                if (opt.format == "text") {
                    std::cout << "p=" << p << " delta=" << delta << " a=" << a << ":";
                    for (const auto& r : rows)
                        std::cout << " " << degree_status_str(r.status)[0];
                    std::cout << "  (" << ms << " ms)\n";
                } else {
                    std::cout << scan_row_json(static_cast<unsigned long>(p), delta, a, ctx,
                                               rows, ms)
                                     .dump()
                              << "\n";
                }
            }
        }
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"tight closure of primary ideals on smooth plane curves"};
    app.require_subcommand(1);

    Options opt;
    ScanOptions scan_opt;

    auto add_common = [&](CLI::App* cmd, bool needs_ideal) {
        cmd->add_option("--char", opt.characteristic, "field characteristic (0 or a prime)")
            ->capture_default_str();
        cmd->add_option("--curve", opt.curve, "curve polynomial F(x,y,z)")->required();
        auto* io = cmd->add_option("--ideal", opt.ideal_csv, "comma-separated generators");
        if (needs_ideal) io->required();
        cmd->add_option("--degrees", opt.degrees, "degree window a..b (default 0..sum d_i)");
        cmd->add_option("--emax", opt.emax, "largest Frobenius exponent probed")
            ->capture_default_str();
        cmd->add_option("--seed", opt.seed, "seed for randomized searches")
            ->capture_default_str();
        cmd->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}))
            ->capture_default_str();
        cmd->add_flag("--strict", opt.strict,
                      "re-verify certificates; exit 3 when Unknown dominates");
    };

    auto* analyze = app.add_subcommand("analyze", "degree table for one ideal");
    add_common(analyze, true);
    auto* decide = app.add_subcommand("decide", "closure membership of one element");
    add_common(decide, true);
    decide->add_option("--element", opt.element, "element to decide")->required();
    auto* syzygies = app.add_subcommand("syzygies", "syzygy space dimensions by degree");
    add_common(syzygies, true);
    auto* frobtest = app.add_subcommand("frobtest", "Frobenius closure probe");
    add_common(frobtest, true);
    frobtest->add_option("--element", opt.element, "element to probe")->required();

    auto* scan = app.add_subcommand("scan", "grid of diagonal configurations, one JSON row each");
    scan->add_option("--char", scan_opt.chars, "characteristics to scan")
        ->capture_default_str();
    scan->add_option("--delta", scan_opt.deltas, "curve degrees to scan")
        ->capture_default_str();
    scan->add_option("--apow", scan_opt.apows, "generator exponents to scan")
        ->capture_default_str();
    scan->add_option("--seed", scan_opt.seed, "seed for randomized searches")
        ->capture_default_str();
    scan->add_option("--format", scan_opt.format, "jsonl or text")
        ->check(CLI::IsMember({"jsonl", "text"}))
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand(analyze)) return cmd_analyze(opt);
        if (app.got_subcommand(decide)) return cmd_decide(opt);
        if (app.got_subcommand(syzygies)) return cmd_syzygies(opt);
        if (app.got_subcommand(frobtest)) return cmd_frobtest(opt);
        if (app.got_subcommand(scan)) return cmd_scan(scan_opt);
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const validation_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const budget_exceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
