#include "tclo/engine.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "tclo/cohom.hpp"
#include "tclo/errors.hpp"

namespace tclo {

namespace {

std::string istr(long v) { return std::to_string(v); }

mpq_class frac(long num, long den) {
    mpq_class q{mpz_class(num), mpz_class(den)};
    q.canonicalize();
    return q;
}

long ceil_q(const mpq_class& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
    return static_cast<long>(r.get_si());
}

// Ordering used to pick the headline certificate of a decision: ideal
// membership first, then window rules in decreasing strength, probes last.
const char* const kHeadlinePriority[] = {
    "ideal-membership",
    "parameter-inclusion",
    "parameter-exclusion",
    "primary-syzygy-inclusion",
    "primary-syzygy-exclusion",
    "exact-sequence",
    "hm-ampleness",
    "semistable-inclusion",
    "semistable-exclusion",
    "power-ideal-inclusion",
    "power-ideal-exclusion",
    "split-syzygy-inclusion",
    "split-syzygy-exclusion",
    "no-syzygy-inclusion-bound",
    "degree-ample-exclusion",
    "slope-exclusion",
    "smith-inclusion",
    "smith-exclusion",
    "frobenius-pullback",
    "frobenius-closure-witness",
};

// Work estimate for one syzygy space computation in degree k: the kernel of
// a (dim R_k) x (sum_i dim R_{k-d_i}) matrix.
double space_cost(const IdealGens& ideal, long k) {
    const CurveRing& ring = ideal.ring();
    double rows = static_cast<double>(std::max(ring.dim(k), 0L));
    double cols = 0;
    for (std::size_t i = 0; i < ideal.count(); ++i)
        cols += static_cast<double>(std::max(ring.dim(k - ideal.degree(i)), 0L));
    return std::min(rows, cols) * rows * cols;
}

bool cert_in_side(const Certificate& c) {
    return c.verdict == Verdict::InIdeal || c.verdict == Verdict::InClosure;
}

// Definite whole-degree claims of opposite direction must never overlap;
// such an overlap means two rules contradict each other outright.
void check_window_consistency(const std::vector<Certificate>& certs,
                              const FieldSpec& fs) {
    for (const auto& a : certs) {
        if (a.verdict != Verdict::InClosure || !a.definite(fs)) continue;
        for (const auto& b : certs) {
            if (b.verdict != Verdict::NotInClosure || !b.definite(fs)) continue;
            long lo = std::max(a.lo, b.lo);
            long hi = std::min(a.hi, b.hi);
            if (lo <= hi)
                throw std::logic_error(
                    "certificate contradiction: '" + a.rule +
                    "' includes every element of degree " + istr(lo) + " while '" +
                    b.rule + "' excludes the ones outside the ideal");
        }
    }
}

// Frobenius pullback probe for exclusion evidence: transport the membership
// problem along e Frobenius powers, hunt a primary syzygy of the bracket
// ideal in the two-line-bundle range, and keep the result only when the
// pulled-back problem is excluded definitely at the given characteristic.
// Membership transports forward, so a definite exclusion upstairs excludes
// the original element.
std::optional<Certificate> pullback_exclusion(const IdealContext& ctx,
                                              const HomPoly& f,
                                              const OracleOptions& opts) {
    const CurveRing& ring = ctx.ring();
    const FieldSpec& fs = ring.field();
    unsigned long p = fs.characteristic();
    if (p == 0 || ctx.ideal.count() != 3) return std::nullopt;
    long m = f.degree();
    long delta = ring.delta();
    long g = ring.genus();

    unsigned long long q = 1;
    for (long e = 1; e <= opts.pull_e_max; ++e) {
        if (q > (1ULL << 40) / p) return std::nullopt;
        q *= p;
        unsigned long long mq = static_cast<unsigned long long>(m) * q;
        unsigned long long sdq = static_cast<unsigned long long>(ctx.sum_d()) * q;
        if (mq > (1ULL << 31) || sdq > (1ULL << 31)) return std::nullopt;
        if (monomial_count(static_cast<long>(mq)) > opts.budget ||
            monomial_count(static_cast<long>(sdq) / 2 + delta) > opts.budget)
            return std::nullopt;

        PullbackProblem pb = frobenius_pullback_problem(ctx.ideal, f, e);
        long sd = pb.ideal.sum_degrees();

        double spent = 0;
        const double kBudget = 2e8;
        std::optional<long> minimal;
        long kb = ceil_q(frac(sd * delta + 2 * g - 2, 2 * delta));
        for (long k = 0; k <= kb + 1; ++k) {
            spent += space_cost(pb.ideal, k);
            if (spent > kBudget) break;
            if (syzygy_dim(pb.ideal, k) > 0) {
                minimal = k;
                break;
            }
        }
        if (!minimal) continue;

        for (long k = *minimal; 2 * k <= sd && k <= *minimal + 32; ++k) {
            spent += space_cost(pb.ideal, k);
            if (spent > kBudget) break;
            bool ex = false;
            auto s = find_primary_syzygy(pb.ideal, k, ctx.seed, 64, &ex);
            if (!s) continue;
            RuleOutcome out;
            try {
                out = exact_sequence_decide(make_forcing_class(pb.ideal, pb.element), *s);
            } catch (const validation_error&) {
                break;
            }
            if (out.certs.size() != 1) break;
            const Certificate& inner = out.certs.front();
            if (inner.verdict != Verdict::NotInClosure || !inner.definite(fs)) break;

            Certificate c;
            c.rule = "frobenius-pullback";
            c.verdict = Verdict::NotInClosure;
            c.caveat = Caveat::DefiniteForGivenP;
            c.lo = c.hi = m;
            c.syzygy = s;
            c.data["e"] = istr(e);
            c.data["q"] = std::to_string(q);
            c.data["pulled_degree"] = istr(pb.element.degree());
            c.data["pulled_k"] = istr(k);
            auto it = inner.data.find("branch");
            if (it != inner.data.end()) c.data["inner_branch"] = it->second;
            std::ostringstream st;
            st << "transporting the problem along " << e
               << " Frobenius pullbacks (power " << q
               << ") excludes it: the bracket ideal has a primary syzygy of total degree "
               << k
               << " and the two-line-bundle test rejects the pulled-back element of degree "
               << pb.element.degree()
               << " definitely in characteristic " << p
               << "; membership would have transported forward, so the original element "
                  "is not in the tight closure";
            c.statement = st.str();
            return c;
        }
    }
    return std::nullopt;
}

bool same_window(const Certificate& a, const Certificate& b) {
    return a.rule == b.rule && a.verdict == b.verdict && a.caveat == b.caveat &&
           a.lo == b.lo && a.hi == b.hi;
}

} // namespace

RuleContext IdealContext::rule_view() const {
    RuleContext v;
    v.ideal = &ideal;
    v.k_top = k_top;
    v.dims = dims;
    v.minimal_degree = minimal_degree;
    v.primaries = primaries;
    v.exhaustive = exhaustive;
    return v;
}

const SyzygyVec* IdealContext::best_primary() const {
    const SyzygyVec* best = nullptr;
    long sd = sum_d();
    for (const auto& s : primaries) {
        if (!best) {
            best = &s;
            continue;
        }
        long cur = std::max(s.degree, sd - s.degree);
        long old = std::max(best->degree, sd - best->degree);
        if (cur < old || (cur == old && s.degree < best->degree)) best = &s;
    }
    return best;
}

const SyzygyVec* IdealContext::route_primary() const {
    const SyzygyVec* pick = nullptr;
    long sd = sum_d();
    for (const auto& s : primaries)
        if (2 * s.degree <= sd && (!pick || s.degree > pick->degree)) pick = &s;
    return pick;
}

IdealContext build_context(const IdealGens& ideal, std::uint64_t seed) {
    IdealContext ctx(ideal);
    ctx.seed = seed;
    const CurveRing& ring = ideal.ring();
    const std::size_t n = ideal.count();
    const long delta = ring.delta();
    const long g = ring.genus();
    const long sd = ideal.sum_degrees();

    if (n == 3) {
        // Sweep the syzygy dimensions upward. The sweep can stop once the
        // minimal degree is known and the small-degree gates (3..5) are
        // covered: above the minimal degree the dimensions stay positive, so
        // the only rule reading further, the boundary-degree semistability
        // test, could not fire anyway.
        long kb = ceil_q(frac(sd * delta + 2 * g - 2, 2 * delta));
        long sweep_top = std::max(kb + 1, 5L);
        const double kSweepBudget = 4e8;
        double spent = 0;
        bool truncated = false;
        for (long k = 0; k <= sweep_top; ++k) {
            double cost = space_cost(ideal, k);
            if (cost > 0 && spent + cost > kSweepBudget) {
                truncated = true;
                break;
            }
            spent += cost;
            ctx.dims.push_back(syzygy_dim(ideal, k));
            if (!ctx.minimal_degree && ctx.dims.back() > 0) ctx.minimal_degree = k;
            if (ctx.minimal_degree && k >= 5) break;
        }
        ctx.k_top = static_cast<long>(ctx.dims.size()) - 1;
        if (truncated)
            ctx.notes.push_back("syzygy dimension sweep stopped at degree " +
                                istr(ctx.k_top) + " under the work budget");

        if (ctx.minimal_degree) {
            // Hunt primary syzygies upward from the minimal degree. Inclusion
            // windows only widen again past half the degree sum, so the hunt
            // stops at the first find at or beyond that point.
            long lo = *ctx.minimal_degree;
            long hi = std::min({sd, std::max(kb, lo), lo + 32});
            double hunt_spent = 0;
            for (long k = lo; k <= hi; ++k) {
                bool charged = false;
                if (k > ctx.k_top) {
                    // The sweep stopped below this degree; extend the
                    // dimension table so the skips below can read it. The
                    // loop walks degrees one at a time, so the table stays
                    // contiguous.
                    hunt_spent += space_cost(ideal, k);
                    if (hunt_spent > 2e8) {
                        ctx.notes.push_back(
                            "primary syzygy hunt stopped before degree " +
                            istr(k) + " under the work budget");
                        break;
                    }
                    charged = true;
                    ctx.dims.push_back(syzygy_dim(ideal, k));
                    ctx.k_top = k;
                }
                if (ctx.dims[static_cast<std::size_t>(k)] == 0) {
                    ctx.exhaustive[k] = true;
                    continue;
                }
                // When the whole degree-k space consists of multiples of an
                // already-found primary syzygy (the dimensions match), nothing
                // in it is primary: a positive-degree factor vanishes somewhere
                // on the curve. Proven absence, no search needed.
                if (!ctx.primaries.empty()) {
                    long k0 = ctx.primaries.front().degree;
                    if (k > k0 && ctx.dims[static_cast<std::size_t>(k)] ==
                                      ring.dim(k - k0)) {
                        ctx.exhaustive[k] = true;
                        continue;
                    }
                }
                if (!charged) {
                    hunt_spent += space_cost(ideal, k);
                    if (hunt_spent > 2e8) {
                        ctx.notes.push_back(
                            "primary syzygy hunt stopped before degree " +
                            istr(k) + " under the work budget");
                        break;
                    }
                }
                bool ex = false;
                auto s = find_primary_syzygy(ideal, k, seed, 64, &ex);
                ctx.exhaustive[k] = ex;
                if (s) {
                    ctx.primaries.push_back(std::move(*s));
                    if (2 * k >= sd) break;
                }
            }
        }

        // A power ideal on a diagonal curve carries an explicit syzygy from
        // the curve equation; add it when the hunt did not already find a
        // primary syzygy at least as good.
        if (auto s = xa_pullback_syzygy(ideal)) {
            long lo_new = std::max(s->degree, sd - s->degree);
            bool keep = true;
            for (const auto& t : ctx.primaries)
                if (t.degree == s->degree ||
                    std::max(t.degree, sd - t.degree) <= lo_new)
                    keep = false;
            if (keep) ctx.primaries.push_back(std::move(*s));
        }
    }

    RuleContext view = ctx.rule_view();
    ctx.stability = semistability_certificate(view);
    ctx.slopes = slope_bounds(view);

    auto add = [&ctx](RuleOutcome&& out) {
        for (auto& c : out.certs) ctx.window_certs.push_back(std::move(c));
        for (auto& s : out.notes) ctx.notes.push_back(std::move(s));
    };

    if (n == 2) add(parameter_closure(view));
    if (n == 3 && !ctx.primaries.empty()) {
        // Emit windows for the best primary syzygy (and the routed one when
        // different); further primaries only repeat weaker windows.
        RuleContext trimmed = view;
        trimmed.primaries.clear();
        const SyzygyVec* best = ctx.best_primary();
        trimmed.primaries.push_back(*best);
        if (const SyzygyVec* rp = ctx.route_primary())
            if (rp->degree != best->degree) trimmed.primaries.push_back(*rp);
        add(primary_syzygy_rules(trimmed));
    }
    add(semistable_closure_rule(view, ctx.stability));
    add(xa_rules(view));
    add(inclusion_bound_no_syzygy(view));
    add(exclusion_bound_no_syzygy(view));
    add(slope_exclusion_rule(view, ctx.slopes));
    add(smith_bounds(ideal));

    check_window_consistency(ctx.window_certs, ring.field());
    return ctx;
}

Decision decide_element(const IdealContext& ctx, const HomPoly& f0,
                        const OracleOptions& opts) {
    const CurveRing& ring = ctx.ring();
    const FieldSpec& fs = ring.field();
    if (f0.field() != fs) throw usage_error("element field mismatch");
    unsigned long p = fs.characteristic();
    HomPoly f = ring.normal_form(f0);
    long m = f.degree();
    long sd = ctx.sum_d();

    Decision d;
    d.degree = m;

    Membership mem = ideal_membership(ctx.ideal, f);
    if (mem.in_ideal) {
        Certificate c;
        c.rule = "ideal-membership";
        c.verdict = Verdict::InIdeal;
        c.caveat = Caveat::DefiniteForGivenP;
        c.lo = c.hi = m;
        c.witnesses = mem.witnesses;
        c.statement = "the element of degree " + istr(m) +
                      " lies in the ideal itself; the witnesses give an explicit "
                      "representation in terms of the generators";
        d.certs.push_back(std::move(c));
        d.verdict = Verdict::InIdeal;
        d.caveat = Caveat::DefiniteForGivenP;
        d.rule = "ideal-membership";
        return d;
    }

    for (const auto& c : ctx.window_certs)
        if (c.covers(m)) d.certs.push_back(c);

    auto have_definite = [&](bool in_side) {
        for (const auto& c : d.certs)
            if (c.verdict != Verdict::Unknown && cert_in_side(c) == in_side &&
                c.definite(fs))
                return true;
        return false;
    };

    if (ctx.ideal.count() == 3 && !have_definite(true) && !have_definite(false)) {
        if (const SyzygyVec* rp = ctx.route_primary()) {
            if (monomial_count(m) <= opts.budget &&
                monomial_count(sd - rp->degree) <= opts.budget) {
                try {
                    RuleOutcome out =
                        exact_sequence_decide(make_forcing_class(ctx.ideal, f), *rp);
                    for (auto& c : out.certs) d.certs.push_back(std::move(c));
                    for (auto& s : out.notes) d.notes.push_back(std::move(s));
                } catch (const validation_error& e) {
                    d.notes.push_back(
                        std::string("two-line-bundle test unavailable: ") + e.what());
                }
            } else {
                d.notes.push_back(
                    "two-line-bundle test skipped: the degree exceeds the work budget");
            }
        }
    }

    if (p > 0 && opts.enabled && !have_definite(true) && !have_definite(false))
        if (auto c = pullback_exclusion(ctx, f, opts)) d.certs.push_back(std::move(*c));

    if (opts.enabled) {
        d.oracle_ran = true;
        d.oracle = frobenius_closure_probe(ctx.ideal, f, opts);
        if (d.oracle.in_frobenius_closure) {
            Certificate c;
            c.rule = "frobenius-closure-witness";
            c.verdict = Verdict::InClosure;
            c.caveat = Caveat::FrobeniusClosure;
            c.lo = c.hi = m;
            c.witnesses = d.oracle.witnesses;
            c.data["e"] = istr(d.oracle.e);
            c.data["q"] = std::to_string(d.oracle.q);
            std::ostringstream st;
            st << "the " << d.oracle.q
               << "-th power of the element lies in the bracket ideal of the same "
                  "power, so the element is in the Frobenius closure and hence in "
                  "the tight closure";
            c.statement = st.str();
            d.certs.push_back(std::move(c));
        }
    }

    const Certificate* def_in = nullptr;
    const Certificate* def_out = nullptr;
    for (const auto& c : d.certs) {
        if (c.verdict == Verdict::Unknown || !c.definite(fs)) continue;
        if (cert_in_side(c))
            def_in = &c;
        else
            def_out = &c;
    }
    if (def_in && def_out)
        throw std::logic_error("certificate contradiction on one element: '" +
                               def_in->rule + "' includes it while '" +
                               def_out->rule + "' excludes it");

    const Certificate* pick = nullptr;
    for (const char* r : kHeadlinePriority) {
        for (const auto& c : d.certs)
            if (c.rule == r && c.verdict != Verdict::Unknown && c.definite(fs)) {
                pick = &c;
                break;
            }
        if (pick) break;
    }
    if (!pick) {
        for (const char* r : kHeadlinePriority) {
            for (const auto& c : d.certs)
                if (c.rule == r && c.verdict != Verdict::Unknown) {
                    pick = &c;
                    break;
                }
            if (pick) break;
        }
    }

    if (pick) {
        d.verdict = pick->verdict;
        d.caveat = pick->caveat;
        d.rule = pick->rule;
    } else {
        d.verdict = Verdict::Unknown;
        std::ostringstream diag;
        diag << "no rule applied at degree " << m << "; stability: "
             << stability_str(ctx.stability.kind);
        if (ctx.slopes.max_lower && ctx.slopes.max_upper)
            diag << "; maximal slope in [" << ctx.slopes.max_lower->value.get_str()
                 << ", " << ctx.slopes.max_upper->value.get_str() << "]";
        if (d.oracle_ran && d.oracle.e_tested >= 0)
            diag << "; Frobenius probe found nothing through exponent "
                 << d.oracle.e_tested;
        d.notes.push_back(diag.str());
    }
    return d;
}

std::string degree_status_str(DegreeStatus s) {
    switch (s) {
        case DegreeStatus::AllIn: return "AllIn";
        case DegreeStatus::IffIdeal: return "IffIdeal";
        case DegreeStatus::ElementWise: return "ElementWise";
        case DegreeStatus::Unknown: return "Unknown";
    }
    return "Unknown";
}

std::vector<DegreeRow> degree_profile(const IdealContext& ctx, long lo, long hi) {
    if (lo < 0) lo = 0;
    if (hi < lo) throw usage_error("degree range is empty");
    const CurveRing& ring = ctx.ring();
    const FieldSpec& fs = ring.field();
    const SyzygyVec* rp = ctx.ideal.count() == 3 ? ctx.route_primary() : nullptr;

    std::vector<DegreeRow> rows;
    rows.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long m = lo; m <= hi; ++m) {
        DegreeRow r;
        r.m = m;

        double rd = static_cast<double>(std::max(ring.dim(m), 0L));
        double cols = 0;
        for (std::size_t i = 0; i < ctx.ideal.count(); ++i)
            cols += static_cast<double>(std::max(ring.dim(m - ctx.ideal.degree(i)), 0L));
        double cost = std::min(rd, cols) * std::min(rd, cols) * std::max(rd, cols);
        if (cost <= 2e8) {
            r.ring_dim = ring.dim(m);
            r.ideal_dim = ideal_piece_dim(ctx.ideal, m);
        }

        // Rank covering certificates: definite inclusion beats definite
        // exclusion beats conditional inclusion beats conditional exclusion.
        const Certificate* best = nullptr;
        int best_rank = 5;
        for (const auto& c : ctx.window_certs) {
            if (!c.covers(m) || c.verdict == Verdict::Unknown) continue;
            int rank = cert_in_side(c) ? (c.definite(fs) ? 0 : 2)
                                       : (c.definite(fs) ? 1 : 3);
            if (rank < best_rank) {
                best_rank = rank;
                best = &c;
            }
        }
        if (best) {
            r.status = cert_in_side(*best) ? DegreeStatus::AllIn : DegreeStatus::IffIdeal;
            r.rule = best->rule;
            r.caveat = caveat_str(best->caveat);
        } else if (rp) {
            r.status = DegreeStatus::ElementWise;
            r.rule = "exact-sequence";
        }
        rows.push_back(std::move(r));
    }
    return rows;
}

bool reverify_certificate(const IdealContext& ctx, const Certificate& cert,
                          const HomPoly* element) {
    const IdealGens& ideal = ctx.ideal;
    const CurveRing& ring = ideal.ring();
    const FieldSpec& fs = ring.field();
    long sd = ctx.sum_d();
    const std::string& r = cert.rule;

    try {
        if (r == "ideal-membership") {
            if (!element || cert.witnesses.size() != ideal.count()) return false;
            HomPoly f = ring.normal_form(*element);
            HomPoly sum(fs, f.degree());
            for (std::size_t i = 0; i < ideal.count(); ++i)
                sum += ring.mul(cert.witnesses[i], ideal.gens()[i]);
            return ring.normal_form(sum - f).is_zero() &&
                   cert.verdict == Verdict::InIdeal;
        }

        if (r == "primary-syzygy-inclusion" || r == "primary-syzygy-exclusion") {
            if (!cert.syzygy) return false;
            const SyzygyVec& s = *cert.syzygy;
            if (!is_syzygy(ideal, s) || !is_primary_syzygy(ideal, s)) return false;
            long k = s.degree;
            if (r == "primary-syzygy-inclusion")
                return cert.verdict == Verdict::InClosure &&
                       cert.lo == std::max(k, sd - k) && cert.hi == kNoBound;
            return cert.verdict == Verdict::NotInClosure && cert.lo == 0 &&
                   cert.hi == std::min(k, sd - k) - 1;
        }

        if (r == "exact-sequence") {
            if (!cert.syzygy || !element) return false;
            const SyzygyVec& s = *cert.syzygy;
            if (!is_syzygy(ideal, s) || !is_primary_syzygy(ideal, s)) return false;
            RuleOutcome out =
                exact_sequence_decide(make_forcing_class(ideal, ring.normal_form(*element)), s);
            if (out.certs.size() != 1) return false;
            const Certificate& again = out.certs.front();
            auto branch = [](const Certificate& c) {
                auto it = c.data.find("branch");
                return it == c.data.end() ? std::string() : it->second;
            };
            return again.verdict == cert.verdict && again.caveat == cert.caveat &&
                   again.lo == cert.lo && again.hi == cert.hi &&
                   branch(again) == branch(cert);
        }

        if (r == "frobenius-closure-witness") {
            if (!element) return false;
            auto it = cert.data.find("q");
            if (it == cert.data.end()) return false;
            unsigned long long q = std::stoull(it->second);
            return cert.verdict == Verdict::InClosure &&
                   frobenius_power_membership(ideal, ring.normal_form(*element), q);
        }

        if (r == "frobenius-pullback") {
            if (!element || !cert.syzygy) return false;
            auto it = cert.data.find("e");
            if (it == cert.data.end()) return false;
            long e = std::stol(it->second);
            PullbackProblem pb =
                frobenius_pullback_problem(ideal, ring.normal_form(*element), e);
            const SyzygyVec& s = *cert.syzygy;
            if (!is_syzygy(pb.ideal, s) || !is_primary_syzygy(pb.ideal, s)) return false;
            if (2 * s.degree > pb.ideal.sum_degrees()) return false;
            RuleOutcome out =
                exact_sequence_decide(make_forcing_class(pb.ideal, pb.element), s);
            return out.certs.size() == 1 &&
                   out.certs.front().verdict == Verdict::NotInClosure &&
                   out.certs.front().definite(fs) &&
                   cert.verdict == Verdict::NotInClosure;
        }

        // Whole-degree windows: recompute the producing rule from a fresh view
        // of the context and require an identical certificate to reappear.
        RuleContext view = ctx.rule_view();
        RuleOutcome out;
        if (r == "parameter-inclusion" || r == "parameter-exclusion")
            out = parameter_closure(view);
        else if (r == "semistable-inclusion" || r == "semistable-exclusion")
            out = semistable_closure_rule(view, semistability_certificate(view));
        else if (r == "power-ideal-inclusion" || r == "power-ideal-exclusion" ||
                 r == "power-ideal-not-strongly-semistable" ||
                 r == "split-syzygy-inclusion" || r == "split-syzygy-exclusion")
            out = xa_rules(view);
        else if (r == "no-syzygy-inclusion-bound")
            out = inclusion_bound_no_syzygy(view);
        else if (r == "degree-ample-exclusion")
            out = exclusion_bound_no_syzygy(view);
        else if (r == "slope-exclusion")
            out = slope_exclusion_rule(view, slope_bounds(view));
        else if (r == "smith-inclusion" || r == "smith-exclusion")
            out = smith_bounds(ideal);
        else
            return false;

        for (const auto& c : out.certs)
            if (same_window(c, cert)) return true;
        return false;
    } catch (const std::exception&) {
        return false;
    }
}

} // namespace tclo
