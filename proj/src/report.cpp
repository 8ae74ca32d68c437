#include "tclo/report.hpp"

#include <sstream>

namespace tclo {

std::string caveat_phrase(Caveat c, const FieldSpec& fs) {
    bool pos = fs.is_prime_field();
    switch (c) {
    case Caveat::DefiniteForGivenP:
        return pos ? "valid at this p" : "valid in characteristic zero";
    case Caveat::Char0OrLargeP:
        return "char 0 or p >> 0";
    case Caveat::Char0Only:
        return "characteristic zero only";
    case Caveat::AlsoPlusClosure:
        return pos ? "valid at this p; in the graded plus closure"
                   : "valid in characteristic zero";
    case Caveat::FrobeniusClosure:
        return pos ? "valid at this p; Frobenius closure" : "valid in characteristic zero";
    }
    return "";
}

namespace {

Json syzygy_json(const SyzygyVec& s) {
    Json j;
    j["degree"] = s.degree;
    Json comps = Json::array();
    for (const auto& c : s.comps) comps.push_back(c.str());
    j["components"] = comps;
    return j;
}

Json cert_json(const Certificate& c) {
    Json j;
    j["rule"] = c.rule;
    j["verdict"] = verdict_str(c.verdict);
    j["caveat"] = caveat_str(c.caveat);
    j["lo"] = c.lo;
    if (c.hi == kNoBound)
        j["hi"] = nullptr;
    else
        j["hi"] = c.hi;
    j["statement"] = c.statement;
    if (c.syzygy) j["syzygy"] = syzygy_json(*c.syzygy);
    if (!c.witnesses.empty()) {
        Json w = Json::array();
        for (const auto& h : c.witnesses) w.push_back(h.str());
        j["witnesses"] = w;
    }
    if (!c.data.empty()) {
        Json d = Json::object();
        for (const auto& [k, v] : c.data) d[k] = v;
        j["data"] = d;
    }
    return j;
}

Json oracle_json(const OracleReport& rep) {
    Json j;
    j["in_frobenius_closure"] = rep.in_frobenius_closure;
    j["e"] = rep.e;
    j["q"] = rep.q;
    Json w = Json::array();
    for (const auto& h : rep.witnesses) w.push_back(h.str());
    j["witnesses"] = w;
    j["e_tested"] = rep.e_tested;
    j["budget_capped"] = rep.budget_capped;
    return j;
}

Json degree_rows_json(const std::vector<DegreeRow>& rows) {
    Json t = Json::array();
    for (const auto& r : rows) {
        Json row;
        row["m"] = r.m;
        row["status"] = degree_status_str(r.status);
        row["rule"] = r.rule;
        row["caveat"] = r.caveat;
        row["ring_dim"] = r.ring_dim;
        row["ideal_dim"] = r.ideal_dim;
        t.push_back(std::move(row));
    }
    return t;
}

std::string mpq_str(const mpq_class& q) { return q.get_str(); }

Json syzygy_table_json(const IdealContext& ctx) {
    Json j;
    j["k_top"] = ctx.k_top;
    Json dims = Json::array();
    for (long d : ctx.dims) dims.push_back(d);
    j["dims"] = dims;
    if (ctx.minimal_degree)
        j["minimal_degree"] = *ctx.minimal_degree;
    else
        j["minimal_degree"] = nullptr;
    Json prim = Json::array();
    for (const auto& s : ctx.primaries) prim.push_back(syzygy_json(s));
    j["primaries"] = prim;

    Json st;
    st["kind"] = stability_str(ctx.stability.kind);
    st["rule"] = ctx.stability.rule;
    st["statement"] = ctx.stability.statement;
    if (ctx.stability.syzygy) st["syzygy"] = syzygy_json(*ctx.stability.syzygy);
    j["stability"] = st;

    Json sl;
    sl["mu"] = mpq_str(ctx.slopes.mu);
    auto bound = [](const std::optional<SlopeBound>& b) -> Json {
        if (!b) return nullptr;
        Json x;
        x["value"] = b->value.get_str();
        x["source"] = b->source;
        return x;
    };
    sl["max_upper"] = bound(ctx.slopes.max_upper);
    sl["max_lower"] = bound(ctx.slopes.max_lower);
    sl["min_upper"] = bound(ctx.slopes.min_upper);
    sl["min_lower"] = bound(ctx.slopes.min_lower);
    j["slopes"] = sl;

    if (!ctx.notes.empty()) {
        Json n = Json::array();
        for (const auto& s : ctx.notes) n.push_back(s);
        j["notes"] = n;
    }
    return j;
}

Json core_json(const IdealContext& ctx, const std::vector<Certificate>& certs,
               const std::vector<DegreeRow>& rows) {
    Json j;
    j["curve"] = ctx.ring().poly().str();
    j["char"] = static_cast<long>(ctx.ring().field().characteristic());
    j["delta"] = ctx.ring().delta();
    j["genus"] = ctx.ring().genus();
    Json gens = Json::array();
    for (const auto& g : ctx.ideal.gens()) gens.push_back(g.str());
    j["ideal"] = gens;
    j["syzygy_table"] = syzygy_table_json(ctx);
    Json cs = Json::array();
    for (const auto& c : certs) cs.push_back(cert_json(c));
    j["certificates"] = cs;
    j["degree_table"] = degree_rows_json(rows);
    j["oracle"] = nullptr;
    j["seed"] = ctx.seed;
    j["version"] = kVersion;
    return j;
}

std::string gens_str(const IdealGens& ideal) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < ideal.count(); ++i) {
        if (i) os << ", ";
        os << ideal.gens()[i].str();
    }
    os << ")";
    return os.str();
}

void render_header(std::ostream& os, const IdealContext& ctx) {
    const CurveRing& ring = ctx.ring();
    os << "curve " << ring.poly().str() << " over " << ring.field().describe()
       << "  (delta " << ring.delta() << ", genus " << ring.genus() << ")\n";
    os << "ideal " << gens_str(ctx.ideal) << "  sum of degrees " << ctx.sum_d() << "\n";
}

void render_table(std::ostream& os, const IdealContext& ctx) {
    os << "syzygy dims k=0.." << ctx.k_top << ":";
    for (long d : ctx.dims) os << " " << d;
    os << "\n";
    if (ctx.minimal_degree)
        os << "minimal syzygy degree " << *ctx.minimal_degree << "\n";
    for (const auto& s : ctx.primaries) {
        os << "primary syzygy at k=" << s.degree << ": (";
        for (std::size_t i = 0; i < s.comps.size(); ++i) {
            if (i) os << ", ";
            os << s.comps[i].str();
        }
        os << ")\n";
    }
    os << "stability: " << stability_str(ctx.stability.kind);
    if (!ctx.stability.statement.empty()) os << " -- " << ctx.stability.statement;
    os << "\n";
    for (const auto& n : ctx.notes) os << "note: " << n << "\n";
}

void render_certs(std::ostream& os, const FieldSpec& fs,
                  const std::vector<Certificate>& certs) {
    if (certs.empty()) return;
    os << "certificates:\n";
    for (const auto& c : certs) {
        os << "  - " << c.rule << " [" << verdict_str(c.verdict) << ", "
           << caveat_phrase(c.caveat, fs) << "]";
        if (c.verdict == Verdict::InClosure && c.hi == kNoBound)
            os << " for m >= " << c.lo;
        else if (c.hi != kNoBound)
            os << " for " << c.lo << " <= m <= " << c.hi;
        os << "\n    " << c.statement << "\n";
    }
}

void render_rows(std::ostream& os, const std::vector<DegreeRow>& rows) {
    os << "degree table (m: status, dim R_m, dim I_m):\n";
    for (const auto& r : rows) {
        os << "  " << r.m << ": " << degree_status_str(r.status);
        if (!r.rule.empty()) os << " via " << r.rule;
        if (!r.caveat.empty()) os << " [" << r.caveat << "]";
        if (r.ring_dim >= 0) os << "  dim " << r.ring_dim;
        if (r.ideal_dim >= 0) os << "/" << r.ideal_dim;
        os << "\n";
    }
}

} // namespace

Json analyze_json(const IdealContext& ctx, long lo, long hi) {
    return core_json(ctx, ctx.window_certs, degree_profile(ctx, lo, hi));
}

Json decide_json(const IdealContext& ctx, const HomPoly& element, const Decision& d,
                 long lo, long hi) {
    Json j = core_json(ctx, d.certs, degree_profile(ctx, lo, hi));
    if (d.oracle_ran) j["oracle"] = oracle_json(d.oracle);
    Json dec;
    dec["element"] = element.str();
    dec["degree"] = d.degree;
    dec["verdict"] = verdict_str(d.verdict);
    dec["caveat"] = caveat_str(d.caveat);
    dec["caveat_phrase"] = caveat_phrase(d.caveat, ctx.ring().field());
    dec["rule"] = d.rule;
    Json notes = Json::array();
    for (const auto& n : d.notes) notes.push_back(n);
    dec["notes"] = notes;
    j["decision"] = dec;
    return j;
}

Json scan_row_json(unsigned long p, long delta, long a, const IdealContext& ctx,
                   const std::vector<DegreeRow>& rows, long long ms) {
    Json j;
    j["p"] = p;
    j["delta"] = delta;
    j["a"] = a;
    j["degree_table"] = degree_rows_json(rows);
    Json cs = Json::array();
    for (const auto& c : ctx.window_certs) cs.push_back(cert_json(c));
    j["certificates"] = cs;
    j["seed"] = ctx.seed;
    j["ms"] = ms;
    return j;
}

std::string analyze_text(const IdealContext& ctx, long lo, long hi) {
    std::ostringstream os;
    render_header(os, ctx);
    render_table(os, ctx);
    render_certs(os, ctx.ring().field(), ctx.window_certs);
    render_rows(os, degree_profile(ctx, lo, hi));
    return os.str();
}

std::string decide_text(const IdealContext& ctx, const HomPoly& element, const Decision& d,
                        long lo, long hi) {
    std::ostringstream os;
    render_header(os, ctx);
    render_table(os, ctx);
    os << "element " << element.str() << " (degree " << d.degree << ")\n";
    os << "verdict: " << verdict_str(d.verdict) << " via " << d.rule << " -- "
       << caveat_phrase(d.caveat, ctx.ring().field()) << "\n";
    if (d.oracle_ran) {
        const OracleReport& o = d.oracle;
        if (o.in_frobenius_closure)
            os << "oracle: hit at e=" << o.e << " (q=" << o.q << ")\n";
        else
            os << "oracle: no witness up to e=" << o.e_tested
               << (o.budget_capped ? " (budget capped)" : "") << "\n";
    }
    render_certs(os, ctx.ring().field(), d.certs);
    for (const auto& n : d.notes) os << "note: " << n << "\n";
    render_rows(os, degree_profile(ctx, lo, hi));
    return os.str();
}

Json syzygies_json(const IdealGens& ideal, long lo, long hi) {
    Json j;
    j["curve"] = ideal.ring().poly().str();
    j["char"] = static_cast<long>(ideal.ring().field().characteristic());
    Json gens = Json::array();
    for (const auto& g : ideal.gens()) gens.push_back(g.str());
    j["ideal"] = gens;
    Json rows = Json::array();
    for (long k = lo; k <= hi; ++k) {
        Json r;
        r["k"] = k;
        r["dim"] = syzygy_dim(ideal, k);
        rows.push_back(std::move(r));
    }
    j["table"] = rows;
    j["version"] = kVersion;
    return j;
}

std::string syzygies_text(const IdealGens& ideal, long lo, long hi) {
    std::ostringstream os;
    os << "syzygy dims for " << gens_str(ideal) << " on " << ideal.ring().poly().str()
       << " over " << ideal.ring().field().describe() << ":\n";
    for (long k = lo; k <= hi; ++k)
        os << "  k=" << k << ": " << syzygy_dim(ideal, k) << "\n";
    return os.str();
}

Json frobtest_json(const IdealGens& ideal, const HomPoly& element, const OracleReport& rep) {
    Json j;
    j["curve"] = ideal.ring().poly().str();
    j["char"] = static_cast<long>(ideal.ring().field().characteristic());
    Json gens = Json::array();
    for (const auto& g : ideal.gens()) gens.push_back(g.str());
    j["ideal"] = gens;
    j["element"] = element.str();
    j["oracle"] = oracle_json(rep);
    j["version"] = kVersion;
    return j;
}

std::string frobtest_text(const IdealGens& ideal, const HomPoly& element,
                          const OracleReport& rep) {
    std::ostringstream os;
    os << "Frobenius closure probe for " << element.str() << " against " << gens_str(ideal)
       << " on " << ideal.ring().poly().str() << " over " << ideal.ring().field().describe()
       << "\n";
    if (rep.in_frobenius_closure) {
        os << "hit: e=" << rep.e << ", q=" << rep.q << "\n";
        for (std::size_t i = 0; i < rep.witnesses.size(); ++i)
            os << "  w" << i + 1 << " = " << rep.witnesses[i].str() << "\n";
    } else {
        os << "no witness up to e=" << rep.e_tested
           << (rep.budget_capped ? " (budget capped)" : "") << "\n";
    }
    return os.str();
}

} // namespace tclo
