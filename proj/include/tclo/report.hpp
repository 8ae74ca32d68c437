#pragma once

#include <string>

#include "json.hpp"
#include "tclo/engine.hpp"

namespace tclo {

inline constexpr const char* kVersion = "0.1.0";

using Json = nlohmann::ordered_json;

// Human phrase for a caveat in the given field, for the text renderers.
// JSON reports carry the bare enum identifier from caveat_str instead.
std::string caveat_phrase(Caveat c, const FieldSpec& fs);

// Ideal analysis report: ring invariants, syzygy dimension table with the
// stability certificate and slope bounds, the ideal-level certificates, and
// the degree table over [lo, hi]. Deterministic: identical inputs produce
// byte-identical dumps. The oracle key is null (no element, no probe).
Json analyze_json(const IdealContext& ctx, long lo, long hi);

// Element decision report: the same core document plus a `decision` object
// and the oracle result of the probe that ran for the element.
Json decide_json(const IdealContext& ctx, const HomPoly& element, const Decision& d,
                 long lo, long hi);

// One scan cell as a JSONL row: {p, delta, a, degree_table, certificates,
// seed, ms}.
Json scan_row_json(unsigned long p, long delta, long a, const IdealContext& ctx,
                   const std::vector<DegreeRow>& rows, long long ms);

// Plain-text renderers for the same content.
std::string analyze_text(const IdealContext& ctx, long lo, long hi);
std::string decide_text(const IdealContext& ctx, const HomPoly& element, const Decision& d,
                        long lo, long hi);

// Syzygy dimension listing for the `syzygies` command: dims for k in
// [lo, hi] computed directly (independent of any context sweep).
Json syzygies_json(const IdealGens& ideal, long lo, long hi);
std::string syzygies_text(const IdealGens& ideal, long lo, long hi);

// Frobenius probe report for the `frobtest` command.
Json frobtest_json(const IdealGens& ideal, const HomPoly& element, const OracleReport& rep);
std::string frobtest_text(const IdealGens& ideal, const HomPoly& element,
                          const OracleReport& rep);

} // namespace tclo
