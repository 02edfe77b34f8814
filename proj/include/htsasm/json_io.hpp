#pragma once

#include "htsasm/asm.hpp"
#include "htsasm/detkit.hpp"
#include "htsasm/identities.hpp"
#include "htsasm/paths.hpp"
#include "htsasm/symfunc.hpp"
#include "htsasm/tableaux.hpp"
#include "json.hpp"

namespace htsasm {

// Insertion-ordered JSON keeps serialized output byte-stable.
using Json = nlohmann::ordered_json;

// { "kind": "B"|"Bprime", "n": int, "lambda": [int...], "entries": [[int...]...] }
Json asmToJson(const HalfTurnAsm& a);
HalfTurnAsm asmFromJson(const Json& j);  // throws ParseError on malformed input

// { "lambda": [int...], "rows": [[{"l": int, "bar": bool, "prime": bool}...]...] }
// Kind and n are carried out of band, so the reader takes them as arguments.
Json tableauToJson(const ShiftedTableau& t);
ShiftedTableau tableauFromJson(const Json& j, Kind kind, int n);

// Edge list: { "n": int, "lambda": [...], "paths": [[{"kind": "curve"|
// "horizontal"|"vertical"|"diagonal", "from": [col, level], "to": [...]}]] }
Json pathsToJson(const LatticePathConfig& c);

// { "arms": [int...], "legs": [int...] }; plain partitions serialize as
// bare integer arrays via nlohmann's native vector support.
Json frobeniusToJson(const FrobeniusForm& f);
FrobeniusForm frobeniusFromJson(const Json& j);  // throws ParseError

// { "scheme": name, "n": int, "mu": [...], "lhs": str, "rhsDelta": str,
//   "rhsPhi": str, "equal": bool, "diff": str (only when unequal) } with
// polynomials in canonical string form.
Json reportToJson(const VerificationReport& r);

// { "lemma": name, "n": int, "mode": "symbolic"|"random", "ok": bool,
//   "seed": uint (random runs only), "failures": [str...] }
Json lemmaReportToJson(const LemmaReport& r);

}  // namespace htsasm
