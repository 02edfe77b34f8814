#include "htsasm/json_io.hpp"

namespace htsasm {

Json asmToJson(const HalfTurnAsm& a) {
    Json j;
    j["kind"] = kindName(a.kind);
    j["n"] = a.n;
    j["lambda"] = a.lambda;
    j["entries"] = a.entries;
    return j;
}

HalfTurnAsm asmFromJson(const Json& j) {
    try {
        HalfTurnAsm a;
        a.kind = parseKind(j.at("kind").get<std::string>());
        a.n = j.at("n").get<int>();
        a.lambda = j.at("lambda").get<StrictPartition>();
        a.entries = j.at("entries").get<std::vector<std::vector<int>>>();
        return a;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad matrix object: ") + e.what());
    }
}

Json tableauToJson(const ShiftedTableau& t) {
    Json j;
    j["lambda"] = t.lambda;
    Json rows = Json::array();
    for (const auto& row : t.rows) {
        Json cells = Json::array();
        for (const TabEntry& e : row)
            cells.push_back(Json{{"l", e.letter}, {"bar", e.barred}, {"prime", e.primed}});
        rows.push_back(std::move(cells));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json pathsToJson(const LatticePathConfig& c) {
    static const char* names[] = {"curve", "horizontal", "vertical", "diagonal"};
    Json j;
    j["n"] = c.n;
    j["lambda"] = c.lambda;
    Json paths = Json::array();
    for (const LatticePath& p : c.paths) {
        Json edges = Json::array();
        for (const PathEdge& e : p.edges)
            edges.push_back(Json{{"kind", names[static_cast<int>(e.kind)]},
                                 {"from", {e.fromCol, e.fromLevel}},
                                 {"to", {e.toCol, e.toLevel}}});
        paths.push_back(std::move(edges));
    }
    j["paths"] = std::move(paths);
    return j;
}

Json frobeniusToJson(const FrobeniusForm& f) {
    Json j;
    j["arms"] = f.arms;
    j["legs"] = f.legs;
    return j;
}

FrobeniusForm frobeniusFromJson(const Json& j) {
    try {
        FrobeniusForm f;
        f.arms = j.at("arms").get<std::vector<int>>();
        f.legs = j.at("legs").get<std::vector<int>>();
        return f;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad Frobenius object: ") + e.what());
    }
}

Json reportToJson(const VerificationReport& r) {
    Json j;
    j["scheme"] = schemeName(r.scheme);
    j["n"] = r.n;
    j["mu"] = r.mu;
    j["lhs"] = r.lhs.str();
    j["rhsDelta"] = r.rhsDelta.str();
    j["rhsPhi"] = r.rhsPhi.str();
    j["equal"] = r.equal;
    if (!r.equal) j["diff"] = r.counterexampleDiff.str();
    return j;
}

Json lemmaReportToJson(const LemmaReport& r) {
    Json j;
    j["lemma"] = r.lemma;
    j["n"] = r.n;
    j["mode"] = r.mode;
    j["ok"] = r.ok;
    if (r.seed) j["seed"] = *r.seed;
    j["failures"] = r.failures;
    return j;
}

ShiftedTableau tableauFromJson(const Json& j, Kind kind, int n) {
    try {
        ShiftedTableau t;
        t.kind = kind;
        t.n = n;
        t.lambda = j.at("lambda").get<StrictPartition>();
        for (const Json& row : j.at("rows")) {
            std::vector<TabEntry> cells;
            for (const Json& c : row)
                cells.push_back({c.at("l").get<int>(), c.at("bar").get<bool>(),
                                 c.at("prime").get<bool>()});
            t.rows.push_back(std::move(cells));
        }
        return t;
    } catch (const Json::exception& e) {
        throw ParseError(std::string("bad tableau object: ") + e.what());
    }
}

}  // namespace htsasm
