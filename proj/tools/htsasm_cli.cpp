// Command-line front end for the half-turn matrix library: enumerate shape
// families, convert between the equivalent representations, evaluate weighted
// sums, run verification campaigns, check the determinant identities, and
// render square-ice or lattice-path diagrams as SVG.
//
// Exit codes: 0 success; 1 a checked identity failed; 2 bad flags or usage;
// 3 size limit exceeded; 4 invalid input object.
//
// stdout carries data only; all logs and error messages go to stderr.

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <future>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "htsasm/detkit.hpp"
#include "htsasm/identities.hpp"
#include "htsasm/json_io.hpp"

namespace {

using namespace htsasm;

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;
constexpr int kLimit = 3;
constexpr int kBadInput = 4;

// Thrown by handlers to unwind with a specific exit code and message.
struct CliError {
    int code;
    std::string message;
};

long maxCellsFromEnv() {
    const char* raw = std::getenv("HTSASM_MAX_CELLS");
    if (raw == nullptr || *raw == '\0') return 0;
    char* end = nullptr;
    long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v <= 0)
        throw CliError{kUsage, "HTSASM_MAX_CELLS must be a positive integer"};
    return v;
}

// Writes to the given file, or to stdout when the path is empty, ensuring a
// final newline either way.
void writeData(const std::string& outPath, const std::string& data) {
    if (outPath.empty()) {
        std::cout << data;
        if (data.empty() || data.back() != '\n') std::cout << '\n';
        return;
    }
    std::ofstream f(outPath, std::ios::binary);
    if (!f) throw CliError{kUsage, "cannot open output file: " + outPath};
    f << data;
    if (data.empty() || data.back() != '\n') f << '\n';
}

Kind kindFromFlag(const std::string& name) {
    try {
        return parseKind(name);
    } catch (const ParseError&) {
        throw CliError{kUsage, "--kind must be B or Bprime (got \"" + name + "\")"};
    }
}

WeightScheme schemeFromFlag(const std::string& name) {
    try {
        return parseScheme(name);
    } catch (const ParseError&) {
        throw CliError{kUsage,
                       "unknown scheme \"" + name +
                           "\" (expected generic, result1, okada, simpson, tabony, bn or bs)"};
    }
}

StrictPartition lambdaFromFlag(const std::vector<int>& parts, int n) {
    StrictPartition lambda(parts.begin(), parts.end());
    if (!isStrictPartition(lambda))
        throw CliError{kUsage,
                       "--lambda must be a strictly decreasing list of positive integers"};
    if (static_cast<int>(lambda.size()) != n)
        throw CliError{kUsage,
                       "--lambda needs exactly n parts (the column totals reach 1 exactly n "
                       "times)"};
    return lambda;
}

Json violationJson(const std::vector<std::string>& violations) {
    Json j;
    j["ok"] = false;
    j["violations"] = violations;
    return j;
}

Json compassJson(const HalfTurnAsm& a) {
    Json rows = Json::array();
    for (const auto& row : toCompass(a).entries) {
        Json cells = Json::array();
        for (Compass c : row) cells.push_back(compassName(c));
        rows.push_back(std::move(cells));
    }
    return rows;
}

Json readInputObject() {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    try {
        return Json::parse(buf.str());
    } catch (const Json::exception& e) {
        throw CliError{kBadInput, std::string("invalid JSON input: ") + e.what()};
    }
}

// ---------------------------------------------------------------------------
// Square-ice rendering.  Each cell becomes a vertex with four half-edges whose
// orientations follow the compass dictionary: the label names the two compass
// directions whose edges point INTO the vertex, the other two point out.  The
// left boundary carries the U-turn arcs joining row i to row N+1-i; for odd
// sizes the central row keeps a free half-edge instead.

void arrowHead(std::ostringstream& svg, int px, int py, int ux, int uy) {
    // Triangle with tip at p + 5u and base corners at p - 3u +- 4v, v = u^perp.
    int tx = px + 5 * ux, ty = py + 5 * uy;
    int b1x = px - 3 * ux - 4 * uy, b1y = py - 3 * uy + 4 * ux;
    int b2x = px - 3 * ux + 4 * uy, b2y = py - 3 * uy - 4 * ux;
    svg << "<polygon points=\"" << tx << ',' << ty << ' ' << b1x << ',' << b1y << ' ' << b2x
        << ',' << b2y << "\" fill=\"#111111\"/>\n";
}

std::string iceSvg(const HalfTurnAsm& a) {
    const CompassMatrix cm = toCompass(a);
    const int N = a.rows(), m = a.cols();
    const int s = 40, left = 80, top = 50;
    const int width = left + (m - 1) * s + 50;
    const int height = top + (N - 1) * s + 50;

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
        << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
    svg << "<title>half-turn square ice (kind " << kindName(a.kind) << ", n " << a.n
        << ")</title>\n";
    svg << "<rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    // U-turn arcs on the west boundary, bulging away from the grid.
    for (int i = 0; 2 * i < N - 1; ++i) {
        int x = left - s / 2;
        int y1 = top + i * s, y2 = top + (N - 1 - i) * s;
        int r = (y2 - y1) / 2;
        svg << "<path d=\"M " << x << ' ' << y1 << " A " << r << ' ' << r << " 0 0 0 " << x
            << ' ' << y2 << "\" fill=\"none\" stroke=\"#2a6fb0\" stroke-width=\"2\"/>\n";
    }

    // Row and column indices.
    for (int j = 0; j < m; ++j)
        svg << "<text x=\"" << left + j * s << "\" y=\"" << top - s / 2 - 6
            << "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"12\" "
               "fill=\"#666666\">"
            << j + 1 << "</text>\n";
    for (int i = 0; i < N; ++i)
        svg << "<text x=\"" << left + (m - 1) * s + s / 2 + 10 << "\" y=\"" << top + i * s + 4
            << "\" font-family=\"monospace\" font-size=\"12\" fill=\"#666666\">" << i + 1
            << "</text>\n";

    static const int dx[4] = {0, 1, 0, -1};  // N, E, S, W
    static const int dy[4] = {-1, 0, 1, 0};
    for (int i = 0; i < N; ++i) {
        for (int j = 0; j < m; ++j) {
            const int cx = left + j * s, cy = top + i * s;
            const std::string name = compassName(cm.entries[i][j]);
            bool in[4] = {false, false, false, false};
            for (char ch : name)
                in[ch == 'N' ? 0 : ch == 'E' ? 1 : ch == 'S' ? 2 : 3] = true;
            const bool neighbor[4] = {i > 0, j + 1 < m, i + 1 < N, j > 0};
            for (int d = 0; d < 4; ++d) {
                int ex = cx + dx[d] * (s / 2), ey = cy + dy[d] * (s / 2);
                svg << "<line x1=\"" << cx << "\" y1=\"" << cy << "\" x2=\"" << ex
                    << "\" y2=\"" << ey << "\" stroke=\"#111111\" stroke-width=\"1.5\"/>\n";
                if (!in[d]) {
                    // Outgoing: one head per interior edge, drawn by its tail.
                    arrowHead(svg, cx + dx[d] * 15, cy + dy[d] * 15, dx[d], dy[d]);
                } else if (!neighbor[d]) {
                    // Incoming boundary edge: head pointing at the vertex.
                    arrowHead(svg, cx + dx[d] * 7, cy + dy[d] * 7, -dx[d], -dy[d]);
                }
            }
            svg << "<circle cx=\"" << cx << "\" cy=\"" << cy
                << "\" r=\"3\" fill=\"#111111\"/>\n";
        }
    }
    svg << "</svg>\n";
    return svg.str();
}

// ---------------------------------------------------------------------------
// Command handlers.

int runEnumerate(const std::string& kindFlag, int n, const std::vector<int>& lambdaFlag,
                 const std::string& format, const std::string& outPath, long maxCells) {
    Kind kind = kindFromFlag(kindFlag);
    StrictPartition lambda = lambdaFromFlag(lambdaFlag, n);
    std::vector<HalfTurnAsm> all = enumerateAsms(kind, n, lambda, maxCells);
    std::string payload;
    if (format == "array") {
        Json arr = Json::array();
        for (const HalfTurnAsm& a : all) arr.push_back(asmToJson(a));
        payload = arr.dump(2);
    } else {
        std::ostringstream lines;
        for (const HalfTurnAsm& a : all) lines << asmToJson(a).dump() << '\n';
        payload = lines.str();
    }
    std::cerr << "enumerated " << all.size() << " matrices\n";
    writeData(outPath, payload);
    return kOk;
}

std::set<std::string> parseTargets(const std::string& flag) {
    std::set<std::string> targets;
    std::istringstream in(flag);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok != "asm" && tok != "cpm" && tok != "tableau" && tok != "paths")
            throw CliError{kUsage, "unknown target \"" + tok +
                                       "\" (expected asm, cpm, tableau or paths)"};
        targets.insert(tok);
    }
    if (targets.empty()) throw CliError{kUsage, "--targets must not be empty"};
    return targets;
}

int runConvert(const std::string& kindFlag, int nFlag, const std::string& targetsFlag,
               const std::string& outPath) {
    Json j = readInputObject();
    const bool autoTargets = targetsFlag == "auto";
    std::set<std::string> targets;
    if (!autoTargets) targets = parseTargets(targetsFlag);

    if (j.contains("entries")) {
        if (!kindFlag.empty() || nFlag >= 0)
            throw CliError{kUsage,
                           "--kind/--n apply to tableau input only; the matrix object "
                           "carries its own"};
        HalfTurnAsm a;
        try {
            a = asmFromJson(j);
        } catch (const HtsasmError& e) {
            throw CliError{kBadInput, e.what()};
        }
        ValidationReport rep;
        try {
            rep = validate(a);
        } catch (const HtsasmError& e) {
            rep.ok = false;
            rep.violations = {e.what()};
        }
        if (!rep.ok) {
            writeData(outPath, violationJson(rep.violations).dump(2));
            return kBadInput;
        }
        const bool odd = a.kind == Kind::OddBPrime;
        if (autoTargets) {
            targets = {"cpm", "tableau"};
            if (odd) targets.insert("paths");
        }
        if (targets.count("paths") != 0 && !odd)
            throw CliError{kUsage, "the paths target needs the odd alphabet (kind Bprime)"};

        Json out;
        out["input"] = "asm";
        out["ok"] = true;
        out["asm"] = asmToJson(a);
        ShiftedTableau t = fromAsm(a);
        if (targets.count("cpm") != 0) out["cpm"] = compassJson(a);
        if (targets.count("tableau") != 0) out["tableau"] = tableauToJson(t);
        if (targets.count("paths") != 0) out["paths"] = pathsToJson(toPaths(t));
        out["roundTrip"] = toAsm(t) == a;
        writeData(outPath, out.dump(2));
        return kOk;
    }

    if (j.contains("rows")) {
        if (kindFlag.empty() || nFlag < 0)
            throw CliError{kUsage, "tableau input requires --kind and --n"};
        Kind kind = kindFromFlag(kindFlag);
        ShiftedTableau t;
        try {
            t = tableauFromJson(j, kind, nFlag);
        } catch (const HtsasmError& e) {
            throw CliError{kBadInput, e.what()};
        }
        const bool odd = kind == Kind::OddBPrime;
        if (autoTargets) {
            targets = {"asm", "cpm"};
            if (odd) targets.insert("paths");
        }
        if (targets.count("paths") != 0 && !odd)
            throw CliError{kUsage, "the paths target needs the odd alphabet (kind Bprime)"};

        Json out;
        out["input"] = "tableau";
        out["ok"] = true;
        out["tableau"] = tableauToJson(t);
        const bool needStrict = targets.count("asm") != 0 || targets.count("cpm") != 0;
        bool haveRoundTrip = false, roundTrip = false;
        if (needStrict) {
            ValidationReport rep;
            try {
                rep = validatePrimed(t);
            } catch (const HtsasmError& e) {
                rep.ok = false;
                rep.violations = {e.what()};
            }
            if (!rep.ok) {
                writeData(outPath, violationJson(rep.violations).dump(2));
                return kBadInput;
            }
            HalfTurnAsm a;
            try {
                a = toAsm(t);
            } catch (const HtsasmError& e) {
                writeData(outPath, violationJson({e.what()}).dump(2));
                return kBadInput;
            }
            if (targets.count("asm") != 0) out["asm"] = asmToJson(a);
            if (targets.count("cpm") != 0) out["cpm"] = compassJson(a);
            // The input must be one of the primed decorations of its matrix.
            std::vector<ShiftedTableau> fiber = primings(a);
            roundTrip = std::find(fiber.begin(), fiber.end(), t) != fiber.end();
            haveRoundTrip = true;
        }
        if (targets.count("paths") != 0) {
            try {
                out["paths"] = pathsToJson(toPaths(t));
            } catch (const SchemeKindMismatch& e) {
                throw CliError{kUsage, e.what()};
            } catch (const HtsasmError& e) {
                writeData(outPath, violationJson({e.what()}).dump(2));
                return kBadInput;
            }
        }
        if (haveRoundTrip) out["roundTrip"] = roundTrip;
        writeData(outPath, out.dump(2));
        return kOk;
    }

    throw CliError{kBadInput,
                   "unrecognized input object: expected a matrix (\"entries\") or a tableau "
                   "(\"rows\")"};
}

int runWeigh(const std::string& schemeFlag, const std::string& kindFlag, int n,
             const std::vector<int>& lambdaFlag, const std::vector<int>& muFlag,
             bool lambdaGiven, bool muGiven, bool perturb, const std::string& outPath,
             long maxCells) {
    WeightScheme scheme = schemeFromFlag(schemeFlag);
    Kind kind = schemeKind(scheme);
    if (!kindFlag.empty() && kindFromFlag(kindFlag) != kind)
        throw CliError{kUsage, "scheme " + schemeName(scheme) + " is defined for kind " +
                                   kindName(kind)};
    if (n < 1) throw CliError{kUsage, "--n must be a positive integer"};

    StrictPartition lambda;
    Partition mu(muFlag.begin(), muFlag.end());
    if (lambdaGiven) {
        lambda = lambdaFromFlag(lambdaFlag, n);
    } else {
        try {
            lambda = shapeFromMu(mu, n);
        } catch (const HtsasmError& e) {
            throw CliError{kUsage, std::string("bad --mu: ") + e.what()};
        }
    }

    TablePerturbation knob{};
    LaurentPoly sum = sumWgt(kind, n, lambda, scheme, maxCells, perturb ? &knob : nullptr);

    Json out;
    out["scheme"] = schemeName(scheme);
    out["kind"] = kindName(kind);
    out["n"] = n;
    if (muGiven || !lambdaGiven) out["mu"] = mu;
    out["lambda"] = lambda;
    out["perturbed"] = perturb;
    out["terms"] = sum.termCount();
    out["sum"] = sum.str();
    writeData(outPath, out.dump(2));
    return kOk;
}

int runVerify(const std::string& schemeFlag, const std::string& kindFlag, int nMax, int muMax,
              bool perturb, const std::string& outPath, long maxCells) {
    WeightScheme scheme = schemeFromFlag(schemeFlag);
    Kind kind = schemeKind(scheme);
    if (!kindFlag.empty() && kindFromFlag(kindFlag) != kind)
        throw CliError{kUsage, "scheme " + schemeName(scheme) + " is defined for kind " +
                                   kindName(kind)};
    if (nMax < 1) throw CliError{kUsage, "--n-max must be a positive integer"};
    if (muMax < 0) throw CliError{kUsage, "--mu-max must be non-negative"};

    struct Cell {
        int n;
        Partition mu;
    };
    std::vector<Cell> cells;
    for (int n = 1; n <= nMax; ++n)
        for (const Partition& mu : partitionsMaxWeight(muMax, n)) cells.push_back({n, mu});

    // Worker pool with a deterministic merge: one task per campaign cell,
    // results collected in cell order.
    TablePerturbation knob{};
    const TablePerturbation* knobPtr = perturb ? &knob : nullptr;
    std::vector<std::future<VerificationReport>> futures;
    futures.reserve(cells.size());
    for (const Cell& c : cells)
        futures.push_back(std::async(std::launch::async, [&, c] {
            return verifyFactorization(kind, c.n, c.mu, scheme, maxCells, knobPtr);
        }));

    bool allEqual = true;
    Json reports = Json::array();
    for (std::size_t i = 0; i < futures.size(); ++i) {
        VerificationReport r = futures[i].get();
        allEqual = allEqual && r.equal;
        std::cerr << "cell n=" << r.n << " mu=" << Json(r.mu).dump()
                  << (r.equal ? " ok" : " MISMATCH") << '\n';
        reports.push_back(reportToJson(r));
    }

    Json out;
    out["scheme"] = schemeName(scheme);
    out["kind"] = kindName(kind);
    out["nMax"] = nMax;
    out["muMax"] = muMax;
    out["perturbed"] = perturb;
    out["cells"] = cells.size();
    out["allEqual"] = allEqual;
    out["reports"] = std::move(reports);
    writeData(outPath, out.dump(2));
    return allEqual ? kOk : kFail;
}

int runRender(const std::string& kindFlag, int nFlag, const std::string& outPath) {
    Json j = readInputObject();
    std::string svg;
    if (j.contains("entries")) {
        if (!kindFlag.empty() || nFlag >= 0)
            throw CliError{kUsage,
                           "--kind/--n apply to tableau input only; the matrix object "
                           "carries its own"};
        HalfTurnAsm a;
        try {
            a = asmFromJson(j);
        } catch (const HtsasmError& e) {
            throw CliError{kBadInput, e.what()};
        }
        ValidationReport rep;
        try {
            rep = validate(a);
        } catch (const HtsasmError& e) {
            rep.ok = false;
            rep.violations = {e.what()};
        }
        if (!rep.ok) {
            for (const std::string& v : rep.violations) std::cerr << "violation: " << v << '\n';
            throw CliError{kBadInput, "input matrix is not a valid half-turn matrix"};
        }
        svg = iceSvg(a);
    } else if (j.contains("rows")) {
        if (kindFlag.empty() || nFlag < 0)
            throw CliError{kUsage, "tableau input requires --kind and --n"};
        Kind kind = kindFromFlag(kindFlag);
        if (kind != Kind::OddBPrime)
            throw CliError{kUsage, "path rendering needs the odd alphabet (kind Bprime)"};
        ShiftedTableau t;
        try {
            t = tableauFromJson(j, kind, nFlag);
            svg = renderSvg(toPaths(t));
        } catch (const HtsasmError& e) {
            throw CliError{kBadInput, e.what()};
        }
    } else {
        throw CliError{kBadInput,
                       "unrecognized input object: expected a matrix (\"entries\") or a "
                       "tableau (\"rows\")"};
    }
    writeData(outPath, svg);
    return kOk;
}

int runLemma(const std::string& whichFlag, int n, const std::string& modeFlag, uint64_t seed,
             int trials, int hrVars, const std::string& outPath) {
    LemmaCheckConfig cfg;
    if (whichFlag == "deth")
        cfg.whichLemma = LemmaId::Deth;
    else if (whichFlag == "detm")
        cfg.whichLemma = LemmaId::Detm;
    else if (whichFlag == "hr")
        cfg.whichLemma = LemmaId::Hr;
    else if (whichFlag == "edet")
        cfg.whichLemma = LemmaId::Edet;
    else
        throw CliError{kUsage,
                       "unknown check \"" + whichFlag + "\" (expected deth, detm, hr or edet)"};
    cfg.n = n;
    cfg.mode = modeFlag == "random" ? LemmaMode::RandomEval : LemmaMode::Symbolic;
    cfg.seed = seed;
    cfg.trials = trials;
    cfg.hrVars = hrVars;

    LemmaReport rep;
    try {
        rep = runLemmaCheck(cfg);
    } catch (const SizeLimitExceeded& e) {
        throw CliError{kLimit, e.what()};
    } catch (const HtsasmError& e) {
        throw CliError{kUsage, e.what()};
    }
    writeData(outPath, lemmaReportToJson(rep).dump(2));
    return rep.ok ? kOk : kFail;
}

}  // namespace

int main(int argc, char** argv) {
    std::ios::sync_with_stdio(false);
    CLI::App app{
        "half-turn matrices: enumeration, conversion, weighted sums, verification "
        "campaigns and SVG rendering.\n"
        "Exit codes: 0 ok, 1 identity failure, 2 bad flags, 3 size limit, 4 invalid input."};
    app.require_subcommand(1);

    std::string kindFlag, schemeFlag, targetsFlag = "auto", outPath, format = "jsonl";
    std::string whichFlag, modeFlag = "symbolic";
    std::vector<int> lambdaFlag, muFlag;
    int n = -1, nMax = 2, muMax = 3, trials = 20, hrVars = 2;
    uint64_t seed = 1;
    bool perturb = false;

    CLI::App* cEnum = app.add_subcommand(
        "enumerate", "List every matrix of the shape family, one JSON object each");
    cEnum->add_option("--kind", kindFlag, "matrix kind: B (even) or Bprime (odd)")->required();
    cEnum->add_option("--n", n, "half the number of full rows")->required();
    cEnum->add_option("--lambda", lambdaFlag, "shape, e.g. 3,2,1")
        ->required()
        ->delimiter(',');
    cEnum->add_option("--format", format, "jsonl (one object per line) or array")
        ->check(CLI::IsMember({"jsonl", "array"}));
    cEnum->add_option("--out", outPath, "write data to this file instead of stdout");

    CLI::App* cConv = app.add_subcommand(
        "convert", "Read a matrix or tableau JSON object on stdin and attach the other "
                   "representations");
    cConv->add_option("--kind", kindFlag, "alphabet kind for tableau input");
    cConv->add_option("--n", n, "alphabet rank for tableau input");
    cConv->add_option("--targets", targetsFlag,
                      "comma list of asm,cpm,tableau,paths (default: all applicable)");
    cConv->add_option("--out", outPath, "write data to this file instead of stdout");

    CLI::App* cWeigh = app.add_subcommand(
        "weigh", "Sum the scheme's weights over a whole shape family");
    cWeigh->add_option("--scheme", schemeFlag,
                       "generic, result1, okada, simpson, tabony, bn or bs")
        ->required();
    cWeigh->add_option("--kind", kindFlag, "matrix kind (checked against the scheme)");
    cWeigh->add_option("--n", n, "half the number of full rows")->required();
    CLI::Option* weighLambda =
        cWeigh->add_option("--lambda", lambdaFlag, "shape, e.g. 3,2,1")->delimiter(',');
    CLI::Option* weighMu =
        cWeigh->add_option("--mu", muFlag, "partition added to the staircase shape")
            ->delimiter(',')
            ->excludes(weighLambda);
    cWeigh->add_flag("--perturb", perturb, "negative control: damage one weight class");
    cWeigh->add_option("--out", outPath, "write data to this file instead of stdout");

    CLI::App* cVerify = app.add_subcommand(
        "verify", "Factorization campaign over n = 1..n-max and all mu with |mu| <= mu-max");
    cVerify->add_option("--scheme", schemeFlag,
                        "generic, result1, okada, simpson, tabony, bn or bs")
        ->required();
    cVerify->add_option("--kind", kindFlag, "matrix kind (checked against the scheme)");
    cVerify->add_option("--n-max", nMax, "largest n (default 2)");
    cVerify->add_option("--mu-max", muMax, "largest |mu| (default 3)");
    cVerify->add_flag("--perturb", perturb, "negative control: damage one weight class");
    cVerify->add_option("--out", outPath, "write data to this file instead of stdout");

    CLI::App* cRender = app.add_subcommand(
        "render", "Read a matrix or tableau JSON object on stdin and emit an SVG diagram");
    cRender->add_option("--kind", kindFlag, "alphabet kind for tableau input");
    cRender->add_option("--n", n, "alphabet rank for tableau input");
    cRender->add_option("--out", outPath, "write the SVG to this file instead of stdout");

    CLI::App* cLemma = app.add_subcommand(
        "lemma", "Check one of the determinant/difference identities");
    cLemma->add_option("which", whichFlag, "deth, detm, hr or edet")->required();
    cLemma->add_option("--n", n, "matrix size (deth/detm/edet) or difference order (hr)");
    cLemma->add_option("--mode", modeFlag, "symbolic or random")
        ->check(CLI::IsMember({"symbolic", "random"}));
    cLemma->add_option("--seed", seed, "random campaign seed (default 1)");
    cLemma->add_option("--trials", trials, "random campaign trial count (default 20)");
    cLemma->add_option("--hr-vars", hrVars, "extra alphabet size for the hr check");
    cLemma->add_option("--out", outPath, "write data to this file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        const long maxCells = maxCellsFromEnv();
        if (cEnum->parsed())
            return runEnumerate(kindFlag, n, lambdaFlag, format, outPath, maxCells);
        if (cConv->parsed()) return runConvert(kindFlag, n, targetsFlag, outPath);
        if (cWeigh->parsed())
            return runWeigh(schemeFlag, kindFlag, n, lambdaFlag, muFlag,
                            weighLambda->count() > 0, weighMu->count() > 0, perturb, outPath,
                            maxCells);
        if (cVerify->parsed())
            return runVerify(schemeFlag, kindFlag, nMax, muMax, perturb, outPath, maxCells);
        if (cRender->parsed()) return runRender(kindFlag, n, outPath);
        if (cLemma->parsed())
            return runLemma(whichFlag, n < 0 ? 2 : n, modeFlag, seed, trials, hrVars, outPath);
    } catch (const CliError& e) {
        std::cerr << "error: " << e.message << '\n';
        return e.code;
    } catch (const SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kLimit;
    } catch (const HtsasmError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return kUsage;
}
