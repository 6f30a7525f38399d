#include "dfam/cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>
#include <json.hpp>

#include "dfam/error.hpp"
#include "dfam/filter.hpp"
#include "dfam/fixtures.hpp"
#include "dfam/matrices.hpp"
#include "dfam/search.hpp"
#include "dfam/serialize.hpp"

namespace dfam::cli {

namespace {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

ParsedFamily load_family(const std::string& path, bool force_gs) {
    ParsedFamily pf = family_from_json(read_file(path));
    pf.gs_mode = pf.gs_mode || force_gs;
    return pf;
}

std::string fmt(double x) {
    std::ostringstream ss;
    ss << std::setprecision(10) << (std::abs(x) < 1e-9 ? 0.0 : x);
    return ss.str();
}

// ---- verify ----

struct VerifyOptions {
    std::string input;
    bool gs = false;
};

int cmd_verify(const VerifyOptions& o, std::ostream& out) {
    const ParsedFamily pf = load_family(o.input, o.gs);
    const DifferenceFamily& fam = pf.family;
    const FamilyReport r = verify_family(fam, pf.gs_mode);
    out << "group " << fam.group.literal() << "\n";
    out << "params " << fam.params.literal() << "\n";
    out << "difference counting: " << (r.counting_valid ? "pass" : "fail") << "\n";
    out << "group algebra: " << (r.algebra_valid ? "pass" : "fail") << "\n";
    out << "methods agree: " << (r.methods_agree ? "yes" : "no") << "\n";
    if (r.valid) {
        out << "valid, λ=" << fam.params.lambda << ", n=" << fam.params.n() << "\n";
        return kExitOk;
    }
    out << "invalid: " << r.reason << "\n";
    return kExitVerificationFailed;
}

// ---- search ----

struct SearchOptions {
    std::string group, params, mode = "exhaustive";
    bool no_prune = false, no_dedup = false, gs = false;
    std::uint64_t seed = 1;
    unsigned workers = 1;
    double tol = 1e-6;
    SearchLimits limits;
};

int cmd_search(const SearchOptions& o, std::ostream& out) {
    static const std::map<std::string, SearchMode> modes{
        {"exhaustive", SearchMode::exhaustive}, {"fingerprint", SearchMode::fingerprint}, {"anneal", SearchMode::anneal}};
    SearchConfig cfg;
    cfg.mode = modes.at(o.mode);
    cfg.params = parse_params(o.params);
    cfg.dedup = !o.no_dedup;
    cfg.psd_prune = !o.no_prune;
    cfg.gs_mode = o.gs;
    cfg.seed = o.seed;
    cfg.tol = o.tol;
    cfg.workers = o.workers;
    cfg.limits = o.limits;
    const GroupSpec g = parse_group_literal(o.group);
    if (!validate_params(cfg.params, cfg.gs_mode)) {
        throw DomainError("parameter set " + cfg.params.literal() + " is not admissible");
    }

    auto sink = [&out, &cfg](const DifferenceFamily& fam) { out << family_to_json(fam, cfg.gs_mode) << "\n" << std::flush; };
    SearchStats stats;
    std::size_t found = 0;
    bool exhausted = false;
    try {
        const SearchResult r = search(g, cfg, sink);
        stats = r.stats;
        found = r.families.size();
        exhausted = r.stats.budget_exhausted;
    } catch (const BudgetExceededError& e) {
        exhausted = true;
        json s = {{"summary", {{"error", e.what()}, {"budget_exhausted", true}}}};
        out << s.dump() << "\n";
        return kExitBudgetExhausted;
    }
    json s = {{"summary",
               {{"group", g.literal()},
                {"params", cfg.params.literal()},
                {"mode", o.mode},
                {"solutions", found},
                {"candidates", stats.candidates},
                {"pruned_by_psd", stats.pruned_by_psd},
                {"matched", stats.matched},
                {"verified", stats.verified},
                {"budget_exhausted", exhausted}}}};
    if (cfg.mode == SearchMode::anneal) {
        s["summary"]["iterations"] = stats.iterations;
        s["summary"]["psd_rejected_moves"] = stats.psd_rejected_moves;
        s["summary"]["best_objective"] = stats.best_objective;
    }
    out << s.dump() << "\n";
    // A local search with no stopping target always ends on its budget; that is only a failure if it found nothing.
    if (exhausted && (cfg.mode != SearchMode::anneal || found == 0)) return kExitBudgetExhausted;
    return kExitOk;
}

// ---- construct ----

struct ConstructOptions {
    std::string input, array, format = "text";
    bool swap = false, gs = false;
    std::size_t bush = 0;
};

int cmd_construct(const ConstructOptions& o, std::ostream& out, std::ostream& err) {
    ParsedFamily pf = load_family(o.input, o.gs || o.array == "gs" || o.array == "gs-sym");
    DifferenceFamily fam = pf.family;
    if (o.swap) {
        if (fam.blocks.size() != 2) throw ShapeError("--swap needs a family of two blocks");
        std::swap(fam.blocks[0], fam.blocks[1]);
        std::swap(fam.params.k[0], fam.params.k[1]);
    }
    const FamilyReport fr = verify_family(fam, pf.gs_mode);
    if (!fr.valid) {
        err << "input family is not valid: " << fr.reason << "\n";
        return kExitVerificationFailed;
    }
    const std::vector<IntMatrix> a = family_matrices(fam);
    auto need = [&](std::size_t t) {
        if (a.size() != t) {
            throw ShapeError("array " + o.array + " needs " + std::to_string(t) + " blocks, family has " +
                             std::to_string(a.size()));
        }
    };

    IntMatrix h;
    std::vector<MatrixProperty> props{MatrixProperty::hadamard};
    try {
        if (o.array == "gs" || o.array == "gs-sym") {
            need(4);
            const bool sym = o.array == "gs-sym";
            const IntMatrix r = sym ? IntMatrix::identity(fam.group.order()) : r_matrix(fam.group);
            h = gs_array({a[0], a[1], a[2], a[3]}, r, sym ? GsSigns::symmetric : GsSigns::standard);
            if (sym) props.push_back(MatrixProperty::symmetric);
        } else if (o.array == "do" || o.array == "do-sym") {
            need(2);
            const bool sym = o.array == "do-sym";
            h = do_array(a[0], a[1], sym);
            props = {MatrixProperty::do_bound};
            if (sym) props.push_back(MatrixProperty::symmetric);
        } else if (o.array == "legendre-sym" || o.array == "legendre-skew") {
            need(2);
            const bool sym = o.array == "legendre-sym";
            h = legendre_array(a[0], a[1], sym ? LegendreKind::symmetric : LegendreKind::skew);
            props.push_back(sym ? MatrixProperty::symmetric : MatrixProperty::skew);
        } else if (o.array == "golay") {
            need(2);
            h = golay_array(a[0], a[1]);
            props.push_back(MatrixProperty::symmetric);
        } else {
            throw ParseError("unknown array " + o.array);
        }
    } catch (const PreconditionError& e) {
        err << "construction precondition failed: " << e.what() << "\n";
        return kExitVerificationFailed;
    }
    if (o.bush) props.push_back(MatrixProperty::bush);

    const MatrixReport rep = verify_matrix(h, props, o.bush);
    if (!rep.all_pass()) {
        err << "verifier: " << rep.summary() << "\n";
        return kExitVerificationFailed;
    }
    if (o.format == "json") {
        out << matrix_to_json(h) << "\n";
    } else {
        out << to_text(h);
    }
    out << "verifier: " << rep.summary() << "\n";
    return kExitOk;
}

// ---- compress ----

struct CompressOptions {
    std::string input;
    std::string generators = "[]";
    bool gs = false;
};

Element parse_element(const GroupSpec& g, const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception&) {
        throw ParseError("element must be JSON, e.g. [0,3] or 3: " + text);
    }
    std::vector<int> residues;
    if (j.is_number_integer()) {
        residues.push_back(j.get<int>());
    } else if (j.is_array()) {
        residues = j.get<std::vector<int>>();
    } else {
        throw ParseError("bad element " + text);
    }
    Element e{residues};
    g.index_of(e);
    return e;
}

int cmd_compress(const CompressOptions& o, std::ostream& out) {
    const ParsedFamily pf = load_family(o.input, o.gs);
    const GroupSpec& g = pf.family.group;
    std::vector<Element> gens;
    json jg;
    try {
        jg = json::parse(o.generators);
    } catch (const json::exception&) {
        throw ParseError("generators must be a JSON list of elements");
    }
    if (!jg.is_array()) throw ParseError("generators must be a JSON list of elements");
    for (const json& je : jg) gens.push_back(parse_element(g, je.dump()));
    const QuotientPresentation q = quotient(g, subgroup_generate(g, gens));
    const std::vector<IntFunction> fs = associated_functions(pf.family);
    const CompressionReport rep = compression_report(fs, q);

    json funcs = json::array();
    for (const auto& f : fs) funcs.push_back(compress(f, q).values);
    auto paf_json = [](const std::optional<PafConstants>& c) -> json {
        if (!c) return nullptr;
        return json{{"alpha0", c->alpha0}, {"alpha", c->alpha}};
    };
    auto psd_json = [&](const std::optional<PafConstants>& c, std::int64_t v) -> json {
        if (!c) return nullptr;
        const PsdConstants p = psd_constants_from_paf(v, *c);
        return json{{"beta0", p.beta0}, {"beta", p.beta}};
    };
    const auto vq = static_cast<std::int64_t>(q.quotient.order());
    json j = {{"group", g.orders()},
              {"subgroup_order", q.subgroup.order()},
              {"quotient", q.quotient.orders()},
              {"functions", funcs},
              {"paf", paf_json(rep.observed)},
              {"psd", psd_json(rep.observed, vq)},
              {"expected_paf", paf_json(rep.expected)},
              {"original_paf", paf_json(rep.original)},
              {"constants_match", rep.complementary && rep.constants_match}};
    out << j.dump() << "\n";
    return rep.complementary && rep.constants_match ? kExitOk : kExitVerificationFailed;
}

// ---- psd-test ----

struct PsdOptions {
    std::string group, block, params;
    std::optional<std::int64_t> n;
    double tol = kPsdTestTolerance;
};

int cmd_psd(const PsdOptions& o, std::ostream& out) {
    const GroupSpec g = parse_group_literal(o.group);
    std::int64_t n = 0;
    if (o.n) {
        n = *o.n;
    } else if (!o.params.empty()) {
        const ParameterSet p = parse_params(o.params);
        if (!validate_params(p)) throw DomainError("parameter set " + p.literal() + " is not admissible");
        n = p.n();
    } else {
        throw ParseError("psd-test needs --n or --params");
    }
    json jb;
    try {
        jb = json::parse(o.block);
    } catch (const json::exception&) {
        throw ParseError("block must be a JSON array of elements");
    }
    if (!jb.is_array()) throw ParseError("block must be a JSON array of elements");
    std::vector<Element> elements;
    for (const json& je : jb) elements.push_back(parse_element(g, je.dump()));
    const Block b = make_block(g, elements);
    const PsdFingerprint fp = fingerprint(g, b);
    const double bound = 4.0 * static_cast<double>(n);
    for (std::size_t j = 1; j < g.order(); ++j) {
        const double p = fp.values[j - 1];
        out << json(g.element_at(j).residues).dump() << " " << fmt(p) << (p <= bound + o.tol ? "" : "  > 4n") << "\n";
    }
    const bool pass = psd_test(g, b, n, o.tol);
    out << (pass ? "pass" : "fail") << " (4n=" << 4 * n << ")\n";
    return pass ? kExitOk : kExitVerificationFailed;
}

// ---- fixtures ----

int cmd_fixtures(const std::string& dir, std::ostream& out) {
    std::filesystem::create_directories(dir);
    for (const Fixture& f : all_fixtures()) {
        const auto path = std::filesystem::path(dir) / (f.name + ".json");
        std::ofstream file(path);
        if (!file) throw ParseError("cannot write " + path.string());
        file << family_to_json(f.family, f.gs_mode) << "\n";
        out << path.string() << "\n";
    }
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Difference families over finite abelian groups: verification, search and matrix constructions"};
    app.name("dfam");
    app.require_subcommand(1);

    VerifyOptions vo;
    auto* verify = app.add_subcommand("verify", "Verify a family by difference counting and in the group algebra");
    verify->add_option("input", vo.input, "family JSON file")->required();
    verify->add_flag("--gs", vo.gs, "allow empty/full blocks (GS families)");

    SearchOptions so;
    auto* srch = app.add_subcommand("search", "Search for families; prints JSON lines then a summary line");
    srch->add_option("--group", so.group, "group literal, e.g. Z3xZ6 or [3,6]")->required();
    srch->add_option("--params", so.params, "parameter literal \"v;k1,k2,...;lambda\"")->required();
    srch->add_option("--mode", so.mode, "exhaustive | fingerprint | anneal")
        ->check(CLI::IsMember({"exhaustive", "fingerprint", "anneal"}))
        ->capture_default_str();
    srch->add_flag("--no-psd-prune", so.no_prune, "keep blocks that fail the PSD-test");
    srch->add_flag("--no-dedup", so.no_dedup, "do not fix the identity in the first block");
    srch->add_flag("--gs", so.gs, "GS mode (empty/full blocks allowed)");
    srch->add_option("--seed", so.seed, "RNG seed")->capture_default_str();
    srch->add_option("--workers", so.workers, "enumeration threads")->capture_default_str();
    srch->add_option("--tol", so.tol, "PSD tolerance")->capture_default_str();
    srch->add_option("--max-candidates", so.limits.max_candidates, "candidate ceiling")->capture_default_str();
    srch->add_option("--max-solutions", so.limits.max_solutions, "stop after this many (0 = all)")->capture_default_str();
    srch->add_option("--time-budget", so.limits.time_budget_seconds, "seconds, anneal only (0 = none)")
        ->capture_default_str();
    srch->add_option("--max-iterations", so.limits.max_iterations, "anneal moves")->capture_default_str();
    srch->add_option("--samples", so.limits.samples_per_block, "fingerprint-mode draws per block")
        ->capture_default_str();

    ConstructOptions co;
    auto* cons = app.add_subcommand("construct", "Build and verify a matrix from a family; prints it as +/- rows");
    cons->add_option("input", co.input, "family JSON file")->required();
    cons->add_option("--array", co.array, "gs | gs-sym | do | do-sym | legendre-sym | legendre-skew | golay")
        ->required()
        ->check(CLI::IsMember({"gs", "gs-sym", "do", "do-sym", "legendre-sym", "legendre-skew", "golay"}));
    cons->add_flag("--swap", co.swap, "exchange the two blocks first");
    cons->add_option("--bush", co.bush, "also check Bush type with this block size");
    cons->add_option("--format", co.format, "text | json")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    cons->add_flag("--gs", co.gs, "allow empty/full blocks");

    CompressOptions cpo;
    auto* comp = app.add_subcommand("compress", "Compress a family's functions by the subgroup the generators span");
    comp->add_option("input", cpo.input, "family JSON file")->required();
    comp->add_option("--gens", cpo.generators, "JSON list of subgroup generators, e.g. [[0,3]]")->capture_default_str();
    comp->add_flag("--gs", cpo.gs, "allow empty/full blocks");

    PsdOptions po;
    auto* psdc = app.add_subcommand("psd-test", "PSD of one block at every nontrivial character against 4n");
    psdc->add_option("--group", po.group, "group literal")->required();
    psdc->add_option("--block", po.block, "JSON list of elements, e.g. [[0,0],[1,1]]")->required();
    psdc->add_option("--params", po.params, "parameter literal giving n");
    psdc->add_option("--n", po.n, "n directly");
    psdc->add_option("--tol", po.tol, "tolerance")->capture_default_str();

    std::string fixture_dir = "data/fixtures";
    auto* fix = app.add_subcommand("fixtures", "Write the worked example families as JSON files");
    fix->add_option("--out", fixture_dir, "output directory")->capture_default_str();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalidInput;
    }

    try {
        if (*verify) return cmd_verify(vo, out);
        if (*srch) return cmd_search(so, out);
        if (*cons) return cmd_construct(co, out, err);
        if (*comp) return cmd_compress(cpo, out);
        if (*psdc) return cmd_psd(po, out);
        if (*fix) return cmd_fixtures(fixture_dir, out);
    } catch (const BudgetExceededError& e) {
        err << "budget exhausted: " << e.what() << "\n";
        return kExitBudgetExhausted;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return kExitInvalidInput;
}

}  // namespace dfam::cli
