#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "sphspec/errors.hpp"
#include "sphspec/invariants.hpp"
#include "sphspec/search.hpp"
#include "sphspec/specstring.hpp"

using nlohmann::json;
using namespace sphspec;

namespace {

struct Config {
    std::string format = "table";
    std::string cache_path;
    unsigned trunc = 0;
    unsigned jobs = 1;
    std::uint64_t budget = 0;
};

GroupModel group_of(const ParsedSpec& spec) {
    if (const auto* l = std::get_if<LensParams>(&spec)) return group_from_lens(*l);
    if (const auto* o = std::get_if<SmallGroupClass>(&spec)) return class_to_group(*o);
    return roster(std::get<FpfGroupSpec>(spec));
}

int cmd_fingerprint(const Config& cfg, const std::string& text) {
    ParsedSpec spec = parse_spec(text);
    GroupModel g = group_of(spec);
    unsigned k = cfg.trunc;
    if (k != 0 && k < default_trunc(g.order(), g.d()))
        std::cerr << "warning: truncation " << k << " is below the sufficiency bound "
                  << default_trunc(g.order(), g.d()) << "; comparisons may be inconclusive\n";
    SpectrumFingerprint f = fingerprint(g, k);
    unsigned show = std::min(20u, f.trunc + 1);
    if (cfg.format == "json-lines") {
        json j{{"spec", print_spec(spec)}, {"d", f.d}, {"N", f.group_order}, {"K", f.trunc}};
        std::vector<std::string> cs, ns;
        for (const auto& c : f.coeffs) cs.push_back(c.str());
        for (const auto& c : f.numerator) ns.push_back(c.str());
        j["coeffs"] = cs;
        j["numerator"] = ns;
        std::cout << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        std::cout << "spec,d,N,K,coeffs,numerator\n"
                  << print_spec(spec) << "," << f.d << "," << f.group_order << "," << f.trunc
                  << ",";
        for (size_t i = 0; i < f.coeffs.size(); ++i) std::cout << (i ? " " : "") << f.coeffs[i];
        std::cout << ",";
        for (size_t i = 0; i < f.numerator.size(); ++i)
            std::cout << (i ? " " : "") << f.numerator[i];
        std::cout << "\n";
    } else {
        std::cout << print_spec(spec) << "\n  d = " << f.d << "\n  N = " << f.group_order
                  << "\n  K = " << f.trunc << "\n  dim H_0.." << (show - 1) << ": ";
        for (unsigned i = 0; i < show; ++i) std::cout << (i ? ", " : "") << f.coeffs[i];
        std::cout << "\n  numerator: " << f.numerator_poly().to_string() << "\n";
    }
    return 0;
}

void print_pairs(const Config& cfg, const PairReport& rep) {
    if (cfg.format == "json-lines") {
        json j{{"q", rep.q}, {"n", rep.n}, {"classes", rep.classes}, {"groups", rep.groups}};
        std::cout << j.dump() << "\n";
    } else if (cfg.format == "csv") {
        for (const auto& g : rep.groups) {
            std::cout << rep.q << "," << rep.n;
            for (const auto& k : g) std::cout << "," << k;
            std::cout << "\n";
        }
    } else {
        std::cout << "q=" << rep.q << " n=" << rep.n << ": " << rep.classes << " classes, "
                  << rep.groups.size() << " isospectral group(s)\n";
        for (const auto& g : rep.groups) {
            std::cout << "  ";
            for (size_t i = 0; i < g.size(); ++i) std::cout << (i ? " ~ " : "") << g[i];
            std::cout << "\n";
        }
    }
}

int cmd_search(const Config& cfg, unsigned q, unsigned n) {
    FingerprintCache cache(cfg.cache_path);
    SearchBudget budget{cfg.budget, 0};
    PairReport rep = find_isospectral_pairs(q, n, &cache, &budget, cfg.jobs);
    print_pairs(cfg, rep);
    return 0;
}

int cmd_isometric(const std::string& a, const std::string& b) {
    ParsedSpec pa = parse_spec(a), pb = parse_spec(b);
    if (!std::holds_alternative<LensParams>(pa) || !std::holds_alternative<LensParams>(pb))
        throw ParseError("isometric takes two lens specs", 0);
    bool iso = is_isometric(std::get<LensParams>(pa), std::get<LensParams>(pb));
    std::cout << (iso ? "true" : "false") << "\n";
    return 0;
}

int cmd_extend(const std::string& text, unsigned r) {
    ParsedSpec spec = parse_spec(text);
    if (!std::holds_alternative<LensParams>(spec))
        throw ParseError("extend takes a lens space spec", 0);
    std::cout << to_string(extend_lens(std::get<LensParams>(spec), r)) << "\n";
    return 0;
}

bool claim(const std::string& name, bool ok) {
    std::cout << (ok ? "PASS" : "FAIL") << " " << name << "\n";
    return ok;
}

bool reproduce_ikeda_pair(const Config& cfg) {
    LensParams a = std::get<LensParams>(parse_spec("L(11;1,2,3)"));
    LensParams b = std::get<LensParams>(parse_spec("L(11;1,2,4)"));
    SpectrumFingerprint fa = fingerprint(group_from_lens(a));
    SpectrumFingerprint fb = fingerprint(group_from_lens(b));
    bool ok = claim("L(11;1,2,3) and L(11;1,2,4) isospectral", is_isospectral(fa, fb));
    ok &= claim("L(11;1,2,3) and L(11;1,2,4) non-isometric", !is_isometric(a, b));
    (void)cfg;
    return ok;
}

bool reproduce_q11_table(const Config& cfg) {
    FingerprintCache cache(cfg.cache_path);
    SearchBudget budget{cfg.budget, 0};
    const std::vector<unsigned> expected{3, 7, 8, 11, 12, 13};
    bool ok = true;
    for (unsigned n = 3; n <= 14; ++n) {
        PairReport rep = find_isospectral_pairs(11, n, &cache, &budget, cfg.jobs);
        bool want = std::find(expected.begin(), expected.end(), n) != expected.end();
        ok &= claim("q=11 n=" + std::to_string(n) + (want ? " has pairs" : " has no pairs"),
                    !rep.groups.empty() == want);
    }
    return ok;
}

bool reproduce_q10_rigidity(const Config& cfg) {
    FingerprintCache cache(cfg.cache_path);
    SearchBudget budget{cfg.budget, 0};
    SweepReport rep = rigidity_sweep(10, 12, &cache, &budget, cfg.jobs);
    return claim("no isospectral non-isometric lens pairs for q <= 10, n <= 12",
                 rep.cells.empty());
}

bool reproduce_orbifold_rigidity(const Config& cfg) {
    (void)cfg;
    bool ok = true;
    for (unsigned d = 2; d <= 9; ++d) {
        bool inj = true;
        std::string note;
        try {
            verify_rigidity(d, 7);
        } catch (const RigidityViolation& e) {
            inj = false;
            note = std::string(": ") + e.what();
        }
        ok &= claim("order <= 7 classes spectrally rigid at d=" + std::to_string(d) + note, inj);
    }
    return ok;
}

bool reproduce_errata_lemma(const Config& cfg) {
    (void)cfg;
    bool ok = true;
    for (FpfName name : {FpfName::Q16, FpfName::P20})
        for (unsigned m = 1; m <= 4; ++m) {
            ErrataReport rep = verify_errata_lemma(name, m);
            bool good = rep.all_distinct;
            for (const auto& [h, ord] : rep.pole_orders) good &= (ord == 2 * (m - h));
            ok &= claim(to_string(name) + " m=" + std::to_string(m) +
                            " classes distinct, pole orders 2(m-h)",
                        good);
        }
    return ok;
}

bool reproduce_extend_theorem(const Config& cfg) {
    (void)cfg;
    LensParams a = std::get<LensParams>(parse_spec("L(11;1,2,3)"));
    LensParams b = std::get<LensParams>(parse_spec("L(11;1,2,4)"));
    bool ok = true;
    for (unsigned r = 1; r <= 2; ++r) {
        LensParams ea = extend_lens(a, r), eb = extend_lens(b, r);
        SpectrumFingerprint fa = fingerprint(group_from_lens(ea));
        SpectrumFingerprint fb = fingerprint(group_from_lens(eb));
        ok &= claim("r=" + std::to_string(r) + " extension isospectral in dimension " +
                        std::to_string(ea.d),
                    is_isospectral(fa, fb));
        ok &= claim("r=" + std::to_string(r) + " extension non-isometric", !is_isometric(ea, eb));
    }
    for (unsigned k : {1u, 11u})
        ok &= claim("order-" + std::to_string(k) + " partial sum divisor identity, r=1",
                    fk_divisor_identity(a, 1, k));
    return ok;
}

int cmd_reproduce(const Config& cfg, const std::string& id) {
    bool ok;
    if (id == "ikeda-pair") ok = reproduce_ikeda_pair(cfg);
    else if (id == "q11-table") ok = reproduce_q11_table(cfg);
    else if (id == "q10-rigidity") ok = reproduce_q10_rigidity(cfg);
    else if (id == "orbifold-rigidity") ok = reproduce_orbifold_rigidity(cfg);
    else if (id == "errata-lemma") ok = reproduce_errata_lemma(cfg);
    else if (id == "extend-theorem") ok = reproduce_extend_theorem(cfg);
    else throw CLI::ValidationError("unknown table id: " + id);
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Laplace-spectrum generating functions of spherical space forms"};
    app.require_subcommand(1);

    Config cfg;
    if (const char* env = std::getenv("SPHSPEC_CACHE")) cfg.cache_path = env;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"table", "json-lines", "csv"}))
        ->capture_default_str();
    app.add_option("--cache", cfg.cache_path,
                   "fingerprint cache file (default: $SPHSPEC_CACHE, empty = no cache)");
    app.add_option("--trunc", cfg.trunc, "truncation override (0 = sufficiency bound)")
        ->capture_default_str();
    app.add_option("--jobs", cfg.jobs, "worker threads")->capture_default_str();
    app.add_option("--budget", cfg.budget, "max coefficients computed (0 = unlimited)")
        ->capture_default_str();

    std::string spec_text, spec_b, table_id;
    unsigned q = 0, n = 0, r = 1;

    auto* fp = app.add_subcommand("fingerprint", "print the spectral fingerprint of an object");
    fp->add_option("spec", spec_text, "object spec, e.g. L(11;1,2,3)")->required();

    auto* rep = app.add_subcommand("reproduce", "re-run a pinned computation");
    rep->add_option("table-id", table_id,
                    "one of ikeda-pair, q11-table, q10-rigidity, orbifold-rigidity, "
                    "errata-lemma, extend-theorem")
        ->required();

    auto* se = app.add_subcommand("search", "find isospectral non-isometric lens pairs");
    se->add_option("--q", q, "group order")->required();
    se->add_option("--n", n, "half-dimension: d = 2n-1")->required();

    auto* iso = app.add_subcommand("isometric", "decide isometry of two lens spaces");
    iso->add_option("a", spec_text)->required();
    iso->add_option("b", spec_b)->required();

    auto* ext = app.add_subcommand("extend", "append r copies of the unit list");
    ext->add_option("spec", spec_text)->required();
    ext->add_option("--r", r, "extension multiplicity")->capture_default_str();

    // let global options (--trunc, --cache, ...) appear after the subcommand
    for (CLI::App* sub : {fp, rep, se, iso, ext}) sub->fallthrough();

    try {
        app.parse(argc, argv);
        if (fp->parsed()) return cmd_fingerprint(cfg, spec_text);
        if (rep->parsed()) return cmd_reproduce(cfg, table_id);
        if (se->parsed()) return cmd_search(cfg, q, n);
        if (iso->parsed()) return cmd_isometric(spec_text, spec_b);
        if (ext->parsed()) return cmd_extend(spec_text, r);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const BudgetExceeded& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
