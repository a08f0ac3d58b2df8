// Command-line front end: compute family bodies, generic valuative sets,
// Zariski decompositions, and run the verification suites.
//
// Exit codes: 0 success, 1 mathematical verdict failure, 2 usage or input
// error. Outputs are byte-stable for a fixed --seed.

#include "okbody/io.hpp"
#include "okbody/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

namespace {

using namespace okb;

constexpr int kExitOk = 0;
constexpr int kExitVerdict = 1;
constexpr int kExitUsage = 2;

/// Thrown for anything that counts as bad input rather than bad mathematics.
struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

std::uint64_t default_seed() {
    if (const char* env = std::getenv("OKB_SEED")) {
        try {
            return std::stoull(env);
        } catch (...) {
            throw UsageError("OKB_SEED is not an unsigned integer");
        }
    }
    return kDefaultSeed;
}

Rat parse_rat_arg(const std::string& s, const std::string& what) {
    try {
        return rat_from_string(s);
    } catch (const std::exception&) {
        throw UsageError(what + " must be a rational \"p/q\" value, got '" + s + "'");
    }
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UsageError("cannot open '" + path + "'");
    try {
        return Json::parse(in);
    } catch (const std::exception& e) {
        throw UsageError("malformed JSON in '" + path + "': " + e.what());
    }
}

void write_output(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream out(out_path);
    if (!out) throw UsageError("cannot write '" + out_path + "'");
    out << content;
}

struct BodyArgs {
    std::string family;
    long n = 0;
    std::string a, u, v;
    bool very_general = false;
    std::string out, format = "json";
};

int cmd_body(const BodyArgs& args) {
    FamilySpec spec;
    spec.family = args.family;
    spec.n = args.n;
    if (!args.a.empty()) spec.a = parse_rat_arg(args.a, "--a");
    if (!args.u.empty()) spec.u = parse_rat_arg(args.u, "--u");
    if (!args.v.empty()) spec.v = parse_rat_arg(args.v, "--v");

    BodyReport report;
    try {
        report = build_family(spec);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    report.verdicts = verify_bounds(report, args.very_general);
    auto simp = simplicial_check(report);  // throws on generic-flag incoherence
    auto interval = curve_seshadri_interval(report);

    if (args.format == "json") {
        Json j = body_report_to_json(report);
        j["simplicial"] = simp.product_matches;
        if (simp.body_is_simplex) j["straightened_is_simplex"] = *simp.body_is_simplex;
        j["curve_seshadri_interval"] =
            Json::array({rat_to_string(interval.lower), rat_to_string(interval.upper)});
        if (report.has_bodies && report.n >= 2) {
            std::vector<Rat> ts;
            for (int k = 0; k <= 4; ++k) ts.push_back(report.mu * make_rat(k, 4));
            Json wf;
            for (size_t i = 2; i <= report.n; ++i) {
                Json series = Json::array();
                for (const auto& [t, w] : width_function(report, i, ts))
                    series.push_back(Json::array({rat_to_string(t), rat_to_string(w)}));
                wf["w" + std::to_string(i)] = series;
            }
            j["width_functions"] = wf;
        }
        write_output(args.out, j.dump(2) + "\n");
    } else if (args.format == "csv") {
        if (!report.has_bodies) throw UsageError("family carries no body to sample");
        if (report.n < 2) throw UsageError("no slice-width functions in ambient dimension 1");
        std::vector<Rat> ts;
        for (int k = 0; k <= 12; ++k) ts.push_back(report.mu * make_rat(k, 12));
        std::ostringstream csv;
        csv << "t";
        for (size_t i = 2; i <= report.n; ++i) csv << ",w" << i;
        csv << "\n";
        std::vector<std::vector<std::pair<Rat, Rat>>> cols;
        for (size_t i = 2; i <= report.n; ++i) cols.push_back(width_function(report, i, ts));
        for (size_t r = 0; r < ts.size(); ++r) {
            csv << rat_to_string(cols[0][r].first);
            for (const auto& col : cols) csv << "," << rat_to_string(col[r].second);
            csv << "\n";
        }
        write_output(args.out, csv.str());
    } else if (args.format == "svg") {
        if (!report.has_bodies) throw UsageError("family carries no body to draw");
        std::vector<Rat> slices{report.mu / 4, report.mu / 2, report.mu * make_rat(3, 4)};
        std::string svg;
        try {
            svg = polytope_to_svg(report.tilted, slices);
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
        write_output(args.out, svg);
    } else {
        throw UsageError("unknown format '" + args.format + "'");
    }
    return verdicts_as_expected(report, report.verdicts) ? kExitOk : kExitVerdict;
}

struct ValsetArgs {
    std::string input, out;
    std::optional<std::uint64_t> seed;
    int trials = 3;
    long long bound = 1000000;
};

int cmd_valset(const ValsetArgs& args) {
    FormsFile ff;
    try {
        ff = forms_from_json(read_json_file(args.input));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    FormSpace space = form_space_from_generators(ff.vars, ff.degree, ff.generators);
    std::uint64_t seed = args.seed.value_or(default_seed());

    // Retry-cap exhaustion propagates as a runtime_error: exit 1.
    auto [set, cert] = generic_valuative_set(space, seed, args.trials, args.bound);

    Json j;
    j["vars"] = ff.vars;
    j["degree"] = ff.degree;
    j["dim"] = space.space_dim();
    j["set"] = discrete_set_to_json(set);
    j["dehomogenized"] = discrete_set_to_json(dehomogenize(set));
    j["certificate"] = certificate_to_json(cert);
    write_output(args.out, j.dump(2) + "\n");
    return kExitOk;
}

struct ZariskiArgs {
    std::string input, t, out;
    bool profile = false;
};

int cmd_zariski(const ZariskiArgs& args) {
    if (args.profile == !args.t.empty())
        throw UsageError("pass exactly one of --t VALUE or --profile");
    SurfaceModel model;
    try {
        model = surface_model_from_json(read_json_file(args.input));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    Json j;
    if (args.profile) {
        j = ray_profile_to_json(model, negative_part_on_E(model));
    } else {
        Rat t = parse_rat_arg(args.t, "--t");
        auto z = zariski_decompose(model, ray_class(model, t));
        j = zariski_to_json(model, z);
        j["t"] = rat_to_string(t);
    }
    write_output(args.out, j.dump(2) + "\n");
    return kExitOk;
}

struct VerifyArgs {
    std::string suite = "all";
    std::optional<std::uint64_t> seed;
};

int cmd_verify(const VerifyArgs& args) {
    std::vector<PropertyResult> results;
    try {
        results = run_verification(args.suite, args.seed.value_or(default_seed()));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    bool all_ok = true;
    for (const auto& r : results) {
        if (r.passed) {
            std::cout << "PASS " << r.suite << "/" << r.name << "\n";
        } else {
            std::cout << "FAIL " << r.suite << "/" << r.name << ": " << r.detail << "\n";
            all_ok = false;
        }
    }
    std::cout << (all_ok ? "all properties passed\n" : "some properties FAILED\n");
    return all_ok ? kExitOk : kExitVerdict;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Newton-Okounkov body computations"};
    app.require_subcommand(1);

    BodyArgs body;
    auto* body_cmd = app.add_subcommand(
        "body", "compute a family body with its invariants and bound verdicts");
    body_cmd->add_option("family", body.family,
                         "product-curves | sym-power | proj-space | quadric | blowup-pn | "
                         "blowup-p2 | p1xp1-generic | p1xp1-special | jacobian-nonhyper | "
                         "jacobian-hyper")
        ->required();
    body_cmd->add_option("--n", body.n, "ambient dimension for the tower families");
    body_cmd->add_option("--a", body.a, "blowup-pn polarization aH - F (rational, a > 1)");
    body_cmd->add_option("--u", body.u, "blowup-p2 parameter u (rational, u >= v)");
    body_cmd->add_option("--v", body.v, "blowup-p2 parameter v (rational, v > 0)");
    body_cmd->add_flag("--very-general", body.very_general,
                       "also check the very-general-point bounds");
    body_cmd->add_option("--out", body.out, "output path (stdout when omitted)");
    body_cmd->add_option("--format", body.format, "json | csv | svg");
    std::uint64_t body_seed = 0;
    body_cmd->add_option("--seed", body_seed, "master seed (unused by the family builders)");

    ValsetArgs valset;
    auto* valset_cmd = app.add_subcommand(
        "valset", "generic valuative set of a linear system of forms, with certificate");
    valset_cmd->add_option("input", valset.input, "JSON file of generators")->required();
    std::uint64_t valset_seed = 0;
    auto* valset_seed_opt = valset_cmd->add_option("--seed", valset_seed, "master seed");
    valset_cmd->add_option("--trials", valset.trials, "independent charts per attempt");
    valset_cmd->add_option("--bound", valset.bound, "chart entry bound");
    valset_cmd->add_option("--out", valset.out, "output path");

    ZariskiArgs zar;
    auto* zar_cmd = app.add_subcommand(
        "zariski", "Zariski decomposition on the exceptional ray of a surface model");
    zar_cmd->add_option("input", zar.input, "SurfaceModel JSON file")->required();
    zar_cmd->add_option("--t", zar.t, "decompose the single class pi*L - tE");
    zar_cmd->add_flag("--profile", zar.profile, "full piecewise profile of t -> N(L_t).E");
    zar_cmd->add_option("--out", zar.out, "output path");

    VerifyArgs verify;
    auto* verify_cmd = app.add_subcommand("verify", "run the property suites");
    verify_cmd->add_option("--suite", verify.suite, "all | borel | flagval | surfzar | bodies");
    std::uint64_t verify_seed = 0;
    auto* verify_seed_opt = verify_cmd->add_option("--seed", verify_seed, "master seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*body_cmd) return cmd_body(body);
        if (*valset_cmd) {
            if (*valset_seed_opt) valset.seed = valset_seed;
            return cmd_valset(valset);
        }
        if (*zar_cmd) return cmd_zariski(zar);
        if (*verify_cmd) {
            if (*verify_seed_opt) verify.seed = verify_seed;
            return cmd_verify(verify);
        }
        return kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "verdict failure: " << e.what() << "\n";
        return kExitVerdict;
    }
}
