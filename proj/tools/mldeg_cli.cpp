#include <CLI11.hpp>

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include "mldeg/family.hpp"
#include "mldeg/likelihood.hpp"
#include "mldeg/model.hpp"
#include "mldeg/report_json.hpp"
#include "mldeg/selftest.hpp"

namespace {

struct CommonOptions {
    std::string model_path;
    int m = 3;
    int draws = 3;
    std::uint64_t seed = 42;
    std::string output = "text";
    double corrector_tol = 0.0;   // 0 keeps the tracker default
    double cluster_radius = 0.0;  // likewise
};

mldeg::TrackerConfig make_config(const CommonOptions& opt) {
    mldeg::TrackerConfig cfg;
    cfg.seed = opt.seed;
    if (opt.corrector_tol > 0.0) cfg.corrector_tol = opt.corrector_tol;
    if (opt.cluster_radius > 0.0) cfg.cluster_radius = opt.cluster_radius;
    return cfg;
}

void add_tracking_options(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("--draws", opt.draws, "independent generic data draws")->check(CLI::PositiveNumber);
    cmd->add_option("--seed", opt.seed, "seed for data and homotopy randomness");
    cmd->add_option("--output", opt.output, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    cmd->add_option("--corrector-tol", opt.corrector_tol, "override the path corrector tolerance")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--cluster-radius", opt.cluster_radius, "override the endpoint clustering radius")
        ->check(CLI::PositiveNumber);
}

void print_ml_text(const mldeg::MLReport& rep, const char* label) {
    std::printf("%s ML degree: %d (%s)\n", label, rep.count, rep.certified ? "certified" : "NOT certified");
    std::printf("  bezout paths per draw: %lld, draws: %d, redraws: %d\n", rep.bezout, rep.draws,
                rep.total_redraws);
    for (const auto& rec : rep.draw_records) {
        std::printf("  draw seed %llu: ", static_cast<unsigned long long>(rec.data_seed));
        if (rec.valid)
            std::printf("count %d, paths finite/diverged/failed = %lld/%lld/%lld\n", rec.count,
                        rec.paths.finite, rec.paths.diverged, rec.paths.failed);
        else
            std::printf("invalid (%s)\n", rec.note.c_str());
    }
}

int run_mldeg(const CommonOptions& opt) {
    mldeg::TorusModel model = mldeg::load_model_file(opt.model_path);
    mldeg::MLReport rep = mldeg::ml_degree(model, make_config(opt), opt.draws);
    if (opt.output == "json") {
        std::cout << mldeg::canonical_json(mldeg::report_to_json(rep));
    } else {
        print_ml_text(rep, "model");
        for (const auto& sol : rep.solutions) {
            std::printf("  critical point:");
            for (const auto& z : sol) std::printf(" (%.12g, %.12g)", z.real(), z.imag());
            std::printf("\n");
        }
    }
    return rep.certified ? 0 : 1;
}

int run_euler(const CommonOptions& opt) {
    mldeg::TorusModel model = mldeg::load_model_file(opt.model_path);
    mldeg::EulerReport rep = mldeg::euler_char_smooth(model, make_config(opt), opt.draws);
    if (opt.output == "json") {
        std::cout << mldeg::canonical_json(mldeg::report_to_json(rep));
    } else {
        std::printf("euler characteristic: %d (dimension %d, signed count)\n", rep.chi, rep.dimension);
        print_ml_text(rep.ml, "underlying");
    }
    return rep.ml.certified ? 0 : 1;
}

int run_family(const CommonOptions& opt) {
    mldeg::FamilyReport rep = mldeg::verify_family(opt.m, make_config(opt), opt.draws);
    if (opt.output == "json") {
        std::cout << mldeg::canonical_json(mldeg::report_to_json(rep));
        return rep.certified ? 0 : 1;
    }
    std::printf("family member m = %d\n", rep.m);
    print_ml_text(rep.surface_ml, "surface");
    print_ml_text(rep.boundary_ml, "boundary curve");
    std::printf("chi: image %lld, surface %lld, with double points %lld\n", rep.image_chi, rep.surface_chi,
                rep.ic_chi);
    std::printf("gap (ML degree - chi): %lld, double points: %d (%s)\n", rep.gap, rep.double_point_count,
                rep.gap_matches_double_points ? "matching" : "MISMATCH");
    std::printf("bound chi_ic >= ML degree: %s%s\n", rep.bound_holds ? "holds" : "VIOLATED",
                rep.bound_tight ? " with equality" : "");
    std::printf("certificates: double points %s, fibers %s, boundary smooth %s\n",
                rep.double_points_certified ? "ok" : "FAILED", rep.fibers_verified ? "ok" : "FAILED",
                rep.boundary_smooth ? "ok" : "FAILED");
    std::printf("overall: %s\n", rep.certified ? "certified" : "NOT certified");
    return rep.certified ? 0 : 1;
}

int run_selftest_cmd(const CommonOptions& opt) {
    mldeg::SelfTestReport rep = mldeg::run_selftest(make_config(opt));
    if (opt.output == "json") {
        std::cout << mldeg::canonical_json(mldeg::report_to_json(rep));
    } else {
        for (const auto& c : rep.checks)
            std::printf("[%s] %s: %s\n", c.passed ? "ok" : "FAIL", c.name.c_str(), c.detail.c_str());
        std::printf("%s\n", rep.all_passed ? "all checks passed" : "SELFTEST FAILED");
    }
    return rep.all_passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"maximum likelihood degrees of very affine varieties by homotopy continuation"};
    app.require_subcommand(1);
    CommonOptions opt;

    CLI::App* ml = app.add_subcommand("mldeg", "count critical points of a model from a JSON file");
    ml->add_option("--model", opt.model_path, "model description file")->required()->check(CLI::ExistingFile);
    add_tracking_options(ml, opt);

    CLI::App* euler = app.add_subcommand("euler", "signed Euler characteristic of a smooth model");
    euler->add_option("--model", opt.model_path, "model description file")
        ->required()
        ->check(CLI::ExistingFile);
    add_tracking_options(euler, opt);

    CLI::App* family = app.add_subcommand("family", "verify one member of the glued-surface family");
    family->add_option("--m", opt.m, "odd family index")->required();
    add_tracking_options(family, opt);

    CLI::App* selftest = app.add_subcommand("selftest", "run the built-in verification battery");
    add_tracking_options(selftest, opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (ml->parsed()) return run_mldeg(opt);
        if (euler->parsed()) return run_euler(opt);
        if (family->parsed()) return run_family(opt);
        if (selftest->parsed()) return run_selftest_cmd(opt);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
