// Command-line surface for the exact Tverberg/Radon library: point-set
// ingestion, certificate-bearing reports, example gallery, SVG plots.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "tverberg/cli.hpp"

namespace {

using namespace tverberg;

std::string read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return buf.str();
    }
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open input file '" + path + "'", 0, 0);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

PointSetPtr load_set(const std::string& path) {
    return io::to_point_set(io::parse_input(read_input(path)));
}

int emit(const cli::Report& rep, bool as_json) {
    if (as_json)
        std::cout << rep.machine.dump(2) << "\n";
    else
        std::cout << rep.human;
    return rep.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic Radon/Tverberg partitions, cores, cascades, and certificates"};
    app.require_subcommand(1);

    bool as_json = false;
    cli::RunOptions opt;
    app.add_flag("--json", as_json, "emit the machine-readable JSON report");
    app.add_flag("--full-certs", opt.full_certs,
                 "embed per-candidate refutation certificates in exhaustive sweeps");
    app.add_option("--threads", opt.threads, "worker threads for enumeration sweeps")
        ->default_val(1)
        ->check(CLI::PositiveNumber);
    app.add_option("--budget", opt.budget,
                   "search budget (partitions / core cells / flip states, by command)");

    std::string input, point_arg, alpha_arg, start_a, start_b, gallery_name, output;
    int r = 2, t = 1;
    bool all_split = false;

    auto* deps = app.add_subcommand("deps", "affine dependence space basis");
    deps->add_option("input", input, "point-set file or - for stdin")->required();

    auto* radon = app.add_subcommand("radon", "ordered Radon partition from a dependence");
    radon->add_option("input", input)->required();
    radon->add_option("--alpha", alpha_arg, "dependence coefficients, e.g. 1,-2,1 (default: first basis vector)");

    auto* tv = app.add_subcommand("tverberg", "search for a Tverberg r-partition");
    tv->add_option("input", input)->required();
    tv->add_option("--r", r, "number of parts")->required();

    auto* region = app.add_subcommand("region", "T_r(S) as a union of cells");
    region->add_option("input", input)->required();
    region->add_option("--r", r)->required();

    auto* core = app.add_subcommand("core", "the core C^t_r(S) as a region");
    core->add_option("input", input)->required();
    core->add_option("--r", r)->required();
    core->add_option("--t", t)->required();

    auto* cm = app.add_subcommand("core-member", "membership of a point in C^t_r(S)");
    cm->add_option("input", input)->required();
    cm->add_option("--r", r)->required();
    cm->add_option("--t", t)->required();
    cm->add_option("--point", point_arg, "query point, e.g. 0,0")->required();

    auto* cc = app.add_subcommand("cascade-check", "cascade sum when dim T_2 <= 0");
    cc->add_option("input", input)->required();

    auto* con = app.add_subcommand("cascade-construct", "constructive (t+2)-partition");
    con->add_option("input", input)->required();
    con->add_option("--t", t)->required();
    con->add_flag("--all-split", all_split, "split every block in the split branch");

    auto* fp = app.add_subcommand("flip-path", "flip path from (A,B) to (B,A) at a fixed point");
    fp->add_option("input", input)->required();
    fp->add_option("--point", point_arg, "the fixed Radon point y")->required();
    fp->add_option("--start-a", start_a, "1-based indices of A, e.g. 1,3,6")->required();
    fp->add_option("--start-b", start_b, "1-based indices of B")->required();

    auto* dp = app.add_subcommand("depth", "exact Tukey depth (d <= 3)");
    dp->add_option("input", input)->required();
    dp->add_option("--point", point_arg)->required();

    auto* rc = app.add_subcommand("rado-check", "nonemptiness of the centerpoint cell C^t_1(S)");
    rc->add_option("input", input)->required();
    rc->add_option("--t", t)->required();

    auto* gal = app.add_subcommand("gallery", "named instances with canonical checks");
    gal->add_option("name", gallery_name,
                    "paper-counterexample | line-<n> | cross | curated-cascade-<k>")
        ->required();

    auto* plot = app.add_subcommand("plot", "SVG plot of points, witness hulls, cell samples (d = 2)");
    plot->add_option("input", input)->required();
    plot->add_option("--r", r)->required();
    plot->add_option("--output", output, "output SVG path")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (deps->parsed()) return emit(cli::run_deps(load_set(input), opt), as_json);
        if (radon->parsed()) {
            std::optional<Vec> alpha;
            if (!alpha_arg.empty()) alpha = io::parse_vec_arg(alpha_arg);
            return emit(cli::run_radon(load_set(input), alpha, opt), as_json);
        }
        if (tv->parsed()) return emit(cli::run_tverberg(load_set(input), r, opt), as_json);
        if (region->parsed()) return emit(cli::run_region(load_set(input), r, opt), as_json);
        if (core->parsed()) return emit(cli::run_core(load_set(input), r, t, opt), as_json);
        if (cm->parsed())
            return emit(cli::run_core_member(load_set(input), r, t, io::parse_vec_arg(point_arg), opt),
                        as_json);
        if (cc->parsed()) return emit(cli::run_cascade_check(load_set(input), opt), as_json);
        if (con->parsed())
            return emit(cli::run_cascade_construct(load_set(input), t, all_split, opt), as_json);
        if (fp->parsed())
            return emit(cli::run_flip_path(load_set(input), io::parse_vec_arg(point_arg),
                                           io::parse_index_arg(start_a), io::parse_index_arg(start_b),
                                           opt),
                        as_json);
        if (dp->parsed())
            return emit(cli::run_depth(load_set(input), io::parse_vec_arg(point_arg), opt), as_json);
        if (rc->parsed()) return emit(cli::run_rado_check(load_set(input), t, opt), as_json);
        if (gal->parsed()) return emit(cli::run_gallery(gallery_name, opt), as_json);
        if (plot->parsed()) return emit(cli::run_plot(load_set(input), r, output, opt), as_json);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return cli::exit_code_for(e);
    }
    return 2;
}
