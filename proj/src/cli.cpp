#include "jred/cli.hpp"

#include "jred/prolong.hpp"
#include "jred/report.hpp"

#include <CLI11.hpp>

#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace jred {

namespace {

namespace fs = std::filesystem;

template <typename F>
int guarded(std::ostream& err, F&& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        err << "config error: " << e.what() << "\n";
        return exit_config_error;
    } catch (const CartanPreconditionError& e) {
        err << "config error: cartan: " << e.what() << "\n";
        return exit_config_error;
    } catch (const InvariantError& e) {
        err << "invariant violation: " << e.what() << "\n";
        return exit_invariant_violation;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_invariant_violation;
    }
}

struct ReduceOptions {
    std::string config;
    std::string sweep;
    std::string format;
    std::string out;
};

std::string extension(const std::string& format) { return format == "text" ? ".txt" : ".json"; }

int run_single(const ReduceOptions& opt, std::ostream& out) {
    const RunConfig config = parse_run_config(load_document(opt.config), seed_from_environment());
    const std::string format = opt.format.empty() ? config.output.format : opt.format;
    const ReductionReport report = run_pipeline(config.input);
    const std::string rendered = render_report(config, report, format);
    const std::string target = opt.out.empty() ? config.output.path.value_or("") : opt.out;
    if (target.empty()) {
        out << rendered;
    } else {
        write_atomic(target, rendered);
        out << "kernel_dim " << report.kernel.dim() << ", " << to_string(report.status) << "; report written to " << target
            << "\n";
    }
    return exit_ok;
}

struct SweepOutcome {
    std::optional<ReductionReport> report;
    int code = exit_ok;
    std::string error;
};

int run_sweep(const ReduceOptions& opt, std::ostream& out, std::ostream& err) {
    const ConfigDocument base = load_document(opt.config);
    const auto entries = parse_sweep(load_document(opt.sweep), base, seed_from_environment());
    const std::string format = opt.format.empty() ? entries.front().config.output.format : opt.format;
    const fs::path dir = !opt.out.empty() ? fs::path(opt.out)
                         : entries.front().config.output.path ? fs::path(*entries.front().config.output.path)
                                                              : fs::path("sweep-reports");
    fs::create_directories(dir);

    std::vector<std::future<SweepOutcome>> jobs;
    for (const auto& e : entries)
        jobs.push_back(std::async(std::launch::async, [&e] {
            SweepOutcome o;
            std::ostringstream msg;
            o.code = guarded(msg, [&] {
                o.report = run_pipeline(e.config.input);
                return exit_ok;
            });
            o.error = msg.str();
            return o;
        }));

    int code = exit_ok;
    std::ostringstream table;
    table << std::left << std::setw(24) << "label" << std::setw(12) << "kernel_dim" << std::setw(8) << "r_dim"
          << std::setw(11) << "reductive" << "status\n";
    std::vector<std::string> one_dimensional;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        SweepOutcome o = jobs[i].get();
        const std::string& label = entries[i].label;
        if (!o.report) {
            err << label << ": " << o.error;
            code = std::max(code, o.code);
            table << std::left << std::setw(24) << label << "failed\n";
            continue;
        }
        const ReductionReport& r = *o.report;
        write_atomic(dir / (label + extension(format)), render_report(entries[i].config, r, format));
        table << std::left << std::setw(24) << label << std::setw(12) << r.kernel.dim() << std::setw(8) << r.split.r.dim()
              << std::setw(11) << (r.split.checks.reductive ? "yes" : "no") << to_string(r.status) << "\n";
        if (r.split.r.dim() == 1) one_dimensional.push_back(label);
    }
    table << "dim R = 1 realized by: ";
    if (one_dimensional.empty()) table << "none";
    for (std::size_t i = 0; i < one_dimensional.size(); ++i) table << (i ? ", " : "") << one_dimensional[i];
    table << "\n";
    write_atomic(dir / "summary.txt", table.str());
    out << table.str();
    return code;
}

std::string index_list(std::span<const std::size_t> idx, const std::vector<std::string>& labels) {
    std::string s;
    for (std::size_t i = 0; i < idx.size(); ++i) s += (i ? ", " : "") + labels[idx[i]];
    return "(" + s + ")";
}

int run_check_algebra(const std::string& config, const std::string& prolong, std::size_t n, std::ostream& out) {
    LieAlgebra l = parse_algebra_config(load_document(config)).algebra;
    if (prolong == "t1n") l = t1n_algebra(l, n).algebra;
    else if (prolong == "w11") l = w11_algebra(l, n).algebra;
    const ValidationReport v = validate(l);
    out << "algebra " << l.name() << "\n";
    out << "dim " << l.dim() << "\n";
    out << "antisymmetry violations: " << v.antisymmetry.size() << "\n";
    for (const auto& a : v.antisymmetry) out << "  c^" << l.labels()[a[0]] << " at " << index_list(std::span(a).subspan(1), l.labels()) << "\n";
    out << "jacobi violations: " << v.jacobi.size() << "\n";
    for (const auto& j : v.jacobi)
        out << "  " << index_list(std::span(j).first(3), l.labels()) << " component " << l.labels()[j[3]] << "\n";
    out << (v.ok() ? "valid\n" : "invalid\n");
    return exit_ok;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Jacobi-kernel symmetry reduction for Yang-Mills type Lagrangians", "jacobi_reduce"};
    app.require_subcommand(1);

    ReduceOptions reduce;
    auto* reduce_cmd = app.add_subcommand("reduce", "Run the reduction pipeline on a config");
    reduce_cmd->add_option("--config", reduce.config, "TOML (or .json) run config")->required();
    reduce_cmd->add_option("--sweep", reduce.sweep, "File of [[entry]] curvature configurations");
    reduce_cmd->add_option("--format", reduce.format, "Report format")->check(CLI::IsMember({"json", "text"}));
    reduce_cmd->add_option("--out", reduce.out, "Report path (directory with --sweep)");

    std::string check_config;
    std::string prolong;
    std::size_t n = 4;
    auto* check_cmd = app.add_subcommand("check-algebra", "Validate an algebra and optionally its prolongation");
    check_cmd->add_option("--config", check_config, "TOML (or .json) config with an [algebra] block")->required();
    check_cmd->add_option("--prolong", prolong, "Prolongation to build")->check(CLI::IsMember({"t1n", "w11"}));
    check_cmd->add_option("--n", n, "Base dimension for the prolongation")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_config_error;
    }

    if (*reduce_cmd)
        return guarded(err, [&] { return reduce.sweep.empty() ? run_single(reduce, out) : run_sweep(reduce, out, err); });
    return guarded(err, [&] { return run_check_algebra(check_config, prolong, n, out); });
}

}  // namespace jred
