#include "jred/report.hpp"

#include <fstream>
#include <random>
#include <sstream>
#include <system_error>

namespace jred {

namespace {

ordered_json vectors(const SubspaceBasis& s) {
    ordered_json out = ordered_json::array();
    for (const auto& v : s.vectors()) {
        ordered_json row = ordered_json::array();
        for (const auto& x : v) row.push_back(x.to_string());
        out.push_back(row);
    }
    return out;
}

ordered_json rows(const Matrix& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        ordered_json row = ordered_json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m(r, c).to_string());
        out.push_back(row);
    }
    return out;
}

ordered_json optional_flag(const std::optional<bool>& b) { return b ? ordered_json(*b) : ordered_json(nullptr); }

ordered_json descriptor(const Descriptor& d) {
    return {{"dim", d.dim}, {"abelian", d.abelian}, {"killing_rank", d.killing_rank}, {"center_dim", d.center_dim}};
}

// "b4" style rendering of a vector against the algebra labels.
std::string combination(const Vector& v, const std::vector<std::string>& labels) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i].is_zero()) continue;
        const std::string coeff = v[i] == Scalar(1) ? "" : "(" + v[i].to_string() + ")";
        out += (out.empty() ? "" : " + ") + coeff + labels[i];
    }
    return out.empty() ? "0" : out;
}

}  // namespace

ordered_json report_to_json(const ordered_json& inputs, const ReductionReport& r) {
    ordered_json j;
    j["version"] = report_schema_version;
    j["inputs"] = inputs;

    ordered_json kernel{{"algebra", r.algebra},
                        {"labels", r.labels},
                        {"mode", r.kernel.mode == Unknowns::algebra ? "fundamental" : "slot_components"},
                        {"dim", r.kernel.dim()},
                        {"basis", vectors(r.kernel.basis)},
                        {"unrestricted_dim", r.unrestricted_kernel_dim}};
    kernel["sampling"] = r.sampling ? ordered_json{{"count", r.sampling->count}, {"seed", r.sampling->seed}} : ordered_json(nullptr);
    j["kernel"] = kernel;

    ordered_json reduction{{"status", to_string(r.status)},
                           {"r_raw_basis", vectors(r.r_raw)},
                           {"r_raw_closed", r.r_raw_closed}};
    reduction["r_closure_basis"] = r.r_closure ? vectors(*r.r_closure) : ordered_json(nullptr);
    reduction["r_dim"] = r.split.r.dim();
    reduction["r_descriptor"] = descriptor(r.r_descriptor);
    reduction["coset"] = r.coset_label;
    reduction["yang_mills_density"] = r.density.to_string();
    reduction["higgs_section"] = "metadata only: a section of W/R -> X is not constructed";
    j["reduction"] = reduction;

    j["split"] = {{"v_label", "Im J realization (form-orthogonal complement)"},
                  {"form", r.split_form},
                  {"v_dim", r.v_dim},
                  {"v_basis", vectors(r.split.v)},
                  {"form_degenerate", r.split.form_degenerate},
                  {"checks",
                   {{"r_closed", r.split.checks.r_closed},
                    {"direct_sum", r.split.checks.direct_sum},
                    {"reductive", r.split.checks.reductive}}}};

    ordered_json cartan{{"rank_condition", r.rank_condition},
                        {"kernel_dim", r.kernel.dim()},
                        {"x_dim", r.x_dim},
                        {"note", r.rank_note}};
    if (r.cartan) {
        const CartanCheck& c = *r.cartan;
        ordered_json model{{"rank_condition", c.rank_condition},
                           {"transversal", c.transversal},
                           {"dim_match", c.dim_match},
                           {"injective", optional_flag(c.injective)},
                           {"agrees_on_vertical", optional_flag(c.agrees_on_vertical)},
                           {"k_block_onto", optional_flag(c.k_block_onto)},
                           {"brackets_preserved", optional_flag(c.brackets_preserved)}};
        model["restriction"] = c.restriction ? rows(*c.restriction) : ordered_json(nullptr);
        cartan["model"] = model;
    } else {
        cartan["model"] = nullptr;
    }
    j["cartan"] = cartan;
    j["notes"] = r.notes;
    return j;
}

std::string report_to_text(const ReductionReport& r) {
    std::ostringstream out;
    auto flag = [](bool b) { return b ? "yes" : "no"; };
    out << "algebra       " << r.algebra << " (dim " << r.g_dim << "), n = " << r.n << "\n";
    if (r.sampling) out << "connection    generic, " << r.sampling->count << " samples, seed " << r.sampling->seed << "\n";
    else out << "connection    explicit\n";
    out << "kernel dim    " << r.kernel.dim() << " (unrestricted " << r.unrestricted_kernel_dim << ")\n";
    for (const auto& v : r.kernel.basis.vectors()) out << "  " << combination(v, r.labels) << "\n";
    out << "status        " << to_string(r.status) << "\n";
    out << "R             dim " << r.r_descriptor.dim << ", " << (r.r_descriptor.abelian ? "abelian" : "non-abelian")
        << ", killing rank " << r.r_descriptor.killing_rank << ", center dim " << r.r_descriptor.center_dim
        << (r.r_raw_closed ? "" : " (bracket closure of the kernel)") << "\n";
    out << "coset         " << r.coset_label << "\n";
    out << "split         V dim " << r.v_dim << " via " << r.split_form << " form; r_closed " << flag(r.split.checks.r_closed)
        << ", direct_sum " << flag(r.split.checks.direct_sum) << ", reductive " << flag(r.split.checks.reductive) << "\n";
    out << "density       " << r.density.to_string() << "\n";
    out << "rank cond.    " << flag(r.rank_condition) << " (" << r.rank_note << ")\n";
    if (r.cartan) {
        const CartanCheck& c = *r.cartan;
        out << "cartan model  transversal " << flag(c.transversal) << ", dim_match " << flag(c.dim_match)
            << ", restriction " << (c.restriction ? "built" : "absent") << "\n";
    }
    for (const auto& note : r.notes) out << "note          " << note << "\n";
    return out.str();
}

std::string render_report(const RunConfig& config, const ReductionReport& r, const std::string& format) {
    if (format == "text") return report_to_text(r);
    return report_to_json(config.echo, r).dump(2) + "\n";
}

void write_atomic(const std::filesystem::path& path, const std::string& content) {
    std::random_device rd;
    const auto tmp = path.string() + ".tmp-" + std::to_string(rd());
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f) throw std::runtime_error("cannot write " + tmp);
        f << content;
        f.flush();
        if (!f) {
            std::filesystem::remove(tmp);
            throw std::runtime_error("failed writing " + tmp);
        }
    }
    std::error_code ec;
    std::filesystem::rename(tmp, path, ec);
    if (ec) {
        std::filesystem::remove(tmp);
        throw std::runtime_error("cannot rename into " + path.string() + ": " + ec.message());
    }
}

}  // namespace jred
