#include "jred/pipeline.hpp"

namespace jred {

std::string to_string(ReductionStatus s) {
    switch (s) {
        case ReductionStatus::reduced: return "reduced";
        case ReductionStatus::no_reduction: return "no reduction: R = g";
        case ReductionStatus::trivial_kernel: return "kernel trivial: no canonical reduction";
    }
    return {};
}

namespace {

std::pair<BilinearForm, std::string> split_form(const PipelineInput& in) {
    if (in.spec) return {standard_invariant_form(*in.spec), "invariant"};
    BilinearForm k = killing_form(in.algebra);
    if (k.nondegenerate()) return {k, "killing"};
    return {in.delta, "delta"};
}

}  // namespace

PipelineArtifacts run_stages(const PipelineInput& in) {
    const LieAlgebra& l = in.algebra;
    const ValidationReport v = validate(l);
    if (!v.ok())
        throw ConfigError("algebra '" + l.name() + "' fails validation (" + std::to_string(v.antisymmetry.size()) +
                          " antisymmetry, " + std::to_string(v.jacobi.size()) + " Jacobi violations)");

    PipelineArtifacts a;
    a.system = assemble_constraint_system(l, in.eta, in.curvature, in.delta);
    a.unrestricted = jacobi_kernel(a.system);
    if (const auto* s = std::get_if<GenericSampling>(&in.connection)) {
        a.sampling = *s;
        a.kernel = generic_kernel(l, a.system, sample_connections(l.dim(), in.eta.n(), s->count, s->seed));
    } else {
        a.kernel = jacobi_kernel(restrict_to_fundamental(l, a.system, std::get<Connection>(in.connection)));
    }
    a.reduced = reduced_subalgebra(l, a.kernel);
    auto [form, label] = split_form(in);
    a.split_form = label;
    a.split = reductive_split(l, a.reduced.effective(), form);
    if (a.split.checks.direct_sum && a.split.r.dim() + a.split.v.dim() != l.dim())
        throw InvariantError("direct sum reported with mismatched dimensions");
    if (in.cartan) {
        SplitModel model = in.cartan->model;
        if (in.cartan->kernel_dim_from_pipeline) model.kernel_dim = a.kernel.dim();
        a.cartan = cartan_restriction(model, in.cartan->parallelism);
    }
    a.density = yang_mills_density(l, in.eta, in.delta, in.curvature);
    return a;
}

ReductionReport build_report(const PipelineInput& in, const PipelineArtifacts& a) {
    const LieAlgebra& l = in.algebra;
    ReductionReport r;
    r.algebra = l.name();
    r.labels = l.labels();
    r.g_dim = l.dim();
    r.n = in.eta.n();
    r.unrestricted_kernel_dim = a.unrestricted.dim();
    r.kernel = a.kernel;
    r.sampling = a.sampling;

    if (a.kernel.dim() == l.dim())
        r.status = ReductionStatus::no_reduction;
    else if (a.kernel.dim() == 0)
        r.status = ReductionStatus::trivial_kernel;
    else
        r.status = ReductionStatus::reduced;

    r.r_raw = a.reduced.raw.span;
    r.r_raw_closed = a.reduced.raw.closed;
    if (a.reduced.closure) r.r_closure = a.reduced.closure->span;
    r.r_descriptor = classify(Subalgebra{&l, a.split.r, true});
    r.v_dim = a.split.v.dim();
    r.coset_label = "dim G/R = " + std::to_string(l.dim() - a.split.r.dim());
    r.split_form = a.split_form;
    r.split = a.split;

    r.x_dim = r.n;
    r.rank_condition = rank_condition(a.kernel, r.x_dim);
    r.rank_note = rank_condition_note(a.kernel, r.x_dim);
    r.cartan = a.cartan;
    r.density = a.density;

    r.notes.push_back("V is the Im J realization (form-orthogonal complement, " + a.split_form + " form)");
    r.notes.push_back("the Higgs section is not constructed; only the pointwise algebraic data R, V and dimensions");
    if (r.n != 4)
        r.notes.push_back("constraint assembly extrapolated from n = 4 to n = " + std::to_string(r.n));
    if (!r.r_raw_closed) r.notes.push_back("kernel span is not closed under the bracket; R is its bracket closure");
    if (a.split.form_degenerate) r.notes.push_back("split form is degenerate on R");
    if (!r.rank_condition) r.notes.push_back(r.rank_note);
    return r;
}

ReductionReport run_pipeline(const PipelineInput& in) { return build_report(in, run_stages(in)); }

}  // namespace jred
