#pragma once

#include "jred/cartan.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace jred {

struct GenericSampling {
    std::size_t count = 3;
    std::uint64_t seed = 0;
};

using ConnectionMode = std::variant<GenericSampling, Connection>;

struct CartanInput {
    SplitModel model;
    Matrix parallelism;
    /// Evaluate the rank condition against the computed kernel instead of model.kernel_dim.
    bool kernel_dim_from_pipeline = true;
};

struct PipelineInput {
    LieAlgebra algebra;
    /// Present for standard algebras; selects the invariant form used for the split.
    std::optional<AlgebraSpec> spec;
    Metric eta = Metric::minkowski();
    BilinearForm delta;
    Curvature curvature;
    ConnectionMode connection = GenericSampling{};
    std::optional<CartanInput> cartan;
};

enum class ReductionStatus { reduced, no_reduction, trivial_kernel };

std::string to_string(ReductionStatus s);

struct ReductionReport {
    std::string algebra;
    std::vector<std::string> labels;
    std::size_t g_dim = 0;
    std::size_t n = 0;

    std::size_t unrestricted_kernel_dim = 0;
    KernelBasis kernel;
    std::optional<GenericSampling> sampling;

    ReductionStatus status = ReductionStatus::reduced;
    SubspaceBasis r_raw;
    bool r_raw_closed = false;
    std::optional<SubspaceBasis> r_closure;
    Descriptor r_descriptor;
    std::size_t v_dim = 0;
    std::string coset_label;

    std::string split_form;
    ReductiveSplit split;

    bool rank_condition = false;
    std::size_t x_dim = 0;
    std::string rank_note;
    std::optional<CartanCheck> cartan;

    Scalar density;
    std::vector<std::string> notes;
};

/// Everything the pipeline computed, before packaging.
struct PipelineArtifacts {
    ConstraintSystem system;
    KernelBasis unrestricted;
    KernelBasis kernel;
    std::optional<GenericSampling> sampling;
    ReducedAlgebra reduced;
    std::string split_form;
    ReductiveSplit split;
    std::optional<CartanCheck> cartan;
    Scalar density;
};

/// Throws ConfigError if the algebra fails validate(); InvariantError on any
/// failed exact re-verification.
PipelineArtifacts run_stages(const PipelineInput& in);
ReductionReport build_report(const PipelineInput& in, const PipelineArtifacts& a);
ReductionReport run_pipeline(const PipelineInput& in);

}  // namespace jred
