#pragma once

#include "jred/jacobi.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace jred {

struct KernelBasis {
    Unknowns mode = Unknowns::algebra;
    SubspaceBasis basis;

    std::size_t dim() const { return basis.dim(); }
};

/// Exact nullspace of sys.matrix; throws InvariantError if a basis vector fails
/// to annihilate the system on re-verification.
KernelBasis jacobi_kernel(const ConstraintSystem& sys);
void verify_kernel(const KernelBasis& k, const ConstraintSystem& sys);

/// Deterministic rational connections: entries p/q with |p| <= 5, 1 <= q <= 4,
/// drawn from mt19937_64(seed) by plain modular reduction.
std::vector<Connection> sample_connections(std::size_t g_dim, std::size_t n, std::size_t count, std::uint64_t seed);

/// Intersection of the restricted kernels over the given connections.
KernelBasis generic_kernel(const LieAlgebra& l, const ConstraintSystem& sys, const std::vector<Connection>& connections);

struct ReducedAlgebra {
    Subalgebra raw;
    /// Bracket closure of the raw span, present only when the raw span is not closed.
    std::optional<Subalgebra> closure;

    const Subalgebra& effective() const { return closure ? *closure : raw; }
};

/// Throws std::invalid_argument unless k is in algebra mode over l.
ReducedAlgebra reduced_subalgebra(const LieAlgebra& l, const KernelBasis& k);

struct SplitChecks {
    bool r_closed = false;
    bool direct_sum = false;
    /// [R, V] contained in V, checked on basis pairs.
    bool reductive = false;
};

struct ReductiveSplit {
    SubspaceBasis r;
    SubspaceBasis v;
    SplitChecks checks;
    /// The form restricted to R is singular.
    bool form_degenerate = false;
};

/// V is the form-orthogonal complement of R. Throws std::invalid_argument if R is not closed.
ReductiveSplit reductive_split(const LieAlgebra& l, const Subalgebra& r, const BilinearForm& form);

/// Ad-invariant form for a standard algebra: Killing form on su(n) summands,
/// 1 on u(1) summands, trace form tr(XY) on gl(n) summands.
BilinearForm standard_invariant_form(const AlgebraSpec& spec);

}  // namespace jred
