#pragma once

#include "jred/reduction.hpp"

#include <optional>
#include <stdexcept>
#include <string>

namespace jred {

/// True iff dim K = x_dim.
bool rank_condition(const KernelBasis& k, std::size_t x_dim);
/// Human-readable reason; mentions "trivial kernel" when dim K = 0.
std::string rank_condition_note(const KernelBasis& k, std::size_t x_dim);

/// Optional algebra data for the bracket-preservation check. The vertical
/// algebra is written in the coordinates of SplitModel::vertical's basis.
struct BracketData {
    LieAlgebra vertical_algebra;
    LieAlgebra w_algebra;
    /// K inside W, in W coordinates.
    SubspaceBasis k;
};

/// Finite model of a tangent space at one point: total = vertical + horizontal.
struct SplitModel {
    std::size_t total_dim = 0;
    SubspaceBasis vertical;
    SubspaceBasis horizontal;
    SubspaceBasis tq;
    std::size_t w_dim = 0;
    std::size_t k_dim = 0;
    std::size_t x_dim = 0;
    /// Dimension of the Jacobi kernel the rank condition is evaluated against.
    std::size_t kernel_dim = 0;
    std::optional<BracketData> brackets;
};

struct CartanCheck {
    bool rank_condition = false;
    bool transversal = false;
    bool dim_match = false;
    /// The remaining checks are evaluated only when the three above hold.
    std::optional<bool> injective;
    std::optional<bool> agrees_on_vertical;
    std::optional<bool> k_block_onto;
    std::optional<bool> brackets_preserved;
    /// w_dim x dim(tq), columns in tq basis order; present iff every check passed.
    std::optional<Matrix> restriction;
};

/// A SplitModel or parallelism that breaks a stated invariant.
class CartanPreconditionError : public std::invalid_argument {
public:
    CartanPreconditionError(std::string invariant, const std::string& detail)
        : std::invalid_argument(invariant + ": " + detail), invariant_(std::move(invariant)) {}
    const std::string& invariant() const { return invariant_; }

private:
    std::string invariant_;
};

/// parallelism: w_dim x dim(vertical), coordinates relative to the vertical basis.
CartanCheck cartan_restriction(const SplitModel& model, const Matrix& parallelism);

}  // namespace jred
