#pragma once

#include "jred/linalg.hpp"

#include <array>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace jred {

/// One structure constant c^A_{BC}: [b_B, b_C] = sum_A c^A_{BC} b_A.
struct StructureConstant {
    std::size_t a = 0;
    std::size_t b = 0;
    std::size_t c = 0;
    Scalar value;
};

/// Contiguous labeled range of basis indices.
struct GradingBlock {
    std::string label;
    std::size_t begin = 0;
    std::size_t size = 0;
};

/// Coefficients over the basis of an ambient algebra.
struct Element {
    Vector coords;

    static Element zero(std::size_t dim) { return {Vector(dim)}; }
    static Element basis(std::size_t dim, std::size_t i);
    std::size_t dim() const { return coords.size(); }
    friend bool operator==(const Element&, const Element&) = default;
};

struct ValidationReport {
    /// (A,B,C) with c^A_{BC} + c^A_{CB} != 0, reported with B <= C.
    std::vector<std::array<std::size_t, 3>> antisymmetry;
    /// (A,B,C,E) with A < B < C where the E component of the Jacobiator is nonzero.
    std::vector<std::array<std::size_t, 4>> jacobi;

    bool ok() const { return antisymmetry.empty() && jacobi.empty(); }
};

/// Finite-dimensional algebra given by sparse structure constants.
///
/// Entries are kept as supplied (normally one per antisymmetric pair, B < C);
/// the missing orientation is filled in by antisymmetry. Inconsistent input is
/// kept so that validate() can report it. Immutable after construction.
class LieAlgebra {
public:
    struct Term {
        std::size_t index;
        Scalar value;
    };

    LieAlgebra() = default;
    /// Throws DimensionError on out-of-range indices or label count mismatch,
    /// std::invalid_argument on duplicate (A,B,C) keys.
    LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<StructureConstant> constants,
               std::vector<GradingBlock> grading = {});

    const std::string& name() const { return name_; }
    std::size_t dim() const { return labels_.size(); }
    const std::vector<std::string>& labels() const { return labels_; }
    const std::vector<GradingBlock>& grading() const { return grading_; }

    /// Supplied constants in (A,B,C) key order.
    std::vector<StructureConstant> constants() const;
    std::size_t constant_count() const { return raw_.size(); }

    Scalar structure(std::size_t a, std::size_t b, std::size_t c) const;
    /// Nonzero components of [b_B, b_C].
    const std::vector<Term>& bracket_terms(std::size_t b, std::size_t c) const { return terms_[b * dim() + c]; }

private:
    friend ValidationReport validate(const LieAlgebra& l);

    std::string name_;
    std::vector<std::string> labels_;
    std::vector<GradingBlock> grading_;
    std::map<std::array<std::size_t, 3>, Scalar> raw_;
    std::vector<std::vector<Term>> terms_;
};

Element bracket(const LieAlgebra& l, const Element& x, const Element& y);
ValidationReport validate(const LieAlgebra& l);

/// kappa_{AB} = sum c^C_{AD} c^D_{BC}.
BilinearForm killing_form(const LieAlgebra& l);

/// Subspace of an algebra; `closed` records whether it is closed under the bracket.
/// `ambient` is non-owning.
struct Subalgebra {
    const LieAlgebra* ambient = nullptr;
    SubspaceBasis span;
    bool closed = false;

    std::size_t dim() const { return span.dim(); }
};

bool is_closed(const LieAlgebra& l, const SubspaceBasis& span);
Subalgebra make_subalgebra(const LieAlgebra& l, SubspaceBasis span);
/// Smallest subalgebra containing the span.
SubspaceBasis bracket_closure(const LieAlgebra& l, const SubspaceBasis& span);

Subalgebra centralizer(const LieAlgebra& l, const std::vector<Element>& generators);

struct Descriptor {
    std::size_t dim = 0;
    bool abelian = true;
    std::size_t killing_rank = 0;
    std::size_t center_dim = 0;
    friend bool operator==(const Descriptor&, const Descriptor&) = default;
};

/// Throws std::invalid_argument("not a subalgebra") if the span is not closed.
/// killing_rank uses the ambient Killing form restricted to the span.
Descriptor classify(const Subalgebra& s);

/// Parsed form of names such as "su3", "gl(4)", "su2+u1".
struct AlgebraSpec {
    enum class Kind { su2, su3, u1, gl, direct_sum };
    Kind kind = Kind::u1;
    std::size_t n = 0;
    std::vector<AlgebraSpec> parts;

    /// Throws ConfigError on unknown names.
    static AlgebraSpec parse(std::string_view text);
    std::string to_string() const;
};

LieAlgebra make_standard_algebra(const AlgebraSpec& spec);
LieAlgebra make_standard_algebra(std::string_view spec);
LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts);

}  // namespace jred
