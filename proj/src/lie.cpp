#include "jred/lie.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace jred {

Element Element::basis(std::size_t dim, std::size_t i) {
    Element e = zero(dim);
    e.coords.at(i) = Scalar(1);
    return e;
}

LieAlgebra::LieAlgebra(std::string name, std::vector<std::string> labels, std::vector<StructureConstant> constants,
                       std::vector<GradingBlock> grading)
    : name_(std::move(name)), labels_(std::move(labels)), grading_(std::move(grading)) {
    const std::size_t n = labels_.size();
    for (const auto& g : grading_)
        if (g.begin + g.size > n) throw DimensionError("grading block '" + g.label + "' exceeds algebra dimension");
    for (auto& sc : constants) {
        if (sc.a >= n || sc.b >= n || sc.c >= n) throw DimensionError("structure constant index out of range");
        if (sc.value.is_zero()) continue;
        auto [it, inserted] = raw_.emplace(std::array{sc.a, sc.b, sc.c}, std::move(sc.value));
        if (!inserted) throw std::invalid_argument("duplicate structure constant entry");
    }
    terms_.assign(n * n, {});
    for (const auto& [key, value] : raw_) {
        const auto [a, b, c] = key;
        terms_[b * n + c].push_back({a, value});
        if (b != c && !raw_.contains({a, c, b})) terms_[c * n + b].push_back({a, -value});
    }
    for (auto& t : terms_)
        std::sort(t.begin(), t.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
}

std::vector<StructureConstant> LieAlgebra::constants() const {
    std::vector<StructureConstant> out;
    out.reserve(raw_.size());
    for (const auto& [key, value] : raw_) out.push_back({key[0], key[1], key[2], value});
    return out;
}

Scalar LieAlgebra::structure(std::size_t a, std::size_t b, std::size_t c) const {
    for (const auto& t : bracket_terms(b, c))
        if (t.index == a) return t.value;
    return Scalar();
}

Element bracket(const LieAlgebra& l, const Element& x, const Element& y) {
    const std::size_t n = l.dim();
    if (x.dim() != n || y.dim() != n) throw DimensionError("bracket argument dimension mismatch");
    Element z = Element::zero(n);
    for (std::size_t b = 0; b < n; ++b) {
        if (x.coords[b].is_zero()) continue;
        for (std::size_t c = 0; c < n; ++c) {
            if (y.coords[c].is_zero()) continue;
            const auto& terms = l.bracket_terms(b, c);
            if (terms.empty()) continue;
            const Scalar w = x.coords[b] * y.coords[c];
            for (const auto& t : terms) z.coords[t.index] += w * t.value;
        }
    }
    return z;
}

ValidationReport validate(const LieAlgebra& l) {
    ValidationReport report;
    const std::size_t n = l.dim();

    std::set<std::array<std::size_t, 3>> bad;
    for (const auto& [key, value] : l.raw_) {
        const auto [a, b, c] = key;
        if (b == c) {
            bad.insert({a, b, c});
            continue;
        }
        auto other = l.raw_.find({a, c, b});
        if (other != l.raw_.end() && !(value + other->second).is_zero()) bad.insert({a, std::min(b, c), std::max(b, c)});
    }
    report.antisymmetry.assign(bad.begin(), bad.end());

    // sum_D c^E_{AD} c^D_{BC} + cyclic, i.e. [b_A,[b_B,b_C]] + [b_B,[b_C,b_A]] + [b_C,[b_A,b_B]].
    Vector acc(n);
    std::vector<std::size_t> touched;
    auto nested = [&](std::size_t x, std::size_t y, std::size_t z) {
        for (const auto& inner : l.bracket_terms(y, z))
            for (const auto& outer : l.bracket_terms(x, inner.index)) {
                acc[outer.index] += outer.value * inner.value;
                touched.push_back(outer.index);
            }
    };
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a + 1; b < n; ++b)
            for (std::size_t c = b + 1; c < n; ++c) {
                nested(a, b, c);
                nested(b, c, a);
                nested(c, a, b);
                if (touched.empty()) continue;
                std::sort(touched.begin(), touched.end());
                touched.erase(std::unique(touched.begin(), touched.end()), touched.end());
                for (std::size_t e : touched) {
                    if (!acc[e].is_zero()) report.jacobi.push_back({a, b, c, e});
                    acc[e] = Scalar();
                }
                touched.clear();
            }
    return report;
}

BilinearForm killing_form(const LieAlgebra& l) {
    const std::size_t n = l.dim();
    // ad_A as a sparse list of (row C, column D, c^C_{AD}).
    struct Entry {
        std::size_t row, col;
        Scalar value;
    };
    std::vector<std::vector<Entry>> ad(n);
    std::vector<std::map<std::pair<std::size_t, std::size_t>, Scalar>> lookup(n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t d = 0; d < n; ++d)
            for (const auto& t : l.bracket_terms(a, d)) {
                ad[a].push_back({t.index, d, t.value});
                lookup[a].emplace(std::pair{t.index, d}, t.value);
            }
    Matrix k(n, n);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = a; b < n; ++b) {
            Scalar s;
            for (const auto& e : ad[a]) {
                auto it = lookup[b].find({e.col, e.row});
                if (it != lookup[b].end()) s += e.value * it->second;
            }
            k(a, b) = s;
            k(b, a) = s;
        }
    return BilinearForm(std::move(k));
}

bool is_closed(const LieAlgebra& l, const SubspaceBasis& span) {
    const auto& v = span.vectors();
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!span.contains(bracket(l, {v[i]}, {v[j]}).coords)) return false;
    return true;
}

Subalgebra make_subalgebra(const LieAlgebra& l, SubspaceBasis span) {
    if (span.ambient_dim() != l.dim()) throw DimensionError("subspace does not live in the algebra");
    const bool closed = is_closed(l, span);
    return Subalgebra{&l, std::move(span), closed};
}

SubspaceBasis bracket_closure(const LieAlgebra& l, const SubspaceBasis& span) {
    SubspaceBasis current = span.canonical();
    while (true) {
        std::vector<Vector> gens = current.vectors();
        const auto& v = current.vectors();
        for (std::size_t i = 0; i < v.size(); ++i)
            for (std::size_t j = i + 1; j < v.size(); ++j) gens.push_back(bracket(l, {v[i]}, {v[j]}).coords);
        SubspaceBasis next = SubspaceBasis::span_of(l.dim(), gens);
        if (next.dim() == current.dim()) return current;
        current = std::move(next);
    }
}

Subalgebra centralizer(const LieAlgebra& l, const std::vector<Element>& generators) {
    const std::size_t n = l.dim();
    Matrix m(generators.size() * n, n);
    for (std::size_t g = 0; g < generators.size(); ++g) {
        if (generators[g].dim() != n) throw DimensionError("generator dimension mismatch");
        for (std::size_t x = 0; x < n; ++x) {
            Element col = bracket(l, generators[g], Element::basis(n, x));
            for (std::size_t e = 0; e < n; ++e) m(g * n + e, x) = col.coords[e];
        }
    }
    return Subalgebra{&l, nullspace(m), true};
}

Descriptor classify(const Subalgebra& s) {
    if (s.ambient == nullptr) throw std::invalid_argument("subalgebra has no ambient algebra");
    const LieAlgebra& l = *s.ambient;
    if (!is_closed(l, s.span)) throw std::invalid_argument("not a subalgebra");

    Descriptor d;
    d.dim = s.span.dim();
    const auto& v = s.span.vectors();
    for (std::size_t i = 0; i < v.size() && d.abelian; ++i)
        for (std::size_t j = i + 1; j < v.size(); ++j)
            if (!is_zero(bracket(l, {v[i]}, {v[j]}).coords)) {
                d.abelian = false;
                break;
            }
    if (d.dim == 0) return d;

    const BilinearForm kappa = killing_form(l);
    Matrix restricted(d.dim, d.dim);
    for (std::size_t i = 0; i < d.dim; ++i)
        for (std::size_t j = 0; j < d.dim; ++j) restricted(i, j) = kappa(v[i], v[j]);
    d.killing_rank = rank(restricted);

    std::vector<Element> gens;
    for (const auto& x : v) gens.push_back({x});
    d.center_dim = intersect(centralizer(l, gens).span, s.span).dim();
    return d;
}

namespace {

void add_antisymmetric_triple(std::vector<StructureConstant>& out, std::size_t i, std::size_t j, std::size_t k,
                              const Scalar& f) {
    // Totally antisymmetric f_{ijk}: c^k_{ij} = f, and its cyclic images, stored with B < C.
    const std::array<std::array<std::size_t, 3>, 3> cyc{{{i, j, k}, {j, k, i}, {k, i, j}}};
    for (const auto& [b, c, a] : cyc) {
        if (b < c)
            out.push_back({a, b, c, f});
        else
            out.push_back({a, c, b, -f});
    }
}

std::vector<std::string> numbered_labels(const std::string& prefix, std::size_t n) {
    std::vector<std::string> labels;
    for (std::size_t i = 1; i <= n; ++i) labels.push_back(prefix + ":" + std::to_string(i));
    return labels;
}

LieAlgebra make_su2() {
    std::vector<StructureConstant> c;
    add_antisymmetric_triple(c, 0, 1, 2, Scalar(1));
    return LieAlgebra("su2", numbered_labels("su2", 3), std::move(c), {{"su2", 0, 3}});
}

LieAlgebra make_su3() {
    const Scalar half(Rational(1, 2));
    const Scalar root3_half(Rational(0), Rational(1, 2));
    std::vector<StructureConstant> c;
    // Gell-Mann structure constants, 1-based in the usual tables.
    add_antisymmetric_triple(c, 0, 1, 2, Scalar(1));
    add_antisymmetric_triple(c, 0, 3, 6, half);
    add_antisymmetric_triple(c, 0, 4, 5, -half);
    add_antisymmetric_triple(c, 1, 3, 5, half);
    add_antisymmetric_triple(c, 1, 4, 6, half);
    add_antisymmetric_triple(c, 2, 3, 4, half);
    add_antisymmetric_triple(c, 2, 5, 6, -half);
    add_antisymmetric_triple(c, 3, 4, 7, root3_half);
    add_antisymmetric_triple(c, 5, 6, 7, root3_half);
    return LieAlgebra("su3", numbered_labels("su3", 8), std::move(c), {{"su3", 0, 8}});
}

LieAlgebra make_u1() { return LieAlgebra("u1", numbered_labels("u1", 1), {}, {{"u1", 0, 1}}); }

LieAlgebra make_gl(std::size_t n) {
    const std::size_t dim = n * n;
    auto idx = [n](std::size_t mu, std::size_t nu) { return mu * n + nu; };
    std::vector<std::string> labels;
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu)
            labels.push_back("gl:" + std::to_string(mu + 1) + "," + std::to_string(nu + 1));
    // [E^mu_nu, E^rho_sigma] = delta^rho_nu E^mu_sigma - delta^mu_sigma E^rho_nu
    std::map<std::array<std::size_t, 3>, Scalar> acc;
    for (std::size_t mu = 0; mu < n; ++mu)
        for (std::size_t nu = 0; nu < n; ++nu)
            for (std::size_t rho = 0; rho < n; ++rho)
                for (std::size_t sigma = 0; sigma < n; ++sigma) {
                    const std::size_t b = idx(mu, nu), c = idx(rho, sigma);
                    if (b >= c) continue;
                    if (rho == nu) acc[{idx(mu, sigma), b, c}] += Scalar(1);
                    if (mu == sigma) acc[{idx(rho, nu), b, c}] -= Scalar(1);
                }
    std::vector<StructureConstant> constants;
    for (auto& [key, value] : acc)
        if (!value.is_zero()) constants.push_back({key[0], key[1], key[2], value});
    const std::string name = "gl(" + std::to_string(n) + ")";
    return LieAlgebra(name, std::move(labels), std::move(constants), {{name, 0, dim}});
}

std::string trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return std::string(s);
}

}  // namespace

AlgebraSpec AlgebraSpec::parse(std::string_view text) {
    const std::string t = trim(text);
    if (t.find('+') != std::string::npos) {
        AlgebraSpec sum;
        sum.kind = Kind::direct_sum;
        std::size_t start = 0;
        while (start <= t.size()) {
            std::size_t plus = t.find('+', start);
            if (plus == std::string::npos) plus = t.size();
            sum.parts.push_back(parse(std::string_view(t).substr(start, plus - start)));
            start = plus + 1;
        }
        return sum;
    }
    if (t == "su2" || t == "su(2)") return {Kind::su2, 2, {}};
    if (t == "su3" || t == "su(3)") return {Kind::su3, 3, {}};
    if (t == "u1" || t == "u(1)") return {Kind::u1, 1, {}};
    if (t.rfind("gl", 0) == 0) {
        std::string digits = t.substr(2);
        if (digits.size() >= 2 && digits.front() == '(' && digits.back() == ')')
            digits = digits.substr(1, digits.size() - 2);
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), [](char c) { return std::isdigit(c); })) {
            const std::size_t n = std::stoul(digits);
            if (n == 0) throw ConfigError("gl(n) requires n >= 1");
            return {Kind::gl, n, {}};
        }
    }
    throw ConfigError("unknown algebra '" + t + "'");
}

std::string AlgebraSpec::to_string() const {
    switch (kind) {
        case Kind::su2: return "su2";
        case Kind::su3: return "su3";
        case Kind::u1: return "u1";
        case Kind::gl: return "gl(" + std::to_string(n) + ")";
        case Kind::direct_sum: {
            std::string out;
            for (const auto& p : parts) out += (out.empty() ? "" : "+") + p.to_string();
            return out;
        }
    }
    return {};
}

LieAlgebra make_standard_algebra(const AlgebraSpec& spec) {
    switch (spec.kind) {
        case AlgebraSpec::Kind::su2: return make_su2();
        case AlgebraSpec::Kind::su3: return make_su3();
        case AlgebraSpec::Kind::u1: return make_u1();
        case AlgebraSpec::Kind::gl:
            if (spec.n == 0) throw ConfigError("gl(n) requires n >= 1");
            return make_gl(spec.n);
        case AlgebraSpec::Kind::direct_sum: {
            std::vector<LieAlgebra> parts;
            for (const auto& p : spec.parts) parts.push_back(make_standard_algebra(p));
            return direct_sum(parts);
        }
    }
    throw ConfigError("unknown algebra kind");
}

LieAlgebra make_standard_algebra(std::string_view spec) { return make_standard_algebra(AlgebraSpec::parse(spec)); }

LieAlgebra direct_sum(const std::vector<LieAlgebra>& parts) {
    std::string name;
    std::vector<std::string> labels;
    std::vector<StructureConstant> constants;
    std::vector<GradingBlock> grading;
    std::map<std::string, int> seen;
    std::size_t offset = 0;
    for (const auto& p : parts) {
        const int occurrence = ++seen[p.name()];
        const std::string suffix = occurrence > 1 ? "#" + std::to_string(occurrence) : "";
        name += (name.empty() ? "" : "+") + p.name();
        for (const auto& label : p.labels()) labels.push_back(label + suffix);
        for (const auto& c : p.constants()) constants.push_back({c.a + offset, c.b + offset, c.c + offset, c.value});
        if (p.grading().empty())
            grading.push_back({p.name() + suffix, offset, p.dim()});
        else
            for (const auto& g : p.grading()) grading.push_back({g.label + suffix, g.begin + offset, g.size});
        offset += p.dim();
    }
    return LieAlgebra(std::move(name), std::move(labels), std::move(constants), std::move(grading));
}

}  // namespace jred
