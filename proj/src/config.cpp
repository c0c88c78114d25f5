#include "jred/config.hpp"

#include <toml.hpp>

#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

namespace jred {

namespace {

// ---- TOML to JSON with a path -> line map ----

void convert(const toml::node& node, const std::string& path, ordered_json& out, std::map<std::string, int>& lines) {
    lines[path] = static_cast<int>(node.source().begin.line);
    if (const auto* t = node.as_table()) {
        out = ordered_json::object();
        for (const auto& [k, v] : *t) {
            const std::string key(k.str());
            convert(v, path.empty() ? key : path + "." + key, out[key], lines);
        }
    } else if (const auto* a = node.as_array()) {
        out = ordered_json::array();
        for (std::size_t i = 0; i < a->size(); ++i) {
            out.push_back(nullptr);
            convert(*a->get(i), path + "[" + std::to_string(i) + "]", out.back(), lines);
        }
    } else if (const auto* i = node.as_integer()) {
        out = i->get();
    } else if (const auto* s = node.as_string()) {
        out = s->get();
    } else if (const auto* b = node.as_boolean()) {
        out = b->get();
    } else if (const auto* f = node.as_floating_point()) {
        out = f->get();
    } else {
        throw ConfigError(std::string(node.source().path ? *node.source().path : "") + ":" +
                          std::to_string(node.source().begin.line) + ": " + path + ": date/time values are not supported");
    }
}

// ---- Typed access with diagnostics ----

class Node {
public:
    Node(const ConfigDocument& doc, const ordered_json& value, std::string path)
        : doc_(&doc), value_(&value), path_(std::move(path)) {}

    [[noreturn]] void fail(const std::string& message) const {
        std::string where = doc_->file;
        for (std::string p = path_;; ) {
            if (auto it = doc_->lines.find(p); it != doc_->lines.end()) {
                where += ":" + std::to_string(it->second);
                break;
            }
            const auto cut = p.find_last_of(".[");
            if (cut == std::string::npos || p.empty()) break;
            p = p.substr(0, cut);
        }
        throw ConfigError(where + ": " + (path_.empty() ? "<root>" : path_) + ": " + message);
    }

    const ordered_json& json() const { return *value_; }
    const std::string& path() const { return path_; }
    bool has(const std::string& key) const { return value_->is_object() && value_->contains(key); }

    Node at(const std::string& key) const {
        if (!value_->is_object()) fail("expected a table");
        const auto it = value_->find(key);
        if (it == value_->end()) fail("missing key '" + key + "'");
        return {*doc_, *it, path_.empty() ? key : path_ + "." + key};
    }

    std::vector<Node> items() const {
        if (!value_->is_array()) fail("expected an array");
        std::vector<Node> out;
        for (std::size_t i = 0; i < value_->size(); ++i) out.emplace_back(*doc_, (*value_)[i], path_ + "[" + std::to_string(i) + "]");
        return out;
    }

    void allow_keys(std::initializer_list<const char*> keys) const {
        if (!value_->is_object()) fail("expected a table");
        const std::set<std::string> allowed(keys.begin(), keys.end());
        for (const auto& [k, v] : value_->items())
            if (!allowed.contains(k)) Node(*doc_, v, path_.empty() ? k : path_ + "." + k).fail("unknown key '" + k + "'");
    }

    std::string string() const {
        if (!value_->is_string()) fail("expected a string");
        return value_->get<std::string>();
    }

    long integer() const {
        if (!value_->is_number_integer()) fail("expected an integer");
        return value_->get<long>();
    }

    std::size_t count(std::size_t lo = 0) const {
        const long v = integer();
        if (v < static_cast<long>(lo)) fail("expected an integer >= " + std::to_string(lo));
        return static_cast<std::size_t>(v);
    }

    std::uint64_t unsigned_integer() const {
        if (value_->is_number_unsigned()) return value_->get<std::uint64_t>();
        const long v = integer();
        if (v < 0) fail("expected a non-negative integer");
        return static_cast<std::uint64_t>(v);
    }

    Scalar scalar() const {
        if (value_->is_number_integer()) return Scalar(value_->get<long>());
        if (value_->is_number_float()) fail("floating-point values are not exact; write \"p/q\" or \"p/q+r/s*sqrt3\"");
        if (!value_->is_string()) fail("expected a scalar");
        try {
            return Scalar::parse(value_->get<std::string>());
        } catch (const std::exception& e) {
            fail(e.what());
        }
    }

    Vector vector(std::size_t dim) const {
        const auto xs = items();
        if (xs.size() != dim) fail("expected " + std::to_string(dim) + " entries, got " + std::to_string(xs.size()));
        Vector v;
        for (const auto& x : xs) v.push_back(x.scalar());
        return v;
    }

    Matrix matrix(std::size_t rows, std::size_t cols) const {
        const auto rs = items();
        if (rs.size() != rows) fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(rs.size()));
        Matrix m(rows, cols);
        for (std::size_t r = 0; r < rows; ++r) {
            const Vector v = rs[r].vector(cols);
            for (std::size_t c = 0; c < cols; ++c) m(r, c) = v[c];
        }
        return m;
    }

    /// 1-based algebra index, returned 0-based.
    std::size_t algebra_index(std::size_t dim) const {
        const long v = integer();
        if (v < 1 || v > static_cast<long>(dim)) fail("algebra index must be in 1.." + std::to_string(dim));
        return static_cast<std::size_t>(v - 1);
    }

    /// 0-based spacetime index.
    std::size_t spacetime_index(std::size_t n) const {
        const long v = integer();
        if (v < 0 || v >= static_cast<long>(n)) fail("spacetime index must be in 0.." + std::to_string(n - 1));
        return static_cast<std::size_t>(v);
    }

private:
    const ConfigDocument* doc_;
    const ordered_json* value_;
    std::string path_;
};

ordered_json encode(const Vector& v) {
    ordered_json out = ordered_json::array();
    for (const auto& s : v) out.push_back(s.to_string());
    return out;
}

ordered_json encode_rows(const Matrix& m) {
    ordered_json out = ordered_json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) out.push_back(encode(m.row(r)));
    return out;
}

ordered_json encode_vectors(const std::vector<Vector>& vs) {
    ordered_json out = ordered_json::array();
    for (const auto& v : vs) out.push_back(encode(v));
    return out;
}

template <typename T>
struct Parsed {
    T value;
    ordered_json echo;
};

Parsed<AlgebraConfig> parse_algebra(const Node& node) {
    node.allow_keys({"name", "dim", "labels", "constants"});
    AlgebraConfig out;
    ordered_json echo = ordered_json::object();
    if (node.has("name")) {
        if (node.has("dim") || node.has("constants") || node.has("labels"))
            node.fail("give either a standard 'name' or custom 'dim'/'constants', not both");
        const Node name = node.at("name");
        try {
            out.spec = AlgebraSpec::parse(name.string());
            out.algebra = make_standard_algebra(*out.spec);
        } catch (const ConfigError& e) {
            name.fail(e.what());
        }
        echo["name"] = out.spec->to_string();
        return {out, echo};
    }
    const std::size_t dim = node.at("dim").count(1);
    std::vector<std::string> labels;
    if (node.has("labels")) {
        for (const auto& l : node.at("labels").items()) labels.push_back(l.string());
        if (labels.size() != dim) node.at("labels").fail("expected " + std::to_string(dim) + " labels");
    } else {
        for (std::size_t i = 1; i <= dim; ++i) labels.push_back("e" + std::to_string(i));
    }
    std::vector<StructureConstant> constants;
    ordered_json echo_constants = ordered_json::array();
    if (node.has("constants")) {
        for (const auto& c : node.at("constants").items()) {
            c.allow_keys({"A", "B", "C", "value"});
            StructureConstant sc{c.at("A").algebra_index(dim), c.at("B").algebra_index(dim), c.at("C").algebra_index(dim),
                                 c.at("value").scalar()};
            constants.push_back(sc);
            echo_constants.push_back(ordered_json{{"A", sc.a + 1}, {"B", sc.b + 1}, {"C", sc.c + 1}, {"value", sc.value.to_string()}});
        }
    }
    try {
        out.algebra = LieAlgebra("custom", labels, constants);
    } catch (const std::invalid_argument& e) {
        node.at("constants").fail(e.what());
    }
    echo["dim"] = dim;
    echo["labels"] = labels;
    echo["constants"] = echo_constants;
    return {out, echo};
}

Parsed<Metric> parse_spacetime(const Node* node) {
    Metric m = Metric::minkowski(4);
    if (node) {
        node->allow_keys({"signature"});
        if (node->has("signature")) {
            const Node sig = node->at("signature");
            m.signs.clear();
            for (const auto& s : sig.items()) {
                m.signs.push_back(s.scalar());
                if (m.signs.back() != Scalar(1) && m.signs.back() != Scalar(-1)) s.fail("signature entries must be ±1");
            }
            if (m.signs.empty()) sig.fail("signature must not be empty");
        }
    }
    return {m, ordered_json{{"signature", encode(m.signs)}}};
}

Parsed<Curvature> parse_curvature(const Node* node, std::size_t g_dim, std::size_t n) {
    Curvature f(g_dim, n);
    std::map<std::array<std::size_t, 3>, std::pair<Scalar, std::string>> seen;
    if (node) {
        for (const auto& e : node->items()) {
            e.allow_keys({"A", "mu", "nu", "value"});
            const std::size_t a = e.at("A").algebra_index(g_dim);
            std::size_t mu = e.at("mu").spacetime_index(n);
            std::size_t nu = e.at("nu").spacetime_index(n);
            Scalar v = e.at("value").scalar();
            if (mu == nu) {
                if (!v.is_zero()) e.fail("curvature is antisymmetric; diagonal slots must be zero");
                continue;
            }
            if (mu > nu) {
                std::swap(mu, nu);
                v = -v;
            }
            const auto [it, inserted] = seen.try_emplace({a, mu, nu}, v, e.path());
            if (!inserted && it->second.first != v)
                e.fail("inconsistent with " + it->second.second + " (F is antisymmetric in mu, nu)");
            f.set(a, mu, nu, v);
        }
    }
    ordered_json echo = ordered_json::array();
    for (std::size_t a = 0; a < g_dim; ++a)
        for (std::size_t mu = 0; mu < n; ++mu)
            for (std::size_t nu = mu + 1; nu < n; ++nu)
                if (!f(a, mu, nu).is_zero())
                    echo.push_back(ordered_json{{"A", a + 1}, {"mu", mu}, {"nu", nu}, {"value", f(a, mu, nu).to_string()}});
    return {f, echo};
}

Parsed<ConnectionMode> parse_connection(const Node* node, std::size_t g_dim, std::size_t n,
                                        std::optional<std::uint64_t> seed_override) {
    std::string mode = "generic";
    if (node && node->has("mode")) mode = node->at("mode").string();
    if (mode == "generic") {
        if (node) node->allow_keys({"mode", "count", "seed"});
        GenericSampling s;
        if (node && node->has("count")) s.count = node->at("count").count(1);
        if (node && node->has("seed")) s.seed = node->at("seed").unsigned_integer();
        if (seed_override) s.seed = *seed_override;
        return {s, ordered_json{{"mode", "generic"}, {"count", s.count}, {"seed", s.seed}}};
    }
    if (mode != "explicit") node->at("mode").fail("connection mode must be 'generic' or 'explicit'");
    node->allow_keys({"mode", "entries"});
    Connection c{Matrix(g_dim, n)};
    std::set<std::pair<std::size_t, std::size_t>> seen;
    if (node->has("entries"))
        for (const auto& e : node->at("entries").items()) {
            e.allow_keys({"A", "mu", "value"});
            const std::size_t a = e.at("A").algebra_index(g_dim);
            const std::size_t mu = e.at("mu").spacetime_index(n);
            if (!seen.insert({a, mu}).second) e.fail("duplicate connection entry");
            c.omega(a, mu) = e.at("value").scalar();
        }
    ordered_json entries = ordered_json::array();
    for (std::size_t a = 0; a < g_dim; ++a)
        for (std::size_t mu = 0; mu < n; ++mu)
            if (!c.omega(a, mu).is_zero())
                entries.push_back(ordered_json{{"A", a + 1}, {"mu", mu}, {"value", c.omega(a, mu).to_string()}});
    return {c, ordered_json{{"mode", "explicit"}, {"entries", entries}}};
}

SubspaceBasis subspace(const Node& node, std::size_t ambient) {
    std::vector<Vector> vs;
    for (const auto& v : node.items()) vs.push_back(v.vector(ambient));
    try {
        return vs.empty() ? SubspaceBasis(ambient) : SubspaceBasis(ambient, vs);
    } catch (const std::invalid_argument& e) {
        node.fail(e.what());
    }
}

LieAlgebra standard_algebra(const Node& node) {
    try {
        return make_standard_algebra(node.string());
    } catch (const ConfigError& e) {
        node.fail(e.what());
    }
}

Parsed<CartanInput> parse_cartan(const Node& node) {
    node.allow_keys({"total_dim", "vertical", "horizontal", "tq", "w_dim", "k_dim", "x_dim", "kernel_dim", "parallelism",
                     "brackets"});
    CartanInput in;
    SplitModel& m = in.model;
    m.total_dim = node.at("total_dim").count(1);
    m.vertical = subspace(node.at("vertical"), m.total_dim);
    m.horizontal = subspace(node.at("horizontal"), m.total_dim);
    m.tq = subspace(node.at("tq"), m.total_dim);
    m.w_dim = node.at("w_dim").count();
    m.k_dim = node.at("k_dim").count();
    m.x_dim = node.at("x_dim").count();
    if (node.has("kernel_dim")) {
        m.kernel_dim = node.at("kernel_dim").count();
        in.kernel_dim_from_pipeline = false;
    }
    in.parallelism = node.at("parallelism").matrix(m.w_dim, m.vertical.dim());

    ordered_json echo{{"total_dim", m.total_dim},
                      {"vertical", encode_vectors(m.vertical.vectors())},
                      {"horizontal", encode_vectors(m.horizontal.vectors())},
                      {"tq", encode_vectors(m.tq.vectors())},
                      {"w_dim", m.w_dim},
                      {"k_dim", m.k_dim},
                      {"x_dim", m.x_dim}};
    if (!in.kernel_dim_from_pipeline) echo["kernel_dim"] = m.kernel_dim;
    echo["parallelism"] = encode_rows(in.parallelism);

    if (node.has("brackets")) {
        const Node b = node.at("brackets");
        b.allow_keys({"vertical_algebra", "w_algebra", "k"});
        BracketData data{standard_algebra(b.at("vertical_algebra")), standard_algebra(b.at("w_algebra")),
                         subspace(b.at("k"), m.w_dim)};
        echo["brackets"] = ordered_json{{"vertical_algebra", b.at("vertical_algebra").string()},
                                        {"w_algebra", b.at("w_algebra").string()},
                                        {"k", encode_vectors(data.k.vectors())}};
        m.brackets = std::move(data);
    }
    return {in, echo};
}

std::optional<Node> optional_child(const Node& root, const std::string& key) {
    if (root.has(key)) return root.at(key);
    return std::nullopt;
}

const Node* ptr(const std::optional<Node>& n) { return n ? &*n : nullptr; }

}  // namespace

ConfigDocument parse_document(const std::string& text, const std::string& file, bool json) {
    ConfigDocument doc;
    doc.file = file;
    if (json) {
        try {
            doc.root = ordered_json::parse(text);
        } catch (const nlohmann::json::parse_error& e) {
            throw ConfigError(file + ": " + e.what());
        }
    } else {
        try {
            const toml::table table = toml::parse(text, file);
            convert(table, "", doc.root, doc.lines);
        } catch (const toml::parse_error& e) {
            throw ConfigError(file + ":" + std::to_string(e.source().begin.line) + ": " + std::string(e.description()));
        }
    }
    if (!doc.root.is_object()) throw ConfigError(file + ": top level must be a table");
    return doc;
}

ConfigDocument load_document(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError(path.string() + ": cannot read file");
    std::ostringstream text;
    text << in.rdbuf();
    return parse_document(text.str(), path.string(), path.extension() == ".json");
}

RunConfig parse_run_config(const ConfigDocument& doc, std::optional<std::uint64_t> seed_override) {
    const Node root(doc, doc.root, "");
    root.allow_keys({"algebra", "spacetime", "delta", "curvature", "connection", "cartan", "output"});
    RunConfig rc;
    PipelineInput& in = rc.input;

    auto algebra = parse_algebra(root.at("algebra"));
    in.algebra = std::move(algebra.value.algebra);
    in.spec = algebra.value.spec;
    const std::size_t N = in.algebra.dim();

    auto spacetime = parse_spacetime(ptr(optional_child(root, "spacetime")));
    in.eta = spacetime.value;
    const std::size_t n = in.eta.n();

    rc.echo["algebra"] = algebra.echo;
    rc.echo["spacetime"] = spacetime.echo;

    in.delta = BilinearForm::identity(N);
    if (const auto d = optional_child(root, "delta")) {
        d->allow_keys({"matrix"});
        const Node m = d->at("matrix");
        try {
            in.delta = BilinearForm(m.matrix(N, N));
        } catch (const std::invalid_argument& e) {
            m.fail(e.what());
        }
        if (!in.delta.nondegenerate()) m.fail("delta form must be invertible");
        rc.echo["delta"] = ordered_json{{"matrix", encode_rows(in.delta.matrix())}};
    }

    auto curvature = parse_curvature(ptr(optional_child(root, "curvature")), N, n);
    in.curvature = curvature.value;
    rc.echo["curvature"] = curvature.echo;

    auto connection = parse_connection(ptr(optional_child(root, "connection")), N, n, seed_override);
    in.connection = connection.value;
    rc.echo["connection"] = connection.echo;

    if (const auto c = optional_child(root, "cartan")) {
        auto cartan = parse_cartan(*c);
        in.cartan = std::move(cartan.value);
        rc.echo["cartan"] = cartan.echo;
    }

    if (const auto o = optional_child(root, "output")) {
        o->allow_keys({"format", "path"});
        if (o->has("format")) {
            rc.output.format = o->at("format").string();
            if (rc.output.format != "json" && rc.output.format != "text") o->at("format").fail("format must be 'json' or 'text'");
        }
        if (o->has("path")) rc.output.path = o->at("path").string();
    }
    return rc;
}

AlgebraConfig parse_algebra_config(const ConfigDocument& doc) {
    const Node root(doc, doc.root, "");
    root.allow_keys({"algebra", "spacetime", "delta", "curvature", "connection", "cartan", "output"});
    return parse_algebra(root.at("algebra")).value;
}

std::vector<SweepEntry> parse_sweep(const ConfigDocument& sweep, const ConfigDocument& base,
                                    std::optional<std::uint64_t> seed_override) {
    const RunConfig base_config = parse_run_config(base, seed_override);
    const Node root(sweep, sweep.root, "");
    root.allow_keys({"entry"});
    std::vector<SweepEntry> out;
    std::set<std::string> labels;
    const std::size_t N = base_config.input.algebra.dim();
    const std::size_t n = base_config.input.eta.n();
    for (const auto& e : root.at("entry").items()) {
        e.allow_keys({"label", "curvature", "connection"});
        SweepEntry entry{e.at("label").string(), base_config};
        if (entry.label.empty() || entry.label.find_first_of("/\\") != std::string::npos || entry.label[0] == '.')
            e.at("label").fail("label must be a plain file name");
        if (!labels.insert(entry.label).second) e.at("label").fail("duplicate label");
        const auto curvature_node = optional_child(e, "curvature");
        auto curvature = parse_curvature(ptr(curvature_node), N, n);
        entry.config.input.curvature = curvature.value;
        entry.config.echo["curvature"] = curvature.echo;
        if (const auto c = optional_child(e, "connection")) {
            auto connection = parse_connection(&*c, N, n, seed_override);
            entry.config.input.connection = connection.value;
            entry.config.echo["connection"] = connection.echo;
        }
        out.push_back(std::move(entry));
    }
    if (out.empty()) root.fail("sweep has no entries");
    return out;
}

std::optional<std::uint64_t> seed_from_environment() {
    const char* raw = std::getenv("JACOBI_REDUCE_SEED");
    if (!raw) return std::nullopt;
    const std::string text(raw);
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw ConfigError("JACOBI_REDUCE_SEED must be an unsigned integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw ConfigError("JACOBI_REDUCE_SEED is out of range");
    }
}

}  // namespace jred
