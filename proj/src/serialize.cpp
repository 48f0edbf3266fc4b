#include "superbracket/serialize.hpp"

#include <set>

namespace superbracket {

Json field_to_json(const Field& f)
{
    if (f.is_rationals())
        return Json{{"kind", "rationals"}};
    return Json{{"kind", "prime"}, {"p", f.characteristic()}};
}

Field field_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw SchemaError("\"field\" must be an object with a string \"kind\"");
    for (const auto& [key, _] : j.items())
        if (key != "kind" && key != "p")
            throw SchemaError("unknown key \"" + key + "\" in \"field\"");
    std::string kind = j["kind"];
    if (kind == "rationals") {
        if (j.contains("p"))
            throw SchemaError("rationals take no \"p\"");
        return Field::rationals();
    }
    if (kind == "prime") {
        if (!j.contains("p") || !j["p"].is_number_unsigned())
            throw SchemaError("prime field needs a positive integer \"p\"");
        try {
            return Field::prime(j["p"].get<std::uint64_t>());
        } catch (const FieldError& e) {
            throw SchemaError(e.what());
        }
    }
    throw SchemaError("field kind must be \"rationals\" or \"prime\", got \"" + kind + "\"");
}

namespace {

Json entry(std::size_t a, std::size_t b, std::size_t c, const Scalar& s)
{
    return Json::array({a, b, c, s.to_string()});
}

struct Entry {
    std::size_t a, b, c;
    Scalar value;
};

std::vector<Entry> read_entries(const Json& j, const std::string& key, const Field& f, std::size_t ra, std::size_t rb,
                                std::size_t rc)
{
    std::vector<Entry> out;
    if (!j.contains(key))
        return out;
    const Json& arr = j[key];
    if (!arr.is_array())
        throw SchemaError("\"" + key + "\" must be an array");
    for (const auto& e : arr) {
        if (!e.is_array() || e.size() != 4)
            throw SchemaError("\"" + key + "\" entries are [a, b, c, \"scalar\"]");
        std::size_t idx[3];
        std::size_t range[3] = {ra, rb, rc};
        for (int i = 0; i < 3; ++i) {
            if (!e[i].is_number_unsigned())
                throw SchemaError("\"" + key + "\" indices must be nonnegative integers");
            idx[i] = e[i].get<std::size_t>();
            if (idx[i] >= range[i])
                throw SchemaError("\"" + key + "\" index " + std::to_string(idx[i]) + " out of range");
        }
        std::string text;
        if (e[3].is_string())
            text = e[3].get<std::string>();
        else if (e[3].is_number_integer())
            text = std::to_string(e[3].get<long long>());
        else
            throw SchemaError("\"" + key + "\" coefficients must be strings or integers");
        try {
            out.push_back({idx[0], idx[1], idx[2], Scalar::parse(f, text)});
        } catch (const FieldError& err) {
            throw SchemaError(err.what());
        }
    }
    return out;
}

std::size_t read_dim(const Json& j, const std::string& key)
{
    if (!j.contains(key) || !j[key].is_number_unsigned())
        throw SchemaError("\"" + key + "\" must be a nonnegative integer");
    return j[key].get<std::size_t>();
}

} // namespace

Json to_json(const SuperAlgebra& g, const std::map<std::string, std::string>& metadata)
{
    std::size_t n = g.dim_even(), m = g.dim_odd();
    Json j;
    j["field"] = field_to_json(g.field());
    j["dim_even"] = n;
    j["dim_odd"] = m;
    j["axiom_mode"] = to_string(g.mode());
    Json br = Json::array();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = i + 1; k < n; ++k)
            for (std::size_t x = 0; x < n; ++x)
                if (!g.bracket(i, k, x).is_zero())
                    br.push_back(entry(i, k, x, g.bracket(i, k, x)));
    j["bracket_even"] = br;
    Json act = Json::array();
    for (std::size_t x = 0; x < n; ++x)
        for (std::size_t v = 0; v < m; ++v)
            for (std::size_t w = 0; w < m; ++w)
                if (!g.action(x, v, w).is_zero())
                    act.push_back(entry(x, v, w, g.action(x, v, w)));
    j["action"] = act;
    Json odd = Json::array();
    bool char2 = g.mode() == AxiomMode::Char2;
    for (std::size_t u = 0; u < m; ++u)
        for (std::size_t v = u; v < m; ++v)
            for (std::size_t x = 0; x < n; ++x) {
                const Scalar& s = char2 ? g.square(u, v, x) : g.p(u, v, x);
                if (!s.is_zero())
                    odd.push_back(entry(u, v, x, s));
            }
    j[char2 ? "squaring" : "p_map"] = odd;
    if (!metadata.empty())
        j["metadata"] = metadata;
    return j;
}

std::string dump_canonical(const Json& j)
{
    return j.dump(2) + "\n";
}

AlgebraFile algebra_from_json(const Json& j)
{
    if (!j.is_object())
        throw SchemaError("top level must be a JSON object");
    static const std::set<std::string> known{"field",  "dim_even", "dim_odd",  "bracket_even", "action",
                                             "p_map",  "squaring", "axiom_mode", "metadata"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key))
            throw SchemaError("unknown key \"" + key + "\"");
    if (!j.contains("field"))
        throw SchemaError("missing \"field\"");
    Field f = field_from_json(j["field"]);
    std::size_t n = read_dim(j, "dim_even");
    std::size_t m = read_dim(j, "dim_odd");
    AxiomMode mode = natural_mode(f);
    if (j.contains("axiom_mode")) {
        if (!j["axiom_mode"].is_string())
            throw SchemaError("\"axiom_mode\" must be a string");
        try {
            mode = parse_axiom_mode(j["axiom_mode"]);
        } catch (const ModeError& e) {
            throw SchemaError(e.what());
        }
    }
    if (mode == AxiomMode::Char2 && j.contains("p_map"))
        throw SchemaError("char2 algebras give \"squaring\", not \"p_map\"");
    if (mode != AxiomMode::Char2 && j.contains("squaring"))
        throw SchemaError("\"squaring\" is only read in char2 mode");

    SuperAlgebra::Builder b(f, n, m, mode);
    for (const auto& e : read_entries(j, "bracket_even", f, n, n, n)) {
        if (e.a >= e.b)
            throw SchemaError("\"bracket_even\" entries need i < j");
        b.bracket(e.a, e.b, e.c, e.value);
    }
    for (const auto& e : read_entries(j, "action", f, n, m, m))
        b.action(e.a, e.b, e.c, e.value);
    for (const auto& e : read_entries(j, "p_map", f, m, m, n)) {
        if (e.a > e.b)
            throw SchemaError("\"p_map\" entries need u <= v");
        b.p(e.a, e.b, e.c, e.value);
    }
    for (const auto& e : read_entries(j, "squaring", f, m, m, n)) {
        if (e.a > e.b)
            throw SchemaError("\"squaring\" entries need v <= w");
        b.square(e.a, e.b, e.c, e.value);
    }

    AlgebraFile out{b.build(), {}};
    if (j.contains("metadata")) {
        if (!j["metadata"].is_object())
            throw SchemaError("\"metadata\" must be an object of strings");
        for (const auto& [key, value] : j["metadata"].items()) {
            if (!value.is_string())
                throw SchemaError("\"metadata\" values must be strings");
            out.metadata[key] = value.get<std::string>();
        }
    }
    return out;
}

AlgebraFile parse_algebra(const std::string& text)
{
    Json j;
    try {
        j = Json::parse(text);
    } catch (const Json::parse_error& e) {
        throw SchemaError(std::string("not valid JSON: ") + e.what());
    }
    return algebra_from_json(j);
}

Json matrix_to_json(const Matrix& m)
{
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c)
            row.push_back(m(r, c).to_string());
        rows.push_back(row);
    }
    return rows;
}

Json p_tensor_to_json(const PTensor& t)
{
    Json out = Json::array();
    for (std::size_t u = 0; u < t.dim_odd(); ++u)
        for (std::size_t v = u; v < t.dim_odd(); ++v)
            for (std::size_t x = 0; x < t.dim_even(); ++x)
                if (!t(u, v, x).is_zero())
                    out.push_back(entry(u, v, x, t(u, v, x)));
    return out;
}

Json p_space_to_json(const PSolutionSpace& space)
{
    Json basis = Json::array();
    for (const auto& t : space.basis)
        basis.push_back(p_tensor_to_json(t));
    return Json{{"dim", space.dim}, {"basis", basis}};
}

Json classification_to_json(const ClassificationResult& r)
{
    Json j;
    j["case"] = to_string(r.tag);
    j["centre_dim"] = r.centre_dim;
    if (!r.reason.empty())
        j["reason"] = r.reason;
    if (r.certificate)
        j["certificate"] = Json{{"even", matrix_to_json(r.certificate->even)}, {"odd", matrix_to_json(r.certificate->odd)}};
    if (r.restricted_corollary_applies)
        j["restricted_corollary_applies"] = true;
    return j;
}

Json report_to_json(const ValidationReport& report)
{
    Json v = Json::array();
    for (const auto& viol : report.violations)
        v.push_back(Json{{"identity", viol.identity}, {"witness", viol.witness}, {"detail", viol.detail}});
    return Json{{"ok", report.ok()}, {"violations", v}};
}

} // namespace superbracket
