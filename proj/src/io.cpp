#include "modext/io.hpp"

#include <json.hpp>

#include <fstream>

namespace modext {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& msg)
{
    throw ParseError(path + ": " + msg);
}

Rat parse_entry_rat(const json& j, const std::string& path)
{
    if (j.is_number_integer())
        return Rat(j.get<long>());
    if (j.is_string()) {
        try {
            return parse_rat(j.get<std::string>());
        } catch (const std::exception& e) {
            fail(path, e.what());
        }
    }
    fail(path, "expected an integer or a \"p/q\" string");
}

/// Sparse tensor entries [[i, j, k, coeff], ...].
Ten3 parse_ten3(const json& j, std::size_t n1, std::size_t n2, std::size_t n3,
                const std::string& path)
{
    if (!j.is_array())
        fail(path, "expected an array of [i, j, k, coeff] entries");
    Ten3 t(n1, n2, n3);
    for (std::size_t e = 0; e < j.size(); ++e) {
        const std::string ep = path + "[" + std::to_string(e) + "]";
        const json& row = j[e];
        if (!row.is_array() || row.size() != 4)
            fail(ep, "expected [i, j, k, coeff]");
        for (int c = 0; c < 3; ++c)
            if (!row[c].is_number_unsigned())
                fail(ep, "indices must be non-negative integers");
        std::size_t i = row[0], jj = row[1], k = row[2];
        if (i >= n1 || jj >= n2 || k >= n3)
            fail(ep, "index out of range");
        t.at(i, jj, k) = parse_entry_rat(row[3], ep + "[3]");
    }
    return t;
}

Vec parse_vec(const json& j, std::size_t n, const std::string& path)
{
    if (!j.is_array() || j.size() != n)
        fail(path, "expected an array of length " + std::to_string(n));
    Vec v(n);
    for (std::size_t i = 0; i < n; ++i)
        v[i] = parse_entry_rat(j[i], path + "[" + std::to_string(i) + "]");
    return v;
}

Mat parse_mat(const json& j, std::size_t r, std::size_t c, const std::string& path)
{
    if (!j.is_array() || j.size() != r)
        fail(path, "expected " + std::to_string(r) + " rows");
    Mat m(r, c);
    for (std::size_t i = 0; i < r; ++i) {
        Vec row = parse_vec(j[i], c, path + "[" + std::to_string(i) + "]");
        for (std::size_t k = 0; k < c; ++k)
            m.at(i, k) = row[k];
    }
    return m;
}

std::vector<std::string> parse_basis(const json& j, std::size_t dim, const std::string& path)
{
    if (j.is_null()) {
        std::vector<std::string> b;
        for (std::size_t i = 0; i < dim; ++i)
            b.push_back("e" + std::to_string(i));
        return b;
    }
    if (!j.is_array() || j.size() != dim)
        fail(path, "basis length must equal dim");
    std::vector<std::string> b;
    for (auto& e : j) {
        if (!e.is_string())
            fail(path, "basis labels must be strings");
        b.push_back(e.get<std::string>());
    }
    return b;
}

FiniteAlgebra parse_algebra(const json& j, const std::string& path)
{
    if (!j.is_object() || !j.contains("dim") || !j["dim"].is_number_unsigned())
        fail(path, "expected an object with an unsigned \"dim\"");
    FiniteAlgebra a;
    a.dim = j["dim"];
    a.basis = parse_basis(j.value("basis", json()), a.dim, path + "/basis");
    if (!j.contains("mult"))
        fail(path, "missing \"mult\"");
    a.mult = parse_ten3(j["mult"], a.dim, a.dim, a.dim, path + "/mult");
    if (j.contains("unit"))
        a.unit = parse_vec(j["unit"], a.dim, path + "/unit");
    return a;
}

} // namespace

Definition parse_definition_text(const std::string& text)
{
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object())
        fail("/", "top level must be an object");
    if (!j.contains("schema_version") || j["schema_version"] != 1)
        fail("/schema_version", "expected 1");

    Definition d;
    if (j.contains("algebras")) {
        if (!j["algebras"].is_object())
            fail("/algebras", "expected an object");
        for (auto& [name, aj] : j["algebras"].items())
            d.algebras[name] = parse_algebra(aj, "/algebras/" + name);
    }
    if (j.contains("modules")) {
        if (!j["modules"].is_object())
            fail("/modules", "expected an object");
        for (auto& [name, mj] : j["modules"].items()) {
            const std::string path = "/modules/" + name;
            if (!mj.is_object() || !mj.contains("base") || !mj["base"].is_string())
                fail(path, "expected an object with a \"base\" algebra reference");
            if (!mj.contains("dim") || !mj["dim"].is_number_unsigned())
                fail(path + "/dim", "expected an unsigned integer");
            AlgebraicModule m;
            m.base = resolve_algebra(d, mj["base"].get<std::string>());
            m.inner.dim = mj["dim"];
            m.inner.basis = parse_basis(mj.value("basis", json()), m.inner.dim, path + "/basis");
            m.inner.mult = mj.contains("inner_mult")
                               ? parse_ten3(mj["inner_mult"], m.inner.dim, m.inner.dim, m.inner.dim,
                                            path + "/inner_mult")
                               : Ten3(m.inner.dim, m.inner.dim, m.inner.dim);
            m.inner.unit = find_unit(m.inner);
            m.action.algebra_dim = m.base.dim;
            m.action.dim = m.inner.dim;
            m.action.left = mj.contains("left")
                                ? parse_ten3(mj["left"], m.base.dim, m.inner.dim, m.inner.dim,
                                             path + "/left")
                                : Ten3(m.base.dim, m.inner.dim, m.inner.dim);
            m.action.right = mj.contains("right")
                                 ? parse_ten3(mj["right"], m.inner.dim, m.base.dim, m.inner.dim,
                                              path + "/right")
                                 : Ten3(m.inner.dim, m.base.dim, m.inner.dim);
            d.modules[name] = std::move(m);
        }
    }
    if (j.contains("construct")) {
        json cj = j["construct"];
        // a single object or an array of them
        std::vector<json> items;
        if (cj.is_object())
            items.push_back(cj);
        else if (cj.is_array())
            items.assign(cj.begin(), cj.end());
        else
            fail("/construct", "expected an object or an array");
        for (std::size_t idx = 0; idx < items.size(); ++idx) {
            const std::string path = "/construct[" + std::to_string(idx) + "]";
            const json& c = items[idx];
            if (!c.is_object() || !c.contains("kind") || !c["kind"].is_string())
                fail(path, "expected an object with a string \"kind\"");
            ConstructSpec cs;
            cs.kind = c["kind"].get<std::string>();
            if (cs.kind == "bowtie" || cs.kind == "ltimes") {
                if (!c.contains("module") || !c["module"].is_string())
                    fail(path, cs.kind + " needs a \"module\" reference");
                cs.module = c["module"].get<std::string>();
            } else if (cs.kind == "theta_lau" || cs.kind == "t_lau" || cs.kind == "direct_sum") {
                if (!c.contains("a") || !c.contains("b"))
                    fail(path, cs.kind + " needs algebra references \"a\" and \"b\"");
                cs.a = c["a"].get<std::string>();
                cs.b = c["b"].get<std::string>();
                std::size_t da = resolve_algebra(d, cs.a).dim;
                std::size_t db = resolve_algebra(d, cs.b).dim;
                if (cs.kind == "theta_lau") {
                    if (!c.contains("theta"))
                        fail(path, "theta_lau needs \"theta\"");
                    Vec th = parse_vec(c["theta"], da, path + "/theta");
                    cs.theta = Mat(1, da);
                    for (std::size_t i = 0; i < da; ++i)
                        cs.theta.at(0, i) = th[i];
                }
                if (cs.kind == "t_lau") {
                    if (!c.contains("t"))
                        fail(path, "t_lau needs \"t\"");
                    cs.t = parse_mat(c["t"], db, da, path + "/t");
                }
            } else if (cs.kind == "self_bowtie") {
                if (!c.contains("a"))
                    fail(path, "self_bowtie needs an algebra reference \"a\"");
                cs.a = c["a"].get<std::string>();
            } else {
                fail(path, "unknown kind: " + cs.kind);
            }
            d.constructs.push_back(std::move(cs));
        }
    }
    return d;
}

Definition load_definition_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    return parse_definition_text(text);
}

FiniteAlgebra resolve_algebra(const Definition& d, const std::string& name)
{
    auto it = d.algebras.find(name);
    if (it != d.algebras.end())
        return it->second;
    try {
        return named_algebra(name);
    } catch (const StructureError&) {
        throw ParseError("unknown algebra reference: " + name);
    }
}

AlgebraicModule resolve_module(const Definition& d, const std::string& name)
{
    auto it = d.modules.find(name);
    if (it == d.modules.end())
        throw ParseError("unknown module reference: " + name);
    return it->second;
}

ProductAlgebra build_construct(const Definition& d, const ConstructSpec& c)
{
    if (c.kind == "bowtie")
        return bowtie(resolve_module(d, c.module));
    if (c.kind == "ltimes")
        return module_extension(resolve_module(d, c.module));
    if (c.kind == "theta_lau")
        return theta_lau(resolve_algebra(d, c.a), resolve_algebra(d, c.b), c.theta);
    if (c.kind == "t_lau")
        return t_lau(resolve_algebra(d, c.a), resolve_algebra(d, c.b), c.t);
    if (c.kind == "direct_sum")
        return direct_sum(resolve_algebra(d, c.a), resolve_algebra(d, c.b));
    if (c.kind == "self_bowtie")
        return self_bowtie(resolve_algebra(d, c.a));
    throw ParseError("unknown construct kind: " + c.kind);
}

} // namespace modext
