#include "modext/io.hpp"
#include "modext/theorems.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>

using namespace modext;
using nlohmann::json;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitMathFail = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kMaxLevel = 6;
constexpr int kSchemaVersion = 1;

struct Output {
    std::string format = "table"; // table | json-lines

    void emit(const json& j, const std::string& table_line) const
    {
        if (format == "json-lines") {
            json out = j;
            out["schema_version"] = kSchemaVersion;
            std::cout << out.dump() << "\n";
        } else {
            std::cout << table_line << "\n";
        }
    }
};

std::string rat_s(const Rat& r) { return rat_str(r); }

json mat_json(const Mat& m)
{
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j)
            row.push_back(rat_s(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

json vec_json(const Vec& v)
{
    json row = json::array();
    for (auto& r : v)
        row.push_back(rat_s(r));
    return row;
}

json report_json(const ConditionReport& r)
{
    json conds = json::array();
    for (auto& c : r.conditions)
        conds.push_back({{"name", c.name}, {"holds", c.holds}, {"diag", c.diag}});
    return {{"theorem", r.theorem},
            {"level_n", r.level_n},
            {"dual_level", r.dual_level},
            {"conditions", conds},
            {"conditions_hold", r.conditions_hold},
            {"direct_h1", r.direct_h1},
            {"product_wa", r.product_wa},
            {"is_iff", r.is_iff},
            {"iff_consistent", r.iff_consistent}};
}

std::string report_line(const std::string& instance, const ConditionReport& r)
{
    std::string s = instance + "  " + r.theorem + "  n=" + std::to_string(r.level_n) +
                    "  conditions=" + (r.conditions_hold ? "hold" : "fail") +
                    "  h1=" + std::to_string(r.direct_h1) +
                    "  iff_consistent=" + (r.iff_consistent ? "true" : "false");
    return s;
}

json issues_json(const ValidationReport& rep)
{
    json out = json::array();
    for (auto& i : rep.issues)
        out.push_back({{"axiom", i.axiom},
                       {"where", {i.where[0], i.where[1], i.where[2]}},
                       {"detail", i.detail}});
    return out;
}

int cmd_validate(const std::string& path, const Output& out)
{
    Definition d = load_definition_file(path);
    bool all_ok = true;
    for (auto& [name, a] : d.algebras) {
        ValidationReport rep = validate_algebra(a);
        all_ok = all_ok && rep.ok();
        out.emit({{"kind", "algebra"},
                  {"name", name},
                  {"ok", rep.ok()},
                  {"unital", a.unit.has_value()},
                  {"issues", issues_json(rep)}},
                 "algebra " + name + ": " +
                     (rep.ok() ? (a.unit ? "associative, unital" : "associative") : "INVALID"));
        for (auto& i : rep.issues)
            if (out.format == "table")
                std::cout << "  " << i.axiom << " at (" << i.where[0] << "," << i.where[1] << ","
                          << i.where[2] << "): " << i.detail << "\n";
    }
    for (auto& [name, m] : d.modules) {
        ValidationReport rep = validate_algebraic_module(m);
        all_ok = all_ok && rep.ok();
        out.emit({{"kind", "module"}, {"name", name}, {"ok", rep.ok()}, {"issues", issues_json(rep)}},
                 "module " + name + ": " + (rep.ok() ? "valid algebraic module" : "INVALID"));
        for (auto& i : rep.issues)
            if (out.format == "table")
                std::cout << "  " << i.axiom << " at (" << i.where[0] << "," << i.where[1] << ","
                          << i.where[2] << "): " << i.detail << "\n";
    }
    return all_ok ? kExitPass : kExitMathFail;
}

int cmd_construct(const std::string& path, const Output& out)
{
    Definition d = load_definition_file(path);
    if (d.constructs.empty())
        throw ParseError("no construct block in " + path);
    for (auto& cs : d.constructs) {
        ProductAlgebra p = build_construct(d, cs);
        ValidationReport rep = validate_algebra(p.carrier);
        out.emit({{"kind", cs.kind},
                  {"provenance", provenance_name(p.provenance)},
                  {"dim", p.carrier.dim},
                  {"dim_a", p.dim_a},
                  {"dim_x", p.dim_x},
                  {"unital", p.carrier.unit.has_value()},
                  {"inner_zeroed", p.inner_zeroed},
                  {"associative", rep.ok()}},
                 "construct " + cs.kind + ": dim=" + std::to_string(p.carrier.dim) +
                     " provenance=" + provenance_name(p.provenance) +
                     (rep.ok() ? " associative" : " NOT ASSOCIATIVE"));
        if (!rep.ok())
            return kExitMathFail;
    }
    return kExitPass;
}

FiniteAlgebra algebra_from_arg(const std::string& arg, const std::string& pick)
{
    if (std::filesystem::exists(arg)) {
        Definition d = load_definition_file(arg);
        if (!pick.empty())
            return resolve_algebra(d, pick);
        if (d.constructs.size() == 1)
            return build_construct(d, d.constructs[0]).carrier;
        if (d.algebras.size() == 1)
            return d.algebras.begin()->second;
        throw ParseError(arg + ": ambiguous, use --algebra to pick one");
    }
    return named_algebra(arg);
}

int cmd_h1(const std::string& arg, const std::string& pick, std::size_t level, const Output& out)
{
    FiniteAlgebra a = algebra_from_arg(arg, pick);
    DualTower t = iterated_dual(a, regular_bimodule(a), level);
    DerivationSpace ds = derivation_space(a, t.level(level));
    out.emit({{"algebra", arg},
              {"dual_level", level},
              {"derivation_dim", ds.derivation_dim},
              {"inner_dim", ds.inner_dim},
              {"h1_dim", ds.h1}},
             arg + " level " + std::to_string(level) + ": derivation_dim=" +
                 std::to_string(ds.derivation_dim) + " inner_dim=" + std::to_string(ds.inner_dim) +
                 " h1_dim=" + std::to_string(ds.h1));
    return kExitPass;
}

json ten3_json(const Ten3& t)
{
    json entries = json::array();
    for (std::size_t i = 0; i < t.n1(); ++i)
        for (std::size_t j = 0; j < t.n2(); ++j)
            for (std::size_t k = 0; k < t.n3(); ++k)
                if (t.at(i, j, k) != 0)
                    entries.push_back({i, j, k, rat_s(t.at(i, j, k))});
    return entries;
}

int cmd_dual(const std::string& arg, const std::string& pick, std::size_t level, const Output& out)
{
    FiniteAlgebra a = algebra_from_arg(arg, pick);
    DualTower t = iterated_dual(a, regular_bimodule(a), level);
    const Bimodule& m = t.level(level);
    out.emit({{"algebra", arg},
              {"level", level},
              {"dim", m.dim},
              {"left", ten3_json(m.left)},
              {"right", ten3_json(m.right)}},
             arg + " dual level " + std::to_string(level) + ": dim=" + std::to_string(m.dim) +
                 " left_nnz=" + std::to_string(ten3_json(m.left).size()) +
                 " right_nnz=" + std::to_string(ten3_json(m.right).size()));
    return kExitPass;
}

int cmd_decompose(const std::string& path, std::size_t level, const Output& out)
{
    Definition d = load_definition_file(path);
    if (d.constructs.empty())
        throw ParseError("decompose needs a construct block in " + path);
    ProductAlgebra p = build_construct(d, d.constructs[0]);
    std::vector<BlockDualLevel> tower = block_dual_tower(p.module, level);
    const BlockDualLevel& lv = tower[level];
    Bimodule mod = assemble_block_level(lv);
    DerivationSpace ds = derivation_space(p.carrier, mod);
    for (std::size_t i = 0; i < ds.basis.size(); ++i) {
        DecompositionBlocks b = decompose(p, lv, ds.basis[i]);
        auto cert = find_certificate(p, lv, b);
        json j = {{"derivation", i},
                  {"dual_level", level},
                  {"parity", b.parity == Parity::odd ? "odd" : "even"},
                  {"D_A", mat_json(b.D_A)},
                  {"D_X", mat_json(b.D_X)},
                  {"T_A", mat_json(b.T_A)},
                  {"T_X", mat_json(b.T_X)},
                  {"inner", cert.has_value()}};
        if (cert)
            j["certificate"] = {{"witness_a", vec_json(cert->witness_a)},
                                {"witness_x", vec_json(cert->witness_x)}};
        out.emit(j, "derivation " + std::to_string(i) + ": decomposed, conditions hold, " +
                        (cert ? "inner (certificate found)" : "not inner (no certificate)"));
    }
    out.emit({{"derivation_dim", ds.derivation_dim}, {"inner_dim", ds.inner_dim}, {"h1_dim", ds.h1}},
             "summary: derivation_dim=" + std::to_string(ds.derivation_dim) +
                 " inner_dim=" + std::to_string(ds.inner_dim) + " h1_dim=" + std::to_string(ds.h1));
    return kExitPass;
}

ConditionReport dispatch_check(const std::string& tag, const AlgebraicModule& m, std::size_t n)
{
    return check_by_tag(tag, m, n);
}

int cmd_check(const std::string& tag, const std::string& path, std::size_t n, const Output& out)
{
    Definition d = load_definition_file(path);
    if (d.modules.empty())
        throw ParseError("check needs at least one module in " + path);
    bool ok = true;
    for (auto& [name, m] : d.modules) {
        ConditionReport r = dispatch_check(tag, m, n);
        json j = report_json(r);
        j["instance"] = name;
        out.emit(j, report_line(name, r));
        ok = ok && r.iff_consistent;
    }
    return ok ? kExitPass : kExitMathFail;
}

std::vector<Instance> load_corpus(const std::string& dir, std::uint64_t seed)
{
    if (dir.empty())
        return generate_corpus(seed);
    std::vector<Instance> out;
    std::vector<std::filesystem::path> files;
    for (auto& e : std::filesystem::directory_iterator(dir))
        if (e.is_regular_file() && e.path().extension() == ".json")
            files.push_back(e.path());
    std::sort(files.begin(), files.end());
    for (auto& f : files) {
        Definition d = load_definition_file(f.string());
        for (auto& [name, m] : d.modules) {
            if (!validate_algebraic_module(m).ok())
                throw ParseError(f.string() + ": module " + name + " fails validation");
            out.push_back({f.stem().string() + ":" + name, m});
        }
    }
    if (out.empty())
        throw ParseError("no instances found in " + dir);
    return out;
}

bool tag_applies(const std::string& tag, const AlgebraicModule& m, std::size_t n)
{
    if (tag.rfind("cor-trivial", 0) == 0) {
        Ten3 z(m.inner.dim, m.inner.dim, m.inner.dim);
        return m.inner.mult == z;
    }
    if ((tag == "prop-density-even" || tag == "prop-density-combined") && n == 0)
        return false;
    return true;
}

int cmd_sweep(const std::string& dir, const std::string& tag, std::size_t n, std::uint64_t seed,
              bool fail_fast, const Output& out)
{
    std::vector<Instance> corpus = load_corpus(dir, seed);
    bool all_ok = true;
    std::size_t skipped = 0;
    for (auto& inst : corpus) {
        if (!tag_applies(tag, inst.module, n)) {
            ++skipped;
            continue;
        }
        ConditionReport r;
        try {
            r = dispatch_check(tag, inst.module, n);
        } catch (const std::invalid_argument&) {
            // tag does not apply to this instance shape
            ++skipped;
            continue;
        }
        json j = report_json(r);
        j["instance"] = inst.name;
        out.emit(j, report_line(inst.name, r));
        if (!r.iff_consistent) {
            all_ok = false;
            if (fail_fast)
                break;
        }
    }
    out.emit({{"summary", true},
              {"instances", corpus.size()},
              {"skipped", skipped},
              {"all_consistent", all_ok}},
             "sweep: " + std::to_string(corpus.size()) + " instances, " + std::to_string(skipped) +
                 " skipped, " + (all_ok ? "all consistent" : "INCONSISTENCY FOUND"));
    return all_ok ? kExitPass : kExitMathFail;
}

struct Pin {
    std::string name;
    std::function<std::size_t()> compute;
    std::size_t frozen;
};

std::vector<Pin> pinned_constants()
{
    std::vector<Pin> pins;
    pins.push_back({"t2.derivation_dim",
                    [] {
                        auto a = upper_triangular(2);
                        return derivation_space(a, regular_bimodule(a)).derivation_dim;
                    },
                    2});
    pins.push_back({"t2.inner_dim",
                    [] {
                        auto a = upper_triangular(2);
                        return derivation_space(a, regular_bimodule(a)).inner_dim;
                    },
                    2});
    pins.push_back({"t2.h1",
                    [] {
                        auto a = upper_triangular(2);
                        return h1_dim(a, regular_bimodule(a));
                    },
                    0});
    for (std::size_t d = 1; d <= 3; ++d)
        pins.push_back({"zero" + std::to_string(d) + ".h1.self",
                        [d] {
                            auto a = zero_algebra(d);
                            return h1_dim(a, regular_bimodule(a));
                        },
                        d * d});
    for (std::size_t n = 0; n <= 3; ++n)
        pins.push_back({"m2.h1.level" + std::to_string(n),
                        [n] {
                            auto a = full_matrix(2);
                            DualTower t = iterated_dual(a, regular_bimodule(a), n);
                            return h1_dim(a, t.level(n));
                        },
                        0});
    return pins;
}

int cmd_pin(const Output& out)
{
    bool all_ok = true;
    for (auto& p : pinned_constants()) {
        std::size_t got = p.compute();
        bool ok = got == p.frozen;
        all_ok = all_ok && ok;
        out.emit({{"pin", p.name}, {"frozen", p.frozen}, {"computed", got}, {"ok", ok}},
                 "pin " + p.name + ": frozen=" + std::to_string(p.frozen) +
                     " computed=" + std::to_string(got) + (ok ? "" : "  MISMATCH"));
    }
    return all_ok ? kExitPass : kExitMathFail;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact-rational module extension algebra toolkit"};
    app.require_subcommand(1);
    app.fallthrough();

    Output out;
    app.add_option("--format", out.format, "output format")
        ->check(CLI::IsMember({"table", "json-lines"}));

    std::string path, pick, tag, corpus_dir;
    std::size_t level = 0;
    std::uint64_t seed = 42;
    bool fail_fast = false;

    auto* validate = app.add_subcommand("validate", "validate algebras and modules in a file");
    validate->add_option("file", path)->required();

    auto* construct = app.add_subcommand("construct", "build the construct blocks of a file");
    construct->add_option("file", path)->required();

    auto* h1 = app.add_subcommand("h1", "derivation space into an iterated dual");
    h1->add_option("target", path, "file or built-in algebra name")->required();
    h1->add_option("--algebra", pick, "pick an algebra from the file");
    h1->add_option("--dual-level", level)->check(CLI::Range(std::size_t(0), kMaxLevel));

    auto* dual = app.add_subcommand("dual", "iterated dual action tensors");
    dual->add_option("target", path, "file or built-in algebra name")->required();
    dual->add_option("--algebra", pick, "pick an algebra from the file");
    dual->add_option("--level", level)->check(CLI::Range(std::size_t(0), kMaxLevel));

    auto* decompose = app.add_subcommand("decompose", "blockwise decomposition of all derivations");
    decompose->add_option("file", path, "definition file with a construct block")->required();
    decompose->add_option("--dual-level", level)->check(CLI::Range(std::size_t(0), kMaxLevel));

    auto* check = app.add_subcommand("check", "run one theorem checker on a file's modules");
    check->add_option("--theorem", tag)->required()->check(CLI::IsMember(known_theorem_tags()));
    check->add_option("--instance", path)->required();
    check->add_option("--level", level)->check(CLI::Range(std::size_t(0), kMaxLevel));

    auto* sweep = app.add_subcommand("sweep", "run a theorem checker over a corpus");
    sweep->add_option("--corpus", corpus_dir, "directory of definition files (default: generated)");
    sweep->add_option("--theorem", tag)->required()->check(CLI::IsMember(known_theorem_tags()));
    sweep->add_option("--level", level)->check(CLI::Range(std::size_t(0), kMaxLevel));
    sweep->add_option("--seed", seed);
    sweep->add_flag("--fail-fast", fail_fast);

    auto* pin = app.add_subcommand("pin", "recompute and verify frozen oracle constants");
    (void)pin;

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (validate->parsed())
            return cmd_validate(path, out);
        if (construct->parsed())
            return cmd_construct(path, out);
        if (h1->parsed())
            return cmd_h1(path, pick, level, out);
        if (dual->parsed())
            return cmd_dual(path, pick, level, out);
        if (decompose->parsed())
            return cmd_decompose(path, level, out);
        if (check->parsed())
            return cmd_check(tag, path, level, out);
        if (sweep->parsed())
            return cmd_sweep(corpus_dir, tag, level, seed, fail_fast, out);
        if (pin->parsed())
            return cmd_pin(out);
    } catch (const LemmaViolation& e) {
        std::cerr << "lemma violation: " << e.what() << "\n";
        return kExitMathFail;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const StructureError& e) {
        std::cerr << "structural error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConstructionError& e) {
        std::cerr << "construction error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
