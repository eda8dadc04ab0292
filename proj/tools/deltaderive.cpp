#include <CLI11.hpp>
#include <fstream>
#include <iostream>

#include "deltaderive/catalog.hpp"
#include "deltaderive/clifford.hpp"
#include "deltaderive/hermitian.hpp"
#include "deltaderive/json_io.hpp"

namespace {

using namespace dd;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream out(out_path);
        if (!out) throw std::invalid_argument("cannot write " + out_path);
        out << j.dump(2) << "\n";
    }
}

int cmd_algebra(const std::string& mode, const std::string& spec_path) {
    Algebra a = algebra_from_json(load_json(spec_path));
    IdentityFlags flags = check_identities(a);
    if (mode == "build") {
        if (!a.unit) {
            if (auto u = find_unit(a)) a.unit = *u;
        }
        json out = algebra_to_json(a);
        out["identities"] = json{{"commutative", flags.commutative},
                                 {"associative", flags.associative},
                                 {"unital", flags.unital},
                                 {"linearized_jordan", flags.linearized_jordan}};
        emit(out, "");
        return kExitPass;
    }
    json out{{"label", a.label},
             {"dim", a.dim},
             {"commutative", flags.commutative},
             {"associative", flags.associative},
             {"unital", flags.unital},
             {"linearized_jordan", flags.linearized_jordan}};
    emit(out, "");
    return flags.linearized_jordan ? kExitPass : kExitFail;
}

int cmd_clifford(int d, const std::string& gram_path, bool text) {
    std::vector<Rational> gram = default_jvf_gram(d);
    if (!gram_path.empty()) {
        json g = load_json(gram_path);
        gram.clear();
        for (const auto& x : g) gram.push_back(rational_from_json(x));
        if (static_cast<int>(gram.size()) != d)
            throw std::invalid_argument("gram length does not match --dim");
    }
    JvfCatalog cat = jvf_clifford_module_catalog(d, gram);
    json pieces = json::array();
    for (const auto& p : cat.pieces) {
        pieces.push_back(json{{"label", p.label}, {"dim", static_cast<int>(p.basis.size())}});
        if (text)
            std::cout << p.label << "  dim " << p.basis.size() << "\n";
    }
    if (!text) emit(json{{"dim_v", d}, {"pieces", pieces}}, "");
    return kExitPass;
}

std::optional<Bimodule> find_module(const std::string& algebra, const std::string& module) {
    for (auto& e : catalog_entries())
        if (e.algebra_name == algebra && e.module_name == module) return std::move(e.module);
    return std::nullopt;
}

Bimodule resolve_module(const std::string& algebra, const std::string& module) {
    if (algebra.size() > 5 && algebra.substr(algebra.size() - 5) == ".json") {
        if (module != "regular")
            throw std::invalid_argument("file-based algebras support only the regular module");
        auto a = std::make_shared<Algebra>(algebra_from_json(load_json(algebra)));
        if (!a->unit) {
            auto u = find_unit(*a);
            if (!u) throw std::invalid_argument("algebra has no unit");
            a->unit = *u;
        }
        return regular_bimodule(a);
    }
    auto m = find_module(algebra, module);
    if (!m)
        throw std::invalid_argument("unknown catalog entry " + algebra + "/" + module);
    return std::move(*m);
}

int cmd_solve(const std::string& algebra, const std::string& module, const std::string& delta,
              const std::string& json_out, bool text) {
    Bimodule m = resolve_module(algebra, module);
    DerivationSpace s = derivations_at(m, parse_rational(delta));
    if (text)
        std::cout << m.j->label << " / " << m.label << "  delta=" << delta << "  dim "
                  << s.dimension() << "\n";
    else
        emit(derivation_report(s), json_out);
    return kExitPass;
}

int cmd_sweep(const std::string& algebra, const std::string& module, bool text) {
    Bimodule m = resolve_module(algebra, module);
    SweepReport r = exceptional_deltas(m);
    if (text) {
        std::cout << "generic dim " << r.generic_dim << "\n";
        for (const auto& [d, dim] : r.exceptional)
            std::cout << "delta=" << to_string(d) << "  dim " << dim << "\n";
        for (const auto& f : r.leftover_factors)
            std::cout << "unresolved factor: " << f.str() << "\n";
    } else {
        emit(sweep_report(m, r), "");
    }
    return kExitPass;
}

int cmd_whitehead(const std::string& filter, bool slow, bool text) {
    std::vector<CatalogEntry> entries;
    for (auto& e : catalog_entries(filter))
        if (slow || !e.slow) entries.push_back(std::move(e));
    if (entries.empty())
        throw std::invalid_argument("no catalog entry matches filter '" + filter + "'");
    WhiteheadReport rep = whitehead_report(entries);
    if (text) {
        for (const auto& row : rep.rows)
            std::cout << (row.ok ? "  ok  " : " FAIL ") << row.entry
                      << "  delta=" << to_string(row.delta) << "  dim " << row.dim
                      << (row.note.empty() ? "" : "  (" + row.note + ")") << "\n";
        std::cout << (rep.pass ? "PASS" : "FAIL: " + rep.failure) << "\n";
    } else {
        emit(whitehead_to_json(rep), "");
    }
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_hermitian(int n, bool direct, bool text) {
    HermitianDecomposition h = hermitian_decomposition(n);
    json pieces = json::array();
    pieces.push_back(json{{"label", "Mn+"}, {"dim", h.jordan_part.dim()}});
    for (size_t p = 0; p < h.octonion_parts.size(); ++p)
        pieces.push_back(json{{"label", "Mn- x e" + std::to_string(p + 1)},
                              {"dim", h.octonion_parts[p].dim()}});
    ChallengeReport cert = delta_challenged_certificate(h.ambient, h.mnplus_basis);
    json out{{"n", n},
             {"ambient_dim", h.ambient.dim},
             {"pieces", pieces},
             {"certificate", json{{"pass", cert.pass}, {"conclusion", cert.conclusion}}}};
    bool ok = cert.pass;
    if (direct) {
        auto j = std::make_shared<Algebra>(h.ambient);
        DerivationSpace s = derivations_at(regular_bimodule(j), half());
        bool identity = s.dimension() == 1 && s.basis.front() == QMat::identity(j->dim);
        out["direct_solve"] = json{{"dimension", s.dimension()}, {"identity_basis", identity}};
        ok = ok && identity;
    }
    if (text)
        std::cout << "S+(M" << n << "(O))  dim " << h.ambient.dim << "  certificate "
                  << (cert.pass ? "pass" : "FAIL") << "\n"
                  << cert.conclusion << "\n";
    else
        emit(out, "");
    return ok ? kExitPass : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact delta-derivation workbench for Jordan algebras"};
    app.require_subcommand(1);
    bool text = false;
    app.add_flag("--text", text, "human-readable tables instead of JSON");

    auto* alg = app.add_subcommand("algebra", "build or check an algebra spec");
    std::string alg_mode, alg_spec;
    alg->add_option("mode", alg_mode)->check(CLI::IsMember({"build", "check"}))->required();
    alg->add_option("spec", alg_spec, "algebra spec JSON")->required();

    auto* cli = app.add_subcommand("clifford", "Clifford algebra utilities");
    auto* cdec = cli->add_subcommand("decompose", "J(V,f)-invariant subspaces of C(V^ev)");
    int cdim = 0;
    std::string gram_path;
    cdec->add_option("--dim", cdim, "dim V")->required();
    cdec->add_option("--gram", gram_path, "diagonal gram values, JSON array");
    cli->require_subcommand(1);
    cdec->fallthrough();

    auto* solve = app.add_subcommand("solve", "Der_delta(J, M) at a fixed delta");
    std::string s_alg, s_mod = "regular", s_delta, s_json;
    solve->add_option("--algebra", s_alg, "catalog name or spec file")->required();
    solve->add_option("--module", s_mod, "module name");
    solve->add_option("--delta", s_delta, "rational p/q")->required();
    solve->add_option("--json", s_json, "write the report to a file");

    auto* sweep = app.add_subcommand("sweep", "all exceptional delta values");
    std::string w_alg, w_mod = "regular";
    sweep->add_option("--algebra", w_alg)->required();
    sweep->add_option("--module", w_mod);

    auto* wh = app.add_subcommand("whitehead", "theorem verification across the catalog");
    std::string filter;
    bool slow = false;
    wh->add_option("--filter", filter, "substring filter on catalog entries");
    wh->add_flag("--slow", slow, "include the 27-dimensional direct solves");

    auto* herm = app.add_subcommand("hermitian", "S+(M_n(O)) decomposition and certificate");
    int hn = 0;
    bool direct = false;
    herm->add_option("--n", hn, "matrix size")->required();
    herm->add_flag("--direct", direct, "full direct solve at delta=1/2 as well");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (alg->parsed()) return cmd_algebra(alg_mode, alg_spec);
        if (cli->parsed()) return cmd_clifford(cdim, gram_path, text);
        if (solve->parsed()) return cmd_solve(s_alg, s_mod, s_delta, s_json, text);
        if (sweep->parsed()) return cmd_sweep(w_alg, w_mod, text);
        if (wh->parsed()) return cmd_whitehead(filter, slow, text);
        if (herm->parsed()) return cmd_hermitian(hn, direct, text);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: malformed JSON: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitFail;
    }
    return kExitUsage;
}
