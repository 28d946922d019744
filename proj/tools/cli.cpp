#include "cli.hpp"

#include "d4/albert.hpp"
#include "d4/brauer.hpp"
#include "d4/classify.hpp"
#include "d4/trialitarian.hpp"
#include "d4/version.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <fstream>
#include <map>
#include <sstream>

namespace d4::cli {

namespace {

using nlohmann::json;

/// Usage and parameter errors (exit code 2).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---- serialization ----

json group_json(const AbGroup& G)
{
    return {{"free_rank", G.free_rank()}, {"torsion", G.moduli()}, {"invariants", G.invariants()}, {"name", G.str()}};
}

json elem_json(const GroupElem& g) { return std::vector<long long>(g.c.begin(), g.c.end()); }

json scalar_json(const Cyclo& c)
{
    json a = json::array();
    for (const auto& q : c.coeffs()) a.push_back(rational_to_string(q));
    if (a.empty()) a.push_back("0");
    return a;
}

json report_json(const std::string& name, const Report& r)
{
    return {{"name", name}, {"ok", r.ok}, {"witnesses", r.witnesses}};
}

json structure_json(const StructAlgebra& a)
{
    json spaces = json::array(), maps = json::array();
    for (const auto& s : a.spaces) spaces.push_back({{"name", s.name}, {"dim", s.dim}, {"labels", s.labels}});
    for (const auto& m : a.maps) {
        json entries = json::array();
        for (int i = 0; i < m.dl; ++i)
            for (int j = 0; j < m.dr; ++j)
                for (const auto& [k, c] : m.at(i, j)) entries.push_back({i, j, k, scalar_json(c)});
        maps.push_back({{"name", m.name}, {"left", m.left}, {"right", m.right}, {"target", m.target}, {"entries", entries}});
    }
    return {{"sort", a.sort}, {"spaces", spaces}, {"maps", maps}};
}

json grading_json(const Grading& g)
{
    json deg = json::object();
    for (int s = 0; s < g.nspaces(); ++s) {
        json d = json::array();
        for (const auto& e : g.deg[s]) d.push_back(elem_json(e));
        deg[g.alg->spaces[s].name] = d;
    }
    bool framed = false;
    for (const auto& f : g.frame) framed = framed || f.has_value();
    return {{"group", group_json(g.G)}, {"degrees", deg}, {"framed", framed}};
}

json params_json(const TypeIIIParams& p)
{
    json j = {{"r", p.r}, {"group", group_json(p.G)}, {"h", elem_json(p.h)}};
    switch (p.r) {
    case 0:
        j["K"] = {elem_json(p.K.at(0)), elem_json(p.K.at(1))};
        j["delta"] = p.delta;
        break;
    case 1: {
        json k = json::array();
        for (const auto& x : p.K) k.push_back(elem_json(x));
        j["K"] = k;
        break;
    }
    case 2:
        j["gamma"] = {elem_json(p.gamma[0]), elem_json(p.gamma[1]), elem_json(p.gamma[2])};
        break;
    case 4:
        j["g"] = elem_json(p.g);
        break;
    default:
        j["t"] = std::string(1, p.t);
    }
    return j;
}

// ---- parsing ----

json load_input(const std::string& arg)
{
    std::string text = arg;
    if (arg.empty() || arg.front() != '{') {
        std::ifstream in(arg);
        if (!in) throw UsageError("cannot read input file " + arg);
        std::stringstream ss;
        ss << in.rdbuf();
        text = ss.str();
    }
    try {
        json j = json::parse(text);
        if (!j.is_object()) throw UsageError("input must be a JSON object");
        return j;
    } catch (const json::parse_error& e) {
        throw UsageError(std::string("malformed JSON: ") + e.what());
    }
}

AbGroup parse_group(const json& j)
{
    return make_group(j.at("free_rank").get<int>(), j.at("torsion").get<std::vector<long long>>());
}

GroupElem parse_elem(const AbGroup& G, const json& j) { return G.elem(j.get<std::vector<long long>>()); }

TypeIIIParams parse_params(const json& j)
{
    TypeIIIParams p;
    p.r = j.at("r").get<int>();
    p.G = parse_group(j.at("group"));
    p.h = parse_elem(p.G, j.at("h"));
    switch (p.r) {
    case 0:
    case 1:
        for (const auto& k : j.at("K")) p.K.push_back(parse_elem(p.G, k));
        if (p.r == 0) p.delta = j.at("delta").get<int>();
        break;
    case 2: {
        const auto& g = j.at("gamma");
        if (!g.is_array() || g.size() != 3) throw UsageError("gamma must list three elements");
        for (int i = 0; i < 3; ++i) p.gamma[i] = parse_elem(p.G, g[i]);
        break;
    }
    case 4:
        p.g = parse_elem(p.G, j.at("g"));
        break;
    case 8: {
        const auto t = j.at("t").get<std::string>();
        if (t != "p" && t != "o") throw UsageError("t must be \"p\" or \"o\"");
        p.t = t[0];
        break;
    }
    default:
        throw UsageError("r must be one of 0, 1, 2, 4, 8");
    }
    check_params(p);
    return p;
}

char model_code(const std::string& name)
{
    if (name == "para-cayley") return 'p';
    if (name == "para-doubled") return 'd';
    if (name == "okubo") return 'o';
    throw UsageError("unknown model " + name + " (para-cayley, para-doubled, okubo)");
}

std::string model_of(const json& in) { return in.value("model", std::string("para-cayley")); }

struct Loaded {
    json params;
    std::optional<TypeIIIParams> typeIII;
    GradedCyclic graded;
};

Loaded load_graded(const json& j)
{
    if (j.contains("kind")) {
        const auto kind = j.at("kind").get<std::string>();
        if (kind != "cartan" && kind != "z2cubed" && kind != "okubo")
            throw UsageError("unknown fine grading " + kind + " (cartan, z2cubed, okubo)");
        FineTypeIII f = fine_typeIII(kind);
        return {{{"kind", kind}}, f.params, f.graded};
    }
    TypeIIIParams p = parse_params(j);
    return {params_json(p), p, build(p)};
}

/// Keyed by the owning pointer, which stays alive with the cache.
const TriAlgebra& tri_of(const std::shared_ptr<const CyclicAlgebra>& V)
{
    static std::map<std::shared_ptr<const CyclicAlgebra>, std::unique_ptr<TriAlgebra>> cache;
    auto& t = cache[V];
    if (!t) t = std::make_unique<TriAlgebra>(tri_algebra(V->S));
    return *t;
}

// ---- commands ----

struct Outcome {
    json result = json::object();
    json checks = json::array();
    bool ok = true;

    void add(const std::string& name, const Report& r)
    {
        checks.push_back(report_json(name, r));
        ok = ok && r.ok;
    }
    void add(const std::string& name, bool pass, const std::string& witness)
    {
        Report r;
        if (!pass) r.fail(witness);
        add(name, r);
    }
};

Outcome cmd_build(const std::string& what, const json& in)
{
    Outcome o;
    o.result["constructor"] = what;
    if (what == "typeIII" || what == "fine-typeIII") {
        Loaded l = load_graded(in);
        o.result["params"] = l.params;
        o.result["grading"] = grading_json(l.graded.gamma);
        o.result["rank"] = rank(l.graded.gamma);
        o.result["h"] = elem_json(distinguished_h(l.graded));
        o.add("grading", verify_grading(l.graded.gamma));
    } else if (what == "composition") {
        const auto name = in.value("name", std::string("para-cayley"));
        CompositionAlgebra S;
        if (name == "para-cayley") S = para(zorn_cayley());
        else if (name == "okubo") S = okubo_sl3();
        else if (name == "split-cayley") S = zorn_cayley();
        else if (name == "doubled-cayley") S = doubled_cayley();
        else throw UsageError("unknown composition algebra " + name);
        o.result["name"] = name;
        o.result["structure"] = structure_json(*S.alg);
    } else if (what == "cyclic") {
        auto V = model(model_code(model_of(in)));
        o.result["model"] = model_of(in);
        o.result["structure"] = structure_json(*V->structure_xi());
    } else if (what == "tri") {
        auto V = model(model_code(model_of(in)));
        o.result["model"] = model_of(in);
        o.result["structure"] = structure_json(*tri_of(V).lie);
    } else if (what == "albert") {
        AlbertAlgebra A = albert(model(model_code(model_of(in))));
        o.result["model"] = model_of(in);
        o.result["structure"] = structure_json(*A.alg);
    } else {
        throw UsageError("unknown constructor " + what + " (typeIII, fine-typeIII, composition, cyclic, tri, albert)");
    }
    return o;
}

Outcome cmd_verify(const std::string& suite, const std::optional<json>& in, std::uint64_t seed)
{
    Outcome o;
    o.result["suite"] = suite;
    if (suite == "composition") {
        o.add("para-cayley symmetric composition", is_symmetric_composition(para(zorn_cayley()), seed));
        o.add("okubo symmetric composition", is_symmetric_composition(okubo_sl3(), seed));
        o.add("split cayley hurwitz", is_hurwitz(zorn_cayley(), seed));
        o.add("doubled cayley hurwitz", is_hurwitz(doubled_cayley(), seed));
    } else if (suite == "cyclic") {
        for (char m : {'p', 'o'}) {
            const std::string tag = m == 'p' ? "C(x)L" : "O(x)L";
            o.add(tag + " cyclic axioms", verify_cyclic_axioms(*model(m), seed));
            o.add(tag + " opposite cyclic axioms", verify_cyclic_axioms(opposite(*model(m)), seed));
        }
    } else if (suite == "lie") {
        for (char m : {'p', 'o'}) {
            const std::string tag = m == 'p' ? "tri(para-cayley)" : "tri(okubo)";
            const TriAlgebra& T = tri_of(model(m));
            o.add(tag + " dimension 28", T.dim() == 28, "dimension " + std::to_string(T.dim()));
            o.add(tag + " Lie algebra", verify_lie(*T.lie));
            for (int i = 0; i < 3; ++i) {
                Echelon ech(64);
                for (const auto& t : T.basis) {
                    Vec v;
                    for (int a = 0; a < 8; ++a)
                        for (int b = 0; b < 8; ++b) v.push_back(t.d[i](a, b));
                    ech.add(v);
                }
                o.add(tag + " projection " + std::to_string(i + 1) + " rank 28", ech.rank() == 28,
                      "rank " + std::to_string(ech.rank()));
            }
        }
        RootDatum rd = root_datum(tri_of(model('p')));
        o.result["roots"] = rd.roots.size();
        o.result["cartan_matrix"] = rd.cartan_matrix;
        o.add("root datum of type D4", rd.cartan.size() == 4 && rd.roots.size() == 24 && is_d4_cartan_matrix(rd.cartan_matrix),
              "rank " + std::to_string(rd.cartan.size()) + ", " + std::to_string(rd.roots.size()) + " roots");
    } else if (suite == "trialitarian") {
        for (char m : {'p', 'o'}) {
            const std::string tag = m == 'p' ? "C(x)L" : "O(x)L";
            Trialitarian T = trialitarian(*model(m));
            o.add(tag + " End_L(V)", verify_end_algebra(T.E));
            o.add(tag + " alpha", verify_alpha(T.C, T.E, T.A, seed));
            o.add(tag + " kappa", verify_kappa(T.C, T.E, T.K, seed));
            LieOfE L = lie_of_E(T);
            o.add(tag + " L(E) dimension 28", L.basis.size() == 28, "dimension " + std::to_string(L.basis.size()));
            Echelon a(576), ab(576);
            for (const auto& x : L.basis) {
                Matrix mx = T.E.as_matrix(x);
                Vec v;
                for (int i = 0; i < 24; ++i)
                    for (int j = 0; j < 24; ++j) v.push_back(mx(i, j));
                a.add(v);
                ab.add(v);
            }
            for (const auto& d : der_cyclic(T.E.V)) {
                Vec v;
                for (int i = 0; i < 24; ++i)
                    for (int j = 0; j < 24; ++j) v.push_back(d(i, j));
                ab.add(v);
            }
            o.add(tag + " L(E) = Der_L(V)", a.rank() == 28 && ab.rank() == 28, "spans differ");
        }
    } else if (suite == "jordan") {
        for (char m : {'p', 'o'}) {
            const std::string tag = m == 'p' ? "J(C(x)L)" : "J(O(x)L)";
            AlbertAlgebra A = albert(model(m));
            o.add(tag + " norm structure", verify_albert_structure(A));
            o.add(tag + " Jordan identity", verify_jordan(*A.alg, A.unit()));
            o.add(tag + " degree 3 identity", verify_degree3_sweep(A, 100, seed));
        }
    } else if (suite == "grading") {
        if (!in) throw UsageError("the grading suite needs an input (TypeIIIParams or {\"kind\": ...})");
        Loaded l = load_graded(*in);
        const CyclicAlgebra& V = *l.graded.V;
        o.result["params"] = l.params;
        o.add("grading on V", verify_grading(l.graded.gamma));
        const int r = rank(l.graded.gamma);
        o.result["rank"] = r;
        if (l.typeIII) o.add("rank matches r", r == l.typeIII->r, "rank " + std::to_string(r));
        const TriAlgebra& T = tri_of(l.graded.V);
        Grading gT = induce_tri_grading(T, V, l.graded.gamma);
        o.add("induced grading on tri", verify_grading(gT));
        o.add("V is a graded tri-module", verify_graded_module(T, V, l.graded.gamma, gT));
        EndAlgebra E = end_algebra(V);
        Grading gE = induce_E_grading(E, l.graded.gamma);
        o.add("induced grading on E", verify_grading(gE));
        TypeInfo ti = detect_type(E, gE);
        o.add("Type III with the distinguished element", ti.type == 3 && ti.h && *ti.h == distinguished_h(l.graded),
              "detected type " + std::to_string(ti.type));
    } else {
        throw UsageError("unknown suite " + suite);
    }
    return o;
}

Outcome cmd_invariants(const json& in)
{
    Outcome o;
    Loaded l = load_graded(in);
    const Grading& g = l.graded.gamma;
    const CyclicAlgebra& V = *l.graded.V;
    o.result["params"] = l.params;
    GradingInvariants inv = invariants(g);
    json support = json::array();
    for (const auto& [d, n] : inv.support) support.push_back({{"degree", elem_json(d)}, {"dim", n}});
    o.result["support"] = support;
    o.result["type_vector"] = inv.type;
    o.result["rank"] = rank(g);
    o.result["universal_group"] = group_json(inv.universal);
    o.result["h"] = elem_json(distinguished_h(l.graded));
    o.result["tri_type_vector"] = type_vector(induce_tri_grading(tri_of(l.graded.V), V, g));
    if (rank(g) == 0) {
        o.result["orientation"] = okubo_orientation(l.graded);
        json inv_pair = json::array();
        for (const auto& [d, h] : orientation_invariant(g.G, okubo_orientation(l.graded), distinguished_h(l.graded)))
            inv_pair.push_back({{"delta", d}, {"h", elem_json(h)}});
        o.result["orientation_invariant"] = inv_pair;
    }
    o.add("grading on V", verify_grading(g));
    return o;
}

Outcome cmd_similar(const json& a, const json& b)
{
    Outcome o;
    TypeIIIParams p = parse_params(a), q = parse_params(b);
    if (!(p.G == q.G)) throw UsageError("the two tuples use different groups");
    SimilarityVerdict v = similar_params(p, q);
    o.result["a"] = params_json(p);
    o.result["b"] = params_json(q);
    o.result["similar"] = v.similar;
    o.result["trace"] = v.trace;
    return o;
}

json division_json(const DivisionParams& P)
{
    json beta = json::array();
    for (const auto& [st, c] : P.beta)
        if (st.first < st.second && c != Cyclo(1))
            beta.push_back({{"s", elem_json(st.first)}, {"t", elem_json(st.second)}, {"beta", scalar_json(c)}});
    return {{"T", group_json(P.T_group())},
            {"T_size", P.T.size()},
            {"beta", beta},
            {"trivial", P.trivial()},
            {"elementary_2", P.elementary_2()},
            {"sign_valued", P.sign_valued()}};
}

Outcome cmd_brauer(const json& in)
{
    Outcome o;
    Loaded l = load_graded(in);
    const CyclicAlgebra& V = *l.graded.V;
    o.result["params"] = l.params;
    const GroupElem h = distinguished_h(l.graded);
    Quotient q = quotient(l.graded.gamma.G, {h});
    Grading g1 = coarsen(l.graded.gamma, q.proj);
    o.result["type_I_group"] = group_json(q.group);
    const TriAlgebra& T = tri_of(l.graded.V);
    Grading gT = induce_tri_grading(T, V, g1);
    RelatedTriple rt = related_triple(T, gT);
    for (int i = 0; i < 3; ++i) {
        const std::string tag = "Gamma_" + std::to_string(i + 1);
        o.add(tag + " grading on End(S)", verify_matrix_grading(rt.gamma[i]));
        o.add(tag + " compatible with the adjoint involution", verify_adjoint_compatible(rt.gamma[i], rt.gram));
    }
    BrauerCheck b = verify_brauer_relations(rt);
    json factors = json::array();
    for (const auto& P : b.params) factors.push_back(division_json(P));
    o.result["factors"] = factors;
    o.add("Brauer relations", b.report);
    return o;
}

Outcome cmd_catalog(const std::string& table)
{
    if (table != "fine-typeIII") throw UsageError("unknown catalog " + table + " (fine-typeIII)");
    Outcome o;
    json rows = json::array();
    for (const char* kind : {"cartan", "z2cubed", "okubo"}) {
        FineTypeIII f = fine_typeIII(kind);
        const CyclicAlgebra& V = *f.graded.V;
        o.add(std::string(kind) + " grading", verify_grading(f.graded.gamma));
        rows.push_back({{"kind", kind},
                        {"params", params_json(f.params)},
                        {"universal_group", group_json(f.universal.U)},
                        {"rank", rank(f.graded.gamma)},
                        {"type_vector", type_vector(f.graded.gamma)},
                        {"tri_type_vector", type_vector(induce_tri_grading(tri_of(f.graded.V), V, f.graded.gamma))}});
    }
    o.result["table"] = table;
    o.result["rows"] = rows;
    return o;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Gradings on D4-related algebras in exact arithmetic", "d4grad"};
    app.require_subcommand(1);
    int conductor = 12;
    std::uint64_t seed = 1;
    std::string out_path;
    app.add_option("--field-conductor", conductor, "Conductor N of the scalar field Q(zeta_N)")
        ->envname("D4GRAD_FIELD_CONDUCTOR")
        ->capture_default_str();
    app.add_option("--seed", seed, "Seed for randomized sweeps")->envname("D4GRAD_SEED")->capture_default_str();
    app.add_option("--out", out_path, "Write the report to this file instead of stdout")->envname("D4GRAD_OUT");

    std::string a1, a2;
    auto* build = app.add_subcommand("build", "Construct an object and dump it");
    build->add_option("constructor", a1, "typeIII, fine-typeIII, composition, cyclic, tri or albert")->required();
    build->add_option("input", a2, "JSON file or inline JSON object");
    auto* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("suite", a1, "composition, cyclic, lie, trialitarian, jordan or grading")->required();
    verify->add_option("input", a2, "JSON file or inline JSON object (grading suite)");
    auto* inv = app.add_subcommand("invariants", "Support, type vector, rank and universal group of a Type III grading");
    inv->add_option("input", a1, "TypeIIIParams or {\"kind\": ...}")->required();
    auto* sim = app.add_subcommand("similar", "Decide similarity of two TypeIIIParams");
    sim->add_option("a", a1)->required();
    sim->add_option("b", a2)->required();
    auto* br = app.add_subcommand("brauer", "Related triple of the Type I coarsening and the Brauer relations");
    br->add_option("input", a1, "TypeIIIParams or {\"kind\": ...}")->required();
    auto* cat = app.add_subcommand("catalog", "Tables of constructed gradings");
    cat->add_option("table", a1, "fine-typeIII")->required();
    for (auto* s : {build, verify, inv, sim, br, cat}) s->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n" << app.help();
        return 2;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    json report = {{"command", command}, {"conductor", conductor}, {"seed", seed}, {"version", kVersion}};
    int code = 0;
    try {
        if (conductor < 1 || conductor % 3 != 0) throw UsageError("the field conductor must be a positive multiple of 3");
        set_default_field(conductor);
        Outcome o;
        if (command == "build") o = cmd_build(a1, a2.empty() ? json::object() : load_input(a2));
        else if (command == "verify") o = cmd_verify(a1, a2.empty() ? std::nullopt : std::optional<json>(load_input(a2)), seed);
        else if (command == "invariants") o = cmd_invariants(load_input(a1));
        else if (command == "similar") o = cmd_similar(load_input(a1), load_input(a2));
        else if (command == "brauer") o = cmd_brauer(load_input(a1));
        else o = cmd_catalog(a1);
        report["result"] = o.result;
        report["checks"] = o.checks;
        report["status"] = o.ok ? "pass" : "fail";
        code = o.ok ? 0 : 1;
    } catch (const UsageError& e) {
        report["status"] = "error";
        report["error"] = e.what();
        code = 2;
    } catch (const json::exception& e) {
        report["status"] = "error";
        report["error"] = std::string("bad parameters: ") + e.what();
        code = 2;
    } catch (const std::invalid_argument& e) {
        report["status"] = "error";
        report["error"] = e.what();
        code = 2;
    } catch (const std::exception& e) {
        report["status"] = "fail";
        report["error"] = e.what();
        code = 1;
    }
    if (code == 2) err << "d4grad: " << report["error"].get<std::string>() << "\n";
    const std::string text = report.dump(2) + "\n";
    if (out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(out_path, std::ios::binary);
        if (!f) {
            err << "d4grad: cannot write " << out_path << "\n";
            return 2;
        }
        f << text;
    }
    return code;
}

}  // namespace d4::cli
