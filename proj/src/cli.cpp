#include "dposet/cli.hpp"

#include "dposet/antiblocking.hpp"
#include "dposet/constructors.hpp"
#include "dposet/hibi.hpp"
#include "dposet/io.hpp"
#include "dposet/transfer.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace dposet {

namespace {

using nlohmann::ordered_json;

struct Ctx {
    std::string format = "table";
    std::string gen, file;
    std::string polytope = "tord";
    std::string property, map, point, ideal = "tord", op;
    std::string name;
    std::string a_file, b_file;
    bool normalized = false, list = false, verify = false;
    int max_dilate = -1, ka = 1, kb = 1, altchain_max = 4;
    long long budget = 10'000'000;
    unsigned seed = 0;
};

std::string fmt_q(const Q& q, const std::string& format) {
    if (format == "table") return q_to_string(q);
    std::ostringstream ss;
    ss << "[" << numerator(q) << "," << denominator(q) << "]";
    return ss.str();
}

ordered_json q_json(const Q& q) {
    return ordered_json::array({numerator(q).convert_to<long long>(),
                                denominator(q).convert_to<long long>()});
}

std::string join(const std::vector<std::string>& cells, const std::string& sep) {
    std::string out;
    for (size_t i = 0; i < cells.size(); ++i) {
        if (i) out += sep;
        out += cells[i];
    }
    return out;
}

std::string row(const QVec& v, const Ctx& ctx) {
    std::vector<std::string> cells;
    for (const auto& c : v) cells.push_back(fmt_q(c, ctx.format));
    return join(cells, ctx.format == "csv" ? "," : " ");
}

std::string bool_str(bool b) { return b ? "true" : "false"; }

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw UnknownGenerator("cannot open file '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

DoublePoset load_dp(const Ctx& ctx) {
    if (!ctx.gen.empty()) return parse_generator(ctx.gen);
    if (ctx.file.empty())
        throw UnknownGenerator("no input given: use --gen or --file");
    return double_poset_from_json(read_file(ctx.file));
}

LabeledPolytope build_polytope(const DoublePoset& dp, const std::string& sel) {
    if (sel == "order") return order_polytope(dp.plus());
    if (sel == "chain") return chain_polytope(dp.plus());
    if (sel == "tord")
        return double_order_polytope(dp, is_compatible(dp).compatible);
    if (sel == "tchain") return double_chain_polytope(dp);
    if (sel == "dord") return reduced_polytopes(dp).dord;
    if (sel == "dchain") return reduced_polytopes(dp).dchain;
    if (sel == "hansen") return hansen(comparability_graph(dp.plus()));
    if (sel == "valuation") return valuation_polytope(dp.plus());
    if (sel == "gamma")
        return gamma_polytope(chain_polytope(dp.plus()).poly,
                              chain_polytope(dp.minus()).poly);
    if (sel == "twisted-prism")
        return twisted_prism(order_polytope(dp.plus()).poly);
    throw UnknownGenerator("unknown polytope selector '" + sel + "'");
}

std::vector<std::string> set_labels(const DoublePoset& dp, Mask m) {
    std::vector<std::string> out;
    for (int i : mask_to_indices(m)) out.push_back(dp.labels()[i]);
    return out;
}

int cmd_check(const Ctx& ctx, std::ostream& out) {
    auto dp = load_dp(ctx);
    if (ctx.property == "compatible") {
        auto res = is_compatible(dp);
        std::vector<std::string> witness;
        for (int a : res.compatible ? res.witness : res.cycle.elems)
            witness.push_back(dp.labels()[a]);
        if (ctx.format == "json") {
            ordered_json j;
            j["compatible"] = res.compatible;
            j[res.compatible ? "witness" : "cycle"] = witness;
            out << j.dump() << "\n";
        } else {
            out << bool_str(res.compatible) << "\n";
            out << (res.compatible ? "witness: " : "cycle: ")
                << join(witness, " ") << "\n";
        }
        return 0;
    }
    bool value;
    if (ctx.property == "2level")
        value = build_polytope(dp, ctx.polytope).poly.is_2level();
    else if (ctx.property == "reflexive")
        value = build_polytope(dp, ctx.polytope).poly.is_reflexive();
    else if (ctx.property == "perfect")
        value = comparability_graph(dp.plus()).is_perfect() &&
                comparability_graph(dp.minus()).is_perfect();
    else
        throw UnknownGenerator("unknown property '" + ctx.property + "'");
    if (ctx.format == "json")
        out << ordered_json{{ctx.property, value}}.dump() << "\n";
    else
        out << bool_str(value) << "\n";
    return 0;
}

int cmd_vertices(const Ctx& ctx, std::ostream& out, bool facets) {
    auto lp = build_polytope(load_dp(ctx), ctx.polytope);
    if (ctx.format == "json") {
        QPolytope p = lp.poly;
        if (facets)
            p.vrep.reset();
        else
            p.hrep.reset();
        if (facets) p.inequalities(); // surface MissingRep before printing
        if (!facets) p.vertices();
        out << polytope_to_json(p) << "\n";
        return 0;
    }
    if (facets) {
        for (const auto& iq : lp.poly.inequalities()) {
            QVec cells = iq.normal;
            cells.push_back(iq.rhs);
            out << row(cells, ctx) << "\n";
        }
    } else {
        for (const auto& v : lp.poly.vertices()) out << row(v, ctx) << "\n";
    }
    return 0;
}

int cmd_fvector(const Ctx& ctx, std::ostream& out) {
    auto lp = build_polytope(load_dp(ctx), ctx.polytope);
    auto fv = face_lattice(lp.poly).fvector();
    std::vector<std::string> cells;
    for (size_t x : fv) cells.push_back(std::to_string(x));
    if (ctx.format == "json") {
        ordered_json j;
        j["fvector"] = fv;
        out << j.dump() << "\n";
    } else {
        out << join(cells, ",") << "\n";
    }
    return 0;
}

int cmd_volume(const Ctx& ctx, std::ostream& out) {
    auto lp = build_polytope(load_dp(ctx), ctx.polytope);
    if (ctx.normalized) {
        Z v = lp.poly.normalized_volume({ctx.budget});
        if (ctx.format == "json")
            out << ordered_json{{"normalized_volume", v.convert_to<long long>()}}
                       .dump()
                << "\n";
        else
            out << v << "\n";
    } else {
        Q v = lp.poly.euclidean_volume();
        if (ctx.format == "json")
            out << ordered_json{{"volume", q_json(v)}}.dump() << "\n";
        else
            out << fmt_q(v, ctx.format) << "\n";
    }
    return 0;
}

int cmd_ehrhart(const Ctx& ctx, std::ostream& out) {
    auto lp = build_polytope(load_dp(ctx), ctx.polytope);
    auto e = lp.poly.ehrhart({ctx.budget});
    if (ctx.format == "json") {
        ordered_json j;
        ordered_json coeffs = ordered_json::array();
        for (const auto& c : e.coeffs) coeffs.push_back(q_json(c));
        j["coefficients"] = coeffs;
        if (ctx.max_dilate >= 0) {
            ordered_json vals = ordered_json::array();
            for (int k = 0; k <= ctx.max_dilate; ++k)
                vals.push_back(numerator(e(k)).convert_to<long long>());
            j["values"] = vals;
        }
        out << j.dump() << "\n";
    } else {
        out << row(e.coeffs, ctx) << "\n";
        for (int k = 0; k <= ctx.max_dilate; ++k)
            out << k << (ctx.format == "csv" ? "," : " ") << e(k) << "\n";
    }
    return 0;
}

int cmd_triangulate(const Ctx& ctx, std::ostream& out) {
    auto dp = load_dp(ctx);
    auto cells = triangulate(dp, ctx.polytope);
    if (!ctx.list) {
        if (ctx.format == "json")
            out << ordered_json{{"cells", cells.size()}}.dump() << "\n";
        else
            out << cells.size() << "\n";
        return 0;
    }
    if (ctx.format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& cell : cells) {
            ordered_json c = ordered_json::array();
            for (const auto& v : cell) {
                ordered_json pt = ordered_json::array();
                for (const auto& x : v) pt.push_back(q_json(x));
                c.push_back(pt);
            }
            j.push_back(c);
        }
        out << ordered_json{{"cells", j}}.dump() << "\n";
    } else {
        for (const auto& cell : cells) {
            std::vector<std::string> parts;
            for (const auto& v : cell) parts.push_back(row(v, ctx));
            out << join(parts, " | ") << "\n";
        }
    }
    return 0;
}

int cmd_transfer(const Ctx& ctx, std::ostream& out) {
    auto dp = load_dp(ctx);
    QVec pt = point_from_json(ctx.point);
    if ((int)pt.size() != dp.size())
        throw Degenerate("point length does not match the poset size");
    QVec img;
    if (ctx.map == "phi")
        img = transfer(dp.plus(), pt);
    else if (ctx.map == "phi-inv")
        img = inverse_transfer(dp.plus(), pt);
    else if (ctx.map == "psi")
        img = psi(dp, pt);
    else if (ctx.map == "psi-inv")
        img = psi_inverse(dp, pt);
    else
        throw UnknownGenerator("unknown map '" + ctx.map + "'");
    if (ctx.format == "json")
        out << point_to_json(img) << "\n";
    else
        out << row(img, ctx) << "\n";
    return 0;
}

std::string monomial_str(const DoublePoset& dp, const Ring& r,
                         const Monomial& m, bool two_sided) {
    std::vector<std::string> factors;
    for (size_t v = 0; v < m.size(); ++v)
        for (int e = 0; e < m[v]; ++e) {
            std::string base = "x";
            if (two_sided) base += r.vars[v].sigma > 0 ? "+" : "-";
            base += "{" + join(set_labels(dp, r.vars[v].set), ",") + "}";
            factors.push_back(base);
        }
    return factors.empty() ? "1" : join(factors, " ");
}

ordered_json monomial_json(const DoublePoset& dp, const Ring& r,
                           const Monomial& m) {
    ordered_json j = ordered_json::array();
    for (size_t v = 0; v < m.size(); ++v)
        for (int e = 0; e < m[v]; ++e)
            j.push_back({r.vars[v].sigma > 0 ? "+" : "-",
                         set_labels(dp, r.vars[v].set)});
    return j;
}

int cmd_groebner(const Ctx& ctx, std::ostream& out) {
    auto dp = load_dp(ctx);
    BinomialBasis basis;
    bool two_sided = true;
    if (ctx.ideal == "hibi") {
        basis = hibi_basis(dp.plus());
        two_sided = false;
    } else if (ctx.ideal == "tord") {
        basis = double_hibi_basis(dp);
    } else if (ctx.ideal == "tchain") {
        basis = tchain_basis(dp);
    } else {
        throw UnknownGenerator("unknown ideal '" + ctx.ideal + "'");
    }
    if (ctx.format == "json") {
        ordered_json j;
        j["size"] = basis.elems.size();
        if (ctx.verify) j["verified"] = buchberger_verify(basis);
        if (ctx.list) {
            ordered_json bs = ordered_json::array();
            for (const auto& b : basis.elems)
                bs.push_back({{"lead", monomial_json(dp, basis.ring, b.lead)},
                              {"trail", monomial_json(dp, basis.ring, b.trail)}});
            j["binomials"] = bs;
        }
        out << j.dump() << "\n";
        return 0;
    }
    out << "basis: " << basis.elems.size() << "\n";
    if (ctx.verify)
        out << "verified: " << bool_str(buchberger_verify(basis)) << "\n";
    if (ctx.list)
        for (const auto& b : basis.elems)
            out << monomial_str(dp, basis.ring, b.lead, two_sided) << " - "
                << monomial_str(dp, basis.ring, b.trail, two_sided) << "\n";
    return 0;
}

void print_vh(const QPolytope& p, const Ctx& ctx, std::ostream& out) {
    if (ctx.format == "json") {
        out << polytope_to_json(p) << "\n";
        return;
    }
    out << "vertices:\n";
    for (const auto& v : p.vertices()) out << row(v, ctx) << "\n";
    out << "inequalities:\n";
    for (const auto& iq : p.inequalities()) {
        QVec cells = iq.normal;
        cells.push_back(iq.rhs);
        out << row(cells, ctx) << "\n";
    }
}

int cmd_antiblock(const Ctx& ctx, std::ostream& out) {
    auto pa = polytope_from_json(read_file(ctx.a_file));
    auto a = ab_from_vrep(pa.vertices());
    if (ctx.op == "assoc") {
        auto assoc = associated_antiblocking(a);
        if (ctx.format == "json") {
            ordered_json gens = ordered_json::array();
            for (const auto& g : assoc.generators) {
                ordered_json r = ordered_json::array();
                for (const auto& c : g) r.push_back(q_json(c));
                gens.push_back(r);
            }
            out << ordered_json{{"generators", gens}}.dump() << "\n";
        } else {
            for (const auto& g : assoc.generators) out << row(g, ctx) << "\n";
        }
        return 0;
    }
    if (ctx.b_file.empty())
        throw UnknownGenerator("this operation needs --b");
    auto pb = polytope_from_json(read_file(ctx.b_file));
    auto b = ab_from_vrep(pb.vertices());
    if (ctx.op == "cayley" || ctx.op == "diff") {
        auto cd = cayley_and_minkowski(a, b);
        print_vh(ctx.op == "cayley" ? cd.cayley : cd.diff, ctx, out);
        return 0;
    }
    if (ctx.op == "subdivide") {
        auto cells = canonical_subdivision(a, b);
        if (ctx.format == "json") {
            ordered_json j = ordered_json::array();
            for (const auto& c : cells) {
                ordered_json verts = ordered_json::array();
                for (const auto& v : c.cell.vertices()) {
                    ordered_json r = ordered_json::array();
                    for (const auto& x : v) r.push_back(q_json(x));
                    verts.push_back(r);
                }
                j.push_back({{"J", mask_to_indices(c.J)}, {"vertices", verts}});
            }
            out << ordered_json{{"cells", j}}.dump() << "\n";
        } else {
            for (const auto& c : cells) {
                std::vector<std::string> idx;
                for (int i : mask_to_indices(c.J)) idx.push_back(std::to_string(i));
                std::vector<std::string> parts;
                for (const auto& v : c.cell.vertices()) parts.push_back(row(v, ctx));
                out << "J=" << (idx.empty() ? "-" : join(idx, ",")) << " | "
                    << join(parts, " | ") << "\n";
            }
        }
        return 0;
    }
    if (ctx.op == "count") {
        Z c = lattice_count_diff(a, b, ctx.ka, ctx.kb);
        if (ctx.format == "json")
            out << ordered_json{{"count", c.convert_to<long long>()}}.dump()
                << "\n";
        else
            out << c << "\n";
        return 0;
    }
    throw UnknownGenerator("unknown antiblock operation '" + ctx.op + "'");
}

int cmd_examples(const Ctx& ctx, std::ostream& out) {
    out << double_poset_to_json(parse_generator(ctx.name)) << "\n";
    return 0;
}

int cmd_conjecture_scan(const Ctx& ctx, std::ostream& out) {
    std::vector<std::string> names{"chain:2",     "chain:3", "antichain:2",
                                   "antichain:3", "mixed:2", "mixed:3",
                                   "comb:2",      "x",       "xw"};
    for (int n = 3; n <= ctx.altchain_max; ++n)
        names.push_back("altchain:" + std::to_string(n));
    ordered_json report = ordered_json::array();
    if (ctx.format != "json")
        out << "exploratory f-vector comparison; observations only, no proof\n";
    for (const auto& name : names) {
        auto dp = parse_generator(name);
        std::string verdict;
        int where = -1;
        size_t left = 0, right = 0;
        if (!is_compatible(dp).compatible) {
            verdict = "skipped (incompatible)";
        } else {
            auto ford = face_lattice(double_order_polytope(dp).poly).fvector();
            auto fchain = face_lattice(double_chain_polytope(dp).poly).fvector();
            for (size_t i = 0; i < ford.size(); ++i)
                if (ford[i] > fchain[i]) {
                    where = (int)i;
                    left = ford[i];
                    right = fchain[i];
                    break;
                }
            verdict = where < 0 ? "ok" : "counterexample";
        }
        if (ctx.format == "json") {
            ordered_json j{{"name", name}, {"verdict", verdict}};
            if (where >= 0) {
                j["index"] = where;
                j["tord"] = left;
                j["tchain"] = right;
            }
            report.push_back(j);
        } else {
            out << name << ": " << verdict;
            if (where >= 0)
                out << " i=" << where << " (" << left << " > " << right << ")";
            out << "\n";
        }
    }
    if (ctx.format == "json")
        out << ordered_json{{"scan", report}}.dump() << "\n";
    return 0;
}

} // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
    Ctx ctx;
    CLI::App app{"exact computations with double poset polytopes"};
    app.require_subcommand(1);
    app.add_option("--format", ctx.format, "output format")
        ->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("--seed", ctx.seed, "seed for randomized commands");
    app.add_option("--budget", ctx.budget, "enumeration budget");

    auto add_input = [&](CLI::App* sub) {
        sub->add_option("--gen", ctx.gen, "generator string, e.g. comb:3");
        sub->add_option("--file", ctx.file, "poset JSON file");
    };
    auto add_poly = [&](CLI::App* sub) {
        sub->add_option("--polytope", ctx.polytope, "polytope selector");
    };

    auto* check = app.add_subcommand("check", "query a property");
    check->add_option("property", ctx.property)
        ->required()
        ->check(CLI::IsMember({"compatible", "2level", "reflexive", "perfect"}));
    add_input(check);
    add_poly(check);

    for (const char* name : {"vertices", "facets", "fvector"}) {
        auto* sub = app.add_subcommand(name, "polytope data");
        add_input(sub);
        add_poly(sub);
    }
    auto* volume = app.add_subcommand("volume", "exact volume");
    volume->add_flag("--normalized", ctx.normalized);
    add_input(volume);
    add_poly(volume);

    auto* ehrhart = app.add_subcommand("ehrhart", "Ehrhart polynomial");
    ehrhart->add_option("--max-dilate", ctx.max_dilate);
    add_input(ehrhart);
    add_poly(ehrhart);

    auto* tri = app.add_subcommand("triangulate", "canonical triangulation");
    tri->add_flag("--list", ctx.list);
    tri->add_flag("--count", [](size_t) {}, "print the cell count (default)");
    add_input(tri);
    add_poly(tri);

    auto* transfer = app.add_subcommand("transfer", "apply a transfer map");
    transfer->add_option("--map", ctx.map)
        ->required()
        ->check(CLI::IsMember({"phi", "phi-inv", "psi", "psi-inv"}));
    transfer->add_option("--point", ctx.point)->required();
    add_input(transfer);

    auto* gb = app.add_subcommand("groebner", "toric ideal bases");
    gb->add_option("--ideal", ctx.ideal)
        ->check(CLI::IsMember({"tord", "tchain", "hibi"}));
    gb->add_flag("--verify", ctx.verify);
    gb->add_flag("--list", ctx.list);
    add_input(gb);

    auto* ab = app.add_subcommand("antiblock", "anti-blocking calculus");
    ab->add_option("op", ctx.op)
        ->required()
        ->check(CLI::IsMember({"assoc", "diff", "cayley", "subdivide", "count"}));
    ab->add_option("--a", ctx.a_file)->required();
    ab->add_option("--b", ctx.b_file);
    ab->add_option("--ka", ctx.ka);
    ab->add_option("--kb", ctx.kb);

    auto* ex = app.add_subcommand("examples", "named example registry");
    ex->add_option("--name", ctx.name)->required();

    auto* scan = app.add_subcommand("conjecture-scan",
                                    "f-vector comparison experiments");
    scan->add_option("--altchain-max", ctx.altchain_max);

    for (CLI::App* sub : app.get_subcommands([](const CLI::App*) { return true; }))
        sub->fallthrough();

    std::vector<std::string> full = {"dposet"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : full) argv.push_back(s.data());
    try {
        app.parse((int)argv.size(), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (check->parsed()) return cmd_check(ctx, out);
        if (app.get_subcommand("vertices")->parsed())
            return cmd_vertices(ctx, out, false);
        if (app.get_subcommand("facets")->parsed())
            return cmd_vertices(ctx, out, true);
        if (app.get_subcommand("fvector")->parsed()) return cmd_fvector(ctx, out);
        if (volume->parsed()) return cmd_volume(ctx, out);
        if (ehrhart->parsed()) return cmd_ehrhart(ctx, out);
        if (tri->parsed()) return cmd_triangulate(ctx, out);
        if (transfer->parsed()) return cmd_transfer(ctx, out);
        if (gb->parsed()) return cmd_groebner(ctx, out);
        if (ab->parsed()) return cmd_antiblock(ctx, out);
        if (ex->parsed()) return cmd_examples(ctx, out);
        if (scan->parsed()) return cmd_conjecture_scan(ctx, out);
        err << "no subcommand\n";
        return 1;
    } catch (const DomainError& e) {
        err << e.what() << "\n";
        return 2;
    }
}

} // namespace dposet
