#pragma once

// Command-line front end. `dispatch` parses arguments and runs one command,
// returning a CommandResult; `run` prints it. Output is a pure function of
// the arguments and input files.

#include <cstdio>
#include <cstdint>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "graphsusy/continuum.hpp"
#include "graphsusy/dynamics.hpp"
#include "graphsusy/generators.hpp"
#include "graphsusy/graph_io.hpp"
#include "graphsusy/morse.hpp"
#include "graphsusy/rewiring.hpp"
#include "graphsusy/spectral.hpp"
#include "graphsusy/susy.hpp"
#include "graphsusy/walks.hpp"

namespace graphsusy::cli {

enum class Status { Ok, Error };

struct CommandResult {
    Status status = Status::Ok;
    Json payload;                     // carries a "schema" field
    std::vector<std::string> diagnostics;
    std::string text;                 // raw output (CSV, help) replacing the JSON payload when set
    int exit_code() const noexcept { return status == Status::Ok ? 0 : 1; }
};

inline constexpr int schema_version = 1;

namespace detail {

inline Json schema(const std::string& command)
{
    Json j;
    j["schema"] = "graphsusy." + command + "/" + std::to_string(schema_version);
    return j;
}

inline std::string csv_number(double x)
{
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

inline Json vector_json(const std::vector<double>& v)
{
    Json a = Json::array();
    for (double x : v)
        a.push_back(x);
    return a;
}

inline Json ids(const OrientedGraph& g, const std::vector<std::size_t>& idx, bool edges)
{
    Json a = Json::array();
    for (std::size_t i : idx)
        a.push_back(edges ? g.edge(i).id : g.vertices()[i]);
    return a;
}

/// Vertex or edge id -> combined simplex index.
inline std::size_t simplex_index(const OrientedGraph& g, const std::string& id)
{
    if (auto v = g.vertex_index(id))
        return *v;
    if (auto e = g.edge_index(id))
        return g.vertex_count() + *e;
    throw Error(ErrorCode::UnknownId, "no vertex or edge '" + id + "'", id);
}

inline std::string simplex_id(const OrientedGraph& g, std::size_t s)
{
    return s < g.vertex_count() ? g.vertices()[s] : g.edge(s - g.vertex_count()).id;
}

inline Json move_json(const OrientedGraph& g, const RewiringMove& m)
{
    return {{"edge", g.edge(m.edge).id},
            {"endpoint", std::string(to_string(m.endpoint))},
            {"to", g.vertices()[m.vertex]},
            {"orientation_only", m.orientation_only}};
}

inline Json vacuum_json(const VacuumReport& v)
{
    return {{"n_bosonic_zero", v.n_bosonic_zero},
            {"n_fermionic_zero", v.n_fermionic_zero},
            {"witten_index", v.witten_index},
            {"broken", v.broken},
            {"purely_bosonic", v.purely_bosonic()}};
}

inline Sector sector_option(const std::string& s)
{
    const Sector sec = parse_sector(s);
    if (sec == Sector::Mixed)
        throw Error(ErrorCode::InvalidArgument, "steady states are per sector: use vertex or edge", s);
    return sec;
}

struct Options {
    std::optional<double> tol;
    bool json = false;
    bool csv = false;
    std::uint64_t seed = 1;
    std::vector<double> betas{0.5, 1.0, 2.0};

    std::string graph;
    std::optional<std::string> op;
    std::string sector = "vertex";
    std::string state;
    std::string function;
    std::string from, to, edge, endpoint, simplex;
    std::optional<double> t;
    std::size_t k_max = 5;
    std::size_t modes = 5;
    bool oracle = false;
    bool dedup = false;
    std::vector<std::size_t> n_list{10, 100, 1000};
    std::size_t vertices = 8;
    double density = 0.5;
};

// ---------------------------------------------------------------------------
// Commands

inline CommandResult cmd_info(const Options& o)
{
    const auto g = load_graph(o.graph);
    auto p = schema("info");
    Json degrees = Json::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        degrees[g.vertices()[v]] = g.degree(v);
    Json comps = Json::array();
    for (const auto& c : connected_components(g))
        comps.push_back(ids(g, c, false));
    Json basis = Json::array();
    for (const auto& c : fundamental_cycle_basis(g))
        basis.push_back(c);
    p["name"] = g.name();
    p["vertices"] = g.vertex_count();
    p["edges"] = g.edge_count();
    p["components"] = comps;
    p["cycle_rank"] = cycle_rank(g);
    p["euler_characteristic"] = euler_characteristic(g);
    p["bridges"] = bridges(g);
    p["cycle_basis"] = basis;
    p["degrees"] = degrees;
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_operators(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto q = supercharges(g);
    const std::vector<std::pair<std::string, Json>> all{
        {"adjacency", matrix_to_json(adjacency_matrix(g))},
        {"incidence", matrix_to_json(incidence_matrix(g))},
        {"degree", matrix_to_json(degree_matrix(g))},
        {"even", matrix_to_json(laplacian_even(g))},
        {"odd", matrix_to_json(laplacian_odd(g))},
        {"susy", matrix_to_json(laplacian_susy(g).matrix)},
        {"dirac", matrix_to_json(dirac_incidence(g).matrix)},
        {"parity", matrix_to_json(fermion_parity(g).matrix)},
        {"q1", matrix_to_json(q.q1.matrix)},
        {"q2", [&] {
             auto j = matrix_to_json(q.q2.matrix);
             j["imaginary"] = true;
             return j;
         }()},
    };
    auto p = schema("operators");
    p["vertex_dim"] = g.vertex_count();
    p["edge_dim"] = g.edge_count();
    Json ops = Json::object();
    bool found = false;
    for (const auto& [name, m] : all)
        if (o.op.value_or("all") == "all" || o.op == name) {
            ops[name] = m;
            found = true;
        }
    if (!found)
        throw Error(ErrorCode::InvalidArgument, "unknown operator '" + *o.op + "'", *o.op);
    p["operators"] = ops;
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_spectrum(const Options& o)
{
    const auto g = load_graph(o.graph);
    const std::string op = o.op.value_or("even");
    RealMatrix m;
    if (op == "even")
        m = laplacian_even(g).cast<double>();
    else if (op == "odd")
        m = laplacian_odd(g).cast<double>();
    else if (op == "susy")
        m = laplacian_susy(g).matrix.cast<double>();
    else if (op == "dirac")
        m = dirac_incidence(g).matrix.cast<double>();
    else
        throw Error(ErrorCode::InvalidArgument, "operator must be even, odd, susy or dirac", op);
    const auto eigs = eigvals_sym(m);

    auto p = schema("spectrum");
    p["operator"] = op;
    p["eigenvalues"] = vector_json(eigs);
    std::vector<std::string> diags;
    if (op == "dirac") {
        // D_I is indefinite: its kernel is read off |λ|
        std::vector<double> mag;
        for (double l : eigs)
            mag.push_back(std::abs(l));
        std::sort(mag.begin(), mag.end());
        const double tol = o.tol.value_or(default_kernel_tolerance(mag));
        p["kernel_tolerance"] = tol;
        p["kernel_dim"] = kernel_dimension(mag, tol);
    } else {
        const double tol = o.tol.value_or(default_kernel_tolerance(eigs));
        p["kernel_tolerance"] = tol;
        p["kernel_dim"] = kernel_dimension(eigs, tol);
    }
    if (g.vertex_count() >= 2)
        p["fiedler"] = fiedler_value(g);
    else {
        p["fiedler"] = nullptr;
        diags.push_back("Fiedler value needs at least two vertices");
    }
    if (g.edge_count() > 0) {
        const auto mr = merris_bound_check(g);
        p["merris"] = {{"lambda_max", mr.lambda_max}, {"bound", mr.bound}, {"holds", mr.holds}};
    } else {
        p["merris"] = nullptr;
        diags.push_back("Merris bound is undefined on an edgeless graph");
    }
    return {Status::Ok, p, diags, {}};
}

inline CommandResult cmd_steady(const Options& o)
{
    const auto g = load_graph(o.graph);
    const Sector s = sector_option(o.sector);
    const auto kb = steady_states(g, s, o.tol);
    auto p = schema("steady");
    p["sector"] = std::string(to_string(s));
    p["tolerance"] = kb.tolerance;
    p["dim"] = kb.dim();
    Json basis = Json::array();
    for (const auto& v : kb.vectors)
        basis.push_back(vector_json(v));
    p["basis"] = basis;
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_evolve(const Options& o)
{
    const auto g = load_graph(o.graph);
    Json doc;
    try {
        doc = Json::parse(read_file(o.state));
    } catch (const nlohmann::json::parse_error& ex) {
        throw Error(ErrorCode::MalformedInput, std::string("invalid state JSON: ") + ex.what(), o.state);
    }
    const auto st = state_from_json(doc, g);
    const auto out = evolve(st, *o.t, g);
    auto p = schema("evolve");
    p["t"] = *o.t;
    p["state"] = state_to_json(out);
    p["norm_before"] = st.norm();
    p["norm_after"] = out.norm();
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_witten(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto w = witten_index(g, o.betas);
    auto p = schema("witten");
    p["witten"] = w.value;
    p["routes"] = {{"euler", w.euler},
                   {"topological", w.topological},
                   {"kernel", w.kernel},
                   {"trace",
                    {{"betas", vector_json(w.betas)},
                     {"values", vector_json(w.trace_values)},
                     {"rounded", w.trace_rounded},
                     {"drift", w.beta_drift}}}};
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_vacuum(const Options& o)
{
    const auto g = load_graph(o.graph);
    auto p = schema("vacuum");
    const auto v = vacuum_classification(g);
    p.update(vacuum_json(v));
    const auto d = degeneracy_report(g);
    Json levels = Json::array();
    for (const auto& grp : d.groups)
        levels.push_back({{"eigenvalue", grp.eigenvalue}, {"even", grp.even_multiplicity}, {"odd", grp.odd_multiplicity}});
    p["levels"] = levels;
    p["paired"] = d.paired;
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_dirac(const Options& o)
{
    const auto g = load_graph(o.graph);
    std::vector<std::size_t> which;
    if (!o.simplex.empty())
        which.push_back(simplex_index(g, o.simplex));
    else
        for (std::size_t s = 0; s < g.simplex_count(); ++s)
            which.push_back(s);
    const double t = o.t.value_or(1.0);
    auto p = schema("dirac");
    p["t"] = t;
    Json rows = Json::array();
    bool any_divergence = false;
    for (std::size_t s : which) {
        const auto c = dirac_trace_comparison(g, s, t);
        any_divergence = any_divergence || c.diverges();
        rows.push_back({{"simplex", simplex_id(g, s)},
                        {"sector", s < g.vertex_count() ? "vertex" : "edge"},
                        {"exact", c.exact},
                        {"closed_form", c.closed_form},
                        {"exact_coefficients", c.exact_coefficients},
                        {"closed_form_coefficients", c.closed_form_coefficients},
                        {"agrees", c.agrees},
                        {"diverges_at_t2", c.diverges()}});
    }
    p["simplices"] = rows;
    p["diverges"] = any_divergence;
    std::vector<std::string> diags;
    if (any_divergence)
        diags.push_back("closed form e^{t·deg} departs from the diagonal of e^{tΔ_S} at order t²");
    return {Status::Ok, p, diags, {}};
}

inline CommandResult cmd_walksum(const Options& o)
{
    const auto g = load_graph(o.graph);
    const std::size_t i = g.require_vertex(o.from);
    const std::size_t j = g.require_vertex(o.to);
    const double t = o.t.value_or(0.5);
    const double tail_tol = o.tol.value_or(1e-10);
    const auto r = walk_sum_propagator(g, i, j, t, tail_tol);
    const double exact = euclidean_propagator(g, t, PropagatorConvention::Walk)(i, j);

    auto p = schema("walksum");
    p["from"] = o.from;
    p["to"] = o.to;
    p["t"] = t;
    p["value"] = r.value;
    p["terms"] = r.terms;
    p["tail_bound"] = r.tail_bound;
    p["matrix_exponential"] = exact;
    p["error"] = std::abs(r.value - exact);
    p["within_bound"] = std::abs(r.value - exact) < tail_tol + 1e-9;
    std::vector<std::string> diags;
    if (o.oracle) {
        // Per-order comparison of enumerated superwalk signs with [Δ+^k]_ij
        const EnumerationCaps caps;
        const std::size_t k_top = std::min(r.terms, caps.max_length);
        const auto lap = laplacian_even(g);
        IntMatrix power = IntMatrix::identity(g.vertex_count());
        Json orders = Json::array();
        double partial = 0.0, coef = 1.0;
        bool agree = true;
        for (std::size_t k = 0; k <= k_top; ++k) {
            if (k > 0) {
                power = power * lap;
                coef *= -t / static_cast<double>(k);
            }
            std::int64_t s = 0;
            for (const auto& w : enumerate_walks(g, i, j, k, WalkKind::VertexSuper, caps))
                s += w.sign;
            partial += coef * static_cast<double>(s);
            agree = agree && s == power(i, j);
            orders.push_back({{"k", k}, {"signed_walks", s}, {"matrix_power", power(i, j)}});
        }
        Json oj{{"orders", orders}, {"agree", agree}, {"complete", k_top == r.terms}};
        if (k_top == r.terms) {
            oj["value"] = partial;
            oj["difference"] = std::abs(partial - r.value);
        } else {
            oj["value"] = nullptr;
            oj["partial_value"] = partial;
            diags.push_back("enumeration cap reached at length " + std::to_string(k_top) + "; the tail bound needs " +
                            std::to_string(r.terms));
        }
        p["oracle"] = oj;
    }
    return {Status::Ok, p, diags, {}};
}

inline CommandResult cmd_oracle(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto rep = verify_power_identities(g, o.k_max);
    auto p = schema("oracle");
    p["k_max"] = rep.k_max;
    p["entries_checked"] = rep.entries_checked;
    p["holds"] = rep.holds;
    Json vs = Json::array();
    for (const auto& v : rep.violations)
        vs.push_back({{"kind", std::string(to_string(v.kind))},
                      {"k", v.k},
                      {"i", v.i},
                      {"j", v.j},
                      {"matrix", v.matrix_value},
                      {"walks", v.walk_sum}});
    p["violations"] = vs;
    return {rep.holds ? Status::Ok : Status::Error, p,
            rep.holds ? std::vector<std::string>{} : std::vector<std::string>{"walk identities violated"}, {}};
}

inline MorseFunction morse_input(const Options& o, const OrientedGraph& g, std::vector<std::string>& diags)
{
    if (o.function.empty()) {
        std::mt19937_64 rng(o.seed);
        diags.push_back("no --function given; drew a random Morse function with seed " + std::to_string(o.seed));
        return random_morse_function(g, rng);
    }
    Json doc;
    try {
        doc = Json::parse(read_file(o.function));
    } catch (const nlohmann::json::parse_error& ex) {
        throw Error(ErrorCode::MalformedInput, std::string("invalid function JSON: ") + ex.what(), o.function);
    }
    return morse_function_from_json(doc, g);
}

inline CommandResult cmd_morse_check(const Options& o)
{
    const auto g = load_graph(o.graph);
    std::vector<std::string> diags;
    const auto f = morse_input(o, g, diags);
    const auto v = is_discrete_morse(g, f);
    auto p = schema("morse.check");
    p["function"] = morse_function_to_json(g, f);
    p["valid"] = v.valid;
    Json vs = Json::array();
    for (const auto& x : v.violations) {
        const bool at_vertex = x.simplex_kind == Sector::Vertex;
        vs.push_back({{"simplex", at_vertex ? g.vertices()[x.index] : g.edge(x.index).id},
                      {"kind", at_vertex ? "vertex" : "edge"},
                      {"offenders", ids(g, x.offenders, at_vertex)}});
    }
    p["violations"] = vs;
    return {Status::Ok, p, diags, {}};
}

inline CommandResult cmd_morse_critical(const Options& o)
{
    const auto g = load_graph(o.graph);
    std::vector<std::string> diags;
    const auto f = morse_input(o, g, diags);
    const auto c = critical_simplices(g, f);
    const auto pairs = gradient_pairs(g, f);
    const auto mc = morse_consistency(g, f);
    auto p = schema("morse.critical");
    p["function"] = morse_function_to_json(g, f);
    p["critical_vertices"] = ids(g, c.vertices, false);
    p["critical_edges"] = ids(g, c.edges, true);
    Json pj = Json::array();
    for (const auto& gp : pairs)
        pj.push_back({{"vertex", g.vertices()[gp.vertex]}, {"edge", g.edge(gp.edge).id}});
    p["gradient_pairs"] = pj;
    p["consistency"] = {{"euler", mc.euler},
                        {"b0", mc.betti.b0},
                        {"b1", mc.betti.b1},
                        {"partition", mc.partition_ok},
                        {"euler_matches", mc.euler_ok},
                        {"weak_inequalities", mc.weak_inequalities_ok}};
    return {Status::Ok, p, diags, {}};
}

inline CommandResult cmd_rewire_enumerate(const Options& o)
{
    const auto g = load_graph(o.graph);
    auto moves = enumerate_moves(g);
    if (o.dedup)
        moves = deduplicate_isomorphic(g, moves);
    const long long w0 = witten_index(g).value;
    const std::size_t cc = component_count(g);
    const std::size_t cr = cycle_rank(g);

    struct Row {
        RewiringMove m;
        long long w;
        long long dcc, dcy;
    };
    std::vector<Row> rows;
    bool invariant = true, deltas_ok = true;
    for (const auto& m : moves) {
        const auto after = apply_move(g, m);
        Row r{m, witten_index(after).value,
              static_cast<long long>(component_count(after)) - static_cast<long long>(cc),
              static_cast<long long>(cycle_rank(after)) - static_cast<long long>(cr)};
        invariant = invariant && r.w == w0;
        deltas_ok = deltas_ok && r.dcc == r.dcy;
        rows.push_back(r);
    }

    if (o.csv) {
        std::string out = "edge,endpoint,to,orientation_only,witten,d_components,d_cycles\n";
        for (const auto& r : rows)
            out += g.edge(r.m.edge).id + "," + std::string(to_string(r.m.endpoint)) + "," + g.vertices()[r.m.vertex] +
                   "," + (r.m.orientation_only ? "1" : "0") + "," + std::to_string(r.w) + "," +
                   std::to_string(r.dcc) + "," + std::to_string(r.dcy) + "\n";
        return {Status::Ok, schema("rewire.enumerate"), {}, out};
    }
    auto p = schema("rewire.enumerate");
    p["witten"] = w0;
    p["deduplicated"] = o.dedup;
    p["structural_moves"] = structural_move_count(moves);
    p["orientation_moves"] = moves.size() - structural_move_count(moves);
    Json mj = Json::array();
    for (const auto& r : rows) {
        auto j = move_json(g, r.m);
        j["witten"] = r.w;
        j["d_components"] = r.dcc;
        j["d_cycles"] = r.dcy;
        mj.push_back(j);
    }
    p["moves"] = mj;
    p["witten_invariant"] = invariant;
    p["deltas_match"] = deltas_ok;
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_rewire_apply(const Options& o)
{
    const auto g = load_graph(o.graph);
    const std::size_t e = g.require_edge(o.edge);
    Endpoint ep;
    if (o.endpoint == "tail")
        ep = Endpoint::Tail;
    else if (o.endpoint == "head")
        ep = Endpoint::Head;
    else
        throw Error(ErrorCode::InvalidArgument, "endpoint must be tail or head", o.endpoint);
    const std::size_t v = g.require_vertex(o.to);
    const Edge& ed = g.edge(e);
    const std::size_t fixed = ep == Endpoint::Tail ? ed.head : ed.tail;
    // moving an endpoint onto the opposite end means reversing the edge
    const RewiringMove m{e, ep, v, v == fixed};
    const auto after = apply_move(g, m);
    auto p = schema("graph");
    p.update(graph_to_json(after));
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_rewire_minimize(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto r = minimize_cycles(g);
    auto p = schema("rewire.minimize");
    Json steps = Json::array();
    for (std::size_t k = 0; k < r.moves.size(); ++k) {
        const auto& after = r.graphs[k + 1];
        auto j = move_json(r.graphs[k], r.moves[k]);
        j["components"] = component_count(after);
        j["cycles"] = cycle_rank(after);
        j["witten"] = witten_index(after).value;
        steps.push_back(j);
    }
    p["initial"] = {{"components", component_count(g)}, {"cycles", cycle_rank(g)}, {"witten", witten_index(g).value}};
    p["steps"] = steps;
    p["final_graph"] = graph_to_json(r.graphs.back());
    p["final_vacuum"] = vacuum_json(r.final_vacuum);
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_continuum(const Options& o)
{
    const auto st = convergence_study(o.n_list, o.modes);
    if (o.csv) {
        std::string out = "n,k,scaled_eigenvalue,closed_form,target,relative_error,taylor_bound\n";
        for (const auto& r : st.rows)
            out += std::to_string(r.n) + "," + std::to_string(r.k) + "," + csv_number(r.scaled_eigenvalue) + "," +
                   csv_number(r.closed_form) + "," + csv_number(r.target) + "," + csv_number(r.relative_error) + "," +
                   csv_number(r.taylor_bound) + "\n";
        return {Status::Ok, schema("continuum"), {}, out};
    }
    auto p = schema("continuum");
    Json rows = Json::array();
    for (const auto& r : st.rows)
        rows.push_back({{"n", r.n},
                        {"k", r.k},
                        {"scaled_eigenvalue", r.scaled_eigenvalue},
                        {"closed_form", r.closed_form},
                        {"target", r.target},
                        {"relative_error", r.relative_error},
                        {"taylor_bound", r.taylor_bound}});
    p["rows"] = rows;
    p["monotone"] = st.monotone;
    p["odd_matches_even"] = st.odd_matches_even;
    p["max_closed_form_gap"] = st.max_closed_form_gap;
    p["max_odd_even_gap"] = st.max_odd_even_gap;
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_cheeger(const Options& o)
{
    const auto g = load_graph(o.graph);
    const auto c = cheeger_report(g);
    const auto m = merris_bound_check(g);
    auto p = schema("cheeger");
    p["h"] = c.h;
    p["lambda2"] = c.lambda2;
    p["holds"] = c.holds;
    p["merris"] = {{"lambda_max", m.lambda_max}, {"bound", m.bound}, {"holds", m.holds}};
    return {Status::Ok, p, {}, {}};
}

inline CommandResult cmd_random(const Options& o)
{
    if (o.density < 0.0 || o.density > 1.0)
        throw Error(ErrorCode::InvalidArgument, "density must lie in [0, 1]");
    std::mt19937_64 rng(o.seed);
    auto g = random_graph(rng, o.vertices, o.density)
                 .renamed("random-n" + std::to_string(o.vertices) + "-s" + std::to_string(o.seed));
    auto p = schema("graph");
    p.update(graph_to_json(g));
    return {Status::Ok, p, {}, {}};
}

inline CommandResult failure(const std::string& code, std::vector<std::string> diags, const std::string& subject = {})
{
    auto p = schema("error");
    p["code"] = code;
    if (!subject.empty())
        p["subject"] = subject;
    return {Status::Error, p, std::move(diags), {}};
}

} // namespace detail

/// Parses `args` (without the program name) and runs the selected command.
inline CommandResult dispatch(const std::vector<std::string>& args)
{
    using namespace detail;
    Options o;
    CLI::App app{"Supersymmetric quantum mechanics on finite oriented graphs", "graphsusy"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--tol", o.tol, "kernel tolerance (walksum: tail tolerance)");
    auto* json_flag = app.add_flag("--json", o.json, "JSON output (default)");
    auto* csv_flag = app.add_flag("--csv", o.csv, "CSV output where rows are natural");
    json_flag->excludes(csv_flag);
    app.add_option("--seed", o.seed, "seed for randomized generators");
    app.add_option("--beta", o.betas, "inverse temperatures for the trace route")->delimiter(',');

    auto graph_cmd = [&](CLI::App* parent, const char* name, const char* help) {
        auto* s = parent->add_subcommand(name, help);
        s->fallthrough();
        s->add_option("graph", o.graph, "graph file (JSON or text)")->required();
        return s;
    };

    auto* info = graph_cmd(&app, "info", "graph summary and topology");
    auto* ops = graph_cmd(&app, "operators", "integer operator matrices");
    ops->add_option("--operator", o.op, "adjacency|incidence|degree|even|odd|susy|dirac|parity|q1|q2|all (default)");
    auto* spec = graph_cmd(&app, "spectrum", "eigenvalues, kernel dimension, Fiedler value, Merris bound");
    spec->add_option("--operator", o.op, "even (default)|odd|susy|dirac");
    auto* steady = graph_cmd(&app, "steady", "orthonormal steady-state basis");
    steady->add_option("--sector", o.sector, "vertex (default)|edge");
    auto* evolve_cmd = graph_cmd(&app, "evolve", "Schrodinger evolution of a state");
    evolve_cmd->add_option("--state", o.state, "state JSON file")->required();
    evolve_cmd->add_option("--t", o.t, "time")->required();
    auto* witten = graph_cmd(&app, "witten", "Witten index by every route");
    auto* vacuum = graph_cmd(&app, "vacuum", "zero-energy states and level pairing");
    auto* dirac = graph_cmd(&app, "dirac", "diagonal of e^{tD_I^2} against the closed-form series");
    dirac->add_option("--t", o.t, "time (default 1)");
    dirac->add_option("--simplex", o.simplex, "restrict to one vertex or edge id");
    auto* walksum = graph_cmd(&app, "walksum", "propagator entry as a signed superwalk sum");
    walksum->add_option("--from", o.from, "start vertex")->required();
    walksum->add_option("--to", o.to, "end vertex")->required();
    walksum->add_option("--t", o.t, "time (default 0.5)");
    walksum->add_flag("--oracle", o.oracle, "cross-check by explicit enumeration");
    auto* oracle = graph_cmd(&app, "oracle", "walk enumeration against matrix powers");
    oracle->add_option("--k", o.k_max, "highest power (default 5)");

    auto* morse = app.add_subcommand("morse", "discrete Morse functions");
    morse->fallthrough();
    morse->require_subcommand(1);
    auto* mcheck = graph_cmd(morse, "check", "validate a function");
    auto* mcrit = graph_cmd(morse, "critical", "critical simplices and gradient pairs");
    for (auto* s : {mcheck, mcrit})
        s->add_option("--function", o.function, "function JSON file (random when omitted)");

    auto* rewire = app.add_subcommand("rewire", "single-endpoint edge rewirings");
    rewire->fallthrough();
    rewire->require_subcommand(1);
    auto* renum = graph_cmd(rewire, "enumerate", "legal moves with W and component/cycle deltas");
    renum->add_flag("--dedup-iso", o.dedup, "keep one move per isomorphism class of result");
    auto* rapply = graph_cmd(rewire, "apply", "apply one move and print the new graph");
    rapply->add_option("--edge", o.edge, "edge id")->required();
    rapply->add_option("--endpoint", o.endpoint, "tail|head")->required();
    rapply->add_option("--to", o.to, "new endpoint vertex id")->required();
    auto* rmin = graph_cmd(rewire, "minimize", "greedy cycle removal");

    auto* cont = app.add_subcommand("continuum", "cycle-graph spectra against the free particle on a circle");
    cont->fallthrough();
    cont->add_option("--n", o.n_list, "cycle lengths")->delimiter(',');
    cont->add_option("--modes", o.modes, "highest mode k (default 5)");
    auto* cheeger = graph_cmd(&app, "cheeger", "Cheeger constant and normalized Fiedler value");
    auto* random = app.add_subcommand("random", "random oriented graph");
    random->fallthrough();
    random->add_option("--vertices", o.vertices, "vertex count (default 8)");
    random->add_option("--density", o.density, "edge probability (default 0.5)");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        std::ostringstream out, err;
        const int code = app.exit(e, out, err);
        if (code == 0)
            return {Status::Ok, schema("help"), {}, out.str()};
        return failure("usage", {e.what()});
    }

    try {
        if (info->parsed())
            return cmd_info(o);
        if (ops->parsed())
            return cmd_operators(o);
        if (spec->parsed())
            return cmd_spectrum(o);
        if (steady->parsed())
            return cmd_steady(o);
        if (evolve_cmd->parsed())
            return cmd_evolve(o);
        if (witten->parsed())
            return cmd_witten(o);
        if (vacuum->parsed())
            return cmd_vacuum(o);
        if (dirac->parsed())
            return cmd_dirac(o);
        if (walksum->parsed())
            return cmd_walksum(o);
        if (oracle->parsed())
            return cmd_oracle(o);
        if (mcheck->parsed())
            return cmd_morse_check(o);
        if (mcrit->parsed())
            return cmd_morse_critical(o);
        if (renum->parsed())
            return cmd_rewire_enumerate(o);
        if (rapply->parsed())
            return cmd_rewire_apply(o);
        if (rmin->parsed())
            return cmd_rewire_minimize(o);
        if (cont->parsed())
            return cmd_continuum(o);
        if (cheeger->parsed())
            return cmd_cheeger(o);
        if (random->parsed())
            return cmd_random(o);
    } catch (const Error& e) {
        return failure(std::string(to_string(e.code())), {e.what()}, e.subject());
    } catch (const std::exception& e) {
        return failure("internal", {e.what()});
    }
    return failure("usage", {"no command given"});
}

/// Prints the result: payload (or raw text) on `out`; diagnostics on `err`.
/// Returns the process exit code.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    const auto r = dispatch(args);
    if (r.status == Status::Ok) {
        if (!r.text.empty())
            out << r.text;
        else
            out << r.payload.dump(2) << "\n";
        for (const auto& d : r.diagnostics)
            err << "note: " << d << "\n";
    } else {
        auto j = r.payload;
        j["status"] = "error";
        j["diagnostics"] = r.diagnostics;
        err << j.dump(2) << "\n";
    }
    return r.exit_code();
}

} // namespace graphsusy::cli
