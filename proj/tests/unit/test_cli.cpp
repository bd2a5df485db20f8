#include "support.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include "graphsusy/cli.hpp"

using namespace graphsusy;
using cli::dispatch;
using cli::Status;

namespace {

std::string graph_file(const std::string& name) { return std::string(GRAPHS_DIR) + "/" + name; }

Json ok(const std::vector<std::string>& args)
{
    const auto r = dispatch(args);
    INFO(r.payload.dump());
    for (const auto& d : r.diagnostics)
        INFO(d);
    REQUIRE(r.status == Status::Ok);
    return r.payload;
}

std::string run_text(const std::vector<std::string>& args, int& code)
{
    std::ostringstream out, err;
    code = cli::run(args, out, err);
    return out.str();
}

} // namespace

TEST_CASE("witten command")
{
    const auto p = ok({"witten", graph_file("c6.json")});
    CHECK(p["schema"] == "graphsusy.witten/1");
    CHECK(p["witten"] == 0);
    CHECK(p["routes"]["euler"] == 0);
    CHECK(p["routes"]["topological"] == 0);
    CHECK(p["routes"]["kernel"] == 0);
    CHECK(p["routes"]["trace"]["rounded"] == 0);
    CHECK(p["routes"]["trace"]["drift"].get<double>() < 1e-8);

    const auto q = ok({"--beta", "0.1,3", "witten", graph_file("triangle_pendant.json")});
    CHECK(q["witten"] == 1);
    CHECK(q["routes"]["trace"]["betas"].size() == 2);
}

TEST_CASE("spectrum command")
{
    const auto p = ok({"spectrum", graph_file("triangle.json"), "--operator", "susy"});
    const std::vector<double> want{0, 0, 3, 3, 3, 3};
    REQUIRE(p["eigenvalues"].size() == want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        CHECK(std::abs(p["eigenvalues"][i].get<double>() - want[i]) < 1e-9);
    CHECK(p["kernel_dim"] == 2);

    const auto d = ok({"spectrum", graph_file("triangle.json"), "--operator", "dirac"});
    CHECK(d["kernel_dim"] == 2);
    const auto e = ok({"spectrum", graph_file("p2.json")});
    CHECK(std::abs(e["fiedler"].get<double>() - 2.0) < 1e-9);
    CHECK(dispatch({"spectrum", graph_file("p2.json"), "--operator", "weird"}).status == Status::Error);
}

TEST_CASE("rewire commands")
{
    const auto k4 = ok({"rewire", "enumerate", graph_file("k4.json")});
    CHECK(k4["structural_moves"] == 0);
    CHECK(k4["orientation_moves"] == 6);
    CHECK(k4["witten_invariant"] == true);

    const auto tp = ok({"rewire", "enumerate", graph_file("triangle_pendant.json"), "--dedup-iso"});
    CHECK(tp["deduplicated"] == true);

    const auto applied = ok({"rewire", "apply", graph_file("triangle_pendant.json"), "--edge", "e3", "--endpoint",
                             "tail", "--to", "v4"});
    CHECK(applied["schema"] == "graphsusy.graph/1");
    const auto g = graph_from_json(applied);
    CHECK(is_connected(g));
    CHECK(cycle_rank(g) == 0);

    const auto illegal = dispatch({"rewire", "apply", graph_file("triangle.json"), "--edge", "e1", "--endpoint",
                                   "head", "--to", "v3"});
    CHECK(illegal.status == Status::Error);
    CHECK(illegal.payload["code"] == std::string(to_string(ErrorCode::IllegalMove)));

    const auto min = ok({"rewire", "minimize", graph_file("disjoint_triangles.json")});
    CHECK(min["steps"].size() == 1);
    CHECK(min["final_vacuum"]["n_bosonic_zero"] == 1);

    int code = 0;
    const auto csv = run_text({"--csv", "rewire", "enumerate", graph_file("p2.json")}, code);
    CHECK(code == 0);
    CHECK(csv == "edge,endpoint,to,orientation_only,witten,d_components,d_cycles\ne1,tail,v2,1,1,0,0\n");
}

TEST_CASE("continuum CSV")
{
    int code = 0;
    const auto csv = run_text({"--csv", "continuum", "--n", "10,100", "--modes", "2"}, code);
    CHECK(code == 0);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "n,k,scaled_eigenvalue,closed_form,target,relative_error,taylor_bound");
    std::size_t rows = 0;
    while (std::getline(in, line))
        ++rows;
    CHECK(rows == 6);
}

TEST_CASE("other commands")
{
    CHECK(ok({"info", graph_file("paw.txt")})["schema"] == "graphsusy.info/1");
    CHECK(ok({"operators", graph_file("p2.json"), "--operator", "q2"}).dump().find("imaginary") != std::string::npos);
    CHECK(ok({"steady", graph_file("c6.json"), "--sector", "edge"})["schema"] == "graphsusy.steady/1");
    CHECK(ok({"vacuum", graph_file("null.json")})["broken"] == true);
    CHECK(ok({"dirac", graph_file("triangle.json"), "--simplex", "v1"}).dump().find("true") != std::string::npos);
    CHECK(ok({"walksum", graph_file("triangle.json"), "--from", "v1", "--to", "v2", "--oracle"})["within_bound"] == true);
    CHECK(ok({"oracle", graph_file("triangle.json"), "--k", "4"})["schema"] == "graphsusy.oracle/1");
    CHECK(ok({"morse", "critical", graph_file("c6.json"), "--seed", "3"})["schema"] == "graphsusy.morse.critical/1");
    CHECK(ok({"cheeger", graph_file("triangle.json")})["schema"] == "graphsusy.cheeger/1");
    CHECK(ok({"random", "--vertices", "5", "--seed", "9"})["vertices"].size() == 5);

    const auto state = std::filesystem::temp_directory_path() / "graphsusy_test_state.json";
    {
        std::ofstream f(state);
        f << R"({"sector": "vertex", "re": [1, 0], "im": [0, 0]})";
    }
    const auto ev = ok({"evolve", graph_file("p2.json"), "--state", state.string(), "--t", "0.3"});
    CHECK(std::abs(ev["norm_after"].get<double>() - 1.0) < 1e-12);
    std::filesystem::remove(state);
}

TEST_CASE("failures exit nonzero")
{
    int code = 0;
    run_text({"frobnicate"}, code);
    CHECK(code == 1);
    run_text({"witten", graph_file("missing.json")}, code);
    CHECK(code == 1);
    run_text({"walksum", graph_file("triangle.json"), "--from", "v1"}, code);
    CHECK(code == 1);
    run_text({"--json", "--csv", "witten", graph_file("c6.json")}, code);
    CHECK(code == 1);

    const auto r = dispatch({"witten", graph_file("missing.json")});
    CHECK(r.payload["code"] == std::string(to_string(ErrorCode::MalformedInput)));
    CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("help and determinism")
{
    int code = 1;
    const auto help = run_text({"--help"}, code);
    CHECK(code == 0);
    CHECK(help.find("witten") != std::string::npos);

    for (const auto& args : std::vector<std::vector<std::string>>{
             {"spectrum", graph_file("bottleneck.json"), "--operator", "susy"},
             {"morse", "check", graph_file("k4.json"), "--seed", "5"},
             {"random", "--seed", "11"}}) {
        int c1 = 0, c2 = 0;
        CHECK(run_text(args, c1) == run_text(args, c2));
        CHECK(c1 == c2);
    }
}
