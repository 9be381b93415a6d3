#include <doctest.h>

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "bandlab/io.hpp"

using namespace bandlab;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("bandlab-io-test-" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("params round-trip through JSON with derived fields recomputed") {
    const ModelParams p = derive_params(0.05, 0.25, 1.5, 0.375, 25.0, 2.0, 0.5,
                                        ModelKind::LimitedCrowd);
    const std::string text = params_to_json(p, ModelKind::LimitedCrowd);
    const auto [q, kind] = params_from_json(text);
    CHECK(kind == ModelKind::LimitedCrowd);
    CHECK(q.tau == p.tau);
    CHECK(q.mu == p.mu);
    CHECK(q.c == p.c);
    CHECK(q.beta == p.beta);
    CHECK(q.gamma0 == p.gamma0);
    CHECK(q.k == p.k);
    CHECK(q.v_inf == p.v_inf);
    CHECK(q.Q1 == doctest::Approx(p.Q1).epsilon(1e-15));
}

TEST_CASE("k and v_inf default to one") {
    const auto [p, kind] = params_from_json(
        R"({"tau":0.05,"mu":0.25,"c":1.5,"beta":0.25,"gamma0":25,"kind":"limited-crowd"})");
    CHECK(kind == ModelKind::LimitedCrowd);
    CHECK(p.k == 1.0);
    CHECK(p.v_inf == 1.0);
}

TEST_CASE("malformed parameter files are reported as errors") {
    CHECK_THROWS_AS(params_from_json("{not json"), Error);
    CHECK_THROWS_AS(params_from_json(R"({"tau":0.05})"), std::exception);
    CHECK_THROWS_AS(
        params_from_json(
            R"({"tau":0.05,"mu":0.25,"c":1.5,"beta":0.25,"gamma0":25,"kind":"nope"})"),
        Error);
    CHECK_THROWS_AS(load_params_file("/nonexistent/params.json"), Error);
}

TEST_CASE("atomic_write leaves no temporary behind") {
    TempDir tmp;
    const fs::path target = tmp.path / "out.txt";
    atomic_write(target, "payload\n");
    REQUIRE(fs::exists(target));
    std::ifstream in(target);
    std::stringstream ss;
    ss << in.rdbuf();
    CHECK(ss.str() == "payload\n");
    CHECK(!fs::exists(target.string() + ".tmp"));
}

TEST_CASE("profile CSV carries the requested columns") {
    const ModelParams p = derive_params(0.05, 0.25, 1.5, 0.25, 20.0, 1.0, 1.0,
                                        ModelKind::LimitedNoCrowd);
    const Profile prof = eval_model4(linspace(-1.0, 1.0, 3), p);

    const std::string plain = profile_to_csv(prof, false, false);
    CHECK(plain.rfind("zeta,u,v\n", 0) == 0);

    const std::string full = profile_to_csv(prof, true, true);
    CHECK(full.rfind("zeta,u,v,u_normalized,v_over_vinf,zeta_scaled\n", 0) == 0);
    std::istringstream lines(full);
    std::string line;
    std::size_t rows = 0;
    while (std::getline(lines, line)) ++rows;
    CHECK(rows == 4);  // header + 3 samples
    // normalization against Q2, zeta scaled by c / mu
    CHECK(full.find(format_double(prof.u[0] / p.Q2)) != std::string::npos);
    CHECK(full.find(format_double(-1.0 * p.c / p.mu)) != std::string::npos);
}

TEST_CASE("trajectory CSV marks each snapshot with its time") {
    const ModelParams p = derive_params(0.05, 0.25, 1.5, 0.25, 20.0, 1.0, 1.0,
                                        ModelKind::LimitedNoCrowd);
    const Grid1D g = make_grid(-10.0, 10.0, 101);
    const FieldState s0 = init_state(g, ModelKind::LimitedNoCrowd, p);
    FieldState s1 = s0;
    s1.t = 0.25;
    const std::string csv = trajectory_to_csv({s0, s1});
    CHECK(csv.find("# t=0\n") != std::string::npos);
    CHECK(csv.find("# t=0.25\n") != std::string::npos);

    const std::string json = trajectory_to_json({s0, s1}, "pde");
    CHECK(json.find("\"engine\": \"pde\"") != std::string::npos);
    CHECK(json.find("\"snapshots\"") != std::string::npos);
}

TEST_CASE("normalization_for picks the kind's plateau constant") {
    const ModelParams p = derive_params(0.05, 0.375, 1.5, 0.375, 25.0, 1.0, 2.0,
                                        ModelKind::UnlimitedNoCrowd);
    CHECK(normalization_for(ModelKind::UnlimitedNoCrowd, p) == p.Q);
    CHECK(normalization_for(ModelKind::UnlimitedCrowd, p) == p.Q);
    CHECK(normalization_for(ModelKind::LimitedCrowd, p) == p.Q1);
    CHECK(normalization_for(ModelKind::LimitedNoCrowd, p) == p.Q2);
}

TEST_CASE("format_double is stable at full precision") {
    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(-2.5e-7) == "-2.4999999999999999e-07");
}
