#include "cli.hh"

#include <sgon/morphism.hh>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

auto run(std::vector<std::string> args) -> Outcome
{
    std::ostringstream out, err;
    int code = sgon::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

auto data(const std::string & name) -> std::string
{
    return std::string(SGON_TEST_DATA) + "/" + name;
}

auto slurp(const fs::path & path) -> std::string
{
    std::ifstream in(path);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

class Cli : public ::testing::Test {
protected:
    void SetUp() override
    {
        _dir = fs::temp_directory_path() / ("sgon_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) + "_"
            + ::testing::UnitTest::GetInstance()->current_test_info()->name());
        fs::create_directories(_dir);
    }
    void TearDown() override { fs::remove_all(_dir); }

    auto scratch(const std::string & name) const -> std::string { return (_dir / name).string(); }

    fs::path _dir;
};

} // namespace

TEST_F(Cli, ComputeCycle)
{
    auto r = run({"compute", data("c6.mgf")});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "sgon = 2\n");
    EXPECT_EQ(r.err, "");
}

TEST_F(Cli, DecideCompleteGraph)
{
    auto no = run({"compute", data("k4.mgf"), "--decide", "2"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "no\n");
    auto yes = run({"compute", data("k4.mgf"), "--decide", "3"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "yes\n");
}

TEST_F(Cli, CertificateRoundTrip)
{
    auto cert = scratch("w.cert");
    auto r = run({"compute", data("tree.mgf"), "--certificate", cert});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 9), "sgon = 1\n");
    auto v = run({"verify", data("tree.mgf"), cert});
    EXPECT_EQ(v.code, 0);
    EXPECT_EQ(v.out, "valid degree=1\n");
}

TEST_F(Cli, ReducedCertificateIsLabelled)
{
    auto cert = scratch("c6.cert");
    auto r = run({"compute", data("c6.mgf"), "--certificate", cert});
    EXPECT_EQ(r.out, "sgon = 2\ngraph: reduced\n");
    EXPECT_NE(slurp(cert).find("graph reduced"), std::string::npos);
    EXPECT_EQ(run({"verify", data("c6.mgf"), cert}).out, "valid degree=2\n");

    auto plain = scratch("c6-plain.cert");
    auto unreduced = run({"compute", data("c6.mgf"), "--no-reduce", "--certificate", plain});
    EXPECT_EQ(unreduced.out, "sgon = 2\n");
    EXPECT_EQ(run({"verify", data("c6.mgf"), plain}).out, "valid degree=2\n");
}

TEST_F(Cli, VerifyRejections)
{
    auto cert = scratch("k4.cert");
    ASSERT_EQ(run({"compute", data("k4.mgf"), "--certificate", cert}).code, 0);

    auto text = slurp(cert);
    auto he = text.find("\nhe ");
    ASSERT_NE(he, std::string::npos);
    std::istringstream line(text.substr(he + 1, text.find('\n', he + 1) - he - 1));
    std::string tag, u, v, index;
    line >> tag >> u >> v >> index;
    auto index_pos = he + 1 + tag.size() + u.size() + v.size() + 3;
    auto zeroed = text;
    zeroed.replace(index_pos, index.size(), "0");
    std::ofstream(scratch("zero.cert")) << zeroed;

    auto bad = run({"verify", data("k4.mgf"), scratch("zero.cert")});
    EXPECT_EQ(bad.code, 1);
    EXPECT_EQ(bad.out, "invalid: index must be ≥ 1\n");

    auto wrong = run({"verify", data("b4.mgf"), cert});
    EXPECT_EQ(wrong.code, 1);
    EXPECT_EQ(wrong.out, "invalid: refinement does not restore base graph\n");
}

TEST_F(Cli, Bounds)
{
    EXPECT_EQ(run({"bounds", data("b4.mgf")}).out, "lower=2 upper=3\n");
    EXPECT_EQ(run({"bounds", data("tree.mgf")}).out, "lower=1 upper=1\n");
    EXPECT_EQ(run({"bounds", data("k4.mgf")}).out, "lower=2 upper=3\n");
}

TEST_F(Cli, Reduce3dmAndFixedPair)
{
    auto prefix = scratch("gadget");
    auto r = run({"reduce3dm", data("yes.3dm"), prefix});
    EXPECT_EQ(r.code, 0);
    auto mgf = slurp(prefix + ".mgf");
    EXPECT_EQ(mgf.substr(0, 7), "mgf 16\n");
    EXPECT_NE(slurp(prefix + ".tf").find("target 6\n"), std::string::npos);

    auto yes = run({"compute", prefix + ".mgf", "--fixed-tf", prefix + ".tf"});
    EXPECT_EQ(yes.code, 0);
    EXPECT_EQ(yes.out, "yes\n");

    auto no_prefix = scratch("nogadget");
    ASSERT_EQ(run({"reduce3dm", data("no.3dm"), no_prefix}).code, 0);
    auto no = run({"compute", no_prefix + ".mgf", "--fixed-tf", no_prefix + ".tf"});
    EXPECT_EQ(no.code, 1);
    EXPECT_EQ(no.out, "no\n");
}

TEST_F(Cli, Reduce3dmRejectsDuplicates)
{
    auto r = run({"reduce3dm", data("duplicate.3dm"), scratch("dup")});
    EXPECT_EQ(r.code, 2);
    EXPECT_NE(r.err.find("duplicate triple"), std::string::npos);
}

TEST_F(Cli, EnumerateStats)
{
    auto r = run({"enumerate-stats", data("k4.mgf"), "--enumerate"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("k=1 trees=1 partitions=1"), std::string::npos);
    EXPECT_NE(r.out.find("k=4 trees=16 partitions=1 pairs=16 enumerated=16"), std::string::npos);
    EXPECT_NE(r.out.find("total=42 bound="), std::string::npos);
}

TEST_F(Cli, InputErrors)
{
    EXPECT_EQ(run({"compute", data("disconnected.mgf")}).code, 2);
    EXPECT_EQ(run({"compute", data("missing.mgf")}).code, 2);
    EXPECT_EQ(run({"compute"}).code, 2);
    EXPECT_EQ(run({"frobnicate"}).code, 2);
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"compute", data("c6.mgf"), "--threads", "0"}).code, 2);

    std::ofstream(scratch("bad.mgf")) << "mgf 2\ne 0 3\n";
    auto bad = run({"compute", scratch("bad.mgf")});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("line 2: vertex id 3 out of range"), std::string::npos);
}

TEST_F(Cli, StatsAndOptions)
{
    auto r = run({"compute", data("k4.mgf"), "--no-prune", "--threads", "2", "--stats"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out.substr(0, 9), "sgon = 3\n");
    EXPECT_NE(r.out.find("tuples_examined=30618"), std::string::npos);
    EXPECT_NE(r.out.find("wall_time="), std::string::npos);

    auto capped = run({"compute", data("b4.mgf"), "--no-reduce", "--max-index", "1"});
    EXPECT_EQ(capped.out, "sgon = 2\n");
}
