#include <gtest/gtest.h>

#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct result
{
    int status;
    std::string out;
    std::string err;
};

result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "isogsum");
    std::vector<char const *> argv;
    for (auto const & a : args)
        argv.push_back(a.c_str());
    std::ostringstream out, err;
    int const status = isogsum::cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
    return { status, out.str(), err.str() };
}

std::vector<std::string> lines(std::string const & text)
{
    std::vector<std::string> out;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);)
        out.push_back(line);
    return out;
}

} // namespace

TEST(Cli, MainTsvPairTwoMinusOne)
{
    auto const r = run({ "main", "--a", "2", "--b", "-1", "--primes", "5..200", "--format", "tsv" });
    ASSERT_EQ(r.status, 0) << r.err;
    auto const ls = lines(r.out);
    ASSERT_GE(ls.size(), 3u);
    EXPECT_EQ(ls[1], "p\ta\tb\tS\tquotient\thstar\terror\tdivisible\tidentity");
    std::size_t rows = 0;
    for (auto const & l : ls) {
        if (l.empty() || l[0] == '#' || l[0] == 'p')
            continue;
        std::istringstream is(l);
        long p, a, b, S, q, h, e, d, id;
        is >> p >> a >> b >> S >> q >> h >> e >> d >> id;
        EXPECT_EQ(e, 0);
        EXPECT_EQ(q, h);
        EXPECT_EQ(d, 1);
        EXPECT_EQ(id, 1);
        ++rows;
    }
    EXPECT_EQ(rows, 44u);   // primes in [5, 200]
    EXPECT_EQ(ls.back(), "# rows=44 passed=44 failed=0 skipped=0");
    EXPECT_EQ(r.out.find('\r'), std::string::npos);
}

TEST(Cli, OutputIndependentOfWorkerCount)
{
    auto const one = run({ "all", "--primes", "5..300", "--format", "tsv", "--workers", "1" });
    auto const four = run({ "all", "--primes", "5..300", "--format", "tsv", "--workers", "4" });
    ASSERT_EQ(one.status, 0);
    EXPECT_EQ(one.out, four.out);
}

TEST(Cli, CmMinusTwoAtEleven)
{
    auto const r = run({ "cm", "--case", "-2", "--primes", "5..11", "--format", "tsv", "--show-points" });
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_NE(r.out.find("E(F_p) = {inf, (7,4), (7,7), (8,2), (8,9), (9,0)}"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("phi(E(F_p)) = {inf, (7,4), (7,7)}"), std::string::npos);
    EXPECT_NE(r.out.find("\n11\t2\t6\t-11\t1\t1\t0\t1\t1\n"), std::string::npos) << r.out;
    EXPECT_NE(r.out.find("skipped=2"), std::string::npos);
}

TEST(Cli, SearchPrintsModulusAndClasses)
{
    auto const r = run({ "search", "--a", "7", "--b", "2" });
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(lines(r.out).front(), "mod 120: 7 13 37 53 77 103");
    EXPECT_NE(r.out.find("excluded p=5"), std::string::npos);
}

TEST(Cli, RationalParameters)
{
    auto const r = run({ "main", "--a", "0", "--b", "-1/4", "--primes", "5..60", "--strict" });
    EXPECT_EQ(r.status, 0) << r.out << r.err;
}

TEST(Cli, LemmaAllK)
{
    auto const r = run({ "lemma", "--primes", "5..13", "--format", "tsv", "--strict" });
    EXPECT_EQ(r.status, 0);
    EXPECT_NE(r.out.find("# rows=32 passed=32 failed=0"), std::string::npos) << r.out;
}

TEST(Cli, UsageErrors)
{
    std::vector<std::vector<std::string>> const bad {
        {},
        { "main", "--case", "-2", "--a", "1", "--b", "1" },
        { "cm" },
        { "cm", "--case", "-3" },
        { "main", "--a", "2" },
        { "main", "--a", "2", "--b", "-1", "--primes", "3..10" },
        { "main", "--a", "2", "--b", "-1", "--primes", "20..10" },
        { "dirichlet", "--workers", "0" },
        { "dirichlet", "--k", "2" },
        { "dirichlet", "--format", "csv" },
        { "main", "--a", "x", "--b", "1" },
        { "main", "--a", "1/0", "--b", "1" },
        { "search", "--a", "1/2", "--b", "1" },
        { "bogus" },
    };
    for (auto const & args : bad) {
        auto const r = run(args);
        EXPECT_EQ(r.status, isogsum::cli::exit_usage) << (args.empty() ? "" : args[0]);
        EXPECT_NE(r.err.find("Usage"), std::string::npos);
    }
}

TEST(Cli, StrictPassesWhenEveryIdentityHolds)
{
    auto const r = run({ "cm", "--case", "-7", "--primes", "5..100", "--strict" });
    EXPECT_EQ(r.status, 0);
}
