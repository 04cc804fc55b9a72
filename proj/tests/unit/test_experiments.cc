#include <warmthkit/errors.hh>
#include <warmthkit/experiments.hh>
#include <warmthkit/generators.hh>

#include <gtest/gtest.h>
#include <json.hpp>

#include <algorithm>
#include <set>
#include <sstream>

using namespace warmthkit;

namespace
{
    auto first_line(const std::string & s) -> std::string
    {
        return s.substr(0, s.find('\n'));
    }

    auto line_count(const std::string & s) -> int
    {
        int count = 0;
        for (char c : s)
            count += c == '\n';
        return count;
    }
}

TEST(ReportTest, Grotzsch)
{
    auto r = run_conjecture_check(mycielski(cycle(5)), { "mycielski", "cycle:5", std::nullopt });
    ASSERT_TRUE(r.warmth.has_value());
    EXPECT_EQ(r.warmth->value(), 3);
    ASSERT_TRUE(r.connectivity.has_value());
    EXPECT_EQ(r.connectivity->value, 1);
    EXPECT_EQ(r.chromatic.hi, 4);
    EXPECT_TRUE(r.warmth_vs_hconn == Verdict::consistent || r.warmth_vs_hconn == Verdict::consistent_with_caveat);
    EXPECT_EQ(r.warmth_vs_chi, Verdict::consistent);
    EXPECT_FALSE(r.any_violation());
}

TEST(ReportTest, TwistedToroidalAndKneser)
{
    auto t = run_conjecture_check(twisted_toroidal(1, 5), { "twisted-toroidal", "1,5", std::nullopt });
    ASSERT_TRUE(t.warmth.has_value());
    EXPECT_EQ(t.warmth->value(), 3);
    EXPECT_FALSE(t.any_violation());

    auto k = run_conjecture_check(kneser(6, 2), { "kneser", "6,2", std::nullopt });
    ASSERT_TRUE(k.warmth.has_value());
    EXPECT_EQ(k.warmth->value(), 3);
    ASSERT_TRUE(k.connectivity.has_value());
    EXPECT_EQ(k.connectivity->value, 1);
    EXPECT_FALSE(k.any_violation());
}

TEST(ReportTest, OddCycleHasFreeFirstHomology)
{
    auto r = run_conjecture_check(cycle(7), { "cycle", "7", std::nullopt });
    EXPECT_EQ(r.free_h1, Verdict::consistent);
    EXPECT_EQ(r.warmth->value(), 3);
}

TEST(ReportTest, EdgelessRejected)
{
    EXPECT_THROW(run_conjecture_check(empty_graph(4), {}), InputError);
}

TEST(ReportTest, CsvAndJsonShape)
{
    auto r = run_conjecture_check(complete(4), { "complete", "4", std::nullopt });
    auto header = report_csv_header();
    EXPECT_EQ(header.substr(0, 32), "id,generator,params,seed,n,edges");
    auto row = report_csv_row(r);
    EXPECT_EQ(std::count(header.begin(), header.end(), ','), std::count(row.begin(), row.end(), ','));
    auto j = nlohmann::json::parse(report_json(r));
    EXPECT_EQ(j["schema"], report_schema);
    EXPECT_EQ(j["n"], 4);
}

TEST(CorpusTest, SizeAndDeterminism)
{
    auto a = build_corpus();
    auto b = build_corpus();
    ASSERT_EQ(a.size(), 200u);
    std::set<std::string> names;
    for (std::size_t i = 0 ; i < a.size() ; ++i) {
        EXPECT_GT(a[i].graph.edge_count(), 0) << a[i].name;
        EXPECT_EQ(a[i].graph, b[i].graph);
        names.insert(a[i].name);
    }
    EXPECT_EQ(names.size(), a.size());
}

TEST(SweepTest, ModelsAndSeeds)
{
    EXPECT_EQ(parse_random_model("gnp"), RandomModel::gnp);
    EXPECT_EQ(parse_random_model("chung-lu"), RandomModel::chung_lu);
    EXPECT_THROW(parse_random_model("watts"), InputError);
    EXPECT_EQ(trial_seed(1, 8, 0), trial_seed(1, 8, 0));
    EXPECT_NE(trial_seed(1, 8, 0), trial_seed(1, 8, 1));
    EXPECT_NE(trial_seed(1, 8, 0), trial_seed(1, 9, 0));

    SweepSpec spec;
    spec.model = RandomModel::chung_lu;
    spec.average_degree = 6;
    auto g = sweep_graph(spec, 60, 5);
    EXPECT_EQ(g.size(), 60);
    EXPECT_EQ(g.loop_count(), 0);
    spec.beta = 2;
    EXPECT_THROW(sweep_graph(spec, 60, 5), InputError);
}

TEST(SweepTest, ThreadCountDoesNotChangeOutput)
{
    SweepSpec spec;
    spec.sizes = { 6, 8 };
    spec.trials = 6;
    spec.seed = 3;
    spec.threads = 1;
    auto one = run_random_sweep(spec);
    spec.threads = 3;
    auto three = run_random_sweep(spec);
    EXPECT_EQ(sweep_csv(one), sweep_csv(three));
    EXPECT_EQ(sweep_aggregate_csv(one), sweep_aggregate_csv(three));
    EXPECT_EQ(one.aggregates.size(), 2u);
    EXPECT_EQ(first_line(sweep_csv(one)), "n,trial,trial_seed," + report_csv_header());
    EXPECT_EQ(line_count(sweep_aggregate_csv(one)), 3);
    auto j = nlohmann::json::parse(sweep_json(one));
    EXPECT_EQ(j["schema"], sweep_schema);
}

TEST(SuiteTest, JsonRows)
{
    std::vector<SuiteRow> rows{ { 1, "complete graphs", "title", true, "ok", 0.5, 10 } };
    auto j = nlohmann::json::parse(suite_json(rows));
    ASSERT_TRUE(j.is_array());
    EXPECT_EQ(j.size(), 1u);
    EXPECT_EQ(j[0]["passed"], true);
    EXPECT_EQ(j[0]["location"], "complete graphs");
}
