#include <gtest/gtest.h>

#include <map>

#include "symtangle/tables.hpp"

using namespace symtangle;

namespace {

const VerifyReport &clean_report() {
    static const VerifyReport r = verify_tables({});
    return r;
}

}  // namespace

TEST(Verify, CleanRunPasses) {
    const VerifyReport &r = clean_report();
    EXPECT_EQ(r.exit_code(), 0);
    EXPECT_TRUE(r.failures().empty());
    for (const CellResult &c : r.cells) {
        if (!c.match) {
            EXPECT_NE(c.status, CellStatus::Normal) << c.id;
            EXPECT_FALSE(c.note.empty()) << c.id;
        }
    }
}

TEST(Verify, SetSizes) {
    std::map<std::string, std::pair<int, int>> expected{
        {"I", {14, 62}}, {"II", {22, 368}}, {"III", {16, 82}}, {"IV", {16, 423}}, {"V", {17, 179}}};
    const VerifyReport &r = clean_report();
    ASSERT_EQ(r.sets.size(), 5u);
    for (const SetSummary &s : r.sets) {
        EXPECT_EQ(s.rows, expected[s.set].first) << s.set;
        EXPECT_EQ(s.cells, expected[s.set].second) << s.set;
        EXPECT_EQ(s.mismatches, 0) << s.set;
    }
}

TEST(Verify, KnownCellsMatch) {
    std::map<std::string, const CellResult *> by_id;
    for (const CellResult &c : clean_report().cells) {
        by_id[c.id] = &c;
    }
    for (const char *id : {"II/W3+/a/tr_rhoI2", "II/Psi3+/tau3", "V/R/C_ac", "V/R/C_ab", "IV/C2+/c/det_rhoI_TJ",
                           "I/F+/compat", "III/C2+/J"}) {
        ASSERT_TRUE(by_id.count(id)) << id;
    }
    EXPECT_TRUE(by_id["II/W3+/a/tr_rhoI2"]->match);
    EXPECT_EQ(by_id["II/W3+/a/tr_rhoI2"]->computed, "13/18");
    EXPECT_TRUE(by_id["V/R/C_ac"]->match);
    EXPECT_EQ(by_id["I/F+/compat"]->status, CellStatus::Advisory);
    EXPECT_EQ(by_id["II/Phi+/a/det_rhoT"]->status, CellStatus::Erratum);
}

TEST(Verify, InjectedFaultFails) {
    VerifyOptions opt;
    opt.sets = {"II"};
    opt.inject_fault = "II/W3+/a/tr_rhoI2";
    const VerifyReport r = verify_tables(opt);
    EXPECT_EQ(r.exit_code(), 1);
    ASSERT_EQ(r.failures().size(), 1u);
    EXPECT_EQ(r.failures()[0]->id, "II/W3+/a/tr_rhoI2");
    EXPECT_EQ(r.failures()[0]->computed, "-13/18");

    opt.sets = {"V"};
    opt.inject_fault = "V/R/separable_ac";
    EXPECT_EQ(verify_tables(opt).exit_code(), 1);
}

TEST(Verify, StrictCountsErrata) {
    VerifyOptions opt;
    opt.sets = {"IV"};
    opt.strict = true;
    EXPECT_EQ(verify_tables(opt).exit_code(), 1);
    opt.sets = {"V"};
    EXPECT_EQ(verify_tables(opt).exit_code(), 0);
}

TEST(Verify, RejectsUnknownNames) {
    VerifyOptions opt;
    opt.sets = {"VI"};
    EXPECT_THROW(verify_tables(opt), std::invalid_argument);
    opt.sets = {"I"};
    opt.inject_fault = "I/nope/J";
    EXPECT_THROW(verify_tables(opt), std::invalid_argument);
}

TEST(Verify, TextAndJson) {
    VerifyOptions opt;
    opt.sets = {"I"};
    const VerifyReport r = verify_tables(opt);
    EXPECT_NE(r.text().find("PASS"), std::string::npos);
    const auto j = r.json();
    EXPECT_TRUE(j["pass"].get<bool>());
    EXPECT_EQ(j["cells"].size(), 62u);
}
