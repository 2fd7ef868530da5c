#include <gtest/gtest.h>

#include <random>

#include "support.hpp"
#include "symtangle/harmonics.hpp"
#include "symtangle/serialize.hpp"

using namespace symtangle;
using namespace symtangle::testing;

TEST(StateJson, ExactRoundTrip) {
    for (const std::string &name : registry_names()) {
        const ExactState s = named_state(name).state;
        const StateSource back = state_from_json(Json::parse(state_to_json(s).dump()));
        ASSERT_TRUE(back.exact.has_value()) << name;
        EXPECT_EQ(*back.exact, s) << name;
    }
}

TEST(StateJson, FloatRoundTripIsBitExact) {
    std::mt19937_64 rng(41);
    const FloatState s = random_state(3, rng);
    const StateSource back = state_from_json(Json::parse(state_to_json(s).dump()));
    EXPECT_FALSE(back.exact.has_value());
    for (Ket k = 0; k < s.dim(); ++k) {
        EXPECT_EQ(back.approx.amp(k), s.amp(k));
    }
}

TEST(StateJson, RationalAmplitudesAreScaled) {
    const Json j = Json::parse(R"({"n": 2, "terms": [{"ket": "01", "re": "1/2"}, {"ket": "10", "re": "-1/3"}]})");
    const StateSource s = state_from_json(j);
    ASSERT_TRUE(s.exact.has_value());
    EXPECT_EQ(*s.exact, kets({{"01", 3}, {"10", -2}}));
}

TEST(StateJson, RejectsMalformedInput) {
    EXPECT_THROW(state_from_json(Json::parse(R"({"n": 2, "terms": [{"ket": "01", "re": 0}]})")),
                 std::invalid_argument);
    EXPECT_THROW(state_from_json(Json::parse(R"({"n": 2, "terms": [{"ket": "011", "re": 1}]})")),
                 std::invalid_argument);
    EXPECT_THROW(state_from_json(Json::parse(R"({"terms": []})")), std::invalid_argument);
    EXPECT_THROW(state_from_json(Json::parse(R"({"n": 2, "terms": [{"ket": "01", "re": 1}], "norm2": 2})")),
                 std::invalid_argument);
    EXPECT_THROW(state_from_json(Json::parse(R"({"n": 2, "terms": [{"ket": "01", "re": "x"}]})")),
                 std::invalid_argument);
}

TEST(Text, KetExpansionInDisplayOrder) {
    EXPECT_EQ(ket_expansion(kets({{"001", 2}, {"100", -1}, {"010", -1}})), "-|100> - |010> + 2|001>");
    EXPECT_EQ(ket_expansion(named_state("W3+").state), "|110> + |101> + |100> + |011> + |010> + |001>");
}

TEST(Text, ComplexNumbers) {
    EXPECT_EQ(format_complex(GaussRational(Rational(1, 6), Rational(-1, 2))), "1/6-1/2j");
    EXPECT_EQ(parse_exact_complex("1/6-1/2j"), GaussRational(Rational(1, 6), Rational(-1, 2)));
    EXPECT_FALSE(parse_exact_complex("0.25+0j").has_value());
    EXPECT_EQ(parse_complex("0.25-1.5j"), Complex(0.25, -1.5));
    EXPECT_EQ(parse_complex(format_complex(Complex(0.1, 1e-17))), Complex(0.1, 1e-17));
    EXPECT_THROW(parse_complex("abc"), std::invalid_argument);
    EXPECT_EQ(format_double(0.1), "0.10000000000000001");
}

TEST(Text, Surds) {
    EXPECT_EQ(surd_text(Rational(5, 9)), "sqrt(5)/3");
    EXPECT_EQ(surd_text(Rational(8, 9)), "2sqrt(2)/3");
    EXPECT_EQ(surd_text(Rational(3, 4)), "sqrt(3)/2");
    EXPECT_EQ(surd_text(Rational(11, 36)), "sqrt(11)/6");
    EXPECT_EQ(surd_text(Rational(1)), "1");
    EXPECT_EQ(surd_text(Rational(0)), "0");
}

TEST(MatrixDump, ExactRoundTrips) {
    const DensityMatrix rho = density_from_pure(named_state("U3-").state);
    const DensityMatrix t = matrix_from_tsv(3, matrix_to_tsv(rho));
    ASSERT_TRUE(t.is_exact());
    EXPECT_EQ(*t.exact(), *rho.exact());
    const DensityMatrix j = matrix_from_json(Json::parse(matrix_to_json(rho).dump()));
    EXPECT_EQ(*j.exact(), *rho.exact());
    const Json dumped = matrix_to_json(rho);
    EXPECT_EQ(dumped["order"], "display");
    EXPECT_EQ(dumped["rows"].size(), 8u);
}

TEST(MatrixDump, FloatRoundTrip) {
    std::mt19937_64 rng(43);
    const DensityMatrix rho = density_from_pure(random_state(2, rng));
    const DensityMatrix t = matrix_from_tsv(2, matrix_to_tsv(rho));
    EXPECT_EQ(max_abs_diff(t.values(), rho.values()), 0.0);
    EXPECT_THROW(matrix_from_tsv(2, "1+0j\t0+0j\n"), std::invalid_argument);
}

TEST(MatrixDump, DisplayOrderPutsAllOnesFirst) {
    const DensityMatrix rho = density_from_pure(kets({{"11", 1}}));
    const std::string tsv = matrix_to_tsv(rho);
    EXPECT_EQ(tsv.substr(0, tsv.find('\t')), "1+0j");
}

TEST(Listing, HeaderAndRows) {
    const std::string tsv = listing_to_tsv(symmetric_basis(2));
    EXPECT_EQ(tsv.substr(0, tsv.find('\n')), "label\tn\tlambda\tt\ttableau\tname\tJ\tm_J\texpansion");
    const Json j = listing_to_json(harmonic_basis(3));
    ASSERT_EQ(j.size(), 8u);
    EXPECT_EQ(j[4]["name"], "D1+");
    EXPECT_EQ(j[4]["label"], "|3,2,1>");
}

TEST(Report, StableFieldNames) {
    const Json r = report_to_json(analyze(PureInput::from(named_state("W3+").state), "W3+"));
    for (const char *key : {"id", "n", "is_pure", "splits", "concurrence_pairs", "concurrence_single", "e_tau",
                            "classification"}) {
        EXPECT_TRUE(r.contains(key)) << key;
    }
    const std::string table = report_to_table_tsv(analyze(PureInput::from(named_state("C2+").state), "C2+"));
    EXPECT_NE(table.find("ab"), std::string::npos);
}
