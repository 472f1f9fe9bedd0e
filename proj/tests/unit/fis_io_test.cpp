#include <gtest/gtest.h>

#include "vanet/fuzzy/fis_io.hpp"

using namespace vanet::fuzzy;

TEST(FisIo, ShippedFileMatchesBuiltInDefinition) {
    const auto parsed = load_fis(std::string(VANET_SOURCE_DIR) + "/data/f802_11p.fis");
    EXPECT_EQ(parsed, default_gate_definition());
}

TEST(FisIo, FormatParseRoundTrip) {
    auto def = default_gate_definition();
    def.normalize_inputs = true;
    def.centroid_resolution = 777;
    def.inputs[1].terms[0].mf = MembershipFunction::ramp_up(0.0, 0.4);
    EXPECT_EQ(parse_fis(format_fis(def)), def);
}

TEST(FisIo, RuleSyntax) {
    const auto def = default_gate_definition();
    EXPECT_EQ(format_rule(def, def.rules[5]), "rule R6 = if S is Fa and SG is M and RG is E then F is VG");
}

TEST(FisIo, RuleOrderInsideAntecedentIsFree) {
    std::string text = format_fis(default_gate_definition());
    const std::string r1 = "rule R1 = if S is R and SG is M and RG is M then F is B";
    text.replace(text.find(r1), r1.size(), "rule R1 = if RG is M and S is R and SG is M then F is B");
    EXPECT_EQ(parse_fis(text), default_gate_definition());
}

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_fis(text, "t.fis");
    } catch (const FisParseError& e) {
        return e.line();
    }
    return 0;
}

}  // namespace

TEST(FisIo, ErrorsNameTheLine) {
    const std::string base = format_fis(default_gate_definition());
    auto with = [&](const std::string& from, const std::string& to) {
        std::string t = base;
        t.replace(t.find(from), from.size(), to);
        return t;
    };
    const auto line_of = [&](const std::string& needle) {
        const auto pos = base.find(needle);
        return static_cast<std::size_t>(std::count(base.begin(), base.begin() + pos, '\n') + 1);
    };
    EXPECT_EQ(error_line(with("term M = triangle 5", "term M = triangle 50")), line_of("term M = triangle 5"));
    EXPECT_EQ(error_line(with("then F is VG", "then F is Great")), line_of("rule R6"));
    EXPECT_EQ(error_line(with("and SG is M and RG is E", "and SG is M")), line_of("rule R6"));
    EXPECT_EQ(error_line(with("type = mamdani", "type = sugeno")), line_of("type = mamdani"));
    EXPECT_EQ(error_line(with("range = 0 87.1", "range = 0 x")), line_of("range = 0 87.1"));
    EXPECT_THROW(load_fis("/nonexistent/gate.fis"), FisError);
}
