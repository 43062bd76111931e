#include "secgame/io.hpp"
#include "secgame/model.hpp"
#include "secgame/oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using namespace secgame;
using namespace secgame::testing;

namespace {

const char* kGoldenDoc = R"({"m": 4, "k_a": 3, "k_d": 2, "targets": [
  {"uac": "2/3", "uau": "8/7", "udc": "-1", "udu": "-8/5"},
  {"uac": "4/5", "uau": "6/5", "udc": "-2", "udu": "-2.7"},
  {"uac": "0.5", "uau": "4/3", "udc": "-3", "udu": "-39/10"},
  {"uac": "3/4", "uau": "2", "udc": "-4", "udu": "-4.8"}]})";

bool has_code(const ValidationReport& r, const std::string& code)
{
    for (const auto& v : r.violations)
        if (v.code == code) return true;
    return false;
}

}   // namespace

TEST(Rational, ParsesDecimalsAndFractionsExactly)
{
    EXPECT_EQ(parse_rational("0.7"), q(7, 10));
    EXPECT_EQ(parse_rational("-27/10"), q(-27, 10));
    EXPECT_EQ(parse_rational("+3"), q(3));
    EXPECT_EQ(parse_rational(" 6/4 "), q(3, 2));
    EXPECT_EQ(parse_rational(".25"), q(1, 4));
    EXPECT_EQ(format_rational(q(-6, 4)), "-3/2");
    EXPECT_EQ(format_rational(q(5)), "5");
}

TEST(Rational, RejectsMalformedNumerals)
{
    for (const char* bad : {"", "1/0", "abc", "1.", "1e3", "--1", "1/2/3", "nan", "inf", "1/-2"})
        EXPECT_THROW(parse_rational(bad), InputError) << bad;
}

TEST(Model, ParsesGoldenGameDocument)
{
    SecurityGame g = parse_game(kGoldenDoc);
    EXPECT_EQ(g.delta_a(), vec({q(10, 21), q(2, 5), q(5, 6), q(5, 4)}));
    EXPECT_EQ(g.delta_d(), vec({q(3, 5), q(7, 10), q(9, 10), q(4, 5)}));
    EXPECT_TRUE(validate(g).ok());
}

TEST(Model, SerializationRoundTrips)
{
    SecurityGame g = golden_game();
    SecurityGame h = parse_game(serialize_game(g));
    EXPECT_EQ(h.uac, g.uac);
    EXPECT_EQ(h.uau, g.uau);
    EXPECT_EQ(h.udc, g.udc);
    EXPECT_EQ(h.udu, g.udu);
    EXPECT_EQ(serialize_game(h), serialize_game(g));
}

TEST(Model, ReportsNonPositiveAttackerDelta)
{
    SecurityGame g = golden_game();
    g.uac(0) = g.uau(0);
    ValidationReport r = validate(g);
    EXPECT_FALSE(r.ok());
    EXPECT_NE(r.summary().find("delta_a(1) must be positive"), std::string::npos);
}

TEST(Model, ReportsResourceBounds)
{
    SecurityGame g = golden_game();
    g.k_a = 4;
    EXPECT_NE(validate(g).summary().find("k_a < m required"), std::string::npos);
}

TEST(Model, ReportsDistinctnessWithTargets)
{
    SecurityGame g = golden_game();
    g.uau(1) = g.uau(0);
    g.uac(1) = q(1, 10);
    ValidationReport r = validate(g);
    ASSERT_TRUE(has_code(r, "distinctness"));
    for (const auto& v : r.violations)
        if (v.code == "distinctness") {
            EXPECT_EQ(v.targets, (std::vector<int>{1, 2}));
            EXPECT_NE(v.message.find("distinctness assumption violated"), std::string::npos);
        }
    EXPECT_TRUE(validate(g, {.require_distinct = false}).ok());
}

TEST(Model, DuplicatedDefenderDeltaIsRejected)
{
    SecurityGame g = golden_game();
    g.udu(1) = g.udc(1) - g.delta_d(0);
    EXPECT_TRUE(has_code(validate(g), "distinctness"));
}

TEST(Model, PermissiveSignsAdmitProtectiveGames)
{
    SecurityGame g = protective_game(protective_lb_uau());
    EXPECT_TRUE(has_code(validate(g), "sign"));
    EXPECT_TRUE(validate(g, {true, SignMode::permissive}).ok());
    EXPECT_TRUE(is_fully_protective(g));
}

TEST(Model, ExpectedOutcomesOnExamples)
{
    SecurityGame g = golden_game();
    MarginalProfile p{vec({q(252, 275), q(216, 275), q(168, 275), q(189, 275)}), vec({q(3, 10), q(1, 2), q(2, 5), q(4, 5)})};
    EXPECT_EQ(expected_outcomes(g, p), (Outcomes{q(3), q(-11232, 1375)}));

    SecurityGame two = make_game(1, 1, {q(1), q(2)}, {q(5), q(6)}, {q(-1), q(-2)}, {q(-7), q(-9)});
    MarginalProfile pure{vec(qs({1, 0})), vec(qs({0, 1}))};
    EXPECT_EQ(expected_outcomes(two, pure), (Outcomes{q(5), q(-7)}));

    SecurityGame lb = protective_game(protective_lb_uau());
    MarginalProfile star{vec({q(56, 229), q(28, 229), q(40, 229), q(35, 229), q(70, 229), q(1)}),
                         vec({q(1, 73), q(37, 73), q(65, 73), q(55, 73), q(61, 73), q(0)})};
    EXPECT_EQ(expected_outcomes(lb, star).v_d, q(-789, 229));
}

TEST(Model, ProfileChecksShapeAndSums)
{
    SecurityGame g = golden_game();
    EXPECT_THROW(check_profile(g, {vec(qs({1, 1, 1})), vec(qs({1, 1, 0}))}), InputError);
    EXPECT_THROW(check_profile(g, {vec(qs({1, 1, 0, 0})), vec(qs({1, 1, 0, 0}))}), InputError);
    EXPECT_THROW(check_profile(g, {vec(qs({2, 1, 0, 0})), vec(qs({1, 1, 0, 0}))}), InputError);
    EXPECT_NO_THROW(check_profile(g, {vec(qs({1, 1, 1, 0})), vec(qs({1, 1, 0, 0}))}));
}

TEST(Model, ExpectedOutcomesMatchTheExpandedBimatrix)
{
    Gen gen(17);
    for (int n = 0; n < 30; ++n) {
        const int m = gen.integer(2, 5);
        const int k_a = gen.integer(1, m - 1);
        const int k_d = gen.integer(1, m - 1);
        std::vector<Rational> uac = gen.distinct(m, 1, 5), udc, uau, udu;
        for (int i = 0; i < m; ++i) {
            uau.push_back(uac[static_cast<std::size_t>(i)] + gen.rational(1, 5));
            udc.push_back(-gen.rational(1, 5));
            udu.push_back(udc.back() - gen.rational(1, 5));
        }
        SecurityGame g = make_game(k_a, k_d, uac, uau, udc, udu);
        BimatrixView view = expand_bimatrix(g);
        VectorXr p(static_cast<Eigen::Index>(view.attacker_sets.size()));
        VectorXr w(static_cast<Eigen::Index>(view.defender_sets.size()));
        for (auto& x : p) x = gen.rational(0, 3) + 1;
        for (auto& x : w) x = gen.rational(0, 3) + 1;
        p /= p.sum();
        w /= w.sum();
        MixedStrategy ma{k_a, {}}, md{k_d, {}};
        for (Eigen::Index i = 0; i < p.size(); ++i) ma.support.push_back({view.attacker_sets[static_cast<std::size_t>(i)], p(i)});
        for (Eigen::Index j = 0; j < w.size(); ++j) md.support.push_back({view.defender_sets[static_cast<std::size_t>(j)], w(j)});
        MarginalProfile prof{induced_marginals(ma, m), induced_marginals(md, m)};
        Outcomes o = expected_outcomes(g, prof);
        EXPECT_EQ(o.v_a, Rational(p.transpose() * view.A * w));
        EXPECT_EQ(o.v_d, Rational(p.transpose() * view.B * w));
    }
}

TEST(Model, CanonicalOrdersAreStrictlyMonotone)
{
    SecurityGame g = golden_game();
    CanonicalOrders o = canonical_orders(g);
    EXPECT_EQ(o.perm_uau, (std::vector<int>{0, 1, 2, 3}));
    EXPECT_EQ(o.perm_uac, (std::vector<int>{2, 0, 3, 1}));
    EXPECT_EQ(o.perm_dd, (std::vector<int>{0, 1, 3, 2}));
    for (std::size_t k = 1; k < 4; ++k) EXPECT_LT(g.uac(o.perm_uac[k - 1]), g.uac(o.perm_uac[k]));
}

TEST(Io, RejectsFloatsAndBadSchemas)
{
    EXPECT_THROW(parse_game(R"({"m": 2, "k_a": 1, "k_d": 1, "targets": [{"uac": 0.5, "uau": "1", "udc": "-1", "udu": "-2"},
        {"uac": "1", "uau": "2", "udc": "-1", "udu": "-3"}]})"), InputError);
    EXPECT_THROW(parse_game(R"({"m": 2, "k_a": 1, "targets": []})"), InputError);
    EXPECT_THROW(parse_game("not json"), InputError);
}

TEST(Io, ProfileRoundTrips)
{
    MarginalProfile p{vec({q(1, 3), q(2, 3)}), vec({q(1), q(0)})};
    MarginalProfile back = parse_profile(serialize_profile(p));
    EXPECT_EQ(back.alpha, p.alpha);
    EXPECT_EQ(back.beta, p.beta);
}
