#include "sgit/io.hpp"

#include <gtest/gtest.h>

using namespace sgit;

TEST(Json, RationalsAreStrings)
{
    EXPECT_EQ(rational_json(Rational(-4, 5)).dump(), "\"-4/5\"");
    EXPECT_EQ(rational_json(Rational(0)).dump(), "\"0/1\"");
    EXPECT_EQ(rational_from_json(Json("3/6")), Rational(1, 2));
    EXPECT_THROW(rational_from_json(Json(0.5)), Error);
}

TEST(Json, CatalogRoundTrip)
{
    for (auto [type, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::A, 5}, {TypeLabel::B, 4}, {TypeLabel::C, 3}, {TypeLabel::D, 5}, {TypeLabel::E6, 6}}) {
        for (const auto& c : verify_catalog(type, n).cases) {
            auto text = dump(to_json(c.entry));
            EXPECT_EQ(canonicalize(text), text);
            auto back = catalog_entry_from_json(Json::parse(text));
            EXPECT_EQ(back.word, c.entry.word);
            EXPECT_EQ(back.pairing, c.entry.pairing);
            EXPECT_EQ(back.ss_eq_s, c.entry.ss_eq_s);
            EXPECT_EQ(dump(to_json(back)), text);
        }
    }
}

TEST(Json, MinimalAndQuotientAreCanonical)
{
    RootSystem a4(TypeLabel::A, 4);
    auto ms = minimal_schubert_minuscule(a4, 2, 2);
    auto text = dump(to_json(ms, a4, 2, 2));
    EXPECT_EQ(canonicalize(text), text);
    auto j = Json::parse(text);
    EXPECT_EQ(j["word"], "2 1 3 2");
    EXPECT_EQ(j["pairing"], "-4/5");

    auto q = quotient_of_minimal(a4, 2, 3, 2);
    text = dump(to_json(q, decompose_Rk(5, 2, 3, 1)));
    EXPECT_EQ(canonicalize(text), text);
    j = Json::parse(text);
    EXPECT_EQ(j["kind"], "MatrixProj");
    EXPECT_EQ(j["decomposition"].size(), 1u);
}

TEST(Json, AnalyzeIsCanonicalAndSorted)
{
    RootSystem a3(TypeLabel::A, 3);
    LinearizationContext ctx(a3, {1, 0, 1}, OneParamIndex{2});
    auto j = analyze_json(ctx);
    auto text = dump(j);
    EXPECT_EQ(canonicalize(text), text);
    const auto& anti = j["antichain"];
    for (std::size_t i = 1; i < anti.size(); ++i)
        EXPECT_LE(anti[i - 1]["word"].get<std::string>(), anti[i]["word"].get<std::string>());
}

TEST(Csv, Escaping)
{
    EXPECT_EQ(csv_escape("plain"), "plain");
    EXPECT_EQ(csv_escape("a,b"), "\"a,b\"");
    EXPECT_EQ(csv_escape("say \"hi\""), "\"say \"\"hi\"\"\"");
    EXPECT_EQ(csv_row({"A4", "2 1 3 2", "-4/5"}), "A4,2 1 3 2,-4/5\n");
}
