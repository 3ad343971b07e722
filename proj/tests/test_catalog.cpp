#include "sgit/catalog.hpp"

#include <gtest/gtest.h>

using namespace sgit;

namespace {

// Type A oracle on r-subsets of {1..n}: w(omega_r) <-> I, the pairing with
// lambda_s is #(I cap [1,s]) - rs/n, and Bruhat order is entrywise order of
// sorted subsets.
std::vector<int> minimal_subset(int n, int r, int s)
{
    std::vector<std::vector<int>> admitting;
    for (int mask = 0; mask < (1 << n); ++mask) {
        if (__builtin_popcount(mask) != r) continue;
        std::vector<int> I;
        int low = 0;
        for (int i = 1; i <= n; ++i)
            if (mask & (1 << (i - 1))) {
                I.push_back(i);
                low += i <= s;
            }
        if (Rational(low) - Rational(r * s, n) <= 0) admitting.push_back(I);
    }
    auto leq = [](const std::vector<int>& a, const std::vector<int>& b) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] > b[i]) return false;
        return true;
    };
    std::vector<std::vector<int>> minimal;
    for (const auto& I : admitting) {
        bool is_min = true;
        for (const auto& K : admitting)
            if (K != I && leq(K, I)) is_min = false;
        if (is_min) minimal.push_back(I);
    }
    EXPECT_EQ(minimal.size(), 1u);
    return minimal.front();
}

} // namespace

TEST(ClosedFormA, Examples)
{
    auto e = closed_form_A(5, 2, 2);
    EXPECT_EQ(e.word, (Word{2, 1, 3, 2}));
    EXPECT_EQ(e.pairing, Rational(-4, 5));
    EXPECT_TRUE(e.ss_eq_s);

    e = closed_form_A(4, 2, 2);
    EXPECT_EQ(e.word, Word{2});
    EXPECT_EQ(e.pairing, 0);
    EXPECT_FALSE(e.ss_eq_s);

    // p = 1: blocks (s_2)(s_3), length (s-p)(r-p) = 2.
    e = closed_form_A(6, 3, 2);
    EXPECT_EQ(e.word, (Word{2, 3}));
    EXPECT_EQ(e.pairing, 0);
    EXPECT_FALSE(e.ss_eq_s);
    RootSystem a5(TypeLabel::A, 5);
    EXPECT_EQ(WeylElement::from_word(a5, e.word), minimal_schubert_minuscule(a5, 3, 2).w);

    EXPECT_THROW(closed_form_A(5, 0, 1), Error);
    EXPECT_THROW(closed_form_A(5, 1, 5), Error);
}

TEST(ClosedFormA, AgreesWithSubsetOracle)
{
    for (int n = 2; n <= 9; ++n) {
        RootSystem sys(TypeLabel::A, n - 1);
        for (int r = 1; r < n; ++r)
            for (int s = 1; s < n; ++s) {
                auto e = closed_form_A(n, r, s);
                auto w = WeylElement::from_word(sys, e.word);
                auto ol = one_line_notation_A(sys, w);
                std::vector<int> first(ol.begin(), ol.begin() + r);
                std::sort(first.begin(), first.end());
                EXPECT_EQ(first, minimal_subset(n, r, s)) << "n=" << n << " r=" << r << " s=" << s;
                const int p = r * s / n;
                EXPECT_EQ(w.length(), (s - p) * (r - p));
                EXPECT_EQ(static_cast<int>(e.word.size()), w.length());
            }
    }
}

TEST(ClosedFormA, ParametrizationCoversCoset)
{
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r < n; ++r) EXPECT_TRUE(type_A_parametrization_matches(n, r)) << n << " " << r;
}

TEST(ClosedFormB, Examples)
{
    auto e = closed_form_B(3, 3);
    EXPECT_EQ(e.word, (Word{3, 2, 3}));
    EXPECT_EQ(e.pairing, Rational(-1, 2));
    EXPECT_TRUE(e.ss_eq_s);
    EXPECT_EQ(*e.drop, (IntVec{0, 1, 2}));
    e = closed_form_B(3, 2);
    EXPECT_EQ(e.pairing, 0);
    EXPECT_FALSE(e.ss_eq_s);
    for (int n = 2; n <= 7; ++n) {
        RootSystem sys(TypeLabel::B, n);
        EXPECT_EQ(WeylElement::from_word(sys, closed_form_B(n, 1).word), minimal_schubert_minuscule(sys, n, 1).w);
    }
    EXPECT_THROW(closed_form_B(3, 4), Error);
}

TEST(ClosedFormB, CosetGenerator)
{
    for (int n = 2; n <= 7; ++n) {
        EXPECT_EQ(type_B_coset_words(n).size(), std::size_t{1} << n);
        EXPECT_TRUE(coset_generator_matches(TypeLabel::B, n));
    }
}

TEST(ClosedFormC, Examples)
{
    auto e = closed_form_C(3, 1);
    EXPECT_EQ(e.word, Word{1});
    EXPECT_EQ(e.pairing, 0);
    e = closed_form_C(3, 3);
    EXPECT_EQ(e.word, (Word{3, 2, 1}));
    EXPECT_EQ(e.pairing, Rational(-1, 2));
    EXPECT_TRUE(e.ss_eq_s);
    e = closed_form_C(2, 2);
    EXPECT_EQ(e.word, (Word{2, 1}));
    EXPECT_EQ(e.pairing, Rational(-1, 2));
}

TEST(ClosedFormD, Examples)
{
    auto e = closed_form_D(4, 1, 4);
    EXPECT_EQ(e.word, (Word{4, 2, 1}));
    EXPECT_EQ(e.pairing, Rational(-1, 2));
    EXPECT_TRUE(e.ss_eq_s);

    e = closed_form_D(5, 5, 5);
    EXPECT_EQ(e.word, (Word{5, 3, 4, 2, 3, 5}));
    EXPECT_EQ(e.pairing, Rational(-3, 4));
    EXPECT_TRUE(e.ss_eq_s);
    EXPECT_EQ(*e.drop, (IntVec{0, 1, 2, 1, 2}));

    e = closed_form_D(6, 6, 6);
    EXPECT_EQ(e.pairing, Rational(-1, 2));
    EXPECT_TRUE(e.ss_eq_s);

    EXPECT_THROW(closed_form_D(5, 2, 1), Error);
}

TEST(ClosedFormD, MirrorAndGenerator)
{
    for (int n = 4; n <= 7; ++n) {
        RootSystem sys(TypeLabel::D, n);
        for (int s = 1; s <= n; ++s) {
            auto e = closed_form_D(n, n - 1, s);
            EXPECT_EQ(WeylElement::from_word(sys, e.word), minimal_schubert_minuscule(sys, n - 1, s).w);
        }
        EXPECT_EQ(type_D_coset_words(n).size(), std::size_t{1} << (n - 1));
        EXPECT_TRUE(coset_generator_matches(TypeLabel::D, n));
    }
    EXPECT_THROW(coset_generator_matches(TypeLabel::C, 4), Error);
}

TEST(ClosedFormE, Examples)
{
    auto e = catalog_E6(1, 2);
    EXPECT_EQ(e.word, (Word{2, 4, 3, 1}));
    EXPECT_EQ(e.pairing, 0);
    EXPECT_FALSE(e.ss_eq_s);

    e = catalog_E7(2);
    EXPECT_EQ(e.word.size(), 12u);
    EXPECT_EQ(e.pairing, Rational(-1, 2));
    e = catalog_E7(7);
    EXPECT_EQ(e.word, (Word{7, 6, 5, 4, 3, 2, 4, 5, 6, 7}));
    EXPECT_TRUE(e.ss_eq_s);

    EXPECT_THROW(catalog_E6(2, 1), Error);
    EXPECT_THROW(catalog_E7(8), Error);
}

TEST(VerifyCatalog, Counts)
{
    auto a = verify_catalog(TypeLabel::A, 5);
    EXPECT_EQ(a.cases.size(), 16u);
    EXPECT_TRUE(a.all_passed());
    auto e6 = verify_catalog(TypeLabel::E6, 6);
    EXPECT_EQ(e6.cases.size(), 12u);
    EXPECT_TRUE(e6.all_passed());
    auto c2 = verify_catalog(TypeLabel::C, 2);
    EXPECT_EQ(c2.cases.size(), 2u);
    EXPECT_TRUE(c2.all_passed());
}

TEST(VerifyCatalog, FullSweepAndParityLaws)
{
    for (int n = 2; n <= 9; ++n) EXPECT_TRUE(verify_catalog(TypeLabel::A, n).all_passed()) << n;
    for (int n = 2; n <= 7; ++n) {
        auto b = verify_catalog(TypeLabel::B, n);
        EXPECT_TRUE(b.all_passed());
        for (const auto& c : b.cases) EXPECT_EQ(c.entry.ss_eq_s, c.entry.s % 2 == 1);
        EXPECT_TRUE(verify_catalog(TypeLabel::C, n).all_passed());
    }
    for (int n = 4; n <= 7; ++n) {
        auto d = verify_catalog(TypeLabel::D, n);
        EXPECT_TRUE(d.all_passed());
        for (const auto& c : d.cases)
            if (c.entry.r == n) {
                int s = c.entry.s;
                bool expect = s == n ? n % 4 != 0 : (s == n - 1 ? n % 4 != 2 : s % 2 == 1);
                EXPECT_EQ(c.entry.ss_eq_s, expect) << c.entry.label();
            }
    }
    auto e7 = verify_catalog(TypeLabel::E7, 7);
    EXPECT_TRUE(e7.all_passed());
    for (const auto& c : e7.cases) EXPECT_FALSE(c.erratum.has_value());
}

TEST(VerifyCatalog, ReportsErrata)
{
    RootSystem a4(TypeLabel::A, 4);
    auto cs = enumerate_WJ(a4, maximal_parabolic(a4, 2));
    auto e = closed_form_A(5, 2, 2);
    e.word = {2, 3};
    auto c = check_entry(e, cs);
    EXPECT_FALSE(c.passed);
    ASSERT_TRUE(c.erratum.has_value());
    EXPECT_EQ(WeylElement::from_word(a4, *c.erratum), WeylElement::from_word(a4, {2, 1, 3, 2}));
}
