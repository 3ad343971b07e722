#include "sgit/quotient.hpp"

#include <gtest/gtest.h>

using namespace sgit;

namespace {

// Brute-force count of semistandard tableaux of shape lambda with entries in 1..N.
std::int64_t count_ssyt(const std::vector<int>& lambda, int N)
{
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < static_cast<int>(lambda.size()); ++i)
        for (int j = 0; j < lambda[i]; ++j) cells.emplace_back(i, j);
    std::map<std::pair<int, int>, int> T;
    std::function<std::int64_t(std::size_t)> fill = [&](std::size_t k) -> std::int64_t {
        if (k == cells.size()) return 1;
        auto [i, j] = cells[k];
        int lo = 1;
        if (j > 0) lo = std::max(lo, T[{i, j - 1}]);
        if (i > 0) lo = std::max(lo, T[{i - 1, j}] + 1);
        std::int64_t total = 0;
        for (int v = lo; v <= N; ++v) {
            T[{i, j}] = v;
            total += fill(k + 1);
        }
        return total;
    };
    return fill(0);
}

std::vector<int> partition_of(const IntVec& hw)
{
    std::vector<int> lambda(hw.size());
    int acc = 0;
    for (int i = static_cast<int>(hw.size()) - 1; i >= 0; --i) lambda[i] = acc += hw[i];
    while (!lambda.empty() && lambda.back() == 0) lambda.pop_back();
    return lambda;
}

} // namespace

TEST(WeylDimension, SmallExamples)
{
    EXPECT_EQ(weyl_dim_A(2, {4}), 5);
    EXPECT_EQ(weyl_dim_A(3, {1, 1}), 8);
    EXPECT_EQ(weyl_dim_A(4, {0, 1, 0}), 6);
    EXPECT_EQ(weyl_dim_A(1, {}), 1);
}

TEST(WeylDimension, MatchesTableauCount)
{
    for (int N = 2; N <= 4; ++N) {
        IntVec hw(N - 1, 0);
        std::function<void(int)> rec = [&](int i) {
            if (i == N - 1) {
                auto lambda = partition_of(hw);
                auto c = count_ssyt(lambda, N);
                EXPECT_EQ(weyl_dim_A(N, hw), c);
                EXPECT_EQ(gl_dim_hook_content(lambda, N), c);
                return;
            }
            for (int v = 0; v <= 2; ++v) {
                hw[i] = v;
                rec(i + 1);
            }
        };
        rec(0);
    }
}

TEST(Diagrams, CountsAndConjugate)
{
    EXPECT_EQ(diagrams(4, 4).size(), 5u);
    EXPECT_EQ(diagrams(4, 2).size(), 3u);
    EXPECT_EQ(diagrams(0, 3).size(), 1u);
    EXPECT_EQ(conjugate({3, 1}), (std::vector<int>{2, 1, 1}));
    for (const auto& d : diagrams(6, 6)) EXPECT_EQ(conjugate(conjugate(d.parts)), d.parts);
}

TEST(WeightLemma, Examples)
{
    auto x = weight_leq_d_omega1({1, 0}, 1);
    EXPECT_TRUE(x.holds);
    EXPECT_EQ(*x.m_n, 0);
    x = weight_leq_d_omega1({0, 0}, 3);
    EXPECT_TRUE(x.holds);
    EXPECT_EQ(*x.m_n, 1);
    EXPECT_FALSE(weight_leq_d_omega1({0, 1}, 1).holds);
    EXPECT_FALSE(weight_leq_d_omega1({2, 0}, 1).holds);
    EXPECT_THROW(weight_leq_d_omega1({-1, 0}, 1), Error);
}

TEST(Cauchy, Dimensions)
{
    EXPECT_TRUE(cauchy_dimension_check(2, 3, 2));
    EXPECT_EQ(binomial(2 * 3 + 1, 2), 21);
    for (int rows = 1; rows <= 3; ++rows)
        for (int cols = 1; cols <= 4; ++cols)
            for (int d = 0; d <= 5; ++d) EXPECT_TRUE(cauchy_dimension_check(rows, cols, d));
}

TEST(Decompose, SmallCase)
{
    auto parts = decompose_Rk(5, 2, 3, 1);
    ASSERT_EQ(parts.size(), 1u);
    EXPECT_EQ(parts[0].hw_left, IntVec{1});
    EXPECT_EQ(parts[0].dim_left, 2);
    EXPECT_EQ(parts[0].dim_right, 1);
    EXPECT_EQ(total_dimension(parts), 2);
    EXPECT_THROW(decompose_Rk(4, 2, 2, 1), Error);
}

TEST(Decompose, TotalsMatchHilbertLaw)
{
    for (int n = 2; n <= 7; ++n)
        for (int r = 1; r < n; ++r)
            for (int s = 1; s < n; ++s) {
                if ((r * s) % n == 0) continue;
                auto td = type_A_data(n, r, s);
                for (int k = 0; k <= 3; ++k) {
                    auto parts = decompose_Rk(n, r, s, k);
                    EXPECT_EQ(total_dimension(parts),
                              binomial(static_cast<std::int64_t>(k) * td.a + td.rows * td.cols - 1,
                                       td.rows * td.cols - 1))
                        << n << " " << r << " " << s << " " << k;
                }
                if (r == s)
                    for (int k = 0; k <= 3; ++k) EXPECT_TRUE(sum_of_squares_check(n, r, k));
            }
}

TEST(TypeAData, Example)
{
    auto td = type_A_data(5, 2, 2);
    EXPECT_EQ(td.p, 0);
    EXPECT_EQ(td.c, 4);
    EXPECT_EQ(td.m, 5);
    EXPECT_EQ(td.a, 4);
    EXPECT_EQ(td.rows * td.cols, 4);
    td = type_A_data(6, 4, 3);
    EXPECT_EQ(td.p, 2);
    EXPECT_EQ(td.a, 0);
}

TEST(Hilbert, SmallTypeA)
{
    RootSystem a4(TypeLabel::A, 4);
    auto cs = enumerate_WJ(a4, maximal_parabolic(a4, 2));
    auto w = minimal_schubert_minuscule(a4, cs, 2, 1).w;
    EXPECT_EQ(invariant_hilbert_dim(a4, cs, 2, 1, w, 5, 0), 1);
    EXPECT_EQ(invariant_hilbert_dim(a4, cs, 2, 1, w, 5, 1), 3);
    EXPECT_EQ(invariant_hilbert_dim(a4, cs, 2, 1, w, 5, 2), 5);
    EXPECT_THROW(invariant_hilbert_dim(a4, cs, 2, 1, w, 5, 3000), ResourceError);
}

TEST(Quotient, Kinds)
{
    RootSystem a3(TypeLabel::A, 3);
    EXPECT_EQ(quotient_of_minimal(a3, 2, 2, 3).kind, QuotientKind::Point);

    RootSystem a4(TypeLabel::A, 4);
    auto q = quotient_of_minimal(a4, 2, 2, 3);
    EXPECT_EQ(q.kind, QuotientKind::MatrixProj);
    EXPECT_EQ(q.k, 4);
    EXPECT_EQ(q.a, 4);
    EXPECT_EQ(q.hilbert, (std::vector<std::int64_t>{1, 35, 165, 455}));

    RootSystem b3(TypeLabel::B, 3);
    q = quotient_of_minimal(b3, 3, 1, 3);
    EXPECT_EQ(q.kind, QuotientKind::ProjSpace);
    EXPECT_EQ(q.k, 3);

    // alpha_3 is not cominuscule in B3; the proved law does not cover it.
    q = quotient_of_minimal(b3, 3, 3, 3);
    EXPECT_EQ(q.kind, QuotientKind::OutsideProved);
    EXPECT_EQ(q.k, 3);
    // Matches the weighted projective plane P(1,1,2), not O(a) on P^2.
    EXPECT_EQ(q.hilbert, (std::vector<std::int64_t>{1, 2, 4, 6}));

    RootSystem d5(TypeLabel::D, 5);
    q = quotient_of_minimal(d5, 5, 1, 3);
    EXPECT_EQ(q.kind, QuotientKind::ProjSpace);
    EXPECT_EQ(q.m_root_lattice, 4);
    EXPECT_GE(q.a, 1);
}

TEST(Quotient, LawAcrossCominusculeCases)
{
    for (auto [type, n] : std::vector<std::pair<TypeLabel, int>>{
             {TypeLabel::B, 3}, {TypeLabel::B, 4}, {TypeLabel::C, 3}, {TypeLabel::D, 4}, {TypeLabel::D, 5},
             {TypeLabel::E6, 6}, {TypeLabel::E7, 7}}) {
        RootSystem sys(type, n);
        for (int r : minuscule_indices(sys))
            for (int s = 1; s <= n; ++s) {
                if (!is_cominuscule(sys, s)) continue;
                auto q = quotient_of_minimal(sys, r, s, 2);
                if (q.kind == QuotientKind::ProjSpace) {
                    EXPECT_EQ(q.k, q.w.length());
                    EXPECT_GE(q.a, 1);
                }
            }
    }
}

TEST(CellChecks, Cominuscule)
{
    RootSystem a4(TypeLabel::A, 4);
    auto c = cominuscule_cell_checks(a4, 2, 2);
    EXPECT_EQ(c.roots.size(), 4u);
    EXPECT_TRUE(c.passed());
    RootSystem d5(TypeLabel::D, 5);
    EXPECT_TRUE(cominuscule_cell_checks(d5, 5, 1).passed());
    RootSystem e7(TypeLabel::E7, 7);
    EXPECT_TRUE(cominuscule_cell_checks(e7, 7, 7).passed());
    RootSystem b3(TypeLabel::B, 3);
    EXPECT_THROW(cominuscule_cell_checks(b3, 3, 3), Error);
}

TEST(CellChecks, CountDecompositions)
{
    std::vector<IntVec> gens{{1, 0}, {0, 1}, {1, 1}};
    EXPECT_EQ(count_decompositions(gens, {1, 1}), 2);
    EXPECT_EQ(count_decompositions(gens, {2, 1}), 2);
    EXPECT_EQ(count_decompositions(gens, {0, 0}), 1);
}
