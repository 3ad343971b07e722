#pragma once

// GIT quotients of X(w_{s,r}): identification of the quotient, a
// standard-monomial Hilbert function oracle, and the type A decomposition
// of the invariant ring into irreducible modules.

#include "sgit/catalog.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <numeric>
#include <string>
#include <vector>

namespace sgit {

using BigInt = boost::multiprecision::cpp_int;

inline std::int64_t to_i64(const BigInt& x)
{
    if (x > std::numeric_limits<std::int64_t>::max() || x < std::numeric_limits<std::int64_t>::min())
        throw ResourceError("integer result does not fit in 64 bits");
    return static_cast<std::int64_t>(x);
}

inline std::int64_t binomial(std::int64_t n, std::int64_t k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    BigInt r = 1;
    for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return to_i64(r);
}

enum class QuotientKind { Point, ProjSpace, MatrixProj, OutsideProved };

inline std::string to_string(QuotientKind k)
{
    switch (k) {
    case QuotientKind::Point: return "Point";
    case QuotientKind::ProjSpace: return "ProjSpace";
    case QuotientKind::MatrixProj: return "MatrixProj";
    case QuotientKind::OutsideProved: return "OutsideProved";
    }
    return "?";
}

struct QuotientReport {
    TypeLabel type = TypeLabel::A;
    int rank = 0;
    int r = 0;
    int s = 0;
    WeylElement w;
    Rational pairing;
    bool ss_eq_s = false;
    QuotientKind kind = QuotientKind::Point;
    int k = 0;    ///< number of homogeneous coordinates of the projective space
    int a = 0;    ///< twist O(a)
    int rows = 0; ///< MatrixProj only: s - p
    int cols = 0; ///< MatrixProj only: r - p
    int m_used = 1;
    int m_root_lattice = 1;
    std::vector<std::int64_t> hilbert;
    std::vector<std::string> notes;

    std::string case_label() const
    {
        return RootSystem(type, rank).name() + " r=" + std::to_string(r) + " s=" + std::to_string(s);
    }
};

/// Type A data for SL(n): p = floor(rs/n), g = (rs, n), c = rs/g, m = n/g, a = c - m p.
struct TypeAData {
    int n, r, s, p, g, c, m, a, rows, cols;
};

inline TypeAData type_A_data(int n, int r, int s)
{
    detail::check_range(r, 1, n - 1, "r");
    detail::check_range(s, 1, n - 1, "s");
    TypeAData d{};
    d.n = n;
    d.r = r;
    d.s = s;
    d.p = r * s / n;
    d.g = std::gcd(r * s, n);
    d.c = r * s / d.g;
    d.m = n / d.g;
    d.a = d.c - d.m * d.p;
    d.rows = s - d.p;
    d.cols = r - d.p;
    return d;
}

/// Number of multichains tau_1 <= ... <= tau_{dm} in { v in W^{S \ alpha_r} : v <= w }
/// whose pairings <tau_i(omega_r), lambda_s> sum to zero.
inline std::int64_t invariant_hilbert_dim(const RootSystem& sys, const CosetSystem& cs, int r, int s,
                                          const WeylElement& w, int m, int d)
{
    require_minuscule(sys, r);
    if (m < 1 || d < 0) throw Error("need m >= 1 and d >= 0");
    if (d == 0) return 1;
    auto interval = lower_interval(sys, w, cs);
    const std::size_t N = interval.size();
    auto om = fundamental_weight(sys, r).coords;
    const std::int64_t L = least_m_root_lattice(sys, r);
    std::vector<std::int64_t> val(N);
    for (std::size_t i = 0; i < N; ++i) {
        Rational q = (interval[i] * om)[s - 1] * L;
        val[i] = q.numerator();
    }
    std::vector<std::vector<char>> leq(N, std::vector<char>(N, 0));
    for (std::size_t i = 0; i < N; ++i)
        for (std::size_t j = 0; j < N; ++j) leq[i][j] = bruhat_leq(sys, interval[i], interval[j]);

    const std::int64_t steps = static_cast<std::int64_t>(d) * m;
    if (steps > 10'000) throw ResourceError("multichain length " + std::to_string(steps) + " exceeds the guard");
    const std::int64_t vmin = *std::min_element(val.begin(), val.end());
    const std::int64_t vmax = *std::max_element(val.begin(), val.end());
    // After t steps the partial sum S must still reach 0 with the remaining
    // steps: S + (steps - t) vmin <= 0 <= S + (steps - t) vmax.
    using Table = std::vector<std::map<std::int64_t, BigInt>>;
    Table cur(N);
    for (std::size_t i = 0; i < N; ++i) cur[i][val[i]] = 1;
    for (std::int64_t t = 1; t < steps; ++t) {
        Table next(N);
        const std::int64_t rem = steps - t - 1;
        for (std::size_t i = 0; i < N; ++i)
            for (const auto& [sum, cnt] : cur[i])
                for (std::size_t j = 0; j < N; ++j) {
                    if (!leq[i][j]) continue;
                    std::int64_t ns = sum + val[j];
                    if (ns + rem * vmin > 0 || ns + rem * vmax < 0) continue;
                    next[j][ns] += cnt;
                }
        cur = std::move(next);
    }
    BigInt total = 0;
    for (const auto& row : cur)
        if (auto it = row.find(0); it != row.end()) total += it->second;
    return to_i64(total);
}

/// Identification of the quotient of X(w_{s,r}) by lambda_s. Hilbert values
/// for d = 0..d_max are attached and checked against the proved law.
inline QuotientReport quotient_of_minimal(const RootSystem& sys, int r, int s, int d_max = 0,
                                          std::size_t guard = kDefaultEnumerationGuard)
{
    require_minuscule(sys, r);
    sys.check_index(s, "one-parameter subgroup");
    auto cs = enumerate_WJ(sys, maximal_parabolic(sys, r), guard);
    auto ms = minimal_schubert_minuscule(sys, cs, r, s);

    QuotientReport rep;
    rep.type = sys.type();
    rep.rank = sys.rank();
    rep.r = r;
    rep.s = s;
    rep.w = ms.w;
    rep.pairing = ms.pairing;
    rep.ss_eq_s = ms.ss_eq_s;
    rep.m_root_lattice = ms.m;
    rep.m_used = ms.m;

    if (ms.pairing == 0) {
        rep.kind = QuotientKind::Point;
        rep.notes.push_back("pairing is zero; the quotient is a point");
    } else if (sys.type() == TypeLabel::A) {
        auto td = type_A_data(sys.rank() + 1, r, s);
        rep.kind = QuotientKind::MatrixProj;
        rep.rows = td.rows;
        rep.cols = td.cols;
        rep.k = td.rows * td.cols;
        rep.a = td.a;
        rep.m_used = td.m;
        if (rep.k != ms.w.length()) throw ConsistencyError("l(w_{s,r}) differs from (s-p)(r-p)");
        rep.notes.push_back("p=" + std::to_string(td.p) + " c=" + std::to_string(td.c) + " m=n/(rs,n)=" +
                            std::to_string(td.m));
    } else if (is_cominuscule(sys, s)) {
        rep.kind = QuotientKind::ProjSpace;
        rep.k = ms.w.length();
        Rational a = -ms.pairing * ms.m;
        if (!is_integer(a) || a < 1) throw ConsistencyError("twist -m*pairing is not a positive integer");
        rep.a = static_cast<int>(a.numerator());
        rep.notes.push_back("m is the least m with m*omega_r in the root lattice");
    } else {
        rep.kind = QuotientKind::OutsideProved;
        rep.k = ms.w.length();
        rep.notes.push_back("alpha_" + std::to_string(s) + " is not cominuscule and the type is not A");
    }

    for (int d = 0; d <= d_max; ++d) {
        auto h = invariant_hilbert_dim(sys, cs, r, s, ms.w, rep.m_used, d);
        rep.hilbert.push_back(h);
        std::int64_t expect = -1;
        if (rep.kind == QuotientKind::Point) expect = 1;
        else if (rep.kind != QuotientKind::OutsideProved) expect = binomial(static_cast<std::int64_t>(d) * rep.a + rep.k - 1, rep.k - 1);
        if (expect >= 0 && h != expect)
            throw ConsistencyError("Hilbert function of " + rep.case_label() + " at degree " + std::to_string(d) +
                                   " is " + std::to_string(h) + ", expected " + std::to_string(expect));
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Type A decomposition

/// Weakly decreasing positive parts with parts <= bound.
struct Diagram {
    std::vector<int> parts;
    int bound = 0;

    int size() const { return std::accumulate(parts.begin(), parts.end(), 0); }
    /// m_i = #{ j : parts_j = i }, i = 1..bound.
    std::vector<int> multiplicities() const
    {
        std::vector<int> m(bound + 1, 0);
        for (int x : parts) ++m[x];
        return m;
    }
    friend bool operator==(const Diagram&, const Diagram&) = default;
};

/// All partitions of total with every part <= bound, in reverse lexicographic order.
inline std::vector<Diagram> diagrams(int total, int bound)
{
    std::vector<Diagram> out;
    std::vector<int> cur;
    std::function<void(int, int)> rec = [&](int left, int maxpart) {
        if (left == 0) {
            out.push_back({cur, bound});
            return;
        }
        for (int x = std::min(left, maxpart); x >= 1; --x) {
            cur.push_back(x);
            rec(left - x, x);
            cur.pop_back();
        }
    };
    if (total < 0 || bound < 0) return out;
    if (bound == 0) {
        if (total == 0) out.push_back({{}, 0});
        return out;
    }
    rec(total, bound);
    return out;
}

/// Weyl dimension of the SL(N) module with highest weight sum hw_i omega_i.
inline std::int64_t weyl_dim_A(int N, const IntVec& hw)
{
    if (N < 1 || static_cast<int>(hw.size()) != N - 1) throw Error("highest weight needs N-1 coordinates");
    for (int x : hw)
        if (x < 0) throw Error("highest weight is not dominant");
    // lambda_i = sum_{k >= i} hw_k
    std::vector<std::int64_t> lam(N, 0);
    for (int i = N - 2; i >= 0; --i) lam[i] = lam[i + 1] + hw[i];
    BigInt num = 1, den = 1;
    for (int i = 0; i < N; ++i)
        for (int j = i + 1; j < N; ++j) {
            num *= lam[i] - lam[j] + j - i;
            den *= j - i;
        }
    return to_i64(num / den);
}

/// dim of the GL(N) Schur module S_lambda(C^N) by the hook-content formula.
inline std::int64_t gl_dim_hook_content(const std::vector<int>& lambda, int N)
{
    BigInt num = 1, den = 1;
    std::vector<int> conj;
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            if (static_cast<int>(conj.size()) <= j) conj.push_back(0);
            ++conj[j];
        }
    for (std::size_t i = 0; i < lambda.size(); ++i)
        for (int j = 0; j < lambda[i]; ++j) {
            int content = j - static_cast<int>(i);
            int hook = (lambda[i] - j) + (conj[j] - static_cast<int>(i)) - 1;
            num *= N + content;
            den *= hook;
        }
    return to_i64(num / den);
}

inline std::vector<int> conjugate(const std::vector<int>& parts)
{
    std::vector<int> out;
    for (int x : parts)
        for (int j = 0; j < x; ++j) {
            if (static_cast<int>(out.size()) <= j) out.push_back(0);
            ++out[j];
        }
    return out;
}

/// mu <= d omega_1 in A_{n-1} iff d - sum i m_i = n m_n for some m_n >= 0.
struct WeightLemmaResult {
    bool holds = false;
    std::optional<int> m_n;
};

inline WeightLemmaResult weight_leq_d_omega1(const IntVec& mu_weight, int d)
{
    const int n = static_cast<int>(mu_weight.size()) + 1;
    std::int64_t S = 0;
    for (int i = 1; i < n; ++i) {
        if (mu_weight[i - 1] < 0) throw Error("weight is not dominant");
        S += static_cast<std::int64_t>(i) * mu_weight[i - 1];
    }
    std::int64_t rest = d - S;
    if (rest < 0 || rest % n != 0) return {false, std::nullopt};
    return {true, static_cast<int>(rest / n)};
}

/// mu_sigma = sum_{i <= N-1} m_i omega_i for SL(N).
inline IntVec mu_of_diagram(const Diagram& sigma, int N)
{
    auto m = sigma.multiplicities();
    IntVec mu(N - 1, 0);
    for (int i = 1; i <= N - 1 && i < static_cast<int>(m.size()); ++i) mu[i - 1] = m[i];
    return mu;
}

/// -w_0 on SL(N): reverses fundamental-weight coordinates.
inline IntVec dual_weight(IntVec hw)
{
    std::reverse(hw.begin(), hw.end());
    return hw;
}

struct IrredSummand {
    Diagram sigma;
    IntVec hw_left;  ///< SL(s-p), fundamental-weight coordinates
    IntVec hw_right; ///< SL(r-p)
    std::int64_t dim_left = 0;
    std::int64_t dim_right = 0;
};

/// Degree-k piece of the invariant ring of X(w_{s,r}) in SL(n), as
/// SL(s-p) x SL(r-p) modules, one summand per diagram of ka.
inline std::vector<IrredSummand> decompose_Rk(int n, int r, int s, int k_deg)
{
    auto td = type_A_data(n, r, s);
    if ((r * s) % n == 0) throw Error("n divides rs: the quotient is a point");
    if (k_deg < 0) throw Error("degree must be nonnegative");
    const int ka = k_deg * td.a;
    std::vector<IrredSummand> out;
    for (auto& sigma : diagrams(ka, std::min(td.rows, td.cols))) {
        IrredSummand x;
        x.hw_left = dual_weight(mu_of_diagram(sigma, td.rows));
        x.hw_right = mu_of_diagram(sigma, td.cols);
        x.dim_left = weyl_dim_A(td.rows, x.hw_left);
        x.dim_right = weyl_dim_A(td.cols, x.hw_right);
        x.sigma = std::move(sigma);
        out.push_back(std::move(x));
    }
    return out;
}

inline std::int64_t total_dimension(const std::vector<IrredSummand>& parts)
{
    std::int64_t t = 0;
    for (const auto& x : parts) t += x.dim_left * x.dim_right;
    return t;
}

/// Sum over lambda |- d with l(lambda) <= rows of dim S_lambda(C^rows) dim S_lambda(C^cols)
/// equals dim Sym^d of rows x cols matrices.
inline bool cauchy_dimension_check(int rows, int cols, int d)
{
    if (rows > cols) std::swap(rows, cols);
    std::int64_t total = 0;
    for (const auto& sigma : diagrams(d, rows)) {
        auto lambda = conjugate(sigma.parts);
        total += gl_dim_hook_content(lambda, rows) * gl_dim_hook_content(lambda, cols);
    }
    return total == binomial(static_cast<std::int64_t>(rows) * cols + d - 1, d);
}

/// r = s: every summand is End(V(mu)), so the total is a sum of squares.
inline bool sum_of_squares_check(int n, int r, int k_deg)
{
    if ((r * r) % n == 0) throw Error("n divides r^2: the quotient is a point");
    auto parts = decompose_Rk(n, r, r, k_deg);
    std::int64_t squares = 0;
    for (const auto& x : parts) {
        if (x.dim_left != x.dim_right) return false;
        if (x.hw_left != dual_weight(x.hw_right)) return false;
        squares += x.dim_left * x.dim_left;
    }
    auto td = type_A_data(n, r, r);
    return squares == total_dimension(parts) &&
           squares == binomial(static_cast<std::int64_t>(k_deg) * td.a + td.rows * td.cols - 1,
                               static_cast<std::int64_t>(k_deg) * td.a);
}

// ---------------------------------------------------------------------------
// Root combinatorics of the big cell of X(w_{s,r})

struct CellCheckReport {
    std::vector<IntVec> roots; ///< R^+(w^{-1})
    bool sums_not_roots = true;
    bool unit_solutions_only = true;
    bool pairings_one = true;
    std::vector<std::string> witnesses;

    bool passed() const { return sums_not_roots && unit_solutions_only && pairings_one; }
};

/// Number of ways to write target as a nonnegative integer combination of gens.
inline std::int64_t count_decompositions(const std::vector<IntVec>& gens, const IntVec& target)
{
    std::map<std::pair<std::size_t, IntVec>, std::int64_t> memo;
    std::function<std::int64_t(std::size_t, const IntVec&)> rec = [&](std::size_t i, const IntVec& t) -> std::int64_t {
        if (std::all_of(t.begin(), t.end(), [](int x) { return x == 0; })) return 1;
        if (i == gens.size()) return 0;
        auto key = std::make_pair(i, t);
        if (auto it = memo.find(key); it != memo.end()) return it->second;
        std::int64_t total = 0;
        IntVec cur = t;
        while (true) {
            total += rec(i + 1, cur);
            for (std::size_t k = 0; k < cur.size(); ++k) cur[k] -= gens[i][k];
            if (std::any_of(cur.begin(), cur.end(), [](int x) { return x < 0; })) break;
        }
        memo[key] = total;
        return total;
    };
    return rec(0, target);
}

inline CellCheckReport cominuscule_cell_checks(const RootSystem& sys, int r, int s)
{
    require_minuscule(sys, r);
    if (!is_cominuscule(sys, s)) throw Error("alpha_" + std::to_string(s) + " is not cominuscule in " + sys.name());
    auto w = minimal_schubert_minuscule(sys, r, s).w;
    CellCheckReport rep;
    rep.roots = inversion_roots(sys, w);
    const auto& R = rep.roots;
    for (std::size_t i = 0; i < R.size(); ++i)
        for (std::size_t j = i; j < R.size(); ++j) {
            IntVec sum = R[i];
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += R[j][k];
            if (sys.is_root(sum)) {
                rep.sums_not_roots = false;
                rep.witnesses.push_back(format_root(R[i]) + " + " + format_root(R[j]) + " is a root");
            }
        }
    for (const auto& beta : R)
        if (auto c = count_decompositions(R, beta); c != 1) {
            rep.unit_solutions_only = false;
            rep.witnesses.push_back(format_root(beta) + " has " + std::to_string(c) + " decompositions");
        }
    for (const auto& beta : R)
        if (beta[s - 1] != 1) {
            rep.pairings_one = false;
            rep.witnesses.push_back("<" + format_root(beta) + ", lambda_s> != 1");
        }
    return rep;
}

} // namespace sgit
