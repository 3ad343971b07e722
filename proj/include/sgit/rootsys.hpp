#pragma once

// Root systems of types A, B, C, D, E6, E7 in Humphreys' node numbering,
// with exact weight arithmetic in simple-root and fundamental-weight
// coordinates.

#include "sgit/rational.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>
#include <vector>

namespace sgit {

enum class TypeLabel { A, B, C, D, E6, E7 };

inline std::string to_string(TypeLabel t)
{
    switch (t) {
    case TypeLabel::A: return "A";
    case TypeLabel::B: return "B";
    case TypeLabel::C: return "C";
    case TypeLabel::D: return "D";
    case TypeLabel::E6: return "E6";
    case TypeLabel::E7: return "E7";
    }
    return "?";
}

/// Accepts "A".."D", "E6", "E7", and a bare "E" (resolved later from the rank).
inline TypeLabel parse_type(const std::string& label, int rank = 0)
{
    if (label == "A") return TypeLabel::A;
    if (label == "B") return TypeLabel::B;
    if (label == "C") return TypeLabel::C;
    if (label == "D") return TypeLabel::D;
    if (label == "E6" || (label == "E" && rank == 6)) return TypeLabel::E6;
    if (label == "E7" || (label == "E" && rank == 7)) return TypeLabel::E7;
    throw Error("unknown or unsupported type label '" + label + "'");
}

using IntVec = std::vector<int>;
using IntMatrix = std::vector<IntVec>;

enum class Basis { Root, Weight };

/// A weight with an explicit coordinate basis.
struct WeightVec {
    RatVec coords;
    Basis basis = Basis::Root;

    static WeightVec root(RatVec c) { return {std::move(c), Basis::Root}; }
    static WeightVec weight(RatVec c) { return {std::move(c), Basis::Weight}; }

    friend bool operator==(const WeightVec&, const WeightVec&) = default;
};

inline RatVec to_rat(const IntVec& v) { return RatVec(v.begin(), v.end()); }

inline RatVec operator+(RatVec a, const RatVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

inline RatVec operator-(RatVec a, const RatVec& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
    return a;
}

inline RatVec operator*(const Rational& k, RatVec a)
{
    for (auto& x : a) x *= k;
    return a;
}

/// Index of a one-parameter subgroup lambda_s, dual to alpha_s (1-based).
struct OneParamIndex {
    int s = 1;
};

/// Immutable Cartan, root and weight data for one simple type.
class RootSystem {
public:
    RootSystem(TypeLabel type, int rank);

    TypeLabel type() const { return type_; }
    int rank() const { return rank_; }
    std::string name() const
    {
        if (type_ == TypeLabel::E6 || type_ == TypeLabel::E7) return to_string(type_);
        return to_string(type_) + std::to_string(rank_);
    }

    /// C[i][j] = <alpha_j, alpha_i^vee>, 0-based.
    const IntMatrix& cartan() const { return cartan_; }
    const std::vector<RatVec>& inv_cartan() const { return inv_cartan_; }
    const std::vector<IntVec>& positive_roots() const { return positive_; }
    const IntVec& highest_root() const { return highest_; }
    /// Squared lengths (alpha_i, alpha_i), normalised so the shortest is 1.
    const IntVec& root_norms() const { return norms_; }

    bool is_root(const IntVec& v) const;
    bool is_positive_root(const IntVec& v) const { return positive_set_.count(v) > 0; }

    /// <mu, alpha_i^vee> for mu in root coordinates; i is 1-based.
    template <class Vec>
    auto coroot_pairing(const Vec& root_coords, int i) const
    {
        typename Vec::value_type acc{0};
        for (int j = 0; j < rank_; ++j) acc += root_coords[j] * cartan_[i - 1][j];
        return acc;
    }

    WeightVec to_root_basis(const WeightVec& mu) const;
    WeightVec to_weight_basis(const WeightVec& mu) const;

    void check_index(int i, const char* what) const
    {
        if (i < 1 || i > rank_)
            throw Error(std::string(what) + " index " + std::to_string(i) + " out of range 1.." +
                        std::to_string(rank_) + " for " + name());
    }

private:
    TypeLabel type_;
    int rank_;
    IntMatrix cartan_;
    std::vector<RatVec> inv_cartan_;
    std::vector<IntVec> positive_;
    std::set<IntVec> positive_set_;
    IntVec highest_;
    IntVec norms_;
};

namespace detail {

inline IntMatrix make_cartan(TypeLabel type, int n)
{
    IntMatrix c(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) c[i][i] = 2;
    auto link = [&](int i, int j) { c[i - 1][j - 1] = c[j - 1][i - 1] = -1; };
    switch (type) {
    case TypeLabel::A:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        break;
    case TypeLabel::B:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        // alpha_n short
        c[n - 1][n - 2] = -2;
        break;
    case TypeLabel::C:
        for (int i = 1; i < n; ++i) link(i, i + 1);
        // alpha_n long
        c[n - 2][n - 1] = -2;
        break;
    case TypeLabel::D:
        for (int i = 1; i < n - 1; ++i) link(i, i + 1);
        link(n - 2, n);
        break;
    case TypeLabel::E6:
    case TypeLabel::E7:
        link(1, 3);
        link(3, 4);
        link(4, 5);
        link(5, 6);
        link(2, 4);
        if (type == TypeLabel::E7) link(6, 7);
        break;
    }
    return c;
}

inline std::vector<RatVec> invert(const IntMatrix& m)
{
    const int n = static_cast<int>(m.size());
    std::vector<RatVec> a(n, RatVec(2 * n, Rational(0)));
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
        a[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
        int piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw Error("singular Cartan matrix");
        std::swap(a[piv], a[col]);
        Rational inv = 1 / a[col][col];
        for (auto& x : a[col]) x *= inv;
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col] == 0) continue;
            Rational f = a[r][col];
            for (int k = 0; k < 2 * n; ++k) a[r][k] -= f * a[col][k];
        }
    }
    std::vector<RatVec> out(n, RatVec(n));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = a[i][n + j];
    return out;
}

} // namespace detail

inline RootSystem::RootSystem(TypeLabel type, int rank) : type_(type), rank_(rank)
{
    bool ok = false;
    switch (type) {
    case TypeLabel::A: ok = rank >= 1; break;
    case TypeLabel::B: ok = rank >= 2; break;
    case TypeLabel::C: ok = rank >= 2; break;
    case TypeLabel::D: ok = rank >= 4; break;
    case TypeLabel::E6: ok = rank == 6; break;
    case TypeLabel::E7: ok = rank == 7; break;
    }
    if (!ok)
        throw Error("inadmissible root system " + to_string(type) + " of rank " + std::to_string(rank));

    cartan_ = detail::make_cartan(type, rank);
    inv_cartan_ = detail::invert(cartan_);

    // Squared lengths from the symmetrisability d_i C_ij = d_j C_ji,
    // propagated along the (connected) Dynkin diagram.
    std::vector<Rational> d(rank_, Rational(0));
    d[0] = 1;
    for (bool changed = true; changed;) {
        changed = false;
        for (int i = 0; i < rank_; ++i)
            for (int j = 0; j < rank_; ++j)
                if (i != j && cartan_[i][j] != 0 && d[i] != 0 && d[j] == 0) {
                    d[j] = d[i] * cartan_[i][j] / cartan_[j][i];
                    changed = true;
                }
    }
    Rational lo = *std::min_element(d.begin(), d.end());
    norms_.resize(rank_);
    for (int i = 0; i < rank_; ++i) {
        Rational q = d[i] / lo;
        if (!is_integer(q)) throw Error("non-integral root norm ratio");
        norms_[i] = static_cast<int>(q.numerator());
    }

    // Positive roots: closure of the simple roots under simple reflections,
    // keeping only positive images.
    std::vector<IntVec> frontier;
    for (int i = 0; i < rank_; ++i) {
        IntVec e(rank_, 0);
        e[i] = 1;
        positive_set_.insert(e);
        frontier.push_back(e);
    }
    while (!frontier.empty()) {
        std::vector<IntVec> next;
        for (const auto& beta : frontier) {
            for (int i = 1; i <= rank_; ++i) {
                IntVec img = beta;
                img[i - 1] -= coroot_pairing(beta, i);
                bool positive = std::all_of(img.begin(), img.end(), [](int x) { return x >= 0; });
                if (positive && positive_set_.insert(img).second) next.push_back(img);
            }
        }
        frontier = std::move(next);
    }
    positive_.assign(positive_set_.begin(), positive_set_.end());
    std::stable_sort(positive_.begin(), positive_.end(), [](const IntVec& a, const IntVec& b) {
        return std::accumulate(a.begin(), a.end(), 0) < std::accumulate(b.begin(), b.end(), 0);
    });
    highest_ = positive_.back();
    for (const auto& beta : positive_)
        for (int i = 0; i < rank_; ++i)
            if (beta[i] > highest_[i]) throw ConsistencyError("highest root is not a dominance maximum");
}

inline bool RootSystem::is_root(const IntVec& v) const
{
    if (positive_set_.count(v)) return true;
    IntVec neg(v.size());
    std::transform(v.begin(), v.end(), neg.begin(), [](int x) { return -x; });
    return positive_set_.count(neg) > 0;
}

inline WeightVec RootSystem::to_root_basis(const WeightVec& mu) const
{
    if (static_cast<int>(mu.coords.size()) != rank_) throw Error("weight has wrong dimension for " + name());
    if (mu.basis == Basis::Root) return mu;
    RatVec out(rank_, Rational(0));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j) out[i] += inv_cartan_[i][j] * mu.coords[j];
    return WeightVec::root(std::move(out));
}

inline WeightVec RootSystem::to_weight_basis(const WeightVec& mu) const
{
    if (static_cast<int>(mu.coords.size()) != rank_) throw Error("weight has wrong dimension for " + name());
    if (mu.basis == Basis::Weight) return mu;
    RatVec out(rank_, Rational(0));
    for (int i = 1; i <= rank_; ++i) out[i - 1] = coroot_pairing(mu.coords, i);
    return WeightVec::weight(std::move(out));
}

inline RootSystem build_root_system(TypeLabel type, int rank) { return RootSystem(type, rank); }

/// <mu, lambda_s>: the alpha_s coefficient of mu in root coordinates.
inline Rational pairing_lambda(const RootSystem& sys, const WeightVec& mu, OneParamIndex s)
{
    sys.check_index(s.s, "one-parameter subgroup");
    return sys.to_root_basis(mu).coords[s.s - 1];
}

/// omega_r in root coordinates.
inline WeightVec fundamental_weight(const RootSystem& sys, int r)
{
    sys.check_index(r, "fundamental weight");
    RatVec c(sys.rank());
    for (int i = 0; i < sys.rank(); ++i) c[i] = sys.inv_cartan()[i][r - 1];
    return WeightVec::root(std::move(c));
}

/// <omega_r, beta^vee> <= 1 for every positive root beta.
inline bool is_minuscule(const RootSystem& sys, int r)
{
    sys.check_index(r, "fundamental weight");
    const auto& norms = sys.root_norms();
    const auto& c = sys.cartan();
    for (const auto& beta : sys.positive_roots()) {
        // (beta, beta) with (alpha_i, alpha_j) = norms_i * C_ij / 2
        Rational bb = 0;
        for (int i = 0; i < sys.rank(); ++i)
            for (int j = 0; j < sys.rank(); ++j)
                bb += Rational(beta[i] * beta[j] * norms[i] * c[i][j], 2);
        // <omega_r, beta^vee> = 2 (omega_r, beta) / (beta, beta) = beta_r * |alpha_r|^2 / (beta, beta)
        Rational val = Rational(beta[r - 1] * norms[r - 1]) / bb;
        if (val > 1) return false;
    }
    return true;
}

inline bool is_cominuscule(const RootSystem& sys, int s)
{
    sys.check_index(s, "simple root");
    return sys.highest_root()[s - 1] == 1;
}

inline std::vector<int> minuscule_indices(const RootSystem& sys)
{
    std::vector<int> out;
    for (int r = 1; r <= sys.rank(); ++r)
        if (is_minuscule(sys, r)) out.push_back(r);
    return out;
}

/// Least m >= 1 with m * omega_r in the root lattice.
inline int least_m_root_lattice(const RootSystem& sys, int r)
{
    auto w = fundamental_weight(sys, r);
    std::int64_t m = 1;
    for (const auto& q : w.coords) m = std::lcm(m, q.denominator());
    return static_cast<int>(m);
}

/// mu <= chi in the dominance order: chi - mu is a nonnegative integral
/// combination of simple roots.
inline bool dominance_leq(const RootSystem& sys, const WeightVec& mu, const WeightVec& chi)
{
    auto diff = sys.to_root_basis(chi).coords - sys.to_root_basis(mu).coords;
    return std::all_of(diff.begin(), diff.end(), [](const Rational& q) { return is_integer(q) && q >= 0; });
}

inline bool is_dominant(const RootSystem& sys, const WeightVec& mu)
{
    auto w = sys.to_weight_basis(mu);
    return std::all_of(w.coords.begin(), w.coords.end(), [](const Rational& q) { return q >= 0; });
}

inline std::string format_root(const IntVec& beta)
{
    std::string out;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        if (beta[i] == 0) continue;
        if (!out.empty()) out += beta[i] > 0 ? "+" : "";
        if (beta[i] == -1) out += "-";
        else if (beta[i] != 1) out += std::to_string(beta[i]);
        out += "a" + std::to_string(i + 1);
    }
    return out.empty() ? "0" : out;
}

} // namespace sgit
