#pragma once

// Semistability of Schubert varieties X(w) in G/P_J for the one-parameter
// subgroup lambda_s and the line bundle L(chi), decided at weight level.

#include "sgit/weyl.hpp"

#include <memory>
#include <set>
#include <string>
#include <vector>

namespace sgit {

/// chi dominant and nonzero (fundamental-weight coordinates), the derived
/// parabolic J = { i : chi_i = 0 }, the index s, and W^J.
class LinearizationContext {
public:
    LinearizationContext(RootSystem sys, const IntVec& chi_weight, OneParamIndex s,
                         std::size_t guard = kDefaultEnumerationGuard)
        : sys_(std::move(sys)), s_(s)
    {
        if (static_cast<int>(chi_weight.size()) != sys_.rank())
            throw Error("chi needs " + std::to_string(sys_.rank()) + " coordinates for " + sys_.name());
        bool nonzero = false;
        for (int i = 0; i < sys_.rank(); ++i) {
            if (chi_weight[i] < 0) throw Error("chi is not dominant");
            if (chi_weight[i] == 0) J_.insert(i + 1);
            else nonzero = true;
        }
        if (!nonzero) throw Error("chi must be nonzero");
        sys_.check_index(s.s, "one-parameter subgroup");
        chi_ = WeightVec::weight(to_rat(chi_weight));
        chi_root_ = sys_.to_root_basis(chi_).coords;
        coset_ = std::make_shared<const CosetSystem>(enumerate_WJ(sys_, J_, guard));
    }

    const RootSystem& system() const { return sys_; }
    const WeightVec& chi() const { return chi_; }
    const RatVec& chi_root() const { return chi_root_; }
    const std::set<int>& J() const { return J_; }
    OneParamIndex s() const { return s_; }
    const CosetSystem& coset() const { return *coset_; }

    /// Same chi and coset, different lambda_s.
    LinearizationContext with_s(OneParamIndex s) const
    {
        sys_.check_index(s.s, "one-parameter subgroup");
        LinearizationContext c = *this;
        c.s_ = s;
        return c;
    }

    /// <w(chi), lambda_s>
    Rational pairing(const WeylElement& w) const
    {
        return (w * chi_root_)[s_.s - 1];
    }

    void require_member(const WeylElement& w) const
    {
        if (!w.in_WJ(J_)) throw Error("element " + format_word(w.word()) + " is not in W^J");
    }

private:
    RootSystem sys_;
    OneParamIndex s_;
    WeightVec chi_;
    RatVec chi_root_;
    std::set<int> J_;
    std::shared_ptr<const CosetSystem> coset_;
};

struct SemistabilityVerdict {
    bool admits = false;
    Rational pairing;
};

/// X(w)^{ss}(L(chi)) for lambda_s is nonempty iff <w(chi), lambda_s> <= 0.
inline SemistabilityVerdict admits_semistable(const WeylElement& w, const LinearizationContext& ctx)
{
    ctx.require_member(w);
    Rational a = ctx.pairing(w);
    return {a <= 0, a};
}

/// Semistable points for the whole torus: w(chi) <= 0 coordinatewise.
inline bool admits_semistable_T(const WeylElement& w, const LinearizationContext& ctx)
{
    ctx.require_member(w);
    auto img = w * ctx.chi_root();
    for (const auto& q : img)
        if (q > 0) return false;
    return true;
}

/// ss = s on X(w) iff every v <= w in W^J has nonzero pairing.
inline bool stable_equals_semistable(const WeylElement& w, const LinearizationContext& ctx)
{
    ctx.require_member(w);
    for (const auto& v : lower_interval(ctx.system(), w, ctx.coset()))
        if (ctx.pairing(v) == 0) return false;
    return true;
}

/// Bruhat-minimal elements of { w in W^J : <w(chi), lambda_s> <= 0 }.
inline std::vector<WeylElement> minimal_admitting(const LinearizationContext& ctx)
{
    std::vector<WeylElement> minimal;
    for (const auto& w : ctx.coset().elements()) {
        if (ctx.pairing(w) > 0) continue;
        bool dominated = false;
        for (const auto& u : minimal)
            if (bruhat_leq(ctx.system(), u, w)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(w);
    }
    return minimal;
}

/// ss = s on all of G/P. Computed by the full scan of W^J and by the
/// reduced criterion over minimal admitting elements; the two must agree.
inline bool ss_equals_s_whole_space(const LinearizationContext& ctx)
{
    bool full = true;
    for (const auto& v : ctx.coset().elements())
        if (ctx.pairing(v) == 0) {
            full = false;
            break;
        }
    bool reduced = true;
    for (const auto& v : minimal_admitting(ctx))
        if (ctx.pairing(v) == 0) {
            reduced = false;
            break;
        }
    if (full != reduced)
        throw ConsistencyError("full and reduced ss=s criteria disagree for " + ctx.system().name());
    return full;
}

/// The W-orbit of chi in root coordinates, computed directly by
/// reflecting weights (no coset enumeration involved).
inline std::set<RatVec> weyl_orbit(const RootSystem& sys, const RatVec& root_coords)
{
    std::set<RatVec> orbit{root_coords};
    std::vector<RatVec> frontier{root_coords};
    while (!frontier.empty()) {
        std::vector<RatVec> next;
        for (const auto& mu : frontier)
            for (int i = 1; i <= sys.rank(); ++i) {
                RatVec img = mu;
                img[i - 1] -= sys.coroot_pairing(mu, i);
                if (orbit.insert(img).second) next.push_back(std::move(img));
            }
        frontier = std::move(next);
    }
    return orbit;
}

/// ss = s on G/P for the whole torus T: <w(chi), lambda_s> != 0 for every
/// w in W and every s.
inline bool ss_equals_s_whole_space_T(const LinearizationContext& ctx)
{
    for (const auto& mu : weyl_orbit(ctx.system(), ctx.chi_root()))
        for (const auto& q : mu)
            if (q == 0) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Minuscule case

inline void require_minuscule(const RootSystem& sys, int r)
{
    if (!is_minuscule(sys, r))
        throw Error("omega_" + std::to_string(r) + " is not minuscule in " + sys.name());
}

/// <omega_r - tau(omega_r), lambda_s>
inline Rational weight_drop(const RootSystem& sys, const WeylElement& tau, int r, int s)
{
    auto om = fundamental_weight(sys, r).coords;
    return om[s - 1] - (tau * om)[s - 1];
}

/// The unique Bruhat-minimal element of W^{S \ alpha_r} whose omega_r-drop
/// at alpha_s equals c.
inline WeylElement tau_sc(const RootSystem& sys, const CosetSystem& cs, int r, int s, int c)
{
    require_minuscule(sys, r);
    sys.check_index(s, "one-parameter subgroup");
    if (cs.J() != maximal_parabolic(sys, r)) throw Error("coset system does not match S \\ {alpha_r}");
    Rational a_s = weight_drop(sys, cs.top(), r, s);
    if (c < 0 || Rational(c) > a_s)
        throw Error("drop c = " + std::to_string(c) + " outside [0, " + to_pretty(a_s) + "]");

    std::vector<WeylElement> minimal;
    int min_len = -1, at_min_len = 0;
    for (const auto& w : cs.elements()) {
        if (weight_drop(sys, w, r, s) != c) continue;
        if (min_len < 0) min_len = w.length();
        if (w.length() == min_len) ++at_min_len;
        bool dominated = false;
        for (const auto& u : minimal)
            if (bruhat_leq(sys, u, w)) {
                dominated = true;
                break;
            }
        if (!dominated) minimal.push_back(w);
    }
    if (minimal.size() != 1 || at_min_len != 1)
        throw ConsistencyError("drop-" + std::to_string(c) + " set in " + sys.name() + " (r=" + std::to_string(r) +
                               ", s=" + std::to_string(s) + ") has " + std::to_string(minimal.size()) +
                               " minimal elements");
    return minimal.front();
}

inline WeylElement tau_sc(const RootSystem& sys, int r, int s, int c)
{
    require_minuscule(sys, r);
    return tau_sc(sys, enumerate_WJ(sys, maximal_parabolic(sys, r)), r, s, c);
}

struct MinimalSchubert {
    WeylElement w;        ///< w_{s,r}
    Rational pairing;     ///< <w_{s,r}(omega_r), lambda_s>
    bool ss_eq_s = false; ///< pairing != 0
    int m = 1;            ///< least m with m omega_r in the root lattice
    int q = 1;            ///< least q >= 1 with q m >= m_s
};

/// w_{s,r}, computed by the q-formula (tau_{s,q}) and by the minimal
/// admitting antichain for chi = m omega_r; both must coincide.
inline MinimalSchubert minimal_schubert_minuscule(const RootSystem& sys, const CosetSystem& cs, int r, int s)
{
    require_minuscule(sys, r);
    sys.check_index(s, "one-parameter subgroup");
    MinimalSchubert out;
    out.m = least_m_root_lattice(sys, r);
    auto om = fundamental_weight(sys, r).coords;
    Rational m_s = out.m * om[s - 1];
    out.q = static_cast<int>(std::max<std::int64_t>(1, ceil_of(m_s / out.m)));
    WeylElement via_tau = tau_sc(sys, cs, r, s, out.q);

    IntVec chi(sys.rank(), 0);
    chi[r - 1] = out.m;
    LinearizationContext ctx(sys, chi, OneParamIndex{s});
    auto mins = minimal_admitting(ctx);
    if (mins.size() != 1)
        throw ConsistencyError("minimal admitting set for m*omega_" + std::to_string(r) + " in " + sys.name() +
                               " has " + std::to_string(mins.size()) + " elements");
    if (mins.front() != via_tau)
        throw ConsistencyError("tau_{s,q} and the minimal admitting element differ for " + sys.name());

    out.w = via_tau;
    out.pairing = (via_tau * om)[s - 1];
    out.ss_eq_s = out.pairing != 0;
    if (out.ss_eq_s != stable_equals_semistable(out.w, ctx))
        throw ConsistencyError("ss=s verdict disagrees with the lower-interval scan");
    return out;
}

inline MinimalSchubert minimal_schubert_minuscule(const RootSystem& sys, int r, int s)
{
    require_minuscule(sys, r);
    return minimal_schubert_minuscule(sys, enumerate_WJ(sys, maximal_parabolic(sys, r)), r, s);
}

} // namespace sgit
