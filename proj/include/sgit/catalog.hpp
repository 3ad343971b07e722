#pragma once

// Closed forms for w_{s,r} in every minuscule case, and a sweep that checks
// them against the exhaustive search.

#include "sgit/git.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace sgit {

/// One closed-form w_{s,r}. For type A, n is the size of SL(n) and the
/// root system has rank n - 1; otherwise n is the rank.
struct CatalogEntry {
    TypeLabel type = TypeLabel::A;
    int n = 0;
    int r = 0;
    int s = 0;
    Word word;
    Rational pairing;
    bool ss_eq_s = false;
    std::map<std::string, int> aux;
    /// Printed coefficients of omega_r - w(omega_r), when the formula gives them.
    std::optional<IntVec> drop;

    int rank() const { return type == TypeLabel::A ? n - 1 : n; }
    RootSystem system() const { return RootSystem(type, rank()); }
    std::string label() const
    {
        return RootSystem(type, rank()).name() + " r=" + std::to_string(r) + " s=" + std::to_string(s);
    }
};

namespace detail {

inline void check_range(int v, int lo, int hi, const char* what)
{
    if (v < lo || v > hi)
        throw Error(std::string(what) + " = " + std::to_string(v) + " outside " + std::to_string(lo) + ".." +
                    std::to_string(hi));
}

inline Rational ceil_half(int x) { return Rational((x + 1) / 2); }

inline Word swap_fork(Word w, int n)
{
    for (auto& x : w)
        if (x == n) x = n - 1;
        else if (x == n - 1) x = n;
    return w;
}

} // namespace detail

/// A_{n-1}: w_{s,r} = (s_s ... s_{p+1})(s_{s+1} ... s_{p+2}) ... (s_{s+r-p-1} ... s_r), p = floor(rs/n).
inline CatalogEntry closed_form_A(int n, int r, int s)
{
    if (n < 2) throw Error("type A needs n >= 2");
    detail::check_range(r, 1, n - 1, "r");
    detail::check_range(s, 1, n - 1, "s");
    CatalogEntry e;
    e.type = TypeLabel::A;
    e.n = n;
    e.r = r;
    e.s = s;
    const int p = r * s / n;
    for (int j = 0; j < r - p; ++j)
        for (int x = s + j; x >= p + 1 + j; --x) e.word.push_back(x);
    e.pairing = Rational(-r * s, n) + p;
    e.ss_eq_s = (r * s) % n != 0;
    e.aux["p"] = p;
    return e;
}

/// B_n, r = n. With j = n + 1 - s and p = ceil(s/2), l_{n-t} = min(p, t + 1)
/// for 0 <= t <= j + p - 2 and 0 otherwise; w = w_1(l_1) ... w_n(l_n).
inline CatalogEntry closed_form_B(int n, int s)
{
    if (n < 2) throw Error("type B needs n >= 2");
    detail::check_range(s, 1, n, "s");
    CatalogEntry e;
    e.type = TypeLabel::B;
    e.n = n;
    e.r = n;
    e.s = s;
    const int j = n + 1 - s, p = (s + 1) / 2;
    std::vector<int> l(n + 1, 0);
    for (int t = 0; t <= j + p - 2 && t <= n - 1; ++t) l[n - t] = std::min(p, t + 1);
    for (int k = 1; k <= n; ++k) {
        auto b = type_B_block(k, l[k]);
        e.word.insert(e.word.end(), b.begin(), b.end());
    }
    e.pairing = Rational(s, 2) - p;
    e.ss_eq_s = s % 2 == 1;
    IntVec a(n, 0);
    for (int k = 1; k <= n; ++k) {
        if (k <= s - p) a[k - 1] = 0;
        else if (k <= s - 1) a[k - 1] = k - s + p;
        else a[k - 1] = p;
    }
    e.drop = a;
    e.aux["j"] = j;
    e.aux["p"] = p;
    return e;
}

/// C_n, r = 1: w_{s,1} = s_s ... s_1.
inline CatalogEntry closed_form_C(int n, int s)
{
    if (n < 2) throw Error("type C needs n >= 2");
    detail::check_range(s, 1, n, "s");
    CatalogEntry e;
    e.type = TypeLabel::C;
    e.n = n;
    e.r = 1;
    e.s = s;
    for (int x = s; x >= 1; --x) e.word.push_back(x);
    e.pairing = s < n ? Rational(0) : Rational(-1, 2);
    e.ss_eq_s = s == n;
    IntVec a(n, 0);
    for (int k = 1; k <= s; ++k) a[k - 1] = 1;
    e.drop = a;
    return e;
}

/// D_n, r in {1, n-1, n}.
inline CatalogEntry closed_form_D(int n, int r, int s)
{
    if (n < 4) throw Error("type D needs n >= 4");
    detail::check_range(s, 1, n, "s");
    if (r != 1 && r != n - 1 && r != n)
        throw Error("omega_" + std::to_string(r) + " is not minuscule in D" + std::to_string(n));
    CatalogEntry e;
    e.type = TypeLabel::D;
    e.n = n;
    e.r = r;
    e.s = s;

    if (r == 1) {
        IntVec a(n, 0);
        if (s == n) {
            e.word.push_back(n);
            for (int x = n - 2; x >= 1; --x) e.word.push_back(x);
            for (int k = 1; k <= n - 2; ++k) a[k - 1] = 1;
            a[n - 1] = 1;
        } else {
            for (int x = s; x >= 1; --x) e.word.push_back(x);
            for (int k = 1; k <= s; ++k) a[k - 1] = 1;
        }
        e.drop = a;
        e.pairing = s <= n - 2 ? Rational(0) : Rational(-1, 2);
        e.ss_eq_s = s >= n - 1;
        return e;
    }

    if (r == n - 1) {
        // Image of the r = n entry under the diagram automorphism swapping n-1 and n.
        const int t = s == n ? n - 1 : (s == n - 1 ? n : s);
        CatalogEntry base = closed_form_D(n, n, t);
        e.word = detail::swap_fork(base.word, n);
        IntVec a = *base.drop;
        std::swap(a[n - 2], a[n - 1]);
        e.drop = a;
        e.pairing = base.pairing;
        e.ss_eq_s = base.ss_eq_s;
        e.aux = base.aux;
        return e;
    }

    IntVec a(n, 0);
    int p = 0, start = 0, end = 0;
    if (s == n) {
        p = (n + 3) / 4;
        start = n;
        end = n - 2 * p + 2;
        for (int k = n - 2 * p + 1; k <= n - 2; ++k) a[k - 1] = k - n + 2 * p;
        a[n - 2] = p - 1;
        a[n - 1] = p;
        e.pairing = Rational(n, 4) - p;
        e.ss_eq_s = n % 4 != 0;
    } else if (s == n - 1) {
        p = (n - 2 + 3) / 4;
        start = n;
        end = n - 2 * p + 1;
        for (int k = n - 2 * p; k <= n - 2; ++k) a[k - 1] = k - n + 2 * p + 1;
        a[n - 2] = p;
        a[n - 1] = p;
        e.pairing = Rational(n - 2, 4) - p;
        e.ss_eq_s = n % 4 != 2;
    } else {
        const int i = n - s;
        p = (n - i + 1) / 2;
        start = n - i + 1;
        end = n - i - p + 2;
        for (int k = n - i - p + 1; k <= n - i; ++k) a[k - 1] = k - n + i + p;
        for (int k = n - i + 1; k <= n - 2; ++k) a[k - 1] = p;
        if (p % 2 == 1) {
            a[n - 2] = (p - 1) / 2;
            a[n - 1] = (p + 1) / 2;
        } else {
            a[n - 2] = a[n - 1] = p / 2;
        }
        e.pairing = Rational(s, 2) - detail::ceil_half(s);
        e.ss_eq_s = s % 2 == 1;
        e.aux["i"] = i;
    }
    std::vector<int> ls;
    for (int l = start; l >= end; --l) ls.push_back(l);
    e.word = type_D_alternating(n, n, ls);
    e.drop = a;
    e.aux["p"] = p;
    return e;
}

namespace detail {

inline CatalogEntry from_printed(TypeLabel type, int r, int s, Word word, bool ss, std::optional<IntVec> drop)
{
    CatalogEntry e;
    e.type = type;
    e.n = type == TypeLabel::E6 ? 6 : 7;
    e.r = r;
    e.s = s;
    e.word = std::move(word);
    e.ss_eq_s = ss;
    e.drop = std::move(drop);
    RootSystem sys(type, e.n);
    auto om = fundamental_weight(sys, r).coords;
    e.pairing = (WeylElement::from_word(sys, e.word) * om)[s - 1];
    return e;
}

} // namespace detail

/// E6, r in {1, 6}: printed words; ss = s iff s is not 2 or 4.
inline CatalogEntry catalog_E6(int r, int s)
{
    if (r != 1 && r != 6) throw Error("omega_" + std::to_string(r) + " is not minuscule in E6");
    detail::check_range(s, 1, 6, "s");
    static const std::map<std::pair<int, int>, Word> words{
        {{1, 1}, {1, 3, 4, 5, 2, 4, 3, 1}},
        {{2, 1}, {2, 4, 3, 1}},
        {{3, 1}, {3, 4, 2, 5, 4, 3, 1}},
        {{4, 1}, {4, 5, 2, 4, 3, 1}},
        {{5, 1}, {5, 4, 6, 2, 5, 4, 3, 1}},
        {{6, 1}, {6, 5, 4, 3, 1}},
        {{1, 6}, {1, 3, 4, 5, 6}},
        {{2, 6}, {2, 4, 5, 6}},
        {{3, 6}, {3, 4, 2, 1, 3, 4, 5, 6}},
        {{4, 6}, {4, 3, 2, 4, 5, 6}},
        {{5, 6}, {5, 4, 2, 3, 4, 5, 6}},
        {{6, 6}, {6, 5, 4, 3, 2, 4, 5, 6}},
    };
    static const std::map<std::pair<int, int>, IntVec> drops{
        {{1, 1}, {2, 1, 2, 2, 1, 0}},
        {{5, 1}, {1, 1, 1, 2, 2, 1}},
        {{3, 6}, {1, 1, 2, 2, 1, 1}},
        {{6, 6}, {0, 1, 1, 2, 2, 2}},
    };
    std::optional<IntVec> drop;
    if (auto it = drops.find({s, r}); it != drops.end()) drop = it->second;
    return detail::from_printed(TypeLabel::E6, r, s, words.at({s, r}), s != 2 && s != 4, drop);
}

/// E7, r = 7: printed words; ss = s iff s is not 1, 3, 4 or 6.
inline CatalogEntry catalog_E7(int s)
{
    detail::check_range(s, 1, 7, "s");
    static const std::map<int, Word> words{
        {1, {1, 3, 4, 5, 6, 7}},
        {2, {2, 4, 5, 3, 4, 1, 2, 3, 4, 5, 6, 7}},
        {3, {3, 4, 1, 2, 3, 4, 5, 6, 7}},
        {4, {4, 3, 5, 4, 1, 2, 3, 4, 5, 6, 7}},
        {5, {5, 6, 4, 3, 5, 4, 2, 1, 3, 4, 5, 6, 7}},
        {6, {6, 5, 4, 3, 2, 4, 5, 6, 7}},
        {7, {7, 6, 5, 4, 3, 2, 4, 5, 6, 7}},
    };
    static const std::map<int, IntVec> drops{
        {2, {1, 2, 2, 3, 2, 1, 1}},
        {5, {1, 1, 2, 3, 3, 2, 1}},
        {7, {0, 1, 1, 2, 2, 2, 2}},
    };
    std::optional<IntVec> drop;
    if (auto it = drops.find(s); it != drops.end()) drop = it->second;
    return detail::from_printed(TypeLabel::E7, 7, s, words.at(s), s != 1 && s != 3 && s != 4 && s != 6, drop);
}

/// Catalog lookup by root system. For type A the system A_{n-1} maps to n.
inline CatalogEntry catalog_entry(const RootSystem& sys, int r, int s)
{
    require_minuscule(sys, r);
    switch (sys.type()) {
    case TypeLabel::A: return closed_form_A(sys.rank() + 1, r, s);
    case TypeLabel::B: return closed_form_B(sys.rank(), s);
    case TypeLabel::C: return closed_form_C(sys.rank(), s);
    case TypeLabel::D: return closed_form_D(sys.rank(), r, s);
    case TypeLabel::E6: return catalog_E6(r, s);
    case TypeLabel::E7: return catalog_E7(s);
    }
    throw Error("no catalog for " + sys.name());
}

struct CatalogCase {
    CatalogEntry entry;
    bool passed = false;
    std::vector<std::string> problems;
    /// Set when the printed word is not w_{s,r}; holds the searched word.
    std::optional<Word> erratum;
};

struct CatalogReport {
    std::vector<CatalogCase> cases;
    std::size_t passed() const
    {
        std::size_t k = 0;
        for (const auto& c : cases) k += c.passed;
        return k;
    }
    bool all_passed() const { return passed() == cases.size(); }
};

/// Checks one entry against the search: group equality, pairing, ss = s
/// bit (also against the lower-interval scan), reducedness, l(w) equal to
/// the height of the drop, and any printed drop.
inline CatalogCase check_entry(const CatalogEntry& entry, const CosetSystem& cs)
{
    CatalogCase out{entry, true, {}, std::nullopt};
    auto fail = [&](std::string msg) {
        out.passed = false;
        out.problems.push_back(std::move(msg));
    };
    RootSystem sys = entry.system();
    auto w = WeylElement::from_word(sys, entry.word);
    auto found = minimal_schubert_minuscule(sys, cs, entry.r, entry.s);
    if (w != found.w) {
        fail("word " + format_word(entry.word) + " differs from searched " + format_word(found.w.word()));
        out.erratum = found.w.word();
    }
    if (static_cast<int>(entry.word.size()) != w.length()) fail("word is not reduced");
    if (entry.pairing != found.pairing)
        fail("pairing " + to_pretty(entry.pairing) + " vs searched " + to_pretty(found.pairing));
    if (entry.ss_eq_s != found.ss_eq_s) fail("ss=s bit disagrees with search");
    IntVec chi(sys.rank(), 0);
    chi[entry.r - 1] = 1;
    if (w.in_WJ(maximal_parabolic(sys, entry.r))) {
        LinearizationContext ctx(sys, chi, OneParamIndex{entry.s});
        if (stable_equals_semistable(w, ctx) != entry.ss_eq_s) fail("ss=s bit disagrees with lower-interval scan");
    } else {
        fail("word is not a minimal coset representative");
    }
    auto om = fundamental_weight(sys, entry.r).coords;
    auto diff = om - w * om;
    Rational height = 0;
    for (const auto& q : diff) height += q;
    if (height != w.length()) fail("length differs from the height of omega_r - w(omega_r)");
    if (entry.drop) {
        if (diff != to_rat(*entry.drop)) {
            std::string got;
            for (const auto& q : diff) got += (got.empty() ? "" : ",") + to_pretty(q);
            fail("drop vector differs from printed expansion; computed (" + got + ")");
        }
    }
    return out;
}

/// Every minuscule r and every s for the given type. For type A, n is the
/// size of SL(n); otherwise the rank.
inline CatalogReport verify_catalog(TypeLabel type, int n)
{
    RootSystem sys(type, type == TypeLabel::A ? n - 1 : n);
    CatalogReport report;
    for (int r : minuscule_indices(sys)) {
        auto cs = enumerate_WJ(sys, maximal_parabolic(sys, r));
        for (int s = 1; s <= sys.rank(); ++s) report.cases.push_back(check_entry(catalog_entry(sys, r, s), cs));
    }
    return report;
}

/// Type A parametrization check: the explicit products enumerate W^J exactly.
inline bool type_A_parametrization_matches(int n, int r)
{
    RootSystem sys(TypeLabel::A, n - 1);
    auto cs = enumerate_WJ(sys, maximal_parabolic(sys, r));
    auto words = type_A_coset_words(n, r);
    std::set<IntMatrix> seen;
    for (const auto& word : words) {
        auto w = WeylElement::from_word(sys, word);
        if (static_cast<int>(word.size()) != w.length() || !cs.contains(w)) return false;
        seen.insert(w.action());
    }
    return seen.size() == words.size() && seen.size() == cs.size();
}

/// Same for the B_n and D_n coset theorems (r = n).
inline bool coset_generator_matches(TypeLabel type, int n)
{
    if (type != TypeLabel::B && type != TypeLabel::D) throw Error("coset generator exists for types B and D only");
    RootSystem sys(type, n);
    auto cs = enumerate_WJ(sys, maximal_parabolic(sys, n));
    auto words = type == TypeLabel::B ? type_B_coset_words(n) : type_D_coset_words(n);
    std::set<IntMatrix> seen;
    for (const auto& word : words) {
        auto w = WeylElement::from_word(sys, word);
        if (static_cast<int>(word.size()) != w.length() || !cs.contains(w)) return false;
        seen.insert(w.action());
    }
    return seen.size() == words.size() && seen.size() == cs.size();
}

} // namespace sgit
