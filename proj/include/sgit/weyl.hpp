#pragma once

// Weyl group elements acting on simple-root coordinates, the Bruhat order,
// and minimal coset representatives W^J.

#include "sgit/rootsys.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace sgit {

/// Simple reflection indices (1-based); the word (i1, ..., ik) stands for
/// the product s_{i1} s_{i2} ... s_{ik}.
using Word = std::vector<int>;

inline std::string format_word(const Word& w)
{
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += std::to_string(w[i]);
    }
    return out;
}

inline Word parse_word(const std::string& text)
{
    Word w;
    std::istringstream in(text);
    std::string tok;
    while (in >> tok) {
        try {
            std::size_t used = 0;
            int v = std::stoi(tok, &used);
            if (used != tok.size()) throw Error("");
            w.push_back(v);
        } catch (const std::exception&) {
            throw Error("malformed word token '" + tok + "'");
        }
    }
    return w;
}

namespace detail {

inline IntMatrix identity_matrix(int n)
{
    IntMatrix m(n, IntVec(n, 0));
    for (int i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

/// S_i * M, where S_i is the simple reflection matrix.
inline void reflect_left(const RootSystem& sys, IntMatrix& m, int i)
{
    const int n = sys.rank();
    const auto& c = sys.cartan()[i - 1];
    IntVec row(n, 0);
    for (int j = 0; j < n; ++j)
        if (c[j] != 0)
            for (int b = 0; b < n; ++b) row[b] += c[j] * m[j][b];
    for (int b = 0; b < n; ++b) m[i - 1][b] -= row[b];
}

/// M * S_i.
inline void reflect_right(const RootSystem& sys, IntMatrix& m, int i)
{
    const int n = sys.rank();
    const auto& c = sys.cartan()[i - 1];
    for (int a = 0; a < n; ++a) {
        int mi = m[a][i - 1];
        if (mi == 0) continue;
        for (int b = 0; b < n; ++b) m[a][b] -= mi * c[b];
    }
}

inline IntMatrix matmul(const IntMatrix& x, const IntMatrix& y)
{
    const std::size_t n = x.size();
    IntMatrix z(n, IntVec(n, 0));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t k = 0; k < n; ++k)
            if (x[a][k] != 0)
                for (std::size_t b = 0; b < n; ++b) z[a][b] += x[a][k] * y[k][b];
    return z;
}

inline bool column_negative(const IntMatrix& m, int col)
{
    for (const auto& row : m)
        if (row[col - 1] != 0) return row[col - 1] < 0;
    return false;
}

inline IntVec apply_matrix(const IntMatrix& m, const IntVec& v)
{
    IntVec out(v.size(), 0);
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = 0; b < v.size(); ++b) out[a] += m[a][b] * v[b];
    return out;
}

inline bool is_negative(const IntVec& v)
{
    for (int x : v)
        if (x != 0) return x < 0;
    return false;
}

} // namespace detail

/// An element of W, stored as its matrix on simple-root coordinates
/// together with a reduced word. Equality is equality of matrices.
class WeylElement {
public:
    WeylElement() = default;

    static WeylElement identity(const RootSystem& sys)
    {
        WeylElement e;
        e.act_ = e.inv_ = detail::identity_matrix(sys.rank());
        return e;
    }

    /// Builds the element from any word; the stored word is the given one
    /// when it is reduced, otherwise a reduced word of the same element.
    static WeylElement from_word(const RootSystem& sys, const Word& word)
    {
        WeylElement e = identity(sys);
        for (auto it = word.rbegin(); it != word.rend(); ++it) {
            sys.check_index(*it, "simple reflection");
            detail::reflect_left(sys, e.act_, *it);
            detail::reflect_right(sys, e.inv_, *it);
        }
        e.length_ = e.count_inversions(sys);
        if (static_cast<int>(word.size()) == e.length_) e.word_ = word;
        else e.word_ = e.canonical_word(sys);
        return e;
    }

    const Word& word() const { return word_; }
    int length() const { return length_; }
    const IntMatrix& action() const { return act_; }
    const IntMatrix& inverse_action() const { return inv_; }
    bool is_identity() const { return length_ == 0; }

    /// s_i * this
    WeylElement left_multiply(const RootSystem& sys, int i) const
    {
        sys.check_index(i, "simple reflection");
        WeylElement e = *this;
        bool up = !detail::column_negative(inv_, i);
        detail::reflect_left(sys, e.act_, i);
        detail::reflect_right(sys, e.inv_, i);
        if (up) {
            e.length_ = length_ + 1;
            e.word_.insert(e.word_.begin(), i);
        } else {
            e.length_ = length_ - 1;
            if (!word_.empty() && word_.front() == i) e.word_.erase(e.word_.begin());
            else e.word_ = e.canonical_word(sys);
        }
        return e;
    }

    /// Same element carrying its lexicographically least reduced word.
    WeylElement with_canonical_word(const RootSystem& sys) const
    {
        WeylElement e = *this;
        e.word_ = canonical_word(sys);
        return e;
    }

    /// w(alpha_j) > 0 for every j in J.
    bool in_WJ(const std::set<int>& J) const
    {
        for (int j : J)
            if (detail::column_negative(act_, j)) return false;
        return true;
    }

    bool has_left_descent(int q) const { return detail::column_negative(inv_, q); }

    RatVec apply(const RatVec& root_coords) const
    {
        RatVec out(root_coords.size(), Rational(0));
        for (std::size_t a = 0; a < out.size(); ++a)
            for (std::size_t b = 0; b < out.size(); ++b)
                if (act_[a][b] != 0) out[a] += root_coords[b] * act_[a][b];
        return out;
    }

    IntVec apply(const IntVec& root_coords) const { return detail::apply_matrix(act_, root_coords); }

    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.act_ == b.act_; }
    friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }
    friend bool operator<(const WeylElement& a, const WeylElement& b) { return a.act_ < b.act_; }

    int count_inversions(const RootSystem& sys) const
    {
        int count = 0;
        for (const auto& beta : sys.positive_roots())
            if (detail::is_negative(detail::apply_matrix(inv_, beta))) ++count;
        return count;
    }

private:
    friend WeylElement inverse(const WeylElement& w);
    friend WeylElement multiply(const RootSystem& sys, const WeylElement& u, const WeylElement& w);

    // Strips left descents with the smallest index first, which yields the
    // lexicographically least reduced word.
    Word canonical_word(const RootSystem& sys) const
    {
        Word out;
        IntMatrix inv = inv_;
        const int n = sys.rank();
        for (bool more = true; more;) {
            more = false;
            for (int q = 1; q <= n; ++q) {
                if (detail::column_negative(inv, q)) {
                    out.push_back(q);
                    detail::reflect_right(sys, inv, q);
                    more = true;
                    break;
                }
            }
        }
        return out;
    }

    Word word_;
    IntMatrix act_;
    IntMatrix inv_;
    int length_ = 0;
};

inline RatVec operator*(const WeylElement& w, const RatVec& v) { return w.apply(v); }

/// w(mu); the result keeps the basis tag of mu.
inline WeightVec apply(const RootSystem& sys, const WeylElement& w, const WeightVec& mu)
{
    auto r = sys.to_root_basis(mu);
    auto out = WeightVec::root(w.apply(r.coords));
    return mu.basis == Basis::Root ? out : sys.to_weight_basis(out);
}

inline WeylElement inverse(const WeylElement& w)
{
    WeylElement e = w;
    std::swap(e.act_, e.inv_);
    e.word_.assign(w.word_.rbegin(), w.word_.rend());
    return e;
}

inline WeylElement multiply(const RootSystem& sys, const WeylElement& u, const WeylElement& w)
{
    WeylElement e;
    e.act_ = detail::matmul(u.act_, w.act_);
    e.inv_ = detail::matmul(w.inv_, u.inv_);
    e.length_ = e.count_inversions(sys);
    Word cat = u.word_;
    cat.insert(cat.end(), w.word_.begin(), w.word_.end());
    if (static_cast<int>(cat.size()) == e.length_) e.word_ = std::move(cat);
    else e.word_ = e.canonical_word(sys);
    return e;
}

/// {q : l(s_q w) < l(w)}.
inline std::set<int> left_descents(const RootSystem& sys, const WeylElement& w)
{
    std::set<int> out;
    for (int q = 1; q <= sys.rank(); ++q)
        if (w.has_left_descent(q)) out.insert(q);
    return out;
}

/// R^+(w^{-1}) = { beta > 0 : w^{-1}(beta) < 0 }.
inline std::vector<IntVec> inversion_roots(const RootSystem& sys, const WeylElement& w)
{
    std::vector<IntVec> out;
    for (const auto& beta : sys.positive_roots())
        if (detail::is_negative(detail::apply_matrix(w.inverse_action(), beta))) out.push_back(beta);
    return out;
}

/// Bruhat order via the lifting property: if s w < w then
/// u <= w  iff  (s u < u ? s u <= s w : u <= s w).
/// Each step shortens w, so the recursion unrolls into a loop.
inline bool bruhat_leq(const RootSystem& sys, WeylElement u, WeylElement w)
{
    while (true) {
        if (u.length() > w.length()) return false;
        if (u.length() == w.length()) return u == w;
        if (u.is_identity()) return true;
        int q = 1;
        while (!w.has_left_descent(q)) ++q;
        if (u.has_left_descent(q)) u = u.left_multiply(sys, q);
        w = w.left_multiply(sys, q);
    }
}

/// Default cap on enumerated coset sizes.
inline constexpr std::size_t kDefaultEnumerationGuard = 1'000'000;

/// W^J with its induced Bruhat order.
class CosetSystem {
public:
    const std::set<int>& J() const { return J_; }
    const std::vector<WeylElement>& elements() const { return elements_; }
    std::size_t size() const { return elements_.size(); }
    const WeylElement& operator[](std::size_t i) const { return elements_[i]; }

    std::optional<std::size_t> index_of(const WeylElement& w) const
    {
        auto it = index_.find(w.action());
        if (it == index_.end()) return std::nullopt;
        return it->second;
    }
    bool contains(const WeylElement& w) const { return index_.count(w.action()) > 0; }

    /// Indices v with v covered by element i (length one less and v < w).
    const std::vector<std::size_t>& lower_covers(std::size_t i) const { return covers_[i]; }
    int rank_of(std::size_t i) const { return elements_[i].length(); }
    int max_length() const { return elements_.back().length(); }

    /// The longest element w_0^J.
    const WeylElement& top() const { return elements_.back(); }

private:
    friend CosetSystem enumerate_WJ(const RootSystem&, const std::set<int>&, std::size_t);

    std::set<int> J_;
    std::vector<WeylElement> elements_;
    std::map<IntMatrix, std::size_t> index_;
    std::vector<std::vector<std::size_t>> covers_;
};

/// Breadth-first by length: left multiplication by simple reflections,
/// keeping length-increasing products that remain in W^J.
inline CosetSystem enumerate_WJ(const RootSystem& sys, const std::set<int>& J,
                                std::size_t guard = kDefaultEnumerationGuard)
{
    for (int j : J) sys.check_index(j, "parabolic");
    CosetSystem cs;
    cs.J_ = J;
    std::vector<WeylElement> level{WeylElement::identity(sys)};
    std::vector<std::pair<std::size_t, std::size_t>> spans;
    while (!level.empty()) {
        std::size_t begin = cs.elements_.size();
        for (auto& w : level) {
            cs.index_.emplace(w.action(), cs.elements_.size());
            cs.elements_.push_back(w.with_canonical_word(sys));
            if (cs.elements_.size() > guard)
                throw ResourceError("W^J enumeration for " + sys.name() + " exceeded the guard of " +
                                    std::to_string(guard) + " elements");
        }
        spans.emplace_back(begin, cs.elements_.size());
        std::vector<WeylElement> next;
        std::set<IntMatrix> seen;
        for (std::size_t i = begin; i < cs.elements_.size(); ++i) {
            const auto& w = cs.elements_[i];
            for (int q = 1; q <= sys.rank(); ++q) {
                if (w.has_left_descent(q)) continue;
                auto v = w.left_multiply(sys, q);
                if (!v.in_WJ(J)) continue;
                if (seen.insert(v.action()).second) next.push_back(std::move(v));
            }
        }
        level = std::move(next);
    }
    cs.covers_.resize(cs.elements_.size());
    for (std::size_t l = 1; l < spans.size(); ++l)
        for (std::size_t i = spans[l].first; i < spans[l].second; ++i)
            for (std::size_t k = spans[l - 1].first; k < spans[l - 1].second; ++k)
                if (bruhat_leq(sys, cs.elements_[k], cs.elements_[i])) cs.covers_[i].push_back(k);
    return cs;
}

/// S \ {alpha_r}.
inline std::set<int> maximal_parabolic(const RootSystem& sys, int r)
{
    sys.check_index(r, "parabolic");
    std::set<int> J;
    for (int i = 1; i <= sys.rank(); ++i)
        if (i != r) J.insert(i);
    return J;
}

/// { v in W^J : v <= w }, in the coset's length order.
inline std::vector<WeylElement> lower_interval(const RootSystem& sys, const WeylElement& w, const CosetSystem& cs)
{
    if (!cs.contains(w)) throw Error("element " + format_word(w.word()) + " is not in W^J");
    std::vector<WeylElement> out;
    for (const auto& v : cs.elements())
        if (v.length() <= w.length() && bruhat_leq(sys, v, w)) out.push_back(v);
    return out;
}

/// All (q, s_q w) with w^{-1}(alpha_q) < 0; each s_q w is checked to lie in
/// W^J with length l(w) - 1.
inline std::vector<std::pair<int, WeylElement>> schubert_divisor_moves(const RootSystem& sys, const WeylElement& w,
                                                                       const std::set<int>& J)
{
    if (!w.in_WJ(J)) throw Error("element " + format_word(w.word()) + " is not in W^J");
    std::vector<std::pair<int, WeylElement>> out;
    for (int q = 1; q <= sys.rank(); ++q) {
        if (!w.has_left_descent(q)) continue;
        auto v = w.left_multiply(sys, q);
        if (!v.in_WJ(J) || v.length() != w.length() - 1)
            throw ConsistencyError("divisor move s_" + std::to_string(q) + " leaves W^J");
        out.emplace_back(q, std::move(v));
    }
    return out;
}

/// One-line notation (w(1), ..., w(n)) for type A_{n-1}.
inline std::vector<int> one_line_notation_A(const RootSystem& sys, const WeylElement& w)
{
    if (sys.type() != TypeLabel::A) throw Error("one-line notation requires type A, got " + sys.name());
    const int n = sys.rank() + 1;
    std::vector<int> out(n);
    for (int j = 1; j <= n; ++j) {
        int x = j;
        for (auto it = w.word().rbegin(); it != w.word().rend(); ++it) {
            if (x == *it) x = *it + 1;
            else if (x == *it + 1) x = *it;
        }
        out[j - 1] = x;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Explicit parametrizations of minuscule W^{S \ alpha_r}.

/// Type A_{n-1}, r fixed: the identity and every product
/// (s_{a_i} ... s_i)(s_{a_{i+1}} ... s_{i+1}) ... (s_{a_r} ... s_r)
/// with i <= a_i < a_{i+1} < ... < a_r <= n - 1.
inline std::vector<Word> type_A_coset_words(int n, int r)
{
    if (r < 1 || r > n - 1) throw Error("r out of range for A_" + std::to_string(n - 1));
    std::vector<Word> out{Word{}};
    for (int i = 1; i <= r; ++i) {
        std::vector<int> a(r + 1, 0);
        std::function<void(int, int)> pick = [&](int j, int lo) {
            if (j > r) {
                Word w;
                for (int k = i; k <= r; ++k)
                    for (int x = a[k]; x >= k; --x) w.push_back(x);
                out.push_back(std::move(w));
                return;
            }
            for (int v = std::max(lo, j); v <= n - 1 - (r - j); ++v) {
                a[j] = v;
                pick(j + 1, v + 1);
            }
        };
        pick(i, i);
    }
    return out;
}

/// w_k(l) = s_{k+l-1} ... s_{k+1} s_k in B_n; w_k(0) = id.
inline Word type_B_block(int k, int l)
{
    Word w;
    for (int x = k + l - 1; x >= k; --x) w.push_back(x);
    return w;
}

/// B_n, r = n: products w_1(l_1) ... w_n(l_n) over 0 <= l_k <= n + 1 - k with
/// l_{k-1} <= l_k + 1, and l_{k-1} <= l_k whenever l_k <= n - k.
inline std::vector<Word> type_B_coset_words(int n)
{
    if (n < 2) throw Error("B_n needs n >= 2");
    std::vector<Word> out;
    std::vector<int> l(n + 1, 0);
    std::function<void(int)> pick = [&](int k) {
        if (k == 0) {
            Word w;
            for (int i = 1; i <= n; ++i) {
                auto b = type_B_block(i, l[i]);
                w.insert(w.end(), b.begin(), b.end());
            }
            out.push_back(std::move(w));
            return;
        }
        for (int v = 0; v <= n + 1 - k; ++v) {
            if (k < n) {
                if (v > l[k + 1] + 1) continue;
                if (l[k + 1] <= n - (k + 1) && v > l[k + 1]) continue;
            }
            l[k] = v;
            pick(k - 1);
        }
    };
    pick(n);
    return out;
}

/// D_n blocks: w_n(l) = s_{l-1} ... s_{n-2} s_n and w_{n-1}(l) = s_{l-1} ... s_{n-2} s_{n-1}
/// for 2 <= l <= n - 1; w_n(n) = s_n and w_{n-1}(n) = s_{n-1}.
inline Word type_D_block(int n, int last, int l)
{
    Word w;
    for (int x = l - 1; x <= n - 2; ++x) w.push_back(x);
    w.push_back(last);
    return w;
}

/// Product of D_n blocks for l = ls[0] > ls[1] > ..., alternating so that the
/// rightmost block ends in s_last.
inline Word type_D_alternating(int n, int last, const std::vector<int>& ls)
{
    const int other = last == n ? n - 1 : n;
    Word w;
    const int h = static_cast<int>(ls.size());
    for (int idx = 0; idx < h; ++idx) {
        auto b = type_D_block(n, (h - 1 - idx) % 2 == 0 ? last : other, ls[idx]);
        w.insert(w.end(), b.begin(), b.end());
    }
    return w;
}

/// D_n, r = n: the identity and all alternating products over strictly
/// decreasing l's in {2, ..., n} ending with a w_n block.
inline std::vector<Word> type_D_coset_words(int n)
{
    if (n < 4) throw Error("D_n needs n >= 4");
    std::vector<Word> out{Word{}};
    for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
        std::vector<int> ls;
        for (int l = n; l >= 2; --l)
            if (mask & (1 << (l - 2))) ls.push_back(l);
        out.push_back(type_D_alternating(n, n, ls));
    }
    return out;
}

} // namespace sgit
