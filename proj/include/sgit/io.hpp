#pragma once

// JSON and CSV serialization. Objects use sorted keys and rationals are
// always "num/den" strings, so parse + dump reproduces a document exactly.

#include "sgit/quotient.hpp"

#include <json.hpp>

#include <sstream>

namespace sgit {

using Json = nlohmann::json;

inline Json rational_json(const Rational& q) { return to_string(q); }

inline Rational rational_from_json(const Json& j)
{
    if (!j.is_string()) throw Error("rational must be a \"num/den\" string");
    return parse_rational(j.get<std::string>());
}

inline Json case_json(TypeLabel type, int rank, int r, int s)
{
    return Json{{"type", to_string(type)}, {"rank", rank}, {"r", r}, {"s", s}};
}

inline Json to_json(const CatalogEntry& e)
{
    return Json{{"type", to_string(e.type)}, {"n", e.n},
                {"r", e.r},                  {"s", e.s},
                {"word", format_word(e.word)}, {"pairing", rational_json(e.pairing)},
                {"ss_eq_s", e.ss_eq_s},      {"length", static_cast<int>(e.word.size())}};
}

inline CatalogEntry catalog_entry_from_json(const Json& j)
{
    const int n = j.at("n").get<int>();
    auto type = parse_type(j.at("type").get<std::string>(), n);
    RootSystem sys(type, type == TypeLabel::A ? n - 1 : n);
    CatalogEntry e = catalog_entry(sys, j.at("r").get<int>(), j.at("s").get<int>());
    e.word = parse_word(j.at("word").get<std::string>());
    e.pairing = rational_from_json(j.at("pairing"));
    e.ss_eq_s = j.at("ss_eq_s").get<bool>();
    return e;
}

inline Json to_json(const MinimalSchubert& ms, const RootSystem& sys, int r, int s)
{
    return Json{{"case", case_json(sys.type(), sys.rank(), r, s)},
                {"word", format_word(ms.w.word())},
                {"length", ms.w.length()},
                {"pairing", rational_json(ms.pairing)},
                {"ss_eq_s", ms.ss_eq_s},
                {"m", ms.m},
                {"q", ms.q}};
}

inline Json to_json(const IrredSummand& x)
{
    return Json{{"sigma", x.sigma.parts},
                {"hw_left", x.hw_left},
                {"hw_right", x.hw_right},
                {"dim_left", x.dim_left},
                {"dim_right", x.dim_right}};
}

inline Json to_json(const QuotientReport& q, const std::vector<IrredSummand>& decomposition = {})
{
    Json dec = Json::array();
    for (const auto& x : decomposition) dec.push_back(to_json(x));
    Json j{{"case", case_json(q.type, q.rank, q.r, q.s)},
           {"word", format_word(q.w.word())},
           {"pairing", rational_json(q.pairing)},
           {"ss_eq_s", q.ss_eq_s},
           {"kind", to_string(q.kind)},
           {"k", q.k},
           {"a", q.a},
           {"m_used", q.m_used},
           {"m_root_lattice", q.m_root_lattice},
           {"hilbert", q.hilbert},
           {"decomposition", dec},
           {"notes", q.notes}};
    if (q.kind == QuotientKind::MatrixProj) {
        j["rows"] = q.rows;
        j["cols"] = q.cols;
    }
    return j;
}

/// Minimal admitting antichain for an arbitrary dominant chi, with verdicts.
inline Json analyze_json(const LinearizationContext& ctx)
{
    const auto& sys = ctx.system();
    auto mins = minimal_admitting(ctx);
    std::sort(mins.begin(), mins.end(), [](const WeylElement& a, const WeylElement& b) { return a.word() < b.word(); });
    Json chi = Json::array();
    for (const auto& q : ctx.chi().coords) chi.push_back(q.numerator());
    Json anti = Json::array(), verdicts = Json::array();
    for (const auto& w : mins) {
        anti.push_back({{"length", w.length()}, {"pairing", rational_json(ctx.pairing(w))}, {"word", format_word(w.word())}});
        verdicts.push_back({{"word", format_word(w.word())},
                            {"admits", admits_semistable(w, ctx).admits},
                            {"admits_T", admits_semistable_T(w, ctx)},
                            {"ss_eq_s", stable_equals_semistable(w, ctx)}});
    }
    Json chi_root = Json::array();
    for (const auto& q : ctx.chi_root()) chi_root.push_back(rational_json(q));
    return Json{{"case", {{"type", to_string(sys.type())}, {"rank", sys.rank()}, {"chi", chi}, {"s", ctx.s().s}}},
                {"J", ctx.J()},
                {"chi_root", chi_root},
                {"coset_size", ctx.coset().size()},
                {"antichain", anti},
                {"verdicts", verdicts},
                {"ss_eq_s_whole_space", ss_equals_s_whole_space(ctx)}};
}

inline std::string dump(const Json& j) { return j.dump(); }

/// Parse and re-serialize; identical output is the canonical-form contract.
inline std::string canonicalize(const std::string& text) { return Json::parse(text).dump(); }

inline std::string csv_escape(const std::string& x)
{
    if (x.find_first_of(",\"\n") == std::string::npos) return x;
    std::string out = "\"";
    for (char c : x) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string csv_row(const std::vector<std::string>& cells)
{
    std::string out;
    for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + csv_escape(cells[i]);
    return out + "\n";
}

} // namespace sgit
