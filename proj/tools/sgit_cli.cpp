// sgit: command-line front end.
//
// Exit status: 0 success, 1 verification or consistency failure, 2 bad flags
// or inputs.

#include "sgit/sgit.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace sgit;

namespace {

struct Options {
    std::string type;
    int rank = 0;
    int r = 0;
    int s = 0;
    std::string chi;
    int k_deg = 1;
    int d_max = 3;
    std::string format = "text";
    std::size_t guard = 0;
};

class UsageError : public Error {
public:
    using Error::Error;
};

std::size_t effective_guard(const Options& o)
{
    if (o.guard) return o.guard;
    if (const char* env = std::getenv("SGIT_ENUM_GUARD")) {
        try {
            auto v = std::stoull(env);
            if (v > 0) return v;
        } catch (const std::exception&) {
        }
        throw UsageError("SGIT_ENUM_GUARD must be a positive integer");
    }
    return kDefaultEnumerationGuard;
}

RootSystem system_of(const Options& o)
{
    if (o.type.empty()) throw UsageError("--type is required");
    if (o.rank < 1) throw UsageError("--rank is required");
    return RootSystem(parse_type(o.type, o.rank), o.rank);
}

void require(bool ok, const char* msg)
{
    if (!ok) throw UsageError(msg);
}

IntVec parse_chi(const std::string& text)
{
    IntVec out;
    std::stringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        try {
            std::size_t used = 0;
            out.push_back(std::stoi(tok, &used));
            if (used != tok.size()) throw std::invalid_argument(tok);
        } catch (const std::exception&) {
            throw UsageError("malformed --chi entry '" + tok + "'");
        }
    }
    return out;
}

std::string join(const std::vector<std::int64_t>& v, const char* sep = ",")
{
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) out += (i ? sep : "") + std::to_string(v[i]);
    return out;
}

std::string join(const IntVec& v, const char* sep = ",")
{
    return join(std::vector<std::int64_t>(v.begin(), v.end()), sep);
}

int cmd_minimal(const Options& o)
{
    auto sys = system_of(o);
    require(o.r > 0 && o.s > 0, "--r and --s are required");
    require_minuscule(sys, o.r);
    sys.check_index(o.s, "one-parameter subgroup");
    auto cs = enumerate_WJ(sys, maximal_parabolic(sys, o.r), effective_guard(o));
    auto ms = minimal_schubert_minuscule(sys, cs, o.r, o.s);
    auto entry = catalog_entry(sys, o.r, o.s);
    auto chk = check_entry(entry, cs);
    if (o.format == "json") {
        auto j = to_json(ms, sys, o.r, o.s);
        j["catalog"] = to_json(entry);
        j["catalog_matches"] = chk.passed;
        std::cout << dump(j) << "\n";
    } else if (o.format == "csv") {
        std::cout << csv_row({"type", "rank", "r", "s", "word", "length", "pairing", "ss_eq_s", "m", "q"});
        std::cout << csv_row({to_string(sys.type()), std::to_string(sys.rank()), std::to_string(o.r),
                              std::to_string(o.s), format_word(ms.w.word()), std::to_string(ms.w.length()),
                              to_string(ms.pairing), ms.ss_eq_s ? "true" : "false", std::to_string(ms.m),
                              std::to_string(ms.q)});
    } else {
        std::cout << detail::case_name(sys, o.r, o.s) << "\n"
                  << "  w_{s,r}   " << format_word(ms.w.word()) << "  (length " << ms.w.length() << ")\n"
                  << "  pairing   " << to_pretty(ms.pairing) << "\n"
                  << "  ss = s    " << (ms.ss_eq_s ? "yes" : "no") << "\n"
                  << "  m, q      " << ms.m << ", " << ms.q << "\n"
                  << "  catalog   " << format_word(entry.word) << (chk.passed ? "  (matches)" : "  (MISMATCH)") << "\n";
        for (const auto& p : chk.problems) std::cout << "    " << p << "\n";
    }
    return chk.passed ? 0 : 1;
}

int cmd_analyze(const Options& o)
{
    auto sys = system_of(o);
    require(!o.chi.empty(), "--chi is required");
    require(o.s > 0, "--s is required");
    LinearizationContext ctx(sys, parse_chi(o.chi), {o.s}, effective_guard(o));
    auto j = analyze_json(ctx);
    if (o.format == "json") {
        std::cout << dump(j) << "\n";
    } else if (o.format == "csv") {
        std::cout << csv_row({"word", "length", "pairing", "admits_T", "ss_eq_s"});
        for (std::size_t i = 0; i < j["antichain"].size(); ++i) {
            const auto& a = j["antichain"][i];
            const auto& v = j["verdicts"][i];
            std::cout << csv_row({a["word"], std::to_string(a["length"].get<int>()), a["pairing"],
                                  v["admits_T"].get<bool>() ? "true" : "false",
                                  v["ss_eq_s"].get<bool>() ? "true" : "false"});
        }
    } else {
        std::cout << sys.name() << ", chi = (" << o.chi << "), s = " << o.s << ", |W^J| = " << ctx.coset().size()
                  << "\n  minimal admitting elements:\n";
        for (std::size_t i = 0; i < j["antichain"].size(); ++i) {
            const auto& a = j["antichain"][i];
            const auto& v = j["verdicts"][i];
            std::cout << "    " << a["word"].get<std::string>() << "  pairing "
                      << to_pretty(parse_rational(a["pairing"].get<std::string>()))
                      << "  ss=s " << (v["ss_eq_s"].get<bool>() ? "yes" : "no") << "\n";
        }
        std::cout << "  ss = s on G/P: " << (j["ss_eq_s_whole_space"].get<bool>() ? "yes" : "no") << "\n";
    }
    return 0;
}

int cmd_quotient(const Options& o)
{
    auto sys = system_of(o);
    require(o.r > 0 && o.s > 0, "--r and --s are required");
    require(o.d_max >= 0, "--d-max must be nonnegative");
    auto q = quotient_of_minimal(sys, o.r, o.s, o.d_max, effective_guard(o));
    std::vector<IrredSummand> dec;
    if (q.kind == QuotientKind::MatrixProj) dec = decompose_Rk(sys.rank() + 1, o.r, o.s, o.k_deg);
    if (o.format == "json") {
        std::cout << dump(to_json(q, dec)) << "\n";
    } else if (o.format == "csv") {
        std::cout << csv_row({"case", "word", "pairing", "ss_eq_s", "kind", "k", "a", "m_used", "hilbert"});
        std::cout << csv_row({q.case_label(), format_word(q.w.word()), to_string(q.pairing),
                              q.ss_eq_s ? "true" : "false", to_string(q.kind), std::to_string(q.k),
                              std::to_string(q.a), std::to_string(q.m_used), join(q.hilbert, " ")});
    } else {
        std::cout << q.case_label() << "\n"
                  << "  w_{s,r}   " << format_word(q.w.word()) << "\n"
                  << "  pairing   " << to_pretty(q.pairing) << "\n"
                  << "  quotient  ";
        switch (q.kind) {
        case QuotientKind::Point: std::cout << "point"; break;
        case QuotientKind::ProjSpace: std::cout << "(P^" << q.k - 1 << ", O(" << q.a << "))"; break;
        case QuotientKind::MatrixProj:
            std::cout << "(P(M(" << q.rows << "," << q.cols << ")), O(" << q.a << "))";
            break;
        case QuotientKind::OutsideProved: std::cout << "not identified (outside the proved cases)"; break;
        }
        std::cout << "\n  m used    " << q.m_used << "\n  hilbert   " << join(q.hilbert, " ") << "\n";
        for (const auto& n : q.notes) std::cout << "  note: " << n << "\n";
        if (!dec.empty()) std::cout << "  degree " << o.k_deg << " decomposition: " << dec.size() << " summands\n";
    }
    return 0;
}

int cmd_decompose(const Options& o)
{
    auto sys = system_of(o);
    require(sys.type() == TypeLabel::A, "decompose requires type A");
    require(o.r > 0 && o.s > 0, "--r and --s are required");
    require(o.k_deg >= 0, "--k-deg must be nonnegative");
    const int n = sys.rank() + 1;
    auto parts = decompose_Rk(n, o.r, o.s, o.k_deg);
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& x : parts) arr.push_back(to_json(x));
        auto td = type_A_data(n, o.r, o.s);
        std::cout << dump(Json{{"case", case_json(sys.type(), sys.rank(), o.r, o.s)},
                               {"k_deg", o.k_deg},
                               {"a", td.a},
                               {"total", total_dimension(parts)},
                               {"decomposition", arr}})
                  << "\n";
    } else if (o.format == "csv") {
        std::cout << csv_row({"sigma", "hw_left", "hw_right", "dim_left", "dim_right"});
        for (const auto& x : parts)
            std::cout << csv_row({join(x.sigma.parts, " "), join(x.hw_left, " "), join(x.hw_right, " "),
                                  std::to_string(x.dim_left), std::to_string(x.dim_right)});
    } else {
        std::cout << "degree " << o.k_deg << " invariants of " << detail::case_name(sys, o.r, o.s) << "\n";
        for (const auto& x : parts)
            std::cout << "  sigma (" << join(x.sigma.parts) << ")  left [" << join(x.hw_left) << "] dim "
                      << x.dim_left << "  right [" << join(x.hw_right) << "] dim " << x.dim_right << "\n";
        std::cout << "  total " << total_dimension(parts) << "\n";
    }
    return 0;
}

int cmd_enumerate(const Options& o)
{
    auto sys = system_of(o);
    std::set<int> J;
    std::optional<LinearizationContext> ctx;
    if (!o.chi.empty()) {
        require(o.s > 0, "--s is required with --chi");
        ctx.emplace(sys, parse_chi(o.chi), OneParamIndex{o.s}, effective_guard(o));
        J = ctx->J();
    } else if (o.r > 0) {
        J = maximal_parabolic(sys, o.r);
    }
    CosetSystem local;
    const CosetSystem* cs = nullptr;
    if (ctx) {
        cs = &ctx->coset();
    } else {
        local = enumerate_WJ(sys, J, effective_guard(o));
        cs = &local;
    }
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& w : cs->elements()) {
            Json e{{"word", format_word(w.word())}, {"length", w.length()}};
            if (ctx) e["pairing"] = rational_json(ctx->pairing(w));
            arr.push_back(e);
        }
        std::cout << dump(Json{{"system", sys.name()}, {"J", J}, {"size", cs->size()}, {"elements", arr}}) << "\n";
    } else if (o.format == "csv") {
        std::cout << csv_row(ctx ? std::vector<std::string>{"word", "length", "pairing"}
                                 : std::vector<std::string>{"word", "length"});
        for (const auto& w : cs->elements()) {
            std::vector<std::string> row{format_word(w.word()), std::to_string(w.length())};
            if (ctx) row.push_back(to_string(ctx->pairing(w)));
            std::cout << csv_row(row);
        }
    } else {
        std::cout << sys.name() << ", |W^J| = " << cs->size() << "\n";
        for (const auto& w : cs->elements()) {
            std::cout << "  " << w.length() << "  " << (w.is_identity() ? "e" : format_word(w.word()));
            if (ctx) std::cout << "  pairing " << to_pretty(ctx->pairing(w));
            std::cout << "\n";
        }
    }
    return 0;
}

int cmd_verify(const Options& o)
{
    std::ostringstream sink;
    auto results = run_acceptance(o.format == "text" ? std::cout : sink, true);
    bool ok = true;
    for (const auto& r : results) ok = ok && r.passed;
    if (o.format == "json") {
        Json arr = Json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id},
                           {"title", r.title},
                           {"passed", r.passed},
                           {"checks", r.checks},
                           {"failures", r.failures},
                           {"notes", r.notes}});
        std::cout << dump(Json{{"criteria", arr}, {"passed", ok}}) << "\n";
    } else if (o.format == "csv") {
        std::cout << csv_row({"id", "title", "passed", "checks", "failed"});
        for (const auto& r : results)
            std::cout << csv_row({std::to_string(r.id), r.title, r.passed ? "true" : "false",
                                  std::to_string(r.checks), std::to_string(r.failures.size())});
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Semistability and GIT quotients of Schubert varieties"};
    app.require_subcommand(1);
    Options o;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--type", o.type, "A, B, C, D, E6, E7 (or E with --rank)");
        sub->add_option("--rank", o.rank, "rank of the root system");
        sub->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--guard", o.guard, "cap on enumerated coset sizes");
    };
    std::map<std::string, std::function<int(const Options&)>> handlers{
        {"minimal", cmd_minimal},     {"analyze", cmd_analyze},     {"quotient", cmd_quotient},
        {"decompose", cmd_decompose}, {"enumerate", cmd_enumerate}, {"verify", cmd_verify}};

    auto* minimal = app.add_subcommand("minimal", "w_{s,r}, its pairing and the ss=s verdict");
    common(minimal);
    minimal->add_option("--r", o.r, "minuscule fundamental weight index");
    minimal->add_option("--s", o.s, "one-parameter subgroup index");

    auto* analyze = app.add_subcommand("analyze", "minimal admitting elements for a dominant chi");
    common(analyze);
    analyze->add_option("--chi", o.chi, "comma-separated fundamental-weight coefficients");
    analyze->add_option("--s", o.s, "one-parameter subgroup index");

    auto* quotient = app.add_subcommand("quotient", "GIT quotient of X(w_{s,r})");
    common(quotient);
    quotient->add_option("--r", o.r, "minuscule fundamental weight index");
    quotient->add_option("--s", o.s, "one-parameter subgroup index");
    quotient->add_option("--d-max", o.d_max, "largest degree for Hilbert values");
    quotient->add_option("--k-deg", o.k_deg, "degree of the attached decomposition (type A)");

    auto* decompose = app.add_subcommand("decompose", "irreducible summands of R_k (type A)");
    common(decompose);
    decompose->add_option("--r", o.r, "fundamental weight index");
    decompose->add_option("--s", o.s, "one-parameter subgroup index");
    decompose->add_option("--k-deg", o.k_deg, "degree k");

    auto* enumerate = app.add_subcommand("enumerate", "list W^J");
    common(enumerate);
    enumerate->add_option("--r", o.r, "use J = S minus alpha_r");
    enumerate->add_option("--chi", o.chi, "derive J from chi and print pairings");
    enumerate->add_option("--s", o.s, "one-parameter subgroup index (with --chi)");

    auto* verify = app.add_subcommand("verify", "run the acceptance sweep");
    verify->add_option("--format", o.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    std::string name = app.get_subcommands().front()->get_name();
    try {
        return handlers.at(name)(o);
    } catch (const ConsistencyError& e) {
        std::cerr << "consistency failure: " << e.what() << "\n";
        return 1;
    } catch (const ResourceError& e) {
        std::cerr << "error: " << e.what() << " (raise --guard or SGIT_ENUM_GUARD)\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
