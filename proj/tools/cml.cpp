// cml: exact combinatorics verification CLI.
//
// Subcommands: mult | verify | maxweights | involutions | shuffles | qbinom.
// Output is deterministic JSON (or CSV); wall time lives in a separate
// "meta" key that --no-meta removes so runs can be compared bytewise.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "cml/crystal.hpp"
#include "cml/mullineux.hpp"
#include "cml/plane.hpp"
#include "cml/qcount.hpp"
#include "cml/words.hpp"

using json = nlohmann::ordered_json;

namespace {

std::int64_t max_states_from_env() {
    const char* env = std::getenv("CML_MAX_STATES");
    if (!env || !*env) return cml::kDefaultMaxStates;
    try {
        return std::stoll(env);
    } catch (const std::exception&) {
        throw std::invalid_argument("CML_MAX_STATES must be an integer");
    }
}

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string csv() const {
        std::string out;
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out += ',';
            out += csv_field(header[i]);
        }
        out += "\r\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) {
                if (i) out += ',';
                out += csv_field(row[i]);
            }
            out += "\r\n";
        }
        return out;
    }
};

struct Report {
    std::string command;
    json params = json::object();
    json results = json::object();
    std::string status = "ok";
    Table table;
};

json partition_list(const std::vector<cml::Partition>& tuple) {
    json arr = json::array();
    for (const auto& lam : tuple) arr.push_back(lam.str());
    return arr;
}

// ---- commands -------------------------------------------------------

Report run_mult(int p, int k, int s, int ell, std::int64_t max_states) {
    Report r;
    r.command = "mult";
    r.params = {{"p", p}, {"k", k}, {"s", s}, {"ell", ell}};
    long long mult = cml::weight_multiplicity(p, k, s, cml::lambda_weight_coeffs(p, ell, s),
                                              max_states);
    long long z = static_cast<long long>(cml::enumerate_Z(p, k, s, ell).size());
    long long shuffles = cml::count_avoiding_shuffles(s, ell, k);
    bool agree = mult == z && z == shuffles;
    r.results = {{"multiplicity", mult}, {"z_count", z}, {"shuffle_count", shuffles},
                 {"agree", agree}};
    r.status = agree ? "ok" : "mismatch";
    r.table.header = {"p", "k", "s", "ell", "multiplicity", "z_count", "shuffle_count", "agree"};
    r.table.rows.push_back({std::to_string(p), std::to_string(k), std::to_string(s),
                            std::to_string(ell), std::to_string(mult), std::to_string(z),
                            std::to_string(shuffles), agree ? "true" : "false"});
    return r;
}

Report run_maxweights(int p, int s, int k, std::int64_t) {
    Report r;
    r.command = "maxweights";
    r.params = {{"p", p}, {"s", s}, {"k", k}};
    auto entries = cml::enumerate_S(p, s, k);
    json rows = json::array();
    r.table.header = {"x", "weight"};
    for (const auto& entry : entries) {
        std::string xs;
        for (std::size_t i = 0; i < entry.x.size(); ++i) {
            if (i) xs += ' ';
            xs += std::to_string(entry.x[i]);
        }
        rows.push_back({{"x", entry.x}, {"weight", entry.weight.str()}});
        r.table.rows.push_back({xs, entry.weight.str()});
    }
    r.results = {{"count", entries.size()}, {"rows", rows}};
    if (s == 0) {
        long long expected = cml::totient_count(p, k);
        r.results["totient_count"] = expected;
        if (expected != static_cast<long long>(entries.size())) r.status = "mismatch";
    }
    return r;
}

Report run_involutions(int ell, int k) {
    Report r;
    r.command = "involutions";
    r.params = {{"ell", ell}, {"k", k}};
    long long count = cml::count_avoiding_involutions(ell, k);
    r.results = {{"count", count}};
    r.table.header = {"ell", "k", "count"};
    r.table.rows.push_back({std::to_string(ell), std::to_string(k), std::to_string(count)});
    return r;
}

Report run_shuffles(int s, int ell, int k) {
    Report r;
    r.command = "shuffles";
    r.params = {{"s", s}, {"ell", ell}, {"k", k}};
    long long count = cml::count_avoiding_shuffles(s, ell, k);
    r.results = {{"count", count}};
    r.table.header = {"s", "ell", "k", "count"};
    r.table.rows.push_back({std::to_string(s), std::to_string(ell), std::to_string(k),
                            std::to_string(count)});
    return r;
}

Report run_qbinom(int a, int b) {
    Report r;
    r.command = "qbinom";
    r.params = {{"a", a}, {"b", b}};
    cml::QPoly poly = cml::qbinom(a, b);
    r.results = {{"polynomial", poly.str()}, {"coefficients", poly.coeffs()},
                 {"value_at_1", poly.eval_at_one()}};
    r.table.header = {"a", "b", "polynomial", "value_at_1"};
    r.table.rows.push_back({std::to_string(a), std::to_string(b), poly.str(),
                            std::to_string(poly.eval_at_one())});
    return r;
}

// ---- verification suites -------------------------------------------

struct SuiteState {
    json cases = json::array();
    Table table;
    long long failures = 0;
    bool aborted = false;
};

void finish_suite(Report& r, SuiteState& st, const std::string& suite) {
    r.command = "verify";
    r.params["suite"] = suite;
    r.results = {{"cases", st.cases}, {"total", st.cases.size()}, {"failures", st.failures}};
    r.table = std::move(st.table);
    r.status = st.aborted ? "aborted" : (st.failures == 0 ? "ok" : "mismatch");
}

Report verify_theorem_a(int max_p, int max_k, std::int64_t max_states) {
    Report r;
    SuiteState st;
    st.table.header = {"p", "k", "s", "ell", "multiplicity", "z_count", "shuffle_count", "agree"};
    try {
        for (int p = 2; p <= max_p; ++p)
            for (int k = 1; k <= max_k; ++k)
                for (int s = 0; s < p; ++s)
                    for (int ell = 1; ell <= (p - s) / 2; ++ell) {
                        long long mult = cml::weight_multiplicity(
                            p, k, s, cml::lambda_weight_coeffs(p, ell, s), max_states);
                        long long z = static_cast<long long>(cml::enumerate_Z(p, k, s, ell).size());
                        long long sh = cml::count_avoiding_shuffles(s, ell, k);
                        bool agree = mult == z && z == sh;
                        if (!agree) ++st.failures;
                        st.cases.push_back({{"p", p}, {"k", k}, {"s", s}, {"ell", ell},
                                            {"multiplicity", mult}, {"z_count", z},
                                            {"shuffle_count", sh}, {"agree", agree}});
                        st.table.rows.push_back({std::to_string(p), std::to_string(k),
                                                 std::to_string(s), std::to_string(ell),
                                                 std::to_string(mult), std::to_string(z),
                                                 std::to_string(sh), agree ? "true" : "false"});
                    }
    } catch (const cml::census_overflow&) {
        st.aborted = true;
    }
    finish_suite(r, st, "theorem-a");
    return r;
}

Report verify_theorem_b(int max_p, int max_k) {
    Report r;
    SuiteState st;
    st.table.header = {"p", "k", "ell", "fixed_points", "involutions", "maximal", "agree"};
    for (int p = 2; p <= max_p; ++p)
        for (int k = 1; k <= max_k; ++k)
            for (int ell = 1; ell <= p / 2; ++ell) {
                long long fixed = cml::fixed_points_Z(p, k, ell);
                long long inv = cml::count_avoiding_involutions(ell, k);
                bool maximal = cml::gamma_is_maximal(p, k, ell);
                bool agree = fixed == inv && maximal;
                if (!agree) ++st.failures;
                st.cases.push_back({{"p", p}, {"k", k}, {"ell", ell}, {"fixed_points", fixed},
                                    {"involutions", inv}, {"maximal", maximal}, {"agree", agree}});
                st.table.rows.push_back({std::to_string(p), std::to_string(k),
                                         std::to_string(ell), std::to_string(fixed),
                                         std::to_string(inv), maximal ? "true" : "false",
                                         agree ? "true" : "false"});
            }
    finish_suite(r, st, "theorem-b");
    return r;
}

Report verify_level_2(int max_p, std::int64_t max_states) {
    Report r;
    SuiteState st;
    st.table.header = {"p", "s", "ell", "multiplicity", "ballot", "agree"};
    try {
        for (int p = 2; p <= max_p; ++p)
            for (int s = 0; s < p; ++s)
                for (int ell = 1; ell <= (p - s) / 2; ++ell) {
                    long long mult = cml::weight_multiplicity(
                        p, 1, s, cml::lambda_weight_coeffs(p, ell, s), max_states);
                    long long ballot = cml::ballot_count(ell, s);
                    bool agree = mult == ballot;
                    if (!agree) ++st.failures;
                    st.cases.push_back({{"p", p}, {"s", s}, {"ell", ell},
                                        {"multiplicity", mult}, {"ballot", ballot},
                                        {"agree", agree}});
                    st.table.rows.push_back({std::to_string(p), std::to_string(s),
                                             std::to_string(ell), std::to_string(mult),
                                             std::to_string(ballot), agree ? "true" : "false"});
                }
    } catch (const cml::census_overflow&) {
        st.aborted = true;
    }
    finish_suite(r, st, "level-2");
    return r;
}

Report verify_prop_4_1(int max_p, int max_k) {
    Report r;
    SuiteState st;
    st.table.header = {"p", "k", "u_count", "totient", "s_count", "agree"};
    for (int p = 2; p <= max_p; ++p)
        for (int k = 1; k <= max_k; ++k) {
            long long u = cml::count_U(p, k);
            long long tot = cml::totient_count(p, k);
            long long s_count = static_cast<long long>(cml::enumerate_S(p, 0, k).size());
            bool agree = u == tot && tot == s_count;
            if (!agree) ++st.failures;
            st.cases.push_back({{"p", p}, {"k", k}, {"u_count", u}, {"totient", tot},
                                {"s_count", s_count}, {"agree", agree}});
            st.table.rows.push_back({std::to_string(p), std::to_string(k), std::to_string(u),
                                     std::to_string(tot), std::to_string(s_count),
                                     agree ? "true" : "false"});
        }
    finish_suite(r, st, "prop-4-1");
    return r;
}

Report verify_q_lucas(int max_n, int max_d) {
    Report r;
    SuiteState st;
    st.table.header = {"n", "d", "checked", "agree"};
    for (int n = 0; n <= max_n; ++n)
        for (int d = 1; d <= max_d; ++d) {
            bool all = true;
            long long checked = 0;
            for (int j = 0; j <= n; ++j) {
                if (!cml::q_lucas_verify(n, j, d)) all = false;
                ++checked;
            }
            if (!all) ++st.failures;
            st.cases.push_back({{"n", n}, {"d", d}, {"checked", checked}, {"agree", all}});
            st.table.rows.push_back({std::to_string(n), std::to_string(d),
                                     std::to_string(checked), all ? "true" : "false"});
        }
    finish_suite(r, st, "q-lucas");
    return r;
}

// ---- output ---------------------------------------------------------

int emit(const Report& r, const std::string& format, bool no_meta, long long wall_ms) {
    if (format == "csv") {
        std::cout << r.table.csv();
    } else {
        json out;
        out["command"] = r.command;
        out["params"] = r.params;
        out["results"] = r.results;
        out["status"] = r.status;
        if (!no_meta) out["meta"] = {{"wall_time_ms", wall_ms}};
        std::cout << out.dump(2) << '\n';
    }
    return r.status == "ok" ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact verification of maximal-weight multiplicities"};
    app.require_subcommand(1);

    int p = 0, k = 0, s = 0, ell = 0, max_p = 0, max_k = 0;
    int qa = 0, qb = 0;
    std::string suite, format = "json";
    bool no_meta = false;

    app.add_option("--format", format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    app.add_flag("--no-meta", no_meta, "omit the meta key (byte-identical reruns)");

    auto* mult = app.add_subcommand("mult", "multiplicity by three routes");
    mult->add_option("--p", p)->required();
    mult->add_option("--k", k)->required();
    mult->add_option("--s", s)->required();
    mult->add_option("--ell", ell)->required();

    auto* verify = app.add_subcommand("verify", "run a verification suite");
    verify->add_option("--suite", suite)
        ->required()
        ->check(CLI::IsMember({"theorem-a", "theorem-b", "level-2", "prop-4-1", "q-lucas"}));
    verify->add_option("--max-p", max_p, "grid bound on p (q-lucas: bound on n)");
    verify->add_option("--max-k", max_k, "grid bound on k (q-lucas: bound on d)");

    auto* maxweights = app.add_subcommand("maxweights", "dominant maximal weights");
    maxweights->add_option("--p", p)->required();
    maxweights->add_option("--k", k)->required();
    maxweights->add_option("--s", s);

    auto* involutions = app.add_subcommand("involutions", "pattern-avoiding involutions");
    involutions->add_option("--ell", ell)->required();
    involutions->add_option("--k", k)->required();

    auto* shuffles = app.add_subcommand("shuffles", "pattern-avoiding shuffles");
    shuffles->add_option("--s", s)->required();
    shuffles->add_option("--ell", ell)->required();
    shuffles->add_option("--k", k)->required();

    auto* qbinom = app.add_subcommand("qbinom", "Gaussian binomial [a b]");
    qbinom->add_option("a", qa)->required();
    qbinom->add_option("b", qb)->required();

    CLI11_PARSE(app, argc, argv);

    const auto start = std::chrono::steady_clock::now();
    try {
        std::int64_t max_states = max_states_from_env();
        Report r;
        if (mult->parsed()) {
            r = run_mult(p, k, s, ell, max_states);
        } else if (verify->parsed()) {
            if (suite == "theorem-a")
                r = verify_theorem_a(max_p ? max_p : 7, max_k ? max_k : 3, max_states);
            else if (suite == "theorem-b")
                r = verify_theorem_b(max_p ? max_p : 9, max_k ? max_k : 3);
            else if (suite == "level-2")
                r = verify_level_2(max_p ? max_p : 7, max_states);
            else if (suite == "prop-4-1")
                r = verify_prop_4_1(max_p ? max_p : 12, max_k ? max_k : 8);
            else
                r = verify_q_lucas(max_p ? max_p : 30, max_k ? max_k : 12);
        } else if (maxweights->parsed()) {
            r = run_maxweights(p, s, k, max_states);
        } else if (involutions->parsed()) {
            r = run_involutions(ell, k);
        } else if (shuffles->parsed()) {
            r = run_shuffles(s, ell, k);
        } else {
            r = run_qbinom(qa, qb);
        }
        const auto stop = std::chrono::steady_clock::now();
        long long wall_ms =
            std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
        return emit(r, format, no_meta, wall_ms);
    } catch (const std::exception& e) {
        json err;
        err["command"] = app.get_subcommands().front()->get_name();
        err["params"] = json::object();
        err["results"] = json::object();
        err["status"] = "error";
        err["error"] = e.what();
        std::cout << err.dump(2) << '\n';
        return 2;
    }
}
