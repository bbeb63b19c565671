#include "jue/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "jue/errors.hpp"
#include "jue/schur.hpp"
#include "jue/textio.hpp"
#include "jue/topexp.hpp"
#include "jue/wilson.hpp"

namespace jue {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct CommonOpts {
    std::string format = "json";
    std::string config_path;
    EnumGuards guards;
    bool timing = false;
};

void load_config(CommonOpts& o) {
    if (o.config_path.empty()) return;
    std::ifstream in(o.config_path);
    if (!in) throw ParseError("cannot open config file: " + o.config_path);
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto trim = [](std::string s) {
            size_t a = s.find_first_not_of(" \t\"");
            size_t b = s.find_last_not_of(" \t\"");
            return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
        };
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        try {
            if (key == "max_weight") o.guards.max_weight = std::stoi(val);
            else if (key == "max_r") o.guards.max_r = std::stoi(val);
            else if (key == "threads") o.guards.threads = std::stoi(val);
            else if (key == "format") o.format = val;
        } catch (const std::exception&) {
            throw ParseError("bad config value for " + key + ": " + val);
        }
    }
}

std::string sign_name(Sign s) { return s == Sign::Positive ? "pos" : "neg"; }

Sign parse_sign(const std::string& s) {
    if (s == "pos" || s == "positive") return Sign::Positive;
    if (s == "neg" || s == "negative") return Sign::Negative;
    throw ParseError("bad --sign value: " + s);
}

struct NumericPoint {
    Rational n, alpha, beta;
};

NumericPoint parse_numeric(const std::string& s) {
    NumericPoint p{0, 0, 0};
    bool have_n = false, have_a = false, have_b = false;
    std::istringstream is(s);
    std::string tok;
    while (std::getline(is, tok, ',')) {
        auto eq = tok.find('=');
        if (eq == std::string::npos) throw ParseError("bad --numeric entry: " + tok);
        std::string key = tok.substr(0, eq);
        Rational val = rational_from_string(tok.substr(eq + 1));
        if (key == "N") { p.n = val; have_n = true; }
        else if (key == "alpha") { p.alpha = val; have_a = true; }
        else if (key == "beta") { p.beta = val; have_b = true; }
        else throw ParseError("bad --numeric key: " + key);
    }
    if (!have_n || !have_a || !have_b)
        throw ParseError("--numeric needs N=..,alpha=..,beta=..");
    return p;
}

// --mixed pos=...,neg=...,one=... where each value is itself a partition
// (possibly with commas); sections are located by their key markers.
void parse_mixed(const std::string& s, Partition& pos, Partition& neg, Partition& one) {
    auto grab = [&](const std::string& key) -> std::string {
        auto start = s.find(key + "=");
        if (start == std::string::npos) return "";
        start += key.size() + 1;
        size_t end = s.size();
        for (const char* other : {"pos=", "neg=", "one="}) {
            auto p = s.find(other, start);
            if (p != std::string::npos && p < end) end = p;
        }
        std::string out = s.substr(start, end - start);
        while (!out.empty() && (out.back() == ',' || out.back() == ';' || out.back() == ' '))
            out.pop_back();
        return out;
    };
    pos = Partition::from_string(grab("pos"));
    neg = Partition::from_string(grab("neg"));
    one = Partition::from_string(grab("one"));
}

class Timer {
public:
    Timer() : start_(std::chrono::steady_clock::now()) {}
    long long ms() const {
        return std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start_)
            .count();
    }

private:
    std::chrono::steady_clock::time_point start_;
};

void emit(const CommonOpts& o, const Timer& t, Json record, const std::string& plain,
          std::ostream& out) {
    record["version"] = kVersion;
    if (o.timing) record["elapsed_ms"] = t.ms();
    if (o.format == "json") {
        out << record.dump(2) << "\n";
    } else {
        out << plain << "\n";
    }
}

void check_weight_guard(const Partition& lambda, const EnumGuards& g) {
    if (lambda.weight() > g.max_weight)
        throw GuardError("weight " + std::to_string(lambda.weight()) +
                         " exceeds guard max_weight=" + std::to_string(g.max_weight));
}

int cmd_correlator(const CommonOpts& o, const std::string& powers, const std::string& sign_s,
                   bool connected, const std::string& numeric, const std::string& mixed,
                   std::ostream& out) {
    Timer timer;
    Json rec;
    rec["command"] = "correlator";
    RationalFunction value(VarSet::NAB);
    Json inputs;
    if (!mixed.empty()) {
        Partition p_pos, p_neg, p_one;
        parse_mixed(mixed, p_pos, p_neg, p_one);
        check_weight_guard(p_pos, o.guards);
        check_weight_guard(p_neg, o.guards);
        check_weight_guard(p_one, o.guards);
        inputs["mixed"] = {{"pos", p_pos.to_string()}, {"neg", p_neg.to_string()},
                           {"one", p_one.to_string()}};
        value = mixed_connected(p_pos, p_neg, p_one);
    } else {
        Partition lambda = Partition::from_string(powers);
        if (lambda.empty()) throw ParseError("--powers required");
        check_weight_guard(lambda, o.guards);
        Sign sign = parse_sign(sign_s);
        inputs["powers"] = lambda.to_string();
        inputs["sign"] = sign_name(sign);
        inputs["connected"] = connected;
        CorrelatorQuery q{lambda, sign, connected};
        value = connected ? connected_correlator(q) : correlator(q);
    }
    std::string payload;
    if (!numeric.empty()) {
        NumericPoint pt = parse_numeric(numeric);
        inputs["numeric"] = numeric;
        Rational v = value.evaluate({pt.n, pt.alpha, pt.beta});
        payload = rational_to_string(v);
    } else {
        payload = value.to_string();
    }
    rec["inputs"] = inputs;
    rec["result"] = payload;
    emit(o, timer, rec, payload, out);
    return 0;
}

int cmd_hurwitz(const CommonOpts& o, const std::string& lambda_s, const std::string& mu_s,
                const std::string& nu_s, int genus, bool connected, bool table,
                std::ostream& out) {
    Timer timer;
    Partition lambda = Partition::from_string(lambda_s);
    if (lambda.empty()) throw ParseError("--lambda required");
    Json rec;
    rec["command"] = "hurwitz";
    Json inputs;
    inputs["lambda"] = lambda.to_string();
    inputs["genus"] = genus;
    inputs["connected"] = connected;
    if (table) {
        auto tab = hurwitz_table(lambda, genus, connected, o.guards);
        auto parts = partitions_of(lambda.weight());
        Json rows = Json::array();
        std::ostringstream csv;
        csv << "mu\\nu";
        for (const auto& nu : parts) csv << ",\"" << nu.to_string() << "\"";
        for (const auto& mu : parts) {
            csv << "\n\"" << mu.to_string() << "\"";
            Json row;
            row["mu"] = mu.to_string();
            Json cells = Json::array();
            for (const auto& nu : parts) {
                const Int& v = tab.at({mu, nu});
                csv << "," << v.get_str();
                Json cell;
                cell["nu"] = nu.to_string();
                cell["count"] = v.get_str();
                cells.push_back(cell);
            }
            row["counts"] = cells;
            rows.push_back(row);
        }
        rec["inputs"] = inputs;
        rec["result"] = rows;
        emit(o, timer, rec, csv.str(), out);
        return 0;
    }
    Partition mu = Partition::from_string(mu_s);
    Partition nu = Partition::from_string(nu_s);
    if (mu.weight() != lambda.weight() || nu.weight() != lambda.weight())
        throw ParseError("--mu and --nu must have the same weight as --lambda");
    inputs["mu"] = mu.to_string();
    inputs["nu"] = nu.to_string();
    HurwitzQuery q{lambda, mu, nu, genus, connected};
    Int count = count_hurwitz(q, o.guards);
    rec["inputs"] = inputs;
    rec["result"] = count.get_str();
    emit(o, timer, rec, count.get_str(), out);
    return 0;
}

int cmd_expand(const CommonOpts& o, const std::string& powers, const std::string& sign_s,
               int gmax, bool connected, std::ostream& out) {
    Timer timer;
    Partition lambda = Partition::from_string(powers);
    if (lambda.empty()) throw ParseError("--powers required");
    check_weight_guard(lambda, o.guards);
    Sign sign = parse_sign(sign_s);
    LaurentInN exp = correlator_side(lambda, sign, gmax, connected);
    Json rec;
    rec["command"] = "expand";
    rec["inputs"] = {{"powers", lambda.to_string()},
                     {"sign", sign_name(sign)},
                     {"gmax", gmax},
                     {"connected", connected}};
    Json result;
    std::ostringstream plain;
    for (int g = 0; g <= gmax; ++g) {
        std::string coeff = exp.coeff(2 - 2 * g).to_string();
        result["g" + std::to_string(g)] = coeff;
        if (g) plain << "\n";
        plain << "g" << g << " " << coeff;
    }
    rec["result"] = result;
    emit(o, timer, rec, plain.str(), out);
    return 0;
}

int verify_routes(int max_weight, Json& detail) {
    bool all = true;
    for (int n = 1; n <= max_weight; ++n) {
        for (const auto& mu : partitions_of(n)) {
            for (Sign sign : {Sign::Positive, Sign::Negative}) {
                CorrelatorQuery q{mu, sign, false};
                bool ok = ratfun_eq(correlator_via_schur(mu, sign), correlator(q));
                Json item;
                item["mu"] = mu.to_string();
                item["sign"] = sign_name(sign);
                item["equal"] = ok;
                detail.push_back(item);
                all = all && ok;
            }
        }
    }
    return all ? 0 : 1;
}

int verify_lax(Json& detail) {
    bool all = true;
    for (Point p : {Point::Zero, Point::Infinity}) {
        int first_fail = -1;
        bool ok = lax_residue_check(p, 6, &first_fail);
        Json item;
        item["point"] = p == Point::Zero ? "0" : "inf";
        item["ok"] = ok;
        if (!ok) item["first_failing_order"] = first_fail;
        detail.push_back(item);
        all = all && ok;
    }
    return all ? 0 : 1;
}

int verify_theorem12_suite(int max_weight, const EnumGuards& guards, Json& detail) {
    bool all = true;
    for (int n = 1; n <= max_weight; ++n) {
        for (const auto& lambda : partitions_of(n)) {
            for (Sign sign : {Sign::Positive, Sign::Negative}) {
                for (bool connected : {true, false}) {
                    int gmax = n <= 3 ? 1 : 0;
                    ExpansionReport rep = verify_theorem(lambda, sign, gmax, connected, guards);
                    Json item;
                    item["lambda"] = lambda.to_string();
                    item["sign"] = sign_name(sign);
                    item["connected"] = connected;
                    item["gmax"] = gmax;
                    item["passed"] = rep.passed;
                    detail.push_back(item);
                    all = all && rep.passed;
                }
            }
        }
    }
    return all ? 0 : 1;
}

int cmd_verify(const CommonOpts& o, const std::string& lambda_s, const std::string& sign_s,
               int gmax, bool connected, const std::string& suite, int max_weight,
               std::ostream& out) {
    Timer timer;
    Json rec;
    rec["command"] = "verify";
    int rc = 0;
    Json detail = Json::array();
    std::ostringstream plain;
    if (!suite.empty()) {
        rec["inputs"] = {{"suite", suite}, {"max_weight", max_weight}};
        if (suite == "routes") {
            rc = verify_routes(max_weight, detail);
        } else if (suite == "lax") {
            rc = verify_lax(detail);
        } else if (suite == "theorem12") {
            rc = verify_theorem12_suite(max_weight, o.guards, detail);
        } else if (suite == "all") {
            rc |= verify_routes(max_weight, detail);
            rc |= verify_lax(detail);
            rc |= verify_theorem12_suite(max_weight, o.guards, detail);
        } else {
            throw ParseError("unknown suite: " + suite);
        }
        rec["result"] = {{"passed", rc == 0}, {"checks", detail}};
        plain << (rc == 0 ? "pass" : "FAIL");
    } else {
        Partition lambda = Partition::from_string(lambda_s);
        if (lambda.empty()) throw ParseError("--lambda or --suite required");
        check_weight_guard(lambda, o.guards);
        Sign sign = parse_sign(sign_s);
        ExpansionReport rep = verify_theorem(lambda, sign, gmax, connected, o.guards);
        rec["inputs"] = {{"lambda", lambda.to_string()},
                         {"sign", sign_name(sign)},
                         {"gmax", gmax},
                         {"connected", connected}};
        Json records = Json::array();
        for (const auto& r : rep.records) {
            Json item;
            item["g"] = r.g;
            item["equal"] = r.equal;
            if (!r.equal) {
                item["correlator_side"] = r.correlator_coeff.to_string();
                item["hurwitz_side"] = r.hurwitz_coeff.to_string();
            }
            records.push_back(item);
        }
        rec["result"] = {{"passed", rep.passed},
                         {"odd_powers_vanish", rep.odd_powers_vanish},
                         {"records", records}};
        rc = rep.passed ? 0 : 1;
        plain << (rep.passed ? "pass" : "FAIL");
    }
    emit(o, timer, rec, plain.str(), out);
    return rc;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact JUE correlators, monotone Hurwitz numbers, and their "
                 "topological-expansion cross checks"};
    app.require_subcommand(1);
    CommonOpts opts;
    app.add_option("--format", opts.format, "Output format: json|plain|csv")
        ->check(CLI::IsMember({"json", "plain", "csv"}));
    app.add_option("--config", opts.config_path, "Config file (key = value lines)");
    app.add_option("--max-weight", opts.guards.max_weight, "Enumeration weight guard");
    app.add_option("--max-r", opts.guards.max_r, "Transposition count guard");
    app.add_option("--threads", opts.guards.threads, "Enumeration worker threads");
    app.add_flag("--timing", opts.timing, "Include elapsed_ms in records");

    auto* c_corr = app.add_subcommand("correlator", "Exact JUE correlator");
    std::string powers, sign_s = "pos", numeric, mixed;
    bool connected = false;
    c_corr->add_option("--powers", powers, "Trace powers, e.g. 2,1,1");
    c_corr->add_option("--sign", sign_s, "pos|neg");
    c_corr->add_flag("--connected", connected, "Connected correlator");
    c_corr->add_option("--numeric", numeric, "Specialize N=..,alpha=..,beta=..");
    c_corr->add_option("--mixed", mixed, "Mixed query pos=..,neg=..,one=..");

    auto* c_hur = app.add_subcommand("hurwitz", "Triple monotone Hurwitz numbers");
    std::string lambda_s, mu_s, nu_s;
    int genus = 0;
    bool connected_h = false, table = false;
    c_hur->add_option("--lambda", lambda_s, "Target cycle type");
    c_hur->add_option("--mu", mu_s, "Cycle type of pi_1");
    c_hur->add_option("--nu", nu_s, "Cycle type of pi_2");
    c_hur->add_option("--genus", genus, "Genus g >= 0");
    c_hur->add_flag("--connected", connected_h, "Transitive tuples only");
    c_hur->add_flag("--table", table, "Sweep all (mu, nu)");

    auto* c_ver = app.add_subcommand("verify", "Cross-route verification");
    std::string v_lambda, v_sign = "pos", suite;
    int v_gmax = 0, v_maxw = 4;
    bool v_conn = false;
    c_ver->add_option("--lambda", v_lambda, "Partition for a single theorem check");
    c_ver->add_option("--sign", v_sign, "pos|neg");
    c_ver->add_option("--gmax", v_gmax, "Highest genus compared");
    c_ver->add_flag("--connected", v_conn, "Connected variant");
    c_ver->add_option("--suite", suite, "routes|lax|theorem12|all");
    c_ver->add_option("--max-weight", v_maxw, "Weight bound for suites");

    auto* c_exp = app.add_subcommand("expand", "Topological expansion coefficients");
    std::string e_powers, e_sign = "pos";
    int e_gmax = 0;
    bool e_conn = false;
    c_exp->add_option("--powers", e_powers, "Trace powers");
    c_exp->add_option("--sign", e_sign, "pos|neg");
    c_exp->add_option("--gmax", e_gmax, "Expansion depth in genus");
    c_exp->add_flag("--connected", e_conn, "Connected correlator");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help
            out << app.help();
            return 0;
        }
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        load_config(opts);
        if (c_corr->parsed())
            return cmd_correlator(opts, powers, sign_s, connected, numeric, mixed, out);
        if (c_hur->parsed())
            return cmd_hurwitz(opts, lambda_s, mu_s, nu_s, genus, connected_h, table, out);
        if (c_ver->parsed())
            return cmd_verify(opts, v_lambda, v_sign, v_gmax, v_conn, suite, v_maxw, out);
        if (c_exp->parsed()) return cmd_expand(opts, e_powers, e_sign, e_gmax, e_conn, out);
        err << "error: no subcommand\n";
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const PoleError& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace jue
