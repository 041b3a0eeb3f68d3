#include "qkernel/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qkernel/audit.hpp"
#include "qkernel/padic.hpp"

namespace qkernel {

namespace {

using nlohmann::ordered_json;

struct TableRow {
    std::string variant;
    std::string n;
    std::string k;
    std::string value;
};

std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string quoted = "\"";
    for (char c : s) {
        if (c == '"') quoted += '"';
        quoted += c;
    }
    quoted += '"';
    return quoted;
}

void emit_rows(const std::vector<TableRow>& rows, const std::string& format, std::ostream& out) {
    if (format == "csv") {
        out << "variant,n,k,value\n";
        for (const auto& r : rows)
            out << csv_field(r.variant) << ',' << r.n << ',' << r.k << ',' << csv_field(r.value)
                << '\n';
    } else if (format == "json") {
        ordered_json j = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["variant"] = r.variant;
            row["n"] = r.n;
            row["k"] = r.k;
            row["value"] = r.value;
            j.push_back(row);
        }
        out << j.dump(2) << "\n";
    } else { // latex
        out << "\\begin{tabular}{llll}\n";
        out << "variant & $n$ & $k$ & value \\\\\n";
        for (const auto& r : rows)
            out << r.variant << " & " << r.n << " & " << r.k << " & $" << r.value << "$ \\\\\n";
        out << "\\end{tabular}\n";
    }
}

QStirlingVariant parse_variant(const std::string& name) {
    static const std::map<std::string, QStirlingVariant> names = {
        {"S1_ELEM", QStirlingVariant::S1_ELEM},
        {"S1_SIGNED", QStirlingVariant::S1_SIGNED},
        {"S2_EXPLICIT", QStirlingVariant::S2_EXPLICIT},
        {"S2_SERIES", QStirlingVariant::S2_SERIES},
        {"S2_EQ16", QStirlingVariant::S2_EQ16},
    };
    auto it = names.find(name);
    if (it == names.end())
        throw CLI::ValidationError("--variant", "unknown Stirling variant: " + name);
    return it->second;
}

int cmd_table(const std::string& kind, const std::string& variant_name, int n_max, int k_max,
              const std::string& format, std::ostream& out) {
    std::vector<TableRow> rows;
    if (kind == "qint") {
        for (int n = 0; n <= n_max; ++n)
            rows.push_back({"QINT", std::to_string(n), "", q_integer(n).to_string()});
    } else if (kind == "qfact") {
        for (int n = 0; n <= n_max; ++n)
            rows.push_back({"QFACT", std::to_string(n), "", q_factorial(n).to_string()});
    } else if (kind == "qbinom") {
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= (k_max < 0 ? n : std::min(k_max, n)); ++k)
                rows.push_back(
                    {"QBINOM", std::to_string(n), std::to_string(k), q_binomial(n, k).to_string()});
    } else if (kind == "stirling") {
        QStirlingVariant v = parse_variant(variant_name);
        for (int n = 0; n <= n_max; ++n)
            for (int k = 0; k <= (k_max < 0 ? n_max : k_max); ++k)
                rows.push_back({variant_name, std::to_string(n), std::to_string(k),
                                stirling(v, n, k).to_string()});
    } else {
        throw CLI::ValidationError("--kind", "unknown table kind: " + kind);
    }
    emit_rows(rows, format, out);
    return 0;
}

int cmd_beta(int n, int order, bool inverse, int x, bool limit_q1,
             const std::optional<std::string>& eval_q, const std::string& format,
             std::ostream& out) {
    QRat value;
    std::string kind;
    if (inverse) {
        kind = "beta_inverse";
        value = beta_inverse(n, order);
    } else if (order > 0) {
        kind = "beta_order";
        value = beta_order(n, order, x);
    } else {
        kind = "beta";
        value = beta(n);
    }

    std::optional<std::string> limit_str;
    if (limit_q1) limit_str = value.limit_q_to_one().to_string();
    std::optional<std::pair<std::string, std::string>> eval_pair;
    if (eval_q) {
        Rational q0 = Rational::parse(*eval_q);
        eval_pair = {{*eval_q, value.eval(q0).to_string()}};
    }

    if (format == "json") {
        ordered_json j;
        j["kind"] = kind;
        j["n"] = n;
        if (order > 0 || inverse) j["order"] = order;
        if (!inverse && order > 0) j["x"] = x;
        j["value"] = value.to_string();
        if (limit_str) j["limit_q1"] = *limit_str;
        if (eval_pair) {
            ordered_json e;
            e["q"] = eval_pair->first;
            e["value"] = eval_pair->second;
            j["eval"] = e;
        }
        out << j.dump(2) << "\n";
    } else if (format == "csv") {
        out << "kind,n,order,value";
        if (limit_str) out << ",limit_q1";
        if (eval_pair) out << ",eval_q,eval_value";
        out << "\n"
            << kind << ',' << n << ',' << ((order > 0 || inverse) ? std::to_string(order) : "")
            << ',' << csv_field(value.to_string());
        if (limit_str) out << ',' << csv_field(*limit_str);
        if (eval_pair) out << ',' << csv_field(eval_pair->first) << ',' << csv_field(eval_pair->second);
        out << "\n";
    } else { // latex
        out << "$" << value.to_string() << "$\n";
    }
    return 0;
}

int cmd_bernstein_matrix(int n, const std::string& format, std::ostream& out) {
    ConversionMatrix m = basis_matrix(n);
    if (format == "csv") {
        for (const auto& row : m.entries) {
            for (std::size_t j = 0; j < row.size(); ++j) {
                if (j) out << ',';
                out << row[j].to_string();
            }
            out << '\n';
        }
    } else if (format == "json") {
        ordered_json j;
        j["n"] = n;
        ordered_json rows = ordered_json::array();
        for (const auto& row : m.entries) {
            ordered_json r = ordered_json::array();
            for (const auto& e : row) r.push_back(e.to_string());
            rows.push_back(r);
        }
        j["rows"] = rows;
        out << j.dump(2) << "\n";
    } else { // latex
        out << "\\left(\\begin{array}{" << std::string(static_cast<std::size_t>(n) + 1, 'r')
            << "}\n";
        for (std::size_t i = 0; i < m.entries.size(); ++i) {
            for (std::size_t j = 0; j < m.entries[i].size(); ++j) {
                if (j) out << " & ";
                out << m.entries[i][j].to_string();
            }
            out << " \\\\\n";
        }
        out << "\\end{array}\\right)\n";
    }
    return 0;
}

int cmd_bernstein_eval(int n, const std::string& q_str, const std::string& x_str,
                       const std::string& samples_path, const std::string& mode,
                       const std::optional<std::string>& u_str, std::ostream& out,
                       std::ostream& err) {
    std::ifstream in(samples_path);
    if (!in) {
        err << "bernstein-eval: cannot open samples file: " << samples_path << "\n";
        return 1;
    }
    std::vector<Rational> samples;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        samples.push_back(Rational::parse(line));
    }
    if (static_cast<int>(samples.size()) != n + 1) {
        err << "bernstein-eval: expected " << n + 1 << " samples, got " << samples.size() << "\n";
        return 1;
    }
    Rational x = Rational::parse(x_str);
    Rational q = Rational::parse(q_str);
    if (x < Rational(0) || x > Rational(1)) {
        err << "bernstein-eval: x must lie in [0,1]\n";
        return 1;
    }
    if (q <= Rational(0) || q >= Rational(1)) {
        err << "bernstein-eval: q must lie in (0,1)\n";
        return 1;
    }
    if (mode == "exact") {
        Rational u;
        if (u_str) {
            u = Rational::parse(*u_str);
        } else if (x == Rational(0) || x == Rational(1)) {
            u = x; // [0]_q = 0, [1]_q = 1
        } else {
            err << "bernstein-eval: exact mode needs x in {0,1} or an explicit --u value\n";
            return 1;
        }
        out << operator_eval_exact(samples, u).to_string() << "\n";
    } else {
        double v = operator_eval_real(samples, x.to_double(), q.to_double());
        std::ostringstream os;
        os.precision(15);
        os << v;
        out << os.str() << "\n";
    }
    return 0;
}

int cmd_padic_probe(long long p, long long q, int moment, int levels, int precision,
                    const std::string& format, std::ostream& out) {
    QSeed seed{p, q};
    auto rows = convergence_probe(moment, seed, levels, precision);
    if (format == "csv") {
        out << "N,valuation\n";
        for (const auto& r : rows)
            out << r.level << ',' << (r.exact_zero ? "inf" : std::to_string(r.valuation)) << '\n';
    } else {
        ordered_json j;
        j["p"] = p;
        j["q"] = q;
        j["moment"] = moment;
        j["levels"] = levels;
        j["precision"] = precision;
        ordered_json jrows = ordered_json::array();
        for (const auto& r : rows) {
            ordered_json row;
            row["N"] = r.level;
            if (r.exact_zero) {
                row["valuation"] = "inf";
            } else {
                row["valuation"] = r.valuation;
            }
            jrows.push_back(row);
        }
        j["rows"] = jrows;
        out << j.dump(2) << "\n";
    }
    return 0;
}

// key=value lines mirroring the audit flags; '#' starts a comment
std::map<std::string, std::string> read_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw CLI::ValidationError("--config", "cannot open config file: " + path);
    std::map<std::string, std::string> kv;
    std::string line;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto eq = line.find('=');
        if (eq == std::string::npos) continue;
        auto strip = [](std::string s) {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.erase(s.begin());
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
            return s;
        };
        kv[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
    }
    return kv;
}

std::vector<std::string> split_csv_list(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact q-calculus kernel and identity auditor"};
    app.require_subcommand(1);

    // table
    auto* table = app.add_subcommand("table", "emit q-integer/q-factorial/q-binomial/Stirling tables");
    std::string table_kind = "qbinom", table_variant = "S2_EXPLICIT", table_format = "csv";
    int table_n_max = 6, table_k_max = -1;
    table->add_option("--kind", table_kind, "qint|qfact|qbinom|stirling");
    table->add_option("--variant", table_variant, "Stirling variant for --kind stirling");
    table->add_option("--n-max", table_n_max, "largest n")->check(CLI::Range(0, 64));
    table->add_option("--k-max", table_k_max, "largest k (defaults to n or n-max)");
    table->add_option("--format", table_format, "csv|json|latex")
        ->check(CLI::IsMember({"csv", "json", "latex"}));

    // beta
    auto* beta_cmd = app.add_subcommand("beta", "Carlitz q-Bernoulli values");
    int beta_n = 0, beta_order_k = 0, beta_x = 0;
    bool beta_inverse_flag = false, beta_limit = false;
    std::string beta_format = "json";
    std::optional<std::string> beta_eval_q;
    beta_cmd->add_option("--n", beta_n, "index n")->required()->check(CLI::Range(0, 64));
    beta_cmd->add_option("--order", beta_order_k, "order k (k >= 1 selects the order-k family)")
        ->check(CLI::Range(0, 32));
    beta_cmd->add_flag("--inverse", beta_inverse_flag, "inverse family beta^(-order)_n");
    beta_cmd->add_option("--x", beta_x, "integer argument x for the order-k polynomials")
        ->check(CLI::Range(0, 32));
    beta_cmd->add_flag("--limit-q1", beta_limit, "also print the q->1 limit");
    beta_cmd->add_option("--eval-q", beta_eval_q, "also evaluate at a rational q0, e.g. 1/2");
    beta_cmd->add_option("--format", beta_format, "json|csv|latex")
        ->check(CLI::IsMember({"csv", "json", "latex"}));

    // bernstein-matrix
    auto* bmat = app.add_subcommand("bernstein-matrix", "power-basis coefficients of the basis");
    int bmat_n = 2;
    std::string bmat_format = "csv";
    bmat->add_option("--n", bmat_n, "degree n")->required()->check(CLI::Range(0, 64));
    bmat->add_option("--format", bmat_format, "csv|json|latex")
        ->check(CLI::IsMember({"csv", "json", "latex"}));

    // bernstein-eval
    auto* beval = app.add_subcommand("bernstein-eval", "evaluate the q-Bernstein operator");
    int beval_n = 1;
    std::string beval_q, beval_x, beval_samples, beval_mode = "real";
    std::optional<std::string> beval_u;
    beval->add_option("--n", beval_n, "degree n")->required()->check(CLI::Range(0, 64));
    beval->add_option("--q", beval_q, "rational q in (0,1)")->required();
    beval->add_option("--x", beval_x, "rational x in [0,1]")->required();
    beval->add_option("--samples", beval_samples, "file with one rational f(k/n) per line")
        ->required();
    beval->add_option("--mode", beval_mode, "real|exact")
        ->check(CLI::IsMember({"real", "exact"}));
    beval->add_option("--u", beval_u, "exact mode: substitute U = [x]_q directly");

    // padic-probe
    auto* probe = app.add_subcommand("padic-probe", "valuation table of S_N - beta_n(q)");
    long long probe_p = 3, probe_q = 4;
    int probe_moment = 1, probe_levels = 6, probe_precision = 12;
    std::string probe_format = "csv";
    probe->add_option("--p", probe_p, "odd prime");
    probe->add_option("--q", probe_q, "integer q with q = 1 (mod p)");
    probe->add_option("--moment", probe_moment, "moment n")->check(CLI::Range(0, 16));
    probe->add_option("--levels", probe_levels, "largest N")->check(CLI::Range(1, 12));
    probe->add_option("--precision", probe_precision, "working precision K")->check(CLI::Range(1, 64));
    probe->add_option("--format", probe_format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    // audit
    auto* audit = app.add_subcommand("audit", "run the identity audit");
    int audit_n_max = -1, audit_threads = -1;
    std::string audit_format, audit_identities, audit_expect, audit_config_path;
    audit->add_option("--n-max", audit_n_max, "sweep bound (default 6)")->check(CLI::Range(0, 10));
    audit->add_option("--identities", audit_identities, "comma-separated identity filter");
    audit->add_option("--format", audit_format, "json|csv")
        ->check(CLI::IsMember({"json", "csv"}));
    audit->add_option("--threads", audit_threads, "worker threads (default: all, capped by QKERNEL_THREADS)");
    audit->add_option("--expect", audit_expect, "golden JSON report; exit 2 on drift");
    audit->add_option("--config", audit_config_path, "key=value file mirroring the flags");

    // CLI11's vector overload consumes the arguments back to front
    std::vector<std::string> argv(args.rbegin(), args.rend());
    try {
        app.parse(argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n" << app.help();
        return 1;
    }

    try {
        if (table->parsed())
            return cmd_table(table_kind, table_variant, table_n_max, table_k_max, table_format, out);
        if (beta_cmd->parsed())
            return cmd_beta(beta_n, beta_order_k, beta_inverse_flag, beta_x, beta_limit,
                            beta_eval_q, beta_format, out);
        if (bmat->parsed()) return cmd_bernstein_matrix(bmat_n, bmat_format, out);
        if (beval->parsed())
            return cmd_bernstein_eval(beval_n, beval_q, beval_x, beval_samples, beval_mode,
                                      beval_u, out, err);
        if (probe->parsed())
            return cmd_padic_probe(probe_p, probe_q, probe_moment, probe_levels, probe_precision,
                                   probe_format, out);
        if (audit->parsed()) {
            AuditConfig cfg;
            std::string format = "json", expect;
            if (!audit_config_path.empty()) {
                auto kv = read_config_file(audit_config_path);
                if (kv.count("n-max")) cfg.n_max = std::stoi(kv["n-max"]);
                if (kv.count("identities")) cfg.identities = split_csv_list(kv["identities"]);
                if (kv.count("threads")) cfg.threads = std::stoi(kv["threads"]);
                if (kv.count("format")) format = kv["format"];
                if (kv.count("expect")) expect = kv["expect"];
            }
            // explicit flags win over the config file
            if (audit_n_max >= 0) cfg.n_max = audit_n_max;
            if (!audit_identities.empty()) cfg.identities = split_csv_list(audit_identities);
            if (audit_threads >= 0) cfg.threads = audit_threads;
            if (!audit_format.empty()) format = audit_format;
            if (!audit_expect.empty()) expect = audit_expect;

            AuditReport report = run_audit(cfg);
            std::string rendered = format == "csv" ? report_to_csv(report) : report_to_json(report);
            out << rendered;
            if (!expect.empty()) {
                std::ifstream golden(expect);
                if (!golden) {
                    err << "audit: cannot open golden report: " << expect << "\n";
                    return 1;
                }
                std::stringstream buf;
                buf << golden.rdbuf();
                std::string want = buf.str();
                std::string got = report_to_json(report);
                if (want != got) {
                    err << "audit: verdict drift against " << expect << "\n";
                    return 2;
                }
            }
            return 0;
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    err << app.help();
    return 1;
}

} // namespace qkernel
