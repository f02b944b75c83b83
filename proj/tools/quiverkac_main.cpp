#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "quiverkac/cache.hpp"
#include "quiverkac/equipped.hpp"
#include "quiverkac/errors.hpp"
#include "quiverkac/json_io.hpp"
#include "quiverkac/kac.hpp"
#include "quiverkac/maxrank.hpp"
#include "quiverkac/oracle.hpp"
#include "quiverkac/roots.hpp"

using nlohmann::json;

namespace {

struct CommonOpts {
    std::string input_path;
    std::string alpha_arg;
    std::string output = "json";
    std::string cache_path;
    long long max_points = 1000000;
    long long max_group = 1000000;
    int max_end_dim = 8;
};

qk::Budgets budgets_of(const CommonOpts& c) {
    qk::Budgets b;
    b.max_points = c.max_points;
    b.max_group = c.max_group;
    b.max_end_dim = c.max_end_dim;
    return b;
}

// "--alpha 1,2,1" positionally, or "--alpha v1=1,v2=2" by vertex id
qk::DimVector parse_alpha(const std::string& arg, const std::vector<std::string>& vertices) {
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : arg) {
        if (ch == ',') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);

    bool named = !parts.empty() && parts[0].find('=') != std::string::npos;
    qk::DimVector alpha(vertices.size(), 0);
    if (named) {
        for (const std::string& p : parts) {
            auto eq = p.find('=');
            if (eq == std::string::npos)
                throw qk::SchemaError("mixed named and positional alpha entries in '" + arg + "'");
            std::string v = p.substr(0, eq);
            auto it = std::find(vertices.begin(), vertices.end(), v);
            if (it == vertices.end()) throw qk::SchemaError("unknown vertex id '" + v + "' in alpha");
            alpha[it - vertices.begin()] = std::stoi(p.substr(eq + 1));
        }
    } else {
        if (parts.size() != vertices.size())
            throw qk::SchemaError("alpha has " + std::to_string(parts.size()) +
                                  " entries for " + std::to_string(vertices.size()) + " vertices");
        for (size_t i = 0; i < parts.size(); ++i) alpha[i] = std::stoi(parts[i]);
    }
    for (int x : alpha)
        if (x < 0) throw qk::SchemaError("alpha entries must be non-negative");
    return alpha;
}

std::vector<std::string> parse_list(const std::string& arg) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : arg) {
        if (ch == ',') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

void emit(const CommonOpts& c, const json& doc) {
    if (c.output == "json") {
        std::cout << doc.dump() << "\n";
    } else {
        for (auto& [k, v] : doc.items())
            std::cout << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
    }
}

json poly_json(const qk::IntPolynomial& p) {
    return json{{"poly", p.pretty()}, {"coeffs", p.coeffs()}};
}

struct Check {
    std::string name;
    bool pass;
};

int report_checks(const std::vector<Check>& checks, const CommonOpts& c) {
    bool all = true;
    json out = json::array();
    for (const Check& ch : checks) {
        all = all && ch.pass;
        if (c.output == "json")
            out.push_back({{"check", ch.name}, {"pass", ch.pass}});
        else
            std::cout << (ch.pass ? "PASS " : "FAIL ") << ch.name << "\n";
    }
    if (c.output == "json") std::cout << out.dump() << "\n";
    return all ? 0 : 1;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact counting of absolutely indecomposable quiver and equipped-graph "
                 "representations over finite fields"};
    app.require_subcommand(1);

    CommonOpts c;
    if (const char* env = std::getenv("QUIVERKAC_CACHE")) c.cache_path = env;

    std::string max_arg, q_arg;
    bool verify_oracle = false, show_terms = false;

    auto add_common = [&](CLI::App* sub, bool needs_alpha) {
        sub->add_option("input", c.input_path, "input JSON file")->required();
        auto* a = sub->add_option("--alpha", c.alpha_arg, "dimension vector (1,2 or v1=1,v2=2)");
        if (needs_alpha) a->required();
        sub->add_option("--output", c.output, "json|text")->check(CLI::IsMember({"json", "text"}));
        sub->add_option("--cache", c.cache_path, "polynomial cache file");
        sub->add_option("--max-points", c.max_points, "enumeration budget");
        sub->add_option("--max-group", c.max_group, "group size budget");
        sub->add_option("--max-end-dim", c.max_end_dim, "End dimension budget");
    };

    CLI::App* roots_cmd = app.add_subcommand("roots", "classify a dimension vector");
    add_common(roots_cmd, true);
    CLI::App* kac_cmd = app.add_subcommand("kac", "Kac polynomial of a quiver");
    add_common(kac_cmd, true);
    CLI::App* maxrank_cmd = app.add_subcommand("maxrank", "maximal-rank count polynomial");
    add_common(maxrank_cmd, true);
    maxrank_cmd->add_option("--max", max_arg, "comma-separated arrow ids forced to maximal rank");
    maxrank_cmd->add_flag("--verify-oracle", verify_oracle, "cross-check against the oracle");
    CLI::App* equipped_cmd = app.add_subcommand("equipped", "equipped-graph count polynomial");
    add_common(equipped_cmd, true);
    equipped_cmd->add_flag("--verify-oracle", verify_oracle, "cross-check against the oracle");
    equipped_cmd->add_flag("--show-terms", show_terms, "print each summand");
    CLI::App* oracle_cmd = app.add_subcommand("oracle-count", "brute-force count at one q");
    add_common(oracle_cmd, true);
    oracle_cmd->add_option("--q", q_arg, "field size")->required();
    oracle_cmd->add_option("--max", max_arg, "comma-separated arrow ids forced to maximal rank");
    CLI::App* verify_cmd = app.add_subcommand("verify", "run the cross-check battery");
    add_common(verify_cmd, true);
    verify_cmd->add_option("--max", max_arg, "comma-separated arrow ids forced to maximal rank");

    CLI11_PARSE(app, argc, argv);

    qk::Budgets budgets = budgets_of(c);
    qk::PolyCache cache_store(c.cache_path);
    qk::PolyCache* cache = c.cache_path.empty() ? nullptr : &cache_store;

    auto [doc, is_equipped] = qk::load_input_file(c.input_path);
    qk::EquippedGraph eg;
    qk::Quiver quiver;
    std::vector<std::string> vertex_list;
    if (is_equipped) {
        eg = qk::equipped_graph_from_json(doc);
        vertex_list = eg.graph.g.vertices;
        quiver = qk::orient_canonical(eg.graph).quiver;  // an orientation of the graph
    } else {
        quiver = qk::quiver_from_json(doc);
        vertex_list = quiver.vertices;
    }
    qk::DimVector alpha = parse_alpha(c.alpha_arg, vertex_list);

    if (roots_cmd->parsed()) {
        qk::RootClass rc = qk::classify_root(quiver, alpha);
        emit(c, json{{"class", qk::to_string(rc.tag)},
                     {"q", qk::quadratic_form(quiver, alpha)},
                     {"witness", rc.witness}});
        return 0;
    }

    if (kac_cmd->parsed()) {
        emit(c, poly_json(qk::kac_polynomial(quiver, alpha, budgets, cache)));
        return 0;
    }

    if (maxrank_cmd->parsed()) {
        if (is_equipped) throw qk::SchemaError("maxrank expects a quiver input");
        std::vector<std::string> m = parse_list(max_arg);
        qk::MaxrankOptions opts;
        opts.budgets = budgets;
        opts.cache = cache;
        qk::IntPolynomial p = qk::maxrank_polynomial(quiver, m, alpha, opts);
        if (verify_oracle) {
            std::vector<Check> checks;
            for (int qv : {2, 3}) {
                long long got =
                    qk::count_abs_indec_quiver(quiver, alpha, m, qk::FieldSpec::get(qv), budgets);
                checks.push_back({"oracle q=" + std::to_string(qv), got == p.eval(qv)});
            }
            int rc = report_checks(checks, c);
            if (rc) return rc;
        }
        emit(c, poly_json(p));
        return 0;
    }

    if (equipped_cmd->parsed()) {
        if (!is_equipped) throw qk::SchemaError("equipped expects an equipped-graph input");
        qk::MaxrankOptions opts;
        opts.budgets = budgets;
        opts.cache = cache;
        if (show_terms) {
            json terms = json::array();
            qk::IntPolynomial sum;
            for (const qk::TermReport& t : qk::equipped_count_terms(eg, alpha, opts)) {
                terms.push_back({{"alpha", t.alpha_prime}, {"poly", t.value.pretty()}});
                sum = sum + t.value;
            }
            emit(c, json{{"poly", sum.pretty()}, {"coeffs", sum.coeffs()}, {"terms", terms}});
            return 0;
        }
        qk::IntPolynomial p = qk::equipped_count_polynomial(eg, alpha, opts);
        if (verify_oracle) {
            std::vector<Check> checks;
            checks.push_back(
                {"matches Kac polynomial of an orientation",
                 p == qk::kac_polynomial(quiver, alpha, budgets, cache)});
            for (int qv : {2, 3}) {
                long long got =
                    qk::count_abs_indec_equipped(eg, alpha, qk::FieldSpec::get(qv), budgets);
                checks.push_back({"oracle q=" + std::to_string(qv), got == p.eval(qv)});
            }
            int rc = report_checks(checks, c);
            if (rc) return rc;
        }
        emit(c, poly_json(p));
        return 0;
    }

    if (oracle_cmd->parsed()) {
        int qv = std::stoi(q_arg);
        if (!qk::field_supported(qv))
            throw qk::SchemaError("unsupported field size q=" + q_arg);
        const qk::FieldSpec& f = qk::FieldSpec::get(qv);
        long long n;
        if (is_equipped) {
            if (!max_arg.empty())
                throw qk::SchemaError("--max applies only to quiver inputs");
            n = qk::count_abs_indec_equipped(eg, alpha, f, budgets);
        } else {
            n = qk::count_abs_indec_quiver(quiver, alpha, parse_list(max_arg), f, budgets);
        }
        emit(c, json{{"count", n}, {"q", qv}});
        return 0;
    }

    // verify: cross-check battery
    std::vector<Check> checks;
    qk::MaxrankOptions opts;
    opts.budgets = budgets;
    opts.cache = cache;
    qk::RootClass rc = qk::classify_root(quiver, alpha);
    qk::IntPolynomial kp = qk::kac_polynomial(quiver, alpha, budgets, cache);
    checks.push_back({"root classification matches polynomial vanishing",
                      (rc.tag != qk::RootTag::NotRoot) == !kp.is_zero()});
    if (!kp.is_zero()) {
        checks.push_back({"monic of degree 1-q(alpha)",
                          kp.is_monic() &&
                              kp.degree() == 1 - qk::quadratic_form(quiver, alpha)});
        if (rc.tag == qk::RootTag::Real)
            checks.push_back({"real root gives the constant 1", kp == qk::IntPolynomial::constant(1)});
    }
    for (int qv : {2, 3}) {
        long long got =
            qk::count_abs_indec_quiver(quiver, alpha, {}, qk::FieldSpec::get(qv), budgets);
        checks.push_back({"Kac polynomial matches oracle at q=" + std::to_string(qv),
                          got == kp.eval(qv)});
    }
    if (is_equipped) {
        qk::IntPolynomial ep = qk::equipped_count_polynomial(eg, alpha, opts);
        checks.push_back({"equipped sum equals Kac polynomial", ep == kp});
        for (int qv : {2, 3}) {
            long long got =
                qk::count_abs_indec_equipped(eg, alpha, qk::FieldSpec::get(qv), budgets);
            checks.push_back({"equipped oracle matches at q=" + std::to_string(qv),
                              got == ep.eval(qv)});
        }
    } else if (!max_arg.empty()) {
        std::vector<std::string> m = parse_list(max_arg);
        opts.cross_check_choice = true;
        qk::IntPolynomial mp = qk::maxrank_polynomial(quiver, m, alpha, opts);
        for (int qv : {2, 3}) {
            long long got =
                qk::count_abs_indec_quiver(quiver, alpha, m, qk::FieldSpec::get(qv), budgets);
            checks.push_back({"maxrank polynomial matches oracle at q=" + std::to_string(qv),
                              got == mp.eval(qv)});
        }
    }
    return report_checks(checks, c);
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const qk::ResourceError& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 3;
    } catch (const qk::SchemaError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const qk::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
}
