#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI/CLI.hpp>
#include <nlohmann/json.hpp>

#include "pqsurf/reports.hpp"
#include "pqsurf/scenario.hpp"
#include "pqsurf/verify.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitClaimFailed = 1;
constexpr int kExitBadInput = 2;

std::string scalar_str(const ordered_json& v) {
    return v.is_string() ? v.get<std::string>() : v.dump();
}

bool is_scalar_array(const ordered_json& v) {
    if (!v.is_array()) return false;
    for (const auto& e : v)
        if (e.is_object() || e.is_array()) return false;
    return true;
}

std::string scalar_array_str(const ordered_json& v) {
    std::string out = "[";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ", ";
        out += scalar_str(v[i]);
    }
    return out + "]";
}

/// Key/value rendering of a report for terminal reading. Arrays of
/// objects become one indented line per element.
void print_human(const ordered_json& j, std::ostream& os, int indent = 0) {
    std::string pad(indent, ' ');
    for (const auto& [key, value] : j.items()) {
        if (value.is_object()) {
            os << pad << key << ":\n";
            print_human(value, os, indent + 2);
        } else if (is_scalar_array(value)) {
            os << pad << key << ": " << scalar_array_str(value) << "\n";
        } else if (value.is_array()) {
            os << pad << key << ":\n";
            for (const auto& e : value) {
                if (e.is_object()) {
                    std::string line;
                    for (const auto& [k2, v2] : e.items()) {
                        if (!line.empty()) line += "  ";
                        line += k2 + "=" +
                                (is_scalar_array(v2) ? scalar_array_str(v2)
                                                     : scalar_str(v2));
                    }
                    os << pad << "  - " << line << "\n";
                } else {
                    os << pad << "  - " << scalar_str(e) << "\n";
                }
            }
        } else {
            os << pad << key << ": " << scalar_str(value) << "\n";
        }
    }
}

void emit(const ordered_json& report, bool json) {
    if (json)
        std::cout << report.dump() << "\n";
    else
        print_human(report, std::cout);
}

pqs::BiDegree parse_bidegree(const std::string& text) {
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw pqs::validation_error("bidegree must look like \"a,b\": " + text);
    try {
        long long a = std::stoll(text.substr(0, comma));
        long long b = std::stoll(text.substr(comma + 1));
        return {a, b};
    } catch (const std::exception&) {
        throw pqs::validation_error("bidegree must look like \"a,b\": " + text);
    }
}

std::string error_type(const pqs::error& ex) {
    if (dynamic_cast<const pqs::validation_error*>(&ex)) return "validation";
    if (dynamic_cast<const pqs::domain_error*>(&ex)) return "domain";
    if (dynamic_cast<const pqs::integrality_error*>(&ex)) return "integrality";
    if (dynamic_cast<const pqs::inconsistency_error*>(&ex)) return "inconsistency";
    if (dynamic_cast<const pqs::off_variety_error*>(&ex)) return "off_variety";
    return "error";
}

int print_error(const std::string& type, const std::string& message) {
    ordered_json err{{"error", {{"type", type}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
    return kExitBadInput;
}

int run_verify(const std::string& filter, bool json) {
    auto results = pqs::run_paper_checks(filter);
    if (results.empty()) {
        std::cerr << "no checks match filter \"" << filter << "\"\n";
        return kExitBadInput;
    }
    bool all_pass = true;
    for (const auto& r : results) all_pass = all_pass && r.pass;

    if (json) {
        ordered_json j = ordered_json::array();
        for (const auto& r : results)
            j.push_back({{"id", r.id}, {"block", r.block},
                         {"expected", r.expected}, {"computed", r.computed},
                         {"pass", r.pass}});
        std::cout << j.dump() << "\n";
    } else {
        std::size_t id_w = 5, block_w = 5, exp_w = 8, comp_w = 8;
        for (const auto& r : results) {
            id_w = std::max(id_w, r.id.size());
            block_w = std::max(block_w, r.block.size());
            exp_w = std::max(exp_w, r.expected.size());
            comp_w = std::max(comp_w, r.computed.size());
        }
        std::cout << std::left << std::setw(static_cast<int>(id_w + 2)) << "claim"
                  << std::setw(static_cast<int>(block_w + 2)) << "block"
                  << std::setw(static_cast<int>(exp_w + 2)) << "expected"
                  << std::setw(static_cast<int>(comp_w + 2)) << "computed"
                  << "status\n";
        for (const auto& r : results) {
            std::cout << std::left << std::setw(static_cast<int>(id_w + 2)) << r.id
                      << std::setw(static_cast<int>(block_w + 2)) << r.block
                      << std::setw(static_cast<int>(exp_w + 2)) << r.expected
                      << std::setw(static_cast<int>(comp_w + 2)) << r.computed
                      << (r.pass ? "PASS" : "FAIL") << "\n";
        }
        std::size_t passed = 0;
        for (const auto& r : results)
            if (r.pass) ++passed;
        std::cout << passed << "/" << results.size() << " checks passed\n";
    }
    return all_pass ? kExitOk : kExitClaimFailed;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Invariants, cohomology and deformation bookkeeping for "
                 "cyclic product-quotient surfaces"};
    app.require_subcommand(1);
    bool json = false;

    auto add_json = [&](CLI::App* sub) {
        sub->add_flag("--json", json, "emit the report as JSON");
    };

    // resolve
    auto* resolve = app.add_subcommand(
        "resolve", "Continued-fraction resolution of one singular point or "
                   "of the whole singular set of a scenario");
    long long res_n = 0, res_q = 0;
    std::string res_scenario;
    resolve->add_option("--n", res_n, "group order of the cyclic point");
    resolve->add_option("--q", res_q, "second rotation weight");
    resolve->add_option("scenario", res_scenario, "builtin name or JSON file");
    add_json(resolve);

    // invariants
    auto* inv = app.add_subcommand(
        "invariants", "Numerical invariants of the minimal resolution");
    std::string inv_scenario;
    long long inv_smooth = -1;
    inv->add_option("scenario", inv_scenario, "builtin name or JSON file")
        ->required();
    inv->add_option("--smooth", inv_smooth,
                    "recompute K^2 after locally smoothing this many basic "
                    "1/4(1,1) points");
    add_json(inv);

    // tangent
    auto* tan = app.add_subcommand(
        "tangent", "Tangent-sheaf cohomology and deformation ledgers");
    std::string tan_scenario;
    tan->add_option("scenario", tan_scenario, "builtin name or JSON file")
        ->required();
    add_json(tan);

    // pardini
    auto* par = app.add_subcommand(
        "pardini", "Building data of the cover of the quadric: eigensheaf "
                   "classes, carry table, relation check");
    std::string par_scenario;
    std::vector<std::string> par_bidouble;
    par->add_option("scenario", par_scenario, "builtin name or JSON file");
    par->add_option("--bidouble", par_bidouble,
                    "three branch bidegrees \"a,b\" for a standalone "
                    "bidouble-cover computation")
        ->expected(3);
    add_json(par);

    // natdef
    auto* nat = app.add_subcommand(
        "natdef", "Dimension count of the natural deformations of the cover");
    std::string nat_scenario;
    nat->add_option("scenario", nat_scenario, "builtin name or JSON file")
        ->required();
    add_json(nat);

    // relations
    auto* rel = app.add_subcommand(
        "relations", "Multiplication relations of the cover algebra");
    std::string rel_scenario;
    bool rel_natural = false;
    rel->add_option("scenario", rel_scenario, "builtin name or JSON file")
        ->required();
    rel->add_flag("--natural", rel_natural,
                  "replace branch sections by their natural deformations");
    add_json(rel);

    // smooth-check
    auto* smooth = app.add_subcommand(
        "smooth-check", "Jacobian certificate for the one-parameter "
                        "smoothing of the split-branch cover");
    std::string smooth_scenario;
    std::string smooth_s = "1";
    smooth->add_option("scenario", smooth_scenario,
                       "builtin name or JSON file")
        ->required();
    smooth->add_option("--s", smooth_s,
                       "deformation parameter, a rational \"p/q\"");
    add_json(smooth);

    // verify-paper
    auto* verify = app.add_subcommand(
        "verify-paper", "Run every pinned claim and report pass/fail");
    std::string verify_filter;
    verify->add_option("--filter", verify_filter,
                       "only run checks whose id or block contains this");
    add_json(verify);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitBadInput;
    }

    try {
        if (*resolve) {
            if (!res_scenario.empty()) {
                emit(pqs::reports::resolve_scenario(
                         pqs::load_scenario(res_scenario)),
                     json);
            } else if (res_n > 0) {
                emit(pqs::reports::resolve_point(res_n, res_q), json);
            } else {
                return print_error("usage",
                                   "resolve needs --n/--q or a scenario");
            }
        } else if (*inv) {
            pqs::Scenario sc = pqs::load_scenario(inv_scenario);
            if (inv_smooth >= 0)
                emit(pqs::reports::partial_smoothing(sc, inv_smooth), json);
            else
                emit(pqs::reports::invariants(sc), json);
        } else if (*tan) {
            emit(pqs::reports::tangent(pqs::load_scenario(tan_scenario)),
                 json);
        } else if (*par) {
            if (!par_bidouble.empty()) {
                emit(pqs::reports::bidouble(parse_bidegree(par_bidouble[0]),
                                            parse_bidegree(par_bidouble[1]),
                                            parse_bidegree(par_bidouble[2])),
                     json);
            } else if (!par_scenario.empty()) {
                emit(pqs::reports::pardini(pqs::load_scenario(par_scenario)),
                     json);
            } else {
                return print_error("usage",
                                   "pardini needs a scenario or --bidouble");
            }
        } else if (*nat) {
            emit(pqs::reports::natdef(pqs::load_scenario(nat_scenario)),
                 json);
        } else if (*rel) {
            emit(pqs::reports::relations(pqs::load_scenario(rel_scenario),
                                         rel_natural),
                 json);
        } else if (*smooth) {
            pqs::Scenario sc = pqs::load_scenario(smooth_scenario);
            pqs::Fraction s = pqs::Fraction::parse(smooth_s);
            ordered_json report = pqs::reports::smooth_check(sc, s);
            emit(report, json);
            return report.at("pass").get<bool>() ? kExitOk : kExitClaimFailed;
        } else if (*verify) {
            return run_verify(verify_filter, json);
        }
    } catch (const pqs::error& ex) {
        return print_error(error_type(ex), ex.what());
    } catch (const std::exception& ex) {
        return print_error("error", ex.what());
    }
    return kExitOk;
}
