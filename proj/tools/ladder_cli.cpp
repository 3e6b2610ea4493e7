// SPDX-License-Identifier: Apache-2.0
//
// ladder: exact resistances, Kirchhoff index, invariants and sequence dumps
// for the n-rung ladder graph, plus a self-contained verification suite.

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "ladder/ladder.hpp"

namespace {

using nlohmann::ordered_json;

struct OutputConfig {
    std::string format = "plain"; // plain | json | csv
    bool float_mode = false;
    int float_digits = 12;
    std::string out_path; // empty means stdout
};

std::string render(const OutputConfig& cfg, const ladder::Rational& value) {
    if (!cfg.float_mode) {
        return ladder::to_string(value);
    }
    std::ostringstream out;
    out << std::fixed << std::setprecision(cfg.float_digits) << ladder::to_double(value);
    return out.str();
}

void emit(const OutputConfig& cfg, const std::string& text) {
    if (cfg.out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(cfg.out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot open output file " + cfg.out_path);
    }
    file << text;
}

std::string trimmed(const std::string& text) {
    const auto first = text.find_first_not_of(" \t");
    if (first == std::string::npos) return "";
    const auto last = text.find_last_not_of(" \t");
    return text.substr(first, last - first + 1);
}

std::pair<ladder::VertexRef, ladder::VertexRef> parse_pair(const std::string& spec) {
    const auto comma = spec.find(',');
    if (comma == std::string::npos) {
        throw std::invalid_argument("--pair expects two vertices like p3,q3");
    }
    return {ladder::parse_vertex(trimmed(spec.substr(0, comma))),
            ladder::parse_vertex(trimmed(spec.substr(comma + 1)))};
}

// --- resist ----------------------------------------------------------------

std::string csv_table_row(const OutputConfig& cfg, ladder::VertexRef a, ladder::VertexRef b,
                          const ladder::Rational& value) {
    std::ostringstream out;
    out << ladder::side_letter(a.side) << ',' << a.index << ',' << ladder::side_letter(b.side)
        << ',' << b.index << ',' << render(cfg, value) << '\n';
    return out.str();
}

ordered_json json_table_entry(const OutputConfig& cfg, ladder::VertexRef a, ladder::VertexRef b,
                              const ladder::Rational& value) {
    return ordered_json{
        {"side_a", std::string(1, ladder::side_letter(a.side))},
        {"idx_a", a.index},
        {"side_b", std::string(1, ladder::side_letter(b.side))},
        {"idx_b", b.index},
        {"value", render(cfg, value)},
    };
}

int cmd_resist(const OutputConfig& cfg, int n, const std::string& pair_spec, bool all) {
    const ladder::LadderSpec spec(n);
    if (all == !pair_spec.empty()) {
        throw std::invalid_argument("resist needs exactly one of --pair or --all");
    }

    if (!pair_spec.empty()) {
        const auto [a, b] = parse_pair(pair_spec);
        spec.require(a);
        spec.require(b);
        const ladder::Rational value = ladder::resistance(spec, a, b);
        const auto [lo, hi] = ladder::ResistanceTable::canonical(a, b);
        if (cfg.format == "csv") {
            emit(cfg, "side_a,idx_a,side_b,idx_b,value\n" + csv_table_row(cfg, lo, hi, value));
        } else if (cfg.format == "json") {
            ordered_json doc = json_table_entry(cfg, lo, hi, value);
            doc["n"] = n;
            emit(cfg, doc.dump() + "\n");
        } else {
            emit(cfg, render(cfg, value) + "\n");
        }
        return 0;
    }

    const ladder::ResistanceTable table = ladder::resistance_table(spec);
    if (cfg.format == "csv") {
        std::string out = "side_a,idx_a,side_b,idx_b,value\n";
        for (const auto& [key, value] : table.entries()) {
            out += csv_table_row(cfg, key.first, key.second, value);
        }
        emit(cfg, out);
    } else if (cfg.format == "json") {
        ordered_json entries = ordered_json::array();
        for (const auto& [key, value] : table.entries()) {
            entries.push_back(json_table_entry(cfg, key.first, key.second, value));
        }
        emit(cfg, ordered_json{{"n", n}, {"source", "closed_form"}, {"entries", entries}}.dump() +
                      "\n");
    } else {
        std::string out;
        for (const auto& [key, value] : table.entries()) {
            out += "r(" + ladder::to_string(key.first) + "," + ladder::to_string(key.second) +
                   ") = " + render(cfg, value) + "\n";
        }
        emit(cfg, out);
    }
    return 0;
}

// --- kirchhoff --------------------------------------------------------------

int cmd_kirchhoff(const OutputConfig& cfg, int n) {
    const ladder::Rational value = ladder::kirchhoff(n);
    if (cfg.format == "csv") {
        emit(cfg, "n,kirchhoff\n" + std::to_string(n) + "," + render(cfg, value) + "\n");
    } else if (cfg.format == "json") {
        emit(cfg, ordered_json{{"n", n}, {"kirchhoff", render(cfg, value)}}.dump() + "\n");
    } else {
        emit(cfg, render(cfg, value) + "\n");
    }
    return 0;
}

// --- invariants ---------------------------------------------------------------

int cmd_invariants(const OutputConfig& cfg, int n) {
    const ladder::InvariantSet inv = ladder::invariants_closed(n);
    const ladder::LadderSpec spec(n);
    const std::string undefined = "undefined (genus 0)";
    const auto field = [&](const std::optional<ladder::Rational>& value) {
        return value ? render(cfg, *value) : undefined;
    };

    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "n,total_length,genus,tau,theta,lambda,phi,epsilon,zcap\n"
            << n << ',' << spec.total_length() << ',' << spec.genus() << ','
            << render(cfg, inv.tau) << ',' << render(cfg, inv.theta) << ','
            << render(cfg, inv.lambda) << ',' << field(inv.phi) << ',' << field(inv.epsilon)
            << ',' << field(inv.zcap) << '\n';
        emit(cfg, out.str());
    } else if (cfg.format == "json") {
        emit(cfg, ordered_json{{"n", n},
                               {"total_length", spec.total_length()},
                               {"genus", spec.genus()},
                               {"tau", render(cfg, inv.tau)},
                               {"theta", render(cfg, inv.theta)},
                               {"lambda", render(cfg, inv.lambda)},
                               {"phi", field(inv.phi)},
                               {"epsilon", field(inv.epsilon)},
                               {"zcap", field(inv.zcap)}}
                          .dump() +
                      "\n");
    } else {
        std::ostringstream out;
        out << "n = " << n << "\ntotal_length = " << spec.total_length()
            << "\ngenus = " << spec.genus() << "\ntau = " << render(cfg, inv.tau)
            << "\ntheta = " << render(cfg, inv.theta) << "\nlambda = " << render(cfg, inv.lambda)
            << "\nphi = " << field(inv.phi) << "\nepsilon = " << field(inv.epsilon)
            << "\nzcap = " << field(inv.zcap) << "\n";
        emit(cfg, out.str());
    }
    return 0;
}

// --- sequence ----------------------------------------------------------------

int cmd_sequence(const OutputConfig& cfg, const std::string& kind, int max) {
    if (max < 0) {
        throw std::invalid_argument("--max must be >= 0");
    }
    std::vector<ladder::Integer> values;
    values.reserve(static_cast<std::size_t>(max) + 1);
    for (int k = 0; k <= max; ++k) {
        if (kind == "gfib") {
            values.push_back(ladder::gen_fib(k));
        } else if (kind == "cheb") {
            values.push_back(ladder::chebyshev_u_at2(k));
        } else {
            values.push_back(ladder::chebyshev_u_deriv_at2(k));
        }
    }

    if (cfg.format == "csv") {
        std::ostringstream out;
        out << "index,value\n";
        for (int k = 0; k <= max; ++k) out << k << ',' << values[static_cast<std::size_t>(k)].str() << '\n';
        emit(cfg, out.str());
    } else if (cfg.format == "json") {
        ordered_json list = ordered_json::array();
        for (const auto& v : values) list.push_back(v.str());
        emit(cfg, ordered_json{{"kind", kind}, {"max", max}, {"values", list}}.dump() + "\n");
    } else {
        std::ostringstream out;
        for (int k = 0; k <= max; ++k) out << k << ": " << values[static_cast<std::size_t>(k)].str() << '\n';
        emit(cfg, out.str());
    }
    return 0;
}

// --- verify -------------------------------------------------------------------

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string detail;
};

/// Closed forms against the exact Laplacian oracle, pair by pair; also
/// Kirchhoff by summation and spanning trees against gen_fib. The fault
/// injection perturbs one closed-form value to prove the comparison bites.
SuiteResult oracle_suite(int n_max, bool inject_fault) {
    SuiteResult result{"oracle"};
    const int fault_n = std::min(3, n_max);
    for (int n = 1; n <= n_max; ++n) {
        const ladder::LadderSpec spec(n);
        const ladder::LadderGraph graph(n);
        const auto verts = spec.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                ladder::Rational closed = ladder::resistance(spec, verts[i], verts[j]);
                if (inject_fault && n == fault_n && verts[i] == ladder::p(1) &&
                    verts[j] == ladder::q(1)) {
                    closed += 1;
                }
                const ladder::Rational exact =
                    ladder::resistance_exact(graph, verts[i], verts[j]);
                if (closed != exact) {
                    result.pass = false;
                    result.detail = "r(" + ladder::to_string(verts[i]) + "," +
                                    ladder::to_string(verts[j]) + ") at n=" + std::to_string(n) +
                                    ": closed form " + ladder::to_string(closed) +
                                    " != laplacian solve " + ladder::to_string(exact);
                    return result;
                }
            }
        }
        if (ladder::kirchhoff_by_sum(graph) != ladder::kirchhoff(n)) {
            result.pass = false;
            result.detail = "kirchhoff by summation disagrees at n=" + std::to_string(n);
            return result;
        }
        if (n <= 15 && ladder::spanning_trees(graph) != ladder::gen_fib(n)) {
            result.pass = false;
            result.detail = "spanning tree count disagrees at n=" + std::to_string(n);
            return result;
        }
    }
    return result;
}

/// Circuit reductions against the closed forms.
SuiteResult reduction_suite(int n_max) {
    SuiteResult result{"reduction"};
    const auto fail = [&](const std::string& what, int n) {
        result.pass = false;
        result.detail = what + " disagrees at n=" + std::to_string(n);
    };
    for (int n = 1; n <= n_max; ++n) {
        if (ladder::last_rung_by_recurrence(n) != ladder::last_rung_resistance(n)) {
            fail("end-rung recurrence", n);
            return result;
        }
        if (ladder::last_rung_by_continued_fraction(n) != ladder::last_rung_resistance(n)) {
            fail("continued fraction", n);
            return result;
        }
        const auto [x, y] = ladder::spans_by_recurrence(n);
        if (x != ladder::rail_span_resistance(n) || y != ladder::diagonal_span_resistance(n)) {
            fail("corner span recurrence", n);
            return result;
        }
        if (ladder::span_difference_by_product(n) != ladder::span_difference(n)) {
            fail("span difference product", n);
            return result;
        }
        const ladder::LadderSpec spec(n);
        const auto verts = spec.vertices();
        for (std::size_t i = 0; i < verts.size(); ++i) {
            for (std::size_t j = i + 1; j < verts.size(); ++j) {
                if (ladder::resistance_by_reduction(spec, verts[i], verts[j]) !=
                    ladder::resistance(spec, verts[i], verts[j])) {
                    result.pass = false;
                    result.detail = "reduction r(" + ladder::to_string(verts[i]) + "," +
                                    ladder::to_string(verts[j]) +
                                    ") disagrees at n=" + std::to_string(n);
                    return result;
                }
            }
        }
    }
    return result;
}

/// gen_fib forms against alpha forms, including the invariants.
SuiteResult gform_suite(int n_max) {
    SuiteResult result{"gform"};
    const auto fail = [&](const std::string& what, int n) {
        result.pass = false;
        result.detail = what + " gen_fib form disagrees at n=" + std::to_string(n);
    };
    for (int n = 1; n <= n_max; ++n) {
        if (ladder::last_rung_gfib(n) != ladder::last_rung_resistance(n)) {
            fail("end rung", n);
            return result;
        }
        if (ladder::rail_span_gfib(n) != ladder::rail_span_resistance(n) ||
            ladder::diagonal_span_gfib(n) != ladder::diagonal_span_resistance(n) ||
            ladder::span_difference_gfib(n) != ladder::span_difference(n)) {
            fail("corner span", n);
            return result;
        }
        if (ladder::kirchhoff_gfib(n) != ladder::kirchhoff(n)) {
            fail("kirchhoff", n);
            return result;
        }
        const ladder::InvariantSet a = ladder::invariants_closed(n);
        const ladder::InvariantSet g = ladder::invariants_gfib(n);
        if (a.tau != g.tau || a.theta != g.theta || a.lambda != g.lambda || a.phi != g.phi ||
            a.epsilon != g.epsilon || a.zcap != g.zcap) {
            fail("invariant set", n);
            return result;
        }
        if (n <= 12) {
            for (int i = 1; i <= n; ++i) {
                for (int j = 1; j <= i; ++j) {
                    if (ladder::rail_resistance_gfib(n, i, j) !=
                            ladder::rail_resistance(n, i, j) ||
                        ladder::cross_resistance_gfib(n, i, j) !=
                            ladder::cross_resistance(n, i, j)) {
                        result.pass = false;
                        result.detail = "pair gen_fib form disagrees at n=" + std::to_string(n) +
                                        " i=" + std::to_string(i) + " j=" + std::to_string(j);
                        return result;
                    }
                }
            }
        }
    }
    return result;
}

/// Floating-point spectral identities against the exact values.
SuiteResult spectral_suite(int n_max) {
    SuiteResult result{"spectral"};
    for (int n = 1; n <= n_max; ++n) {
        const double exact = ladder::to_double(ladder::kirchhoff(n));
        const double eq_sum = ladder::kirchhoff_spectral(n);
        const double eq_split = ladder::kirchhoff_spectral_split(n);
        if (std::abs(eq_sum - exact) / exact > 1e-9 || std::abs(eq_split - exact) / exact > 1e-9) {
            result.pass = false;
            result.detail = "spectral Kirchhoff sum off at n=" + std::to_string(n);
            return result;
        }
        const double inv_sin2 = ladder::trig_sum_inverse_sin2(n);
        const double nn = n;
        if (std::abs(inv_sin2 - 2.0 * (nn * nn - 1.0) / 3.0) > 1e-8) {
            result.pass = false;
            result.detail = "inverse-sin^2 sum off at n=" + std::to_string(n);
            return result;
        }
        const ladder::Integer g = ladder::gen_fib(n);
        const ladder::Rational shifted_exact =
            ladder::Rational(1, 3) + ladder::make_rational(n * ladder::gen_fib(2LL * n), 6 * g * g);
        if (std::abs(ladder::trig_sum_shifted(n) - ladder::to_double(shifted_exact)) > 1e-9) {
            result.pass = false;
            result.detail = "shifted trig sum off at n=" + std::to_string(n);
            return result;
        }
    }
    return result;
}

/// Scaling limits of the invariant ratios and the Riemann-sum limit.
SuiteResult limits_suite(int n_max) {
    SuiteResult result{"limits"};
    const int n0 = std::max(100, n_max);
    const int n1 = 10 * n0;
    const ladder::InvariantRatios lim = ladder::invariant_ratio_limits();
    const ladder::InvariantRatios near = ladder::invariant_ratios(n0);
    const ladder::InvariantRatios far = ladder::invariant_ratios(n1);
    const auto check = [&](double near_v, double far_v, double limit, const char* name) {
        if (!result.pass) return;
        const double err_near = std::abs(near_v - limit);
        const double err_far = std::abs(far_v - limit);
        if (err_far > 1e-2 || err_far > err_near) {
            result.pass = false;
            result.detail = std::string(name) + " ratio does not settle: |err(" +
                            std::to_string(n1) + ")| = " + std::to_string(err_far);
        }
    };
    check(near.tau_per_length, far.tau_per_length, lim.tau_per_length, "tau/length");
    check(near.zcap_per_length, far.zcap_per_length, lim.zcap_per_length, "zcap/length");
    check(near.phi_per_genus_length, far.phi_per_genus_length, lim.phi_per_genus_length,
          "phi/(genus length)");
    check(near.epsilon_per_genus_length, far.epsilon_per_genus_length,
          lim.epsilon_per_genus_length, "epsilon/(genus length)");
    check(near.lambda_per_genus_length, far.lambda_per_genus_length, lim.lambda_per_genus_length,
          "lambda/(genus length)");
    check(near.theta_per_genus_sq_length, far.theta_per_genus_sq_length,
          lim.theta_per_genus_sq_length, "theta/(genus^2 length)");
    if (result.pass) {
        const double target = std::numbers::pi / (2.0 * std::sqrt(3.0));
        if (std::abs(ladder::riemann_left(2000) - target) > 1e-3) {
            result.pass = false;
            result.detail = "left Riemann sum misses pi/(2 sqrt(3)) at n=2000";
        }
    }
    return result;
}

int cmd_verify(const OutputConfig& cfg, int n_max, const std::string& suite, bool inject_fault) {
    if (n_max < 1) {
        throw std::invalid_argument("--n-max must be >= 1");
    }
    const std::vector<std::string> known = {"oracle", "reduction", "gform", "spectral", "limits"};
    if (!suite.empty() && std::find(known.begin(), known.end(), suite) == known.end()) {
        throw std::invalid_argument("unknown suite \"" + suite + "\"");
    }
    std::vector<SuiteResult> results;
    const auto wanted = [&](const char* name) { return suite.empty() || suite == name; };
    if (wanted("oracle")) results.push_back(oracle_suite(n_max, inject_fault));
    if (wanted("reduction")) results.push_back(reduction_suite(n_max));
    if (wanted("gform")) results.push_back(gform_suite(n_max));
    if (wanted("spectral")) results.push_back(spectral_suite(n_max));
    if (wanted("limits")) results.push_back(limits_suite(n_max));

    std::size_t failed = 0;
    for (const auto& r : results) {
        if (!r.pass) ++failed;
    }

    if (cfg.format == "json") {
        ordered_json suites = ordered_json::array();
        for (const auto& r : results) {
            suites.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        }
        emit(cfg, ordered_json{{"n_max", n_max}, {"suites", suites}, {"pass", failed == 0}}.dump() +
                      "\n");
    } else {
        std::string out;
        for (const auto& r : results) {
            out += r.name + ": " + (r.pass ? "PASS" : "FAIL " + r.detail) + "\n";
        }
        out += failed == 0 ? "all " + std::to_string(results.size()) + " suites passed\n"
                           : std::to_string(failed) + " of " + std::to_string(results.size()) +
                                 " suites failed\n";
        emit(cfg, out);
    }
    return failed == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact resistances and invariants of ladder graphs"};
    app.require_subcommand(1);

    OutputConfig cfg;
    app.add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"plain", "json", "csv"}))
        ->capture_default_str();
    app.add_flag("--float", cfg.float_mode, "render values as fixed-point floats");
    app.add_option("--digits", cfg.float_digits, "decimal places in float mode")
        ->check(CLI::Range(1, 17))
        ->capture_default_str();
    app.add_option("--out", cfg.out_path, "write output to this file instead of stdout");

    auto* resist = app.add_subcommand("resist", "effective resistance between vertices");
    int resist_n = 0;
    std::string pair_spec;
    bool all = false;
    resist->add_option("--n", resist_n, "number of rungs")->required();
    resist->add_option("--pair", pair_spec, "vertex pair like p3,q3");
    resist->add_flag("--all", all, "every unordered pair");
    resist->fallthrough();

    auto* kirchhoff_cmd = app.add_subcommand("kirchhoff", "Kirchhoff index");
    int kirchhoff_n = 0;
    kirchhoff_cmd->add_option("--n", kirchhoff_n, "number of rungs")->required();
    kirchhoff_cmd->fallthrough();

    auto* invariants_cmd = app.add_subcommand("invariants", "metrized-graph invariants");
    int invariants_n = 0;
    invariants_cmd->add_option("--n", invariants_n, "number of rungs")->required();
    invariants_cmd->fallthrough();

    auto* sequence_cmd = app.add_subcommand("sequence", "integer sequence dump");
    std::string kind = "gfib";
    int seq_max = 10;
    sequence_cmd->add_option("--kind", kind, "which sequence")
        ->check(CLI::IsMember({"gfib", "cheb", "cheb-deriv"}))
        ->capture_default_str();
    sequence_cmd->add_option("--max", seq_max, "largest index")->capture_default_str();
    sequence_cmd->fallthrough();

    auto* verify_cmd = app.add_subcommand("verify", "cross-validation suites");
    int n_max = 10;
    std::string suite;
    bool inject_fault = false;
    verify_cmd->add_option("--n-max", n_max, "sweep ladders up to this size")
        ->capture_default_str();
    verify_cmd->add_option("--suite", suite,
                           "run one suite: oracle, reduction, gform, spectral, limits");
    verify_cmd->add_flag("--inject-fault", inject_fault,
                         "deliberately corrupt one value to exercise the failure path");
    verify_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    try {
        if (resist->parsed()) return cmd_resist(cfg, resist_n, pair_spec, all);
        if (kirchhoff_cmd->parsed()) return cmd_kirchhoff(cfg, kirchhoff_n);
        if (invariants_cmd->parsed()) return cmd_invariants(cfg, invariants_n);
        if (sequence_cmd->parsed()) return cmd_sequence(cfg, kind, seq_max);
        if (verify_cmd->parsed()) return cmd_verify(cfg, n_max, suite, inject_fault);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}
