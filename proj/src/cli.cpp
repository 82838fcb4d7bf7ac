#include "coveralg/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "coveralg/covers.hpp"
#include "coveralg/exact_linear.hpp"
#include "coveralg/hypergraph.hpp"
#include "coveralg/io.hpp"
#include "coveralg/mengerian.hpp"
#include "coveralg/monomial_ideal.hpp"

namespace coveralg {

namespace {

using Json = nlohmann::ordered_json;

Json json_ints(const std::vector<Int>& v) {
    return Json(v);
}

Json json_edges(const std::vector<std::vector<int>>& edges) {
    Json out = Json::array();
    for (const auto& e : edges) out.push_back(e);
    return out;
}

Json json_point(const RationalPoint& p) {
    Json out = Json::array();
    for (const auto& x : p.coordinates) out.push_back(to_string(x));
    return out;
}

Json json_tu_witness(const TUWitness& w) {
    Json rows = Json::array(), cols = Json::array();
    for (auto r : w.row_indices) rows.push_back(r + 1);
    for (auto c : w.col_indices) cols.push_back(c + 1);
    return Json{{"rows", rows}, {"cols", cols}, {"determinant", w.determinant.str()}};
}

Json json_cover(const CoverVector& c) {
    return Json{{"c", json_ints(c.c)}, {"k", c.k}};
}

std::vector<Int> parse_int_list(const std::string& text, const std::string& what) {
    std::vector<Int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            std::size_t pos = 0;
            out.push_back(std::stoll(item, &pos));
            if (pos != item.size()) throw std::invalid_argument(item);
        } catch (const std::exception&) {
            throw CLI::ValidationError(what, "'" + item + "' is not an integer");
        }
    }
    if (out.empty()) throw CLI::ValidationError(what, "empty list");
    return out;
}

// One parsed invocation; everything the command handlers need.
struct Invocation {
    ParsedInput input;

    const Hypergraph& h() const { return input.hypergraph; }
    const WeightFunction& w() const { return input.weights; }
};

struct Outcome {
    Json report;
    int exit_code = 0;
};

void render_text(const Json& value, const std::string& key, std::ostream& out) {
    if (value.is_object()) {
        for (auto it = value.begin(); it != value.end(); ++it)
            render_text(it.value(), key.empty() ? it.key() : key + "." + it.key(), out);
        return;
    }
    if (value.is_array()) {
        const bool scalars = std::all_of(value.begin(), value.end(), [](const Json& x) {
            return !x.is_structured();
        });
        if (scalars) {
            out << key << ":";
            for (const auto& x : value)
                out << ' ' << (x.is_string() ? x.get<std::string>() : x.dump());
            out << '\n';
        } else {
            for (std::size_t i = 0; i < value.size(); ++i)
                render_text(value[i], key + "[" + std::to_string(i) + "]", out);
        }
        return;
    }
    out << key << ": "
        << (value.is_string() ? value.get<std::string>() : value.dump()) << '\n';
}

Json base_report(const std::string& command, const Invocation& inv, Json params) {
    return Json{{"command", command},
                {"input", input_digest(inv.h(), inv.w())},
                {"parameters", std::move(params)}};
}

// ---- command handlers ----------------------------------------------------

Outcome cmd_blocker(const Invocation& inv) {
    Json report = base_report("blocker", inv, Json::object());
    Hypergraph b = blocker(inv.h());
    report["verdict"] = "computed";
    report["exit_code"] = 0;
    report["result"] = Json{{"edge_count", b.edge_count()},
                            {"blocker_edges", json_edges(b.edges)}};
    return {std::move(report), 0};
}

Outcome cmd_tu_check(const Invocation& inv) {
    Json report = base_report("tu-check", inv, Json::object());
    auto witness = find_tu_violation(incidence_matrix(inv.h()));
    if (!witness) {
        report["verdict"] = "totally-unimodular";
        report["exit_code"] = 0;
        return {std::move(report), 0};
    }
    report["verdict"] = "not-totally-unimodular";
    report["exit_code"] = 1;
    report["witness"] = json_tu_witness(*witness);
    return {std::move(report), 1};
}

Outcome cmd_is_cover(const Invocation& inv, const std::vector<Int>& c, Int k) {
    Json report = base_report("is-cover", inv,
                              Json{{"cover", json_ints(c)}, {"k", k}});
    if (is_k_cover(inv.h(), inv.w(), c, k)) {
        report["verdict"] = "is-k-cover";
        report["exit_code"] = 0;
        return {std::move(report), 0};
    }
    report["verdict"] = "not-k-cover";
    report["exit_code"] = 1;
    for (std::size_t r = 0; r < inv.h().edge_count(); ++r) {
        Int sum = 0;
        for (int v : inv.h().edges[r]) sum += c[static_cast<std::size_t>(v - 1)];
        if (sum < k * inv.w().weights[r]) {
            report["witness"] = Json{{"edge_ordinal", r + 1},
                                     {"edge", inv.h().edges[r]},
                                     {"sum", sum},
                                     {"required", k * inv.w().weights[r]}};
            break;
        }
    }
    return {std::move(report), 1};
}

Outcome cmd_minimal_covers(const Invocation& inv, Int k) {
    Json report = base_report("minimal-covers", inv, Json{{"k", k}});
    auto covers = minimal_k_covers(inv.h(), inv.w(), k);
    Json list = Json::array();
    for (const auto& cv : covers) list.push_back(json_ints(cv.c));
    report["verdict"] = "computed";
    report["exit_code"] = 0;
    report["result"] = Json{{"count", covers.size()}, {"covers", std::move(list)}};
    return {std::move(report), 0};
}

Outcome cmd_decompose(const Invocation& inv, const std::vector<Int>& c, Int k) {
    Json report = base_report("decompose", inv,
                              Json{{"cover", json_ints(c)}, {"k", k}});
    auto parts = decompose(inv.h(), inv.w(), c, k);
    if (parts) {
        Json list = Json::array();
        for (const auto& p : *parts) list.push_back(json_ints(p));
        report["verdict"] = "decomposable";
        report["exit_code"] = 0;
        report["result"] = Json{{"parts", std::move(list)}};
        return {std::move(report), 0};
    }
    report["verdict"] = "non-decomposable";
    report["exit_code"] = 1;
    report["witness"] = Json{{"cover", json_ints(c)}, {"k", k}};
    return {std::move(report), 1};
}

Outcome cmd_standard_graded(const Invocation& inv, Int max_k) {
    Json report = base_report("standard-graded", inv, Json{{"max_k", max_k}});
    auto grading = is_standard_graded_up_to(inv.h(), inv.w(), max_k);
    if (grading.standard) {
        report["verdict"] = "standard-graded";
        report["exit_code"] = 0;
        report["result"] = Json{{"tested_up_to", grading.tested_up_to}};
        return {std::move(report), 0};
    }
    report["verdict"] = "not-standard-graded";
    report["exit_code"] = 1;
    report["witness"] = json_cover(*grading.failing_cover);
    return {std::move(report), 1};
}

Outcome cmd_generators(const Invocation& inv, Int max_k) {
    Json report = base_report("generators", inv, Json{{"max_k", max_k}});
    auto gens = algebra_generators_up_to(inv.h(), inv.w(), max_k);
    Json list = Json::array();
    for (const auto& g : gens)
        list.push_back(Json{{"c", json_ints(g.c)}, {"k", g.k}});
    report["verdict"] = "computed";
    report["exit_code"] = 0;
    report["result"] = Json{{"count", gens.size()}, {"generators", std::move(list)}};
    return {std::move(report), 0};
}

Json json_ideal(const MonomialIdeal& ideal) {
    Json gens = Json::array();
    for (const auto& g : ideal.generators()) gens.push_back(json_ints(g));
    Json text = Json::array();
    for (const auto& g : ideal.generators()) text.push_back(monomial_to_string(g));
    return Json{{"count", ideal.generators().size()},
                {"generators", std::move(gens)},
                {"generators_text", std::move(text)}};
}

Outcome cmd_symbolic_power(const Invocation& inv, Int k) {
    Json report = base_report("symbolic-power", inv, Json{{"k", k}});
    report["verdict"] = "computed";
    report["exit_code"] = 0;
    report["result"] = json_ideal(symbolic_power(inv.h(), inv.w(), k));
    return {std::move(report), 0};
}

Outcome cmd_power(const Invocation& inv, Int k) {
    Json report = base_report("power", inv, Json{{"k", k}});
    report["verdict"] = "computed";
    report["exit_code"] = 0;
    report["result"] = json_ideal(power(ideal_of(inv.h(), inv.w()), k));
    return {std::move(report), 0};
}

Outcome cmd_ideal_equal(const Invocation& inv, Int k) {
    Json report = base_report("ideal-equal", inv, Json{{"k", k}});
    const MonomialIdeal symbolic = symbolic_power(inv.h(), inv.w(), k);
    const MonomialIdeal ordinary = power(ideal_of(inv.h(), inv.w()), k);
    if (equals(symbolic, ordinary)) {
        report["verdict"] = "equal";
        report["exit_code"] = 0;
        return {std::move(report), 0};
    }
    report["verdict"] = "not-equal";
    report["exit_code"] = 1;
    for (const auto& g : symbolic.generators()) {
        if (!contains(ordinary, g)) {
            report["witness"] = Json{{"separating_monomial", json_ints(g)},
                                     {"separating_monomial_text", monomial_to_string(g)},
                                     {"contained_in", "symbolic-power-only"}};
            break;
        }
    }
    return {std::move(report), 1};
}

Outcome cmd_vertices(const Invocation& inv) {
    Json report = base_report("vertices", inv, Json::object());
    auto verts = enumerate_vertices(incidence_matrix(inv.h()), inv.w().weights);
    Json list = Json::array();
    for (const auto& v : verts) list.push_back(json_point(v));
    report["verdict"] = "computed";
    report["exit_code"] = 0;
    report["result"] = Json{{"count", verts.size()}, {"vertices", std::move(list)}};
    return {std::move(report), 0};
}

Outcome cmd_integrality(const Invocation& inv) {
    Json report = base_report("integrality", inv, Json::object());
    auto fractional = find_fractional_vertex(incidence_matrix(inv.h()),
                                             inv.w().weights);
    if (!fractional) {
        report["verdict"] = "integral";
        report["exit_code"] = 0;
        return {std::move(report), 0};
    }
    report["verdict"] = "not-integral";
    report["exit_code"] = 1;
    report["witness"] = Json{{"vertex", json_point(*fractional)}};
    return {std::move(report), 1};
}

Outcome cmd_mengerian(const Invocation& inv, Int c_bound) {
    Json report = base_report("mengerian", inv, Json{{"c_bound", c_bound}});
    auto result = is_mengerian_up_to(inv.h(), c_bound);
    if (result.pass) {
        report["verdict"] = "mengerian-up-to-bound";
        report["exit_code"] = 0;
        return {std::move(report), 0};
    }
    report["verdict"] = "not-mengerian";
    report["exit_code"] = 1;
    report["witness"] = Json{{"c", json_ints(*result.witness_c)},
                             {"min_cover_value", *result.min_value},
                             {"max_packing_value", *result.max_value}};
    return {std::move(report), 1};
}

Outcome cmd_hhtz_check(const Invocation& inv, Int max_k, Int c_bound) {
    Json report = base_report("hhtz-check", inv,
                              Json{{"max_k", max_k}, {"c_bound", c_bound}});
    auto result = hhtz_crosscheck(inv.h(), max_k, c_bound);
    Json detail{{"standard_graded", result.graded.standard},
                {"blocker_mengerian", result.mengerian.pass}};
    if (result.graded.failing_cover)
        detail["grading_witness"] = json_cover(*result.graded.failing_cover);
    if (result.mengerian.witness_c)
        detail["mengerian_witness"] =
            Json{{"c", json_ints(*result.mengerian.witness_c)},
                 {"min_cover_value", *result.mengerian.min_value},
                 {"max_packing_value", *result.mengerian.max_value}};
    if (result.hard_inconsistency) {
        report["verdict"] = "hard-inconsistency";
        report["exit_code"] = 1;
        report["result"] = std::move(detail);
        return {std::move(report), 1};
    }
    report["verdict"] = result.agreement ? "agreement" : "legal-disagreement";
    report["exit_code"] = 0;
    report["result"] = std::move(detail);
    return {std::move(report), 0};
}

Outcome cmd_verify_theorem(const Invocation& inv, Int w_bound, Int max_k) {
    Json report = base_report("verify-theorem", inv,
                              Json{{"w_bound", w_bound}, {"max_k", max_k}});
    auto result = verify_main_theorem(inv.h(), w_bound, max_k);
    Json detail{{"unimodular", result.unimodular}};
    if (result.tu_witness) detail["tu_witness"] = json_tu_witness(*result.tu_witness);
    if (result.witness_weights) detail["weights"] = json_ints(*result.witness_weights);
    if (result.fractional_vertex)
        detail["fractional_vertex"] = json_point(*result.fractional_vertex);
    if (result.witness_cover) detail["cover"] = json_cover(*result.witness_cover);
    switch (result.verdict) {
        case TheoremReport::Verdict::AllWeightsStandardGraded:
            report["verdict"] = "all-weights-standard-graded";
            break;
        case TheoremReport::Verdict::WitnessFound:
            report["verdict"] = "witness-found";
            break;
        case TheoremReport::Verdict::NoWitnessWithinBound:
            report["verdict"] = "no-witness-within-bound";
            break;
        case TheoremReport::Verdict::Contradicted:
            report["verdict"] = "theorem-contradicted";
            break;
    }
    const int code =
        result.verdict == TheoremReport::Verdict::Contradicted ? 1 : 0;
    report["exit_code"] = code;
    report["result"] = std::move(detail);
    return {std::move(report), code};
}

Outcome cmd_veronese(const Invocation& inv, Int max_k, Int d_max) {
    Json report = base_report("veronese", inv,
                              Json{{"max_k", max_k}, {"d_max", d_max}});
    auto d = find_veronese_degree(inv.h(), max_k, d_max);
    if (d) {
        report["verdict"] = "found";
        report["exit_code"] = 0;
        report["result"] = Json{{"d", *d}};
        return {std::move(report), 0};
    }
    report["verdict"] = "not-found-within-bound";
    report["exit_code"] = 1;
    return {std::move(report), 1};
}

Outcome cmd_corollary_points(int n, const std::vector<Int>& w, Int k) {
    auto result = corollary_points_check(n, w, k);
    Json report{{"command", "corollary-points"},
                {"input", "parameters-only"},
                {"parameters",
                 Json{{"n", n}, {"weights", json_ints(w)}, {"k", k}}}};
    if (result.equal) {
        report["verdict"] = "equal";
        report["exit_code"] = 0;
        report["result"] = Json{{"discrepancy", false}, {"note", result.note}};
        return {std::move(report), 0};
    }
    report["verdict"] = "not-equal";
    report["exit_code"] = 1;
    report["witness"] =
        Json{{"separating_monomial", json_ints(*result.separating_monomial)},
             {"separating_monomial_text",
              monomial_to_string(*result.separating_monomial)}};
    report["result"] = Json{{"discrepancy", true}, {"note", result.note}};
    return {std::move(report), 1};
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out,
                std::ostream& err) {
    CLI::App app{"coveralg: exact toolkit for weighted hypergraph cover algebras"};
    app.require_subcommand(1);
    app.fallthrough();  // accept --format/--timing after the subcommand too
    std::string format = "text";
    bool timing = false;
    app.add_option("--format", format, "report format")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--timing", timing, "print elapsed time to stderr");

    struct {
        std::string file;
        std::string weights_csv;
        std::string cover_csv;
        Int k = 1;
        Int max_k = 3;
        Int w_bound = 3;
        Int c_bound = 2;
        Int d_max = 4;
        int points_n = 1;
    } opt;

    auto add_file_cmd = [&](const std::string& name, const std::string& desc) {
        CLI::App* cmd = app.add_subcommand(name, desc);
        cmd->add_option("file", opt.file, "hypergraph file")->required();
        cmd->add_option("--weights", opt.weights_csv,
                        "comma-separated weights (edge input order, overrides file)");
        return cmd;
    };

    add_file_cmd("blocker", "inclusion-minimal vertex covers");
    add_file_cmd("tu-check", "total unimodularity of the incidence matrix");
    auto* c_is_cover = add_file_cmd("is-cover", "test the k-cover condition");
    c_is_cover->add_option("--cover", opt.cover_csv, "comma-separated vector")->required();
    c_is_cover->add_option("--k", opt.k, "cover order")->required();
    auto* c_min = add_file_cmd("minimal-covers", "componentwise-minimal k-covers");
    c_min->add_option("--k", opt.k, "cover order")->required();
    auto* c_dec = add_file_cmd("decompose", "split a k-cover into k 1-covers");
    c_dec->add_option("--cover", opt.cover_csv, "comma-separated vector")->required();
    c_dec->add_option("--k", opt.k, "cover order")->required();
    auto* c_sg = add_file_cmd("standard-graded", "decompose all minimal covers up to --max-k");
    c_sg->add_option("--max-k", opt.max_k, "depth (default 3)");
    auto* c_gen = add_file_cmd("generators", "cover algebra generators up to --max-k");
    c_gen->add_option("--max-k", opt.max_k, "depth (default 3)");
    auto* c_sym = add_file_cmd("symbolic-power", "minimal generators of the k-th symbolic power");
    c_sym->add_option("--k", opt.k, "power")->required();
    auto* c_pow = add_file_cmd("power", "minimal generators of the k-th ordinary power");
    c_pow->add_option("--k", opt.k, "power")->required();
    auto* c_eq = add_file_cmd("ideal-equal", "compare symbolic and ordinary k-th powers");
    c_eq->add_option("--k", opt.k, "power")->required();
    add_file_cmd("vertices", "vertices of { c >= 0 : M c >= w }");
    add_file_cmd("integrality", "integrality of { c >= 0 : M c >= w }");
    auto* c_men = add_file_cmd("mengerian", "min-cover/max-packing equality up to --c-bound");
    c_men->add_option("--c-bound", opt.c_bound, "box bound (default 2)");
    auto* c_hhtz = add_file_cmd("hhtz-check", "standard gradedness vs blocker Mengerian check");
    c_hhtz->add_option("--max-k", opt.max_k, "grading depth (default 3)");
    c_hhtz->add_option("--c-bound", opt.c_bound, "Mengerian box bound (default 2)");
    auto* c_thm = add_file_cmd("verify-theorem",
                               "gradedness for all weights vs total unimodularity");
    c_thm->add_option("--w-bound", opt.w_bound, "weight scan bound (default 3)");
    c_thm->add_option("--max-k", opt.max_k, "grading depth (default 3)");
    auto* c_ver = add_file_cmd("veronese", "least constant weight that grades standardly");
    c_ver->add_option("--max-k", opt.max_k, "grading depth (default 3)");
    c_ver->add_option("--d-max", opt.d_max, "largest constant weight tried (default 4)");
    auto* c_cor = app.add_subcommand(
        "corollary-points", "powers of point ideals: n+1 coordinate points of P^n");
    c_cor->add_option("--n", opt.points_n, "projective dimension")->required();
    c_cor->add_option("--k", opt.k, "power")->required();
    c_cor->add_option("--weights", opt.weights_csv, "n+1 comma-separated point weights");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    const auto started = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
        CLI::App* cmd = app.get_subcommands().front();
        const std::string name = cmd->get_name();
        if (name == "corollary-points") {
            std::vector<Int> w(static_cast<std::size_t>(opt.points_n) + 1, 1);
            if (!opt.weights_csv.empty())
                w = parse_int_list(opt.weights_csv, "--weights");
            outcome = cmd_corollary_points(opt.points_n, w, opt.k);
        } else {
            std::ifstream file(opt.file);
            if (!file) {
                err << "error: cannot open '" << opt.file << "'\n";
                return 2;
            }
            std::stringstream buffer;
            buffer << file.rdbuf();
            std::optional<std::vector<Int>> override_weights;
            if (!opt.weights_csv.empty())
                override_weights = parse_int_list(opt.weights_csv, "--weights");
            Invocation inv{parse_hypergraph(buffer.str(), override_weights)};
            for (const auto& warning : inv.input.warnings)
                err << "warning: " << warning << '\n';

            if (name == "blocker") outcome = cmd_blocker(inv);
            else if (name == "tu-check") outcome = cmd_tu_check(inv);
            else if (name == "is-cover")
                outcome = cmd_is_cover(inv, parse_int_list(opt.cover_csv, "--cover"), opt.k);
            else if (name == "minimal-covers") outcome = cmd_minimal_covers(inv, opt.k);
            else if (name == "decompose")
                outcome = cmd_decompose(inv, parse_int_list(opt.cover_csv, "--cover"), opt.k);
            else if (name == "standard-graded") outcome = cmd_standard_graded(inv, opt.max_k);
            else if (name == "generators") outcome = cmd_generators(inv, opt.max_k);
            else if (name == "symbolic-power") outcome = cmd_symbolic_power(inv, opt.k);
            else if (name == "power") outcome = cmd_power(inv, opt.k);
            else if (name == "ideal-equal") outcome = cmd_ideal_equal(inv, opt.k);
            else if (name == "vertices") outcome = cmd_vertices(inv);
            else if (name == "integrality") outcome = cmd_integrality(inv);
            else if (name == "mengerian") outcome = cmd_mengerian(inv, opt.c_bound);
            else if (name == "hhtz-check") outcome = cmd_hhtz_check(inv, opt.max_k, opt.c_bound);
            else if (name == "verify-theorem")
                outcome = cmd_verify_theorem(inv, opt.w_bound, opt.max_k);
            else if (name == "veronese") outcome = cmd_veronese(inv, opt.max_k, opt.d_max);
            else {
                err << "error: unhandled command '" << name << "'\n";
                return 2;
            }
        }
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const SizeCapError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return 2;
    }

    if (timing) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - started);
        err << "elapsed_ms " << elapsed.count() << '\n';
    }
    if (format == "json") {
        out << outcome.report.dump(2) << '\n';
    } else {
        render_text(outcome.report, "", out);
    }
    return outcome.exit_code;
}

}  // namespace coveralg
