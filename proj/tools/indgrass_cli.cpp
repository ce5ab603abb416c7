#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "indgrass/errors.hpp"
#include "indgrass/extension_ledger.hpp"
#include "indgrass/p1bundles.hpp"
#include "indgrass/quadric.hpp"
#include "indgrass/ratlinalg.hpp"
#include "indgrass/segre_curves.hpp"
#include "indgrass/twist_bound.hpp"

using ordered_json = nlohmann::ordered_json;
using indgrass::input_error;
using indgrass::invariant_error;
using indgrass::ratlinalg::Rational;

namespace {

std::vector<std::string> split_csv(const std::string& text) {
    if (text.empty()) throw input_error("empty list");
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = text.find(',', start);
        out.push_back(text.substr(start, comma - start));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

std::vector<long long> parse_ll_list(const std::string& text) {
    std::vector<long long> out;
    for (const std::string& piece : split_csv(text)) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(piece, &used);
        } catch (const std::exception&) {
            throw input_error("not an integer: '" + piece + "'");
        }
        if (used != piece.size()) throw input_error("not an integer: '" + piece + "'");
        out.push_back(value);
    }
    return out;
}

std::vector<Rational> parse_rat_list(const std::string& text) {
    std::vector<Rational> out;
    for (const std::string& piece : split_csv(text))
        out.push_back(indgrass::ratlinalg::parse_rational(piece));
    return out;
}

ordered_json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot read file: " + path);
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw input_error("bad JSON in " + path + ": " + e.what());
    }
}

Rational json_rational(const ordered_json& v) {
    if (v.is_string()) return indgrass::ratlinalg::parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long long>());
    throw input_error("expected a rational as a string or integer");
}

indgrass::quadric::FiberPointSet points_from_json(const ordered_json& j) {
    if (!j.is_object() || !j.contains("groups") || !j["groups"].is_array())
        throw input_error("point set JSON needs a \"groups\" array");
    std::vector<std::vector<Rational>> groups;
    for (const auto& group : j["groups"]) {
        if (!group.is_array()) throw input_error("each group must be an array");
        std::vector<Rational> points;
        for (const auto& v : group) points.push_back(json_rational(v));
        groups.push_back(std::move(points));
    }
    return indgrass::quadric::FiberPointSet(std::move(groups));
}

indgrass::twist_bound::SequenceSpec sequence_from_json(const ordered_json& j,
                                                       const std::string& what) {
    using indgrass::twist_bound::SequenceSpec;
    using Int = indgrass::ratlinalg::Int;
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string())
        throw input_error(what + " sequence needs a \"kind\" string");
    const std::string kind = j["kind"].get<std::string>();
    auto want = [&](const char* field) -> long long {
        if (!j.contains(field) || !j[field].is_number_integer())
            throw input_error(what + " sequence of kind " + kind + " needs integer \"" +
                              field + "\"");
        return j[field].get<long long>();
    };
    auto want_list = [&](const char* field) -> std::vector<Int> {
        if (!j.contains(field) || !j[field].is_array())
            throw input_error(what + " sequence of kind " + kind + " needs array \"" + field +
                              "\"");
        std::vector<Int> out;
        for (const auto& v : j[field]) {
            if (!v.is_number_integer()) throw input_error(what + ": list entries must be integers");
            out.emplace_back(v.get<long long>());
        }
        return out;
    };
    if (kind == "const") return SequenceSpec::constant(Int(want("value")));
    if (kind == "geometric") return SequenceSpec::geometric(Int(want("base")), Int(want("ratio")));
    if (kind == "poly") return SequenceSpec::polynomial(want_list("coeffs"));
    if (kind == "list") return SequenceSpec::list(want_list("values"));
    throw input_error(what + ": unknown sequence kind '" + kind + "'");
}

indgrass::twist_bound::IndGrassSpec spec_from_json(const ordered_json& j) {
    for (const char* field : {"r", "deg", "rank", "D1"})
        if (!j.contains(field))
            throw input_error(std::string("spec JSON needs field \"") + field + "\"");
    if (!j["rank"].is_number_integer() || !j["D1"].is_number_integer())
        throw input_error("spec fields \"rank\" and \"D1\" must be integers");
    return indgrass::twist_bound::IndGrassSpec{sequence_from_json(j["r"], "rank"),
                                               sequence_from_json(j["deg"], "degree"),
                                               j["rank"].get<long long>(),
                                               j["D1"].get<long long>()};
}

std::string join_ll(const std::vector<long long>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

std::string twist_str(indgrass::quadric::BiDegree bd) {
    return "(" + std::to_string(bd.a) + "," + std::to_string(bd.b) + ")";
}

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

ordered_json triple_json(long long a, long long b,
                         const indgrass::quadric::CohomologyTriple& t) {
    return ordered_json{{"a", a},       {"b", b},       {"h0", t.h0()},
                        {"h1", t.h1()}, {"h2", t.h2()}, {"chi", t.chi()}};
}

void print_triple_tsv(const indgrass::quadric::CohomologyTriple& t) {
    std::cout << "h0\th1\th2\tchi\n"
              << t.h0() << "\t" << t.h1() << "\t" << t.h2() << "\t" << t.chi() << "\n";
}

ordered_json ledger_json(const std::vector<indgrass::extension_ledger::LedgerEntry>& ledger) {
    using indgrass::p1bundles::format_splitting_type;
    ordered_json rows = ordered_json::array();
    for (const auto& entry : ledger) {
        ordered_json values = ordered_json::array();
        for (const auto& [bd, triple] : entry.values) {
            ordered_json row{{"twist", {bd.a, bd.b}},
                             {"h0", triple.h0()},
                             {"h1", triple.h1()},
                             {"h2", triple.h2()},
                             {"chi", triple.chi()}};
            auto it = entry.formula_ids.find(bd);
            if (it != entry.formula_ids.end()) row["formula"] = it->second;
            values.push_back(std::move(row));
        }
        ordered_json e{{"level", entry.level},
                       {"values", std::move(values)},
                       {"restriction_generic_fiber",
                        format_splitting_type(entry.restriction_generic_fiber)},
                       {"restriction_P", format_splitting_type(entry.restriction_P)},
                       {"restriction_Pprime", format_splitting_type(entry.restriction_Pprime)}};
        if (entry.restriction_jumping_fiber)
            e["restriction_jumping_fiber"] =
                format_splitting_type(*entry.restriction_jumping_fiber);
        rows.push_back(std::move(e));
    }
    return rows;
}

int cmd_cohomology_line(long long a, long long b, bool json) {
    auto triple = indgrass::quadric::h_line({a, b});
    if (json)
        emit(triple_json(a, b, triple));
    else
        print_triple_tsv(triple);
    return 0;
}

int cmd_cohomology_ideal(const std::string& points_path, long long a, long long b, bool json) {
    auto z = points_from_json(load_json_file(points_path));
    auto triple = indgrass::quadric::h_ideal(z, {a, b});
    if (json) {
        ordered_json j = triple_json(a, b, triple);
        j["points"] = z.total_points();
        emit(j);
    } else {
        print_triple_tsv(triple);
    }
    return 0;
}

int cmd_ledger(const std::string& partition_str, std::uint64_t seed, bool json) {
    using namespace indgrass::extension_ledger;
    using indgrass::p1bundles::format_splitting_type;

    Partition p = parse_partition(partition_str);
    FiberPointSet z = random_fiber_points(p, seed);
    TheoremFRecord record = theorem_F_invariants(p, z);

    if (json) {
        ordered_json points = ordered_json::array();
        for (const auto& group : z.groups()) {
            ordered_json g = ordered_json::array();
            for (const auto& pt : group) g.push_back(indgrass::ratlinalg::to_string(pt));
            points.push_back(std::move(g));
        }
        ordered_json h1v = ordered_json::array();
        for (auto bd : record.h1_vanishing) h1v.push_back({bd.a, bd.b});
        ordered_json j{{"partition", p.parts()},
                       {"seed", seed},
                       {"points", {{"groups", std::move(points)}}},
                       {"ledger", ledger_json(record.ledger)},
                       {"F",
                        {{"h0_F(-1,-1)", record.h0_F_m1m1},
                         {"h0_F(-1,0)", record.h0_F_m10},
                         {"h0_F", record.h0_F},
                         {"h1_vanishing", std::move(h1v)},
                         {"h2_F(-2,-1)_zero", record.h2_m2m1_zero},
                         {"fiber_off_Z", format_splitting_type(record.fiber_off_Z)},
                         {"fiber_on_Z", format_splitting_type(record.fiber_on_Z)},
                         {"restriction_P", format_splitting_type(record.restriction_P)},
                         {"restriction_Pprime",
                          format_splitting_type(record.restriction_Pprime)}}}};
        emit(j);
        return 0;
    }

    std::cout << "k\ttwist\th0\th1\th2\tformula\n";
    for (const auto& entry : record.ledger)
        for (const auto& [bd, triple] : entry.values) {
            auto it = entry.formula_ids.find(bd);
            std::cout << entry.level << "\t" << twist_str(bd) << "\t" << triple.h0() << "\t"
                      << triple.h1() << "\t" << triple.h2() << "\t"
                      << (it != entry.formula_ids.end() ? it->second : "-") << "\n";
        }
    std::cout << "h0_F(-1,-1)\t" << record.h0_F_m1m1 << "\n"
              << "h0_F(-1,0)\t" << record.h0_F_m10 << "\n"
              << "h0_F\t" << record.h0_F << "\n"
              << "h2_F(-2,-1)\t" << (record.h2_m2m1_zero ? 0 : 1) << "\n"
              << "fiber_off_Z\t" << format_splitting_type(record.fiber_off_Z) << "\n"
              << "fiber_on_Z\t" << format_splitting_type(record.fiber_on_Z) << "\n"
              << "restriction_P\t" << format_splitting_type(record.restriction_P) << "\n"
              << "restriction_Pprime\t" << format_splitting_type(record.restriction_Pprime)
              << "\n";
    return 0;
}

std::vector<Rational> random_t_values(std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::vector<Rational> out;
    while (out.size() < count) {
        long long num = static_cast<long long>(rng() % 61) - 30;
        long long den = static_cast<long long>(rng() % 8) + 1;
        if (num == 0) num = 1;
        out.emplace_back(Rational(num) / den);
    }
    return out;
}

int cmd_segre(std::size_t r, const std::string& t_str, std::uint64_t seed, bool json) {
    using namespace indgrass::segre_curves;
    SubspaceConfig cfg = standard_config(r);
    std::vector<Rational> t =
        t_str.empty() ? random_t_values(r - 1, seed) : parse_rat_list(t_str);

    PluckerCurve pc = plucker_curve(cfg, t);
    ChainOfLines chain = chain_of_lines(cfg);
    bool base_on_curve = indgrass::ratlinalg::proportional(evaluate(pc, Rational(0)),
                                                           plucker_point(cfg.plane_zero));
    bool target_on_curve = indgrass::ratlinalg::proportional(evaluate_at_infinity(pc),
                                                             plucker_point(cfg.plane_infty));

    std::string t_joined;
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i) t_joined += ',';
        t_joined += indgrass::ratlinalg::to_string(t[i]);
    }

    if (json) {
        ordered_json plucker = ordered_json::object();
        for (const auto& [subset, poly] : pc.entries) {
            std::vector<long long> one_based;
            for (std::size_t c : subset) one_based.push_back(static_cast<long long>(c) + 1);
            ordered_json coeffs = ordered_json::array();
            for (const auto& c : poly.coeffs())
                coeffs.push_back(indgrass::ratlinalg::to_string(c));
            plucker[join_ll(one_based)] = std::move(coeffs);
        }
        ordered_json incidence = ordered_json::array();
        for (const auto& row : chain.incidence) incidence.push_back(row);
        emit(ordered_json{{"r", r},
                          {"t_values", t_joined},
                          {"degree", curve_degree(pc)},
                          {"base_point_on_curve", base_on_curve},
                          {"target_point_on_curve", target_on_curve},
                          {"chain_incidence", std::move(incidence)},
                          {"plucker", std::move(plucker)}});
        return 0;
    }

    std::cout << "degree\t" << curve_degree(pc) << "\n"
              << "t_values\t" << t_joined << "\n"
              << "chain_incidence\tpath\n"
              << "base_point_on_curve\t" << (base_on_curve ? "yes" : "no") << "\n"
              << "target_point_on_curve\t" << (target_on_curve ? "yes" : "no") << "\n";
    return 0;
}

int cmd_chain_embed(const std::string& degrees_str, bool json) {
    auto report = indgrass::segre_curves::embed_chain(parse_ll_list(degrees_str));
    bool ok = report.consecutive_meet_once && report.nonconsecutive_disjoint;
    if (json) {
        emit(ordered_json{{"degrees", report.degrees},
                          {"total_degree", report.total_degree},
                          {"span", report.span_dim},
                          {"block_offsets", report.block_offsets},
                          {"consecutive_meet_once", report.consecutive_meet_once},
                          {"nonconsecutive_disjoint", report.nonconsecutive_disjoint}});
        return 0;
    }
    std::cout << "total_degree\t" << report.total_degree << "\n"
              << "span\t" << report.span_dim << "\n"
              << "incidences\t" << (ok ? "ok" : "bad") << "\n";
    return 0;
}

int cmd_two_chain(std::size_t r, bool json) {
    auto report = indgrass::segre_curves::two_chain_check(r);
    std::vector<long long> certificate;
    for (std::size_t c : report.certificate_subset)
        certificate.push_back(static_cast<long long>(c) + 1);
    if (json) {
        emit(ordered_json{{"r", r},
                          {"ambient_dim", report.cfg.ambient_dim},
                          {"shared_point", report.share_target_point},
                          {"certificate_subset", certificate},
                          {"sampled_pairs_distinct", report.sampled_pairs_distinct}});
        return 0;
    }
    std::cout << "shared_point\t" << (report.share_target_point ? "ok" : "bad") << "\n"
              << "certificate_subset\t" << join_ll(certificate) << "\n"
              << "sampled_pairs_distinct\t" << report.sampled_pairs_distinct << "\n";
    return 0;
}

int cmd_bound(const std::string& spec_path, std::size_t max_m, bool json) {
    auto spec = spec_from_json(load_json_file(spec_path));
    auto report = indgrass::twist_bound::triviality_threshold(spec, max_m);
    if (json) {
        ordered_json rows = ordered_json::array();
        for (const auto& row : report.rows)
            rows.push_back(ordered_json{{"m", row.m},
                                        {"degPhi", row.deg_phi.str()},
                                        {"r_m", row.r_m.str()},
                                        {"lhs1", row.lhs1.str()},
                                        {"rhs1", row.rhs1.str()},
                                        {"fails_all", row.fails_all}});
        ordered_json j{{"rows", std::move(rows)}};
        if (report.threshold_m)
            j["threshold"] = *report.threshold_m;
        else
            j["threshold"] = nullptr;
        emit(j);
        return 0;
    }
    std::cout << "m\tdegPhi\tr_m\tlhs1\trhs1\tfails_all\n";
    for (const auto& row : report.rows)
        std::cout << row.m << "\t" << row.deg_phi.str() << "\t" << row.r_m.str() << "\t"
                  << row.lhs1.str() << "\t" << row.rhs1.str() << "\t" << (row.fails_all ? 1 : 0)
                  << "\n";
    if (report.threshold_m)
        std::cout << "threshold\t" << *report.threshold_m << "\n";
    else
        std::cout << "threshold\tnone\n";
    return 0;
}

int cmd_twisted_check(const std::string& spec_path, const std::string& epsilon_str,
                      std::size_t max_m, bool json) {
    using indgrass::twist_bound::LimitVerdict;
    auto spec = spec_from_json(load_json_file(spec_path));
    Rational epsilon = indgrass::ratlinalg::parse_rational(epsilon_str);
    auto verdict = indgrass::twist_bound::sufficiently_twisted(spec, epsilon, max_m);
    const char* symbolic = verdict.symbolic == LimitVerdict::Zero        ? "zero"
                           : verdict.symbolic == LimitVerdict::Nonzero ? "nonzero"
                                                                         : "undecided";
    if (json) {
        ordered_json ratios = ordered_json::array();
        for (const auto& [m, ratio] : verdict.ratios)
            ratios.push_back(ordered_json{{"m", m},
                                          {"ratio", indgrass::ratlinalg::to_string(ratio)}});
        ordered_json j{{"holds_at_horizon", verdict.holds_at_horizon},
                       {"symbolic", symbolic},
                       {"ratios", std::move(ratios)}};
        if (verdict.m0)
            j["m0"] = *verdict.m0;
        else
            j["m0"] = nullptr;
        emit(j);
        return 0;
    }
    std::cout << "m\tratio\n";
    for (const auto& [m, ratio] : verdict.ratios)
        std::cout << m << "\t" << indgrass::ratlinalg::to_string(ratio) << "\n";
    std::cout << "holds\t" << (verdict.holds_at_horizon ? "yes" : "no") << "\n";
    if (verdict.m0)
        std::cout << "m0\t" << *verdict.m0 << "\n";
    else
        std::cout << "m0\tnone\n";
    std::cout << "symbolic\t" << symbolic << "\n";
    return 0;
}

int cmd_schur(const std::string& lambda_str, long long n, bool have_n,
              const std::string& flag_str, bool json) {
    using indgrass::ratlinalg::Int;
    Int dim(0);
    ordered_json j;
    if (!lambda_str.empty() && flag_str.empty()) {
        if (!have_n) throw input_error("--lambda needs --n");
        std::vector<long long> lambda = parse_ll_list(lambda_str);
        dim = indgrass::twist_bound::schur_dimension(lambda, n);
        j = ordered_json{{"lambda", lambda}, {"n", n}, {"dimension", dim.str()}};
    } else if (lambda_str.empty() && !flag_str.empty()) {
        std::vector<long long> nrk = parse_ll_list(flag_str);
        if (nrk.size() != 3) throw input_error("--flag needs three values n,r,k");
        dim = indgrass::twist_bound::flag_sections_dim(nrk[0], nrk[1], nrk[2]);
        j = ordered_json{{"flag", nrk}, {"dimension", dim.str()}};
    } else {
        throw input_error("give exactly one of --lambda (with --n) or --flag");
    }
    if (json)
        emit(j);
    else
        std::cout << "dimension\t" << dim.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact invariants of twisted bundles on quadrics, Grassmannian curve "
                 "configurations, and growth thresholds"};
    app.require_subcommand(1);

    std::string format = "tsv";
    std::uint64_t seed = 12345;

    auto add_format = [&format](CLI::App* sub) {
        sub->add_option("--format", format, "output format")
            ->check(CLI::IsMember({"tsv", "json"}));
    };

    auto* cohomology = app.add_subcommand("cohomology", "cohomology of line bundles and "
                                                        "twisted point-set ideals on P1 x P1");
    cohomology->require_subcommand(1);
    long long a = 0, b = 0;
    auto* line = cohomology->add_subcommand("line", "line bundle O(a,b)");
    line->add_option("-a", a, "first twist")->required();
    line->add_option("-b", b, "second twist")->required();
    add_format(line);
    std::string points_path;
    auto* ideal = cohomology->add_subcommand("ideal", "ideal sheaf of a fiber point set");
    ideal->add_option("--points", points_path, "point set JSON file")->required();
    ideal->add_option("-a", a, "first twist")->required();
    ideal->add_option("-b", b, "second twist")->required();
    add_format(ideal);

    std::string partition_str;
    auto* ledger = app.add_subcommand("ledger", "full extension ledger and final-bundle record");
    ledger->add_option("--partition", partition_str, "nonincreasing parts a1,a2,...")->required();
    ledger->add_option("--seed", seed, "random seed for fiber points");
    add_format(ledger);

    std::size_t r = 2;
    std::string t_str;
    auto* segre = app.add_subcommand("segre", "degree and incidence of a Segre curve");
    segre->add_option("--r", r, "plane dimension")->required();
    segre->add_option("--t", t_str, "scaling values t2,...,tr (default: random)");
    segre->add_option("--seed", seed, "random seed for scaling values");
    add_format(segre);

    std::string degrees_str;
    auto* chain_embed = app.add_subcommand("chain-embed", "polarized embedding of a chain");
    chain_embed->add_option("--degrees", degrees_str, "component degrees n1,n2,...")->required();
    add_format(chain_embed);

    auto* two_chain = app.add_subcommand("two-chain", "two Segre curves sharing one plane");
    two_chain->add_option("--r", r, "plane dimension")->required();
    add_format(two_chain);

    std::string spec_path;
    std::size_t max_m = 2;
    auto* bound = app.add_subcommand("bound", "per-level gap inequality and threshold");
    bound->add_option("--spec", spec_path, "tower spec JSON file")->required();
    bound->add_option("--max-m", max_m, "horizon")->required();
    add_format(bound);

    std::string epsilon_str;
    auto* twisted = app.add_subcommand("twisted-check", "rank vs cumulative degree growth");
    twisted->add_option("--spec", spec_path, "tower spec JSON file")->required();
    twisted->add_option("--epsilon", epsilon_str, "ratio bound (rational)")->required();
    twisted->add_option("--max-m", max_m, "horizon")->required();
    add_format(twisted);

    std::string lambda_str, flag_str;
    long long schur_n = 0;
    auto* schur = app.add_subcommand("schur", "Schur module / flag polarization dimensions");
    schur->add_option("--lambda", lambda_str, "partition l1,l2,...");
    auto* n_opt = schur->add_option("--n", schur_n, "ambient dimension");
    schur->add_option("--flag", flag_str, "flag parameters n,r,k");
    add_format(schur);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const bool json = format == "json";
    try {
        if (line->parsed()) return cmd_cohomology_line(a, b, json);
        if (ideal->parsed()) return cmd_cohomology_ideal(points_path, a, b, json);
        if (ledger->parsed()) return cmd_ledger(partition_str, seed, json);
        if (segre->parsed()) return cmd_segre(r, t_str, seed, json);
        if (chain_embed->parsed()) return cmd_chain_embed(degrees_str, json);
        if (two_chain->parsed()) return cmd_two_chain(r, json);
        if (bound->parsed()) return cmd_bound(spec_path, max_m, json);
        if (twisted->parsed())
            return cmd_twisted_check(spec_path, epsilon_str, max_m, json);
        if (schur->parsed())
            return cmd_schur(lambda_str, schur_n, n_opt->count() > 0, flag_str, json);
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const invariant_error& e) {
        std::cerr << "invariant breach: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
