// hyperforge: command-line front end. Every command prints JSON (or a plain
// table with --table). Exit codes: 0 success, 1 contract violation, 2 usage.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hyperforge/number_theory.hpp"
#include "hyperforge/logic/sentences.hpp"
#include "structures.hpp"

using namespace hyperforge;
using io::Json;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

struct RunConfig {
    std::uint64_t field_bound = 64;
    int enumeration_order = 4;
    int k = 10;
    int oracle_bound = 2;
    std::uint64_t budget = step_budget_from_env();
    std::string output;
    bool table = false;
};

struct Outcome {
    Json body;
    int code = kOk;
};

// --- table rendering -------------------------------------------------------

std::string cell(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_array() && !v.empty() && v.front().is_number()) {
        std::string s = "{";
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + v[i].dump();
        return s + "}";
    }
    return v.dump();
}

void render_sums(std::ostream& out, const Json& h) {
    const auto& add = h.at("hyperadd");
    const auto n = add.size();
    out << "+ ";
    for (std::size_t b = 0; b < n; ++b) out << '\t' << b;
    out << '\n';
    for (std::size_t a = 0; a < n; ++a) {
        out << a;
        for (std::size_t b = 0; b < n; ++b) out << '\t' << cell(add[a][b]);
        out << '\n';
    }
}

void render(std::ostream& out, const Json& j, const std::string& indent = "") {
    for (auto it = j.begin(); it != j.end(); ++it) {
        const Json& v = it.value();
        if (it.key() == "hyperfield" || (it.key() == "hyperadd" && j.contains("mul"))) {
            out << indent << it.key() << ":\n";
            render_sums(out, it.key() == "hyperfield" ? v : j);
        } else if (it.key() == "mul" || it.key() == "neg") {
            continue;
        } else if (v.is_object()) {
            out << indent << it.key() << ":\n";
            render(out, v, indent + "  ");
        } else if (v.is_array() && !v.empty() && v.front().is_object()) {
            out << indent << it.key() << ":\n";
            for (const auto& e : v) {
                std::string line;
                for (auto f = e.begin(); f != e.end(); ++f) line += (line.empty() ? "" : "  ") + f.key() + "=" + cell(f.value());
                out << indent << "  " << line << '\n';
            }
        } else {
            out << indent << it.key() << ": " << cell(v) << '\n';
        }
    }
}

// --- commands --------------------------------------------------------------

Outcome hyperfield_with_axioms(const FiniteHyperfield& h) {
    const auto report = verify_axioms(h);
    Json body = {{"label", h.label()}, {"hyperfield", io::to_json(h)}, {"axioms", io::to_json(report)}, {"is_cc", is_cc(h)}};
    return {body, report.all_pass() ? kOk : kViolation};
}

Outcome cmd_quotient(const RunConfig& cfg, std::uint64_t q, std::uint64_t g) {
    const auto field = make_finite_field(q, std::max<std::uint64_t>(cfg.field_bound, q));
    if (g == 0 || (q - 1) % g != 0) throw PreconditionError(std::to_string(g) + " does not divide " + std::to_string(q - 1));
    return hyperfield_with_axioms(krasner_quotient(field, g));
}

Outcome cmd_sweep(const RunConfig& cfg) {
    int structures = 0, cases = 0, agree = 0, lhs_true = 0;
    Json failures = Json::array(), mismatches = Json::array();
    for (auto q : prime_powers_up_to(cfg.field_bound)) {
        const auto field = make_finite_field(q, cfg.field_bound);
        for (auto d : divisors(q - 1)) {
            ++structures;
            const auto report = verify_axioms(krasner_quotient(field, d));
            if (!report.all_pass()) failures.push_back({{"q", q}, {"subgroup_order", d}, {"axioms", io::to_json(report)}});
            if (d == 1) continue;
            const auto r = cc_subfield_equivalence(field, d);
            ++cases;
            if (r.quotient_is_cc) ++lhs_true;
            if (r.quotient_is_cc == r.closed_under_add) {
                ++agree;
            } else {
                mismatches.push_back({{"q", q}, {"subgroup_order", d}, {"is_cc", r.quotient_is_cc}, {"closed", r.closed_under_add}});
            }
        }
    }
    Json body = {{"bound", cfg.field_bound},
                 {"structures", structures},
                 {"axiom_failures", failures},
                 {"cc_subfield", {{"cases", cases}, {"cc", lhs_true}, {"agree", agree}, {"mismatches", mismatches}}}};
    return {body, failures.empty() && mismatches.empty() ? kOk : kViolation};
}

ProjectiveGeometry geometry_input(const RunConfig& cfg, std::uint64_t q, int n, const std::string& structure, const std::string& file) {
    if (!file.empty()) return io::geometry_from_json(cli::read_json_file(file));
    if (!structure.empty()) return geometry_of(cli::load_hyperfield(structure, cfg.field_bound));
    if (q == 0 || n == 0) throw PreconditionError("give --q and --n, --structure or --geometry");
    return geometry_of(extension_quotient(q, n, std::max<std::uint64_t>(cfg.field_bound, ipow(q, static_cast<unsigned>(n)))));
}

Outcome cmd_geometry(const ProjectiveGeometry& g) {
    const auto report = check_incidence_axioms(g);
    Json body = io::to_json(g);
    body["source"] = g.source;
    body["dimension"] = dimension(g);
    body["incidence"] = io::to_json(report);
    return {body, report.ok() ? kOk : kViolation};
}

Outcome cmd_desargues(const ProjectiveGeometry& g) {
    return {{{"source", g.source}, {"points", g.points}, {"dimension", dimension(g)}, {"desarguesian", is_desarguesian(g)}}, kOk};
}

Outcome cmd_iso(const RunConfig& cfg, const std::string& left, const std::string& right) {
    const auto a = cli::load_hyperfield(left, cfg.field_bound), b = cli::load_hyperfield(right, cfg.field_bound);
    const auto map = are_isomorphic(a, b);
    return {{{"left", a.label()}, {"right", b.label()}, {"isomorphic", map.has_value()}, {"map", map ? Json(*map) : Json(nullptr)}}, kOk};
}

Outcome cmd_is_krasner(const RunConfig& cfg, const std::string& structure, std::uint64_t q_max) {
    const auto h = cli::load_hyperfield(structure, cfg.field_bound);
    const auto w = is_krasner_within(h, q_max);
    Json body = {{"structure", h.label()}, {"q_max", q_max}, {"krasner", w.has_value()}};
    body["witness"] = w ? Json({{"q", w->q}, {"subgroup_order", w->subgroup_order}}) : Json(nullptr);
    return {body, kOk};
}

Outcome cmd_enumerate(int order) {
    const auto all = enumerate_hyperfields(order);
    Json list = Json::array();
    for (const auto& h : all) list.push_back({{"label", h.label()}, {"is_cc", is_cc(h)}, {"hyperfield", io::to_json(h)}});
    return {{{"order", order}, {"count", all.size()}, {"hyperfields", list}}, kOk};
}

Outcome cmd_witness(const RunConfig& cfg, const std::string& case_name, const std::string& elements) {
    const auto tag = CaseTag::parse(case_name);
    WitnessFamily fam;
    if (elements.empty()) {
        if (cfg.k < 1) throw PreconditionError("k must be positive");
        fam = build_witness_family(tag, static_cast<std::size_t>(cfg.k));
    } else {
        std::vector<RingElement> xs;
        for (const auto& e : cli::split(elements, ',')) xs.push_back(parse_element(tag, e));
        fam = make_family(tag, std::move(xs));
    }
    if (cfg.oracle_bound < 1) throw PreconditionError("the oracle bound must be positive");
    const auto cert = independence_certificate(fam);
    const auto relation = brute_force_relation(fam, cfg.oracle_bound, cfg.budget);
    // A certified family admits no relation at any bound.
    const bool consistent = !(cert.independent && relation.has_value());
    return {io::certificate_json(fam, cert, cfg.oracle_bound, relation), consistent ? kOk : kViolation};
}

Outcome cmd_eval(const RunConfig& cfg, const std::string& structure, const std::string& formula) {
    const auto s = cli::load_structure(structure, cfg.field_bound);
    const auto phi = logic::parse(formula);
    return {{{"structure", s.view.label}, {"formula", logic::to_string(phi)}, {"value", logic::evaluate(s.view, phi)}}, kOk};
}

Outcome cmd_ef(const RunConfig& cfg, const std::string& left, const std::string& right, int depth) {
    const auto a = cli::load_structure(left, cfg.field_bound), b = cli::load_structure(right, cfg.field_bound);
    return {{{"left", a.view.label}, {"right", b.view.label}, {"depth", depth}, {"equivalent", logic::ef_equivalent(a.view, b.view, depth)}}, kOk};
}

Outcome cmd_distinguish(const RunConfig& cfg, const std::string& left, const std::string& right, int depth) {
    const auto a = cli::load_structure(left, cfg.field_bound), b = cli::load_structure(right, cfg.field_bound);
    const auto phi = logic::distinguishing_sentence(a.view, b.view, depth);
    Json body = {{"left", a.view.label}, {"right", b.view.label}, {"depth", depth}, {"sentence", nullptr}};
    int code = kOk;
    if (phi) {
        const bool l = logic::evaluate(a.view, *phi), r = logic::evaluate(b.view, *phi);
        body["sentence"] = logic::to_string(*phi);
        body["quantifier_depth"] = logic::quantifier_depth(*phi);
        body["holds_left"] = l;
        body["holds_right"] = r;
        if (!l || r) code = kViolation;
    }
    return {body, code};
}

Outcome cmd_transfer(const std::string& g, const std::string& h, int depth) {
    const auto gg = cli::parse_group(g), hh = cli::parse_group(h);
    const auto r = logic::group_to_hyperfield_transfer_check(gg, hh, depth);
    Json body = io::to_json(r);
    body["g"] = gg.name();
    body["h"] = hh.name();
    return {body, r.implication_holds() ? kOk : kViolation};
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite hyperfield workbench"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand
    RunConfig cfg;
    app.add_flag("--table", cfg.table, "Human-readable output instead of JSON");
    app.add_option("-o,--output", cfg.output, "Write output to a file");
    app.add_option("--field-bound", cfg.field_bound, "Largest field order")->check(CLI::PositiveNumber);

    std::uint64_t q = 0, g = 0, q_max = 0;
    int n = 0, depth = 2;
    std::string structure, left, right, formula, group_a, group_b, case_name = "gauss", elements, geometry_file;

    auto* quotient = app.add_subcommand("quotient", "Quotient of F_q by its subgroup of order g");
    quotient->add_option("--q", q, "Field order")->required();
    quotient->add_option("--g", g, "Subgroup order")->required();

    auto* sweep = app.add_subcommand("sweep", "All quotients up to --bound: axioms and the CC/subfield tally");
    sweep->add_option("--bound", cfg.field_bound, "Largest field order")->check(CLI::PositiveNumber);

    auto* geometry = app.add_subcommand("geometry", "Projective geometry of a CC hyperfield");
    auto* desargues = app.add_subcommand("desargues", "Exhaustive Desargues check");
    for (auto* sub : {geometry, desargues}) {
        sub->add_option("--q", q, "Base field order");
        sub->add_option("--n", n, "Extension degree");
        sub->add_option("--structure", structure, "Hyperfield file or descriptor");
        sub->add_option("--geometry", geometry_file, "Geometry JSON {points, lines}");
    }

    auto* from_group_cmd = app.add_subcommand("from-group", "H_G for an abelian group such as 2x2 or C6");
    from_group_cmd->add_option("--group", group_a, "Group")->required();

    auto* iso = app.add_subcommand("iso", "Hyperfield isomorphism");
    auto* ef = app.add_subcommand("ef", "Ehrenfeucht-Fraisse equivalence at bounded depth");
    auto* distinguish = app.add_subcommand("distinguish", "Sentence separating two structures");
    for (auto* sub : {iso, ef, distinguish}) {
        sub->add_option("--left", left, "Structure file or descriptor")->required();
        sub->add_option("--right", right, "Structure file or descriptor")->required();
    }
    for (auto* sub : {ef, distinguish}) sub->add_option("--depth", depth, "Game depth (at most 4)");

    auto* is_krasner = app.add_subcommand("is-krasner", "Search for F_q/G isomorphic to a hyperfield");
    is_krasner->add_option("--structure", structure, "Hyperfield file or descriptor")->required();
    is_krasner->add_option("--q-max", q_max, "Largest field order tried (default: field bound)");

    auto* enumerate = app.add_subcommand("enumerate", "All hyperfields of a given order up to isomorphism");
    enumerate->add_option("--order", cfg.enumeration_order, "Carrier size (at most 5)");

    auto* witness = app.add_subcommand("witness", "Independence certificate and brute-force relation search");
    witness->add_option("--case", case_name, "gauss, fp_square(p) or f2_artin_schreier");
    witness->add_option("--k", cfg.k, "Family size");
    witness->add_option("--oracle-bound", cfg.oracle_bound, "Exponent bound N");
    witness->add_option("--budget", cfg.budget, "Step budget (default HYPERFORGE_BUDGET or 10^7)");
    witness->add_option("--elements", elements, "Explicit family, comma separated");

    auto* torsion = app.add_subcommand("torsion-report", "Orders in F_{q^2}^x / F_q^x");
    torsion->add_option("--q", q, "Field order")->required();

    auto* eval = app.add_subcommand("eval", "Evaluate a sentence on a finite structure");
    eval->add_option("--structure", structure, "Structure file or descriptor")->required();
    eval->add_option("--formula", formula, "Sentence")->required();

    auto* transfer = app.add_subcommand("transfer-check", "Group-level versus H_G-level game verdicts");
    transfer->set_help_flag("--help", "Print this help message and exit"); // frees -h for --h
    transfer->add_option("--g", group_a, "First group")->required();
    transfer->add_option("--h", group_b, "Second group")->required();
    transfer->add_option("--depth", depth, "Game depth (at most 4)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    Outcome out;
    try {
        if (*quotient) out = cmd_quotient(cfg, q, g);
        else if (*sweep) out = cmd_sweep(cfg);
        else if (*geometry) out = cmd_geometry(geometry_input(cfg, q, n, structure, geometry_file));
        else if (*desargues) out = cmd_desargues(geometry_input(cfg, q, n, structure, geometry_file));
        else if (*from_group_cmd) out = hyperfield_with_axioms(from_group(cli::parse_group(group_a)));
        else if (*iso) out = cmd_iso(cfg, left, right);
        else if (*is_krasner) out = cmd_is_krasner(cfg, structure, q_max ? q_max : cfg.field_bound);
        else if (*enumerate) out = cmd_enumerate(cfg.enumeration_order);
        else if (*witness) out = cmd_witness(cfg, case_name, elements);
        else if (*torsion) out = {io::to_json(torsion_rank_report(q)), kOk};
        else if (*eval) out = cmd_eval(cfg, structure, formula);
        else if (*ef) out = cmd_ef(cfg, left, right, depth);
        else if (*distinguish) out = cmd_distinguish(cfg, left, right, depth);
        else if (*transfer) out = cmd_transfer(group_a, group_b, depth);
    } catch (const Error& e) {
        std::cerr << Json({{"error", e.what()}}).dump() << '\n';
        return kUsage;
    }

    std::ofstream file;
    if (!cfg.output.empty()) {
        file.open(cfg.output);
        if (!file) {
            std::cerr << Json({{"error", "cannot write " + cfg.output}}).dump() << '\n';
            return kUsage;
        }
    }
    std::ostream& sink = cfg.output.empty() ? std::cout : file;
    if (cfg.table) {
        render(sink, out.body);
    } else {
        sink << out.body.dump(2) << '\n';
    }
    return out.code;
}
