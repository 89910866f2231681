#include "hyperforge/json_io.hpp"

#include "hyperforge/errors.hpp"

namespace hyperforge::io {

Json to_json(const FiniteHyperfield& h) {
    const int n = h.size();
    Json mul = Json::array(), neg = Json::array(), add = Json::array();
    for (int a = 0; a < n; ++a) {
        Json mrow = Json::array(), arow = Json::array();
        for (int b = 0; b < n; ++b) {
            mrow.push_back(h.mul(a, b));
            arow.push_back(h.add(a, b).members());
        }
        mul.push_back(std::move(mrow));
        add.push_back(std::move(arow));
        neg.push_back(h.neg(a));
    }
    return {{"n", n}, {"one", h.one()}, {"mul", mul}, {"neg", neg}, {"hyperadd", add}};
}

namespace {

const Json& field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw MalformedError(std::string("missing key '") + key + "'");
    return j.at(key);
}

int element(const Json& v, int n, const char* what) {
    if (!v.is_number_integer()) throw MalformedError(std::string(what) + ": expected an integer");
    const auto x = v.get<long long>();
    if (x < 0 || x >= n) throw MalformedError(std::string(what) + ": element " + std::to_string(x) + " outside the carrier");
    return static_cast<int>(x);
}

const Json& row(const Json& table, int i, int n, const char* what) {
    if (!table.is_array() || static_cast<int>(table.size()) != n) {
        throw MalformedError(std::string(what) + ": expected " + std::to_string(n) + " entries");
    }
    return table.at(static_cast<std::size_t>(i));
}

Json matrix_entry(const BigInt& x) {
    if (x > BigInt(std::numeric_limits<long long>::max()) || x < BigInt(std::numeric_limits<long long>::min())) {
        return x.str();
    }
    return x.convert_to<long long>();
}

Json element_json(const RingElement& x) { return to_string(x); }

} // namespace

FiniteHyperfield hyperfield_from_json(const Json& j, std::string label) {
    const Json& nj = field(j, "n");
    if (!nj.is_number_integer()) throw MalformedError("n: expected an integer");
    const auto n64 = nj.get<long long>();
    if (n64 < 1 || n64 > kMaxCarrier) throw MalformedError("n must be between 1 and " + std::to_string(kMaxCarrier));
    const int n = static_cast<int>(n64);
    const int one = element(field(j, "one"), n, "one");
    std::vector<int> mul, neg;
    std::vector<ElementSet> add;
    for (int a = 0; a < n; ++a) {
        neg.push_back(element(row(field(j, "neg"), a, n, "neg"), n, "neg"));
        const Json& mrow = row(field(j, "mul"), a, n, "mul");
        const Json& arow = row(field(j, "hyperadd"), a, n, "hyperadd");
        for (int b = 0; b < n; ++b) {
            mul.push_back(element(row(mrow, b, n, "mul"), n, "mul"));
            const Json& cell = row(arow, b, n, "hyperadd");
            if (!cell.is_array()) throw MalformedError("hyperadd: each entry must be a list of elements");
            ElementSet s;
            for (const auto& m : cell) s.insert(element(m, n, "hyperadd"));
            add.push_back(s);
        }
    }
    try {
        return FiniteHyperfield(n, one, std::move(mul), std::move(neg), std::move(add), std::move(label));
    } catch (const PreconditionError& e) {
        throw MalformedError(e.what());
    }
}

Json to_json(const AxiomReport& r) {
    Json axioms = Json::array();
    for (const auto& v : r.verdicts) {
        Json c = v.counterexample.empty() ? Json(nullptr) : Json(v.counterexample);
        axioms.push_back({{"name", std::string(axiom_name(v.axiom))}, {"pass", v.pass}, {"counterexample", c}});
    }
    return {{"all_pass", r.all_pass()}, {"axioms", axioms}};
}

Json to_json(const ProjectiveGeometry& g) { return {{"points", g.points}, {"lines", g.lines}}; }

ProjectiveGeometry geometry_from_json(const Json& j) {
    ProjectiveGeometry g;
    const Json& p = field(j, "points");
    if (!p.is_number_integer() || p.get<long long>() < 0 || p.get<long long>() > kMaxCarrier) {
        throw MalformedError("points: expected a count between 0 and " + std::to_string(kMaxCarrier));
    }
    g.points = p.get<int>();
    const Json& lines = field(j, "lines");
    if (!lines.is_array()) throw MalformedError("lines: expected a list");
    for (const auto& l : lines) {
        if (!l.is_array()) throw MalformedError("lines: each line must be a list of points");
        std::vector<int> line;
        for (const auto& x : l) line.push_back(element(x, g.points, "lines"));
        g.lines.push_back(std::move(line));
    }
    g.source = "json";
    return g;
}

Json to_json(const IncidenceReport& r) {
    Json out = {{"pair_uniqueness", verdict_name(r.pair_uniqueness)},
                {"veblen_young", verdict_name(r.veblen_young)},
                {"thickness", verdict_name(r.thickness)},
                {"ok", r.ok()}};
    out["offending_pair"] = r.offending_pair ? Json({r.offending_pair->first, r.offending_pair->second}) : Json(nullptr);
    out["veblen_young_witness"] = r.veblen_young_witness.empty() ? Json(nullptr) : Json(r.veblen_young_witness);
    return out;
}

Json certificate_json(const WitnessFamily& fam, const IndependenceCertificate& c, int oracle_bound,
                      const std::optional<std::vector<int>>& relation) {
    Json elements = Json::array(), columns = Json::array(), matrix = Json::array();
    for (const auto& e : fam.elements) elements.push_back(element_json(e));
    for (const auto& rec : c.columns) {
        columns.push_back({{"base", rec.base_string()}, {"factor", element_json(rec.factor)},
                           {"conjugate", element_json(rec.conjugate_factor)}});
    }
    for (const auto& r : c.matrix) {
        Json jr = Json::array();
        for (const auto& x : r) jr.push_back(matrix_entry(x));
        matrix.push_back(std::move(jr));
    }
    return {{"case", fam.tag.name()},
            {"k", fam.elements.size()},
            {"elements", elements},
            {"columns", columns},
            {"matrix", matrix},
            {"rank", c.rank},
            {"independent", c.independent},
            {"oracle", {{"bound", oracle_bound}, {"relation", relation ? Json(*relation) : Json(nullptr)}}}};
}

Json to_json(const TorsionReport& r) {
    return {{"q", r.q},
            {"quotient_order", r.quotient_order},
            {"class_orders", r.class_orders},
            {"all_torsion", r.all_torsion},
            {"rational_rank", r.rational_rank}};
}

Json to_json(const logic::TransferReport& r) {
    return {{"depth", r.depth},
            {"groups_equivalent", r.groups_equivalent},
            {"hyperfields_equivalent", r.hyperfields_equivalent},
            {"implication_holds", r.implication_holds()}};
}

} // namespace hyperforge::io
