#include "mstable/serialize.hpp"

#include "mstable/error.hpp"

#include <map>
#include <sstream>

namespace mstable::io {

namespace {

// Wraps nlohmann lookups so malformed documents surface as PARSE_ERROR.
template <class F>
auto guarded(const char* what, F&& f) {
    try {
        return f();
    } catch (const Error&) {
        throw;
    } catch (const std::exception& e) {
        fail(ErrorCode::ParseError, std::string(what) + ": " + e.what());
    }
}

Rational rational_from(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    require(j.is_string(), ErrorCode::ParseError, "rational must be a \"p/q\" string");
    return Rational::parse(j.get<std::string>());
}

std::string bool_text(bool b) { return b ? "true" : "false"; }

}  // namespace

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        fail(ErrorCode::ParseError, e.what());
    }
}

json to_json(const DivisorClass& d) {
    json j;
    j["n"] = d.space().n();
    j["m"] = d.space().m();
    j["lambda"] = d.lambda().to_string();
    json b = json::object();
    for (const auto& [s, c] : d.boundary_coeffs()) b[s.to_string()] = c.to_string();
    j["boundary"] = b;
    return j;
}

DivisorClass divisor_from_json(const json& j) {
    return guarded("divisor class", [&] {
        DivisorClass d(Space(j.at("n").get<int>(), j.at("m").get<int>()));
        if (j.contains("lambda")) d.set_lambda(rational_from(j.at("lambda")));
        if (j.contains("boundary"))
            for (const auto& [key, value] : j.at("boundary").items()) d.add_to(MarkSet::parse(key), rational_from(value));
        return d;
    });
}

json to_json(const DualGraph& g) {
    json j;
    j["n"] = g.n();
    json vs = json::array();
    for (const auto& v : g.vertices()) vs.push_back({{"id", v.id}, {"genus", v.genus}, {"marks", v.marks.members()}});
    j["vertices"] = vs;
    json es = json::array();
    for (const auto& e : g.edges()) {
        json edge = json::array({g.vertices()[e.a].id, g.vertices()[e.b].id});
        if (e.multiplicity != 1) edge.push_back(e.multiplicity);
        es.push_back(edge);
    }
    j["edges"] = es;
    if (g.hub()) {
        json br = json::array();
        for (int b : g.hub()->branches) br.push_back(g.vertices()[b].id);
        j["hub"] = {{"branches", br}, {"l", g.hub()->multiplicity()}};
    } else {
        j["hub"] = nullptr;
    }
    return j;
}

DualGraph graph_from_json(const json& j) {
    return guarded("dual graph", [&] {
        int n = j.at("n").get<int>();
        std::vector<DualGraph::Vertex> vs;
        std::map<std::string, int> index;
        for (const auto& v : j.at("vertices")) {
            DualGraph::Vertex vert{v.at("id").get<std::string>(), v.value("genus", 0),
                                   MarkSet::of(v.value("marks", std::vector<int>{}))};
            index.emplace(vert.id, static_cast<int>(vs.size()));
            vs.push_back(vert);
        }
        auto lookup = [&](const json& id) {
            auto it = index.find(id.get<std::string>());
            require(it != index.end(), ErrorCode::ParseError, "unknown vertex id " + id.dump());
            return it->second;
        };
        std::vector<DualGraph::Edge> es;
        if (j.contains("edges"))
            for (const auto& e : j.at("edges")) {
                require(e.is_array() && (e.size() == 2 || e.size() == 3), ErrorCode::ParseError,
                        "edge must be [a, b] or [a, b, multiplicity]");
                es.push_back({lookup(e[0]), lookup(e[1]), e.size() == 3 ? e[2].get<int>() : 1});
            }
        std::optional<DualGraph::Hub> hub;
        if (j.contains("hub") && !j.at("hub").is_null()) {
            DualGraph::Hub h;
            for (const auto& b : j.at("hub").at("branches")) h.branches.push_back(lookup(b));
            if (j.at("hub").contains("l"))
                require(j.at("hub").at("l").get<int>() == h.multiplicity(), ErrorCode::ParseError,
                        "hub l does not match its branch count");
            hub = h;
        }
        return DualGraph(n, vs, es, hub);
    });
}

json to_json(const ReductionTrace& t) {
    json steps = json::array();
    for (const auto& s : t.steps) steps.push_back({{"n_i", s.n_i}, {"m_i", s.m_i}, {"l_i", s.l_i()}});
    return {{"steps", steps},
            {"k", t.k()},
            {"d_lambda", t.d_lambda()},
            {"d_psi", t.d_psi()},
            {"d_delta0", t.d_delta0()},
            {"d_psi_minus_delta0", t.d_psi_minus_delta0()}};
}

ReductionTrace trace_from_json(const json& j) {
    return guarded("trace", [&] {
        ReductionTrace t;
        for (const auto& s : j.at("steps")) {
            ReductionStep step{s.at("n_i").get<int>(), s.at("m_i").get<int>()};
            if (s.contains("l_i"))
                require(s.at("l_i").get<int>() == step.l_i(), ErrorCode::ParseError, "l_i must equal n_i + m_i");
            t.steps.push_back(step);
        }
        if (j.contains("k")) require(j.at("k").get<int>() == t.k(), ErrorCode::ParseError, "k must equal #steps");
        return t;
    });
}

json to_json(const Partition& p) {
    json j = json::array();
    for (MarkSet s : p.parts) j.push_back(s.members());
    return j;
}

Partition partition_from_json(int n, const json& j) {
    return guarded("partition", [&] {
        std::vector<MarkSet> parts;
        for (const auto& part : j) parts.push_back(MarkSet::of(part.get<std::vector<int>>()));
        return Partition::make(n, parts);
    });
}

json to_json(const TestCurve& c) {
    json b = json::object();
    for (const auto& [s, d] : c.boundary_degs) b[s.to_string()] = d.to_string();
    return {{"n", c.space.n()}, {"m", c.space.m()}, {"name", c.name}, {"lambda", c.lambda_deg.to_string()}, {"boundary", b}};
}

TestCurve test_curve_from_json(const json& j) {
    return guarded("test curve", [&] {
        TestCurve c{Space(j.at("n").get<int>(), j.at("m").get<int>()), j.value("name", std::string{}),
                    rational_from(j.at("lambda")), {}};
        for (const auto& [key, value] : j.at("boundary").items()) {
            MarkSet s = MarkSet::parse(key);
            require(s.size() >= 2 && s.subset_of(MarkSet::full(c.space.n())), ErrorCode::ParseError,
                    "boundary key {" + key + "} out of range");
            Rational d = rational_from(value);
            if (!d.is_zero()) c.boundary_degs[s] = d;
        }
        return c;
    });
}

namespace {

json model_json(const Model& m) {
    static const char* kinds[] = {"MBar", "MStable", "MStableNormalized", "SmallContraction"};
    return {{"kind", kinds[static_cast<int>(m.kind)]}, {"n", m.n}, {"m", m.m}, {"name", m.to_string()},
            {"short", m.short_name()}};
}

Model model_from(const json& j) {
    static const std::map<std::string, Model::Kind> kinds = {{"MBar", Model::Kind::MBar},
                                                             {"MStable", Model::Kind::MStable},
                                                             {"MStableNormalized", Model::Kind::MStableNormalized},
                                                             {"SmallContraction", Model::Kind::SmallContraction}};
    auto it = kinds.find(j.at("kind").get<std::string>());
    require(it != kinds.end(), ErrorCode::ParseError, "unknown model kind");
    return Model{it->second, j.at("n").get<int>(), j.at("m").get<int>()};
}

}  // namespace

json to_json(const Chamber& c) {
    auto alpha_hi = c.alpha_upper();
    return {{"s_lo", c.lower.to_string()},
            {"s_lo_closed", c.lower_closed},
            {"s_hi", c.upper ? json(c.upper->to_string()) : json("inf")},
            {"s_hi_closed", c.upper_closed},
            {"alpha_lo", c.alpha_lower().to_string()},
            {"alpha_hi", alpha_hi ? json(alpha_hi->to_string()) : json("inf")},
            {"interval", c.interval_string()},
            {"alpha_interval", c.alpha_interval_string()},
            {"model", model_json(c.model)}};
}

Chamber chamber_from_json(const json& j) {
    return guarded("chamber", [&] {
        Chamber c;
        c.lower = rational_from(j.at("s_lo"));
        c.lower_closed = j.at("s_lo_closed").get<bool>();
        if (j.at("s_hi") != "inf") c.upper = rational_from(j.at("s_hi"));
        c.upper_closed = j.at("s_hi_closed").get<bool>();
        c.model = model_from(j.at("model"));
        return c;
    });
}

std::string chambers_csv(const std::vector<Chamber>& table) {
    std::ostringstream out;
    out << "s_lo,s_lo_closed,s_hi,s_hi_closed,alpha_lo,alpha_hi,model\n";
    for (const auto& c : table) {
        auto ahi = c.alpha_upper();
        out << c.lower.to_string() << ',' << bool_text(c.lower_closed) << ',' << (c.upper ? c.upper->to_string() : "inf")
            << ',' << bool_text(c.upper_closed) << ',' << c.alpha_lower().to_string() << ','
            << (ahi ? ahi->to_string() : "inf") << ',' << c.model.short_name() << '\n';
    }
    return out.str();
}

json to_json(const DiscrepancyReport& r) {
    json entries = json::array();
    for (const auto& e : r.by_cardinality)
        entries.push_back({{"cardinality", e.cardinality}, {"coefficient", e.coefficient.to_string()}});
    return {{"n", r.n},
            {"m", r.m},
            {"s", r.s.to_string()},
            {"by_cardinality", entries},
            {"min_coefficient", r.min_coefficient.to_string()},
            {"section_rings_equal", r.section_rings_equal}};
}

json to_json(const CanonicalDiscrepancy& c) {
    return {{"discrepancy", to_json(c.discrepancy)},
            {"dimension", c.dimension},
            {"regular", c.regular},
            {"point_image", c.point_image},
            {"min_discrepancy", c.min_discrepancy ? json(c.min_discrepancy->to_string()) : json(nullptr)},
            {"verdict", std::string(verdict_name(c.verdict))}};
}

json to_json(const PositivityReport& r) {
    json ev = json::array();
    for (const auto& e : r.evaluations) ev.push_back({{"curve", e.curve}, {"degree", e.degree.to_string()}});
    return {{"divisor", to_json(r.divisor)},
            {"min_degree", r.min_degree.to_string()},
            {"verdict", verdict_name(r.verdict)},
            {"witness", r.witness.empty() ? json(nullptr) : json(r.witness)},
            {"note", r.note},
            {"evaluations", ev}};
}

}  // namespace mstable::io
