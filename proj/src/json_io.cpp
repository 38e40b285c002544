#include "symmset/json_io.hpp"

#include <algorithm>

namespace symmset {

namespace {

std::vector<std::vector<int>> sorted_classes(const std::vector<int>& class_of) {
    int m = class_of.empty() ? 0 : *std::max_element(class_of.begin(), class_of.end()) + 1;
    std::vector<std::vector<int>> out(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < class_of.size(); ++i)
        out[static_cast<std::size_t>(class_of[i])].push_back(static_cast<int>(i));
    return out;
}

std::vector<int> class_of_from_lists(int size, const ordered_json& lists) {
    require(lists.is_array(), "partition classes must be an array of arrays");
    std::vector<int> labels(static_cast<std::size_t>(size), -1);
    int cls = 0;
    for (const auto& block : lists) {
        require(block.is_array() && !block.empty(), "partition blocks must be non-empty arrays");
        for (const auto& e : block) {
            int v = e.get<int>();
            require(v >= 0 && v < size, "partition element out of range");
            require(labels[static_cast<std::size_t>(v)] < 0, "partition blocks must be disjoint");
            labels[static_cast<std::size_t>(v)] = cls;
        }
        ++cls;
    }
    for (int v : labels)
        require(v >= 0, "partition blocks must cover the carrier");
    return labels;
}

}  // namespace

ordered_json parse_json(const std::string& text) {
    try {
        return ordered_json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad JSON input: ") + e.what());
    }
}

ordered_json finset_to_json(const FinSet& A) {
    ordered_json j;
    j["size"] = A.size;
    if (!A.labels.empty()) j["labels"] = A.labels;
    return j;
}

FinSet finset_from_json(const ordered_json& j) {
    try {
        if (j.is_number_integer()) return FinSet(j.get<int>());
        FinSet out(j.at("size").get<int>());
        if (j.contains("labels")) out = FinSet(out.size, j.at("labels").get<std::vector<std::string>>());
        return out;
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad finite set: ") + e.what());
    }
}

ordered_json finfn_to_json(const FinFn& f) {
    return ordered_json{{"dom", f.dom.size}, {"cod", f.cod.size}, {"images", f.images}};
}

FinFn finfn_from_json(const ordered_json& j) {
    try {
        return FinFn(FinSet(j.at("dom").get<int>()), FinSet(j.at("cod").get<int>()),
                     j.at("images").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad function: ") + e.what());
    }
}

ordered_json equiv_to_json(const EquivRel& rel) {
    return ordered_json{{"size", rel.carrier.size}, {"classes", sorted_classes(rel.class_of)}};
}

ordered_json structure_to_json(const Structure& x) {
    ordered_json j;
    j["symset"] = x.owner;
    j["carrier"] = finset_to_json(x.carrier);
    if (const auto* e = std::get_if<EdgeSet>(&x.payload)) {
        auto edges = ordered_json::array();
        for (const auto& [u, v] : e->edges) edges.push_back({u, v});
        j["edges"] = std::move(edges);
    } else if (const auto* b = std::get_if<Blocks>(&x.payload)) {
        j["classes"] = sorted_classes(b->class_of);
    } else if (std::holds_alternative<Sentinel>(x.payload)) {
        j["classes"] = "*";
    } else if (const auto* c = std::get_if<Coloring>(&x.payload)) {
        j["colors"] = c->colors;
    } else {
        j["label"] = std::get<Atom>(x.payload).value;
    }
    return j;
}

Structure structure_from_json(const ordered_json& j) {
    try {
        SymSetPtr M = make_symset(j.at("symset").get<std::string>());
        FinSet carrier = finset_from_json(j.at("carrier"));
        if (j.contains("edges")) {
            EdgeSet e;
            for (const auto& pair : j.at("edges")) {
                require(pair.is_array() && pair.size() == 2, "graph edges must be pairs");
                e.edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
            }
            return M->from_payload(carrier, std::move(e));
        }
        if (j.contains("classes")) {
            const auto& cls = j.at("classes");
            if (cls.is_string()) {
                require(cls.get<std::string>() == "*", "unknown partition payload");
                return M->from_payload(carrier, Sentinel{});
            }
            return M->from_payload(carrier, Blocks{class_of_from_lists(carrier.size, cls)});
        }
        if (j.contains("colors"))
            return M->from_payload(carrier, Coloring{j.at("colors").get<std::vector<int>>()});
        if (j.contains("label")) return M->from_payload(carrier, Atom{j.at("label").get<int>()});
        throw DomainError("structure JSON carries no payload");
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad structure: ") + e.what());
    }
}

ordered_json ez_decomposition_to_json(const EzDecomposition& d) {
    return ordered_json{{"classes", sorted_classes(d.congruence.class_of)},
                        {"mass", d.mass},
                        {"quotient", structure_to_json(d.quotient_structure)}};
}

ordered_json ugraph_to_json(const UGraph& g) {
    ordered_json j;
    j["n"] = g.n();
    if (!g.vertices.labels.empty()) j["labels"] = g.vertices.labels;
    auto edges = ordered_json::array();
    for (const auto& [u, v] : g.edges) edges.push_back({u, v});
    j["edges"] = std::move(edges);
    return j;
}

UGraph ugraph_from_json(const ordered_json& j) {
    try {
        FinSet vertices(j.at("n").get<int>());
        if (j.contains("labels"))
            vertices = FinSet(vertices.size, j.at("labels").get<std::vector<std::string>>());
        std::vector<std::pair<int, int>> edges;
        for (const auto& pair : j.at("edges")) {
            require(pair.is_array() && pair.size() == 2, "graph edges must be pairs");
            edges.emplace_back(pair[0].get<int>(), pair[1].get<int>());
        }
        return UGraph(std::move(vertices), std::move(edges));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad graph: ") + e.what());
    }
}

ordered_json cycle_to_json(const Cycle& c) {
    ordered_json j;
    j["symset"] = c.symset->name();
    j["P"] = c.P.size;
    if (!c.P.labels.empty()) j["labels"] = c.P.labels;
    ordered_json faces = ordered_json::object();
    for (int p = 0; p < c.P.size; ++p)
        faces[std::to_string(p)] = structure_to_json(c.faces[static_cast<std::size_t>(p)]);
    j["faces"] = std::move(faces);
    return j;
}

Cycle cycle_from_json(const ordered_json& j) {
    try {
        SymSetPtr M = make_symset(j.at("symset").get<std::string>());
        FinSet P(j.at("P").get<int>());
        if (j.contains("labels")) P = FinSet(P.size, j.at("labels").get<std::vector<std::string>>());
        std::vector<Structure> faces;
        faces.reserve(static_cast<std::size_t>(P.size));
        const auto& face_obj = j.at("faces");
        for (int p = 0; p < P.size; ++p) {
            const auto key = std::to_string(p);
            require(face_obj.contains(key), "cycle is missing face " + key);
            faces.push_back(structure_from_json(face_obj.at(key)));
        }
        return validate_cycle(std::move(M), P, std::move(faces));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("bad cycle: ") + e.what());
    }
}

ordered_json lower_bound_certificate_to_json(const LowerBoundCertificate& cert) {
    return ordered_json{{"level", cert.level},
                        {"k", cert.k},
                        {"cycle", cycle_to_json(cert.cycle)},
                        {"search_size", cert.search_size},
                        {"fillers", cert.filler_count},
                        {"reduction_graph_propagative", cert.reduction_graph_propagative},
                        {"passed", cert.passed()}};
}

ordered_json aufhebung_report_to_json(const AufhebungReport& report) {
    ordered_json checks = ordered_json::array();
    for (const auto& c : report.upper_bound_checks) {
        ordered_json entry{{"instance", c.instance},
                           {"k", c.k},
                           {"mode", c.mode},
                           {"cycles_tested", c.cycles_tested},
                           {"all_uniquely_filled", c.all_uniquely_filled}};
        if (!c.note.empty()) entry["note"] = c.note;
        checks.push_back(std::move(entry));
    }
    return ordered_json{{"level", report.level},
                        {"claimed_value", report.claimed_value},
                        {"k_bound", report.k_bound},
                        {"lower_bound", lower_bound_certificate_to_json(report.lower_bound)},
                        {"upper_bound_checks", std::move(checks)},
                        {"parameters",
                         ordered_json{{"graph_carrier_max", report.parameters.graph_carrier_max},
                                      {"eq_carrier_max", report.parameters.eq_carrier_max},
                                      {"exhaustive_family_guard", report.parameters.exhaustive_family_guard},
                                      {"brute_force_guard", report.parameters.brute_force_guard},
                                      {"randomized_cycles_per_check", report.parameters.randomized_cycles_per_check},
                                      {"seed", report.parameters.seed}}},
                        {"passed", report.passed()}};
}

}  // namespace symmset
