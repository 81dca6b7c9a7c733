#include "galcov/degeneration.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "galcov/schemas.hpp"
#include "json.hpp"

namespace galcov {

int kind_arity(const std::string& kind) {
    if (kind == "one-point") return 1;
    if (kind == "two-point") return 2;
    if (kind == "three-point-generic") return 3;
    if (kind == "three-point-cayley") return 3;
    if (kind == "four-point-standard") return 4;
    if (kind == "four-point-fan") return 4;
    if (kind == "five-point") return 5;
    return -1;
}

PlanarDegeneration parse_case(const std::string& json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("case file is not valid JSON: ") + e.what());
    }
    try {
        PlanarDegeneration d;
        d.name = doc.at("name").get<std::string>();
        d.planes = doc.at("planes").get<int>();
        for (const auto& je : doc.at("edges")) {
            Edge e;
            e.index = je.at("index").get<int>();
            e.planes = je.at("planes").get<std::vector<int>>();
            d.edges.push_back(std::move(e));
        }
        for (const auto& jv : doc.at("vertices")) {
            Vertex v;
            v.id = jv.at("id").get<int>();
            v.incident = jv.at("incident").get<std::vector<int>>();
            v.kind = jv.at("kind").get<std::string>();
            if (jv.contains("roles")) {
                for (const auto& [slot, val] : jv.at("roles").items()) {
                    if (slot == "variant")
                        v.variant = val.get<std::string>();
                    else
                        v.roles[slot] = val.get<int>();
                }
            }
            d.vertices.push_back(std::move(v));
        }
        return d;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("malformed case document: ") + e.what());
    }
}

PlanarDegeneration load_case(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open case file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_case(buf.str());
}

namespace {

void add(ValidationReport& r, std::string rule, std::string msg, std::string elem) {
    r.ok = false;
    r.violations.push_back({std::move(rule), std::move(msg), std::move(elem)});
}

}  // namespace

ValidationReport validate(const PlanarDegeneration& d) {
    ValidationReport r;
    if (d.planes < 1)
        add(r, "plane-count", "plane count must be at least 1", "planes");

    // --- edges ---
    std::map<int, int> index_seen;
    for (const auto& e : d.edges) {
        std::string elem = "edge " + std::to_string(e.index);
        ++index_seen[e.index];
        if (e.planes.size() > 2) {
            add(r, "no-three-planes-in-a-line",
                "edge lists " + std::to_string(e.planes.size()) +
                    " planes; no three planes may meet in a line",
                elem);
            continue;
        }
        if (e.planes.size() != 2) {
            add(r, "edge-plane-pair", "edge must reference exactly two planes", elem);
            continue;
        }
        if (e.planes[0] == e.planes[1])
            add(r, "edge-planes-distinct", "edge references a plane twice", elem);
        for (int pl : e.planes)
            if (pl < 1 || pl > d.planes)
                add(r, "edge-plane-range",
                    "plane index " + std::to_string(pl) + " outside 1.." +
                        std::to_string(d.planes),
                    elem);
    }
    int m = d.edge_count();
    for (int j = 1; j <= m; ++j)
        if (index_seen[j] != 1)
            add(r, "edge-index-cover",
                "edge index " + std::to_string(j) + " appears " +
                    std::to_string(index_seen[j]) + " times; indices 1.." +
                    std::to_string(m) + " must each appear once",
                "edge " + std::to_string(j));
    for (const auto& [idx, cnt] : index_seen)
        if (idx < 1 || idx > m)
            add(r, "edge-index-cover",
                "edge index " + std::to_string(idx) + " outside 1.." + std::to_string(m),
                "edge " + std::to_string(idx));

    // --- vertex incidences ---
    std::map<int, std::vector<int>> endpoints;  // edge -> vertex ids
    for (const auto& v : d.vertices) {
        std::string elem = "vertex " + std::to_string(v.id);
        std::set<int> uniq(v.incident.begin(), v.incident.end());
        if (uniq.size() != v.incident.size())
            add(r, "vertex-incident-distinct", "incident edge listed twice", elem);
        for (int j : v.incident) {
            if (!d.find_edge(j))
                add(r, "vertex-incident-known",
                    "incident edge " + std::to_string(j) + " is not declared", elem);
            else
                endpoints[j].push_back(v.id);
        }
        int arity = kind_arity(v.kind);
        if (arity < 0) {
            add(r, "vertex-kind-known", "unknown vertex kind '" + v.kind + "'", elem);
        } else if (arity != static_cast<int>(v.incident.size())) {
            add(r, "vertex-arity",
                "kind '" + v.kind + "' implies " + std::to_string(arity) +
                    " incident edges, got " + std::to_string(v.incident.size()),
                elem);
        } else {
            // roles must biject the schema's slot letters onto the incident edges
            try {
                const RelationSchema& schema = find_schema(v.schema_key());
                std::multiset<int> bound, inc(v.incident.begin(), v.incident.end());
                bool complete = true;
                for (char c : schema.letters) {
                    auto it = v.roles.find(std::string(1, c));
                    if (it == v.roles.end()) {
                        add(r, "roles-bijection",
                            std::string("role slot '") + c + "' unbound", elem);
                        complete = false;
                    } else {
                        bound.insert(it->second);
                    }
                }
                if (complete && bound != inc)
                    add(r, "roles-bijection",
                        "role slots are not a bijection onto the incident edges", elem);
            } catch (const MissingSchema&) {
                add(r, "vertex-schema-known",
                    "no relation schema registered for '" + v.schema_key() + "'", elem);
            }
        }
    }

    // --- each edge has exactly two endpoint vertices ---
    for (const auto& e : d.edges) {
        auto it = endpoints.find(e.index);
        size_t cnt = it == endpoints.end() ? 0 : it->second.size();
        if (cnt != 2)
            add(r, "edge-two-endpoints",
                "edge appears in " + std::to_string(cnt) +
                    " vertices' incidence lists, expected 2",
                "edge " + std::to_string(e.index));
    }

    // --- no doubled lines: same plane pair and same endpoints ---
    for (size_t i = 0; i < d.edges.size(); ++i)
        for (size_t j = i + 1; j < d.edges.size(); ++j) {
            const Edge& a = d.edges[i];
            const Edge& b = d.edges[j];
            if (a.planes.size() != 2 || b.planes.size() != 2) continue;
            std::set<int> pa(a.planes.begin(), a.planes.end());
            std::set<int> pb(b.planes.begin(), b.planes.end());
            if (pa != pb) continue;
            auto ea = endpoints.find(a.index), eb = endpoints.find(b.index);
            std::set<int> va, vb;
            if (ea != endpoints.end()) va.insert(ea->second.begin(), ea->second.end());
            if (eb != endpoints.end()) vb.insert(eb->second.begin(), eb->second.end());
            if (va == vb)
                add(r, "no-doubled-lines",
                    "edges " + std::to_string(a.index) + " and " + std::to_string(b.index) +
                        " share both their plane pair and their endpoints",
                    "edge " + std::to_string(b.index));
        }

    return r;
}

std::map<int, int> classify(const PlanarDegeneration& d) {
    std::map<int, int> out;
    for (const auto& v : d.vertices) {
        int arity = kind_arity(v.kind);
        int k = static_cast<int>(v.incident.size());
        if (arity >= 0 && arity != k)
            throw KindMismatch("vertex " + std::to_string(v.id) + ": kind '" + v.kind +
                               "' implies arity " + std::to_string(arity) + ", got " +
                               std::to_string(k));
        out[v.id] = k;
    }
    return out;
}

std::vector<std::pair<int, int>> parasitic_pairs(const PlanarDegeneration& d) {
    std::map<int, std::set<int>> member;  // edge -> vertex ids
    for (const auto& e : d.edges) member[e.index];
    for (const auto& v : d.vertices)
        for (int j : v.incident) member[j].insert(v.id);
    std::vector<int> idx;
    for (const auto& [j, _] : member) idx.push_back(j);
    std::sort(idx.begin(), idx.end());
    std::vector<std::pair<int, int>> out;
    for (size_t i = 0; i < idx.size(); ++i)
        for (size_t j = i + 1; j < idx.size(); ++j) {
            const auto& a = member[idx[i]];
            const auto& b = member[idx[j]];
            bool shared = std::any_of(a.begin(), a.end(),
                                      [&](int v) { return b.count(v) > 0; });
            if (!shared) out.emplace_back(idx[i], idx[j]);
        }
    return out;
}

Permutation edge_transposition(const PlanarDegeneration& d, int j) {
    const Edge* e = d.find_edge(j);
    if (!e || e->planes.size() != 2)
        throw UnknownEdge("no edge with index " + std::to_string(j));
    return Permutation::transposition(e->planes[0], e->planes[1], d.planes);
}

}  // namespace galcov
