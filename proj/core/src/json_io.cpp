#include "amalgam/json_io.hpp"

namespace amalgam {

namespace {

std::optional<CurveSpec> curve_from_json(const Json& j, std::vector<std::string>& errors) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) {
        errors.push_back("curve: missing kind");
        return std::nullopt;
    }
    std::string kind = j["kind"];
    if (kind == "nonseparating") return CurveSpec::non_separating();
    if (kind == "separating") {
        if (!j.contains("split") || !j["split"].is_array() || j["split"].size() != 2 ||
            !j["split"][0].is_number_integer() || !j["split"][1].is_number_integer()) {
            errors.push_back("curve: separating needs split [g1,g2]");
            return std::nullopt;
        }
        return CurveSpec::separating(j["split"][0], j["split"][1]);
    }
    errors.push_back("curve: unknown kind " + kind);
    return std::nullopt;
}

Json curve_to_json(const CurveSpec& c) {
    Json j;
    if (c.is_separating()) {
        j["kind"] = "separating";
        j["split"] = {c.g1, c.g2};
    } else {
        j["kind"] = "nonseparating";
    }
    return j;
}

}  // namespace

ParsedSpec parse_spec(const Json& j) {
    ParsedSpec out;
    if (!j.is_object() || !j.contains("family") || !j["family"].is_string()) {
        out.errors.push_back("spec: missing family");
        return out;
    }
    std::string family = j["family"];
    if (family == "C") {
        for (const char* key : {"g", "h", "m", "n"})
            if (!j.contains(key) || !j[key].is_number_integer())
                out.errors.push_back(std::string("spec: missing integer field ") + key);
        if (!j.contains("curve_a") || !j.contains("curve_b"))
            out.errors.push_back("spec: missing curve_a/curve_b");
        if (!out.errors.empty()) return out;
        SurfaceAmalgamSpec raw;
        raw.g = j["g"];
        raw.h = j["h"];
        raw.m = j["m"];
        raw.n = j["n"];
        auto ca = curve_from_json(j["curve_a"], out.errors);
        auto cb = curve_from_json(j["curve_b"], out.errors);
        if (!ca || !cb) return out;
        raw.curve_a = *ca;
        raw.curve_b = *cb;
        ValidatedAmalgam v = validate_spec(raw);
        for (SpecError e : v.errors) out.errors.push_back(to_string(e));
        if (v.ok()) out.amalgam = *v.spec;
        return out;
    }
    if (family == "W") {
        if (!j.contains("arms") || !j["arms"].is_array()) {
            out.errors.push_back("spec: missing arms array");
            return out;
        }
        ThetaGraphSpec raw;
        for (const auto& a : j["arms"]) {
            if (!a.is_number_integer()) {
                out.errors.push_back("spec: arms must be integers");
                return out;
            }
            raw.arms.push_back(a);
        }
        ValidatedTheta v = validate_spec(raw);
        for (SpecError e : v.errors) out.errors.push_back(to_string(e));
        if (v.ok()) out.theta = *v.spec;
        return out;
    }
    out.errors.push_back("spec: unknown family " + family);
    return out;
}

ParsedSpec parse_spec_text(const std::string& text) {
    ParsedSpec out;
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        out.errors.push_back("spec: malformed JSON");
        return out;
    }
    return parse_spec(j);
}

Json to_json(const SurfaceAmalgamSpec& s) {
    Json j;
    j["family"] = "C";
    j["g"] = s.g;
    j["h"] = s.h;
    j["m"] = s.m;
    j["n"] = s.n;
    j["curve_a"] = curve_to_json(s.curve_a);
    j["curve_b"] = curve_to_json(s.curve_b);
    j["gcd_coprime"] = s.coprime();
    return j;
}

Json to_json(const ThetaGraphSpec& t) {
    Json j;
    j["family"] = "W";
    j["arms"] = t.arms;
    j["linear_degree"] = t.linear_degree();
    j["hyperbolic_degree"] = t.hyperbolic_degree();
    return j;
}

Json to_json(const EulerVector& v) {
    Json j = Json::array();
    for (const auto& s : v.to_strings()) j.push_back(s);
    return j;
}

Json to_json(const Complex2& c) {
    Json j;
    j["circles"] = c.circle_names;
    Json labels = Json::array();
    bool any_label = false;
    for (const auto& l : c.circle_labels) {
        labels.push_back(l);
        if (!l.empty()) any_label = true;
    }
    if (any_label) j["labels"] = labels;
    Json pieces = Json::array();
    for (const auto& p : c.pieces) {
        Json pj;
        if (p.kind == Complex2::Piece::Kind::Surface) {
            pj["kind"] = "surface";
            pj["euler"] = p.euler;
            Json att = Json::array();
            for (const auto& a : p.att)
                att.push_back(Json::array({c.circle_names[a.circle], a.degree}));
            pj["att"] = att;
        } else {
            pj["kind"] = "tube";
            Json ends = Json::array();
            for (const auto& a : p.att)
                ends.push_back(Json::array({c.circle_names[a.circle], a.degree}));
            pj["ends"] = ends;
        }
        pieces.push_back(pj);
    }
    j["pieces"] = pieces;
    return j;
}

Complex2 complex_from_json(const Json& j) {
    Complex2 c;
    std::map<std::string, int> index;
    for (const auto& name : j.at("circles")) {
        index[name] = c.add_circle(name);
    }
    if (j.contains("labels"))
        for (std::size_t i = 0; i < j["labels"].size() && i < c.circle_labels.size(); ++i)
            c.circle_labels[i] = j["labels"][i];
    for (const auto& pj : j.at("pieces")) {
        std::string kind = pj.at("kind");
        auto read_att = [&](const Json& arr) {
            std::vector<Complex2::Attachment> att;
            for (const auto& a : arr)
                att.push_back({index.at(a.at(0)), a.at(1)});
            return att;
        };
        if (kind == "surface")
            c.add_surface(pj.at("euler"), read_att(pj.at("att")));
        else if (kind == "tube") {
            auto ends = read_att(pj.at("ends"));
            if (ends.size() != 2) throw std::invalid_argument("tube needs two ends");
            c.add_tube(ends[0], ends[1]);
        } else {
            throw std::invalid_argument("unknown piece kind " + kind);
        }
    }
    return c;
}

Json to_json(const CoverMap& cm) {
    Json j;
    j["name"] = cm.name;
    j["degree"] = cm.degree;
    j["total"] = to_json(cm.total);
    j["base"] = to_json(cm.base);
    Json cmap = Json::array();
    for (const auto& [b, f] : cm.circle_map) cmap.push_back(Json::array({b, f}));
    j["circle_map"] = cmap;
    Json pmap = Json::array();
    for (const auto& [q, e] : cm.piece_map) pmap.push_back(Json::array({q, e}));
    j["piece_map"] = pmap;
    j["claims_connected"] = cm.claims_connected;
    return j;
}

CoverMap covermap_from_json(const Json& j) {
    CoverMap cm;
    cm.name = j.value("name", std::string{});
    cm.degree = j.at("degree");
    cm.total = complex_from_json(j.at("total"));
    cm.base = complex_from_json(j.at("base"));
    for (const auto& e : j.at("circle_map"))
        cm.circle_map.push_back({e.at(0), e.at(1)});
    for (const auto& e : j.at("piece_map"))
        cm.piece_map.push_back({e.at(0), e.at(1)});
    cm.claims_connected = j.value("claims_connected", true);
    return cm;
}

Json to_json(const Tower& t) {
    Json j;
    Json stages = Json::array();
    for (std::size_t i = 0; i < t.stages.size(); ++i) {
        Json sj;
        sj["name"] = t.stage_names[i];
        sj["euler"] = euler_char(t.stages[i]);
        sj["complex"] = to_json(t.stages[i]);
        stages.push_back(sj);
    }
    j["stages"] = stages;
    Json links = Json::array();
    for (const auto& l : t.links) {
        Json lj;
        lj["name"] = l.name;
        if (l.kind == TowerLink::Kind::Cover) {
            lj["kind"] = "cover";
            lj["degree"] = l.cover->degree;
        } else {
            lj["kind"] = "homotopy-equivalence";
        }
        links.push_back(lj);
    }
    j["links"] = links;
    if (t.orbi_link) {
        j["orbi_link"] = Json{{"degree", t.orbi_link->degree},
                              {"base_vector", to_json(t.orbi_link->base_vector)}};
    }
    j["side_eulers"] = t.side_eulers;
    j["N"] = t.N;
    return j;
}

}  // namespace amalgam
