#include "riesz/body_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace riesz {

namespace {

using nlohmann::json;

void reject_unknown_keys(const json& obj, std::initializer_list<const char*> allowed,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* key : allowed)
            if (it.key() == key) ok = true;
        if (!ok) throw ParseError("unknown key \"" + it.key() + "\" in " + where);
    }
}

Vec2 parse_point(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        throw ParseError(where + " must be a [x, y] number pair");
    return {j[0].get<double>(), j[1].get<double>()};
}

}  // namespace

Body parse_body_json(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("body file must be a JSON object");
    reject_unknown_keys(root, {"dimension", "loops"}, "body file");
    if (!root.contains("dimension") || !root["dimension"].is_number_integer())
        throw ParseError("body file needs an integer \"dimension\"");
    if (root["dimension"].get<int>() != 2)
        throw ParseError("only dimension 2 body files are supported");
    if (!root.contains("loops") || !root["loops"].is_array() || root["loops"].empty())
        throw ParseError("body file needs a nonempty \"loops\" array");

    std::vector<Loop> loops;
    for (const json& jl : root["loops"]) {
        if (!jl.is_object()) throw ParseError("loop entries must be objects");
        if (!jl.contains("kind") || !jl["kind"].is_string())
            throw ParseError("loop needs a \"kind\" string");
        const std::string kind = jl["kind"].get<std::string>();
        int orientation = 1;
        if (jl.contains("orientation")) {
            if (!jl["orientation"].is_number_integer())
                throw ParseError("loop orientation must be 1 or -1");
            orientation = jl["orientation"].get<int>();
        }
        if (orientation != 1 && orientation != -1)
            throw ParseError("loop orientation must be 1 or -1");

        if (kind == "polygon") {
            reject_unknown_keys(jl, {"kind", "orientation", "vertices"}, "polygon loop");
            if (!jl.contains("vertices") || !jl["vertices"].is_array() || jl["vertices"].size() < 3)
                throw ParseError("polygon loop needs >= 3 vertices");
            std::vector<Vec2> vertices;
            for (const json& jv : jl["vertices"]) vertices.push_back(parse_point(jv, "vertex"));
            loops.push_back(Loop::polygon(std::move(vertices), orientation));
        } else if (kind == "circle") {
            reject_unknown_keys(jl, {"kind", "orientation", "center", "radius"}, "circle loop");
            if (!jl.contains("center") || !jl.contains("radius") || !jl["radius"].is_number())
                throw ParseError("circle loop needs \"center\" and numeric \"radius\"");
            const double radius = jl["radius"].get<double>();
            if (!(radius > 0.0)) throw ParseError("circle radius must be > 0");
            loops.push_back(Loop::circle(parse_point(jl["center"], "center"), radius, orientation));
        } else {
            throw ParseError("loop kind must be \"polygon\" or \"circle\"");
        }
    }
    try {
        return Body::make(std::move(loops));
    } catch (const GeometryError& e) {
        throw ParseError(std::string("invalid body: ") + e.what());
    }
}

Body load_body_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open body file: " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_body_json(ss.str());
}

std::string serialize_body(const Body& body) {
    json root;
    root["dimension"] = body.dimension();
    json loops = json::array();
    for (const Loop& loop : body.loops()) {
        json jl;
        jl["kind"] = loop.kind == LoopKind::Circle ? "circle" : "polygon";
        jl["orientation"] = loop.orientation;
        if (loop.kind == LoopKind::Circle) {
            jl["center"] = {loop.center.x, loop.center.y};
            jl["radius"] = loop.radius;
        } else {
            json verts = json::array();
            for (const Vec2& p : loop.vertices) verts.push_back({p.x, p.y});
            jl["vertices"] = std::move(verts);
        }
        loops.push_back(std::move(jl));
    }
    root["loops"] = std::move(loops);
    return root.dump(2) + "\n";
}

}  // namespace riesz
