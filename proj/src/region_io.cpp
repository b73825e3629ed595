#include "peakpoint/region_io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace pk {

namespace {
using nlohmann::json;

Cx parse_point(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
        fail(Err::ParseError, std::string(what) + " must be a [x,y] pair");
    return Cx(j[0].get<double>(), j[1].get<double>());
}
} // namespace

RegionPtr parse_region_json(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::exception& e) {
        fail(Err::ParseError, std::string("region file is not valid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("resolution") || !doc.contains("pieces"))
        fail(Err::ParseError, "region file needs 'resolution' and 'pieces'");
    if (!doc["resolution"].is_number()) fail(Err::ParseError, "'resolution' must be a number");
    const double h = doc["resolution"].get<double>();
    if (!doc["pieces"].is_array()) fail(Err::ParseError, "'pieces' must be an array");

    std::vector<Piece> pieces;
    for (const auto& pj : doc["pieces"]) {
        if (!pj.is_object() || !pj.contains("kind") || !pj["kind"].is_string())
            fail(Err::ParseError, "each piece needs a string 'kind'");
        const std::string kind = pj["kind"].get<std::string>();
        Piece pc;
        if (kind == "polygon") {
            pc.kind = Piece::Kind::Polygon;
            if (!pj.contains("vertices") || !pj["vertices"].is_array())
                fail(Err::ParseError, "polygon needs 'vertices'");
            for (const auto& vj : pj["vertices"]) pc.poly.vertices.push_back(parse_point(vj, "vertex"));
        } else if (kind == "disk") {
            pc.kind = Piece::Kind::Disk;
            if (!pj.contains("center") || !pj.contains("radius") || !pj["radius"].is_number())
                fail(Err::ParseError, "disk needs 'center' and numeric 'radius'");
            pc.disk = Disk(parse_point(pj["center"], "center"), pj["radius"].get<double>());
        } else if (kind == "segment") {
            pc.kind = Piece::Kind::Segment;
            if (!pj.contains("a") || !pj.contains("b")) fail(Err::ParseError, "segment needs 'a' and 'b'");
            pc.seg.a = parse_point(pj["a"], "segment endpoint");
            pc.seg.b = parse_point(pj["b"], "segment endpoint");
        } else if (kind == "point") {
            pc.kind = Piece::Kind::Point;
            if (!pj.contains("at")) fail(Err::ParseError, "point needs 'at'");
            pc.point = parse_point(pj["at"], "point");
        } else {
            fail(Err::ParseError, "unknown piece kind '" + kind + "'");
        }
        pieces.push_back(std::move(pc));
    }
    return std::make_shared<Region>(std::move(pieces), h);
}

RegionPtr load_region_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::ParseError, "cannot open region file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_region_json(ss.str());
}

std::string region_to_json(const Region& region) {
    json doc;
    doc["resolution"] = region.resolution();
    doc["pieces"] = json::array();
    for (const auto& pc : region.pieces()) {
        json pj;
        switch (pc.kind) {
            case Piece::Kind::Polygon: {
                pj["kind"] = "polygon";
                pj["vertices"] = json::array();
                for (const Cx& v : pc.poly.vertices) pj["vertices"].push_back({v.real(), v.imag()});
                break;
            }
            case Piece::Kind::Disk:
                pj["kind"] = "disk";
                pj["center"] = {pc.disk.center.real(), pc.disk.center.imag()};
                pj["radius"] = pc.disk.radius;
                break;
            case Piece::Kind::Segment:
                pj["kind"] = "segment";
                pj["a"] = {pc.seg.a.real(), pc.seg.a.imag()};
                pj["b"] = {pc.seg.b.real(), pc.seg.b.imag()};
                break;
            case Piece::Kind::Point:
                pj["kind"] = "point";
                pj["at"] = {pc.point.real(), pc.point.imag()};
                break;
        }
        doc["pieces"].push_back(std::move(pj));
    }
    return doc.dump(2);
}

} // namespace pk
