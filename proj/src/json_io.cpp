#include "hexanet/json_io.hpp"

namespace hexanet {

using nlohmann::json;

json matrix_to_json(const ExactMatrix& m) {
    json entries = json::array();
    for (int r = 1; r <= m.n(); ++r) {
        json row = json::array();
        for (int c = 1; c <= m.n(); ++c) row.push_back(m.at(r, c).to_string());
        entries.push_back(std::move(row));
    }
    return json{{"n", m.n()}, {"ring", ring_name(matrix_ring(m))}, {"entries", entries}};
}

ExactMatrix matrix_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("matrix JSON needs fields n and entries");
    int n = j.at("n").get<int>();
    Ring ring = ring_from_name(j.value("ring", "Q"));
    const json& entries = j.at("entries");
    if (!entries.is_array() || int(entries.size()) != n)
        throw ParseError("matrix JSON: entries must be an n x n array");
    ExactMatrix m = make_matrix(n, ring);
    for (int r = 0; r < n; ++r) {
        if (int(entries[r].size()) != n) throw ParseError("matrix JSON: ragged entries");
        for (int c = 0; c < n; ++c)
            m.at(r + 1, c + 1) = Scalar::parse(entries[r][c].get<std::string>(), ring);
    }
    return m;
}

json tiling_to_json(const Tiling& t) {
    json tiles = json::array();
    for (const Tile& tile : t.tiles) {
        json base = json::array();
        for (int e : subset_elements(tile.base)) base.push_back(e);
        tiles.push_back(json{{"i", tile.i}, {"j", tile.j}, {"base", base}});
    }
    return json{{"n", t.n}, {"tiles", tiles}};
}

Tiling tiling_from_json(const json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("tiles"))
        throw ParseError("tiling JSON needs fields n and tiles");
    Tiling t;
    t.n = j.at("n").get<int>();
    for (const json& tile : j.at("tiles")) {
        Tile out;
        out.i = tile.at("i").get<int>();
        out.j = tile.at("j").get<int>();
        out.base = 0;
        for (const json& e : tile.at("base")) out.base |= subset_bit(e.get<int>());
        t.tiles.push_back(out);
    }
    t.canonicalize();
    return t;
}

json network_to_json(const Network& net) {
    json vertices = json::object();
    for (const auto& [s, v] : net.vertex_values) vertices[subset_to_string(s)] = v.to_string();
    json faces = json::object();
    for (const auto& [f, v] : net.face_values)
        faces["{" + std::to_string(f.first) + "," + std::to_string(f.second) + "}"] = v.to_string();
    return json{{"ring", ring_name(net.ring())},
                {"tiling", tiling_to_json(net.tiling)},
                {"vertices", vertices},
                {"faces", faces}};
}

namespace {

Ring infer_ring(const json& j) {
    if (j.contains("ring")) return ring_from_name(j.at("ring").get<std::string>());
    bool has_i = false, has_jk = false;
    auto scan = [&](const json& section) {
        for (const auto& [key, value] : section.items()) {
            const std::string s = value.get<std::string>();
            has_i |= s.find(" i") != std::string::npos;
            has_jk |= s.find(" j") != std::string::npos || s.find(" k") != std::string::npos;
        }
    };
    scan(j.at("vertices"));
    scan(j.at("faces"));
    return has_jk ? Ring::Quat : has_i ? Ring::Gauss : Ring::Rat;
}

}  // namespace

Network network_from_json(const json& j) {
    if (!j.is_object() || !j.contains("tiling") || !j.contains("vertices") || !j.contains("faces"))
        throw ParseError("network JSON needs fields tiling, vertices and faces");
    Network net;
    net.tiling = tiling_from_json(j.at("tiling"));
    Ring ring = infer_ring(j);
    for (const auto& [key, value] : j.at("vertices").items())
        net.vertex_values[subset_from_string(key)] = Scalar::parse(value.get<std::string>(), ring);
    for (const auto& [key, value] : j.at("faces").items()) {
        Subset pair = subset_from_string(key);
        auto elements = subset_elements(pair);
        if (elements.size() != 2) throw ParseError("face key must be a two-element set: " + key);
        net.face_values[{elements[0], elements[1]}] =
            Scalar::parse(value.get<std::string>(), ring);
    }
    // the values must cover the tiling exactly
    for (Subset s : net.tiling.vertex_set()) net.vertex(s);
    for (const Tile& t : net.tiling.tiles) net.face(t.i, t.j);
    return net;
}

}  // namespace hexanet
