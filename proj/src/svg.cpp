#include "hexanet/svg.hpp"

#include <cmath>
#include <cstdio>
#include <map>

namespace hexanet {

namespace {

constexpr double kScale = 70.0;
constexpr double kMargin = 60.0;

struct Pt {
    double x, y;
};

Pt subset_point(int n, Subset s) {
    double x = 0, y = 0;
    for (int e : subset_elements(s)) {
        x += std::cos(M_PI * (e - 1) / n);
        y += std::sin(M_PI * (e - 1) / n);
    }
    return {x, y};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v + 0.0);  // normalize -0
    return buf;
}

struct Canvas {
    double min_x = 1e9, min_y = 1e9, max_x = -1e9, max_y = -1e9;
    std::string body;

    void see(Pt p) {
        min_x = std::min(min_x, p.x);
        min_y = std::min(min_y, p.y);
        max_x = std::max(max_x, p.x);
        max_y = std::max(max_y, p.y);
    }
    Pt place(Pt p) const {  // flip y for SVG's downward axis
        return {kMargin + kScale * (p.x - min_x), kMargin + kScale * (max_y - p.y)};
    }
    std::string finish() const {
        double w = 2 * kMargin + kScale * (max_x - min_x);
        double h = 2 * kMargin + kScale * (max_y - min_y);
        std::string out = "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(w) +
                          "\" height=\"" + fmt(h) + "\">\n";
        out += body;
        out += "</svg>\n";
        return out;
    }
};

void draw(Canvas& canvas, const Tiling& t, const std::map<Subset, std::string>& vertex_labels,
          const std::map<std::pair<int, int>, std::string>& face_labels) {
    const int n = t.n;
    for (Subset s : t.vertex_set()) canvas.see(subset_point(n, s));

    for (const Tile& tile : t.tiles) {
        Subset b = tile.base, bi = b | subset_bit(tile.i), bj = b | subset_bit(tile.j);
        Pt q[4] = {canvas.place(subset_point(n, b)), canvas.place(subset_point(n, bi)),
                   canvas.place(subset_point(n, bi | bj)), canvas.place(subset_point(n, bj))};
        canvas.body += "<polygon points=\"";
        for (int k = 0; k < 4; ++k)
            canvas.body += (k ? " " : "") + fmt(q[k].x) + "," + fmt(q[k].y);
        canvas.body += "\" fill=\"#f4f1e8\" stroke=\"#333333\" stroke-width=\"1\"/>\n";
    }
    for (const Tile& tile : t.tiles) {
        auto it = face_labels.find({tile.i, tile.j});
        if (it == face_labels.end()) continue;
        Subset b = tile.base, bi = b | subset_bit(tile.i), bj = b | subset_bit(tile.j);
        Pt p0 = subset_point(n, b), p2 = subset_point(n, bi | bj);
        Pt center = canvas.place({(p0.x + p2.x) / 2, (p0.y + p2.y) / 2});
        canvas.body += "<text x=\"" + fmt(center.x) + "\" y=\"" + fmt(center.y) +
                       "\" font-size=\"11\" fill=\"#0a4fa0\" text-anchor=\"middle\">" +
                       it->second + "</text>\n";
    }
    for (const auto& [s, label] : vertex_labels) {
        Pt p = canvas.place(subset_point(n, s));
        canvas.body += "<circle cx=\"" + fmt(p.x) + "\" cy=\"" + fmt(p.y) +
                       "\" r=\"2.5\" fill=\"#333333\"/>\n";
        canvas.body += "<text x=\"" + fmt(p.x) + "\" y=\"" + fmt(p.y - 6) +
                       "\" font-size=\"11\" fill=\"#8a2f10\" text-anchor=\"middle\">" + label +
                       "</text>\n";
    }
}

}  // namespace

std::string render_tiling_svg(const Tiling& t) {
    std::map<Subset, std::string> vertex_labels;
    for (Subset s : t.vertex_set()) vertex_labels[s] = subset_to_string(s);
    Canvas canvas;
    draw(canvas, t, vertex_labels, {});
    return canvas.finish();
}

std::string render_network_svg(const Network& net) {
    std::map<Subset, std::string> vertex_labels;
    for (const auto& [s, v] : net.vertex_values) vertex_labels[s] = v.to_string();
    std::map<std::pair<int, int>, std::string> face_labels;
    for (const auto& [f, v] : net.face_values) face_labels[f] = v.to_string();
    Canvas canvas;
    draw(canvas, net.tiling, vertex_labels, face_labels);
    return canvas.finish();
}

}  // namespace hexanet
