#include "demazure/polytope.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "demazure/errors.hpp"

namespace demazure {

Coeff LatticeCloud::max_multiplicity() const {
    Coeff m = 0;
    for (const auto& [p, mult] : points) m = std::max(m, mult);
    return m;
}

LatticeCloud cloud_of(const Polynomial& f) {
    if (f.nvars() > 3)
        throw std::invalid_argument("lattice clouds are drawn for 3 variables");
    LatticeCloud cloud;
    for (const auto& [e, c] : f.terms()) {
        if (c < 0)
            throw NegativeCoefficient("signed polynomials have no lattice cloud");
        LatticePoint p{0, 0, 0};
        for (std::size_t i = 0; i < e.size(); ++i) p[i] = e[i];
        cloud.points[p] = c;
    }
    return cloud;
}

std::vector<int> region_of(const LatticePoint& p) {
    const int a1 = p[0], a2 = p[1], a3 = p[2];
    std::vector<int> tags;
    if (a1 >= a2 && a2 >= a3) tags.push_back(1);
    if (a1 >= a3 && a3 >= a2) tags.push_back(2);
    if (a2 >= a1 && a1 >= a3) tags.push_back(3);
    if (a3 >= a1 && a1 >= a2) tags.push_back(4);
    if (a2 >= a3 && a3 >= a1) tags.push_back(5);
    if (a3 >= a2 && a2 >= a1) tags.push_back(6);
    return tags;
}

std::pair<int, int> project(const LatticePoint& p) {
    return {p[0] - p[1], p[0] + p[1] - 2 * p[2]};
}

std::string render_csv(const LatticeCloud& cloud) {
    std::ostringstream out;
    out << "a1,a2,a3,u,v,multiplicity,regions\n";
    for (const auto& [p, mult] : cloud.points) {
        const auto [u, v] = project(p);
        out << p[0] << ',' << p[1] << ',' << p[2] << ',' << u << ',' << v << ','
            << mult << ',';
        const std::vector<int> tags = region_of(p);
        for (std::size_t i = 0; i < tags.size(); ++i) {
            if (i) out << '+';
            out << 'R' << tags[i];
        }
        out << '\n';
    }
    return out.str();
}

std::string render_svg(const LatticeCloud& cloud, int canvas) {
    // Integer-only layout keeps the output byte-stable.
    int extent = 1;
    for (const auto& [p, mult] : cloud.points) {
        const auto [u, v] = project(p);
        extent = std::max({extent, u < 0 ? -u : u, v < 0 ? -v : v});
    }
    const int margin = canvas / 10;
    const int unit = std::max(1, (canvas / 2 - margin) / extent);
    const int cx = canvas / 2, cy = canvas / 2;
    const auto px = [&](int u) { return cx + u * unit; };
    const auto py = [&](int v) { return cy - v * unit; };
    std::ostringstream out;
    out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << canvas
        << "\" height=\"" << canvas << "\" viewBox=\"0 0 " << canvas << ' ' << canvas
        << "\">\n";
    out << "<rect width=\"" << canvas << "\" height=\"" << canvas
        << "\" fill=\"white\"/>\n";
    // sector boundaries: a1=a2 (u=0), a2=a3 (v=u), a1=a3 (v=-u)
    const int reach = canvas;
    out << "<g stroke=\"#bbbbbb\" stroke-width=\"1\">\n";
    out << "<line x1=\"" << cx << "\" y1=\"0\" x2=\"" << cx << "\" y2=\"" << canvas
        << "\"/>\n";
    out << "<line x1=\"" << (cx - reach) << "\" y1=\"" << (cy + reach) << "\" x2=\""
        << (cx + reach) << "\" y2=\"" << (cy - reach) << "\"/>\n";
    out << "<line x1=\"" << (cx - reach) << "\" y1=\"" << (cy - reach) << "\" x2=\""
        << (cx + reach) << "\" y2=\"" << (cy + reach) << "\"/>\n";
    out << "</g>\n";
    for (const auto& [p, mult] : cloud.points) {
        const auto [u, v] = project(p);
        const int r = 3 + 2 * static_cast<int>(std::min<Coeff>(mult, 6) - 1);
        out << "<circle cx=\"" << px(u) << "\" cy=\"" << py(v) << "\" r=\"" << r
            << "\" fill=\"#1f6fb2\" fill-opacity=\"0.7\"/>\n";
        out << "<text x=\"" << (px(u) + r + 2) << "\" y=\"" << (py(v) - 2)
            << "\" font-size=\"10\" font-family=\"monospace\">" << mult << "</text>\n";
    }
    out << "</svg>\n";
    return out.str();
}

void emit(const LatticeCloud& cloud, const std::string& path) {
    std::string content;
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".svg")
        content = render_svg(cloud);
    else if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv")
        content = render_csv(cloud);
    else
        throw std::invalid_argument("output path must end in .csv or .svg: " + path);
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open output file: " + path);
    out << content;
}

} // namespace demazure
