#include "geomexp/point.hpp"

#include <nlohmann/json.hpp>

#include <fstream>
#include <sstream>

namespace geomexp {

using json = nlohmann::ordered_json;

PointSet make_point_set(int d, std::vector<Point> pts) {
    PointSet P;
    P.d = d;
    for (auto& p : pts) {
        if (p.dim() != d) throw std::invalid_argument("point dimension mismatch");
    }
    P.pts = std::move(pts);
    return P;
}

PointSet point_set_from_csv(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line)) throw std::invalid_argument("empty CSV");
    // Header row: x,y[,z...]
    int d = 1;
    for (char c : line)
        if (c == ',') ++d;
    PointSet P;
    P.d = d;
    while (std::getline(in, line)) {
        if (line.empty() || line == "\r") continue;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::vector<Rational> coords;
        std::string cell;
        std::istringstream row(line);
        while (std::getline(row, cell, ',')) coords.push_back(parse_rational(cell));
        if (static_cast<int>(coords.size()) != d)
            throw std::invalid_argument("CSV row arity mismatch: " + line);
        P.pts.emplace_back(std::move(coords));
    }
    return P;
}

std::string point_set_to_csv(const PointSet& P) {
    std::ostringstream out;
    const char* names = "xyzw";
    for (int i = 0; i < P.d; ++i) {
        if (i) out << ',';
        if (i < 4)
            out << names[i];
        else
            out << 'c' << i;
    }
    out << '\n';
    for (const auto& p : P.pts) {
        for (int i = 0; i < P.d; ++i) {
            if (i) out << ',';
            out << rational_to_string(p.x[static_cast<size_t>(i)]);
        }
        out << '\n';
    }
    return out.str();
}

PointSet point_set_from_json(const std::string& text) {
    json j = json::parse(text);
    PointSet P;
    P.d = j.at("d").get<int>();
    for (const auto& row : j.at("points")) {
        std::vector<Rational> coords;
        for (const auto& cell : row) {
            if (cell.is_string())
                coords.push_back(parse_rational(cell.get<std::string>()));
            else if (cell.is_number_integer())
                coords.push_back(Rational(cell.get<long long>()));
            else
                coords.push_back(rational_from_double(cell.get<double>()));
        }
        if (static_cast<int>(coords.size()) != P.d)
            throw std::invalid_argument("JSON point arity mismatch");
        P.pts.emplace_back(std::move(coords));
    }
    return P;
}

std::string point_set_to_json(const PointSet& P) {
    json j;
    j["d"] = P.d;
    json rows = json::array();
    for (const auto& p : P.pts) {
        json row = json::array();
        for (const auto& c : p.x) row.push_back(rational_to_string(c));
        rows.push_back(std::move(row));
    }
    j["points"] = std::move(rows);
    return j.dump();
}

PointSet load_point_set(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json")
        return point_set_from_json(text);
    return point_set_from_csv(text);
}

std::optional<GridPoints> try_gridify(const PointSet& P, long long max_abs) {
    if (P.d != 2) return std::nullopt;
    BigInt L = 1;
    for (const auto& p : P.pts)
        for (const auto& c : p.x) L = lcm(L, denominator(c));
    GridPoints G;
    G.scale = L;
    G.xs.reserve(P.pts.size());
    G.ys.reserve(P.pts.size());
    for (const auto& p : P.pts) {
        long long v[2];
        for (int i = 0; i < 2; ++i) {
            const Rational& c = p.x[static_cast<size_t>(i)];
            BigInt scaled = numerator(c) * (L / denominator(c));
            if (scaled > max_abs || scaled < -max_abs) return std::nullopt;
            v[i] = scaled.convert_to<long long>();
        }
        G.xs.push_back(v[0]);
        G.ys.push_back(v[1]);
    }
    return G;
}

Point grid_to_point(const GridPoints& G, long long x, long long y) {
    return Point(Rational(BigInt(x), G.scale), Rational(BigInt(y), G.scale));
}

}  // namespace geomexp
