#include "polygraph/io.hpp"

#include <fstream>
#include <sstream>

namespace polygraph {

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::vector<std::string> rows;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        rows.push_back(line);
    }
    if (rows.empty()) throw Error("edge list: missing header");
    std::istringstream hs(rows[0]);
    long n = -1, m = -1;
    if (!(hs >> n >> m) || n < 0 || m < 0) throw Error("edge list: bad header '" + rows[0] + "'");
    if (static_cast<long>(rows.size()) - 1 != m) {
        std::ostringstream os;
        os << "edge list: header promises " << m << " edges, found " << rows.size() - 1;
        throw Error(os.str());
    }
    std::vector<Edge> es;
    for (std::size_t i = 1; i < rows.size(); ++i) {
        std::istringstream ls(rows[i]);
        int u, v;
        if (!(ls >> u >> v)) throw Error("edge list: bad line '" + rows[i] + "'");
        es.push_back({u, v});
    }
    return make_graph(static_cast<int>(n), es);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream os;
    os << g.order() << ' ' << g.size() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

Graph parse_graph6(const std::string& raw) {
    std::string s = raw;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r' || s.back() == ' ')) s.pop_back();
    std::size_t p = 0;
    auto byte = [&]() -> int {
        if (p >= s.size()) throw Error("graph6: truncated input");
        int c = static_cast<unsigned char>(s[p++]) - 63;
        if (c < 0 || c > 63) throw Error("graph6: invalid character");
        return c;
    };
    long n;
    int first = byte();
    if (first < 63) {
        n = first;
    } else {
        int second = byte();
        if (second < 63) {
            n = (static_cast<long>(second) << 12) | (byte() << 6) | byte();
        } else {
            n = 0;
            for (int i = 0; i < 6; ++i) n = (n << 6) | byte();
        }
    }
    std::vector<Edge> es;
    int bit = 6, cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            if (bit == 6) {
                cur = byte();
                bit = 0;
            }
            if ((cur >> (5 - bit)) & 1) es.push_back({u, v});
            ++bit;
        }
    if (p != s.size()) throw Error("graph6: trailing characters");
    return make_graph(static_cast<int>(n), es);
}

std::string to_graph6(const Graph& g) {
    std::string out;
    long n = g.order();
    if (n < 63) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n < 258048) {
        out.push_back(126);
        for (int sh : {12, 6, 0}) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    } else {
        out.push_back(126);
        out.push_back(126);
        for (int sh : {30, 24, 18, 12, 6, 0}) out.push_back(static_cast<char>(((n >> sh) & 63) + 63));
    }
    int bit = 0, cur = 0;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            cur = (cur << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++bit == 6) {
                out.push_back(static_cast<char>(cur + 63));
                bit = cur = 0;
            }
        }
    if (bit) out.push_back(static_cast<char>((cur << (6 - bit)) + 63));
    return out;
}

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
    return {{"n", g.order()}, {"edges", edges}, {"label", g.label()}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.contains("n") || !j.contains("edges")) throw Error("graph JSON needs 'n' and 'edges'");
    std::vector<Edge> es;
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw Error("graph JSON: edges must be pairs");
        es.push_back({e[0].get<int>(), e[1].get<int>()});
    }
    Graph g = make_graph(j.at("n").get<int>(), es);
    if (j.contains("label") && j["label"].is_string()) g = g.with_label(j["label"].get<std::string>());
    return g;
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open " + path);
    auto ends = [&](const std::string& ext) {
        return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
    };
    if (ends(".g6")) {
        std::string line;
        std::getline(in, line);
        return parse_graph6(line);
    }
    if (ends(".json")) return graph_from_json(nlohmann::json::parse(in));
    return read_edge_list(in);
}

}  // namespace polygraph
