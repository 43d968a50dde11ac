#pragma once

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "lexpath/graph.hpp"
#include "lexpath/grid.hpp"
#include "lexpath/poset.hpp"
#include "lexpath/word.hpp"

namespace lexpath {

using nlohmann::json;

// {"n": int, "labels": [int]|null, "edges": [[a,b],...], "names": [str]|null}
inline json graph_to_json(const LabelledGraph& g) {
    json j;
    j["n"] = g.size();
    j["labels"] = g.labelled() ? json(g.labels()) : json(nullptr);
    json edges = json::array();
    for (auto [a, b] : g.edges()) edges.push_back({a, b});
    j["edges"] = std::move(edges);
    j["names"] = g.named() ? json(g.names()) : json(nullptr);
    return j;
}

inline LabelledGraph graph_from_json(const json& j) {
    LabelledGraph g(j.at("n").get<int>());
    for (const auto& e : j.at("edges")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad edge entry");
        g.add_edge(e[0].get<int>(), e[1].get<int>());
    }
    if (j.contains("labels") && !j["labels"].is_null())
        g.set_labels(j["labels"].get<std::vector<int>>());
    if (j.contains("names") && !j["names"].is_null())
        g.set_names(j["names"].get<std::vector<std::string>>());
    return g;
}

// Binary labels render as fill colours; names of the form "(r,c)" become
// fixed positions so grid windows draw as grids.
inline std::string graph_to_dot(const LabelledGraph& g, const std::string& title = "G") {
    std::ostringstream os;
    os << "graph \"" << title << "\" {\n  node [shape=circle, style=filled];\n";
    for (int v = 0; v < g.size(); ++v) {
        os << "  " << v << " [";
        if (g.named()) os << "label=\"" << g.name(v) << "\", ";
        if (g.labelled())
            os << "fillcolor=" << (g.label(v) ? "black, fontcolor=white" : "white");
        else
            os << "fillcolor=white";
        if (g.named()) {
            const std::string& nm = g.name(v);
            long r, c;
            if (sscanf(nm.c_str(), "(%ld,%ld)", &r, &c) == 2)
                os << ", pos=\"" << c << "," << -r << "!\"";
        }
        os << "];\n";
    }
    for (auto [a, b] : g.edges()) os << "  " << a << " -- " << b << ";\n";
    os << "}\n";
    return os.str();
}

// {"max_len": n, "levels": {"1": [...], ...}}, factors sorted lexicographically
inline json factor_set_to_json(const FactorSet& f) {
    json j;
    j["max_len"] = f.max_len;
    json levels = json::object();
    for (int n = 1; n <= f.max_len; ++n) {
        json arr = json::array();
        for (const auto& w : f.level(n)) arr.push_back(w);
        levels[std::to_string(n)] = std::move(arr);
    }
    j["levels"] = std::move(levels);
    return j;
}

// {"n": int, "strict_pairs": [[a,b],...]}; closure and validation happen in
// the Poset constructor.
inline json poset_to_json(const Poset& p) {
    json j;
    j["n"] = p.size();
    json pairs = json::array();
    for (auto [a, b] : p.strict_pairs()) pairs.push_back({a, b});
    j["strict_pairs"] = std::move(pairs);
    return j;
}

inline Poset poset_from_json(const json& j) {
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : j.at("strict_pairs")) {
        if (!e.is_array() || e.size() != 2) throw std::invalid_argument("bad strict pair");
        pairs.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
    return Poset(j.at("n").get<int>(), pairs);
}

// {"word": spec, "star": spec|{"table": [[...]]}, "rows": R, "cols": C,
//  "intervals": [[lo,hi],...] (optional; overrides rows/cols row shapes)}
struct WindowSpec {
    std::string word_spec;
    std::string star_spec;
    int rows = 0;
    long cols = 0;
    std::vector<std::pair<long, long>> intervals;  // empty = full rectangle
};

inline WindowSpec window_spec_from_json(const json& j) {
    WindowSpec s;
    s.word_spec = j.at("word").get<std::string>();
    if (j.at("star").is_string()) {
        s.star_spec = j["star"].get<std::string>();
    } else if (j.at("star").is_object() && j["star"].contains("table")) {
        std::string bits;
        for (const auto& row : j["star"]["table"])
            for (const auto& e : row) bits += std::to_string(e.get<int>());
        s.star_spec = "table:" + bits;
    } else {
        throw std::invalid_argument("bad star field in window spec");
    }
    if (j.contains("intervals") && !j["intervals"].is_null()) {
        for (const auto& iv : j["intervals"]) {
            if (!iv.is_array() || iv.size() != 2)
                throw std::invalid_argument("bad interval entry");
            s.intervals.emplace_back(iv[0].get<long>(), iv[1].get<long>());
        }
        s.rows = int(s.intervals.size());
        for (auto [lo, hi] : s.intervals) s.cols = std::max(s.cols, hi);
    } else {
        s.rows = j.at("rows").get<int>();
        s.cols = j.at("cols").get<long>();
    }
    return s;
}

inline GridWindow build_from_spec(const WindowSpec& s) {
    Word u = parse_word_spec(s.word_spec, std::max(s.cols, 1L));
    StarTable star = parse_star_spec(s.star_spec);
    if (!s.intervals.empty()) return build_window(std::move(u), std::move(star), s.intervals);
    return build_window(std::move(u), std::move(star), s.rows, s.cols);
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open " + path);
    json j;
    in >> j;
    return j;
}

}  // namespace lexpath
