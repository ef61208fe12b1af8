#pragma once

#include <json.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "tverberg/errors.hpp"
#include "tverberg/point_set.hpp"
#include "tverberg/rational.hpp"

namespace tverberg::io {

using json = nlohmann::json;

/// Parsed structured-text input: explicit dimension, exact coordinates
/// (integers or "a/b" fractions; anything float-like is rejected), optional
/// one-token label per point.
struct InputDocument {
    int dim = 0;
    std::vector<Vec> points;
    std::vector<std::string> labels;
};

namespace detail {

struct Token {
    std::string text;
    int column; // 1-based
};

inline std::vector<Token> tokenize(const std::string& line) {
    std::vector<Token> out;
    std::size_t i = 0;
    while (i < line.size()) {
        if (line[i] == '#') break;
        if (std::isspace(static_cast<unsigned char>(line[i]))) {
            ++i;
            continue;
        }
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i])) && line[i] != '#') ++i;
        out.push_back({line.substr(start, i - start), static_cast<int>(start) + 1});
    }
    return out;
}

} // namespace detail

/// Parses a point-set document:
///
///   # comment
///   dim 2
///   1    0       right
///   -1/2 3/4
///
/// The first significant line is `dim d`; each following line is d exact
/// rationals, optionally followed by a single label token.
inline InputDocument parse_input(const std::string& text) {
    InputDocument doc;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    bool have_dim = false;
    bool any_label = false;
    while (std::getline(in, line)) {
        ++lineno;
        auto toks = detail::tokenize(line);
        if (toks.empty()) continue;
        if (!have_dim) {
            if (toks[0].text != "dim")
                throw ParseError("expected 'dim <n>' as the first directive", lineno, toks[0].column);
            if (toks.size() != 2) throw ParseError("'dim' takes exactly one integer", lineno, toks[0].column);
            try {
                doc.dim = std::stoi(toks[1].text);
            } catch (...) {
                throw ParseError("invalid dimension '" + toks[1].text + "'", lineno, toks[1].column);
            }
            if (doc.dim < 1) throw ParseError("dimension must be at least 1", lineno, toks[1].column);
            have_dim = true;
            continue;
        }
        if (static_cast<int>(toks.size()) < doc.dim)
            throw ParseError("point line has fewer than " + std::to_string(doc.dim) + " coordinates",
                             lineno, toks[0].column);
        if (static_cast<int>(toks.size()) > doc.dim + 1)
            throw ParseError("point line has too many tokens (one optional label allowed)", lineno,
                             toks[doc.dim + 1].column);
        Vec p;
        for (int c = 0; c < doc.dim; ++c) {
            auto r = parse_rat(toks[c].text);
            if (!r) {
                std::string why = toks[c].text.find('.') != std::string::npos ||
                                          toks[c].text.find('e') != std::string::npos ||
                                          toks[c].text.find('E') != std::string::npos
                                      ? "floating-point literals are not accepted; use exact fractions a/b"
                                      : "invalid rational '" + toks[c].text + "'";
                throw ParseError(why, lineno, toks[c].column);
            }
            p.push_back(std::move(*r));
        }
        std::string label;
        if (static_cast<int>(toks.size()) == doc.dim + 1) {
            label = toks[doc.dim].text;
            any_label = true;
        }
        doc.points.push_back(std::move(p));
        doc.labels.push_back(std::move(label));
    }
    if (!have_dim) throw ParseError("empty document: missing 'dim' directive", lineno ? lineno : 1, 1);
    if (doc.points.empty()) throw ParseError("document has no points", lineno, 1);
    if (!any_label) doc.labels.clear();
    return doc;
}

inline PointSetPtr to_point_set(const InputDocument& doc) {
    try {
        return make_point_set(doc.dim, doc.points, doc.labels);
    } catch (const Error& e) {
        throw ParseError(e.what(), 0, 0);
    }
}

/// Canonical document rendering of a set (round-trips through parse_input).
inline std::string render_input(const PointSet& s) {
    std::string out = "dim " + std::to_string(s.dim()) + "\n";
    for (int i = 0; i < s.size(); ++i) {
        for (int c = 0; c < s.dim(); ++c) {
            if (c) out += " ";
            out += rat_str(s.point(i)[c]);
        }
        if (!s.labels().empty() && !s.labels()[i].empty()) out += " " + s.labels()[i];
        out += "\n";
    }
    return out;
}

// ---- JSON value helpers (rationals as exact strings) ----

inline json vec_json(const Vec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_str(x));
    return a;
}

inline Vec vec_from_json(const json& a) {
    Vec v;
    for (const auto& e : a) {
        auto r = parse_rat(e.get<std::string>());
        if (!r) throw Error("bad rational in report: " + e.get<std::string>());
        v.push_back(std::move(*r));
    }
    return v;
}

inline json indices_json(const std::vector<int>& idx) { // 0-based in, 1-based out
    json a = json::array();
    for (int i : idx) a.push_back(i + 1);
    return a;
}

inline std::vector<int> indices_from_json(const json& a) { // 1-based in, 0-based out
    std::vector<int> idx;
    for (const auto& e : a) idx.push_back(e.get<int>() - 1);
    return idx;
}

inline json point_set_json(const PointSet& s) {
    json j;
    j["dim"] = s.dim();
    json pts = json::array();
    for (int i = 0; i < s.size(); ++i) pts.push_back(vec_json(s.point(i)));
    j["points"] = pts;
    if (!s.labels().empty()) j["labels"] = s.labels();
    return j;
}

inline PointSetPtr point_set_from_json(const json& j) {
    std::vector<Vec> pts;
    for (const auto& p : j.at("points")) pts.push_back(vec_from_json(p));
    std::vector<std::string> labels;
    if (j.contains("labels")) labels = j["labels"].get<std::vector<std::string>>();
    return make_point_set(j.at("dim").get<int>(), std::move(pts), std::move(labels));
}

/// Parses "a,b,c" as a coordinate vector of exact rationals.
inline Vec parse_vec_arg(const std::string& arg) {
    Vec v;
    std::string cur;
    std::istringstream in(arg);
    while (std::getline(in, cur, ',')) {
        auto r = parse_rat(cur);
        if (!r) throw ParseError("invalid rational '" + cur + "' in vector argument", 0, 0);
        v.push_back(std::move(*r));
    }
    if (v.empty()) throw ParseError("empty vector argument", 0, 0);
    return v;
}

/// Parses "1,3,6" as a 1-based index set (returned 0-based, sorted).
inline std::vector<int> parse_index_arg(const std::string& arg) {
    std::vector<int> out;
    std::string cur;
    std::istringstream in(arg);
    while (std::getline(in, cur, ',')) {
        try {
            int v = std::stoi(cur);
            if (v < 1) throw std::out_of_range("index");
            out.push_back(v - 1);
        } catch (...) {
            throw ParseError("invalid index '" + cur + "' in index-set argument", 0, 0);
        }
    }
    if (out.empty()) throw ParseError("empty index-set argument", 0, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace tverberg::io
