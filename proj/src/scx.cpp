#include "polyprod/scx.hpp"

#include <fstream>
#include <sstream>

namespace polyprod {

SimplicialComplex read_scx(std::istream& in, int max_vertices) {
    int m = -1;
    std::vector<std::vector<int>> facet_list;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ss(line);
        std::string keyword;
        if (!(ss >> keyword)) continue;
        if (keyword == "vertices") {
            if (m != -1) throw ParseError(lineno, "line " + std::to_string(lineno) + ": duplicate vertices line");
            if (!(ss >> m)) throw ParseError(lineno, "line " + std::to_string(lineno) + ": expected vertex count");
        } else if (keyword == "facet") {
            if (m == -1)
                throw ParseError(lineno, "line " + std::to_string(lineno) + ": facet before vertices line");
            std::vector<int> facet;
            int v;
            while (ss >> v) {
                if (v < 1 || v > m)
                    throw ParseError(lineno, "line " + std::to_string(lineno) + ": vertex " + std::to_string(v) +
                                                 " out of range 1.." + std::to_string(m));
                facet.push_back(v);
            }
            if (!ss.eof())
                throw ParseError(lineno, "line " + std::to_string(lineno) + ": malformed vertex index");
            facet_list.push_back(std::move(facet));
        } else {
            throw ParseError(lineno, "line " + std::to_string(lineno) + ": unknown keyword '" + keyword + "'");
        }
    }
    if (m == -1) throw ParseError(lineno, "missing vertices line");
    try {
        return from_facets(m, facet_list, max_vertices);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

SimplicialComplex read_scx_file(const std::string& path, int max_vertices) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    return read_scx(in, max_vertices);
}

void write_scx(std::ostream& out, const SimplicialComplex& K) {
    out << "vertices " << K.m << "\n";
    for (Mask f : facets(K)) {
        if (f == 0) continue;  // K = {∅}: the vertices line alone is lossless
        out << "facet";
        for (int v : mask_vertices(f)) out << " " << v;
        out << "\n";
    }
}

std::string to_scx_string(const SimplicialComplex& K) {
    std::ostringstream out;
    write_scx(out, K);
    return out.str();
}

nlohmann::json complex_to_json(const SimplicialComplex& K) {
    nlohmann::json doc;
    doc["vertices"] = K.m;
    auto facet_list = nlohmann::json::array();
    for (Mask f : facets(K))
        if (f != 0) facet_list.push_back(mask_vertices(f));
    doc["facets"] = std::move(facet_list);
    return doc;
}

SimplicialComplex complex_from_json(const nlohmann::json& doc, int max_vertices) {
    if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("facets"))
        throw ParseError(0, "structured complex needs 'vertices' and 'facets' fields");
    if (!doc["vertices"].is_number_integer()) throw ParseError(0, "'vertices' must be an integer");
    int m = doc["vertices"].get<int>();
    std::vector<std::vector<int>> facet_list;
    for (const auto& f : doc["facets"]) {
        std::vector<int> facet;
        for (const auto& v : f) {
            if (!v.is_number_integer()) throw ParseError(0, "facet entries must be integers");
            facet.push_back(v.get<int>());
        }
        facet_list.push_back(std::move(facet));
    }
    try {
        return from_facets(m, facet_list, max_vertices);
    } catch (const std::invalid_argument& e) {
        throw ParseError(0, e.what());
    }
}

namespace {

bool has_json_extension(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
}

}  // namespace

SimplicialComplex read_complex_file(const std::string& path, int max_vertices) {
    if (!has_json_extension(path)) return read_scx_file(path, max_vertices);
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(0, path + ": " + e.what());
    }
    return complex_from_json(doc, max_vertices);
}

void write_complex_file(const std::string& path, const SimplicialComplex& K) {
    std::ofstream out(path);
    if (!out) throw ParseError(0, "cannot write " + path);
    if (has_json_extension(path))
        out << complex_to_json(K).dump(2) << "\n";
    else
        write_scx(out, K);
}

}  // namespace polyprod
