#include "dfam/serialize.hpp"

#include <json.hpp>

#include "dfam/error.hpp"

namespace dfam {

using nlohmann::json;

namespace {

json element_json(const GroupSpec& g, std::size_t index) { return g.element_at(index).residues; }

Element element_from(const GroupSpec& g, const json& j) {
    std::vector<int> residues;
    if (j.is_number_integer()) {
        if (g.rank() != 1) throw ParseError("bare integer element in a group of rank " + std::to_string(g.rank()));
        residues.push_back(j.get<int>());
    } else if (j.is_array()) {
        residues = j.get<std::vector<int>>();
    } else {
        throw ParseError("element must be an integer array");
    }
    Element e{residues};
    // index_of rejects wrong length and out-of-range residues
    g.index_of(e);
    return e;
}

GroupSpec group_from(const json& j) {
    if (j.is_string()) return parse_group_literal(j.get<std::string>());
    if (j.is_array()) return GroupSpec(j.get<std::vector<int>>());
    throw ParseError("group must be a list of orders or a literal such as \"Z3xZ6\"");
}

}  // namespace

std::string family_to_json(const DifferenceFamily& family, bool gs_mode, int indent) {
    const GroupSpec& g = family.group;
    json blocks = json::array();
    for (const Block& b : family.blocks) {
        json block = json::array();
        for (std::size_t x : b) block.push_back(element_json(g, x));
        blocks.push_back(std::move(block));
    }
    json j = {{"group", g.orders()}, {"blocks", std::move(blocks)}, {"lambda", family.params.lambda}};
    if (gs_mode) j["gs_mode"] = true;
    return j.dump(indent);
}

ParsedFamily family_from_json(std::string_view text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("group") || !j.contains("blocks")) {
        throw ParseError("family JSON needs \"group\" and \"blocks\"");
    }
    try {
        const GroupSpec g = group_from(j.at("group"));
        std::vector<Block> blocks;
        for (const json& jb : j.at("blocks")) {
            std::vector<Element> elements;
            for (const json& je : jb) elements.push_back(element_from(g, je));
            blocks.push_back(make_block(g, elements));
        }
        std::optional<std::int64_t> lambda;
        if (j.contains("lambda")) lambda = j.at("lambda").get<std::int64_t>();
        const bool gs = j.value("gs_mode", false);
        return ParsedFamily{make_family(g, std::move(blocks), lambda), gs};
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad family JSON: ") + e.what());
    }
}

std::string matrix_to_json(const IntMatrix& a) {
    json rows = json::array();
    for (std::size_t r = 0; r < a.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < a.cols(); ++c) row.push_back(a(r, c));
        rows.push_back(std::move(row));
    }
    return json{{"order", a.rows()}, {"rows", std::move(rows)}}.dump();
}

IntMatrix matrix_from_json(std::string_view text) {
    try {
        const json j = json::parse(text);
        const auto& rows = j.at("rows");
        const std::size_t n = rows.size();
        const std::size_t m = n ? rows.at(0).size() : 0;
        IntMatrix a(n, m);
        for (std::size_t r = 0; r < n; ++r) {
            if (rows[r].size() != m) throw ShapeError("ragged matrix rows");
            for (std::size_t c = 0; c < m; ++c) a(r, c) = rows[r][c].get<std::int64_t>();
        }
        return a;
    } catch (const json::exception& e) {
        throw ParseError(std::string("bad matrix JSON: ") + e.what());
    }
}

}  // namespace dfam
