#include "centdian/parse.hpp"

#include <fstream>
#include <limits>
#include <numeric>
#include <sstream>

namespace centdian {

namespace {

using nlohmann::json;

long parse_id(const json& value, const std::string& where) {
    if (!value.is_number_integer() && !value.is_number_unsigned())
        throw ValidationError("expected an integer id at " + where);
    return value.get<long>();
}

const json& member(const json& obj, const char* key, const std::string& where) {
    if (!obj.is_object())
        throw ValidationError("expected an object at " + where);
    auto it = obj.find(key);
    if (it == obj.end())
        throw ValidationError("missing field '" + std::string(key) + "' at " +
                              where);
    return *it;
}

const json& array_member(const json& obj, const char* key) {
    const json& value = member(obj, key, "the document root");
    if (!value.is_array())
        throw ValidationError("field '" + std::string(key) +
                              "' must be an array");
    return value;
}

}  // namespace

Rat parse_amount(const json& value, const std::string& where) {
    if (value.is_number_integer()) return Rat(value.get<long>());
    if (value.is_number_unsigned()) {
        unsigned long raw = value.get<unsigned long>();
        if (raw > static_cast<unsigned long>(std::numeric_limits<long>::max()))
            throw ValidationError("integer too large at " + where +
                                  "; use a string amount");
        return Rat(static_cast<long>(raw));
    }
    if (value.is_string()) {
        auto parsed = Rat::parse(value.get<std::string>());
        if (!parsed)
            throw ValidationError("malformed amount '" +
                                  value.get<std::string>() + "' at " + where);
        return *parsed;
    }
    if (value.is_number_float())
        throw ValidationError(
            "binary floating-point amount at " + where +
            "; write non-integers as strings (\"25.5\" or \"51/2\") so they "
            "stay exact");
    throw ValidationError("expected an amount at " + where);
}

Instance parse_instance(const json& doc) {
    if (!doc.is_object())
        throw ValidationError("instance document must be a JSON object");

    Instance inst;
    size_t index = 0;
    for (const json& jn : array_member(doc, "nodes")) {
        std::string where = "nodes[" + std::to_string(index++) + "]";
        Node n;
        n.id = parse_id(member(jn, "id", where), where + ".id");
        n.b = parse_amount(member(jn, "b", where), where + ".b");
        inst.nodes.push_back(n);
    }
    index = 0;
    for (const json& je : array_member(doc, "edges")) {
        std::string where = "edges[" + std::to_string(index++) + "]";
        Edge e;
        e.u = parse_id(member(je, "u", where), where + ".u");
        e.v = parse_id(member(je, "v", where), where + ".v");
        e.c = parse_amount(member(je, "c", where), where + ".c");
        e.d = parse_amount(member(je, "d", where), where + ".d");
        inst.edges.push_back(e);
    }
    index = 0;
    for (const json& jw : array_member(doc, "pairs")) {
        std::string where = "pairs[" + std::to_string(index++) + "]";
        OdPair w;
        w.s = parse_id(member(jw, "s", where), where + ".s");
        w.t = parse_id(member(jw, "t", where), where + ".t");
        w.u = parse_amount(member(jw, "u", where), where + ".u");
        w.g = parse_amount(member(jw, "g", where), where + ".g");
        inst.pairs.push_back(w);
    }

    bool has_budget = doc.contains("budget");
    bool has_alpha = doc.contains("alpha");
    if (has_budget == has_alpha)
        throw ValidationError("exactly one of 'budget' and 'alpha' must be given");
    if (has_budget) {
        inst.budget = parse_amount(doc["budget"], "budget");
    } else {
        Rat alpha = parse_amount(doc["alpha"], "alpha");
        if (alpha.sign() < 0 || alpha > Rat(1))
            throw ValidationError("alpha must lie in [0, 1]");
        Subgraph everything(inst.edges.size());
        std::iota(everything.begin(), everything.end(), 0);
        inst.budget_from_fraction = true;
        inst.budget_fraction = alpha;
        inst.budget = alpha * design_cost(inst, everything);
    }

    inst.validate();
    return inst;
}

Instance parse_instance_text(const std::string& text) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded())
        throw ValidationError("instance document is not valid JSON");
    return parse_instance(doc);
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open instance file: " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_instance_text(buffer.str());
}

namespace {

nlohmann::ordered_json amount_out(const Rat& value) {
    // Integers that survive a JSON round-trip go out as numbers; everything
    // else as an exact fraction string.
    if (value.den_str() == "1") {
        const std::string num = value.num_str();
        if (num.size() <= 15) return nlohmann::ordered_json(std::stoll(num));
    }
    return nlohmann::ordered_json(value.fraction_str());
}

}  // namespace

nlohmann::ordered_json instance_to_json(const Instance& inst) {
    nlohmann::ordered_json doc;
    doc["nodes"] = nlohmann::ordered_json::array();
    for (const Node& n : inst.nodes)
        doc["nodes"].push_back({{"id", n.id}, {"b", amount_out(n.b)}});
    doc["edges"] = nlohmann::ordered_json::array();
    for (const Edge& e : inst.edges)
        doc["edges"].push_back({{"u", e.u},
                                {"v", e.v},
                                {"c", amount_out(e.c)},
                                {"d", amount_out(e.d)}});
    doc["pairs"] = nlohmann::ordered_json::array();
    for (const OdPair& w : inst.pairs)
        doc["pairs"].push_back({{"s", w.s},
                                {"t", w.t},
                                {"u", amount_out(w.u)},
                                {"g", amount_out(w.g)}});
    doc["budget"] = amount_out(inst.budget);
    return doc;
}

PFacilityInput parse_pfacility(const json& doc) {
    if (!doc.is_object())
        throw ValidationError("p-facility document must be a JSON object");
    const json& jdist = array_member(doc, "dist");
    std::vector<std::vector<Rat>> dist;
    size_t row = 0;
    for (const json& jrow : jdist) {
        if (!jrow.is_array())
            throw ValidationError("dist rows must be arrays");
        std::vector<Rat> entries;
        size_t col = 0;
        for (const json& cell : jrow)
            entries.push_back(parse_amount(
                cell, "dist[" + std::to_string(row) + "][" +
                          std::to_string(col++) + "]"));
        dist.push_back(std::move(entries));
        ++row;
    }
    const json& jp = member(doc, "p", "the document root");
    if (!jp.is_number_integer() && !jp.is_number_unsigned())
        throw ValidationError("p must be an integer");
    return PFacilityInput(std::move(dist), jp.get<int>());
}

PFacilityInput load_pfacility(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open p-facility file: " + path);
    json doc = json::parse(in, nullptr, false);
    if (doc.is_discarded())
        throw ValidationError("p-facility document is not valid JSON");
    return parse_pfacility(doc);
}

}  // namespace centdian
