#include "levi/arrangement_io.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "levi/errors.hpp"

namespace levi {

using nlohmann::json;

namespace {

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    for (const auto& [key, _] : obj.items()) {
        if (!allowed.contains(key)) throw ParseError("unknown field '" + key + "' in " + where);
    }
}

const json& field(const json& obj, const char* key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "' in " + where);
    return *it;
}

int int_field(const json& obj, const char* key, const std::string& where) {
    const json& v = field(obj, key, where);
    if (!v.is_number_integer()) throw ParseError(std::string("field '") + key + "' in " + where + " must be an integer");
    return v.get<int>();
}

std::string id_field(const json& obj, const std::string& where) {
    const json& v = field(obj, "id", where);
    if (!v.is_string()) throw ParseError("field 'id' in " + where + " must be a string");
    auto id = v.get<std::string>();
    if (!is_valid_id(id)) throw ParseError("id '" + id + "' in " + where + " does not match [A-Za-z0-9_]+");
    return id;
}

}  // namespace

Arrangement parse_arrangement(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;
        auto [line, column] = line_column(text, byte);
        throw ParseError("malformed arrangement document", line, column);
    }
    if (!doc.is_object()) throw ParseError("arrangement document must be an object");

    const json& kind_v = field(doc, "kind", "document");
    if (!kind_v.is_string()) throw ParseError("field 'kind' must be a string");
    const auto kind = kind_v.get<std::string>();
    if (kind == "d-arrangement") {
        reject_unknown(doc, {"kind", "d", "complete", "curves", "points"}, "document");
    } else if (kind == "conic-line") {
        reject_unknown(doc, {"kind", "n", "k", "complete", "curves", "points"}, "document");
    } else {
        throw ParseError("unknown kind '" + kind + "'");
    }

    const json& complete_v = field(doc, "complete", "document");
    if (!complete_v.is_boolean()) throw ParseError("field 'complete' must be true or false");

    const json& curves_v = field(doc, "curves", "document");
    if (!curves_v.is_array()) throw ParseError("field 'curves' must be an array");
    std::vector<Curve> curves;
    for (std::size_t i = 0; i < curves_v.size(); ++i) {
        const std::string where = "curves[" + std::to_string(i) + "]";
        const json& c = curves_v[i];
        if (!c.is_object()) throw ParseError(where + " must be an object");
        reject_unknown(c, {"id", "degree"}, where);
        curves.push_back({id_field(c, where), int_field(c, "degree", where)});
    }

    const json& points_v = field(doc, "points", "document");
    if (!points_v.is_array()) throw ParseError("field 'points' must be an array");
    std::vector<SingularPoint> points;
    for (std::size_t i = 0; i < points_v.size(); ++i) {
        const std::string where = "points[" + std::to_string(i) + "]";
        const json& p = points_v[i];
        if (!p.is_object()) throw ParseError(where + " must be an object");
        reject_unknown(p, {"id", "curves"}, where);
        SingularPoint sp{id_field(p, where), {}};
        const json& on = field(p, "curves", where);
        if (!on.is_array()) throw ParseError("field 'curves' in " + where + " must be an array");
        for (const auto& c : on) {
            if (!c.is_string()) throw ParseError("curve ids in " + where + " must be strings");
            sp.curves.push_back(c.get<std::string>());
        }
        points.push_back(std::move(sp));
    }

    const bool complete = complete_v.get<bool>();
    if (kind == "d-arrangement") {
        return Arrangement::d_arrangement(int_field(doc, "d", "document"), std::move(curves),
                                          std::move(points), complete);
    }
    return Arrangement::conic_line(int_field(doc, "n", "document"), int_field(doc, "k", "document"),
                                   std::move(curves), std::move(points), complete);
}

Arrangement read_arrangement(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_arrangement(buf.str());
}

std::string emit_arrangement(const Arrangement& arr) {
    std::ostringstream out;
    out << "{\n";
    out << "  \"kind\": " << json(to_string(arr.kind())).dump() << ",\n";
    if (arr.kind() == ArrangementKind::d_arrangement) {
        out << "  \"d\": " << arr.d() << ",\n";
    } else {
        out << "  \"n\": " << arr.line_count() << ",\n";
        out << "  \"k\": " << arr.conic_count() << ",\n";
    }
    out << "  \"complete\": " << (arr.complete() ? "true" : "false") << ",\n";
    out << "  \"curves\": [";
    for (std::size_t i = 0; i < arr.curves().size(); ++i) {
        const auto& c = arr.curves()[i];
        out << (i == 0 ? "\n" : ",\n") << "    {\"id\": " << json(c.id).dump()
            << ", \"degree\": " << c.degree << "}";
    }
    out << (arr.curves().empty() ? "],\n" : "\n  ],\n");
    out << "  \"points\": [";
    for (std::size_t i = 0; i < arr.points().size(); ++i) {
        const auto& p = arr.points()[i];
        out << (i == 0 ? "\n" : ",\n") << "    {\"id\": " << json(p.id).dump() << ", \"curves\": [";
        for (std::size_t j = 0; j < p.curves.size(); ++j) {
            out << (j == 0 ? "" : ", ") << json(p.curves[j]).dump();
        }
        out << "]}";
    }
    out << (arr.points().empty() ? "]\n" : "\n  ]\n");
    out << "}\n";
    return out.str();
}

}  // namespace levi
