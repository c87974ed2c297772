#include "birkhoff/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace birkhoff {

Json rational_to_json(const Rational& q) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) {
        return q.get_num().get_si();
    }
    return to_string(q);
}

Rational rational_from_json(const Json& value) {
    if (value.is_number_integer()) {
        return Rational(Integer(std::to_string(value.get<long long>())));
    }
    if (value.is_string()) {
        return parse_rational(value.get<std::string>());
    }
    throw std::invalid_argument("array entry must be an integer or a \"p/q\" string");
}

namespace {

Json nest(const Array3& a, int axis, std::size_t base) {
    Json out = Json::array();
    const std::size_t step = a.stride(axis);
    for (int t = 0; t < a.n(); ++t) {
        const std::size_t idx = base + static_cast<std::size_t>(t) * step;
        out.push_back(axis == a.d() ? rational_to_json(a[idx]) : nest(a, axis + 1, idx));
    }
    return out;
}

void unnest(const Json& node, Array3& a, int axis, std::size_t base) {
    if (!node.is_array() || static_cast<int>(node.size()) != a.n()) {
        throw std::invalid_argument("entries must be nested arrays of length n, depth d+1");
    }
    const std::size_t step = a.stride(axis);
    for (int t = 0; t < a.n(); ++t) {
        const std::size_t idx = base + static_cast<std::size_t>(t) * step;
        if (axis == a.d()) {
            a[idx] = rational_from_json(node[static_cast<std::size_t>(t)]);
        } else {
            unnest(node[static_cast<std::size_t>(t)], a, axis + 1, idx);
        }
    }
}

}  // namespace

Json array_to_json(const Array3& a, PolytopeKind kind) {
    Json doc;
    doc["kind"] = to_string(kind);
    doc["n"] = a.n();
    doc["d"] = a.d();
    doc["entries"] = nest(a, 0, 0);
    return doc;
}

ArrayDocument array_from_json(const Json& doc) {
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("d") || !doc.contains("entries")) {
        throw std::invalid_argument("array document needs n, d and entries");
    }
    ArrayDocument out;
    out.spec.kind = parse_kind(doc.value("kind", std::string("omega")));
    out.spec.n = doc.at("n").get<int>();
    out.spec.d = doc.at("d").get<int>();
    out.array = Array3(out.spec.n, out.spec.d);
    unnest(doc.at("entries"), out.array, 0, 0);
    return out;
}

std::string serialize(const Array3& a, PolytopeKind kind) { return array_to_json(a, kind).dump(); }

ArrayDocument deserialize(const std::string& text) { return array_from_json(Json::parse(text)); }

ArrayDocument read_array_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw std::ios_base::failure("cannot open " + path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    return deserialize(buffer.str());
}

}  // namespace birkhoff
