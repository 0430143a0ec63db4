#include "ncalg/io.hpp"

#include "ncalg/errors.hpp"

#include <fstream>
#include <sstream>

namespace ncalg {

namespace {

// 1-based line/column of a byte offset.
std::pair<std::size_t, std::size_t> locate(std::string_view text, std::size_t offset) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

const json& field(const json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end()) throw ShapeError(std::string("algebra document lacks \"") + key + "\"");
    return *it;
}

} // namespace

json scalar_to_json(const Scalar& s) {
    if (s.is_float()) return s.to_double() + 0.0;  // drops -0
    const mpq_class& q = s.as_rational();
    if (q.get_den() == 1 && q.get_num().fits_slong_p()) return q.get_num().get_si();
    return q.get_str();
}

Scalar scalar_from_json(const json& j) {
    if (j.is_number_integer()) return Scalar(j.get<long>());
    if (j.is_number_float()) return Scalar(j.get<double>());
    if (j.is_string()) {
        try {
            return Scalar::parse(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw ShapeError(std::string("bad scalar: ") + e.what());
        }
    }
    throw ShapeError("scalar must be a number or a \"p/q\" string, got " + j.dump());
}

Algebra load_algebra(std::string_view document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& e) {
        auto [line, col] = locate(document, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError(e.what(), line, col);
    }
    if (!doc.is_object()) throw ShapeError("algebra document must be a JSON object");

    const std::string name = doc.value("name", std::string("unnamed"));
    const json& dim_j = field(doc, "dim");
    if (!dim_j.is_number_integer() || dim_j.get<long>() <= 0) throw ShapeError("\"dim\" must be a positive integer");
    const auto n = static_cast<std::size_t>(dim_j.get<long>());

    const json& basis_j = field(doc, "basis_labels");
    if (!basis_j.is_array() || basis_j.size() != n)
        throw ShapeError("\"basis_labels\" must list exactly " + std::to_string(n) + " labels");
    std::vector<std::string> labels;
    for (const auto& b : basis_j) {
        if (!b.is_string()) throw ShapeError("basis labels must be strings");
        labels.push_back(b.get<std::string>());
    }

    std::optional<std::size_t> unit;
    if (auto it = doc.find("unit_index"); it != doc.end() && !it->is_null()) {
        if (!it->is_number_integer()) throw ShapeError("\"unit_index\" must be an integer or null");
        if (it->get<long>() != 0) throw ShapeError("\"unit_index\" must be 0 when present (unit is basis vector e_0)");
        unit = 0;
    }
    const bool associative = doc.value("associative", false);

    const json& c = field(doc, "constants");
    if (!c.is_array() || c.size() != n)
        throw ShapeError("\"constants\" must have shape " + std::to_string(n) + "x" + std::to_string(n) + "x" +
                         std::to_string(n) + " (outer length " + std::to_string(c.is_array() ? c.size() : 0) + ")");
    std::vector<Scalar> constants;
    constants.reserve(n * n * n);
    for (std::size_t k = 0; k < n; ++k) {
        if (!c[k].is_array() || c[k].size() != n)
            throw ShapeError("constants[" + std::to_string(k) + "] must have length " + std::to_string(n));
        for (std::size_t l = 0; l < n; ++l) {
            const json& row = c[k][l];
            if (!row.is_array() || row.size() != n)
                throw ShapeError("constants[" + std::to_string(k) + "][" + std::to_string(l) + "] must have length " +
                                 std::to_string(n));
            for (const auto& v : row) constants.push_back(scalar_from_json(v));
        }
    }
    return make_algebra(name, std::move(labels), std::move(constants), unit, associative);
}

Algebra load_algebra_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open algebra spec '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return load_algebra(ss.str());
}

json algebra_to_json(const AlgebraSpec& spec) {
    const std::size_t n = spec.dim();
    json constants = json::array();
    for (std::size_t k = 0; k < n; ++k) {
        json rows = json::array();
        for (std::size_t l = 0; l < n; ++l) {
            json row = json::array();
            for (std::size_t p = 0; p < n; ++p) row.push_back(scalar_to_json(spec.c(k, l, p)));
            rows.push_back(std::move(row));
        }
        constants.push_back(std::move(rows));
    }
    json doc;
    doc["name"] = spec.name();
    doc["dim"] = n;
    doc["basis_labels"] = spec.basis_labels();
    doc["unit_index"] = spec.unit_index() ? json(*spec.unit_index()) : json(nullptr);
    doc["associative"] = spec.flagged_associative();
    doc["constants"] = std::move(constants);
    return doc;
}

Algebra resolve_algebra(const std::string& source) {
    if (source == "quaternion" || source == "H") return builtin_quaternion();
    if (source == "complex" || source == "C") return builtin_complex();
    return load_algebra_file(source);
}

json element_to_json(const Element& x) {
    json out = json::array();
    for (const auto& c : x.coords()) out.push_back(scalar_to_json(c));
    return out;
}

json polynomial_to_json(const NcPolynomial& p) {
    json out = json::array();
    const NcPolynomial canon = p.canonical();
    for (const auto& m : canon.monomials()) {
        json chain = json::array();
        for (const auto& a : m.coeffs()) chain.push_back(element_to_json(a));
        out.push_back(std::move(chain));
    }
    return out;
}

NcPolynomial polynomial_from_json(const Algebra& algebra, const json& j) {
    if (!j.is_array()) throw ShapeError("polynomial must be a list of monomials");
    std::vector<Monomial> monos;
    for (const auto& chain : j) {
        if (!chain.is_array() || chain.empty()) throw ShapeError("monomial must be a non-empty list of coordinate tuples");
        std::vector<Element> coeffs;
        for (const auto& tuple : chain) {
            if (!tuple.is_array()) throw ShapeError("coefficient must be a coordinate tuple");
            std::vector<Scalar> coords;
            for (const auto& v : tuple) coords.push_back(scalar_from_json(v));
            coeffs.emplace_back(algebra, std::move(coords));
        }
        monos.emplace_back(std::move(coeffs));
    }
    return NcPolynomial(algebra, std::move(monos));
}

json rootset_to_json(const RootSet& roots, std::size_t samples, std::uint64_t seed) {
    json out;
    out["variant"] = std::string(roots.variant_name());
    if (const auto* f = roots.finite()) {
        json list = json::array();
        for (const auto& r : f->roots) {
            json item;
            item["x"] = element_to_json(r.value);
            item["multiplicity"] = r.multiplicity;
            list.push_back(std::move(item));
        }
        out["roots"] = std::move(list);
    } else if (const auto* s = roots.sphere()) {
        out["center"] = element_to_json(s->center);
        out["radius"] = scalar_to_json(s->radius);
        if (samples > 0) {
            json members = json::array();
            for (const auto& m : s->sample(samples, seed)) members.push_back(element_to_json(m));
            out["samples"] = std::move(members);
        }
    } else if (const auto* a = roots.affine()) {
        out["particular"] = element_to_json(a->particular);
        json basis = json::array();
        for (const auto& b : a->basis) basis.push_back(element_to_json(b));
        out["basis"] = std::move(basis);
    }
    return out;
}

json division_to_json(const DivisionResult& result) {
    json terms = json::array();
    for (const auto& t : result.quotient_terms) {
        json chain = json::array();
        for (const auto& a : t.prefix.coeffs()) chain.push_back(element_to_json(a));
        json item;
        item["prefix"] = std::move(chain);
        item["right"] = element_to_json(t.right);
        terms.push_back(std::move(item));
    }
    json out;
    out["quotient"] = std::move(terms);
    out["remainder"] = element_to_json(result.remainder);
    return out;
}

} // namespace ncalg
