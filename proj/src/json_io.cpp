#include "quot/json_io.hpp"

#include <cctype>

namespace quot {

using nlohmann::json;

namespace {

Scalar scalar_from_json(const json& v, Field field) {
    if (v.is_number_integer()) return Scalar(field, v.get<long>());
    if (v.is_string()) return Scalar::parse(field, v.get<std::string>());
    throw UsageError("scalar entries must be integers or strings");
}

json matrix_entries(const ScalarMatrix& m) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

ScalarMatrix matrix_from_entries(const json& entries, Field field, std::size_t rows,
                                 std::size_t cols) {
    if (!entries.is_array() || entries.size() != rows)
        throw UsageError("matrix entries must be an array of " + std::to_string(rows) + " rows");
    ScalarMatrix m(field, rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
        const json& row = entries[i];
        if (!row.is_array() || row.size() != cols)
            throw UsageError("matrix row " + std::to_string(i) + " must have " +
                             std::to_string(cols) + " entries");
        for (std::size_t j = 0; j < cols; ++j) m.at(i, j) = scalar_from_json(row[j], field);
    }
    return m;
}

}  // namespace

json ring_to_json(const Ring& ring) {
    return json{{"vars", ring->vars()},
                {"field", ring->field().str()},
                {"order", ring->order().str()}};
}

Ring ring_from_json(const json& j) {
    Field field = Field::parse(j.at("field").get<std::string>());
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    std::string order = j.value("order", "grevlex");
    MonomialOrder ord;
    if (order == "lex")
        ord = MonomialOrder::lex();
    else if (order == "grevlex")
        ord = MonomialOrder::grevlex();
    else
        throw UsageError("unsupported order '" + order + "' (expected lex or grevlex)");
    return make_ring(field, std::move(vars), std::move(ord));
}

json ideal_to_json(const Ideal& I) {
    json gens = json::array();
    for (const auto& g : I.gens()) gens.push_back(g.str());
    return json{{"ring", ring_to_json(I.ring())}, {"gens", std::move(gens)}};
}

Ideal ideal_from_json(const json& j) {
    Ring ring = ring_from_json(j.at("ring"));
    std::vector<std::string> texts = j.at("gens").get<std::vector<std::string>>();
    return Ideal::parse(ring, texts);
}

json scalar_matrix_to_json(const ScalarMatrix& m) {
    return json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", matrix_entries(m)}};
}

ScalarMatrix scalar_matrix_from_json(const json& j, Field field) {
    std::size_t rows = j.at("rows").get<std::size_t>();
    std::size_t cols = j.at("cols").get<std::size_t>();
    return matrix_from_entries(j.at("entries"), field, rows, cols);
}

json quot_point_to_json(const QuotPoint& pt) {
    json params = json::object();
    for (const auto& [name, value] : pt.params) params[name] = value.str();
    return json{{"d", pt.chart.d()},
                {"r", pt.chart.r()},
                {"chart", pt.chart.parts()},
                {"frame",
                 {{"gl2", matrix_entries(pt.frame.gl2)}, {"glr", matrix_entries(pt.frame.glr)}}},
                {"params", std::move(params)}};
}

QuotPoint quot_point_from_json(const json& j, Field field) {
    unsigned d = j.at("d").get<unsigned>();
    unsigned r = j.at("r").get<unsigned>();
    ChartIndex chart(d, r, j.at("chart").get<std::vector<unsigned>>());
    CoordinateFrame frame = CoordinateFrame::identity(field, r);
    if (j.contains("frame")) {
        const json& fr = j.at("frame");
        if (fr.contains("gl2")) frame.gl2 = matrix_from_entries(fr.at("gl2"), field, 2, 2);
        if (fr.contains("glr")) frame.glr = matrix_from_entries(fr.at("glr"), field, r, r);
    }
    Assignment params;
    for (const auto& [key, value] : j.at("params").items())
        params[key] = scalar_from_json(value, field);
    QuotPoint pt{chart, std::move(frame), std::move(params)};
    pt.validate();
    return pt;
}

json binary_form_to_json(const BinaryForm& f) {
    json coeffs = json::array();
    for (unsigned k = f.degree() + 1; k-- > 0;) coeffs.push_back(f.coeff(k).str());
    return json{{"d", f.degree()}, {"coeffs", std::move(coeffs)}};
}

json pluecker_to_json(const PlueckerVector& pv) {
    json coords = json::array();
    for (const auto& [cols, value] : pv.coords) {
        json c = json::array();
        for (std::size_t idx : cols) c.push_back(idx + 1);  // 1-based columns
        coords.push_back(json{{"cols", std::move(c)}, {"value", value.str()}});
    }
    return json{{"d", pv.d}, {"r", pv.r}, {"coords", std::move(coords)}};
}

json tangent_report_to_json(const TangentReport& rep) {
    json point = json::object();
    for (const auto& [name, value] : rep.point) point[name] = value.str();
    return json{{"ideal", ideal_to_json(rep.ideal)},
                {"point", std::move(point)},
                {"jacobian_rank", rep.jacobian_rank},
                {"tangent_dim", rep.tangent_dim},
                {"krull_dim", rep.dim},
                {"verdict", rep.verdict()}};
}

json fiber_components_to_json(const std::vector<FiberComponent>& comps) {
    json arr = json::array();
    for (const auto& c : comps)
        arr.push_back(json{{"root", c.root_form.str()},
                           {"lambda", c.lambda.str()},
                           {"multiplicity", c.multiplicity},
                           {"point", quot_point_to_json(c.restricted)}});
    return arr;
}

json multiplicity_profile_to_json(const std::vector<RootMultiplicity>& rows) {
    json arr = json::array();
    for (const auto& r : rows)
        arr.push_back(json{{"lambda", r.lambda.str()},
                           {"algebraic", r.algebraic},
                           {"corank", r.corank},
                           {"flagged", r.flagged}});
    return arr;
}

Assignment assignment_from_string(const std::string& text, const Ring& ring) {
    Assignment out;
    const Field field = ring->field();
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        std::string item = text.substr(pos, comma - pos);
        // trim
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.front())))
            item.erase(item.begin());
        while (!item.empty() && std::isspace(static_cast<unsigned char>(item.back())))
            item.pop_back();
        if (!item.empty()) {
            std::size_t eq = item.find('=');
            if (eq == std::string::npos)
                throw UsageError("assignment item '" + item + "' is not var=value");
            std::string name = item.substr(0, eq);
            while (!name.empty() && std::isspace(static_cast<unsigned char>(name.back())))
                name.pop_back();
            if (!ring->find(name)) throw UsageError("unknown variable '" + name + "'");
            out[name] = Scalar::parse(field, item.substr(eq + 1));
        }
        pos = comma + 1;
    }
    for (const auto& v : ring->vars())
        if (!out.count(v)) out[v] = Scalar::zero(field);
    return out;
}

}  // namespace quot
