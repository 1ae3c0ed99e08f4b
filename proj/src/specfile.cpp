#include "pkroots/specfile.hpp"

#include <fstream>

namespace pkroots {

namespace {
[[noreturn]] void reject(const std::string& where, const std::string& what) {
    throw validation_error(where + ": " + what);
}
} // namespace

Scalar scalar_from_json(const Field& f, const ordered_json& v, const std::string& where) {
    if (v.is_number_integer())
        return Scalar::of_mpz(f, mpz_class(long(v.get<long long>())));
    if (v.is_string()) {
        const std::string s = v.get<std::string>();
        try {
            size_t slash = s.find('/');
            if (slash == std::string::npos) {
                mpz_class z(s);
                return Scalar::of_mpz(f, z);
            }
            if (!f.is_rational())
                reject(where, "fractional entries are not valid over " + f.str());
            mpz_class num(s.substr(0, slash)), den(s.substr(slash + 1));
            if (den == 0) reject(where, "zero denominator");
            return Scalar::rational(num, den);
        } catch (const std::invalid_argument&) {
            reject(where, "expected an integer or a 'p/q' string, got '" + s + "'");
        }
    }
    reject(where, "expected an integer or a 'p/q' string");
}

ordered_json scalar_to_json(const Scalar& s) {
    if (s.field().is_rational()) {
        const mpq_class& q = s.rat();
        if (q.get_den() == 1 && q.get_num().fits_slong_p())
            return ordered_json(q.get_num().get_si());
        return ordered_json(q.get_str());
    }
    return ordered_json(s.residue());
}

Matrix matrix_from_json(const Field& f, const ordered_json& v, const std::string& where) {
    if (!v.is_array() || v.empty()) reject(where, "expected a non-empty array of rows");
    int rows = int(v.size());
    int cols = -1;
    for (int i = 0; i < rows; ++i) {
        if (!v[size_t(i)].is_array())
            reject(where + "[" + std::to_string(i) + "]", "expected a row array");
        if (cols < 0) cols = int(v[size_t(i)].size());
        if (int(v[size_t(i)].size()) != cols)
            reject(where + "[" + std::to_string(i) + "]", "ragged row");
    }
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j)
            m(i, j) = scalar_from_json(
                f, v[size_t(i)][size_t(j)],
                where + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
    return m;
}

ordered_json matrix_to_json(const Matrix& m) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < m.rows(); ++i) {
        ordered_json row = ordered_json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(scalar_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

ordered_json vec_to_json(const Vec& v) {
    ordered_json out = ordered_json::array();
    for (const auto& s : v) out.push_back(scalar_to_json(s));
    return out;
}

Vec vec_from_json(const Field& f, const ordered_json& v, const std::string& where) {
    if (!v.is_array()) reject(where, "expected an array");
    Vec out;
    for (size_t i = 0; i < v.size(); ++i)
        out.push_back(scalar_from_json(f, v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

GroupSpec parse_group_spec(const ordered_json& doc) {
    if (!doc.is_object()) reject("(document)", "expected a JSON object");
    GroupSpec spec;
    if (!doc.contains("field")) reject("field", "missing");
    const auto& fld = doc["field"];
    if (fld.is_string() && fld.get<std::string>() == "Q") {
        spec.field = Field::Q();
    } else if (fld.is_object() && fld.contains("Fp")) {
        if (!fld["Fp"].is_number_integer()) reject("field.Fp", "expected an integer prime");
        spec.field = Field::Fp(fld["Fp"].get<long>());
    } else {
        reject("field", "expected \"Q\" or {\"Fp\": p}");
    }
    if (!doc.contains("dim") || !doc["dim"].is_number_integer())
        reject("dim", "expected a positive integer");
    spec.dim = doc["dim"].get<int>();
    if (spec.dim < 1) reject("dim", "expected a positive integer");

    if (!doc.contains("generators") || !doc["generators"].is_array())
        reject("generators", "expected an array of matrices");
    for (size_t i = 0; i < doc["generators"].size(); ++i)
        spec.generators.push_back(matrix_from_json(
            spec.field, doc["generators"][i], "generators[" + std::to_string(i) + "]"));

    if (doc.contains("lie_algebra")) {
        if (!doc["lie_algebra"].is_array()) reject("lie_algebra", "expected an array of matrices");
        for (size_t i = 0; i < doc["lie_algebra"].size(); ++i)
            spec.lie_algebra.push_back(matrix_from_json(
                spec.field, doc["lie_algebra"][i], "lie_algebra[" + std::to_string(i) + "]"));
    } else if (spec.field.is_rational()) {
        reject("lie_algebra", "characteristic-0 specs must supply the Lie algebra of the "
                              "unipotent part (may be an empty list)");
    }

    if (doc.contains("enumeration_cap")) {
        if (!doc["enumeration_cap"].is_number_integer() || doc["enumeration_cap"].get<long>() < 1)
            reject("enumeration_cap", "expected a positive integer");
        spec.enumeration_cap = doc["enumeration_cap"].get<long>();
    }
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) reject("name", "expected a string");
        spec.name = doc["name"].get<std::string>();
    }
    return spec;
}

GroupSpec load_group_spec(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw validation_error("cannot open spec file: " + path);
    ordered_json doc;
    try {
        doc = ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(path + ": " + e.what());
    }
    try {
        return parse_group_spec(doc);
    } catch (validation_error& e) {
        throw validation_error(path + ": " + e.what());
    }
}

ordered_json serialize_group_spec(const GroupSpec& spec) {
    ordered_json doc;
    if (!spec.name.empty()) doc["name"] = spec.name;
    if (spec.field.is_rational())
        doc["field"] = "Q";
    else
        doc["field"] = ordered_json{{"Fp", spec.field.p}};
    doc["dim"] = spec.dim;
    ordered_json gens = ordered_json::array();
    for (const auto& g : spec.generators) gens.push_back(matrix_to_json(g));
    doc["generators"] = std::move(gens);
    if (spec.field.is_rational()) {
        ordered_json lie = ordered_json::array();
        for (const auto& x : spec.lie_algebra) lie.push_back(matrix_to_json(x));
        doc["lie_algebra"] = std::move(lie);
    }
    doc["enumeration_cap"] = spec.enumeration_cap;
    return doc;
}

} // namespace pkroots
