#include "gca/serialize.hpp"

#include "gca/errors.hpp"

#include <fstream>
#include <sstream>

namespace gca {

namespace {

[[noreturn]] void schema(const std::string& path, const std::string& msg) { throw SchemaError(path + ": " + msg); }

const Json& field(const Json& j, const char* key, const std::string& path) {
    if (!j.is_object()) schema(path, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) schema(path, std::string("missing field '") + key + "'");
    return *it;
}

long long as_int(const Json& j, const std::string& path) {
    if (!j.is_number_integer()) schema(path, "expected an integer");
    return j.get<long long>();
}

std::size_t as_index(const Json& j, const std::string& path) {
    const long long v = as_int(j, path);
    if (v < 0) schema(path, "expected a nonnegative index");
    return static_cast<std::size_t>(v);
}

Json integer_json(const mpz_class& z) {
    if (z.fits_slong_p()) return Json(z.get_si());
    return Json(z.get_str());
}

mpz_class integer_from(const Json& j, const std::string& path) {
    if (j.is_number_integer()) return mpz_class(std::to_string(j.get<long long>()));
    if (j.is_string()) {
        mpz_class z;
        if (z.set_str(j.get<std::string>(), 10) != 0) schema(path, "malformed integer string");
        return z;
    }
    schema(path, "expected an integer or an integer string");
}

mpq_class rational_from(const Json& obj, const char* num, const char* den, const std::string& path) {
    const mpz_class n = integer_from(field(obj, num, path), path + "." + num);
    mpz_class d = 1;
    if (obj.contains(den)) d = integer_from(obj[den], path + "." + den);
    if (d == 0) schema(path, std::string("zero denominator in '") + den + "'");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
}

Json bits_json(const Degree& d) { return Json(d.coords()); }

Degree degree_from(const Json& j, int width, const std::string& path) {
    if (!j.is_array()) schema(path, "expected a 0/1 array");
    if (static_cast<int>(j.size()) != width)
        schema(path, "degree has " + std::to_string(j.size()) + " coordinates, width is " + std::to_string(width));
    std::vector<int> c;
    for (std::size_t k = 0; k < j.size(); ++k) {
        const long long v = as_int(j[k], path + "[" + std::to_string(k) + "]");
        if (v != 0 && v != 1) schema(path, "degree coordinates must be 0 or 1");
        c.push_back(static_cast<int>(v));
    }
    return Degree::from_bits(c);
}

std::vector<std::vector<int>> int_matrix(const Json& j, const std::string& path) {
    if (!j.is_array()) schema(path, "expected a matrix");
    std::vector<std::vector<int>> m;
    for (std::size_t r = 0; r < j.size(); ++r) {
        if (!j[r].is_array()) schema(path + "[" + std::to_string(r) + "]", "expected a row");
        std::vector<int> row;
        for (std::size_t c = 0; c < j[r].size(); ++c)
            row.push_back(static_cast<int>(as_int(j[r][c], path + "[" + std::to_string(r) + "][" + std::to_string(c) + "]")));
        m.push_back(std::move(row));
    }
    return m;
}

Json terms_json(const GradedAlgebra& a, const Product& p) {
    Json out = Json::array();
    for (const auto& t : p) {
        Json term = {{"k", t.index}, {"label", a.basis(t.index).label}};
        const Json s = scalar_to_json(t.coeff, a.field());
        for (const auto& [key, v] : s.items()) term[key] = v;
        out.push_back(std::move(term));
    }
    return out;
}

std::size_t display_width(const std::string& s) {
    std::size_t w = 0;
    for (unsigned char c : s)
        if ((c & 0xC0) != 0x80) ++w;
    return w;
}

std::string pad(const std::string& s, std::size_t width) {
    const std::size_t w = display_width(s);
    return s + std::string(width > w ? width - w : 0, ' ');
}

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

}  // namespace

Json to_json(const BilinearFormZ2& f) {
    Json j;
    switch (f.kind()) {
    case BilinearFormZ2::Kind::ScalarProduct: j["kind"] = "scalar"; break;
    case BilinearFormZ2::Kind::AlbuquerqueMajid: j["kind"] = "am"; break;
    case BilinearFormZ2::Kind::Custom: j["kind"] = "custom"; break;
    }
    j["width"] = f.width();
    if (f.kind() == BilinearFormZ2::Kind::Custom) j["matrix"] = f.matrix();
    return j;
}

BilinearFormZ2 form_from_json(const Json& j) {
    const std::string path = "form";
    const Json& kind = field(j, "kind", path);
    if (!kind.is_string()) schema(path + ".kind", "expected a string");
    const std::string k = kind.get<std::string>();
    if (k == "custom") {
        const auto m = int_matrix(field(j, "matrix", path), path + ".matrix");
        if (j.contains("width") && as_int(j["width"], path + ".width") != static_cast<long long>(m.size()))
            schema(path + ".width", "does not match the matrix size");
        try {
            return BilinearFormZ2::custom(m);
        } catch (const DimensionError& e) {
            schema(path + ".matrix", e.what());
        }
    }
    if (k != "scalar" && k != "am") schema(path + ".kind", "unknown form kind '" + k + "'");
    const long long w = as_int(field(j, "width", path), path + ".width");
    if (w < 0 || w > kMaxDegreeWidth) schema(path + ".width", "outside [0, 64]");
    return k == "scalar" ? BilinearFormZ2::scalar_product(static_cast<int>(w))
                         : BilinearFormZ2::albuquerque_majid(static_cast<int>(w));
}

Json to_json(const FgGroupSpec& s) { return {{"moduli", s.moduli}, {"beta", s.beta}}; }

FgGroupSpec group_spec_from_json(const Json& j) {
    FgGroupSpec s;
    const Json& moduli = field(j, "moduli", "spec");
    if (!moduli.is_array()) schema("spec.moduli", "expected an array");
    for (std::size_t k = 0; k < moduli.size(); ++k) {
        const long long m = as_int(moduli[k], "spec.moduli[" + std::to_string(k) + "]");
        if (m < 0) schema("spec.moduli[" + std::to_string(k) + "]", "moduli are nonnegative");
        s.moduli.push_back(static_cast<std::uint64_t>(m));
    }
    s.beta = int_matrix(field(j, "beta", "spec"), "spec.beta");
    return s;
}

Json to_json(const GroupReduction& r) {
    Json images = Json::array();
    for (const auto& d : r.generator_images) images.push_back(bits_json(d));
    return {{"target_width", r.target_width},
            {"generator_images", images},
            {"kept_generators", r.kept_generators},
            {"induced_form", to_json(r.induced_form)}};
}

Json to_json(const ReductionMap& r) {
    Json images = Json::array();
    for (const auto& d : r.images) images.push_back(bits_json(d));
    return {{"n", r.source_rank}, {"N", r.target_width}, {"sigma", images}};
}

Json scalar_to_json(const Scalar& s, Field f) {
    Json j = {{"num", integer_json(s.re().get_num())}, {"den", integer_json(s.re().get_den())}};
    if (f == Field::Gaussian) {
        j["im_num"] = integer_json(s.im().get_num());
        j["im_den"] = integer_json(s.im().get_den());
    }
    return j;
}

Scalar scalar_from_json(const Json& j, const std::string& path) {
    const mpq_class re = rational_from(j, "num", "den", path);
    mpq_class im = 0;
    if (j.contains("im_num")) im = rational_from(j, "im_num", "im_den", path);
    return {re, im};
}

Json to_json(const GradedAlgebra& a) {
    Json j;
    j["field"] = std::string(field_name(a.field()));
    j["width"] = a.width();
    Json basis = Json::array();
    for (const auto& b : a.basis()) basis.push_back({{"label", b.label}, {"degree", bits_json(b.degree)}});
    j["basis"] = basis;
    j["unit"] = a.unit() ? Json(*a.unit()) : Json(nullptr);
    j["form"] = to_json(a.form());
    Json cs = Json::array();
    for (const auto& c : a.constants()) {
        Json terms = Json::array();
        for (const auto& t : c.terms) {
            Json term = {{"k", t.index}};
            const Json s = scalar_to_json(t.coeff, a.field());
            for (const auto& [key, v] : s.items()) term[key] = v;
            terms.push_back(std::move(term));
        }
        cs.push_back({{"i", c.i}, {"j", c.j}, {"terms", terms}});
    }
    j["constants"] = cs;
    return j;
}

GradedAlgebra algebra_from_json(const Json& j) {
    const std::string root = "algebra";
    const Json& f = field(j, "field", root);
    if (!f.is_string() || (f != "Q" && f != "Qi")) schema(root + ".field", "must be \"Q\" or \"Qi\"");
    const Field fld = f == "Q" ? Field::Rational : Field::Gaussian;
    const long long width = as_int(field(j, "width", root), root + ".width");
    if (width < 0 || width > kMaxDegreeWidth) schema(root + ".width", "outside [0, 64]");
    const int w = static_cast<int>(width);

    const Json& basis_j = field(j, "basis", root);
    if (!basis_j.is_array()) schema(root + ".basis", "expected an array");
    std::vector<BasisVector> basis;
    for (std::size_t b = 0; b < basis_j.size(); ++b) {
        const std::string p = root + ".basis[" + std::to_string(b) + "]";
        const Json& label = field(basis_j[b], "label", p);
        if (!label.is_string()) schema(p + ".label", "expected a string");
        basis.push_back({label.get<std::string>(), degree_from(field(basis_j[b], "degree", p), w, p + ".degree")});
    }

    std::optional<std::size_t> unit;
    if (j.contains("unit") && !j["unit"].is_null()) unit = as_index(j["unit"], root + ".unit");

    BilinearFormZ2 form = j.contains("form") ? form_from_json(j["form"]) : BilinearFormZ2::scalar_product(w);

    std::vector<StructureConstant> cs;
    const Json& cj = field(j, "constants", root);
    if (!cj.is_array()) schema(root + ".constants", "expected an array");
    for (std::size_t c = 0; c < cj.size(); ++c) {
        const std::string p = root + ".constants[" + std::to_string(c) + "]";
        StructureConstant sc{as_index(field(cj[c], "i", p), p + ".i"), as_index(field(cj[c], "j", p), p + ".j"), {}};
        const Json& terms = field(cj[c], "terms", p);
        if (!terms.is_array()) schema(p + ".terms", "expected an array");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tp = p + ".terms[" + std::to_string(t) + "]";
            sc.terms.push_back({as_index(field(terms[t], "k", tp), tp + ".k"), scalar_from_json(terms[t], tp)});
        }
        cs.push_back(std::move(sc));
    }
    return GradedAlgebra::make(fld, w, std::move(basis), cs, std::move(form), unit);
}

GradedAlgebra load_algebra(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open algebra file '" + path + "'");
    Json j;
    try {
        j = Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw SchemaError("malformed JSON in '" + path + "': " + e.what());
    }
    return algebra_from_json(j);
}

void save_algebra(const GradedAlgebra& a, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw SchemaError("cannot write algebra file '" + path + "'");
    out << to_json(a).dump(2) << "\n";
}

Json element_to_json(const GradedAlgebra& a, const Element& x) {
    Json out = Json::array();
    for (const auto& [k, c] : x.coefficients()) {
        Json term = {{"k", k}, {"label", a.basis(k).label}};
        const Json s = scalar_to_json(c, a.field());
        for (const auto& [key, v] : s.items()) term[key] = v;
        out.push_back(std::move(term));
    }
    return out;
}

Json to_json(const GradedAlgebra& a, const CheckReport& r) {
    Json v = Json::array();
    for (const auto& x : r.violations)
        v.push_back({{"i", x.i}, {"j", x.j}, {"row", a.basis(x.i).label}, {"col", a.basis(x.j).label}, {"detail", x.detail}});
    return {{"passed", r.passed()}, {"violations", v}};
}

Json to_json(const GradedAlgebra& a, const SimplicityVerdict& v) {
    Json j = {{"status", std::string(status_name(v.status))}, {"reason", v.reason}};
    if (v.witness) j["witness"] = element_to_json(a, *v.witness);
    if (v.witness) j["witness_text"] = render(a, *v.witness);
    if (v.ideal_dim) j["ideal_dim"] = *v.ideal_dim;
    if (v.trials) j["trials"] = *v.trials;
    return j;
}

Json matrix_to_json(const Matrix& m, Field f) {
    Json entries = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            if (m(r, c).is_zero()) continue;
            Json e = {{"row", r}, {"col", c}};
            const Json s = scalar_to_json(m(r, c), f);
            for (const auto& [key, v] : s.items()) e[key] = v;
            entries.push_back(std::move(e));
        }
    return {{"rows", m.rows()}, {"cols", m.cols()}, {"entries", entries}};
}

Json to_json(const GradedAlgebra& a, const DerivationSpace& d) {
    Json sectors = Json::object();
    for (const auto& s : d.sectors) {
        Json list = Json::array();
        for (const auto& t : s.basis) list.push_back(matrix_to_json(t.matrix, a.field()));
        sectors[s.degree.bitstring()] = list;
    }
    return {{"even_dim", d.even_dim}, {"odd_dim", d.odd_dim}, {"sectors", sectors}};
}

Json to_json(const GradedAlgebra& a, const UnitalExtension& u) {
    Json disc = Json::array();
    for (const auto& d : u.discrepancies)
        disc.push_back({{"row", a.basis(d.i).label},
                        {"col", a.basis(d.j).label},
                        {"reference", render(a, Element::from_terms(d.reference))},
                        {"derived", render(a, Element::from_terms(d.derived))}});
    return {{"discrepancies", disc}, {"rejected_entries", u.rejected}};
}

std::string emit_table(const GradedAlgebra& a, TableFormat format) {
    const std::size_t n = a.dim();
    if (format == TableFormat::Json) {
        Json labels = Json::array();
        for (const auto& b : a.basis()) labels.push_back(b.label);
        Json rows = Json::array();
        for (std::size_t i = 0; i < n; ++i) {
            Json row = Json::array();
            for (std::size_t j = 0; j < n; ++j) row.push_back(terms_json(a, a.product(i, j)));
            rows.push_back(std::move(row));
        }
        return Json{{"field", std::string(field_name(a.field()))}, {"labels", labels}, {"entries", rows}}.dump(2) + "\n";
    }
    std::vector<std::vector<std::string>> cells(n + 1, std::vector<std::string>(n + 1));
    cells[0][0] = "*";
    for (std::size_t i = 0; i < n; ++i) {
        cells[0][i + 1] = a.basis(i).label;
        cells[i + 1][0] = a.basis(i).label;
        for (std::size_t j = 0; j < n; ++j) cells[i + 1][j + 1] = render(a, Element::from_terms(a.product(i, j)));
    }
    std::ostringstream out;
    if (format == TableFormat::Csv) {
        for (const auto& row : cells) {
            for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_cell(row[c]);
            out << "\n";
        }
        return out.str();
    }
    std::vector<std::size_t> width(n + 1, 0);
    for (const auto& row : cells)
        for (std::size_t c = 0; c <= n; ++c) width[c] = std::max(width[c], display_width(row[c]));
    for (std::size_t r = 0; r <= n; ++r) {
        std::string line;
        for (std::size_t c = 0; c <= n; ++c) {
            line += pad(cells[r][c], width[c]);
            line += c == 0 ? " | " : (c < n ? "  " : "");
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
        if (r == 0) {
            std::size_t total = 0;
            for (std::size_t c = 0; c <= n; ++c) total += width[c] + (c == 0 ? 3 : 2);
            out << std::string(total - 2, '-') << "\n";
        }
    }
    return out.str();
}

}  // namespace gca
