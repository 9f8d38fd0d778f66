#include "gdbialg/io.hpp"

#include <json.hpp>

#include <sstream>

namespace gdbialg {

using json = nlohmann::json;

ParseError::ParseError(std::string msg, int line_, int col_)
    : std::runtime_error(std::move(msg)), line(line_), column(col_) {}

namespace {

// nlohmann reports a byte offset; turn it into line/column.
[[noreturn]] void rethrow_parse(const std::string& text, const json::parse_error& e) {
    int line = 1, col = 1;
    std::size_t limit = std::min(text.size(), e.byte ? e.byte - 1 : 0);
    for (std::size_t i = 0; i < limit; ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    std::ostringstream os;
    os << "parse error at line " << line << ", column " << col << ": " << e.what();
    throw ParseError(os.str(), line, col);
}

json parse_json(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        rethrow_parse(text, e);
    }
}

[[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, 0, 0); }

Scalar scalar_from(const json& j, const std::string& where) {
    try {
        if (j.is_number_integer()) return Scalar(static_cast<long long>(j.get<long long>()));
        if (j.is_string()) return Scalar::parse(j.get<std::string>());
    } catch (const std::exception& e) {
        fail(where + ": " + e.what());
    }
    fail(where + ": expected an integer or a rational string");
}

json scalar_to(const Scalar& s) { return json(s.str()); }

json entries_to(const BilinearMap& m) {
    json out = json::array();
    for (std::size_t i = 0; i < m.in1(); ++i)
        for (std::size_t j = 0; j < m.in2(); ++j)
            for (std::size_t k = 0; k < m.out(); ++k)
                if (!m.at(i, j, k).is_zero())
                    out.push_back(json::array({i + 1, j + 1, k + 1, m.at(i, j, k).str()}));
    return out;
}

BilinearMap entries_from(const json& j, std::size_t in1, std::size_t in2, std::size_t out,
                         const std::string& where) {
    BilinearMap m(in1, in2, out);
    if (j.is_null()) return m;
    if (!j.is_array()) fail(where + ": expected a list of entries");
    std::vector<bool> seen(in1 * in2 * out, false);
    for (const auto& e : j) {
        if (!e.is_array() || e.size() != 4) fail(where + ": entries are [i, j, k, coeff]");
        if (!e[0].is_number_integer() || !e[1].is_number_integer() || !e[2].is_number_integer())
            fail(where + ": indices must be integers");
        long long i1 = e[0].get<long long>(), i2 = e[1].get<long long>(),
                  i3 = e[2].get<long long>();
        if (i1 < 1 || std::size_t(i1) > in1 || i2 < 1 || std::size_t(i2) > in2 || i3 < 1 ||
            std::size_t(i3) > out)
            fail(where + ": entry index out of range");
        std::size_t flat = ((std::size_t(i1) - 1) * in2 + (std::size_t(i2) - 1)) * out +
                           (std::size_t(i3) - 1);
        if (seen[flat]) fail(where + ": duplicate entry");
        seen[flat] = true;
        m.at(i1 - 1, i2 - 1, i3 - 1) = scalar_from(e[3], where);
    }
    return m;
}

json vector_to(const Vector& v) {
    json out = json::array();
    for (std::size_t i = 0; i < v.dim(); ++i) out.push_back(v[i].str());
    return out;
}

Vector vector_from(const json& j, std::size_t dim, const std::string& where) {
    if (!j.is_array() || j.size() != dim) fail(where + ": expected a list of length dim");
    Vector v(dim);
    for (std::size_t i = 0; i < dim; ++i) v[i] = scalar_from(j[i], where);
    return v;
}

json matrix_to(const LinearMap& m) {
    json out = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.at(r, c).str());
        out.push_back(std::move(row));
    }
    return out;
}

LinearMap matrix_from(const json& j, std::size_t rows, std::size_t cols,
                      const std::string& where) {
    if (!j.is_array() || j.size() != rows) fail(where + ": expected a " + std::to_string(rows) +
                                                "-row matrix");
    LinearMap m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols) fail(where + ": ragged matrix");
        for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = scalar_from(j[r][c], where);
    }
    return m;
}

std::size_t dim_from(const json& j, const char* field) {
    if (!j.contains(field) || !j[field].is_number_integer())
        fail(std::string("missing or invalid '") + field + "'");
    long long d = j[field].get<long long>();
    if (d < 0 || d > 64) fail(std::string("'") + field + "' out of supported range");
    return std::size_t(d);
}

}  // namespace

std::string print_algebra(const GDBialgebra& A) {
    json j;
    j["dim"] = A.dim;
    j["basis"] = A.basis_names.size() == A.dim ? A.basis_names : default_basis_names(A.dim);
    j["product"] = entries_to(A.product);
    j["bracket"] = entries_to(A.bracket);
    return j.dump(2) + "\n";
}

GDBialgebra parse_algebra(const std::string& text) {
    json j = parse_json(text);
    GDBialgebra A;
    A.dim = dim_from(j, "dim");
    if (j.contains("basis")) {
        if (!j["basis"].is_array() || j["basis"].size() != A.dim)
            fail("'basis' must list one name per dimension");
        for (const auto& b : j["basis"]) A.basis_names.push_back(b.get<std::string>());
    } else {
        A.basis_names = default_basis_names(A.dim);
    }
    A.product = entries_from(j.contains("product") ? j["product"] : json(), A.dim, A.dim, A.dim,
                             "product");
    A.bracket = entries_from(j.contains("bracket") ? j["bracket"] : json(), A.dim, A.dim, A.dim,
                             "bracket");
    return A;
}

std::string print_flag_datum(const GDFlagDatum& d) {
    json j;
    std::size_t n = d.dim();
    j["dim"] = n;
    j["p"] = vector_to(d.nov.p.row(0));
    j["q"] = vector_to(d.nov.q.row(0));
    j["eta"] = vector_to(d.eta.row(0));
    j["S"] = matrix_to(d.nov.S);
    j["T"] = matrix_to(d.nov.T);
    j["D"] = matrix_to(d.D);
    j["a1"] = vector_to(d.nov.a1);
    j["k"] = scalar_to(d.nov.k);
    return j.dump(2) + "\n";
}

GDFlagDatum parse_flag_datum(const std::string& text) {
    json j = parse_json(text);
    std::size_t n = dim_from(j, "dim");
    GDFlagDatum d = GDFlagDatum::zero(n);
    auto functional = [&](const char* field) {
        Vector v = vector_from(j.contains(field) ? j[field] : vector_to(Vector(n)), n, field);
        LinearMap m(1, n);
        for (std::size_t i = 0; i < n; ++i) m.at(0, i) = v[i];
        return m;
    };
    d.nov.p = functional("p");
    d.nov.q = functional("q");
    d.eta = functional("eta");
    d.nov.S = j.contains("S") ? matrix_from(j["S"], n, n, "S") : LinearMap::zero(n, n);
    d.nov.T = j.contains("T") ? matrix_from(j["T"], n, n, "T") : LinearMap::zero(n, n);
    d.D = j.contains("D") ? matrix_from(j["D"], n, n, "D") : LinearMap::zero(n, n);
    d.nov.a1 = j.contains("a1") ? vector_from(j["a1"], n, "a1") : Vector(n);
    d.nov.k = j.contains("k") ? scalar_from(j["k"], "k") : Scalar(0);
    return d;
}

std::string print_extending_datum(const GDExtendingDatum& d) {
    json j;
    j["dimA"] = d.dimA();
    j["dimV"] = d.dimV();
    j["l_A"] = entries_to(d.novikov.l_A);
    j["r_A"] = entries_to(d.novikov.r_A);
    j["l_V"] = entries_to(d.novikov.l_V);
    j["r_V"] = entries_to(d.novikov.r_V);
    j["f"] = entries_to(d.novikov.f);
    j["ast"] = entries_to(d.novikov.star);
    j["triangle_l"] = entries_to(d.lie.tri_l);
    j["triangle_r"] = entries_to(d.lie.tri_r);
    j["h"] = entries_to(d.lie.h);
    j["curly"] = entries_to(d.lie.curly);
    return j.dump(2) + "\n";
}

GDExtendingDatum parse_extending_datum(const std::string& text) {
    json j = parse_json(text);
    std::size_t nA = dim_from(j, "dimA"), nV = dim_from(j, "dimV");
    GDExtendingDatum d = GDExtendingDatum::zero(nA, nV);
    auto grab = [&](const char* field, std::size_t i1, std::size_t i2, std::size_t o) {
        return entries_from(j.contains(field) ? j[field] : json(), i1, i2, o, field);
    };
    d.novikov.l_A = grab("l_A", nA, nV, nV);
    d.novikov.r_A = grab("r_A", nA, nV, nV);
    d.novikov.l_V = grab("l_V", nV, nA, nA);
    d.novikov.r_V = grab("r_V", nV, nA, nA);
    d.novikov.f = grab("f", nV, nV, nA);
    d.novikov.star = grab("ast", nV, nV, nV);
    d.lie.tri_l = grab("triangle_l", nV, nA, nV);
    d.lie.tri_r = grab("triangle_r", nV, nA, nA);
    d.lie.h = grab("h", nV, nV, nA);
    d.lie.curly = grab("curly", nV, nV, nV);
    return d;
}

FileKind classify_document(const std::string& text) {
    json j = parse_json(text);
    if (j.contains("dimA") && j.contains("dimV")) return FileKind::ExtendingDatum;
    if (j.contains("S") || j.contains("T") || j.contains("p")) return FileKind::FlagDatum;
    if (j.contains("dim")) return FileKind::Algebra;
    fail("unrecognized document: expected an algebra, flag-datum or extending-datum file");
}

std::string render_report_text(const std::string& check_name, const ValidationReport& rep,
                               const std::vector<std::string>& basis_names) {
    std::ostringstream os;
    os << "check: " << check_name << "\n";
    os << "result: " << (rep.pass() ? "PASS" : "FAIL") << "\n";
    if (!rep.pass()) {
        os << "violations: " << rep.violations.size() << "\n";
        for (const auto& v : rep.violations) {
            os << "  [" << v.condition << "] at (";
            for (std::size_t i = 0; i < v.indices.size(); ++i) {
                if (i) os << ", ";
                std::size_t ix = v.indices[i];
                if (ix < basis_names.size())
                    os << basis_names[ix];
                else
                    os << (ix + 1);
            }
            os << "): residual = " << v.residual.str();
            if (!v.detail.empty()) os << " at " << v.detail;
            os << "\n";
        }
    }
    return os.str();
}

std::string render_report_machine(const std::string& check_name, const ValidationReport& rep) {
    json j;
    j["check"] = check_name;
    j["pass"] = rep.pass();
    json vs = json::array();
    for (const auto& v : rep.violations) {
        json jv;
        jv["condition"] = v.condition;
        json idx = json::array();
        for (auto i : v.indices) idx.push_back(i + 1);
        jv["indices"] = idx;
        jv["residual"] = vector_to(v.residual);
        if (!v.detail.empty()) jv["detail"] = v.detail;
        vs.push_back(std::move(jv));
    }
    j["violations"] = vs;
    return j.dump(2) + "\n";
}

}  // namespace gdbialg
