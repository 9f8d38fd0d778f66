#include "gdbialg/catalog.hpp"

#include <stdexcept>

namespace gdbialg {

namespace {

Scalar get(const ParamMap& params, const std::string& name) {
    auto it = params.find(name);
    if (it == params.end())
        throw std::invalid_argument("catalog: missing parameter '" + name + "'");
    return it->second;
}

Scalar get_or(const ParamMap& params, const std::string& name, Scalar fallback) {
    auto it = params.find(name);
    return it == params.end() ? fallback : it->second;
}

LinearMap mat2(Scalar r0c0, Scalar r0c1, Scalar r1c0, Scalar r1c1) {
    return LinearMap::from_rows({{r0c0, r0c1}, {r1c0, r1c1}});
}

LinearMap functional2(Scalar on_L, Scalar on_W) {
    return LinearMap::from_rows({{on_L, on_W}});
}

GDBialgebra w1b(const Scalar& b) {
    GDBialgebra A;
    A.dim = 2;
    A.basis_names = {"L", "W"};
    A.product = BilinearMap(2, 2, 2);
    // L o L = L, W o L = W (L = e0, W = e1)
    A.product.at(0, 0, 0) = Scalar(1);
    A.product.at(1, 0, 1) = Scalar(1);
    A.bracket = BilinearMap(2, 2, 2);
    // [L, W] = -b W
    A.bracket.at(0, 1, 1) = -b;
    A.bracket.at(1, 0, 1) = b;
    return A;
}

bool is_a_case(const std::string& id) { return id.size() == 2 && id[0] == 'A'; }
bool is_b_case(const std::string& id) { return id.size() == 2 && id[0] == 'B'; }

}  // namespace

std::vector<std::string> catalog_ids() {
    return {"W(1,b)", "A1", "A2", "A3", "A4", "A5", "B1", "B2", "B3", "B4", "B5"};
}

std::vector<std::string> catalog_param_names(const std::string& id) {
    if (id == "W(1,b)") return {"b"};
    if (id == "A1" || id == "A2" || id == "A4") return {"b", "b1", "b2"};
    if (id == "A3") return {"b", "b1", "b2", "b3", "b4"};
    if (id == "A5") return {"b", "b1", "k"};
    if (id == "B1") return {"b1", "b2", "b3", "b4"};
    if (id == "B2" || id == "B4" || id == "B5") return {"b1", "b2", "b3"};
    if (id == "B3") return {"b1", "b2", "k"};
    throw std::invalid_argument("catalog: unknown id '" + id + "'");
}

GDBialgebra catalog_algebra(const std::string& id, const ParamMap& params) {
    if (id == "W(1,b)") return w1b(get(params, "b"));
    throw std::invalid_argument("catalog: '" + id + "' is not an algebra entry");
}

GDBialgebra catalog_ambient(const std::string& id, const ParamMap& params) {
    if (id == "W(1,b)") return w1b(get(params, "b"));
    if (is_a_case(id)) return w1b(get(params, "b"));
    if (is_b_case(id)) return w1b(Scalar(0));
    throw std::invalid_argument("catalog: unknown id '" + id + "'");
}

GDFlagDatum catalog_flag_datum(const std::string& id, const ParamMap& params) {
    GDFlagDatum d = GDFlagDatum::zero(2);
    const Scalar zero(0), one(1), half(1, 2);

    if (id == "A1") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        d.nov.p = functional2(one, zero);
        d.nov.q = functional2(one, zero);
        d.nov.T = mat2(zero, zero, b2, b1);
        d.nov.a1 = Vector{b1 * b1, -b1 * b2};
        d.D = mat2(zero, zero, -b * b2, -b * b1);
        return d;
    }
    if (id == "A2") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        d.nov.p = functional2(half, zero);
        d.nov.q = functional2(one, zero);
        d.nov.T = mat2(zero, zero, b1, zero);
        d.nov.a1 = Vector{zero, b2};
        d.eta = functional2(b * half, zero);
        d.D = mat2(zero, zero, -b * b1, zero);
        return d;
    }
    if (id == "A3") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        Scalar b3 = get(params, "b3"), b4 = get(params, "b4");
        d.nov.p = functional2(-one, zero);
        d.nov.q = functional2(one, zero);
        d.nov.T = mat2(Scalar(2) * b1, zero, b2, b3);
        d.nov.a1 = Vector{b3 * b3, b2 * b3};
        d.eta = functional2(b4, zero);
        d.D = mat2(-b3 * b4, zero, b * b2 - b2 * b4, -b * b3);
        return d;
    }
    if (id == "A4") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        d.nov.S = mat2(b1, zero, b2, zero);
        d.nov.T = mat2(b1, zero, zero, b1);
        d.nov.a1 = Vector{b1 * b1, b1 * b2};
        d.D = mat2(zero, zero, zero, -b * b1);
        return d;
    }
    if (id == "A5") {
        Scalar b1 = get(params, "b1"), k = get(params, "k");
        d.nov.a1 = Vector{zero, -k * b1};
        d.nov.k = k;
        d.D = mat2(zero, zero, b1, zero);
        return d;
    }
    if (id == "B1") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2");
        Scalar b3 = get(params, "b3"), b4 = get(params, "b4");
        d.nov.p = functional2(-one, zero);
        d.nov.q = functional2(one, zero);
        d.nov.T = mat2(Scalar(2) * b1, zero, b2, b1);
        d.nov.a1 = Vector{b1 * b1, b1 * b2};
        d.eta = functional2(b3, b4);
        d.D = mat2(-b1 * b3, -b1 * b4, -b2 * b3, -b2 * b4);
        return d;
    }
    if (id == "B2") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), b3 = get(params, "b3");
        d.nov.S = mat2(b1, zero, b2, zero);
        d.nov.T = mat2(b1, zero, zero, b1);
        d.nov.a1 = Vector{b1 * b1, b1 * b2};
        d.D = mat2(zero, zero, b3, zero);
        return d;
    }
    if (id == "B3") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), k = get(params, "k");
        d.nov.p = functional2(one, zero);
        d.nov.q = functional2(one, zero);
        d.nov.T = mat2(zero, zero, b1, b2);
        d.nov.a1 = Vector{b2 * b2 - k * b2, k * b1 - b1 * b2};
        d.nov.k = k;
        return d;
    }
    if (id == "B4") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), b3 = get(params, "b3");
        d.nov.p = functional2(b1, zero);
        d.nov.q = functional2(one, zero);
        d.nov.T = mat2(b2 - b1 * b2, zero, b3, b2);
        d.nov.a1 = Vector{-b1 * b2 * b2, b2 * b3};
        d.nov.k = b1 * b2 + b2;
        return d;
    }
    if (id == "B5") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), b3 = get(params, "b3");
        d.nov.p = functional2(half, zero);
        d.nov.q = functional2(one, zero);
        d.nov.T = mat2(half * b1, zero, b2, b1);
        d.nov.a1 = Vector{-half * b1 * b1, b3};
        d.nov.k = Scalar(3, 2) * b1;
        return d;
    }
    throw std::invalid_argument("catalog: '" + id + "' is not a flag-datum entry");
}

std::vector<ParamMap> catalog_grid(const std::string& id, const Scalar& b) {
    std::vector<Scalar> g = {Scalar(-2), Scalar(-1), Scalar(0), Scalar(1), Scalar(2)};
    std::vector<std::string> names = catalog_param_names(id);
    std::vector<std::string> free_names;
    for (const auto& n : names)
        if (n != "b") free_names.push_back(n);

    std::vector<ParamMap> out;
    std::vector<std::size_t> idx(free_names.size(), 0);
    while (true) {
        ParamMap m;
        if (is_a_case(id) || id == "W(1,b)") m["b"] = b;
        for (std::size_t i = 0; i < free_names.size(); ++i) m[free_names[i]] = g[idx[i]];
        out.push_back(std::move(m));
        std::size_t pos = 0;
        while (pos < idx.size() && ++idx[pos] == g.size()) {
            idx[pos] = 0;
            ++pos;
        }
        if (pos == idx.size()) break;
        if (idx.empty()) break;
    }
    if (free_names.empty()) out.resize(1);
    return out;
}

std::vector<ParamMap> catalog_valid_grid(const std::string& id, const Scalar& b) {
    std::vector<ParamMap> out;
    for (auto& m : catalog_grid(id, b)) {
        if (id == "A3" && m["b3"] != m["b1"]) continue;
        if (id == "A5" && !(m["k"] * m["b1"]).is_zero()) continue;
        out.push_back(std::move(m));
    }
    return out;
}

std::optional<StatedReduction> stated_reduction(const std::string& id, const ParamMap& params) {
    const Scalar zero(0), one(1);
    auto L = [&](const Scalar& c) { return Vector{c, zero}; };
    auto LW = [&](const Scalar& cl, const Scalar& cw) { return Vector{cl, cw}; };

    if (id == "A1") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        // c2 = -b2 kills b2; beta rescales b1 to 1 when b1 != 0.
        if (b1.is_zero())
            return StatedReduction{"A1", {{"b", b}, {"b1", zero}, {"b2", zero}},
                                   {LW(zero, -b2), one}};
        return StatedReduction{"A1", {{"b", b}, {"b1", one}, {"b2", zero}},
                               {LW(zero, -b2), b1}};
    }
    if (id == "A2") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        // c2 = -2 b1 kills b1; b2 scales by beta^2, so the jump to A2(0,1)
        // needs a rational square root.
        if (b2.is_zero())
            return StatedReduction{"A2", {{"b", b}, {"b1", zero}, {"b2", zero}},
                                   {LW(zero, Scalar(-2) * b1), one}};
        Scalar root;
        if (!rational_sqrt(b2, root)) return std::nullopt;
        return StatedReduction{"A2", {{"b", b}, {"b1", zero}, {"b2", one}},
                               {LW(zero, Scalar(-2) * b1), root}};
    }
    if (id == "A3") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        Scalar b3 = get(params, "b3"), b4 = get(params, "b4");
        // c2 = b2 kills b2.
        return StatedReduction{
            "A3", {{"b", b}, {"b1", b1}, {"b2", zero}, {"b3", b3}, {"b4", b4}},
            {LW(zero, b2), one}};
    }
    if (id == "A4") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), b2 = get(params, "b2");
        // The printed family claims A4(b1,b2) == A4(0,0) with a0 = b1 L + b2 W;
        // FD5 at a = L forces the W-component of a0 to vanish, so b2 only
        // rescales: b2 = 0 reaches A4(0,0), b2 != 0 reaches A4(0,1).
        if (b2.is_zero())
            return StatedReduction{"A4", {{"b", b}, {"b1", zero}, {"b2", zero}},
                                   {L(b1), one}};
        return StatedReduction{"A4", {{"b", b}, {"b1", zero}, {"b2", one}}, {L(b1), b2}};
    }
    if (id == "A5") {
        Scalar b = get(params, "b"), b1 = get(params, "b1"), k = get(params, "k");
        if (b1.is_zero() && k.is_zero()) return std::nullopt;  // excluded point
        if (!b1.is_zero())
            return StatedReduction{"A5", {{"b", b}, {"b1", one}, {"k", k / b1}},
                                   {LW(zero, zero), b1}};
        return StatedReduction{"A5", {{"b", b}, {"b1", zero}, {"k", one}},
                               {LW(zero, zero), k}};
    }
    if (id == "B1") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2");
        Scalar b3 = get(params, "b3"), b4 = get(params, "b4");
        return StatedReduction{"B1", {{"b1", zero}, {"b2", zero}, {"b3", b3}, {"b4", b4}},
                               {LW(b1, b2), one}};
    }
    if (id == "B2") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), b3 = get(params, "b3");
        if (b3.is_zero())
            return StatedReduction{"B2", {{"b1", zero}, {"b2", zero}, {"b3", zero}},
                                   {LW(b1, b2), one}};
        return StatedReduction{"B2", {{"b1", zero}, {"b2", zero}, {"b3", one}},
                               {LW(b1, b2), b3}};
    }
    if (id == "B3") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), k = get(params, "k");
        // c2 = -b1 kills b1.
        return StatedReduction{"B3", {{"b1", zero}, {"b2", b2}, {"k", k}},
                               {LW(zero, -b1), one}};
    }
    if (id == "B4") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), b3 = get(params, "b3");
        if (!b1.is_zero())
            return StatedReduction{"B4", {{"b1", b1}, {"b2", zero}, {"b3", zero}},
                                   {LW(b2, -b3 / b1), one}};
        if (b3.is_zero())
            return StatedReduction{"B4", {{"b1", zero}, {"b2", zero}, {"b3", zero}},
                                   {LW(b2, zero), one}};
        return StatedReduction{"B4", {{"b1", zero}, {"b2", zero}, {"b3", one}},
                               {LW(b2, zero), b3}};
    }
    if (id == "B5") {
        Scalar b1 = get(params, "b1"), b2 = get(params, "b2"), b3 = get(params, "b3");
        return StatedReduction{"B5",
                               {{"b1", zero}, {"b2", zero}, {"b3", b3 - b1 * b2}},
                               {LW(b1, Scalar(-2) * b2), one}};
    }
    return std::nullopt;
}

std::vector<RepresentativeEntry> representatives(const Scalar& b,
                                                 const std::vector<Scalar>& family_grid) {
    const Scalar zero(0), one(1);
    std::vector<RepresentativeEntry> out;
    if (!b.is_zero()) {
        out.push_back({"A1", {{"b", b}, {"b1", zero}, {"b2", zero}}});
        out.push_back({"A1", {{"b", b}, {"b1", one}, {"b2", zero}}});
        out.push_back({"A2", {{"b", b}, {"b1", zero}, {"b2", zero}}});
        out.push_back({"A2", {{"b", b}, {"b1", zero}, {"b2", one}}});
        for (const auto& t : family_grid)
            out.push_back({"A3", {{"b", b}, {"b1", zero}, {"b2", zero}, {"b3", zero}, {"b4", t}}});
        out.push_back({"A4", {{"b", b}, {"b1", zero}, {"b2", zero}}});
        out.push_back({"A5", {{"b", b}, {"b1", one}, {"k", zero}}});
        out.push_back({"A5", {{"b", b}, {"b1", zero}, {"k", one}}});
        return out;
    }
    for (const auto& t3 : family_grid)
        for (const auto& t4 : family_grid)
            out.push_back({"B1", {{"b1", zero}, {"b2", zero}, {"b3", t3}, {"b4", t4}}});
    out.push_back({"B2", {{"b1", zero}, {"b2", zero}, {"b3", zero}}});
    out.push_back({"B2", {{"b1", zero}, {"b2", zero}, {"b3", one}}});
    for (const auto& t2 : family_grid)
        for (const auto& tk : family_grid)
            out.push_back({"B3", {{"b1", zero}, {"b2", t2}, {"k", tk}}});
    out.push_back({"B4", {{"b1", zero}, {"b2", zero}, {"b3", zero}}});
    out.push_back({"B4", {{"b1", zero}, {"b2", zero}, {"b3", one}}});
    for (const auto& t1 : family_grid)
        if (!t1.is_zero()) out.push_back({"B4", {{"b1", t1}, {"b2", zero}, {"b3", zero}}});
    out.push_back({"B5", {{"b1", zero}, {"b2", zero}, {"b3", zero}}});
    out.push_back({"B5", {{"b1", zero}, {"b2", zero}, {"b3", one}}});
    return out;
}

}  // namespace gdbialg
