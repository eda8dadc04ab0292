#include "deltaderive/json_io.hpp"

#include <stdexcept>

namespace dd {

json rational_to_json(const Rational& r) { return to_string(r); }

Rational rational_from_json(const json& j) {
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("rational must be a string \"p/q\" or an integer");
}

namespace {

json vec_to_json(const QVec& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(rational_to_json(x));
    return out;
}

QVec vec_from_json(const json& j, int expect) {
    if (!j.is_array() || static_cast<int>(j.size()) != expect)
        throw std::invalid_argument("vector of wrong length");
    QVec v;
    for (const auto& x : j) v.push_back(rational_from_json(x));
    return v;
}

json tensor_to_json(const std::vector<Rational>& t, int d0, int d1, int d2) {
    json out = json::array();
    for (int i = 0; i < d0; ++i) {
        json plane = json::array();
        for (int j = 0; j < d1; ++j) {
            json row = json::array();
            for (int k = 0; k < d2; ++k)
                row.push_back(rational_to_json(t[(static_cast<size_t>(i) * d1 + j) * d2 + k]));
            plane.push_back(std::move(row));
        }
        out.push_back(std::move(plane));
    }
    return out;
}

std::vector<Rational> tensor_from_json(const json& j, int d0, int d1, int d2) {
    if (!j.is_array() || static_cast<int>(j.size()) != d0)
        throw std::invalid_argument("tensor of wrong shape");
    std::vector<Rational> t(static_cast<size_t>(d0) * d1 * d2);
    for (int i = 0; i < d0; ++i) {
        for (int jj = 0; jj < d1; ++jj) {
            QVec row = vec_from_json(j.at(i).at(jj), d2);
            for (int k = 0; k < d2; ++k) t[(static_cast<size_t>(i) * d1 + jj) * d2 + k] = row[k];
        }
    }
    return t;
}

}  // namespace

json algebra_to_json(const Algebra& a) {
    json out;
    out["dim"] = a.dim;
    out["label"] = a.label;
    out["table"] = tensor_to_json(a.table, a.dim, a.dim, a.dim);
    if (a.unit) out["unit"] = vec_to_json(*a.unit);
    return out;
}

Algebra algebra_from_json(const json& j) {
    int dim = j.at("dim").get<int>();
    if (dim < 1) throw std::invalid_argument("dim must be positive");
    Algebra a(dim, j.value("label", std::string{}));
    a.table = tensor_from_json(j.at("table"), dim, dim, dim);
    if (j.contains("unit")) {
        a.unit = vec_from_json(j.at("unit"), dim);
        if (!a.unit_valid()) throw std::invalid_argument("declared unit is not a unit");
    }
    return a;
}

json bimodule_to_json(const Bimodule& m) {
    json out;
    out["algebra"] = algebra_to_json(*m.j);
    out["dim"] = m.dim;
    out["label"] = m.label;
    out["action"] = tensor_to_json(m.action, m.j->dim, m.dim, m.dim);
    return out;
}

Bimodule bimodule_from_json(const json& j) {
    auto alg = std::make_shared<Algebra>(algebra_from_json(j.at("algebra")));
    int dim = j.at("dim").get<int>();
    Bimodule m(alg, dim, j.value("label", std::string{}));
    m.action = tensor_from_json(j.at("action"), alg->dim, dim, dim);
    return m;
}

json derivation_report(const DerivationSpace& s) {
    json out;
    out["algebra_label"] = s.module.j->label;
    out["module_label"] = s.module.label;
    out["delta"] = rational_to_json(s.delta);
    out["dimension"] = s.dimension();
    json basis = json::array();
    for (const auto& d : s.basis) {
        json mat = json::array();
        for (int r = 0; r < d.rows; ++r) mat.push_back(vec_to_json(d.row(r)));
        basis.push_back(std::move(mat));
    }
    out["basis"] = std::move(basis);
    return out;
}

json sweep_report(const Bimodule& m, const SweepReport& r) {
    json out;
    out["algebra_label"] = m.j->label;
    out["module_label"] = m.label;
    out["generic_dim"] = r.generic_dim;
    json exc = json::array();
    for (const auto& [d, dim] : r.exceptional)
        exc.push_back(json{{"delta", rational_to_json(d)}, {"dimension", dim}});
    out["exceptional"] = std::move(exc);
    json left = json::array();
    for (const auto& f : r.leftover_factors) left.push_back(f.str());
    out["leftover_factors"] = std::move(left);
    return out;
}

json whitehead_to_json(const WhiteheadReport& r) {
    json out;
    out["pass"] = r.pass;
    if (!r.pass) out["failure"] = r.failure;
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"entry", row.entry},
                            {"delta", rational_to_json(row.delta)},
                            {"dimension", row.dim},
                            {"ok", row.ok},
                            {"note", row.note}});
    out["rows"] = std::move(rows);
    return out;
}

}  // namespace dd
