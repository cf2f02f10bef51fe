#include "fano10/json_io.hpp"

namespace fano10 {

using nlohmann::json;

json int_to_json(const Int& x) {
    if (x.fits_slong_p()) return json(static_cast<std::int64_t>(x.get_si()));
    return json(x.get_str());
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(static_cast<long>(j.get<std::int64_t>()));
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::invalid_argument&) {
            throw ParseError("not a decimal integer: " + j.get<std::string>());
        }
    }
    throw ParseError("expected an integer (number or decimal string)");
}

std::string rat_to_string(const Rat& x) {
    Rat c = x;
    c.canonicalize();
    return c.get_num().get_str() + "/" + c.get_den().get_str();
}

Rat rat_from_string(const std::string& s) {
    try {
        Rat r(s);
        r.canonicalize();
        return r;
    } catch (const std::invalid_argument&) {
        throw ParseError("not a rational: " + s);
    }
}

json mat_to_json(const IntMat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols(); ++j) row.push_back(int_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat mat_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw ParseError("expected a non-empty array of rows");
    const int rows = static_cast<int>(j.size());
    if (!j[0].is_array() || j[0].empty()) throw ParseError("expected rows to be arrays");
    const int cols = static_cast<int>(j[0].size());
    IntMat m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != cols)
            throw ParseError("ragged matrix rows");
        for (int c = 0; c < cols; ++c) m(i, c) = int_from_json(j[i][c]);
    }
    return m;
}

IntMat mat_from_string(const std::string& text) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError("invalid JSON matrix: " + text);
    return mat_from_json(j);
}

namespace {

json labels_json(const std::vector<SpecialSublattice>& ks) {
    json a = json::array();
    for (const auto& k : ks) a.push_back(label_name(k.label));
    return a;
}

}  // namespace

json lattice_report(const Lattice& l) {
    json out;
    out["label"] = l.label();
    out["gram"] = mat_to_json(l.gram());
    out["rank"] = l.rank();
    auto [p, q] = l.signature();
    out["signature"] = json::array({p, q});
    out["parity"] = l.is_even() ? "even" : "odd";
    out["determinant"] = int_to_json(l.determinant());

    DiscriminantGroup d(l);
    json factors = json::array();
    for (const Int& f : d.invariant_factors()) factors.push_back(int_to_json(f));
    out["invariant_factors"] = std::move(factors);

    const int k = d.ngens();
    json btab = json::array();
    for (int i = 0; i < k; ++i) {
        json row = json::array();
        std::vector<Int> gi(k), gj(k);
        gi[i] = 1;
        for (int j = 0; j < k; ++j) {
            gj.assign(k, Int(0));
            gj[j] = 1;
            row.push_back(rat_to_string(d.b(gi, gj)));
        }
        btab.push_back(std::move(row));
    }
    out["b"] = std::move(btab);
    if (l.is_even()) {
        json qtab = json::array();
        for (int i = 0; i < k; ++i) {
            std::vector<Int> gi(k);
            gi[i] = 1;
            qtab.push_back(rat_to_string(d.q(gi)));
        }
        out["q"] = std::move(qtab);
    } else {
        out["q"] = nullptr;
    }
    return out;
}

json classify_to_json(const Int& d) {
    auto ks = classify_special_sublattice(d);
    json out;
    out["d"] = int_to_json(d);
    out["orbits"] = ks.size();
    json orbits = json::array();
    for (const auto& k : ks) {
        json o;
        o["label"] = divisor_label_string(k.label, k.d);
        o["gram"] = mat_to_json(k.gram);
        o["basis"] = mat_to_json(k.embedding.basis);
        orbits.push_back(std::move(o));
    }
    out["representatives"] = std::move(orbits);
    return out;
}

json assoc_to_json(const Int& d) {
    const AssociationVerdict k3 = k3_association_verdict(d);
    const AssociationVerdict cubic = cubic_association_verdict(d);
    json out;
    out["d"] = int_to_json(d);
    out["k3"] = {{"associated", has_associated_k3(d)},
                 {"by_criterion", k3.by_criterion},
                 {"by_oracle", k3.by_oracle}};
    out["cubic"] = {{"associated", has_associated_cubic(d)},
                    {"by_criterion", cubic.by_criterion},
                    {"by_oracle", cubic.by_oracle}};
    return out;
}

json sweep_to_json(const Int& d_max) {
    json rows = json::array();
    for (Int d = 2; d <= d_max; ++d) {
        if (!admissible_discriminant(d)) continue;
        auto ks = classify_special_sublattice(d);
        json row;
        row["d"] = int_to_json(d);
        row["orbits"] = ks.size();
        row["labels"] = labels_json(ks);
        row["k3"] = has_associated_k3(d);
        row["cubic"] = has_associated_cubic(d);
        rows.push_back(std::move(row));
    }
    json out;
    out["d_max"] = int_to_json(d_max);
    out["rows"] = std::move(rows);
    return out;
}

json examples_to_json() {
    json rows = json::array();
    for (const auto& r : example_family_table()) {
        json row;
        row["family"] = r.family;
        if (r.surface) {
            row["surface"] = {{"a", int_to_json(r.surface->a)},
                              {"b", int_to_json(r.surface->b)},
                              {"k_dot_sigma1", int_to_json(r.surface->k_dot_sigma1)},
                              {"k_squared", int_to_json(r.surface->k_squared)},
                              {"chi", int_to_json(r.surface->chi)}};
        } else {
            row["surface"] = nullptr;
        }
        row["self_intersection"] = int_to_json(r.self_intersection);
        row["gram"] = mat_to_json(r.gram);
        row["d"] = int_to_json(r.d);
        row["label"] = divisor_label_string(r.label, r.d);
        rows.push_back(std::move(row));
    }
    json out;
    out["rows"] = std::move(rows);
    return out;
}

json th81_to_json(long e_max) {
    json rows = json::array();
    for (const auto& r : th81_targets(e_max)) {
        json row;
        row["e"] = r.e;
        row["gram"] = mat_to_json(r.gram);
        row["d"] = int_to_json(r.d);
        row["label"] = divisor_label_string(r.label, r.d);
        rows.push_back(std::move(row));
    }
    json out;
    out["e_max"] = e_max;
    out["rows"] = std::move(rows);
    return out;
}

}  // namespace fano10
