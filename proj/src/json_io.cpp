#include "thetainv/json_io.hpp"

#include <charconv>
#include <cstdio>

namespace thetainv::io {

namespace {

std::string join(const std::string& where, const std::string& leaf) {
    return where + "/" + leaf;
}

const json& need(const json& j, const char* key, const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw schema_error(where, std::string("missing key '") + key + "'");
    return *it;
}

std::string need_string(const json& j, const std::string& where) {
    if (!j.is_string()) throw schema_error(where, "expected a string");
    return j.get<std::string>();
}

long need_long(const json& j, const std::string& where) {
    if (!j.is_number_integer()) throw schema_error(where, "expected an integer");
    return j.get<long>();
}

bool need_bool(const json& j, const std::string& where) {
    if (!j.is_boolean()) throw schema_error(where, "expected a boolean");
    return j.get<bool>();
}

int need_parity(const json& j, const std::string& where) {
    long e = need_long(j, where);
    if (e != 0 && e != 1) throw schema_error(where, "parity must be 0 or 1");
    return static_cast<int>(e);
}

Rational rational_field(const json& j, const std::string& where) {
    std::string s = need_string(j, where);
    try {
        return rational_from_string(s);
    } catch (const std::invalid_argument& ex) {
        throw schema_error(where, ex.what());
    }
}

long parse_long(const std::string& s, const std::string& where) {
    long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size())
        throw schema_error(where, "expected an integer, got '" + s + "'");
    return v;
}

}  // namespace

json parse_text(const std::string& text) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& ex) {
        throw schema_error("byte " + std::to_string(ex.byte), ex.what());
    }
}

std::string dumps(const json& j) { return j.dump(2); }

json to_json(const Scalar& s) {
    json j = json::object();
    j["r"] = rational_to_string(s.coord(0));
    j["i"] = rational_to_string(s.coord(1));
    j["s5"] = rational_to_string(s.coord(2));
    j["is5"] = rational_to_string(s.coord(3));
    return j;
}

Scalar scalar_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "expected a scalar object");
    for (auto it = j.begin(); it != j.end(); ++it)
        if (it.key() != "r" && it.key() != "i" && it.key() != "s5" && it.key() != "is5")
            throw schema_error(join(where, it.key()), "unknown scalar key");
    return Scalar(rational_field(need(j, "r", where), join(where, "r")),
                  rational_field(need(j, "i", where), join(where, "i")),
                  rational_field(need(j, "s5", where), join(where, "s5")),
                  rational_field(need(j, "is5", where), join(where, "is5")));
}

json to_json(const LaurentPoly& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) j[std::to_string(e)] = to_json(c);
    return j;
}

LaurentPoly laurent_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "expected an exponent->coefficient map");
    LaurentPoly p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        long e = parse_long(it.key(), join(where, it.key()));
        p.add_term(e, scalar_from_json(it.value(), join(where, it.key())));
    }
    return p;
}

json to_json(const TriLaurent& p) {
    json j = json::object();
    for (const auto& [e, c] : p.terms()) {
        std::string key = std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]);
        j[key] = to_json(c);
    }
    return j;
}

TriLaurent trilaurent_from_json(const json& j, const std::string& where) {
    if (!j.is_object()) throw schema_error(where, "expected an exponent-triple->coefficient map");
    TriLaurent p;
    for (auto it = j.begin(); it != j.end(); ++it) {
        const std::string& key = it.key();
        TriLaurent::Key e{};
        size_t pos = 0;
        for (int k = 0; k < 3; ++k) {
            size_t next = k == 2 ? key.size() : key.find(',', pos);
            if (next == std::string::npos)
                throw schema_error(join(where, key), "key must be 'e1,e2,e3'");
            e[static_cast<size_t>(k)] = parse_long(key.substr(pos, next - pos), join(where, key));
            pos = next + 1;
        }
        p.add_term(e, scalar_from_json(it.value(), join(where, key)));
    }
    return p;
}

json to_json(const ThetaClass& c) {
    json terms = json::array();
    for (const auto& [t, coeff] : c.terms()) {
        json row = json::object();
        row["triple"] = json::array({t[0], t[1], t[2]});
        row["coeff"] = to_json(coeff);
        terms.push_back(std::move(row));
    }
    json j = json::object();
    j["eps"] = c.parity();
    j["terms"] = std::move(terms);
    return j;
}

ThetaClass theta_class_from_json(const json& j, const std::string& where) {
    int eps = need_parity(need(j, "eps", where), join(where, "eps"));
    const json& terms = need(j, "terms", where);
    if (!terms.is_array()) throw schema_error(join(where, "terms"), "expected an array");
    ThetaClass c(eps);
    for (size_t k = 0; k < terms.size(); ++k) {
        std::string here = join(where, "terms") + "/" + std::to_string(k);
        const json& triple = need(terms[k], "triple", here);
        if (!triple.is_array() || triple.size() != 3)
            throw schema_error(join(here, "triple"), "expected three integers");
        long p = need_long(triple[0], join(here, "triple"));
        long q = need_long(triple[1], join(here, "triple"));
        long r = need_long(triple[2], join(here, "triple"));
        c.add(p, q, r, scalar_from_json(need(terms[k], "coeff", here), join(here, "coeff")));
    }
    return c;
}

json to_json(const SThetaElt& x) {
    json j = json::object();
    j["eps"] = x.parity();
    j["image"] = to_json(x.image());
    return j;
}

SThetaElt stheta_from_json(const json& j, const std::string& where) {
    int eps = need_parity(need(j, "eps", where), join(where, "eps"));
    return SThetaElt(eps, trilaurent_from_json(need(j, "image", where), join(where, "image")));
}

json to_json(const TensorSq& t) {
    json j = json::array();
    for (int i = 0; i < 3; ++i) {
        json row = json::array();
        for (int k = 0; k < 3; ++k) row.push_back(to_json(t.at(i, k)));
        j.push_back(std::move(row));
    }
    return j;
}

TensorSq tensor_sq_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 3) throw schema_error(where, "expected a 3x3 array");
    TensorSq t;
    for (size_t i = 0; i < 3; ++i) {
        const json& row = j[i];
        std::string here = join(where, std::to_string(i));
        if (!row.is_array() || row.size() != 3) throw schema_error(here, "expected a row of 3");
        for (size_t k = 0; k < 3; ++k)
            t.at(static_cast<int>(i), static_cast<int>(k)) =
                scalar_from_json(row[k], here + "/" + std::to_string(k));
    }
    return t;
}

json to_json(const SU2Matrix& m) {
    return json::array({json::array({to_json(m.a()), to_json(m.b())}),
                        json::array({to_json(m.c()), to_json(m.d())})});
}

SU2Matrix su2_from_json(const json& j, const std::string& where) {
    if (!j.is_array() || j.size() != 2) throw schema_error(where, "expected a 2x2 array");
    std::array<Scalar, 4> e;
    for (size_t i = 0; i < 2; ++i) {
        const json& row = j[i];
        std::string here = join(where, std::to_string(i));
        if (!row.is_array() || row.size() != 2) throw schema_error(here, "expected a row of 2");
        for (size_t k = 0; k < 2; ++k)
            e[2 * i + k] = scalar_from_json(row[k], here + "/" + std::to_string(k));
    }
    return SU2Matrix(e[0], e[1], e[2], e[3]);
}

json to_json(const ExactMatrix& m) {
    json j = json::array();
    for (int i = 0; i < m.rows(); ++i) {
        json row = json::array();
        for (int k = 0; k < m.cols(); ++k) row.push_back(to_json(m.at(i, k)));
        j.push_back(std::move(row));
    }
    return j;
}

ExactMatrix matrix_from_json(const json& j, const std::string& where) {
    if (!j.is_array()) throw schema_error(where, "expected an array of rows");
    int rows = static_cast<int>(j.size());
    int cols = rows == 0 ? 0 : static_cast<int>(j[0].is_array() ? j[0].size() : 0);
    ExactMatrix m(rows, cols);
    for (int i = 0; i < rows; ++i) {
        const json& row = j[static_cast<size_t>(i)];
        std::string here = join(where, std::to_string(i));
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw schema_error(here, "ragged row");
        for (int k = 0; k < cols; ++k)
            m.at(i, k) = scalar_from_json(row[static_cast<size_t>(k)], here + "/" + std::to_string(k));
    }
    return m;
}

json to_json(const GroupPresentation& pres) {
    json j = json::object();
    j["gens"] = pres.gens;
    json rels = json::array();
    for (const Word& r : pres.relators) rels.push_back(r.str(pres.gens));
    j["rels"] = std::move(rels);
    return j;
}

GroupPresentation presentation_from_json(const json& j, const std::string& where) {
    const json& gens = need(j, "gens", where);
    if (!gens.is_array()) throw schema_error(join(where, "gens"), "expected an array");
    GroupPresentation pres;
    for (size_t k = 0; k < gens.size(); ++k)
        pres.gens.push_back(need_string(gens[k], join(where, "gens") + "/" + std::to_string(k)));
    const json& rels = need(j, "rels", where);
    if (!rels.is_array()) throw schema_error(join(where, "rels"), "expected an array");
    for (size_t k = 0; k < rels.size(); ++k) {
        std::string here = join(where, "rels") + "/" + std::to_string(k);
        try {
            pres.relators.push_back(Word::parse(need_string(rels[k], here), pres.gens));
        } catch (const std::invalid_argument& ex) {
            throw schema_error(here, ex.what());
        }
    }
    return pres;
}

json to_json(const RepSelector& sel) {
    json j = json::object();
    j["variant"] = "v" + std::to_string(sel.variant);
    j["extended"] = sel.extended;
    return j;
}

RepSelector rep_selector_from_json(const json& j, const std::string& where) {
    RepSelector sel;
    std::string v = need_string(need(j, "variant", where), join(where, "variant"));
    if (v == "v1") sel.variant = 1;
    else if (v == "v2") sel.variant = 2;
    else throw schema_error(join(where, "variant"), "expected 'v1' or 'v2'");
    sel.extended = need_bool(need(j, "extended", where), join(where, "extended"));
    return sel;
}

json to_json(const EdgeDecoration& e) {
    json j = json::object();
    j["word"] = e.word;
    j["exp"] = e.t_exp;
    return j;
}

EdgeDecoration edge_from_json(const json& j, const std::string& where) {
    EdgeDecoration e;
    e.word = need_string(need(j, "word", where), join(where, "word"));
    e.t_exp = need_long(need(j, "exp", where), join(where, "exp"));
    return e;
}

json to_json(const SurgerySpec& spec) {
    json j = json::object();
    j["eps"] = spec.parity;
    json edges = json::array();
    for (const EdgeDecoration& e : spec.edges) edges.push_back(to_json(e));
    j["edges"] = std::move(edges);
    j["rep"] = to_json(spec.rep);
    return j;
}

SurgerySpec surgery_spec_from_json(const json& j, const std::string& where) {
    SurgerySpec spec;
    spec.parity = need_parity(need(j, "eps", where), join(where, "eps"));
    const json& edges = need(j, "edges", where);
    if (!edges.is_array() || edges.size() != 3)
        throw schema_error(join(where, "edges"), "expected exactly 3 edges");
    for (size_t k = 0; k < 3; ++k)
        spec.edges[k] = edge_from_json(edges[k], join(where, "edges") + "/" + std::to_string(k));
    spec.rep = rep_selector_from_json(need(j, "rep", where), join(where, "rep"));
    return spec;
}

json to_json(const SurgeryValue& v) {
    json j = json::object();
    j["description"] = v.description;
    j["value"] = to_json(v.image);
    return j;
}

json to_json(const Certificate& cert) {
    json j = json::object();
    j["eps"] = cert.inputs.empty() ? 0 : cert.inputs.front().parity;
    j["family-size"] = cert.inputs.size();
    j["rank-full"] = cert.rank_full;
    j["rank-coker"] = cert.rank_coker;
    j["conclusion"] = cert.conclusion;
    json inputs = json::array();
    for (const SurgerySpec& s : cert.inputs) inputs.push_back(to_json(s));
    j["inputs"] = std::move(inputs);
    json images = json::array();
    for (const SThetaElt& x : cert.images) images.push_back(to_json(x));
    j["images"] = std::move(images);
    return j;
}

Certificate certificate_from_json(const json& j, const std::string& where) {
    Certificate cert;
    const json& inputs = need(j, "inputs", where);
    if (!inputs.is_array()) throw schema_error(join(where, "inputs"), "expected an array");
    for (size_t k = 0; k < inputs.size(); ++k)
        cert.inputs.push_back(
            surgery_spec_from_json(inputs[k], join(where, "inputs") + "/" + std::to_string(k)));
    const json& images = need(j, "images", where);
    if (!images.is_array()) throw schema_error(join(where, "images"), "expected an array");
    for (size_t k = 0; k < images.size(); ++k)
        cert.images.push_back(
            stheta_from_json(images[k], join(where, "images") + "/" + std::to_string(k)));
    cert.rank_full = static_cast<int>(need_long(need(j, "rank-full", where), join(where, "rank-full")));
    cert.rank_coker =
        static_cast<int>(need_long(need(j, "rank-coker", where), join(where, "rank-coker")));
    cert.conclusion = need_string(need(j, "conclusion", where), join(where, "conclusion"));
    return cert;
}

std::uint64_t fnv1a64(const std::string& text) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 1099511628211ull;
    }
    return h;
}

std::string presentation_hash(const GroupPresentation& pres) {
    std::uint64_t h = fnv1a64(dumps(to_json(pres)));
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return std::string(buf);
}

}  // namespace thetainv::io
