#include <string>

#include "json.hpp"

#include "qcat/errors.hpp"
#include "qcat/k0.hpp"

namespace qcat {

namespace {

using nlohmann::json;

json weight_json(const Weight& w) {
    json arr = json::array();
    for (long x : w) arr.push_back(x);
    return arr;
}

json vector_json(const K0Vector& v) {
    json j;
    j["n"] = v.rank();
    if (v.regime().is_generic())
        j["ell"] = nullptr;
    else
        j["ell"] = v.regime().ell();
    j["basis"] = v.regime().is_generic() ? "verma" : "weyl";
    json terms = json::array();
    for (const auto& [w, c] : v.terms()) {
        json t;
        t["weight"] = weight_json(w);
        t["coeff"] = c.get_str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

Weight weight_from(const json& j) {
    if (!j.is_array()) throw ParseError("weight must be an array of integers");
    Weight w;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("weight entries must be integers");
        w.push_back(x.get<long>());
    }
    return w;
}

mpq_class rational_from(const std::string& text) {
    if (text.empty()) throw ParseError("empty coefficient");
    mpq_class q;
    if (mpq_set_str(q.get_mpq_t(), text.c_str(), 10) != 0)
        throw ParseError("bad coefficient '" + text + "'");
    if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
    q.canonicalize();
    return q;
}

} // namespace

std::string k0_to_json(const K0Vector& v) { return vector_json(v).dump(2); }

K0Vector k0_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("bad JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("basis") || !j.contains("terms"))
        throw ParseError("vector object needs n, basis and terms");
    if (!j["n"].is_number_integer()) throw ParseError("n must be an integer");
    int n = j["n"].get<int>();

    Regime regime = Regime::generic();
    if (j.contains("ell") && !j["ell"].is_null()) {
        if (!j["ell"].is_number_integer()) throw ParseError("ell must be an integer or null");
        regime = Regime::root_of_unity(j["ell"].get<long>());
    }
    std::string basis = j["basis"].get<std::string>();
    if (basis != "verma" && basis != "weyl") throw ParseError("basis must be verma or weyl");
    if ((basis == "verma") != regime.is_generic())
        throw ParseError("basis does not match the regime");

    K0Vector v(n, regime);
    if (!j["terms"].is_array()) throw ParseError("terms must be an array");
    for (const auto& t : j["terms"]) {
        if (!t.is_object() || !t.contains("weight") || !t.contains("coeff"))
            throw ParseError("each term needs weight and coeff");
        if (!t["coeff"].is_string()) throw ParseError("coeff must be a string");
        v.add(weight_from(t["weight"]), rational_from(t["coeff"].get<std::string>()));
    }
    return v;
}

std::string certificate_to_json(const PathCertificate& c) {
    json j;
    j["lambda"] = weight_json(c.lambda);
    j["mu"] = weight_json(c.mu);
    j["word"] = t_word_to_string(c.word);
    json entries = json::array();
    for (const PathEntry& e : c.entries) {
        json row;
        row["w"] = e.w.to_string();
        row["source"] = weight_json(e.source);
        row["image"] = vector_json(e.image);
        row["expected"] = weight_json(e.expected);
        row["pass"] = e.pass;
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    j["pass"] = c.pass;
    return j.dump(2);
}

} // namespace qcat
