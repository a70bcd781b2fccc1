// JSON forms of certificates, refutations and counterexample searches.
// Every integer that may outgrow a machine word is written as a decimal string.

#include <json.hpp>

#include "primestar/errors.hpp"
#include "primestar/refuter.hpp"
#include "primestar/witness.hpp"

namespace primestar {

namespace {

using ordered_json = nlohmann::ordered_json;

Natural decimal_field(const nlohmann::json& obj, const char* key) {
    if (!obj.contains(key)) throw ValidationError(std::string("certificate lacks '") + key + "'", 0);
    const auto& field = obj.at(key);
    if (!field.is_string()) {
        throw ValidationError(std::string("certificate field '") + key + "' must be a decimal string", 0);
    }
    const std::string text = field.get<std::string>();
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos ||
        (text.size() > 1 && text.front() == '0')) {
        throw ValidationError(std::string("certificate field '") + key + "' is not a decimal numeral: '" +
                                  text + "'",
                              0);
    }
    return Natural(text);
}

}  // namespace

std::string certificate_to_json(const CompositenessCertificate& cert) {
    ordered_json out;
    out["b"] = cert.b.get_str();
    out["K"] = cert.K.get_str();
    out["N_form"] = cert.n_form();
    out["bK"] = cert.bK.get_str();
    out["k"] = cert.k.get_str();
    out["m"] = cert.m.get_str();
    out["d"] = cert.d.get_str();
    out["r"] = cert.r.get_str();
    return out.dump();
}

CompositenessCertificate certificate_from_json(std::string_view text) {
    nlohmann::json obj;
    try {
        obj = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ValidationError(std::string("malformed certificate JSON: ") + e.what(), e.byte);
    }
    if (!obj.is_object()) throw ValidationError("certificate must be a JSON object", 0);

    CompositenessCertificate cert;
    cert.b = decimal_field(obj, "b");
    cert.K = decimal_field(obj, "K");
    cert.bK = decimal_field(obj, "bK");
    cert.k = decimal_field(obj, "k");
    cert.m = decimal_field(obj, "m");
    cert.d = decimal_field(obj, "d");
    cert.r = decimal_field(obj, "r");

    if (!obj.contains("N_form") || !obj.at("N_form").is_string()) {
        throw ValidationError("certificate lacks string 'N_form'", 0);
    }
    const std::string form = obj.at("N_form").get<std::string>();
    if (form != kFactorialForm) cert.n_literal = decimal_field(obj, "N_form");
    return cert;
}

std::string refutation_to_json(const PumpingRefutation& refutation) {
    ordered_json out;
    out["base"] = refutation.base;
    out["p"] = refutation.p;
    out["pumping_bound"] = refutation.pumping_bound.get_str();
    out["N"] = std::to_string(refutation.N);
    out["fbN"] = refutation.fbN.get_str();
    out["s"] = refutation.s.str();
    out["s_in_star"] = refutation.s_in_star;
    ordered_json factors = ordered_json::array();
    if (refutation.s_decomposition) {
        for (const auto& f : refutation.s_decomposition->factors) factors.push_back(f.str());
    }
    out["s_decomposition"] = factors;

    ordered_json scan = ordered_json::array();
    for (const auto& entry : refutation.scan_log) {
        scan.push_back({{"n", std::to_string(entry.n)}, {"fb", entry.fb.get_str()}});
    }
    out["scan_log"] = scan;

    ordered_json rows = ordered_json::array();
    for (const auto& row : refutation.rows) {
        ordered_json r;
        r["x"] = row.x;
        r["y"] = row.y;
        r["z"] = row.z;
        r["xz"] = row.x + row.z;
        r["xz_in_star"] = row.pumped_down_in_star;
        r["verdict"] = row.pumped_down_in_star ? "accepted" : "rejected";
        r["xyyz_in_star"] = row.pumped_up_in_star;
        rows.push_back(std::move(r));
    }
    out["row_count"] = refutation.rows.size();
    out["rows"] = rows;
    out["complete"] = refutation.complete();
    return out.dump();
}

std::string search_to_json(const CounterexampleSearch& search) {
    ordered_json out;
    out["language"] = std::string(to_string(search.language));
    out["max_len"] = search.max_len;
    out["found"] = search.counterexample.has_value();
    if (search.counterexample) {
        const auto& c = *search.counterexample;
        out["counterexample"] = {{"word", c.word()},
                                 {"length", c.length()},
                                 {"dfa_verdict", c.dfa_verdict},
                                 {"oracle_verdict", c.oracle_verdict}};
    } else {
        out["counterexample"] = nullptr;
    }
    out["explored_length"] = search.explored_length;
    out["strings_checked"] = std::to_string(search.strings_checked);
    return out.dump();
}

}  // namespace primestar
