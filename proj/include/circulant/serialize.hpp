#pragma once

// Deterministic JSON emitters for the library's report types. Keys are
// written in sorted order and doubles with 12 significant digits, so output
// bytes are a pure function of the input values.

#include <cstdio>

#include "circulant/diameter.hpp"
#include "circulant/extremal.hpp"
#include "circulant/quantum.hpp"
#include "circulant/spectral.hpp"

namespace circulant {

inline std::string json_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

inline std::string json_int_array(const std::vector<int64>& values) {
    std::string out = "[";
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(values[i]);
    }
    return out + "]";
}

inline std::string to_json(const Diameter& d) {
    return d.finite ? std::to_string(d.value) : "\"infinite\"";
}

inline std::string to_json(const RationalAngle& t) {
    return "{\"p\":" + std::to_string(t.p) + ",\"q\":" + std::to_string(t.q) + "}";
}

inline std::string to_json(const Spectrum& spec) {
    std::string out = "{\"n\":" + std::to_string(spec.n()) + ",\"values\":[";
    if (spec.is_exact()) {
        const auto& v = spec.exact_values();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += std::to_string(v[i]);
        }
    } else {
        const auto& v = spec.numeric_values();
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) out += ",";
            out += "[" + json_double(v[i].real()) + "," + json_double(v[i].imag()) + "]";
        }
    }
    out += "],\"variant\":\"";
    out += spec.is_exact() ? "exact" : "numeric";
    return out + "\"}";
}

inline std::string to_json(const CirculantGraph& G, const std::optional<DivisorSet>& D,
                           bool bipartite, bool connected) {
    std::string out = "{\"bipartite\":";
    out += bipartite ? "true" : "false";
    out += ",\"connected\":";
    out += connected ? "true" : "false";
    out += ",\"degree\":" + std::to_string(G.degree());
    out += ",\"divisor_set\":";
    out += D ? json_int_array(D->members) : "null";
    out += ",\"n\":" + std::to_string(G.order());
    out += ",\"symbol\":" + json_int_array(G.symbol.members);
    return out + "}";
}

inline std::string to_json(const DiameterReport& r) {
    std::string out = "{\"D\":" + json_int_array(r.divisor_set.members);
    out += ",\"diameter\":" + to_json(r.diameter);
    out += ",\"lower_ok\":";
    out += r.lower_ok ? "true" : "false";
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"t\":" + std::to_string(r.generator_number_t);
    out += ",\"upper_ok\":";
    out += r.upper_ok ? "true" : "false";
    return out + "}";
}

inline std::string to_json(const PstWitness& w) {
    return "{\"a\":" + std::to_string(w.a) + ",\"b\":" + std::to_string(w.b) +
           ",\"t\":" + to_json(w.time) + "}";
}

inline std::string to_json(const EvolutionReport& r) {
    std::string out = "{\"D\":";
    out += r.divisor_set ? json_int_array(r.divisor_set->members) : "null";
    out += ",\"n\":" + std::to_string(r.n);
    out += ",\"period\":";
    out += r.period ? to_json(*r.period) : "null";
    out += ",\"periodic\":";
    out += r.periodic ? "true" : "false";
    out += ",\"pst\":";
    out += r.pst ? to_json(*r.pst) : "null";
    return out + "}";
}

inline std::string to_json(const ExtremalRecord& r) {
    std::string out = "{\"D\":" + json_int_array(r.witness.members);
    out += ",\"N\":" + std::to_string(r.max_order);
    out += ",\"cap\":" + std::to_string(r.cap);
    out += ",\"k\":" + std::to_string(r.degree_k);
    out += ",\"n\":" + std::to_string(r.witness.n);
    return out + "}";
}

}  // namespace circulant
