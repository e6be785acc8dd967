#include "ddpoly/report.hpp"

#include <cstdint>
#include <functional>
#include <iomanip>
#include <limits>
#include <sstream>

namespace ddpoly {

Json integer_to_json(const Integer& n) {
    static const Integer lo = std::numeric_limits<std::int64_t>::min();
    static const Integer hi = std::numeric_limits<std::int64_t>::max();
    if (n >= lo && n <= hi) {
        return Json(static_cast<std::int64_t>(n));
    }
    return Json(n.str());
}

Json poly_to_json(const NumericalPolynomial& p) {
    Json coeffs = Json::array();
    for (const auto& a : p.coeffs()) coeffs.push_back(integer_to_json(a));
    return Json{{"basis", "binomial"}, {"coeffs", coeffs}};
}

Json multipoly_to_json(const MultiNumericalPolynomial& p) {
    // nested coefficient tensor, axis 0 outermost
    const auto& caps = p.caps();
    std::function<Json(size_t, IndexTuple&)> build =
        [&](size_t axis, IndexTuple& idx) -> Json {
        Json arr = Json::array();
        for (int i = 0; i <= caps[axis]; ++i) {
            idx[axis] = i;
            if (axis + 1 == caps.size()) {
                arr.push_back(integer_to_json(p.coeff(idx)));
            } else {
                arr.push_back(build(axis + 1, idx));
            }
        }
        idx[axis] = 0;
        return arr;
    };
    IndexTuple idx(caps.size(), 0);
    Json coeffs = caps.empty() ? Json::array() : build(0, idx);
    return Json{{"basis", "binomial"}, {"caps", caps}, {"coeffs", coeffs}};
}

namespace {

Json tuple_set_to_json(const std::set<IndexTuple>& s) {
    Json arr = Json::array();
    for (const auto& t : s) arr.push_back(t);
    return arr;
}

}  // namespace

Json report_to_json(const DimensionReport& rep) {
    Json j;
    j["polynomial"] = poly_to_json(rep.chi);
    j["polynomial_text"] = rep.chi.to_text();
    j["threshold"] = rep.threshold;
    j["invariants"] = Json{{"d", rep.inv.d},
                           {"c_d", integer_to_json(rep.inv.c_d)},
                           {"c_top", integer_to_json(rep.inv.c_top)}};
    Json table = Json::array();
    for (const auto& v : rep.table) table.push_back(integer_to_json(v));
    j["table"] = Json{{"r_max", static_cast<int>(rep.table.size()) - 1},
                      {"values", table}};
    if (rep.multivariate) {
        Json m;
        m["polynomial"] = multipoly_to_json(rep.phi);
        m["polynomial_text"] = rep.phi.to_text();
        m["thresholds"] = rep.thresholds;
        m["invariants"] =
            Json{{"total_degree", rep.minv.total_degree},
                 {"a_caps", integer_to_json(rep.minv.a_caps)},
                 {"support", tuple_set_to_json(rep.minv.support)},
                 {"support_maxima", tuple_set_to_json(rep.minv.support_maxima)}};
        Json top = Json::array();
        for (const auto& [idx, c] : rep.minv.top_terms) {
            top.push_back(Json{{"index", idx}, {"coeff", integer_to_json(c)}});
        }
        m["invariants"]["top_terms"] = top;
        Json grid = Json::array();
        for (const auto& v : rep.multi_table) grid.push_back(integer_to_json(v));
        m["table"] = Json{{"bounds", rep.table_bounds}, {"values", grid}};
        m["blockwise_certified"] = rep.blockwise_certified;
        j["multivariate"] = m;
    }
    if (rep.oracle.checked) {
        Json values = Json::array();
        for (const auto& v : rep.oracle.values) values.push_back(integer_to_json(v));
        Json o{{"r_max", rep.oracle.r_max},
               {"match", rep.oracle.match},
               {"values", values}};
        if (!rep.oracle.multi_values.empty()) {
            Json mv = Json::array();
            for (const auto& v : rep.oracle.multi_values) {
                mv.push_back(integer_to_json(v));
            }
            o["multi_values"] = mv;
        }
        j["oracle"] = o;
    }
    return j;
}

std::string report_to_text(const DimensionReport& rep,
                           const std::string& indent) {
    std::ostringstream out;
    out << indent << "chi(t) = " << rep.chi.to_text() << "\n";
    out << indent << "threshold: " << rep.threshold << "\n";
    out << indent << "invariants: d=" << rep.inv.d
        << " c_d=" << to_string(rep.inv.c_d)
        << " c_top=" << to_string(rep.inv.c_top) << "\n";
    out << indent << "values r=0.." << rep.table.size() - 1 << ":";
    for (const auto& v : rep.table) out << " " << to_string(v);
    out << "\n";
    if (rep.multivariate) {
        out << indent << "Phi = " << rep.phi.to_text() << "\n";
        out << indent << "thresholds:";
        for (int t : rep.thresholds) out << " " << t;
        out << "\n";
        out << indent << "a_caps = " << to_string(rep.minv.a_caps) << "\n";
        out << indent << "support_maxima:";
        for (const auto& t : rep.minv.support_maxima) {
            out << " (";
            for (size_t k = 0; k < t.size(); ++k) {
                out << (k ? "," : "") << t[k];
            }
            out << ")";
        }
        out << "\n";
        out << indent << "grid values (bounds";
        for (int b : rep.table_bounds) out << " " << b;
        out << "):";
        for (const auto& v : rep.multi_table) out << " " << to_string(v);
        out << "\n";
    }
    if (rep.oracle.checked) {
        out << indent << "oracle: r_max=" << rep.oracle.r_max << " "
            << (rep.oracle.match ? "match" : "MISMATCH") << "\n";
    }
    return out.str();
}

std::string content_digest(const std::string& bytes) {
    std::uint64_t h = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

}  // namespace ddpoly
