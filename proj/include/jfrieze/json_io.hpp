#ifndef JFRIEZE_JSON_IO_HPP
#define JFRIEZE_JSON_IO_HPP

// JSON forms of the library's values.  Objects keep insertion order so the
// output is byte-stable.
//
//   juggling function  {"period": n, "throws": [t_1, ..., t_n]}
//   matrix             {"rows": k, "cols": n, "entries": [[...], ...]}
//                      entries are integers, or strings "p/q" (and "p" for
//                      integers too large for a JSON number)
//   frieze             {"siteswap": [...], "columns": {"1": [...], ...}}
//                      column b lists C_{a,b} for a = b .. b+n as strings
//   solution window    {"period": n, "sign_exponent": s, "columns": {...}}
//                      column b lists Sol_{a,b} for a = b .. b+n-1

#include "jfrieze/construct.hpp"
#include "jfrieze/frieze.hpp"
#include "jfrieze/juggling.hpp"
#include "jfrieze/matrix.hpp"
#include "jfrieze/recurrence.hpp"

#include <json.hpp>

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace jfrieze {

using Json = nlohmann::ordered_json;

// Signals structurally invalid input (as opposed to a failed mathematical check).
struct FormatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline Json rational_to_json(const Rational& r) {
    if (is_integer(r)) {
        Integer v = numerator(r);
        if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
            return static_cast<long long>(v);
    }
    return to_string(r);
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) {
        try {
            return parse_rational(j.get<std::string>());
        } catch (const std::invalid_argument& e) {
            throw FormatError(e.what());
        }
    }
    throw FormatError("expected an integer or a \"p/q\" string, got " + j.dump());
}

inline long long integer_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw FormatError(std::string("missing or non-integer field \"") + key + "\"");
    return j.at(key).get<long long>();
}

inline const Json& array_field(const Json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw FormatError(std::string("missing or non-array field \"") + key + "\"");
    return j.at(key);
}

inline std::vector<long> throws_from_json(const Json& arr) {
    std::vector<long> t;
    for (const auto& x : arr) {
        if (!x.is_number_integer()) throw FormatError("throws must be integers");
        t.push_back(x.get<long>());
    }
    return t;
}

inline JugglingFunction juggling_from_throws(const std::vector<long>& t) {
    for (long x : t)
        if (x < 0 || x > static_cast<long>(t.size()))
            throw FormatError("throw " + std::to_string(x) + " out of range");
    try {
        return JugglingFunction::from_throws(t);
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

// ---- juggling functions

inline Json to_json(const JugglingFunction& pi) {
    Json j;
    j["period"] = pi.period();
    j["throws"] = pi.throws();
    return j;
}

inline JugglingFunction juggling_from_json(const Json& j) {
    long n = integer_field(j, "period");
    auto t = throws_from_json(array_field(j, "throws"));
    if (static_cast<long>(t.size()) != n) throw FormatError("period does not match the number of throws");
    return juggling_from_throws(t);
}

// ---- matrices

inline Json to_json(const Matrix& m) {
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json r = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) r.push_back(rational_to_json(m(i, c)));
        rows.push_back(r);
    }
    j["entries"] = rows;
    return j;
}

inline Matrix matrix_from_json(const Json& j) {
    long long k = integer_field(j, "rows"), n = integer_field(j, "cols");
    const Json& e = array_field(j, "entries");
    if (k < 0 || n < 0 || static_cast<long long>(e.size()) != k)
        throw FormatError("matrix: \"rows\" does not match the number of entry rows");
    Matrix m(k, n);
    for (long long i = 0; i < k; ++i) {
        if (!e[i].is_array() || static_cast<long long>(e[i].size()) != n)
            throw FormatError("matrix: row " + std::to_string(i + 1) + " does not have " + std::to_string(n) +
                              " entries");
        for (long long c = 0; c < n; ++c) m(i, c) = rational_from_json(e[i][c]);
    }
    return m;
}

// ---- friezes

inline Json to_json(const PeriodicFrieze& C) {
    Json j;
    j["siteswap"] = C.shape().throws();
    Json cols = Json::object();
    for (long b = 1; b <= C.period(); ++b) {
        Json col = Json::array();
        for (const auto& x : C.columns()[b - 1]) col.push_back(to_string(x));
        cols[std::to_string(b)] = col;
    }
    j["columns"] = cols;
    return j;
}

inline PeriodicFrieze frieze_from_json(const Json& j) {
    JugglingFunction pi = juggling_from_throws(throws_from_json(array_field(j, "siteswap")));
    long n = pi.period();
    if (!j.contains("columns") || !j.at("columns").is_object()) throw FormatError("frieze: missing \"columns\" object");
    const Json& cols = j.at("columns");
    if (static_cast<long>(cols.size()) != n)
        throw FormatError("frieze: expected " + std::to_string(n) + " columns");
    std::vector<std::vector<Rational>> data(n);
    for (long b = 1; b <= n; ++b) {
        std::string key = std::to_string(b);
        if (!cols.contains(key) || !cols.at(key).is_array()) throw FormatError("frieze: missing column \"" + key + "\"");
        const Json& col = cols.at(key);
        if (static_cast<long>(col.size()) != n + 1)
            throw FormatError("frieze: column " + key + " must list " + std::to_string(n + 1) + " entries");
        for (const auto& x : col) data[b - 1].push_back(rational_from_json(x));
    }
    try {
        return PeriodicFrieze(pi, std::move(data));
    } catch (const std::invalid_argument& e) {
        throw FormatError(e.what());
    }
}

// ---- solution windows

inline Json to_json(const SolutionWindow& w) {
    Json j;
    j["period"] = w.period;
    j["sign_exponent"] = w.sign_exponent;
    Json cols = Json::object();
    for (long b = 1; b <= w.period; ++b) {
        Json col = Json::array();
        for (const auto& x : w.columns[b - 1]) col.push_back(to_string(x));
        cols[std::to_string(b)] = col;
    }
    j["columns"] = cols;
    return j;
}

inline SolutionWindow solution_window_from_json(const Json& j) {
    SolutionWindow w;
    w.period = integer_field(j, "period");
    w.sign_exponent = integer_field(j, "sign_exponent");
    if (w.period <= 0) throw FormatError("solution window: period must be positive");
    if (!j.contains("columns") || !j.at("columns").is_object()) throw FormatError("solution window: missing columns");
    for (long b = 1; b <= w.period; ++b) {
        std::string key = std::to_string(b);
        const Json& cols = j.at("columns");
        if (!cols.contains(key) || !cols.at(key).is_array() || static_cast<long>(cols.at(key).size()) != w.period)
            throw FormatError("solution window: bad column \"" + key + "\"");
        std::vector<Rational> col;
        for (const auto& x : cols.at(key)) col.push_back(rational_from_json(x));
        w.columns.push_back(std::move(col));
    }
    return w;
}

// ---- reports

inline Json to_json(const FriezeReport& r) {
    auto failures = [](const std::vector<DiamondFailure>& fs) {
        Json arr = Json::array();
        for (const auto& f : fs) {
            Json x;
            x["a"] = f.a;
            x["b"] = f.b;
            x["det"] = to_string(f.determinant);
            arr.push_back(x);
        }
        return arr;
    };
    Json j;
    j["is_frieze"] = r.is_frieze();
    j["prefrieze_ok"] = r.prefrieze_ok;
    j["checked_pairs"] = r.checked_pairs;
    j["tame_checked"] = r.tame_checked;
    j["frieze_failures"] = failures(r.frieze_failures);
    j["tame_failures"] = failures(r.tame_failures);
    return j;
}

inline Json to_json(const UnimodularCertificate& c) {
    Json j;
    j["kind"] = c.kind == UnimodularCertificate::Kind::consecutive ? "consecutive" : "positroid";
    j["ok"] = c.ok();
    Json minors = Json::array();
    for (const auto& m : c.checked_minors) {
        Json x;
        x["columns"] = m.columns;
        x["det"] = to_string(m.determinant);
        minors.push_back(x);
    }
    j["checked_minors"] = minors;
    Json viol = Json::array();
    for (const auto& v : c.rank_violations) {
        Json x;
        x["a"] = v.a;
        x["b"] = v.b;
        x["rank"] = v.rank;
        x["allowed"] = v.allowed;
        viol.push_back(x);
    }
    j["rank_violations"] = viol;
    return j;
}

inline Json parse_json_text(const std::string& text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw FormatError(std::string("invalid JSON: ") + e.what());
    }
}

}  // namespace jfrieze

#endif
