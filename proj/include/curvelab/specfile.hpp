#pragma once

// Line-oriented curve-spec text format:
//
//   # comment
//   field p=11 m=2 modulus=1,0,1
//   term coeff=3+2t exps=6,0,0
//
// Coefficients are polynomials in t over GF(p) ("3+2t", "t^2", "10t"); powers
// of t at or above m reduce through the modulus. Exponent triples must all sum
// to the same total degree. Serialization is canonical (X0-major term order),
// so canonical files round-trip byte-identically.

#include <sstream>
#include <string>
#include <vector>

#include "curvelab/plane_curve.hpp"

namespace curvelab {

struct ParsedCurve {
    SpecPtr spec;
    HomogPoly poly;
};

namespace detail {

[[noreturn]] inline void parse_fail(std::size_t line, std::size_t col, const std::string& msg) {
    fail(errc::parse_error,
         "line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
}

inline std::vector<std::string> split_fields(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    out.push_back(cur);
    return out;
}

// coefficient sub-grammar: monomials joined by '+', each [digits][t[^digits]]
inline FieldElement parse_coeff(SpecPtr s, const std::string& text, std::size_t line, std::size_t col0) {
    if (text.empty()) fail(errc::bad_coefficient, "empty coefficient at line " + std::to_string(line));
    FieldElement acc = s->zero();
    std::size_t i = 0;
    while (i < text.size()) {
        std::size_t start = i;
        u64 num = 1;
        bool have_num = false;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            if (!have_num) num = 0;
            have_num = true;
            num = num * 10 + static_cast<u64>(text[i] - '0');
            if (num > (1ull << 40)) fail(errc::bad_coefficient, "coefficient literal too large");
            ++i;
        }
        u64 tpow = 0;
        if (i < text.size() && text[i] == 't') {
            ++i;
            tpow = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                if (i >= text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
                    parse_fail(line, col0 + i, "expected an exponent after '^'");
                tpow = 0;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
                    tpow = tpow * 10 + static_cast<u64>(text[i] - '0');
                    if (tpow > 1000) fail(errc::bad_coefficient, "t-power too large");
                    ++i;
                }
            }
        } else if (!have_num) {
            parse_fail(line, col0 + i, "expected a coefficient monomial");
        }
        if (i == start) parse_fail(line, col0 + i, "malformed coefficient");
        FieldElement mono = s->from_int(static_cast<i64>(num % s->p()));
        if (tpow) mono = mono * s->gen().pow(static_cast<i64>(tpow));
        acc = acc + mono;
        if (i < text.size()) {
            if (text[i] != '+') parse_fail(line, col0 + i, "expected '+' between coefficient monomials");
            ++i;
            if (i >= text.size()) parse_fail(line, col0 + i, "dangling '+' in coefficient");
        }
    }
    return acc;
}

inline u64 parse_uint(const std::string& s, std::size_t line, std::size_t col, const char* what) {
    if (s.empty()) parse_fail(line, col, std::string("expected ") + what);
    u64 v = 0;
    for (char ch : s) {
        if (!std::isdigit(static_cast<unsigned char>(ch)))
            parse_fail(line, col, std::string("malformed ") + what);
        v = v * 10 + static_cast<u64>(ch - '0');
        if (v > (1ull << 40)) parse_fail(line, col, std::string(what) + " too large");
    }
    return v;
}

}  // namespace detail

inline ParsedCurve parse_curve_spec(const std::string& text) {
    std::istringstream in(text);
    std::string raw;
    std::size_t lineno = 0;
    SpecPtr spec = nullptr;
    std::vector<std::pair<Exps, FieldElement>> terms;
    std::optional<u32> degree;

    while (std::getline(in, raw)) {
        ++lineno;
        std::string line = raw;
        if (auto pos = line.find('#'); pos != std::string::npos) line = line.substr(0, pos);
        while (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
            line.pop_back();
        std::size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos) continue;
        line = line.substr(first);

        std::istringstream toks(line);
        std::string head;
        toks >> head;
        if (head == "field") {
            if (spec) detail::parse_fail(lineno, 1, "duplicate field header");
            std::optional<u64> p, m;
            std::vector<u32> modulus;
            bool have_mod = false;
            std::string kv;
            while (toks >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) detail::parse_fail(lineno, 1, "expected key=value, got '" + kv + "'");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "p") {
                    p = detail::parse_uint(val, lineno, 1, "p");
                } else if (key == "m") {
                    m = detail::parse_uint(val, lineno, 1, "m");
                } else if (key == "modulus") {
                    have_mod = true;
                    for (const auto& c : detail::split_fields(val, ','))
                        modulus.push_back(static_cast<u32>(detail::parse_uint(c, lineno, 1, "modulus coefficient")));
                } else {
                    detail::parse_fail(lineno, 1, "unknown field key '" + key + "'");
                }
            }
            if (!p || !m) detail::parse_fail(lineno, 1, "field header needs p= and m=");
            spec = have_mod ? FieldSpec::make(static_cast<u32>(*p), static_cast<u32>(*m), modulus)
                            : FieldSpec::make(static_cast<u32>(*p), static_cast<u32>(*m));
        } else if (head == "term") {
            if (!spec) detail::parse_fail(lineno, 1, "term before field header");
            std::optional<FieldElement> coeff;
            std::optional<Exps> exps;
            std::string kv;
            while (toks >> kv) {
                auto eq = kv.find('=');
                if (eq == std::string::npos) detail::parse_fail(lineno, 1, "expected key=value, got '" + kv + "'");
                std::string key = kv.substr(0, eq), val = kv.substr(eq + 1);
                if (key == "coeff") {
                    coeff = detail::parse_coeff(spec, val, lineno, eq + 2);
                } else if (key == "exps") {
                    auto parts = detail::split_fields(val, ',');
                    if (parts.size() != 3) detail::parse_fail(lineno, 1, "exps needs exactly three entries");
                    Exps e{};
                    for (int k = 0; k < 3; ++k)
                        e[static_cast<std::size_t>(k)] =
                            static_cast<u32>(detail::parse_uint(parts[static_cast<std::size_t>(k)], lineno, 1, "exponent"));
                    exps = e;
                } else {
                    detail::parse_fail(lineno, 1, "unknown term key '" + key + "'");
                }
            }
            if (!coeff || !exps) detail::parse_fail(lineno, 1, "term needs coeff= and exps=");
            u32 total = (*exps)[0] + (*exps)[1] + (*exps)[2];
            if (!degree) degree = total;
            if (total != *degree)
                fail(errc::not_homogeneous, "term at line " + std::to_string(lineno) +
                                                " has degree " + std::to_string(total) +
                                                ", expected " + std::to_string(*degree));
            terms.emplace_back(*exps, *coeff);
        } else {
            detail::parse_fail(lineno, 1, "unknown directive '" + head + "'");
        }
    }
    if (!spec) fail(errc::parse_error, "missing field header");
    if (terms.empty()) fail(errc::parse_error, "no terms");
    HomogPoly poly = HomogPoly::from_terms(spec, *degree, terms);
    if (poly.is_zero()) fail(errc::parse_error, "terms cancel to the zero polynomial");
    return ParsedCurve{spec, poly};
}

inline std::string serialize_curve_spec(const HomogPoly& poly) {
    SpecPtr s = poly.spec();
    std::string out = "field p=" + std::to_string(s->p()) + " m=" + std::to_string(s->m()) + " modulus=";
    const auto& mod = s->modulus();
    for (std::size_t i = 0; i < mod.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(mod[i]);
    }
    out += "\n";
    const auto& t = poly.terms();
    for (auto it = t.rbegin(); it != t.rend(); ++it) {
        out += "term coeff=" + it->second.str() + " exps=" + std::to_string(it->first[0]) + "," +
               std::to_string(it->first[1]) + "," + std::to_string(it->first[2]) + "\n";
    }
    return out;
}

}  // namespace curvelab
