#pragma once

// Exact arithmetic in GF(p^m), p an odd prime, with elements stored as
// polynomial-basis coefficient vectors packed into a single radix-p integer.
// The packed value doubles as the canonical sort key everywhere ("sorted
// canonically" = ascending packed value).
//
// Multiplicative structure: for q up to 2^22 every spec precomputes discrete
// exp/log tables against a fixed generator, making mul/inv/pow/n-th roots O(1).
// Specs are interned by (p, m, modulus), so spec identity is pointer identity
// and cross-spec arithmetic is rejected outright instead of coerced.

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/errors.hpp"

namespace curvelab {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

inline bool is_prime_u64(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

inline std::vector<u64> distinct_prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// (p, e) with n = p^e, or nullopt if n is not a prime power.
inline std::optional<std::pair<u32, u32>> prime_power_split(u64 n) {
    if (n < 2) return std::nullopt;
    auto fs = distinct_prime_factors(n);
    if (fs.size() != 1) return std::nullopt;
    u64 p = fs[0];
    u32 e = 0;
    while (n > 1) {
        n /= p;
        ++e;
    }
    return std::make_pair(static_cast<u32>(p), e);
}

inline u64 powmod_u64(u64 b, u64 e, u64 mod) {
    u64 r = 1 % mod;
    b %= mod;
    while (e) {
        if (e & 1) r = r * b % mod;
        b = b * b % mod;
        e >>= 1;
    }
    return r;
}

// C(k, j) mod p by Lucas: the product of digit-wise binomials base p.
inline u32 binom_mod_p(u64 k, u64 j, u32 p) {
    if (!is_prime_u64(p)) fail(errc::not_prime, "binomial residue needs a prime modulus");
    auto small_binom = [p](u64 a, u64 b) -> u64 {
        if (b > a) return 0;
        if (b > a - b) b = a - b;
        u64 num = 1, den = 1;
        for (u64 i = 1; i <= b; ++i) {
            num = num * ((a - b + i) % p) % p;
            den = den * (i % p) % p;
        }
        return num * powmod_u64(den, p - 2, p) % p;
    };
    u64 acc = 1;
    while (k || j) {
        acc = acc * small_binom(k % p, j % p) % p;
        if (acc == 0) return 0;
        k /= p;
        j /= p;
    }
    return static_cast<u32>(acc);
}

namespace detail {

// Polynomials over the prime field as raw coefficient vectors (low-to-high),
// used only for modulus selection and irreducibility checks.
using PPoly = std::vector<u32>;

inline void ppoly_trim(PPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline PPoly ppoly_mulmod(const PPoly& a, const PPoly& b, const PPoly& mod, u32 p) {
    if (a.empty() || b.empty()) return {};
    std::vector<u64> tmp(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (std::size_t j = 0; j < b.size(); ++j) tmp[i + j] = (tmp[i + j] + u64(a[i]) * b[j]) % p;
    }
    // mod is monic of degree m
    std::size_t m = mod.size() - 1;
    for (std::size_t i = tmp.size(); i-- > m;) {
        u64 c = tmp[i];
        if (!c) continue;
        tmp[i] = 0;
        for (std::size_t j = 0; j < m; ++j) tmp[i - m + j] = (tmp[i - m + j] + c * (p - mod[j])) % p;
    }
    PPoly out(m);
    for (std::size_t i = 0; i < m && i < tmp.size(); ++i) out[i] = static_cast<u32>(tmp[i]);
    ppoly_trim(out);
    return out;
}

inline PPoly ppoly_powmod_x(u64 e, const PPoly& mod, u32 p) {
    PPoly r{1}, b{0, 1};
    if (mod.size() - 1 == 1) b = ppoly_mulmod({1}, {0, 1}, mod, p);  // reduce X immediately
    while (e) {
        if (e & 1) r = ppoly_mulmod(r, b, mod, p);
        b = ppoly_mulmod(b, b, mod, p);
        e >>= 1;
    }
    return r;
}

inline PPoly ppoly_rem(PPoly a, const PPoly& b, u32 p) {
    ppoly_trim(a);
    std::size_t db = b.size() - 1;
    u32 lead_inv = static_cast<u32>(powmod_u64(b.back(), p - 2, p));
    while (a.size() > db) {
        u64 c = u64(a.back()) * lead_inv % p;
        std::size_t shift = a.size() - 1 - db;
        if (c)
            for (std::size_t j = 0; j < b.size(); ++j)
                a[shift + j] = static_cast<u32>((a[shift + j] + c * (p - b[j])) % p);
        a.pop_back();
        ppoly_trim(a);
        if (a.empty()) break;
    }
    return a;
}

inline PPoly ppoly_gcd(PPoly a, PPoly b, u32 p) {
    ppoly_trim(a);
    ppoly_trim(b);
    while (!b.empty()) {
        PPoly r = ppoly_rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() != 1) {
        u64 inv = powmod_u64(a.back(), p - 2, p);
        for (auto& c : a) c = static_cast<u32>(c * inv % p);
    }
    return a;
}

// Monic f of degree m >= 1 is irreducible over GF(p) iff it shares no root
// with any GF(p^k), k <= m/2: gcd(f, X^(p^k) - X) = 1 for all such k.
inline bool ppoly_irreducible(const PPoly& f, u32 p) {
    std::size_t m = f.size() - 1;
    if (m == 1) return true;
    if (f[0] == 0) return false;  // divisible by X
    u64 pk = 1;
    for (std::size_t k = 1; k <= m / 2; ++k) {
        pk *= p;
        PPoly xq = ppoly_powmod_x(pk, f, p);
        // xq - X
        if (xq.size() < 2) xq.resize(2, 0);
        xq[1] = (xq[1] + p - 1) % p;
        ppoly_trim(xq);
        PPoly g = ppoly_gcd(f, xq, p);
        if (!(g.size() == 1 && g[0] == 1)) return false;
    }
    return true;
}

}  // namespace detail

class FieldSpec;
using SpecPtr = const FieldSpec*;

class FieldElement {
public:
    FieldElement() : s_(nullptr), v_(0) {}
    FieldElement(SpecPtr s, u32 packed) : s_(s), v_(packed) {}

    SpecPtr spec() const { return s_; }
    u32 packed() const { return v_; }
    bool is_zero() const { return v_ == 0; }

    bool operator==(const FieldElement& o) const { return s_ == o.s_ && v_ == o.v_; }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }
    bool operator<(const FieldElement& o) const { return v_ < o.v_; }

    inline std::vector<u32> coeffs() const;
    inline std::string str() const;

    inline FieldElement operator+(FieldElement o) const;
    inline FieldElement operator-(FieldElement o) const;
    inline FieldElement operator-() const;
    inline FieldElement operator*(FieldElement o) const;
    inline FieldElement inv() const;
    inline FieldElement pow(i64 e) const;

private:
    SpecPtr s_;
    u32 v_;
};

class Embedding;

class FieldSpec {
public:
    // Interned factory. With no modulus given, picks the irreducible monic
    // polynomial of degree m whose coefficient vector has the smallest packed
    // value (deterministic across runs and machines).
    static SpecPtr make(u32 p, u32 m, const std::vector<u32>* modulus = nullptr);
    static SpecPtr make(u32 p, u32 m, const std::vector<u32>& modulus) { return make(p, m, &modulus); }

    u32 p() const { return p_; }
    u32 m() const { return m_; }
    u64 q() const { return q_; }
    const std::vector<u32>& modulus() const { return modulus_; }
    bool has_tables() const { return !exp_.empty(); }

    FieldElement zero() const { return {this, 0}; }
    FieldElement one() const { return {this, 1}; }
    FieldElement gen() const { return {this, m_ > 1 ? p_ : 0}; }  // the class of t

    FieldElement from_int(i64 v) const {
        i64 r = v % static_cast<i64>(p_);
        if (r < 0) r += p_;
        return {this, static_cast<u32>(r)};
    }

    FieldElement from_packed(u64 idx) const {
        if (idx >= q_) fail(errc::bad_parameters, "packed value out of range");
        return {this, static_cast<u32>(idx)};
    }

    FieldElement from_coeffs(const std::vector<u32>& c) const {
        if (c.size() != m_) fail(errc::bad_parameters, "coefficient vector has wrong length");
        u64 v = 0;
        for (std::size_t i = m_; i-- > 0;) {
            if (c[i] >= p_) fail(errc::bad_parameters, "coefficient out of range");
            v = v * p_ + c[i];
        }
        return {this, static_cast<u32>(v)};
    }

    std::vector<u32> decompose(u32 v) const {
        std::vector<u32> c(m_);
        for (u32 i = 0; i < m_; ++i) {
            c[i] = v % p_;
            v /= p_;
        }
        return c;
    }

    // --- arithmetic on packed values ---

    u32 add(u32 a, u32 b) const {
        u32 out = 0;
        for (u32 i = 0; i < m_; ++i) {
            u32 da = a % p_, db = b % p_;
            u32 s = da + db;
            if (s >= p_) s -= p_;
            out += s * ppow_[i];
            a /= p_;
            b /= p_;
        }
        return out;
    }

    u32 neg(u32 a) const {
        u32 out = 0;
        for (u32 i = 0; i < m_; ++i) {
            u32 da = a % p_;
            out += (da ? p_ - da : 0) * ppow_[i];
            a /= p_;
        }
        return out;
    }

    u32 sub(u32 a, u32 b) const { return add(a, neg(b)); }

    u32 mul(u32 a, u32 b) const {
        if (a == 0 || b == 0) return 0;
        if (!exp_.empty()) {
            u64 k = u64(log_[a]) + log_[b];
            u64 n = q_ - 1;
            if (k >= n) k -= n;
            return exp_[k];
        }
        return slow_mul(a, b);
    }

    u32 inv_packed(u32 a) const {
        if (a == 0) fail(errc::division_by_zero, "inverse of zero");
        if (!exp_.empty()) {
            u64 n = q_ - 1;
            u64 k = (n - log_[a]) % n;
            return exp_[k];
        }
        return pow_packed(a, static_cast<i64>(q_) - 2);
    }

    u32 pow_packed(u32 a, i64 e) const {
        if (a == 0) {
            if (e > 0) return 0;
            if (e == 0) return 1;
            fail(errc::division_by_zero, "negative power of zero");
        }
        u64 n = q_ - 1;
        i64 em = e % static_cast<i64>(n);
        if (em < 0) em += static_cast<i64>(n);
        if (!exp_.empty()) return exp_[u64(log_[a]) * static_cast<u64>(em) % n];
        u32 r = 1, b = a;
        u64 ee = static_cast<u64>(em);
        while (ee) {
            if (ee & 1) r = slow_mul(r, b);
            b = slow_mul(b, b);
            ee >>= 1;
        }
        return r;
    }

    FieldElement frobenius(FieldElement x, u32 times = 1) const {
        check_same(x);
        u64 n = q_ - 1;
        u64 e = 1;
        for (u32 i = 0; i < times; ++i) e = e * p_ % n;
        return {this, pow_packed(x.packed(), static_cast<i64>(e))};
    }

    // All x with x^n = a, sorted canonically. Size is 0 or gcd(n, q-1) for
    // a != 0 (and [0] for a = 0).
    std::vector<FieldElement> nth_roots(FieldElement a, u64 n) const {
        check_same(a);
        if (n == 0) fail(errc::bad_parameters, "0-th roots are not defined");
        if (a.is_zero()) return {zero()};
        std::vector<FieldElement> out;
        u64 qm1 = q_ - 1;
        if (!exp_.empty()) {
            u64 np = n % qm1;
            u64 ell = log_[a.packed()];
            if (np == 0) {
                if (ell != 0) return {};
                out.reserve(qm1);
                for (u64 v = 1; v < q_; ++v) out.push_back({this, static_cast<u32>(v)});
                return out;  // already sorted by packed value
            }
            u64 d = std::gcd(np, qm1);
            if (ell % d != 0) return {};
            u64 n2 = np / d, q2 = qm1 / d;
            u64 k0 = (ell / d) % q2 * powmod_u64(n2 % q2, euler_inverse_exponent(q2), q2) % q2;
            out.reserve(d);
            for (u64 j = 0; j < d; ++j) out.push_back({this, exp_[(k0 + j * q2) % qm1]});
        } else {
            for (u64 v = 1; v < q_; ++v)
                if (pow_packed(static_cast<u32>(v), static_cast<i64>(n % qm1)) == a.packed())
                    out.push_back({this, static_cast<u32>(v)});
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    void check_same(const FieldElement& x) const {
        if (x.spec() != this) fail(errc::spec_mismatch, "element belongs to a different field spec");
    }

    bool same(const FieldSpec& o) const { return p_ == o.p_ && m_ == o.m_ && modulus_ == o.modulus_; }

    std::string name() const {
        return "GF(" + std::to_string(p_) + (m_ > 1 ? "^" + std::to_string(m_) : "") + ")";
    }

    // Canonical embedding into GF(p^(m*k)); cached after first computation.
    const Embedding& embedding_into(SpecPtr big) const;

    std::string elem_str(u32 v) const {
        if (v == 0) return "0";
        auto c = decompose(v);
        std::string out;
        for (u32 i = 0; i < m_; ++i) {
            if (!c[i]) continue;
            if (!out.empty()) out += "+";
            if (i == 0) {
                out += std::to_string(c[i]);
            } else {
                if (c[i] != 1) out += std::to_string(c[i]);
                out += "t";
                if (i > 1) out += "^" + std::to_string(i);
            }
        }
        return out;
    }

private:
    FieldSpec(u32 p, u32 m, std::vector<u32> modulus);

    u32 slow_mul(u32 a, u32 b) const {
        auto da = decompose(a), db = decompose(b);
        std::vector<u64> tmp(2 * m_ - 1, 0);
        for (u32 i = 0; i < m_; ++i) {
            if (!da[i]) continue;
            for (u32 j = 0; j < m_; ++j) tmp[i + j] = (tmp[i + j] + u64(da[i]) * db[j]) % p_;
        }
        for (std::size_t i = tmp.size(); i-- > m_;) {
            u64 c = tmp[i];
            if (!c) continue;
            tmp[i] = 0;
            for (u32 j = 0; j < m_; ++j) tmp[i - m_ + j] = (tmp[i - m_ + j] + c * (p_ - modulus_[j])) % p_;
        }
        u64 v = 0;
        for (std::size_t i = m_; i-- > 0;) v = v * p_ + (i < tmp.size() ? tmp[i] : 0);
        return static_cast<u32>(v);
    }

    // exponent such that x^e = x^(-1) mod n for x coprime to n: phi(n)-1.
    static u64 euler_inverse_exponent(u64 n) {
        u64 phi = n;
        for (u64 f : distinct_prime_factors(n)) phi = phi / f * (f - 1);
        return phi - 1;
    }

    void build_tables();

    u32 p_, m_;
    u64 q_;
    std::vector<u32> modulus_;  // m+1 coefficients, monic
    std::vector<u32> ppow_;     // p^0..p^(m-1)
    std::vector<u32> exp_;      // size q-1 when built
    std::vector<u32> log_;      // size q when built

    static constexpr u64 kTableCap = 1ull << 22;
};

// --- FieldElement inline ops -------------------------------------------------

inline std::vector<u32> FieldElement::coeffs() const { return s_->decompose(v_); }
inline std::string FieldElement::str() const { return s_->elem_str(v_); }

inline FieldElement FieldElement::operator+(FieldElement o) const {
    s_->check_same(o);
    return {s_, s_->add(v_, o.v_)};
}
inline FieldElement FieldElement::operator-(FieldElement o) const {
    s_->check_same(o);
    return {s_, s_->sub(v_, o.v_)};
}
inline FieldElement FieldElement::operator-() const { return {s_, s_->neg(v_)}; }
inline FieldElement FieldElement::operator*(FieldElement o) const {
    s_->check_same(o);
    return {s_, s_->mul(v_, o.v_)};
}
inline FieldElement FieldElement::inv() const { return {s_, s_->inv_packed(v_)}; }
inline FieldElement FieldElement::pow(i64 e) const { return {s_, s_->pow_packed(v_, e)}; }

inline FieldElement operator*(i64 k, FieldElement x) { return x.spec()->from_int(k) * x; }

// --- Embedding ----------------------------------------------------------------

// GF(p^m) -> GF(p^M), m | M, by sending t to the smallest (packed) root of the
// base modulus in the big field. Computed once per ordered spec pair.
class Embedding {
public:
    Embedding(SpecPtr from, SpecPtr to) : from_(from), to_(to) {
        if (from->p() != to->p() || to->m() % from->m() != 0)
            fail(errc::spec_mismatch, "no canonical embedding between these specs");
        if (from == to) return;  // identity: map() short-circuits
        const auto& mod = from->modulus();
        FieldElement root = to->zero();
        bool found = false;
        for (u64 v = 0; v < to->q(); ++v) {
            FieldElement x = to->from_packed(v);
            FieldElement acc = to->from_int(mod[from->m()]);
            for (std::size_t i = mod.size() - 1; i-- > 0;) acc = acc * x + to->from_int(mod[i]);
            if (acc.is_zero()) {
                root = x;
                found = true;
                break;
            }
        }
        if (!found) fail(errc::internal, "base modulus has no root in the extension");
        FieldElement acc = to->one();
        for (u32 i = 0; i < from->m(); ++i) {
            tpow_.push_back(acc);
            acc = acc * root;
        }
    }

    SpecPtr from() const { return from_; }
    SpecPtr to() const { return to_; }

    FieldElement map(FieldElement x) const {
        from_->check_same(x);
        if (from_ == to_) return x;
        auto c = x.coeffs();
        FieldElement out = to_->zero();
        for (u32 i = 0; i < from_->m(); ++i)
            if (c[i]) out = out + to_->from_int(c[i]) * tpow_[i];
        return out;
    }

private:
    SpecPtr from_;
    SpecPtr to_;
    std::vector<FieldElement> tpow_;
};

// --- FieldSpec implementation --------------------------------------------------

namespace detail {

struct SpecKey {
    u32 p, m;
    std::vector<u32> modulus;
    bool operator<(const SpecKey& o) const {
        if (p != o.p) return p < o.p;
        if (m != o.m) return m < o.m;
        return modulus < o.modulus;
    }
};

inline std::map<SpecKey, std::unique_ptr<FieldSpec>>& spec_pool();
inline std::mutex& spec_mutex() {
    static std::mutex mu;
    return mu;
}

inline std::map<std::pair<SpecPtr, SpecPtr>, std::unique_ptr<Embedding>>& embed_pool() {
    static std::map<std::pair<SpecPtr, SpecPtr>, std::unique_ptr<Embedding>> pool;
    return pool;
}

}  // namespace detail

inline FieldSpec::FieldSpec(u32 p, u32 m, std::vector<u32> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (u32 i = 0; i < m_; ++i) {
        ppow_.push_back(static_cast<u32>(q_));
        q_ *= p_;
    }
    if (q_ <= kTableCap) build_tables();
}

inline void FieldSpec::build_tables() {
    u64 n = q_ - 1;
    auto factors = distinct_prime_factors(n);
    u32 gen = 0;
    for (u64 v = 1; v < q_; ++v) {
        bool ok = v > 1 || q_ == 2;
        for (u64 f : factors) {
            if (pow_packed(static_cast<u32>(v), static_cast<i64>(n / f)) == 1) {
                ok = false;
                break;
            }
        }
        if (ok) {
            gen = static_cast<u32>(v);
            break;
        }
    }
    if (!gen && n > 1) fail(errc::internal, "no multiplicative generator found");
    exp_.resize(n);
    log_.assign(q_, 0);
    u32 cur = 1;
    for (u64 k = 0; k < n; ++k) {
        exp_[k] = cur;
        log_[cur] = static_cast<u32>(k);
        cur = slow_mul(cur, gen);
    }
}

inline std::map<detail::SpecKey, std::unique_ptr<FieldSpec>>& detail::spec_pool() {
    static std::map<SpecKey, std::unique_ptr<FieldSpec>> pool;
    return pool;
}

inline SpecPtr FieldSpec::make(u32 p, u32 m, const std::vector<u32>* modulus) {
    if (!is_prime_u64(p) || p < 3) fail(errc::not_prime, "p must be an odd prime >= 3");
    if (m < 1) fail(errc::bad_parameters, "extension degree must be >= 1");
    u64 q = 1;
    for (u32 i = 0; i < m; ++i) {
        q *= p;
        if (q > (1ull << 24)) fail(errc::cap_exceeded, "p^m exceeds the 2^24 desk-scale cap");
    }

    std::vector<u32> mod;
    if (modulus) {
        mod = *modulus;
        if (mod.size() != m + 1 || mod[m] != 1)
            fail(errc::bad_parameters, "modulus must be monic of degree m");
        for (u32 c : mod)
            if (c >= p) fail(errc::bad_parameters, "modulus coefficient out of range");
        if (!detail::ppoly_irreducible(mod, p))
            fail(errc::reducible_modulus, "modulus is reducible over GF(p)");
    } else {
        mod.assign(m + 1, 0);
        mod[m] = 1;
        u64 limit = 1;
        for (u32 i = 0; i < m; ++i) limit *= p;
        bool found = false;
        for (u64 v = 0; v < limit; ++v) {
            u64 t = v;
            for (u32 i = 0; i < m; ++i) {
                mod[i] = static_cast<u32>(t % p);
                t /= p;
            }
            if (detail::ppoly_irreducible(mod, p)) {
                found = true;
                break;
            }
        }
        if (!found) fail(errc::internal, "no irreducible modulus found");
    }

    std::lock_guard<std::mutex> lk(detail::spec_mutex());
    detail::SpecKey key{p, m, mod};
    auto& pool = detail::spec_pool();
    auto it = pool.find(key);
    if (it == pool.end())
        it = pool.emplace(std::move(key), std::unique_ptr<FieldSpec>(new FieldSpec(p, m, mod))).first;
    return it->second.get();
}

inline const Embedding& FieldSpec::embedding_into(SpecPtr big) const {
    std::lock_guard<std::mutex> lk(detail::spec_mutex());
    auto& pool = detail::embed_pool();
    auto key = std::make_pair(static_cast<SpecPtr>(this), big);
    auto it = pool.find(key);
    if (it == pool.end()) it = pool.emplace(key, std::make_unique<Embedding>(this, big)).first;
    return *it->second;
}

// GF(p^(m*k)) with the canonical modulus.
inline SpecPtr extension_of(SpecPtr base, u32 k) {
    if (k == 1) return base;
    return FieldSpec::make(base->p(), base->m() * k);
}

}  // namespace curvelab
