#include "rf3/field.hpp"

#include <algorithm>
#include <stdexcept>

namespace rf3 {

namespace {

constexpr u64 kMaxQ = 1u << 22;  // internal extensions stay far below this

bool is_prime(u64 v) {
    if (v < 2) return false;
    for (u64 d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

// ---- mod-p polynomial helpers used only to validate/search the modulus ----
// Polynomials are coefficient vectors over Z_p, ascending, normalized.

using Zp = std::vector<u32>;

void ztrim(Zp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Zp zmulmod(const Zp& a, const Zp& b, const Zp& m, u32 p) {
    if (a.empty() || b.empty()) return {};
    Zp c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = u32((c[i + j] + u64(a[i]) * b[j]) % p);
    // reduce by monic m
    const size_t dm = m.size() - 1;
    for (size_t i = c.size(); i-- > dm;) {
        u32 t = c[i];
        if (t == 0) continue;
        c[i] = 0;
        for (size_t j = 0; j < dm; ++j)
            c[i - dm + j] = u32((c[i - dm + j] + u64(t) * (p - m[j] % p)) % p);
    }
    c.resize(std::min(c.size(), dm));
    ztrim(c);
    return c;
}

Zp zpowmod(Zp base, u64 e, const Zp& m, u32 p) {
    Zp r{1};
    while (e) {
        if (e & 1) r = zmulmod(r, base, m, p);
        base = zmulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

Zp zgcd(Zp a, Zp b, u32 p) {
    auto zmod = [&](const Zp& x, const Zp& y) {
        Zp r = x;
        ztrim(r);
        const size_t dy = y.size() - 1;
        // multiply by inverse of y's leading coefficient via Fermat
        u64 lcinv = 1, lc = y.back(), e = p - 2;
        while (e) { if (e & 1) lcinv = lcinv * lc % p; lc = lc * lc % p; e >>= 1; }
        while (r.size() > dy) {
            u64 t = u64(r.back()) * lcinv % p;
            size_t shift = r.size() - 1 - dy;
            for (size_t j = 0; j < y.size(); ++j)
                r[shift + j] = u32((r[shift + j] + t * (p - y[j] % p)) % p);
            ztrim(r);
            if (r.empty()) break;
        }
        return r;
    };
    ztrim(a); ztrim(b);
    while (!b.empty()) {
        Zp r = zmod(a, b);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// X^{p^k} mod m by iterated p-th powers.
Zp frob_power(u32 k, const Zp& m, u32 p) {
    Zp x{0, 1};
    ztrim(x);
    for (u32 i = 0; i < k; ++i) x = zpowmod(x, p, m, p);
    return x;
}

bool is_irreducible(const Zp& m, u32 p) {
    const u32 n = u32(m.size() - 1);
    if (n == 0) return false;
    if (n == 1) return true;
    // X^{p^n} = X (mod m) and gcd(X^{p^{n/l}} - X, m) = 1 for prime l | n
    Zp xn = frob_power(n, m, p);
    Zp x{0, 1};
    if (xn != x) return false;
    for (u32 l = 2; l <= n; ++l) {
        if (n % l != 0 || !is_prime(l)) continue;
        Zp h = frob_power(n / l, m, p);
        // h - X
        Zp d = h;
        d.resize(std::max<size_t>(d.size(), 2), 0);
        d[1] = (d[1] + p - 1) % p;
        ztrim(d);
        Zp g = zgcd(m, d, p);
        if (g.size() != 1) return false;
    }
    return true;
}

std::vector<u64> prime_factors(u64 v) {
    std::vector<u64> f;
    for (u64 d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            f.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) f.push_back(v);
    return f;
}

}  // namespace

FieldCtx::FieldCtx(u32 p, u32 n, std::optional<std::vector<u32>> modulus) : p_(p), n_(n) {
    if (!is_prime(p)) throw std::invalid_argument("field: p must be prime");
    if (n < 1) throw std::invalid_argument("field: n must be >= 1");
    u64 q = 1;
    for (u32 i = 0; i < n; ++i) {
        q *= p;
        if (q > kMaxQ) throw std::invalid_argument("field: q exceeds supported size");
    }
    q_ = u32(q);
    pw_.resize(n + 1);
    pw_[0] = 1;
    for (u32 i = 1; i <= n; ++i) pw_[i] = pw_[i - 1] * p;

    if (modulus) {
        mod_ = *modulus;
        if (mod_.size() != n + 1 || mod_.back() != 1)
            throw std::invalid_argument("field: modulus must be monic of degree n");
        for (u32 c : mod_)
            if (c >= p) throw std::invalid_argument("field: modulus coefficient out of range");
        if (!is_irreducible(mod_, p))
            throw std::invalid_argument("field: modulus is reducible over F_p");
    } else {
        // scan-minimal monic irreducible of degree n
        mod_.assign(n + 1, 0);
        mod_[n] = 1;
        for (u32 idx = 0;; ++idx) {
            if (idx >= q_) throw std::logic_error("field: no irreducible modulus found");
            for (u32 i = 0; i < n; ++i) mod_[i] = idx / pw_[i] % p;
            if (is_irreducible(mod_, p)) break;
        }
    }
    build_tables();
}

u32 FieldCtx::mul_raw(u32 a, u32 b) const {
    // convolution of digit vectors followed by reduction with the monic modulus
    u64 c[64] = {0};
    u32 da[32], db[32];
    for (u32 i = 0; i < n_; ++i) {
        da[i] = a / pw_[i] % p_;
        db[i] = b / pw_[i] % p_;
    }
    for (u32 i = 0; i < n_; ++i) {
        if (da[i] == 0) continue;
        for (u32 j = 0; j < n_; ++j) c[i + j] += u64(da[i]) * db[j];
    }
    for (u32 i = 2 * n_ - 1; i-- > n_;) {
        u64 t = c[i] % p_;
        if (t == 0) continue;
        c[i] = 0;
        for (u32 j = 0; j < n_; ++j) c[i - n_ + j] += t * ((p_ - mod_[j]) % p_);
    }
    u32 r = 0;
    for (u32 i = 0; i < n_; ++i) r += u32(c[i] % p_) * pw_[i];
    return r;
}

void FieldCtx::build_tables() {
    exp_.assign(q_ > 1 ? q_ - 1 : 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
        gen_ = Fe{1};
        exp_[0] = 1;
        return;
    }
    const auto pf = prime_factors(q_ - 1);
    auto pow_raw = [&](u32 x, u64 e) {
        u32 r = 1;
        while (e) {
            if (e & 1) r = mul_raw(r, x);
            x = mul_raw(x, x);
            e >>= 1;
        }
        return r;
    };
    u32 g = 0;
    for (u32 cand = 2; cand < q_; ++cand) {
        bool ok = true;
        for (u64 l : pf)
            if (pow_raw(cand, (q_ - 1) / l) == 1) { ok = false; break; }
        if (ok) { g = cand; break; }
    }
    if (g == 0) throw std::logic_error("field: no generator found");
    gen_ = Fe{g};
    u32 x = 1;
    for (u32 i = 0; i < q_ - 1; ++i) {
        exp_[i] = x;
        log_[x] = i;
        x = mul_raw(x, g);
    }
}

Fe FieldCtx::from_int(i64 k) const {
    i64 r = k % i64(p_);
    if (r < 0) r += p_;
    return Fe{u32(r)};
}

Fe FieldCtx::from_coeffs(const std::vector<u32>& c) const {
    if (c.size() > n_) throw std::invalid_argument("element: too many coefficients");
    u32 v = 0;
    for (size_t i = 0; i < c.size(); ++i) {
        if (c[i] >= p_) throw std::invalid_argument("element: coefficient out of range");
        v += c[i] * pw_[i];
    }
    return Fe{v};
}

std::vector<u32> FieldCtx::coeffs(Fe x) const {
    std::vector<u32> c(n_);
    for (u32 i = 0; i < n_; ++i) c[i] = x.v / pw_[i] % p_;
    return c;
}

Fe FieldCtx::add(Fe a, Fe b) const {
    u32 r = 0, x = a.v, y = b.v;
    for (u32 i = 0; i < n_; ++i) {
        u32 s = x % p_ + y % p_;
        if (s >= p_) s -= p_;
        r += s * pw_[i];
        x /= p_;
        y /= p_;
    }
    return Fe{r};
}

Fe FieldCtx::neg(Fe a) const {
    u32 r = 0, x = a.v;
    for (u32 i = 0; i < n_; ++i) {
        u32 d = x % p_;
        r += (d ? p_ - d : 0) * pw_[i];
        x /= p_;
    }
    return Fe{r};
}

Fe FieldCtx::sub(Fe a, Fe b) const { return add(a, neg(b)); }

Fe FieldCtx::mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    u32 s = log_[a.v] + log_[b.v];
    if (s >= q_ - 1) s -= q_ - 1;
    return Fe{exp_[s]};
}

Fe FieldCtx::inv(Fe a) const {
    if (a.v == 0) throw std::domain_error("field: division by zero");
    u32 l = log_[a.v];
    return Fe{exp_[l == 0 ? 0 : q_ - 1 - l]};
}

Fe FieldCtx::div(Fe a, Fe b) const { return mul(a, inv(b)); }

Fe FieldCtx::pow(Fe a, i64 e) const {
    if (a.v == 0) {
        if (e > 0) return Fe{0};
        if (e == 0) return one();
        throw std::domain_error("field: zero to a negative power");
    }
    i64 m = e % i64(q_ - 1);
    if (m < 0) m += q_ - 1;
    return Fe{exp_[u32(u64(log_[a.v]) * u64(m) % (q_ - 1))]};
}

bool FieldCtx::is_square(Fe x) const {
    if (x.v == 0) throw std::domain_error("is_square: zero has no coset");
    if (p_ == 2) return true;
    return log_[x.v] % 2 == 0;
}

std::optional<Fe> FieldCtx::sqrt(Fe x) const {
    if (x.v == 0) return zero();
    u32 l = log_[x.v];
    if (p_ == 2) {
        // squaring is bijective; invert the Frobenius
        return pow(x, i64(q_) / 2);
    }
    if (l % 2 != 0) return std::nullopt;
    Fe r1{exp_[l / 2]};
    Fe r2 = neg(r1);
    return std::min(r1, r2);
}

u32 FieldCtx::trace_q_over_2(Fe x) const {
    if (p_ != 2) throw std::domain_error("trace_q_over_2: characteristic is odd");
    Fe s = zero(), t = x;
    for (u32 i = 0; i < n_; ++i) {
        s = add(s, t);
        t = mul(t, t);
    }
    if (s.v > 1) throw std::logic_error("trace_q_over_2: value not in F_2");
    return s.v;
}

std::vector<Fe> FieldCtx::cube_transversal() const {
    if ((q_ - 1) % 3 != 0) return {one()};
    // cubes are the elements with log divisible by 3; pick the scan-minimal
    // member of each of the three cosets
    std::vector<Fe> reps(3, Fe{0});
    for (u32 v = 1; v < q_; ++v) {
        u32 c = log_[v] % 3;
        if (reps[c].v == 0) reps[c] = Fe{v};
    }
    std::sort(reps.begin(), reps.end());
    return reps;
}

std::vector<Fe> FieldCtx::elements() const {
    std::vector<Fe> e(q_);
    for (u32 v = 0; v < q_; ++v) e[v] = Fe{v};
    return e;
}

std::string FieldCtx::name() const {
    return n_ == 1 ? std::to_string(p_) : std::to_string(p_) + "^" + std::to_string(n_);
}

}  // namespace rf3
