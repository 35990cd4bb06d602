#include "spectra/field.hpp"

#include <algorithm>
#include <numeric>

namespace spectra {

namespace {

bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
        if (v % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= v; ++d) {
        if (v % d == 0) {
            out.push_back(d);
            while (v % d == 0) v /= d;
        }
    }
    if (v > 1) out.push_back(v);
    return out;
}

// Polynomial-basis arithmetic used only while the log tables are being built.
struct PolyCtx {
    std::uint32_t p, n;
    const std::vector<std::uint32_t>& mod;  // monic, length n+1, constant first

    using Poly = std::vector<std::uint32_t>;  // length n, low-first

    Poly decode(std::uint64_t e) const {
        Poly c(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            c[i] = static_cast<std::uint32_t>(e % p);
            e /= p;
        }
        return c;
    }

    std::uint64_t encode(const Poly& c) const {
        std::uint64_t e = 0;
        for (std::uint32_t i = n; i-- > 0;) e = e * p + c[i];
        return e;
    }

    Poly mul(const Poly& a, const Poly& b) const {
        std::vector<std::uint64_t> r(2 * n - 1, 0);
        for (std::uint32_t i = 0; i < n; ++i) {
            if (!a[i]) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                r[i + j] += std::uint64_t{a[i]} * b[j];
        }
        // reduce degree >= n using the monic modulus
        for (std::uint32_t i = 2 * n - 1; i-- > n;) {
            std::uint64_t c = r[i] % p;
            if (!c) continue;
            for (std::uint32_t j = 0; j < n; ++j)
                r[i - n + j] += std::uint64_t{c} * (p - mod[j] % p);
            r[i] = 0;
        }
        Poly out(n);
        for (std::uint32_t i = 0; i < n; ++i) out[i] = static_cast<std::uint32_t>(r[i] % p);
        return out;
    }

    Poly pow(Poly base, std::uint64_t e) const {
        Poly r(n, 0);
        r[0] = 1;
        while (e) {
            if (e & 1) r = mul(r, base);
            base = mul(base, base);
            e >>= 1;
        }
        return r;
    }

    Poly x_poly() const {
        Poly x(n, 0);
        if (n >= 2) x[1] = 1;
        return x;
    }
};

int poly_deg(const std::vector<std::uint32_t>& a) {
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<std::uint32_t>(std::uint64_t{r} * b % p);
        b = static_cast<std::uint32_t>(std::uint64_t{b} * b % p);
        e >>= 1;
    }
    return r;
}

// gcd of polynomials over F_p, degree of the result only.
int poly_gcd_deg(std::vector<std::uint32_t> a, std::vector<std::uint32_t> b, std::uint32_t p) {
    while (poly_deg(b) >= 0) {
        int db = poly_deg(b);
        std::uint32_t inv = mod_inv(b[db], p);
        while (poly_deg(a) >= db) {
            int da = poly_deg(a);
            std::uint32_t c = static_cast<std::uint32_t>(std::uint64_t{a[da]} * inv % p);
            for (int i = 0; i <= db; ++i) {
                std::uint64_t v = a[da - db + i] + std::uint64_t{c} * (p - b[i]);
                a[da - db + i] = static_cast<std::uint32_t>(v % p);
            }
        }
        std::swap(a, b);
    }
    return poly_deg(a);
}

// Standard test: f (monic, degree n) is irreducible over F_p iff
// x^{p^n} = x (mod f) and gcd(x^{p^{n/r}} - x, f) = 1 for every prime r | n.
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p, std::uint32_t n) {
    if (n == 1) return true;
    PolyCtx ctx{p, n, f};
    auto x = ctx.x_poly();

    std::uint64_t pn = 1;
    for (std::uint32_t i = 0; i < n; ++i) pn *= p;
    if (ctx.pow(x, pn) != x) return false;

    for (std::uint64_t r : prime_factors(n)) {
        std::uint64_t pk = 1;
        for (std::uint32_t i = 0; i < n / r; ++i) pk *= p;
        auto g = ctx.pow(x, pk);
        std::vector<std::uint32_t> diff(n);
        for (std::uint32_t i = 0; i < n; ++i)
            diff[i] = static_cast<std::uint32_t>((g[i] + p - x[i]) % p);
        std::vector<std::uint32_t> fv(f.begin(), f.end());
        if (poly_gcd_deg(fv, diff, p) != 0) return false;
    }
    return true;
}

} // namespace

Field Field::build(std::uint32_t p, std::uint32_t n,
                   const std::vector<std::uint32_t>* poly_override,
                   std::optional<Elem> psi_override,
                   const FieldBudget& budget) {
    if (!is_prime(p))
        throw NonPrimeCharacteristic("characteristic " + std::to_string(p) + " is not prime");
    if (n < 1) throw Error("extension degree must be >= 1");

    std::uint64_t order = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
        order *= p;
        if (order > budget.max_elements)
            throw FieldTooLarge("p^n exceeds the element budget of " +
                                std::to_string(budget.max_elements));
    }

    Field fs;
    fs.p_ = p;
    fs.n_ = n;
    fs.order_ = order;
    fs.q1_ = order - 1;

    if (poly_override) {
        const auto& f = *poly_override;
        if (f.size() != n + 1 || f[n] != 1)
            throw ReducedPolynomial("override polynomial must be monic of degree n");
        for (auto c : f)
            if (c >= p) throw ReducedPolynomial("override polynomial coefficient out of range");
        if (!is_irreducible(f, p, n))
            throw ReducedPolynomial("override polynomial is reducible over F_p");
        fs.poly_ = f;
    } else {
        // lexicographically smallest: low coefficients as a base-p counter
        std::vector<std::uint32_t> f(n + 1, 0);
        f[n] = 1;
        for (std::uint64_t v = 0;; ++v) {
            std::uint64_t vv = v;
            for (std::uint32_t i = 0; i < n; ++i) {
                f[i] = static_cast<std::uint32_t>(vv % p);
                vv /= p;
            }
            if (vv) throw Error("no irreducible polynomial found");  // unreachable
            if (is_irreducible(f, p, n)) break;
        }
        fs.poly_ = f;
    }

    PolyCtx ctx{p, n, fs.poly_};
    auto factors = prime_factors(fs.q1_);
    auto has_full_order = [&](Elem c) {
        auto cp = ctx.decode(c);
        for (auto r : factors) {
            auto pw = ctx.pow(cp, fs.q1_ / r);
            if (ctx.encode(pw) == 1) return false;
        }
        return true;
    };

    if (psi_override) {
        Elem c = *psi_override;
        if (c == 0 || c >= order || !has_full_order(c))
            throw NotPrimitive("override psi does not have order p^n - 1");
        fs.psi_ = c;
    } else {
        Elem c = 1;
        if (order == 2) {
            fs.psi_ = 1;  // F_2: the only nonzero element
        } else {
            for (c = 2; c < order; ++c)
                if (has_full_order(c)) break;
            if (c >= order) throw Error("no primitive element found");  // unreachable
            fs.psi_ = c;
        }
    }

    fs.build_tables();
    return fs;
}

void Field::build_tables() {
    PolyCtx ctx{p_, n_, poly_};

    log_.assign(order_, 0);
    alog_.assign(q1_, 0);
    std::vector<bool> seen(order_, false);

    auto psi_p = ctx.decode(psi_);
    PolyCtx::Poly cur(n_, 0);
    cur[0] = 1;
    for (std::uint64_t e = 0; e < q1_; ++e) {
        Elem enc = static_cast<Elem>(ctx.encode(cur));
        if (seen[enc]) throw NotPrimitive("psi order is smaller than p^n - 1");
        seen[enc] = true;
        alog_[e] = enc;
        log_[enc] = e;
        cur = ctx.mul(cur, psi_p);
    }
    if (ctx.encode(cur) != 1) throw NotPrimitive("psi order does not divide p^n - 1 cleanly");

    // digit-wise helpers
    auto digit_add_one = [&](Elem x) {
        // add the constant 1: increment lowest digit mod p
        std::uint32_t low = x % p_;
        return static_cast<Elem>(x - low + (low + 1) % p_);
    };
    succ_.resize(order_);
    for (std::uint64_t x = 0; x < order_; ++x) succ_[x] = digit_add_one(static_cast<Elem>(x));

    neg_.resize(order_);
    neg_[0] = 0;
    if (p_ == 2) {
        for (std::uint64_t x = 1; x < order_; ++x) neg_[x] = static_cast<Elem>(x);
    } else {
        std::uint64_t half = q1_ / 2;  // -1 = psi^{(q-1)/2}
        for (std::uint64_t x = 1; x < order_; ++x) {
            std::uint64_t e = log_[x] + half;
            if (e >= q1_) e -= q1_;
            neg_[x] = alog_[e];
        }
    }

    zech_.assign(q1_, kZechZero);
    for (std::uint64_t e = 0; e < q1_; ++e) {
        Elem v = succ_[alog_[e]];  // 1 + psi^e
        if (v != 0) zech_[e] = log_[v];
    }
}

Elem Field::add(Elem x, Elem y) const {
    if (x == 0) return y;
    if (y == 0) return x;
    std::uint64_t lx = log_[x], ly = log_[y];
    std::uint64_t d = ly >= lx ? ly - lx : ly + q1_ - lx;
    std::uint64_t z = zech_[d];
    if (z == kZechZero) return 0;
    std::uint64_t s = lx + z;
    if (s >= q1_) s -= q1_;
    return alog_[s];
}

Elem Field::mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    std::uint64_t s = log_[x] + log_[y];
    if (s >= q1_) s -= q1_;
    return alog_[s];
}

Elem Field::inv(Elem x) const {
    if (x == 0) throw LogOfZero("inverse of zero");
    std::uint64_t e = log_[x];
    return alog_[e == 0 ? 0 : q1_ - e];
}

std::uint64_t Field::ind(Elem x) const {
    if (x == 0) throw LogOfZero("ind of zero");
    return log_[x];
}

Elem Field::pow_map(std::uint64_t d, Elem x) const {
    if (d == 0) throw ZeroExponent("exponent d must be >= 1");
    if (x == 0) return 0;
    std::uint64_t e = (d % q1_) * log_[x] % q1_;
    return alog_[e];
}

nlohmann::json Field::to_json() const {
    return nlohmann::json{{"p", p_}, {"n", n_}, {"poly", poly_}, {"psi", psi_}};
}

Field Field::from_json(const nlohmann::json& j, const FieldBudget& budget) {
    std::vector<std::uint32_t> poly = j.at("poly").get<std::vector<std::uint32_t>>();
    Elem psi = j.at("psi").get<Elem>();
    return build(j.at("p").get<std::uint32_t>(), j.at("n").get<std::uint32_t>(), &poly, psi,
                 budget);
}

} // namespace spectra
