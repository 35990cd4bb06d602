#include "spectra/spectral.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace spectra {

namespace {

std::vector<Elem> power_table(const Field& f, std::uint64_t d) {
    const std::uint64_t q = f.order(), q1 = q - 1;
    const std::uint64_t dr = d % q1;
    std::vector<Elem> P(q);
    P[0] = 0;
    for (std::uint64_t x = 1; x < q; ++x) P[x] = f.antilog(dr * f.ind(static_cast<Elem>(x)) % q1);
    return P;
}

template <typename Fn>
void parallel_chunks(std::uint64_t total, unsigned threads, Fn&& body) {
    threads = std::max(1u, threads);
    if (threads == 1) {
        body(0u, std::uint64_t{0}, total);
        return;
    }
    std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) {
        std::uint64_t lo = std::min<std::uint64_t>(w * chunk, total);
        std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, total);
        pool.emplace_back([&body, w, lo, hi] { body(w, lo, hi); });
    }
    for (auto& t : pool) t.join();
}

} // namespace

PowerMap PowerMap::from_exponent(const Field& fs, std::uint64_t d) {
    if (d == 0) throw ZeroExponent("exponent d must be >= 1");
    return PowerMap{fs, d, std::nullopt};
}

PowerMap PowerMap::from_sm(const Field& fs, std::uint64_t s, std::uint32_t m) {
    if (s == 0) throw Error("s must be >= 1");
    if (fs.n() != 2 * m)
        throw HypothesisViolated("the (s, m) parametrization requires field degree n = 2m");
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) pm *= fs.p();
    std::uint64_t d = s * (pm - 1);
    if (d == 0) throw ZeroExponent("d = s(p^m - 1) must be >= 1");
    return PowerMap{fs, d, std::make_pair(s, m)};
}

std::uint64_t delta(const PowerMap& pm, Elem a, Elem b) {
    if (a == 0) throw ZeroDerivativeDirection("delta requires a != 0");
    const Field& f = pm.field;
    auto P = power_table(f, pm.d);
    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < f.order(); ++x)
        if (f.sub(P[f.add(static_cast<Elem>(x), a)], P[x]) == b) ++count;
    return count;
}

std::vector<std::uint64_t> ddt_row(const PowerMap& pm, unsigned threads) {
    const Field& f = pm.field;
    const std::uint64_t q = f.order();
    auto P = power_table(f, pm.d);

    threads = std::max(1u, threads);
    std::vector<std::vector<std::uint32_t>> partial(threads);
    parallel_chunks(q, threads, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
        auto& cnt = partial[w];
        cnt.assign(q, 0);
        for (std::uint64_t x = lo; x < hi; ++x)
            ++cnt[f.sub(P[f.succ(static_cast<Elem>(x))], P[x])];
    });

    std::vector<std::uint64_t> row(q, 0);
    for (auto& cnt : partial)
        for (std::uint64_t b = 0; b < q; ++b) row[b] += cnt[b];
    return row;
}

Spectrum differential_spectrum(const PowerMap& pm, unsigned threads) {
    auto row = ddt_row(pm, threads);
    Spectrum s;
    s.kind = SpectrumKind::differential;
    for (auto c : row) ++s.entries[c];
    return s;
}

std::uint64_t beta(const PowerMap& pm, Elem a, Elem b, const EngineBudget& budget) {
    if (a == 0) throw ZeroDerivativeDirection("beta requires a != 0");
    if (b == 0) throw ZeroArgument("beta requires b != 0");
    const Field& f = pm.field;
    const std::uint64_t q = f.order();
    if (q > budget.max_pairs / q)
        throw PairBudgetExceeded("p^{2n} exceeds the pair budget of " +
                                 std::to_string(budget.max_pairs));
    auto P = power_table(f, pm.d);
    std::vector<Elem> G(q);
    for (std::uint64_t x = 0; x < q; ++x) G[x] = P[f.add(static_cast<Elem>(x), a)];

    std::uint64_t count = 0;
    for (std::uint64_t x = 0; x < q; ++x)
        for (std::uint64_t y = 0; y < q; ++y)
            if (f.sub(P[x], P[y]) == b && f.sub(G[x], G[y]) == b) ++count;
    return count;
}

std::vector<std::uint64_t> beta_row(const PowerMap& pm, unsigned threads,
                                    const EngineBudget& budget) {
    const Field& f = pm.field;
    const std::uint64_t q = f.order();
    if (q > budget.max_pairs / q)
        throw PairBudgetExceeded("p^{2n} exceeds the pair budget of " +
                                 std::to_string(budget.max_pairs));

    auto P = power_table(f, pm.d);
    std::vector<Elem> G(q);
    for (std::uint64_t x = 0; x < q; ++x) G[x] = P[f.succ(static_cast<Elem>(x))];

    // A power map with d a multiple of p^m - 1 has a small image, so the pair
    // scan can run on compressed image indices with a precomputed difference
    // table. Falls back to direct field subtraction when the image is large.
    std::vector<Elem> vals(P.begin(), P.end());
    vals.insert(vals.end(), G.begin(), G.end());
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
    const std::uint64_t K = vals.size();

    threads = std::max(1u, threads);
    std::vector<std::vector<std::uint64_t>> partial(threads);

    if (K * K <= (std::uint64_t{1} << 24)) {
        std::unordered_map<Elem, std::uint32_t> idx;
        idx.reserve(K);
        for (std::uint32_t i = 0; i < K; ++i) idx[vals[i]] = i;
        std::vector<Elem> D(K * K);
        for (std::uint32_t i = 0; i < K; ++i)
            for (std::uint32_t j = 0; j < K; ++j) D[i * K + j] = f.sub(vals[i], vals[j]);
        std::vector<std::uint32_t> pi(q), gi(q);
        for (std::uint64_t x = 0; x < q; ++x) {
            pi[x] = idx[P[x]];
            gi[x] = idx[G[x]];
        }
        parallel_chunks(q, threads, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            auto& cnt = partial[w];
            cnt.assign(q, 0);
            for (std::uint64_t x = lo; x < hi; ++x) {
                const std::uint64_t px = std::uint64_t{pi[x]} * K;
                const std::uint64_t gx = std::uint64_t{gi[x]} * K;
                for (std::uint64_t y = 0; y < q; ++y) {
                    Elem b = D[px + pi[y]];
                    if (b != 0 && b == D[gx + gi[y]]) ++cnt[b];
                }
            }
        });
    } else {
        parallel_chunks(q, threads, [&](unsigned w, std::uint64_t lo, std::uint64_t hi) {
            auto& cnt = partial[w];
            cnt.assign(q, 0);
            for (std::uint64_t x = lo; x < hi; ++x) {
                for (std::uint64_t y = 0; y < q; ++y) {
                    Elem b = f.sub(P[x], P[y]);
                    if (b != 0 && b == f.sub(G[x], G[y])) ++cnt[b];
                }
            }
        });
    }

    std::vector<std::uint64_t> row(q, 0);
    for (auto& cnt : partial)
        if (!cnt.empty())
            for (std::uint64_t b = 0; b < q; ++b) row[b] += cnt[b];
    return row;
}

Spectrum boomerang_spectrum(const PowerMap& pm, unsigned threads, const EngineBudget& budget) {
    auto row = beta_row(pm, threads, budget);
    Spectrum s;
    s.kind = SpectrumKind::boomerang;
    for (std::uint64_t b = 1; b < row.size(); ++b) ++s.entries[row[b]];
    return s;
}

bool is_locally_apn(const PowerMap& pm) {
    auto row = ddt_row(pm);
    const Field& f = pm.field;
    std::uint64_t mx = 0;
    for (std::uint64_t b = f.p(); b < f.order(); ++b) mx = std::max(mx, row[b]);
    return mx == 2;
}

} // namespace spectra
