#include "spectra/coset.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "spectra/closed_form.hpp"

namespace spectra {

namespace {

std::uint64_t pm_of(const Field& fs, std::uint32_t m) {
    if (m < 1 || fs.n() != 2 * m)
        throw Error("coset partition requires field degree n = 2m");
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) pm *= fs.p();
    return pm;
}

} // namespace

std::uint64_t CosetTable::total() const {
    return std::accumulate(cells.begin(), cells.end(), std::uint64_t{0});
}

CosetIndex coset_of(const Field& fs, std::uint32_t m, Elem x) {
    std::uint64_t mod = pm_of(fs, m) + 1;
    if (x == 0 || x == fs.neg(1))
        throw OutsideSharpSet("x must lie outside {0, -1}");
    return CosetIndex{fs.ind(fs.succ(x)) % mod, fs.ind(x) % mod, mod};
}

CosetTable partition_sizes(const Field& fs, std::uint32_t m) {
    std::uint64_t mod = pm_of(fs, m) + 1;
    CosetTable table{mod, std::vector<std::uint64_t>(mod * mod, 0)};
    const Elem minus_one = fs.neg(1);
    for (std::uint64_t x = 1; x < fs.order(); ++x) {
        if (x == minus_one) continue;
        ++table.at(fs.ind(fs.succ(static_cast<Elem>(x))) % mod,
                   fs.ind(static_cast<Elem>(x)) % mod);
    }
    return table;
}

CosetTable delta_zero_coset_table(const Field& fs, std::uint32_t m, std::uint64_t s) {
    std::uint64_t pm = pm_of(fs, m);
    std::uint64_t mod = pm + 1;
    std::uint64_t d = s * (pm - 1);
    CosetTable table{mod, std::vector<std::uint64_t>(mod * mod, 0)};
    const Elem minus_one = fs.neg(1);
    for (std::uint64_t x = 1; x < fs.order(); ++x) {
        if (x == minus_one) continue;
        Elem xs = fs.succ(static_cast<Elem>(x));
        if (fs.pow_map(d, xs) == fs.pow_map(d, static_cast<Elem>(x)))
            ++table.at(fs.ind(xs) % mod, fs.ind(static_cast<Elem>(x)) % mod);
    }
    return table;
}

CosetTable delta_zero_coset_prediction(const Field& fs, std::uint32_t m, std::uint64_t s) {
    if (fs.p() != 2) throw NotApplicable("the per-coset prediction is stated for p = 2 only");
    std::uint64_t pm = pm_of(fs, m);
    std::uint64_t mod = pm + 1;
    std::uint64_t t = std::gcd(s, mod);
    std::uint64_t h = mod / t;
    if (h <= 3)
        throw NotApplicable("(2^m+1)/t <= 3: the per-coset prediction does not apply");

    CosetTable table{mod, std::vector<std::uint64_t>(mod * mod, 0)};
    table.at(0, 0) = pm - 2;
    for (std::uint64_t j1 = 1; j1 < t; ++j1)
        for (std::uint64_t j2 = 1; j2 < t; ++j2)
            if (j1 != j2) table.at(h * j1, h * j2) = 1;
    for (std::uint64_t i = 1; i < h; ++i)
        for (std::uint64_t j1 = 0; j1 < t; ++j1)
            for (std::uint64_t j2 = 0; j2 < t; ++j2)
                if (j1 != j2) table.at((i + h * j1) % mod, (i + h * j2) % mod) = 1;
    return table;
}

bool unit_circle_sum_unique(const Field& fs, std::uint32_t m) {
    if (m < 1 || fs.n() % (2 * m) != 0)
        throw Error("unit circle requires 2m | n");
    std::uint64_t pm = 1;
    for (std::uint32_t i = 0; i < m; ++i) pm *= fs.p();
    // generator of the order p^m+1 subgroup; equals psi^{p^m-1} when n = 2m
    std::uint64_t step = (fs.order() - 1) / (pm + 1);

    std::vector<Elem> circle(pm + 1);
    for (std::uint64_t i = 0; i <= pm; ++i) circle[i] = fs.antilog(step * i % (fs.order() - 1));

    // zero sums are excluded: every pair {u, -u} on the circle sums to 0 (and
    // in characteristic 2 every diagonal pair does), so only nonzero sums can
    // determine their index pair
    std::vector<Elem> sums;
    sums.reserve((pm + 1) * (pm + 2) / 2);
    for (std::uint64_t i = 0; i <= pm; ++i)
        for (std::uint64_t j = i; j <= pm; ++j) {
            Elem s = fs.add(circle[i], circle[j]);
            if (s != 0) sums.push_back(s);
        }
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) == sums.end();
}

std::string partition_csv(const Field& fs, std::uint32_t m, std::uint64_t s) {
    auto sizes = partition_sizes(fs, m);
    auto delta0 = delta_zero_coset_table(fs, m, s);
    std::ostringstream out;
    out << "j1,j2,size,delta0_count\n";
    for (std::uint64_t j1 = 0; j1 < sizes.modulus; ++j1)
        for (std::uint64_t j2 = 0; j2 < sizes.modulus; ++j2)
            out << j1 << ',' << j2 << ',' << sizes.at(j1, j2) << ',' << delta0.at(j1, j2)
                << '\n';
    return out.str();
}

} // namespace spectra
