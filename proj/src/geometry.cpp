#include "posetlab/geometry.hpp"

#include <cmath>
#include <random>
#include <vector>

#include "posetlab/error.hpp"
#include "posetlab/parallel.hpp"

namespace posetlab {

namespace {

Rational power(const Rational& base, int e) {
    Rational r = 1;
    for (int i = 0; i < e; ++i) r *= base;
    return r;
}

Rational rho(int n, int k, int l, const Rational& s, const Rational& t) {
    const Rational u = 1 - s - t;
    Rational denom(factorial(k - 1) * factorial(l - 1) * factorial(n - k - l));
    return power(s, k - 1) * power(t, l - 1) * power(u, n - k - l) / denom;
}

void check_slice(const Rational& s, const Rational& t) {
    if (s <= 0 || t <= 0 || s >= 1 || t >= 1 || s + t >= 1) {
        throw Error(ErrorKind::degenerate_slice, "need 0 < s, t and s + t < 1");
    }
}

}  // namespace

Rational volume_formula(const FTable& F, const Rational& s, const Rational& t) {
    Rational total = 0;
    for (const auto& [cell, c] : F.entries()) {
        const auto [k, l] = cell;
        if (k < 1 || l < 1 || k + l > F.n() - 1) continue;
        total += Rational(c) * rho(F.n(), k, l, s, t);
    }
    return total;
}

McEstimate volume_mc(const Poset& p, const MarkedTriple& z, const Rational& s, const Rational& t,
                     std::uint64_t samples, std::uint64_t seed, int threads) {
    check_triple(p, z);
    check_slice(s, t);
    if (samples < min_mc_samples) throw Error(ErrorKind::bad_params, "need at least 10^4 samples");
    Count ordered = 0;
    const FTable signed_table = signed_gap_table(p, z);
    for (const auto& [cell, c] : signed_table.entries()) {
        if (cell.first > 0 && cell.second > 0) ordered += c;
    }
    if (ordered == 0) throw Error(ErrorKind::degenerate_slice, "no extension has z1 < z2 < z3");

    const int n = p.size();
    const double sd = s.get_d();
    const double td = t.get_d();
    const auto covers = p.covers();
    constexpr std::uint64_t chunks = 64;
    std::vector<std::uint64_t> hits(chunks, 0);
    parallel_for(chunks, threads, [&](std::size_t chunk) {
        const std::uint64_t begin = samples * chunk / chunks;
        const std::uint64_t end = samples * (chunk + 1) / chunks;
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ULL + chunk);
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        std::vector<double> v(n);
        std::uint64_t local = 0;
        for (std::uint64_t i = begin; i < end; ++i) {
            for (int x = 0; x < n; ++x) {
                if (x != z.z2 && x != z.z3) v[x] = unit(rng);
            }
            v[z.z2] = v[z.z1] + sd;
            v[z.z3] = v[z.z2] + td;
            if (v[z.z3] > 1.0) continue;
            bool inside = true;
            for (auto [x, y] : covers) {
                if (v[x] > v[y]) {
                    inside = false;
                    break;
                }
            }
            if (inside) ++local;
        }
        hits[chunk] = local;
    });
    McEstimate est;
    est.samples = samples;
    for (auto h : hits) est.hits += h;
    est.mean = static_cast<double>(est.hits) / static_cast<double>(samples);
    est.std_error = std::sqrt(est.mean * (1 - est.mean) / static_cast<double>(samples));
    return est;
}

std::map<Cell, Count> interpolate_f_table(int n,
                                          const std::function<Rational(const Rational&, const Rational&)>& volume) {
    if (n < 3) throw Error(ErrorKind::bad_params, "need n >= 3");
    const int d = n - 2;
    std::vector<Cell> monomials;  // exponents (a, b) of s^a t^b (1-s-t)^(d-a-b)
    for (int a = 0; a <= d; ++a) {
        for (int b = 0; a + b <= d; ++b) monomials.emplace_back(a, b);
    }
    const std::size_t m = monomials.size();
    std::vector<std::vector<Rational>> rows;
    for (int i = 0; i <= d; ++i) {
        for (int j = 0; i + j <= d; ++j) {
            const Rational s(Count(i + 1), Count(d + 3));
            const Rational t(Count(j + 1), Count(d + 3));
            std::vector<Rational> row(m + 1);
            for (std::size_t c = 0; c < m; ++c) {
                const auto [a, b] = monomials[c];
                row[c] = power(s, a) * power(t, b) * power(1 - s - t, d - a - b);
            }
            row[m] = volume(s, t);
            rows.push_back(std::move(row));
        }
    }
    for (std::size_t col = 0; col < m; ++col) {
        std::size_t pivot = col;
        while (pivot < m && rows[pivot][col] == 0) ++pivot;
        if (pivot == m) throw Error(ErrorKind::bad_params, "interpolation nodes are not unisolvent");
        std::swap(rows[pivot], rows[col]);
        for (std::size_t r = 0; r < m; ++r) {
            if (r == col || rows[r][col] == 0) continue;
            const Rational factor = rows[r][col] / rows[col][col];
            for (std::size_t c = col; c <= m; ++c) rows[r][c] -= factor * rows[col][c];
        }
    }
    std::map<Cell, Count> out;
    for (std::size_t c = 0; c < m; ++c) {
        const auto [a, b] = monomials[c];
        const int k = a + 1, l = b + 1;
        Rational value = rows[c][m] / rows[c][c];
        value *= Rational(factorial(k - 1) * factorial(l - 1) * factorial(n - k - l));
        value.canonicalize();
        if (value.get_den() != 1) throw Error(ErrorKind::bad_params, "interpolated coefficient is not integral");
        if (value != 0) out[{k, l}] = value.get_num();
    }
    return out;
}

}  // namespace posetlab
