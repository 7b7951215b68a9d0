#pragma once

// Independent reference implementations used only by the tests: a plain
// map-backed truncated polynomial ring with 64-bit coefficients, and a
// brute-force canonical serialization over all permutations.

#include "cicy/configuration.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

namespace oracle {

struct Poly {
    std::vector<int> n;
    std::map<std::vector<int>, long long> terms;

    explicit Poly(std::vector<int> dims) : n(std::move(dims)) {}

    static Poly constant(const std::vector<int>& dims, long long c)
    {
        Poly p(dims);
        if (c != 0)
            p.terms[std::vector<int>(dims.size(), 0)] = c;
        return p;
    }

    static Poly linear(const std::vector<int>& dims, const std::vector<int>& degree)
    {
        Poly p(dims);
        for (std::size_t i = 0; i < dims.size(); ++i) {
            if (degree[i] == 0)
                continue;
            std::vector<int> e(dims.size(), 0);
            e[i] = 1;
            p.terms[e] += degree[i];
        }
        return p;
    }

    Poly operator*(const Poly& other) const
    {
        Poly out(n);
        for (const auto& [ea, ca] : terms)
            for (const auto& [eb, cb] : other.terms) {
                std::vector<int> e(n.size());
                bool ok = true;
                for (std::size_t i = 0; i < n.size() && ok; ++i) {
                    e[i] = ea[i] + eb[i];
                    ok = e[i] <= n[i];
                }
                if (ok)
                    out.terms[e] += ca * cb;
            }
        std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
        return out;
    }

    Poly operator+(const Poly& other) const
    {
        Poly out = *this;
        for (const auto& [e, c] : other.terms)
            out.terms[e] += c;
        std::erase_if(out.terms, [](const auto& t) { return t.second == 0; });
        return out;
    }

    Poly degree_part(int d) const
    {
        Poly out(n);
        for (const auto& [e, c] : terms)
            if (std::accumulate(e.begin(), e.end(), 0) == d)
                out.terms[e] = c;
        return out;
    }

    long long top() const
    {
        auto it = terms.find(n);
        return it == terms.end() ? 0 : it->second;
    }
};

// e = int {c(T) / prod (1 + L_j)}_d * prod L_j, expanded naively.
inline long long euler(const cicy::ConfigurationMatrix& cfg)
{
    const std::vector<int> dims = cfg.dimensions();
    int total = std::accumulate(dims.begin(), dims.end(), 0);
    Poly tangent = Poly::constant(dims, 1);
    for (std::size_t i = 0; i < dims.size(); ++i) {
        std::vector<int> unit(dims.size(), 0);
        unit[i] = 1;
        Poly factor = Poly::constant(dims, 1) + Poly::linear(dims, unit);
        for (int p = 0; p <= dims[i]; ++p)
            tangent = tangent * factor;
    }
    Poly inverse = Poly::constant(dims, 1);
    Poly top_class = Poly::constant(dims, 1);
    for (std::size_t j = 0; j < cfg.columns(); ++j) {
        Poly l = Poly::linear(dims, cfg.column(j).values());
        Poly minus_l = Poly::constant(dims, -1) * l;
        Poly series = Poly::constant(dims, 1);
        Poly power = Poly::constant(dims, 1);
        for (int p = 1; p <= total; ++p) {
            power = power * minus_l;
            series = series + power;
        }
        inverse = inverse * series;
        top_class = top_class * l;
    }
    return ((tangent * inverse).degree_part(cfg.dimension()) * top_class).top();
}

// Row-major serialization (k, m, then n_i and the row entries), minimized over
// every row and column permutation.
inline std::vector<int> brute_canonical(const cicy::ConfigurationMatrix& cfg)
{
    std::vector<std::size_t> rows(cfg.rows()), cols(cfg.columns());
    std::iota(rows.begin(), rows.end(), 0);
    std::vector<int> best;
    do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
            std::vector<int> s{static_cast<int>(cfg.rows()), static_cast<int>(cfg.columns())};
            for (auto r : rows) {
                s.push_back(cfg.n(r));
                for (auto c : cols)
                    s.push_back(cfg.entry(r, c));
            }
            if (best.empty() || s < best)
                best = std::move(s);
        } while (std::next_permutation(cols.begin(), cols.end()));
    } while (std::next_permutation(rows.begin(), rows.end()));
    return best;
}

inline std::vector<int> serialize(const cicy::ConfigurationMatrix& cfg)
{
    std::vector<int> s{static_cast<int>(cfg.rows()), static_cast<int>(cfg.columns())};
    for (std::size_t r = 0; r < cfg.rows(); ++r) {
        s.push_back(cfg.n(r));
        for (std::size_t c = 0; c < cfg.columns(); ++c)
            s.push_back(cfg.entry(r, c));
    }
    return s;
}

} // namespace oracle
