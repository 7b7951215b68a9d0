// Canonical form of a configuration matrix under row and degree-column
// permutations.
//
// The key is the lexicographically smallest row-major serialization
// (n_i followed by the row's degrees) over all permutations. For a fixed row
// order the best column order sorts columns lexicographically, so the search
// only branches over row orders: rows are chosen one at a time, the columns are
// kept as an ordered partition refined by every chosen row, and only rows whose
// serialized row is minimal at the current depth are expanded. Subtrees are
// pruned by bounding against the best leaf and by row orbits of automorphisms
// discovered when two leaves serialize identically.

#include "cicy/configuration.hpp"
#include "cicy/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace cicy {

namespace {

using Cells = std::vector<std::vector<std::size_t>>;
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

class Search {
public:
    explicit Search(const ConfigurationMatrix& cfg)
        : cfg_(cfg), k_(cfg.rows()), m_(cfg.columns()), used_(k_, false)
    {
        seed_duplicate_row_generators();
    }

    void run()
    {
        Cells cells(1);
        cells[0].resize(m_);
        std::iota(cells[0].begin(), cells[0].end(), 0);
        explore(cells, false);
    }

    std::vector<std::size_t> best_rows;
    std::vector<std::size_t> best_columns;
    std::vector<std::vector<int>> best_serial;

private:
    std::vector<int> serialize(std::size_t r, const Cells& cells) const
    {
        std::vector<int> out;
        out.reserve(m_ + 1);
        out.push_back(cfg_.n(r));
        for (const auto& cell : cells) {
            auto start = out.size();
            for (std::size_t c : cell)
                out.push_back(cfg_.entry(r, c));
            std::sort(out.begin() + static_cast<std::ptrdiff_t>(start), out.end());
        }
        return out;
    }

    Cells refine(const Cells& cells, std::size_t r) const
    {
        Cells out;
        out.reserve(m_);
        for (const auto& cell : cells) {
            auto sorted = cell;
            std::stable_sort(sorted.begin(), sorted.end(), [&](std::size_t a, std::size_t b) {
                return cfg_.entry(r, a) < cfg_.entry(r, b);
            });
            std::size_t i = 0;
            while (i < sorted.size()) {
                std::size_t j = i;
                while (j < sorted.size() && cfg_.entry(r, sorted[j]) == cfg_.entry(r, sorted[i]))
                    ++j;
                out.emplace_back(sorted.begin() + static_cast<std::ptrdiff_t>(i),
                                 sorted.begin() + static_cast<std::ptrdiff_t>(j));
                i = j;
            }
        }
        return out;
    }

    // Identical rows are always interchangeable.
    void seed_duplicate_row_generators()
    {
        for (std::size_t a = 0; a < k_; ++a)
            for (std::size_t b = a + 1; b < k_; ++b)
                if (cfg_.n(a) == cfg_.n(b) && cfg_.row(a) == cfg_.row(b)) {
                    std::vector<std::size_t> g(k_);
                    std::iota(g.begin(), g.end(), 0);
                    std::swap(g[a], g[b]);
                    generators_.push_back(std::move(g));
                    break;
                }
    }

    // Union-find over rows, using generators that fix the current prefix.
    std::vector<std::size_t> orbits() const
    {
        std::vector<std::size_t> parent(k_);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t x) {
            while (parent[x] != x)
                x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& g : generators_) {
            bool fixes = std::all_of(path_.begin(), path_.end(), [&](std::size_t r) { return g[r] == r; });
            if (!fixes)
                continue;
            for (std::size_t x = 0; x < k_; ++x)
                parent[find(x)] = find(g[x]);
        }
        for (std::size_t x = 0; x < k_; ++x)
            parent[x] = find(x);
        return parent;
    }

    // Returns the depth of the node whose current child must be abandoned, or kNone.
    std::size_t explore(const Cells& cells, bool less)
    {
        const std::size_t depth = path_.size();
        if (depth == k_)
            return leaf(cells, less);

        std::vector<int> best_here;
        std::vector<std::size_t> candidates;
        for (std::size_t r = 0; r < k_; ++r) {
            if (used_[r])
                continue;
            auto s = serialize(r, cells);
            if (candidates.empty() || s < best_here) {
                best_here = std::move(s);
                candidates.assign(1, r);
            } else if (s == best_here) {
                candidates.push_back(r);
            }
        }

        if (have_best_ && !less) {
            if (best_here > best_serial[depth])
                return kNone;
            if (best_here < best_serial[depth])
                less = true;
        }

        std::vector<std::size_t> explored;
        for (std::size_t c : candidates) {
            auto orbit = orbits();
            if (std::any_of(explored.begin(), explored.end(),
                            [&](std::size_t e) { return orbit[e] == orbit[c]; }))
                continue;
            explored.push_back(c);

            auto version = best_version_;
            path_.push_back(c);
            used_[c] = true;
            std::size_t jump = explore(refine(cells, c), less);
            used_[c] = false;
            path_.pop_back();

            if (best_version_ != version)
                less = false; // the best leaf now runs through this node
            if (jump != kNone && jump < depth)
                return jump;
        }
        return kNone;
    }

    std::size_t leaf(const Cells& cells, bool less)
    {
        if (!have_best_ || less) {
            have_best_ = true;
            ++best_version_;
            best_rows = path_;
            best_columns.clear();
            for (const auto& cell : cells)
                best_columns.insert(best_columns.end(), cell.begin(), cell.end());
            best_serial.clear();
            Cells acc(1);
            acc[0].resize(m_);
            std::iota(acc[0].begin(), acc[0].end(), 0);
            for (std::size_t r : path_) {
                best_serial.push_back(serialize(r, acc));
                acc = refine(acc, r);
            }
            return kNone;
        }

        // Same serialization as the best leaf: the row correspondence is an automorphism.
        std::vector<std::size_t> g(k_);
        for (std::size_t i = 0; i < k_; ++i)
            g[best_rows[i]] = path_[i];
        std::size_t diverge = 0;
        while (diverge < k_ && best_rows[diverge] == path_[diverge])
            ++diverge;
        if (diverge < k_)
            generators_.push_back(std::move(g));
        return diverge;
    }

    const ConfigurationMatrix& cfg_;
    std::size_t k_, m_;
    std::vector<bool> used_;
    std::vector<std::size_t> path_;
    std::vector<std::vector<std::size_t>> generators_;
    bool have_best_ = false;
    std::size_t best_version_ = 0;
};

void put(std::string& out, int value)
{
    auto u = static_cast<std::uint32_t>(value) ^ 0x80000000u;
    for (int shift = 24; shift >= 0; shift -= 8)
        out.push_back(static_cast<char>((u >> shift) & 0xff));
}

} // namespace

CanonicalForm canonical_form(const ConfigurationMatrix& cfg)
{
    Search search(cfg);
    search.run();

    std::string bytes;
    put(bytes, static_cast<int>(cfg.rows()));
    put(bytes, static_cast<int>(cfg.columns()));
    for (const auto& row : search.best_serial)
        for (int v : row)
            put(bytes, v);

    return CanonicalForm{permute(cfg, search.best_rows, search.best_columns), search.best_rows,
                         search.best_columns, CanonicalKey(std::move(bytes))};
}

CanonicalKey canonical_key(const ConfigurationMatrix& cfg)
{
    return canonical_form(cfg).key;
}

Isomorphism find_isomorphism(const ConfigurationMatrix& from, const ConfigurationMatrix& to)
{
    auto a = canonical_form(from);
    auto b = canonical_form(to);
    if (a.key != b.key)
        throw PreconditionError("configuration matrices are not equivalent");
    Isomorphism iso;
    iso.row_map.resize(from.rows());
    iso.column_map.resize(from.columns());
    for (std::size_t r = 0; r < a.row_order.size(); ++r)
        iso.row_map[a.row_order[r]] = b.row_order[r];
    for (std::size_t c = 0; c < a.column_order.size(); ++c)
        iso.column_map[a.column_order[c]] = b.column_order[c];
    return iso;
}

} // namespace cicy
