#include "cicy/chow_ring.hpp"

#include "cicy/error.hpp"

#include <algorithm>
#include <limits>
#include <sstream>
#include <unordered_map>

namespace cicy {

namespace {

using Index = ChowClass::Index;
using RawTerms = std::vector<std::pair<Index, Integer>>;

void require_same_ambient(const ChowClass& a, const ChowClass& b)
{
    if (!(a.ambient() == b.ambient()))
        throw InvalidArgument("Chow classes live on different ambients: " + a.ambient().to_string() +
                              " vs " + b.ambient().to_string());
}

std::vector<int> decode(const AmbientSpace& ambient, Index index)
{
    std::vector<int> e(ambient.factor_count());
    for (std::size_t i = 0; i < e.size(); ++i) {
        auto base = static_cast<Index>(ambient.factor(i) + 1);
        e[i] = static_cast<int>(index % base);
        index /= base;
    }
    return e;
}

int index_degree(const AmbientSpace& ambient, Index index)
{
    int degree = 0;
    for (std::size_t i = 0; i < ambient.factor_count(); ++i) {
        auto base = static_cast<Index>(ambient.factor(i) + 1);
        degree += static_cast<int>(index % base);
        index /= base;
    }
    return degree;
}

// Collects sums keyed by index. Dense when the lattice is small.
class Accumulator {
public:
    explicit Accumulator(const AmbientSpace& ambient) : ambient_(ambient)
    {
        if (ambient.lattice_size() <= kDenseLimit)
            dense_.resize(ambient.lattice_size());
    }

    Integer& operator[](Index index)
    {
        if (!dense_.empty()) {
            touched_.push_back(index);
            return dense_[index];
        }
        return sparse_[index];
    }

    ChowClass take()
    {
        RawTerms terms;
        if (!dense_.empty()) {
            std::sort(touched_.begin(), touched_.end());
            touched_.erase(std::unique(touched_.begin(), touched_.end()), touched_.end());
            for (Index idx : touched_)
                if (!dense_[idx].is_zero())
                    terms.emplace_back(idx, std::move(dense_[idx]));
        } else {
            for (auto& [idx, c] : sparse_)
                if (!c.is_zero())
                    terms.emplace_back(idx, std::move(c));
            std::sort(terms.begin(), terms.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
        }
        return ChowClass::from_raw(ambient_, std::move(terms));
    }

private:
    static constexpr Index kDenseLimit = 1 << 14;
    AmbientSpace ambient_;
    std::vector<Integer> dense_;
    std::vector<Index> touched_;
    std::unordered_map<Index, Integer> sparse_;
};

} // namespace

// ---------------------------------------------------------------------------
// AmbientSpace / MultiDegree

AmbientSpace::AmbientSpace(std::vector<int> factors)
{
    if (factors.empty())
        throw InvalidArgument("ambient space needs at least one projective factor");
    auto data = std::make_shared<Data>();
    data->strides.reserve(factors.size());
    for (int n : factors) {
        if (n < 1)
            throw InvalidArgument("projective factor dimension must be >= 1, got " + std::to_string(n));
        data->strides.push_back(data->lattice_size);
        auto base = static_cast<std::uint64_t>(n) + 1;
        if (data->lattice_size > std::numeric_limits<std::uint64_t>::max() / base / 2)
            throw InvalidArgument("ambient space too large for monomial indexing");
        data->lattice_size *= base;
        data->dimension += n;
    }
    data->factors = std::move(factors);
    data_ = std::move(data);
}

std::string AmbientSpace::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < factor_count(); ++i) {
        if (i)
            out += " x ";
        out += "P" + std::to_string(factor(i));
    }
    return out;
}

int MultiDegree::sum() const
{
    int s = 0;
    for (int d : degrees_)
        s += d;
    return s;
}

bool MultiDegree::is_zero() const
{
    return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d == 0; });
}

bool MultiDegree::is_nonnegative() const
{
    return std::all_of(degrees_.begin(), degrees_.end(), [](int d) { return d >= 0; });
}

MultiDegree& MultiDegree::operator+=(const MultiDegree& other)
{
    if (other.size() != size())
        throw InvalidArgument("multidegree length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        degrees_[i] += other.degrees_[i];
    return *this;
}

MultiDegree& MultiDegree::operator-=(const MultiDegree& other)
{
    if (other.size() != size())
        throw InvalidArgument("multidegree length mismatch");
    for (std::size_t i = 0; i < size(); ++i)
        degrees_[i] -= other.degrees_[i];
    return *this;
}

MultiDegree operator*(int scale, MultiDegree a)
{
    for (auto& d : a.degrees_)
        d *= scale;
    return a;
}

std::string MultiDegree::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(degrees_[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------------------
// ChowClass

ChowClass ChowClass::from_raw(AmbientSpace ambient, std::vector<std::pair<Index, Integer>> terms)
{
    ChowClass c(std::move(ambient));
    c.terms_ = std::move(terms);
    return c;
}

ChowClass ChowClass::constant(const AmbientSpace& ambient, const Integer& value)
{
    ChowClass c(ambient);
    if (!value.is_zero())
        c.terms_.emplace_back(0, value);
    return c;
}

ChowClass ChowClass::hyperplane(const AmbientSpace& ambient, std::size_t factor)
{
    if (factor >= ambient.factor_count())
        throw InvalidArgument("hyperplane index out of range");
    ChowClass c(ambient);
    c.terms_.emplace_back(ambient.stride(factor), 1);
    return c;
}

ChowClass ChowClass::monomial(const AmbientSpace& ambient, const Exponents& exponents,
                              const Integer& coefficient)
{
    if (exponents.size() != ambient.factor_count())
        throw InvalidArgument("exponent vector length does not match the ambient");
    ChowClass c(ambient);
    Index index = 0;
    for (std::size_t i = 0; i < exponents.size(); ++i) {
        if (exponents[i] < 0)
            throw InvalidArgument("negative exponent");
        if (exponents[i] > ambient.factor(i))
            return c;
        index += ambient.stride(i) * static_cast<Index>(exponents[i]);
    }
    if (!coefficient.is_zero())
        c.terms_.emplace_back(index, coefficient);
    return c;
}

ChowClass ChowClass::linear_form(const AmbientSpace& ambient, const MultiDegree& degree)
{
    if (degree.size() != ambient.factor_count())
        throw InvalidArgument("multidegree " + degree.to_string() + " does not match ambient " +
                              ambient.to_string());
    ChowClass c(ambient);
    for (std::size_t i = 0; i < degree.size(); ++i)
        if (degree[i] != 0)
            c.terms_.emplace_back(ambient.stride(i), degree[i]);
    return c;
}

Integer ChowClass::coefficient(const Exponents& exponents) const
{
    auto m = monomial(ambient_, exponents);
    if (m.is_zero())
        return 0;
    Index index = m.terms_.front().first;
    auto it = std::lower_bound(terms_.begin(), terms_.end(), index,
                               [](const auto& t, Index i) { return t.first < i; });
    if (it == terms_.end() || it->first != index)
        return 0;
    return it->second;
}

Integer ChowClass::constant_term() const
{
    if (!terms_.empty() && terms_.front().first == 0)
        return terms_.front().second;
    return 0;
}

int ChowClass::degree() const
{
    int d = -1;
    for (const auto& [idx, c] : terms_)
        d = std::max(d, index_degree(ambient_, idx));
    return d;
}

std::vector<ChowClass::Term> ChowClass::terms() const
{
    std::vector<Term> out;
    out.reserve(terms_.size());
    for (const auto& [idx, c] : terms_)
        out.push_back(Term{decode(ambient_, idx), c});
    std::sort(out.begin(), out.end(), [](const Term& a, const Term& b) {
        int da = 0, db = 0;
        for (int e : a.exponents)
            da += e;
        for (int e : b.exponents)
            db += e;
        if (da != db)
            return da > db;
        return a.exponents > b.exponents;
    });
    return out;
}

ChowClass ChowClass::graded_part(int degree) const
{
    ChowClass out(ambient_);
    for (const auto& t : terms_)
        if (index_degree(ambient_, t.first) == degree)
            out.terms_.push_back(t);
    return out;
}

ChowClass ChowClass::truncated(int max_degree) const
{
    ChowClass out(ambient_);
    for (const auto& t : terms_)
        if (index_degree(ambient_, t.first) <= max_degree)
            out.terms_.push_back(t);
    return out;
}

ChowClass& ChowClass::operator+=(const ChowClass& other)
{
    require_same_ambient(*this, other);
    RawTerms merged;
    merged.reserve(terms_.size() + other.terms_.size());
    auto a = terms_.begin();
    auto b = other.terms_.begin();
    while (a != terms_.end() || b != other.terms_.end()) {
        if (b == other.terms_.end() || (a != terms_.end() && a->first < b->first)) {
            merged.push_back(std::move(*a++));
        } else if (a == terms_.end() || b->first < a->first) {
            merged.push_back(*b++);
        } else {
            Integer sum = a->second + b->second;
            if (!sum.is_zero())
                merged.emplace_back(a->first, std::move(sum));
            ++a;
            ++b;
        }
    }
    terms_ = std::move(merged);
    return *this;
}

ChowClass& ChowClass::operator-=(const ChowClass& other)
{
    return *this += -ChowClass(other);
}

ChowClass& ChowClass::operator*=(const Integer& scale)
{
    if (scale.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_)
        t.second *= scale;
    return *this;
}

ChowClass operator*(const ChowClass& a, const ChowClass& b)
{
    return mul(a, b);
}

bool operator==(const ChowClass& a, const ChowClass& b)
{
    return a.ambient_ == b.ambient_ && a.terms_ == b.terms_;
}

std::string ChowClass::to_string() const
{
    if (is_zero())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& term : terms()) {
        Integer c = term.coefficient;
        bool negative = c < 0;
        if (negative)
            c = -c;
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::string mono;
        for (std::size_t i = 0; i < term.exponents.size(); ++i) {
            if (term.exponents[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += "s" + std::to_string(i + 1);
            if (term.exponents[i] > 1)
                mono += "^" + std::to_string(term.exponents[i]);
        }
        if (mono.empty())
            os << c;
        else if (c == 1)
            os << mono;
        else
            os << c << "*" << mono;
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Ring operations

ChowClass add(const ChowClass& a, const ChowClass& b)
{
    return a + b;
}

ChowClass mul_truncated(const ChowClass& a, const ChowClass& b, int max_degree)
{
    require_same_ambient(a, b);
    const AmbientSpace& ambient = a.ambient();
    const std::size_t k = ambient.factor_count();
    if (a.is_zero() || b.is_zero())
        return ChowClass(ambient);

    // Flattened exponent vectors, so the inner loop only adds and compares.
    auto flatten = [&](const ChowClass& c, std::vector<int>& exps, std::vector<int>& degs) {
        exps.reserve(c.term_count() * k);
        for (const auto& [idx, coeff] : c.raw_terms()) {
            auto e = decode(ambient, idx);
            int d = 0;
            for (int x : e)
                d += x;
            exps.insert(exps.end(), e.begin(), e.end());
            degs.push_back(d);
        }
    };
    std::vector<int> ea, eb, da, db;
    flatten(a, ea, da);
    flatten(b, eb, db);
    const auto& factors = ambient.factors();

    Accumulator acc(ambient);
    const auto& ta = a.raw_terms();
    const auto& tb = b.raw_terms();
    for (std::size_t x = 0; x < ta.size(); ++x) {
        const int* ex = &ea[x * k];
        for (std::size_t y = 0; y < tb.size(); ++y) {
            if (max_degree >= 0 && da[x] + db[y] > max_degree)
                continue;
            const int* ey = &eb[y * k];
            bool inside = true;
            for (std::size_t i = 0; i < k; ++i)
                if (ex[i] + ey[i] > factors[i]) {
                    inside = false;
                    break;
                }
            if (inside)
                acc[ta[x].first + tb[y].first] += ta[x].second * tb[y].second;
        }
    }
    return acc.take();
}

ChowClass mul(const ChowClass& a, const ChowClass& b)
{
    return mul_truncated(a, b, -1);
}

Integer integrate(const ChowClass& a)
{
    const auto& terms = a.raw_terms();
    Index top = a.ambient().lattice_size() - 1;
    if (!terms.empty() && terms.back().first == top)
        return terms.back().second;
    return 0;
}

ChowClass multiply_by_linear(const ChowClass& c, const MultiDegree& degree, int max_degree)
{
    const AmbientSpace& ambient = c.ambient();
    if (degree.size() != ambient.factor_count())
        throw InvalidArgument("multidegree does not match the ambient");
    Accumulator acc(ambient);
    for (const auto& [idx, coeff] : c.raw_terms()) {
        auto e = decode(ambient, idx);
        if (max_degree >= 0) {
            int d = 0;
            for (int x : e)
                d += x;
            if (d + 1 > max_degree)
                continue;
        }
        for (std::size_t i = 0; i < degree.size(); ++i)
            if (degree[i] != 0 && e[i] < ambient.factor(i))
                acc[idx + ambient.stride(i)] += coeff * degree[i];
    }
    return acc.take();
}

ChowClass divide_by_one_plus_linear(const ChowClass& c, const MultiDegree& degree, int max_degree)
{
    const AmbientSpace& ambient = c.ambient();
    int top = ambient.dimension();
    if (max_degree >= 0)
        top = std::min(top, max_degree);

    // Q_p = c_p - L * Q_{p-1}
    ChowClass result(ambient);
    ChowClass previous(ambient);
    for (int p = 0; p <= top; ++p) {
        ChowClass piece = c.graded_part(p);
        if (p > 0)
            piece -= multiply_by_linear(previous, degree);
        result += piece;
        previous = std::move(piece);
    }
    return result;
}

// int_V a * prod_j c_1(L_j). Intermediate monomials that can no longer reach the
// point class with the remaining forms are dropped.
Integer integrate_product(const ChowClass& a, std::span<const MultiDegree> forms)
{
    const AmbientSpace& ambient = a.ambient();
    const std::size_t k = ambient.factor_count();

    // remaining[j][i]: number of forms j.. with a nonzero entry in row i.
    std::vector<std::vector<int>> remaining(forms.size() + 1, std::vector<int>(k, 0));
    for (std::size_t j = forms.size(); j-- > 0;)
        for (std::size_t i = 0; i < k; ++i)
            remaining[j][i] = remaining[j + 1][i] + (forms[j][i] != 0 ? 1 : 0);

    struct Entry {
        std::vector<int> exponents;
        Integer coefficient;
    };
    auto reachable = [&](const std::vector<int>& e, std::size_t j) {
        int missing = 0;
        for (std::size_t i = 0; i < k; ++i) {
            int gap = ambient.factor(i) - e[i];
            if (gap > remaining[j][i])
                return false;
            missing += gap;
        }
        return missing == static_cast<int>(forms.size() - j);
    };

    std::unordered_map<ChowClass::Index, Entry> current;
    for (const auto& [idx, c] : a.raw_terms()) {
        auto e = decode(ambient, idx);
        if (reachable(e, 0))
            current.emplace(idx, Entry{std::move(e), c});
    }
    for (std::size_t j = 0; j < forms.size() && !current.empty(); ++j) {
        std::unordered_map<ChowClass::Index, Entry> next;
        next.reserve(current.size() * 2);
        for (auto& [idx, entry] : current) {
            for (std::size_t i = 0; i < k; ++i) {
                if (forms[j][i] == 0 || entry.exponents[i] >= ambient.factor(i))
                    continue;
                ++entry.exponents[i];
                if (reachable(entry.exponents, j + 1)) {
                    auto nidx = idx + ambient.stride(i);
                    auto it = next.find(nidx);
                    if (it == next.end())
                        next.emplace(nidx, Entry{entry.exponents, entry.coefficient * forms[j][i]});
                    else
                        it->second.coefficient += entry.coefficient * forms[j][i];
                }
                --entry.exponents[i];
            }
        }
        current = std::move(next);
    }
    auto top = ambient.lattice_size() - 1;
    auto it = current.find(top);
    return it == current.end() ? Integer(0) : it->second.coefficient;
}

ChowClass chern_of_sum(const AmbientSpace& ambient, std::span<const MultiDegree> bundles,
                       int max_degree)
{
    ChowClass total = ChowClass::one(ambient);
    for (const auto& d : bundles)
        total += multiply_by_linear(total, d, max_degree);
    return total;
}

ChowClass segre_inverse(const ChowClass& c)
{
    if (c.constant_term() != 1)
        throw InvalidArgument("segre_inverse needs a class with constant term 1, got " + c.to_string());
    const AmbientSpace& ambient = c.ambient();
    const int top = ambient.dimension();

    std::vector<ChowClass> chern;
    chern.reserve(top + 1);
    for (int p = 0; p <= top; ++p)
        chern.push_back(c.graded_part(p));

    std::vector<ChowClass> segre{ChowClass::one(ambient)};
    for (int p = 1; p <= top; ++p) {
        ChowClass s(ambient);
        for (int i = 1; i <= p; ++i)
            if (!chern[i].is_zero() && !segre[p - i].is_zero())
                s -= mul(chern[i], segre[p - i]);
        segre.push_back(std::move(s));
    }
    ChowClass out(ambient);
    for (auto& s : segre)
        out += s;
    return out;
}

ChowClass tangent_chern(const AmbientSpace& ambient, int max_degree)
{
    const std::size_t k = ambient.factor_count();
    if (max_degree < 0)
        max_degree = ambient.dimension();

    // The factors use disjoint variables, so each coefficient is a product of
    // binomials C(n_i + 1, e_i).
    RawTerms terms;
    std::vector<int> e(k, 0);
    auto visit = [&](auto&& self, std::size_t i, int degree, Index index, const Integer& coeff) -> void {
        if (i == k) {
            terms.emplace_back(index, coeff);
            return;
        }
        int n = ambient.factor(i);
        for (int x = 0; x <= n && degree + x <= max_degree; ++x)
            self(self, i + 1, degree + x, index + ambient.stride(i) * static_cast<Index>(x),
                 coeff * polynomial_binomial(n + 1, x));
    };
    visit(visit, 0, 0, 0, Integer(1));
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return ChowClass::from_raw(ambient, std::move(terms));
}

Integer polynomial_binomial(const Integer& a, int n)
{
    if (n < 0)
        return 0;
    Integer num = 1;
    Integer den = 1;
    for (int i = 0; i < n; ++i) {
        num *= a - i;
        den *= i + 1;
    }
    return num / den;
}

Integer chi_line_bundle(const AmbientSpace& ambient, const MultiDegree& degree)
{
    if (degree.size() != ambient.factor_count())
        throw InvalidArgument("multidegree does not match the ambient");
    Integer chi = 1;
    for (std::size_t i = 0; i < degree.size(); ++i) {
        chi *= polynomial_binomial(Integer(degree[i]) + ambient.factor(i), ambient.factor(i));
        if (chi.is_zero())
            break;
    }
    return chi;
}

} // namespace cicy
