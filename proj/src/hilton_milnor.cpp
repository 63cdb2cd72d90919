#include "polyprod/hilton_milnor.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>

#include "polyprod/wedge.hpp"

namespace polyprod {

std::string LieBasisElement::str() const {
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i) out += ".";
        out += "x" + std::to_string(word[i]);
    }
    return out;
}

namespace {

// Prenecklace recursion (Duval/Sawada–Ruskey): extend position t+1 from the
// periodic continuation upward; a prefix is Lyndon exactly when its period
// equals its length. Depth-first order with children by increasing letter
// yields lexicographic output, and the weight budget prunes whole subtrees.
struct LyndonGen {
    int m;
    long long max_weight;
    const std::vector<int>& weights;
    std::vector<int> a;  // 1-based positions, letters 0..m-1
    std::vector<LieBasisElement>& out;

    void emit(int len) {
        LieBasisElement e;
        e.word.reserve(static_cast<std::size_t>(len));
        e.multidegree.assign(static_cast<std::size_t>(m), 0);
        for (int i = 1; i <= len; ++i) {
            e.word.push_back(a[static_cast<std::size_t>(i)] + 1);
            ++e.multidegree[static_cast<std::size_t>(a[static_cast<std::size_t>(i)])];
        }
        out.push_back(std::move(e));
    }

    void gen(int t, int period, long long wsum) {
        if (t == period) emit(t);
        int low = a[static_cast<std::size_t>(t + 1 - period)];
        for (int j = low; j < m; ++j) {
            long long w = wsum + weights[static_cast<std::size_t>(j)];
            if (w > max_weight) continue;
            a[static_cast<std::size_t>(t + 1)] = j;
            gen(t + 1, j == low ? period : t + 1, w);
        }
    }
};

}  // namespace

std::vector<LieBasisElement> lyndon_words(int m, int max_weight, const std::vector<int>& weights) {
    if (m < 1) throw std::invalid_argument("alphabet must have at least one letter");
    std::vector<int> w = weights.empty() ? std::vector<int>(static_cast<std::size_t>(m), 1) : weights;
    if (static_cast<int>(w.size()) != m) throw std::invalid_argument("one weight per letter required");
    for (int wi : w)
        if (wi < 1) throw std::invalid_argument("letter weights must be >= 1");

    std::vector<LieBasisElement> out;
    int max_len = 0;
    int min_w = *std::min_element(w.begin(), w.end());
    max_len = max_weight / min_w;
    if (max_len < 1) return out;

    LyndonGen gen{m, max_weight, w, std::vector<int>(static_cast<std::size_t>(max_len) + 1, 0), out};
    for (int j = 0; j < m; ++j) {
        if (w[static_cast<std::size_t>(j)] > max_weight) continue;
        gen.a[1] = j;
        gen.gen(1, 1, w[static_cast<std::size_t>(j)]);
    }
    return out;
}

long long mobius(long long n) {
    if (n < 1) throw std::invalid_argument("mobius needs n >= 1");
    long long result = 1;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p) continue;
        n /= p;
        if (n % p == 0) return 0;
        result = -result;
    }
    if (n > 1) result = -result;
    return result;
}

namespace {

long long multinomial(long long n, const std::vector<long long>& parts) {
    __int128 result = 1;
    long long used = 0;
    for (long long p : parts) {
        for (long long i = 1; i <= p; ++i) {
            result = result * (used + i) / i;  // exact: running binomial
            if (result > INT64_MAX) throw std::overflow_error("multinomial overflow at weight " + std::to_string(n));
        }
        used += p;
    }
    return static_cast<long long>(result);
}

}  // namespace

long long witt_count(const std::vector<int>& multidegree) {
    long long n = 0;
    long long g = 0;
    for (int a : multidegree) {
        if (a < 0) throw std::invalid_argument("multidegree entries must be >= 0");
        n += a;
        g = std::gcd(g, static_cast<long long>(a));
    }
    if (n == 0) throw std::invalid_argument("multidegree must be nonzero");
    long long total = 0;
    for (long long d = 1; d <= g; ++d) {
        if (g % d) continue;
        std::vector<long long> parts;
        for (int a : multidegree) parts.push_back(a / d);
        total += mobius(d) * multinomial(n / d, parts);
    }
    return total / n;
}

PoincareSeries HMFactor::series(int max_degree) const {
    if (kind == FactorKind::Sphere) {
        PoincareSeries s = PoincareSeries::one();
        if (sphere_dim <= max_degree) s.add(sphere_dim, 1);
        return s;
    }
    PoincareSeries p;
    p.add(sphere_dim - 1, 1);
    return geometric_series(p, max_degree);
}

std::string HMFactor::attaching_map() const {
    if (kind == FactorKind::Sphere)
        return "suspension E into OmegaS^" + std::to_string(sphere_dim + 1) + ", then a looped Whitehead product";
    if (via_hopf) return "looped Hopf map, then a looped Whitehead product";
    if (basis_element.word.size() <= 1) return "loops on the wedge inclusion";
    return "looped Whitehead product";
}

std::vector<HMFactor> hm_factors(const std::vector<int>& dims, int max_dim) {
    for (int n : dims)
        if (n < 2) throw std::invalid_argument("sphere dimensions must be >= 2");
    if (dims.empty()) return {};
    int max_n = *std::max_element(dims.begin(), dims.end());
    if (max_dim < max_n) throw std::invalid_argument("max_dim must reach the largest sphere dimension");

    std::vector<int> weights;  // letter weight n_i - 1; n(α) = 1 + weighted degree
    for (int n : dims) weights.push_back(n - 1);
    std::vector<HMFactor> out;
    for (auto& e : lyndon_words(static_cast<int>(dims.size()), max_dim - 1, weights)) {
        HMFactor f;
        f.sphere_dim = 1;
        for (std::size_t i = 0; i < weights.size(); ++i)
            f.sphere_dim += e.multidegree[i] * weights[i];
        f.kind = FactorKind::LoopOnSphere;
        f.basis_element = std::move(e);
        out.push_back(std::move(f));
    }
    return out;
}

SeriesCheck series_identity_check(const std::vector<int>& dims, int max_dim) {
    SeriesCheck check;
    check.factor_side = PoincareSeries::one();
    check.factor_side.coeff.resize(static_cast<std::size_t>(max_dim) + 1, 0);
    for (const auto& f : hm_factors(dims, max_dim + 1))
        check.factor_side = mul_truncated(check.factor_side, f.series(max_dim), max_dim);

    PoincareSeries p;
    for (int n : dims) p.add(n - 1, 1);
    check.wedge_side = geometric_series(p, max_dim);
    check.ok = check.factor_side.equals_up_to(check.wedge_side, max_dim);
    return check;
}

PoincareSeries LoopSpaceFactors::series(int max_degree) const {
    PoincareSeries s = PoincareSeries::one();
    s.coeff.resize(static_cast<std::size_t>(max_degree) + 1, 0);
    for (const auto& f : factors) s = mul_truncated(s, f.series(max_degree), max_degree);
    return s;
}

LoopSpaceFactors loop_zk_factors(const SimplicialComplex& K, int max_dim, bool split_hopf) {
    WedgeDecomposition dec = decompose(K, PairsMode::MomentAngle);

    LoopSpaceFactors out;
    out.circle_count = K.m;
    out.hopf_split = split_hopf;
    for (const auto& s : dec.summands)
        for (long long copy = 0; copy < s.multiplicity; ++copy) out.wedge_dims.push_back(*s.sphere_dim);
    if (out.wedge_dims.empty()) return out;  // contractible moment-angle complex

    std::vector<HMFactor> raw = hm_factors(out.wedge_dims, max_dim);
    for (auto& f : raw) {
        if (split_hopf && (f.sphere_dim == 4 || f.sphere_dim == 8)) {
            HMFactor sphere;
            sphere.basis_element = f.basis_element;
            sphere.sphere_dim = f.sphere_dim - 1;
            sphere.kind = FactorKind::Sphere;
            out.factors.push_back(std::move(sphere));
            f.sphere_dim = 2 * f.sphere_dim - 1;
            f.via_hopf = true;
        }
        out.factors.push_back(std::move(f));
    }

    // The factor list must reproduce the loop homology of the wedge.
    PoincareSeries p;
    for (int d : out.wedge_dims) p.add(d - 1, 1);
    if (!out.series(max_dim - 1).equals_up_to(geometric_series(p, max_dim - 1), max_dim - 1))
        throw std::logic_error("loop-space factor series does not match the wedge");
    return out;
}

}  // namespace polyprod
