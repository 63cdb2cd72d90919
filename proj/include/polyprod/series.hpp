// Truncated integer power series in one variable t, used for additive
// bookkeeping of wedge summands and loop-space homology.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace polyprod {

struct PoincareSeries {
    std::vector<long long> coeff;  // coeff[d] = coefficient of t^d; zero beyond

    static PoincareSeries one() { return PoincareSeries{{1}}; }

    long long at(int d) const {
        return (d >= 0 && d < static_cast<int>(coeff.size())) ? coeff[static_cast<std::size_t>(d)] : 0;
    }
    void add(int d, long long c) {
        if (d >= static_cast<int>(coeff.size())) coeff.resize(static_cast<std::size_t>(d) + 1, 0);
        coeff[static_cast<std::size_t>(d)] += c;
    }
    // Strips trailing zeros; polynomials compare canonically afterwards.
    void trim() {
        while (!coeff.empty() && coeff.back() == 0) coeff.pop_back();
    }
    int degree() const { return static_cast<int>(coeff.size()) - 1; }

    bool equals_up_to(const PoincareSeries& other, int max_degree) const {
        for (int d = 0; d <= max_degree; ++d)
            if (at(d) != other.at(d)) return false;
        return true;
    }

    bool operator==(const PoincareSeries&) const = default;

    std::string str() const {
        std::string out;
        for (int d = 0; d <= degree(); ++d) {
            long long c = at(d);
            if (c == 0) continue;
            if (!out.empty()) out += c > 0 ? " + " : " - ";
            else if (c < 0) out += "-";
            long long a = c > 0 ? c : -c;
            if (d == 0) out += std::to_string(a);
            else {
                if (a != 1) out += std::to_string(a) + "*";
                out += "t^" + std::to_string(d);
            }
        }
        return out.empty() ? "0" : out;
    }
};

inline PoincareSeries mul_truncated(const PoincareSeries& a, const PoincareSeries& b, int max_degree) {
    PoincareSeries out;
    out.coeff.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    for (int i = 0; i <= std::min(a.degree(), max_degree); ++i) {
        if (a.at(i) == 0) continue;
        for (int j = 0; j <= std::min(b.degree(), max_degree - i); ++j)
            out.coeff[static_cast<std::size_t>(i + j)] += a.at(i) * b.at(j);
    }
    return out;
}

// 1 / (1 - p) truncated; requires p(0) == 0.
inline PoincareSeries geometric_series(const PoincareSeries& p, int max_degree) {
    PoincareSeries out;
    out.coeff.assign(static_cast<std::size_t>(max_degree) + 1, 0);
    out.coeff[0] = 1;
    for (int d = 1; d <= max_degree; ++d)
        for (int j = 1; j <= std::min(d, p.degree()); ++j)
            out.coeff[static_cast<std::size_t>(d)] += p.at(j) * out.coeff[static_cast<std::size_t>(d - j)];
    return out;
}

}  // namespace polyprod
