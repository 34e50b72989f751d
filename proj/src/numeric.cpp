#include "sejoin/numeric.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace sejoin {

Int gcd2(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int gcd_all(const std::vector<Int>& xs) {
    if (xs.empty())
        throw std::invalid_argument("gcd_all: empty sequence");
    Int g = 0;
    for (const Int& x : xs) {
        if (x < 0)
            throw std::invalid_argument("gcd_all: negative element");
        g = gcd2(g, x);
    }
    return g;
}

Int lcm2(const Int& a, const Int& b) { return boost::multiprecision::lcm(a, b); }

Int lcm_all(const std::vector<Int>& xs) {
    if (xs.empty())
        throw std::invalid_argument("lcm_all: empty sequence");
    Int l = 1;
    for (const Int& x : xs) {
        if (x < 1)
            throw std::invalid_argument("lcm_all: element < 1");
        l = lcm2(l, x);
    }
    return l;
}

bool pairwise_coprime(const std::vector<Int>& xs) {
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (gcd2(xs[i], xs[j]) != 1)
                return false;
    return true;
}

std::vector<std::pair<Int, int>> factorize(Int n) {
    if (n < 1)
        throw std::invalid_argument("factorize: argument < 1");
    std::vector<std::pair<Int, int>> out;
    for (Int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<Int> invariant_factors(std::vector<Int> orders) {
    // exponents per prime, sorted descending; factor j (from the top) takes
    // the j-th largest exponent of every prime
    std::map<Int, std::vector<int>> exps;
    std::size_t m = 0;
    for (const Int& d : orders) {
        if (d < 2)
            throw std::invalid_argument("invariant_factors: cyclic order < 2");
        for (const auto& [p, e] : factorize(d))
            exps[p].push_back(e);
    }
    for (auto& [p, es] : exps) {
        std::sort(es.begin(), es.end(), std::greater<int>());
        m = std::max(m, es.size());
    }
    std::vector<Int> factors(m, 1);
    for (const auto& [p, es] : exps) {
        for (std::size_t j = 0; j < es.size(); ++j) {
            Int q = 1;
            for (int t = 0; t < es[j]; ++t)
                q *= p;
            factors[j] *= q;  // factors[0] is the largest
        }
    }
    std::reverse(factors.begin(), factors.end());
    return factors;
}

std::string int_to_string(const Int& v) { return v.str(); }

Int int_from_string(const std::string& s) { return Int(s); }

}  // namespace sejoin
