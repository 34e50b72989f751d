#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <vector>

namespace sejoin {

// All domain integers are arbitrary precision.  Fermat-link Betti numbers
// grow like (d-1)^(n+2), so fixed-width types are not an option.
// Expression templates are off: every operation yields a plain value.
using Int = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                          boost::multiprecision::et_off>;
using Rat =
    boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                      boost::multiprecision::cpp_int_backend<>>,
                                  boost::multiprecision::et_off>;

// gcd with the convention gcd(0,m) = m, extended to a nonempty sequence of
// nonnegative integers.
Int gcd2(const Int& a, const Int& b);
Int gcd_all(const std::vector<Int>& xs);

// lcm of a nonempty sequence of positive integers.
Int lcm2(const Int& a, const Int& b);
Int lcm_all(const std::vector<Int>& xs);

bool pairwise_coprime(const std::vector<Int>& xs);

// Prime factorization by trial division; fine for the torsion orders that
// occur here (sigma_2-sized numbers).
std::vector<std::pair<Int, int>> factorize(Int n);

// Canonical form of a finite abelian group given as a multiset of cyclic
// orders: invariant factors d_1 | d_2 | ... | d_m, ascending.
std::vector<Int> invariant_factors(std::vector<Int> orders);

std::string int_to_string(const Int& v);
Int int_from_string(const std::string& s);

}  // namespace sejoin
