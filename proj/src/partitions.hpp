// partitions.hpp
// Partitions, partition pairs, Littlewood-Richardson coefficients, and the
// weight bookkeeping shared by the crystal and character modules.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "ratfun.hpp"

namespace crystalkit {

// Weakly decreasing list of positive integers; empty list is the empty
// partition. Trailing zeros are never stored.
using Partition = std::vector<long>;

struct PartitionPair {
    Partition plus;   // mu
    Partition minus;  // nu
    bool operator==(const PartitionPair&) const = default;
    auto operator<=>(const PartitionPair&) const = default;
};

// Element of the weight lattice P restricted to the coordinates the library
// uses: finitely many eps_i coefficients (i ranges over all integers) and a
// multiple of Lambda_0.
struct GlWeight {
    std::map<long, long> coords;
    long lambda0 = 0;
    bool operator==(const GlWeight&) const = default;
    long coord(long i) const {
        auto it = coords.find(i);
        return it == coords.end() ? 0 : it->second;
    }
};

GlWeight operator+(const GlWeight& a, const GlWeight& b);
GlWeight operator-(const GlWeight& a, const GlWeight& b);

bool is_partition(const Partition& p);
void check_partition(const Partition& p, const char* what);
long partition_size(const Partition& p);
Partition conjugate(const Partition& p);
// Componentwise containment mu subset of lambda.
bool contains(const Partition& lambda, const Partition& mu);
// All partitions of k, in descending lexicographic order.
std::vector<Partition> partitions_of(long k);

// c^lambda_{mu nu} by enumeration of column-strict skew tableaux of shape
// lambda/mu and content nu whose reverse reading word is a lattice word.
// Returns 0 when sizes mismatch or mu is not contained in lambda. Memoized.
long lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu);

// Partial order on partition pairs: (mu,nu) >= (zeta,eta) iff the charges
// |mu|-|nu| and |zeta|-|eta| agree and mu contains zeta, nu contains eta.
bool pair_order_ge(const PartitionPair& a, const PartitionPair& b);

// The dominant integral gl_n weight lambda in Z^n_+ attached to (mu,nu):
// mu padded with zeros, then -reverse(nu). Requires n >= l(mu)+l(nu).
std::vector<long> lambda_of_pair(const PartitionPair& mn, long n);
// Inverse of lambda_of_pair: split a weakly decreasing integer vector into
// the positive part and the negated reversed nonpositive tail.
PartitionPair pair_of_dominant(const std::vector<long>& lambda);

// <h_i, Lambda^n_{mu,nu}> = #{ j <= n : lambda_j = i }.
long pairing_h_lambda(long i, const PartitionPair& mn, long n);

// Lambda_{mu,nu} = (l(mu)+l(nu)) Lambda_0 + sum_{i>=1} mu'_i eps_i
//                - sum_{i<=0} nu'_{1-i} eps_i.
GlWeight lambda_weight_of_pair(const PartitionPair& mn);

// <h_i, w> where <h_i, eps_j> = delta_{ij} - delta_{i+1,j} and
// <h_i, Lambda_0> = delta_{i0}.
long h_pairing(long i, const GlWeight& w);

// Text form "3,2,1"; empty string is the empty partition.
Partition parse_partition(const std::string& text);
std::string partition_str(const Partition& p);
std::string pair_str(const PartitionPair& mn);

}  // namespace crystalkit
