// tableaux.hpp
// Concrete gl_N crystal realizations: semistandard tableaux SST(mu), dual
// tableaux on the 180-degree rotated shape with the reversed letter order,
// and the bitableaux crystals B_{mu,nu} cut out by the first-column
// condition. Operators act by the signature rule on column words.

#pragma once

#include "crystal.hpp"

namespace crystalkit {

// Crystal of semistandard tableaux of shape mu with entries in 1..N.
// Payload: entries row by row, top row first, left to right.
class SSTCrystal : public Crystal {
public:
    SSTCrystal(Partition mu, long n);
    std::vector<long> colors() const override;
    long rank() const override { return n_; }
    std::optional<Elem> apply_f(long i, const Elem& b) const override;
    std::optional<Elem> apply_e(long i, const Elem& b) const override;
    Weight weight(const Elem& b) const override;
    std::string show(const Elem& b) const override;

    const Partition& shape() const { return mu_; }
    // Column word positions: flat payload indices in reading order (columns
    // right to left, top to bottom within a column).
    const std::vector<size_t>& column_positions() const { return colpos_; }
    std::vector<Elem> all_elements() const;
    // Highest weight tableau H_mu: row r filled with r.
    Elem highest() const;
    bool valid(const Elem& b) const;

private:
    Partition mu_;
    long n_;
    std::vector<size_t> offsets_;  // row start indices in the payload
    std::vector<size_t> colpos_;
};

// Crystal of semistandard tableaux of the rotated shape nu^pi over the dual
// alphabet Nv < ... < 1v. Payload: entries row by row (top row of the
// rotated diagram first, left to right), the letter kv stored as -k.
class DualSSTCrystal : public Crystal {
public:
    DualSSTCrystal(Partition nu, long n);
    std::vector<long> colors() const override;
    long rank() const override { return n_; }
    std::optional<Elem> apply_f(long i, const Elem& b) const override;
    std::optional<Elem> apply_e(long i, const Elem& b) const override;
    Weight weight(const Elem& b) const override;
    std::string show(const Elem& b) const override;

    const Partition& shape() const { return nu_; }
    // Row lengths of the rotated diagram, top to bottom.
    const std::vector<long>& row_lengths() const { return rows_; }
    const std::vector<size_t>& column_positions() const { return colpos_; }
    std::vector<Elem> all_elements() const;
    // H_nu-vee: row i from the bottom filled with iv; weight -eps_nu.
    Elem highest() const;
    bool valid(const Elem& b) const;
    // Payload indices of the rightmost column, bottom row first.
    const std::vector<size_t>& right_column_positions() const { return rightcol_; }

private:
    Partition nu_;
    long n_;
    std::vector<long> rows_;
    std::vector<size_t> offsets_;
    std::vector<size_t> colpos_;
    std::vector<size_t> rightcol_;
};

// Extremal weight crystal B_{mu,nu} over the alphabet 1..N: pairs (S,T) with
// S in SST(mu), T in SST_v(nu^pi), subject to the first-column condition
//   #{i : S(i,1) <= k} + #{i : value of T_(i,1) <= k} <= k   for all k >= 1,
// embedded into SST(mu) (x) SST_v(nu^pi) for the operators.
// Payload: S payload followed by T payload.
class BiTabCrystal : public Crystal {
public:
    BiTabCrystal(Partition mu, Partition nu, long n);
    std::vector<long> colors() const override;
    long rank() const override { return n_; }
    std::optional<Elem> apply_f(long i, const Elem& b) const override;
    std::optional<Elem> apply_e(long i, const Elem& b) const override;
    Weight weight(const Elem& b) const override;
    std::string show(const Elem& b) const override;

    const SSTCrystal& sst() const { return sst_; }
    const DualSSTCrystal& dual() const { return dual_; }
    Elem pack(const Elem& s, const Elem& t) const;
    std::pair<Elem, Elem> unpack(const Elem& b) const;
    bool condition2(const Elem& b) const;
    std::vector<Elem> all_elements() const;

private:
    SSTCrystal sst_;
    DualSSTCrystal dual_;
    long n_;
    std::vector<size_t> combined_;  // column word positions of S then T
};

// Whether B_{mu,nu} is isomorphic as a colored graph to the connected
// component of H_nu-vee (x) H_mu inside SST_v(nu^pi) (x) SST(mu).
bool verify_bitableaux_iso(const Partition& mu, const Partition& nu, long n);

// Multiplicity table of B_{mu,nu} (x) B_{sigma,tau} over the alphabet 1..N.
std::map<PartitionPair, long> bitab_tensor_multiplicities(const PartitionPair& a,
                                                          const PartitionPair& b, long n);

// First N in [start, cap] whose multiplicity table equals the table at N+1;
// start defaults to the smallest admissible rank. Throws DomainError when no
// stabilization is observed up to the cap.
long stabilization_rank(const PartitionPair& a, const PartitionPair& b, long cap);

}  // namespace crystalkit
