// fockcrystal.hpp
// Crystals attached to the level-n Fock space: the finite 0/1 matrix crystal
// with its two commuting color families, windowed highest weight matrices,
// the Howe decomposition, the nonnegative-integer matrix crystal of the
// q-boson vacuum module, and the highest weight sets that count socle
// multiplicities.

#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "crystal.hpp"
#include "partitions.hpp"

namespace crystalkit {

// 0/1 matrix over a finite row window [row_lo..row_hi] and columns 1..cols.
// Rows below the window (index < row_lo) are implicitly all ones and rows
// above it (index > row_hi) all zeros, matching the semi-infinite convention
// m_{ab} = 1 for a << 0 and m_{ab} = 0 for a >> 0.
struct Matrix01 {
    long row_lo = 1;
    long row_hi = 1;
    long cols = 1;
    std::vector<int> bits;  // row-major over the window

    long height() const { return row_hi - row_lo + 1; }
    // Entry at any integer row; columns must lie in [1..cols].
    int at(long i, long j) const;
    int& cell(long i, long j);  // in-window access
    std::string str() const;    // window rows as bit strings joined by "/"
};

// Crystal on all 0/1 matrices with rows 1..m and columns 1..n. Positive
// colors i = 1..m-1 act through the column tensor word (columns left to
// right), single-column rule f_i M = M - e_i + e_{i+1}. Negative colors
// -j for j = 1..n-1 act through the row tensor word (rows bottom to top),
// moving a 1 from column j to column j+1 inside one row. Payload: mn bits,
// row-major. Weight keys: +i holds the i-th row sum, -j the j-th column sum.
class MatrixCrystal : public Crystal {
public:
    MatrixCrystal(long m, long n);
    std::vector<long> colors() const override { return colors_; }
    long rank() const override { return m_; }
    std::optional<Elem> apply_f(long i, const Elem& b) const override;
    std::optional<Elem> apply_e(long i, const Elem& b) const override;
    Weight weight(const Elem& b) const override;
    std::string show(const Elem& b) const override;

    long rows() const { return m_; }
    long cols() const { return n_; }

private:
    std::optional<Elem> apply(long i, const Elem& b, bool is_f) const;
    long m_, n_;
    std::vector<long> colors_;
};

std::shared_ptr<Crystal> matrix_crystal(long m, long n);

// All 2^{mn} elements of MatrixCrystal(m, n), in mask order.
std::vector<Elem> all_matrices(long m, long n);

// The staircase matrix M(lambda) with M(lambda)_{ij} = 1 iff i <= lambda_j,
// for a weakly decreasing integer vector lambda with one entry per column.
// Requires lambda_j in [row_lo-1 .. row_hi] so the pattern is visible in the
// window.
Matrix01 highest_matrix(const std::vector<long>& lambda, long row_lo, long row_hi);

// M(lambda) for lambda = lambda_of_pair(mn, n), on a window wide enough to
// show every step of the staircase together with the rows 0 and 1.
Matrix01 highest_matrix_of_pair(const PartitionPair& mn, long n);

// String statistics (eps_i, phi_i) of a windowed matrix for any color
// i in ZZ, computed by the signature rule over the column word. Rows outside
// the window contribute nothing: padding gives per-column letter pairs
// (1,1) or (0,0).
std::pair<long, long> window_eps_phi(const Matrix01& M, long i);

// Charge of each column: #{ones in rows >= 1} - #{zeros in rows <= 0},
// padding included. For M(lambda) the j-th charge is lambda_j.
std::vector<long> column_charges(const Matrix01& M);

// Decomposition of MatrixCrystal(m, n) under both color families. Each
// component is labeled by the row-sum partition lambda of its unique
// bi-highest element; the column sums are checked to equal lambda'.
// Returns (lambda, multiplicity) pairs; the decomposition is known to be
// multiplicity-free.
std::vector<std::pair<Partition, long>> howe_decompose(long m, long n);

// Element of the crystal of the q-boson vacuum module: a finitely supported
// matrix over ZZ_{<0} x ZZ_{>=0} with entries in ZZ_{>=0}. Row i carries the
// gl_{>0} letters: an entry at column j counts letters j+1. Column j carries
// the gl_{<=0} dual letters: an entry at row i counts dual letters (i+1).
// A unit at (i, j) therefore has weight eps_{j+1} - eps_{i+1}; the corner
// (-1, 0) carries -alpha_0.
struct MatrixNat {
    std::map<std::pair<long, long>, long> entries;  // nonzero entries only

    long at(long i, long j) const;
    void add(long i, long j, long v);  // erases entries that reach zero
    GlWeight weight() const;
    Elem pack() const;  // [i1, j1, v1, i2, j2, v2, ...] in key order
    static MatrixNat unpack(const Elem& b);
    std::string str() const;
    bool operator==(const MatrixNat&) const = default;
    auto operator<=>(const MatrixNat&) const = default;
};

// Crystal operators on MatrixNat elements. Positive colors k read the rows
// as one-row gl_{>0} crystals, top row -1 first; f_k moves a unit from
// column k-1 to column k inside one row. Negative colors k read the columns
// as dual one-column gl_{<=0} crystals, left column 0 first; f_k moves a
// unit from row k to row k-1 inside one column. Color 0: f_0 increments the
// corner entry (-1, 0) and e_0 decrements it. colors() reports the window
// [-radius..radius] for generic walkers, but apply_f and apply_e accept any
// integer color.
class BosonCrystal : public Crystal {
public:
    explicit BosonCrystal(long radius = 8);
    std::vector<long> colors() const override { return colors_; }
    long rank() const override { return radius_; }
    std::optional<Elem> apply_f(long i, const Elem& b) const override;
    std::optional<Elem> apply_e(long i, const Elem& b) const override;
    Weight weight(const Elem& b) const override;
    std::string show(const Elem& b) const override;

private:
    std::optional<Elem> apply(long i, const Elem& b, bool is_f) const;
    long radius_;
    std::vector<long> colors_;
};

std::shared_ptr<Crystal> boson_crystal(long radius = 8);

// Membership of a GlWeight in wt(M): no Lambda_0 part, coordinates sum to
// zero, c_i >= 0 for i > 0 and c_i <= 0 for i <= 0.
bool boson_weight_ok(const GlWeight& g);

// All elements of the vacuum module crystal of weight g. The weight pins
// every row and column sum, so the weight space is the finite set of
// nonnegative integer matrices with those margins. A positive support bound
// restricts rows to [-support..-1] and columns to [0..support-1] and is
// rejected when it would cut off a forced margin; support = 0 sizes the
// window from g itself.
std::vector<MatrixNat> boson_weight_space(const GlWeight& g, long support = 0);

// Lambda_{mu,nu} - Lambda_{zeta,eta} as a pure eps-coordinate weight: the
// Lambda_0 parts cancel once both sides sit at a common level n.
GlWeight socle_weight(const PartitionPair& high, const PartitionPair& low);

// Highest weight set: the elements b of the vacuum module crystal of weight
// g with eps_i(b) <= <h_i, Lambda^n_{mu,nu}> for every integer color i.
struct HSet {
    PartitionPair base;
    long level = 0;
    GlWeight wt;
    std::vector<MatrixNat> members;

    long size() const { return static_cast<long>(members.size()); }
};

HSet h_set(const PartitionPair& mn, const GlWeight& g, long n);

}  // namespace crystalkit
