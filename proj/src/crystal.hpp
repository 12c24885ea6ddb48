// crystal.hpp
// Generic crystal engine. Realizations supply single-element operator
// callbacks over a flattened integer payload; this module provides string
// statistics, the tensor product rule, BFS closure into connected
// components, highest weight labeling, and DOT export.

#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "partitions.hpp"

namespace crystalkit {

// Flattened payload of a crystal element; each realization documents its own
// encoding. Comparisons on this flattening give the canonical element order.
using Elem = std::vector<long>;
// Sparse weight: coordinate index -> coefficient.
using Weight = std::map<long, long>;

// Rewrite strategies shared by the straightening and normal-ordering
// algorithms; both orientations land on the same normal form.
enum class Strategy { Leftmost, Rightmost };

class Crystal {
public:
    virtual ~Crystal() = default;
    // Operator colors, ascending.
    virtual std::vector<long> colors() const = 0;
    // Alphabet size N for gl_N realizations (used for weight labeling).
    virtual long rank() const = 0;
    // Kashiwara operators; nullopt encodes 0.
    virtual std::optional<Elem> apply_f(long i, const Elem& b) const = 0;
    virtual std::optional<Elem> apply_e(long i, const Elem& b) const = 0;
    virtual Weight weight(const Elem& b) const = 0;
    virtual std::string show(const Elem& b) const = 0;
};

// String lengths by repeated operator application.
long epsilon(const Crystal& c, long i, const Elem& b);
long phi(const Crystal& c, long i, const Elem& b);

// b1 (x) b2 with the signature rule: f acts on the left factor iff
// phi_i(b1) > eps_i(b2), e acts on the left iff phi_i(b1) >= eps_i(b2).
// Payload encoding: [llen] + left + right.
class TensorCrystal : public Crystal {
public:
    TensorCrystal(std::shared_ptr<const Crystal> left, std::shared_ptr<const Crystal> right);
    std::vector<long> colors() const override { return colors_; }
    long rank() const override;
    std::optional<Elem> apply_f(long i, const Elem& b) const override;
    std::optional<Elem> apply_e(long i, const Elem& b) const override;
    Weight weight(const Elem& b) const override;
    std::string show(const Elem& b) const override;

    static Elem pack(const Elem& l, const Elem& r);
    std::pair<Elem, Elem> unpack(const Elem& b) const;
    const Crystal& left() const { return *left_; }
    const Crystal& right() const { return *right_; }

private:
    std::shared_ptr<const Crystal> left_, right_;
    std::vector<long> colors_;
};

struct Component {
    std::optional<Elem> highest;  // unique element with all eps_i = 0, if any
    std::vector<Elem> members;    // sorted by payload
};

// Global element budget for BFS closures. Initialized from the
// CRYSTALKIT_BUDGET environment variable when set, else 5,000,000.
long element_budget();
void set_element_budget(long budget);

// BFS closure of the seeds under all operators, split into connected
// components, ordered by (weight of highest, payload of highest, first
// member). Throws BudgetError when the closure exceeds the element budget.
std::vector<Component> components(const Crystal& c, const std::vector<Elem>& seeds);

// Multiplicities of highest weights, labeled as partition pairs through the
// dominant weight vector on coordinates 1..rank().
std::map<PartitionPair, long> decompose_multiplicities(const Crystal& c,
                                                       const std::vector<Elem>& seeds);

// Label for one highest weight element via its dominant weight vector.
PartitionPair pair_label(const Crystal& c, const Elem& highest);

// DOT digraph of the closure: nodes are payload strings, edges labeled by the
// color of the f operator. Output truncated at max_nodes with a comment.
std::string to_dot(const Crystal& c, const std::vector<Elem>& seeds, size_t max_nodes = 10000);

// Signature rule on a word of factors with string data (eps_j, phi_j): write
// eps_j minus signs then phi_j plus signs per factor, cancel adjacent +-
// pairs, then f acts at the factor owning the leftmost surviving plus and e
// at the factor owning the rightmost surviving minus. This is the iterated
// tensor product rule.
std::optional<size_t> signature_f_index(const std::vector<std::pair<long, long>>& eps_phi);
std::optional<size_t> signature_e_index(const std::vector<std::pair<long, long>>& eps_phi);

}  // namespace crystalkit
