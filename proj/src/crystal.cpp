// crystal.cpp

#include "crystal.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <mutex>
#include <set>
#include <sstream>

namespace crystalkit {

long epsilon(const Crystal& c, long i, const Elem& b) {
    long k = 0;
    Elem cur = b;
    for (;;) {
        auto next = c.apply_e(i, cur);
        if (!next) return k;
        cur = std::move(*next);
        ++k;
    }
}

long phi(const Crystal& c, long i, const Elem& b) {
    long k = 0;
    Elem cur = b;
    for (;;) {
        auto next = c.apply_f(i, cur);
        if (!next) return k;
        cur = std::move(*next);
        ++k;
    }
}

// ---- TensorCrystal ----

TensorCrystal::TensorCrystal(std::shared_ptr<const Crystal> left,
                             std::shared_ptr<const Crystal> right)
    : left_(std::move(left)), right_(std::move(right)) {
    std::set<long> cs;
    for (long i : left_->colors()) cs.insert(i);
    for (long i : right_->colors()) cs.insert(i);
    colors_.assign(cs.begin(), cs.end());
}

long TensorCrystal::rank() const { return std::max(left_->rank(), right_->rank()); }

Elem TensorCrystal::pack(const Elem& l, const Elem& r) {
    Elem b;
    b.reserve(1 + l.size() + r.size());
    b.push_back(static_cast<long>(l.size()));
    b.insert(b.end(), l.begin(), l.end());
    b.insert(b.end(), r.begin(), r.end());
    return b;
}

std::pair<Elem, Elem> TensorCrystal::unpack(const Elem& b) const {
    if (b.empty() || b[0] < 0 || static_cast<size_t>(b[0]) + 1 > b.size())
        throw DomainError("malformed tensor payload");
    size_t llen = static_cast<size_t>(b[0]);
    Elem l(b.begin() + 1, b.begin() + 1 + llen);
    Elem r(b.begin() + 1 + llen, b.end());
    return {std::move(l), std::move(r)};
}

std::optional<Elem> TensorCrystal::apply_f(long i, const Elem& b) const {
    auto [l, r] = unpack(b);
    if (phi(*left_, i, l) > epsilon(*right_, i, r)) {
        auto nl = left_->apply_f(i, l);
        if (!nl) return std::nullopt;
        return pack(*nl, r);
    }
    auto nr = right_->apply_f(i, r);
    if (!nr) return std::nullopt;
    return pack(l, *nr);
}

std::optional<Elem> TensorCrystal::apply_e(long i, const Elem& b) const {
    auto [l, r] = unpack(b);
    if (phi(*left_, i, l) >= epsilon(*right_, i, r)) {
        auto nl = left_->apply_e(i, l);
        if (!nl) return std::nullopt;
        return pack(*nl, r);
    }
    auto nr = right_->apply_e(i, r);
    if (!nr) return std::nullopt;
    return pack(l, *nr);
}

Weight TensorCrystal::weight(const Elem& b) const {
    auto [l, r] = unpack(b);
    Weight w = left_->weight(l);
    for (const auto& [k, v] : right_->weight(r)) {
        w[k] += v;
        if (w[k] == 0) w.erase(k);
    }
    return w;
}

std::string TensorCrystal::show(const Elem& b) const {
    auto [l, r] = unpack(b);
    return left_->show(l) + "(x)" + right_->show(r);
}

// ---- budget ----

namespace {

std::atomic<long> g_budget{-1};

long initial_budget() {
    const char* env = std::getenv("CRYSTALKIT_BUDGET");
    if (env != nullptr) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0) return v;
    }
    return 5000000;
}

}  // namespace

long element_budget() {
    long b = g_budget.load();
    if (b <= 0) {
        b = initial_budget();
        g_budget.store(b);
    }
    return b;
}

void set_element_budget(long budget) {
    if (budget <= 0) throw DomainError("element budget must be positive");
    g_budget.store(budget);
}

// ---- components ----

namespace {

struct UnionFind {
    std::vector<size_t> parent;
    explicit UnionFind(size_t n) : parent(n) {
        for (size_t i = 0; i < n; ++i) parent[i] = i;
    }
    size_t find(size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }
    void unite(size_t a, size_t b) { parent[find(a)] = find(b); }
};

}  // namespace

std::vector<Component> components(const Crystal& c, const std::vector<Elem>& seeds) {
    const long budget = element_budget();
    std::map<Elem, size_t> index;
    std::vector<Elem> elems;
    std::deque<size_t> queue;
    auto intern = [&](const Elem& e) {
        auto [it, fresh] = index.emplace(e, elems.size());
        if (fresh) {
            elems.push_back(e);
            if (static_cast<long>(elems.size()) > budget)
                throw BudgetError("crystal closure exceeded element budget of " +
                                  std::to_string(budget));
            queue.push_back(it->second);
        }
        return it->second;
    };
    for (const Elem& s : seeds) intern(s);
    std::vector<std::pair<size_t, size_t>> edges;
    const std::vector<long> cols = c.colors();
    while (!queue.empty()) {
        size_t u = queue.front();
        queue.pop_front();
        for (long i : cols) {
            if (auto fb = c.apply_f(i, elems[u])) {
                size_t v = intern(*fb);
                edges.emplace_back(u, v);
            }
            if (auto eb = c.apply_e(i, elems[u])) {
                size_t v = intern(*eb);
                edges.emplace_back(v, u);
            }
        }
    }
    UnionFind uf(elems.size());
    for (auto [u, v] : edges) uf.unite(u, v);
    std::map<size_t, std::vector<size_t>> groups;
    for (size_t i = 0; i < elems.size(); ++i) groups[uf.find(i)].push_back(i);
    std::vector<Component> out;
    for (auto& [root, ids] : groups) {
        Component comp;
        comp.members.reserve(ids.size());
        std::vector<Elem> sorted;
        for (size_t id : ids) sorted.push_back(elems[id]);
        std::sort(sorted.begin(), sorted.end());
        std::vector<Elem> sources;
        for (const Elem& e : sorted) {
            bool source = true;
            for (long i : cols)
                if (c.apply_e(i, e)) {
                    source = false;
                    break;
                }
            if (source) sources.push_back(e);
        }
        if (sources.size() == 1) comp.highest = sources.front();
        comp.members = std::move(sorted);
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end(), [&](const Component& a, const Component& b) {
        bool ha = a.highest.has_value(), hb = b.highest.has_value();
        if (ha != hb) return ha > hb;
        if (ha && hb) {
            Weight wa = c.weight(*a.highest), wb = c.weight(*b.highest);
            if (wa != wb) return wa < wb;
            if (*a.highest != *b.highest) return *a.highest < *b.highest;
        }
        return a.members.front() < b.members.front();
    });
    return out;
}

PartitionPair pair_label(const Crystal& c, const Elem& highest) {
    Weight w = c.weight(highest);
    std::vector<long> v;
    for (long i = 1; i <= c.rank(); ++i) {
        auto it = w.find(i);
        v.push_back(it == w.end() ? 0 : it->second);
    }
    return pair_of_dominant(v);
}

std::map<PartitionPair, long> decompose_multiplicities(const Crystal& c,
                                                       const std::vector<Elem>& seeds) {
    std::map<PartitionPair, long> table;
    for (const Component& comp : components(c, seeds)) {
        if (!comp.highest)
            throw DomainError("component without a unique highest weight element");
        ++table[pair_label(c, *comp.highest)];
    }
    return table;
}

std::optional<size_t> signature_f_index(const std::vector<std::pair<long, long>>& eps_phi) {
    std::vector<std::pair<size_t, long>> stack;  // (factor index, open plus count)
    for (size_t j = 0; j < eps_phi.size(); ++j) {
        long minus = eps_phi[j].first;
        while (minus > 0 && !stack.empty()) {
            long cancel = std::min(minus, stack.back().second);
            stack.back().second -= cancel;
            minus -= cancel;
            if (stack.back().second == 0) stack.pop_back();
        }
        if (eps_phi[j].second > 0) stack.emplace_back(j, eps_phi[j].second);
    }
    if (stack.empty()) return std::nullopt;
    return stack.front().first;
}

std::optional<size_t> signature_e_index(const std::vector<std::pair<long, long>>& eps_phi) {
    long open_plus = 0;
    std::optional<size_t> last_minus;
    for (size_t j = 0; j < eps_phi.size(); ++j) {
        long minus = eps_phi[j].first;
        long cancel = std::min(minus, open_plus);
        open_plus -= cancel;
        if (minus - cancel > 0) last_minus = j;
        open_plus += eps_phi[j].second;
    }
    return last_minus;
}

std::string to_dot(const Crystal& c, const std::vector<Elem>& seeds, size_t max_nodes) {
    std::vector<Component> comps = components(c, seeds);
    std::set<Elem> included;
    bool truncated = false;
    for (const Component& comp : comps)
        for (const Elem& e : comp.members) {
            if (included.size() >= max_nodes) {
                truncated = true;
                break;
            }
            included.insert(e);
        }
    std::ostringstream os;
    os << "digraph crystal {\n";
    if (truncated) os << "  // truncated to " << max_nodes << " nodes\n";
    os << "  rankdir=TB;\n";
    for (const Elem& e : included)
        os << "  \"" << c.show(e) << "\";\n";
    for (const Elem& e : included)
        for (long i : c.colors())
            if (auto fb = c.apply_f(i, e))
                if (included.count(*fb))
                    os << "  \"" << c.show(e) << "\" -> \"" << c.show(*fb) << "\" [label=\"" << i
                       << "\"];\n";
    os << "}\n";
    return os.str();
}

}  // namespace crystalkit
