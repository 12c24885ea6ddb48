// Tests for the SST, dual SST, and bitableaux crystal realizations.

#include <doctest.h>

#include <memory>

#include "tableaux.hpp"

using namespace crystalkit;

namespace {

Partition pt(const std::string& s) { return parse_partition(s); }

PartitionPair pp(const std::string& a, const std::string& b) {
    return {parse_partition(a), parse_partition(b)};
}

// Natural letter crystal used to cross-check the column word embedding.
class BoxCrystal : public Crystal {
public:
    explicit BoxCrystal(long n) : n_(n) {}
    std::vector<long> colors() const override {
        std::vector<long> cs;
        for (long i = 1; i < n_; ++i) cs.push_back(i);
        return cs;
    }
    long rank() const override { return n_; }
    std::optional<Elem> apply_f(long i, const Elem& b) const override {
        if (b[0] == i) return Elem{i + 1};
        return std::nullopt;
    }
    std::optional<Elem> apply_e(long i, const Elem& b) const override {
        if (b[0] == i + 1) return Elem{i};
        return std::nullopt;
    }
    Weight weight(const Elem& b) const override { return {{b[0], 1}}; }
    std::string show(const Elem& b) const override { return std::to_string(b[0]); }

private:
    long n_;
};

}  // namespace

TEST_CASE("sst chain and sizes") {
    SSTCrystal chain(pt("1"), 3);
    auto comps = components(chain, chain.all_elements());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members.size() == 3);
    CHECK(*comps[0].highest == Elem{1});

    SSTCrystal adj(pt("2,1"), 3);
    CHECK(adj.all_elements().size() == 8);
    auto acomps = components(adj, adj.all_elements());
    REQUIRE(acomps.size() == 1);
    CHECK(*acomps[0].highest == adj.highest());
    CHECK(adj.highest() == Elem{1, 1, 2});

    SSTCrystal empty(pt(""), 3);
    CHECK(empty.all_elements().size() == 1);
    CHECK(!empty.apply_f(1, {}).has_value());
    CHECK(!empty.apply_e(1, {}).has_value());
}

TEST_CASE("sst operators preserve semistandardness") {
    for (const char* shape : {"2,1", "2,2", "3,1", "1,1,1"}) {
        SSTCrystal c(pt(shape), 4);
        for (const Elem& b : c.all_elements()) {
            REQUIRE(c.valid(b));
            for (long i = 1; i <= 3; ++i) {
                if (auto fb = c.apply_f(i, b)) CHECK(c.valid(*fb));
                if (auto eb = c.apply_e(i, b)) CHECK(c.valid(*eb));
            }
        }
    }
}

TEST_CASE("sst matches the column word tensor embedding") {
    SSTCrystal c(pt("2,1"), 3);
    auto box = std::make_shared<BoxCrystal>(3);
    auto t2 = std::make_shared<TensorCrystal>(box, box);
    auto t3 = std::make_shared<TensorCrystal>(t2, box);
    auto embed = [&](const Elem& b) {
        const auto& pos = c.column_positions();
        Elem inner = TensorCrystal::pack({b[pos[0]]}, {b[pos[1]]});
        return TensorCrystal::pack(inner, {b[pos[2]]});
    };
    for (const Elem& b : c.all_elements())
        for (long i = 1; i <= 2; ++i) {
            auto fs = c.apply_f(i, b);
            auto ft = t3->apply_f(i, embed(b));
            CHECK(fs.has_value() == ft.has_value());
            if (fs && ft) CHECK(embed(*fs) == *ft);
            auto es = c.apply_e(i, b);
            auto et = t3->apply_e(i, embed(b));
            CHECK(es.has_value() == et.has_value());
            if (es && et) CHECK(embed(*es) == *et);
        }
}

TEST_CASE("dual chain and singletons") {
    DualSSTCrystal chain(pt("1"), 3);
    auto comps = components(chain, chain.all_elements());
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members.size() == 3);
    CHECK(*comps[0].highest == Elem{-3});
    CHECK(chain.apply_f(2, {-3}) == Elem{-2});
    CHECK(chain.apply_f(1, {-2}) == Elem{-1});
    CHECK(!chain.apply_f(1, {-3}).has_value());

    DualSSTCrystal empty(pt(""), 3);
    CHECK(empty.all_elements().size() == 1);

    DualSSTCrystal column(pt("1,1"), 2);
    auto elems = column.all_elements();
    REQUIRE(elems.size() == 1);
    CHECK(elems[0] == Elem{-2, -1});
    CHECK(elems[0] == column.highest());
}

TEST_CASE("dual operators preserve semistandardness") {
    for (const char* shape : {"2,1", "2,2", "3,1", "1,1"}) {
        DualSSTCrystal c(pt(shape), 4);
        for (const Elem& b : c.all_elements()) {
            REQUIRE(c.valid(b));
            for (long i = 1; i <= 3; ++i) {
                if (auto fb = c.apply_f(i, b)) CHECK(c.valid(*fb));
                if (auto eb = c.apply_e(i, b)) CHECK(c.valid(*eb));
            }
        }
    }
}

TEST_CASE("dual crystal weights and dimension") {
    // SST_v(nu^pi) over 1..N has the dimension of SST(nu) over 1..N.
    for (const char* shape : {"1", "2", "1,1", "2,1", "2,2"}) {
        for (long n = 2; n <= 4; ++n) {
            DualSSTCrystal d(pt(shape), n);
            SSTCrystal s(pt(shape), n);
            CHECK(d.all_elements().size() == s.all_elements().size());
        }
    }
    DualSSTCrystal d(pt("2,1"), 3);
    Weight w = d.weight(d.highest());
    // wt(H_nu-vee) = -eps_nu = -2 eps_1 - eps_2.
    CHECK(w == Weight{{1, -2}, {2, -1}});
}

TEST_CASE("extremal seeds") {
    // H_mu is a highest weight element; H_nu-vee is a lowest weight element.
    for (const char* shape : {"2,1", "3,1", "2,2,1"}) {
        SSTCrystal s(pt(shape), 5);
        DualSSTCrystal d(pt(shape), 5);
        for (long i = 1; i <= 4; ++i) {
            CHECK(!s.apply_e(i, s.highest()).has_value());
            CHECK(!d.apply_f(i, d.highest()).has_value());
        }
    }
}

TEST_CASE("bitableaux condition and the smallest example") {
    BiTabCrystal c(pt("1"), pt("1"), 2);
    // (S=[1], T=[1v]) violates the condition at k=1; (S=[1], T=[2v]) passes.
    CHECK(!c.condition2({1, -1}));
    CHECK(c.condition2({1, -2}));
    auto elems = c.all_elements();
    CHECK(elems.size() == 3);
    auto comps = components(c, elems);
    REQUIRE(comps.size() == 1);
    CHECK(comps[0].members.size() == 3);
    REQUIRE(comps[0].highest.has_value());
    CHECK(pair_label(c, *comps[0].highest) == pp("1", "1"));
    CHECK_THROWS_AS(BiTabCrystal(pt("1"), pt("1"), 1), DomainError);
}

TEST_CASE("bitableaux with empty dual side is plain sst") {
    BiTabCrystal c(pt("1"), pt(""), 3);
    SSTCrystal s(pt("1"), 3);
    auto be = c.all_elements();
    auto se = s.all_elements();
    REQUIRE(be.size() == se.size());
    for (size_t j = 0; j < be.size(); ++j) {
        CHECK(be[j] == se[j]);
        for (long i = 1; i <= 2; ++i) {
            CHECK(c.apply_f(i, be[j]) == s.apply_f(i, se[j]));
            CHECK(c.apply_e(i, be[j]) == s.apply_e(i, se[j]));
        }
    }
}

TEST_CASE("bitableaux operators agree with the tensor embedding") {
    BiTabCrystal c(pt("2,1"), pt("2"), 5);
    auto sst = std::make_shared<SSTCrystal>(pt("2,1"), 5);
    auto dual = std::make_shared<DualSSTCrystal>(pt("2"), 5);
    TensorCrystal t(sst, dual);
    for (const Elem& b : c.all_elements()) {
        auto [s, d] = c.unpack(b);
        Elem packed = TensorCrystal::pack(s, d);
        for (long i = 1; i <= 4; ++i) {
            auto fc = c.apply_f(i, b);
            auto ft = t.apply_f(i, packed);
            CHECK(fc.has_value() == ft.has_value());
            if (fc && ft) {
                auto [fs, fd] = c.unpack(*fc);
                CHECK(TensorCrystal::pack(fs, fd) == *ft);
            }
            auto ec = c.apply_e(i, b);
            auto et = t.apply_e(i, packed);
            CHECK(ec.has_value() == et.has_value());
            if (ec && et) {
                auto [es, ed] = c.unpack(*ec);
                CHECK(TensorCrystal::pack(es, ed) == *et);
            }
        }
    }
}

TEST_CASE("bitableaux closure under the operators") {
    std::vector<Partition> shapes;
    for (long s = 0; s <= 3; ++s)
        for (const Partition& p : partitions_of(s)) shapes.push_back(p);
    for (const Partition& mu : shapes)
        for (const Partition& nu : shapes) {
            long lo = static_cast<long>(mu.size() + nu.size());
            for (long n = std::max(lo, 2L); n <= 5; ++n) {
                BiTabCrystal c(mu, nu, n);
                for (const Elem& b : c.all_elements())
                    for (long i = 1; i < n; ++i) {
                        if (auto fb = c.apply_f(i, b)) CHECK(c.condition2(*fb));
                        if (auto eb = c.apply_e(i, b)) CHECK(c.condition2(*eb));
                    }
            }
        }
}

TEST_CASE("bitableaux crystal is connected") {
    for (auto [m, v] : std::vector<std::pair<const char*, const char*>>{
             {"1", "1"}, {"2", "1"}, {"2,1", "1"}, {"2", "2"}, {"1,1", "1,1"}}) {
        Partition mu = pt(m), nu = pt(v);
        long n = static_cast<long>(mu.size() + nu.size()) + 2;
        BiTabCrystal c(mu, nu, n);
        auto comps = components(c, c.all_elements());
        CHECK(comps.size() == 1);
        REQUIRE(comps[0].highest.has_value());
        CHECK(pair_label(c, *comps[0].highest) == PartitionPair{mu, nu});
    }
}

TEST_CASE("bitableaux isomorphism with the dual tensor sst component") {
    CHECK(verify_bitableaux_iso(pt("1"), pt("1"), 3));
    CHECK(verify_bitableaux_iso(pt("2"), pt("1"), 4));
    CHECK(verify_bitableaux_iso(pt(""), pt(""), 2));
    for (const char* m : {"", "1", "2", "1,1"})
        for (const char* v : {"", "1", "2", "1,1"}) {
            Partition mu = pt(m), nu = pt(v);
            long n = static_cast<long>(mu.size() + nu.size()) + 2;
            CHECK(verify_bitableaux_iso(mu, nu, n));
        }
}

TEST_CASE("lr coefficients match the highest weight count") {
    for (long total = 1; total <= 6; ++total)
        for (long k = 0; k <= total; ++k)
            for (const Partition& mu : partitions_of(k))
                for (const Partition& nu : partitions_of(total - k)) {
                    long n = total;
                    auto a = std::make_shared<SSTCrystal>(mu, n);
                    auto b = std::make_shared<SSTCrystal>(nu, n);
                    TensorCrystal t(a, b);
                    std::map<Partition, long> counts;
                    for (const Elem& x : a->all_elements())
                        for (const Elem& y : b->all_elements()) {
                            Elem packed = TensorCrystal::pack(x, y);
                            bool source = true;
                            for (long i = 1; i < n && source; ++i)
                                if (t.apply_e(i, packed)) source = false;
                            if (source) ++counts[pair_label(t, packed).plus];
                        }
                    for (const Partition& lambda : partitions_of(total)) {
                        long expect = lr_coefficient(lambda, mu, nu);
                        auto it = counts.find(lambda);
                        long got = it == counts.end() ? 0 : it->second;
                        CHECK(got == expect);
                    }
                }
}

TEST_CASE("tensor multiplicities by littlewood richardson sums") {
    std::vector<Partition> shapes;
    for (long s = 0; s <= 2; ++s)
        for (const Partition& p : partitions_of(s)) shapes.push_back(p);
    for (const Partition& mu : shapes)
        for (const Partition& nu : shapes) {
            long n = partition_size(mu) + partition_size(nu) + 2;
            n = std::max(n, 2L);
            auto table = bitab_tensor_multiplicities({mu, {}}, {{}, nu}, n);
            // m^{mu,nu}_{zeta,eta} = sum_sigma c^mu_{sigma zeta} c^nu_{sigma eta}.
            std::map<PartitionPair, long> expect;
            for (long d = 0; d <= std::min(partition_size(mu), partition_size(nu)); ++d)
                for (const Partition& zeta : partitions_of(partition_size(mu) - d))
                    for (const Partition& eta : partitions_of(partition_size(nu) - d)) {
                        long m = 0;
                        for (const Partition& sigma : partitions_of(d))
                            m += lr_coefficient(mu, sigma, zeta) * lr_coefficient(nu, sigma, eta);
                        if (m != 0) expect[{zeta, eta}] = m;
                    }
            CHECK(table == expect);
        }
}

TEST_CASE("stabilization of multiplicity tables") {
    long n0 = stabilization_rank(pp("1", ""), pp("", "1"), 6);
    CHECK(n0 <= 2);
    CHECK(bitab_tensor_multiplicities(pp("1", ""), pp("", "1"), n0) ==
          bitab_tensor_multiplicities(pp("1", ""), pp("", "1"), n0 + 2));
    long n1 = stabilization_rank(pp("1", "1"), pp("1", ""), 8);
    CHECK(n1 <= 4);
}
