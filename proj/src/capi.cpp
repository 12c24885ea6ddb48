// capi.cpp
// C interface of include/crystalkit.h on top of the core library. Every
// entry point funnels through guarded(), which maps exceptions to status
// codes and keeps the message in a thread-local slot for ck_last_error().

#include "crystalkit.h"

#include <cctype>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "charalg.hpp"
#include "crystal.hpp"
#include "fockcrystal.hpp"
#include "json_io.hpp"
#include "partitions.hpp"
#include "qwedge.hpp"
#include "ratfun.hpp"
#include "tableaux.hpp"

namespace {

using namespace crystalkit;

thread_local std::string tl_error;

std::string one_line(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '\n' || c == '\r') {
            if (!out.empty() && out.back() != ' ') out += "; ";
        } else {
            out += c;
        }
    }
    return out;
}

int fail(int code, const std::string& msg) {
    tl_error = one_line(msg);
    return code;
}

template <class F>
int guarded(F&& f) {
    try {
        tl_error.clear();
        return f();
    } catch (const DomainError& e) {
        return fail(CK_DOMAIN_ERROR, e.what());
    } catch (const BudgetError& e) {
        return fail(CK_BUDGET_EXCEEDED, e.what());
    } catch (const std::bad_alloc&) {
        return fail(CK_INTERNAL_ERROR, "out of memory");
    } catch (const std::exception& e) {
        return fail(CK_INTERNAL_ERROR, e.what());
    } catch (...) {
        return fail(CK_INTERNAL_ERROR, "unknown error");
    }
}

void put(char** out, const std::string& s) {
    if (!out) throw DomainError("output pointer is null");
    char* p = static_cast<char*>(std::malloc(s.size() + 1));
    if (!p) throw std::bad_alloc();
    std::memcpy(p, s.c_str(), s.size() + 1);
    *out = p;
}

Partition arg_partition(const char* s, const char* what) {
    if (!s) throw DomainError(std::string(what) + " is null");
    return parse_partition(s);
}

std::vector<long> arg_longs(const char* s, const char* what) {
    if (!s) throw DomainError(std::string(what) + " is null");
    std::vector<long> out;
    std::string t;
    for (const char* p = s; *p; ++p)
        if (*p != ' ' && *p != '\t') t += *p;
    if (t.empty()) return out;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t sep = t.find(',', pos);
        std::string item = t.substr(pos, sep == std::string::npos ? sep : sep - pos);
        if (item.empty()) throw DomainError(std::string(what) + " has an empty entry");
        try {
            size_t used = 0;
            long v = std::stol(item, &used);
            if (used != item.size()) throw std::invalid_argument(item);
            out.push_back(v);
        } catch (const std::exception&) {
            throw DomainError(std::string(what) + " has a bad entry '" + item + "'");
        }
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return out;
}

CauchyKind arg_kind(const char* kind) {
    if (!kind) throw DomainError("kind is null");
    std::string s;
    for (const char* p = kind; *p; ++p) {
        if (*p == '-' || *p == '_') continue;
        s += static_cast<char>(std::tolower(static_cast<unsigned char>(*p)));
    }
    if (s == "ee") return CauchyKind::EE;
    if (s == "eh") return CauchyKind::EH;
    throw DomainError("unknown kind '" + std::string(kind) + "' (expected ee or eh)");
}

Strategy arg_strategy(const char* strategy) {
    if (!strategy || !*strategy) return Strategy::Leftmost;
    std::string s(strategy);
    if (s == "leftmost") return Strategy::Leftmost;
    if (s == "rightmost") return Strategy::Rightmost;
    throw DomainError("unknown strategy '" + s + "' (expected leftmost or rightmost)");
}

WedgeWord arg_word(const char* text) {
    if (!text) throw DomainError("word is null");
    std::string t;
    for (const char* p = text; *p; ++p)
        if (*p != ' ' && *p != '\t') t += *p;
    WedgeWord w;
    if (t.empty()) return w;
    size_t pos = 0;
    while (pos <= t.size()) {
        size_t sep = t.find(';', pos);
        std::string item = t.substr(pos, sep == std::string::npos ? sep : sep - pos);
        size_t comma = item.find(',');
        if (item.empty() || comma == std::string::npos)
            throw DomainError("bad letter '" + item + "' (expected a,b)");
        try {
            size_t ua = 0, ub = 0;
            long a = std::stol(item.substr(0, comma), &ua);
            long b = std::stol(item.substr(comma + 1), &ub);
            if (ua != comma || ub != item.size() - comma - 1) throw std::invalid_argument(item);
            w.push_back({a, b});
        } catch (const std::exception&) {
            throw DomainError("bad letter '" + item + "' (expected a,b)");
        }
        if (sep == std::string::npos) break;
        pos = sep + 1;
    }
    return w;
}

std::string key_label(const Elem& key) {
    std::string s;
    for (long b : key) s += std::to_string(b);
    return s;
}

Json word_json(const WedgeWord& w) {
    Json a = Json::array();
    for (const Letter& l : w) a.push_back(Json::array({l.first, l.second}));
    return a;
}

long pair_total(const PartitionPair& a, const PartitionPair& b) {
    return partition_size(a.plus) + partition_size(a.minus) + partition_size(b.plus) +
           partition_size(b.minus);
}

}  // namespace

extern "C" {

const char* ck_version(void) { return "1.0.0"; }

const char* ck_last_error(void) { return tl_error.c_str(); }

void ck_string_free(char* s) { std::free(s); }

long ck_element_budget(void) { return element_budget(); }

int ck_set_element_budget(long budget) {
    return guarded([&] {
        set_element_budget(budget);
        return CK_OK;
    });
}

int ck_lr_coefficient(const char* lam, const char* mu, const char* nu, long* out) {
    return guarded([&] {
        if (!out) throw DomainError("output pointer is null");
        *out = lr_coefficient(arg_partition(lam, "lam"), arg_partition(mu, "mu"),
                              arg_partition(nu, "nu"));
        return CK_OK;
    });
}

int ck_m_coeff(const char* mu, const char* nu, const char* zeta, const char* eta,
               long* out) {
    return guarded([&] {
        if (!out) throw DomainError("output pointer is null");
        *out = m_coeff(arg_partition(mu, "mu"), arg_partition(nu, "nu"),
                       arg_partition(zeta, "zeta"), arg_partition(eta, "eta"));
        return CK_OK;
    });
}

int ck_n_coeff(const char* sigma, const char* tau, const char* mu, const char* nu,
               long* out) {
    return guarded([&] {
        if (!out) throw DomainError("output pointer is null");
        *out = n_coeff(arg_partition(sigma, "sigma"), arg_partition(tau, "tau"),
                       arg_partition(mu, "mu"), arg_partition(nu, "nu"));
        return CK_OK;
    });
}

int ck_hset_size(const char* mu, const char* nu, const char* zeta, const char* eta,
                 long level, long* out) {
    return guarded([&] {
        if (!out) throw DomainError("output pointer is null");
        PartitionPair high{arg_partition(mu, "mu"), arg_partition(nu, "nu")};
        PartitionPair low{arg_partition(zeta, "zeta"), arg_partition(eta, "eta")};
        long lvl = level > 0
                       ? level
                       : partition_size(high.plus) + partition_size(high.minus) + 2;
        HSet h = h_set(low, socle_weight(high, low), lvl);
        *out = h.size();
        return CK_OK;
    });
}

int ck_transition_check(long degree) {
    return guarded([&] {
        if (verify_transition_inverse(degree)) return CK_OK;
        return fail(CK_VERIFY_FAIL, "transition matrices not mutually inverse up to degree " +
                                        std::to_string(degree));
    });
}

int ck_cauchy_verify(const char* kind, long num_vars, long degree, char** detail) {
    return guarded([&] {
        CauchyReport r = verify_cauchy_report(arg_kind(kind), num_vars, degree);
        if (r.ok) return CK_OK;
        if (detail) put(detail, r.detail);
        return fail(CK_VERIFY_FAIL, r.detail);
    });
}

int ck_render_lr(const char* lam, const char* mu, const char* nu, int json, char** out) {
    return guarded([&] {
        Partition l = arg_partition(lam, "lam");
        Partition pm = arg_partition(mu, "mu");
        Partition pn = arg_partition(nu, "nu");
        long c = lr_coefficient(l, pm, pn);
        if (!json) {
            put(out, std::to_string(c) + "\n");
            return CK_OK;
        }
        Json p = Json::object();
        p["lam"] = json_partition(l);
        p["mu"] = json_partition(pm);
        p["nu"] = json_partition(pn);
        p["coefficient"] = c;
        put(out, json_dump(json_envelope("lr", p)));
        return CK_OK;
    });
}

int ck_render_tensor_decompose(const char* a_plus, const char* a_minus,
                               const char* b_plus, const char* b_minus, long rank,
                               int json, char** out) {
    return guarded([&] {
        PartitionPair a{arg_partition(a_plus, "a"), arg_partition(a_minus, "b")};
        PartitionPair b{arg_partition(b_plus, "g"), arg_partition(b_minus, "d2")};
        long N = rank > 0 ? rank : pair_total(a, b) + 2;
        std::map<PartitionPair, long> table = bitab_tensor_multiplicities(a, b, N);
        if (!json) {
            std::string s = "rank " + std::to_string(N) + "\n";
            for (const auto& [pr, mult] : table)
                s += pair_str(pr) + " " + std::to_string(mult) + "\n";
            put(out, s);
            return CK_OK;
        }
        Json p = Json::object();
        p["pair_a"] = json_pair(a);
        p["pair_b"] = json_pair(b);
        p["rank"] = N;
        p["components"] = json_multiplicities(table);
        put(out, json_dump(json_envelope("tensor-decompose", p)));
        return CK_OK;
    });
}

int ck_render_bitableaux(const char* mu, const char* nu, long rank, int check,
                         int json, char** out) {
    return guarded([&] {
        Partition pm = arg_partition(mu, "mu");
        Partition pn = arg_partition(nu, "nu");
        long N = rank > 0 ? rank : std::max<long>(1, partition_size(pm) + partition_size(pn));
        if (check) {
            bool ok = verify_bitableaux_iso(pm, pn, N);
            if (!json) {
                put(out, ok ? std::string("ok\n") : std::string("embedding mismatch\n"));
            } else {
                Json p = Json::object();
                p["mu"] = json_partition(pm);
                p["nu"] = json_partition(pn);
                p["rank"] = N;
                p["isomorphic"] = ok;
                put(out, json_dump(json_envelope("bitableaux", p)));
            }
            if (ok) return CK_OK;
            return fail(CK_VERIFY_FAIL, "bitableaux embedding mismatch at rank " +
                                            std::to_string(N));
        }
        BiTabCrystal c(pm, pn, N);
        std::vector<Elem> elems = c.all_elements();
        if (!json) {
            std::string s = "size " + std::to_string(elems.size()) + "\n";
            for (const Elem& e : elems) s += c.show(e) + "\n";
            put(out, s);
            return CK_OK;
        }
        Json p = Json::object();
        p["mu"] = json_partition(pm);
        p["nu"] = json_partition(pn);
        p["rank"] = N;
        p["size"] = elems.size();
        Json arr = Json::array();
        for (const Elem& e : elems) arr.push_back(json_bitableau(c, e));
        p["elements"] = std::move(arr);
        put(out, json_dump(json_envelope("bitableaux", p)));
        return CK_OK;
    });
}

int ck_render_howe(long m, long n, int json, char** out) {
    return guarded([&] {
        if (m < 1 || n < 1) throw DomainError("howe needs m, n >= 1");
        std::vector<std::pair<Partition, long>> rows = howe_decompose(m, n);
        std::shared_ptr<Crystal> c = matrix_crystal(m, n);
        std::map<Partition, long> size_of;
        for (const Component& comp : components(*c, all_matrices(m, n))) {
            if (!comp.highest) throw std::runtime_error("component without highest element");
            Weight w = c->weight(*comp.highest);
            Partition lam;
            for (long i = 1; i <= m; ++i) {
                auto it = w.find(i);
                lam.push_back(it == w.end() ? 0 : it->second);
            }
            while (!lam.empty() && lam.back() == 0) lam.pop_back();
            size_of[lam] += static_cast<long>(comp.members.size());
        }
        long total = 0;
        for (const auto& [lam, mult] : rows) total += size_of[lam];
        if (!json) {
            std::string s;
            for (const auto& [lam, mult] : rows)
                s += partition_str(lam) + " " + partition_str(conjugate(lam)) + " " +
                     std::to_string(size_of[lam]) + " " + std::to_string(mult) + "\n";
            put(out, s);
            return CK_OK;
        }
        Json p = Json::object();
        p["m"] = m;
        p["n"] = n;
        Json arr = Json::array();
        for (const auto& [lam, mult] : rows) {
            Json row = Json::object();
            row["plus"] = json_partition(lam);
            row["minus"] = json_partition(conjugate(lam));
            row["size"] = size_of[lam];
            row["mult"] = mult;
            arr.push_back(std::move(row));
        }
        p["components"] = std::move(arr);
        p["total"] = total;
        put(out, json_dump(json_envelope("howe", p)));
        return CK_OK;
    });
}

int ck_render_hset(const char* mu, const char* nu, const char* zeta, const char* eta,
                   long level, int json, char** out) {
    return guarded([&] {
        PartitionPair high{arg_partition(mu, "mu"), arg_partition(nu, "nu")};
        PartitionPair low{arg_partition(zeta, "zeta"), arg_partition(eta, "eta")};
        long lvl = level > 0
                       ? level
                       : partition_size(high.plus) + partition_size(high.minus) + 2;
        HSet h = h_set(low, socle_weight(high, low), lvl);
        if (!json) {
            std::string s = "size " + std::to_string(h.size()) + "\n";
            for (const MatrixNat& M : h.members) s += M.str() + "\n";
            put(out, s);
            return CK_OK;
        }
        Json p = Json::object();
        p["mu"] = json_partition(high.plus);
        p["nu"] = json_partition(high.minus);
        p["zeta"] = json_partition(low.plus);
        p["eta"] = json_partition(low.minus);
        p["level"] = lvl;
        Json hs = json_hset(h);
        p["size"] = hs["size"];
        p["members"] = hs["members"];
        put(out, json_dump(json_envelope("h-set", p)));
        return CK_OK;
    });
}

int ck_render_straighten(long m, long n, const char* word, const char* strategy,
                         int json, char** out) {
    return guarded([&] {
        WedgeWord w = arg_word(word);
        Strategy st = arg_strategy(strategy);
        WedgeElement e = straighten(m, n, w, st);
        if (!json) {
            put(out, e.str() + "\n");
            return CK_OK;
        }
        Json p = Json::object();
        p["m"] = m;
        p["n"] = n;
        p["word"] = word_json(w);
        p["strategy"] = st == Strategy::Leftmost ? "leftmost" : "rightmost";
        p["terms"] = json_wedge(e);
        put(out, json_dump(json_envelope("straighten", p)));
        return CK_OK;
    });
}

int ck_render_canonical_basis(long m, long n, const char* row_sums,
                              const char* col_sums, int json, char** out) {
    return guarded([&] {
        std::vector<long> rows = arg_longs(row_sums, "row sums");
        std::vector<long> cols = arg_longs(col_sums, "column sums");
        std::vector<std::pair<Elem, WedgeElement>> basis = canonical_basis(m, n, rows, cols);
        if (!json) {
            std::string s = "key";
            for (const auto& [key, g] : basis) s += "," + key_label(key);
            s += "\n";
            for (const auto& [key, g] : basis) {
                s += key_label(key);
                for (const auto& [col, gc] : basis) {
                    auto it = g.terms.find(col);
                    s += "," + (it == g.terms.end() ? std::string("0") : it->second.str());
                }
                s += "\n";
            }
            put(out, s);
            return CK_OK;
        }
        Json p = Json::object();
        p["m"] = m;
        p["n"] = n;
        Json jr = Json::array();
        for (long v : rows) jr.push_back(v);
        Json jc = Json::array();
        for (long v : cols) jc.push_back(v);
        p["row_sums"] = std::move(jr);
        p["col_sums"] = std::move(jc);
        Json arr = Json::array();
        for (const auto& [key, g] : basis) {
            Json row = Json::object();
            row["key"] = key_label(key);
            row["element"] = json_wedge(g);
            arr.push_back(std::move(row));
        }
        p["basis"] = std::move(arr);
        put(out, json_dump(json_envelope("canonical-basis", p)));
        return CK_OK;
    });
}

int ck_render_crystal_graph(const char* kind, const char* mu, const char* nu,
                            long m, long n, long rank, int json, char** out) {
    return guarded([&] {
        if (!kind) throw DomainError("kind is null");
        std::string k(kind);
        std::shared_ptr<Crystal> c;
        std::vector<Elem> seeds;
        if (k == "matrix") {
            if (m < 1 || n < 1) throw DomainError("crystal-graph matrix needs m, n >= 1");
            c = matrix_crystal(m, n);
            seeds = all_matrices(m, n);
        } else if (k == "sst") {
            if (rank < 1) throw DomainError("crystal-graph sst needs rank >= 1");
            auto sp = std::make_shared<SSTCrystal>(arg_partition(mu, "mu"), rank);
            seeds = sp->all_elements();
            c = sp;
        } else if (k == "dual") {
            if (rank < 1) throw DomainError("crystal-graph dual needs rank >= 1");
            auto sp = std::make_shared<DualSSTCrystal>(arg_partition(nu, "nu"), rank);
            seeds = sp->all_elements();
            c = sp;
        } else if (k == "bitab") {
            if (rank < 1) throw DomainError("crystal-graph bitab needs rank >= 1");
            auto sp = std::make_shared<BiTabCrystal>(arg_partition(mu, "mu"),
                                                     arg_partition(nu, "nu"), rank);
            seeds = sp->all_elements();
            c = sp;
        } else {
            throw DomainError("unknown crystal kind '" + k +
                              "' (expected matrix, sst, dual, or bitab)");
        }
        if (!json) {
            put(out, to_dot(*c, seeds));
            return CK_OK;
        }
        const size_t max_nodes = 10000;
        std::set<Elem> included;
        bool truncated = false;
        for (const Component& comp : components(*c, seeds))
            for (const Elem& e : comp.members) {
                if (included.size() >= max_nodes) {
                    truncated = true;
                    break;
                }
                included.insert(e);
            }
        Json p = Json::object();
        p["kind"] = k;
        if (k == "matrix") {
            p["m"] = m;
            p["n"] = n;
        } else {
            if (k != "dual") p["mu"] = json_partition(arg_partition(mu, "mu"));
            if (k != "sst") p["nu"] = json_partition(arg_partition(nu, "nu"));
            p["rank"] = rank;
        }
        p["truncated"] = truncated;
        Json nodes = Json::array();
        for (const Elem& e : included) nodes.push_back(c->show(e));
        p["nodes"] = std::move(nodes);
        Json edges = Json::array();
        for (const Elem& e : included)
            for (long i : c->colors())
                if (auto fb = c->apply_f(i, e))
                    if (included.count(*fb)) {
                        Json edge = Json::object();
                        edge["from"] = c->show(e);
                        edge["to"] = c->show(*fb);
                        edge["color"] = i;
                        edges.push_back(std::move(edge));
                    }
        p["edges"] = std::move(edges);
        put(out, json_dump(json_envelope("crystal-graph", p)));
        return CK_OK;
    });
}

int ck_render_socle(const char* a_plus, const char* a_minus, const char* g_plus,
                    const char* g_minus, long layer, int json, char** out) {
    return guarded([&] {
        PartitionPair ab{arg_partition(a_plus, "a"), arg_partition(a_minus, "b")};
        PartitionPair gd{arg_partition(g_plus, "g"), arg_partition(g_minus, "d2")};
        const long M = partition_size(ab.plus) + partition_size(gd.plus);
        const long N = partition_size(ab.minus) + partition_size(gd.minus);
        if (layer >= 0) {
            SocleTable t = socle_layer_general(ab, gd, layer);
            if (!json) {
                put(out, json_dump(json_socle(t)));
                return CK_OK;
            }
            Json p = Json::object();
            p["a"] = json_partition(ab.plus);
            p["b"] = json_partition(ab.minus);
            p["g"] = json_partition(gd.plus);
            p["d2"] = json_partition(gd.minus);
            p["table"] = json_socle(t);
            put(out, json_dump(json_envelope("socle", p)));
            return CK_OK;
        }
        Json layers = Json::array();
        for (long d = 0; d <= std::min(M, N); ++d)
            layers.push_back(json_socle(socle_layer_general(ab, gd, d)));
        if (!json) {
            put(out, json_dump(layers));
            return CK_OK;
        }
        Json p = Json::object();
        p["a"] = json_partition(ab.plus);
        p["b"] = json_partition(ab.minus);
        p["g"] = json_partition(gd.plus);
        p["d2"] = json_partition(gd.minus);
        p["layers"] = std::move(layers);
        put(out, json_dump(json_envelope("socle", p)));
        return CK_OK;
    });
}

int ck_render_transition_check(long degree, int json, char** out) {
    return guarded([&] {
        bool ok = verify_transition_inverse(degree);
        if (!json) {
            put(out, ok ? std::string("ok\n")
                        : "transition matrices not mutually inverse up to degree " +
                              std::to_string(degree) + "\n");
        } else {
            Json p = Json::object();
            p["degree"] = degree;
            p["inverse"] = ok;
            put(out, json_dump(json_envelope("transition-check", p)));
        }
        if (ok) return CK_OK;
        return fail(CK_VERIFY_FAIL, "transition matrices not mutually inverse up to degree " +
                                        std::to_string(degree));
    });
}

int ck_render_cauchy_verify(const char* kind, long num_vars, long degree, int json,
                            char** out) {
    return guarded([&] {
        CauchyKind kd = arg_kind(kind);
        CauchyReport r = verify_cauchy_report(kd, num_vars, degree);
        if (!json) {
            put(out, r.ok ? std::string("ok\n") : r.detail + "\n");
        } else {
            Json p = Json::object();
            p["kind"] = kd == CauchyKind::EE ? "ee" : "eh";
            p["vars"] = num_vars;
            p["degree"] = degree;
            p["equal"] = r.ok;
            if (!r.ok) p["first_difference"] = r.detail;
            put(out, json_dump(json_envelope("cauchy-verify", p)));
        }
        if (r.ok) return CK_OK;
        return fail(CK_VERIFY_FAIL, r.detail);
    });
}

}  // extern "C"
