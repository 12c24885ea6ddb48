// crystalkit_main.cpp
// Command line front end: a thin argv layer over the C API. Exit codes:
// 0 success, 1 domain or usage error, 2 verification failure, 3 budget
// overflow, 4 internal error.

#include <cstdio>
#include <string>

#include <CLI11.hpp>

#include "crystalkit.h"

namespace {

int emit(int status, char* out) {
    if (out) {
        std::fputs(out, stdout);
        ck_string_free(out);
    }
    if (status == CK_OK) return 0;
    const char* cat = status == CK_DOMAIN_ERROR      ? "domain"
                      : status == CK_VERIFY_FAIL     ? "verify"
                      : status == CK_BUDGET_EXCEEDED ? "budget"
                                                     : "internal";
    std::fprintf(stderr, "error: %s: %s\n", cat, ck_last_error());
    return status;
}

std::string one_line(const std::string& s) {
    std::string out;
    for (char c : s)
        if (c == '\n' || c == '\r') {
            if (!out.empty() && out.back() != ' ') out += "; ";
        } else {
            out += c;
        }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"crystalkit: crystals, canonical bases, and socle tables"};
    app.require_subcommand(1);

    std::string lam, mu, nu, zeta, eta, a, b, g, d2, word, rows, cols;
    std::string strategy = "leftmost", kind, type;
    long m = 0, n = 0, rank = 0, level = 0, layer = -1, degree = 0, vars = 0;
    bool json = false, check = false;

    CLI::App* c_lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient");
    c_lr->add_option("--lam", lam, "outer partition")->required();
    c_lr->add_option("--mu", mu, "first inner partition")->required();
    c_lr->add_option("--nu", nu, "second inner partition")->required();
    c_lr->add_flag("--json", json, "JSON output");

    CLI::App* c_td = app.add_subcommand(
        "tensor-decompose", "decompose a tensor product of extremal weight crystals");
    c_td->add_option("--a", a, "plus partition of the first pair");
    c_td->add_option("--b", b, "minus partition of the first pair");
    c_td->add_option("--g", g, "plus partition of the second pair");
    c_td->add_option("--d2", d2, "minus partition of the second pair");
    c_td->add_option("--rank", rank, "alphabet size (0 = stable rank)");
    c_td->add_flag("--json", json, "JSON output");

    CLI::App* c_bt = app.add_subcommand("bitableaux", "list a bitableaux crystal");
    c_bt->add_option("--mu", mu, "plus partition")->required();
    c_bt->add_option("--nu", nu, "minus partition")->required();
    c_bt->add_option("--rank", rank, "alphabet size (0 = |mu| + |nu|)");
    c_bt->add_flag("--check", check, "verify the tensor embedding instead");
    c_bt->add_flag("--json", json, "JSON output");

    CLI::App* c_howe = app.add_subcommand("howe", "decompose the 0/1 matrix crystal");
    c_howe->add_option("--m", m, "row count")->required();
    c_howe->add_option("--n", n, "column count")->required();
    c_howe->add_flag("--json", json, "JSON output");

    CLI::App* c_hs = app.add_subcommand("h-set", "highest weight set of a socle weight");
    c_hs->add_option("--mu", mu, "plus partition of the top pair")->required();
    c_hs->add_option("--nu", nu, "minus partition of the top pair")->required();
    c_hs->add_option("--zeta", zeta, "plus partition of the target pair")->required();
    c_hs->add_option("--eta", eta, "minus partition of the target pair")->required();
    c_hs->add_option("--level", level, "level (0 = |mu| + |nu| + 2)");
    c_hs->add_flag("--json", json, "JSON output");

    CLI::App* c_st = app.add_subcommand("straighten", "straighten a wedge word");
    c_st->add_option("--m", m, "row alphabet size")->required();
    c_st->add_option("--n", n, "column alphabet size")->required();
    c_st->add_option("--word", word, "letters a,b separated by ';'")->required();
    c_st->add_option("--strategy", strategy, "leftmost or rightmost");
    c_st->add_flag("--json", json, "JSON output");

    CLI::App* c_cb = app.add_subcommand("canonical-basis",
                                        "canonical basis of one bi-weight space");
    c_cb->add_option("--m", m, "row alphabet size")->required();
    c_cb->add_option("--n", n, "column alphabet size")->required();
    c_cb->add_option("--rows", rows, "row sums, comma separated")->required();
    c_cb->add_option("--cols", cols, "column sums, comma separated")->required();
    c_cb->add_flag("--json", json, "JSON output");

    CLI::App* c_cg = app.add_subcommand("crystal-graph", "crystal graph in DOT form");
    c_cg->add_option("--type", type, "matrix, sst, dual, or bitab")->required();
    c_cg->add_option("--mu", mu, "partition (sst, bitab)");
    c_cg->add_option("--nu", nu, "partition (dual, bitab)");
    c_cg->add_option("--m", m, "row count (matrix)");
    c_cg->add_option("--n", n, "column count (matrix)");
    c_cg->add_option("--rank", rank, "alphabet size (sst, dual, bitab)");
    c_cg->add_flag("--json", json, "JSON output");

    CLI::App* c_so = app.add_subcommand("socle", "socle layer table of a tensor product");
    c_so->add_option("--a", a, "plus partition of the first factor")->required();
    c_so->add_option("--b", b, "minus partition of the first factor")->required();
    c_so->add_option("--g", g, "plus partition of the second factor")->required();
    c_so->add_option("--d2", d2, "minus partition of the second factor")->required();
    c_so->add_option("--layer", layer, "layer index (omit for every layer)");
    c_so->add_flag("--json", json, "JSON output");

    CLI::App* c_tc = app.add_subcommand("transition-check",
                                        "verify the transition matrices are inverse");
    c_tc->add_option("--degree", degree, "degree bound")->required();
    c_tc->add_flag("--json", json, "JSON output");

    CLI::App* c_cv = app.add_subcommand("cauchy-verify",
                                        "verify a truncated Cauchy identity");
    c_cv->add_option("--kind", kind, "ee or eh")->required();
    c_cv->add_option("--vars", vars, "variables per alphabet")->required();
    c_cv->add_option("--degree", degree, "truncation degree")->required();
    c_cv->add_flag("--json", json, "JSON output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::fprintf(stderr, "error: usage: %s\n", one_line(e.what()).c_str());
        return 1;
    }

    char* out = nullptr;
    const int j = json ? 1 : 0;
    int st = CK_INTERNAL_ERROR;
    if (c_lr->parsed()) {
        st = ck_render_lr(lam.c_str(), mu.c_str(), nu.c_str(), j, &out);
    } else if (c_td->parsed()) {
        st = ck_render_tensor_decompose(a.c_str(), b.c_str(), g.c_str(), d2.c_str(), rank, j,
                                        &out);
    } else if (c_bt->parsed()) {
        st = ck_render_bitableaux(mu.c_str(), nu.c_str(), rank, check ? 1 : 0, j, &out);
    } else if (c_howe->parsed()) {
        st = ck_render_howe(m, n, j, &out);
    } else if (c_hs->parsed()) {
        st = ck_render_hset(mu.c_str(), nu.c_str(), zeta.c_str(), eta.c_str(), level, j, &out);
    } else if (c_st->parsed()) {
        st = ck_render_straighten(m, n, word.c_str(), strategy.c_str(), j, &out);
    } else if (c_cb->parsed()) {
        st = ck_render_canonical_basis(m, n, rows.c_str(), cols.c_str(), j, &out);
    } else if (c_cg->parsed()) {
        st = ck_render_crystal_graph(type.c_str(), mu.c_str(), nu.c_str(), m, n, rank, j, &out);
    } else if (c_so->parsed()) {
        st = ck_render_socle(a.c_str(), b.c_str(), g.c_str(), d2.c_str(), layer, j, &out);
    } else if (c_tc->parsed()) {
        st = ck_render_transition_check(degree, j, &out);
    } else if (c_cv->parsed()) {
        st = ck_render_cauchy_verify(kind.c_str(), vars, degree, j, &out);
    } else {
        std::fprintf(stderr, "error: usage: no command given\n");
        return 1;
    }
    return emit(st, out);
}
