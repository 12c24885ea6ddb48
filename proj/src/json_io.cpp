// json_io.cpp

#include "json_io.hpp"

#include <algorithm>

namespace crystalkit {

Json json_partition(const Partition& p) {
    Json a = Json::array();
    for (long x : p) a.push_back(x);
    return a;
}

Json json_pair(const PartitionPair& mn) {
    Json j = Json::object();
    j["plus"] = json_partition(mn.plus);
    j["minus"] = json_partition(mn.minus);
    return j;
}

Json json_multiplicities(const std::map<PartitionPair, long>& table) {
    Json a = Json::array();
    for (const auto& [pr, mult] : table) {
        Json row = Json::object();
        row["pair"] = json_pair(pr);
        row["mult"] = mult;
        a.push_back(std::move(row));
    }
    return a;
}

Json json_matrix(const Matrix01& M) {
    Json j = Json::object();
    j["row_lo"] = M.row_lo;
    j["row_hi"] = M.row_hi;
    j["cols"] = M.cols;
    Json rows = Json::array();
    for (long i = M.row_lo; i <= M.row_hi; ++i) {
        Json row = Json::array();
        for (long jj = 1; jj <= M.cols; ++jj) row.push_back(M.at(i, jj));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json json_matrix(const MatrixNat& M) {
    long row_lo = -1;
    long col_hi = 0;
    for (const auto& [ij, v] : M.entries) {
        row_lo = std::min(row_lo, ij.first);
        col_hi = std::max(col_hi, ij.second);
    }
    Json j = Json::object();
    j["row_lo"] = row_lo;
    j["row_hi"] = -1;
    j["col_lo"] = 0;
    j["col_hi"] = col_hi;
    Json rows = Json::array();
    for (long i = row_lo; i <= -1; ++i) {
        Json row = Json::array();
        for (long jj = 0; jj <= col_hi; ++jj) row.push_back(M.at(i, jj));
        rows.push_back(std::move(row));
    }
    j["rows"] = std::move(rows);
    return j;
}

Json json_hset(const HSet& h) {
    Json j = Json::object();
    j["size"] = h.size();
    Json members = Json::array();
    for (const MatrixNat& M : h.members) members.push_back(json_matrix(M));
    j["members"] = std::move(members);
    return j;
}

namespace {

// Split a flat payload into rows of the given lengths.
Json rows_of(const std::vector<long>& lens, const Elem& b) {
    Json rows = Json::array();
    size_t pos = 0;
    for (long len : lens) {
        Json row = Json::array();
        for (long k = 0; k < len; ++k) row.push_back(b[pos++]);
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace

Json json_tableau(const SSTCrystal& c, const Elem& b) {
    return rows_of(c.shape(), b);
}

Json json_tableau(const DualSSTCrystal& c, const Elem& b) {
    return rows_of(c.row_lengths(), b);
}

Json json_bitableau(const BiTabCrystal& c, const Elem& b) {
    auto [s, t] = c.unpack(b);
    Json j = Json::object();
    j["s"] = json_tableau(c.sst(), s);
    j["t"] = json_tableau(c.dual(), t);
    return j;
}

Json json_key_matrix(long m, long n, const Elem& key) {
    Json rows = Json::array();
    for (long a = 0; a < m; ++a) {
        Json row = Json::array();
        for (long b = 0; b < n; ++b) row.push_back(key[static_cast<size_t>(a * n + b)]);
        rows.push_back(std::move(row));
    }
    return rows;
}

Json json_wedge(const WedgeElement& x) {
    Json a = Json::array();
    for (const auto& [key, coeff] : x.terms) {
        Json term = Json::object();
        term["monomial"] = json_key_matrix(x.m, x.n, key);
        term["coeff"] = coeff.str();
        a.push_back(std::move(term));
    }
    return a;
}

Json json_socle(const SocleTable& t) {
    Json j = Json::object();
    j["layer"] = t.layer;
    Json entries = Json::array();
    for (const auto& [pr, mult] : t.entries) {
        Json row = Json::object();
        row["pair"] = json_pair(pr);
        row["mult"] = mult;
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string json_dump(const Json& j) {
    return j.dump(2) + "\n";
}

Json json_envelope(const std::string& command, const Json& payload) {
    Json j = Json::object();
    j["schema"] = "crystalkit/" + command + "/1";
    for (const auto& [key, value] : payload.items()) j[key] = value;
    return j;
}

}  // namespace crystalkit
