// json_io.hpp
// JSON views of the library's value types, built on nlohmann::json. Every
// serializer returns an ordered_json, so object keys keep insertion order
// and a fixed input always dumps to the same bytes.

#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "charalg.hpp"
#include "fockcrystal.hpp"
#include "partitions.hpp"
#include "qwedge.hpp"
#include "tableaux.hpp"

namespace crystalkit {

using Json = nlohmann::ordered_json;

// Partition as an array of parts, pair as {"plus": [...], "minus": [...]}.
Json json_partition(const Partition& p);
Json json_pair(const PartitionPair& mn);

// Multiplicity table as [{"pair": ..., "mult": k}, ...] in key order.
Json json_multiplicities(const std::map<PartitionPair, long>& table);

// Windowed 0/1 matrix: {"row_lo", "row_hi", "cols", "rows": [[0,1,...],...]}.
Json json_matrix(const Matrix01& M);

// Finitely supported natural matrix on its bounding window, rows <= -1 and
// columns >= 0: {"row_lo", "row_hi", "col_lo", "col_hi", "rows": [...]}.
Json json_matrix(const MatrixNat& M);

// {"size": k, "members": [...]} with one matrix per member.
Json json_hset(const HSet& h);

// Tableaux as row lists; dual letters are stored negative already.
Json json_tableau(const SSTCrystal& c, const Elem& b);
Json json_tableau(const DualSSTCrystal& c, const Elem& b);
// {"s": rows, "t": rows} for a packed bitableau payload.
Json json_bitableau(const BiTabCrystal& c, const Elem& b);

// Standard monomial key as an m x n 0/1 matrix (array of rows).
Json json_key_matrix(long m, long n, const Elem& key);

// Wedge element as [{"monomial": rows, "coeff": "..."}, ...] in key order.
Json json_wedge(const WedgeElement& x);

// {"layer": d, "entries": [{"pair": ..., "mult": k}]}.
Json json_socle(const SocleTable& t);

// Canonical dump: two-space indent plus a trailing newline.
std::string json_dump(const Json& j);

// Versioned CLI envelope: {"schema": "crystalkit/<command>/1"} followed by
// the payload's keys in their original order.
Json json_envelope(const std::string& command, const Json& payload);

}  // namespace crystalkit
