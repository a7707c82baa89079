#pragma once

// Deterministic exports: DOT for Hasse diagrams, JSON for posets,
// partitions, chambers and complexes, CSV for the number tables.

#include <json.hpp>

#include "coxcat/classical.hpp"
#include "coxcat/cluster.hpp"
#include "coxcat/noncrossing.hpp"
#include "coxcat/shi.hpp"

namespace coxcat {

using Json = nlohmann::json;

// one node per element, one edge per cover, rank-aligned when ranks given
std::string poset_dot(const FinitePoset& p, const std::vector<std::string>& labels,
                      const std::vector<int>* ranks = nullptr);

std::string element_string(const CoxeterGroup& G, const Element& w);

Json poset_to_json(const FinitePoset& p, const std::vector<std::string>& labels);
FinitePoset poset_from_json(const Json& j);

Json nc_to_json(const NCLattice& nc);
Json nck_to_json(const KDivisible& kd);
Json partition_to_json(const SetPartition& p, bool signed_labels = false);
Json classical_to_json(const ClassicalKDiv& c);
Json chambers_to_json(const ShiArrangement& shi);
Json cluster_to_json(const ClusterComplex& cc);

std::string csv_escape(const std::string& s);

}  // namespace coxcat
