// Edge-list file format and JSON serialization of the report types.
//
// Edge-list format: the first non-comment line is n; every following
// non-comment line is "i j" (ASCII decimals, single space) meaning x_i ~ y_j;
// lines starting with '#' are comments; the trailing newline is optional.
#ifndef BIGRAPH_IO_HPP
#define BIGRAPH_IO_HPP

#include <iosfwd>
#include <string>

#include <json.hpp>

#include "bigraph/census.hpp"
#include "bigraph/extract.hpp"
#include "bigraph/graph.hpp"
#include "bigraph/oracle.hpp"

namespace bigraph {

BalancedBipartiteGraph read_edge_list(std::istream& in);
BalancedBipartiteGraph read_edge_list_file(const std::string& path);

// Writes n, then the edges ascending by (i, j); byte-exact and stable.
void write_edge_list(std::ostream& out, const BalancedBipartiteGraph& g);
std::string edge_list_string(const BalancedBipartiteGraph& g);

nlohmann::json witness_json(const CycleWitness& w);
nlohmann::json extraction_json(const ExtractionReport& rep);
nlohmann::json pancyclicity_json(const PancyclicityReport& rep);
nlohmann::json es_prediction_json(const EsPrediction& p);
nlohmann::json second_assertion_json(SecondAssertionOutcome outcome, const SecondAssertionReport& rep);
nlohmann::json matrix_census_json(const MatrixCensusResult& res);
nlohmann::json verification_json(const VerificationSummary& s);

}  // namespace bigraph

#endif
