#include "bigraph/io.hpp"

#include <fstream>
#include <sstream>

namespace bigraph {

namespace {

bool parse_int(const std::string& token, int& out) {
  if (token.empty()) return false;
  std::size_t pos = 0;
  try {
    long v = std::stol(token, &pos);
    if (pos != token.size()) return false;
    if (v < -(1l << 30) || v > (1l << 30)) return false;
    out = static_cast<int>(v);
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

BalancedBipartiteGraph read_edge_list(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_n = false;
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (!line.empty() && line.front() == '#') continue;
    std::istringstream ls(line);
    std::string a, b, extra;
    if (!(ls >> a)) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": empty line");
    if (!have_n) {
      if (ls >> extra) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected a single integer n");
      if (!parse_int(a, n)) throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": invalid n");
      have_n = true;
      continue;
    }
    if (!(ls >> b) || (ls >> extra))
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": expected \"i j\"");
    int i = 0, j = 0;
    if (!parse_int(a, i) || !parse_int(b, j))
      throw Error(Errc::ParseError, "line " + std::to_string(lineno) + ": invalid edge indices");
    edges.emplace_back(i, j);
  }
  if (!have_n) throw Error(Errc::ParseError, "missing leading n line");
  return from_edge_list(n, edges);
}

BalancedBipartiteGraph read_edge_list_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::ParseError, "cannot open " + path);
  return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const BalancedBipartiteGraph& g) {
  out << g.n() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
}

std::string edge_list_string(const BalancedBipartiteGraph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

nlohmann::json witness_json(const CycleWitness& w) {
  nlohmann::json arr = nlohmann::json::array();
  for (std::size_t t = 0; t < w.xs.size(); ++t) {
    arr.push_back({"x", w.xs[t]});
    arr.push_back({"y", w.ys[t]});
  }
  return arr;
}

nlohmann::json extraction_json(const ExtractionReport& rep) {
  nlohmann::json indices;
  if (const auto* c1 = std::get_if<Condition1Indices>(&rep.indices)) {
    indices = {{"i", c1->i}};
  } else if (const auto* c2 = std::get_if<Condition2Indices>(&rep.indices)) {
    indices = {{"i", c2->i}, {"j", c2->j}};
  } else {
    const auto& st = std::get<StructuralIndices>(rep.indices);
    indices = {{"i0", st.i0}, {"k", st.k}, {"l", st.l}};
  }
  return {{"n", rep.n},
          {"method", std::string(method_name(rep.method))},
          {"indices", indices},
          {"cycle", witness_json(rep.witness)},
          {"omitted", {{"x", rep.omitted.first}, {"y", rep.omitted.second}}},
          {"omitted_adjacent", rep.omitted_adjacent}};
}

nlohmann::json pancyclicity_json(const PancyclicityReport& rep) {
  return {{"n", rep.n},
          {"lengths_present", rep.lengths_present},
          {"is_bipancyclic", rep.is_bipancyclic}};
}

nlohmann::json es_prediction_json(const EsPrediction& p) {
  nlohmann::json out;
  out["prediction"] = p.predict_bipancyclic ? "predict_bipancyclic" : "not_applicable";
  if (p.reason)
    out["reason"] = *p.reason == EsReason::NotHamiltonian ? "not_hamiltonian" : "size_too_small";
  else
    out["reason"] = nullptr;
  return out;
}

nlohmann::json second_assertion_json(SecondAssertionOutcome outcome, const SecondAssertionReport& rep) {
  nlohmann::json out;
  switch (outcome) {
    case SecondAssertionOutcome::BipancyclicConfirmed: out["outcome"] = "confirmed"; break;
    case SecondAssertionOutcome::Inconclusive: out["outcome"] = "inconclusive"; break;
    case SecondAssertionOutcome::Refuted: out["outcome"] = "refuted"; break;
  }
  if (rep.pair)
    out["pair"] = {{"x", rep.pair->first}, {"y", rep.pair->second}};
  else
    out["pair"] = nullptr;
  out["witness"] = rep.witness ? witness_json(*rep.witness) : nlohmann::json(nullptr);
  out["subgraph_size"] = rep.subgraph_size;
  out["bipancyclic_confirmed"] = rep.bipancyclic_confirmed ? nlohmann::json(*rep.bipancyclic_confirmed)
                                                           : nlohmann::json(nullptr);
  return out;
}

nlohmann::json matrix_census_json(const MatrixCensusResult& res) {
  nlohmann::json cands = nlohmann::json::array();
  for (const auto& c : res.candidates) {
    nlohmann::json extraction;
    if (c.extraction)
      extraction = {{"i0", c.extraction->first}, {"k", c.extraction->second}};
    else
      extraction = nullptr;
    cands.push_back({{"first_row", c.first_row},
                     {"column_sums_ok", c.column_sums_ok},
                     {"extraction", extraction}});
  }
  return {{"n", res.n}, {"count", res.candidates.size()}, {"candidates", cands}};
}

nlohmann::json verification_json(const VerificationSummary& s) {
  return {{"n", s.n},
          {"member_count", s.member_count},
          {"permanent_count", s.permanent_count ? nlohmann::json(*s.permanent_count) : nlohmann::json(nullptr)},
          {"methods",
           {{"condition1a", s.condition1a},
            {"condition1b", s.condition1b},
            {"condition2", s.condition2},
            {"structural", s.structural}}},
          {"oracle_agreements", s.oracle_agreements},
          {"second_assertion",
           {{"confirmed", s.second_confirmed},
            {"inconclusive", s.second_inconclusive},
            {"refuted", s.second_refuted}}},
          {"failures", s.failures}};
}

}  // namespace bigraph
