// Command-line front end: class-membership checking, certified cycle
// extraction, bipancyclicity reports, class census, matrix census, seeded
// generation, and whole-class verification over edge-list files.
//
// Exit codes: 0 success / property true; 1 property false or predicate not
// applicable; 2 invalid input (parse error, class violation, unsupported n);
// 3 theorem violation (internal inconsistency, never expected).
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "bigraph/census.hpp"
#include "bigraph/extract.hpp"
#include "bigraph/graph.hpp"
#include "bigraph/io.hpp"
#include "bigraph/oracle.hpp"

namespace {

using namespace bigraph;

int exit_code_for(const Error& e) {
  return e.code() == Errc::TheoremViolation ? 3 : 2;
}

std::string cycle_string(const CycleWitness& w) {
  std::ostringstream os;
  for (std::size_t t = 0; t < w.xs.size(); ++t) {
    if (t) os << ' ';
    os << 'x' << w.xs[t] << " y" << w.ys[t];
  }
  return os.str();
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

void warn_over_cap(int n, int cap) {
  if (n > cap)
    std::cerr << "warning: n = " << n << " exceeds the documented cap of " << cap
              << "; this may take a very long time\n";
}

int run_check(const std::string& file, bool as_json) {
  const BalancedBipartiteGraph g = read_edge_list_file(file);
  const bool n_even = g.n() % 2 == 0;
  const bool regular = g.is_regular();
  const bool big_enough = g.order() > 8;
  const bool hamiltonian = find_hamilton_cycle(g).has_value();
  std::string reason;
  if (!big_enough)
    reason = "order too small (need 2n > 8)";
  else if (!n_even || !regular)
    reason = "not n/2-regular";
  else if (!hamiltonian)
    reason = "not hamiltonian";
  const bool member = reason.empty();

  if (as_json) {
    nlohmann::json out{{"n", g.n()},          {"order", g.order()},
                       {"size", g.size()},    {"n_even", n_even},
                       {"regular", regular},  {"hamiltonian", hamiltonian},
                       {"class_member", member}};
    out["reason"] = member ? nlohmann::json(nullptr) : nlohmann::json(reason);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "n: " << g.n() << '\n'
              << "order: " << g.order() << '\n'
              << "size: " << g.size() << '\n'
              << "n even: " << yesno(n_even) << '\n'
              << "regular: " << yesno(regular) << '\n'
              << "hamiltonian: " << yesno(hamiltonian) << '\n'
              << "class member: " << (member ? "yes" : "no (" + reason + ")") << '\n';
  }
  if (!member) {
    std::cerr << reason << '\n';
    return 2;
  }
  return 0;
}

int run_extract(const std::string& file, bool as_json) {
  const BalancedBipartiteGraph g = read_edge_list_file(file);
  const ExtractionReport rep = extract(g);
  if (as_json) {
    std::cout << extraction_json(rep).dump() << '\n';
    return 0;
  }
  std::cout << "method: " << method_name(rep.method) << '\n';
  std::cout << "indices:";
  if (const auto* c1 = std::get_if<Condition1Indices>(&rep.indices)) {
    std::cout << " i=" << c1->i;
  } else if (const auto* c2 = std::get_if<Condition2Indices>(&rep.indices)) {
    std::cout << " i=" << c2->i << " j=" << c2->j;
  } else {
    const auto& st = std::get<StructuralIndices>(rep.indices);
    std::cout << " i0=" << st.i0 << " k=" << st.k << " l=" << st.l;
  }
  std::cout << '\n'
            << "cycle length: " << rep.witness.length() << '\n'
            << "cycle: " << cycle_string(rep.witness) << '\n'
            << "omitted: x" << rep.omitted.first << " y" << rep.omitted.second << '\n'
            << "omitted adjacent: " << yesno(rep.omitted_adjacent) << '\n';
  return 0;
}

int run_pancyclic(const std::string& file, std::optional<int> length, bool as_json) {
  const BalancedBipartiteGraph g = read_edge_list_file(file);
  if (length) {
    const bool found = has_cycle_of_length(g, *length);
    if (as_json)
      std::cout << nlohmann::json{{"n", g.n()}, {"length", *length}, {"has_cycle", found}}.dump()
                << '\n';
    else
      std::cout << "cycle of length " << *length << ": " << yesno(found) << '\n';
    return found ? 0 : 1;
  }
  const PancyclicityReport rep = is_bipancyclic(g);
  const EsPrediction es = es_predict(g);
  if (as_json) {
    nlohmann::json out = pancyclicity_json(rep);
    out["es_predict"] = es_prediction_json(es);
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "n: " << rep.n << '\n' << "lengths present:";
    for (int len : rep.lengths_present) std::cout << ' ' << len;
    std::cout << '\n' << "bipancyclic: " << yesno(rep.is_bipancyclic) << '\n';
    std::cout << "size threshold prediction: ";
    if (es.predict_bipancyclic)
      std::cout << "bipancyclic\n";
    else
      std::cout << "not applicable ("
                << (*es.reason == EsReason::NotHamiltonian ? "not hamiltonian" : "size too small")
                << ")\n";
  }
  return rep.is_bipancyclic ? 0 : 1;
}

int run_second_assertion(const std::string& file, bool as_json) {
  const BalancedBipartiteGraph g = read_edge_list_file(file);
  const auto [outcome, rep] = check_second_assertion(g);
  if (as_json) {
    std::cout << second_assertion_json(outcome, rep).dump() << '\n';
  } else {
    const char* name = outcome == SecondAssertionOutcome::BipancyclicConfirmed ? "confirmed"
                       : outcome == SecondAssertionOutcome::Inconclusive       ? "inconclusive"
                                                                               : "refuted";
    std::cout << "outcome: " << name << '\n';
    if (rep.pair)
      std::cout << "pair: x" << rep.pair->first << " y" << rep.pair->second << '\n'
                << "subgraph size: " << rep.subgraph_size << '\n'
                << "witness: " << cycle_string(*rep.witness) << '\n';
    else
      std::cout << "pair: none\n";
    std::cout << "bipancyclic confirmed: "
              << (rep.bipancyclic_confirmed ? yesno(*rep.bipancyclic_confirmed) : "n/a") << '\n';
  }
  switch (outcome) {
    case SecondAssertionOutcome::BipancyclicConfirmed: return 0;
    case SecondAssertionOutcome::Inconclusive: return 1;
    case SecondAssertionOutcome::Refuted:
      std::cerr << "second assertion refuted\n";
      return 3;
  }
  return 2;
}

int run_census(int n, const std::string& out_dir, bool force, bool as_json) {
  if (force) warn_over_cap(n, kClassEnumerationCap);
  std::optional<std::filesystem::path> dir;
  if (!out_dir.empty()) {
    dir = std::filesystem::path(out_dir);
    std::error_code ec;
    std::filesystem::create_directories(*dir, ec);
    if (ec) throw Error(Errc::InvalidInput, "cannot create directory " + out_dir);
  }
  std::uint64_t written = 0;
  const std::uint64_t count = enumerate_class(
      n,
      [&](const BalancedBipartiteGraph& g) {
        if (!dir) return;
        std::ostringstream name;
        name << std::setw(8) << std::setfill('0') << written << ".txt";
        std::ofstream out(*dir / name.str());
        if (!out) throw Error(Errc::InvalidInput, "cannot write member file in " + out_dir);
        write_edge_list(out, g);
        ++written;
      },
      force);
  if (as_json) {
    nlohmann::json out{{"n", n}, {"count", count}};
    if (dir) out["out_dir"] = out_dir;
    std::cout << out.dump() << '\n';
  } else {
    std::cout << "n: " << n << '\n' << "members: " << count << '\n';
    if (dir) std::cout << "wrote " << written << " files to " << out_dir << '\n';
  }
  return 0;
}

int run_matrix_census(int n, bool force, bool as_json) {
  if (force) warn_over_cap(n, kMatrixCensusCap);
  const MatrixCensusResult res = constrained_matrix_census(n, force);
  if (as_json) {
    std::cout << matrix_census_json(res).dump() << '\n';
  } else {
    std::cout << "n: " << res.n << '\n' << "candidates: " << res.candidates.size() << '\n';
    for (const auto& c : res.candidates) {
      std::cout << "first row:";
      for (int s : c.first_row) std::cout << ' ' << (s > 0 ? '+' : '-');
      std::cout << "  column sums zero: " << yesno(c.column_sums_ok) << "  extraction: ";
      if (c.extraction)
        std::cout << "i0=" << c.extraction->first << " k=" << c.extraction->second << '\n';
      else
        std::cout << "failed\n";
    }
  }
  // A candidate with zero line sums but no extraction would falsify the
  // theorem; make that loud.
  for (const auto& c : res.candidates)
    if (c.column_sums_ok && !c.extraction)
      throw Error(Errc::TheoremViolation, "matrix census candidate admits no extraction");
  return 0;
}

int run_gen(int n, std::uint64_t seed, const std::string& out_file) {
  const BalancedBipartiteGraph g = random_member(n, seed);
  if (out_file.empty()) {
    write_edge_list(std::cout, g);
  } else {
    std::ofstream out(out_file);
    if (!out) throw Error(Errc::InvalidInput, "cannot write " + out_file);
    write_edge_list(out, g);
  }
  return 0;
}

int run_verify(int n, int jobs, bool force, bool as_json) {
  if (jobs < 1) throw Error(Errc::InvalidInput, "--jobs must be at least 1");
  if (force) warn_over_cap(n, kClassEnumerationCap);
  VerificationSummary total;
  if (jobs == 1) {
    total = verify_partition(n, 0, 1, force);
  } else {
    std::vector<VerificationSummary> parts(static_cast<std::size_t>(jobs));
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(jobs));
    std::vector<std::thread> threads;
    threads.reserve(static_cast<std::size_t>(jobs));
    for (int t = 0; t < jobs; ++t)
      threads.emplace_back([&, t] {
        try {
          parts[t] = verify_partition(n, t, jobs, force);
        } catch (...) {
          errors[t] = std::current_exception();
        }
      });
    for (auto& th : threads) th.join();
    for (const auto& err : errors)
      if (err) std::rethrow_exception(err);
    // Merge in partition order so the summary is independent of scheduling.
    for (const auto& part : parts) merge_into(total, part);
  }
  finalize_summary(total);

  if (as_json) {
    std::cout << verification_json(total).dump() << '\n';
  } else {
    std::cout << "n: " << total.n << '\n' << "members: " << total.member_count << '\n';
    if (total.permanent_count) std::cout << "permanent count: " << *total.permanent_count << '\n';
    std::cout << "methods: condition1a=" << total.condition1a << " condition1b=" << total.condition1b
              << " condition2=" << total.condition2 << " structural=" << total.structural << '\n'
              << "oracle agreements: " << total.oracle_agreements << '\n'
              << "second assertion: confirmed=" << total.second_confirmed
              << " inconclusive=" << total.second_inconclusive << " refuted=" << total.second_refuted
              << '\n'
              << "failures: " << total.failures.size() << '\n';
    for (const auto& f : total.failures) std::cout << "  " << f << '\n';
  }
  if (!total.failures.empty()) {
    std::cerr << "theorem verification failed\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Certified long-cycle extraction and exhaustive verification for hamiltonian "
               "n/2-regular balanced bipartite graphs"};
  app.require_subcommand(1);

  std::string file, out_dir, out_file;
  bool as_json = false, force = false;
  int n = 0, jobs = 1;
  std::optional<int> length;
  std::uint64_t seed = 0;

  auto* c_check = app.add_subcommand("check", "Class-membership report for an edge-list file");
  c_check->add_option("file", file, "edge-list file")->required();
  c_check->add_flag("--json", as_json, "emit JSON");

  auto* c_extract = app.add_subcommand("extract", "Extract a certified cycle of length 2n-2");
  c_extract->add_option("file", file, "edge-list file")->required();
  c_extract->add_flag("--json", as_json, "emit JSON");

  auto* c_pan = app.add_subcommand("pancyclic", "Cycle-spectrum report (or single length query)");
  c_pan->add_option("file", file, "edge-list file")->required();
  int length_value = 0;
  auto* len_opt = c_pan->add_option("--length", length_value, "query one cycle length");
  c_pan->add_flag("--json", as_json, "emit JSON");

  auto* c_second = app.add_subcommand("second-assertion", "Near-Hamilton cycle omitting an adjacent pair");
  c_second->add_option("file", file, "edge-list file")->required();
  c_second->add_flag("--json", as_json, "emit JSON");

  auto* c_census = app.add_subcommand("census", "Enumerate all class members for a given n");
  c_census->add_option("--n", n, "class size n")->required();
  c_census->add_option("--out", out_dir, "write one edge-list file per member into this directory");
  c_census->add_flag("--force", force, "lift the documented n cap (prints a cost warning)");
  c_census->add_flag("--json", as_json, "emit JSON");

  auto* c_matrix = app.add_subcommand("matrix-census", "Sweep constrained sign matrices for a given n");
  c_matrix->add_option("--n", n, "matrix size n")->required();
  c_matrix->add_flag("--force", force, "lift the documented n cap (prints a cost warning)");
  c_matrix->add_flag("--json", as_json, "emit JSON");

  auto* c_gen = app.add_subcommand("gen", "Generate a seeded random class member");
  c_gen->add_option("--n", n, "class size n")->required();
  c_gen->add_option("--seed", seed, "random seed")->required();
  c_gen->add_option("-o,--out", out_file, "output file (stdout if omitted)");

  auto* c_verify = app.add_subcommand("verify", "Verify the theorem over every class member");
  c_verify->add_option("--n", n, "class size n")->required();
  c_verify->add_option("--jobs", jobs, "worker count (results are merged deterministically)");
  c_verify->add_flag("--force", force, "lift the documented n cap (prints a cost warning)");
  c_verify->add_flag("--json", as_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  if (len_opt->count() > 0) length = length_value;

  try {
    if (*c_check) return run_check(file, as_json);
    if (*c_extract) return run_extract(file, as_json);
    if (*c_pan) return run_pancyclic(file, length, as_json);
    if (*c_second) return run_second_assertion(file, as_json);
    if (*c_census) return run_census(n, out_dir, force, as_json);
    if (*c_matrix) return run_matrix_census(n, force, as_json);
    if (*c_gen) return run_gen(n, seed, out_file);
    if (*c_verify) return run_verify(n, jobs, force, as_json);
  } catch (const Error& e) {
    std::cerr << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }
  return 2;
}
