// csext: closed-form Ext^1 queries, single-shape inspection and verification sweeps.
//
// Exit codes: 0 success, 1 usage error, 2 out-of-scope query, 3 verification mismatch.

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "csext/combinatorics.hpp"
#include "csext/harness.hpp"
#include "csext/oracle.hpp"
#include "csext/specht.hpp"

namespace {

using namespace csext;
using nlohmann::json;

constexpr int kExitUsage = 1;
constexpr int kExitOutOfScope = 2;
constexpr int kExitMismatch = 3;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<int> parse_ints(const std::string& text, const std::string& what) {
  std::vector<int> out;
  std::string body = text;
  if (body.size() >= 2 && body.front() == '(' && body.back() == ')') body = body.substr(1, body.size() - 2);
  if (body.empty()) return out;
  std::stringstream ss(body);
  for (std::string token; std::getline(ss, token, ',');) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != token.size()) throw UsageError(what + ": bad integer '" + token + "'");
    out.push_back(value);
  }
  return out;
}

Prime parse_prime(int p) {
  if (!is_prime(p) || p > 251) throw UsageError("--p: " + std::to_string(p) + " is not a supported prime");
  return Prime(p);
}

Partition parse_partition(const std::string& text, const std::string& what) {
  const std::vector<int> parts = parse_ints(text, what);
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (parts[k] < 0) throw UsageError(what + ": negative part '" + std::to_string(parts[k]) + "'");
    if (k > 0 && parts[k] > parts[k - 1])
      throw UsageError(what + ": parts must be weakly decreasing at '" + std::to_string(parts[k]) + "'");
  }
  return Partition(parts);
}

Weight parse_weight(const std::string& text, const std::string& what) { return Weight(parse_ints(text, what)); }

std::string yes(bool b) { return b ? "true" : "false"; }

void emit(const std::string& text, const std::string& output) {
  if (output.empty() || output == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary | std::ios::trunc);
  if (!out) throw UsageError("cannot write output file '" + output + "'");
  out << text;
}

template <class Label>
int print_ext(const Scoped<ExtAnswer<Label>>& answer, const std::string& format) {
  if (!in_scope(answer)) {
    const auto& err = std::get<ScopeError>(answer);
    if (format == "json")
      std::cout << json{{"in_scope", false}, {"reason", to_string(err.reason)}, {"detail", err.detail}}.dump() << '\n';
    else
      std::cout << "out-of-scope: " << to_string(err.reason) << " (" << err.detail << ")\n";
    return kExitOutOfScope;
  }
  const auto& ext = std::get<ExtAnswer<Label>>(answer);
  if (format == "json") {
    json doc = {{"in_scope", true}, {"dim", ext.dim}};
    if (ext.witness) doc["witness"] = ext.witness->to_string();
    std::cout << doc.dump() << '\n';
  } else {
    std::cout << "dim=" << ext.dim;
    if (ext.witness) std::cout << " witness=" << ext.witness->to_string();
    std::cout << '\n';
  }
  return 0;
}

int inspect_weight(const Weight& lambda, Prime p, const std::string& format) {
  json doc = {{"weight", lambda.to_string()}, {"p", p.value()}, {"dominant", lambda.is_dominant()}};
  if (lambda.is_dominant()) {
    const RemovableRows rr = removable_rows(lambda);
    doc["psi"] = psi(lambda);
    doc["removable_rows"] = rr.rows;
    doc["p_restricted"] = is_p_restricted(lambda, p);
    if (is_p_restricted(lambda, p)) {
      doc["cs"] = is_cs_weight(lambda, p);
      doc["big"] = is_big_weight(lambda, p);
      if (is_big_weight(lambda, p)) doc["hat"] = hat(lambda, p).to_string();
    }
  }
  if (format == "json") {
    std::cout << doc.dump() << '\n';
    return 0;
  }
  std::cout << "weight=" << lambda.to_string() << " p=" << p.value() << '\n';
  if (!lambda.is_dominant()) {
    std::cout << "dominant=false\n";
    return kExitOutOfScope;
  }
  std::cout << "psi=" << doc["psi"].get<int>() << '\n';
  std::cout << "removable_rows=";
  for (std::size_t k = 0; k < doc["removable_rows"].size(); ++k) std::cout << (k ? "," : "") << doc["removable_rows"][k].get<int>();
  std::cout << '\n' << "p_restricted=" << yes(doc["p_restricted"].get<bool>()) << '\n';
  if (doc.contains("cs")) {
    std::cout << "cs=" << yes(doc["cs"].get<bool>()) << '\n' << "big=" << yes(doc["big"].get<bool>()) << '\n';
    if (doc.contains("hat")) std::cout << "hat=" << doc["hat"].get<std::string>() << '\n';
  }
  return 0;
}

int inspect_partition(const Partition& lambda, Prime p, const std::string& format) {
  json doc = {{"partition", lambda.to_string()},
              {"p", p.value()},
              {"degree", lambda.degree()},
              {"conjugate", conjugate(lambda).to_string()},
              {"chi", chi(lambda)},
              {"p_regular", is_p_regular(lambda, p)},
              {"cs", is_cs_partition(lambda, p)},
              {"rim_p_hook", has_rim_p_hook(lambda, p)},
              {"big", is_big_partition(lambda, p)}};
  if (is_big_partition(lambda, p) && is_p_regular(lambda, p)) doc["tilde"] = tilde(lambda, p).to_string();
  if (format == "json") {
    std::cout << doc.dump() << '\n';
    return 0;
  }
  std::cout << "partition=" << lambda.to_string() << " p=" << p.value() << '\n'
            << "conjugate=" << doc["conjugate"].get<std::string>() << '\n'
            << "chi=" << chi(lambda) << '\n'
            << "p_regular=" << yes(doc["p_regular"].get<bool>()) << '\n'
            << "cs=" << yes(doc["cs"].get<bool>()) << '\n'
            << "rim_p_hook=" << yes(doc["rim_p_hook"].get<bool>()) << '\n'
            << "big=" << yes(doc["big"].get<bool>()) << '\n';
  if (doc.contains("tilde")) std::cout << "tilde=" << doc["tilde"].get<std::string>() << '\n';
  return 0;
}

std::string render(const Report& report, const std::string& format) {
  if (format == "json") return to_json(report);
  if (format == "csv") return to_csv(report);
  return to_text(report);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Ext^1 between completely splittable simple modules: closed forms and brute-force verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(csext::kToolVersion));

  std::string format = "text";
  std::string output;
  // Single-record queries have no tabular form.
  auto add_format = [&](CLI::App* cmd, bool tabular) {
    const std::vector<std::string> formats = tabular ? std::vector<std::string>{"text", "json", "csv"}
                                                     : std::vector<std::string>{"text", "json"};
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember(formats));
  };

  // ext gl / ext sym
  auto* ext = app.add_subcommand("ext", "Closed-form Ext^1 query");
  ext->require_subcommand(1);
  int ext_p = 0;
  std::string lambda_text, mu_text;
  auto* ext_gl = ext->add_subcommand("gl", "Ext^1 between GL(n) simples L(lambda), L(mu)");
  auto* ext_sym = ext->add_subcommand("sym", "Ext^1 between symmetric-group simples D^lambda, D^mu");
  for (auto* cmd : {ext_gl, ext_sym}) {
    cmd->add_option("--p", ext_p, "Characteristic")->required();
    cmd->add_option("--lambda", lambda_text, "Comma-separated entries")->required();
    cmd->add_option("--mu", mu_text, "Comma-separated entries")->required();
    add_format(cmd, false);
  }

  // inspect
  auto* inspect = app.add_subcommand("inspect", "Combinatorial attributes of a weight or partition");
  int inspect_p = 0;
  std::string weight_text, partition_text;
  inspect->add_option("--p", inspect_p, "Characteristic")->required();
  auto* w_opt = inspect->add_option("--weight", weight_text, "Dominant weight, explicit length");
  auto* part_opt = inspect->add_option("--partition", partition_text, "Partition");
  w_opt->excludes(part_opt);
  add_format(inspect, false);

  // verify comb / verify sym
  auto* verify = app.add_subcommand("verify", "Exhaustive verification sweeps");
  verify->require_subcommand(1);
  std::vector<int> primes;
  std::vector<int> degrees;
  int n_max = 8, max_entry = 6, cap = kDefaultDegreeCap;
  unsigned threads = 0;
  std::string cache_dir;
  auto* verify_comb = verify->add_subcommand("comb", "Weight/partition identities under conjugation");
  verify_comb->add_option("--p", primes, "Primes")->delimiter(',')->required();
  verify_comb->add_option("--n", n_max, "Maximal rank")->check(CLI::PositiveNumber);
  verify_comb->add_option("--max-entry", max_entry, "Maximal first entry")->check(CLI::NonNegativeNumber);
  auto* verify_sym = verify->add_subcommand("sym", "Radical and Ext^1 predictions against Specht modules");
  verify_sym->add_option("--p", primes, "Primes")->delimiter(',')->required();
  verify_sym->add_option("--m", degrees, "Degrees")->delimiter(',')->required();
  verify_sym->add_option("--cap", cap, "Degree cap (8 is opt-in)")->check(CLI::Range(1, kMaxDegreeCap));
  verify_sym->add_option("--cache-dir", cache_dir, "On-disk Specht cache")->envname("CSEXT_CACHE_DIR");
  for (auto* cmd : {verify_comb, verify_sym}) {
    cmd->add_option("--threads", threads, "Worker threads (0 = all cores)");
    cmd->add_option("--output", output, "Write the report here instead of stdout");
    add_format(cmd, true);
  }

  // table
  auto* table = app.add_subcommand("table", "List completely splittable and big labels");
  int table_p = 0, table_m = 0, table_n = 0;
  table->add_option("--p", table_p, "Characteristic")->required();
  table->add_option("--m", table_m, "Degree")->required()->check(CLI::NonNegativeNumber);
  table->add_option("--n", table_n, "Also list p-restricted weights of this rank")->check(CLI::NonNegativeNumber);
  add_format(table, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (ext_gl->parsed()) {
      const Weight lambda = parse_weight(lambda_text, "--lambda");
      const Weight mu = parse_weight(mu_text, "--mu");
      if (lambda.rank() != mu.rank()) throw UsageError("--lambda and --mu must have the same length");
      return print_ext(ext1_gl(lambda, mu, parse_prime(ext_p)), format);
    }
    if (ext_sym->parsed()) {
      const Partition lambda = parse_partition(lambda_text, "--lambda");
      const Partition mu = parse_partition(mu_text, "--mu");
      if (lambda.degree() != mu.degree()) throw UsageError("--lambda and --mu must have the same degree");
      return print_ext(ext1_sym(lambda, mu, parse_prime(ext_p)), format);
    }
    if (inspect->parsed()) {
      const Prime p = parse_prime(inspect_p);
      if (!weight_text.empty()) return inspect_weight(parse_weight(weight_text, "--weight"), p, format);
      if (!partition_text.empty() || part_opt->count())
        return inspect_partition(parse_partition(partition_text, "--partition"), p, format);
      throw UsageError("inspect needs --weight or --partition");
    }
    if (verify_comb->parsed()) {
      for (int p : primes) parse_prime(p);
      const Report report = sweep_comb({primes, n_max, max_entry, threads});
      emit(render(report, format), output);
      return report.ok() ? 0 : kExitMismatch;
    }
    if (verify_sym->parsed()) {
      if (cap > kDefaultDegreeCap)
        std::cerr << "warning: degree cap " << cap << " builds permutation modules of dimension up to " << cap
                  << "!; expect high memory use\n";
      for (int m : degrees)
        if (m < 0 || m > cap) throw UsageError("--m: degree " + std::to_string(m) + " outside [0, cap=" + std::to_string(cap) + "]");
      SpechtCache cache(cap);
      std::optional<SpechtStore> store;
      if (!cache_dir.empty()) {
        store.emplace(cache_dir);
        store->attach(cache);
      }
      Report report;
      report.config = {{"sweep", "sym"}};
      for (int p : primes)
        for (int m : degrees) report.merge(sweep_sym({parse_prime(p).value(), m, threads}, cache));
      emit(render(report, format), output);
      return report.ok() ? 0 : kExitMismatch;
    }
    if (table->parsed()) {
      const Prime p = parse_prime(table_p);
      const auto entries = cs_table(p, table_m);
      json doc = {{"p", p.value()}, {"m", table_m}, {"partitions", json::array()}};
      for (const TableEntry& e : entries) {
        json row = {{"lambda", e.lambda.to_string()}, {"chi", e.chi}, {"p_regular", e.p_regular}, {"cs", e.cs}, {"big", e.big}};
        if (e.tilde) row["tilde"] = e.tilde->to_string();
        doc["partitions"].push_back(row);
      }
      if (table_n > 0) {
        doc["weights"] = json::array();
        for (const WeightTableEntry& e : cs_weight_table(p, table_n, table_m)) {
          json row = {{"lambda", e.lambda.to_string()}, {"psi", e.psi}, {"cs", e.cs}, {"big", e.big}};
          if (e.hat) row["hat"] = e.hat->to_string();
          doc["weights"].push_back(row);
        }
      }
      if (format == "json") {
        std::cout << doc.dump(1) << '\n';
      } else if (format == "csv") {
        std::cout << "kind,label,index,cs,big,image\n";
        for (const TableEntry& e : entries)
          std::cout << "partition,\"" << e.lambda.to_string() << "\"," << e.chi << ',' << e.cs << ',' << e.big << ",\""
                    << (e.tilde ? e.tilde->to_string() : "") << "\"\n";
        if (doc.contains("weights"))
          for (const auto& w : doc["weights"])
            std::cout << "weight,\"" << w["lambda"].get<std::string>() << "\"," << w["psi"].get<int>() << ','
                      << w["cs"].get<bool>() << ',' << w["big"].get<bool>() << ",\"" << w.value("hat", "") << "\"\n";
      } else {
        std::cout << "completely splittable partitions of " << table_m << ", p=" << p.value() << '\n';
        for (const TableEntry& e : entries) {
          if (!e.cs) continue;
          std::cout << "  " << e.lambda.to_string() << " chi=" << e.chi << " cs=true" << (e.p_regular ? "" : " p_regular=false")
                    << " big=" << yes(e.big);
          if (e.tilde) std::cout << " -> " << e.tilde->to_string();
          std::cout << '\n';
        }
        if (doc.contains("weights")) {
          std::cout << "completely splittable p-restricted weights of rank " << table_n << '\n';
          for (const auto& w : doc["weights"]) {
            if (!w["cs"].get<bool>()) continue;
            std::cout << "  " << w["lambda"].get<std::string>() << " psi=" << w["psi"].get<int>()
                      << " big=" << yes(w["big"].get<bool>());
            if (w.contains("hat")) std::cout << " -> " << w["hat"].get<std::string>();
            std::cout << '\n';
          }
        }
      }
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ScopeViolation& e) {
    std::cerr << "out-of-scope: " << to_string(e.reason()) << " (" << e.what() << ")\n";
    return kExitOutOfScope;
  } catch (const CapExceeded& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
