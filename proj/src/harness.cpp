#include "csext/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "csext/oracle.hpp"

namespace csext {

using nlohmann::json;

const char* to_string(RowStatus s) noexcept {
  switch (s) {
    case RowStatus::Match: return "Match";
    case RowStatus::Mismatch: return "Mismatch";
    case RowStatus::Skipped: return "Skipped";
  }
  return "Unknown";
}

RowStatus row_status_from_string(const std::string& s) {
  if (s == "Match") return RowStatus::Match;
  if (s == "Mismatch") return RowStatus::Mismatch;
  if (s == "Skipped") return RowStatus::Skipped;
  throw std::invalid_argument("unknown row status: " + s);
}

void Report::recount() {
  summary.matches = summary.mismatches = summary.skipped = 0;
  for (const SweepRow& r : rows) {
    switch (r.status) {
      case RowStatus::Match: ++summary.matches; break;
      case RowStatus::Mismatch: ++summary.mismatches; break;
      case RowStatus::Skipped: ++summary.skipped; break;
    }
  }
}

void Report::merge(const Report& other) {
  rows.insert(rows.end(), other.rows.begin(), other.rows.end());
  for (const auto& [k, v] : other.summary.counters) summary.counters[k] += v;
  summary.wall_seconds += other.summary.wall_seconds;
  if (!config.contains("parts")) config["parts"] = json::array();
  config["parts"].push_back(other.config);
  recount();
}

namespace {

// Runs body(0..count-1) on a small pool; callers write results by index so
// the merged order never depends on scheduling.
template <class Body>
void parallel_for(std::size_t count, unsigned threads, Body body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(count, 1)));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;
  auto worker = [&] {
    for (std::size_t k; (k = next.fetch_add(1)) < count;) {
      try {
        body(k);
      } catch (...) {
        std::lock_guard lock(failure_mu);
        if (!failure) failure = std::current_exception();
      }
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);
}

template <class Clock = std::chrono::steady_clock>
double seconds_since(typename Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

void weights_rec(int n, int upper, std::vector<int>& cur, std::vector<Weight>& out) {
  if (static_cast<int>(cur.size()) == n - 1) {
    cur.push_back(0);
    out.emplace_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= upper; ++v) {
    cur.push_back(v);
    weights_rec(n, v, cur, out);
    cur.pop_back();
  }
}

std::string flag(bool b) { return b ? "1" : "0"; }

struct CombOutcome {
  SweepRow row;
  std::map<std::string, std::size_t> counters;
};

CombOutcome check_weight(const Weight& lambda, Prime p) {
  CombOutcome out;
  SweepRow& row = out.row;
  row.check = "weight";
  row.p = p.value();
  row.size = lambda.rank();
  row.lambda = lambda.to_string();

  const Partition as_part = as_partition(lambda);
  const Partition conj = conjugate(as_part);
  const int m = as_part.degree();
  const bool restricted = is_p_restricted(lambda, p);
  const bool conj_range = restricted && m <= lambda.rank();

  std::string predicted = "cs_index=" + std::to_string(psi(lambda)) + ";restricted=" + flag(restricted);
  std::string observed = "cs_index=" + std::to_string(chi(conj)) + ";restricted=" + flag(is_p_regular(conj, p));
  std::vector<std::string> violations;

  if (restricted) {
    const bool big = is_big_weight(lambda, p);
    if (big && !is_cs_weight(lambda, p)) violations.push_back("big_not_cs");
    std::optional<Weight> h;
    if (big) {
      ++out.counters["big_weights"];
      h = hat(lambda, p);
      if (!h->is_dominant()) violations.push_back("hat_not_dominant");
      if (h->sum() != lambda.sum()) violations.push_back("hat_sum_changed");
      if (!weight_less(*h, lambda)) violations.push_back("hat_not_below");
      if (h->is_dominant() && !is_p_restricted(*h, p)) ++out.counters["hat_not_p_restricted"];
    }
    for (int c : {-3, 1, 5}) {
      const Weight moved = lambda.shifted(c);
      if (psi(moved) != psi(lambda)) violations.push_back("psi_not_invariant");
      if (is_big_weight(moved, p) != big) violations.push_back("big_not_invariant");
      if (big && hat(moved, p) != h->shifted(c)) violations.push_back("hat_not_equivariant");
    }
    if (conj_range) {
      ++out.counters["conjugate_checked"];
      predicted += ";big=" + flag(big);
      if (h) predicted += ";conj_hat=" + conjugate(as_partition(*h)).to_string();
      const bool big_part = is_big_partition(conj, p);
      observed += ";big=" + flag(big_part);
      if (big_part) {
        try {
          observed += ";conj_hat=" + tilde(conj, p).to_string();
        } catch (const ScopeViolation& e) {
          observed += ";conj_hat=error(" + std::string(to_string(e.reason())) + ")";
        }
      }
    }
  }
  std::sort(violations.begin(), violations.end());
  violations.erase(std::unique(violations.begin(), violations.end()), violations.end());
  for (const std::string& v : violations) observed += ";violation=" + v;

  row.predicted = std::move(predicted);
  row.observed = std::move(observed);
  row.status = row.predicted == row.observed ? RowStatus::Match : RowStatus::Mismatch;
  return out;
}

}  // namespace

Report sweep_comb(const CombSweepConfig& config) {
  if (config.n_max < 1 || config.max_entry < 0) throw std::invalid_argument("sweep_comb: bounds must be positive");
  const auto start = std::chrono::steady_clock::now();
  std::vector<Prime> primes;
  for (int p : config.primes) primes.emplace_back(p);

  std::vector<Weight> weights;
  for (int n = 1; n <= config.n_max; ++n) {
    std::vector<int> cur;
    weights_rec(n, config.max_entry, cur, weights);
  }

  std::vector<CombOutcome> outcomes(primes.size() * weights.size());
  parallel_for(outcomes.size(), config.threads, [&](std::size_t k) {
    outcomes[k] = check_weight(weights[k % weights.size()], primes[k / weights.size()]);
  });

  Report report;
  report.config = {{"sweep", "comb"}, {"primes", config.primes}, {"n_max", config.n_max}, {"max_entry", config.max_entry}};
  report.rows.reserve(outcomes.size());
  for (CombOutcome& o : outcomes) {
    report.rows.push_back(std::move(o.row));
    for (const auto& [k, v] : o.counters) report.summary.counters[k] += v;
  }
  report.recount();
  report.summary.wall_seconds = seconds_since(start);
  return report;
}

// --- symmetric-group sweep -----------------------------------------------------

namespace {

SweepRow skipped(std::string check, Prime p, int m, const Partition& lambda, const Partition* mu, const ScopeError& err) {
  SweepRow row;
  row.check = std::move(check);
  row.p = p.value();
  row.size = m;
  row.lambda = lambda.to_string();
  if (mu) row.mu = mu->to_string();
  row.status = RowStatus::Skipped;
  row.reason = to_string(err.reason);
  row.detail = err.detail;
  return row;
}

std::vector<SweepRow> sym_rows_for(const Partition& lambda, const std::vector<Partition>& all, Prime p, int m,
                                   SpechtCache& cache) {
  std::vector<SweepRow> rows;
  const auto prediction = rad_specht_prediction(lambda, p);
  if (!in_scope(prediction)) {
    rows.push_back(skipped("rad", p, m, lambda, nullptr, std::get<ScopeError>(prediction)));
    return rows;
  }
  const auto& pred = std::get<RadicalPrediction<Partition>>(prediction);
  const auto target = cache.get(lambda, p);
  const std::size_t radical = rad_dim(*target);

  SweepRow rad_row;
  rad_row.check = "rad";
  rad_row.p = p.value();
  rad_row.size = m;
  rad_row.lambda = lambda.to_string();
  rad_row.predicted = pred.is_zero() ? "zero" : "image_of=" + pred.image_of->to_string();
  rad_row.detail = "rad_dim=" + std::to_string(radical);
  if (radical == 0) {
    rad_row.observed = "zero";
  } else if (pred.image_of) {
    const auto source = cache.get(*pred.image_of, p);
    const std::size_t homs = hom_space(source->rep, target->rep).dim;
    rad_row.detail += ";hom_dim=" + std::to_string(homs);
    rad_row.observed = homs >= 1 && image_equals_rad(*source, *target) ? "image_of=" + pred.image_of->to_string()
                                                                       : "nonzero;no_image_from=" + pred.image_of->to_string();
  } else {
    rad_row.observed = "nonzero";
  }
  rad_row.status = rad_row.predicted == rad_row.observed ? RowStatus::Match : RowStatus::Mismatch;
  rows.push_back(std::move(rad_row));

  const SymRep rad = rad_subrep(*target);
  for (const Partition& mu : all) {
    const auto ext = ext1_sym(lambda, mu, p);
    if (!in_scope(ext)) {
      rows.push_back(skipped("ext", p, m, lambda, &mu, std::get<ScopeError>(ext)));
      continue;
    }
    const std::size_t observed = rad.dim == 0 ? 0 : hom_space(rad, simple_head(*cache.get(mu, p))).dim;
    SweepRow row;
    row.check = "ext";
    row.p = p.value();
    row.size = m;
    row.lambda = lambda.to_string();
    row.mu = mu.to_string();
    row.predicted = std::to_string(std::get<SymExt>(ext).dim);
    row.observed = std::to_string(observed);
    row.status = row.predicted == row.observed ? RowStatus::Match : RowStatus::Mismatch;
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Report sweep_sym(const SymSweepConfig& config, SpechtCache& cache) {
  const Prime p(config.p);
  if (config.m < 0) throw std::invalid_argument("sweep_sym: negative degree");
  check_degree_cap(config.m, cache.cap());
  const auto start = std::chrono::steady_clock::now();
  const std::vector<Partition> all = enum_partitions(config.m);

  std::vector<std::vector<SweepRow>> per_lambda(all.size());
  parallel_for(all.size(), config.threads,
               [&](std::size_t k) { per_lambda[k] = sym_rows_for(all[k], all, p, config.m, cache); });

  Report report;
  report.config = {{"sweep", "sym"}, {"p", config.p}, {"m", config.m}, {"cap", cache.cap()}};
  for (auto& rows : per_lambda)
    for (SweepRow& r : rows) {
      if (r.check == "rad" && r.status != RowStatus::Skipped) {
        ++report.summary.counters["cs_regular_partitions"];
        if (r.predicted != "zero") ++report.summary.counters["big_partitions"];
      }
      report.rows.push_back(std::move(r));
    }
  report.recount();
  report.summary.wall_seconds = seconds_since(start);
  return report;
}

// --- tables -----------------------------------------------------------------

std::vector<TableEntry> cs_table(Prime p, int m) {
  std::vector<TableEntry> out;
  for (const Partition& lambda : enum_partitions(m)) {
    TableEntry e{lambda, chi(lambda), is_p_regular(lambda, p), is_cs_partition(lambda, p), is_big_partition(lambda, p), {}};
    if (e.big && e.p_regular) e.tilde = tilde(lambda, p);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<WeightTableEntry> cs_weight_table(Prime p, int n, int m) {
  std::vector<WeightTableEntry> out;
  for (const Weight& lambda : enum_dominant_weights(n, m)) {
    if (!is_p_restricted(lambda, p)) continue;
    WeightTableEntry e{lambda, psi(lambda), is_cs_weight(lambda, p), is_big_weight(lambda, p), {}};
    if (e.big) e.hat = hat(lambda, p);
    out.push_back(std::move(e));
  }
  return out;
}

// --- report serialization ---------------------------------------------------

std::string to_json(const Report& report, bool include_wall_time) {
  json rows = json::array();
  for (const SweepRow& r : report.rows)
    rows.push_back({{"check", r.check},
                    {"p", r.p},
                    {"size", r.size},
                    {"lambda", r.lambda},
                    {"mu", r.mu},
                    {"predicted", r.predicted},
                    {"observed", r.observed},
                    {"detail", r.detail},
                    {"status", to_string(r.status)},
                    {"reason", r.reason}});
  json summary = {{"matches", report.summary.matches},
                  {"mismatches", report.summary.mismatches},
                  {"skipped", report.summary.skipped},
                  {"counters", report.summary.counters}};
  if (include_wall_time) summary["wall_seconds"] = report.summary.wall_seconds;
  const json doc = {{"version", report.version}, {"config", report.config}, {"rows", rows}, {"summary", summary}};
  return doc.dump(1) + "\n";
}

Report report_from_json(const std::string& text) {
  const json doc = json::parse(text);
  Report report;
  report.version = doc.at("version").get<std::string>();
  report.config = doc.at("config");
  for (const json& r : doc.at("rows")) {
    SweepRow row;
    row.check = r.at("check").get<std::string>();
    row.p = r.at("p").get<int>();
    row.size = r.at("size").get<int>();
    row.lambda = r.at("lambda").get<std::string>();
    row.mu = r.at("mu").get<std::string>();
    row.predicted = r.at("predicted").get<std::string>();
    row.observed = r.at("observed").get<std::string>();
    row.detail = r.at("detail").get<std::string>();
    row.status = row_status_from_string(r.at("status").get<std::string>());
    row.reason = r.at("reason").get<std::string>();
    report.rows.push_back(std::move(row));
  }
  const json& s = doc.at("summary");
  report.summary.matches = s.at("matches").get<std::size_t>();
  report.summary.mismatches = s.at("mismatches").get<std::size_t>();
  report.summary.skipped = s.at("skipped").get<std::size_t>();
  report.summary.counters = s.at("counters").get<std::map<std::string, std::size_t>>();
  report.summary.wall_seconds = s.value("wall_seconds", 0.0);
  return report;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string to_csv(const Report& report) {
  std::ostringstream os;
  os << "check,p,size,lambda,mu,predicted,observed,detail,status,reason\n";
  for (const SweepRow& r : report.rows)
    os << csv_field(r.check) << ',' << r.p << ',' << r.size << ',' << csv_field(r.lambda) << ',' << csv_field(r.mu)
       << ',' << csv_field(r.predicted) << ',' << csv_field(r.observed) << ',' << csv_field(r.detail) << ','
       << to_string(r.status) << ',' << csv_field(r.reason) << '\n';
  return os.str();
}

std::string to_text(const Report& report) {
  std::ostringstream os;
  for (const SweepRow& r : report.rows) {
    if (r.status == RowStatus::Match) continue;
    os << to_string(r.status) << ' ' << r.check << " p=" << r.p << " size=" << r.size << " lambda=" << r.lambda;
    if (!r.mu.empty()) os << " mu=" << r.mu;
    if (r.status == RowStatus::Skipped)
      os << " reason=" << r.reason;
    else
      os << " predicted=" << r.predicted << " observed=" << r.observed;
    os << '\n';
  }
  os << "matches=" << report.summary.matches << " mismatches=" << report.summary.mismatches
     << " skipped=" << report.summary.skipped;
  for (const auto& [k, v] : report.summary.counters) os << ' ' << k << '=' << v;
  os << '\n';
  return os.str();
}

// --- SpechtStore --------------------------------------------------------------

namespace {

std::uint64_t fnv1a(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

void append(std::string& out, const FpMatrix& m) { out.append(m.data().begin(), m.data().end()); }

FpMatrix take(std::string_view& in, Prime p, std::size_t rows, std::size_t cols) {
  if (in.size() < rows * cols) throw std::runtime_error("truncated payload");
  std::vector<long long> values(in.begin(), in.begin() + static_cast<std::ptrdiff_t>(rows * cols));
  for (long long& v : values) v = static_cast<unsigned char>(v);
  for (long long v : values)
    if (v >= p.value()) throw std::runtime_error("entry not reduced mod p");
  in.remove_prefix(rows * cols);
  return FpMatrix(p, rows, cols, values);
}

}  // namespace

SpechtStore::SpechtStore(std::filesystem::path dir) : dir_(std::move(dir)) {
  std::filesystem::create_directories(dir_);
}

std::filesystem::path SpechtStore::path_for(const Partition& lambda, Prime p) const {
  std::string name = "p" + std::to_string(p.value()) + "_";
  if (lambda.empty()) name += "empty";
  for (int k = 0; k < lambda.height(); ++k) name += (k ? "-" : "") + std::to_string(lambda.parts()[static_cast<std::size_t>(k)]);
  return dir_ / (name + ".spc");
}

void SpechtStore::put(const SpechtData& data) const {
  const int m = data.shape.degree();
  std::string payload;
  for (const Tableau& t : data.std_tableaux)
    for (const auto& row : t.rows)
      for (int x : row) payload.push_back(static_cast<char>(x));
  append(payload, data.basis);
  append(payload, data.gram);
  for (const FpMatrix& g : data.rep.gens) append(payload, g);

  const json header = {{"format", "csext-specht"},
                       {"format_version", kFormatVersion},
                       {"p", data.p.value()},
                       {"shape", data.shape.parts()},
                       {"dims", {{"degree", m}, {"tabloids", data.basis.rows()}, {"dim", data.rep.dim}}},
                       {"checksum", fnv1a(payload)}};
  const std::filesystem::path target = path_for(data.shape, data.p);
  const std::filesystem::path tmp = target.string() + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
    out << header.dump() << '\n';
    out.write(payload.data(), static_cast<std::streamsize>(payload.size()));
    if (!out) throw std::runtime_error("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, target);
}

std::optional<SpechtData> SpechtStore::get(const Partition& lambda, Prime p) const {
  const std::filesystem::path file = path_for(lambda, p);
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  const std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  try {
    const auto newline = content.find('\n');
    if (newline == std::string::npos) throw std::runtime_error("missing header");
    const json header = json::parse(content.substr(0, newline));
    if (header.value("format_version", -1) != kFormatVersion) return std::nullopt;
    if (header.at("p").get<int>() != p.value() || header.at("shape").get<std::vector<int>>() != lambda.parts())
      throw std::runtime_error("header does not match key");
    const std::string payload = content.substr(newline + 1);
    if (header.at("checksum").get<std::uint64_t>() != fnv1a(payload)) throw std::runtime_error("checksum mismatch");

    const auto& dims = header.at("dims");
    const int m = dims.at("degree").get<int>();
    const auto tabloids = dims.at("tabloids").get<std::size_t>();
    const auto dim = dims.at("dim").get<std::size_t>();
    if (m != lambda.degree()) throw std::runtime_error("degree does not match shape");

    std::string_view rest(payload);
    std::vector<Tableau> tableaux;
    for (std::size_t k = 0; k < dim; ++k) {
      Tableau t{lambda, {}};
      for (int r = 1; r <= lambda.height(); ++r) {
        if (rest.size() < static_cast<std::size_t>(lambda.part(r))) throw std::runtime_error("truncated tableaux");
        std::vector<int> row;
        for (int c = 0; c < lambda.part(r); ++c) row.push_back(static_cast<unsigned char>(rest[static_cast<std::size_t>(c)]));
        rest.remove_prefix(static_cast<std::size_t>(lambda.part(r)));
        t.rows.push_back(std::move(row));
      }
      tableaux.push_back(std::move(t));
    }
    FpMatrix basis = take(rest, p, tabloids, dim);
    FpMatrix gram = take(rest, p, dim, dim);
    SymRep rep{p, m, dim, {}};
    for (int i = 1; i < m; ++i) rep.gens.push_back(take(rest, p, dim, dim));
    if (!rest.empty()) throw std::runtime_error("trailing bytes");
    return SpechtData{lambda, p, std::move(tableaux), std::move(basis), std::move(gram), std::move(rep)};
  } catch (const std::exception& e) {
    std::cerr << "warning: ignoring corrupt cache entry " << file.string() << ": " << e.what() << '\n';
    return std::nullopt;
  }
}

void SpechtStore::attach(SpechtCache& cache) const {
  const int cap = cache.cap();
  cache.set_loader([store = *this, cap](const Partition& lambda, Prime p) {
    if (auto hit = store.get(lambda, p)) return std::make_shared<const SpechtData>(std::move(*hit));
    auto fresh = std::make_shared<const SpechtData>(specht_data(lambda, p, cap));
    store.put(*fresh);
    return fresh;
  });
}

}  // namespace csext
