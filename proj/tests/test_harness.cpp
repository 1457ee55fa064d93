#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "csext/harness.hpp"

using namespace csext;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() / ("csext-test-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& f) {
  std::ifstream in(f, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void spit(const fs::path& f, const std::string& s) {
  std::ofstream out(f, std::ios::binary | std::ios::trunc);
  out << s;
}

const SweepRow* find_row(const Report& r, const std::string& check, const std::string& lambda, const std::string& mu = "") {
  for (const auto& row : r.rows)
    if (row.check == check && row.lambda == lambda && row.mu == mu) return &row;
  return nullptr;
}

}  // namespace

TEST_CASE("row status strings") {
  for (auto s : {RowStatus::Match, RowStatus::Mismatch, RowStatus::Skipped}) CHECK(row_status_from_string(to_string(s)) == s);
  CHECK_THROWS(row_status_from_string("bogus"));
}

TEST_CASE("combinatorial sweep is clean") {
  CombSweepConfig cfg;
  cfg.n_max = 6;
  cfg.max_entry = 5;
  const Report r = sweep_comb(cfg);
  CHECK(r.ok());
  CHECK(r.summary.matches > 1000);
  CHECK(r.summary.counters.at("big_weights") > 0);
  CHECK(r.summary.counters.at("conjugate_checked") > 0);
}

TEST_CASE("symmetric-group sweep examples") {
  SpechtCache cache;
  const Report r4 = sweep_sym({3, 4, 0}, cache);
  CHECK(r4.ok());
  const auto* row = find_row(r4, "ext", "(2,2)", "(4)");
  REQUIRE(row != nullptr);
  CHECK(row->predicted == "1");
  CHECK(row->observed == "1");
  CHECK(row->status == RowStatus::Match);

  const Report r5 = sweep_sym({5, 6, 0}, cache);
  CHECK(r5.ok());
  const auto* rad5 = find_row(r5, "rad", "(3,3)");
  REQUIRE(rad5 != nullptr);
  CHECK(rad5->predicted == "zero");
  CHECK(rad5->observed == "zero");

  const Report r3 = sweep_sym({3, 6, 0}, cache);
  CHECK(r3.ok());
  const auto* rad3 = find_row(r3, "rad", "(3,3)");
  REQUIRE(rad3 != nullptr);
  CHECK(rad3->predicted == "image_of=(5,1)");
  CHECK(rad3->observed == "image_of=(5,1)");
  CHECK(rad3->detail.find("rad_dim=4") != std::string::npos);
}

TEST_CASE("tables") {
  const auto t = cs_table(Prime(3), 5);
  std::vector<std::string> cs;
  for (const auto& e : t)
    if (e.cs) cs.push_back(e.lambda.to_string());
  CHECK(cs == std::vector<std::string>{"(5)", "(3,2)"});
  for (const auto& e : t)
    if (e.lambda == Partition{3, 2}) {
      CHECK(e.big);
      CHECK(e.tilde == Partition{4, 1});
    }

  const auto w = cs_weight_table(Prime(3), 4, 4);
  bool saw = false;
  for (const auto& e : w)
    if (e.lambda == Weight{2, 2, 0, 0}) {
      saw = true;
      CHECK(e.big);
      CHECK(e.hat == Weight{1, 1, 1, 1});
    }
  CHECK(saw);
}

TEST_CASE("reports are deterministic across thread counts and round-trip through JSON") {
  SpechtCache c1, c2;
  const Report a = sweep_sym({5, 5, 1}, c1);
  const Report b = sweep_sym({5, 5, 4}, c2);
  CHECK(a.rows == b.rows);
  CHECK(to_json(a, false) == to_json(b, false));
  CHECK(to_csv(a) == to_csv(b));

  const Report back = report_from_json(to_json(a));
  CHECK(back.rows == a.rows);
  CHECK(back.summary == a.summary);
  CHECK(back.version == a.version);
  CHECK(back.config == a.config);

  CombSweepConfig cfg;
  cfg.n_max = 4;
  cfg.threads = 1;
  const Report s1 = sweep_comb(cfg);
  cfg.threads = 3;
  CHECK(to_json(s1, false) == to_json(sweep_comb(cfg), false));
}

TEST_CASE("csv and text rendering") {
  Report r;
  SweepRow row;
  row.check = "ext";
  row.p = 3;
  row.size = 4;
  row.lambda = "(2,2)";
  row.mu = "(4)";
  row.predicted = "1";
  row.observed = "1";
  r.rows.push_back(row);
  r.recount();
  const std::string csv = to_csv(r);
  std::istringstream lines(csv);
  std::string header, first;
  std::getline(lines, header);
  std::getline(lines, first);
  CHECK(header.find("check") == 0);
  CHECK(first.find("\"(2,2)\"") != std::string::npos);
  CHECK(to_text(r).find("matches=1") != std::string::npos);

  Report other = r;
  other.summary.counters["x"] = 2;
  r.merge(other);
  CHECK(r.rows.size() == 2);
  CHECK(r.summary.matches == 2);
  CHECK(r.summary.counters["x"] == 2);
}

TEST_CASE("store round-trip is bit-exact") {
  TempDir dir;
  const SpechtStore store(dir.path);
  CHECK_FALSE(store.get(Partition{2, 2}, Prime(3)).has_value());
  for (const Partition& lambda : {Partition{2, 2}, Partition{3, 2, 1}, Partition{1}, Partition{4, 3}}) {
    const SpechtData d = specht_data(lambda, Prime(3));
    store.put(d);
    const auto back = store.get(lambda, Prime(3));
    REQUIRE(back.has_value());
    CHECK(*back == d);
  }
  CHECK(store.path_for(Partition{2, 2}, Prime(3)).filename() == "p3_2-2.spc");
}

TEST_CASE("store version gate and corruption handling") {
  TempDir dir;
  const SpechtStore store(dir.path);
  const Partition lambda{3, 2};
  const Prime p(5);
  store.put(specht_data(lambda, p));
  const fs::path file = store.path_for(lambda, p);
  const std::string good = slurp(file);

  // A different format version reads as a plain miss.
  std::string bumped = good;
  const std::string tag = "\"format_version\":1";
  REQUIRE(bumped.find(tag) != std::string::npos);
  bumped.replace(bumped.find(tag), tag.size(), "\"format_version\":2");
  spit(file, bumped);
  CHECK_FALSE(store.get(lambda, p).has_value());

  // Flipped payload byte: checksum mismatch, warning, miss.
  std::string flipped = good;
  flipped.back() = static_cast<char>(flipped.back() ^ 1);
  spit(file, flipped);
  CHECK_FALSE(store.get(lambda, p).has_value());

  spit(file, good.substr(0, good.size() / 2));
  CHECK_FALSE(store.get(lambda, p).has_value());
  spit(file, "not json\n");
  CHECK_FALSE(store.get(lambda, p).has_value());

  // Attached to a cache, a corrupt entry is recomputed and overwritten.
  SpechtCache cache;
  store.attach(cache);
  const auto d = cache.get(lambda, p);
  CHECK(*d == specht_data(lambda, p));
  CHECK(slurp(file) == good);
}

TEST_CASE("sweeps through a store reuse entries") {
  TempDir dir;
  const SpechtStore store(dir.path);
  SpechtCache first;
  store.attach(first);
  const Report a = sweep_sym({3, 5, 0}, first);
  std::size_t files = 0;
  for ([[maybe_unused]] const auto& e : fs::directory_iterator(dir.path)) ++files;
  CHECK(files > 0);

  SpechtCache second;
  store.attach(second);
  const Report b = sweep_sym({3, 5, 0}, second);
  CHECK(a.rows == b.rows);
}
