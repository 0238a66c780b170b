// Acceptance suite: one pass/fail line per criterion, nonzero exit if any fails.
//
//   graycode_acceptance              criteria 1-8
//   graycode_acceptance --slow-only  streaming reverse-code checks for n = 12, 13

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

#include "graycode/binary.hpp"
#include "graycode/combinations.hpp"
#include "graycode/family.hpp"
#include "graycode/oracle.hpp"
#include "graycode/permutations.hpp"
#include "graycode/qary.hpp"
#include "graycode/text_format.hpp"
#include "graycode/verify.hpp"

namespace fs = std::filesystem;
using namespace graycode;

namespace {

// Wall-clock budgets, seconds.
constexpr double kFixtureBudget = 1.0;
constexpr double kSweepBudget = 120.0;
constexpr double kOrderEightBudget = 10.0;
constexpr double kOracleBudget = 30.0;

// Sweep bounds.
constexpr std::uint64_t kSweepWords = 1'000'000;
constexpr int kLeeMaxRadix = 16;
constexpr std::size_t kOracleMaxVertices = 200;

const fs::path kFixtures = GRAYCODE_FIXTURE_DIR;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;

  void check(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(std::chrono::steady_clock::time_point t) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t).count();
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

text::ParsedCode load(const std::string& name) {
  std::ifstream in(kFixtures / name);
  return text::read_code(in);
}

std::string render(const Code& c) {
  std::ostringstream os;
  text::write_code(os, c, text::Format::Digits);
  return os.str();
}

Pairing pairing(PairingRule rule, std::set<std::int64_t> s) { return Pairing{rule, 1, std::move(s)}; }

std::string profile_text(const Report& r) {
  return r.separation_profile ? describe(*r.separation_profile) : "none";
}

// 1 ---------------------------------------------------------------------------

Outcome fixture_verification() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  struct Case {
    std::string file;
    CodeSpec spec;
  };
  auto spec = [](Metric m, std::optional<Universe> u, Pairing p) {
    CodeSpec s;
    s.metric = m;
    s.require_cyclic = true;
    s.universe = std::move(u);
    s.pairing = std::move(p);
    return s;
  };
  std::vector<Case> cases;
  cases.push_back({"binary_complementary_n4.txt",
                   spec(Metric::Hamming, Universe::all(2, 4), pairing(PairingRule::Complement, {8}))});
  cases.push_back({"binary_odd_missing_two_n5.txt",
                   spec(Metric::Hamming,
                        Universe::all_except(2, 5, {Word::constant(2, 5, 0), Word::constant(2, 5, 1)}),
                        pairing(PairingRule::Complement, {15}))});
  cases.push_back({"binary_odd_all_n5.txt",
                   spec(Metric::Hamming, Universe::all(2, 5), pairing(PairingRule::Complement, {15, 17}))});
  cases.push_back({"qary_lee_q3_n3.txt",
                   spec(Metric::Lee, Universe::all(3, 3), pairing(PairingRule::AddDiagonal, {9}))});
  cases.push_back({"subsets_3of6_incidence.txt",
                   spec(Metric::ComplementarySMC, Universe::fixed_weight(6, 3),
                        pairing(PairingRule::Complement, {10}))});
  cases.push_back({"perm_reverse_n5.txt",
                   spec(Metric::AdjacentTransposition, Universe::permutations(5),
                        pairing(PairingRule::Reversal, {60}))});
  for (const auto& c : cases) {
    const auto parsed = load(c.file);
    const Report r = verify_code(parsed.code, c.spec);
    o.check(r.pass, c.file + "\n" + describe(r));
    o.note(c.file + ": " + (r.pass ? "PASS" : "FAIL") + ", separations " + profile_text(r));
  }

  // the subset rendering of the 3-of-6 table, converted to incidence vectors
  Code sets(2, 6, true);
  std::ifstream in(kFixtures / "subsets_3of6_sets.txt");
  for (std::string line; std::getline(in, line);) {
    if (!line.empty()) sets.push_back(combinations::incidence_from_subset(line, 6));
  }
  const Report r = verify_code(sets, cases[4].spec);
  o.check(r.pass, "subsets_3of6_sets.txt\n" + describe(r));
  o.note("subsets_3of6_sets.txt: " + std::string(r.pass ? "PASS" : "FAIL"));

  const double t = seconds_since(t0);
  o.check(t < kFixtureBudget, "runtime " + std::to_string(t) + " s");
  return o;
}

// 2 ---------------------------------------------------------------------------

Outcome typo_detection() {
  Outcome o;
  const auto parsed = load("qary_lee_path_q4_n3_printed.txt");
  CodeSpec spec;
  spec.metric = Metric::Lee;
  spec.universe = Universe::all(4, 3);
  const Report r = verify_code(parsed.code, spec);
  o.check(!r.pass, "printed table should fail completeness");
  std::vector<std::string> dups;
  for (const auto& v : r.violations) {
    if (v.property == "duplicate") {
      dups.push_back(v.detail + " at lines " + std::to_string(parsed.lines[*v.index]) + " and " +
                     std::to_string(parsed.lines[*v.other_index]));
    } else if (v.property != "missing") {
      o.check(false, "unexpected violation " + v.property + ": " + v.detail);
    }
  }
  const std::vector<std::string> expected{"word 013 at lines 5 and 11", "word 012 at lines 6 and 12",
                                          "word 011 at lines 7 and 13"};
  o.check(dups == expected, "duplicate set differs");
  for (const auto& d : dups) o.note("duplicate " + d);
  return o;
}

// 3 ---------------------------------------------------------------------------

Outcome golden_outputs() {
  Outcome o;
  auto same = [&](const std::string& got, const std::string& file) {
    const std::string want = slurp(kFixtures / file);
    o.check(got == want, "bytes differ from " + file);
    o.note(file + (got == want ? ": byte-identical" : ": differs"));
  };
  same(render(qary::quasi_complementary_lee(3, 3)), "qary_lee_q3_n3.txt");
  same(render(permutations::thm_1mod4(5)), "perm_reverse_n5.txt");
  const Code subsets = combinations::complementary_subsets(3);
  same(render(subsets), "subsets_3of6_incidence.txt");
  std::string sets;
  for (std::size_t i = 0; i < subsets.size(); ++i) sets += combinations::subset_string(subsets[i]) + "\n";
  same(sets, "subsets_3of6_sets.txt");
  return o;
}

// 4 ---------------------------------------------------------------------------

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--) r *= b;
  return r;
}

Outcome parameter_sweeps() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  std::size_t instances = 0;
  auto run = [&](Family f, const FamilyParams& p, const std::string& label) -> Report {
    ++instances;
    const Code c = generate(f, p);
    const Report r = verify_code(c, declared_spec(f, p));
    o.check(r.pass, label + "\n" + describe(r));
    return r;
  };
  auto keys = [](const Report& r) {
    std::set<std::int64_t> k;
    if (r.separation_profile) {
      for (auto [s, n] : *r.separation_profile) k.insert(s);
    }
    return k;
  };

  for (long long n = 2; n <= 16; n += 2) {
    FamilyParams p;
    p.n = n;
    run(Family::BinaryComplementary, p, "binary-complementary n=" + std::to_string(n));
  }
  for (long long n = 3; n <= 15; n += 2) {
    FamilyParams p;
    p.n = n;
    const std::int64_t h = std::int64_t{1} << (n - 1);
    const Report a = run(Family::BinaryOddMissingTwo, p, "binary-odd-missing-two n=" + std::to_string(n));
    o.check(keys(a) == std::set<std::int64_t>{h - 1}, "odd-missing-two separation set n=" + std::to_string(n));
    const Report b = run(Family::BinaryOddAll, p, "binary-odd-all n=" + std::to_string(n));
    o.check(keys(b) == std::set<std::int64_t>{h - 1, h + 1}, "odd-all separation set n=" + std::to_string(n));
  }
  std::size_t lee = 0;
  for (int q = 2; q <= kLeeMaxRadix; ++q) {
    for (std::size_t n = 1; ipow(q, n) <= kSweepWords; ++n) {
      if (!(n == 1 || n % 2 == 0 || q % 2 == 1)) continue;
      FamilyParams p;
      p.q = q;
      p.n = static_cast<long long>(n);
      run(Family::QaryLee, p, "qary-lee q=" + std::to_string(q) + " n=" + std::to_string(n));
      ++lee;
    }
  }
  o.note(std::to_string(lee) + " Lee instances with 2 <= q <= " + std::to_string(kLeeMaxRadix) +
         " and q^n <= 10^6");
  for (auto [q, n] : std::vector<std::pair<int, long long>>{{4, 3}, {6, 3}, {4, 5}}) {
    std::vector<std::string> anchors{std::string(n, '0'), "", ""};
    for (long long i = 0; i < n; ++i) {
      anchors[1] += static_cast<char>('0' + (i == 1 ? q - 1 : 0));
      anchors[2] += static_cast<char>('0' + (2 * i + 1) % q);
    }
    for (const auto& a : anchors) {
      FamilyParams p;
      p.q = q;
      p.n = n;
      p.anchor = a;
      run(Family::QaryLeeMissing, p, "qary-lee-missing q=" + std::to_string(q) + " anchor " + a);
    }
  }
  std::size_t ham = 0;
  for (int q = 3; q <= 6; ++q) {
    for (std::size_t n = 1; ipow(q, n) <= kSweepWords; ++n) {
      FamilyParams p;
      p.q = q;
      p.n = static_cast<long long>(n);
      run(Family::QaryHamming, p, "qary-hamming q=" + std::to_string(q) + " n=" + std::to_string(n));
      ++ham;
    }
  }
  o.note(std::to_string(ham) + " Hamming instances with 3 <= q <= 6");
  for (long long n = 1; n <= 7; ++n) {
    FamilyParams p;
    p.n = n;
    run(Family::SubsetsComplementary, p, "subsets-complementary n=" + std::to_string(n));
  }
  for (long long n = 3; n <= 15; n += 2) {
    FamilyParams p;
    p.n = n;
    run(Family::MultisetCycle, p, "multiset-cycle n=" + std::to_string(n));
  }
  const double t = seconds_since(t0);
  o.note(std::to_string(instances) + " instances verified in " + std::to_string(t) + " s");
  o.check(t < kSweepBudget, "runtime " + std::to_string(t) + " s");
  return o;
}

// 5 ---------------------------------------------------------------------------

Outcome permutation_suite() {
  Outcome o;
  for (std::size_t n : {4u, 5u, 8u, 9u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Code c = permutations::reverse_perm_code(n);
    const Report r = permutations::verify_reverse_code(c);
    const double t = seconds_since(t0);
    o.check(r.pass, "reverse verification n=" + std::to_string(n) + "\n" + describe(r));
    // property P is part of the construction for n = 0 (mod 4) and for the
    // plain-changes case; the 1 (mod 4) codes end differently
    const bool p = permutations::property_p_check(c);
    const bool p_expected = n % 4 == 0;
    o.check(p == p_expected, "property P verdict n=" + std::to_string(n));
    std::ostringstream line;
    line << "n=" << n << ": " << c.size() << " words, reverse " << (r.pass ? "PASS" : "FAIL")
         << ", property P " << (p ? "holds" : "absent") << ", " << t << " s";
    o.note(line.str());
    if (n == 8) o.check(t < kOrderEightBudget, "n=8 runtime " + std::to_string(t) + " s");
  }
  return o;
}

Outcome permutation_slow_tier() {
  Outcome o;
  for (std::size_t n : {12u, 13u}) {
    const auto t0 = std::chrono::steady_clock::now();
    const Report r = permutations::verify_reverse_stream(n);
    o.check(r.pass, "streaming verification n=" + std::to_string(n) + "\n" + describe(r));
    o.note("n=" + std::to_string(n) + ": " + (r.pass ? "PASS" : "FAIL") + " in " +
           std::to_string(seconds_since(t0)) + " s");
  }
  return o;
}

// 6 ---------------------------------------------------------------------------

Outcome bounded_separation(const fs::path& artifact) {
  Outcome o;
  std::ofstream out(artifact);
  out << "# q n separation:count ...\n";
  for (auto [q, n] : std::vector<std::pair<int, std::size_t>>{{4, 3}, {4, 5}, {6, 3}}) {
    const Code c = qary::lee_separation_bounded(q, n);
    CodeSpec spec;
    spec.metric = Metric::Lee;
    spec.require_cyclic = true;
    spec.universe = Universe::all(q, n);
    const auto mid = static_cast<std::int64_t>(ipow(q, n - 1));
    Pairing p{PairingRule::AddDiagonal, 1, {}};
    for (int d = 1; d < q; ++d) {
      p.separations.insert(mid - d);
      p.separations.insert(mid + d);
    }
    spec.pairing = p;
    const Report r = verify_code(c, spec);
    o.check(r.pass, "bounded q=" + std::to_string(q) + " n=" + std::to_string(n) + "\n" + describe(r));
    o.check(r.separation_profile && !r.separation_profile->count(mid), "separation equal to q^(n-1)");
    out << q << " " << n;
    std::ostringstream line;
    line << "q=" << q << " n=" << n << " (q^(n-1) = " << mid << "):";
    if (r.separation_profile) {
      for (auto [s, k] : *r.separation_profile) {
        out << " " << s << ":" << k;
        line << " " << s << " x" << k;
      }
    }
    out << "\n";
    o.note(line.str());
  }
  o.note("profiles written to " + artifact.string());
  return o;
}

// 7 ---------------------------------------------------------------------------

Outcome oracle_cross_checks() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Report spot = oracle::nonexistence_spot_checks();
  o.check(spot.pass, "spot checks\n" + describe(spot));
  o.check(oracle::two_coloring(oracle::torus(4, 3)).has_value(), "C4 x C4 x C4 is not bipartite");

  struct Case {
    Family f;
    FamilyParams p;
  };
  auto P = [](std::optional<int> q, std::optional<long long> n, std::optional<long long> k = {},
              std::optional<long long> m = {}) {
    FamilyParams p;
    p.q = q;
    p.n = n;
    p.k = k;
    p.m = m;
    return p;
  };
  const std::vector<Case> cases{
      {Family::BinaryComplementary, P({}, 4)}, {Family::BinaryOddMissingTwo, P({}, 5)},
      {Family::BinaryOddAll, P({}, 5)},        {Family::QaryLee, P(3, 3)},
      {Family::QaryLeeMissing, P(4, 3)},       {Family::QaryLeeBounded, P(4, 3)},
      {Family::QaryHamming, P(4, 3)},          {Family::SubsetsComplementary, P({}, 3)},
      {Family::SubsetsSmc, P({}, {}, 3, 6)},   {Family::SubsetsAdjacent, P({}, {}, {}, 6)},
      {Family::PermReverse, P({}, 5)},         {Family::PermSjt, P({}, 5)},
      {Family::MultisetCycle, P({}, 7)},
  };
  std::size_t found = 0;
  for (const auto& c : cases) {
    const std::string name(to_string(c.f));
    const CodeSpec spec = declared_spec(c.f, c.p);
    const Code& vertices = spec.universe->words();
    if (vertices.size() > kOracleMaxVertices) {
      o.check(false, name + " instance exceeds the vertex bound");
      continue;
    }
    oracle::InstanceGraph g = oracle::graph_from_words(vertices, spec.metric);
    auto index_of = [&](const Word& w) -> std::size_t {
      for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (std::equal(w.begin(), w.end(), vertices[i].begin())) return i;
      }
      return vertices.size();
    };
    if (spec.first) g.start = index_of(*spec.first);
    if (spec.last) g.end = index_of(*spec.last);
    if (spec.pairing) g.admissible = oracle::pairing_constraint(vertices, *spec.pairing, spec.require_cyclic);
    const auto mode = spec.require_cyclic ? oracle::SearchMode::Cycle : oracle::SearchMode::Path;
    const oracle::SearchResult r = oracle::hamilton_search(g, mode);
    std::string verdict;
    switch (r.status) {
      case oracle::SearchStatus::Found: {
        ++found;
        const Report v = verify_code(oracle::witness_code(vertices, r.path, spec.require_cyclic), spec);
        o.check(v.pass, name + " witness rejected by the verifier\n" + describe(v));
        verdict = v.pass ? "witness verified" : "witness REJECTED";
        break;
      }
      case oracle::SearchStatus::Exhausted:
        o.check(false, name + ": search exhausted although the construction exists");
        verdict = "exhausted";
        break;
      case oracle::SearchStatus::Unknown:
        verdict = "budget hit, no verdict";
        break;
    }
    o.note(name + " (" + std::to_string(vertices.size()) + " vertices, " + std::to_string(r.nodes) +
           " nodes): " + verdict);
  }
  o.check(found == cases.size(), std::to_string(cases.size() - found) + " families without a witness");
  const double t = seconds_since(t0);
  o.check(t < kOracleBudget, "runtime " + std::to_string(t) + " s");
  return o;
}

// 8 ---------------------------------------------------------------------------

struct Run {
  int status = -1;
  std::string out;
};

// Runs the CLI through the shell, capturing stdout and stderr together.
Run cli(const std::string& args, const std::string& env = "") {
  const std::string cmd = env + (env.empty() ? "" : " ") + "'" + std::string(GRAYCODE_CLI) + "' " + args + " 2>&1";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t got;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, got);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

Outcome cli_end_to_end(const fs::path& dir) {
  Outcome o;
  const std::vector<std::pair<std::string, std::string>> reps{
      {"binary-complementary", "--n 6"}, {"binary-odd-missing-two", "--n 7"},
      {"binary-odd-all", "--n 7"},       {"qary-lee", "--q 3 --n 3"},
      {"qary-lee-missing", "--q 4 --n 3 --anchor 000"},
      {"qary-lee-bounded", "--q 4 --n 3"}, {"qary-hamming", "--q 4 --n 3"},
      {"subsets-complementary", "--n 4"}, {"subsets-smc", "--m 7 --k 3"},
      {"subsets-adjacent", "--m 8"},       {"perm-reverse", "--n 8"},
      {"perm-sjt", "--n 5"},               {"multiset-cycle", "--n 9"},
  };
  for (const auto& [family, params] : reps) {
    const fs::path a = dir / (family + ".a.txt");
    const fs::path b = dir / (family + ".b.txt");
    const std::string gen = "generate --family " + family + " " + params;
    const Run g1 = cli(gen + " -o '" + a.string() + "'");
    const Run g2 = cli(gen + " -o '" + b.string() + "'");
    o.check(g1.status == 0 && g2.status == 0, family + " generate exit " + std::to_string(g1.status) + ": " + g1.out);
    o.check(slurp(a) == slurp(b) && !slurp(a).empty(), family + " output not byte-stable");
    const Run v = cli("verify '" + a.string() + "' --family " + family + " " + params);
    o.check(v.status == 0 && v.out.rfind("PASS", 0) == 0, family + " round trip: " + v.out);
  }
  o.note(std::to_string(reps.size()) + " families round-tripped, outputs byte-stable");

  auto expect = [&](const std::string& args, int status, const std::string& needle,
                    const std::string& env = "") {
    const Run r = cli(args, env);
    const bool ok = r.status == status && r.out.find(needle) != std::string::npos;
    o.check(ok, "`" + args + "` gave exit " + std::to_string(r.status) + ": " + r.out);
  };
  const std::string fx = kFixtures.string();
  expect("generate --family binary-complementary --n 4", 0, "0000\n");
  expect("generate --family binary-complementary --n 5", 2, "n odd: complementary binary code cannot exist");
  expect("generate --family no-such-family --n 3", 2, "unknown family");
  expect("generate --family perm-sjt --n 12", 2, "GRAYCODE_MAX_WORDS", "GRAYCODE_MAX_WORDS=1000");
  expect("generate --family qary-lee --q 3 --n 3", 0, slurp(kFixtures / "qary_lee_q3_n3.txt"));
  expect("verify '" + fx + "/binary_complementary_n4.txt' --pairing complement --separations 8", 0, "PASS");
  expect("verify '" + fx + "/qary_lee_path_q4_n3_printed.txt' --complete", 1, "duplicate word 013 at lines 5 and 11");
  expect("verify '" + fx + "/perm_reverse_n5.txt' --metric transposition --pairing reversal --separations 60", 0,
         "separations: 60 x120");
  expect("verify '" + (dir / "missing.txt").string() + "'", 3, "cannot open");
  {
    std::ofstream bad(dir / "bad.txt");
    bad << "0101\n01x1\n";
  }
  expect("verify '" + (dir / "bad.txt").string() + "'", 3, "line 2");
  expect("verify '" + fx + "/binary_complementary_n4.txt' --metric euclid", 2, "unknown --metric");
  expect("info --family perm-reverse --n 6", 0, "does not exist: n ≡ 2 (mod 4)");
  expect("info --family qary-lee --q 4 --n 3", 0, "does not exist in Lee metric; see qary-lee-missing / qary-hamming");
  expect("info --family subsets-complementary --n 3", 0, "20 words, cyclic, complement at separation 10");
  expect("info --family nope", 2, "unknown family");
  o.note("exit-code contract 0/1/2/3 exercised");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const bool slow_only = argc > 1 && std::string(argv[1]) == "--slow-only";
  std::cout.setf(std::ios::unitbuf);

  const fs::path dir = fs::temp_directory_path() / ("graycode_acceptance_" + std::to_string(getpid()));
  fs::create_directories(dir);

  struct Criterion {
    std::string name;
    std::function<Outcome()> run;
  };
  std::vector<Criterion> criteria;
  if (slow_only) {
    criteria.push_back({"5s permutation slow tier (n = 12, 13, streaming)", permutation_slow_tier});
  } else {
    criteria = {
        {"1 fixture verification", fixture_verification},
        {"2 printed-table typo detection", typo_detection},
        {"3 byte-exact golden outputs", golden_outputs},
        {"4 parameter sweeps", parameter_sweeps},
        {"5 permutation suite", permutation_suite},
        {"6 bounded separation", [] { return bounded_separation("bounded_separation_profiles.txt"); }},
        {"7 oracle cross-checks", oracle_cross_checks},
        {"8 end-to-end CLI", [&] { return cli_end_to_end(dir); }},
    };
  }

  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.check(false, std::string("exception: ") + e.what());
    }
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.2f s", seconds_since(t0));
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << c.name << " (" << timing << ")\n";
    for (const auto& n : o.notes) std::cout << "       " << n << "\n";
    failed += !o.pass;
  }
  fs::remove_all(dir);
  std::cout << (failed ? std::to_string(failed) + " criteria failed" : "all criteria passed") << "\n";
  return failed ? 1 : 0;
}
