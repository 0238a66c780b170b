// graycode: generate, verify and query Gray code families from the shell.
//
// Exit codes: 0 pass, 1 property violation, 2 invalid parameters, 3 I/O or parse error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "graycode/error.hpp"
#include "graycode/family.hpp"
#include "graycode/text_format.hpp"
#include "graycode/verify.hpp"

namespace {

using namespace graycode;

constexpr int kPass = 0;
constexpr int kViolation = 1;
constexpr int kBadParams = 2;
constexpr int kIoError = 3;

struct IoFailure : Error {
  using Error::Error;
};

struct FamilyArgs {
  std::string family;
  FamilyParams params;
};

void add_family_options(CLI::App* cmd, FamilyArgs& a, bool required) {
  auto* f = cmd->add_option("--family", a.family, "family name (see `info --list`)");
  if (required) f->required();
  cmd->add_option("--q", a.params.q, "alphabet size");
  cmd->add_option("--n", a.params.n, "word length, half ground set or permutation order");
  cmd->add_option("--k", a.params.k, "subset size");
  cmd->add_option("--m", a.params.m, "ground set size");
  cmd->add_option("--anchor", a.params.anchor, "anchor of the missing diagonal (qary-lee-missing)");
}

Family family_or_throw(const std::string& name) {
  auto f = parse_family(name);
  if (!f) throw InvalidArgument("unknown family '" + name + "'");
  return *f;
}

std::uint64_t max_words() {
  const char* env = std::getenv("GRAYCODE_MAX_WORDS");
  if (!env || !*env) return 100'000'000;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw InvalidArgument("GRAYCODE_MAX_WORDS must be a non-negative integer");
  return v;
}

// "8", "15,17", "13-15,17-19"
std::set<std::int64_t> parse_separations(const std::string& text) {
  std::set<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      std::size_t used = 0;
      const long long lo = std::stoll(item, &used);
      long long hi = lo;
      if (used < item.size()) {
        if (item[used] != '-') throw std::invalid_argument(item);
        std::size_t used_hi = 0;
        hi = std::stoll(item.substr(used + 1), &used_hi);
        if (used + 1 + used_hi != item.size()) throw std::invalid_argument(item);
      }
      if (hi < lo || hi - lo > 10'000'000) throw std::invalid_argument(item);
      for (long long v = lo; v <= hi; ++v) out.insert(v);
    } catch (const std::logic_error&) {
      throw InvalidArgument("bad --separations entry '" + item + "'");
    }
  }
  if (out.empty()) throw InvalidArgument("--separations is empty");
  return out;
}

std::vector<Word> parse_word_list(const std::string& text, int radix) {
  std::vector<Word> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(Word::parse(item, radix));
  }
  return out;
}

// all | weight:K | permutations | arrangements:DIGITS | all-except:W1,W2,...
Universe parse_universe(const std::string& text, const Code& c) {
  const auto colon = text.find(':');
  const std::string kind = text.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
  if (kind == "all") return Universe::all(c.radix(), c.length());
  if (kind == "weight") {
    if (c.radix() != 2) throw InvalidArgument("weight universe needs binary words");
    return Universe::fixed_weight(c.length(), std::stoul(arg));
  }
  if (kind == "permutations") return Universe::permutations(c.length());
  if (kind == "arrangements") {
    const Word w = Word::parse(arg, c.radix());
    return Universe::arrangements(c.radix(), {w.begin(), w.end()});
  }
  if (kind == "all-except") {
    return Universe::all_except(c.radix(), c.length(), parse_word_list(arg, c.radix()));
  }
  throw InvalidArgument("unknown --universe '" + text + "'");
}

std::string lines_text(const Violation& v, const std::vector<std::size_t>& lines) {
  auto line = [&](std::size_t i) { return std::to_string(i < lines.size() ? lines[i] : i + 1); };
  if (!v.index) return "";
  if (!v.other_index) return " at line " + line(*v.index);
  return " at lines " + line(*v.index) + " and " + line(*v.other_index);
}

void print_violations(std::ostream& out, const Report& r, const std::vector<std::size_t>& lines,
                      std::size_t limit) {
  std::size_t shown = 0;
  for (const auto& v : r.violations) {
    if (shown == limit) break;
    ++shown;
    if (v.property == "duplicate") {
      out << "duplicate " << v.detail << lines_text(v, lines) << "\n";
    } else {
      out << v.property << lines_text(v, lines) << ": " << v.detail << "\n";
    }
  }
  if (r.violation_count() > shown) out << "... " << r.violation_count() - shown << " more\n";
}

struct VerifyArgs {
  std::string file = "-";
  std::string metric;
  std::optional<int> radix;
  std::optional<std::size_t> length;
  bool cyclic = false;
  bool complete = false;
  std::string universe;
  std::string pairing;
  int shift = 1;
  std::string separations;
  std::string first;
  std::string last;
  std::size_t show = 16;
  FamilyArgs fam;
};

text::ParsedCode read_input(const std::string& file, std::optional<int> radix) {
  if (file == "-") return text::read_code(std::cin, radix);
  std::ifstream in(file);
  if (!in) throw IoFailure("cannot open '" + file + "'");
  return text::read_code(in, radix);
}

int run_verify(const VerifyArgs& a) {
  text::ParsedCode parsed = read_input(a.file, a.radix);
  const Code& c = parsed.code;
  if (a.length && *a.length != c.length()) {
    std::cout << "FAIL\nlength: words have " << c.length() << " entries, expected " << *a.length
              << "\n";
    return kViolation;
  }

  CodeSpec spec;
  if (!a.fam.family.empty()) spec = declared_spec(family_or_throw(a.fam.family), a.fam.params);
  if (!a.metric.empty()) {
    auto m = parse_metric(a.metric);
    if (!m) throw InvalidArgument("unknown --metric '" + a.metric + "'");
    spec.metric = *m;
  }
  if (a.cyclic) spec.require_cyclic = true;
  if (a.complete) spec.universe = Universe::all(c.radix(), c.length());
  if (!a.universe.empty()) spec.universe = parse_universe(a.universe, c);
  if (!a.pairing.empty()) {
    auto rule = parse_pairing(a.pairing);
    if (!rule) throw InvalidArgument("unknown --pairing '" + a.pairing + "'");
    if (a.separations.empty()) throw InvalidArgument("--pairing needs --separations");
    spec.pairing = Pairing{*rule, a.shift, parse_separations(a.separations)};
  } else if (!a.separations.empty()) {
    if (!spec.pairing) throw InvalidArgument("--separations needs --pairing");
    spec.pairing->separations = parse_separations(a.separations);
  }
  if (!a.first.empty()) spec.first = Word::parse(a.first, c.radix());
  if (!a.last.empty()) spec.last = Word::parse(a.last, c.radix());

  const Report r = verify_code(c, spec);
  std::cout << (r.pass ? "PASS" : "FAIL") << " (" << c.size() << " words)\n";
  print_violations(std::cout, r, parsed.lines, a.show);
  if (r.separation_profile) std::cout << "separations: " << describe(*r.separation_profile) << "\n";
  return r.pass ? kPass : kViolation;
}

struct GenerateArgs {
  FamilyArgs fam;
  std::string format;
  std::string output;
};

int run_generate(const GenerateArgs& a) {
  const Family f = family_or_throw(a.fam.family);
  const FamilyInfo info = family_info(f, a.fam.params);
  if (!info.exists) throw NonexistenceError(info.condition);
  const std::uint64_t cap = max_words();
  if (info.words > cap) {
    throw InvalidArgument(std::to_string(info.words) + " words exceed GRAYCODE_MAX_WORDS = " +
                          std::to_string(cap));
  }
  const Code c = generate(f, a.fam.params);
  text::Format fmt = prefers_spaced_output(f) || c.radix() > 10 ? text::Format::Spaced
                                                                : text::Format::Digits;
  if (a.format == "digits") fmt = text::Format::Digits;
  if (a.format == "spaced") fmt = text::Format::Spaced;

  std::ostringstream buf;
  text::write_code(buf, c, fmt);
  if (a.output.empty() || a.output == "-") {
    std::cout << buf.str() << std::flush;
    if (!std::cout) throw IoFailure("write to stdout failed");
  } else {
    std::ofstream out(a.output, std::ios::binary);
    out << buf.str();
    out.close();
    if (!out) throw IoFailure("cannot write '" + a.output + "'");
  }
  return kPass;
}

int run_info(const FamilyArgs& a, bool list) {
  if (list) {
    for (Family f : all_families()) std::cout << to_string(f) << "\n";
    return kPass;
  }
  if (a.family.empty()) throw InvalidArgument("--family is required");
  const FamilyInfo info = family_info(family_or_throw(a.family), a.params);
  std::cout << info.summary() << "\n";
  if (info.exists) {
    std::cout << "exists when: " << info.condition << "\n";
    std::cout << "construction: " << info.construction << "\n";
  }
  return kPass;
}

}  // namespace

int main(int argc, char** argv) {
  std::ios::sync_with_stdio(false);
  CLI::App app{"Generate and verify Gray codes with prescribed pairing separations"};
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* g = app.add_subcommand("generate", "write a family instance, one word per line");
  add_family_options(g, gen.fam, true);
  g->add_option("--format", gen.format, "digits or spaced")
      ->check(CLI::IsMember({"digits", "spaced"}));
  g->add_option("-o,--output", gen.output, "output file (default stdout)");

  VerifyArgs ver;
  auto* v = app.add_subcommand("verify", "check a word list against a property bundle");
  v->add_option("file", ver.file, "input file, '-' for stdin");
  v->add_option("--metric", ver.metric, "hamming, lee, transposition, smc or csmc");
  v->add_option("--radix", ver.radix, "alphabet size (default: max digit + 1)");
  v->add_option("--length", ver.length, "expected word length");
  v->add_flag("--cyclic", ver.cyclic, "require the last word to step back to the first");
  v->add_flag("--complete", ver.complete, "require every word of Z_q^n exactly once");
  v->add_option("--universe", ver.universe,
                "all, weight:K, permutations, arrangements:DIGITS or all-except:W1,W2");
  v->add_option("--pairing", ver.pairing, "complement, diagonal or reversal");
  v->add_option("--shift", ver.shift, "diagonal multiple for --pairing diagonal");
  v->add_option("--separations", ver.separations, "allowed separations, e.g. 8 or 15,17 or 13-19");
  v->add_option("--first", ver.first, "required first word");
  v->add_option("--last", ver.last, "required last word");
  v->add_option("--show", ver.show, "violations to print");
  add_family_options(v, ver.fam, false);

  FamilyArgs inf;
  bool list = false;
  auto* i = app.add_subcommand("info", "existence condition and shape of a family instance");
  add_family_options(i, inf, false);
  i->add_flag("--list", list, "list family names");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kBadParams;
  }

  try {
    if (*g) return run_generate(gen);
    if (*v) return run_verify(ver);
    return run_info(inf, list);
  } catch (const text::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kIoError;
  } catch (const IoFailure& e) {
    std::cerr << "i/o error: " << e.what() << "\n";
    return kIoError;
  } catch (const NonexistenceError& e) {
    std::cerr << "does not exist: " << e.what() << "\n";
    return kBadParams;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParams;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kBadParams;
  }
}
