#include "nomcode/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <functional>
#include <ostream>
#include <limits>
#include <stdexcept>

#include "nomcode/avoidance.hpp"
#include "nomcode/codec.hpp"
#include "nomcode/errors.hpp"
#include "nomcode/forest.hpp"
#include "nomcode/nondecreasing.hpp"
#include "nomcode/permutation.hpp"
#include "nomcode/subexceedant.hpp"
#include "nomcode/verify.hpp"

namespace nomcode::cli {

namespace {

using json = nlohmann::json;

constexpr int kPermutationCommandBound = 10;
constexpr int kCodeCommandBound = 14;

struct Options {
  bool json = false;
  bool csv = false;
  int unsafe_max_n = 0;  // 0: use the default bound of the command

  int bound(int fallback) const {
    return unsafe_max_n > 0 ? unsafe_max_n : fallback;
  }
};

std::string joined(const std::vector<std::string>& tokens) {
  std::string s;
  for (const auto& t : tokens) {
    if (!s.empty()) s += ' ';
    s += t;
  }
  return s;
}

// A leading '(' means cycle notation.
Permutation read_permutation(const std::vector<std::string>& tokens) {
  const std::string text = joined(tokens);
  const auto first = text.find_first_not_of(" \t");
  if (first != std::string::npos && text[first] == '(')
    return from_cycles(parse_cycles(text));
  return parse_permutation(text);
}

std::string count_text(const Count& c) { return c.str(); }

json count_json(const Count& c) {
  if (c <= Count(std::numeric_limits<std::int64_t>::max()))
    return c.convert_to<std::int64_t>();
  return c.str();
}

json pairs_json(const AxPairs& p) {
  json arr = json::array();
  for (auto [i, j] : p.pairs) arr.push_back({i, j});
  return arr;
}

// ------------------------------------------------------------------ verbs

int cmd_encode(const std::vector<std::string>& input, bool show_steps,
               const Options& opt, std::ostream& out) {
  const Permutation p = read_permutation(input);
  const auto f = encode_nom(p);
  if (opt.json) {
    json j{{"permutation", p.word()}, {"code", f.word()}};
    if (show_steps) {
      j["steps"] = json::array();
      for (const auto& s : selection_sort_trace(p))
        j["steps"].push_back(
            {{"i", s.i}, {"word", s.word}, {"code_value", s.code_value}});
    }
    out << j.dump() << '\n';
    return kOk;
  }
  if (show_steps) {
    out << "i\tpermutation\tf_i\n";
    for (const auto& s : selection_sort_trace(p))
      out << s.i << '\t' << to_string(Permutation(s.word)) << '\t'
          << s.code_value << '\n';
  }
  out << to_string(f) << '\n';
  return kOk;
}

int cmd_decode(const std::vector<std::string>& input, const std::string& method,
               bool as_cycles, const Options& opt, std::ostream& out) {
  const auto f = parse_code(joined(input));
  Permutation p;
  if (method == "transpositions")
    p = decode_transpositions(f);
  else if (method == "insertion")
    p = decode_insertion(f);
  else
    p = decode_cycle_insertion(f);
  if (opt.json) {
    json j{{"code", f.word()}, {"permutation", p.word()}};
    if (as_cycles) j["cycles"] = cycles(p).cycles;
    out << j.dump() << '\n';
    return kOk;
  }
  out << (as_cycles ? to_string(cycles(p)) : to_string(p)) << '\n';
  return kOk;
}

int cmd_enumerate(const std::string& kind, int n, const std::string& pattern,
                  bool count_only, const Options& opt, std::ostream& out) {
  Count total = 0;
  auto emit = [&](const std::string& text, json item) {
    ++total;
    if (count_only) return;
    if (opt.json)
      out << item.dump() << '\n';
    else
      out << text << '\n';
  };
  auto emit_code = [&](const SubexceedantFunction& f) {
    emit(to_string(f), json{{"code", f.word()}});
  };
  auto emit_perm = [&](const Permutation& p) {
    emit(to_string(p), json{{"permutation", p.word()}});
  };

  if (kind == "sef") {
    const int bound = opt.bound(kPermutationCommandBound);
    check_bound("enumerate sef", n, bound);
    for_each_sef(n, emit_code, bound);
  } else if (kind == "ndsef") {
    for_each_nondecreasing_sef(n, emit_code, opt.bound(kCodeCommandBound));
  } else if (kind == "ndperm") {
    for_each_nondecreasing_sef(
        n, [&](const SubexceedantFunction& f) { emit_perm(phi(f)); },
        opt.bound(kCodeCommandBound));
  } else if (kind == "avoiders") {
    if (pattern.empty())
      throw std::invalid_argument("enumerate avoiders: --pattern is required");
    for (const auto& p :
         avoiders(n, Pattern3::parse(pattern), opt.bound(kPermutationCommandBound)))
      emit_perm(p);
  } else if (kind == "partitions") {
    for (const auto& lambda :
         enumerate_partitions(n, opt.bound(kCodeCommandBound)))
      emit(to_string(lambda), json{{"partition", lambda.parts()}});
  } else if (kind == "axpairs") {
    for (const auto& pr : enumerate_ax_pair_sets(n, opt.bound(kCodeCommandBound)))
      emit(to_string(pr), json{{"pairs", pairs_json(pr)}});
  } else if (kind == "X") {
    for (const auto& f : enumerate_X(n, opt.bound(kCodeCommandBound))) emit_code(f);
  } else if (kind == "Y") {
    for (const auto& f : enumerate_Y(n, opt.bound(kCodeCommandBound))) emit_code(f);
  } else if (kind == "V") {
    for (const auto& f : enumerate_V(n, opt.bound(kCodeCommandBound))) emit_code(f);
  } else {
    throw std::invalid_argument("enumerate: unknown kind '" + kind + "'");
  }

  if (count_only) {
    if (opt.json)
      out << json{{"kind", kind}, {"n", n}, {"count", count_json(total)}}.dump()
          << '\n';
    else
      out << count_text(total) << '\n';
  }
  return kOk;
}

int cmd_table(const std::string& pattern, int max_n, const Options& opt,
              std::ostream& out) {
  check_bound("table", max_n, opt.bound(kPermutationCommandBound));
  std::vector<Pattern3> patterns;
  if (pattern.empty() || pattern == "all")
    patterns.assign(all_patterns3().begin(), all_patterns3().end());
  else
    patterns.push_back(Pattern3::parse(pattern));
  if (opt.csv) out << "n,pattern,count\n";
  for (const auto& pat : patterns)
    for (int n = 1; n <= max_n; ++n) {
      const Count c = count_avoiders(n, pat, max_n);
      if (opt.json)
        out << json{{"n", n}, {"pattern", pat.to_string()}, {"count", count_json(c)}}
                   .dump()
            << '\n';
      else if (opt.csv)
        out << n << ',' << pat.to_string() << ',' << c << '\n';
      else
        out << n << ' ' << pat.to_string() << ' ' << c << '\n';
    }
  return kOk;
}

int cmd_verify(const std::string& suite, int max_n, const Options& opt,
               std::ostream& out) {
  if (!is_suite(suite))
    throw std::invalid_argument("verify: unknown suite '" + suite + "'");
  check_bound("verify", max_n, opt.bound(kPermutationCommandBound));
  const auto results = run_suite(suite, max_n);
  int failed = 0;
  for (const auto& r : results) {
    if (!r.passed) ++failed;
    if (opt.json) {
      json j{{"suite", r.suite}, {"check", r.name}, {"passed", r.passed}};
      if (!r.passed) j["detail"] = r.detail;
      out << j.dump() << '\n';
    } else {
      out << (r.passed ? "[PASS] " : "[FAIL] ") << r.suite << ": " << r.name;
      if (!r.passed) out << " (" << r.detail << ")";
      out << '\n';
    }
  }
  if (!opt.json)
    out << results.size() - failed << "/" << results.size()
        << " checks passed, max n = " << max_n << '\n';
  return failed ? kVerificationFailed : kOk;
}

void ordered_text(const TreeNode& t, std::string& s) {
  s += std::to_string(t.label);
  if (t.children.empty()) return;
  s += '(';
  for (std::size_t k = 0; k < t.children.size(); ++k) {
    if (k) s += ',';
    ordered_text(t.children[k], s);
  }
  s += ')';
}

int cmd_tree(const std::vector<std::string>& input, const std::string& format,
             const Options& opt, std::ostream& out) {
  const Permutation p = read_permutation(input);
  const auto forest = forest_from_permutation(p);
  if (opt.json) {
    json trees = json::array();
    for (const auto& t : postorder_by_tree(forest)) trees.push_back(t);
    out << json{{"permutation", p.word()}, {"postorder", trees},
                {"dot", to_dot(forest)}}
               .dump()
        << '\n';
    return kOk;
  }
  if (format == "dot") {
    out << to_dot(forest);
    return kOk;
  }
  for (const auto& t : forest.trees) {
    std::string s;
    ordered_text(t, s);
    out << s << '\n';
  }
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Codes, enumerations and checks for the nom permutation code",
               "nomcode"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_flag("--json", opt.json, "One JSON object per output line");
  app.add_flag("--csv", opt.csv, "CSV output for tables");
  app.add_option("--unsafe-max-n", opt.unsafe_max_n,
                 "Raise the size bound of the command")
      ->check(CLI::PositiveNumber);

  std::function<int()> action;

  std::vector<std::string> input;
  bool show_steps = false;
  auto* encode = app.add_subcommand("encode", "Nom code of a permutation");
  encode->add_option("permutation", input, "One-line word or cycles")
      ->required();
  encode->add_flag("--show-steps", show_steps, "Print the selection-sort table");
  encode->callback(
      [&] { action = [&] { return cmd_encode(input, show_steps, opt, out); }; });

  std::string method = "insertion";
  bool as_cycles = false;
  auto* decode = app.add_subcommand("decode", "Permutation of a code");
  decode->add_option("code", input, "Subexceedant code word")->required();
  decode->add_option("--method", method, "Decoding algorithm")
      ->check(CLI::IsMember({"transpositions", "insertion", "cycles"}));
  decode->add_flag("--as-cycles", as_cycles, "Print cycle notation");
  decode->callback([&] {
    action = [&] { return cmd_decode(input, method, as_cycles, opt, out); };
  });

  std::string kind, pattern;
  int n = 0;
  bool count_only = false;
  auto* enumerate = app.add_subcommand("enumerate", "List a family of objects");
  enumerate
      ->add_option("kind", kind,
                   "sef, ndsef, ndperm, avoiders, partitions, axpairs, X, Y, V")
      ->required();
  enumerate->add_option("n", n, "Size")->required()->check(CLI::NonNegativeNumber);
  enumerate->add_option("--pattern", pattern, "Length-3 pattern for avoiders");
  enumerate->add_flag("--count", count_only, "Print only the number of items");
  enumerate->callback([&] {
    action = [&] {
      return cmd_enumerate(kind, n, pattern, count_only, opt, out);
    };
  });

  std::string suite;
  int max_n = 6;
  auto* verify = app.add_subcommand("verify", "Run exhaustive invariant checks");
  verify->add_option("suite", suite, "codec, trees, catalan, flip, patterns, all")
      ->required();
  verify->add_option("--max-n", max_n, "Largest size checked")
      ->check(CLI::PositiveNumber);
  verify->callback(
      [&] { action = [&] { return cmd_verify(suite, max_n, opt, out); }; });

  std::string format = "dot";
  auto* tree = app.add_subcommand("tree", "Increasing forest of a permutation");
  tree->add_option("permutation", input, "One-line word or cycles")->required();
  tree->add_option("--format", format, "dot or text")
      ->check(CLI::IsMember({"dot", "text"}));
  tree->callback(
      [&] { action = [&] { return cmd_tree(input, format, opt, out); }; });

  std::string table_pattern;
  int table_max_n = 10;
  auto* table = app.add_subcommand("table", "Avoider counts by size and pattern");
  table->add_option("--pattern", table_pattern, "One pattern, or all");
  table->add_option("--max-n", table_max_n, "Largest size")
      ->check(CLI::PositiveNumber);
  table->callback([&] {
    action = [&] { return cmd_table(table_pattern, table_max_n, opt, out); };
  });

  for (std::size_t k = 0; k < args.size(); ++k) {
    if (args[k] == "--unsafe-max-n") {
      ++k;
      continue;
    }
    if (args[k].empty() || args[k][0] == '-') continue;
    if (!app.get_subcommand_no_throw(args[k])) {
      err << "error: unknown command '" << args[k] << "'\n\n" << app.help();
      return kInvalidInput;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kInvalidInput;
  }

  try {
    return action();
  } catch (const BoundExceeded& e) {
    err << "refused: " << e.what() << " (pass --unsafe-max-n to override)\n";
    return kBoundRefused;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kInvalidInput;
  }
}

}  // namespace nomcode::cli
