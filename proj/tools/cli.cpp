#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <filesystem>
#include <ostream>

#include "curvespace/classify.hpp"
#include "curvespace/error.hpp"
#include "curvespace/grammar.hpp"
#include "curvespace/oracle.hpp"

namespace curvespace::cli {

namespace {

struct Options {
  std::string surface;
  std::string format = "text";
  std::vector<std::string> words;
  std::vector<std::string> curves;
  std::vector<std::string> positional;
  int n = 0;
  oracle::SearchBound bound;
};

struct Input {
  std::string label;
  STWord xi;
};

bool structured(const Options& o) { return o.format == "structured"; }

// --word and --curve first, then positionals: a path naming an existing file
// is a curve, anything else a word.
std::vector<Input> gather_inputs(const Options& o, const SurfaceSpec& s, bool curves_only) {
  std::vector<Input> out;
  auto add_word = [&](const std::string& w) {
    if (curves_only) throw InvalidInput("expected a curve file, got '" + w + "'");
    out.push_back({w, parse_stword(s, w)});
  };
  auto add_curve = [&](const std::string& path) {
    out.push_back({path, lift(read_curve_file(path), s)});
  };
  for (const std::string& w : o.words) add_word(w);
  for (const std::string& c : o.curves) add_curve(c);
  for (const std::string& p : o.positional) {
    std::error_code ec;
    if (std::filesystem::is_regular_file(p, ec))
      add_curve(p);
    else
      add_word(p);
  }
  return out;
}

void expect_arity(const std::vector<Input>& in, std::size_t n, const std::string& cmd) {
  if (in.size() != n)
    throw InvalidInput(cmd + " takes " + std::to_string(n) + " input" + (n == 1 ? "" : "s") +
                       ", got " + std::to_string(in.size()));
}

void print_presentation(std::ostream& out, const Options& o, const std::string& key,
                        const Presentation& p) {
  std::vector<std::string> names;
  for (const Generator& g : p.generators) names.push_back(g.name);
  std::vector<std::string> rels;
  for (const LetterString& r : p.relators) rels.push_back(format_letters(p, r));
  const oracle::Abelianization ab(p);
  if (structured(o)) {
    out << key << ".generators=";
    for (std::size_t i = 0; i < names.size(); ++i) out << (i ? " " : "") << names[i];
    out << "\n";
    for (std::size_t i = 0; i < rels.size(); ++i)
      out << key << ".relator." << i + 1 << "=" << rels[i] << "\n";
    out << key << ".abelianization=" << ab.describe() << "\n";
    return;
  }
  out << key << ": <";
  for (std::size_t i = 0; i < names.size(); ++i) out << (i ? ", " : "") << names[i];
  out << " | ";
  for (std::size_t i = 0; i < rels.size(); ++i) out << (i ? ", " : "") << rels[i];
  out << ">\n  abelianization: " << ab.describe() << "\n";
}

int cmd_group(const Options& o, const SurfaceSpec& s, std::ostream& out) {
  if (!structured(o)) out << "surface: " << format_surface(s) << " (" << to_string(regime(s)) << ")\n";
  print_presentation(out, o, "pi1", presentation(s));
  print_presentation(out, o, "st", st_presentation(s));
  return kOk;
}

void print_report(std::ostream& out, const Options& o, const std::string& label,
                  const ClassificationReport& r) {
  const GroupDescription& g = r.group;
  if (structured(o)) {
    out << "case=" << r.case_label << "\n";
    out << "kind=" << to_string(g.kind) << "\n";
    for (std::size_t i = 0; i < g.witnesses.size(); ++i)
      out << "witness." << i + 1 << "=" << format_stword(g.witnesses[i]) << "\n";
    return;
  }
  out << "surface: " << format_surface(r.surface) << "\n";
  out << "input: " << label << "\n";
  out << "lift: " << format_stword(r.xi) << "\n";
  if (r.decomposition)
    out << "decomposition: root " << format_stword(r.decomposition->root_lift) << ", k "
        << r.decomposition->k << ", l " << r.decomposition->l << "\n";
  out << "case: " << r.case_label << "\n";
  out << "pi1: " << g.name() << " [" << to_string(g.kind) << "]\n";
  for (std::size_t i = 0; i < g.witnesses.size(); ++i)
    out << "  witness " << i + 1 << ": " << format_stword(g.witnesses[i]) << "\n";
}

int cmd_classify(const Options& o, const SurfaceSpec& s, std::ostream& out) {
  const auto in = gather_inputs(o, s, false);
  expect_arity(in, 1, "classify");
  print_report(out, o, in[0].label, classify_pi1(s, in[0].xi));
  return kOk;
}

int cmd_pin(const Options& o, const SurfaceSpec& s, std::ostream& out) {
  const GroupDescription g = classify_pin(s, o.n);
  if (structured(o))
    out << "kind=" << to_string(g.kind) << "\ngroup=" << g.name() << "\n";
  else
    out << "pi" << o.n << ": " << g.name() << "\n";
  return kOk;
}

int cmd_lift(const Options& o, const SurfaceSpec& s, std::ostream& out) {
  const auto in = gather_inputs(o, s, true);
  expect_arity(in, 1, "lift");
  out << (structured(o) ? "lift=" : "lift: ") << format_stword(in[0].xi) << "\n";
  return kOk;
}

int cmd_decompose(const Options& o, const SurfaceSpec& s, std::ostream& out) {
  const auto in = gather_inputs(o, s, false);
  expect_arity(in, 1, "decompose");
  const LiftDecomposition d = decompose(in[0].xi);
  const std::string root = format_stword(d.root_lift);
  if (structured(o))
    out << "root=" << root << "\nk=" << d.k << "\nl=" << d.l << "\n";
  else
    out << "lift = (" << root << ")^" << d.k << " f^" << d.l << "\n";
  return kOk;
}

int cmd_reghom(const Options& o, const SurfaceSpec& s, std::ostream& out) {
  const auto in = gather_inputs(o, s, false);
  expect_arity(in, 2, "reghom");
  const Verdict v = regular_homotopy_equivalent(s, in[0].xi, in[1].xi, o.bound.max_word_length);
  if (structured(o)) {
    out << "lift.1=" << format_stword(in[0].xi) << "\nlift.2=" << format_stword(in[1].xi)
        << "\nverdict=" << to_string(v) << "\n";
  } else {
    out << in[0].label << " -> " << format_stword(in[0].xi) << "\n"
        << in[1].label << " -> " << format_stword(in[1].xi) << "\n";
    switch (v) {
      case Verdict::Yes: out << "regularly homotopic\n"; break;
      case Verdict::No: out << "not regularly homotopic\n"; break;
      case Verdict::Undecided: out << "undecided within the search bound\n"; break;
    }
  }
  if (v == Verdict::No) return kNegative;
  return v == Verdict::Undecided ? kUndecided : kOk;
}

int cmd_verify(const Options& o, const SurfaceSpec& s, std::ostream& out) {
  const auto in = gather_inputs(o, s, false);
  expect_arity(in, 1, "verify");
  const ClassificationReport rep = classify_pi1(s, in[0].xi);
  const oracle::VerificationResult v = oracle::verify_classification(s, in[0].xi, o.bound);
  if (structured(o)) {
    out << "case=" << rep.case_label << "\nkind=" << to_string(rep.group.kind)
        << "\npassed=" << (v.passed ? "true" : "false")
        << "\ncentralizer_size=" << v.centralizer_size
        << "\nproducts_checked=" << v.products_checked << "\n";
    if (!v.passed) out << "detail=" << v.detail << "\n";
    if (v.counterexample) out << "counterexample=" << format_stword(*v.counterexample) << "\n";
  } else {
    out << rep.case_label << " / " << to_string(rep.group.kind) << ": "
        << (v.passed ? "verified" : "FAILED") << " (bounded centralizer " << v.centralizer_size
        << " elements, " << v.products_checked << " witness products)\n";
    if (!v.passed) out << "  " << v.detail << "\n";
    if (v.counterexample) out << "  counterexample: " << format_stword(*v.counterexample) << "\n";
  }
  return v.passed ? kOk : kNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homotopy groups of spaces of immersed curves on surfaces"};
  app.require_subcommand(1);
  Options o;

  using Handler = int (*)(const Options&, const SurfaceSpec&, std::ostream&);
  std::vector<std::pair<CLI::App*, Handler>> commands;
  auto add = [&](const char* name, const char* help, Handler h) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--surface", o.surface, "orientable|nonorientable:<genus>:<punctures>")
        ->required();
    sub->add_option("--format", o.format, "text or structured")
        ->check(CLI::IsMember({"text", "structured"}));
    commands.push_back({sub, h});
    return sub;
  };
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--word", o.words, "loop in the tangent bundle, e.g. \"a1 B1 f^2\"");
    sub->add_option("--curve", o.curves, "curve file");
    sub->add_option("inputs", o.positional, "words or curve files");
  };
  auto add_bounds = [&](CLI::App* sub) {
    sub->add_option("--bound-length", o.bound.max_word_length, "base word length bound")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--bound-fiber", o.bound.max_fiber, "fiber exponent bound")
        ->check(CLI::NonNegativeNumber);
    sub->add_option("--bound-depth", o.bound.max_depth, "relator insertion depth")
        ->check(CLI::NonNegativeNumber);
  };

  add("group", "print the surface group and tangent bundle group presentations", cmd_group);
  add_inputs(add("classify", "classify the fundamental group at a curve", cmd_classify));
  add("pin", "higher homotopy group", cmd_pin)->add_option("--n", o.n, "degree >= 2")->required();
  add_inputs(add("lift", "lift a curve file to the tangent bundle", cmd_lift));
  add_inputs(add("decompose", "write a lift as root^k f^l", cmd_decompose));
  CLI::App* reghom = add("reghom", "decide regular homotopy of two curves", cmd_reghom);
  add_inputs(reghom);
  add_bounds(reghom);
  CLI::App* verify = add("verify", "check a classification against brute force", cmd_verify);
  add_inputs(verify);
  add_bounds(verify);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInvalid;
  }

  try {
    const SurfaceSpec s = parse_surface(o.surface);
    for (const auto& [sub, handler] : commands)
      if (sub->parsed()) return handler(o, s, out);
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const AmbientMismatch& e) {
    err << "error: " << e.what() << "\n";
    return kInvalid;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
  return kInvalid;
}

}  // namespace curvespace::cli
